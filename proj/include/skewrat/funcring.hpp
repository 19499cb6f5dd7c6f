#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "action.hpp"
#include "error.hpp"
#include "field.hpp"
#include "skewpoly.hpp"

namespace skewrat {

/// A subset X of a finite K closed under every conjugation, with its action table.
template <FiniteSkewField F>
class FiniteInvariantSet {
   public:
    using Element = typename F::Element;
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
    static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 26;

    FiniteInvariantSet(FieldRef<F> field, std::vector<Element> elements) : field_(std::move(field)) {
        const std::uint64_t q = field_->order();
        std::sort(elements.begin(), elements.end(),
                  [&](const Element& x, const Element& y) { return field_->canonical_less(x, y); });
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        if (elements.empty()) throw Error(ErrorKind::DomainMismatch, "an invariant set must be nonempty");
        if (elements.size() * q > kTableLimit) throw Error(ErrorKind::Unsupported, "invariant set too large to tabulate");
        elements_ = std::move(elements);
        position_.assign(q, npos);
        for (std::size_t i = 0; i < elements_.size(); ++i) position_[field_->index_of(elements_[i])] = i;
        action_.assign(elements_.size() * q, npos);
        for (std::size_t i = 0; i < elements_.size(); ++i)
            for (std::uint64_t idx = 0; idx < q; ++idx) {
                const auto b = field_->element_at(idx);
                if (is_zero(b)) continue;
                const auto image = position_[field_->index_of(conjugate(*field_, elements_[i], b))];
                if (image == npos)
                    throw Error(ErrorKind::DomainMismatch,
                                "set is not invariant: conjugate of " + field_->format(elements_[i]) + " leaves it");
                action_[i * q + idx] = image;
            }
    }

    static std::shared_ptr<const FiniteInvariantSet> orbit_of(const FieldRef<F>& field, const Element& a) {
        return std::make_shared<const FiniteInvariantSet>(field, orbit(*field, a));
    }
    static std::shared_ptr<const FiniteInvariantSet> whole(const FieldRef<F>& field) {
        return std::make_shared<const FiniteInvariantSet>(field, field->elements());
    }

    const FieldRef<F>& field() const noexcept { return field_; }
    const std::vector<Element>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const Element& at(std::size_t pos) const { return elements_[pos]; }

    std::size_t position(const Element& x) const {
        const auto idx = field_->index_of(x);
        return idx < position_.size() ? position_[idx] : npos;
    }
    bool contains(const Element& x) const { return position(x) != npos; }

    /// Position of ^b x; b must be nonzero.
    std::size_t act(std::size_t pos, const Element& b) const {
        if (is_zero(b)) throw Error(ErrorKind::ZeroConjugator, "conjugation by 0");
        return action_[pos * field_->order() + field_->index_of(b)];
    }

    /// Orbit decomposition as lists of positions, ordered by least member.
    std::vector<std::vector<std::size_t>> orbits() const {
        std::vector<std::vector<std::size_t>> out;
        std::vector<char> seen(size(), 0);
        for (std::size_t i = 0; i < size(); ++i) {
            if (seen[i]) continue;
            std::vector<std::size_t> part;
            for (std::uint64_t idx = 0; idx < field_->order(); ++idx) {
                const auto b = field_->element_at(idx);
                if (is_zero(b)) continue;
                const auto j = act(i, b);
                if (!seen[j]) {
                    seen[j] = 1;
                    part.push_back(j);
                }
            }
            std::sort(part.begin(), part.end());
            out.push_back(std::move(part));
        }
        return out;
    }

    bool is_single_orbit() const { return orbits().size() == 1; }

    friend bool operator==(const FiniteInvariantSet& a, const FiniteInvariantSet& b) {
        return same_field(a.field_, b.field_) && a.elements_ == b.elements_;
    }

   private:
    FieldRef<F> field_;
    std::vector<Element> elements_;
    std::vector<std::size_t> position_;
    std::vector<std::size_t> action_;
};

template <FiniteSkewField F>
using InvariantSetRef = std::shared_ptr<const FiniteInvariantSet<F>>;

/// A function X -> K stored as a value table aligned with the domain order.
template <FiniteSkewField F>
class OrbitFunction {
   public:
    using Element = typename F::Element;

    OrbitFunction(InvariantSetRef<F> domain, std::vector<Element> values) : domain_(std::move(domain)), values_(std::move(values)) {
        if (values_.size() != domain_->size())
            throw Error(ErrorKind::DomainMismatch, "value table does not cover the domain");
    }

    static OrbitFunction constant(const InvariantSetRef<F>& domain, const Element& c) {
        return {domain, std::vector<Element>(domain->size(), c)};
    }
    static OrbitFunction identity(const InvariantSetRef<F>& domain) { return {domain, domain->elements()}; }

    const InvariantSetRef<F>& domain() const noexcept { return domain_; }
    const std::vector<Element>& values() const noexcept { return values_; }
    const Element& at(std::size_t pos) const { return values_[pos]; }
    const Element& operator()(const Element& x) const {
        const auto pos = domain_->position(x);
        if (pos == FiniteInvariantSet<F>::npos) throw Error(ErrorKind::DomainMismatch, "point outside the domain");
        return values_[pos];
    }

    bool vanishes_nowhere() const {
        return std::none_of(values_.begin(), values_.end(), [](const Element& v) { return is_zero(v); });
    }

    friend bool operator==(const OrbitFunction& a, const OrbitFunction& b) {
        return (a.domain_ == b.domain_ || *a.domain_ == *b.domain_) && a.values_ == b.values_;
    }
    friend OrbitFunction operator+(const OrbitFunction& a, const OrbitFunction& b) {
        require_same_domain(a, b);
        std::vector<Element> out;
        out.reserve(a.values_.size());
        for (std::size_t i = 0; i < a.values_.size(); ++i) out.push_back(a.values_[i] + b.values_[i]);
        return {a.domain_, std::move(out)};
    }
    friend OrbitFunction operator-(const OrbitFunction& a, const OrbitFunction& b) {
        require_same_domain(a, b);
        std::vector<Element> out;
        out.reserve(a.values_.size());
        for (std::size_t i = 0; i < a.values_.size(); ++i) out.push_back(a.values_[i] - b.values_[i]);
        return {a.domain_, std::move(out)};
    }

    static void require_same_domain(const OrbitFunction& a, const OrbitFunction& b) {
        if (a.domain_ != b.domain_ && !(*a.domain_ == *b.domain_))
            throw Error(ErrorKind::DomainMismatch, "functions live on different invariant sets");
    }

   private:
    InvariantSetRef<F> domain_;
    std::vector<Element> values_;
};

/// (f <> g)(x) = f(^{g(x)} x) g(x), or 0 where g vanishes.
template <FiniteSkewField F>
OrbitFunction<F> skew_mul(const OrbitFunction<F>& f, const OrbitFunction<F>& g) {
    OrbitFunction<F>::require_same_domain(f, g);
    const auto& dom = *f.domain();
    std::vector<typename F::Element> out;
    out.reserve(dom.size());
    for (std::size_t x = 0; x < dom.size(); ++x) {
        const auto& gx = g.at(x);
        out.push_back(is_zero(gx) ? dom.field()->zero() : f.at(dom.act(x, gx)) * gx);
    }
    return {f.domain(), std::move(out)};
}

/// (f <>_r g)(x) = f(x) g(^{f(x)^-1} x), or 0 where f vanishes.
template <FiniteSkewField F>
OrbitFunction<F> skew_mul_right(const OrbitFunction<F>& f, const OrbitFunction<F>& g) {
    OrbitFunction<F>::require_same_domain(f, g);
    const auto& dom = *f.domain();
    std::vector<typename F::Element> out;
    out.reserve(dom.size());
    for (std::size_t x = 0; x < dom.size(); ++x) {
        const auto& fx = f.at(x);
        out.push_back(is_zero(fx) ? dom.field()->zero() : fx * g.at(dom.act(x, inverse(fx))));
    }
    return {f.domain(), std::move(out)};
}

/// f <> (a + b) = f <> a + f <> b over all constants a, b in K.
template <FiniteSkewField F>
bool is_skew_convex(const OrbitFunction<F>& f) {
    const auto& dom = *f.domain();
    const auto& field = *dom.field();
    const auto q = field.order();
    // table[c][x] = (f <> const c)(x)
    std::vector<std::vector<typename F::Element>> table(q);
    for (std::uint64_t c = 0; c < q; ++c) {
        const auto value = field.element_at(c);
        table[c].reserve(dom.size());
        for (std::size_t x = 0; x < dom.size(); ++x)
            table[c].push_back(is_zero(value) ? field.zero() : f.at(dom.act(x, value)) * value);
    }
    for (std::uint64_t a = 0; a < q; ++a)
        for (std::uint64_t b = a; b < q; ++b) {
            const auto sum = field.index_of(field.element_at(a) + field.element_at(b));
            for (std::size_t x = 0; x < dom.size(); ++x)
                if (!(table[sum][x] == table[a][x] + table[b][x])) return false;
        }
    return true;
}

template <FiniteSkewField F>
bool is_skew_invertible(const OrbitFunction<F>& f) {
    if (!f.vanishes_nowhere()) return false;
    const auto& dom = *f.domain();
    std::vector<char> hit(dom.size(), 0);
    for (std::size_t x = 0; x < dom.size(); ++x) {
        auto& slot = hit[dom.act(x, f.at(x))];
        if (slot) return false;
        slot = 1;
    }
    return true;
}

/// g(^{f(x)} x) = f(x)^-1.
template <FiniteSkewField F>
OrbitFunction<F> skew_inverse(const OrbitFunction<F>& f) {
    if (!is_skew_invertible(f)) throw Error(ErrorKind::NotInvertible, "function is not skew-invertible");
    const auto& dom = *f.domain();
    std::vector<typename F::Element> out(dom.size(), dom.field()->zero());
    for (std::size_t x = 0; x < dom.size(); ++x) out[dom.act(x, f.at(x))] = inverse(f.at(x));
    return {f.domain(), std::move(out)};
}

/// Some g with f <> g = 1: for every x there is a nonzero a with f(^a x) = a^-1.
template <FiniteSkewField F>
bool has_right_inverse(const OrbitFunction<F>& f) {
    const auto& dom = *f.domain();
    const auto& field = *dom.field();
    for (std::size_t x = 0; x < dom.size(); ++x) {
        bool found = false;
        for (std::uint64_t idx = 0; idx < field.order() && !found; ++idx) {
            const auto a = field.element_at(idx);
            if (!is_zero(a) && f.at(dom.act(x, a)) * a == field.one()) found = true;
        }
        if (!found) return false;
    }
    return true;
}

/// Some g with g <> f = 1: f never vanishes and x -> ^{f(x)} x is one-to-one.
template <FiniteSkewField F>
bool has_left_inverse(const OrbitFunction<F>& f) {
    if (!f.vanishes_nowhere()) return false;
    const auto& dom = *f.domain();
    std::vector<char> hit(dom.size(), 0);
    for (std::size_t x = 0; x < dom.size(); ++x) {
        auto& slot = hit[dom.act(x, f.at(x))];
        if (slot) return false;
        slot = 1;
    }
    return true;
}

template <FiniteSkewField F>
bool convex_invertibility(const OrbitFunction<F>& f) {
    if (!is_skew_convex(f)) throw Error(ErrorKind::NotConvex, "criterion applies to skew-convex functions only");
    return f.vanishes_nowhere() && has_right_inverse(f);
}

/// Restrictions of f to the orbits of its domain.
template <FiniteSkewField F>
std::vector<OrbitFunction<F>> decompose(const OrbitFunction<F>& f) {
    const auto& dom = *f.domain();
    std::vector<OrbitFunction<F>> parts;
    for (const auto& positions : dom.orbits()) {
        std::vector<typename F::Element> members, values;
        for (auto p : positions) {
            members.push_back(dom.at(p));
            values.push_back(f.at(p));
        }
        auto sub = std::make_shared<const FiniteInvariantSet<F>>(dom.field(), members);
        // The subset constructor sorts canonically; realign the values.
        std::vector<typename F::Element> aligned(values.size(), dom.field()->zero());
        for (std::size_t i = 0; i < members.size(); ++i) aligned[sub->position(members[i])] = values[i];
        parts.emplace_back(std::move(sub), std::move(aligned));
    }
    return parts;
}

/// Glues functions on disjoint orbits back into one function on the target set.
template <FiniteSkewField F>
OrbitFunction<F> recompose(const InvariantSetRef<F>& target, const std::vector<OrbitFunction<F>>& parts) {
    std::vector<std::optional<typename F::Element>> values(target->size());
    for (const auto& part : parts) {
        if (!same_field(part.domain()->field(), target->field()))
            throw Error(ErrorKind::MixedFields, "part uses a different field");
        for (std::size_t i = 0; i < part.domain()->size(); ++i) {
            const auto pos = target->position(part.domain()->at(i));
            if (pos == FiniteInvariantSet<F>::npos)
                throw Error(ErrorKind::IncompleteCover, "part reaches outside the target set");
            if (values[pos]) throw Error(ErrorKind::IncompleteCover, "parts overlap");
            values[pos] = part.at(i);
        }
    }
    std::vector<typename F::Element> out;
    out.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i])
            throw Error(ErrorKind::IncompleteCover, "no part covers " + target->field()->format(target->at(i)));
        out.push_back(*values[i]);
    }
    return {target, std::move(out)};
}

/// f o phi, where phi is given by its images aligned with the order of `source`.
template <FiniteSkewField F>
OrbitFunction<F> pullback(const InvariantSetRef<F>& source, const std::vector<typename F::Element>& phi,
                          const OrbitFunction<F>& f) {
    const auto& target = *f.domain();
    const auto& field = *source->field();
    if (phi.size() != source->size()) throw Error(ErrorKind::DomainMismatch, "map does not cover the source set");
    std::vector<std::size_t> image(phi.size());
    for (std::size_t x = 0; x < phi.size(); ++x) {
        image[x] = target.position(phi[x]);
        if (image[x] == FiniteInvariantSet<F>::npos)
            throw Error(ErrorKind::DomainMismatch, "map leaves the target set at " + field.format(source->at(x)));
    }
    for (std::size_t x = 0; x < phi.size(); ++x)
        for (std::uint64_t idx = 0; idx < field.order(); ++idx) {
            const auto a = field.element_at(idx);
            if (is_zero(a)) continue;
            if (image[source->act(x, a)] != target.act(image[x], a))
                throw Error(ErrorKind::NotActionPreserving,
                            "phi(^a x) != ^a phi(x) at x=" + field.format(source->at(x)) + ", a=" + field.format(a));
        }
    std::vector<typename F::Element> out;
    out.reserve(phi.size());
    for (auto pos : image) out.push_back(f.at(pos));
    return {source, std::move(out)};
}

/// phi_f(x) = f(^x a) x with phi_f(0) = 0, for a transitive domain with base point a.
template <FiniteSkewField F>
LinearOperator<F> endo_of_convex(const OrbitFunction<F>& f, const typename F::Element& base) {
    const auto& dom = *f.domain();
    const auto pos = dom.position(base);
    if (pos == FiniteInvariantSet<F>::npos) throw Error(ErrorKind::DomainMismatch, "base point outside the domain");
    if (!dom.is_single_orbit()) throw Error(ErrorKind::Unsupported, "domain must be a single orbit");
    if (!is_skew_convex(f)) throw Error(ErrorKind::NotConvex, "only skew-convex functions give endomorphisms");
    return LinearOperator<F>::from_map(dom.field(), [&](const typename F::Element& x) {
        return is_zero(x) ? x : f.at(dom.act(pos, x)) * x;
    });
}

/// Stabilizer of the base point, enumerated.
template <FiniteSkewField F>
std::vector<typename F::Element> stabilizer(const F& field, const typename F::Element& base) {
    std::vector<typename F::Element> out;
    for (std::uint64_t idx = 0; idx < field.order(); ++idx) {
        const auto g = field.element_at(idx);
        if (!is_zero(g) && conjugate(field, base, g) == base) out.push_back(g);
    }
    return out;
}

/// f(^x a) = M(x) x^-1; needs M(x g) = M(x) g for g in the stabilizer of a.
template <FiniteSkewField F>
OrbitFunction<F> convex_of_endo(const LinearOperator<F>& m, const InvariantSetRef<F>& domain, const typename F::Element& base) {
    const auto& field = *domain->field();
    const auto pos = domain->position(base);
    if (pos == FiniteInvariantSet<F>::npos) throw Error(ErrorKind::DomainMismatch, "base point outside the domain");
    if (!domain->is_single_orbit()) throw Error(ErrorKind::Unsupported, "domain must be a single orbit");
    const auto group = stabilizer(field, base);
    for (std::size_t i = 0; i < field.dimension(); ++i) {
        const auto x = field.basis_element(i);
        for (const auto& g : group)
            if (!(m.apply(x * g) == m.apply(x) * g))
                throw Error(ErrorKind::NotGLinear, "operator is not right-linear over the stabilizer");
    }
    std::vector<std::optional<typename F::Element>> values(domain->size());
    for (std::uint64_t idx = 0; idx < field.order(); ++idx) {
        const auto x = field.element_at(idx);
        if (is_zero(x)) continue;
        const auto value = m.apply(x) * inverse(x);
        auto& slot = values[domain->act(pos, x)];
        if (slot && !(*slot == value)) throw Error(ErrorKind::NotGLinear, "operator is not constant on stabilizer cosets");
        slot = value;
    }
    std::vector<typename F::Element> out;
    out.reserve(values.size());
    for (auto& v : values) out.push_back(*v);
    return {domain, std::move(out)};
}

template <FiniteSkewField F>
OrbitFunction<F> poly_to_function(const SkewPolynomial<F>& p, const InvariantSetRef<F>& domain) {
    require_same_field(p.field(), domain->field());
    std::vector<typename F::Element> out;
    out.reserve(domain->size());
    for (const auto& x : domain->elements()) out.push_back(evaluate(p, x));
    return {domain, std::move(out)};
}

/// Calls visit(f) for every function on the domain, in lexicographic order of value tables.
template <FiniteSkewField F>
void for_each_function(const InvariantSetRef<F>& domain, const std::function<void(const OrbitFunction<F>&)>& visit,
                       std::uint64_t limit = 10'000'000) {
    const auto& field = *domain->field();
    const auto q = field.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < domain->size(); ++i) {
        if (total > limit / q) throw Error(ErrorKind::Unsupported, "too many functions to enumerate");
        total *= q;
    }
    const auto elements = field.elements();
    std::vector<std::size_t> digits(domain->size(), 0);
    for (std::uint64_t n = 0; n < total; ++n) {
        std::vector<typename F::Element> values;
        values.reserve(digits.size());
        for (auto d : digits) values.push_back(elements[d]);
        visit(OrbitFunction<F>(domain, std::move(values)));
        for (std::size_t i = digits.size(); i-- > 0;) {
            if (++digits[i] < q) break;
            digits[i] = 0;
        }
    }
}

}  // namespace skewrat
