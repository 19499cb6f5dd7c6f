#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "fq.hpp"
#include "gaussian.hpp"
#include "quaternion.hpp"

namespace skewrat {

using AnyField = std::variant<FieldRef<FqField>, FieldRef<GaussianField>, FieldRef<QuaternionField>>;

struct Config {
    AnyField field;
    bool json = false;
};

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline std::string lower_ascii(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

[[noreturn]] inline void bad_config(std::size_t line, const std::string& what) {
    throw Error(ErrorKind::InvalidConfig, (line ? "line " + std::to_string(line) + ": " : std::string()) + what);
}

inline std::uint32_t config_uint(const std::string& text, std::size_t line, const char* key) {
    std::uint32_t v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) bad_config(line, std::string(key) + " must be a non-negative integer");
    return v;
}

// "1, 1, 1" or "[1,1,1]"
inline std::vector<std::uint32_t> config_uint_list(std::string text, std::size_t line, const char* key) {
    text = trim(text);
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') bad_config(line, std::string(key) + ": unbalanced '['");
        text = text.substr(1, text.size() - 2);
    }
    std::vector<std::uint32_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(config_uint(trim(item), line, key));
    if (out.empty()) bad_config(line, std::string(key) + " is empty");
    return out;
}

inline bool config_bool(const std::string& text, std::size_t line, const char* key) {
    const auto v = lower_ascii(text);
    if (v == "true" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "no" || v == "0") return false;
    bad_config(line, std::string(key) + " must be true or false");
}

}  // namespace detail

/// Flat "key = value" lines. Top-level keys: json. The [field] section holds
/// kind (fq | gaussian | quaternion), p, modulus, frobenius_power, sigma (conj | id), derivation.
/// '#' and ';' start comments.
inline Config parse_config(std::string_view text) {
    using namespace detail;
    struct Entry {
        std::string value;
        std::size_t line;
    };
    std::map<std::string, Entry> top, field;
    bool seen_field = false, in_field = false;

    std::stringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find_first_of("#;");
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') bad_config(lineno, "malformed section header");
            const auto name = lower_ascii(trim(line.substr(1, line.size() - 2)));
            if (name != "field") bad_config(lineno, "unknown section [" + name + "]");
            if (seen_field) bad_config(lineno, "duplicate [field] section");
            seen_field = in_field = true;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) bad_config(lineno, "expected key = value");
        const auto key = lower_ascii(trim(line.substr(0, eq)));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) bad_config(lineno, "empty key");
        auto& target = in_field ? field : top;
        if (!target.emplace(key, Entry{value, lineno}).second) bad_config(lineno, "duplicate key " + key);
    }
    if (!seen_field) bad_config(0, "missing [field] section");

    Config cfg{FieldRef<GaussianField>{}, false};
    for (const auto& [key, e] : top) {
        if (key == "json")
            cfg.json = config_bool(e.value, e.line, "json");
        else
            bad_config(e.line, "unknown key " + key);
    }

    auto take = [&](const char* key) -> std::optional<Entry> {
        const auto it = field.find(key);
        if (it == field.end()) return std::nullopt;
        Entry e = it->second;
        field.erase(it);
        return e;
    };
    const auto kind_entry = take("kind");
    if (!kind_entry) bad_config(0, "[field] needs a kind");
    const auto kind = lower_ascii(kind_entry->value);
    auto derivation = take("derivation");
    if (!derivation) derivation = take("derivation_c");

    try {
        if (kind == "fq" || kind == "fqfrobenius" || kind == "finite") {
            const auto p = take("p");
            const auto modulus = take("modulus");
            const auto k = take("frobenius_power");
            if (!p || !modulus) bad_config(kind_entry->line, "fq needs p and modulus");
            FqField base(config_uint(p->value, p->line, "p"), config_uint_list(modulus->value, modulus->line, "modulus"),
                         k ? config_uint(k->value, k->line, "frobenius_power") : 1);
            if (derivation) base = base.with_derivation(base.parse(derivation->value));
            cfg.field = make_field(std::move(base));
        } else if (kind == "gaussian" || kind == "gaussianrationals" || kind == "q(i)") {
            const auto sigma = take("sigma");
            auto s = GaussianSigma::Conjugation;
            if (sigma) {
                const auto v = lower_ascii(sigma->value);
                if (v == "id" || v == "identity")
                    s = GaussianSigma::Identity;
                else if (v != "conj" && v != "conjugation")
                    bad_config(sigma->line, "sigma must be conj or id");
            }
            GaussianField base(s);
            if (derivation) base = base.with_derivation(base.parse(derivation->value));
            cfg.field = make_field(std::move(base));
        } else if (kind == "quaternion" || kind == "quaternions" || kind == "rationalquaternions") {
            if (const auto sigma = take("sigma"); sigma && lower_ascii(sigma->value) != "id")
                bad_config(sigma->line, "quaternions only support sigma = id");
            QuaternionField base;
            if (derivation) base = base.with_derivation(base.parse(derivation->value));
            cfg.field = make_field(std::move(base));
        } else {
            bad_config(kind_entry->line, "unknown kind " + kind);
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidConfig) throw;
        throw Error(ErrorKind::InvalidConfig, e.what());
    }
    if (!field.empty()) bad_config(field.begin()->second.line, "unknown key " + field.begin()->first + " for kind " + kind);
    return cfg;
}

inline Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidConfig, "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace skewrat
