#pragma once

#include "action.hpp"
#include "config.hpp"
#include "error.hpp"
#include "expr.hpp"
#include "field.hpp"
#include "fq.hpp"
#include "funcring.hpp"
#include "gaussian.hpp"
#include "matrix.hpp"
#include "quaternion.hpp"
#include "rational.hpp"
#include "rationals.hpp"
#include "skewpoly.hpp"
#include "verify.hpp"
