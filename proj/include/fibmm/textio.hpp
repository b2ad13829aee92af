#pragma once

#include <string>
#include <string_view>

#include "fibmm/rational.hpp"
#include "fibmm/surd.hpp"

namespace fibmm {

/// Exact decimal rendering of v with `digits` significant digits,
/// correctly rounded (ties away from zero). Annotation only; verdicts
/// never read decimals.
std::string decimal_str(const Rational& v, int digits);
std::string decimal_str(const Surd& v, int digits);

}  // namespace fibmm
