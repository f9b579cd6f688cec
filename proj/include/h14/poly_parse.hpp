#pragma once

#include <string_view>

#include "h14/laurent_poly.hpp"

namespace h14 {

/// Parses expressions such as "x1^5*x2 + x1^-2 - 3/2*(x2 + 1)^2" over `vars`.
/// Division and negative powers are accepted only by constants or
/// invertible monomials.
LaurentPoly parse_poly(std::string_view text, const VarSet& vars);

}  // namespace h14
