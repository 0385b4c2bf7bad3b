#include "rvf/graded_poly.hpp"

namespace rvf::detail {

std::string coeff_str(const Rational& c, bool* negative) {
    *negative = c < Rational(0);
    Rational abs = *negative ? -c : c;
    return abs.str();
}

std::string coeff_str(const Fp& c, bool* negative) {
    *negative = false;
    return std::to_string(c.v);
}

} // namespace rvf::detail
