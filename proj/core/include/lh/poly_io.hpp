#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lh/laurent_poly.hpp"

namespace lh {

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t pos)
        : std::runtime_error(message + " at position " + std::to_string(pos)),
          position(pos) {}

    std::size_t position;
};

// Canonical text format: terms in descending degree-lex joined by " + " or
// " - ", term = [coeff "*"] y<i>["^"<e>]*, exponent 1 and unit coefficients
// omitted, zero polynomial = "0". Example:
//   y1^4*y2^3*y3 + y1^3*y2^3*y3^2 + y1^3*y2^2*y3^2*y4
std::string formatPoly(const LaurentPoly& p);

LaurentPoly parsePoly(std::string_view text);

}  // namespace lh
