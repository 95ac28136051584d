#pragma once

#include "conisym/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace conisym {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

// Grammar (whitespace-insensitive):
//   poly   := sign? term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   coeff  := integer ('/' positive-integer)?
//   factor := varname ('^' positive-integer)?
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> var_names);

// Terms in descending display order, unit coefficients elided, rationals as p/q.
// parse_polynomial(format_polynomial(p)) == p.
std::string format_polynomial(const Polynomial& p, std::span<const std::string> var_names);

std::vector<std::string> default_var_names(std::size_t arity); // x1..xN

} // namespace conisym
