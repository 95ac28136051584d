#pragma once

#include "conisym/rational.hpp"

#include <optional>
#include <vector>

namespace conisym {

// Conical grading data: the symplectic weight s, the generator degrees d_i,
// and (when a distinguished degree-s generator has been chosen) the
// auxiliary w-weights, which may be half-integers.
struct GradingData {
    long s = 1;
    std::vector<long> degrees;
    std::optional<std::vector<Rational>> w;

    std::size_t arity() const { return degrees.size(); }
    std::vector<Rational> rational_degrees() const;
    long degree_gcd() const;

    // s > 0, every d_i > 0, and w (if present) matches the arity.
    void validate() const;
};

} // namespace conisym
