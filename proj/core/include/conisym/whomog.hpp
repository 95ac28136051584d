#pragma once

#include "conisym/grading.hpp"
#include "conisym/poisson.hpp"
#include "conisym/subst.hpp"

#include <stdexcept>
#include <vector>

namespace conisym {

class WHomogenizeError : public std::runtime_error {
public:
    explicit WHomogenizeError(const std::string& what) : std::runtime_error(what) {}
};

struct WHomogenizeStep {
    std::size_t var;    // variable whose coordinate was corrected
    Monomial offending; // the cmp_paper_order-maximal offending monomial removed
};

struct WHomogenizeResult {
    TriangularSubstitution substitution; // composite coordinate change
    PoissonMatrix transformed;           // theta in the new coordinates
    std::vector<WHomogenizeStep> trace;  // one entry per correction step
};

// Makes every bracket {x_alpha1, x_i} w-homogeneous of degree w_i by the
// correction loop: take the display-order-maximal term q' of {x_alpha1, x_i}
// with w(q') != w_i and replace x_i by x_i + q'/(w_i - w(q')). Each step
// strictly lowers the maximal offending monomial, and monomials of the fixed
// conical degree are finite, so the loop terminates.
//
// Requires: grading.w present, d_alpha1 == s, and each {x_alpha1, x_i} of the
// form w_i x_i + (terms in variables before x_i). Throws WHomogenizeError on
// a zero denominator w_i - w(q') or a shape violation.
WHomogenizeResult w_homogenize(const PoissonMatrix& theta, const GradingData& grading,
                               std::size_t alpha1);

} // namespace conisym
