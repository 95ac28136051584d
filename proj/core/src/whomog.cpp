#include "conisym/whomog.hpp"

#include "conisym/poly_io.hpp"

namespace conisym {

namespace {

// {x_alpha1, x_i} must equal w_i x_i + q_i with q_i in variables before x_i.
void check_shape(const PoissonMatrix& theta, const std::vector<Rational>& w,
                 std::size_t alpha1, std::size_t i) {
    if (i == alpha1) return;
    const std::size_t n = theta.ring_arity();
    Polynomial b = theta.entry(alpha1, i);
    b.add_term(Monomial::variable(n, i), -w[i]);
    for (const auto& [m, c] : b.terms())
        for (std::size_t v = i; v < n; ++v)
            if (m[v] != 0)
                throw WHomogenizeError(
                    "bracket {x_" + std::to_string(alpha1 + 1) + ", x_" + std::to_string(i + 1) +
                    "} is not of the form w_i x_i + (lower variables)");
}

} // namespace

WHomogenizeResult w_homogenize(const PoissonMatrix& theta, const GradingData& grading,
                               std::size_t alpha1) {
    grading.validate();
    const std::size_t n = theta.ring_arity();
    if (theta.size() != n)
        throw std::invalid_argument("w_homogenize expects a matrix over its full ring");
    if (grading.arity() != n) throw std::invalid_argument("grading arity mismatch");
    if (!grading.w) throw std::invalid_argument("w_homogenize needs w-weights");
    if (alpha1 >= n) throw std::out_of_range("alpha1 out of range");
    if (grading.degrees[alpha1] != grading.s)
        throw WHomogenizeError("the distinguished variable must have degree s");
    const std::vector<Rational>& w = *grading.w;

    WHomogenizeResult result{TriangularSubstitution::identity(n), theta, {}};

    for (std::size_t i = 0; i < n; ++i) {
        if (i == alpha1) continue;
        check_shape(result.transformed, w, alpha1, i);
        const Monomial xi = Monomial::variable(n, i);

        for (;;) {
            Polynomial b = result.transformed.entry(alpha1, i);
            // display-order-maximal term with the wrong w-degree
            const Monomial* offending = nullptr;
            Rational off_coeff;
            for (const auto& [m, c] : b.terms()) {
                if (m == xi) continue;
                if (m.weighted_degree(w) != w[i]) {
                    offending = &m; // terms() ascends, so the last hit is maximal
                    off_coeff = c;
                }
            }
            if (!offending) break;

            Rational denom = w[i] - offending->weighted_degree(w);
            if (denom == 0)
                throw WHomogenizeError("zero denominator w_i - w(q') at term " +
                                       format_polynomial(Polynomial::term(*offending, off_coeff),
                                                         default_var_names(n)));

            result.trace.push_back(WHomogenizeStep{i, *offending});

            std::vector<Polynomial> images;
            images.reserve(n);
            for (std::size_t v = 0; v < n; ++v) images.push_back(Polynomial::variable(n, v));
            images[i].add_term(*offending, off_coeff / denom);
            TriangularSubstitution step(std::move(images));

            result.transformed = transport_poisson(result.transformed, step);
            result.substitution = result.substitution.then(step);
            check_shape(result.transformed, w, alpha1, i);
        }
    }
    return result;
}

} // namespace conisym
