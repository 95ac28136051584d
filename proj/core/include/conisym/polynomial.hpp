#pragma once

#include "conisym/monomial.hpp"
#include "conisym/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace conisym {

// Sparse multivariate polynomial over Q. Terms are stored sorted under the
// display order (cmp_paper_order), never with a zero coefficient, so equal
// polynomials have identical term maps and formatting is byte-stable.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, PaperOrderLess>;

    explicit Polynomial(std::size_t arity) : arity_(arity) {}

    static Polynomial zero(std::size_t arity) { return Polynomial(arity); }
    static Polynomial constant(std::size_t arity, Rational c);
    static Polynomial variable(std::size_t arity, std::size_t index);
    static Polynomial term(Monomial m, Rational c);

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const Monomial& m) const;
    bool contains_monomial(const Monomial& m) const;

    // *this += c * m; removes the entry if the sum cancels.
    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);

    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned k) const;

    Polynomial derivative(std::size_t var) const;

    // Ring homomorphism x_i -> images[i]; images share one common arity,
    // which becomes the arity of the result.
    Polynomial substitute(std::span<const Polynomial> images) const;

    Polynomial extended(std::size_t new_arity) const;
    Polynomial truncated(std::size_t new_arity) const;

    bool operator==(const Polynomial&) const = default;

private:
    std::size_t arity_;
    TermMap terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

// Result of a weighted-homogeneity query.
struct AnyDegree {};                                   // zero polynomial
struct NotHomogeneous { Monomial witness_a, witness_b; };
using HomogeneityResult = std::variant<Rational, AnyDegree, NotHomogeneous>;

HomogeneityResult homogeneous_degree(const Polynomial& p, std::span<const Rational> weights);

// Convenience for integer weight vectors (conical degrees).
HomogeneityResult homogeneous_degree(const Polynomial& p, std::span<const long> weights);

bool is_homogeneous_of_degree(const Polynomial& p, std::span<const Rational> weights,
                              const Rational& degree);

std::vector<Rational> to_rational_weights(std::span<const long> weights);

} // namespace conisym
