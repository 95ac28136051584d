#pragma once

#include "conisym/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace conisym {

// Exponent vector of fixed arity. All variable indices are 0-based.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t arity) : exp_(arity, 0) {}
    Monomial(std::initializer_list<unsigned> exps) : exp_(exps) {}
    explicit Monomial(std::vector<unsigned> exps) : exp_(std::move(exps)) {}

    static Monomial variable(std::size_t arity, std::size_t index, unsigned power = 1);

    std::size_t arity() const { return exp_.size(); }
    unsigned operator[](std::size_t i) const { return exp_[i]; }
    unsigned& operator[](std::size_t i) { return exp_[i]; }
    const std::vector<unsigned>& exponents() const { return exp_; }

    bool is_one() const;
    unsigned total_degree() const;
    Rational weighted_degree(std::span<const Rational> weights) const;

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    Monomial operator/(const Monomial& divisor) const; // requires divisor.divides(*this)

    // Pads with zero exponents (new variables at the end).
    Monomial extended(std::size_t new_arity) const;
    // Drops trailing variables; they must have exponent zero.
    Monomial truncated(std::size_t new_arity) const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<unsigned> exp_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

// The total order on monomials used for storage and display: compare
// exponents from the highest variable index downward; the first variable
// where they differ decides, smaller exponent meaning smaller monomial.
// This is a total order but not a term order (not multiplicative).
int cmp_paper_order(const Monomial& a, const Monomial& b);

struct PaperOrderLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return cmp_paper_order(a, b) < 0;
    }
};

} // namespace conisym
