#pragma once

#include "conisym/polynomial.hpp"

#include <optional>
#include <vector>

namespace conisym {

// {u^a v^b, u^c v^d} = (ad - bc) u^{a+c-1} v^{b+d-1} for the standard bracket
// {u,v} = 1 on C[u,v]; zero when the coefficient vanishes.
Polynomial bracket_uv(const Monomial& m1, const Monomial& m2);

// Subalgebra of C[u,v] generated by monic monomials, graded by rational
// weights deg(u), deg(v).
struct MonomialSubalgebra {
    std::vector<Monomial> generators; // arity 2
    Rational deg_u = 1;
    Rational deg_v = 1;
};

struct ClosureWitness {
    Monomial left, right;   // algebra monomials whose bracket escapes
    Polynomial bracket_val; // the offending bracket
};

// Enumerates all monomials of the subalgebra with u,v-total degree at most
// degree_bound and brackets them pairwise; returns the first bracket (in a
// fixed deterministic order) that lies outside the multiplicative span, or
// nullopt when every bracket stays inside.
std::optional<ClosureWitness> closure_check(const MonomialSubalgebra& alg, unsigned degree_bound);

// Sum of the five w-weights (0, -(n+1), -2(n+1), -3(n+1), n+1) attached to
// the generators (z, x z^m, x^2, x^3, y); equals -5(n+1), never zero.
Rational w_weight_obstruction(unsigned n);

} // namespace conisym
