#pragma once

#include "conisym/catalog.hpp"
#include "conisym/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace conisym {

// gcd of the degrees over the nonzero coordinates of a point.
long stabilizer_order(std::span<const std::size_t> support, std::span<const long> degrees);

struct RamificationDatum {
    std::string point;  // e.g. "[0:1:0]"
    long stabilizer;    // order of the stabilizer of the orbit
    long index;         // stabilizer / gcd(all degrees)
};

// The ramification points of the projectivized surface. For the smooth and
// A families the indices depend on the weights; for D and E they do not.
std::vector<RamificationDatum> ramification_data(const SurfaceFamily& family);

// Ramification profile (e_1,...,e_r), entries >= 2, ascending, r <= 3.
struct OrbifoldTuple {
    std::vector<long> e;
    bool operator==(const OrbifoldTuple&) const = default;
};

// All profiles with entries in [2, e_max] satisfying -2 + sum(1 - 1/e) < 0:
// (), (a), (a,b), (2,2,n), and (2,3,3), (2,3,4), (2,3,5).
std::vector<OrbifoldTuple> fano_tuples(long e_max);

// -2 + sum_i (1 - 1/e_i)
Rational deg_canonical(const OrbifoldTuple& tuple);

// tau(L^m) = tau(L) / gcd(m, tau(L))
long tau_power(long tau, long m);

struct RootSolution {
    long c;
    bool exists;
    bool unique;
};

// For each degree-admissible root order c of the anticanonical bundle,
// decides whether a bundle L with L^c = -K exists and whether it is unique.
// Bundles are modelled by their invariants (integer part, fractional weights
// k_i/e_i at the orbifold points), which determine them on an orbifold P^1.
std::vector<RootSolution> taut_bundle_solutions(const OrbifoldTuple& tuple);

// Equality of the two root-order conditions for a two-point profile (a, b)
// with m = gcd(a,b), a = m a', b = m b':
//   (i)  c | a' + b' and gcd(c, a) = gcd(c, b) = 1
//   (ii) c | a + b   and gcd(c, a, b) = 1
// checked by enumerating every candidate c.
bool divisor_condition_equiv(long a, long b);

} // namespace conisym
