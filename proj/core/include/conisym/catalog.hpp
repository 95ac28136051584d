#pragma once

#include "conisym/groebner.hpp"
#include "conisym/poisson.hpp"
#include "conisym/report.hpp"

#include <array>
#include <string>
#include <vector>

namespace conisym {

// ---------------------------------------------------------------------------
// ADE surfaces

enum class SurfaceKind { Smooth, A, D, E6, E7, E8 };

std::string surface_kind_name(SurfaceKind kind);

struct SurfaceFamily {
    SurfaceKind kind;
    unsigned n = 0;            // subscript for A and D families
    long s = 1;                // symplectic weight
    std::array<long, 3> d{};   // degrees of x, y, z

    // The classification weights: smooth -> (5,2,3,5); A_n -> (1,1,1,n);
    // D_n -> (1,2,n-2,n-1); E6/E7/E8 -> their fixed weight triples.
    static SurfaceFamily standard(SurfaceKind kind, unsigned n = 0);

    // Checks the family's weight constraint, e.g. (n+1)d1 = d2+d3 and d1 = s
    // for A_n. Throws std::invalid_argument when violated.
    void validate() const;
};

struct Surface {
    std::vector<std::string> vars; // {"x","y","z"}
    Polynomial f;
    PoissonMatrix theta;
    GradingData grading;
};

Surface make_surface(const SurfaceFamily& family);

// (a) Jacobi identity, (b) entry degree homogeneity, (c) x,y,z all lie in the
// radical of the Jacobian ideal (singular families only), (d) deg f =
// d1+d2+d3-s.
Report verify_surface(const SurfaceFamily& family, const Deadline& deadline = {});

// ---------------------------------------------------------------------------
// The 4-dimensional slices

// The slice hypersurface data in variables (x, h, y, e0, e1):
// f_n = -y e0^2 + h e0 e1 + x e1^2 + (h^2 + 4xy)^n with its Poisson matrix.
struct SliceXn {
    unsigned n = 2;
    long s = 2, t = 0;
    std::vector<std::string> vars;
    Polynomial f{5};
    PoissonMatrix theta{5};
    GradingData grading; // degrees for the (s,t) family, w-weights (2,0,-2,1,-1)
};

// Degrees (in variable order x,h,y,e0,e1): s-2t, s, s+2t, ((2n-1)s)/2 -+ t.
// Requires n >= 2, 0 <= t < s/2 and all five degrees integral (s even).
SliceXn make_xn(unsigned n, long s, long t);

Polynomial slice_delta(unsigned arity_at_least_3); // h^2 + 4xy in the given arity

// (a) all ten Jacobiators vanish, (b) a single rational lambda matches
// grad f against the sub-Pfaffian vector, (c) degree homogeneity under
// (s,t), (d) grad f lies in the kernel of theta, (e) the reconstructed
// five-variable matrix with symbolic c1, c2, kappa satisfies every Jacobi
// identity modulo the ideal (c1 c2 - 1/2).
Report verify_xn(const SliceXn& slice, const Deadline& deadline = {});

// ---------------------------------------------------------------------------
// Degree-tuple enumeration

struct DegreeTuple {
    long s;                    // weight before normalization
    long a;                    // family parameter
    int case_tag;              // 1, 2 or 3
    std::array<long, 5> d_raw; // sorted, before gcd normalization
    std::array<long, 5> d;     // sorted, gcd 1
    bool exceptional;          // case 1 with a = 3s: (3,4,5,6,8)
};

// Case 1: (a, 2a-2s, 2a-s, 3a-3s, 4a-4s), a >= 2s.
// Case 2: (2s, a, 3s, a+s, a+2s), 2s <= a <= 3s.
// Case 3: (2s, 3s, a, a+s, a+2s), a >= 3s.
std::vector<DegreeTuple> enumerate_degree_tuples(long s, long a_max);

// ---------------------------------------------------------------------------
// The 27-parameter exceptional ansatz, degrees (3,4,5,6,8), s = 1

inline constexpr std::size_t kAnsatzParams = 27;
inline constexpr std::array<long, 5> kAnsatzDegrees{3, 4, 5, 6, 8};

// Ring Q[x1..x5, a1..a27]; the matrix acts on x1..x5 only.
PoissonMatrix ansatz27();
std::vector<std::string> ansatz_var_names();

// All monomials in x1..x5 of the given weighted degree under (3,4,5,6,8),
// embedded in the 32-variable ansatz ring.
std::vector<Monomial> ansatz_x_monomials_of_degree(long degree);

// Coefficients of every monomial of every J_{i,j,k}, as polynomials in
// a1..a27 (27-variable ring), deduplicated and deterministically ordered.
std::vector<Polynomial> ansatz_jacobi_coefficients();

// The component of the solution set not contained in {a4 a15 = 0}: the curve
//   a4=t, a5=4t, a7=-2t, a8=4t, a9=-40t^2, a10=-2t, a11=4t, a15=-t,
//   a23=2t, a25=-10t^2, all other parameters zero.
// Returned as its 26 ideal generators (24 linear, 2 quadratic) in a1..a27.
std::vector<Polynomial> exceptional_component_ideal();

// Parameter images a_i -> c_i(t) of the component, in the 1-variable ring Q[t].
std::vector<Polynomial> exceptional_component_parametrization();

// Builds the ansatz, checks it against the degree constraints, forms the
// Jacobi coefficient ideal, saturates by a4*a15, and verifies two-sided
// containment with the component ideal plus the a18 membership that rules
// the exceptional degree tuple out.
Report exceptional_case_elimination(TermOrder::Kind kind = TermOrder::Kind::GrevLex,
                                    const Deadline& deadline = {});

// Saturated ideal basis, exposed for serialization and determinism checks.
GroebnerBasis exceptional_saturated_basis(TermOrder::Kind kind = TermOrder::Kind::GrevLex,
                                          const Deadline& deadline = {});

// True iff two disjoint index pairs taken from {0..4} minus {var_index}
// exist with theta over the first pair containing the pure power
// x_var^1 and over the second pair x_var^l for some l in `powers`.
bool check_condition_star(const PoissonMatrix& theta, std::size_t var_index,
                          std::span<const unsigned> powers);

} // namespace conisym
