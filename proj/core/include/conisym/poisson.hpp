#pragma once

#include "conisym/grading.hpp"
#include "conisym/polynomial.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace conisym {

// Skew matrix of generator brackets {x_i, x_j}. The matrix acts on the first
// `size()` ring variables; any further variables of the ambient ring are
// parameters with zero bracket against everything.
class PoissonMatrix {
public:
    PoissonMatrix(std::size_t size, std::size_t ring_arity);
    explicit PoissonMatrix(std::size_t size) : PoissonMatrix(size, size) {}

    std::size_t size() const { return size_; }
    std::size_t ring_arity() const { return ring_arity_; }

    const Polynomial& entry(std::size_t i, std::size_t j) const;
    // Sets (i,j) and (j,i) = -value. i == j is rejected.
    void set_entry(std::size_t i, std::size_t j, Polynomial value);

    bool operator==(const PoissonMatrix&) const = default;

private:
    std::size_t size_;
    std::size_t ring_arity_;
    std::vector<Polynomial> entries_; // row-major size_ x size_
};

// {x_i, g} = sum_j dg/dx_j {x_i, x_j}
Polynomial generator_bracket(const PoissonMatrix& theta, std::size_t i, const Polynomial& g);

// {f, g} = sum_{i,j} df/dx_i dg/dx_j {x_i, x_j}
Polynomial bracket(const PoissonMatrix& theta, const Polynomial& f, const Polynomial& g);

// {x_i,{x_j,x_k}} + {x_j,{x_k,x_i}} + {x_k,{x_i,x_j}}; zero for all triples
// iff the bracket satisfies the Jacobi identity.
Polynomial jacobiator(const PoissonMatrix& theta, std::size_t i, std::size_t j, std::size_t k);

bool jacobi_identity_holds(const PoissonMatrix& theta);

// Vector of signed principal sub-Pfaffians: component i (0-based) is
// (-1)^i times the Pfaffian of theta with row and column i removed.
// Requires odd size. For size 3 this is (theta12, -theta02, theta01); for
// size 5 each component matches the classical two-term-product expansion.
std::vector<Polynomial> pfaffian_vector(const PoissonMatrix& theta);

struct PfaffianMismatch {
    std::size_t component;    // first mismatching component (0-based)
    Polynomial pfaffian_part; // that component of pf(theta)
    Polynomial gradient_part; // matching component of grad(f)
};
using PfaffianCheck = std::variant<Rational, PfaffianMismatch>;

// The unique rational lambda with lambda * grad(f) = pf(theta), if it exists.
PfaffianCheck check_pfaffian_condition(const PoissonMatrix& theta, const Polynomial& f);

std::vector<Polynomial> gradient(const Polynomial& f, std::size_t n_vars);

// theta . v == 0 as a polynomial vector.
bool kernel_check(const PoissonMatrix& theta, std::span<const Polynomial> v);

struct DegreeReport {
    struct Entry {
        std::size_t i, j;     // 0-based, i < j
        bool pass;
        std::string detail;   // expected/actual degrees or witness terms
    };
    std::vector<Entry> entries;
    std::optional<Entry> f_check; // deg f = sum(d) - m*s when f was supplied
    bool all_pass() const;
};

// Per-entry check that deg theta_{i,j} = d_i + d_j - s; with f supplied also
// checks deg f = sum d_i - m*s (ring of 2m+1 variables).
DegreeReport check_degree_homogeneity(const PoissonMatrix& theta, const GradingData& grading,
                                      const Polynomial* f = nullptr);

// The 3x3 matrix with {x,y} = df/dz, {x,z} = -df/dy, {y,z} = df/dx.
// Satisfies the Jacobi identity for every f.
PoissonMatrix surface_bracket_from_f(const Polynomial& f);

} // namespace conisym
