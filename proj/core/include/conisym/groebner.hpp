#pragma once

#include "conisym/polynomial.hpp"
#include "conisym/term_order.hpp"

#include <chrono>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace conisym {

class TimeoutError : public std::runtime_error {
public:
    explicit TimeoutError(const std::string& what) : std::runtime_error(what) {}
};

struct Deadline {
    std::optional<std::chrono::steady_clock::time_point> at;

    static Deadline none() { return {}; }
    static Deadline after_seconds(double seconds) {
        return {std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(seconds))};
    }
    bool expired() const { return at && std::chrono::steady_clock::now() > *at; }
    void check(const char* where) const {
        if (expired()) throw TimeoutError(std::string("timeout in ") + where);
    }
};

// Reduced Groebner basis: monic generators, no term of one generator
// divisible by another's leading term, sorted by leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis(TermOrder order, std::vector<Polynomial> generators)
        : order_(std::move(order)), gens_(std::move(generators)) {}

    const TermOrder& order() const { return order_; }
    std::span<const Polynomial> generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool is_zero_ideal() const { return gens_.empty(); }
    bool is_unit_ideal() const;

private:
    TermOrder order_;
    std::vector<Polynomial> gens_;
};

// Remainder of multivariate division by `divisors` under `order`; no term of
// the result is divisible by any divisor's leading term.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> divisors,
                       const TermOrder& order, const Deadline& deadline = {});
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb,
                       const Deadline& deadline = {});

// Buchberger with the coprimality and chain criteria; pairs are selected by
// smallest lcm in the term order with ties broken by pair index, so the
// output is deterministic.
GroebnerBasis buchberger(std::vector<Polynomial> generators, TermOrder order,
                         const Deadline& deadline = {});

bool ideal_membership(const Polynomial& p, std::span<const Polynomial> generators,
                      const TermOrder& order, const Deadline& deadline = {});

// Rabinowitsch: p in sqrt(I) iff 1 in I + (1 - t p) with t a fresh variable.
bool radical_membership(const Polynomial& p, std::span<const Polynomial> generators,
                        const TermOrder& order, const Deadline& deadline = {});

// Groebner basis of (generators) : q^infinity, computed by adjoining t*q - 1
// and eliminating the fresh t (t compared first, `order` on the rest).
GroebnerBasis saturate(std::span<const Polynomial> generators, const Polynomial& q,
                       const TermOrder& order, const Deadline& deadline = {});

// Generators of the elimination ideal onto `keep_vars`, via a lex basis with
// the dropped variables greatest.
std::vector<Polynomial> eliminate(std::span<const Polynomial> generators,
                                  std::span<const std::size_t> keep_vars,
                                  const Deadline& deadline = {});

// Integer-content-free form with positive leading coefficient under `order`.
Polynomial primitive_part(const Polynomial& p, const TermOrder& order);

} // namespace conisym
