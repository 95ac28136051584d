#pragma once

#include "conisym/monomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace conisym {

// Multiplicative monomial order with 1 minimal. `perm` lists variable
// indices from most to least significant. An optional leading block of
// `block` variables is compared first by its total degree, which gives the
// elimination order used for saturation.
class TermOrder {
public:
    enum class Kind { Lex, GrevLex };

    static TermOrder lex(std::size_t arity);
    static TermOrder grevlex(std::size_t arity);
    static TermOrder lex(std::vector<std::size_t> perm);
    static TermOrder grevlex(std::vector<std::size_t> perm);
    // Compare the exponent of `front` first, then `base` on the remaining
    // variables (the ring gains no variables here; `front` must be a valid
    // index under base.arity()).
    static TermOrder eliminate_first(std::size_t front, const TermOrder& base);

    Kind kind() const { return kind_; }
    std::size_t arity() const { return perm_.size(); }
    const std::vector<std::size_t>& permutation() const { return perm_; }
    std::size_t block() const { return block_; }

    int compare(const Monomial& a, const Monomial& b) const; // -1, 0, 1
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string describe() const; // "grevlex", "lex", "elim(t)>grevlex", ...

private:
    TermOrder(Kind kind, std::vector<std::size_t> perm, std::size_t block);
    Kind kind_;
    std::vector<std::size_t> perm_;
    std::size_t block_; // leading variables of perm_ compared by block degree
};

} // namespace conisym
