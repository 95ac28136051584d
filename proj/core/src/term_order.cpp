#include "conisym/term_order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace conisym {

namespace {
std::vector<std::size_t> identity_perm(std::size_t arity) {
    std::vector<std::size_t> p(arity);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

void check_perm(const std::vector<std::size_t>& perm) {
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t v : perm) {
        if (v >= perm.size() || seen[v])
            throw std::invalid_argument("term order permutation is not a permutation");
        seen[v] = true;
    }
}
} // namespace

TermOrder::TermOrder(Kind kind, std::vector<std::size_t> perm, std::size_t block)
    : kind_(kind), perm_(std::move(perm)), block_(block) {
    check_perm(perm_);
    if (block_ > perm_.size()) throw std::invalid_argument("block larger than arity");
}

TermOrder TermOrder::lex(std::size_t arity) { return {Kind::Lex, identity_perm(arity), 0}; }
TermOrder TermOrder::grevlex(std::size_t arity) { return {Kind::GrevLex, identity_perm(arity), 0}; }
TermOrder TermOrder::lex(std::vector<std::size_t> perm) { return {Kind::Lex, std::move(perm), 0}; }
TermOrder TermOrder::grevlex(std::vector<std::size_t> perm) {
    return {Kind::GrevLex, std::move(perm), 0};
}

TermOrder TermOrder::eliminate_first(std::size_t front, const TermOrder& base) {
    std::vector<std::size_t> perm;
    perm.reserve(base.arity());
    perm.push_back(front);
    for (std::size_t v : base.permutation())
        if (v != front) perm.push_back(v);
    if (perm.size() != base.arity())
        throw std::invalid_argument("eliminate_first: front variable out of range");
    return {base.kind(), std::move(perm), 1};
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.arity() != perm_.size() || b.arity() != perm_.size())
        throw std::invalid_argument("term order arity mismatch");

    if (block_ > 0) {
        long da = 0, db = 0;
        for (std::size_t p = 0; p < block_; ++p) {
            da += a[perm_[p]];
            db += b[perm_[p]];
        }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t p = 0; p < block_; ++p) {
            std::size_t v = perm_[p];
            if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
        }
    }

    if (kind_ == Kind::Lex) {
        for (std::size_t p = block_; p < perm_.size(); ++p) {
            std::size_t v = perm_[p];
            if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
        }
        return 0;
    }

    // graded reverse lexicographic on the tail block
    long da = 0, db = 0;
    for (std::size_t p = block_; p < perm_.size(); ++p) {
        da += a[perm_[p]];
        db += b[perm_[p]];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t p = perm_.size(); p-- > block_;) {
        std::size_t v = perm_[p];
        if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1; // smaller trailing exponent wins
    }
    return 0;
}

std::string TermOrder::describe() const {
    std::string base = kind_ == Kind::Lex ? "lex" : "grevlex";
    if (block_ > 0) base = "elim" + std::to_string(block_) + "+" + base;
    bool shuffled = false;
    for (std::size_t p = 0; p < perm_.size(); ++p)
        if (perm_[p] != p) shuffled = true;
    if (shuffled) {
        base += "[";
        for (std::size_t p = 0; p < perm_.size(); ++p) {
            if (p) base += ",";
            base += std::to_string(perm_[p]);
        }
        base += "]";
    }
    return base;
}

} // namespace conisym
