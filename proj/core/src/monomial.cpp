#include "conisym/monomial.hpp"

#include <stdexcept>

namespace conisym {

Monomial Monomial::variable(std::size_t arity, std::size_t index, unsigned power) {
    if (index >= arity) throw std::out_of_range("variable index out of range");
    Monomial m(arity);
    m.exp_[index] = power;
    return m;
}

bool Monomial::is_one() const {
    for (unsigned e : exp_)
        if (e != 0) return false;
    return true;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (unsigned e : exp_) d += e;
    return d;
}

Rational Monomial::weighted_degree(std::span<const Rational> weights) const {
    if (weights.size() != exp_.size())
        throw std::invalid_argument("weight vector length does not match arity");
    Rational d = 0;
    for (std::size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] != 0) d += Rational(exp_[i]) * weights[i];
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (other.arity() != arity()) throw std::invalid_argument("monomial arity mismatch");
    Monomial r = *this;
    for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] += other.exp_[i];
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    if (other.arity() != arity()) throw std::invalid_argument("monomial arity mismatch");
    for (std::size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > other.exp_[i]) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
    if (!divisor.divides(*this)) throw std::invalid_argument("monomial division is not exact");
    Monomial r = *this;
    for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] -= divisor.exp_[i];
    return r;
}

Monomial Monomial::extended(std::size_t new_arity) const {
    if (new_arity < arity()) throw std::invalid_argument("extended() cannot shrink a monomial");
    Monomial r = *this;
    r.exp_.resize(new_arity, 0);
    return r;
}

Monomial Monomial::truncated(std::size_t new_arity) const {
    if (new_arity > arity()) throw std::invalid_argument("truncated() cannot grow a monomial");
    for (std::size_t i = new_arity; i < arity(); ++i)
        if (exp_[i] != 0) throw std::invalid_argument("truncated() would drop a nonzero exponent");
    Monomial r = *this;
    r.exp_.resize(new_arity);
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("monomial arity mismatch");
    Monomial r = a;
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (b[i] > r[i]) r[i] = b[i];
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("monomial arity mismatch");
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

int cmp_paper_order(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("monomial arity mismatch");
    for (std::size_t i = a.arity(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

} // namespace conisym
