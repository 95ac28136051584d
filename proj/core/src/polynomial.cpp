#include "conisym/polynomial.hpp"

#include <stdexcept>

namespace conisym {

namespace {
void require_same_arity(const Polynomial& a, const Polynomial& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("polynomial arity mismatch");
}
} // namespace

Polynomial Polynomial::constant(std::size_t arity, Rational c) {
    Polynomial p(arity);
    p.add_term(Monomial(arity), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
    return term(Monomial::variable(arity, index), 1);
}

Polynomial Polynomial::term(Monomial m, Rational c) {
    Polynomial p(m.arity());
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::contains_monomial(const Monomial& m) const {
    if (m.arity() != arity_) throw std::invalid_argument("polynomial arity mismatch");
    return terms_.find(m) != terms_.end();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.arity() != arity_) throw std::invalid_argument("polynomial arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(arity_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial r = *this;
    r += other;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial r = *this;
    r -= other;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_arity(*this, other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_arity(*this, other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_same_arity(*this, other);
    Polynomial r(arity_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(arity_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r = Polynomial::constant(arity_, 1);
    Polynomial base = *this;
    while (k != 0) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k != 0) base = base * base;
    }
    return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= arity_) throw std::out_of_range("derivative variable index out of range");
    Polynomial r(arity_);
    for (const auto& [m, c] : terms_) {
        unsigned e = m[var];
        if (e == 0) continue;
        Monomial d = m;
        d[var] = e - 1;
        r.add_term(d, c * Rational(e));
    }
    return r;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
    if (images.size() != arity_)
        throw std::invalid_argument("substitute: need one image per variable");
    std::size_t target = arity_;
    if (!images.empty()) {
        target = images[0].arity();
        for (const auto& g : images)
            if (g.arity() != target)
                throw std::invalid_argument("substitute: images have mixed arities");
    }
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < arity_; ++i) {
            if (m[i] == 0) continue;
            t = t * images[i].pow(m[i]);
        }
        r += t;
    }
    return r;
}

Polynomial Polynomial::extended(std::size_t new_arity) const {
    Polynomial r(new_arity);
    for (const auto& [m, c] : terms_) r.add_term(m.extended(new_arity), c);
    return r;
}

Polynomial Polynomial::truncated(std::size_t new_arity) const {
    Polynomial r(new_arity);
    for (const auto& [m, c] : terms_) r.add_term(m.truncated(new_arity), c);
    return r;
}

std::vector<Rational> to_rational_weights(std::span<const long> weights) {
    std::vector<Rational> w;
    w.reserve(weights.size());
    for (long d : weights) w.emplace_back(d);
    return w;
}

HomogeneityResult homogeneous_degree(const Polynomial& p, std::span<const Rational> weights) {
    if (weights.size() != p.arity())
        throw std::invalid_argument("weight vector length does not match arity");
    if (p.is_zero()) return AnyDegree{};
    auto it = p.terms().begin();
    const Monomial& first = it->first;
    Rational deg = first.weighted_degree(weights);
    for (++it; it != p.terms().end(); ++it) {
        if (it->first.weighted_degree(weights) != deg)
            return NotHomogeneous{first, it->first};
    }
    return deg;
}

HomogeneityResult homogeneous_degree(const Polynomial& p, std::span<const long> weights) {
    auto w = to_rational_weights(weights);
    return homogeneous_degree(p, w);
}

bool is_homogeneous_of_degree(const Polynomial& p, std::span<const Rational> weights,
                              const Rational& degree) {
    auto r = homogeneous_degree(p, weights);
    if (std::holds_alternative<AnyDegree>(r)) return true;
    if (auto* d = std::get_if<Rational>(&r)) return *d == degree;
    return false;
}

} // namespace conisym
