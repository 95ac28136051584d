#include "conisym/subst.hpp"

#include <stdexcept>

namespace conisym {

TriangularSubstitution::TriangularSubstitution(std::vector<Polynomial> images)
    : images_(std::move(images)) {
    std::size_t n = images_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (images_[i].arity() != n)
            throw std::invalid_argument("substitution image arity mismatch");
        Monomial xi = Monomial::variable(n, i);
        if (images_[i].coefficient(xi) == 0)
            throw std::invalid_argument("substitution is not invertible: image of variable " +
                                        std::to_string(i) + " lacks the variable itself");
        for (const auto& [m, c] : images_[i].terms()) {
            if (m == xi) continue;
            for (std::size_t v = i; v < n; ++v)
                if (m[v] != 0)
                    throw std::invalid_argument(
                        "substitution is not triangular: image of variable " + std::to_string(i) +
                        " involves variable " + std::to_string(v));
        }
    }
}

TriangularSubstitution TriangularSubstitution::identity(std::size_t arity) {
    std::vector<Polynomial> images;
    images.reserve(arity);
    for (std::size_t i = 0; i < arity; ++i) images.push_back(Polynomial::variable(arity, i));
    return TriangularSubstitution(std::move(images));
}

Polynomial TriangularSubstitution::apply(const Polynomial& p) const {
    if (p.arity() != arity()) throw std::invalid_argument("substitution arity mismatch");
    return p.substitute(images_);
}

TriangularSubstitution TriangularSubstitution::inverse() const {
    std::size_t n = arity();
    // Solve c_i x_i + q_i(x_<i) = y_i from the bottom up: the inverse image of
    // x_i is (y_i - q_i(inv_0, ..., inv_{i-1})) / c_i.
    std::vector<Polynomial> inv;
    inv.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Monomial xi = Monomial::variable(n, i);
        Rational c = images_[i].coefficient(xi);
        Polynomial q = images_[i];
        q.add_term(xi, -c);
        // q only involves variables < i, whose inverse images are known.
        std::vector<Polynomial> partial = inv;
        for (std::size_t v = i; v < n; ++v) partial.push_back(Polynomial::variable(n, v));
        Polynomial image = (Polynomial::variable(n, i) - q.substitute(partial)).scaled(1 / c);
        inv.push_back(std::move(image));
    }
    return TriangularSubstitution(std::move(inv));
}

TriangularSubstitution TriangularSubstitution::then(const TriangularSubstitution& next) const {
    if (next.arity() != arity()) throw std::invalid_argument("substitution arity mismatch");
    std::vector<Polynomial> images;
    images.reserve(arity());
    for (std::size_t i = 0; i < arity(); ++i) images.push_back(apply(next.image(i)));
    return TriangularSubstitution(std::move(images));
}

bool TriangularSubstitution::is_identity() const {
    for (std::size_t i = 0; i < arity(); ++i)
        if (images_[i] != Polynomial::variable(arity(), i)) return false;
    return true;
}

PoissonMatrix transport_poisson(const PoissonMatrix& theta, const TriangularSubstitution& sub) {
    if (sub.arity() != theta.ring_arity())
        throw std::invalid_argument("substitution arity does not match the ring");
    TriangularSubstitution inv = sub.inverse();
    PoissonMatrix out(theta.size(), theta.ring_arity());
    for (std::size_t i = 0; i < theta.size(); ++i)
        for (std::size_t j = i + 1; j < theta.size(); ++j) {
            Polynomial br = bracket(theta, sub.image(i), sub.image(j));
            out.set_entry(i, j, inv.apply(br));
        }
    return out;
}

} // namespace conisym
