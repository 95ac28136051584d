#pragma once

#include "conisym/poisson.hpp"
#include "conisym/polynomial.hpp"

#include <vector>

namespace conisym {

// Invertible polynomial substitution in triangular form: the image of x_i is
// c_i * x_i + q_i with c_i != 0 and q_i in the variables strictly before x_i.
class TriangularSubstitution {
public:
    explicit TriangularSubstitution(std::vector<Polynomial> images); // validates shape
    static TriangularSubstitution identity(std::size_t arity);

    std::size_t arity() const { return images_.size(); }
    const Polynomial& image(std::size_t i) const { return images_[i]; }
    std::span<const Polynomial> images() const { return images_; }

    // p(image_0, ..., image_{n-1})
    Polynomial apply(const Polynomial& p) const;

    // Back-substitution; apply(inverse().apply(p)) == p.
    TriangularSubstitution inverse() const;

    // Result r with r.apply(p) == this->apply(next.apply(p)) for all p:
    // first change coordinates by *this, then by next.
    TriangularSubstitution then(const TriangularSubstitution& next) const;

    bool is_identity() const;
    bool operator==(const TriangularSubstitution&) const = default;

private:
    std::vector<Polynomial> images_;
};

// The matrix of the same bracket written in the new coordinates
// y_i = sub.image(i): entry (i,j) is bracket(image_i, image_j) pushed through
// the inverse substitution. Jacobi identities are preserved both ways.
PoissonMatrix transport_poisson(const PoissonMatrix& theta, const TriangularSubstitution& sub);

} // namespace conisym
