#include "conisym/poisson.hpp"

#include <stdexcept>

namespace conisym {

PoissonMatrix::PoissonMatrix(std::size_t size, std::size_t ring_arity)
    : size_(size), ring_arity_(ring_arity),
      entries_(size * size, Polynomial(ring_arity)) {
    if (ring_arity < size)
        throw std::invalid_argument("ring arity must be at least the matrix size");
}

const Polynomial& PoissonMatrix::entry(std::size_t i, std::size_t j) const {
    if (i >= size_ || j >= size_) throw std::out_of_range("matrix index out of range");
    return entries_[i * size_ + j];
}

void PoissonMatrix::set_entry(std::size_t i, std::size_t j, Polynomial value) {
    if (i >= size_ || j >= size_) throw std::out_of_range("matrix index out of range");
    if (i == j) throw std::invalid_argument("diagonal entries are identically zero");
    if (value.arity() != ring_arity_)
        throw std::invalid_argument("entry arity does not match the ring");
    entries_[j * size_ + i] = -value;
    entries_[i * size_ + j] = std::move(value);
}

Polynomial generator_bracket(const PoissonMatrix& theta, std::size_t i, const Polynomial& g) {
    if (g.arity() != theta.ring_arity())
        throw std::invalid_argument("polynomial arity does not match the ring");
    Polynomial out(theta.ring_arity());
    for (std::size_t j = 0; j < theta.size(); ++j) {
        if (j == i) continue;
        const Polynomial& th = theta.entry(i, j);
        if (th.is_zero()) continue;
        Polynomial dg = g.derivative(j);
        if (dg.is_zero()) continue;
        out += dg * th;
    }
    return out;
}

Polynomial bracket(const PoissonMatrix& theta, const Polynomial& f, const Polynomial& g) {
    if (f.arity() != theta.ring_arity() || g.arity() != theta.ring_arity())
        throw std::invalid_argument("polynomial arity does not match the ring");
    Polynomial out(theta.ring_arity());
    std::vector<Polynomial> df, dg;
    df.reserve(theta.size());
    dg.reserve(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        df.push_back(f.derivative(i));
        dg.push_back(g.derivative(i));
    }
    for (std::size_t i = 0; i < theta.size(); ++i)
        for (std::size_t j = i + 1; j < theta.size(); ++j) {
            const Polynomial& th = theta.entry(i, j);
            if (th.is_zero()) continue;
            Polynomial mixed = df[i] * dg[j] - df[j] * dg[i];
            if (mixed.is_zero()) continue;
            out += mixed * th;
        }
    return out;
}

Polynomial jacobiator(const PoissonMatrix& theta, std::size_t i, std::size_t j, std::size_t k) {
    if (i == j || j == k || i == k)
        throw std::invalid_argument("jacobiator needs distinct indices");
    if (i >= theta.size() || j >= theta.size() || k >= theta.size())
        throw std::out_of_range("jacobiator index out of range");
    Polynomial out = generator_bracket(theta, i, theta.entry(j, k));
    out += generator_bracket(theta, j, theta.entry(k, i));
    out += generator_bracket(theta, k, theta.entry(i, j));
    return out;
}

bool jacobi_identity_holds(const PoissonMatrix& theta) {
    for (std::size_t i = 0; i < theta.size(); ++i)
        for (std::size_t j = i + 1; j < theta.size(); ++j)
            for (std::size_t k = j + 1; k < theta.size(); ++k)
                if (!jacobiator(theta, i, j, k).is_zero()) return false;
    return true;
}

namespace {

// Pfaffian of the skew submatrix on `idx`, expanded along the first row:
// alternating signs +,-,+,... over the remaining positions.
Polynomial pfaffian_on(const PoissonMatrix& theta, std::vector<std::size_t> idx) {
    if (idx.empty()) return Polynomial::constant(theta.ring_arity(), 1);
    Polynomial out(theta.ring_arity());
    std::size_t i0 = idx[0];
    for (std::size_t p = 1; p < idx.size(); ++p) {
        const Polynomial& a = theta.entry(i0, idx[p]);
        if (a.is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t q = 1; q < idx.size(); ++q)
            if (q != p) rest.push_back(idx[q]);
        Polynomial sub = pfaffian_on(theta, std::move(rest));
        if (p % 2 == 1)
            out += a * sub;
        else
            out -= a * sub;
    }
    return out;
}

} // namespace

std::vector<Polynomial> pfaffian_vector(const PoissonMatrix& theta) {
    if (theta.size() % 2 == 0)
        throw std::invalid_argument("pfaffian_vector requires an odd matrix size");
    std::vector<Polynomial> out;
    out.reserve(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        std::vector<std::size_t> idx;
        idx.reserve(theta.size() - 1);
        for (std::size_t j = 0; j < theta.size(); ++j)
            if (j != i) idx.push_back(j);
        Polynomial p = pfaffian_on(theta, std::move(idx));
        if (i % 2 == 1) p = -p;
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Polynomial> gradient(const Polynomial& f, std::size_t n_vars) {
    std::vector<Polynomial> g;
    g.reserve(n_vars);
    for (std::size_t i = 0; i < n_vars; ++i) g.push_back(f.derivative(i));
    return g;
}

PfaffianCheck check_pfaffian_condition(const PoissonMatrix& theta, const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("check_pfaffian_condition: f must be nonzero");
    std::vector<Polynomial> pf = pfaffian_vector(theta);
    std::vector<Polynomial> gr = gradient(f, theta.size());

    std::optional<Rational> lambda;
    for (std::size_t i = 0; i < pf.size(); ++i) {
        if (gr[i].is_zero()) continue;
        const Monomial& lead = gr[i].terms().rbegin()->first;
        lambda = pf[i].coefficient(lead) / gr[i].terms().rbegin()->second;
        break;
    }
    if (!lambda) {
        // grad(f) vanishes identically (constant f): no unique scalar exists.
        return PfaffianMismatch{0, pf[0], gr[0]};
    }
    for (std::size_t i = 0; i < pf.size(); ++i) {
        if (pf[i] != gr[i].scaled(*lambda)) return PfaffianMismatch{i, pf[i], gr[i]};
    }
    return *lambda;
}

bool kernel_check(const PoissonMatrix& theta, std::span<const Polynomial> v) {
    if (v.size() != theta.size())
        throw std::invalid_argument("kernel_check: vector length must equal the matrix size");
    for (std::size_t i = 0; i < theta.size(); ++i) {
        Polynomial row(theta.ring_arity());
        for (std::size_t j = 0; j < theta.size(); ++j) {
            if (i == j) continue;
            const Polynomial& th = theta.entry(i, j);
            if (th.is_zero() || v[j].is_zero()) continue;
            row += th * v[j];
        }
        if (!row.is_zero()) return false;
    }
    return true;
}

bool DegreeReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    if (f_check && !f_check->pass) return false;
    return true;
}

DegreeReport check_degree_homogeneity(const PoissonMatrix& theta, const GradingData& grading,
                                      const Polynomial* f) {
    grading.validate();
    if (grading.arity() != theta.ring_arity())
        throw std::invalid_argument("grading arity does not match the ring");
    auto weights = grading.rational_degrees();
    DegreeReport report;
    for (std::size_t i = 0; i < theta.size(); ++i)
        for (std::size_t j = i + 1; j < theta.size(); ++j) {
            const Polynomial& th = theta.entry(i, j);
            if (th.is_zero()) continue;
            Rational want = Rational(grading.degrees[i] + grading.degrees[j] - grading.s);
            auto got = homogeneous_degree(th, weights);
            DegreeReport::Entry e{i, j, false, {}};
            if (auto* deg = std::get_if<Rational>(&got); deg && *deg == want) {
                e.pass = true;
            } else if (auto* nh = std::get_if<NotHomogeneous>(&got)) {
                e.detail = "entry is not homogeneous";
                (void)nh;
            } else {
                e.detail = "expected degree " + to_string(want);
            }
            report.entries.push_back(std::move(e));
        }
    if (f) {
        if (theta.size() % 2 == 0)
            throw std::invalid_argument("f-degree check needs an odd number of generators");
        long m = static_cast<long>((theta.size() - 1) / 2);
        long sum = 0;
        for (std::size_t i = 0; i < theta.size(); ++i) sum += grading.degrees[i];
        Rational want(sum - m * grading.s);
        auto got = homogeneous_degree(*f, weights);
        DegreeReport::Entry e{0, 0, false, "deg f"};
        if (auto* deg = std::get_if<Rational>(&got); deg && *deg == want) e.pass = true;
        report.f_check = std::move(e);
    }
    return report;
}

PoissonMatrix surface_bracket_from_f(const Polynomial& f) {
    if (f.arity() != 3)
        throw std::invalid_argument("surface_bracket_from_f needs a 3-variable polynomial");
    PoissonMatrix theta(3);
    theta.set_entry(0, 1, f.derivative(2));
    theta.set_entry(0, 2, -f.derivative(1));
    theta.set_entry(1, 2, f.derivative(0));
    return theta;
}

} // namespace conisym
