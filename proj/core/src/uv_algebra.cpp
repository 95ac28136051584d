#include "conisym/uv_algebra.hpp"

#include <stdexcept>

namespace conisym {

Polynomial bracket_uv(const Monomial& m1, const Monomial& m2) {
    if (m1.arity() != 2 || m2.arity() != 2)
        throw std::invalid_argument("bracket_uv expects monomials in u, v");
    long a = m1[0], b = m1[1], c = m2[0], d = m2[1];
    long coeff = a * d - b * c;
    if (coeff == 0) return Polynomial::zero(2);
    Monomial m(2);
    m[0] = static_cast<unsigned>(a + c - 1);
    m[1] = static_cast<unsigned>(b + d - 1);
    return Polynomial::term(m, Rational(coeff));
}

namespace {

// reachable[a][b] == true iff u^a v^b is a product of generators
std::vector<std::vector<bool>> reachable_table(const std::vector<Monomial>& gens, unsigned bound) {
    std::vector<std::vector<bool>> table(bound + 1, std::vector<bool>(bound + 1, false));
    table[0][0] = true;
    for (unsigned a = 0; a <= bound; ++a)
        for (unsigned b = 0; b <= bound; ++b) {
            if (!table[a][b]) continue;
            for (const Monomial& g : gens) {
                unsigned na = a + g[0], nb = b + g[1];
                if (na <= bound && nb <= bound) table[na][nb] = true;
            }
        }
    return table;
}

} // namespace

std::optional<ClosureWitness> closure_check(const MonomialSubalgebra& alg, unsigned degree_bound) {
    unsigned max_gen_deg = 0;
    for (const Monomial& g : alg.generators) {
        if (g.arity() != 2) throw std::invalid_argument("generators must live in C[u,v]");
        if (g.total_degree() > max_gen_deg) max_gen_deg = g.total_degree();
    }
    if (degree_bound < max_gen_deg)
        throw std::invalid_argument("degree bound below the largest generator degree");

    // brackets of two degree<=bound monomials reach total degree 2*bound - 2
    unsigned table_bound = 2 * degree_bound;
    auto table = reachable_table(alg.generators, table_bound);

    std::vector<Monomial> members;
    for (unsigned a = 0; a <= degree_bound; ++a)
        for (unsigned b = 0; a + b <= degree_bound; ++b) {
            if (a == 0 && b == 0) continue;
            if (table[a][b]) members.push_back(Monomial{a, b});
        }

    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            Polynomial br = bracket_uv(members[i], members[j]);
            if (br.is_zero()) continue;
            const Monomial& m = br.terms().begin()->first;
            if (!table[m[0]][m[1]])
                return ClosureWitness{members[i], members[j], br};
        }
    return std::nullopt;
}

Rational w_weight_obstruction(unsigned n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    long k = static_cast<long>(n) + 1;
    return Rational(0) + Rational(-k) + Rational(-2 * k) + Rational(-3 * k) + Rational(k);
}

} // namespace conisym
