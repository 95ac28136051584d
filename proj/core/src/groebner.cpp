#include "conisym/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace conisym {

namespace {

struct MonoGreater {
    const TermOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

// Working form: terms keyed descending under the active order, so begin()
// is the leading term.
using OMap = std::map<Monomial, Rational, MonoGreater>;

OMap to_omap(const Polynomial& p, const TermOrder& order) {
    OMap m(MonoGreater{&order});
    for (const auto& [mono, c] : p.terms()) m.emplace(mono, c);
    return m;
}

Polynomial to_poly(const OMap& m, std::size_t arity) {
    Polynomial p(arity);
    for (const auto& [mono, c] : m) p.add_term(mono, c);
    return p;
}

struct Prepared {
    std::vector<std::pair<Monomial, Rational>> terms; // descending
    const Monomial& lm() const { return terms.front().first; }
    const Rational& lc() const { return terms.front().second; }
};

Prepared prepare(const Polynomial& p, const TermOrder& order) {
    Prepared out;
    out.terms.assign(p.terms().begin(), p.terms().end());
    std::sort(out.terms.begin(), out.terms.end(),
              [&](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
    return out;
}

void add_scaled(OMap& acc, const Rational& factor, const Monomial& shift, const Prepared& g) {
    for (const auto& [m, c] : g.terms) {
        Monomial key = m * shift;
        auto [it, inserted] = acc.emplace(key, factor * c);
        if (!inserted) {
            it->second += factor * c;
            if (it->second == 0) acc.erase(it);
        }
    }
}

// Full remainder against prepared divisors; deterministic (first divisor
// whose leading term divides wins).
OMap reduce_full(OMap work, std::span<const Prepared> divisors, const TermOrder& order,
                 const Deadline& deadline) {
    OMap rem(MonoGreater{&order});
    unsigned tick = 0;
    while (!work.empty()) {
        if (++tick % 1024 == 0) deadline.check("polynomial reduction");
        auto it = work.begin();
        const Monomial lead = it->first;
        const Rational coeff = it->second;
        const Prepared* hit = nullptr;
        for (const Prepared& g : divisors) {
            if (g.lm().divides(lead)) {
                hit = &g;
                break;
            }
        }
        if (!hit) {
            rem.emplace(lead, coeff);
            work.erase(it);
            continue;
        }
        add_scaled(work, -coeff / hit->lc(), lead / hit->lm(), *hit);
    }
    return rem;
}

Polynomial monic(const Polynomial& p, const TermOrder& order) {
    if (p.is_zero()) return p;
    const Monomial* lead = nullptr;
    for (const auto& [m, c] : p.terms())
        if (!lead || order.greater(m, *lead)) lead = &m;
    return p.scaled(1 / p.coefficient(*lead));
}

} // namespace

Polynomial primitive_part(const Polynomial& p, const TermOrder& order) {
    if (p.is_zero()) return p;
    Integer den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        Integer den = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    Integer content = 0;
    for (const auto& [m, c] : p.terms()) {
        Integer num = c.get_num() * den_lcm / c.get_den();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    Rational scale(den_lcm, content);
    scale.canonicalize();
    Polynomial out = p.scaled(scale);
    const Monomial* lead = nullptr;
    for (const auto& [m, c] : out.terms())
        if (!lead || order.greater(m, *lead)) lead = &m;
    if (out.coefficient(*lead) < 0) out = -out;
    return out;
}

bool GroebnerBasis::is_unit_ideal() const {
    return gens_.size() == 1 && gens_[0].is_constant() && !gens_[0].is_zero();
}

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> divisors,
                       const TermOrder& order, const Deadline& deadline) {
    std::vector<Prepared> prepared;
    prepared.reserve(divisors.size());
    for (const auto& d : divisors)
        if (!d.is_zero()) prepared.push_back(prepare(d, order));
    return to_poly(reduce_full(to_omap(p, order), prepared, order, deadline), p.arity());
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb, const Deadline& deadline) {
    return normal_form(p, gb.generators(), gb.order(), deadline);
}

namespace {

struct PairKey {
    Monomial lcm;
    std::size_t i, j;
};

struct PairLess {
    const TermOrder* order;
    bool operator()(const PairKey& a, const PairKey& b) const {
        int c = order->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

// Mutual reduction until stable; drops zeros, keeps primitive parts.
void autoreduce(std::vector<Polynomial>& gens, const TermOrder& order, const Deadline& deadline) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(gens.size() - 1);
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            Polynomial r = normal_form(gens[i], others, order, deadline);
            if (!r.is_zero()) r = primitive_part(r, order);
            if (r != gens[i]) {
                changed = true;
                if (r.is_zero()) {
                    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
                    --i;
                } else {
                    gens[i] = std::move(r);
                }
            }
        }
    }
}

} // namespace

GroebnerBasis buchberger(std::vector<Polynomial> generators, TermOrder order,
                         const Deadline& deadline) {
    std::size_t arity = order.arity();
    for (const auto& g : generators)
        if (g.arity() != arity)
            throw std::invalid_argument("generator arity does not match the term order");

    std::vector<Polynomial> basis;
    for (auto& g : generators)
        if (!g.is_zero()) basis.push_back(primitive_part(g, order));
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(prepare(a, order).lm(), prepare(b, order).lm());
    });
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    autoreduce(basis, order, deadline);

    std::vector<Prepared> prepared;
    prepared.reserve(basis.size());
    for (const auto& g : basis) prepared.push_back(prepare(g, order));

    std::set<PairKey, PairLess> pending{PairLess{&order}};
    auto push_pair = [&](std::size_t i, std::size_t j) {
        pending.insert(PairKey{lcm(prepared[i].lm(), prepared[j].lm()), i, j});
    };
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

    auto pair_pending = [&](std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        PairKey probe{lcm(prepared[i].lm(), prepared[j].lm()), i, j};
        return pending.find(probe) != pending.end();
    };

    while (!pending.empty()) {
        deadline.check("buchberger");
        PairKey top = *pending.begin();
        pending.erase(pending.begin());
        const Prepared& f = prepared[top.i];
        const Prepared& g = prepared[top.j];

        if (coprime(f.lm(), g.lm())) continue;

        // chain criterion
        bool skip = false;
        for (std::size_t k = 0; k < prepared.size() && !skip; ++k) {
            if (k == top.i || k == top.j) continue;
            if (prepared[k].lm().divides(top.lcm) && !pair_pending(top.i, k) &&
                !pair_pending(top.j, k))
                skip = true;
        }
        if (skip) continue;

        OMap s(MonoGreater{&order});
        add_scaled(s, 1 / f.lc(), top.lcm / f.lm(), f);
        add_scaled(s, -1 / g.lc(), top.lcm / g.lm(), g);
        OMap r = reduce_full(std::move(s), prepared, order, deadline);
        if (r.empty()) continue;

        Polynomial h = primitive_part(to_poly(r, arity), order);
        basis.push_back(h);
        prepared.push_back(prepare(h, order));
        std::size_t idx = basis.size() - 1;
        for (std::size_t i = 0; i < idx; ++i) push_pair(i, idx);
    }

    // minimal basis: drop generators whose leading term another one divides
    std::vector<std::size_t> by_lm(basis.size());
    for (std::size_t i = 0; i < by_lm.size(); ++i) by_lm[i] = i;
    std::sort(by_lm.begin(), by_lm.end(), [&](std::size_t a, std::size_t b) {
        int c = order.compare(prepared[a].lm(), prepared[b].lm());
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<std::size_t> kept;
    for (std::size_t idx : by_lm) {
        bool divisible = false;
        for (std::size_t k : kept)
            if (prepared[k].lm().divides(prepared[idx].lm())) {
                divisible = true;
                break;
            }
        if (!divisible) kept.push_back(idx);
    }

    // full tail reduction of each kept generator against the others
    std::vector<Polynomial> reduced;
    reduced.reserve(kept.size());
    for (std::size_t pos = 0; pos < kept.size(); ++pos) {
        std::vector<Polynomial> others;
        others.reserve(kept.size() - 1);
        for (std::size_t q = 0; q < kept.size(); ++q)
            if (q != pos) others.push_back(basis[kept[q]]);
        Polynomial r = normal_form(basis[kept[pos]], others, order, deadline);
        reduced.push_back(monic(r, order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(prepare(a, order).lm(), prepare(b, order).lm());
    });
    return GroebnerBasis(std::move(order), std::move(reduced));
}

bool ideal_membership(const Polynomial& p, std::span<const Polynomial> generators,
                      const TermOrder& order, const Deadline& deadline) {
    if (p.is_zero()) return true;
    GroebnerBasis gb = buchberger({generators.begin(), generators.end()}, order, deadline);
    return normal_form(p, gb, deadline).is_zero();
}

bool radical_membership(const Polynomial& p, std::span<const Polynomial> generators,
                        const TermOrder& order, const Deadline& deadline) {
    if (p.is_zero()) return true;
    std::size_t arity = order.arity();
    std::vector<Polynomial> ext;
    ext.reserve(generators.size() + 1);
    for (const auto& g : generators) ext.push_back(g.extended(arity + 1));
    // 1 - t*p
    Polynomial tp = p.extended(arity + 1) * Polynomial::variable(arity + 1, arity);
    ext.push_back(Polynomial::constant(arity + 1, 1) - tp);
    GroebnerBasis gb = buchberger(std::move(ext), TermOrder::grevlex(arity + 1), deadline);
    return gb.is_unit_ideal();
}

GroebnerBasis saturate(std::span<const Polynomial> generators, const Polynomial& q,
                       const TermOrder& order, const Deadline& deadline) {
    if (q.is_zero()) throw std::invalid_argument("saturate: q must be nonzero");
    std::size_t arity = order.arity();

    std::vector<Polynomial> ext;
    ext.reserve(generators.size() + 1);
    for (const auto& g : generators) ext.push_back(g.extended(arity + 1));
    Polynomial tq = q.extended(arity + 1) * Polynomial::variable(arity + 1, arity);
    ext.push_back(tq - Polynomial::constant(arity + 1, 1));

    std::vector<std::size_t> perm = order.permutation();
    perm.push_back(arity);
    TermOrder base = order.kind() == TermOrder::Kind::Lex ? TermOrder::lex(std::move(perm))
                                                          : TermOrder::grevlex(std::move(perm));
    TermOrder elim = TermOrder::eliminate_first(arity, base);

    GroebnerBasis gb = buchberger(std::move(ext), std::move(elim), deadline);
    std::vector<Polynomial> kept;
    for (const auto& g : gb.generators()) {
        bool uses_t = false;
        for (const auto& [m, c] : g.terms())
            if (m[arity] != 0) {
                uses_t = true;
                break;
            }
        if (!uses_t) kept.push_back(g.truncated(arity));
    }
    return buchberger(std::move(kept), order, deadline);
}

std::vector<Polynomial> eliminate(std::span<const Polynomial> generators,
                                  std::span<const std::size_t> keep_vars,
                                  const Deadline& deadline) {
    if (generators.empty()) return {};
    std::size_t arity = generators[0].arity();
    std::vector<bool> keep(arity, false);
    for (std::size_t v : keep_vars) {
        if (v >= arity) throw std::invalid_argument("eliminate: variable index out of range");
        keep[v] = true;
    }
    std::vector<std::size_t> perm;
    for (std::size_t v = 0; v < arity; ++v)
        if (!keep[v]) perm.push_back(v);
    for (std::size_t v = 0; v < arity; ++v)
        if (keep[v]) perm.push_back(v);

    GroebnerBasis gb =
        buchberger({generators.begin(), generators.end()}, TermOrder::lex(std::move(perm)),
                   deadline);
    std::vector<Polynomial> out;
    for (const auto& g : gb.generators()) {
        bool ok = true;
        for (const auto& [m, c] : g.terms())
            for (std::size_t v = 0; v < arity && ok; ++v)
                if (!keep[v] && m[v] != 0) ok = false;
        if (ok) out.push_back(g);
    }
    return out;
}

} // namespace conisym
