#include "conisym/catalog.hpp"

#include "conisym/poly_io.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace conisym {

namespace {

Polynomial var3(std::size_t i) { return Polynomial::variable(3, i); }

Monomial mono(std::size_t arity, std::initializer_list<std::pair<std::size_t, unsigned>> factors) {
    Monomial m(arity);
    for (auto [v, e] : factors) m[v] += e;
    return m;
}

} // namespace

std::string surface_kind_name(SurfaceKind kind) {
    switch (kind) {
    case SurfaceKind::Smooth: return "smooth";
    case SurfaceKind::A: return "A";
    case SurfaceKind::D: return "D";
    case SurfaceKind::E6: return "E6";
    case SurfaceKind::E7: return "E7";
    case SurfaceKind::E8: return "E8";
    }
    throw std::logic_error("unknown surface kind");
}

SurfaceFamily SurfaceFamily::standard(SurfaceKind kind, unsigned n) {
    switch (kind) {
    case SurfaceKind::Smooth: return {kind, 0, 5, {2, 3, 5}};
    case SurfaceKind::A:
        if (n < 1) throw std::invalid_argument("A family needs n >= 1");
        return {kind, n, 1, {1, 1, static_cast<long>(n)}};
    case SurfaceKind::D:
        if (n < 4) throw std::invalid_argument("D family needs n >= 4");
        return {kind, n, 1, {2, static_cast<long>(n) - 2, static_cast<long>(n) - 1}};
    case SurfaceKind::E6: return {kind, 0, 1, {3, 4, 6}};
    case SurfaceKind::E7: return {kind, 0, 1, {4, 6, 9}};
    case SurfaceKind::E8: return {kind, 0, 1, {6, 10, 15}};
    }
    throw std::logic_error("unknown surface kind");
}

void SurfaceFamily::validate() const {
    if (s <= 0 || d[0] <= 0 || d[1] <= 0 || d[2] <= 0)
        throw std::invalid_argument("weights must be positive");
    auto require = [&](bool ok, const char* what) {
        if (!ok)
            throw std::invalid_argument("illegal weights for " + surface_kind_name(kind) +
                                        " family: " + what);
    };
    switch (kind) {
    case SurfaceKind::Smooth:
        require(std::gcd(d[0], d[1]) == 1, "d1, d2 must be coprime");
        require(d[0] + d[1] == s, "d1 + d2 = s");
        break;
    case SurfaceKind::A:
        require(n >= 1, "n >= 1");
        require(d[0] == s, "d1 = s");
        require(static_cast<long>(n + 1) * d[0] == d[1] + d[2], "(n+1)d1 = d2 + d3");
        require(std::gcd(std::gcd(d[0], d[1]), d[2]) == 1, "degrees must be coprime");
        break;
    case SurfaceKind::D:
        require(n >= 4, "n >= 4");
        require(s == 1 && d[0] == 2 && d[1] == static_cast<long>(n) - 2 &&
                    d[2] == static_cast<long>(n) - 1,
                "(s,d) = (1,2,n-2,n-1)");
        break;
    case SurfaceKind::E6:
        require(s == 1 && d == std::array<long, 3>{3, 4, 6}, "(s,d) = (1,3,4,6)");
        break;
    case SurfaceKind::E7:
        require(s == 1 && d == std::array<long, 3>{4, 6, 9}, "(s,d) = (1,4,6,9)");
        break;
    case SurfaceKind::E8:
        require(s == 1 && d == std::array<long, 3>{6, 10, 15}, "(s,d) = (1,6,10,15)");
        break;
    }
}

Surface make_surface(const SurfaceFamily& family) {
    family.validate();
    Polynomial x = var3(0), y = var3(1), z = var3(2);
    Polynomial f(3);
    switch (family.kind) {
    case SurfaceKind::Smooth: f = z; break;
    case SurfaceKind::A: f = x.pow(family.n + 1) + y * z; break;
    case SurfaceKind::D: f = x.pow(family.n - 1) + x * y * y + z * z; break;
    case SurfaceKind::E6: f = x.pow(4) + y.pow(3) + z * z; break;
    case SurfaceKind::E7: f = x.pow(3) * y + y.pow(3) + z * z; break;
    case SurfaceKind::E8: f = x.pow(5) + y.pow(3) + z * z; break;
    }
    Surface out{{"x", "y", "z"}, f, surface_bracket_from_f(f),
                GradingData{family.s, {family.d[0], family.d[1], family.d[2]}, std::nullopt}};
    return out;
}

Report verify_surface(const SurfaceFamily& family, const Deadline& deadline) {
    Surface surf = make_surface(family);
    std::string job = surface_kind_name(family.kind);
    if (family.kind == SurfaceKind::A || family.kind == SurfaceKind::D)
        job += std::to_string(family.n);
    Report report{"surface-" + job, {}};

    report.add("jacobi-identity", jacobiator(surf.theta, 0, 1, 2).is_zero());

    DegreeReport deg = check_degree_homogeneity(surf.theta, surf.grading, &surf.f);
    bool entries_ok = true;
    for (const auto& e : deg.entries) entries_ok = entries_ok && e.pass;
    report.add("entry-degrees", entries_ok);
    report.add("f-degree", deg.f_check && deg.f_check->pass);

    if (family.kind != SurfaceKind::Smooth) {
        std::vector<Polynomial> jac = gradient(surf.f, 3);
        TermOrder order = TermOrder::grevlex(3);
        for (std::size_t v = 0; v < 3; ++v) {
            bool in_radical =
                radical_membership(Polynomial::variable(3, v), jac, order, deadline);
            report.add("radical-contains-" + surf.vars[v], in_radical);
        }
    }
    return report;
}

Polynomial slice_delta(unsigned arity) {
    if (arity < 3) throw std::invalid_argument("slice_delta needs x, h, y");
    Polynomial out(arity);
    out.add_term(mono(arity, {{1, 2}}), 1);          // h^2
    out.add_term(mono(arity, {{0, 1}, {2, 1}}), 4);  // 4xy
    return out;
}

SliceXn make_xn(unsigned n, long s, long t) {
    if (n < 2) throw std::invalid_argument("make_xn needs n >= 2");
    if (t < 0 || 2 * t >= s) throw std::invalid_argument("make_xn needs 0 <= t < s/2");
    long twice_high = (2 * static_cast<long>(n) - 1) * s; // 2 * d_{e0,e1} -+ 2t
    if ((twice_high - 2 * t) % 2 != 0)
        throw std::invalid_argument("non-integral degrees: scale s (s must be even)");

    SliceXn slice;
    slice.n = n;
    slice.s = s;
    slice.t = t;
    slice.vars = {"x", "h", "y", "e0", "e1"};

    Polynomial x = Polynomial::variable(5, 0), h = Polynomial::variable(5, 1),
               y = Polynomial::variable(5, 2), e0 = Polynomial::variable(5, 3),
               e1 = Polynomial::variable(5, 4);
    Polynomial delta = slice_delta(5);
    slice.f = -(y * e0 * e0) + h * e0 * e1 + x * e1 * e1 + delta.pow(n);

    PoissonMatrix theta(5);
    theta.set_entry(0, 1, (-2) * x);
    theta.set_entry(0, 2, h);
    theta.set_entry(0, 4, e0);
    theta.set_entry(1, 2, (-2) * y);
    theta.set_entry(1, 3, e0);
    theta.set_entry(1, 4, -e1);
    theta.set_entry(2, 3, e1);
    theta.set_entry(3, 4, Rational(2 * static_cast<long>(n)) * delta.pow(n - 1));
    slice.theta = std::move(theta);

    slice.grading.s = s;
    slice.grading.degrees = {s - 2 * t, s, s + 2 * t, (twice_high - 2 * t) / 2,
                             (twice_high + 2 * t) / 2};
    slice.grading.w = std::vector<Rational>{Rational(2), Rational(0), Rational(-2), Rational(1),
                                            Rational(-1)};
    return slice;
}

namespace {

// The reconstructed five-variable matrix with symbolic constants: ring
// (z1..z5, c1, c2, kappa), entries as displayed for the surface exponent
// k = 1, so delta = z1^2/2 + z2 z3.
PoissonMatrix symbolic_slice_matrix(unsigned n) {
    const std::size_t arity = 8;
    const std::size_t c1 = 5, c2 = 6, kappa = 7;
    PoissonMatrix theta(5, arity);
    auto zvar = [&](std::size_t i) { return Polynomial::variable(arity, i); };
    Polynomial delta(arity);
    delta.add_term(mono(arity, {{0, 2}}), Rational(1, 2));
    delta.add_term(mono(arity, {{1, 1}, {2, 1}}), 1);

    theta.set_entry(0, 1, zvar(1));
    theta.set_entry(0, 2, -zvar(2));
    theta.set_entry(0, 3, Rational(1, 2) * zvar(3));
    theta.set_entry(0, 4, Rational(-1, 2) * zvar(4));
    theta.set_entry(1, 2, zvar(0));
    theta.set_entry(1, 4, zvar(c1) * zvar(3));
    theta.set_entry(2, 3, zvar(c2) * zvar(4));
    theta.set_entry(3, 4, Rational(n) * zvar(kappa) * delta.pow(n - 1));
    return theta;
}

} // namespace

Report verify_xn(const SliceXn& slice, const Deadline& deadline) {
    Report report{"xn-n" + std::to_string(slice.n) + "-s" + std::to_string(slice.s) + "-t" +
                      std::to_string(slice.t),
                  {}};

    bool jacobi = true;
    for (std::size_t i = 0; i < 5 && jacobi; ++i)
        for (std::size_t j = i + 1; j < 5 && jacobi; ++j)
            for (std::size_t k = j + 1; k < 5 && jacobi; ++k)
                jacobi = jacobiator(slice.theta, i, j, k).is_zero();
    report.add("jacobi-identity", jacobi);

    PfaffianCheck pf = check_pfaffian_condition(slice.theta, slice.f);
    if (auto* lambda = std::get_if<Rational>(&pf)) {
        report.add("pfaffian-condition", *lambda != 0, "lambda = " + to_string(*lambda));
    } else {
        auto& mism = std::get<PfaffianMismatch>(pf);
        report.add("pfaffian-condition", false,
                   "mismatch at component " + std::to_string(mism.component + 1));
    }

    DegreeReport deg = check_degree_homogeneity(slice.theta, slice.grading, &slice.f);
    report.add("degree-homogeneity", deg.all_pass());

    report.add("gradient-in-kernel", kernel_check(slice.theta, gradient(slice.f, 5)));

    // symbolic reconstruction: all ten Jacobiators vanish modulo (c1 c2 - 1/2)
    PoissonMatrix sym = symbolic_slice_matrix(slice.n);
    Polynomial relation(8);
    relation.add_term(mono(8, {{5, 1}, {6, 1}}), 1);
    relation.add_term(Monomial(8), Rational(-1, 2));
    GroebnerBasis rel_gb = buchberger({relation}, TermOrder::grevlex(8), deadline);
    bool symbolic_ok = true;
    for (std::size_t i = 0; i < 5 && symbolic_ok; ++i)
        for (std::size_t j = i + 1; j < 5 && symbolic_ok; ++j)
            for (std::size_t k = j + 1; k < 5 && symbolic_ok; ++k)
                symbolic_ok = normal_form(jacobiator(sym, i, j, k), rel_gb, deadline).is_zero();
    report.add("symbolic-matrix-jacobi-mod-c1c2", symbolic_ok);

    return report;
}

std::vector<DegreeTuple> enumerate_degree_tuples(long s, long a_max) {
    if (s <= 0) throw std::invalid_argument("s must be positive");
    std::vector<DegreeTuple> out;
    auto push = [&](int case_tag, long a, std::array<long, 5> d) {
        std::sort(d.begin(), d.end());
        DegreeTuple t{s, a, case_tag, d, d, false};
        long g = 0;
        for (long v : d) g = std::gcd(g, v);
        for (long& v : t.d) v /= g;
        t.exceptional = case_tag == 1 && a == 3 * s;
        out.push_back(t);
    };
    for (long a = 2 * s; a <= a_max; ++a)
        push(1, a, {a, 2 * a - 2 * s, 2 * a - s, 3 * a - 3 * s, 4 * a - 4 * s});
    for (long a = 2 * s; a <= std::min(3 * s, a_max); ++a)
        push(2, a, {2 * s, a, 3 * s, a + s, a + 2 * s});
    for (long a = 3 * s; a <= a_max; ++a)
        push(3, a, {2 * s, 3 * s, a, a + s, a + 2 * s});
    return out;
}

// ---------------------------------------------------------------------------
// exceptional ansatz

namespace {

constexpr std::size_t kAnsatzArity = 5 + kAnsatzParams;

// a-parameters are 1-based in names: a(1) is ring variable 5.
std::size_t avar(unsigned index) { return 4 + index; }

Polynomial aterm(unsigned a_index, std::initializer_list<std::pair<std::size_t, unsigned>> xs) {
    Monomial m(kAnsatzArity);
    m[avar(a_index)] = 1;
    for (auto [v, e] : xs) m[v] += e;
    return Polynomial::term(m, 1);
}

Polynomial xterm(std::initializer_list<std::pair<std::size_t, unsigned>> xs) {
    return Polynomial::term(mono(kAnsatzArity, xs), 1);
}

} // namespace

std::vector<std::string> ansatz_var_names() {
    std::vector<std::string> names;
    for (unsigned i = 1; i <= 5; ++i) names.push_back("x" + std::to_string(i));
    for (unsigned i = 1; i <= kAnsatzParams; ++i) names.push_back("a" + std::to_string(i));
    return names;
}

PoissonMatrix ansatz27() {
    PoissonMatrix theta(5, kAnsatzArity);
    theta.set_entry(0, 1, xterm({{3, 1}}));
    theta.set_entry(0, 2, aterm(1, {{0, 1}, {1, 1}}));
    theta.set_entry(0, 3, xterm({{4, 1}}));
    theta.set_entry(0, 4, aterm(2, {{0, 2}, {1, 1}}) + aterm(3, {{1, 1}, {3, 1}}) +
                              aterm(4, {{2, 2}}));
    theta.set_entry(1, 2, xterm({{4, 1}}) + aterm(5, {{0, 1}, {2, 1}}) + aterm(6, {{1, 2}}));
    theta.set_entry(1, 3, aterm(7, {{0, 1}, {3, 1}}) + aterm(8, {{1, 1}, {2, 1}}) +
                              aterm(9, {{0, 3}}));
    theta.set_entry(1, 4, aterm(10, {{0, 1}, {4, 1}}) + aterm(11, {{2, 1}, {3, 1}}) +
                              aterm(12, {{0, 2}, {2, 1}}) + aterm(13, {{0, 1}, {1, 2}}));
    theta.set_entry(2, 3, aterm(14, {{0, 2}, {1, 1}}) + aterm(15, {{2, 2}}) +
                              aterm(16, {{1, 1}, {3, 1}}));
    theta.set_entry(2, 4, aterm(17, {{1, 1}, {4, 1}}) + aterm(18, {{3, 2}}) +
                              aterm(19, {{0, 2}, {3, 1}}) + aterm(20, {{0, 1}, {1, 1}, {2, 1}}) +
                              aterm(21, {{1, 3}}) + aterm(22, {{0, 4}}));
    theta.set_entry(3, 4, aterm(23, {{2, 1}, {4, 1}}) + aterm(24, {{0, 1}, {1, 1}, {3, 1}}) +
                              aterm(25, {{0, 1}, {2, 2}}) + aterm(26, {{1, 2}, {2, 1}}) +
                              aterm(27, {{0, 3}, {1, 1}}));
    return theta;
}

std::vector<Monomial> ansatz_x_monomials_of_degree(long degree) {
    std::vector<Monomial> out;
    Monomial m(kAnsatzArity);
    // bounded search over exponents of x1..x5
    auto rec = [&](auto&& self, std::size_t var, long remaining) -> void {
        if (var == 5) {
            if (remaining == 0) out.push_back(m);
            return;
        }
        long w = kAnsatzDegrees[var];
        for (long e = 0; e * w <= remaining; ++e) {
            m[var] = static_cast<unsigned>(e);
            self(self, var + 1, remaining - e * w);
        }
        m[var] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return cmp_paper_order(a, b) < 0; });
    return out;
}

std::vector<Polynomial> ansatz_jacobi_coefficients() {
    PoissonMatrix theta = ansatz27();
    std::vector<Polynomial> coeffs;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            for (std::size_t k = j + 1; k < 5; ++k) {
                Polynomial J = jacobiator(theta, i, j, k);
                // group terms by their x-part; each group's coefficient is a
                // polynomial in a1..a27
                std::map<Monomial, Polynomial, PaperOrderLess> groups;
                for (const auto& [m, c] : J.terms()) {
                    Monomial xpart(5), apart(kAnsatzParams);
                    for (std::size_t v = 0; v < 5; ++v) xpart[v] = m[v];
                    for (std::size_t v = 0; v < kAnsatzParams; ++v) apart[v] = m[5 + v];
                    auto [it, inserted] = groups.emplace(xpart, Polynomial(kAnsatzParams));
                    it->second.add_term(apart, c);
                }
                for (auto& [xm, poly] : groups) {
                    if (poly.is_zero()) continue;
                    std::string key = format_polynomial(poly, default_var_names(kAnsatzParams));
                    if (seen.insert(key).second) coeffs.push_back(poly);
                }
            }
    return coeffs;
}

std::vector<Polynomial> exceptional_component_ideal() {
    auto a = [](unsigned i) { return Polynomial::variable(kAnsatzParams, i - 1); };
    auto amono = [](unsigned i, unsigned e) {
        return Polynomial::term(Monomial::variable(kAnsatzParams, i - 1, e), 1);
    };
    std::vector<Polynomial> gens;
    for (unsigned i : {1u, 2u, 3u, 6u, 12u, 13u, 14u, 16u, 17u, 18u, 19u, 20u, 21u, 22u, 24u,
                       26u, 27u})
        gens.push_back(a(i));
    gens.push_back(a(5) - 4 * a(4));
    gens.push_back(a(7) + 2 * a(4));
    gens.push_back(a(8) - 4 * a(4));
    gens.push_back(a(10) + 2 * a(4));
    gens.push_back(a(11) - 4 * a(4));
    gens.push_back(a(15) + a(4));
    gens.push_back(a(23) - 2 * a(4));
    gens.push_back(a(9) + 40 * amono(4, 2));
    gens.push_back(a(25) + 10 * amono(4, 2));
    return gens;
}

std::vector<Polynomial> exceptional_component_parametrization() {
    Polynomial t = Polynomial::variable(1, 0);
    Polynomial t2 = t * t;
    std::vector<Polynomial> images(kAnsatzParams, Polynomial::zero(1));
    images[4 - 1] = t;
    images[5 - 1] = 4 * t;
    images[7 - 1] = (-2) * t;
    images[8 - 1] = 4 * t;
    images[9 - 1] = (-40) * t2;
    images[10 - 1] = (-2) * t;
    images[11 - 1] = 4 * t;
    images[15 - 1] = -t;
    images[23 - 1] = 2 * t;
    images[25 - 1] = (-10) * t2;
    return images;
}

GroebnerBasis exceptional_saturated_basis(TermOrder::Kind kind, const Deadline& deadline) {
    std::vector<Polynomial> gens = ansatz_jacobi_coefficients();
    TermOrder order = kind == TermOrder::Kind::Lex ? TermOrder::lex(kAnsatzParams)
                                                   : TermOrder::grevlex(kAnsatzParams);
    Polynomial q = Polynomial::variable(kAnsatzParams, 3) * Polynomial::variable(kAnsatzParams, 14);
    return saturate(gens, q, order, deadline);
}

Report exceptional_case_elimination(TermOrder::Kind kind, const Deadline& deadline) {
    Report report{"eliminate-exceptional", {}};
    PoissonMatrix theta = ansatz27();

    // every entry is homogeneous of degree d_i + d_j - 1 under (3,4,5,6,8)
    std::vector<Rational> weights(kAnsatzArity, Rational(0));
    for (std::size_t v = 0; v < 5; ++v) weights[v] = Rational(kAnsatzDegrees[v]);
    bool degrees_ok = true;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) {
            const Polynomial& e = theta.entry(i, j);
            if (e.is_zero()) continue;
            degrees_ok = degrees_ok &&
                         is_homogeneous_of_degree(
                             e, weights, Rational(kAnsatzDegrees[i] + kAnsatzDegrees[j] - 1));
        }
    report.add("ansatz-degree-homogeneous", degrees_ok);

    // free entries carry the full monomial basis of the right degree
    bool full_basis = true;
    for (std::size_t i = 0; i < 5 && full_basis; ++i)
        for (std::size_t j = i + 1; j < 5 && full_basis; ++j) {
            if ((i == 0 && j == 1) || (i == 0 && j == 3)) continue; // normalized to x4, x5
            auto expected = ansatz_x_monomials_of_degree(kAnsatzDegrees[i] + kAnsatzDegrees[j] - 1);
            for (const Monomial& xm : expected) {
                bool found = false;
                for (const auto& [m, c] : theta.entry(i, j).terms()) {
                    Monomial stripped = m;
                    for (std::size_t v = 5; v < kAnsatzArity; ++v) stripped[v] = 0;
                    if (stripped == xm) found = true;
                }
                full_basis = full_basis && found;
            }
        }
    report.add("ansatz-full-monomial-basis", full_basis);

    std::array<unsigned, 1> pow5{1};
    std::array<unsigned, 2> pow4{1, 2};
    report.add("condition-star-x5", check_condition_star(theta, 4, pow5));
    report.add("condition-star-x4", check_condition_star(theta, 3, pow4));

    std::vector<Polynomial> coeffs = ansatz_jacobi_coefficients();
    std::vector<Polynomial> component = exceptional_component_ideal();

    // the component parametrization must kill every coefficient identically
    std::vector<Polynomial> param = exceptional_component_parametrization();
    bool solves = true;
    for (const Polynomial& c : coeffs)
        solves = solves && c.substitute(param).is_zero();
    report.add("component-parametrization-solves-system", solves);

    GroebnerBasis sat = exceptional_saturated_basis(kind, deadline);

    bool contains = true;
    std::string contains_witness;
    for (const Polynomial& g : component)
        if (!normal_form(g, sat, deadline).is_zero()) {
            contains = false;
            contains_witness = format_polynomial(g, default_var_names(kAnsatzParams));
            break;
        }
    report.add("saturation-contains-component-ideal", contains, contains_witness);

    GroebnerBasis comp_gb = buchberger(component, sat.order(), deadline);
    bool inside = true;
    std::string inside_witness;
    for (const Polynomial& g : sat.generators())
        if (!normal_form(g, comp_gb, deadline).is_zero()) {
            inside = false;
            inside_witness = format_polynomial(g, default_var_names(kAnsatzParams));
            break;
        }
    report.add("saturation-inside-component-ideal", inside, inside_witness);

    Polynomial a4a15 =
        Polynomial::variable(kAnsatzParams, 3) * Polynomial::variable(kAnsatzParams, 14);
    report.add("component-not-in-a4a15-locus", !normal_form(a4a15, sat, deadline).is_zero());

    report.add("a18-vanishes-on-component",
               normal_form(Polynomial::variable(kAnsatzParams, 17), sat, deadline).is_zero());

    return report;
}

bool check_condition_star(const PoissonMatrix& theta, std::size_t var_index,
                          std::span<const unsigned> powers) {
    if (theta.size() != 5) throw std::invalid_argument("condition (*) is defined for 5 generators");
    if (var_index != 3 && var_index != 4)
        throw std::invalid_argument("condition (*) applies to the 4th or 5th variable");

    std::array<std::size_t, 4> rest{};
    std::size_t pos = 0;
    for (std::size_t v = 0; v < 5; ++v)
        if (v != var_index) rest[pos++] = v;

    auto contains_pure_power = [&](std::size_t i, std::size_t j, unsigned power) {
        Monomial m = Monomial::variable(theta.ring_arity(), var_index, power);
        return theta.entry(i, j).contains_monomial(m);
    };

    // the three ways to split the remaining four indices into two pairs
    constexpr std::array<std::array<std::size_t, 4>, 3> splits{
        {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
    for (const auto& sp : splits) {
        std::size_t i1 = rest[sp[0]], i2 = rest[sp[1]], i3 = rest[sp[2]], i4 = rest[sp[3]];
        for (unsigned l : powers) {
            if (contains_pure_power(i1, i2, 1) && contains_pure_power(i3, i4, l)) return true;
            if (contains_pure_power(i3, i4, 1) && contains_pure_power(i1, i2, l)) return true;
        }
    }
    return false;
}

} // namespace conisym
