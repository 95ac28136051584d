#include "conisym/orbifold.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace conisym {

long stabilizer_order(std::span<const std::size_t> support, std::span<const long> degrees) {
    if (support.empty()) throw std::invalid_argument("stabilizer_order: empty support");
    long g = 0;
    for (std::size_t v : support) {
        if (v >= degrees.size()) throw std::out_of_range("support index out of range");
        g = std::gcd(g, degrees[v]);
    }
    return g;
}

namespace {

RamificationDatum datum(std::string point, std::initializer_list<std::size_t> support,
                        std::span<const long> degrees, long d) {
    std::vector<std::size_t> sup(support);
    long stab = stabilizer_order(sup, degrees);
    return {std::move(point), stab, stab / d};
}

} // namespace

std::vector<RamificationDatum> ramification_data(const SurfaceFamily& family) {
    family.validate();
    std::array<long, 3> deg = family.d;
    std::vector<RamificationDatum> out;
    switch (family.kind) {
    case SurfaceKind::Smooth: {
        // the surface is the (x, y)-plane; z is not a coordinate on it
        long d = std::gcd(deg[0], deg[1]);
        for (auto&& r : {datum("[1:0:0]", {0}, deg, d), datum("[0:1:0]", {1}, deg, d)})
            if (r.index > 1) out.push_back(r);
        break;
    }
    case SurfaceKind::A: {
        long d = std::gcd(std::gcd(deg[0], deg[1]), deg[2]);
        for (auto&& r : {datum("[0:1:0]", {1}, deg, d), datum("[0:0:1]", {2}, deg, d)})
            if (r.index > 1) out.push_back(r);
        break;
    }
    case SurfaceKind::D: {
        long d = std::gcd(std::gcd(deg[0], deg[1]), deg[2]);
        out.push_back(datum("[0:1:0]", {1}, deg, d));
        if (family.n % 2 == 0) {
            out.push_back(datum("[1:i:0]", {0, 1}, deg, d));
            out.push_back(datum("[1:-i:0]", {0, 1}, deg, d));
        } else {
            out.push_back(datum("[1:0:i]", {0, 2}, deg, d));
            out.push_back(datum("[1:0:-i]", {0, 2}, deg, d));
        }
        break;
    }
    case SurfaceKind::E6:
        out.push_back(datum("[0:1:i]", {1, 2}, deg, 1));
        out.push_back(datum("[1:0:i]", {0, 2}, deg, 1));
        out.push_back(datum("[1:0:-i]", {0, 2}, deg, 1));
        break;
    case SurfaceKind::E7:
        out.push_back(datum("[1:-1:0]", {0, 1}, deg, 1));
        out.push_back(datum("[0:1:i]", {1, 2}, deg, 1));
        out.push_back(datum("[1:0:0]", {0}, deg, 1));
        break;
    case SurfaceKind::E8:
        out.push_back(datum("[1:w:0]", {0, 1}, deg, 1));
        out.push_back(datum("[1:0:i]", {0, 2}, deg, 1));
        out.push_back(datum("[0:1:i]", {1, 2}, deg, 1));
        break;
    }
    return out;
}

std::vector<OrbifoldTuple> fano_tuples(long e_max) {
    if (e_max < 2) throw std::invalid_argument("fano_tuples needs e_max >= 2");
    std::vector<OrbifoldTuple> out;
    out.push_back({});
    for (long a = 2; a <= e_max; ++a) out.push_back({{a}});
    for (long a = 2; a <= e_max; ++a)
        for (long b = a; b <= e_max; ++b) out.push_back({{a, b}});
    for (long a = 2; a <= e_max; ++a)
        for (long b = a; b <= e_max; ++b)
            for (long c = b; c <= e_max; ++c) {
                // 1/a + 1/b + 1/c > 1, cleared to integers
                if (b * c + a * c + a * b > a * b * c) out.push_back({{a, b, c}});
            }
    return out;
}

Rational deg_canonical(const OrbifoldTuple& tuple) {
    Rational deg(-2);
    for (long e : tuple.e) {
        if (e < 2) throw std::invalid_argument("ramification indices must be at least 2");
        deg += Rational(1) - Rational(1, e);
    }
    return deg;
}

long tau_power(long tau, long m) {
    if (tau < 1 || m < 1) throw std::invalid_argument("tau_power needs positive arguments");
    return tau / std::gcd(m, tau);
}

std::vector<RootSolution> taut_bundle_solutions(const OrbifoldTuple& tuple) {
    const std::size_t r = tuple.e.size();
    long lcm_e = 1;
    for (long e : tuple.e) lcm_e = std::lcm(lcm_e, e);

    Rational minus_k = -deg_canonical(tuple);
    Rational d_scaled = minus_k * Rational(lcm_e);
    if (!is_integer(d_scaled) || d_scaled <= 0)
        throw std::invalid_argument("profile is not Fano");
    long big_d = to_long(d_scaled); // deg(-K) = big_d / lcm_e

    std::vector<long> divisors;
    for (long c = 1; c <= big_d; ++c)
        if (big_d % c == 0) divisors.push_back(c);

    // A bundle is (d0; k_1..k_r) with 0 <= k_i < e_i and
    // deg = d0 + sum k_i/e_i; the c-th power has weights c*k_i mod e_i and
    // integer part c*d0 + sum floor(c*k_i/e_i). -K itself is (2-r; 1,..,1).
    std::vector<RootSolution> out;
    for (long c : divisors) {
        long solutions = 0;
        std::vector<long> k(r, 0);
        auto rec = [&](auto&& self, std::size_t i, long carry) -> void {
            if (i == r) {
                long target = 2 - static_cast<long>(r) - carry;
                if (target % c == 0) ++solutions;
                return;
            }
            for (k[i] = 0; k[i] < tuple.e[i]; ++k[i]) {
                if ((c * k[i]) % tuple.e[i] != 1 % tuple.e[i]) continue;
                self(self, i + 1, carry + (c * k[i]) / tuple.e[i]);
            }
        };
        rec(rec, 0, 0);
        out.push_back({c, solutions >= 1, solutions == 1});
    }
    return out;
}

bool divisor_condition_equiv(long a, long b) {
    if (a < 1 || b < 1) throw std::invalid_argument("divisor_condition_equiv needs a, b >= 1");
    long m = std::gcd(a, b);
    long ap = a / m, bp = b / m;
    for (long c = 1; c <= a + b; ++c) {
        bool cond_i = (ap + bp) % c == 0 && std::gcd(c, a) == 1 && std::gcd(c, b) == 1;
        bool cond_ii = (a + b) % c == 0 && std::gcd(c, m) == 1;
        if (cond_i != cond_ii) return false;
    }
    return true;
}

} // namespace conisym
