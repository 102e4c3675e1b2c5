// Independent reference computations used to cross-check the library.
// They share no code with the algorithms they check beyond UniPoly
// arithmetic itself.
#pragma once

#include "gl4/exact.hpp"

#include <cstdlib>
#include <random>

namespace oracle {

using gl4::Integer;
using gl4::Rational;
using gl4::UniPoly;

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline UniPoly random_poly(std::mt19937_64& rng, int degree, long bound) {
    std::vector<Rational> c;
    for (int i = 0; i < degree; ++i) c.emplace_back(uniform(rng, -bound, bound));
    long lead = 0;
    while (lead == 0) lead = uniform(rng, -bound, bound);
    c.emplace_back(lead);
    return UniPoly(c);
}

inline UniPoly random_monic(std::mt19937_64& rng, int degree, long bound) {
    std::vector<Rational> c;
    for (int i = 0; i < degree; ++i) c.emplace_back(uniform(rng, -bound, bound));
    c.emplace_back(1);
    return UniPoly(c);
}

/// Monic integer quartics; about half are built as products so both answers occur.
inline UniPoly random_quartic(std::mt19937_64& rng) {
    switch (rng() % 4) {
    case 0: return random_monic(rng, 4, 20);
    case 1: return random_monic(rng, 2, 6) * random_monic(rng, 2, 6);
    case 2: return random_monic(rng, 1, 6) * random_monic(rng, 3, 4);
    default: {
        UniPoly q = random_monic(rng, 2, 5);
        return rng() % 2 ? q * q : random_monic(rng, 4, 3);
    }
    }
}

/// Whether a monic integer polynomial of degree 2..4 has a monic integer
/// factor of degree 1 or 2, found by enumerating all candidates: integer
/// roots up to the Cauchy bound, and quadratics T^2 + b1 T + b0 with
/// b0 | p(0) and |b1| <= 2B.
inline bool has_small_factor(const UniPoly& p) {
    Integer bound = 0;
    for (const auto& c : p.coefficients()) bound = std::max(bound, Integer(abs(c.get_num())));
    bound += 1;
    for (Integer r = -bound; r <= bound; ++r)
        if (p.eval(Rational(r)) == 0) return true;
    if (p.degree() < 4) return false;
    const Integer a0 = p.coeff(0).get_num();
    for (Integer d = 1; d * d <= abs(a0) * abs(a0) && d <= abs(a0); ++d) {
        if (a0 % d != 0) continue;
        for (int sign : {1, -1}) {
            const Integer b0 = d * sign;
            for (Integer b1 = -2 * bound; b1 <= 2 * bound; ++b1) {
                const UniPoly cand{Rational(b0), Rational(b1), Rational(1)};
                if (gl4::divmod(p, cand).second.is_zero()) return true;
            }
        }
    }
    return false;
}

/// Monic polynomial with the n-th powers of the roots of p, via power sums.
inline UniPoly newton_power_charpoly(const UniPoly& p, unsigned n) {
    const int d = p.degree();
    // Power sums s_1 .. s_{dn} of the roots of p.
    std::vector<Rational> s(static_cast<std::size_t>(d) * n + 1, 0);
    auto cc = [&](int i) { return p.coeff(static_cast<std::size_t>(i)); };
    for (int k = 1; k <= d * static_cast<int>(n); ++k) {
        Rational acc = 0;
        for (int i = 1; i < k && i <= d; ++i) acc += cc(d - i) * s[static_cast<std::size_t>(k - i)];
        if (k <= d) acc += k * cc(d - k);
        s[static_cast<std::size_t>(k)] = -acc;
    }
    // Elementary symmetric functions of the n-th powers from t_k = s_{kn}.
    std::vector<Rational> e(static_cast<std::size_t>(d) + 1, 0);
    e[0] = 1;
    for (int k = 1; k <= d; ++k) {
        Rational acc = 0;
        for (int i = 1; i <= k; ++i) {
            const Rational term = e[static_cast<std::size_t>(k - i)] * s[static_cast<std::size_t>(i) * n];
            acc += (i % 2 ? term : Rational(-term));
        }
        e[static_cast<std::size_t>(k)] = acc / k;
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1, 0);
    for (int k = 0; k <= d; ++k)
        coeffs[static_cast<std::size_t>(d - k)] = (k % 2 ? Rational(-e[static_cast<std::size_t>(k)]) : e[static_cast<std::size_t>(k)]);
    return UniPoly(coeffs);
}

}  // namespace oracle
