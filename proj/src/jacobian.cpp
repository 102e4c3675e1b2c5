#include "gl4/jacobian.hpp"

namespace gl4 {

Jacobian::Jacobian(const FqPoly& f, const FqElem& base_root) : f_(f), r_(base_root), g_(f.field()) {
    if (!(base_root.field() == f.field())) throw DomainError("base root from a different field");
    if (!f.eval(base_root).is_zero()) throw DomainError("base point is not a Weierstrass point");
    if (!is_separable(f) || (f.degree() != 5 && f.degree() != 6)) throw DomainError("not a genus-2 model");
    const FqPoly h = f.taylor_shift(base_root);
    std::vector<FqElem> g(6, field().zero());
    for (std::size_t k = 0; k < 6; ++k) g[k] = h.coeff(6 - k);
    g_ = FqPoly(field(), std::move(g));
}

Jacobian Jacobian::of(const ReducedCurve& curve) {
    const FiniteField& k = curve.field();
    for (std::uint64_t i = 0; i < k.size(); ++i) {
        const FqElem x = k.from_index(i);
        if (curve.f().eval(x).is_zero()) return Jacobian(curve.f(), x);
    }
    throw DomainError("curve has no rational Weierstrass point");
}

MumfordDivisor Jacobian::identity() const { return {FqPoly::constant(field().one()), FqPoly(field())}; }

bool Jacobian::is_valid(const MumfordDivisor& d) const {
    if (d.u.is_zero() || d.u.degree() > 2 || !d.u.leading().is_one()) return false;
    if (d.v.degree() >= d.u.degree()) return false;
    return ((d.v * d.v - g_) % d.u).is_zero();
}

MumfordDivisor Jacobian::model_point(const FqElem& x, const FqElem& y) const {
    if (y * y != g_.eval(x)) throw DomainError("point is not on the curve");
    return {FqPoly::linear(x), FqPoly::constant(y)};
}

MumfordDivisor Jacobian::point(const FqElem& x, const FqElem& y) const {
    if (y * y != f_.eval(x)) throw DomainError("point is not on the curve");
    if (x == r_) throw DomainError("the base point maps to the identity");
    const FqElem big_x = (x - r_).inverse();
    return model_point(big_x, y * big_x * big_x * big_x);
}

MumfordDivisor Jacobian::reduce(FqPoly u, FqPoly v) const {
    v = v % u;
    while (u.degree() > 2) {
        u = (g_ - v * v) / u;
        u = u.monic();
        v = (-v) % u;
    }
    return {u.monic(), v};
}

MumfordDivisor Jacobian::add(const MumfordDivisor& a, const MumfordDivisor& b) const {
    if (a.is_identity()) return b;
    if (b.is_identity()) return a;
    auto [d0, e1, e2] = xgcd(a.u, b.u);
    auto [d, c1, c2] = xgcd(d0, a.v + b.v);
    const FqPoly s1 = c1 * e1, s2 = c1 * e2, &s3 = c2;
    const FqPoly u = (a.u * b.u) / (d * d);
    const FqPoly v = (s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + g_)) / d;
    return reduce(u, v);
}

MumfordDivisor Jacobian::negate(const MumfordDivisor& d) const { return {d.u, -d.v}; }

MumfordDivisor Jacobian::scalar_mul(const MumfordDivisor& d, const Integer& n) const {
    const MumfordDivisor base = n < 0 ? negate(d) : d;
    const Integer m = abs(n);
    MumfordDivisor acc = identity();
    for (long bit = static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
        acc = add(acc, acc);
        if (mpz_tstbit(m.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) acc = add(acc, base);
    }
    return acc;
}

std::pair<FqElem, FqElem> Jacobian::random_point(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint64_t> pick(0, field().size() - 1);
    for (;;) {
        const FqElem x = field().from_index(pick(rng));
        if (x == r_) continue;
        auto y = f_.eval(x).sqrt();
        if (!y) continue;
        return {x, (rng() & 1) ? -*y : *y};
    }
}

MumfordDivisor Jacobian::random_divisor(std::mt19937_64& rng) const {
    const auto [x1, y1] = random_point(rng);
    const auto [x2, y2] = random_point(rng);
    return add(point(x1, y1), point(x2, y2));
}

}  // namespace gl4
