#include "gl4/symbolic.hpp"

#include <algorithm>

namespace gl4::sym {

// ---------------------------------------------------------------------------
// MPoly

MPoly MPoly::constant(const Rational& c) {
    MPoly p;
    p.add_term(Exponents{}, c);
    return p;
}

MPoly MPoly::var(Var v) {
    MPoly p;
    Exponents e{};
    e[v] = 1;
    p.add_term(e, 1);
    return p;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e{};
            for (std::size_t i = 0; i < kNumVars; ++i) e[i] = static_cast<std::uint8_t>(e1[i] + e2[i]);
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

MPoly MPoly::operator*(const Rational& c) const {
    MPoly r;
    for (const auto& [e, x] : terms_) r.add_term(e, x * c);
    return r;
}

MPoly MPoly::derivative(Var v) const {
    MPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exponents f = e;
        --f[v];
        r.add_term(f, c * static_cast<unsigned long>(e[v]));
    }
    return r;
}

MPoly MPoly::coeff(Var v, unsigned k) const {
    MPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[v] != k) continue;
        Exponents f = e;
        f[v] = 0;
        r.add_term(f, c);
    }
    return r;
}

unsigned MPoly::degree(Var v) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[v]);
    return d;
}

MPoly MPoly::swap_vars(Var v, Var w) const {
    MPoly r;
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        std::swap(f[v], f[w]);
        r.add_term(f, c);
    }
    return r;
}

MPoly MPoly::specialize(const Rational& a, const Rational& b, const Rational& c, const Rational& d) const {
    const std::array<Rational, 4> values{a, b, c, d};
    MPoly r;
    for (const auto& [e, coef] : terms_) {
        Rational factor = coef;
        Exponents f = e;
        for (std::size_t i = 0; i < 4; ++i) {
            for (unsigned k = 0; k < e[i]; ++k) factor *= values[i];
            f[i] = 0;
        }
        r.add_term(f, factor);
    }
    return r;
}

std::string MPoly::to_string() const {
    static const char* kNames[kNumVars] = {"a", "b", "c", "D", "x", "u", "y", "v"};
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        Rational mag = abs(c);
        bool any_var = std::any_of(e.begin(), e.end(), [](std::uint8_t k) { return k > 0; });
        if (mag != 1 || !any_var) out += gl4::to_string(mag);
        bool first = mag == 1;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            if (!first) out += "*";
            first = false;
            out += kNames[i];
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// RadicalElem

bool RadicalElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const MPoly& p) { return p.is_zero(); });
}

RadicalElem RadicalElem::operator+(const RadicalElem& o) const {
    return RadicalElem(c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]);
}

RadicalElem RadicalElem::operator-(const RadicalElem& o) const {
    return RadicalElem(c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]);
}

RadicalElem RadicalElem::operator*(const RadicalElem& o) const {
    // Basis 1, r = sqrt D, s = sqrt -2, rs = sqrt -2D:
    //   r^2 = D, s^2 = -2, (rs)^2 = -2D, r(rs) = D s, s(rs) = -2 r.
    const MPoly dvar = MPoly::var(D);
    const auto& x = c_;
    const auto& y = o.c_;
    MPoly r0 = x[0] * y[0] + dvar * (x[1] * y[1]) - (x[2] * y[2]) * Rational(2) - dvar * (x[3] * y[3]) * Rational(2);
    MPoly r1 = x[0] * y[1] + x[1] * y[0] - (x[2] * y[3] + x[3] * y[2]) * Rational(2);
    MPoly r2 = x[0] * y[2] + x[2] * y[0] + dvar * (x[1] * y[3] + x[3] * y[1]);
    MPoly r3 = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
    return RadicalElem(std::move(r0), std::move(r1), std::move(r2), std::move(r3));
}

RadicalElem RadicalElem::operator*(const Rational& r) const {
    return RadicalElem(c_[0] * r, c_[1] * r, c_[2] * r, c_[3] * r);
}

RadicalElem RadicalElem::conjugate_s() const { return RadicalElem(c_[0], -c_[1], c_[2], -c_[3]); }

RadicalElem RadicalElem::derivative(Var v) const {
    return RadicalElem(c_[0].derivative(v), c_[1].derivative(v), c_[2].derivative(v), c_[3].derivative(v));
}

RadicalElem RadicalElem::coeff(Var v, unsigned k) const {
    return RadicalElem(c_[0].coeff(v, k), c_[1].coeff(v, k), c_[2].coeff(v, k), c_[3].coeff(v, k));
}

unsigned RadicalElem::degree(Var v) const {
    unsigned d = 0;
    for (const auto& p : c_) d = std::max(d, p.degree(v));
    return d;
}

RadicalElem RadicalElem::swap_vars(Var v, Var w) const {
    return RadicalElem(c_[0].swap_vars(v, w), c_[1].swap_vars(v, w), c_[2].swap_vars(v, w), c_[3].swap_vars(v, w));
}

RadicalElem RadicalElem::scale_var(Var v, const RadicalElem& scale) const {
    RadicalElem out;
    RadicalElem power = RadicalElem::rational(1);
    const RadicalElem var_v = RadicalElem::var(v);
    for (unsigned k = 0; k <= degree(v); ++k) {
        RadicalElem piece = coeff(v, k);
        RadicalElem mono = RadicalElem::rational(1);
        for (unsigned i = 0; i < k; ++i) mono = mono * var_v;
        out = out + piece * power * mono;
        power = power * scale;
    }
    return out;
}

RadicalElem RadicalElem::monomial_coeff(const std::array<std::uint8_t, 4>& xuyv) const {
    return coeff(X, xuyv[0]).coeff(U, xuyv[1]).coeff(Y, xuyv[2]).coeff(V, xuyv[3]);
}

std::string RadicalElem::to_string() const {
    static const char* kRadicals[4] = {"", "*sqrt(D)", "*sqrt(-2)", "*sqrt(-2D)"};
    std::string out;
    for (std::size_t i = 0; i < 4; ++i) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c_[i].to_string() + ")" + kRadicals[i];
    }
    return out.empty() ? "0" : out;
}

RadicalElem pow(const RadicalElem& x, unsigned e) {
    RadicalElem r = RadicalElem::rational(1);
    for (unsigned i = 0; i < e; ++i) r = r * x;
    return r;
}

// ---------------------------------------------------------------------------
// The family

std::array<RadicalElem, 3> family_F() {
    const RadicalElem a = RadicalElem::var(A), b = RadicalElem::var(B), c = RadicalElem::var(C);
    const RadicalElem d = RadicalElem::var(D);
    const RadicalElem r = RadicalElem::sqrt_delta();
    const RadicalElem x = RadicalElem::var(X);
    const RadicalElem x2 = x * x;
    auto q = [](long n, long den) { return Rational(n, den); };

    RadicalElem f1 = (b * b * d * q(-1, 4) + a * a * q(1, 4) + c * r + RadicalElem::rational(q(1, 4))) * x2 +
                     (b * r + a) * x + RadicalElem::rational(1);
    RadicalElem f2 = (b * d * q(-1, 2) + a * r * q(1, 2)) * x2 + r * x;
    RadicalElem f3 = (b * b * d * r * q(1, 4) - a * a * r * q(1, 4) - c * d + r * q(1, 4)) * x2 +
                     (-(b * d) - a * r) * x - r;
    return {f1, f2, f3};
}

std::array<RadicalElem, 3> derived_L(const std::array<RadicalElem, 3>& F) {
    auto d = [](const RadicalElem& f) { return f.derivative(X); };
    return {d(F[1]) * F[2] - F[1] * d(F[2]),
            d(F[2]) * F[0] - F[2] * d(F[0]),
            d(F[0]) * F[1] - F[0] * d(F[1])};
}

RadicalElem coefficient_determinant(const std::array<RadicalElem, 3>& F) {
    // q[i][j] = coefficient of x^i in F_j.
    std::array<std::array<RadicalElem, 3>, 3> q;
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) q[i][j] = F[j].coeff(X, i);
    return q[0][0] * (q[1][1] * q[2][2] - q[1][2] * q[2][1]) -
           q[0][1] * (q[1][0] * q[2][2] - q[1][2] * q[2][0]) +
           q[0][2] * (q[1][0] * q[2][1] - q[1][1] * q[2][0]);
}

FamilyPolynomials family_from(const std::array<RadicalElem, 3>& F) {
    return FamilyPolynomials{F, derived_L(F), coefficient_determinant(F)};
}

FamilyPolynomials family_polynomials() { return family_from(family_F()); }

bool verify_delta(const FamilyPolynomials& fam) {
    return (fam.delta - RadicalElem::var(D) * Rational(1, 2)).is_zero();
}

bool verify_conjugation(const FamilyPolynomials& fam) {
    const RadicalElem d = RadicalElem::var(D);
    return (d * fam.F[0].conjugate_s() + fam.L[0]).is_zero() &&
           (fam.F[1].conjugate_s() + fam.L[1]).is_zero() &&
           (fam.F[2].conjugate_s() + fam.L[2]).is_zero();
}

bool verify_conjugate_product(const FamilyPolynomials& fam) {
    const RadicalElem d = RadicalElem::var(D);
    const RadicalElem prod = fam.F[0] * fam.F[1] * fam.F[2];
    return (d * prod.conjugate_s() + fam.L[0] * fam.L[1] * fam.L[2]).is_zero();
}

namespace {

RadicalElem in_u(const RadicalElem& poly_in_x) { return poly_in_x.swap_vars(X, U); }

}  // namespace

Correspondence gamma(const FamilyPolynomials& fam) {
    const RadicalElem x = RadicalElem::var(X), u = RadicalElem::var(U);
    const RadicalElem y = RadicalElem::var(Y), v = RadicalElem::var(V);
    const RadicalElem f1l1 = fam.F[0] * in_u(fam.L[0]);
    return {f1l1 + fam.F[1] * in_u(fam.L[1]), y * v - f1l1 * (x - u)};
}

Correspondence gamma_transpose(const FamilyPolynomials& fam) {
    Correspondence g = gamma(fam);
    return {g.first.swap_vars(X, U).swap_vars(Y, V), g.second.swap_vars(X, U).swap_vars(Y, V)};
}

Correspondence transposed_target(const FamilyPolynomials& fam) {
    const RadicalElem x = RadicalElem::var(X), u = RadicalElem::var(U);
    const RadicalElem y = RadicalElem::var(Y), v = RadicalElem::var(V);
    const RadicalElem l1f1 = fam.L[0] * in_u(fam.F[0]);
    return {l1f1 + fam.L[1] * in_u(fam.F[1]), y * v - l1f1 * (u - x)};
}

Correspondence twisted_conjugate_gamma(const FamilyPolynomials& fam, int involution_sign) {
    Correspondence g = gamma(fam);
    Correspondence conj{g.first.conjugate_s(), g.second.conjugate_s()};
    // A point (x, y, u, v) of s(Gamma) goes to (x, sign sqrt(-2) y, u, v / sqrt(-2)), so the
    // image satisfies the equations after y -> sign y / sqrt(-2) = -sign sqrt(-2)/2 y and
    // v -> sqrt(-2) v.
    const RadicalElem y_scale = RadicalElem::sqrt_minus_two() * Rational(-involution_sign, 2);
    const RadicalElem v_scale = RadicalElem::sqrt_minus_two();
    auto substitute = [&](const RadicalElem& e) { return e.scale_var(Y, y_scale).scale_var(V, v_scale); };
    return {substitute(conj.first), substitute(conj.second)};
}

bool proportional(const RadicalElem& p, const RadicalElem& q) {
    if (p.is_zero() || q.is_zero()) return false;
    // Find a monomial in x, u, y, v carried by p.
    for (std::size_t comp = 0; comp < 4; ++comp) {
        for (const auto& [e, c] : p.component(comp).terms()) {
            const std::array<std::uint8_t, 4> m{e[X], e[U], e[Y], e[V]};
            const RadicalElem pm = p.monomial_coeff(m);
            const RadicalElem qm = q.monomial_coeff(m);
            if (qm.is_zero()) return false;
            return (p * qm - q * pm).is_zero();
        }
    }
    return false;
}

TransposeCheck check_transpose(const FamilyPolynomials& fam, int involution_sign) {
    const Correspondence image = twisted_conjugate_gamma(fam, involution_sign);
    const Correspondence target = transposed_target(fam);
    const Correspondence transpose = gamma_transpose(fam);
    TransposeCheck check;
    check.first_matches_target = proportional(image.first, target.first);
    check.second_matches_target = proportional(image.second, target.second);
    check.target_is_transpose = proportional(target.first, transpose.first) && proportional(target.second, transpose.second);
    return check;
}

bool verify_transpose(const FamilyPolynomials& fam, int involution_sign) {
    return check_transpose(fam, involution_sign).ok();
}

QuadPoly specialize(const RadicalElem& e, const Rational& a, const Rational& b, const Rational& c, long delta) {
    if (!e.component(2).is_zero() || !e.component(3).is_zero())
        throw DomainError("specialize: element involves sqrt(-2)");
    const MPoly rat = e.component(0).specialize(a, b, c, Rational(delta));
    const MPoly rad = e.component(1).specialize(a, b, c, Rational(delta));
    std::vector<QuadElem> coeffs;
    const unsigned deg = std::max(rat.degree(X), rad.degree(X));
    for (unsigned k = 0; k <= deg; ++k) {
        auto scalar = [&](const MPoly& p) -> Rational {
            const MPoly ck = p.coeff(X, k);
            if (ck.is_zero()) return 0;
            if (ck.terms().size() != 1 || ck.terms().begin()->first != Exponents{})
                throw DomainError("specialize: element involves variables other than x");
            return ck.terms().begin()->second;
        };
        coeffs.emplace_back(scalar(rat), scalar(rad), delta);
    }
    return QuadPoly(std::move(coeffs), delta);
}

}  // namespace gl4::sym
