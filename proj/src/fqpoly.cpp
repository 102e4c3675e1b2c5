#include "gl4/fqpoly.hpp"

namespace gl4 {

FqPoly::FqPoly(const FiniteField& field, std::vector<FqElem> coeffs) : field_(&field), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!(c.field() == field)) throw DomainError("FqPoly coefficient from a different field");
    normalize();
}

FqPoly FqPoly::constant(const FqElem& c) { return FqPoly(c.field(), {c}); }

FqPoly FqPoly::linear(const FqElem& root) { return FqPoly(root.field(), {-root, root.field().one()}); }

void FqPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FqElem FqPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_->zero(); }

FqElem FqPoly::leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

FqPoly FqPoly::operator+(const FqPoly& o) const {
    std::vector<FqElem> r(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return FqPoly(*field_, std::move(r));
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
    std::vector<FqElem> r(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return FqPoly(*field_, std::move(r));
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
    if (is_zero() || o.is_zero()) return FqPoly(*field_);
    std::vector<FqElem> r(coeffs_.size() + o.coeffs_.size() - 1, field_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return FqPoly(*field_, std::move(r));
}

FqPoly FqPoly::operator*(const FqElem& c) const {
    std::vector<FqElem> r;
    for (const auto& x : coeffs_) r.push_back(x * c);
    return FqPoly(*field_, std::move(r));
}

FqPoly FqPoly::operator-() const { return *this * -field_->one(); }

FqElem FqPoly::eval(const FqElem& x) const {
    FqElem acc = field_->zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

FqPoly FqPoly::derivative() const {
    std::vector<FqElem> r;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) r.push_back(coeffs_[i] * field_->from_int(static_cast<std::int64_t>(i)));
    return FqPoly(*field_, std::move(r));
}

FqPoly FqPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

FqPoly FqPoly::taylor_shift(const FqElem& shift) const {
    // Horner in the ring: p(x + s) = (...(c_n (x+s) + c_{n-1})(x+s) + ...).
    const FqPoly xs(*field_, {shift, field_->one()});
    FqPoly acc(*field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * xs + FqPoly::constant(*it);
    return acc;
}

FqPoly FqPoly::embed(const FiniteField& ext) const {
    std::vector<FqElem> r;
    for (const auto& c : coeffs_) r.push_back(ext.embed(c));
    return FqPoly(ext, std::move(r));
}

bool FqPoly::coefficients_in(const FiniteField& sub) const {
    for (const auto& c : coeffs_)
        if (!field_->in_subfield(c, sub.degree())) return false;
    return true;
}

FqPoly FqPoly::restrict_to(const FiniteField& sub) const {
    std::vector<FqElem> r;
    for (const auto& c : coeffs_) r.push_back(field_->restrict_to(c, sub));
    return FqPoly(sub, std::move(r));
}

std::string FqPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const auto& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")";
        if (i >= 1) out += "*" + var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    const FiniteField& f = a.field();
    if (a.degree() < b.degree()) return {FqPoly(f), a};
    std::vector<FqElem> rem = a.coefficients();
    const int db = b.degree();
    std::vector<FqElem> quo(static_cast<std::size_t>(a.degree() - db + 1), f.zero());
    const FqElem inv_lc = b.leading().inverse();
    for (int k = a.degree() - db; k >= 0; --k) {
        const FqElem c = rem[static_cast<std::size_t>(k + db)] * inv_lc;
        quo[static_cast<std::size_t>(k)] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] -= c * b.coefficients()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db), f.zero());
    return {FqPoly(f, std::move(quo)), FqPoly(f, std::move(rem))};
}

FqPoly operator%(const FqPoly& a, const FqPoly& b) { return divmod(a, b).second; }
FqPoly operator/(const FqPoly& a, const FqPoly& b) { return divmod(a, b).first; }

std::tuple<FqPoly, FqPoly, FqPoly> xgcd(const FqPoly& a, const FqPoly& b) {
    const FiniteField& f = a.field();
    FqPoly r0 = a, r1 = b;
    FqPoly s0 = FqPoly::constant(f.one()), s1(f);
    FqPoly t0(f), t1 = FqPoly::constant(f.one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        FqPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        FqPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const FqElem inv = r0.leading().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

FqPoly gcd(const FqPoly& a, const FqPoly& b) { return std::get<0>(xgcd(a, b)); }

bool is_separable(const FqPoly& f) {
    if (f.degree() < 1) return false;
    return gcd(f, f.derivative()).degree() == 0;
}

std::vector<FqElem> roots_of_quadratic(const FqPoly& f) {
    const FiniteField& k = f.field();
    if (f.degree() == 1) return {-f.coeff(0) / f.coeff(1)};
    if (f.degree() != 2) throw DomainError("roots_of_quadratic needs degree 1 or 2");
    const FqElem a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
    const FqElem disc = b * b - k.from_int(4) * a * c;
    auto root = disc.sqrt();
    if (!root) return {};
    const FqElem two_a = k.from_int(2) * a;
    if (root->is_zero()) return {-b / two_a};
    return {(-b + *root) / two_a, (-b - *root) / two_a};
}

}  // namespace gl4
