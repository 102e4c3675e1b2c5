#include "gl4/numberfield.hpp"

#include "gl4/detail/determinant.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

namespace gl4 {

// ---------------------------------------------------------------------------
// QuadElem

bool is_valid_radicand(long delta) {
    if (delta == 0 || delta == 1) return false;
    return squarefree_part(Integer(delta)) == delta;
}

QuadElem::QuadElem(Rational a, Rational b, long delta) : a_(std::move(a)), b_(std::move(b)), delta_(delta) {
    if (!is_valid_radicand(delta)) throw DomainError("radicand must be squarefree and not 0 or 1: " + std::to_string(delta));
    a_.canonicalize();
    b_.canonicalize();
}

void QuadElem::check_same(const QuadElem& o) const {
    if (delta_ != o.delta_)
        throw DomainError("mixing Q(sqrt " + std::to_string(delta_) + ") with Q(sqrt " + std::to_string(o.delta_) + ")");
}

QuadElem QuadElem::operator+(const QuadElem& o) const {
    check_same(o);
    return QuadElem(a_ + o.a_, b_ + o.b_, delta_);
}

QuadElem QuadElem::operator-(const QuadElem& o) const {
    check_same(o);
    return QuadElem(a_ - o.a_, b_ - o.b_, delta_);
}

QuadElem QuadElem::operator*(const QuadElem& o) const {
    check_same(o);
    return QuadElem(a_ * o.a_ + delta_ * b_ * o.b_, a_ * o.b_ + b_ * o.a_, delta_);
}

QuadElem QuadElem::inverse() const {
    const Rational n = norm(*this);
    if (n == 0) throw DomainError("inverse of zero in Q(sqrt " + std::to_string(delta_) + ")");
    return QuadElem(a_ / n, -b_ / n, delta_);
}

QuadElem QuadElem::operator/(const QuadElem& o) const { return *this * o.inverse(); }

std::string QuadElem::to_string() const {
    const std::string radical = "*sqrt(" + std::to_string(delta_) + ")";
    if (b_ == 0) return gl4::to_string(a_);
    if (a_ == 0) return gl4::to_string(b_) + radical;
    std::string out = gl4::to_string(a_);
    out += b_ < 0 ? "-" : "+";
    out += gl4::to_string(abs(b_)) + radical;
    return out;
}

QuadElem QuadElem::parse(const std::string& input, long delta_hint) {
    std::string text;
    for (char ch : input)
        if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
    if (text.empty()) throw DomainError("empty quadratic-field element");

    // Split into signed terms at top-level '+'/'-'.
    std::vector<std::string> terms;
    std::string current;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if ((ch == '+' || ch == '-') && depth == 0 && !current.empty()) {
            terms.push_back(current);
            current.clear();
        }
        current += ch;
    }
    terms.push_back(current);

    static const std::regex kRadicalTerm(R"(([+-]?)(\d+(?:/\d+)?)?\*?sqrt\((-?\d+)\))");
    Rational a = 0, b = 0;
    long delta = delta_hint;
    bool seen_radical = false;
    for (const auto& term : terms) {
        std::smatch m;
        if (std::regex_match(term, m, kRadicalTerm)) {
            const long d = std::stol(m[3].str());
            if (delta != 0 && d != delta) throw DomainError("radicand mismatch in '" + input + "'");
            delta = d;
            Rational coef = m[2].matched ? parse_rational(m[2].str()) : Rational(1);
            if (m[1].str() == "-") coef = -coef;
            b += coef;
            seen_radical = true;
        } else {
            a += parse_rational(term);
        }
    }
    if (!seen_radical && delta == 0) throw DomainError("cannot infer the radicand of '" + input + "'");
    return QuadElem(a, b, delta);
}

Rational norm(const QuadElem& x) { return x.a() * x.a() - x.delta() * x.b() * x.b(); }

QuadElem conjugate(const QuadElem& x) { return QuadElem(x.a(), -x.b(), x.delta()); }

std::optional<QuadElem> square_root(const QuadElem& x) {
    const long d = x.delta();
    Rational r;
    if (x.is_rational()) {
        if (is_rational_square(x.a(), &r)) return QuadElem(r, 0, d);
        if (is_rational_square(x.a() / d, &r)) return QuadElem(0, r, d);
        return std::nullopt;
    }
    // (s + t sqrt D)^2 = x forces s^2 = (a +- n)/2 with n^2 = Nm(x), and t = b / 2s.
    Rational n;
    if (!is_rational_square(norm(x), &n)) return std::nullopt;
    for (const Rational& cand : {Rational((x.a() + n) / 2), Rational((x.a() - n) / 2)}) {
        Rational s;
        if (cand != 0 && is_rational_square(cand, &s)) {
            QuadElem root(s, x.b() / (2 * s), d);
            if (root * root == x) return root;
        }
    }
    return std::nullopt;
}

std::string to_string(NormClass c) {
    switch (c) {
    case NormClass::MinusTwoSquare: return "MinusTwoSquare";
    case NormClass::MinusTwoDeltaSquare: return "MinusTwoDeltaSquare";
    case NormClass::Neither: return "Neither";
    }
    return "?";
}

NormClass norm_class(const QuadElem& alpha) {
    if (alpha.is_zero()) throw DomainError("norm class of zero");
    const Rational n = norm(alpha);
    if (is_rational_square(-n / 2)) return NormClass::MinusTwoSquare;
    if (is_rational_square(-n / (2 * Rational(alpha.delta())))) return NormClass::MinusTwoDeltaSquare;
    return NormClass::Neither;
}

// ---------------------------------------------------------------------------
// QuadPoly

QuadPoly::QuadPoly(std::vector<QuadElem> coeffs, long delta) : coeffs_(std::move(coeffs)), delta_(delta) {
    for (const auto& c : coeffs_)
        if (c.delta() != delta_) throw DomainError("QuadPoly coefficient from a different field");
    normalize();
}

void QuadPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QuadElem QuadPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : QuadElem::rational(0, delta_);
}

QuadPoly QuadPoly::operator+(const QuadPoly& o) const {
    std::vector<QuadElem> r;
    for (std::size_t i = 0; i < std::max(coeffs_.size(), o.coeffs_.size()); ++i) r.push_back(coeff(i) + o.coeff(i));
    return QuadPoly(std::move(r), delta_);
}

QuadPoly QuadPoly::operator-(const QuadPoly& o) const {
    std::vector<QuadElem> r;
    for (std::size_t i = 0; i < std::max(coeffs_.size(), o.coeffs_.size()); ++i) r.push_back(coeff(i) - o.coeff(i));
    return QuadPoly(std::move(r), delta_);
}

QuadPoly QuadPoly::operator*(const QuadPoly& o) const {
    if (is_zero() || o.is_zero()) return QuadPoly(delta_);
    std::vector<QuadElem> r(coeffs_.size() + o.coeffs_.size() - 1, QuadElem::rational(0, delta_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    return QuadPoly(std::move(r), delta_);
}

QuadPoly QuadPoly::operator*(const QuadElem& c) const {
    std::vector<QuadElem> r;
    for (const auto& x : coeffs_) r.push_back(x * c);
    return QuadPoly(std::move(r), delta_);
}

QuadPoly QuadPoly::derivative() const {
    std::vector<QuadElem> r;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) r.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
    return QuadPoly(std::move(r), delta_);
}

QuadElem QuadPoly::eval(const QuadElem& x) const {
    QuadElem acc = QuadElem::rational(0, delta_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QuadPoly QuadPoly::conjugated() const {
    std::vector<QuadElem> r;
    for (const auto& x : coeffs_) r.push_back(conjugate(x));
    return QuadPoly(std::move(r), delta_);
}

std::string QuadPoly::to_string(const std::string& var) const {
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

QuadElem resultant(const QuadPoly& p, const QuadPoly& q) {
    if (p.delta() != q.delta()) throw DomainError("resultant across different quadratic fields");
    const long d = p.delta();
    const QuadElem zero = QuadElem::rational(0, d);
    if (p.is_zero() && q.is_zero()) throw DomainError("resultant of two zero polynomials");
    if (p.is_zero() || q.is_zero()) return zero;
    return detail::bareiss_determinant(
        detail::sylvester(p.coefficients(), q.coefficients(), zero), QuadElem::rational(1, d), zero,
        [](const QuadElem& x) { return x.is_zero(); }, [](const QuadElem& x, const QuadElem& y) { return x / y; });
}

QuadElem discriminant(const QuadPoly& f) {
    const int n = f.degree();
    if (n < 1) throw DomainError("discriminant needs degree >= 1");
    QuadElem r = resultant(f, f.derivative()) / f.coefficients().back();
    if ((n * (n - 1) / 2) % 2 == 1) r = -r;
    return r;
}

// ---------------------------------------------------------------------------
// Quartic fields

QuarticField::QuarticField(UniPoly chi, std::string provenance)
    : chi_(std::move(chi)), provenance_(std::move(provenance)) {
    if (!is_irreducible_quartic(chi_)) throw DomainError("not an irreducible quartic: " + chi_.to_string());
}

namespace {

// Checks (T^2 + uT + v)(T^2 + u'T + v') == chi over Q(sqrt m), u' and v' conjugates.
bool conjugate_pair_multiplies_to(const UniPoly& chi, long m, const Rational& u0, const Rational& u1,
                                  const Rational& v0, const Rational& v1) {
    QuadPoly f({QuadElem(v0, v1, m), QuadElem(u0, u1, m), QuadElem::rational(1, m)}, m);
    QuadPoly prod = f * f.conjugated();
    for (int i = 0; i <= 4; ++i) {
        const auto c = prod.coeff(static_cast<std::size_t>(i));
        if (c.b() != 0 || c.a() != chi.coeff(static_cast<std::size_t>(i))) return false;
    }
    return true;
}

}  // namespace

bool has_sqrt(const QuarticField& k, const Integer& m_int) {
    if (!m_int.fits_slong_p()) throw DomainError("radicand too large");
    const long m = m_int.get_si();
    if (!is_valid_radicand(m)) throw DomainError("has_sqrt needs a squarefree m outside {0, 1}");
    const UniPoly& chi = k.defining_polynomial();
    const Rational a3 = chi.coeff(3), a2 = chi.coeff(2), a1 = chi.coeff(1), a0 = chi.coeff(0);

    // chi = (T^2 + uT + v)(T^2 + u'T + v') with u = u0 + u1 sqrt m, v = v0 + v1 sqrt m:
    //   2 u0 = a3,  2 v0 + u0^2 - m u1^2 = a2,  2 (u0 v0 - m u1 v1) = a1,  v0^2 - m v1^2 = a0.
    const Rational u0 = a3 / 2;

    // u1 = 0.
    {
        const Rational v0 = (a2 - u0 * u0) / 2;
        Rational v1;
        if (2 * u0 * v0 == a1 && is_rational_square((v0 * v0 - a0) / m, &v1) && v1 != 0 &&
            conjugate_pair_multiplies_to(chi, m, u0, 0, v0, v1))
            return true;
    }
    // u1 != 0: m u1^2 = S(v0) := 2 v0 + u0^2 - a2, and eliminating v1 gives
    //   (v0^2 - a0) S(v0) = (u0 v0 - a1/2)^2.
    const UniPoly v = UniPoly::variable();
    const UniPoly s = UniPoly{u0 * u0 - a2, 2};
    const UniPoly lhs = (v * v - UniPoly::constant(a0)) * s;
    const UniPoly rhs_root = UniPoly{-a1 / 2, u0};
    const UniPoly cubic = lhs - rhs_root * rhs_root;
    for (const auto& v0 : rational_roots(cubic)) {
        const Rational sv = s.eval(v0);
        Rational u1;
        if (sv == 0 || !is_rational_square(sv / m, &u1)) continue;
        const Rational v1 = (u0 * v0 - a1 / 2) / (m * u1);
        if (conjugate_pair_multiplies_to(chi, m, u0, u1, v0, v1)) return true;
    }
    return false;
}

std::set<Integer> quadratic_subfield_candidates(const UniPoly& chi) {
    std::set<Integer> out;
    auto add = [&](const Rational& r) {
        if (r == 0) return;
        Integer m = squarefree_part(r);
        if (m != 1) out.insert(m);
    };
    const Rational a3 = chi.coeff(3), a2 = chi.coeff(2), a1 = chi.coeff(1), a0 = chi.coeff(0);

    // Weil shape T^4 - aT^3 + bT^2 - aqT + q^2: alpha + q/alpha is a root of
    // T^2 - aT + (b - 2q), discriminant a^2 - 4b + 8q.
    const Rational a = -a3;
    std::vector<Rational> qs;
    if (a3 != 0) {
        qs.push_back(a1 / a3);
    } else if (a1 == 0) {
        Rational root;
        if (is_rational_square(a0, &root)) {
            qs.push_back(root);
            qs.push_back(-root);
        }
    }
    for (const auto& q : qs)
        if (q * q == a0) add(a * a - 4 * a2 + 8 * q);

    const Rational disc = discriminant(chi);
    add(disc);

    // Resolvent cubic with roots x1x2 + x3x4.
    const UniPoly resolvent{-(a3 * a3 * a0 - 4 * a2 * a0 + a1 * a1), a3 * a1 - 4 * a0, -a2, 1};
    for (const auto& r : rational_roots(resolvent)) {
        const Rational prod_disc = r * r - 4 * a0;         // x1x2, x3x4
        const Rational sum_disc = a3 * a3 - 4 * (a2 - r);  // x1+x2, x3+x4
        add(prod_disc);
        add(sum_disc);
        add(prod_disc * sum_disc);
        if (disc != 0) {
            add(prod_disc * disc);
            add(sum_disc * disc);
        }
    }
    return out;
}

std::set<Integer> quadratic_subfields(const QuarticField& k) {
    std::set<Integer> out;
    for (const auto& m : quadratic_subfield_candidates(k.defining_polynomial()))
        if (has_sqrt(k, m)) out.insert(m);
    return out;
}

bool intersection_is_Q(const QuarticField& k1, const QuarticField& k2) {
    const auto s1 = quadratic_subfields(k1);
    const auto s2 = quadratic_subfields(k2);
    return std::none_of(s1.begin(), s1.end(), [&](const Integer& m) { return s2.count(m) > 0; });
}

// ---------------------------------------------------------------------------
// Residue fields

BadReduction::BadReduction(std::uint32_t prime, const std::string& reason)
    : std::runtime_error("bad reduction at p = " + std::to_string(prime) + ": " + reason), prime_(prime) {}

std::string ResidueField::describe() const {
    std::string s = "prime above " + std::to_string(p) + " in Q(sqrt(" + std::to_string(delta) + "))";
    s += inert ? " (inert, q = " : " (split, label " + std::to_string(label) + ", q = ";
    s += std::to_string(q()) + ")";
    return s;
}

ResidueField residue_field(long delta, std::uint32_t p, int label) {
    if (!is_valid_radicand(delta)) throw DomainError("invalid radicand " + std::to_string(delta));
    if (p == 2) throw BadReduction(p, "residue characteristic 2");
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (p > FiniteField::kMaxPrime) throw DomainError("prime " + std::to_string(p) + " exceeds the supported bound");
    const int chi = legendre(Integer(delta), p);
    if (chi == 0) throw BadReduction(p, "ramified in Q(sqrt(" + std::to_string(delta) + "))");

    ResidueField rf;
    rf.p = p;
    rf.delta = delta;
    const std::int64_t d_mod = ((delta % static_cast<long>(p)) + p) % p;
    if (chi == -1) {
        rf.inert = true;
        rf.field = &FiniteField::get(p, 2);
        // sqrt(D) = s * theta with s^2 = D / c; take the least such s.
        const FiniteField& fp = FiniteField::get(p, 1);
        const FqElem target = fp.from_int(d_mod) / fp.from_int(rf.field->base_nonresidue());
        for (std::uint32_t s = 1; s < p; ++s) {
            if (fp.from_int(s) * fp.from_int(s) == target) {
                rf.sqrt_delta = rf.field->from_int(s) * rf.field->theta();
                break;
            }
        }
    } else {
        if (label != 1 && label != 2) throw DomainError("split prime label must be 1 or 2");
        rf.label = label;
        rf.field = &FiniteField::get(p, 1);
        std::vector<std::uint32_t> roots;
        for (std::uint32_t r = 1; r < p; ++r)
            if (static_cast<std::uint64_t>(r) * r % p == static_cast<std::uint64_t>(d_mod)) roots.push_back(r);
        rf.sqrt_delta = rf.field->from_int(roots.at(static_cast<std::size_t>(label - 1)));
    }
    return rf;
}

FqElem reduce_mod_prime(const QuadElem& x, const ResidueField& rf) {
    if (x.delta() != rf.delta) throw DomainError("element and residue field disagree on the radicand");
    try {
        return rf.field->from_rational(x.a()) + rf.field->from_rational(x.b()) * rf.sqrt_delta;
    } catch (const DomainError&) {
        throw BadReduction(rf.p, "coefficient denominator divisible by p in " + x.to_string());
    }
}

}  // namespace gl4
