#include "gl4/exact.hpp"

#include "gl4/detail/determinant.hpp"

#include <algorithm>
#include <map>
#include <regex>

namespace gl4 {

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    normalize();
}

UniPoly::UniPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
    normalize();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::variable() { return monomial(1, 1); }

void UniPoly::normalize() {
    for (auto& c : coeffs_) c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& UniPoly::leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

bool UniPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

bool UniPoly::has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.get_den() == 1; });
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    UniPoly r = *this;
    Rational inv = 1 / leading();
    return r *= inv;
}

UniPoly UniPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
    return UniPoly(std::move(d));
}

Rational UniPoly::eval(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UniPoly UniPoly::reversed() const {
    std::vector<Rational> r(coeffs_.rbegin(), coeffs_.rend());
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    normalize();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        bool unit = mag == 1;
        if (!unit || i == 0) out += gl4::to_string(mag);
        if (i >= 1) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> rem = a.coefficients();
    const int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational inv_lc = 1 / b.leading();
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational c = rem[static_cast<std::size_t>(k + db)] * inv_lc;
        quo[static_cast<std::size_t>(k)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b.coefficients()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

bool divides(const UniPoly& d, const UniPoly& a) { return divmod(a, d).second.is_zero(); }

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UniPoly pow(const UniPoly& p, unsigned e) {
    UniPoly result = UniPoly::constant(1);
    UniPoly base = p;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Resultants

Rational resultant(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() && q.is_zero()) throw DomainError("resultant of two zero polynomials");
    if (p.is_zero() || q.is_zero()) return 0;
    return detail::bareiss_determinant(
        detail::sylvester(p.coefficients(), q.coefficients(), Rational(0)), Rational(1), Rational(0),
        [](const Rational& x) { return x == 0; }, [](const Rational& x, const Rational& y) { return Rational(x / y); });
}

Rational discriminant(const UniPoly& p) {
    const int n = p.degree();
    if (n < 1) throw DomainError("discriminant needs degree >= 1");
    Rational r = resultant(p, p.derivative()) / p.leading();
    // (-1)^{n(n-1)/2}
    if ((n * (n - 1) / 2) % 2 == 1) r = -r;
    return r;
}

int BiPoly::z_degree() const { return static_cast<int>(z_coeffs.size()) - 1; }

void BiPoly::normalize() {
    while (!z_coeffs.empty() && z_coeffs.back().is_zero()) z_coeffs.pop_back();
}

UniPoly resultant_in_z(const BiPoly& p, const BiPoly& q) {
    BiPoly a = p;
    BiPoly b = q;
    a.normalize();
    b.normalize();
    if (a.z_coeffs.empty() || b.z_coeffs.empty()) throw DomainError("resultant_in_z needs nonzero inputs");
    return detail::bareiss_determinant(
        detail::sylvester(a.z_coeffs, b.z_coeffs, UniPoly()), UniPoly::constant(1), UniPoly(),
        [](const UniPoly& x) { return x.is_zero(); }, [](const UniPoly& x, const UniPoly& y) { return exact_quotient(x, y); });
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials and totients

unsigned long euler_phi(unsigned long n) {
    if (n == 0) throw DomainError("phi(0)");
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

UniPoly cyclotomic_memo(unsigned long t, std::map<unsigned long, UniPoly>& memo) {
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    UniPoly num = UniPoly::monomial(1, t) - UniPoly::constant(1);
    UniPoly den = UniPoly::constant(1);
    for (unsigned long d = 1; d < t; ++d)
        if (t % d == 0) den *= cyclotomic_memo(d, memo);
    UniPoly phi = exact_quotient(num, den);
    memo.emplace(t, phi);
    return phi;
}

}  // namespace

UniPoly cyclotomic(unsigned long t) {
    if (t == 0) throw DomainError("cyclotomic polynomial of order 0");
    std::map<unsigned long, UniPoly> memo;
    return cyclotomic_memo(t, memo);
}

std::vector<unsigned long> totient_bounded_orders(unsigned long bound) {
    if (bound == 0) throw DomainError("totient bound must be positive");
    // phi(t) >= sqrt(t/2), so t <= 2 bound^2 covers everything.
    std::vector<unsigned long> out;
    for (unsigned long t = 2; t <= 2 * bound * bound; ++t)
        if (euler_phi(t) <= bound) out.push_back(t);
    return out;
}

// ---------------------------------------------------------------------------
// Integers

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n) {
    if (n == 0) throw DomainError("cannot factor 0");
    Integer m = abs(n);
    std::vector<std::pair<Integer, unsigned>> out;
    auto strip = [&](const Integer& p) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    constexpr unsigned long kTrialLimit = 1UL << 24;
    for (unsigned long p = 3; p <= kTrialLimit; p += 2) {
        Integer pp = p;
        if (pp * pp > m) break;
        strip(pp);
    }
    if (m > 1) {
        Integer lim = kTrialLimit;
        if (m > lim * lim && mpz_probab_prime_p(m.get_mpz_t(), 30) == 0)
            throw DomainError("integer has no small factorization: " + m.get_str());
        out.emplace_back(m, 1);
    }
    return out;
}

std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : factor_integer(n)) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Integer squarefree_part(const Integer& n) {
    if (n == 0) throw DomainError("squarefree part of 0");
    Integer m = sgn(n);
    for (const auto& [p, e] : factor_integer(n))
        if (e % 2) m *= p;
    return m;
}

Integer squarefree_part(const Rational& r) {
    if (r == 0) throw DomainError("squarefree part of 0");
    return squarefree_part(Integer(r.get_num() * r.get_den()));
}

bool is_rational_square(const Rational& r, Rational* root) {
    if (r < 0) return false;
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) return false;
    if (root) {
        Integer n = sqrt(r.get_num());
        Integer d = sqrt(r.get_den());
        *root = Rational(n, d);
        root->canonicalize();
    }
    return true;
}

// ---------------------------------------------------------------------------
// Rational roots and quartic factorization

namespace {

// Clears denominators and content so the result has coprime integer coefficients.
std::vector<Integer> primitive_integer_coeffs(const UniPoly& p) {
    Integer lcm = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& c : p.coefficients()) {
        Integer v = c.get_num() * (lcm / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        out.push_back(v);
    }
    for (auto& v : out) v /= g;
    return out;
}

UniPoly linear(const Rational& root) { return UniPoly{-root, 1}; }

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
    std::vector<Rational> roots;
    std::vector<Integer> c = primitive_integer_coeffs(p);
    std::size_t shift = 0;
    while (c[shift] == 0) ++shift;
    if (shift > 0) roots.emplace_back(0);
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(shift));
    if (c.size() > 1) {
        UniPoly reduced{std::vector<Rational>(c.begin(), c.end())};
        const auto nums = divisors(c.front());
        const auto dens = divisors(c.back());
        for (const auto& d : dens) {
            for (const auto& n : nums) {
                for (int sign : {1, -1}) {
                    Rational cand(n * sign, d);
                    cand.canonicalize();
                    if (cand.get_den() != d) continue;  // already seen with a smaller denominator
                    if (reduced.eval(cand) == 0) roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

namespace {

void validate_quartic(const UniPoly& chi) {
    if (chi.degree() != 4 || !chi.is_monic() || !chi.has_integer_coefficients())
        throw DomainError("expected a monic integer quartic, got " + chi.to_string());
}

bool factor_order(const PolyFactor& x, const PolyFactor& y) {
    if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
    const auto& a = x.factor.coefficients();
    const auto& b = y.factor.coefficients();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::vector<PolyFactor> factor_quartic(const UniPoly& chi) {
    validate_quartic(chi);
    std::vector<PolyFactor> out;
    UniPoly rest = chi;
    for (const auto& r : rational_roots(chi)) {
        PolyFactor f{linear(r), 0};
        while (rest.degree() > 0) {
            auto [q, rem] = divmod(rest, f.factor);
            if (!rem.is_zero()) break;
            rest = q;
            ++f.multiplicity;
        }
        out.push_back(f);
    }

    if (rest.degree() == 4) {
        // No rational roots; look for (T^2 + bT + c)(T^2 + dT + e) over Z.
        const Integer s3 = rest.coeff(3).get_num();
        const Integer s2 = rest.coeff(2).get_num();
        const Integer s1 = rest.coeff(1).get_num();
        const Integer s0 = rest.coeff(0).get_num();
        for (const auto& dv : divisors(s0)) {
            for (int sign : {1, -1}) {
                const Integer c = dv * sign;
                const Integer e = s0 / c;
                const Integer bd = s2 - c - e;
                const Integer disc = s3 * s3 - 4 * bd;
                if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
                const Integer root = sqrt(disc);
                if (((s3 + root) % 2) != 0) continue;
                const Integer b = (s3 + root) / 2;
                const Integer d = s3 - b;
                if (b * e + c * d != s1) continue;
                UniPoly f1{Rational(c), Rational(b), 1};
                UniPoly f2{Rational(e), Rational(d), 1};
                if (f1 == f2) {
                    out.push_back({f1, 2});
                } else {
                    out.push_back({f1, 1});
                    out.push_back({f2, 1});
                }
                std::sort(out.begin(), out.end(), factor_order);
                return out;
            }
        }
    }
    if (rest.degree() > 0) out.push_back({rest, 1});
    std::sort(out.begin(), out.end(), factor_order);
    return out;
}

bool is_irreducible_quartic(const UniPoly& chi) {
    auto f = factor_quartic(chi);
    return f.size() == 1 && f.front().multiplicity == 1;
}

UniPoly power_charpoly(const UniPoly& chi, unsigned n) {
    if (n == 0) throw DomainError("power_charpoly needs n >= 1");
    if (!chi.is_monic() || !chi.has_integer_coefficients())
        throw DomainError("power_charpoly needs a monic integer polynomial");
    if (n == 1) return chi;
    BiPoly p;
    for (const auto& c : chi.coefficients()) p.z_coeffs.push_back(UniPoly::constant(c));
    BiPoly q;
    q.z_coeffs.assign(n + 1, UniPoly());
    q.z_coeffs[0] = UniPoly::variable();
    q.z_coeffs[n] = UniPoly::constant(-1);
    return resultant_in_z(p, q);
}

// ---------------------------------------------------------------------------
// Text

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
    static const std::regex kRational(R"(\s*([+-]?\d+)(?:/(\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, kRational)) throw DomainError("not an exact rational: '" + text + "'");
    std::string num_text = m[1].str();
    if (num_text.front() == '+') num_text.erase(0, 1);
    Integer num(num_text);
    Integer den = m[2].matched ? Integer(m[2].str()) : Integer(1);
    if (den == 0) throw DomainError("zero denominator in '" + text + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace gl4
