#include "gl4/finitefield.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace gl4 {

namespace {

using Pair = std::array<std::uint32_t, 2>;

std::uint32_t addm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}
std::uint32_t subm(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return a >= b ? a - b : a + p - b; }
std::uint32_t mulm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
std::uint32_t powm(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint32_t r = 1 % p;
    while (e) {
        if (e & 1U) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1U;
    }
    return r;
}
std::uint32_t invm(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw DomainError("inverse of zero in F_p");
    return powm(a, p - 2, p);
}

// F_{p^2} helpers, theta^2 = c.
Pair add2(Pair a, Pair b, std::uint32_t p) { return {addm(a[0], b[0], p), addm(a[1], b[1], p)}; }
Pair sub2(Pair a, Pair b, std::uint32_t p) { return {subm(a[0], b[0], p), subm(a[1], b[1], p)}; }
Pair mul2(Pair a, Pair b, std::uint32_t c, std::uint32_t p) {
    const std::uint64_t a0b0 = static_cast<std::uint64_t>(a[0]) * b[0];
    const std::uint64_t a1b1 = static_cast<std::uint64_t>(a[1]) * b[1] % p;
    const std::uint64_t cross = static_cast<std::uint64_t>(a[0]) * b[1] + static_cast<std::uint64_t>(a[1]) * b[0];
    return {static_cast<std::uint32_t>((a0b0 + a1b1 * c) % p), static_cast<std::uint32_t>(cross % p)};
}
std::uint32_t norm2(Pair a, std::uint32_t c, std::uint32_t p) {
    return subm(mulm(a[0], a[0], p), mulm(c, mulm(a[1], a[1], p), p), p);
}
Pair inv2(Pair a, std::uint32_t c, std::uint32_t p) {
    const std::uint32_t n = invm(norm2(a, c, p), p);
    return {mulm(a[0], n, p), mulm(subm(0, a[1], p), n, p)};
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int legendre(const Integer& a, std::uint32_t p) {
    Integer pp = p;
    return mpz_legendre(a.get_mpz_t(), pp.get_mpz_t());
}

// ---------------------------------------------------------------------------
// FiniteField

const FiniteField& FiniteField::get(std::uint32_t p, unsigned degree) {
    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, unsigned>, std::unique_ptr<FiniteField>> registry;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(p, degree);
    auto it = registry.find(key);
    if (it == registry.end()) {
        it = registry.emplace(key, std::unique_ptr<FiniteField>(new FiniteField(p, degree))).first;
    }
    return *it->second;
}

FiniteField::FiniteField(std::uint32_t p, unsigned degree) : p_(p), degree_(degree) {
    if (p == 2 || p > kMaxPrime || !is_prime(p)) throw DomainError("unsupported characteristic " + std::to_string(p));
    if (degree != 1 && degree != 2 && degree != 4) throw DomainError("unsupported extension degree " + std::to_string(degree));
    size_ = 1;
    for (unsigned i = 0; i < degree; ++i) size_ *= p;
    residue_.assign(p, 0);
    for (std::uint32_t y = 0; y < p; ++y) residue_[mulm(y, y, p)] = 1;
    for (std::uint32_t c = 2; c < p; ++c) {
        if (!residue_[c]) {
            nonresidue_ = c;
            break;
        }
    }
    nonsquare_ = {nonresidue_, 0, 0, 0};
    if (degree >= 2) {
        // First non-square of F_{p^2}: an element is a square iff its norm is.
        for (std::uint64_t idx = 1; idx < static_cast<std::uint64_t>(p) * p; ++idx) {
            Pair cand{static_cast<std::uint32_t>(idx % p), static_cast<std::uint32_t>(idx / p)};
            if (!residue_[norm2(cand, nonresidue_, p)]) {
                tower_nonsquare_ = cand;
                break;
            }
        }
        nonsquare_ = {tower_nonsquare_[0], tower_nonsquare_[1], 0, 0};
    }
    // eta has norm -nu to F_{p^2}, a non-square there, so eta is a non-square.
    if (degree == 4) nonsquare_ = {0, 0, 1, 0};
}

FqElem FiniteField::zero() const { return FqElem(this, {}); }
FqElem FiniteField::one() const { return FqElem(this, {1, 0, 0, 0}); }

FqElem FiniteField::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return FqElem(this, {static_cast<std::uint32_t>(r), 0, 0, 0});
}

FqElem FiniteField::from_rational(const Rational& r) const {
    Integer pp = p_;
    Integer den = r.get_den();
    if (mpz_divisible_p(den.get_mpz_t(), pp.get_mpz_t()))
        throw DomainError("denominator of " + r.get_str() + " divisible by " + std::to_string(p_));
    Integer n = r.get_num() % pp;
    if (n < 0) n += pp;
    Integer d = den % pp;
    const auto num = static_cast<std::uint32_t>(n.get_ui());
    const auto dd = static_cast<std::uint32_t>(d.get_ui());
    return FqElem(this, {mulm(num, invm(dd, p_), p_), 0, 0, 0});
}

FqElem FiniteField::from_coords(const std::array<std::uint32_t, 4>& coords) const {
    std::array<std::uint32_t, 4> c{};
    for (unsigned i = 0; i < degree_; ++i) c[i] = coords[i] % p_;
    for (unsigned i = degree_; i < 4; ++i)
        if (coords[i] != 0) throw DomainError("coordinates outside the field");
    return FqElem(this, c);
}

FqElem FiniteField::from_index(std::uint64_t index) const {
    if (index >= size_) throw DomainError("element index out of range");
    std::array<std::uint32_t, 4> c{};
    for (unsigned i = 0; i < degree_; ++i) {
        c[i] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return FqElem(this, c);
}

FqElem FiniteField::theta() const {
    if (degree_ < 2) throw DomainError("F_p has no theta");
    return FqElem(this, {0, 1, 0, 0});
}

FqElem FiniteField::eta() const {
    if (degree_ < 4) throw DomainError("eta needs F_{p^4}");
    return FqElem(this, {0, 0, 1, 0});
}

FqElem FiniteField::embed(const FqElem& x) const {
    if (x.field().characteristic() != p_ || degree_ % x.field().degree() != 0)
        throw DomainError("no embedding between these fields");
    return FqElem(this, x.coords());
}

bool FiniteField::in_subfield(const FqElem& x, unsigned sub_degree) const {
    for (unsigned i = sub_degree; i < 4; ++i)
        if (x.coords()[i] != 0) return false;
    return true;
}

FqElem FiniteField::restrict_to(const FqElem& x, const FiniteField& sub) const {
    if (!in_subfield(x, sub.degree())) throw DomainError("element not in the requested subfield");
    return sub.from_coords(x.coords());
}

// ---------------------------------------------------------------------------
// FqElem

void FqElem::check_same(const FqElem& o) const {
    if (field_ != o.field_) throw DomainError("mixing elements of different finite fields");
}

std::uint64_t FqElem::index() const {
    std::uint64_t idx = 0;
    for (int i = static_cast<int>(field_->degree_) - 1; i >= 0; --i) idx = idx * field_->p_ + c_[static_cast<std::size_t>(i)];
    return idx;
}

bool FqElem::is_one() const { return c_ == std::array<std::uint32_t, 4>{1, 0, 0, 0}; }

FqElem FqElem::operator+(const FqElem& o) const {
    check_same(o);
    const auto p = field_->p_;
    std::array<std::uint32_t, 4> r{};
    for (unsigned i = 0; i < field_->degree_; ++i) r[i] = addm(c_[i], o.c_[i], p);
    return FqElem(field_, r);
}

FqElem FqElem::operator-(const FqElem& o) const {
    check_same(o);
    const auto p = field_->p_;
    std::array<std::uint32_t, 4> r{};
    for (unsigned i = 0; i < field_->degree_; ++i) r[i] = subm(c_[i], o.c_[i], p);
    return FqElem(field_, r);
}

FqElem FqElem::operator-() const { return field_->zero() - *this; }

FqElem FqElem::operator*(const FqElem& o) const {
    check_same(o);
    const auto p = field_->p_;
    const auto c = field_->nonresidue_;
    switch (field_->degree_) {
    case 1:
        return FqElem(field_, {mulm(c_[0], o.c_[0], p), 0, 0, 0});
    case 2: {
        Pair r = mul2({c_[0], c_[1]}, {o.c_[0], o.c_[1]}, c, p);
        return FqElem(field_, {r[0], r[1], 0, 0});
    }
    default: {
        const Pair a{c_[0], c_[1]}, b{c_[2], c_[3]};
        const Pair x{o.c_[0], o.c_[1]}, y{o.c_[2], o.c_[3]};
        Pair lo = add2(mul2(a, x, c, p), mul2(mul2(b, y, c, p), field_->tower_nonsquare_, c, p), p);
        Pair hi = add2(mul2(a, y, c, p), mul2(b, x, c, p), p);
        return FqElem(field_, {lo[0], lo[1], hi[0], hi[1]});
    }
    }
}

bool FqElem::operator==(const FqElem& o) const { return field_ == o.field_ && c_ == o.c_; }

FqElem FqElem::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    const auto p = field_->p_;
    const auto c = field_->nonresidue_;
    switch (field_->degree_) {
    case 1:
        return FqElem(field_, {invm(c_[0], p), 0, 0, 0});
    case 2: {
        Pair r = inv2({c_[0], c_[1]}, c, p);
        return FqElem(field_, {r[0], r[1], 0, 0});
    }
    default: {
        // (A + B eta)^{-1} = (A - B eta) / (A^2 - nu B^2)
        const Pair a{c_[0], c_[1]}, b{c_[2], c_[3]};
        Pair n = sub2(mul2(a, a, c, p), mul2(field_->tower_nonsquare_, mul2(b, b, c, p), c, p), p);
        Pair ninv = inv2(n, c, p);
        Pair lo = mul2(a, ninv, c, p);
        Pair hi = mul2(sub2({0, 0}, b, p), ninv, c, p);
        return FqElem(field_, {lo[0], lo[1], hi[0], hi[1]});
    }
    }
}

FqElem FqElem::pow(std::uint64_t e) const {
    FqElem r = field_->one();
    FqElem b = *this;
    while (e) {
        if (e & 1U) r = r * b;
        e >>= 1U;
        if (e) b = b * b;
    }
    return r;
}

FqElem FqElem::frobenius() const { return pow(field_->p_); }

std::uint32_t FqElem::norm_to_prime_field() const {
    // N(x) = x^{(q-1)/(p-1)}.
    const std::uint64_t p = field_->p_;
    const std::uint64_t e = (field_->size_ - 1) / (p - 1);
    return pow(e).c_[0];
}

bool FqElem::is_square() const {
    // x^{(q-1)/2} = N(x)^{(p-1)/2}, so Euler's criterion reduces to the prime field.
    if (is_zero()) return true;
    const std::uint32_t n = field_->degree_ == 1 ? c_[0] : norm_to_prime_field();
    return field_->residue_[n] != 0;
}

std::optional<FqElem> FqElem::sqrt() const {
    if (is_zero()) return *this;
    if (!is_square()) return std::nullopt;
    const std::uint64_t q = field_->size_;
    std::uint64_t t = q - 1;
    unsigned s = 0;
    while ((t & 1U) == 0) {
        t >>= 1U;
        ++s;
    }
    const FqElem z(field_, field_->nonsquare_);
    FqElem c = z.pow(t);
    FqElem x = pow((t + 1) / 2);
    FqElem b = pow(t);
    unsigned m = s;
    while (!b.is_one()) {
        unsigned i = 0;
        FqElem b2 = b;
        while (!b2.is_one()) {
            b2 = b2 * b2;
            ++i;
        }
        FqElem g = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) g = g * g;
        x = x * g;
        c = g * g;
        b = b * c;
        m = i;
    }
    return x;
}

std::string FqElem::to_string() const {
    static const char* kBasis[4] = {"", "t", "e", "t*e"};
    std::string out;
    for (unsigned i = 0; i < field_->degree_; ++i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0 || c_[i] != 1) out += std::to_string(c_[i]);
        if (i > 0) out += (c_[i] != 1 ? "*" : "") + std::string(kBasis[i]);
    }
    return out.empty() ? "0" : out;
}

}  // namespace gl4
