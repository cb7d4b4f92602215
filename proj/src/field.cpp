#include "coartin/field.hpp"

#include <numeric>

namespace coartin {

namespace {

std::uint64_t mulMod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powMod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e > 0) {
        if (e & 1U) r = mulMod(r, a, p);
        a = mulMod(a, a, p);
        e >>= 1U;
    }
    return r;
}

std::uint64_t reduceMpz(const mpz_class& z, std::uint64_t p) {
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

}  // namespace

bool isPrime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec::FieldSpec(std::uint64_t characteristic) : p_(characteristic) {
    if (p_ != 0 && (!isPrime(p_) || p_ >= (1ULL << 31)))
        throw ValidationError("characteristic must be 0 or a prime below 2^31, got " +
                              std::to_string(p_));
}

Scalar FieldSpec::zero() const {
    Scalar s;
    s.p_ = p_;
    return s;
}

Scalar FieldSpec::one() const { return fromInt(1); }

Scalar FieldSpec::fromInt(long v) const {
    Scalar s;
    s.p_ = p_;
    if (p_ == 0) {
        s.q_ = v;
    } else {
        long r = v % static_cast<long>(p_);
        if (r < 0) r += static_cast<long>(p_);
        s.r_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar FieldSpec::fromRational(const mpq_class& q) const {
    Scalar s;
    s.p_ = p_;
    if (p_ == 0) {
        s.q_ = q;
        s.q_.canonicalize();
        return s;
    }
    const std::uint64_t den = reduceMpz(q.get_den(), p_);
    if (den == 0)
        throw ValidationError("denominator " + q.get_den().get_str() + " vanishes in characteristic " +
                              std::to_string(p_));
    s.r_ = mulMod(reduceMpz(q.get_num(), p_), powMod(den, p_ - 2, p_), p_);
    return s;
}

Scalar FieldSpec::parse(std::string_view text) const {
    std::string t(text);
    if (t.empty()) throw ValidationError("empty scalar literal");
    mpq_class q;
    try {
        if (t.find('/') != std::string::npos) {
            const auto slash = t.find('/');
            mpz_class num(t.substr(0, slash)), den(t.substr(slash + 1));
            if (den == 0) throw ValidationError("zero denominator in '" + t + "'");
            q = mpq_class(num, den);
        } else {
            q = mpq_class(mpz_class(t));
        }
    } catch (const std::invalid_argument&) {
        throw ValidationError("malformed scalar literal '" + t + "'");
    }
    q.canonicalize();
    return fromRational(q);
}

void Scalar::requireSameField(const Scalar& o) const {
    if (p_ != o.p_)
        throw ValidationError("scalar characteristic mismatch: " + std::to_string(p_) + " vs " +
                              std::to_string(o.p_));
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_ == 0)
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : p_ - r_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    requireSameField(o);
    if (p_ == 0) {
        q_ += o.q_;
    } else {
        r_ += o.r_;
        if (r_ >= p_) r_ -= p_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    requireSameField(o);
    if (p_ == 0)
        q_ -= o.q_;
    else
        r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    requireSameField(o);
    if (p_ == 0)
        q_ *= o.q_;
    else
        r_ = mulMod(r_, o.r_, p_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
    if (isZero()) throw ValidationError("division by zero");
    Scalar s = *this;
    if (p_ == 0)
        s.q_ = 1 / q_;
    else
        s.r_ = powMod(r_, p_ - 2, p_);
    return s;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result = field().one();
    Scalar base = *this;
    auto k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1UL) result *= base;
        base *= base;
        k >>= 1U;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) return false;
    return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

bool operator<(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) return a.p_ < b.p_;
    return a.p_ == 0 ? a.q_ < b.q_ : a.r_ < b.r_;
}

const mpq_class& Scalar::rational() const {
    if (p_ != 0) throw ValidationError("rational() on a characteristic-p scalar");
    return q_;
}

std::uint64_t Scalar::residue() const {
    if (p_ == 0) throw ValidationError("residue() on a rational scalar");
    return r_;
}

std::string Scalar::toJsonString() const {
    if (p_ != 0) return std::to_string(r_);
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Scalar::toString() const {
    if (p_ != 0) return std::to_string(r_);
    return q_.get_str();
}

std::uint64_t pCoPrimeDivisor(std::uint64_t n, std::uint64_t p) {
    if (n == 0) throw ValidationError("p-co-prime divisor of 0 is undefined");
    if (!isPrime(p)) throw ValidationError("p-co-prime divisor needs a prime, got " + std::to_string(p));
    while (n % p == 0) n /= p;
    return n;
}

std::uint64_t gcdOfSet(std::span<const std::uint64_t> values) {
    if (values.empty()) throw ValidationError("gcd of an empty set");
    std::uint64_t g = 0;
    for (auto v : values) {
        if (v == 0) throw ValidationError("gcd set elements must be positive");
        g = std::gcd(g, v);
    }
    return g;
}

}  // namespace coartin
