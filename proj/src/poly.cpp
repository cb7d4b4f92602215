#include "coartin/poly.hpp"

#include <cctype>
#include <sstream>

namespace coartin {

// ---------------------------------------------------------------- Poly

Poly::Poly(FieldSpec field, std::vector<Scalar> coeffs) : field_(field), c_(std::move(coeffs)) {
    for (const auto& s : c_)
        if (s.characteristic() != field_.characteristic())
            throw ValidationError("coefficient field does not match polynomial field");
    trim();
}

Poly Poly::monomial(FieldSpec field, std::size_t degree, const Scalar& c) {
    std::vector<Scalar> v(degree + 1, field.zero());
    v[degree] = c;
    return Poly(field, std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

long Poly::lowestDegree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].isZero()) return static_cast<long>(i);
    return -1;
}

Scalar Poly::coeff(std::size_t j) const { return j < c_.size() ? c_[j] : field_.zero(); }

Poly& Poly::operator+=(const Poly& o) {
    if (!(field_ == o.field_)) throw ValidationError("polynomial field mismatch");
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (!(field_ == o.field_)) throw ValidationError("polynomial field mismatch");
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (!(a.field_ == b.field_)) throw ValidationError("polynomial field mismatch");
    if (a.isZero() || b.isZero()) return Poly(a.field_);
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].isZero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].isZero()) continue;
            r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Poly(a.field_, std::move(r));
}

Poly Poly::pow(unsigned e) const {
    Poly result = monomial(field_, 0);
    for (unsigned k = 0; k < e; ++k) result = result * *this;
    return result;
}

TruncPoly Poly::truncate(std::size_t m) const {
    TruncPoly t(field_, m);
    for (std::size_t i = 0; i < c_.size() && i < m; ++i) t[i] = c_[i];
    return t;
}

namespace {

void appendTerm(std::ostringstream& os, const Scalar& c, std::size_t deg, std::string_view var, bool first) {
    const bool negative = c.characteristic() == 0 && sgn(c.rational()) < 0;
    const Scalar mag = negative ? -c : c;
    if (first)
        os << (negative ? "-" : "");
    else
        os << (negative ? " - " : " + ");
    if (deg == 0) {
        os << mag.toString();
        return;
    }
    if (!mag.isOne()) {
        const std::string s = mag.toString();
        os << s;
        if (s.find('/') != std::string::npos) os << ' ';
    }
    os << var;
    if (deg > 1) os << '^' << deg;
}

}  // namespace

std::string Poly::toString(std::string_view var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].isZero()) continue;
        appendTerm(os, c_[i], i, var, first);
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- TruncPoly

TruncPoly::TruncPoly(FieldSpec field, std::size_t m) : field_(field), c_(m, field.zero()) {
    if (m == 0) throw ValidationError("truncation order must be positive");
}

TruncPoly::TruncPoly(FieldSpec field, std::size_t m, std::vector<Scalar> coeffs)
    : field_(field), c_(std::move(coeffs)) {
    if (c_.size() != m)
        throw ValidationError("truncated polynomial needs exactly " + std::to_string(m) + " coefficients, got " +
                              std::to_string(c_.size()));
    if (m == 0) throw ValidationError("truncation order must be positive");
    for (const auto& s : c_)
        if (s.characteristic() != field_.characteristic())
            throw ValidationError("coefficient field does not match polynomial field");
}

TruncPoly TruncPoly::one(FieldSpec field, std::size_t m) { return monomial(field, m, 0); }

TruncPoly TruncPoly::monomial(FieldSpec field, std::size_t m, std::size_t degree) {
    TruncPoly t(field, m);
    if (degree < m) t[degree] = field.one();
    return t;
}

bool TruncPoly::isZero() const {
    for (const auto& c : c_)
        if (!c.isZero()) return false;
    return true;
}

long TruncPoly::lowestDegree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].isZero()) return static_cast<long>(i);
    return -1;
}

void TruncPoly::requireCompatible(const TruncPoly& o) const {
    if (c_.size() != o.c_.size())
        throw ValidationError("truncation order mismatch: " + std::to_string(c_.size()) + " vs " +
                              std::to_string(o.c_.size()));
    if (!(field_ == o.field_)) throw ValidationError("polynomial field mismatch");
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& o) {
    requireCompatible(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

TruncPoly& TruncPoly::operator-=(const TruncPoly& o) {
    requireCompatible(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

TruncPoly& TruncPoly::operator*=(const Scalar& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

TruncPoly TruncPoly::pow(unsigned e) const {
    TruncPoly result = one(field_, m());
    for (unsigned k = 0; k < e; ++k) result = mulInF(result, *this);
    return result;
}

Poly TruncPoly::toPoly() const { return Poly(field_, c_); }

TruncPoly mulInF(const TruncPoly& f, const TruncPoly& g) {
    if (f.m() != g.m())
        throw ValidationError("mulInF: truncation order mismatch " + std::to_string(f.m()) + " vs " +
                              std::to_string(g.m()));
    if (!(f.field() == g.field())) throw ValidationError("mulInF: field mismatch");
    const std::size_t m = f.m();
    TruncPoly r(f.field(), m);
    for (std::size_t i = 0; i < m; ++i) {
        if (f[i].isZero()) continue;
        for (std::size_t j = 0; i + j < m; ++j) {
            if (g[j].isZero()) continue;
            r[i + j] += f[i] * g[j];
        }
    }
    return r;
}

// ---------------------------------------------------------------- ConductorElement

ConductorElement::ConductorElement(FieldSpec field, std::size_t m) : field_(field), coords_(m, Poly(field)) {
    if (m == 0) throw ValidationError("truncation order must be positive");
}

ConductorElement::ConductorElement(std::size_t m, std::vector<Poly> coords) : coords_(std::move(coords)) {
    if (m == 0 || coords_.size() != m)
        throw ValidationError("conductor element needs exactly m coordinate polynomials");
    field_ = coords_.front().field();
    for (const auto& c : coords_)
        if (!(c.field() == field_)) throw ValidationError("conductor coordinates over different fields");
}

bool ConductorElement::isZero() const {
    for (const auto& c : coords_)
        if (!c.isZero()) return false;
    return true;
}

Poly ConductorElement::expand() const {
    const std::size_t m = coords_.size();
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& pi = coords_[i].coeffs();
        for (std::size_t k = 0; k < pi.size(); ++k) {
            if (pi[k].isZero()) continue;
            const std::size_t deg = k * m + m + i;
            if (out.size() <= deg) out.resize(deg + 1, field_.zero());
            out[deg] += pi[k];
        }
    }
    return Poly(field_, std::move(out));
}

std::string ConductorElement::toString() const {
    const std::size_t m = coords_.size();
    std::ostringstream os;
    bool first = true;
    os << '[';
    for (std::size_t i = 0; i < m; ++i) {
        if (coords_[i].isZero()) continue;
        os << (first ? "" : " + ") << '(' << coords_[i].toString("y") << ")x^" << (m + i);
        first = false;
    }
    if (first) os << '0';
    os << ']';
    return os.str();
}

std::pair<TruncPoly, ConductorElement> splitConductor(const Poly& p, std::size_t m) {
    if (m == 0) throw ValidationError("truncation order must be positive");
    const FieldSpec field = p.field();
    TruncPoly bar = p.truncate(m);
    std::vector<std::vector<Scalar>> coords(m);
    const auto& c = p.coeffs();
    for (std::size_t d = m; d < c.size(); ++d) {
        if (c[d].isZero()) continue;
        const std::size_t i = d % m;
        const std::size_t k = d / m - 1;
        if (coords[i].size() <= k) coords[i].resize(k + 1, field.zero());
        coords[i][k] = c[d];
    }
    std::vector<Poly> polys;
    polys.reserve(m);
    for (auto& v : coords) polys.emplace_back(field, std::move(v));
    return {std::move(bar), ConductorElement(m, std::move(polys))};
}

// ---------------------------------------------------------------- parser

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, FieldSpec field) : s_(text), field_(field), result_(field) {}

    Poly run() {
        skipWs();
        if (pos_ == s_.size()) fail("empty polynomial");
        bool firstTerm = true;
        while (true) {
            skipWs();
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
                skipWs();
            } else if (!firstTerm) {
                fail("expected '+' or '-'");
            }
            parseTerm(negative);
            firstTerm = false;
            skipWs();
            if (pos_ == s_.size()) break;
        }
        return result_;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skipWs() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw ValidationError("malformed polynomial '" + std::string(s_) + "' at column " + std::to_string(pos_) +
                              ": " + why);
    }

    std::string digits() {
        std::string d;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
        return d;
    }

    void parseTerm(bool negative) {
        Scalar coeff = field_.one();
        bool haveCoeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string lit = digits();
            if (peek() == '/') {
                ++pos_;
                std::string den = digits();
                if (den.empty()) fail("missing denominator");
                lit += "/" + den;
            }
            coeff = field_.parse(lit);
            haveCoeff = true;
            skipWs();
            if (peek() == '*') {
                ++pos_;
                skipWs();
                if (peek() != 'x') fail("'*' must be followed by x");
            }
        }
        std::size_t degree = 0;
        if (peek() == 'x') {
            ++pos_;
            degree = 1;
            skipWs();
            if (peek() == '^') {
                ++pos_;
                skipWs();
                std::string e = digits();
                if (e.empty()) fail("missing exponent");
                if (e.size() > 6) fail("exponent too large");
                degree = std::stoul(e);
            }
        } else if (!haveCoeff) {
            fail("expected a coefficient or x");
        }
        skipWs();
        if (pos_ < s_.size() && peek() != '+' && peek() != '-') fail("unexpected character '" + std::string(1, peek()) + "'");
        if (negative) coeff = -coeff;
        result_ += Poly::monomial(field_, degree, coeff);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    FieldSpec field_;
    Poly result_;
};

}  // namespace

Poly parsePoly(std::string_view text, FieldSpec field) { return PolyParser(text, field).run(); }

std::vector<Poly> parsePolyList(std::string_view text, FieldSpec field) {
    std::vector<Poly> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back(parsePoly(line, field));
    }
    return out;
}

}  // namespace coartin
