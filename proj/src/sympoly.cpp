#include "coartin/sympoly.hpp"

#include <numeric>
#include <sstream>

namespace coartin {

bool GradedLex::operator()(const SymMonomial& a, const SymMonomial& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

SymPoly SymPoly::constant(FieldSpec field, std::size_t nvars, const Scalar& c) {
    SymPoly p(field, nvars);
    p.add(SymMonomial(nvars, 0), c);
    return p;
}

SymPoly SymPoly::variable(FieldSpec field, std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw ValidationError("SymPoly::variable: index out of range");
    SymPoly p(field, nvars);
    SymMonomial mono(nvars, 0);
    mono[index] = 1;
    p.add(mono, field.one());
    return p;
}

int SymPoly::totalDegree() const {
    if (terms_.empty()) return -1;
    const auto& top = terms_.rbegin()->first;
    return std::accumulate(top.begin(), top.end(), 0);
}

Scalar SymPoly::coefficient(const SymMonomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? field_.zero() : it->second;
}

void SymPoly::add(const SymMonomial& mono, const Scalar& c) {
    if (c.isZero()) return;
    auto [it, fresh] = terms_.emplace(mono, c);
    if (fresh) return;
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    if (!(field_ == o.field_) || n_ != o.n_) throw ValidationError("SymPoly: incompatible operands");
    for (const auto& [mono, c] : o.terms_) add(mono, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    if (!(field_ == o.field_) || n_ != o.n_) throw ValidationError("SymPoly: incompatible operands");
    for (const auto& [mono, c] : o.terms_) add(mono, -c);
    return *this;
}

SymPoly& SymPoly::operator*=(const Scalar& s) {
    if (s.isZero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, c] : terms_) c *= s;
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    if (!(a.field_ == b.field_) || a.n_ != b.n_) throw ValidationError("SymPoly: incompatible operands");
    SymPoly out(a.field_, a.n_);
    SymMonomial mono(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < a.n_; ++i) mono[i] = ma[i] + mb[i];
            out.add(mono, ca * cb);
        }
    return out;
}

Scalar SymPoly::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != n_) throw ValidationError("SymPoly::evaluate: wrong number of values");
    Scalar sum = field_.zero();
    for (const auto& [mono, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < n_; ++i)
            if (mono[i] > 0) t *= point[i].pow(mono[i]);
        sum += t;
    }
    return sum;
}

SymPoly SymPoly::partialEvaluate(const std::vector<Scalar>& point, const std::vector<bool>& known) const {
    if (point.size() != n_ || known.size() != n_) throw ValidationError("SymPoly::partialEvaluate: wrong sizes");
    SymPoly out(field_, n_);
    for (const auto& [mono, c] : terms_) {
        Scalar t = c;
        SymMonomial rest = mono;
        for (std::size_t i = 0; i < n_; ++i)
            if (known[i] && mono[i] > 0) {
                t *= point[i].pow(mono[i]);
                rest[i] = 0;
            }
        out.add(rest, t);
    }
    return out;
}

std::string SymPoly::toString(const std::vector<std::string>& names) const {
    if (names.size() != n_) throw ValidationError("SymPoly::toString: wrong number of names");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [mono, c] = *it;
        const bool negative = field_.isRational() && sgn(c.rational()) < 0;
        const Scalar mag = negative ? -c : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        std::vector<std::string> factors;
        const bool isConstant = std::accumulate(mono.begin(), mono.end(), 0) == 0;
        if (!mag.isOne() || isConstant) factors.push_back(mag.toString());
        for (std::size_t i = 0; i < n_; ++i) {
            if (mono[i] == 0) continue;
            factors.push_back(mono[i] == 1 ? names[i] : names[i] + "^" + std::to_string(mono[i]));
        }
        for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
    }
    return os.str();
}

}  // namespace coartin
