#include "poly.hpp"

#include <sstream>

namespace atl {

Poly::Poly(const Cyclo& a) {
    if (!a.is_zero()) c_.push_back(a);
}

Poly Poly::monomial(const Cyclo& a, int e) {
    Poly p(a);
    if (!p.is_zero()) p.low_ = e;
    return p;
}

Poly Poly::from_coeffs(std::vector<Cyclo> c, int low) {
    Poly p;
    p.c_ = std::move(c);
    p.low_ = low;
    p.normalize();
    return p;
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    if (k) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
        low_ += static_cast<int>(k);
    }
    if (c_.empty()) low_ = 0;
}

Cyclo Poly::coeff(int e) const {
    if (e < low_ || e > high()) return Cyclo(0);
    return c_[e - low_];
}

const CycloField* Poly::field() const {
    for (auto& v : c_)
        if (v.field()) return v.field();
    return nullptr;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.low_, b.low_), hi = std::max(a.high(), b.high());
    std::vector<Cyclo> c(hi - lo + 1);
    for (int i = 0; i < a.length(); ++i) c[a.low_ - lo + i] = a.c_[i];
    for (int i = 0; i < b.length(); ++i) c[b.low_ - lo + i] += b.c_[i];
    return Poly::from_coeffs(std::move(c), lo);
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Cyclo> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly::from_coeffs(std::move(c), a.low_ + b.low_);
}

Poly operator*(const Cyclo& a, const Poly& b) {
    if (a.is_zero()) return Poly();
    Poly r = b;
    for (auto& v : r.c_) v = a * v;
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    if (a.c_.empty()) return true;
    if (a.low_ != b.low_) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

Poly Poly::shift(int k) const {
    Poly r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
}

Poly Poly::pow(int k) const {
    if (k < 0) {
        if (c_.size() != 1) throw ArithmeticError("negative power of a non-monomial");
        return monomial(c_[0].pow(k), low_ * k);
    }
    Poly base = *this, r(Cyclo(1));
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

Poly Poly::subst_pow(int k) const {
    if (is_zero()) return *this;
    std::vector<Cyclo> c(static_cast<size_t>(k) * (c_.size() - 1) + 1);
    for (size_t i = 0; i < c_.size(); ++i) c[i * k] = c_[i];
    return from_coeffs(std::move(c), low_ * k);
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return lead().inv() * (*this);
}

Cyclo Poly::eval(const Cyclo& x) const {
    if (is_zero()) return Cyclo(0);
    // Horner on the ordinary part, then multiply by x^low
    Cyclo acc = c_.back();
    for (int i = length() - 2; i >= 0; --i) acc = acc * x + c_[i];
    if (low_) acc = acc * x.pow(low_);
    return acc;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
    if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
    if (a.low_ < 0 && !a.is_zero()) throw ArithmeticError("divmod needs ordinary polynomials");
    if (b.low_ < 0) throw ArithmeticError("divmod needs ordinary polynomials");
    // dense ordinary representation
    int da = a.is_zero() ? -1 : a.high(), db = b.high();
    std::vector<Cyclo> r(da + 1 > 0 ? da + 1 : 0);
    for (int i = 0; i < a.length(); ++i) r[a.low_ + i] = a.c_[i];
    std::vector<Cyclo> bb(db + 1);
    for (int i = 0; i < b.length(); ++i) bb[b.low_ + i] = b.c_[i];
    Cyclo linv = bb[db].inv();
    std::vector<Cyclo> q(da >= db ? da - db + 1 : 0);
    for (int k = da; k >= db; --k) {
        if (r[k].is_zero()) continue;
        Cyclo f = r[k] * linv;
        q[k - db] = f;
        for (int j = 0; j <= db; ++j)
            if (!bb[j].is_zero()) r[k - db + j] -= f * bb[j];
    }
    if (db >= 0 && static_cast<int>(r.size()) > db) r.resize(db);
    quo = from_coeffs(std::move(q), 0);
    rem = from_coeffs(std::move(r), 0);
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
    if (a.is_zero()) return a;
    Poly an = a.shift(-a.low_), bn = b.shift(-b.low_);
    Poly q, r;
    divmod(an, bn, q, r);
    if (!r.is_zero()) throw ArithmeticError("inexact polynomial division");
    return q.shift(a.low_ - b.low_);
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a.is_zero() ? a : a.shift(-a.low_);
    Poly y = b.is_zero() ? b : b.shift(-b.low_);
    while (!y.is_zero()) {
        Poly q, r;
        divmod(x, y, q, r);
        x = y;
        y = r.is_zero() ? r : r.monic();
    }
    return x.monic();
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < length(); ++i) {
        if (c_[i].is_zero()) continue;
        int e = low_ + i;
        std::string cs = c_[i].str();
        bool neg = !cs.empty() && cs[0] == '-' && c_[i].is_rational();
        if (neg) cs = cs.substr(1);
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        bool unit = cs == "1";
        if (e == 0) os << cs;
        else {
            if (!unit) os << (c_[i].is_rational() ? cs : "(" + cs + ")") << "*";
            os << var;
            if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
        }
        first = false;
    }
    return os.str();
}

}  // namespace atl
