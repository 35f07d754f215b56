#include "ratfn.hpp"

namespace atl {

RatFn::RatFn(const Poly& p) : num_(p) {}

RatFn::RatFn(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
    reduce();
}

void RatFn::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(Cyclo(1));
        return;
    }
    int k = num_.low() - den_.low();
    Poly p = num_.shift(-num_.low()), q = den_.shift(-den_.low());
    if (q.length() > 1) {
        Poly g = Poly::gcd(p, q);
        if (g.length() > 1) {
            p = Poly::exact_div(p, g);
            q = Poly::exact_div(q, g);
        }
    }
    Cyclo l = q.lead().inv();
    num_ = (l * p).shift(k);
    den_ = l * q;
}

RatFn RatFn::operator-() const {
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        RatFn r;
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
        if (!r.is_poly()) r.reduce();
        else if (r.num_.is_zero()) r.den_ = Poly(Cyclo(1));
        return r;
    }
    if (a.is_poly() || b.is_poly()) {
        RatFn r;
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
        // a polynomial plus p/q keeps gcd 1 with q
        if (r.num_.is_zero()) r.den_ = Poly(Cyclo(1));
        return r;
    }
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator*(const RatFn& a, const RatFn& b) {
    if (a.is_zero() || b.is_zero()) return RatFn();
    if (a.is_poly() && b.is_poly()) {
        RatFn r;
        r.num_ = a.num_ * b.num_;
        return r;
    }
    return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn RatFn::inv() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    return RatFn(den_, num_);
}

RatFn RatFn::pow(int k) const {
    if (k < 0) return inv().pow(-k);
    RatFn r(Cyclo(1)), base = *this;
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

RatFn RatFn::subst_pow(int k) const { return RatFn(num_.subst_pow(k), den_.subst_pow(k)); }

long RatFn::size_hint() const {
    long s = 0;
    for (auto& c : num_.coeffs()) s += c.size_hint() + 4;
    for (auto& c : den_.coeffs()) s += c.size_hint() + 4;
    return s;
}

std::string RatFn::str(const std::string& var) const {
    if (is_poly()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace atl
