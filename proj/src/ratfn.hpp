#pragma once
// Rational functions num/den in one variable, kept in reduced form x^k * P / Q
// with Q monic, Q(0) != 0 and gcd(P, Q) = 1.

#include "poly.hpp"

namespace atl {

class RatFn {
public:
    RatFn() = default;
    RatFn(const Poly& p);  // NOLINT
    RatFn(const Cyclo& a) : RatFn(Poly(a)) {}  // NOLINT
    RatFn(const Poly& num, const Poly& den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_constant(); }
    bool is_constant() const { return is_poly() && num_.is_constant(); }
    Cyclo constant() const { return num_.coeff(0); }

    RatFn operator-() const;
    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inv(); }
    friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }
    RatFn inv() const;
    RatFn pow(int k) const;
    RatFn subst_pow(int k) const;  // x -> x^k
    long size_hint() const;

    std::string str(const std::string& var = "t") const;

private:
    Poly num_;
    Poly den_ = Poly(Cyclo(1));
    void reduce();
};

}  // namespace atl
