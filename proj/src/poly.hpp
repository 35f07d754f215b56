#pragma once
// Laurent polynomials in one variable with cyclotomic (or rational) coefficients.

#include <string>
#include <vector>

#include "cyclo.hpp"

namespace atl {

class Poly {
public:
    Poly() = default;
    Poly(const Cyclo& a);  // NOLINT: constants convert implicitly
    static Poly monomial(const Cyclo& a, int e);
    static Poly var(int e = 1) { return monomial(Cyclo(1), e); }
    static Poly from_coeffs(std::vector<Cyclo> c, int low);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1 && (c_.empty() || low_ == 0); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    int length() const { return static_cast<int>(c_.size()); }
    Cyclo coeff(int e) const;
    const Cyclo& lead() const { return c_.back(); }
    const Cyclo& trail() const { return c_.front(); }
    const std::vector<Cyclo>& coeffs() const { return c_; }
    const CycloField* field() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Cyclo& a, const Poly& b);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly shift(int k) const;  // multiply by x^k
    Poly pow(int k) const;    // k >= 0, or a monomial for k < 0
    Poly subst_pow(int k) const;  // x -> x^k, k > 0
    Poly monic() const;
    Cyclo eval(const Cyclo& x) const;

    // ordinary polynomial division; both operands must have low() >= 0
    static void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
    // exact Laurent division, throws if b does not divide a
    static Poly exact_div(const Poly& a, const Poly& b);
    // monic gcd of the parts with nonzero constant term
    static Poly gcd(const Poly& a, const Poly& b);

    std::string str(const std::string& var = "t") const;

private:
    std::vector<Cyclo> c_;
    int low_ = 0;
    void normalize();
};

}  // namespace atl
