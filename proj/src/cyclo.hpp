#pragma once
// Exact elements of a cyclotomic field Q(zeta_M).

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace atl {

struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CycloField {
    int M = 1;
    int phi = 1;
    std::vector<int64_t> poly;                   // monic Phi_M, constant term first
    std::vector<std::vector<int64_t>> pow_table;  // x^e mod Phi_M, 0 <= e < M

    static const CycloField* get(int M);
    static std::vector<mpz_class> cyclotomic_poly(int M);
};

class Cyclo {
public:
    static constexpr int kFast = 8;

    Cyclo() = default;
    Cyclo(long v) { c_[0] = v; }  // NOLINT: implicit from integers is convenient
    Cyclo(long n, long d);
    Cyclo(const CycloField* F, long v);
    static Cyclo root(const CycloField* F, long e);  // zeta_M^e
    static Cyclo from_mpq(const CycloField* F, const std::vector<mpq_class>& c);
    static Cyclo from_mpz(const CycloField* F, std::vector<mpz_class> num, mpz_class den);

    const CycloField* field() const { return F_; }
    int dim() const { return F_ ? F_->phi : 1; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;  // lies in Q
    bool is_big() const { return static_cast<bool>(big_); }

    // coefficients over a common denominator
    std::vector<mpz_class> numerators() const;
    mpz_class denominator() const;
    mpq_class coeff(int k) const;
    mpq_class rational_value() const;  // requires is_rational()

    Cyclo operator-() const;
    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inv(); }
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    Cyclo inv() const;
    Cyclo pow(long k) const;
    Cyclo in_field(const CycloField* F) const;  // embed a rational into F
    // Galois action zeta -> zeta^k (k coprime to M)
    Cyclo galois(long k) const;
    // crude cost measure used for pivot selection
    long size_hint() const;

    std::string str() const;

private:
    const CycloField* F_ = nullptr;
    int64_t c_[kFast] = {0, 0, 0, 0, 0, 0, 0, 0};
    int64_t den_ = 1;
    struct Big {
        std::vector<mpz_class> num;
        mpz_class den;
    };
    std::shared_ptr<const Big> big_;

    static Cyclo make_big(const CycloField* F, std::vector<mpz_class> num, mpz_class den);
    static const CycloField* common(const Cyclo& a, const Cyclo& b);
};

}  // namespace atl
