#pragma once
// Scalar values used by every module: a cyclotomic number or, for generic q,
// a rational function in s = q^(1/2) with coefficients in Q(i).

#include <optional>
#include <string>
#include <variant>

#include "ratfn.hpp"

namespace atl {

class Scalar {
public:
    Scalar() : v_(Cyclo(0)) {}
    Scalar(long v) : v_(Cyclo(v)) {}  // NOLINT
    Scalar(int v) : v_(Cyclo(static_cast<long>(v))) {}  // NOLINT
    Scalar(const Cyclo& c) : v_(c) {}  // NOLINT
    Scalar(const RatFn& r);  // NOLINT
    Scalar(const Poly& p) : Scalar(RatFn(p)) {}  // NOLINT

    bool is_cyclo() const { return v_.index() == 0; }
    const Cyclo& cyclo() const { return std::get<0>(v_); }
    RatFn ratfn() const;

    bool is_zero() const { return is_cyclo() ? cyclo().is_zero() : std::get<1>(v_).is_zero(); }
    bool is_one() const { return is_cyclo() && cyclo().is_one(); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inv() const;
    Scalar pow(long k) const;
    long size_hint() const;
    std::string str() const;

private:
    std::variant<Cyclo, RatFn> v_;
};

// a*b subtracted in place, the hot kernel of elimination
inline void submul(Scalar& acc, const Scalar& a, const Scalar& b) {
    if (!a.is_zero() && !b.is_zero()) acc -= a * b;
}

struct UnsupportedScalar : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A root of unity exp(2 pi i * angle) or, for generic runs, c * s^half with s = q^(1/2).
struct RootSpec {
    bool generic = false;
    mpq_class angle = 0;    // absolute part as a fraction of a turn
    bool has_coeff = false;  // rational non-unit coefficient (generic only)
    mpq_class coeff = 1;
    int half = 0;            // power of q^(1/2) relative to the chosen square root
};

RootSpec parse_q_spec(const std::string& s);
RootSpec parse_z_spec(const std::string& s);

struct FieldCtx {
    bool generic = false;
    int M = 0;  // cyclotomic order hosting q, z (and square roots when requested)
    const CycloField* F = nullptr;
    long q_exp = 0, z_exp = 0, u_exp = -1, half_exp = -1;
    int q_order = 0;  // multiplicative order of q (0 for generic)
    int ell = 0;      // smallest l with q^(2l) = 1; 0 marks generic
    bool has_sqrt = false;
    // generic twist z = zc * s^z_half
    Cyclo zc = Cyclo(1);
    int z_half = 0;

    Scalar q, qinv, z, zinv, u, uinv, half_q, half_qinv, beta;

    Scalar qpow(long k) const;
    Scalar qhalfpow(long k) const;  // (q^(1/2))^k
    Scalar zpow(long k) const;
    Scalar upow(long k) const;
    Scalar from_rational(const mpq_class& v) const;
    Scalar root(long e) const;  // zeta_M^e, cyclotomic only
    // ctx with the same q but another twist
    FieldCtx with_z(const Scalar& z) const;

    std::string describe() const;
};

FieldCtx build_ctx(const RootSpec& q, const RootSpec& z, bool need_sqrt);
FieldCtx build_ctx(const std::string& q, const std::string& z, bool need_sqrt = true);

// exp(2 pi i a) for a rational a in the field of ctx, if present
std::optional<Scalar> root_in_ctx(const FieldCtx& ctx, const mpq_class& angle);

}  // namespace atl
