#include "scalar.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace atl {

Scalar::Scalar(const RatFn& r) {
    if (r.is_constant()) v_ = r.constant();
    else v_ = r;
}

RatFn Scalar::ratfn() const { return is_cyclo() ? RatFn(cyclo()) : std::get<1>(v_); }

Scalar Scalar::operator-() const {
    if (is_cyclo()) return Scalar(-cyclo());
    return Scalar(-std::get<1>(v_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_cyclo() && b.is_cyclo()) return Scalar(a.cyclo() + b.cyclo());
    return Scalar(a.ratfn() + b.ratfn());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.is_cyclo() && b.is_cyclo()) return Scalar(a.cyclo() - b.cyclo());
    return Scalar(a.ratfn() - b.ratfn());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_cyclo() && b.is_cyclo()) return Scalar(a.cyclo() * b.cyclo());
    if (a.is_zero() || b.is_zero()) return Scalar(0);
    return Scalar(a.ratfn() * b.ratfn());
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (is_cyclo() && o.is_cyclo()) std::get<0>(v_) += o.cyclo();
    else *this = *this + o;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (is_cyclo() && o.is_cyclo()) std::get<0>(v_) -= o.cyclo();
    else *this = *this - o;
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_cyclo() && b.is_cyclo()) return a.cyclo() == b.cyclo();
    if (a.is_cyclo() != b.is_cyclo()) return false;
    return std::get<1>(a.v_) == std::get<1>(b.v_);
}

Scalar Scalar::inv() const {
    if (is_cyclo()) return Scalar(cyclo().inv());
    return Scalar(std::get<1>(v_).inv());
}

Scalar Scalar::pow(long k) const {
    if (is_cyclo()) return Scalar(cyclo().pow(k));
    return Scalar(std::get<1>(v_).pow(static_cast<int>(k)));
}

long Scalar::size_hint() const {
    if (is_cyclo()) return cyclo().size_hint();
    return 100 + std::get<1>(v_).size_hint();
}

std::string Scalar::str() const {
    if (is_cyclo()) return cyclo().str();
    return std::get<1>(v_).str("s");
}

namespace {

std::string strip(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    return s;
}

mpq_class frac(mpq_class a) {
    // reduce modulo 1 into [0,1)
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    a -= fl;
    a.canonicalize();
    return a;
}

bool parse_rational(const std::string& s, mpq_class& out) {
    if (s.empty()) return false;
    std::string t = s;
    if (t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    size_t i = 0;
    if (t[i] == '-' || t[i] == '+') ++i;
    bool digit = false, slash = false;
    for (; i < t.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(t[i]))) digit = true;
        else if (t[i] == '/' && !slash) slash = true;
        else return false;
    }
    if (!digit) return false;
    try {
        out = mpq_class(t[0] == '+' ? t.substr(1) : t);
        if (out.get_den() == 0) return false;
        out.canonicalize();
    } catch (...) {
        return false;
    }
    return true;
}

// root-of-unity literal: zetaM^k, zetaM, 1, -1, i, -i
bool parse_root(const std::string& s, mpq_class& angle) {
    if (s == "1" || s == "+1") return angle = 0, true;
    if (s == "-1") return angle = mpq_class(1, 2), true;
    if (s == "i") return angle = mpq_class(1, 4), true;
    if (s == "-i") return angle = mpq_class(3, 4), true;
    std::string t = s;
    bool neg = false;
    if (!t.empty() && t[0] == '-') neg = true, t = t.substr(1);
    if (t.rfind("zeta", 0) != 0) return false;
    t = t.substr(4);
    if (!t.empty() && t[0] == '_') t = t.substr(1);
    size_t caret = t.find('^');
    std::string ms = t.substr(0, caret), ks = caret == std::string::npos ? "1" : t.substr(caret + 1);
    if (!ks.empty() && ks.front() == '(' && ks.back() == ')') ks = ks.substr(1, ks.size() - 2);
    mpq_class m, k;
    if (!parse_rational(ms, m) || !parse_rational(ks, k)) return false;
    if (m.get_den() != 1 || k.get_den() != 1 || m <= 0) return false;
    angle = frac(k / m + (neg ? mpq_class(1, 2) : mpq_class(0)));
    return true;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// the square root of exp(2 pi i a) with the smaller order
mpq_class sqrt_angle(const mpq_class& a) {
    mpq_class r1 = frac(a / 2), r2 = frac(a / 2 + mpq_class(1, 2));
    return r2.get_den() < r1.get_den() ? r2 : r1;
}

}  // namespace

RootSpec parse_q_spec(const std::string& raw) {
    std::string s = strip(raw);
    RootSpec r;
    if (s == "generic") {
        r.generic = true;
        return r;
    }
    if (!parse_root(s, r.angle)) throw UnsupportedScalar("cannot parse q value '" + raw + "'");
    return r;
}

RootSpec parse_z_spec(const std::string& raw) {
    std::string s = strip(raw);
    RootSpec r;
    size_t qpos = s.find('q');
    std::string pre = qpos == std::string::npos ? s : s.substr(0, qpos);
    if (qpos != std::string::npos) {
        std::string ex = s.substr(qpos + 1);
        if (ex.empty()) r.half = 2;
        else {
            if (ex[0] != '^') throw UnsupportedScalar("cannot parse z value '" + raw + "'");
            mpq_class e;
            if (!parse_rational(ex.substr(1), e)) throw UnsupportedScalar("cannot parse z exponent in '" + raw + "'");
            mpq_class h = 2 * e;
            h.canonicalize();
            if (h.get_den() != 1) throw UnsupportedScalar("z exponent must be a multiple of 1/2 in '" + raw + "'");
            r.half = static_cast<int>(h.get_num().get_si());
        }
        if (!pre.empty() && pre.back() == '*') pre.pop_back();
        if (pre.empty()) return r;
        if (pre == "-") {
            r.angle = mpq_class(1, 2);
            return r;
        }
    }
    if (parse_root(pre, r.angle)) return r;
    mpq_class c;
    if (parse_rational(pre, c) && c != 0) {
        if (c < 0) r.angle = mpq_class(1, 2), c = -c;
        if (c != 1) r.has_coeff = true, r.coeff = c;
        return r;
    }
    throw UnsupportedScalar("cannot parse z value '" + raw + "'");
}

FieldCtx build_ctx(const RootSpec& qs, const RootSpec& zs, bool need_sqrt) {
    FieldCtx c;
    if (qs.generic) {
        c.generic = true;
        c.F = CycloField::get(4);
        c.M = 4;
        c.has_sqrt = true;
        if (mpz_class(4) % zs.angle.get_den() != 0)
            throw UnsupportedScalar("generic runs support z = c*q^(a/2) with c in Q(i)");
        mpq_class ua = zs.angle * 4;
        ua.canonicalize();
        Cyclo unit = Cyclo::root(c.F, ua.get_num().get_si());
        c.zc = unit * Cyclo::from_mpq(c.F, {zs.coeff});
        c.z_half = zs.half;
        Poly s = Poly::var(1);
        c.half_q = Scalar(s);
        c.half_qinv = Scalar(Poly::var(-1));
        c.q = Scalar(Poly::var(2));
        c.qinv = Scalar(Poly::var(-2));
        Cyclo i = Cyclo::root(c.F, 1);
        c.u = Scalar(Poly::monomial(i, 1));
        c.uinv = c.u.inv();
        c.z = Scalar(Poly::monomial(c.zc, c.z_half));
        c.zinv = c.z.inv();
        c.beta = -(c.q + c.qinv);
        return c;
    }
    if (zs.has_coeff) throw UnsupportedScalar("the cyclotomic backend only hosts roots of unity for z");
    mpq_class aq = frac(qs.angle);
    mpq_class ah = sqrt_angle(aq);
    mpq_class au = sqrt_angle(frac(aq + mpq_class(1, 2)));
    mpq_class az = frac(zs.angle + zs.half * ah);
    mpz_class M = lcm(aq.get_den(), az.get_den());
    bool sq = need_sqrt || (zs.half % 2 != 0);
    if (sq) M = lcm(M, ah.get_den());
    if (need_sqrt) M = lcm(M, au.get_den());
    if (M > 4096) throw UnsupportedScalar("cyclotomic order too large");
    c.M = static_cast<int>(M.get_si());
    c.F = CycloField::get(c.M);
    auto expo = [&](const mpq_class& a) {
        mpq_class e = a * c.M;
        e.canonicalize();
        return e.get_num().get_si();
    };
    c.q_exp = expo(aq);
    c.z_exp = expo(az);
    c.q_order = static_cast<int>(aq.get_den().get_si());
    c.ell = static_cast<int>(frac(2 * aq).get_den().get_si());
    c.q = Scalar(Cyclo::root(c.F, c.q_exp));
    c.qinv = Scalar(Cyclo::root(c.F, -c.q_exp));
    c.z = Scalar(Cyclo::root(c.F, c.z_exp));
    c.zinv = Scalar(Cyclo::root(c.F, -c.z_exp));
    if (sq) {
        c.half_exp = expo(ah);
        c.half_q = Scalar(Cyclo::root(c.F, c.half_exp));
        c.half_qinv = Scalar(Cyclo::root(c.F, -c.half_exp));
    }
    if (need_sqrt) {
        c.has_sqrt = true;
        c.u_exp = expo(au);
        c.u = Scalar(Cyclo::root(c.F, c.u_exp));
        c.uinv = Scalar(Cyclo::root(c.F, -c.u_exp));
    }
    c.beta = -(c.q + c.qinv);
    return c;
}

FieldCtx build_ctx(const std::string& q, const std::string& z, bool need_sqrt) {
    return build_ctx(parse_q_spec(q), parse_z_spec(z), need_sqrt);
}

Scalar FieldCtx::qpow(long k) const {
    if (generic) return Scalar(Poly::var(static_cast<int>(2 * k)));
    return Scalar(Cyclo::root(F, k * q_exp));
}

Scalar FieldCtx::qhalfpow(long k) const {
    if (generic) return Scalar(Poly::var(static_cast<int>(k)));
    if (k % 2 == 0) return qpow(k / 2);
    if (half_exp < 0) throw UnsupportedScalar("context has no square root of q");
    return Scalar(Cyclo::root(F, k * half_exp));
}

Scalar FieldCtx::zpow(long k) const {
    if (generic) return Scalar(Poly::monomial(zc.pow(k), static_cast<int>(k * z_half)));
    return Scalar(Cyclo::root(F, k * z_exp));
}

Scalar FieldCtx::upow(long k) const {
    if (!has_sqrt) throw UnsupportedScalar("context has no (-q)^(1/2)");
    if (generic) return Scalar(Poly::monomial(Cyclo::root(F, k), static_cast<int>(k)));
    return Scalar(Cyclo::root(F, k * u_exp));
}

Scalar FieldCtx::from_rational(const mpq_class& v) const { return Scalar(Cyclo::from_mpq(F, {v})); }

Scalar FieldCtx::root(long e) const {
    if (generic) return Scalar(Cyclo::root(F, e));
    return Scalar(Cyclo::root(F, e));
}

FieldCtx FieldCtx::with_z(const Scalar& nz) const {
    FieldCtx c = *this;
    c.z = nz;
    c.zinv = nz.inv();
    c.z_exp = -1;
    if (!generic) {
        for (int e = 0; e < M; ++e)
            if (Scalar(Cyclo::root(F, e)) == nz) {
                c.z_exp = e;
                break;
            }
    } else if (!nz.is_cyclo()) {
        const Poly& p = nz.ratfn().num();
        if (nz.ratfn().is_poly() && p.length() == 1) {
            c.zc = p.lead();
            c.z_half = p.low();
        }
    } else {
        c.zc = nz.cyclo();
        c.z_half = 0;
    }
    return c;
}

std::optional<Scalar> root_in_ctx(const FieldCtx& ctx, const mpq_class& angle) {
    mpq_class a = frac(angle);
    int M = ctx.generic ? 4 : ctx.M;
    mpq_class e = a * M;
    e.canonicalize();
    if (e.get_den() != 1) return std::nullopt;
    return Scalar(Cyclo::root(ctx.F, e.get_num().get_si()));
}

std::string FieldCtx::describe() const {
    std::ostringstream os;
    if (generic) os << "generic q (s = q^(1/2))";
    else os << "M=" << M << " q=zeta" << M << "^" << q_exp << " ell=" << ell;
    os << " z=" << z.str();
    return os.str();
}

}  // namespace atl
