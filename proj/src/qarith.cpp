#include "qarith.hpp"

#include <map>
#include <mutex>

namespace atl {

Poly qnum_sym(long n) {
    if (n == 0) return Poly();
    if (n < 0) return -qnum_sym(-n);
    std::vector<Cyclo> c(2 * n - 1);
    for (long k = 0; k < 2 * n - 1; k += 2) c[k] = Cyclo(1);
    return Poly::from_coeffs(std::move(c), static_cast<int>(1 - n));
}

Poly qfact_sym(long n) {
    Poly r(Cyclo(1));
    for (long k = 2; k <= n; ++k) r = r * qnum_sym(k);
    return r;
}

Poly qbin_sym(long m, long n) {
    if (n < 0 || m < 0 || m < n) return Poly();
    if (n > m - n) n = m - n;
    static std::mutex mu;
    static std::map<std::pair<long, long>, Poly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({m, n});
        if (it != cache.end()) return it->second;
    }
    // cancel [m][m-1]...[m-n+1] against [n]!
    Poly num(Cyclo(1));
    for (long j = 0; j < n; ++j) num = num * qnum_sym(m - j);
    Poly r = Poly::exact_div(num, qfact_sym(n));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(m, n), r);
    return r;
}

Scalar eval_at_q(const Poly& p, const FieldCtx& ctx) {
    if (p.is_zero()) return Scalar(0);
    if (ctx.generic) return Scalar(p.subst_pow(2));
    // gather coefficients by the root of unity they multiply
    int M = ctx.M;
    std::vector<mpq_class> bucket(M, 0);
    bool cyclotomic_coeffs = false;
    for (int i = 0; i < p.length(); ++i) {
        const Cyclo& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        if (!c.is_rational()) {
            cyclotomic_coeffs = true;
            break;
        }
        long e = ((static_cast<long>(p.low() + i) * ctx.q_exp) % M + M) % M;
        bucket[e] += c.rational_value();
    }
    if (cyclotomic_coeffs) {
        Scalar acc(0);
        for (int i = 0; i < p.length(); ++i)
            if (!p.coeffs()[i].is_zero()) acc += Scalar(p.coeffs()[i]) * ctx.qpow(p.low() + i);
        return acc;
    }
    std::vector<mpq_class> out(ctx.F->phi, 0);
    for (int e = 0; e < M; ++e) {
        if (bucket[e] == 0) continue;
        const auto& row = ctx.F->pow_table[e];
        for (int k = 0; k < ctx.F->phi; ++k)
            if (row[k]) out[k] += bucket[e] * static_cast<long>(row[k]);
    }
    return Scalar(Cyclo::from_mpq(ctx.F, out));
}

Scalar qnum(long n, const FieldCtx& ctx) { return eval_at_q(qnum_sym(n), ctx); }

Scalar qfact(long n, const FieldCtx& ctx) {
    Scalar r(1);
    for (long k = 2; k <= n; ++k) r = r * qnum(k, ctx);
    return r;
}

Scalar qbin(long m, long n, const FieldCtx& ctx) { return eval_at_q(qbin_sym(m, n), ctx); }

Scalar limit_at_root(const Poly& num0, const Poly& den0, const FieldCtx& ctx) {
    if (den0.is_zero()) throw PoleError("zero denominator");
    if (num0.is_zero()) return Scalar(0);
    if (ctx.generic) return Scalar(RatFn(num0.subst_pow(2), den0.subst_pow(2)));
    int shift = num0.low() - den0.low();
    Poly num = num0.shift(-num0.low()), den = den0.shift(-den0.low());
    const CycloField* Fo = CycloField::get(ctx.q_order);
    std::vector<Cyclo> pc;
    for (auto v : Fo->poly) pc.emplace_back(v);
    Poly phi = Poly::from_coeffs(pc, 0);
    for (;;) {
        Poly qd, rd;
        Poly::divmod(den, phi, qd, rd);
        if (!rd.is_zero()) break;
        Poly qn, rn;
        Poly::divmod(num, phi, qn, rn);
        if (!rn.is_zero()) throw PoleError("denominator vanishes at q after reduction");
        num = qn;
        den = qd;
    }
    Scalar d = eval_at_q(den, ctx);
    if (d.is_zero()) throw PoleError("denominator vanishes at q after reduction");
    return eval_at_q(num.shift(shift), ctx) / d;
}

Scalar limit_at_root(const RatFn& f, const FieldCtx& ctx) { return limit_at_root(f.num(), f.den(), ctx); }

mpz_class binomial(long m, long n) {
    if (n < 0 || m < 0 || n > m) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n));
    return r;
}

Scalar qbin_lucas(long m, long n, const FieldCtx& ctx) {
    if (ctx.generic) throw UnsupportedScalar("q-Lucas needs a root of unity");
    if (n < 0 || m < n) return Scalar(0);
    long l = ctx.ell;
    long m1 = m / l, m2 = m % l, n1 = n / l, n2 = n % l;
    long e = l * (n1 * l * (n1 - m1) - m2 * n1 - m1 * n2);
    return ctx.qpow(e) * Scalar(Cyclo::from_mpz(nullptr, {binomial(m1, n1)}, 1)) * qbin(m2, n2, ctx);
}

}  // namespace atl
