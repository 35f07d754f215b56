#pragma once
// q-numbers, q-factorials and q-binomials, symbolic in t = q or evaluated in a context.

#include "scalar.hpp"

namespace atl {

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// symbolic forms, Laurent polynomials in t over Q
Poly qnum_sym(long n);
Poly qfact_sym(long n);
Poly qbin_sym(long m, long n);

// substitute t = q
Scalar eval_at_q(const Poly& p, const FieldCtx& ctx);

Scalar qnum(long n, const FieldCtx& ctx);
Scalar qfact(long n, const FieldCtx& ctx);
Scalar qbin(long m, long n, const FieldCtx& ctx);

// lim_{t -> q} num/den: divides out the cyclotomic factor vanishing at q, then evaluates
Scalar limit_at_root(const Poly& num, const Poly& den, const FieldCtx& ctx);
Scalar limit_at_root(const RatFn& f, const FieldCtx& ctx);

// q-Lucas prediction of qbin(m, n) at a root of unity context
Scalar qbin_lucas(long m, long n, const FieldCtx& ctx);
mpz_class binomial(long m, long n);

}  // namespace atl
