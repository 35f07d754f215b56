#include "cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace atl {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(i128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

// polynomial helpers over Q, constant term first
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

void qdivmod(QPoly a, const QPoly& b, QPoly& quo, QPoly& rem) {
    trim(a);
    quo.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    const mpq_class& lead = b.back();
    while (a.size() >= b.size()) {
        size_t sh = a.size() - b.size();
        mpq_class f = a.back() / lead;
        quo[sh] = f;
        for (size_t j = 0; j < b.size(); ++j) a[sh + j] -= f * b[j];
        a.pop_back();
        trim(a);
    }
    rem = a;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

}  // namespace

std::vector<mpz_class> CycloField::cyclotomic_poly(int M) {
    // x^M - 1 divided by Phi_d for every proper divisor d
    QPoly p(M + 1, 0);
    p[0] = -1;
    p[M] = 1;
    for (int d = 1; d < M; ++d) {
        if (M % d) continue;
        auto pd = cyclotomic_poly(d);
        QPoly b(pd.begin(), pd.end());
        QPoly quo, rem;
        qdivmod(p, b, quo, rem);
        p = quo;
    }
    std::vector<mpz_class> r;
    for (auto& c : p) r.push_back(c.get_num());
    return r;
}

const CycloField* CycloField::get(int M) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloField>> cache;
    if (M < 1) throw ArithmeticError("cyclotomic order must be positive");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second.get();
    auto F = std::make_unique<CycloField>();
    F->M = M;
    auto pz = cyclotomic_poly(M);
    F->phi = static_cast<int>(pz.size()) - 1;
    for (auto& c : pz) F->poly.push_back(c.get_si());
    std::vector<mpz_class> cur(F->phi, 0);
    cur[0] = 1;
    for (int e = 0; e < M; ++e) {
        std::vector<int64_t> row;
        for (auto& c : cur) {
            if (!c.fits_slong_p()) throw ArithmeticError("cyclotomic power table overflow");
            row.push_back(c.get_si());
        }
        F->pow_table.push_back(row);
        // multiply by x
        mpz_class top = cur.back();
        for (int k = F->phi - 1; k > 0; --k) cur[k] = cur[k - 1];
        cur[0] = 0;
        for (int k = 0; k < F->phi; ++k) cur[k] -= top * F->poly[k];
    }
    const CycloField* out = F.get();
    cache.emplace(M, std::move(F));
    return out;
}

Cyclo::Cyclo(long n, long d) {
    if (d == 0) throw ArithmeticError("division by zero");
    *this = from_mpz(nullptr, {mpz_class(n)}, mpz_class(d));
}

Cyclo::Cyclo(const CycloField* F, long v) : F_(F) {
    if (F && F->phi > kFast) {
        std::vector<mpz_class> num(F->phi, 0);
        num[0] = v;
        *this = make_big(F, std::move(num), 1);
    } else {
        c_[0] = v;
    }
}

Cyclo Cyclo::root(const CycloField* F, long e) {
    long m = ((e % F->M) + F->M) % F->M;
    const auto& row = F->pow_table[m];
    if (F->phi <= kFast) {
        Cyclo r;
        r.F_ = F;
        for (int k = 0; k < F->phi; ++k) r.c_[k] = row[k];
        return r;
    }
    std::vector<mpz_class> num;
    for (auto v : row) num.emplace_back(static_cast<long>(v));
    return from_mpz(F, num, 1);
}

Cyclo Cyclo::from_mpq(const CycloField* F, const std::vector<mpq_class>& c) {
    mpz_class den = 1;
    for (auto& v : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<mpz_class> num;
    for (auto& v : c) num.push_back(v.get_num() * (den / v.get_den()));
    return from_mpz(F, num, den);
}

Cyclo Cyclo::from_mpz(const CycloField* F, std::vector<mpz_class> num, mpz_class den) {
    int n = F ? F->phi : 1;
    num.resize(n, 0);
    if (den == 0) throw ArithmeticError("division by zero");
    if (den < 0) {
        den = -den;
        for (auto& v : num) v = -v;
    }
    mpz_class g = den;
    for (auto& v : num) {
        if (g == 1) break;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (g != 1) {
        den /= g;
        for (auto& v : num) v /= g;
    }
    bool fits = n <= kFast && den.fits_slong_p();
    for (auto& v : num) fits = fits && v.fits_slong_p();
    if (fits) {
        Cyclo r;
        r.F_ = F;
        for (int k = 0; k < n; ++k) r.c_[k] = num[k].get_si();
        r.den_ = den.get_si();
        return r;
    }
    return make_big(F, std::move(num), std::move(den));
}

Cyclo Cyclo::make_big(const CycloField* F, std::vector<mpz_class> num, mpz_class den) {
    Cyclo r;
    r.F_ = F;
    auto b = std::make_shared<Big>();
    b->num = std::move(num);
    b->den = std::move(den);
    r.big_ = std::move(b);
    return r;
}

std::vector<mpz_class> Cyclo::numerators() const {
    if (big_) return big_->num;
    std::vector<mpz_class> r;
    for (int k = 0; k < dim(); ++k) r.emplace_back(static_cast<long>(c_[k]));
    return r;
}

mpz_class Cyclo::denominator() const {
    if (big_) return big_->den;
    return mpz_class(static_cast<long>(den_));
}

mpq_class Cyclo::coeff(int k) const {
    if (k < 0 || k >= dim()) return 0;
    mpq_class r(big_ ? big_->num[k] : mpz_class(static_cast<long>(c_[k])), denominator());
    r.canonicalize();
    return r;
}

bool Cyclo::is_zero() const {
    if (big_) {
        for (auto& v : big_->num)
            if (v != 0) return false;
        return true;
    }
    for (int k = 0; k < dim(); ++k)
        if (c_[k]) return false;
    return true;
}

bool Cyclo::is_rational() const {
    if (big_) {
        for (size_t k = 1; k < big_->num.size(); ++k)
            if (big_->num[k] != 0) return false;
        return true;
    }
    for (int k = 1; k < dim(); ++k)
        if (c_[k]) return false;
    return true;
}

bool Cyclo::is_one() const {
    if (big_) return is_rational() && big_->num[0] == 1 && big_->den == 1;
    return is_rational() && c_[0] == 1 && den_ == 1;
}

mpq_class Cyclo::rational_value() const {
    if (!is_rational()) throw ArithmeticError("value is not rational");
    return coeff(0);
}

const CycloField* Cyclo::common(const Cyclo& a, const Cyclo& b) {
    if (a.F_ == b.F_) return a.F_;
    if (!a.F_) return b.F_;
    if (!b.F_) return a.F_;
    if (a.is_rational() && b.is_rational()) return a.F_;
    throw ArithmeticError("operands live in different cyclotomic fields (M=" + std::to_string(a.F_->M) +
                          ", M=" + std::to_string(b.F_->M) + ")");
}

Cyclo Cyclo::in_field(const CycloField* F) const {
    if (F_ == F) return *this;
    if (!is_rational()) throw ArithmeticError("cannot move a non-rational element between fields");
    if (F && F->phi > kFast) return from_mpz(F, {coeff(0).get_num()}, coeff(0).get_den());
    Cyclo r = *this;
    if (big_) return from_mpz(F, {big_->num[0]}, big_->den);
    r.F_ = F;
    for (int k = 1; k < kFast; ++k) r.c_[k] = 0;
    return r;
}

Cyclo Cyclo::operator-() const {
    if (big_) {
        auto num = big_->num;
        for (auto& v : num) v = -v;
        return make_big(F_, std::move(num), big_->den);
    }
    Cyclo r = *this;
    for (int k = 0; k < dim(); ++k) {
        if (r.c_[k] == INT64_MIN) {
            auto n = numerators();
            for (auto& v : n) v = -v;
            return from_mpz(F_, std::move(n), denominator());
        }
        r.c_[k] = -r.c_[k];
    }
    return r;
}

namespace {

// writes normalized result into out; false if it does not fit the fast form
bool normalize_fast(const i128* num, int n, i128 den, int64_t* out, int64_t& out_den) {
    if (den < 0) return false;
    u128 g = static_cast<u128>(den);
    for (int k = 0; k < n && g != 1; ++k)
        if (num[k]) g = gcd128(g, uabs(num[k]));
    i128 gg = static_cast<i128>(g);
    i128 d = den / gg;
    if (!fits64(d)) return false;
    for (int k = 0; k < n; ++k) {
        i128 v = num[k] / gg;
        if (!fits64(v)) return false;
        out[k] = static_cast<int64_t>(v);
    }
    out_den = static_cast<int64_t>(d);
    return true;
}

}  // namespace

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    const CycloField* F = Cyclo::common(a, b);
    if (a.F_ != F) return a.in_field(F) + b;
    if (b.F_ != F) return a + b.in_field(F);
    const Cyclo& A = a;
    const Cyclo& B = b;
    int n = A.dim();
    if (!A.big_ && !B.big_) {
        i128 num[Cyclo::kFast];
        i128 den;
        if (A.den_ == B.den_) {
            for (int k = 0; k < n; ++k) num[k] = static_cast<i128>(A.c_[k]) + B.c_[k];
            den = A.den_;
        } else {
            for (int k = 0; k < n; ++k)
                num[k] = static_cast<i128>(A.c_[k]) * B.den_ + static_cast<i128>(B.c_[k]) * A.den_;
            den = static_cast<i128>(A.den_) * B.den_;
        }
        Cyclo r;
        r.F_ = F;
        if (normalize_fast(num, n, den, r.c_, r.den_)) return r;
    }
    auto na = A.numerators(), nb = B.numerators();
    mpz_class da = A.denominator(), db = B.denominator();
    std::vector<mpz_class> num(n);
    for (int k = 0; k < n; ++k) num[k] = na[k] * db + nb[k] * da;
    return Cyclo::from_mpz(F, std::move(num), da * db);
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    const CycloField* F = Cyclo::common(a, b);
    if (a.F_ != F) return a.in_field(F) * b;
    if (b.F_ != F) return a * b.in_field(F);
    int n = a.dim();
    if (a.is_zero() || b.is_zero()) return Cyclo(F, 0);
    if (!a.big_ && !b.big_) {
        bool ok = true;
        i128 prod[2 * Cyclo::kFast] = {0};
        for (int i = 0; i < n && ok; ++i) {
            if (!a.c_[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (!b.c_[j]) continue;
                i128 t = static_cast<i128>(a.c_[i]) * b.c_[j];
                if (__builtin_add_overflow(prod[i + j], t, &prod[i + j])) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok && F) {
            for (int k = 2 * n - 2; k >= n && ok; --k) {
                i128 top = prod[k];
                if (!top) continue;
                prod[k] = 0;
                for (int j = 0; j < n; ++j) {
                    i128 t;
                    if (__builtin_mul_overflow(top, static_cast<i128>(F->poly[j]), &t) ||
                        __builtin_sub_overflow(prod[k - n + j], t, &prod[k - n + j])) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if (ok) {
            Cyclo r;
            r.F_ = F;
            i128 den = static_cast<i128>(a.den_) * b.den_;
            if (normalize_fast(prod, n, den, r.c_, r.den_)) return r;
        }
    }
    auto na = a.numerators(), nb = b.numerators();
    std::vector<mpz_class> prod(2 * n - 1, 0);
    for (int i = 0; i < n; ++i)
        if (na[i] != 0)
            for (int j = 0; j < n; ++j) prod[i + j] += na[i] * nb[j];
    if (F) {
        for (int k = 2 * n - 2; k >= n; --k) {
            if (prod[k] == 0) continue;
            mpz_class top = prod[k];
            prod[k] = 0;
            for (int j = 0; j < n; ++j) prod[k - n + j] -= top * F->poly[j];
        }
    }
    prod.resize(n);
    return Cyclo::from_mpz(F, std::move(prod), a.denominator() * b.denominator());
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.F_ != b.F_) {
        if (a.F_ && b.F_ && !(a.is_rational() && b.is_rational())) return false;
        if (!a.is_rational() || !b.is_rational()) return false;
        return a.coeff(0) == b.coeff(0);
    }
    if (!a.big_ && !b.big_) {
        if (a.den_ != b.den_) return false;
        for (int k = 0; k < a.dim(); ++k)
            if (a.c_[k] != b.c_[k]) return false;
        return true;
    }
    if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;
    return a.big_->den == b.big_->den && a.big_->num == b.big_->num;
}

Cyclo Cyclo::inv() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    if (is_rational()) {
        mpq_class v = coeff(0);
        return from_mpz(F_, {v.get_den()}, v.get_num());
    }
    // extended Euclid: find s with a*s = 1 mod Phi_M
    QPoly a;
    auto num = numerators();
    for (auto& v : num) a.emplace_back(v);
    trim(a);
    QPoly m;
    for (auto v : F_->poly) m.emplace_back(static_cast<long>(v));
    QPoly r0 = m, r1 = a, s0 = {}, s1 = {mpq_class(1)};
    while (!r1.empty() && r1.size() > 1) {
        QPoly quo, rem;
        qdivmod(r0, r1, quo, rem);
        QPoly s2 = qsub(s0, qmul(quo, s1));
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r1.empty()) throw ArithmeticError("element is not invertible");
    // r1 is a nonzero constant c, and a*s1 = c mod Phi
    mpq_class c = r1[0];
    std::vector<mpq_class> coeffs(F_->phi, 0);
    mpq_class den(denominator());
    for (size_t k = 0; k < s1.size(); ++k) coeffs[k] = s1[k] * den / c;
    return from_mpq(F_, coeffs);
}

Cyclo Cyclo::pow(long k) const {
    if (k < 0) return inv().pow(-k);
    Cyclo base = *this, r(F_, 1);
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

Cyclo Cyclo::galois(long k) const {
    if (!F_) return *this;
    auto num = numerators();
    std::vector<mpz_class> out(F_->phi, 0);
    for (int i = 0; i < F_->phi; ++i) {
        if (num[i] == 0) continue;
        long e = ((static_cast<long>(i) * k) % F_->M + F_->M) % F_->M;
        const auto& row = F_->pow_table[e];
        for (int j = 0; j < F_->phi; ++j) out[j] += num[i] * row[j];
    }
    return from_mpz(F_, std::move(out), denominator());
}

long Cyclo::size_hint() const {
    if (big_) {
        long s = static_cast<long>(mpz_sizeinbase(big_->den.get_mpz_t(), 2));
        for (auto& v : big_->num) s += static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
        return s + 1000;
    }
    long s = den_ == 1 ? 0 : 1;
    for (int k = 0; k < dim(); ++k)
        if (c_[k]) s += (c_[k] == 1 || c_[k] == -1) ? 1 : 2;
    return s;
}

std::string Cyclo::str() const {
    auto num = numerators();
    mpz_class den = denominator();
    std::ostringstream os;
    bool first = true;
    int terms = 0;
    for (size_t k = 0; k < num.size(); ++k)
        if (num[k] != 0) ++terms;
    if (terms == 0) return "0";
    bool wrap = den != 1 && terms > 1;
    if (wrap) os << "(";
    for (size_t k = 0; k < num.size(); ++k) {
        if (num[k] == 0) continue;
        mpz_class v = num[k];
        if (!first) os << (v < 0 ? " - " : " + ");
        else if (v < 0) os << "-";
        mpz_class av = abs(v);
        if (k == 0) os << av;
        else {
            if (av != 1) os << av << "*";
            os << "z" << F_->M;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    if (wrap) os << ")";
    if (den != 1) os << "/" << den;
    return os.str();
}

}  // namespace atl
