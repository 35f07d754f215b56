#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "qarith.hpp"

namespace atl {

namespace {

const std::vector<std::string> kKeys = {"diagrams", "qarith",     "cellular",  "gl",      "chain",
                                        "mdsa",     "quantum",    "intertwiners", "structure", "duality"};
const std::vector<std::string> kTitles = {
    "diagram algebra relations, N = 2..8",
    "q-arithmetic identities at l = 1..5 and symbolically",
    "cellular dimensions, form invariance and Gram values",
    "Graham-Lehrer morphisms and Hom between cellular modules",
    "chain relations, Hamiltonian and the three isomorphisms",
    "the map from cellular modules into the chain",
    "quantum group modules, divided powers and fusion",
    "intertwiners, exact sequences and k/m maps",
    "predicted Loewy diagrams of the chain sectors",
    "reciprocity of the two chains",
};

struct Tally {
    CriterionResult& r;
    void check(bool ok, const std::string& what) {
        ++r.checks;
        if (!ok) {
            ++r.failures;
            if (r.failures <= 10) r.notes.push_back("FAIL " + what);
        }
    }
    void note(const std::string& s) { r.notes.push_back(s); }
};

std::string at(const std::string& q, const std::string& z, int N, int d) {
    std::ostringstream os;
    os << "q=" << q << " z=" << z << " N=" << N << " d=" << d;
    return os.str();
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (auto& x : v) s += (s.empty() ? "" : "; ") + x;
    return s;
}

// a generic context cannot host a root of unity as twist
std::optional<FieldCtx> try_ctx(const std::string& q, const std::string& z) {
    try {
        return build_ctx(q, z);
    } catch (const UnsupportedScalar&) {
        return std::nullopt;
    }
}

std::vector<std::pair<std::string, int>> ell_qs() {
    return {{"1", 1}, {"-1", 1}, {"zeta4", 2}, {"zeta6", 3}, {"zeta3", 3},
            {"zeta8", 4}, {"zeta10", 5}, {"zeta5", 5}};
}

void diagrams(Tally& t, const AcceptanceConfig&) {
    for (int N = 2; N <= 8; ++N) {
        DiagramAlgebra alg{N};
        auto fails = check_genrel(N, alg);
        t.check(fails.empty(), "N=" + std::to_string(N) + ": " + join(fails));
    }
}

void qarith(Tally& t, const AcceptanceConfig&) {
    // symbolic, m <= 12
    for (int m = 1; m <= 12; ++m)
        for (int n = 0; n <= m - 1; ++n) {
            t.check(qbin_sym(m, n) == Poly::var(-n) * qbin_sym(m - 1, n) + Poly::var(m - n) * qbin_sym(m - 1, n - 1),
                    "symbolic Pascal m=" + std::to_string(m) + " n=" + std::to_string(n));
            t.check(qbin_sym(m, n) == Poly::var(n) * qbin_sym(m - 1, n) + Poly::var(n - m) * qbin_sym(m - 1, n - 1),
                    "symbolic Pascal (other sign) m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
    for (int m = 0; m <= 12; ++m) {
        Poly lhs, rhs(Cyclo(1));
        for (int n = 0; n <= m; ++n) lhs += Cyclo(n % 2 ? -1 : 1) * (Poly::var(n * (m + 1)) * qbin_sym(m, n));
        for (int n = 1; n <= m; ++n) rhs = rhs * (Poly(Cyclo(1)) - Poly::var(2 * n));
        t.check(lhs == rhs, "symbolic binomial theorem m=" + std::to_string(m));
    }
    for (auto& [q, l] : ell_qs()) {
        FieldCtx c = build_ctx(q, "1", false);
        std::string w = "q=" + q + " ";
        t.check(c.ell == l, w + "ell");
        for (int m = 1; m <= 20; ++m)
            for (int n = 0; n <= m; ++n) {
                std::string mn = w + "m=" + std::to_string(m) + " n=" + std::to_string(n);
                Scalar b = qbin(m, n, c);
                t.check(b == c.qpow(-n) * qbin(m - 1, n, c) + c.qpow(m - n) * qbin(m - 1, n - 1, c), "Pascal " + mn);
                t.check(b == c.qpow(n) * qbin(m - 1, n, c) + c.qpow(n - m) * qbin(m - 1, n - 1, c), "Pascal (other sign) " + mn);
                t.check(b == qbin_lucas(m, n, c), "q-Lucas " + mn);
                t.check(b.is_zero() == (m % l < n % l), "q-Lucas vanishing " + mn);
            }
        for (int m = 0; m <= 20; ++m) {
            Scalar lhs(0), rhs(1);
            for (int n = 0; n <= m; ++n) lhs += Scalar(n % 2 ? -1 : 1) * c.qpow(n * (m + 1)) * qbin(m, n, c);
            for (int n = 1; n <= m; ++n) rhs *= Scalar(1) - c.qpow(2 * n);
            t.check(lhs == rhs, "binomial theorem " + w + "m=" + std::to_string(m));
        }
        for (int m = 1; m <= 20; ++m) {
            Scalar expect = Scalar(m) * c.qpow((1 - m) * l);
            t.check(limit_at_root(qnum_sym(m * l), qnum_sym(l), c) == expect, "[ml]/[l] limit " + w + "m=" + std::to_string(m));
            t.check(qnum(m * l, c) == expect * qnum(l, c), "[ml] = m q^((1-m)l) [l] " + w + "m=" + std::to_string(m));
        }
    }
}

Diagram random_word(int N, std::mt19937_64& rng, int len, int& beta_power) {
    std::uniform_int_distribution<int> pick(0, N + 1);
    WeightedDiagram w{Diagram::identity(N), 0};
    for (int k = 0; k < len; ++k) {
        int g = pick(rng);
        Diagram d = g == 0 ? Diagram::omega(N, 1) : g == 1 ? Diagram::omega(N, -1) : Diagram::e(g - 1, N);
        w = compose(w, WeightedDiagram{d, 0});
    }
    beta_power = w.beta_power;
    return w.diagram;
}

void cellular(Tally& t, const AcceptanceConfig& cfg) {
    for (int N = 1; N <= 12; ++N)
        for (int d = N % 2; d <= N; d += 2)
            t.check(link_basis(N, d).size() == binomial(N, (N - d) / 2).get_si(),
                    "dim W N=" + std::to_string(N) + " d=" + std::to_string(d));

    std::mt19937_64 rng(cfg.seed);
    for (auto [q, z] : {std::pair{"zeta8", "zeta8^3"}, std::pair{"zeta5", "zeta5^2"}, std::pair{"zeta4", "q"},
                        std::pair{"generic", "2*q"}}) {
        FieldCtx ctx = build_ctx(q, z);
        for (int N = 2; N <= 7; ++N)
            for (int d = N % 2; d <= N; d += 2) {
                CellModule W(N, d, ctx.z, ctx), Wi(N, d, ctx.zinv, ctx);
                Matrix G = gram(N, d, ctx);
                for (int it = 0; it < 3; ++it) {
                    int bp = 0;
                    Diagram a = random_word(N, rng, 1 + static_cast<int>(rng() % 3), bp);
                    Scalar c = ctx.beta.pow(bp);
                    Matrix A = c * W.matrix(a).dense();
                    Matrix Ad = c * Wi.matrix(a.dagger()).dense();
                    t.check(A.transpose() * G == G * Ad, "invariance " + at(q, z, N, d) + " word " + a.str());
                }
            }
    }

    FieldCtx ctx = build_ctx("zeta10", "zeta10^3");
    Matrix G = gram(2, 0, ctx);
    Scalar loop = ctx.z + ctx.zinv;
    t.check(G.at(0, 0) == ctx.beta && G.at(1, 1) == ctx.beta && G.at(0, 1) == loop && G.at(1, 0) == loop,
            "Gram of W(2;0)");
    Diagram w(5, 1, {{2, 5}, {3, 4}}, {}, 0);
    Diagram v(5, 1, {{2, 3}, {4, 5}}, {}, -1);
    Scalar p = pairing(w, v, ctx.z, ctx);
    t.check(p == ctx.beta * ctx.z, "(5,1) pair gives " + std::string(p == ctx.beta * ctx.zinv ? "beta z^-1" : p.str()) +
                                       ", expected beta z");
    Diagram w2(6, 0, {{2, 3}, {4, 5}, {6, 7}}, {}, 0);
    Diagram v2(6, 0, {{1, 6}, {2, 3}, {4, 5}}, {}, 0);
    t.check(pairing(w2, v2, ctx.z, ctx) == ctx.beta * ctx.beta * loop, "(6,0) pair, expected beta^2 (z + z^-1)");
    for (const char* q : {"zeta4", "zeta4^3"}) {
        FieldCtx pc = build_ctx(q, "q");
        t.check(gram(2, 0, pc).is_zero(), std::string("Gram of W(2;0,q) at q=") + q + " is zero");
    }
}

void gl(Tally& t, const AcceptanceConfig& cfg) {
    long found = 0;
    for (const char* q : {"1", "-1", "zeta4", "zeta6", "zeta8", "generic"})
        for (const char* zs : {"1", "-1", "q", "-q", "q^(1/2)", "q^(-1/2)", "q^2", "q^(3/2)", "zeta4*q"}) {
            auto c = try_ctx(q, zs);
            if (!c) continue;
            FieldCtx& ctx = *c;
            for (int N = 1; N <= 8; ++N)
                for (int d = N % 2; d <= N; d += 2)
                    for (int a : {1, -1}) {
                        auto s = a == 1 ? direct_A_successor(N, d, ctx.z, ctx) : direct_B_successor(N, d, ctx.z, ctx);
                        if (!s) continue;
                        ++found;
                        Matrix G = gl_morphism(N, s->first, d, ctx.z, a, ctx);
                        auto src = CellModule(N, s->first, s->second, ctx).rep(), dst = CellModule(N, d, ctx.z, ctx).rep();
                        std::string w = at(q, zs, N, d) + " t=" + std::to_string(s->first) + (a == 1 ? " (A)" : " (B)");
                        auto rep = verify_intertwiner(G, src, dst);
                        t.check(rep.ok, "GL intertwiner " + w + " fails at " + rep.failing_generator.value_or(""));
                        t.check(rank(G) == src.dim, "GL injective " + w);
                    }
        }
    t.note(std::to_string(found) + " direct successions checked");

    long nonzero = 0;
    for (const char* q : {"1", "-1", "zeta4", "zeta6", "zeta8", "generic"})
        for (const char* zs : {"1", "-1", "q", "-q", "q^(1/2)", "q^(-1)"}) {
            FieldCtx ctx = build_ctx(q, zs);
            for (int N = 1; N <= 6; ++N)
                for (int d = N % 2; d <= N; d += 2) {
                    if (is_problematic(N, {d, ctx.z}, ctx)) continue;
                    Representation W = CellModule(N, d, ctx.z, ctx).rep();
                    auto succ = successor_closure({d, ctx.z}, N, ctx);
                    std::vector<std::pair<PairDZ, int>> cases;
                    for (auto& s : succ) cases.push_back({s, 1});
                    for (int tt = d + 2; tt <= N; tt += 2) {
                        PairDZ o{tt, ctx.z * Scalar(3)};
                        bool related = false;
                        for (auto& s : succ) related = related || same_pair(s, o);
                        if (!related) cases.push_back({o, 0});
                    }
                    for (auto& [p, want] : cases) {
                        Representation V = CellModule(N, p.d, p.z, ctx).rep();
                        int h = hom_dim(V, W, cfg.budgets);
                        t.check(h == want, "Hom(W" + pair_label(p) + ", W) " + at(q, zs, N, d) + " is " + std::to_string(h));
                        nonzero += want;
                    }
                }
        }
    t.note(std::to_string(nonzero) + " nonzero Hom spaces");
}

void chain(Tally& t, const AcceptanceConfig&) {
    auto relations = [&](const char* q, const char* zs, int nmax) {
        FieldCtx ctx = build_ctx(q, zs);
        for (int N = 2; N <= nmax; ++N)
            for (int d = -N; d <= N; d += 2) {
                SparseMat hp, hm;
                for (int sign : {1, -1}) {
                    auto X = build_chain(N, ctx.z, sign, d, ctx);
                    auto fails = check_relations(X);
                    t.check(fails.empty(), "relations " + at(q, zs, N, d) + " sign " + std::to_string(sign) + ": " + join(fails));
                    SparseMat h(X.dim, X.dim);
                    for (auto& e : X.e) h = h + e;
                    (sign > 0 ? hp : hm) = h;
                }
                t.check(hp == hm, "sum of e_i agrees across signs " + at(q, zs, N, d));
            }
    };
    relations("zeta8", "q^(1/2)", 12);
    relations("zeta6", "1", 8);
    relations("-1", "zeta4*q", 8);
    relations("generic", "q^(1/2)", 8);

    for (const char* q : {"1", "-1", "zeta4", "zeta6", "zeta8", "generic"})
        for (const char* zs : {"1", "zeta4*q", "q^(1/2)"}) {
            FieldCtx ctx = build_ctx(q, zs);
            for (int N = 1; N <= 7; ++N)
                for (int d = -N; d <= N; d += 2)
                    for (int sign : {1, -1}) {
                        std::string w = at(q, zs, N, d) + " sign " + std::to_string(sign);
                        auto xz = build_chain(N, ctx.z, sign, d, ctx);
                        auto xzi = build_chain(N, ctx.zinv, sign, d, ctx);
                        auto flipped = build_chain(N, ctx.zinv, -sign, -d, ctx);
                        t.check(verify_intertwiner(spin_flip(N, d), xz, flipped).ok, "spin flip " + w);
                        t.check(verify_intertwiner(SparseMat::identity(xz.dim), star_dual(xz), xzi).ok, "star dual " + w);
                        auto other = build_chain(N, ctx.z, -sign, d, ctx);
                        t.check(verify_intertwiner(reversal(N, d), circ_dual(xzi), other).ok, "circ dual " + w);
                    }
        }
}

void mdsa(Tally& t, const AcceptanceConfig&) {
    long injective = 0, singular = 0, nonvanishing = 0, problematic = 0;
    for (const char* q : {"1", "-1", "zeta4", "zeta6", "zeta8", "zeta10", "generic"})
        for (const char* zs : {"1", "-1", "q", "-q", "q^(1/2)", "q^(-1/2)", "zeta4*q", "q^2"}) {
            FieldCtx ctx = build_ctx(q, zs);
            int nmax = ctx.generic ? 6 : 8;
            for (int N = 1; N <= nmax; ++N)
                for (int d = N % 2; d <= N; d += 2) {
                    std::string w = at(q, zs, N, d);
                    auto W = CellModule(N, d, ctx.z, ctx).rep();
                    auto X = build_chain(N, ctx.z, 1, d, ctx);
                    SparseMat i = mdsa_map(N, d, ctx.z, ctx);
                    auto rep = verify_intertwiner(i, W, X);
                    t.check(rep.ok, "linearity " + w + " fails at " + rep.failing_generator.value_or(""));
                    int rk = rank(i.dense());
                    auto succ = direct_A_successor(N, d, ctx.z, ctx);
                    t.check((rk == W.dim) == !succ.has_value(), "injective iff no A-successor " + w);
                    int gl_rank = succ ? rank(gl_morphism(N, succ->first, succ->second, d, ctx.z, ctx)) : 0;
                    t.check(rk == W.dim - gl_rank, "rank is the generic part " + w);
                    (succ ? singular : injective)++;
                    if (is_problematic(N, {d, ctx.z}, ctx)) ++problematic;
                    if (auto b = direct_B_successor(N, d, ctx.z, ctx); b && ctx.ell && b->first - d < 2 * ctx.ell) {
                        if (!succession(d, ctx.z, b->first, b->second, ctx).value_or(0)) continue;
                        Matrix G = gl_morphism(N, b->first, d, ctx.z, -1, ctx);
                        t.check(!(i * G).is_zero(), "i o gl nonzero " + w);
                        ++nonvanishing;
                    }
                }
        }
    t.note(std::to_string(injective) + " injective, " + std::to_string(singular) + " with an A-successor, " +
           std::to_string(nonvanishing) + " i o gl composites, " + std::to_string(problematic) + " problematic pairs");
    t.check(injective > 0 && singular > 0 && nonvanishing > 0 && problematic > 0, "both directions exercised");
}

void quantum(Tally& t, const AcceptanceConfig&) {
    for (const char* q : {"zeta4", "zeta6", "zeta8"}) {
        FieldCtx ctx = build_ctx(q, "1");
        int l = ctx.ell;
        for (int i = 0; i <= 3 * l; ++i) {
            if (split_rs(i, ctx).s >= l - 1) continue;
            ProjectiveReport rep = check_projective(i, ctx);
            t.check(rep.ok(), std::string("T(") + std::to_string(i) + ") at q=" + q + ": " + join(rep.failures));
            t.check(rep.dim == 2 * l * (split_rs(i, ctx).r + 1), std::string("dim T(") + std::to_string(i) + ") at q=" + q);
        }
    }
    for (const char* q : {"zeta4", "zeta6", "zeta8", "generic"}) {
        FieldCtx ctx = build_ctx(q, "1");
        for (int N = 1; N <= 5; ++N)
            for (int sign : {1, -1}) {
                LUqModule X = chain_luq(N, sign, ctx);
                std::string w = std::string("q=") + q + " N=" + std::to_string(N) + " sign " + std::to_string(sign);
                t.check(check_luq_axioms(X).empty(), "coproduct module axioms " + w);
                for (int n = 0; n <= N; ++n) {
                    t.check(X.En(n) == divided_power(N, n, Gen::E, sign, ctx), "E^(" + std::to_string(n) + ") " + w);
                    t.check(X.Fn(n) == divided_power(N, n, Gen::F, sign, ctx), "F^(" + std::to_string(n) + ") " + w);
                }
            }
    }
    for (const char* q : {"zeta4", "zeta6", "zeta8", "generic"}) {
        FieldCtx ctx = build_ctx(q, "1");
        for (int N = 1; N <= 6; ++N)
            for (int d = -N; d <= N; d += 2)
                for (int a = 0; a <= N; ++a)
                    for (int sign : {1, -1}) {
                        if (!valid_sector(N, d + 2 * a)) continue;
                        SparseMat lhs = divided_power_sector(N, a, Gen::F, sign, -d, ctx) * spin_flip(N, d);
                        SparseMat rhs = ctx.qpow(-sign * a * (d + a)) *
                                        (spin_flip(N, d + 2 * a) * divided_power_sector(N, a, Gen::E, -sign, d, ctx));
                        t.check(lhs == rhs, "F s = q^(-+a(d+a)) s E " + at(q, "1", N, d) + " a=" + std::to_string(a));
                    }
    }
    for (const char* q : {"zeta4", "zeta6"}) {
        FieldCtx ctx = build_ctx(q, "1");
        for (int i = 0; i <= 2 * ctx.ell + 2; ++i)
            for (auto& rep : fusion_check(i, ctx))
                t.check(rep.ok(), std::string("fusion ") + rep.product + " = " + rep.prediction + " at q=" + q + " " + join(rep.notes));
    }
}

void intertwiners(Tally& t, const AcceptanceConfig&) {
    const char* zlist[] = {"1", "-1", "q", "-q", "q^(1/2)", "q^(-1/2)", "zeta4*q", "q^2", "q^(3/2)"};
    long linear = 0, sequences = 0, kms = 0;
    for (const char* q : {"zeta4", "zeta6", "zeta8", "zeta3", "generic"})
        for (const char* zs : zlist) {
            FieldCtx ctx = build_ctx(q, zs);
            for (int N = 1; N <= 6; ++N)
                for (int d = -N; d <= N; d += 2)
                    for (int tt = d + 2; tt <= N; tt += 2) {
                        int m = (tt - d) / 2;
                        for (int c : {1, -1}) {
                            Scalar x = ctx.z * ctx.qpow(-c * m);
                            if (!succeeds_via(d, ctx.z, tt, x, c, ctx)) continue;
                            for (MapKind kind : {MapKind::I, MapKind::J})
                                for (int sign : {1, -1}) {
                                    int need = (kind == MapKind::I) == (sign > 0) ? -1 : 1;
                                    if (need != c) continue;
                                    ModuleMap mm = intertwiner(kind, sign, {d, ctx.z}, {tt, x}, N, ctx);
                                    t.check(mm.condition_met && mm.check.ok, mm.label + " " + at(q, zs, N, d));
                                    ++linear;
                                }
                        }
                    }
        }

    FieldCtx g = build_ctx("generic", "2*q^(1/2)");
    ModuleMap bad = intertwiner(MapKind::I, 1, {0, g.z}, {2, g.z}, 2, g, true);
    t.check(!bad.condition_met && !bad.check.ok && bad.check.failing_generator == std::optional<std::string>("e2"),
            "N=2 lowering map without its condition fails at e2");
    bool threw = false;
    try {
        intertwiner(MapKind::I, 1, {0, g.z}, {2, g.z}, 2, g);
    } catch (const ConditionNotMet&) {
        threw = true;
    }
    t.check(threw, "N=2 lowering map without its condition is refused");

    for (const char* q : {"zeta4", "zeta6", "zeta8", "zeta3", "generic"})
        for (const char* zs : zlist) {
            FieldCtx ctx = build_ctx(q, zs);
            for (int N = 1; N <= 6; ++N)
                for (int d = -N; d <= N; d += 2)
                    for (int tt = std::max(1, std::abs(d)); tt <= N; ++tt) {
                        if ((tt - d) % 2 || tt < d) continue;
                        Scalar x = ctx.z * ctx.qpow((tt - d) / 2);
                        if (!satisfies_B(d, ctx.z, tt, x, ctx)) continue;
                        for (int which : {1, 2}) {
                            int a = which == 1 ? (tt - d) / 2 : (tt + d) / 2;
                            bool excluded = ctx.ell == 0 ? a == 0 : a % ctx.ell == 0;
                            if (excluded) continue;
                            SequenceReport rep = exact_sequence_check(which, d, ctx.z, tt, x, N, ctx);
                            t.check(rep.ok(), "exact sequence " + rep.label + " " + at(q, zs, N, d));
                            ++sequences;
                        }
                    }
        }

    for (const char* q : {"zeta4", "zeta6", "zeta8", "zeta3"})
        for (const char* zs : zlist) {
            FieldCtx ctx = build_ctx(q, zs);
            int l = ctx.ell;
            for (int N = 1; N <= 6; ++N)
                for (int d = -N; d <= N; d += 2)
                    for (int n = 0; d + 2 * n * l <= N; ++n) {
                        KMMaps km = km_maps(n, d, ctx.z, N, ctx);
                        std::string w = at(q, zs, N, d) + " n=" + std::to_string(n);
                        if (km.k.condition_met) t.check(km.k.check.ok, "k linear " + w);
                        if (km.m.condition_met) t.check(km.m.check.ok, "m linear " + w);
                        int D = d + 2 * n * l;
                        if (std::abs(d) <= std::abs(D)) {
                            Matrix mk = (km.m.M * km.k.M).dense();
                            t.check(rank(mk) == mk.rows(), "m o k bijective " + w);
                        }
                        if (std::abs(d) >= std::abs(D)) {
                            Matrix k_m = (km.k.M * km.m.M).dense();
                            t.check(rank(k_m) == k_m.rows(), "k o m bijective " + w);
                        }
                        ++kms;
                    }
        }
    for (const char* q : {"1", "-1"})
        for (int N = 1; N <= 6; ++N)
            for (int d = -N; d <= N; d += 2)
                for (const char* zs : {"1", "-1", "zeta4", "zeta4^3"}) {
                    FieldCtx ctx = build_ctx(q, zs);
                    if (ctx.qpow(d) != ctx.z * ctx.z) continue;
                    for (int n = 0; d + 2 * n <= N; ++n) {
                        KMMaps km = km_maps(n, d, ctx.z, N, ctx);
                        std::string w = at(q, zs, N, d) + " n=" + std::to_string(n);
                        t.check(km.k.condition_met && km.k.check.ok, "k linear at l=1 " + w);
                        t.check(km.m.condition_met && km.m.check.ok, "m linear at l=1 " + w);
                        int D = d + 2 * n;
                        if (std::abs(d) <= std::abs(D))
                            t.check(rank((km.m.M * km.k.M).dense()) == km.k.M.cols(), "m o k bijective at l=1 " + w);
                        if (std::abs(d) >= std::abs(D))
                            t.check(rank((km.k.M * km.m.M).dense()) == km.m.M.cols(), "k o m bijective at l=1 " + w);
                        ++kms;
                    }
                }
    t.note(std::to_string(linear) + " intertwiners, " + std::to_string(sequences) + " sequences, " + std::to_string(kms) +
           " k/m pairs");
}

struct StructurePoint {
    std::string q, z;
    int N;
};

std::vector<StructurePoint> structure_points() {
    std::vector<StructurePoint> pts;
    const std::vector<std::string> zs = {"1", "-1", "q", "-q", "q^(1/2)", "q^(-1/2)", "-q^(1/2)", "-q^(-1/2)", "q^(-1)"};
    for (const char* q : {"1", "-1", "zeta4", "zeta6", "zeta8"})
        for (auto& z : zs) {
            for (int N = 1; N <= 6; ++N) pts.push_back({q, z, N});
            pts.push_back({q, z, 8});
        }
    for (auto& z : zs)
        for (int N = 1; N <= 6; ++N) pts.push_back({"generic", z, N});
    return pts;
}

void structure(Tally& t, const AcceptanceConfig& cfg) {
    long problematic = 0, three_node = 0, points = 0;
    for (auto& p : structure_points()) {
        FieldCtx ctx = build_ctx(p.q, p.z);
        for (int d = p.N % 2; d <= p.N; d += 2)
            for (int sign : {1, -1}) {
                std::string w = at(p.q, p.z, p.N, d) + " sign " + std::to_string(sign);
                VerifyReport r;
                try {
                    r = verify_main(p.N, d, ctx.z, sign, ctx, cfg.budgets);
                } catch (const DimensionBudgetExceeded& e) {
                    r.status = "inconclusive";
                    r.discrepancy = e.what();
                }
                ++points;
                if (r.status == "inconclusive") {
                    ++t.r.inconclusive;
                    t.note("inconclusive " + w + ": " + r.discrepancy.value_or(""));
                    continue;
                }
                t.check(r.pass(), w + ": " + r.discrepancy.value_or(""));
                if (is_problematic(p.N, {d, ctx.z}, ctx)) ++problematic;
                if (r.predicted.nodes.size() == 3 && r.predicted.layers.size() <= 2) ++three_node;
            }
    }
    FieldCtx ctx = build_ctx("zeta4", "q");
    for (int N : {2, 4, 6}) {
        auto dims = problematic_dims(N);
        long total = 0;
        for (int i = 1; i <= N / 2; ++i) {
            Scalar y = ctx.qpow(1 - i);
            t.check(dims[i - 1] == simple_dim(N, 2 * i, y, ctx) && dims[i - 1] == simple_dim(N, 2 * i, -y, ctx),
                    "problematic dims recurrence N=" + std::to_string(N) + " i=" + std::to_string(i));
            total += 2 * dims[i - 1];
        }
        t.check(total == binomial(N, N / 2).get_si(), "problematic dims sum N=" + std::to_string(N));
    }
    t.note(std::to_string(points) + " sector verifications, " + std::to_string(problematic) + " at problematic pairs, " +
           std::to_string(three_node) + " three-node diagrams with at most two layers, " +
           std::to_string(t.r.inconclusive) + " inconclusive");
    t.check(problematic > 0 && three_node > 0, "problematic and three-node instances present");
}

void duality(Tally& t, const AcceptanceConfig& cfg) {
    long points = 0;
    for (auto& p : structure_points()) {
        FieldCtx ctx = build_ctx(p.q, p.z);
        int dmin = p.N <= 6 ? -p.N : p.N % 2;
        for (int d = dmin; d <= p.N; d += 2) {
            std::string w = at(p.q, p.z, p.N, d);
            try {
                auto r = reciprocity_check(p.N, d, ctx.z, ctx, cfg.budgets);
                t.check(r.reversed, "layers of X+ and X- reversed " + w);
                t.check(r.star_dims_reversed, "layers of X and its star dual reversed " + w);
            } catch (const DimensionBudgetExceeded& e) {
                ++t.r.inconclusive;
                t.note("inconclusive " + w + ": " + e.what());
            }
            ++points;
        }
    }
    t.note(std::to_string(points) + " sectors compared");
}

void negative_control(Tally& t, const AcceptanceConfig&) {
    FieldCtx ctx = build_ctx("zeta8", "zeta8");
    auto a = build_chain(4, ctx.z, 1, 2, ctx), b = build_chain(4, ctx.z * ctx.z, 1, 2, ctx);
    auto rep = verify_intertwiner(SparseMat::identity(a.dim), a, b);
    t.check(rep.ok, "identity from X(4;2,z) to X(4;2,z^2) with the wrong twist: failing generator " +
                        rep.failing_generator.value_or("none"));
}

using Runner = void (*)(Tally&, const AcceptanceConfig&);
const Runner kRunners[] = {diagrams, qarith, cellular, gl, chain, mdsa, quantum, intertwiners, structure, duality};

CriterionResult run_one(int id, const std::string& key, const std::string& title, Runner f, const AcceptanceConfig& cfg) {
    CriterionResult r;
    r.id = id;
    r.key = key;
    r.title = title;
    Tally t{r};
    auto t0 = std::chrono::steady_clock::now();
    try {
        f(t, cfg);
    } catch (const std::exception& e) {
        ++r.failures;
        r.notes.push_back(std::string("error: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace

const std::vector<std::string>& criterion_keys() { return kKeys; }

int criterion_id(const std::string& key) {
    for (size_t k = 0; k < kKeys.size(); ++k)
        if (kKeys[k] == key || std::to_string(k + 1) == key) return static_cast<int>(k) + 1;
    return -1;
}

AcceptanceConfig acceptance_config(const json& j) {
    AcceptanceConfig c;
    if (j.contains("only"))
        for (auto& v : j.at("only")) {
            int id = criterion_id(v.is_string() ? v.get<std::string>() : std::to_string(v.get<int>()));
            if (id < 0) throw std::invalid_argument("unknown criterion in only: " + v.dump());
            c.only.push_back(id);
        }
    if (j.contains("seed")) c.seed = j.at("seed").get<uint64_t>();
    if (j.contains("negative_control")) c.negative_control = j.at("negative_control").get<bool>();
    if (j.contains("budgets")) {
        auto& b = j.at("budgets");
        if (b.contains("hom_n")) c.budgets.hom_max_n = b.at("hom_n").get<int>();
        if (b.contains("hom_product")) c.budgets.hom_max_product = b.at("hom_product").get<long>();
        if (b.contains("filtration_dim")) c.budgets.filtration_max_dim = b.at("filtration_dim").get<int>();
        if (b.contains("algebra_dim")) c.budgets.algebra_max_dim = b.at("algebra_dim").get<int>();
    }
    return c;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg,
                                            const std::function<void(const CriterionResult&)>& done) {
    std::vector<CriterionResult> out;
    auto emit = [&](CriterionResult r) {
        if (done) done(r);
        out.push_back(std::move(r));
    };
    if (cfg.negative_control)
        emit(run_one(0, "negative-control", "an intertwiner with a deliberately wrong twist", negative_control, cfg));
    for (int id = 1; id <= 10; ++id) {
        if (!cfg.only.empty() && std::find(cfg.only.begin(), cfg.only.end(), id) == cfg.only.end()) continue;
        emit(run_one(id, kKeys[id - 1], kTitles[id - 1], kRunners[id - 1], cfg));
    }
    return out;
}

json result_json(const CriterionResult& r) {
    return {{"id", r.id},
            {"key", r.key},
            {"title", r.title},
            {"status", r.pass() ? "pass" : "fail"},
            {"checks", r.checks},
            {"failures", r.failures},
            {"inconclusive", r.inconclusive},
            {"seconds", r.seconds},
            {"notes", r.notes}};
}

std::string result_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass() ? "PASS" : "FAIL") << " criterion " << r.id << " [" << r.key << "] " << r.title << ": "
       << r.checks - r.failures << "/" << r.checks << " checks";
    if (r.inconclusive) os << ", " << r.inconclusive << " inconclusive";
    os.precision(1);
    os << std::fixed << " (" << r.seconds << " s)";
    return os.str();
}

SweepConfig sweep_config(const json& j) {
    SweepConfig c;
    if (j.contains("N")) {
        auto& n = j.at("N");
        if (n.is_array()) {
            c.n_min = n.at(0).get<int>();
            c.n_max = n.at(1).get<int>();
        } else {
            c.n_min = c.n_max = n.get<int>();
        }
    }
    if (c.n_min < 1 || c.n_max < c.n_min) throw std::invalid_argument("sweep: bad N range");
    if (j.contains("ell")) c.ells = j.at("ell").get<std::vector<int>>();
    if (j.contains("q")) c.qs = j.at("q").get<std::vector<std::string>>();
    if (j.contains("generic")) c.generic = j.at("generic").get<bool>();
    if (j.contains("z")) c.zs = j.at("z").get<std::vector<std::string>>();
    if (j.contains("sign")) {
        c.signs.clear();
        for (auto& s : j.at("sign")) {
            std::string v = s.is_string() ? s.get<std::string>() : std::to_string(s.get<int>());
            if (v == "+" || v == "1") c.signs.push_back(1);
            else if (v == "-" || v == "-1") c.signs.push_back(-1);
            else throw std::invalid_argument("sweep: bad sign " + v);
        }
    }
    if (j.contains("budgets")) c.budgets = acceptance_config(json{{"budgets", j.at("budgets")}}).budgets;
    if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
    if (c.ells.empty() && c.qs.empty() && !c.generic) throw std::invalid_argument("sweep: no ell, q or generic given");
    for (int l : c.ells)
        if (l < 1) throw std::invalid_argument("sweep: ell must be positive");
    return c;
}

std::vector<SweepPoint> expand(const SweepConfig& cfg) {
    std::vector<std::string> qs;
    for (int l : cfg.ells) {
        if (l == 1) {
            qs.push_back("1");
            qs.push_back("-1");
        } else {
            qs.push_back("zeta" + std::to_string(2 * l));
        }
    }
    for (auto& q : cfg.qs) qs.push_back(q);
    if (cfg.generic) qs.push_back("generic");
    std::vector<SweepPoint> pts;
    for (auto& q : qs)
        for (auto& z : cfg.zs)
            for (int N = cfg.n_min; N <= cfg.n_max; ++N)
                for (int d = N % 2; d <= N; d += 2)
                    for (int s : cfg.signs) pts.push_back({q, z, N, d, s});
    return pts;
}

json run_sweep(const SweepConfig& cfg, const std::function<void(const VerifyReport&)>& done) {
    json points = json::array();
    long pass = 0, fail = 0, inconclusive = 0, skipped = 0;
    std::map<std::pair<std::string, std::string>, std::optional<FieldCtx>> ctxs;
    namespace fs = std::filesystem;
    if (!cfg.output_dir.empty()) fs::create_directories(cfg.output_dir);
    for (auto& p : expand(cfg)) {
        auto key = std::pair{p.q, p.z};
        if (!ctxs.count(key)) ctxs[key] = try_ctx(p.q, p.z);
        auto& ctx = ctxs[key];
        if (!ctx) {
            ++skipped;
            continue;
        }
        VerifyReport r;
        try {
            r = verify_main(p.N, p.d, ctx->z, p.sign, *ctx, cfg.budgets);
        } catch (const DimensionBudgetExceeded& e) {
            r.N = p.N;
            r.d = p.d;
            r.sign = p.sign;
            r.status = "inconclusive";
            r.discrepancy = e.what();
        }
        if (done) done(r);
        (r.status == "pass" ? pass : r.status == "fail" ? fail : inconclusive)++;
        json j = verify_json(r);
        j["q"] = p.q;
        j["z_spec"] = p.z;
        if (!cfg.output_dir.empty()) {
            std::string name = "N" + std::to_string(p.N) + "_d" + std::to_string(p.d) + "_" + std::to_string(points.size()) + ".dot";
            std::ofstream(fs::path(cfg.output_dir) / name) << r.predicted.dot();
            j["dot_file"] = name;
        }
        points.push_back(j);
    }
    json report = {{"points", points},
                   {"pass", pass},
                   {"fail", fail},
                   {"inconclusive", inconclusive},
                   {"skipped", skipped},
                   {"status", fail ? "fail" : "pass"}};
    if (!cfg.output_dir.empty()) std::ofstream(fs::path(cfg.output_dir) / "report.json") << report.dump(2) << "\n";
    return report;
}

}  // namespace atl
