#include "structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <sstream>

#include "qarith.hpp"

namespace atl {

Budgets Budgets::from_env() {
    Budgets b;
    const char* env = std::getenv("ATL_BUDGETS");
    if (!env) return b;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        long v = std::atol(item.c_str() + eq + 1);
        if (key == "hom_n") b.hom_max_n = static_cast<int>(v);
        else if (key == "hom_product") b.hom_max_product = v;
        else if (key == "filtration_dim") b.filtration_max_dim = static_cast<int>(v);
        else if (key == "algebra_dim") b.algebra_max_dim = static_cast<int>(v);
    }
    return b;
}

std::string pair_label(const PairDZ& p) { return "(" + std::to_string(p.d) + "," + p.z.str() + ")"; }

bool same_pair(const PairDZ& a, const PairDZ& b) { return a.d == b.d && a.z == b.z; }

bool is_problematic(int N, const PairDZ& p, const FieldCtx& ctx) {
    return N % 2 == 0 && p.d == 0 && ctx.beta.is_zero() && (p.z == ctx.q || p.z == ctx.qinv);
}

std::string subcase_name(Subcase s) {
    switch (s) {
        case Subcase::GenericNone: return "generic-none";
        case Subcase::GenericOne: return "generic-one";
        case Subcase::I: return "i";
        case Subcase::IIA: return "ii-A";
        case Subcase::IIB: return "ii-B";
        case Subcase::III: return "iii";
        case Subcase::Problematic: return "problematic";
    }
    return "?";
}

int SuccessorFamilies::index(const PairDZ& p) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (same_pair(nodes[i].pair, p)) return static_cast<int>(i);
    return -1;
}

std::optional<PairDZ> direct_successor(const PairDZ& base, int cond, int N, const FieldCtx& ctx) {
    auto r = cond > 0 ? direct_A_successor(N, base.d, base.z, ctx) : direct_B_successor(N, base.d, base.z, ctx);
    if (!r) return std::nullopt;
    return PairDZ{r->first, r->second};
}

std::vector<PairDZ> successor_closure(const PairDZ& base, int N, const FieldCtx& ctx) {
    std::vector<PairDZ> out;
    std::deque<PairDZ> todo{base};
    auto seen = [&](const PairDZ& p) {
        if (same_pair(p, base)) return true;
        for (auto& o : out)
            if (same_pair(o, p)) return true;
        return false;
    };
    while (!todo.empty()) {
        PairDZ p = todo.front();
        todo.pop_front();
        Scalar z2 = p.z * p.z;
        for (int m = 1; p.d + 2 * m <= N; ++m) {
            int t = p.d + 2 * m;
            for (int a : {1, -1}) {
                if (z2 != ctx.qpow(a * t)) continue;
                PairDZ n{t, p.z * ctx.qpow(-a * m)};
                if (seen(n)) continue;
                out.push_back(n);
                todo.push_back(n);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const PairDZ& a, const PairDZ& b) { return a.d < b.d; });
    return out;
}

SuccessorFamilies successors(const PairDZ& base, int N, const FieldCtx& ctx) {
    SuccessorFamilies f;
    f.base = base;
    f.N = N;
    f.ell = ctx.ell;
    const int d = base.d;
    const Scalar& z = base.z;
    auto add = [&](char fam, int a, int e, const Scalar& u) {
        if (e > N) return false;
        f.nodes.push_back({fam, a, {e, u}});
        return true;
    };
    f.nodes.push_back({'d', 0, base});
    if (ctx.ell == 0) {
        auto rest = successor_closure(base, N, ctx);
        for (auto& p : rest) f.nodes.push_back({'t', 0, p});
        f.subcase = rest.empty() ? Subcase::GenericNone : Subcase::GenericOne;
    } else {
        const int L = ctx.ell;
        Scalar qL = ctx.qpow(L), z2 = z * z, qd = ctx.qpow(d);
        if (qd == z2 && z2 * z2 == Scalar(1)) {
            f.subcase = Subcase::I;
            for (int a = 1; add('d', a, d + 2 * a * L, z * qL.pow(a)); ++a) {
            }
        } else if (qd == z2 || qd == z2.inv()) {
            std::optional<PairDZ> t;
            for (int m = 1; m < L && !t; ++m)
                for (int a : {1, -1})
                    if (!t && z2 == ctx.qpow(a * (d + 2 * m))) {
                        t = PairDZ{d + 2 * m, z * ctx.qpow(-a * m)};
                        f.subcase = a > 0 ? Subcase::IIA : Subcase::IIB;
                    }
            if (!t) throw std::logic_error("no successor below d + 2l in subcase ii");
            for (int a = 0;; ++a) {
                if (a > 0 && !add('d', a, d + 2 * a * L, z * qL.pow(a))) break;
                if (!add('t', a, t->d + 2 * a * L, t->z * qL.pow(a))) break;
            }
        } else {
            f.subcase = is_problematic(N, base, ctx) ? Subcase::Problematic : Subcase::III;
            for (int s = d + 2; s <= d + 2 * L; s += 2)
                if (z2 == ctx.qpow(s)) {
                    f.s = s;
                    break;
                }
            if (f.s) {
                f.k = (f.s - d) / 2;
                Scalar y0 = z * ctx.qpow(-f.k);
                while (-f.s + f.delta_t <= d) f.delta_t += 2 * L;
                int t0 = -f.s + f.delta_t;
                Scalar x0 = z.inv() * ctx.qpow(f.k + f.delta_t / 2);
                while (-d + f.delta_h <= std::max(f.s, t0)) f.delta_h += 2 * L;
                int h0 = -d + f.delta_h;
                Scalar v0 = z.inv() * ctx.qpow(f.delta_h / 2);
                for (int a = 0; d + 2 * a * L <= N; ++a) {
                    Scalar p = qL.pow(a);
                    if (a > 0) add('d', a, d + 2 * a * L, z * p);
                    add('s', a, f.s + 2 * a * L, y0 * p);
                    add('t', a, t0 + 2 * a * L, x0 * p);
                    add('h', a, h0 + 2 * a * L, v0 * p);
                }
            }
        }
    }
    std::stable_sort(f.nodes.begin() + 1, f.nodes.end(),
                     [](const FamilyNode& a, const FamilyNode& b) { return a.pair.d < b.pair.d; });
    for (size_t i = 0; i < f.nodes.size(); ++i)
        for (int cond : {1, -1}) {
            auto n = direct_successor(f.nodes[i].pair, cond, N, ctx);
            if (!n) continue;
            int j = f.index(*n);
            if (j >= 0) f.direct.push_back({static_cast<int>(i), j, cond});
        }
    return f;
}

int LoewyDiagram::index(const PairDZ& p) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (same_pair(nodes[i].pair, p)) return static_cast<int>(i);
    return -1;
}

int LoewyDiagram::total_dim() const {
    int s = 0;
    for (auto& n : nodes) s += n.dim;
    return s;
}

std::string LoewyDiagram::dot() const {
    std::ostringstream os;
    os << "digraph loewy {\n";
    for (size_t i = 0; i < nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << nodes[i].label << " dim=" << nodes[i].dim << "\"];\n";
    for (auto [a, b] : arrows) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

namespace {

struct Draft {
    std::vector<FamilyNode> nodes;
    std::vector<std::pair<int, int>> arrows;
};

int find_node(const Draft& g, char fam, int a) {
    for (size_t i = 0; i < g.nodes.size(); ++i)
        if (g.nodes[i].family == fam && g.nodes[i].a == a) return static_cast<int>(i);
    return -1;
}

void link(Draft& g, char f1, int a1, char f2, int a2) {
    int i = find_node(g, f1, a1), j = find_node(g, f2, a2);
    if (i >= 0 && j >= 0) g.arrows.emplace_back(i, j);
}

// arrows of the cellular module on the unpruned families, then pruned to the listed nodes
Draft cellular_draft(const SuccessorFamilies& f) {
    Draft g;
    g.nodes = f.nodes;
    int top = 0;
    for (auto& n : f.nodes) top = std::max(top, n.a);
    switch (f.subcase) {
        case Subcase::GenericNone: break;
        case Subcase::GenericOne:
            if (g.nodes.size() > 1) g.arrows.emplace_back(0, 1);
            break;
        case Subcase::I:
            for (int a = 0; a <= top; ++a) link(g, 'd', a, 'd', a + 1);
            break;
        case Subcase::IIA:
        case Subcase::IIB:
            for (int a = 0; a <= top; ++a) {
                link(g, 'd', a, 't', a);
                link(g, 't', a, 'd', a + 1);
            }
            break;
        case Subcase::III:
        case Subcase::Problematic:
            for (int a = 0; a <= top; ++a) {
                link(g, 'd', a, 's', a);
                link(g, 'd', a, 't', a);
                link(g, 's', a, 'd', a + 1);
                link(g, 's', a, 'h', a);
                link(g, 't', a, 'd', a + 1);
                link(g, 't', a, 'h', a);
                link(g, 'h', a, 's', a + 1);
                link(g, 'h', a, 't', a + 1);
            }
            break;
    }
    return g;
}

void drop_base(Draft& g) {
    Draft out;
    for (size_t i = 1; i < g.nodes.size(); ++i) out.nodes.push_back(g.nodes[i]);
    for (auto [a, b] : g.arrows)
        if (a && b) out.arrows.emplace_back(a - 1, b - 1);
    g = out;
}

LoewyDiagram finish(const Draft& g, int N, const FieldCtx& ctx, const std::string& title, Subcase sc) {
    LoewyDiagram D;
    D.title = title;
    D.subcase = subcase_name(sc);
    for (auto& n : g.nodes) D.nodes.push_back({n.pair, simple_dim(N, n.pair.d, n.pair.z, ctx), pair_label(n.pair)});
    D.arrows = g.arrows;
    std::sort(D.arrows.begin(), D.arrows.end());
    D.arrows.erase(std::unique(D.arrows.begin(), D.arrows.end()), D.arrows.end());
    // layer of a node: the longest path of arrows ending at it
    int n = static_cast<int>(D.nodes.size());
    std::vector<int> depth(n, 0);
    for (int it = 0; it < n; ++it)
        for (auto [a, b] : D.arrows) depth[b] = std::max(depth[b], depth[a] + 1);
    for (auto [a, b] : D.arrows)
        if (depth[b] <= depth[a]) throw std::logic_error("cyclic Loewy diagram");
    int layers = n ? *std::max_element(depth.begin(), depth.end()) + 1 : 0;
    D.layers.assign(layers, {});
    for (int i = 0; i < n; ++i) D.layers[depth[i]].push_back(i);
    return D;
}

std::string title(const char* kind, int N, int d, const Scalar& z) {
    return std::string(kind) + "(" + std::to_string(N) + ";" + std::to_string(d) + "," + z.str() + ")";
}

}  // namespace

LoewyDiagram predict_cellular(int N, int d, const Scalar& z, const FieldCtx& ctx) {
    if (!valid_sector(N, d) || d < 0) throw std::invalid_argument("need 0 <= d <= N and d = N mod 2");
    auto f = successors({d, z}, N, ctx);
    Draft g = cellular_draft(f);
    if (f.subcase == Subcase::Problematic) drop_base(g);
    return finish(g, N, ctx, title("W", N, d, z), f.subcase);
}

LoewyDiagram predict_chain(int N, int d, const Scalar& z, int sign, const FieldCtx& ctx) {
    if (!valid_sector(N, d)) throw std::invalid_argument("need |d| <= N and d = N mod 2");
    if (d < 0) {
        LoewyDiagram D = predict_chain(N, -d, z.inv(), -sign, ctx);
        D.title = title(sign > 0 ? "X+" : "X-", N, d, z);
        return D;
    }
    auto f = successors({d, z}, N, ctx);
    Draft g = cellular_draft(f);
    auto fam = [&](int i) { return g.nodes[i].family; };
    switch (f.subcase) {
        case Subcase::GenericNone: break;
        case Subcase::GenericOne:
            if (!g.arrows.empty() && f.direct.size() && f.direct[0].cond > 0) g.arrows = {{1, 0}};
            break;
        case Subcase::I: g.arrows.clear(); break;
        case Subcase::IIA:
        case Subcase::IIB: {
            // the t family are sources through A and targets through B
            bool t_source = f.subcase == Subcase::IIA;
            for (auto& [a, b] : g.arrows)
                if ((fam(b) == 't') == t_source) std::swap(a, b);
            break;
        }
        case Subcase::III:
        case Subcase::Problematic:
            // the s family are sources and the t family targets
            for (auto& [a, b] : g.arrows)
                if (fam(b) == 's' || fam(a) == 't') std::swap(a, b);
            if (f.subcase == Subcase::Problematic) {
                drop_base(g);
                if (N == 2) link(g, 's', 0, 't', 0);
            }
            break;
    }
    if (sign < 0)
        for (auto& [a, b] : g.arrows) std::swap(a, b);
    return finish(g, N, ctx, title(sign > 0 ? "X+" : "X-", N, d, z), f.subcase);
}

namespace {

Vec flatten(const Matrix& m) {
    Vec v;
    v.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

Matrix unflatten(const Vec& v, int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = v[static_cast<size_t>(i) * n + j];
    return m;
}

Scalar trace_product(const Matrix& a, const Matrix& b) {
    Scalar t;
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k)
            if (!a.at(i, k).is_zero() && !b.at(k, i).is_zero()) t += a.at(i, k) * b.at(k, i);
    return t;
}

Subspace image_of(const std::vector<Matrix>& maps, const Subspace& V, int n) {
    Subspace out(n);
    for (auto& m : maps)
        for (auto& v : V.basis()) out.add(m * v);
    return out;
}

void check_budget(const Representation& r, const Budgets& b) {
    if (r.dim > b.filtration_max_dim)
        throw DimensionBudgetExceeded("module of dimension " + std::to_string(r.dim) + " exceeds the filtration budget " +
                                      std::to_string(b.filtration_max_dim));
}

}  // namespace

MatrixAlgebra image_algebra(const Representation& rep, const Budgets& b) {
    check_budget(rep, b);
    int n = rep.dim;
    MatrixAlgebra alg;
    alg.n = n;
    if (n == 0) return alg;
    std::vector<Matrix> gens;
    for (auto& [name, g] : rep.generators()) gens.push_back(g->dense());
    Subspace span(n * n);
    std::deque<Matrix> todo;
    Matrix id = Matrix::identity(n);
    span.add(flatten(id));
    todo.push_back(id);
    while (!todo.empty()) {
        Matrix w = todo.front();
        todo.pop_front();
        for (auto& g : gens) {
            Matrix p = g * w;
            if (!span.add(flatten(p))) continue;
            if (span.dim() > b.algebra_max_dim)
                throw DimensionBudgetExceeded("image algebra exceeds dimension " + std::to_string(b.algebra_max_dim));
            todo.push_back(std::move(p));
        }
    }
    for (auto& v : span.basis()) alg.basis.push_back(unflatten(v, n));
    return alg;
}

std::vector<Matrix> radical(const MatrixAlgebra& alg) {
    int a = alg.dim();
    Matrix T(a, a);
    for (int i = 0; i < a; ++i)
        for (int j = i; j < a; ++j) T.at(i, j) = T.at(j, i) = trace_product(alg.basis[i], alg.basis[j]);
    std::vector<Matrix> out;
    for (auto& c : nullspace(T)) {
        Matrix m(alg.n, alg.n);
        for (int i = 0; i < a; ++i)
            if (!c[i].is_zero()) m = m + c[i] * alg.basis[i];
        out.push_back(m);
    }
    return out;
}

std::vector<int> Filtration::dims() const {
    std::vector<int> d;
    for (auto& l : layers) d.push_back(l.dim);
    return d;
}

Filtration loewy_filtration(const Representation& rep, const Budgets& b) {
    MatrixAlgebra alg = image_algebra(rep, b);
    std::vector<Matrix> J = radical(alg);
    Filtration f;
    Subspace V = Subspace::whole(rep.dim);
    while (V.dim() > 0) {
        Subspace W = image_of(J, V, rep.dim);
        f.layers.push_back({V.dim() - W.dim(), {}, {}});
        V = W;
    }
    return f;
}

SimpleModule simple_module(int N, const PairDZ& p, const FieldCtx& ctx) {
    CellModule W(N, p.d, p.z, ctx);
    Representation full = W.rep();
    Subspace rad = Subspace::span(full.dim, left_nullspace(gram(N, p.d, p.z, ctx)));
    for (auto& [name, g] : full.generators())
        for (auto& v : rad.basis())
            if (!rad.contains(*g * v)) throw std::logic_error("radical of the form is not invariant under " + name);
    SimpleModule s;
    s.pair = p;
    s.label = pair_label(p);
    s.rep = subquotient_rep(full, Subquotient(Subspace::whole(full.dim), rad));
    s.rep.label = "I(" + std::to_string(N) + ";" + std::to_string(p.d) + "," + p.z.str() + ")";
    return s;
}

std::vector<Matrix> hom_space(const Representation& A, const Representation& B, const Budgets& b) {
    if (A.N > b.hom_max_n || static_cast<long>(A.dim) * B.dim > b.hom_max_product)
        throw DimensionBudgetExceeded("hom solve of size " + std::to_string(A.dim) + "x" + std::to_string(B.dim) +
                                      " at N=" + std::to_string(A.N) + " exceeds the budget");
    if (A.N != B.N) throw std::invalid_argument("modules over different algebras");
    if (A.dim == 0 || B.dim == 0) return {};
    auto ga = A.generators(), gb = B.generators();
    const int G = static_cast<int>(ga.size()), nA = A.dim, nB = B.dim;

    // a spanning set of A: words applied to seeds taken from the standard basis
    std::vector<Vec> basis;
    std::vector<int> parent, gen, seed;
    Subspace span(nA);
    int seeds = 0;
    for (int i = 0; i < nA && span.dim() < nA; ++i) {
        Vec e(nA);
        e[i] = Scalar(1);
        if (!span.add(e)) continue;
        size_t first = basis.size();
        basis.push_back(e);
        parent.push_back(-1);
        gen.push_back(-1);
        seed.push_back(seeds++);
        for (size_t j = first; j < basis.size(); ++j)
            for (int k = 0; k < G; ++k) {
                Vec v = *ga[k].second * basis[j];
                if (!span.add(v)) continue;
                basis.push_back(v);
                parent.push_back(static_cast<int>(j));
                gen.push_back(k);
                seed.push_back(-1);
            }
    }
    Matrix Bm = Matrix::from_cols(basis, nA);
    Matrix Binv = *inverse(Bm);
    // the unknowns are the images of the seeds; each candidate carries the images of all spanning vectors
    struct Cand {
        std::vector<Vec> orbit;
    };
    std::vector<Cand> K;
    for (int s = 0; s < seeds; ++s)
        for (int r = 0; r < nB; ++r) {
            Cand c;
            c.orbit.resize(nA);
            for (int j = 0; j < nA; ++j) {
                if (parent[j] < 0) {
                    c.orbit[j] = Vec(nB);
                    if (seed[j] == s) c.orbit[j][r] = Scalar(1);
                } else {
                    c.orbit[j] = *gb[gen[j]].second * c.orbit[parent[j]];
                }
            }
            K.push_back(std::move(c));
        }
    for (int j = 0; j < nA && !K.empty(); ++j)
        for (int k = 0; k < G && !K.empty(); ++k) {
            Vec coef = Binv * (*ga[k].second * basis[j]);
            std::vector<Vec> res;
            bool all_zero = true;
            for (auto& c : K) {
                Vec r = *gb[k].second * c.orbit[j];
                for (int i = 0; i < nA; ++i)
                    if (!coef[i].is_zero())
                        for (int t = 0; t < nB; ++t) submul(r[t], coef[i], c.orbit[i][t]);
                all_zero = all_zero && is_zero(r);
                res.push_back(std::move(r));
            }
            if (all_zero) continue;
            auto null = nullspace(Matrix::from_cols(res, nB));
            std::vector<Cand> next;
            for (auto& alpha : null) {
                Cand c;
                c.orbit.assign(nA, Vec(nB));
                for (size_t i = 0; i < K.size(); ++i) {
                    if (alpha[i].is_zero()) continue;
                    for (int jj = 0; jj < nA; ++jj)
                        for (int t = 0; t < nB; ++t)
                            if (!K[i].orbit[jj][t].is_zero()) c.orbit[jj][t] += alpha[i] * K[i].orbit[jj][t];
                }
                next.push_back(std::move(c));
            }
            K = std::move(next);
        }
    std::vector<Matrix> out;
    for (auto& c : K) out.push_back(Matrix::from_cols(c.orbit, nB) * Binv);
    return out;
}

int hom_dim(const Representation& A, const Representation& B, const Budgets& b) {
    return static_cast<int>(hom_space(A, B, b).size());
}

Filtration loewy_filtration(const Representation& rep, const std::vector<SimpleModule>& candidates, const Budgets& b) {
    check_budget(rep, b);
    std::vector<Representation> duals;
    for (auto& s : candidates) duals.push_back(star_dual(s.rep));
    Filtration f;
    Representation X = rep;
    while (X.dim > 0) {
        Representation Xs = star_dual(X);
        Subspace images(X.dim);
        Layer layer;
        int counted = 0;
        for (size_t c = 0; c < candidates.size(); ++c) {
            if (candidates[c].rep.dim == 0) continue;
            // maps X -> S are the transposes of maps S* -> X*
            auto homs = hom_space(duals[c], Xs, b);
            for (auto& h : homs) {
                for (int j = 0; j < h.cols(); ++j) images.add(h.col(j));
                layer.factors.push_back(candidates[c].label);
                layer.factor_dims.push_back(candidates[c].rep.dim);
                counted += candidates[c].rep.dim;
            }
        }
        layer.dim = images.dim();
        if (layer.dim == 0) {
            f.complete = false;
            f.note = "no candidate quotient of a module of dimension " + std::to_string(X.dim);
            f.layers.push_back({X.dim, {}, {}});
            break;
        }
        if (counted != layer.dim) {
            f.complete = false;
            f.note = "layer " + std::to_string(f.layers.size()) + " has dimension " + std::to_string(layer.dim) +
                     " but its identified factors sum to " + std::to_string(counted);
        }
        f.layers.push_back(layer);
        std::vector<Vec> rows = images.basis();
        Subspace rad = Subspace::span(X.dim, nullspace(Matrix::from_rows(rows, X.dim)));
        if (rad.dim() == 0) break;
        X = restrict_to(X, rad);
    }
    return f;
}

namespace {

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<std::string> layer_labels(const LoewyDiagram& D, const std::vector<int>& layer) {
    std::vector<std::string> out;
    for (int i : layer) out.push_back(D.nodes[i].label);
    return sorted(out);
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (auto& x : v) s += (s.empty() ? "" : " ") + x;
    return "[" + s + "]";
}

std::vector<SimpleModule> candidates_for(int N, const LoewyDiagram& D, const FieldCtx& ctx) {
    std::vector<SimpleModule> out;
    for (auto& n : D.nodes)
        if (n.dim > 0) out.push_back(simple_module(N, n.pair, ctx));
    return out;
}

std::vector<std::string> all_factors(const Filtration& f) {
    std::vector<std::string> out;
    for (auto& l : f.layers) out.insert(out.end(), l.factors.begin(), l.factors.end());
    return sorted(out);
}

// a set of factors of a submodule holds every target of an arrow leaving it
std::optional<std::string> closure_defect(const LoewyDiagram& D, const std::vector<std::string>& factors) {
    for (auto& x : factors)
        if (std::find_if(D.nodes.begin(), D.nodes.end(), [&](const LoewyNode& n) { return n.label == x; }) ==
            D.nodes.end())
            return "factor " + x + " is not predicted";
    for (auto [a, b] : D.arrows) {
        bool has_a = std::count(factors.begin(), factors.end(), D.nodes[a].label) > 0;
        bool has_b = std::count(factors.begin(), factors.end(), D.nodes[b].label) > 0;
        if (has_a && !has_b) return "submodule holds " + D.nodes[a].label + " but not " + D.nodes[b].label;
    }
    return std::nullopt;
}

Representation image_rep(const Representation& X, const SparseMat& M) {
    Matrix dm = M.dense();
    std::vector<Vec> cols;
    for (int j = 0; j < dm.cols(); ++j) cols.push_back(dm.col(j));
    return restrict_to(X, Subspace::span(X.dim, cols));
}

}  // namespace

VerifyReport verify_main(int N, int d, const Scalar& z, int sign, const FieldCtx& ctx, const Budgets& b) {
    if (d < 0 || !valid_sector(N, d)) throw std::invalid_argument("need 0 <= d <= N and d = N mod 2");
    VerifyReport r;
    r.N = N;
    r.d = d;
    r.z = z.str();
    r.sign = sign;
    r.predicted = predict_chain(N, d, z, sign, ctx);
    auto fail = [&](const std::string& why) {
        if (!r.discrepancy) r.discrepancy = why;
        r.status = "fail";
    };
    try {
        Representation X = build_chain(N, z, sign, d, ctx);
        if (r.predicted.total_dim() != X.dim)
            fail("predicted factors sum to " + std::to_string(r.predicted.total_dim()) + ", sector has dimension " +
                 std::to_string(X.dim));
        else
            r.checks.push_back("factor dimensions sum to " + std::to_string(X.dim));

        LoewyDiagram cell = predict_cellular(N, d, z, ctx);
        auto cands = candidates_for(N, cell, ctx);
        r.computed = loewy_filtration(X, cands, b);
        if (!r.computed.complete) fail("unidentified factors: " + r.computed.note);

        const auto& P = r.predicted.layers;
        if (P.size() != r.computed.layers.size())
            fail("predicted " + std::to_string(P.size()) + " layers, computed " +
                 std::to_string(r.computed.layers.size()));
        for (size_t k = 0; k < std::min(P.size(), r.computed.layers.size()); ++k) {
            auto want = layer_labels(r.predicted, P[k]);
            auto got = sorted(r.computed.layers[k].factors);
            if (want != got) fail("layer " + std::to_string(k) + ": predicted " + join(want) + ", computed " + join(got));
        }
        if (!r.discrepancy) r.checks.push_back("layers match " + std::to_string(P.size()) + " predicted layers");

        // submodules certified by explicit maps
        if (sign > 0) {
            Representation im = image_rep(X, mdsa_map(N, d, z, ctx));
            auto got = all_factors(loewy_filtration(im, cands, b));
            std::vector<std::string> want;
            for (auto& n : cell.nodes)
                if (n.dim > 0) want.push_back(n.label);
            if (auto s = direct_successor({d, z}, 1, N, ctx))
                for (auto& n : predict_cellular(N, s->d, s->z, ctx).nodes) {
                    auto it = std::find(want.begin(), want.end(), n.label);
                    if (it != want.end()) want.erase(it);
                }
            want = sorted(want);
            if (got != want) fail("image of the cellular map has factors " + join(got) + ", expected " + join(want));
            else if (auto defect = closure_defect(r.predicted, got)) fail("image of the cellular map: " + *defect);
            else r.checks.push_back("image of the cellular map " + join(got));
        }
        if (auto t = direct_successor({d, z}, sign > 0 ? -1 : 1, N, ctx)) {
            ModuleMap m = intertwiner(MapKind::I, sign, {d, z}, *t, N, ctx);
            auto got = all_factors(loewy_filtration(image_rep(X, m.M), cands, b));
            if (!m.check.ok) fail(m.label + " is not linear");
            else if (auto defect = closure_defect(r.predicted, got)) fail("image of " + m.label + ": " + *defect);
            else r.checks.push_back("image of " + m.label + " " + join(got));
        }
    } catch (const DimensionBudgetExceeded& e) {
        r.status = "inconclusive";
        r.discrepancy = e.what();
        return r;
    }
    if (r.status.empty()) r.status = "pass";
    return r;
}

ReciprocityReport reciprocity_check(int N, int d, const Scalar& z, const FieldCtx& ctx, const Budgets& b) {
    ReciprocityReport out;
    int dd = std::abs(d);
    auto cands = candidates_for(N, predict_cellular(N, dd, d < 0 ? z.inv() : z, ctx), ctx);
    Representation Xp = build_chain(N, z, 1, d, ctx), Xm = build_chain(N, z, -1, d, ctx);
    Filtration fp = loewy_filtration(Xp, cands, b), fm = loewy_filtration(Xm, cands, b);
    for (auto& l : fp.layers) out.plus.push_back(sorted(l.factors));
    for (auto& l : fm.layers) out.minus.push_back(sorted(l.factors));
    auto rev = out.minus;
    std::reverse(rev.begin(), rev.end());
    out.reversed = fp.complete && fm.complete && rev == out.plus;

    std::vector<SimpleModule> duals;
    for (auto& c : cands) duals.push_back({c.pair, c.label + "*", star_dual(c.rep)});
    Filtration fs = loewy_filtration(star_dual(Xp), duals, b);
    auto ds = fs.dims(), dp = fp.dims();
    std::reverse(ds.begin(), ds.end());
    out.star_dims_reversed = fs.complete && ds == dp;
    return out;
}

std::vector<long> problematic_dims(int N) {
    if (N < 2 || N % 2) throw std::invalid_argument("need an even N >= 2");
    int n = N / 2;
    std::vector<long> d(n + 2, 0);
    d[n] = 1;
    for (int i = n - 1; i >= 1; --i)
        d[i] = binomial(2 * n, n + i).get_si() - binomial(2 * n, n + i + 1).get_si() - d[i + 1];
    return std::vector<long>(d.begin() + 1, d.begin() + n + 1);
}

}  // namespace atl
