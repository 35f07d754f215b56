#include "cellular.hpp"

#include <memory>
#include <mutex>

#include "qarith.hpp"

namespace atl {

namespace {

// close the openings cyclically; unmatched closers carry the through lines
std::vector<Arc> close_arcs(int N, const std::vector<int>& open) {
    std::vector<char> is_open(N + 1, 0), used(N + 1, 0);
    for (int p : open) is_open[p] = 1;
    std::vector<int> stack;
    std::vector<Arc> arcs;
    for (int i = 1; i <= 2 * N; ++i) {
        int pos = (i - 1) % N + 1;
        if (is_open[pos]) {
            if (i <= N) stack.push_back(i);
            continue;
        }
        if (used[pos] || stack.empty()) continue;
        int p = stack.back();
        stack.pop_back();
        used[pos] = 1;
        arcs.emplace_back(p, i);
    }
    return arcs;
}

void combinations(int N, int r, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == r) {
        out.push_back(cur);
        return;
    }
    for (int p = start; p <= N - (r - static_cast<int>(cur.size())) + 1; ++p) {
        cur.push_back(p);
        combinations(N, r, p + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

LinkBasis::LinkBasis(int N, int d) : N_(N), d_(d) {
    if (d < 0 || d > N || (N - d) % 2) throw std::invalid_argument("need 0 <= d <= N and d = N mod 2");
    int r = (N - d) / 2;
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    combinations(N, r, 1, cur, subsets);
    for (auto& s : subsets) {
        Diagram g(N, d, close_arcs(N, s), {}, 0);
        index_[g.left_arcs()] = static_cast<int>(elems_.size());
        elems_.push_back(g);
        open_.push_back(s);
    }
}

int LinkBasis::find(const Diagram& g) const {
    auto it = index_.find(g.left_arcs());
    if (it == index_.end()) throw std::logic_error("diagram is not in the link basis: " + g.str());
    return it->second;
}

const LinkBasis& link_basis(int N, int d) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<LinkBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{N, d}];
    if (!slot) slot = std::make_unique<LinkBasis>(N, d);
    return *slot;
}

CellModule::CellModule(int N, int d, const Scalar& z, const FieldCtx& ctx)
    : N_(N), d_(d), z_(z), loop_(z + z.inv()), ctx_(ctx), basis_(&link_basis(N, d)) {}

Reduced CellModule::reduce(const WeightedDiagram& w) const {
    const Diagram& g = w.diagram;
    if (g.through() < d_) return {-1, Scalar(0)};
    Scalar c = ctx_.beta.pow(w.beta_power);
    if (d_ == 0) {
        if (g.loops()) c = c * loop_.pow(g.loops());
    } else {
        // a unit of through-line shift costs z^-1, the orientation of the chain twist
        int s = g.through_shift();
        if (s) c = c * z_.pow(-s);
    }
    return {basis_->find(g), c};
}

Vec CellModule::act(const Diagram& g, int v) const {
    Vec out(dim());
    Reduced r = reduce(compose(g, (*basis_)[v]));
    if (r.index >= 0) out[r.index] = r.coeff;
    return out;
}

SparseMat CellModule::matrix(const Diagram& g) const {
    SparseMat m(dim(), dim());
    for (int v = 0; v < dim(); ++v) {
        Reduced r = reduce(compose(g, (*basis_)[v]));
        if (r.index >= 0) m.add(r.index, v, r.coeff);
    }
    m.finalize();
    return m;
}

Representation CellModule::rep() const {
    Representation r;
    r.label = "W(" + std::to_string(N_) + ";" + std::to_string(d_) + "," + z_.str() + ")";
    r.N = N_;
    r.dim = dim();
    r.beta = ctx_.beta;
    if (N_ >= 2)
        for (int i = 1; i <= N_; ++i) r.e.push_back(matrix(Diagram::e(i, N_)));
    r.omega = matrix(Diagram::omega(N_, 1));
    r.omega_inv = matrix(Diagram::omega(N_, -1));
    return r;
}

Scalar pairing(const Diagram& w, const Diagram& v, const Scalar& z, const FieldCtx& ctx) {
    WeightedDiagram p = compose(v.dagger(), w);
    int d = w.n();
    if (p.diagram.through() < d) return Scalar(0);
    Scalar c = ctx.beta.pow(p.beta_power);
    if (d == 0) return c * (z + z.inv()).pow(p.diagram.loops());
    return c * z.pow(-p.diagram.through_shift());
}

Matrix gram(int N, int d, const Scalar& z, const FieldCtx& ctx) {
    const LinkBasis& B = link_basis(N, d);
    int n = B.size();
    Matrix G(n, n);
    for (int w = 0; w < n; ++w)
        for (int v = 0; v < n; ++v) G.at(w, v) = pairing(B[w], B[v], z, ctx);
    return G;
}

int simple_dim(int N, int d, const Scalar& z, const FieldCtx& ctx) { return rank(gram(N, d, z, ctx)); }

bool satisfies_A(int d, const Scalar& z, int t, const Scalar& x, const FieldCtx& ctx) {
    if (t < d || (t - d) % 2) return false;
    int m = (t - d) / 2;
    return z * z == ctx.qpow(t) && x == z * ctx.qpow(-m);
}

bool satisfies_B(int d, const Scalar& z, int t, const Scalar& x, const FieldCtx& ctx) {
    if (t < d || (t - d) % 2) return false;
    int m = (t - d) / 2;
    return z * z == ctx.qpow(-t) && x == z * ctx.qpow(m);
}

std::optional<int> succession(int d, const Scalar& z, int t, const Scalar& x, const FieldCtx& ctx) {
    if (satisfies_A(d, z, t, x, ctx)) return 1;
    if (satisfies_B(d, z, t, x, ctx)) return -1;
    return std::nullopt;
}

Matrix gl_morphism(int N, int t, int d, const Scalar& z, int a, const FieldCtx& ctx) {
    if (t < d || (t - d) % 2) throw NotSuccessor("gl morphism needs t >= d of the same parity");
    const LinkBasis& V = link_basis(N, t);
    const LinkBasis& B = link_basis(t, d);
    CellModule target(N, d, z, ctx);
    int r = (t - d) / 2;
    Poly rfact = qfact_sym(r);
    std::vector<Scalar> coef(B.size());
    for (int k = 0; k < B.size(); ++k) {
        const Diagram& w = B[k];
        auto arcs = w.left_arcs();
        // loops inside the hull of each arc, the arc included
        Poly den = Poly(Cyclo(1));
        for (auto [i, j] : arcs) {
            int count = 0;
            for (auto [i2, j2] : arcs) {
                int off = ((i2 - i) % t + t) % t;
                if (off < j - i) ++count;
            }
            den = den * qnum_sym(count);
        }
        Scalar h = eval_at_q(Poly::exact_div(rfact, den), ctx);
        int rank_w = w.rank(), zeta = 0;
        for (int p : w.left_through()) zeta += p;
        int two_i = t * (rank_w - r) + d * (t + 1) / 2 - zeta;
        coef[k] = ctx.qhalfpow(static_cast<long>(a) * two_i) * z.pow(r - rank_w) * h;
    }
    Matrix M(target.dim(), V.size());
    for (int v = 0; v < V.size(); ++v)
        for (int k = 0; k < B.size(); ++k) {
            if (coef[k].is_zero()) continue;
            Reduced red = target.reduce(compose(V[v], B[k]));
            if (red.index >= 0) M.at(red.index, v) += coef[k] * red.coeff;
        }
    return M;
}

Matrix gl_morphism(int N, int t, const Scalar& x, int d, const Scalar& z, const FieldCtx& ctx) {
    auto a = succession(d, z, t, x, ctx);
    if (!a) throw NotSuccessor("(" + std::to_string(t) + "," + x.str() + ") does not succeed (" + std::to_string(d) +
                               "," + z.str() + ")");
    return gl_morphism(N, t, d, z, *a, ctx);
}

}  // namespace atl
