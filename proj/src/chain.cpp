#include "chain.hpp"

#include <bit>
#include <unordered_map>

namespace atl {

std::string state_str(State s, int N) {
    std::string r;
    for (int k = 1; k <= N; ++k) r += spin(s, N, k) > 0 ? '+' : '-';
    return r;
}

State parse_state(const std::string& word) {
    State s = 0;
    for (char c : word) {
        if (c != '+' && c != '-') throw std::invalid_argument("spin words use + and -: " + word);
        s = (s << 1) | (c == '-' ? 1u : 0u);
    }
    return s;
}

bool valid_sector(int N, int d) { return std::abs(d) <= N && (N - d) % 2 == 0; }

std::vector<State> sector_states(int N, std::optional<int> d) {
    if (N < 1 || N > 24) throw std::invalid_argument("chain length must be between 1 and 24");
    if (d && !valid_sector(N, *d)) throw std::invalid_argument("sector needs |d| <= N and d = N mod 2");
    std::vector<State> out;
    int minus = d ? (N - *d) / 2 : -1;
    for (State s = 0; s < (State(1) << N); ++s)
        if (minus < 0 || std::popcount(s) == minus) out.push_back(s);
    return out;
}

SparseMat op_matrix(const StateOp& op, const std::vector<State>& from, const std::vector<State>& to) {
    std::unordered_map<State, int> idx;
    for (size_t k = 0; k < to.size(); ++k) idx[to[k]] = static_cast<int>(k);
    SparseMat m(static_cast<int>(to.size()), static_cast<int>(from.size()));
    std::vector<std::pair<State, Scalar>> img;
    for (size_t c = 0; c < from.size(); ++c) {
        img.clear();
        op(from[c], img);
        for (auto& [s, v] : img) {
            if (v.is_zero()) continue;
            auto it = idx.find(s);
            if (it == idx.end()) throw std::logic_error("operator leaves the target states");
            m.add(it->second, static_cast<int>(c), v);
        }
    }
    m.finalize();
    return m;
}

void ChainGens::e(int i, State s, std::vector<std::pair<State, Scalar>>& out) const {
    int a = i, b = i % N + 1;
    int xa = spin(s, N, a), xb = spin(s, N, b);
    if (xa == xb) return;
    Scalar hop(1);
    if (i == N) hop = xa > 0 ? z * z : (z * z).inv();
    out.emplace_back(flip_site(flip_site(s, N, a), N, b), hop);
    // -q^{+-1} on a '+' at a, -q^{-+1} on a '+' at b
    out.emplace_back(s, -(xa > 0 ? ctx->qpow(sign) : ctx->qpow(-sign)));
}

void ChainGens::omega(State s, std::vector<std::pair<State, Scalar>>& out) const {
    int x1 = spin(s, N, 1);
    State top = (s >> (N - 1)) & 1u;
    State t = ((s << 1) & ((State(1) << N) - 1)) | top;
    out.emplace_back(t, z.pow(-x1));
}

void ChainGens::omega_inv(State s, std::vector<std::pair<State, Scalar>>& out) const {
    int xN = spin(s, N, N);
    State t = (s >> 1) | ((s & 1u) << (N - 1));
    out.emplace_back(t, z.pow(xN));
}

Representation build_chain(int N, const Scalar& z, int sign, std::optional<int> d, const FieldCtx& ctx) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("chain sign must be +1 or -1");
    auto states = sector_states(N, d);
    ChainGens g{N, sign, z, &ctx};
    Representation r;
    r.label = std::string("X") + (sign > 0 ? "+" : "-") + "(" + std::to_string(N) + ";" +
              (d ? std::to_string(*d) : std::string("full")) + "," + z.str() + ")";
    r.N = N;
    r.dim = static_cast<int>(states.size());
    r.beta = ctx.beta;
    if (N >= 2)
        for (int i = 1; i <= N; ++i)
            r.e.push_back(op_matrix([&](State s, auto& out) { g.e(i, s, out); }, states, states));
    r.omega = op_matrix([&](State s, auto& out) { g.omega(s, out); }, states, states);
    r.omega_inv = op_matrix([&](State s, auto& out) { g.omega_inv(s, out); }, states, states);
    return r;
}

SparseMat hamiltonian(int N, const Scalar& z, std::optional<int> d, const FieldCtx& ctx) {
    if (N < 2) throw std::invalid_argument("the Hamiltonian needs N >= 2");
    auto plus = build_chain(N, z, 1, d, ctx), minus = build_chain(N, z, -1, d, ctx);
    SparseMat hp(plus.dim, plus.dim), hm(plus.dim, plus.dim);
    hp.finalize();
    hm.finalize();
    for (int i = 0; i < N; ++i) {
        hp = hp + plus.e[i];
        hm = hm + minus.e[i];
    }
    if (hp != hm) throw std::logic_error("the sums of e_i^+ and e_i^- differ");
    return hp;
}

SparseMat spin_flip(int N, std::optional<int> d) {
    auto from = sector_states(N, d);
    auto to = sector_states(N, d ? std::optional<int>(-*d) : std::nullopt);
    State all = (State(1) << N) - 1;
    return op_matrix([&](State s, auto& out) { out.emplace_back(s ^ all, Scalar(1)); }, from, to);
}

SparseMat reversal(int N, std::optional<int> d) {
    auto states = sector_states(N, d);
    return op_matrix(
        [&](State s, auto& out) {
            State t = 0;
            for (int k = 0; k < N; ++k)
                if (s >> k & 1u) t |= State(1) << (N - 1 - k);
            out.emplace_back(t, Scalar(1));
        },
        states, states);
}

SparseMat mdsa_map(int N, int d, const Scalar& z, const FieldCtx& ctx) {
    const LinkBasis& B = link_basis(N, d);
    auto states = sector_states(N, d);
    std::unordered_map<State, int> idx;
    for (size_t k = 0; k < states.size(); ++k) idx[states[k]] = static_cast<int>(k);
    SparseMat m(static_cast<int>(states.size()), B.size());
    Scalar zi = z.inv();
    for (int c = 0; c < B.size(); ++c) {
        // expand the product of one lowering per arc
        std::vector<std::pair<State, Scalar>> terms{{State(0), Scalar(1)}};
        for (auto [i, j] : B[c].left_arcs()) {
            bool wraps = j > N;
            int jj = wraps ? j - N : j;
            Scalar ci = wraps ? z * ctx.uinv : ctx.uinv;
            Scalar cj = wraps ? zi * ctx.u : ctx.u;
            std::vector<std::pair<State, Scalar>> next;
            for (auto& [s, v] : terms) {
                next.emplace_back(flip_site(s, N, i), v * ci);
                next.emplace_back(flip_site(s, N, jj), v * cj);
            }
            terms = std::move(next);
        }
        for (auto& [s, v] : terms) m.add(idx.at(s), c, v);
    }
    m.finalize();
    return m;
}

namespace {

std::optional<std::pair<int, Scalar>> direct_successor(int N, int d, const Scalar& z, const FieldCtx& ctx, int a) {
    Scalar z2 = z * z;
    for (int m = 1; d + 2 * m <= N; ++m) {
        int t = d + 2 * m;
        if (z2 == ctx.qpow(a * t)) return std::pair{t, z * ctx.qpow(-a * m)};
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::pair<int, Scalar>> direct_A_successor(int N, int d, const Scalar& z, const FieldCtx& ctx) {
    return direct_successor(N, d, z, ctx, 1);
}

std::optional<std::pair<int, Scalar>> direct_B_successor(int N, int d, const Scalar& z, const FieldCtx& ctx) {
    return direct_successor(N, d, z, ctx, -1);
}

}  // namespace atl
