#include "rep.hpp"

namespace atl {

SparseMat Representation::omega_pow(int k) const {
    SparseMat r = SparseMat::identity(dim);
    const SparseMat& g = k >= 0 ? omega : omega_inv;
    for (int i = 0; i < std::abs(k); ++i) r = r * g;
    return r;
}

std::vector<std::pair<std::string, const SparseMat*>> Representation::generators() const {
    std::vector<std::pair<std::string, const SparseMat*>> g;
    for (int i = 1; i <= static_cast<int>(e.size()); ++i) g.emplace_back("e" + std::to_string(i), &e[i - 1]);
    g.emplace_back("Omega", &omega);
    g.emplace_back("Omega^-1", &omega_inv);
    return g;
}

IntertwinerReport verify_intertwiner(const SparseMat& M, const Representation& A, const Representation& B) {
    IntertwinerReport rep;
    if (M.rows() != B.dim || M.cols() != A.dim || A.N != B.N) {
        rep.ok = false;
        rep.failing_generator = "size";
        return rep;
    }
    auto ga = A.generators(), gb = B.generators();
    for (size_t k = 0; k < ga.size(); ++k) {
        if (M * *ga[k].second != *gb[k].second * M) {
            rep.ok = false;
            rep.failing_generator = ga[k].first;
            return rep;
        }
    }
    return rep;
}

IntertwinerReport verify_intertwiner(const Matrix& M, const Representation& A, const Representation& B) {
    return verify_intertwiner(SparseMat::from_dense(M), A, B);
}

SparseMat word_matrix(const Representation& r, const std::vector<int>& word) {
    SparseMat m = SparseMat::identity(r.dim);
    for (int g : word) m = m * (g >= 1 ? r.gen_e(g) : g == 0 ? r.omega : r.omega_inv);
    return m;
}

namespace {

template <class Coords>
Representation transport(const Representation& r, const std::vector<Vec>& basis, Coords coords) {
    Representation out;
    out.label = r.label;
    out.N = r.N;
    out.dim = static_cast<int>(basis.size());
    out.beta = r.beta;
    auto image = [&](const SparseMat& g) {
        SparseMat m(out.dim, out.dim);
        for (int k = 0; k < out.dim; ++k) {
            Vec c = coords(g * basis[k]);
            for (int i = 0; i < out.dim; ++i) m.add(i, k, c[i]);
        }
        m.finalize();
        return m;
    };
    for (auto& g : r.e) out.e.push_back(image(g));
    out.omega = image(r.omega);
    out.omega_inv = image(r.omega_inv);
    return out;
}

}  // namespace

Representation restrict_to(const Representation& r, const Subspace& sub) {
    return transport(r, sub.basis(), [&](const Vec& v) {
        if (!sub.contains(v)) throw std::logic_error("subspace is not invariant");
        return sub.coords(v);
    });
}

Representation subquotient_rep(const Representation& r, const Subquotient& sq) {
    return transport(r, sq.lifts(), [&](const Vec& v) { return sq.coords(v); });
}

Representation star_dual(const Representation& r) {
    Representation out = r;
    out.label = r.label + "*";
    for (auto& g : out.e) g = g.transpose();
    out.omega = r.omega_inv.transpose();
    out.omega_inv = r.omega.transpose();
    return out;
}

Representation circ_dual(const Representation& r) {
    Representation out = r;
    out.label = r.label + "o";
    for (int i = 1; i <= static_cast<int>(r.e.size()); ++i) out.e[i - 1] = r.gen_e(r.N - i);
    out.omega = r.omega_inv;
    out.omega_inv = r.omega;
    return out;
}

}  // namespace atl
