#pragma once
// Cellular modules W_{N;d,z}: link-pattern basis, reduced action, Gram form and the
// Graham-Lehrer morphisms between them.

#include <map>
#include <optional>

#include "diagram.hpp"
#include "rep.hpp"
#include "scalar.hpp"

namespace atl {

struct NotSuccessor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Monic (N,d)-diagrams of minimal rank, one per choice of the r = (N-d)/2 arc openings.
class LinkBasis {
public:
    LinkBasis(int N, int d);
    int N() const { return N_; }
    int d() const { return d_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const Diagram& operator[](int k) const { return elems_[k]; }
    const std::vector<Diagram>& elements() const { return elems_; }
    // openings of element k, 1-based positions
    const std::vector<int>& openings(int k) const { return open_[k]; }
    // index of the basis element with the same arcs as the monic diagram g
    int find(const Diagram& g) const;

private:
    int N_, d_;
    std::vector<Diagram> elems_;
    std::vector<std::vector<int>> open_;
    std::map<std::vector<Arc>, int> index_;
};

const LinkBasis& link_basis(int N, int d);  // cached

struct Reduced {
    int index;     // -1 when the diagram vanishes
    Scalar coeff;
};

class CellModule {
public:
    // z is the twist; ctx provides q and beta
    CellModule(int N, int d, const Scalar& z, const FieldCtx& ctx);
    CellModule(int N, int d, const FieldCtx& ctx) : CellModule(N, d, ctx.z, ctx) {}

    int N() const { return N_; }
    int d() const { return d_; }
    int dim() const { return basis_->size(); }
    const Scalar& z() const { return z_; }
    const LinkBasis& basis() const { return *basis_; }
    const FieldCtx& ctx() const { return ctx_; }

    // reduce a weighted (N,d)-diagram to a multiple of a basis element
    Reduced reduce(const WeightedDiagram& w) const;
    Vec act(const Diagram& g, int v) const;
    SparseMat matrix(const Diagram& g) const;
    Representation rep() const;

private:
    int N_, d_;
    Scalar z_, loop_;
    FieldCtx ctx_;
    const LinkBasis* basis_;
};

// <w, v> for monic (N,d)-diagrams w, v, read through v^dagger w
Scalar pairing(const Diagram& w, const Diagram& v, const Scalar& z, const FieldCtx& ctx);
// G[w][v] = <w, v> pairing W_{N;d,z} with W_{N;d,z^-1}
Matrix gram(int N, int d, const Scalar& z, const FieldCtx& ctx);
inline Matrix gram(int N, int d, const FieldCtx& ctx) { return gram(N, d, ctx.z, ctx); }
int simple_dim(int N, int d, const Scalar& z, const FieldCtx& ctx);

// +1 if (t,x) succeeds (d,z) through condition A, -1 through B, nullopt otherwise
// (A is reported when both hold)
std::optional<int> succession(int d, const Scalar& z, int t, const Scalar& x, const FieldCtx& ctx);
bool satisfies_A(int d, const Scalar& z, int t, const Scalar& x, const FieldCtx& ctx);
bool satisfies_B(int d, const Scalar& z, int t, const Scalar& x, const FieldCtx& ctx);

// W_{N;t,x} -> W_{N;d,z}, a = +1 (condition A) or -1 (condition B)
Matrix gl_morphism(int N, int t, int d, const Scalar& z, int a, const FieldCtx& ctx);
// checks the succession first; throws NotSuccessor
Matrix gl_morphism(int N, int t, const Scalar& x, int d, const Scalar& z, const FieldCtx& ctx);

}  // namespace atl
