#pragma once
// Successor families of pairs (d,z), the predicted Loewy diagrams of cellular modules and
// chain sectors, and the engine computing module structure: image algebras, radicals,
// Loewy filtrations, Hom spaces, and verification reports against the predictions.

#include <optional>
#include <string>
#include <vector>

#include "quantum.hpp"

namespace atl {

struct Inconclusive : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Limits on exact solves; ATL_BUDGETS="hom_n=8,hom_product=10000,filtration_dim=300,algebra_dim=2500"
struct Budgets {
    int hom_max_n = 8;
    long hom_max_product = 10000;
    int filtration_max_dim = 300;
    int algebra_max_dim = 2500;
    static Budgets from_env();
};

std::string pair_label(const PairDZ& p);
bool same_pair(const PairDZ& a, const PairDZ& b);
// the pairs (0,q) and (0,q^-1) when q + q^-1 = 0 and N is even
bool is_problematic(int N, const PairDZ& p, const FieldCtx& ctx);

enum class Subcase { GenericNone, GenericOne, I, IIA, IIB, III, Problematic };
std::string subcase_name(Subcase s);

struct FamilyNode {
    char family;  // 'd', 's', 't' or 'h'
    int a;
    PairDZ pair;
};

struct Succession {
    int from, to;  // indices into SuccessorFamilies::nodes
    int cond;      // 1 for condition A, -1 for B
};

struct SuccessorFamilies {
    PairDZ base;
    int N = 0;
    Subcase subcase = Subcase::GenericNone;
    int ell = 0;
    int s = 0, k = 0, delta_t = 0, delta_h = 0;  // subcase iii offsets
    std::vector<FamilyNode> nodes;               // the base first, then every successor with d <= N
    std::vector<Succession> direct;              // direct successions between listed nodes
    int index(const PairDZ& p) const;            // -1 if absent
};

SuccessorFamilies successors(const PairDZ& base, int N, const FieldCtx& ctx);
// every (t,x) with t <= N reached from base by steps through condition A or B
std::vector<PairDZ> successor_closure(const PairDZ& base, int N, const FieldCtx& ctx);
// the direct successor through A (cond = 1) or B (cond = -1) with t <= N
std::optional<PairDZ> direct_successor(const PairDZ& base, int cond, int N, const FieldCtx& ctx);

struct LoewyNode {
    PairDZ pair;
    int dim = 0;
    std::string label;
};

struct LoewyDiagram {
    std::string title;
    std::string subcase;
    std::vector<LoewyNode> nodes;
    std::vector<std::pair<int, int>> arrows;
    std::vector<std::vector<int>> layers;  // head first
    int index(const PairDZ& p) const;
    int total_dim() const;
    std::string dot() const;
};

LoewyDiagram predict_cellular(int N, int d, const Scalar& z, const FieldCtx& ctx);
LoewyDiagram predict_chain(int N, int d, const Scalar& z, int sign, const FieldCtx& ctx);

struct MatrixAlgebra {
    int n = 0;                   // ambient matrix size
    std::vector<Matrix> basis;   // echelonized as vectors of length n*n
    int dim() const { return static_cast<int>(basis.size()); }
};

MatrixAlgebra image_algebra(const Representation& rep, const Budgets& b = Budgets::from_env());
// kernel of the trace form (a, b) -> tr(ab) on the algebra
std::vector<Matrix> radical(const MatrixAlgebra& alg);

struct Layer {
    int dim = 0;
    std::vector<std::string> factors;  // labels of the simple factors, when identified
    std::vector<int> factor_dims;
};

struct Filtration {
    std::vector<Layer> layers;
    bool complete = true;  // every layer exhausted by identified factors
    std::string note;
    std::vector<int> dims() const;
};

// X, JX, J^2 X, ... with J the radical of the image algebra; layer dims only
Filtration loewy_filtration(const Representation& rep, const Budgets& b = Budgets::from_env());

struct SimpleModule {
    PairDZ pair;
    std::string label;
    Representation rep;
};
// the head of W_{N;d,z}, the quotient by the radical of its Gram form
SimpleModule simple_module(int N, const PairDZ& p, const FieldCtx& ctx);

// radical series with each layer split by the dimensions of Hom(layer, S) over the candidates
Filtration loewy_filtration(const Representation& rep, const std::vector<SimpleModule>& candidates,
                            const Budgets& b = Budgets::from_env());

// basis of the module maps A -> B, each a dim B x dim A matrix
std::vector<Matrix> hom_space(const Representation& A, const Representation& B, const Budgets& b = Budgets::from_env());
int hom_dim(const Representation& A, const Representation& B, const Budgets& b = Budgets::from_env());

struct VerifyReport {
    int N = 0, d = 0, sign = 1;
    std::string z;
    std::string status;  // "pass", "fail" or "inconclusive"
    LoewyDiagram predicted;
    Filtration computed;
    std::vector<std::string> checks;
    std::optional<std::string> discrepancy;
    bool pass() const { return status == "pass"; }
};

VerifyReport verify_main(int N, int d, const Scalar& z, int sign, const FieldCtx& ctx,
                         const Budgets& b = Budgets::from_env());

struct ReciprocityReport {
    std::vector<std::vector<std::string>> plus, minus;  // sorted labels per layer
    bool reversed = false;
    bool star_dims_reversed = false;
};
// layers of X^+ and X^- against each other, and the layer dims of X^+ and its star dual
ReciprocityReport reciprocity_check(int N, int d, const Scalar& z, const FieldCtx& ctx,
                                    const Budgets& b = Budgets::from_env());

// dims of I_{N;2i,q^(1-i)}, i = 1..N/2, from the recurrence of the problematic cellular module
std::vector<long> problematic_dims(int N);

}  // namespace atl
