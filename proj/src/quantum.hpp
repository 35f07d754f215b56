#pragma once
// Lusztig's quantum group at q: modules given by divided powers, Weyl/simple/projective
// modules, tensor products through the coproduct, fusion checks, and the divided powers
// acting on the XXZ chain together with the aTL maps they induce between sectors.

#include <optional>
#include <string>
#include <vector>

#include "chain.hpp"
#include "linalg.hpp"

namespace atl {

struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct HypothesisNotMet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ConditionNotMet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LUqModule {
    std::string label;
    int dim = 0;
    Scalar q;                        // K acts as q^H
    std::vector<int> weight;         // H eigenvalue of each basis vector
    std::vector<std::string> names;  // "m3", "n0", "m0(x)m1", ...
    std::vector<SparseMat> E, F;     // E[n] = E^(n) for n = 0..bound

    int bound() const { return static_cast<int>(E.size()) - 1; }
    // zero beyond the stored bound
    SparseMat En(int n) const;
    SparseMat Fn(int n) const;
    SparseMat K(int power = 1) const;
    SparseMat H() const;
    int index(const std::string& name) const;  // -1 if absent
};

// i = r*ell + s with 0 <= s < ell; generic contexts give r = 0, s = i
struct RS {
    int r, s;
};
RS split_rs(int i, const FieldCtx& ctx);

LUqModule weyl(int i, const FieldCtx& ctx);
LUqModule simple(int i, const FieldCtx& ctx);
// T_q(i) when s < ell - 1, the Weyl module otherwise
LUqModule projective(int i, const FieldCtx& ctx);
LUqModule tensor(const LUqModule& a, const LUqModule& b);
LUqModule direct_sum(const std::vector<LUqModule>& parts);
// module over the quantum group at q^-1 given by the involution fixing the divided powers
LUqModule invert_q(const LUqModule& m);

// the coefficients of the projective realization, through limits of rational functions
Scalar gamma_coeff(int i, int p, int v, const FieldCtx& ctx);
Scalar omega_coeff(int i, int p, int v, const FieldCtx& ctx);

// failures of the module relations, empty when all hold
std::vector<std::string> check_luq_axioms(const LUqModule& m);

// basis of the module maps A -> B (each a dim B x dim A matrix)
std::vector<Matrix> luq_homs(const LUqModule& a, const LUqModule& b);
// a module map A -> B with proj * X = target, if one exists
std::optional<Matrix> luq_hom_with(const LUqModule& a, const LUqModule& b, const Matrix& proj, const Matrix& target);
// true if some random combination of the module maps A -> B is invertible
bool luq_isomorphic(const LUqModule& a, const LUqModule& b, uint64_t seed = 1);
// E-singular vectors (killed by every E^(n), n >= 1) of weight w
int highest_weight_dim(const LUqModule& m, int w);

struct ProjectiveReport {
    bool axioms = false, sub_is_weyl_j = false, quotient_is_weyl_i = false, non_split = false;
    int dim = 0;
    std::vector<std::string> failures;
    bool ok() const { return axioms && sub_is_weyl_j && quotient_is_weyl_i && non_split; }
};
ProjectiveReport check_projective(int i, const FieldCtx& ctx);

struct FusionReport {
    std::string product;     // "L(i)xL(1)" or "P(i)xL(1)"
    std::string prediction;  // "L(2)+L(0)" ...
    int dim = 0;
    bool weights_match = false, highest_weights_match = false, isomorphic = false, vectors_ok = true;
    std::vector<std::string> notes;
    bool ok() const { return weights_match && highest_weights_match && isomorphic && vectors_ok; }
};
// both fusion rules at i; the projective rule only when s < ell - 1
std::vector<FusionReport> fusion_check(int i, const FieldCtx& ctx);

// chain divided powers on the whole spin space; sign +1 uses q, -1 uses q^-1
enum class Gen { E, F };
SparseMat divided_power(int N, int n, Gen kind, int sign, const FieldCtx& ctx);
// the same restricted to sector d (into sector d + 2n for E, d - 2n for F); zero map if out of range
SparseMat divided_power_sector(int N, int n, Gen kind, int sign, int d, const FieldCtx& ctx);
// L_q(1)^{tensor N} through the iterated coproduct, as an LUq module (sign -1 uses q^-1)
LUqModule chain_luq(int N, int sign, const FieldCtx& ctx);

struct PairDZ {
    int d;
    Scalar z;
};

struct ModuleMap {
    std::string label;
    SparseMat M;  // target dim x source dim
    Representation source, target;
    bool condition_met = false;
    IntertwinerReport check;
};

enum class MapKind { I, J };
// i: X_{t,x} -> X_{d,z} by F^(a); j: X_{d,z} -> X_{t,x} by E^(a); small = (d,z), big = (t,x)
// throws ConditionNotMet unless allow_unflagged
ModuleMap intertwiner(MapKind kind, int sign, const PairDZ& small, const PairDZ& big, int N, const FieldCtx& ctx,
                      bool allow_unflagged = false);
// whether (d,z) |> (t,x) through condition A (a = 1) or B (a = -1), d of any sign
bool succeeds_via(int d, const Scalar& z, int t, const Scalar& x, int a, const FieldCtx& ctx);

struct KMMaps {
    ModuleMap k, m;  // k: X_{d+2n l, z q^{n l}} -> X_{d,z}, m the other way
    int n;
};
KMMaps km_maps(int n, int d, const Scalar& z, int N, const FieldCtx& ctx);
// f on the chain at q = +-1, sum over + sites of q^{j-1}
SparseMat sl2_f(int N, int d, const FieldCtx& ctx);

struct SequenceReport {
    std::string label;
    int rank_first = 0, nullity_second = 0;
    bool composite_zero = false, first_linear = false, second_linear = false;
    bool ok() const { return composite_zero && rank_first == nullity_second && first_linear && second_linear; }
};
// the first sequence: X^+_{D,Z} -> X^+_{t,x} -> X^+_{d,z}; which = 2 gives the second
// sequence X^-_{h,v} -> X^-_{t,x} -> X^-_{-d,z^-1}. Throws HypothesisNotMet.
SequenceReport exact_sequence_check(int which, int d, const Scalar& z, int t, const Scalar& x, int N,
                                    const FieldCtx& ctx);

}  // namespace atl
