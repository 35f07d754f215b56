#pragma once
// A finite-dimensional representation of the affine Temperley-Lieb algebra given by
// the images of e_1..e_N, Omega and Omega^-1, and checks on maps between two of them.

#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "relations.hpp"

namespace atl {

struct Representation {
    std::string label;
    int N = 0;
    int dim = 0;
    Scalar beta;
    std::vector<SparseMat> e;  // e[i-1] is e_i
    SparseMat omega, omega_inv;

    const SparseMat& gen_e(int i) const { return e[((i - 1) % N + N) % N]; }
    SparseMat omega_pow(int k) const;
    // e_1, ..., e_N, Omega, Omega^-1 with their names
    std::vector<std::pair<std::string, const SparseMat*>> generators() const;
};

struct RepAlgebra {
    using Elem = SparseMat;
    const Representation& rep;
    Elem e(int i) const { return rep.gen_e(i); }
    Elem omega(int power) const { return rep.omega_pow(power); }
    Elem id() const { return SparseMat::identity(rep.dim); }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem times_beta(const Elem& a) const { return rep.beta * a; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
};

inline std::vector<std::string> check_relations(const Representation& r) {
    RepAlgebra alg{r};
    return check_genrel(r.N, alg);
}

struct IntertwinerReport {
    bool ok = true;
    std::optional<std::string> failing_generator;
};

// M : A -> B (dim B rows, dim A columns); checks M g_A = g_B M for every generator
IntertwinerReport verify_intertwiner(const Matrix& M, const Representation& A, const Representation& B);
IntertwinerReport verify_intertwiner(const SparseMat& M, const Representation& A, const Representation& B);

// the matrix of a word in the generators; letters: i >= 1 for e_i, 0 for Omega, -1 for Omega^-1
SparseMat word_matrix(const Representation& r, const std::vector<int>& word);

// the representation restricted to an invariant subspace, in the echelon basis of sub
Representation restrict_to(const Representation& r, const Subspace& sub);
// the representation on an invariant subquotient, in the basis of its lifts
Representation subquotient_rep(const Representation& r, const Subquotient& sq);
// a rep with generators g -> transpose(dagger g): e_i -> e_i^T, Omega -> (Omega^-1)^T
Representation star_dual(const Representation& r);
// twist by the flip automorphism e_i -> e_{N-i}, Omega^{+-1} -> Omega^{-+1}
Representation circ_dual(const Representation& r);

}  // namespace atl
