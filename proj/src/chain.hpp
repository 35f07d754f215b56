#pragma once
// The periodic XXZ chain representations X^+-_{N;z} on (C^2)^{tensor N}, their S^z sectors,
// the Hamiltonian, spin flip, reversal and the map from cellular modules into the chain.

#include <cstdint>
#include <functional>
#include <optional>

#include "cellular.hpp"
#include "rep.hpp"

namespace atl {

// Spin states are bit masks: site k (1-based) is '-' when bit N-k is set, so increasing
// masks list the words in lexicographic order with + < -.
using State = uint32_t;

inline int spin(State s, int N, int k) { return (s >> (N - k)) & 1u ? -1 : 1; }
inline State flip_site(State s, int N, int k) { return s ^ (1u << (N - k)); }
std::string state_str(State s, int N);
State parse_state(const std::string& word);  // "+-+" style

// states of the sector sum x_j = d, in lexicographic order; all 2^N states when d is empty
std::vector<State> sector_states(int N, std::optional<int> d);
bool valid_sector(int N, int d);

// a linear operator given by its action on basis states
using StateOp = std::function<void(State, std::vector<std::pair<State, Scalar>>&)>;

// matrix of op from the states `from` to the states `to`; images outside `to` must vanish
SparseMat op_matrix(const StateOp& op, const std::vector<State>& from, const std::vector<State>& to);

struct ChainGens {
    int N;
    int sign;  // +1 or -1
    Scalar z;
    const FieldCtx* ctx;
    void e(int i, State s, std::vector<std::pair<State, Scalar>>& out) const;
    void omega(State s, std::vector<std::pair<State, Scalar>>& out) const;
    void omega_inv(State s, std::vector<std::pair<State, Scalar>>& out) const;
};

// X^sign_{N;d,z}, or the whole chain when d is empty
Representation build_chain(int N, const Scalar& z, int sign, std::optional<int> d, const FieldCtx& ctx);

// sum of the e_i^+; throws std::logic_error if it differs from the sum of the e_i^-
SparseMat hamiltonian(int N, const Scalar& z, std::optional<int> d, const FieldCtx& ctx);

// s : sector d -> sector -d
SparseMat spin_flip(int N, std::optional<int> d);
// rho |x_1..x_N> = |x_N..x_1>, within a sector
SparseMat reversal(int N, std::optional<int> d);

// i_{N;d,z} : W_{N;d,z} -> X^+_{N;d,z}
SparseMat mdsa_map(int N, int d, const Scalar& z, const FieldCtx& ctx);

// the direct successor of (d,z) through condition A with t <= N, if any
std::optional<std::pair<int, Scalar>> direct_A_successor(int N, int d, const Scalar& z, const FieldCtx& ctx);
std::optional<std::pair<int, Scalar>> direct_B_successor(int N, int d, const Scalar& z, const FieldCtx& ctx);

}  // namespace atl
