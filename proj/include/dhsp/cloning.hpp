// Known-slope cloning of DCP samples and numerical no-cloning witnesses.
//
// Register conventions. A DCP sample lives in a 2n-dimensional register with
// index s = b*n + j read as |b>|j>, b in {0,1}:
//     psi_a^alpha = (|0>|alpha> + |1>|a-alpha>)/sqrt(2).
// The slope-controlled machinery acts on |slope(n)>|b>|j>:
//     V  : fixes the b = 0 branch, sends j -> a - j mod n on the b = 1 branch;
//     U0 : a Hadamard on b (identity on j);
//     T = (I x U0) V, so T |a>|psi_a^alpha> = |a>|0>|alpha>.
// Basis states are copied into a blank register by the permutation
// |i>|j> -> |i>|(j + i) mod D>, the modular-arithmetic form of a transversal
// CNOT.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dhsp/dcp.hpp"
#include "dhsp/group.hpp"
#include "dhsp/rng.hpp"
#include "dhsp/state.hpp"

namespace dhsp {

// V on |slope>|b>|j>, dimension 2n^2. The slope register is untouched; the
// branch map uses the build parameter. An involution.
Eigen::MatrixXcd build_v_matrix(int slope, GroupOrder n);

// T = (I x U0) V on |slope>|b>|j>, dimension 2n^2.
Eigen::MatrixXcd build_t_matrix(int slope, GroupOrder n);

// T restricted to the sample register alone (the slope register carries |a>
// throughout the cloning chain, so this is the active part). Dimension 2n.
Eigen::MatrixXcd sample_t_matrix(int slope, GroupOrder n);

// The basis-copy permutation |i>|j> -> |i>|(j + i) mod dim> on dim^2.
Eigen::MatrixXcd basis_copy_matrix(int dim);

// state (dim D) tensor blank |0> -> joint (dim D^2) under the basis-copy
// permutation. On a basis state |i>|0> this yields |i>|i>; on superpositions
// it yields sum_i s_i |i>|i>, which is not a product state.
Eigen::VectorXcd copy_basis_state(const Eigen::VectorXcd& state);

// Joint state over |a(n)> |sample(2n)> |copy(2n)> |a_copy(n)>, held sparsely;
// index = ((a*2n + s)*2n + sc)*n + ac.
struct JointCloneState {
  int n = 0;
  std::map<std::int64_t, Cplx> amps;
};

// Runs the known-slope cloning chain on an arbitrary sample-register state:
// T on (a, sample); copy a and the decoded index into the blanks; T^-1 on
// both pairs. No validation: callers may feed mismatched slopes to observe
// the mechanism fail.
JointCloneState apply_clone_chain(int slope_param, const StateVector& sample_state,
                                  GroupOrder n);

// Validates that the sample is supported on the (alpha, a-alpha) pattern for
// this slope (throws std::invalid_argument otherwise), then runs the chain.
// Output equals |a>|psi>|psi>|a> with fidelity 1 up to roundoff.
JointCloneState clone_known_a(int slope, const DcpSample& sample);

// |<a, psi, psi, a | joint>|^2.
double clone_fidelity(const JointCloneState& joint, int slope, const DcpSample& sample);

// Born marginal of the copy register (size 2n).
std::vector<double> copy_register_marginal(const JointCloneState& joint);

// Joint Born distribution over (sample, copy) basis outcomes, (2n) x (2n).
Eigen::MatrixXd pair_measurement_distribution(const JointCloneState& joint);

// Measures both registers of a cloned pair in the group basis.
std::pair<DihedralElement, DihedralElement> measure_clone_pair(
    const JointCloneState& joint, GroupOrder n, SeededRng& rng);

// Scans measured pairs for one with opposite reflection bits; the rotation
// exponents of such a pair sum to the slope. Empty optional if every pair has
// equal bits (probability 2^-pairs), which signals too few pairs, not error.
std::optional<int> recover_a_from_clone_pairs(
    const std::vector<std::pair<DihedralElement, DihedralElement>>& pairs,
    GroupOrder n);

// Two DCP samples with overlap 1/2 break the cloning equations: equality would
// force |<psi_a|psi_b>| <= |<psi_a|psi_b>|^2 max|<M_a|M_b>| <= 1/4 < 1/2.
struct WitnessReport {
  int a = 0, alpha = 0, b = 0, beta = 0;
  double overlap = 0.0;      // |<psi_a|psi_b>| from the state vectors
  double left = 0.0;         // = overlap
  double right_bound = 0.0;  // overlap^2 (ancilla overlap bounded by 1)
  bool contradiction = false;
};

WitnessReport witness_for_pair(const DcpSample& p, const DcpSample& q);

// The canonical instance a - alpha = b - beta with a != b (requires n >= 3).
WitnessReport no_cloning_witness(GroupOrder n);

// Applies a candidate cloner over sample x copy x ancilla to psi tensor
// |0>|0> for random (a, alpha) and reports the worst squared projection onto
// psi x psi x (ancilla space). Any unitary candidate stays bounded away from
// fidelity 1 on some sample.
struct RefuterReport {
  double min_fidelity = 1.0;
  int worst_slope = -1;
  int worst_alpha = -1;
  int trials = 0;
};

RefuterReport unitary_cloner_refuter(const Eigen::MatrixXcd& candidate, GroupOrder n,
                                     int ancilla_dim, int trials, SeededRng& rng);

// The full known-slope cloning machine hard-wired to one slope, as a dense
// unitary on sample x copy (dimension (2n)^2): (T^-1 x T^-1) Copy (T x I).
// Clones every psi_slope^alpha exactly; fails on other slopes. Usable as a
// refuter candidate with trivial ancilla.
Eigen::MatrixXcd fixed_slope_cloner(int slope, GroupOrder n);

}  // namespace dhsp
