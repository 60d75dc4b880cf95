// The standard hidden-subgroup pipeline for H_a = <y x^a> inside D_n:
// separating function, uniform superposition with the function value in a
// second register, coset-state measurement, Fourier sampling.
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "dhsp/group.hpp"
#include "dhsp/qft.hpp"
#include "dhsp/rng.hpp"
#include "dhsp/state.hpp"

namespace dhsp {

// f : D_n -> [0, n), constant on left H_a-cosets and distinct across them.
// The coset id is the rotation exponent of the coset's lexicographically
// minimal element, which is always the unique rotation member.
class SeparatingFunction {
 public:
  SeparatingFunction(int slope, GroupOrder n);

  int slope() const { return slope_; }
  GroupOrder order() const { return n_; }
  int operator()(const DihedralElement& g) const { return table_[index_of(g, n_)]; }
  const std::vector<int>& table() const { return table_; }

 private:
  int slope_;
  GroupOrder n_;
  std::vector<int> table_;
};

inline SeparatingFunction make_separating_function(int slope, GroupOrder n) {
  return SeparatingFunction(slope, n);
}

// (|c> + |c y x^a>)/sqrt(2): exactly two amplitudes of 1/sqrt(2).
struct CosetState {
  DihedralElement representative;
  StateVector state;
};

CosetState coset_state_for(int slope, const DihedralElement& rep, GroupOrder n);

// The composite state sqrt(1/|G|) sum_g |g>|f(g)> as a 2n x n amplitude array
// (rows: group register, columns: value register).
Eigen::MatrixXcd prepare_uniform_with_f(const SeparatingFunction& f);

// Measures the value register of the uniform composite state: a uniformly
// random coset id, with the post-measurement state formed directly from the
// known coset structure. Representative is the lexicographically minimal
// element of the coset.
CosetState measure_coset(const SeparatingFunction& f, SeededRng& rng);

// Exact Born probabilities of |rho,i,j> after Fourier sampling the coset state
// with representative c: P = (d / (|G| |H|)) |coset_sum(rho, a, c)_{ij}|^2.
OutcomeDistribution exact_fourier_distribution(int slope, const DihedralElement& c,
                                               GroupOrder n);

// Inverse-CDF draw from the exact table.
std::size_t sample_outcome_index(const OutcomeDistribution& dist, SeededRng& rng);
FourierIndex sample_outcome(const OutcomeDistribution& dist, SeededRng& rng);

}  // namespace dhsp
