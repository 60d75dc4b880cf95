// Row statistics of the transposed-and-Hadamarded Fourier blocks of a coset
// state, and maximum-likelihood recovery of the slope a from samples of them.
//
// The outcome space is the folded parameterization k in [0, n), b in {0, 1}
// with
//     P(k, 0) = cos^2(pi a k / n) / n,    P(k, 1) = sin^2(pi a k / n) / n,
// which is exactly normalized and maps onto the per-block row masses by
// identifying k with n-k (and k = 0, k = n/2 with the 1-dim labels).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dhsp/group.hpp"

namespace dhsp {

struct EhOutcome {
  int k = 0;  // in [0, n)
  int b = 0;  // 0 = first row, 1 = second row

  friend bool operator==(const EhOutcome&, const EhOutcome&) = default;
};

// Probability table over (k, b); flat layout p[2k + b].
struct EhDistribution {
  int n = 0;
  std::vector<double> p;

  double operator()(int k, int b) const { return p[2 * k + b]; }
};

// cos^2(pi a k / n) evaluated from the residue a k mod n folded into
// [0, n/2], so the value is bit-identical under a -> n-a and exactly zero
// when the angle is an odd multiple of pi/2.
double eh_cos_squared(int slope, int k, int n);

EhDistribution eh_distribution(int slope, GroupOrder n);

struct EhSampleSet {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<EhOutcome> outcomes;
};

// `count` i.i.d. draws from eh_distribution(slope, n); reproducible from
// (n, slope, seed, count).
EhSampleSet eh_sample(int slope, GroupOrder n, int count, std::uint64_t seed);

struct ConsistencyReport {
  double max_deviation = 0.0;
  bool pass = false;
  std::string worst;  // first index mapping that attained the max deviation
};

// Cross-checks the folded table against the exact Fourier pipeline: apply the
// QFT to a coset state, transpose each 2-dim block, apply a Hadamard to the
// row index, and compare row masses with P(k, b) + P(n-k, b); 1-dim masses
// must match the k = 0 (and k = n/2 for even n) entries.
ConsistencyReport consistency_check(int slope, GroupOrder n, double tolerance = 1e-10);

// Sum over samples of log P(k, b | candidate). Returns -infinity when the
// candidate assigns zero probability to an observed outcome.
double log_likelihood(int candidate, const EhSampleSet& samples);

struct SlopeEstimate {
  std::vector<int> candidates;  // exact argmax set, ascending
  double max_log_likelihood = 0.0;
  std::vector<double> scan;  // log-likelihood of every candidate in [0, n)
  bool degenerate = false;   // every candidate was excluded by a zero outcome
};

// Scans every candidate slope (linear in n, i.e. exponential in the input
// size log n) and returns the full argmax set. Ties are never broken: the
// statistics are invariant under a -> n-a, so the set is closed under that map.
SlopeEstimate recover_slope(const EhSampleSet& samples);

// Same scan with the per-candidate log-probability tables computed once, for
// bulk Monte Carlo runs. Immutable after construction; shareable across
// threads.
class SlopeScanner {
 public:
  explicit SlopeScanner(GroupOrder n);
  SlopeEstimate recover(const EhSampleSet& samples) const;

 private:
  int n_;
  std::vector<std::vector<double>> log_tables_;  // [candidate][2k + b]
};

}  // namespace dhsp
