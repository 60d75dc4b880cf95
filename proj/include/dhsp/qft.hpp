// The quantum Fourier transform over D_n as an explicit 2n x 2n unitary
//     F = sum_g sum_rho sum_{i,j} sqrt(d_rho / |G|) rho(g)_{ij} |rho,i,j><g|,
// with deterministic Fourier-row ordering: one-dimensional labels first in
// (u, v) order, then each two-dimensional block row-major by k.
#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "dhsp/group.hpp"
#include "dhsp/representations.hpp"
#include "dhsp/state.hpp"

namespace dhsp {

// Matrix-coefficient label |rho, row, col| of one Fourier-basis vector.
// Rows and columns are 0-based; there are exactly 2n such indices.
struct FourierIndex {
  IrrepLabel label;
  int row = 0;
  int col = 0;

  friend bool operator==(const FourierIndex&, const FourierIndex&) = default;
};

std::vector<FourierIndex> fourier_index_list(GroupOrder n);

class QftMatrix {
 public:
  explicit QftMatrix(GroupOrder n);

  GroupOrder order() const { return n_; }
  const Eigen::MatrixXcd& matrix() const { return f_; }
  const std::vector<FourierIndex>& row_index() const { return rows_; }

  // Row of (label, 0, 0); the block occupies dim^2 consecutive rows.
  int block_offset(const IrrepLabel& label) const;

 private:
  GroupOrder n_;
  Eigen::MatrixXcd f_;
  std::vector<FourierIndex> rows_;
};

QftMatrix build_qft(GroupOrder n);

// Shared per-n instance; construction is internally synchronized.
const QftMatrix& cached_qft(GroupOrder n);

// Matrix-vector product taking a group-basis state to the Fourier basis.
// Throws std::invalid_argument if the input is already in the Fourier basis.
StateVector apply_qft(const QftMatrix& f, const StateVector& s);

// Exact probability table over measurement outcomes plus optional empirical
// tallies accumulated by samplers.
struct OutcomeDistribution {
  std::vector<FourierIndex> outcomes;
  std::vector<double> probabilities;
  std::vector<std::uint64_t> counts;  // empty unless a sampler filled it
};

double total_probability(const OutcomeDistribution& dist);

// Total-variation distance between the exact table and empirical frequencies.
double empirical_tv_distance(const OutcomeDistribution& dist);

// Outcome distribution of Fourier sampling a coset state of H_slope with
// representative c, after changing every 2-dim block to the real basis via
//     B = (1/sqrt 2) ((1, 1), (i, -i)),
// which sends rho_k(x) to the planar rotation by 2 pi k / n and rho_k(y) to
// diag(1, -1). Unlike the complex basis, the result depends on the slope, but
// every 2-dim outcome probability stays <= 4/n.
OutcomeDistribution real_basis_distribution(GroupOrder n, int slope,
                                            const DihedralElement& c);

}  // namespace dhsp
