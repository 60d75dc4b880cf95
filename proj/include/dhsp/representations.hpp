// The complete set of irreducible representations of D_n.
//
// For n even there are four 1-dimensional representations
//     phi_{u,v} : x -> (-1)^u,  y -> (-1)^v,     u, v in {0, 1};
// for n odd only the two with u = 0 survive. The 2-dimensional ones are
//     rho_k : x -> diag(w^k, w^-k),  y -> ((0,1),(1,0)),   0 < k < n/2,
// with w = exp(2 pi i / n). Together they satisfy sum d^2 = 2n.
#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dhsp/group.hpp"

namespace dhsp {

using Cplx = std::complex<double>;

// d x d complex matrix value of a representation, d in {1, 2}. One-dimensional
// values are kept as 1x1 matrices so callers can treat all blocks uniformly.
using RepMatrix = Eigen::MatrixXcd;

struct IrrepLabel {
  enum class Kind { OneDim, TwoDim };

  Kind kind = Kind::OneDim;
  int u = 0;  // OneDim: sign exponent on x
  int v = 0;  // OneDim: sign exponent on y
  int k = 0;  // TwoDim: rotation frequency, 0 < k < n/2

  static IrrepLabel one_dim(int u, int v) {
    IrrepLabel l;
    l.kind = Kind::OneDim;
    l.u = u;
    l.v = v;
    return l;
  }
  static IrrepLabel two_dim(int k) {
    IrrepLabel l;
    l.kind = Kind::TwoDim;
    l.k = k;
    return l;
  }

  int dim() const { return kind == Kind::OneDim ? 1 : 2; }
  std::string name() const;

  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
};

bool label_valid(const IrrepLabel& label, GroupOrder n);

// All irreducible representations of D_n in a fixed order: OneDim labels
// sorted by (u, v), then TwoDim labels by k ascending.
std::vector<IrrepLabel> irrep_list(GroupOrder n);

// exp(2 pi i e / n) with the exponent reduced mod n before any floating-point
// arithmetic, so large exponents lose no phase accuracy.
Cplx root_of_unity(int n, long long exponent);

// Value of the representation at g = y^beta x^alpha, from the generator images.
RepMatrix evaluate(const IrrepLabel& label, const DihedralElement& g, GroupOrder n);

// sum over h in H_slope of evaluate(label, c * h). Computed by direct
// summation; not unitary in general.
RepMatrix coset_sum(const IrrepLabel& label, int slope, const DihedralElement& c,
                    GroupOrder n);

struct SchurReport {
  double max_deviation = 0.0;
  bool pass = false;
  std::string worst;  // offending index tuple, e.g. "rho_1[0,1] x rho_2[1,0]"
};

// Verifies (d_rho / |G|) sum_g rho(g)_{ij} conj(rho'(g)_{i'j'}) = delta for all
// index pairs against the given tolerance.
SchurReport schur_check(GroupOrder n, double tolerance = 1e-12);

}  // namespace dhsp
