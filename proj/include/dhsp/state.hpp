#pragma once

#include <complex>

#include <Eigen/Dense>

#include "dhsp/group.hpp"

namespace dhsp {

enum class Basis { Group, Fourier };

// Complex amplitude vector over either the group basis {|g>} or the Fourier
// basis {|rho,i,j>}, both of dimension 2n.
struct StateVector {
  Eigen::VectorXcd amplitudes;
  Basis basis = Basis::Group;
};

inline StateVector group_basis_state(int index, GroupOrder n) {
  StateVector s;
  s.amplitudes = Eigen::VectorXcd::Zero(n.elements());
  s.amplitudes(index) = 1.0;
  s.basis = Basis::Group;
  return s;
}

inline double state_norm(const StateVector& s) { return s.amplitudes.norm(); }

// <lhs|rhs>
inline std::complex<double> inner(const StateVector& lhs, const StateVector& rhs) {
  return lhs.amplitudes.dot(rhs.amplitudes);
}

}  // namespace dhsp
