// Dihedral coset problem samples
//     psi_a^alpha = (|x^alpha> + |y x^{a-alpha}>)/sqrt(2)
// and the inner-product algebra between them.
#pragma once

#include "dhsp/group.hpp"
#include "dhsp/hsp.hpp"
#include "dhsp/state.hpp"

namespace dhsp {

enum class DcpEncoding { GroupBasis, TwoRegister };

// The hidden (slope, alpha) pair is carried for oracle-style assertions only;
// the state vector is authoritative and estimators never read the metadata.
struct DcpSample {
  int slope = 0;
  int alpha = 0;
  StateVector state;
  DcpEncoding encoding = DcpEncoding::GroupBasis;
};

DcpSample make_dcp_sample(int slope, int alpha, GroupOrder n);

// Reads a coset state of H_slope as a DCP sample. A representative y x^gamma
// and x^{a-gamma} span the same coset, so both branch cases yield the same
// state; only the alpha label changes. Throws std::invalid_argument unless the
// state has exactly two 1/sqrt(2) amplitudes in the H_slope coset pattern.
DcpSample hsp_to_dcp(const CosetState& cs, int slope, GroupOrder n);

// <psi_a^alpha | psi_b^beta> = (delta_{alpha,beta} + delta_{a-alpha,b-beta})/2,
// always one of 0, 1/2, 1.
double inner_product(const DcpSample& p, const DcpSample& q);

// |b>|j> reading of the same amplitudes: index b*n + j coincides with the
// group-basis index beta*n + alpha, so the data is unchanged.
DcpSample to_two_register(const DcpSample& sample);

}  // namespace dhsp
