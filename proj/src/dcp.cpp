#include "dhsp/dcp.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace dhsp {

DcpSample make_dcp_sample(int slope, int alpha, GroupOrder n) {
  if (slope < 0 || slope >= n.rotations())
    throw std::invalid_argument("make_dcp_sample: slope outside [0, n)");
  if (alpha < 0 || alpha >= n.rotations())
    throw std::invalid_argument("make_dcp_sample: alpha outside [0, n)");
  DcpSample sample;
  sample.slope = slope;
  sample.alpha = alpha;
  sample.state.amplitudes = Eigen::VectorXcd::Zero(n.elements());
  sample.state.basis = Basis::Group;
  const double amp = 1.0 / std::sqrt(2.0);
  sample.state.amplitudes(index_of(DihedralElement{0, alpha}, n)) = amp;
  sample.state.amplitudes(
      index_of(make_element(1, slope - static_cast<long long>(alpha), n), n)) = amp;
  return sample;
}

DcpSample hsp_to_dcp(const CosetState& cs, int slope, GroupOrder n) {
  if (slope < 0 || slope >= n.rotations())
    throw std::invalid_argument("hsp_to_dcp: slope outside [0, n)");
  if (cs.state.amplitudes.size() != n.elements())
    throw std::invalid_argument("hsp_to_dcp: state dimension mismatch");

  constexpr double kTol = 1e-9;
  const double amp = 1.0 / std::sqrt(2.0);
  int rotation_alpha = -1;
  int reflection_alpha = -1;
  for (int idx = 0; idx < n.elements(); ++idx) {
    const double mag = std::abs(cs.state.amplitudes(idx));
    if (mag <= kTol) continue;
    if (std::abs(mag - amp) > kTol)
      throw std::invalid_argument("hsp_to_dcp: amplitude is not 1/sqrt(2)");
    const DihedralElement g = element_at(idx, n);
    int& which = g.beta == 0 ? rotation_alpha : reflection_alpha;
    if (which != -1)
      throw std::invalid_argument("hsp_to_dcp: more than one amplitude per branch");
    which = g.alpha;
  }
  if (rotation_alpha < 0 || reflection_alpha < 0)
    throw std::invalid_argument("hsp_to_dcp: state is not a two-amplitude coset state");
  if ((rotation_alpha + reflection_alpha) % n.rotations() !=
      slope % n.rotations())
    throw std::invalid_argument("hsp_to_dcp: support does not match H_slope");

  DcpSample sample;
  sample.slope = slope;
  sample.alpha = rotation_alpha;
  sample.state = cs.state;
  return sample;
}

double inner_product(const DcpSample& p, const DcpSample& q) {
  if (p.state.amplitudes.size() != q.state.amplitudes.size())
    throw std::invalid_argument("inner_product: samples have different n");
  const int n = static_cast<int>(p.state.amplitudes.size()) / 2;
  double value = 0.0;
  if (p.alpha == q.alpha) value += 0.5;
  if (((p.slope - p.alpha) % n + n) % n == ((q.slope - q.alpha) % n + n) % n)
    value += 0.5;
#ifndef NDEBUG
  // The delta formula must agree with the direct complex dot product.
  assert(std::abs(inner(p.state, q.state) - Cplx(value, 0.0)) < 1e-12);
#endif
  return value;
}

DcpSample to_two_register(const DcpSample& sample) {
  DcpSample out = sample;
  out.encoding = DcpEncoding::TwoRegister;
  return out;
}

}  // namespace dhsp
