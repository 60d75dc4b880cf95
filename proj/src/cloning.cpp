#include "dhsp/cloning.hpp"

#include <cmath>
#include <stdexcept>

namespace dhsp {

namespace {

constexpr double kAmpTol = 1e-12;

int mod(long long value, int n) {
  long long r = value % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

// Sample-register index arithmetic: s = b*n + j.
int branch_bit(int s, int n) { return s / n; }
int branch_pos(int s, int n) { return s % n; }

// V restricted to the sample register.
int v_permute(int s, int slope, int n) {
  if (branch_bit(s, n) == 0) return s;
  return n + mod(slope - static_cast<long long>(branch_pos(s, n)), n);
}

void prune(std::map<std::int64_t, Cplx>& amps) {
  for (auto it = amps.begin(); it != amps.end();)
    it = std::abs(it->second) < kAmpTol ? amps.erase(it) : std::next(it);
}

struct JointIndex {
  int a, s, sc, ac;
};

JointIndex split_joint(std::int64_t idx, int n) {
  const int two_n = 2 * n;
  JointIndex parts;
  parts.ac = static_cast<int>(idx % n);
  idx /= n;
  parts.sc = static_cast<int>(idx % two_n);
  idx /= two_n;
  parts.s = static_cast<int>(idx % two_n);
  parts.a = static_cast<int>(idx / two_n);
  return parts;
}

std::int64_t join_joint(const JointIndex& parts, int n) {
  const std::int64_t two_n = 2 * n;
  return ((static_cast<std::int64_t>(parts.a) * two_n + parts.s) * two_n + parts.sc) *
             n +
         parts.ac;
}

using IndexMap = JointIndex (*)(JointIndex, int, int);

void apply_permutation(std::map<std::int64_t, Cplx>& amps, int slope, int n,
                       IndexMap map) {
  std::map<std::int64_t, Cplx> out;
  for (const auto& [idx, value] : amps)
    out[join_joint(map(split_joint(idx, n), slope, n), n)] += value;
  amps = std::move(out);
}

// Hadamard on the b bit of one sample register (selected by `on_copy`).
void apply_u0(std::map<std::int64_t, Cplx>& amps, int n, bool on_copy) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::map<std::int64_t, Cplx> out;
  for (const auto& [idx, value] : amps) {
    JointIndex parts = split_joint(idx, n);
    int& reg = on_copy ? parts.sc : parts.s;
    const int b = branch_bit(reg, n);
    const int j = branch_pos(reg, n);
    const Cplx scaled = value * inv_sqrt2;
    reg = j;  // b' = 0
    out[join_joint(parts, n)] += scaled;
    reg = n + j;  // b' = 1
    out[join_joint(parts, n)] += (b == 0 ? scaled : -scaled);
  }
  prune(out);
  amps = std::move(out);
}

void apply_v(std::map<std::int64_t, Cplx>& amps, int slope, int n, bool on_copy) {
  apply_permutation(amps, slope, n,
                    on_copy
                        ? static_cast<IndexMap>(+[](JointIndex p, int a, int m) {
                            p.sc = v_permute(p.sc, a, m);
                            return p;
                          })
                        : static_cast<IndexMap>(+[](JointIndex p, int a, int m) {
                            p.s = v_permute(p.s, a, m);
                            return p;
                          }));
}

}  // namespace

Eigen::MatrixXcd build_v_matrix(int slope, GroupOrder n) {
  const ReflectionSubgroup check(slope, n);  // validates the slope
  const int m = n.rotations();
  const int dim = m * 2 * m;  // |slope> x |b> x |j>
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(dim, dim);
  for (int a = 0; a < m; ++a)
    for (int s = 0; s < 2 * m; ++s)
      v(a * 2 * m + v_permute(s, slope, m), a * 2 * m + s) = 1.0;
  return v;
}

Eigen::MatrixXcd sample_t_matrix(int slope, GroupOrder n) {
  const int m = n.rotations();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd u0 = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  for (int j = 0; j < m; ++j) {
    u0(j, j) = inv_sqrt2;
    u0(j, m + j) = inv_sqrt2;
    u0(m + j, j) = inv_sqrt2;
    u0(m + j, m + j) = -inv_sqrt2;
  }
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  for (int s = 0; s < 2 * m; ++s) v(v_permute(s, slope, m), s) = 1.0;
  return u0 * v;
}

Eigen::MatrixXcd build_t_matrix(int slope, GroupOrder n) {
  const int m = n.rotations();
  const Eigen::MatrixXcd t = sample_t_matrix(slope, n);
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(m * 2 * m, m * 2 * m);
  for (int a = 0; a < m; ++a)
    full.block(a * 2 * m, a * 2 * m, 2 * m, 2 * m) = t;
  return full;
}

Eigen::MatrixXcd basis_copy_matrix(int dim) {
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(dim * dim, dim * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      c(i * dim + (j + i) % dim, i * dim + j) = 1.0;
  return c;
}

Eigen::VectorXcd copy_basis_state(const Eigen::VectorXcd& state) {
  const int dim = static_cast<int>(state.size());
  // Image of state x |0> under the basis-copy permutation, applied directly
  // to the support instead of materializing the dim^2 x dim^2 matrix.
  Eigen::VectorXcd joint = Eigen::VectorXcd::Zero(dim * dim);
  for (int i = 0; i < dim; ++i) joint(i * dim + i) = state(i);
  return joint;
}

JointCloneState apply_clone_chain(int slope_param, const StateVector& sample_state,
                                  GroupOrder n) {
  const int m = n.rotations();
  if (sample_state.amplitudes.size() != 2 * m)
    throw std::invalid_argument("apply_clone_chain: sample dimension mismatch");

  JointCloneState joint;
  joint.n = m;
  // |a>|psi>|0>|0>
  for (int s = 0; s < 2 * m; ++s) {
    const Cplx value = sample_state.amplitudes(s);
    if (std::abs(value) < kAmpTol) continue;
    joint.amps[join_joint({slope_param, s, 0, 0}, m)] = value;
  }

  // T on (a, sample)
  apply_v(joint.amps, slope_param, m, false);
  apply_u0(joint.amps, m, false);
  // copy |a> into the a_copy blank and the decoded sample index into sc
  apply_permutation(joint.amps, slope_param, m, +[](JointIndex p, int, int m2) {
    p.ac = (p.ac + p.a) % m2;
    return p;
  });
  apply_permutation(joint.amps, slope_param, m, +[](JointIndex p, int, int m2) {
    p.sc = (p.sc + p.s) % (2 * m2);
    return p;
  });
  // T^-1 = V U0 on both register pairs
  apply_u0(joint.amps, m, false);
  apply_v(joint.amps, slope_param, m, false);
  apply_u0(joint.amps, m, true);
  apply_v(joint.amps, slope_param, m, true);
  return joint;
}

namespace {

// Decodes the sample's support into its alpha, throwing unless it matches the
// (alpha, slope - alpha) pattern. Works from the state only, never metadata.
int validated_alpha(int slope, const DcpSample& sample, int m) {
  constexpr double kTol = 1e-9;
  const double amp = 1.0 / std::sqrt(2.0);
  int rotation = -1, reflection = -1;
  for (int idx = 0; idx < 2 * m; ++idx) {
    const double mag = std::abs(sample.state.amplitudes(idx));
    if (mag <= kTol) continue;
    if (std::abs(mag - amp) > kTol)
      throw std::invalid_argument("clone_known_a: amplitude is not 1/sqrt(2)");
    int& slot = idx < m ? rotation : reflection;
    if (slot != -1)
      throw std::invalid_argument("clone_known_a: more than one amplitude per branch");
    slot = idx % m;
  }
  if (rotation < 0 || reflection < 0)
    throw std::invalid_argument("clone_known_a: not a two-amplitude DCP sample");
  if ((rotation + reflection) % m != mod(slope, m))
    throw std::invalid_argument("clone_known_a: support is not the pattern for this slope");
  return rotation;
}

}  // namespace

JointCloneState clone_known_a(int slope, const DcpSample& sample) {
  const int m = static_cast<int>(sample.state.amplitudes.size()) / 2;
  const GroupOrder n(m);
  if (slope < 0 || slope >= m)
    throw std::invalid_argument("clone_known_a: slope outside [0, n)");
  validated_alpha(slope, sample, m);
  return apply_clone_chain(slope, sample.state, n);
}

double clone_fidelity(const JointCloneState& joint, int slope, const DcpSample& sample) {
  const int m = joint.n;
  Cplx overlap = 0.0;
  for (const auto& [idx, value] : joint.amps) {
    const JointIndex parts = split_joint(idx, m);
    if (parts.a != slope || parts.ac != slope) continue;
    const Cplx target = std::conj(sample.state.amplitudes(parts.s)) *
                        std::conj(sample.state.amplitudes(parts.sc));
    overlap += target * value;
  }
  return std::norm(overlap);
}

std::vector<double> copy_register_marginal(const JointCloneState& joint) {
  std::vector<double> marginal(2 * joint.n, 0.0);
  for (const auto& [idx, value] : joint.amps)
    marginal[split_joint(idx, joint.n).sc] += std::norm(value);
  return marginal;
}

Eigen::MatrixXd pair_measurement_distribution(const JointCloneState& joint) {
  const int dim = 2 * joint.n;
  Eigen::MatrixXd born = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& [idx, value] : joint.amps) {
    const JointIndex parts = split_joint(idx, joint.n);
    born(parts.s, parts.sc) += std::norm(value);
  }
  return born;
}

std::pair<DihedralElement, DihedralElement> measure_clone_pair(
    const JointCloneState& joint, GroupOrder n, SeededRng& rng) {
  std::vector<double> cdf;
  std::vector<std::pair<int, int>> support;
  double acc = 0.0;
  for (const auto& [idx, value] : joint.amps) {
    const JointIndex parts = split_joint(idx, joint.n);
    acc += std::norm(value);
    cdf.push_back(acc);
    support.emplace_back(parts.s, parts.sc);
  }
  if (support.empty()) throw std::invalid_argument("measure_clone_pair: empty state");
  const std::size_t pick = sample_from_cdf(cdf, rng.uniform01() * acc);
  return {element_at(support[pick].first, n), element_at(support[pick].second, n)};
}

std::optional<int> recover_a_from_clone_pairs(
    const std::vector<std::pair<DihedralElement, DihedralElement>>& pairs,
    GroupOrder n) {
  for (const auto& [first, second] : pairs) {
    if (first.beta == second.beta) continue;
    return (first.alpha + second.alpha) % n.rotations();
  }
  return std::nullopt;
}

WitnessReport witness_for_pair(const DcpSample& p, const DcpSample& q) {
  WitnessReport report;
  report.a = p.slope;
  report.alpha = p.alpha;
  report.b = q.slope;
  report.beta = q.alpha;
  report.overlap = std::abs(inner(p.state, q.state));
  report.left = report.overlap;
  // The cloning equations would force left = overlap^2 <M_a|M_b> with the
  // ancilla overlap at most 1 in modulus.
  report.right_bound = report.overlap * report.overlap;
  report.contradiction = report.left > report.right_bound + 1e-12;
  return report;
}

WitnessReport no_cloning_witness(GroupOrder n) {
  if (n.rotations() < 3)
    throw std::invalid_argument("no_cloning_witness: requires n >= 3");
  // a - alpha = b - beta with a != b gives overlap exactly 1/2.
  const DcpSample p = make_dcp_sample(1, 0, n);
  const DcpSample q = make_dcp_sample(2, 1, n);
  return witness_for_pair(p, q);
}

RefuterReport unitary_cloner_refuter(const Eigen::MatrixXcd& candidate, GroupOrder n,
                                     int ancilla_dim, int trials, SeededRng& rng) {
  const int m = n.rotations();
  const int sample_dim = 2 * m;
  const std::int64_t joint_dim =
      static_cast<std::int64_t>(sample_dim) * sample_dim * ancilla_dim;
  if (ancilla_dim < 1)
    throw std::invalid_argument("unitary_cloner_refuter: ancilla_dim must be >= 1");
  if (candidate.rows() != joint_dim || candidate.cols() != joint_dim)
    throw std::invalid_argument("unitary_cloner_refuter: candidate dimension mismatch");

  RefuterReport report;
  report.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const int a = rng.uniform_int(m);
    const int alpha = rng.uniform_int(m);
    const DcpSample sample = make_dcp_sample(a, alpha, n);

    Eigen::VectorXcd input = Eigen::VectorXcd::Zero(joint_dim);
    for (int s = 0; s < sample_dim; ++s)
      input(static_cast<std::int64_t>(s) * sample_dim * ancilla_dim) =
          sample.state.amplitudes(s);
    const Eigen::VectorXcd output = candidate * input;

    // Squared norm of the projection onto psi x psi x (ancilla space).
    double fidelity = 0.0;
    for (int anc = 0; anc < ancilla_dim; ++anc) {
      Cplx component = 0.0;
      for (int s = 0; s < sample_dim; ++s) {
        const Cplx ps = sample.state.amplitudes(s);
        if (std::abs(ps) < kAmpTol) continue;
        for (int sc = 0; sc < sample_dim; ++sc) {
          const Cplx pc = sample.state.amplitudes(sc);
          if (std::abs(pc) < kAmpTol) continue;
          component += std::conj(ps * pc) *
                       output((static_cast<std::int64_t>(s) * sample_dim + sc) *
                                  ancilla_dim +
                              anc);
        }
      }
      fidelity += std::norm(component);
    }

    if (fidelity < report.min_fidelity) {
      report.min_fidelity = fidelity;
      report.worst_slope = a;
      report.worst_alpha = alpha;
    }
  }
  return report;
}

Eigen::MatrixXcd fixed_slope_cloner(int slope, GroupOrder n) {
  const int m = n.rotations();
  const int dim = 2 * m;
  const Eigen::MatrixXcd t = sample_t_matrix(slope, n);
  const Eigen::MatrixXcd t_inv = t.adjoint();
  const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(dim, dim);

  auto kron = [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j)
        out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
  };

  return kron(t_inv, t_inv) * basis_copy_matrix(dim) * kron(t, identity);
}

}  // namespace dhsp
