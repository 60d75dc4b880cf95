#include "dhsp/qft.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace dhsp {

std::vector<FourierIndex> fourier_index_list(GroupOrder n) {
  std::vector<FourierIndex> indices;
  indices.reserve(n.elements());
  for (const IrrepLabel& label : irrep_list(n)) {
    const int d = label.dim();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) indices.push_back({label, i, j});
  }
  return indices;
}

QftMatrix::QftMatrix(GroupOrder n) : n_(n), rows_(fourier_index_list(n)) {
  const int dim = n.elements();
  f_.resize(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const FourierIndex& fi = rows_[r];
    const double scale = std::sqrt(static_cast<double>(fi.label.dim()) / dim);
    for (int c = 0; c < dim; ++c) {
      const RepMatrix value = evaluate(fi.label, element_at(c, n), n);
      f_(r, c) = scale * value(fi.row, fi.col);
    }
  }
}

int QftMatrix::block_offset(const IrrepLabel& label) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (rows_[r].label == label) return static_cast<int>(r);
  throw std::invalid_argument("block_offset: label not present for this n");
}

QftMatrix build_qft(GroupOrder n) { return QftMatrix(n); }

const QftMatrix& cached_qft(GroupOrder n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<QftMatrix>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n.rotations());
  if (it == cache.end())
    it = cache.emplace(n.rotations(), std::make_unique<QftMatrix>(n)).first;
  return *it->second;
}

StateVector apply_qft(const QftMatrix& f, const StateVector& s) {
  if (s.basis != Basis::Group)
    throw std::invalid_argument("apply_qft: state is already in the Fourier basis");
  if (s.amplitudes.size() != f.matrix().cols())
    throw std::invalid_argument("apply_qft: dimension mismatch");
  StateVector out;
  out.amplitudes = f.matrix() * s.amplitudes;
  out.basis = Basis::Fourier;
  return out;
}

double total_probability(const OutcomeDistribution& dist) {
  double sum = 0.0;
  for (double p : dist.probabilities) sum += p;
  return sum;
}

double empirical_tv_distance(const OutcomeDistribution& dist) {
  if (dist.counts.empty()) return 0.0;
  std::uint64_t total = 0;
  for (std::uint64_t c : dist.counts) total += c;
  if (total == 0) return 0.0;
  double tv = 0.0;
  for (std::size_t i = 0; i < dist.probabilities.size(); ++i) {
    const double freq = static_cast<double>(dist.counts[i]) / static_cast<double>(total);
    tv += std::abs(freq - dist.probabilities[i]);
  }
  return 0.5 * tv;
}

namespace {

// Negative-zero artifacts from |.|^2 arithmetic are clamped away so inverse-CDF
// sampling sees a valid table.
double clamp_probability(double p) {
  if (p < 0.0) {
    if (p < -1e-14) throw std::logic_error("probability below clamp tolerance");
    return 0.0;
  }
  return p < 1.0 ? p : 1.0;
}

Eigen::Matrix2cd real_basis_change() {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd b;
  b << Cplx(s, 0), Cplx(s, 0), Cplx(0, s), Cplx(0, -s);
  return b;
}

}  // namespace

OutcomeDistribution real_basis_distribution(GroupOrder n, int slope,
                                            const DihedralElement& c) {
  if (slope < 0 || slope >= n.rotations())
    throw std::invalid_argument("real_basis_distribution: slope outside [0, n)");
  const Eigen::Matrix2cd b = real_basis_change();
  const Eigen::Matrix2cd b_adj = b.adjoint();

  OutcomeDistribution dist;
  dist.outcomes = fourier_index_list(n);
  dist.probabilities.reserve(dist.outcomes.size());
  // Amplitude of |rho,i,j> is sqrt(d / (|G| |H|)) (B S B^dagger)_{ij} with
  // S the coset sum; |H| = 2.
  const double group_size = n.elements();
  for (const IrrepLabel& label : irrep_list(n)) {
    RepMatrix block = coset_sum(label, slope, c, n);
    if (label.dim() == 2) block = b * block * b_adj;
    const double scale = label.dim() / (group_size * 2.0);
    for (int i = 0; i < label.dim(); ++i)
      for (int j = 0; j < label.dim(); ++j)
        dist.probabilities.push_back(clamp_probability(scale * std::norm(block(i, j))));
  }
  return dist;
}

}  // namespace dhsp
