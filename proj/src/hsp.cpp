#include "dhsp/hsp.hpp"

#include <cmath>
#include <stdexcept>

namespace dhsp {

SeparatingFunction::SeparatingFunction(int slope, GroupOrder n)
    : slope_(slope), n_(n), table_(n.elements()) {
  ReflectionSubgroup subgroup(slope, n);  // validates the slope
  for (int idx = 0; idx < n.elements(); ++idx) {
    const DihedralElement g = element_at(idx, n);
    const DihedralElement rep = left_coset(g, subgroup, n)[0];
    table_[idx] = rep.alpha;  // rep.beta == 0: every coset has one rotation
  }
}

CosetState coset_state_for(int slope, const DihedralElement& rep, GroupOrder n) {
  const ReflectionSubgroup subgroup(slope, n);
  CosetState cs;
  cs.representative = rep;
  cs.state.amplitudes = Eigen::VectorXcd::Zero(n.elements());
  cs.state.basis = Basis::Group;
  const double amp = 1.0 / std::sqrt(2.0);
  for (const DihedralElement& h : subgroup.elements())
    cs.state.amplitudes(index_of(multiply(rep, h, n), n)) = amp;
  return cs;
}

Eigen::MatrixXcd prepare_uniform_with_f(const SeparatingFunction& f) {
  const GroupOrder n = f.order();
  Eigen::MatrixXcd composite =
      Eigen::MatrixXcd::Zero(n.elements(), n.rotations());
  const double amp = 1.0 / std::sqrt(static_cast<double>(n.elements()));
  for (int idx = 0; idx < n.elements(); ++idx)
    composite(idx, f.table()[idx]) = amp;
  return composite;
}

CosetState measure_coset(const SeparatingFunction& f, SeededRng& rng) {
  // The value-register marginal is uniform over the n coset ids, and the coset
  // with id gamma is {x^gamma, y x^{a-gamma}} with minimal element x^gamma.
  const int coset_id = rng.uniform_int(f.order().rotations());
  return coset_state_for(f.slope(), DihedralElement{0, coset_id}, f.order());
}

OutcomeDistribution exact_fourier_distribution(int slope, const DihedralElement& c,
                                               GroupOrder n) {
  if (slope < 0 || slope >= n.rotations())
    throw std::invalid_argument("exact_fourier_distribution: slope outside [0, n)");
  OutcomeDistribution dist;
  dist.outcomes = fourier_index_list(n);
  dist.probabilities.reserve(dist.outcomes.size());
  const double group_size = n.elements();
  for (const IrrepLabel& label : irrep_list(n)) {
    const RepMatrix sum = coset_sum(label, slope, c, n);
    const double scale = label.dim() / (group_size * 2.0);
    for (int i = 0; i < label.dim(); ++i)
      for (int j = 0; j < label.dim(); ++j) {
        double p = scale * std::norm(sum(i, j));
        if (p < 0.0) p = 0.0;
        dist.probabilities.push_back(p < 1.0 ? p : 1.0);
      }
  }
  return dist;
}

std::size_t sample_outcome_index(const OutcomeDistribution& dist, SeededRng& rng) {
  if (dist.probabilities.empty())
    throw std::invalid_argument("sample_outcome: empty distribution");
  std::vector<double> cdf(dist.probabilities.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < dist.probabilities.size(); ++i) {
    acc += dist.probabilities[i];
    cdf[i] = acc;
  }
  return sample_from_cdf(cdf, rng.uniform01() * acc);
}

FourierIndex sample_outcome(const OutcomeDistribution& dist, SeededRng& rng) {
  return dist.outcomes[sample_outcome_index(dist, rng)];
}

}  // namespace dhsp
