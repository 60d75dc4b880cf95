#include "dhsp/ettinger_hoyer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dhsp/hsp.hpp"
#include "dhsp/qft.hpp"
#include "dhsp/rng.hpp"

namespace dhsp {

double eh_cos_squared(int slope, int k, int n) {
  long long r = (static_cast<long long>(slope) * k) % n;
  if (r < 0) r += n;
  const long long folded = std::min(r, n - r);
  if (2 * folded == n) return 0.0;
  const double c =
      std::cos(M_PI * static_cast<double>(folded) / static_cast<double>(n));
  return c * c;
}

EhDistribution eh_distribution(int slope, GroupOrder n) {
  if (slope < 0 || slope >= n.rotations())
    throw std::invalid_argument("eh_distribution: slope outside [0, n)");
  const int m = n.rotations();
  EhDistribution dist;
  dist.n = m;
  dist.p.resize(2 * m);
  for (int k = 0; k < m; ++k) {
    const double c2 = eh_cos_squared(slope, k, m);
    dist.p[2 * k + 0] = c2 / m;
    dist.p[2 * k + 1] = (1.0 - c2) / m;
  }
  return dist;
}

EhSampleSet eh_sample(int slope, GroupOrder n, int count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("eh_sample: count must be >= 1");
  const EhDistribution dist = eh_distribution(slope, n);
  std::vector<double> cdf(dist.p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < dist.p.size(); ++i) {
    acc += dist.p[i];
    cdf[i] = acc;
  }

  EhSampleSet set;
  set.n = n.rotations();
  set.seed = seed;
  set.outcomes.reserve(count);
  SeededRng rng(seed);
  for (int i = 0; i < count; ++i) {
    const std::size_t idx = sample_from_cdf(cdf, rng.uniform01() * acc);
    set.outcomes.push_back({static_cast<int>(idx / 2), static_cast<int>(idx % 2)});
  }
  return set;
}

ConsistencyReport consistency_check(int slope, GroupOrder n, double tolerance) {
  const int m = n.rotations();
  const EhDistribution folded = eh_distribution(slope, n);
  const QftMatrix& f = cached_qft(n);
  const CosetState cs = coset_state_for(slope, identity_element(), n);
  const StateVector fourier = apply_qft(f, cs.state);

  ConsistencyReport report;
  auto record = [&](double pipeline, double target, const std::string& where) {
    const double dev = std::abs(pipeline - target);
    if (dev > report.max_deviation) {
      report.max_deviation = dev;
      report.worst = where;
    }
  };

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (const IrrepLabel& label : irrep_list(n)) {
    const int offset = f.block_offset(label);
    if (label.dim() == 1) {
      // phi_{0,v} pairs with (k = 0, b = v); phi_{1,v} with (k = n/2, b = v).
      const int k = label.u == 0 ? 0 : m / 2;
      const double mass = std::norm(fourier.amplitudes(offset));
      record(mass, folded(k, label.v), label.name());
      continue;
    }
    // Transpose the 2-dim block, then a Hadamard on the row index.
    Eigen::Matrix2cd block;
    block << fourier.amplitudes(offset + 0), fourier.amplitudes(offset + 1),
        fourier.amplitudes(offset + 2), fourier.amplitudes(offset + 3);
    Eigen::Matrix2cd hadamarded;
    hadamarded.row(0) = inv_sqrt2 * (block.transpose().row(0) + block.transpose().row(1));
    hadamarded.row(1) = inv_sqrt2 * (block.transpose().row(0) - block.transpose().row(1));
    for (int b = 0; b < 2; ++b) {
      const double row_mass =
          std::norm(hadamarded(b, 0)) + std::norm(hadamarded(b, 1));
      const double target = folded(label.k, b) + folded(m - label.k, b);
      record(row_mass, target,
             label.name() + " row " + std::to_string(b));
    }
  }
  report.pass = report.max_deviation < tolerance;
  return report;
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Per-candidate log-probability table over the flat (k, b) layout.
std::vector<double> log_prob_table(int candidate, int n) {
  std::vector<double> logp(2 * n);
  for (int k = 0; k < n; ++k) {
    const double c2 = eh_cos_squared(candidate, k, n);
    logp[2 * k + 0] = c2 == 0.0 ? kNegInf : std::log(c2 / n);
    logp[2 * k + 1] = c2 == 1.0 ? kNegInf : std::log((1.0 - c2) / n);
  }
  return logp;
}

std::vector<long long> outcome_counts(const EhSampleSet& samples) {
  std::vector<long long> counts(2 * samples.n, 0);
  for (const EhOutcome& o : samples.outcomes) {
    if (o.k < 0 || o.k >= samples.n || (o.b != 0 && o.b != 1))
      throw std::invalid_argument("log_likelihood: outcome outside the (k, b) range");
    ++counts[2 * o.k + o.b];
  }
  return counts;
}

double log_likelihood_from_counts(const std::vector<double>& logp,
                                  const std::vector<long long>& counts) {
  double sum = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    if (logp[i] == kNegInf) return kNegInf;
    sum += static_cast<double>(counts[i]) * logp[i];
  }
  return sum;
}

}  // namespace

double log_likelihood(int candidate, const EhSampleSet& samples) {
  if (samples.outcomes.empty())
    throw std::invalid_argument("log_likelihood: empty sample set");
  return log_likelihood_from_counts(log_prob_table(candidate, samples.n),
                                    outcome_counts(samples));
}

namespace {

SlopeEstimate argmax_from_scan(std::vector<double> scan) {
  const int n = static_cast<int>(scan.size());
  SlopeEstimate estimate;
  estimate.scan = std::move(scan);

  double best = kNegInf;
  for (double value : estimate.scan)
    if (value > best) best = value;

  if (best == kNegInf) {
    // Every candidate assigns zero probability to some observed outcome; the
    // estimate degenerates to the full candidate range.
    estimate.degenerate = true;
    estimate.max_log_likelihood = kNegInf;
    estimate.candidates.resize(n);
    for (int a = 0; a < n; ++a) estimate.candidates[a] = a;
    return estimate;
  }

  estimate.max_log_likelihood = best;
  for (int a = 0; a < n; ++a)
    if (estimate.scan[a] == best) estimate.candidates.push_back(a);
  return estimate;
}

}  // namespace

SlopeEstimate recover_slope(const EhSampleSet& samples) {
  if (samples.outcomes.empty())
    throw std::invalid_argument("recover_slope: empty sample set");
  const int n = samples.n;
  const std::vector<long long> counts = outcome_counts(samples);

  std::vector<double> scan(n);
  for (int a = 0; a < n; ++a)
    scan[a] = log_likelihood_from_counts(log_prob_table(a, n), counts);
  return argmax_from_scan(std::move(scan));
}

SlopeScanner::SlopeScanner(GroupOrder n) : n_(n.rotations()) {
  log_tables_.reserve(n_);
  for (int a = 0; a < n_; ++a) log_tables_.push_back(log_prob_table(a, n_));
}

SlopeEstimate SlopeScanner::recover(const EhSampleSet& samples) const {
  if (samples.outcomes.empty())
    throw std::invalid_argument("recover: empty sample set");
  if (samples.n != n_)
    throw std::invalid_argument("recover: sample set built for a different n");
  const std::vector<long long> counts = outcome_counts(samples);

  std::vector<double> scan(n_);
  for (int a = 0; a < n_; ++a)
    scan[a] = log_likelihood_from_counts(log_tables_[a], counts);
  return argmax_from_scan(std::move(scan));
}

}  // namespace dhsp
