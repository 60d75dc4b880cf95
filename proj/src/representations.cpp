#include "dhsp/representations.hpp"

#include <cmath>

namespace dhsp {

std::string IrrepLabel::name() const {
  if (kind == Kind::OneDim)
    return "phi_" + std::to_string(u) + "_" + std::to_string(v);
  return "rho_" + std::to_string(k);
}

bool label_valid(const IrrepLabel& label, GroupOrder n) {
  if (label.kind == IrrepLabel::Kind::OneDim) {
    if (label.u != 0 && label.u != 1) return false;
    if (label.v != 0 && label.v != 1) return false;
    if (n.rotations() % 2 != 0 && label.u != 0) return false;
    return true;
  }
  return label.k > 0 && 2 * label.k < n.rotations();
}

std::vector<IrrepLabel> irrep_list(GroupOrder n) {
  std::vector<IrrepLabel> labels;
  const bool even = n.rotations() % 2 == 0;
  for (int u = 0; u <= (even ? 1 : 0); ++u)
    for (int v = 0; v <= 1; ++v) labels.push_back(IrrepLabel::one_dim(u, v));
  for (int k = 1; 2 * k < n.rotations(); ++k) labels.push_back(IrrepLabel::two_dim(k));
  return labels;
}

Cplx root_of_unity(int n, long long exponent) {
  long long r = exponent % n;
  if (r < 0) r += n;
  const double angle = 2.0 * M_PI * static_cast<double>(r) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

RepMatrix evaluate(const IrrepLabel& label, const DihedralElement& g, GroupOrder n) {
  if (label.kind == IrrepLabel::Kind::OneDim) {
    RepMatrix m(1, 1);
    const int sign_exp = label.u * g.alpha + label.v * g.beta;
    m(0, 0) = (sign_exp % 2 == 0) ? 1.0 : -1.0;
    return m;
  }
  // rho_k(y^beta x^alpha) = rho_k(y)^beta * diag(w^{k alpha}, w^{-k alpha})
  const long long e = static_cast<long long>(label.k) * g.alpha;
  const Cplx w = root_of_unity(n.rotations(), e);
  const Cplx winv = root_of_unity(n.rotations(), -e);
  RepMatrix m = RepMatrix::Zero(2, 2);
  if (g.beta == 0) {
    m(0, 0) = w;
    m(1, 1) = winv;
  } else {
    m(0, 1) = winv;
    m(1, 0) = w;
  }
  return m;
}

RepMatrix coset_sum(const IrrepLabel& label, int slope, const DihedralElement& c,
                    GroupOrder n) {
  const ReflectionSubgroup subgroup(slope, n);
  RepMatrix sum = RepMatrix::Zero(label.dim(), label.dim());
  for (const DihedralElement& h : subgroup.elements())
    sum += evaluate(label, multiply(c, h, n), n);
  return sum;
}

SchurReport schur_check(GroupOrder n, double tolerance) {
  const std::vector<IrrepLabel> labels = irrep_list(n);
  const int order = n.elements();

  // Representation values for every (label, element) pair, evaluated once.
  std::vector<std::vector<RepMatrix>> table(labels.size());
  for (std::size_t l = 0; l < labels.size(); ++l) {
    table[l].reserve(order);
    for (int idx = 0; idx < order; ++idx)
      table[l].push_back(evaluate(labels[l], element_at(idx, n), n));
  }

  SchurReport report;
  report.pass = true;
  for (std::size_t l = 0; l < labels.size(); ++l) {
    const int d = labels[l].dim();
    for (std::size_t lp = 0; lp < labels.size(); ++lp) {
      const int dp = labels[lp].dim();
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          for (int ip = 0; ip < dp; ++ip)
            for (int jp = 0; jp < dp; ++jp) {
              Cplx sum = 0.0;
              for (int idx = 0; idx < order; ++idx)
                sum += table[l][idx](i, j) * std::conj(table[lp][idx](ip, jp));
              sum *= static_cast<double>(d) / order;
              const double expected =
                  (l == lp && i == ip && j == jp) ? 1.0 : 0.0;
              const double dev = std::abs(sum - expected);
              if (dev > report.max_deviation) {
                report.max_deviation = dev;
                report.worst = labels[l].name() + "[" + std::to_string(i) + "," +
                               std::to_string(j) + "] x " + labels[lp].name() + "[" +
                               std::to_string(ip) + "," + std::to_string(jp) + "]";
              }
            }
    }
  }
  report.pass = report.max_deviation < tolerance;
  return report;
}

}  // namespace dhsp
