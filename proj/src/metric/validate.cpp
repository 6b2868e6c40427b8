#include "finsler/metric/validate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "finsler/geometry/linalg.hpp"
#include "finsler/geometry/sampling.hpp"

namespace finsler::metric {

ValidationReport validate_metric(const MetricSpec& spec, int count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("validation needs at least one sample");
  const int n = spec.dim();
  ValidationReport rep;
  rep.min_eigenvalue = std::numeric_limits<double>::infinity();
  auto note = [&](const std::string& msg) {
    if (rep.first_problem.empty()) rep.first_problem = msg;
  };

  geometry::Sampler sampler(std::shared_ptr<const MetricSpec>(&spec, [](const MetricSpec*) {}), seed, false);
  for (int s = 0; s < count; ++s) {
    const auto p = sampler.next();
    ++rep.samples;
    try {
      const auto vars = jets::seed_variables(p.x, p.y, 3);
      const jets::Jet L = spec.eval_L(vars).truncated(1);
      const jets::Jet L2 = spec.eval_L2(vars);
      const double l = L.value();
      if (!std::isfinite(l) || !(l > 0.0)) {
        ++rep.positivity_violations;
        note("L is not positive at a sample");
        continue;
      }
      double euler = 0.0;
      for (int k = 0; k < n; ++k) euler += p.y[k] * L[static_cast<std::size_t>(1 + n + k)];
      rep.homogeneity_max = std::max(rep.homogeneity_max, std::abs(euler - l) / (1.0 + std::abs(l)));

      std::vector<double> g(static_cast<std::size_t>(n * n));
      double gscale = 1.0, ghom = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const jets::Jet gij = 0.5 * L2.d2(n + i, n + j);
          g[i * n + j] = gij.value();
          gscale = std::max(gscale, std::abs(gij.value()));
          double e = 0.0;
          for (int k = 0; k < n; ++k) e += p.y[k] * gij[static_cast<std::size_t>(1 + n + k)];
          ghom = std::max(ghom, std::abs(e));
        }
      rep.g_homogeneity_max = std::max(rep.g_homogeneity_max, ghom / gscale);
      const double ev = geometry::linalg::symmetric_eigenvalues(g, n)[0];
      rep.min_eigenvalue = std::min(rep.min_eigenvalue, ev);
      if (!(ev > 0.0)) {
        ++rep.positivity_violations;
        note("metric tensor is not positive definite at a sample");
      }
    } catch (const jets::JetDomainError& e) {
      ++rep.positivity_violations;
      note(std::string("evaluation failed: ") + e.what());
    }
  }
  if (rep.homogeneity_max > kHomogeneityTol) note("L is not positively 1-homogeneous in y");
  if (rep.g_homogeneity_max > kHomogeneityTol) note("metric tensor is not 0-homogeneous in y");
  if (!std::isfinite(rep.min_eigenvalue)) rep.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
  rep.pass = rep.positivity_violations == 0 && rep.homogeneity_max <= kHomogeneityTol &&
             rep.g_homogeneity_max <= kHomogeneityTol;
  return rep;
}

}  // namespace finsler::metric
