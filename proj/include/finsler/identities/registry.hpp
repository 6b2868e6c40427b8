#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "finsler/geometry/chart_point.hpp"
#include "finsler/identities/context.hpp"

namespace finsler::identities {

inline constexpr double kDefaultTolerance = 1e-7;

/// Metric regimes an identity may be restricted to.
enum class Guard { None, Riemannian, LocallyMinkowski, Sphere, BerwaldRegime };

const char* name(Guard g);
bool guard_holds(Guard g, const metric::MetricTraits& t);

struct IdentityDescriptor {
  std::string id;
  std::string group;      // group label, e.g. "Cartan v-curvature"
  std::string statement;  // the identity in the catalog's notation
  std::vector<ConnectionKind> connections;
  std::string residual_shape;  // "(1,2)", "(0,4)", "scalar", ...
  Guard guard = Guard::None;
  int min_order = 4;  // smallest jet order at which it can be evaluated
  bool gating = true;  // false: diagnostic variant, never affects exit status
  double tolerance = 0.0;  // 0: use the run tolerance
};

/// Max-abs residual over the basis sweep; the Eval carries the scale.
using ResidualFn = std::function<double(Eval&)>;

struct Identity {
  IdentityDescriptor d;
  ResidualFn residual;
};

/// All identities, sorted by id.
const std::vector<Identity>& registry();
std::vector<IdentityDescriptor> catalog();
const Identity* find_identity(const std::string& id);

enum class Verdict { Pass, Fail, Skipped, Error };
const char* name(Verdict v);

struct IdentityReport {
  std::string id;
  int point_index = 0;
  geometry::ChartPoint point;
  double residual = 0.0;
  double scale = 1.0;
  double relative = 0.0;
  double tolerance = kDefaultTolerance;
  Verdict verdict = Verdict::Pass;
  bool gating = true;
  std::string message;
  double elapsed_ms = 0.0;
};

/// Evaluate one identity in an existing context.
IdentityReport check_identity(const Identity& id, PointContext& ctx, double tolerance, int point_index = 0);
/// Convenience form building its own context. Guard violations give Skipped,
/// jet-order shortfalls and evaluation failures give Error.
IdentityReport check_identity(const std::string& id, const metric::MetricPtr& metric, const geometry::ChartPoint& p,
                              double tolerance = kDefaultTolerance, int order = geometry::kDefaultOrder);

/// Shell-style glob with * and ?.
bool glob_match(const std::string& pattern, const std::string& text);
/// Identities whose id matches any of the patterns (all when empty).
std::vector<const Identity*> select(const std::vector<std::string>& patterns);

struct CheckOptions {
  int points = 20;
  std::uint64_t seed = 42;
  double tolerance = kDefaultTolerance;
  int order = geometry::kDefaultOrder;
  std::vector<std::string> ids;  // glob patterns
  std::map<std::string, double> tolerance_overrides;
  int threads = 0;  // 0: FINSLER_THREADS or hardware concurrency
};

struct IdentitySummary {
  std::string id;
  bool gating = true;
  double worst_relative = 0.0;
  int worst_point = -1;
  int passed = 0, failed = 0, skipped = 0, errors = 0;
  Verdict verdict = Verdict::Pass;  // Skipped only if skipped everywhere
};

struct CheckResult {
  std::vector<geometry::ChartPoint> points;
  std::vector<IdentityReport> records;  // ordered by (id, point index)
  std::vector<IdentitySummary> summaries;
  bool all_pass() const;  // every gating summary passes or is skipped
};

CheckResult check_all(const metric::MetricPtr& metric, const CheckOptions& opt);
std::vector<IdentitySummary> summarize(const std::vector<IdentityReport>& records);

/// Worker count from FINSLER_THREADS, else hardware concurrency.
int default_threads();

}  // namespace finsler::identities
