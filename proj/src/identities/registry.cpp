#include "finsler/identities/registry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <thread>

#include "finsler/geometry/sampling.hpp"
#include "ops.hpp"

namespace finsler::identities {

const char* name(Guard g) {
  switch (g) {
    case Guard::None: return "none";
    case Guard::Riemannian: return "riemannian";
    case Guard::LocallyMinkowski: return "locally_minkowski";
    case Guard::Sphere: return "sphere";
    case Guard::BerwaldRegime: return "riemannian_or_locally_minkowski";
  }
  return "?";
}

bool guard_holds(Guard g, const metric::MetricTraits& t) {
  switch (g) {
    case Guard::None: return true;
    case Guard::Riemannian: return t.riemannian;
    case Guard::LocallyMinkowski: return t.locally_minkowski;
    case Guard::Sphere: return t.sphere;
    case Guard::BerwaldRegime: return t.riemannian || t.locally_minkowski;
  }
  return false;
}

const char* name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
    case Verdict::Error: return "error";
  }
  return "?";
}

const std::vector<Identity>& registry() {
  static const std::vector<Identity> all = [] {
    std::vector<Identity> v;
    detail::register_general(v);
    detail::register_cartan(v);
    detail::register_berwald(v);
    detail::register_chern(v);
    detail::register_hashiguchi(v);
    detail::register_tables(v);
    std::sort(v.begin(), v.end(), [](const Identity& a, const Identity& b) { return a.d.id < b.d.id; });
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i].d.id == v[i - 1].d.id) throw std::logic_error("duplicate identity id " + v[i].d.id);
    return v;
  }();
  return all;
}

std::vector<IdentityDescriptor> catalog() {
  std::vector<IdentityDescriptor> out;
  for (const auto& i : registry()) out.push_back(i.d);
  return out;
}

const Identity* find_identity(const std::string& id) {
  const auto& r = registry();
  auto it = std::lower_bound(r.begin(), r.end(), id, [](const Identity& a, const std::string& s) { return a.d.id < s; });
  return it != r.end() && it->d.id == id ? &*it : nullptr;
}

bool glob_match(const std::string& pattern, const std::string& text) {
  std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::vector<const Identity*> select(const std::vector<std::string>& patterns) {
  std::vector<const Identity*> out;
  for (const auto& i : registry()) {
    bool keep = patterns.empty();
    for (const auto& p : patterns) keep = keep || glob_match(p, i.d.id);
    if (keep) out.push_back(&i);
  }
  return out;
}

IdentityReport check_identity(const Identity& id, PointContext& ctx, double tolerance, int point_index) {
  IdentityReport r;
  r.id = id.d.id;
  r.point_index = point_index;
  r.point = ctx.frame().point;
  r.gating = id.d.gating;
  r.tolerance = id.d.tolerance > 0.0 ? id.d.tolerance : tolerance;
  if (!guard_holds(id.d.guard, ctx.metric().traits())) {
    r.verdict = Verdict::Skipped;
    r.message = std::string("not applicable: requires ") + name(id.d.guard);
    return r;
  }
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Eval e(ctx);
    r.residual = id.residual(e);
    r.scale = e.scale();
    r.relative = r.residual / r.scale;
    r.verdict = std::isfinite(r.relative) && r.relative <= r.tolerance ? Verdict::Pass : Verdict::Fail;
  } catch (const jets::JetOrderError& ex) {
    r.verdict = Verdict::Error;
    r.message = "jet order " + std::to_string(ctx.order()) + " too low: identity needs order >= " +
                std::to_string(id.d.min_order) + " (" + ex.what() + ")";
  } catch (const std::exception& ex) {
    r.verdict = Verdict::Error;
    r.message = ex.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

IdentityReport check_identity(const std::string& id, const metric::MetricPtr& metric, const geometry::ChartPoint& p,
                              double tolerance, int order) {
  const Identity* ident = find_identity(id);
  if (!ident) throw std::invalid_argument("unknown identity " + id);
  if (!guard_holds(ident->d.guard, metric->traits())) {
    IdentityReport r;
    r.id = id;
    r.point = p;
    r.gating = ident->d.gating;
    r.tolerance = tolerance;
    r.verdict = Verdict::Skipped;
    r.message = std::string("not applicable: requires ") + name(ident->d.guard);
    return r;
  }
  try {
    PointContext ctx(metric, p, order);
    return check_identity(*ident, ctx, tolerance, 0);
  } catch (const jets::JetOrderError& ex) {
    IdentityReport r;
    r.id = id;
    r.point = p;
    r.gating = ident->d.gating;
    r.tolerance = tolerance;
    r.verdict = Verdict::Error;
    r.message = "jet order " + std::to_string(order) + " too low: identity needs order >= " +
                std::to_string(ident->d.min_order) + " (" + ex.what() + ")";
    return r;
  }
}

int default_threads() {
  if (const char* s = std::getenv("FINSLER_THREADS")) {
    const int v = std::atoi(s);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::vector<IdentitySummary> summarize(const std::vector<IdentityReport>& records) {
  std::vector<IdentitySummary> out;
  for (const auto& r : records) {
    if (out.empty() || out.back().id != r.id) {
      out.emplace_back();
      out.back().id = r.id;
      out.back().gating = r.gating;
    }
    auto& s = out.back();
    switch (r.verdict) {
      case Verdict::Pass: ++s.passed; break;
      case Verdict::Fail: ++s.failed; break;
      case Verdict::Skipped: ++s.skipped; break;
      case Verdict::Error: ++s.errors; break;
    }
    if (r.verdict == Verdict::Pass || r.verdict == Verdict::Fail) {
      if (s.worst_point < 0 || r.relative > s.worst_relative || std::isnan(r.relative)) {
        s.worst_relative = r.relative;
        s.worst_point = r.point_index;
      }
    }
  }
  for (auto& s : out) {
    if (s.errors)
      s.verdict = Verdict::Error;
    else if (s.failed)
      s.verdict = Verdict::Fail;
    else if (s.passed)
      s.verdict = Verdict::Pass;
    else
      s.verdict = Verdict::Skipped;
  }
  return out;
}

bool CheckResult::all_pass() const {
  for (const auto& s : summaries)
    if (s.gating && s.verdict != Verdict::Pass && s.verdict != Verdict::Skipped) return false;
  return true;
}

CheckResult check_all(const metric::MetricPtr& metric, const CheckOptions& opt) {
  if (opt.points < 1) throw std::invalid_argument("check_all: need at least one point");
  CheckResult res;
  geometry::Sampler sampler(metric, opt.seed);
  res.points = sampler.take(opt.points);
  const auto ids = select(opt.ids);
  const std::size_t np = res.points.size(), ni = ids.size();

  auto tol_for = [&](const Identity& i) {
    auto it = opt.tolerance_overrides.find(i.d.id);
    return it != opt.tolerance_overrides.end() ? it->second : opt.tolerance;
  };

  std::vector<IdentityReport> grid(np * ni);
  auto run_point = [&](std::size_t p) {
    std::unique_ptr<PointContext> ctx;
    std::string failure;
    try {
      ctx = std::make_unique<PointContext>(metric, res.points[p], opt.order);
    } catch (const jets::JetOrderError& ex) {
      failure = "jet order " + std::to_string(opt.order) + " too low (" + ex.what() + ")";
    } catch (const std::exception& ex) {
      failure = ex.what();
    }
    for (std::size_t k = 0; k < ni; ++k) {
      const Identity& id = *ids[k];
      IdentityReport r;
      if (ctx) {
        r = check_identity(id, *ctx, tol_for(id), static_cast<int>(p));
      } else {
        r.id = id.d.id;
        r.point_index = static_cast<int>(p);
        r.point = res.points[p];
        r.gating = id.d.gating;
        r.tolerance = tol_for(id);
        const bool applies = guard_holds(id.d.guard, metric->traits());
        r.verdict = applies ? Verdict::Error : Verdict::Skipped;
        r.message = applies ? failure : std::string("not applicable: requires ") + name(id.d.guard);
      }
      grid[k * np + p] = std::move(r);
    }
  };

  const int threads = std::max(1, std::min<int>(opt.threads > 0 ? opt.threads : default_threads(),
                                                static_cast<int>(np)));
  if (threads == 1) {
    for (std::size_t p = 0; p < np; ++p) run_point(p);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t p; (p = next.fetch_add(1)) < np;) run_point(p);
      });
    for (auto& th : pool) th.join();
  }
  res.records = std::move(grid);
  res.summaries = summarize(res.records);
  return res;
}

}  // namespace finsler::identities
