#include "finsler/jets/jet_space.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace finsler::jets {

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

namespace {

// Compositions of `degree` into `nvars` parts, first part largest first.
void compositions(int nvars, int degree, int pos, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (pos == nvars - 1) {
    cur[pos] = degree;
    out.push_back(cur);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[pos] = e;
    compositions(nvars, degree - e, pos + 1, cur, out);
  }
}

}  // namespace

std::shared_ptr<const JetSpace> JetSpace::get(int nvars, int max_order) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const JetSpace>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{nvars, max_order}];
  if (!slot) slot = std::make_shared<const JetSpace>(nvars, max_order);
  return slot;
}

JetSpace::JetSpace(int nvars, int max_order) : nvars_(nvars), max_order_(max_order) {
  if (nvars < 1 || nvars > kMaxVariables)
    throw std::invalid_argument("jet space: variable count must be in 1.." + std::to_string(kMaxVariables));
  if (max_order < 0 || max_order > kMaxOrder)
    throw std::invalid_argument("jet space: order must be in 0.." + std::to_string(kMaxOrder));

  std::vector<std::vector<int>> all;
  degree_begin_.push_back(0);
  for (int d = 0; d <= max_order; ++d) {
    std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
    compositions(nvars, d, 0, cur, all);
    degree_begin_.push_back(all.size());
  }
  total_ = all.size();

  exps_.assign(total_ * kMaxVariables, 0);
  degree_.resize(total_);
  for (std::size_t i = 0; i < total_; ++i) {
    int d = 0;
    for (int v = 0; v < nvars; ++v) {
      exps_[i * kMaxVariables + v] = static_cast<std::uint8_t>(all[i][v]);
      d += all[i][v];
    }
    degree_[i] = d;
    lookup_.emplace(key_of(all[i]), static_cast<std::uint32_t>(i));
  }

  shift_.assign(static_cast<std::size_t>(nvars) * total_, -1);
  for (std::size_t i = 0; i < total_; ++i) {
    if (degree_[i] == max_order) continue;
    for (int v = 0; v < nvars; ++v) {
      auto e = all[i];
      ++e[v];
      shift_[v * total_ + i] = static_cast<std::int32_t>(lookup_.at(key_of(e)));
    }
  }

  // Factor pairs: every b <= t componentwise, in storage order of b.
  pair_offsets_.reserve(total_ + 1);
  pair_offsets_.push_back(0);
  std::vector<std::uint32_t> subs;
  std::vector<int> b(static_cast<std::size_t>(nvars));
  for (std::size_t t = 0; t < total_; ++t) {
    subs.clear();
    const auto& te = all[t];
    // odometer over the box [0, te]
    std::fill(b.begin(), b.end(), 0);
    while (true) {
      subs.push_back(lookup_.at(key_of(b)));
      int v = 0;
      while (v < nvars) {
        if (b[v] < te[v]) {
          ++b[v];
          break;
        }
        b[v] = 0;
        ++v;
      }
      if (v == nvars) break;
    }
    std::sort(subs.begin(), subs.end());
    for (auto s : subs) {
      std::vector<int> rest(static_cast<std::size_t>(nvars));
      for (int v = 0; v < nvars; ++v) rest[v] = te[v] - all[s][v];
      pair_lhs_.push_back(s);
      pair_rhs_.push_back(lookup_.at(key_of(rest)));
    }
    pair_offsets_.push_back(static_cast<std::uint32_t>(pair_lhs_.size()));
  }
}

std::uint64_t JetSpace::key_of(std::span<const int> alpha) const {
  std::uint64_t key = 0;
  for (int v = 0; v < nvars_; ++v) key |= static_cast<std::uint64_t>(alpha[v]) << (4 * v);
  return key;
}

MultiIndex JetSpace::exponents(std::size_t idx) const {
  MultiIndex out(static_cast<std::size_t>(nvars_));
  for (int v = 0; v < nvars_; ++v) out[v] = exps_[idx * kMaxVariables + v];
  return out;
}

std::ptrdiff_t JetSpace::index_of(std::span<const int> alpha) const {
  if (static_cast<int>(alpha.size()) != nvars_)
    throw std::invalid_argument("multi-index has " + std::to_string(alpha.size()) + " entries, expected " +
                                std::to_string(nvars_));
  int d = 0;
  for (int e : alpha) {
    if (e < 0) throw std::invalid_argument("multi-index with negative exponent");
    d += e;
  }
  if (d > max_order_) return -1;
  return lookup_.at(key_of(alpha));
}

}  // namespace finsler::jets
