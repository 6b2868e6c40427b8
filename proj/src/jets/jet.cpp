#include "finsler/jets/jet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "finsler/jets/kernels.hpp"

namespace finsler::jets {

JetOrderError::JetOrderError(int required, int available)
    : JetError("derivative order " + std::to_string(required) + " exceeds jet order " + std::to_string(available)),
      required_(required),
      available_(available) {}

Jet::Jet(SpacePtr space, int order) : space_(std::move(space)), order_(order) {
  if (!space_) throw std::invalid_argument("jet without a space");
  if (order < 0) throw std::invalid_argument("jet order must be non-negative");
  if (order > space_->max_order())
    throw std::invalid_argument("jet order " + std::to_string(order) + " exceeds space order " +
                                std::to_string(space_->max_order()));
  c_.assign(space_->size(order), 0.0);
}

Jet make_like(const Jet& j, int order) { return Jet(j.space_, order); }

Jet Jet::constant(SpacePtr space, int order, double c) {
  Jet j(std::move(space), order);
  j.c_[0] = c;
  return j;
}

Jet Jet::variable(SpacePtr space, int order, int var, double value) {
  if (var < 0 || var >= space->nvars()) throw std::invalid_argument("variable index out of range");
  Jet j(std::move(space), order);
  j.c_[0] = value;
  // degree-1 block is e_0, e_1, ... in storage order
  if (order >= 1) j.c_[1 + static_cast<std::size_t>(var)] = 1.0;
  return j;
}

double Jet::coeff(std::span<const int> alpha) const {
  const auto idx = space_->index_of(alpha);
  int deg = 0;
  for (int e : alpha) deg += e;
  if (idx < 0 || deg > order_) throw JetOrderError(deg, order_);
  return c_[static_cast<std::size_t>(idx)];
}

double Jet::partial(std::span<const int> alpha) const {
  double fact = 1.0;
  for (int e : alpha)
    for (int k = 2; k <= e; ++k) fact *= k;
  return fact * coeff(alpha);
}

Jet Jet::truncated(int order) const {
  if (order > order_) throw JetOrderError(order, order_);
  Jet r = make_like(*this, order);
  std::copy_n(c_.begin(), r.c_.size(), r.c_.begin());
  return r;
}

Jet Jet::d(int var) const {
  if (order_ < 1) throw JetOrderError(1, order_);
  Jet r = make_like(*this, order_ - 1);
  const auto& sp = *space_;
  for (std::size_t s = 0; s < r.c_.size(); ++s)
    r.c_[s] = static_cast<double>(sp.exponent(s, var) + 1) * c_[static_cast<std::size_t>(sp.shifted(s, var))];
  return r;
}

Jet Jet::d(std::span<const int> alpha) const {
  int deg = 0;
  for (int e : alpha) deg += e;
  if (deg > order_) throw JetOrderError(deg, order_);
  Jet r = make_like(*this, order_ - deg);
  const auto& sp = *space_;
  const int nv = sp.nvars();
  for (std::size_t s = 0; s < r.c_.size(); ++s) {
    std::size_t t = s;
    double factor = 1.0;
    for (int v = 0; v < nv; ++v) {
      const int e = sp.exponent(s, v);
      for (int k = 1; k <= alpha[v]; ++k) {
        factor *= e + k;
        t = static_cast<std::size_t>(sp.shifted(t, v));
      }
    }
    r.c_[s] = factor * c_[t];
  }
  return r;
}

Jet Jet::d2(int var1, int var2) const {
  std::vector<int> alpha(static_cast<std::size_t>(nvars()), 0);
  ++alpha[var1];
  ++alpha[var2];
  return d(alpha);
}

bool Jet::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](double v) { return v == 0.0; });
}

namespace {

void check_compatible(const Jet& a, const Jet& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("operation on an empty jet");
  if (a.nvars() != b.nvars()) throw std::invalid_argument("jets over different variable counts");
}

}  // namespace

Jet Jet::operator-() const {
  Jet r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Jet& Jet::operator+=(const Jet& o) {
  check_compatible(*this, o);
  if (o.order_ < order_) *this = truncated(o.order_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  check_compatible(*this, o);
  if (o.order_ < order_) *this = truncated(o.order_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Jet& Jet::operator*=(const Jet& o) { return *this = *this * o; }
Jet& Jet::operator/=(const Jet& o) { return *this = *this / o; }

Jet& Jet::operator+=(double c) {
  c_[0] += c;
  return *this;
}
Jet& Jet::operator-=(double c) {
  c_[0] -= c;
  return *this;
}
Jet& Jet::operator*=(double c) {
  for (auto& v : c_) v *= c;
  return *this;
}
Jet& Jet::operator/=(double c) {
  for (auto& v : c_) v /= c;
  return *this;
}

Jet& Jet::add_scaled(double s, const Jet& o) {
  check_compatible(*this, o);
  if (o.order_ < order_) *this = truncated(o.order_);
  active_kernels().axpy(s, o.c_.data(), c_.data(), c_.size());
  return *this;
}

Jet& Jet::add_product(const Jet& a, const Jet& b) { return *this += a * b; }
Jet& Jet::sub_product(const Jet& a, const Jet& b) { return *this -= a * b; }

Jet operator*(const Jet& a, const Jet& b) {
  check_compatible(a, b);
  Jet r = make_like(a, std::min(a.order(), b.order()));
  const auto& sp = a.space();
  active_kernels().multiply(a.coeffs().data(), b.coeffs().data(), r.coeffs().data(), r.size(),
                            sp.pair_offsets().data(), sp.pair_lhs().data(), sp.pair_rhs().data());
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  check_compatible(a, b);
  const double b0 = b.value();
  if (b0 == 0.0) throw JetDomainError("division by a jet with zero constant term");
  Jet q = make_like(a, std::min(a.order(), b.order()));
  const auto& sp = a.space();
  const auto off = sp.pair_offsets();
  const auto lhs = sp.pair_lhs();
  const auto rhs = sp.pair_rhs();
  const auto& k = active_kernels();
  auto qc = q.coeffs();
  // a_t = sum_b b_b q_{t-b}; the first pair is (0, t)
  for (std::size_t t = 0; t < qc.size(); ++t) {
    const std::uint32_t first = off[t] + 1;
    const double s = k.pair_dot(b.coeffs().data(), qc.data(), lhs.data() + first, rhs.data() + first, off[t + 1] - first);
    qc[t] = (a[t] - s) / b0;
  }
  return q;
}

Jet operator/(double c, const Jet& a) { return Jet::constant(a.space_ptr(), a.order(), c) / a; }

Jet sqrt(const Jet& f) {
  const double f0 = f.value();
  if (!(f0 > 0.0) && !(f0 == 0.0 && f.order() == 0))
    throw JetDomainError("sqrt of a jet with non-positive constant term");
  Jet s = make_like(f, f.order());
  const auto& sp = f.space();
  const auto off = sp.pair_offsets();
  const auto lhs = sp.pair_lhs();
  const auto rhs = sp.pair_rhs();
  const auto& k = active_kernels();
  auto sc = s.coeffs();
  sc[0] = std::sqrt(f0);
  const double two_s0 = 2.0 * sc[0];
  // f_t = sum_b s_b s_{t-b}; the first and last pairs carry s_t
  for (std::size_t t = 1; t < sc.size(); ++t) {
    const std::uint32_t first = off[t] + 1;
    const std::uint32_t count = off[t + 1] - 1 - first;
    const double inner = k.pair_dot(sc.data(), sc.data(), lhs.data() + first, rhs.data() + first, count);
    sc[t] = (f[t] - inner) / two_s0;
  }
  return s;
}

namespace {

// sum_k d[k] h^k with h = f - f(0), by Horner.
Jet compose(const Jet& f, const std::vector<double>& d) {
  Jet h = f;
  h[0] = 0.0;
  const int K = f.order();
  Jet r = Jet::constant(f.space_ptr(), K, d[static_cast<std::size_t>(K)]);
  for (int k = K - 1; k >= 0; --k) {
    r = r * h;
    r[0] += d[static_cast<std::size_t>(k)];
  }
  return r;
}

}  // namespace

Jet exp(const Jet& f) {
  const int K = f.order();
  std::vector<double> d(static_cast<std::size_t>(K) + 1);
  d[0] = std::exp(f.value());
  for (int k = 1; k <= K; ++k) d[k] = d[k - 1] / k;
  return compose(f, d);
}

Jet log(const Jet& f) {
  const double f0 = f.value();
  if (!(f0 > 0.0)) throw JetDomainError("log of a jet with non-positive constant term");
  const int K = f.order();
  std::vector<double> d(static_cast<std::size_t>(K) + 1);
  d[0] = std::log(f0);
  double p = 1.0;
  for (int k = 1; k <= K; ++k) {
    p /= f0;
    d[k] = ((k % 2) ? p : -p) / k;
  }
  return compose(f, d);
}

namespace {

// Taylor coefficients of sin (phase 0) or cos (phase 1) around f0.
std::vector<double> trig_coeffs(double f0, int K, int phase) {
  const double s = std::sin(f0);
  const double c = std::cos(f0);
  const double cycle[4] = {s, c, -s, -c};
  std::vector<double> d(static_cast<std::size_t>(K) + 1);
  double inv_fact = 1.0;
  for (int k = 0; k <= K; ++k) {
    if (k > 0) inv_fact /= k;
    d[k] = cycle[(k + phase) % 4] * inv_fact;
  }
  return d;
}

}  // namespace

Jet sin(const Jet& f) { return compose(f, trig_coeffs(f.value(), f.order(), 0)); }
Jet cos(const Jet& f) { return compose(f, trig_coeffs(f.value(), f.order(), 1)); }

Jet pow_int(const Jet& f, int k) {
  if (k < 0) return 1.0 / pow_int(f, -k);
  Jet result = Jet::constant(f.space_ptr(), f.order(), 1.0);
  if (k == 0) return result;
  Jet base = f;
  bool first = true;
  while (k > 0) {
    if (k & 1) {
      result = first ? base : result * base;
      first = false;
    }
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Jet pow(const Jet& f, double p) {
  if (p == std::trunc(p) && std::abs(p) <= 64.0) return pow_int(f, static_cast<int>(p));
  const double f0 = f.value();
  if (!(f0 > 0.0)) throw JetDomainError("real power of a jet with non-positive constant term");
  const int K = f.order();
  std::vector<double> d(static_cast<std::size_t>(K) + 1);
  d[0] = std::pow(f0, p);
  for (int k = 1; k <= K; ++k) d[k] = d[k - 1] * (p - k + 1) / (k * f0);
  return compose(f, d);
}

std::vector<Jet> seed_variables(std::span<const double> x, std::span<const double> y, int order) {
  if (order < 0) throw std::invalid_argument("jet order must be non-negative");
  if (x.size() != y.size() || x.empty()) throw std::invalid_argument("point coordinates must have equal length");
  const int n = static_cast<int>(x.size());
  auto space = JetSpace::get(2 * n, order);
  std::vector<Jet> out;
  out.reserve(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) out.push_back(Jet::variable(space, order, i, x[i]));
  for (int i = 0; i < n; ++i) out.push_back(Jet::variable(space, order, n + i, y[i]));
  return out;
}

}  // namespace finsler::jets
