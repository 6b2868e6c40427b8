#include "finsler/identities/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace finsler::identities {

Arg::Arg(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0.0) terms.emplace_back(static_cast<int>(i), v[i]);
}

namespace {

double contract_rest(const PiTensor& A, const Arg* args, std::size_t nargs, std::size_t base, std::size_t k) {
  if (k == nargs) return A.data()[base];
  const std::size_t n = static_cast<std::size_t>(A.dim());
  double s = 0.0;
  for (const auto& [i, w] : args[k].terms) s += w * contract_rest(A, args, nargs, base * n + static_cast<std::size_t>(i), k + 1);
  return s;
}

void check_arity(const PiTensor& A, std::size_t down, std::size_t given) {
  if (down != given) throw std::invalid_argument("argument count does not match tensor rank");
  (void)A;
}

}  // namespace

Vec vec(const PiTensor& A, std::initializer_list<Arg> args) { return vec(A, std::vector<Arg>(args)); }
double scal(const PiTensor& A, std::initializer_list<Arg> args) { return scal(A, std::vector<Arg>(args)); }

Vec vec(const PiTensor& A, const std::vector<Arg>& args) {
  if (A.rank() < 1 || A.slot(0) != geometry::Slot::Up) throw std::invalid_argument("vec: first slot must be contravariant");
  check_arity(A, static_cast<std::size_t>(A.rank() - 1), args.size());
  const int n = A.dim();
  Vec out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = contract_rest(A, args.data(), args.size(), static_cast<std::size_t>(i), 0);
  return out;
}

double scal(const PiTensor& A, const std::vector<Arg>& args) {
  check_arity(A, static_cast<std::size_t>(A.rank()), args.size());
  return contract_rest(A, args.data(), args.size(), 0, 0);
}

double dot(const PiTensor& g, const Vec& u, const Vec& v) {
  const int n = g.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += g(i, j) * u[i] * v[j];
  return s;
}

Vec operator+(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
Vec operator-(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
Vec operator-(Vec a) {
  for (auto& x : a) x = -x;
  return a;
}
Vec operator*(double s, Vec a) {
  for (auto& x : a) x *= s;
  return a;
}
double max_abs(const Vec& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace finsler::identities
