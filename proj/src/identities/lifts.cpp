#include "finsler/identities/lifts.hpp"

namespace finsler::identities {

std::vector<Jet> basis_field(const geometry::Frame& f, int i) {
  std::vector<Jet> z(static_cast<std::size_t>(f.n), f.zero());
  z[static_cast<std::size_t>(i)] += 1.0;
  return z;
}

std::vector<Jet> eta_field(const geometry::Frame& f) {
  std::vector<Jet> z;
  for (int i = 0; i < f.n; ++i) z.push_back(f.y(i));
  return z;
}

VectorField horizontal_lift(const geometry::Frame& f, const std::vector<Jet>& Z) {
  const int n = f.n;
  VectorField X{std::vector<Jet>(static_cast<std::size_t>(2 * n), f.zero())};
  for (int k = 0; k < n; ++k) {
    X.c[k] = Z[k];
    for (int m = 0; m < n; ++m) X.c[n + m].sub_product(f.N(m, k), Z[k]);
  }
  return X;
}

VectorField vertical_lift(const geometry::Frame& f, const std::vector<Jet>& Z) {
  const int n = f.n;
  VectorField X{std::vector<Jet>(static_cast<std::size_t>(2 * n), f.zero())};
  for (int k = 0; k < n; ++k) X.c[n + k] = Z[k];
  return X;
}

VectorField basis_lift(const geometry::Frame& f, int a) {
  return a < f.n ? horizontal_lift(f, basis_field(f, a)) : vertical_lift(f, basis_field(f, a - f.n));
}

Jet apply(const VectorField& X, const Jet& phi) {
  Jet s = X.c[0] * phi.d(0);
  for (std::size_t a = 1; a < X.c.size(); ++a) s.add_product(X.c[a], phi.d(static_cast<int>(a)));
  return s;
}

VectorField bracket(const VectorField& U, const VectorField& W) {
  VectorField out;
  for (std::size_t a = 0; a < U.c.size(); ++a) out.c.push_back(apply(U, W.c[a]) - apply(W, U.c[a]));
  return out;
}

Adapted adapted(const geometry::Frame& f, const VectorField& X) {
  const int n = f.n;
  Adapted out;
  for (int k = 0; k < n; ++k) out.h.push_back(X.c[k]);
  for (int m = 0; m < n; ++m) {
    Jet v = X.c[n + m];
    for (int k = 0; k < n; ++k) v.add_product(f.N(m, k), X.c[k]);
    out.v.push_back(v);
  }
  return out;
}

std::vector<double> values(const std::vector<Jet>& v) {
  std::vector<double> out;
  for (const auto& j : v) out.push_back(j.value());
  return out;
}

}  // namespace finsler::identities
