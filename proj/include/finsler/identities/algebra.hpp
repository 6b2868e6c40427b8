#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "finsler/geometry/tensor.hpp"

namespace finsler::identities {

using geometry::PiTensor;
using Vec = std::vector<double>;

/// A pi-vector argument as a sparse list of (component, weight) pairs, so
/// basis vectors contract in O(1) per slot.
struct Arg {
  std::vector<std::pair<int, double>> terms;

  Arg() = default;
  Arg(const Vec& v);  // NOLINT: implicit so computed vectors feed straight back in
  static Arg basis(int i) {
    Arg a;
    a.terms.emplace_back(i, 1.0);
    return a;
  }
};

/// Feed `args` into the Down slots of A in order; slot 0 must be Up and
/// stays free.
Vec vec(const PiTensor& A, std::initializer_list<Arg> args);
Vec vec(const PiTensor& A, const std::vector<Arg>& args);
/// Full contraction of an all-Down tensor.
double scal(const PiTensor& A, std::initializer_list<Arg> args);
double scal(const PiTensor& A, const std::vector<Arg>& args);
/// g(u, v)
double dot(const PiTensor& g, const Vec& u, const Vec& v);

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator-(Vec a);
Vec operator*(double s, Vec a);
double max_abs(const Vec& v);

/// Cyclic sum f(X,Y,Z) + f(Y,Z,X) + f(Z,X,Y).
template <class F, class A>
auto cyclic(F&& f, const A& x, const A& y, const A& z) {
  return f(x, y, z) + f(y, z, x) + f(z, x, y);
}
/// Interchange difference f(X,Y) - f(Y,X).
template <class F, class A>
auto interchange(F&& f, const A& x, const A& y) {
  return f(x, y) - f(y, x);
}

}  // namespace finsler::identities
