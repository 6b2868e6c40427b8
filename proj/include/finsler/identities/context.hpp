#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "finsler/connections/connection.hpp"
#include "finsler/curvature/curvature.hpp"
#include "finsler/identities/algebra.hpp"

namespace finsler::identities {

using connections::ConnectionData;
using connections::ConnectionKind;
using geometry::JetTensor;

/// Objects a residual can ask for. Torsions and curvatures are in argument
/// order (i, x, y) and (i, x, y, z) with A(X,Y)Z; the *l variants are the
/// lowered forms g(A(X,Y),Z) and g(A(X,Y)Z,W). G, Ginv, Eta and Htensor do
/// not depend on a connection. Hc(i, x, y) = (D_{beta e_x} e_y)^i and
/// Vc(i, x, y) = (D_{gamma e_x} e_y)^i are the coefficients.
enum class Obj { G, Ginv, Eta, Htensor, Hc, Vc, Q, T, Rhat, Phat, Shat, R, P, S, Tl, Phatl, Rl, Pl, Sl };

enum class Der { None, H, V };

const char* name(Obj o);

/// Lazily computed geometry at one point, shared by every identity evaluated
/// there. Not thread safe; use one context per worker.
class PointContext {
 public:
  PointContext(metric::MetricPtr metric, geometry::ChartPoint p, int order = geometry::kDefaultOrder);

  const geometry::Frame& frame() const { return *frame_; }
  const geometry::FramePtr& frame_ptr() const { return frame_; }
  int dim() const { return frame_->n; }
  int order() const { return frame_->order; }
  const metric::MetricSpec& metric() const { return *frame_->metric; }

  const ConnectionData& connection(ConnectionKind k);
  const curvature::TorsionSet& torsions(ConnectionKind k);
  /// Curvatures in storage order (i, j, k, l) = [K(lift_k, lift_l) e_j]^i.
  const curvature::CurvatureSet& curvatures(ConnectionKind k);

  /// Jets of an object in argument order.
  const JetTensor& jets(Obj o, ConnectionKind owner);
  /// Values, optionally covariantly differentiated by connection `by`; the
  /// direction is the last slot.
  const PiTensor& value(Obj o, ConnectionKind owner, Der d = Der::None, ConnectionKind by = ConnectionKind::Cartan);
  /// Jets of the derivative (for second derivatives along lifts).
  const JetTensor& deriv_jets(Obj o, ConnectionKind owner, Der d, ConnectionKind by);

 private:
  using Key = std::tuple<int, int, int, int>;
  Key key(Obj o, ConnectionKind owner, Der d, ConnectionKind by) const;

  geometry::FramePtr frame_;
  std::map<ConnectionKind, ConnectionData> conn_;
  std::map<ConnectionKind, curvature::TorsionSet> tors_;
  std::map<ConnectionKind, curvature::CurvatureSet> curv_;
  std::map<Key, JetTensor> jets_;
  std::map<Key, PiTensor> values_;
};

/// Residual evaluation helper: fetches tensors from the context while
/// tracking the scale max(1, largest component of every operand).
class Eval {
 public:
  explicit Eval(PointContext& ctx) : ctx_(ctx) {}

  PointContext& ctx() { return ctx_; }
  int n() const { return ctx_.dim(); }
  double scale() const { return scale_; }
  void note(double magnitude);
  void note(const PiTensor& t);

  const PiTensor& t(Obj o, ConnectionKind owner = ConnectionKind::Cartan);
  const PiTensor& h(Obj o, ConnectionKind owner, ConnectionKind by);
  const PiTensor& v(Obj o, ConnectionKind owner, ConnectionKind by);

  /// A(args) with the first slot free.
  Vec at(Obj o, ConnectionKind c, std::initializer_list<Arg> args) { return vec(t(o, c), args); }
  /// Fully contracted lowered object.
  double sc(Obj o, ConnectionKind c, std::initializer_list<Arg> args) { return scal(t(o, c), args); }
  /// Horizontal / vertical covariant derivative of `owner`'s object by `by`;
  /// the direction is the last argument.
  Vec dh(Obj o, ConnectionKind owner, ConnectionKind by, std::initializer_list<Arg> args) {
    return vec(h(o, owner, by), args);
  }
  Vec dv(Obj o, ConnectionKind owner, ConnectionKind by, std::initializer_list<Arg> args) {
    return vec(v(o, owner, by), args);
  }
  double sdh(Obj o, ConnectionKind owner, ConnectionKind by, std::initializer_list<Arg> args) {
    return scal(h(o, owner, by), args);
  }
  double sdv(Obj o, ConnectionKind owner, ConnectionKind by, std::initializer_list<Arg> args) {
    return scal(v(o, owner, by), args);
  }
  double gdot(const Vec& a, const Vec& b) { return dot(t(Obj::G), a, b); }

  Arg e(int i) const { return Arg::basis(i); }
  Arg eta();
  Vec eta_vec();

  /// Max |f| over every tuple of k basis vectors; f returns a Vec or double.
  template <class F>
  double sweep(int k, F&& f) {
    std::vector<Arg> a(static_cast<std::size_t>(k));
    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    double worst = 0.0;
    const int nn = n();
    while (true) {
      for (int s = 0; s < k; ++s) a[s] = Arg::basis(idx[s]);
      worst = std::max(worst, magnitude(f(a)));
      int s = k - 1;
      while (s >= 0 && ++idx[s] == nn) idx[s--] = 0;
      if (s < 0) break;
    }
    return worst;
  }

 private:
  static double magnitude(const Vec& v) { return max_abs(v); }
  static double magnitude(double x) { return std::abs(x); }

  PointContext& ctx_;
  double scale_ = 1.0;
};

}  // namespace finsler::identities
