#pragma once

// Shorthand used by the catalog files.

#include <string>
#include <vector>

#include "finsler/identities/lifts.hpp"
#include "finsler/identities/registry.hpp"

namespace finsler::identities::detail {

using K = ConnectionKind;
inline constexpr K CA = K::Cartan;
inline constexpr K BE = K::Berwald;
inline constexpr K CH = K::Chern;
inline constexpr K HA = K::Hashiguchi;
using Args = std::vector<Arg>;

/// Objects of one connection with covariant derivatives taken by `by`
/// (itself by default). D* helpers put the direction first to read like
/// (D_{beta W} A)(X, Y): Dh(A, W, {X, Y}).
struct Ops {
  Eval& e;
  K c;
  K by;
  Ops(Eval& ev, K conn) : e(ev), c(conn), by(conn) {}
  Ops(Eval& ev, K conn, K deriv) : e(ev), c(conn), by(deriv) {}

  Vec A(Obj o, const Args& a) { return vec(e.t(o, c), a); }
  double Al(Obj o, const Args& a) { return scal(e.t(o, c), a); }
  Vec Dh(Obj o, const Arg& w, Args a) {
    a.push_back(w);
    return vec(e.h(o, c, by), a);
  }
  Vec Dv(Obj o, const Arg& w, Args a) {
    a.push_back(w);
    return vec(e.v(o, c, by), a);
  }
  double Dhl(Obj o, const Arg& w, Args a) {
    a.push_back(w);
    return scal(e.h(o, c, by), a);
  }
  double Dvl(Obj o, const Arg& w, Args a) {
    a.push_back(w);
    return scal(e.v(o, c, by), a);
  }

  Vec Q(const Arg& x, const Arg& y) { return A(Obj::Q, {x, y}); }
  Vec T(const Arg& x, const Arg& y) { return A(Obj::T, {x, y}); }
  Vec Rh(const Arg& x, const Arg& y) { return A(Obj::Rhat, {x, y}); }
  Vec Ph(const Arg& x, const Arg& y) { return A(Obj::Phat, {x, y}); }
  Vec Sh(const Arg& x, const Arg& y) { return A(Obj::Shat, {x, y}); }
  Vec R(const Arg& x, const Arg& y, const Arg& z) { return A(Obj::R, {x, y, z}); }
  Vec P(const Arg& x, const Arg& y, const Arg& z) { return A(Obj::P, {x, y, z}); }
  Vec S(const Arg& x, const Arg& y, const Arg& z) { return A(Obj::S, {x, y, z}); }
  double Tl(const Arg& x, const Arg& y, const Arg& z) { return Al(Obj::Tl, {x, y, z}); }
  double Phl(const Arg& x, const Arg& y, const Arg& z) { return Al(Obj::Phatl, {x, y, z}); }
  double Rl(const Arg& x, const Arg& y, const Arg& z, const Arg& w) { return Al(Obj::Rl, {x, y, z, w}); }
  double Pl(const Arg& x, const Arg& y, const Arg& z, const Arg& w) { return Al(Obj::Pl, {x, y, z, w}); }
  double Sl(const Arg& x, const Arg& y, const Arg& z, const Arg& w) { return Al(Obj::Sl, {x, y, z, w}); }
  double g(const Vec& a, const Vec& b) { return e.gdot(a, b); }
  double g(const Arg& a, const Arg& b) { return scal(e.t(Obj::G), {a, b}); }
  Arg eta() { return e.eta(); }
};

/// max of several magnitudes
inline double worst(std::initializer_list<double> xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}
inline double worst(const Vec& v) { return max_abs(v); }

/// Sweep helpers over k basis arguments.
template <class F>
double sweep1(Eval& e, F&& f) {
  return e.sweep(1, [&](const Args& a) { return f(a[0]); });
}
template <class F>
double sweep2(Eval& e, F&& f) {
  return e.sweep(2, [&](const Args& a) { return f(a[0], a[1]); });
}
template <class F>
double sweep3(Eval& e, F&& f) {
  return e.sweep(3, [&](const Args& a) { return f(a[0], a[1], a[2]); });
}
template <class F>
double sweep4(Eval& e, F&& f) {
  return e.sweep(4, [&](const Args& a) { return f(a[0], a[1], a[2], a[3]); });
}

/// Largest component of a tensor fetched without touching the scale (for
/// vanishing checks, whose natural scale is 1).
inline double magnitude(Eval& e, Obj o, K c, Der d = Der::None, K by = CA) {
  return geometry::max_abs(e.ctx().value(o, c, d, by));
}

struct Builder {
  std::vector<Identity>& out;
  std::string group;
  std::vector<K> conns;

  Builder& add(std::string id, std::string statement, std::string shape, int min_order, ResidualFn f,
               Guard guard = Guard::None, bool gating = true, double tol = 0.0) {
    IdentityDescriptor d;
    d.id = std::move(id);
    d.group = group;
    d.statement = std::move(statement);
    d.connections = conns;
    d.residual_shape = std::move(shape);
    d.guard = guard;
    d.min_order = min_order;
    d.gating = gating;
    d.tolerance = tol;
    out.push_back(Identity{std::move(d), std::move(f)});
    return *this;
  }
};

/// Slug used in ids.
inline std::string slug(K c) { return connections::name(c); }

// Lifted (tangent-bundle) machinery shared by several groups.

/// Adapted components, as values, of [lift a, lift b].
struct LiftBrackets {
  explicit LiftBrackets(const geometry::Frame& f);
  const std::vector<double>& h(int a, int b) const { return h_[a * m_ + b]; }
  const std::vector<double>& v(int a, int b) const { return v_[a * m_ + b]; }
  int m_;
  std::vector<std::vector<double>> h_, v_;
};

/// Horizontal and vertical parts of a lift or of a combination given by
/// adapted values.
struct Split {
  Vec h, v;
};
Split lift_split(int n, int a);

/// bold T(X, Y) = Q(hX, hY) + T(vX, hY) - T(vY, hX)
Vec bold_torsion(Ops& o, const Split& x, const Split& y);
/// bold K(X, Y) w = R(hX, hY)w + P(hX, vY)w - P(hY, vX)w + S(vX, vY)w
Vec bold_curvature(Ops& o, const Split& x, const Split& y, const Arg& w);

/// Curvature by direct composition of covariant derivatives along basis
/// lifts a, b applied to e_z: -D_a D_b e_z + D_b D_a e_z + D_[a,b] e_z.
Vec composed_curvature(PointContext& ctx, K c, const LiftBrackets& br, int a, int b, int z);

/// Vertical adapted part of [delta_a, delta_b], i.e. the directly computed
/// Barthel curvature, as an (1,2) tensor in argument order.
PiTensor bracket_curvature(const LiftBrackets& br, int n);

void register_general(std::vector<Identity>& out);
void register_cartan(std::vector<Identity>& out);
void register_berwald(std::vector<Identity>& out);
void register_chern(std::vector<Identity>& out);
void register_hashiguchi(std::vector<Identity>& out);
void register_tables(std::vector<Identity>& out);

}  // namespace finsler::identities::detail
