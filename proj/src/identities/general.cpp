// Identities every regular connection satisfies, instantiated for all four.

#include <algorithm>

#include "ops.hpp"

namespace finsler::identities::detail {

namespace {

std::vector<Jet> low(std::vector<Jet> v) {
  for (auto& j : v) j = j.truncated(std::min(1, j.order()));
  return v;
}

// Pi-vector fields used by the bracket checks: e_0..e_{n-1} and eta.
std::vector<std::vector<Jet>> test_fields(const geometry::Frame& f) {
  std::vector<std::vector<Jet>> out;
  for (int i = 0; i < f.n; ++i) out.push_back(low(basis_field(f, i)));
  out.push_back(low(eta_field(f)));
  return out;
}

std::vector<double> cov(const std::vector<Jet>& Z, const std::vector<Jet>& hx, const std::vector<Jet>& vy,
                        const ConnectionData& c) {
  return values(connections::covariant_along(Z, hx, vy, c));
}

// which: 0 [beta X, beta Y], 1 [gamma X, beta Y], 2 [gamma X, gamma Y]
double bracket_lemma(Eval& e, K c, int which) {
  Ops o(e, c);
  auto& ctx = e.ctx();
  const auto& f = ctx.frame();
  const auto& conn = ctx.connection(c);
  const auto fields = test_fields(f);
  std::vector<Jet> none(static_cast<std::size_t>(f.n), f.zero());
  auto lift = [&](bool horizontal, const std::vector<Jet>& X) {
    VectorField L = horizontal ? horizontal_lift(f, X) : vertical_lift(f, X);
    for (auto& j : L.c) j = j.truncated(std::min(1, j.order()));
    return L;
  };
  double worst_res = 0.0;
  for (const auto& X : fields)
    for (const auto& Y : fields) {
      const Arg x = values(X), y = values(Y);
      Adapted br = adapted(f, bracket(lift(which == 0, X), lift(which != 2, Y)));
      Vec bh = values(br.h), bv = values(br.v), h, v;
      if (which == 0) {
        v = o.Rh(x, y);
        h = cov(Y, X, none, conn) - cov(X, Y, none, conn) - o.Q(x, y);
      } else if (which == 1) {
        v = -(o.Ph(y, x) + cov(X, Y, none, conn));
        h = cov(Y, none, X, conn) - o.T(x, y);
      } else {
        h = Vec(static_cast<std::size_t>(f.n), 0.0);
        v = cov(Y, none, X, conn) - cov(X, none, Y, conn) + o.Sh(x, y);
      }
      e.note(max_abs(bh));
      e.note(max_abs(bv));
      worst_res = std::max({worst_res, max_abs(bh - h), max_abs(bv - v)});
    }
  return worst_res;
}

// Lifted first Bianchi: sum over cyclic (X,Y,Z) of K(X,Y) rho Z + D_X T(Y,Z) + T(X,[Y,Z])
double lifted_first(Eval& e, K c) {
  Ops o(e, c);
  auto& ctx = e.ctx();
  const auto& f = ctx.frame();
  const int n = f.n, m = 2 * n;
  const auto& conn = ctx.connection(c);
  const auto& tor = ctx.torsions(c);
  LiftBrackets br(f);
  std::vector<Jet> zero(static_cast<std::size_t>(n), f.zero());
  // bold T(lift y, lift z) as a jet field
  auto field = [&](int y, int z) {
    std::vector<Jet> out;
    for (int i = 0; i < n; ++i) {
      if (y < n && z < n)
        out.push_back(tor.Q(i, y, z));
      else if (y >= n && z < n)
        out.push_back(tor.T(i, y - n, z));
      else if (y < n && z >= n)
        out.push_back(-tor.T(i, z - n, y));
      else
        out.push_back(f.zero());
    }
    return low(out);
  };
  auto term = [&](int x, int y, int z) {
    Split sx = lift_split(n, x), sy = lift_split(n, y), sz = lift_split(n, z);
    std::vector<Jet> hx = zero, vy = zero;
    (x < n ? hx[x] : vy[x - n]) += 1.0;
    Vec d = cov(field(y, z), hx, vy, conn);
    Vec k = bold_curvature(o, sx, sy, sz.h);
    Vec t = bold_torsion(o, sx, Split{br.h(y, z), br.v(y, z)});
    e.note(max_abs(d));
    return k + d + t;
  };
  double w = 0.0;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z) w = std::max(w, max_abs(term(x, y, z) + term(y, z, x) + term(z, x, y)));
  return w;
}

// Lifted second Bianchi on W = e_w:
// sum over cyclic (X,Y,Z) of D_Z(K(X,Y)W) - K(X,Y) D_Z W - K([X,Y],Z) W
double lifted_second(Eval& e, K c) {
  Ops o(e, c);
  auto& ctx = e.ctx();
  const auto& f = ctx.frame();
  const int n = f.n, m = 2 * n;
  const auto& conn = ctx.connection(c);
  const auto& R = ctx.jets(Obj::R, c);
  const auto& P = ctx.jets(Obj::P, c);
  const auto& S = ctx.jets(Obj::S, c);
  const auto& Hc = e.t(Obj::Hc, c);
  const auto& Vc = e.t(Obj::Vc, c);
  LiftBrackets br(f);
  std::vector<Jet> zero(static_cast<std::size_t>(n), f.zero());
  auto field = [&](int x, int y, int w) {
    std::vector<Jet> out;
    for (int i = 0; i < n; ++i) {
      if (x < n && y < n)
        out.push_back(R(i, x, y, w));
      else if (x < n)
        out.push_back(P(i, x, y - n, w));
      else if (y < n)
        out.push_back(-P(i, y, x - n, w));
      else
        out.push_back(S(i, x - n, y - n, w));
    }
    return low(out);
  };
  auto term = [&](int x, int y, int z, int w) {
    Split sx = lift_split(n, x), sy = lift_split(n, y);
    std::vector<Jet> hz = zero, vz = zero;
    (z < n ? hz[z] : vz[z - n]) += 1.0;
    Vec d = cov(field(x, y, w), hz, vz, conn);
    Vec dw = z < n ? vec(Hc, {Arg::basis(z), Arg::basis(w)}) : vec(Vc, {Arg::basis(z - n), Arg::basis(w)});
    Vec k1 = bold_curvature(o, sx, sy, dw);
    Vec k2 = bold_curvature(o, Split{br.h(x, y), br.v(x, y)}, lift_split(n, z), Arg::basis(w));
    e.note(max_abs(d));
    return d - k1 - k2;
  };
  double res = 0.0;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        for (int w = 0; w < n; ++w)
          res = std::max(res, max_abs(term(x, y, z, w) + term(y, z, x, w) + term(z, x, y, w)));
  return res;
}

// Curvature against the metric:
// g(K(X,Y)Z,W) + g(K(X,Y)W,Z) = D_X(D_Y g)(W,Z) - D_Y(D_X g)(W,Z) - (D_[X,Y] g)(W,Z)
double lifted_metric(Eval& e, K c) {
  Ops o(e, c);
  auto& ctx = e.ctx();
  const auto& f = ctx.frame();
  const int n = f.n, m = 2 * n;
  const auto& conn = ctx.connection(c);
  const auto& hgj = ctx.deriv_jets(Obj::G, c, Der::H, c);
  const auto& vgj = ctx.deriv_jets(Obj::G, c, Der::V, c);
  const auto& hg = e.h(Obj::G, c, c);
  const auto& vg = e.v(Obj::G, c, c);
  LiftBrackets br(f);
  // dd[y][x](w, z) = D_x(D_y g)(w, z)
  std::vector<std::vector<PiTensor>> dd(static_cast<std::size_t>(m));
  for (int y = 0; y < m; ++y) {
    JetTensor slice(n, geometry::slots({'d', 'd'}), f.zero());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Jet& s = y < n ? hgj(i, j, y) : vgj(i, j, y - n);
        slice(i, j) = s.truncated(std::min(1, s.order()));
      }
    PiTensor dh = geometry::values(connections::h_cov_deriv(slice, conn));
    PiTensor dv = geometry::values(connections::v_cov_deriv(slice, conn));
    e.note(dh);
    e.note(dv);
    for (int x = 0; x < m; ++x) {
      PiTensor t(n, geometry::slots({'d', 'd'}), 0.0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(i, j) = x < n ? dh(i, j, x) : dv(i, j, x - n);
      dd[y].push_back(t);
    }
  }
  double res = 0.0;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      Split sx = lift_split(n, x), sy = lift_split(n, y);
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          const Arg Z = Arg::basis(z), W = Arg::basis(w);
          Vec kz = bold_curvature(o, sx, sy, Z), kw = bold_curvature(o, sx, sy, W);
          double lhs = scal(e.t(Obj::G), {kz, W}) + scal(e.t(Obj::G), {kw, Z});
          double db = 0.0;
          for (int k = 0; k < n; ++k) db += br.h(x, y)[k] * hg(w, z, k) + br.v(x, y)[k] * vg(w, z, k);
          double rhs = dd[y][x](w, z) - dd[x][y](w, z) - db;
          res = std::max(res, std::abs(lhs - rhs));
        }
    }
  return res;
}

}  // namespace

void register_general(std::vector<Identity>& out) {
  for (K c : connections::kAllConnections) {
    const std::string s = slug(c);
    Builder b{out, "general connection", {c}};

    // Berwald and Hashiguchi curvatures lose one more order than Cartan and Chern.
    const int curv = c == BE || c == HA ? 5 : 4;
    const int dcurv = curv + 1;

    b.group = "regularity";
    b.add("G0." + s + ".regular",
          "T(X,eta) = 0; D_{beta X} eta = 0; D_{gamma X} eta = X; R(X,Y)eta = Rhat(X,Y); P(X,Y)eta = Phat(X,Y); "
          "S(X,Y)eta = Shat(X,Y)",
          "(1,2)", c == BE || c == HA ? 5 : 4, [c](Eval& e) {
            Ops o(e, c);
            const Arg eta = o.eta();
            double r = sweep1(e, [&](const Arg& x) { return worst(o.T(x, eta)); });
            r = std::max(r, geometry::max_abs(e.h(Obj::Eta, c, c)));
            PiTensor id = e.v(Obj::Eta, c, c);
            for (int i = 0; i < e.n(); ++i) id(i, i) -= 1.0;
            r = std::max(r, geometry::max_abs(id));
            r = std::max(r, sweep2(e, [&](const Arg& x, const Arg& y) {
                           return worst({max_abs(o.R(x, y, eta) - o.Rh(x, y)), max_abs(o.P(x, y, eta) - o.Ph(x, y)),
                                         max_abs(o.S(x, y, eta) - o.Sh(x, y))});
                         }));
            return r;
          });

    b.group = "bracket decomposition";
    b.add("G0." + s + ".bracket.a",
          "[beta X, beta Y] = gamma Rhat(X,Y) + beta(D_{beta X} Y - D_{beta Y} X - Q(X,Y))", "vector field", 4,
          [c](Eval& e) { return bracket_lemma(e, c, 0); });
    b.add("G0." + s + ".bracket.b",
          "[gamma X, beta Y] = -gamma(Phat(Y,X) + D_{beta Y} X) + beta(D_{gamma X} Y - T(X,Y))", "vector field", 4,
          [c](Eval& e) { return bracket_lemma(e, c, 1); });
    b.add("G0." + s + ".bracket.c", "[gamma X, gamma Y] = gamma(D_{gamma X} Y - D_{gamma Y} X + Shat(X,Y))",
          "vector field", 4, [c](Eval& e) { return bracket_lemma(e, c, 2); });


    b.group = "first Bianchi (general)";
    b.add("G1." + s + ".a",
          "S(X,Y)Z = (D_{gamma Y}T)(X,Z) - (D_{gamma X}T)(Y,Z) + T(X,T(Y,Z)) - T(Y,T(X,Z)) + T(Shat(X,Y),Z)", "(1,3)",
          curv, [c](Eval& e) {
            Ops o(e, c);
            return sweep3(e, [&](const Arg& X, const Arg& Y, const Arg& Z) {
              return o.S(X, Y, Z) - (o.Dv(Obj::T, Y, {X, Z}) - o.Dv(Obj::T, X, {Y, Z}) + o.T(X, o.T(Y, Z)) -
                                     o.T(Y, o.T(X, Z)) + o.T(o.Sh(X, Y), Z));
            });
          });
    b.add("G1." + s + ".b",
          "P(X,Y)Z - P(Z,Y)X = (D_{beta Z}T)(Y,X) - (D_{beta X}T)(Y,Z) - (D_{gamma Y}Q)(X,Z) - T(Y,Q(X,Z)) - "
          "T(Phat(Z,Y),X) + T(Phat(X,Y),Z) - Q(Z,T(Y,X)) + Q(X,T(Y,Z))",
          "(1,3)", c == BE || c == HA ? 5 : 4, [c](Eval& e) {
            Ops o(e, c);
            return sweep3(e, [&](const Arg& X, const Arg& Y, const Arg& Z) {
              Vec rhs = o.Dh(Obj::T, Z, {Y, X}) - o.Dh(Obj::T, X, {Y, Z}) - o.Dv(Obj::Q, Y, {X, Z}) -
                        o.T(Y, o.Q(X, Z)) - o.T(o.Ph(Z, Y), X) + o.T(o.Ph(X, Y), Z) - o.Q(Z, o.T(Y, X)) +
                        o.Q(X, o.T(Y, Z));
              return o.P(X, Y, Z) - o.P(Z, Y, X) - rhs;
            });
          });
    b.add("G1." + s + ".c", "cyclic{R(X,Y)Z - T(Rhat(X,Y),Z)} = cyclic{Q(X,Q(Y,Z)) - (D_{beta X}Q)(Y,Z)}", "(1,3)",
          curv, [c](Eval& e) {
            Ops o(e, c);
            return sweep3(e, [&](const Arg& X, const Arg& Y, const Arg& Z) {
              auto f = [&](const Arg& x, const Arg& y, const Arg& z) {
                return o.R(x, y, z) - o.T(o.Rh(x, y), z) - o.Q(x, o.Q(y, z)) + o.Dh(Obj::Q, x, {y, z});
              };
              return cyclic(f, X, Y, Z);
            });
          });

    b.group = "second Bianchi (general)";
    b.add("G2." + s + ".a", "cyclic_{X,Y,Z}{(D_{gamma X}S)(Y,Z,W) - S(Shat(X,Y),Z)W} = 0", "(1,4)", c == CH ? 4 : 5,
          [c](Eval& e) {
            Ops o(e, c);
            return sweep4(e, [&](const Arg& X, const Arg& Y, const Arg& Z, const Arg& W) {
              auto f = [&](const Arg& x, const Arg& y, const Arg& z) {
                return o.Dv(Obj::S, x, {y, z, W}) - o.S(o.Sh(x, y), z, W);
              };
              return cyclic(f, X, Y, Z);
            });
          });
    b.add("G2." + s + ".b",
          "(D_{beta Z}S)(X,Y,W) - (D_{gamma X}P)(Z,Y,W) + (D_{gamma Y}P)(Z,X,W) = P(T(X,Z),Y)W - P(T(Y,Z),X)W - "
          "P(Z,Shat(X,Y))W + S(Phat(Z,X),Y)W - S(Phat(Z,Y),X)W",
          "(1,4)", dcurv, [c](Eval& e) {
            Ops o(e, c);
            return sweep4(e, [&](const Arg& X, const Arg& Y, const Arg& Z, const Arg& W) {
              Vec lhs = o.Dh(Obj::S, Z, {X, Y, W}) - o.Dv(Obj::P, X, {Z, Y, W}) + o.Dv(Obj::P, Y, {Z, X, W});
              Vec rhs = o.P(o.T(X, Z), Y, W) - o.P(o.T(Y, Z), X, W) - o.P(Z, o.Sh(X, Y), W) +
                        o.S(o.Ph(Z, X), Y, W) - o.S(o.Ph(Z, Y), X, W);
              return lhs - rhs;
            });
          });
    b.add("G2." + s + ".c",
          "(D_{gamma X}R)(Y,Z,W) + (D_{beta Y}P)(Z,X,W) - (D_{beta Z}P)(Y,X,W) = P(Z,Phat(Y,X))W - "
          "P(Y,Phat(Z,X))W - P(Q(Y,Z),X)W + R(T(X,Z),Y)W - R(T(X,Y),Z)W + S(Rhat(Y,Z),X)W",
          "(1,4)", dcurv, [c](Eval& e) {
            Ops o(e, c);
            return sweep4(e, [&](const Arg& X, const Arg& Y, const Arg& Z, const Arg& W) {
              Vec lhs = o.Dv(Obj::R, X, {Y, Z, W}) + o.Dh(Obj::P, Y, {Z, X, W}) - o.Dh(Obj::P, Z, {Y, X, W});
              Vec rhs = o.P(Z, o.Ph(Y, X), W) - o.P(Y, o.Ph(Z, X), W) - o.P(o.Q(Y, Z), X, W) +
                        o.R(o.T(X, Z), Y, W) - o.R(o.T(X, Y), Z, W) + o.S(o.Rh(Y, Z), X, W);
              return lhs - rhs;
            });
          });
    b.add("G2." + s + ".d", "cyclic_{X,Y,Z}{(D_{beta X}R)(Y,Z,W) + P(X,Rhat(Y,Z))W + R(Q(X,Y),Z)W} = 0", "(1,4)",
          dcurv, [c](Eval& e) {
            Ops o(e, c);
            return sweep4(e, [&](const Arg& X, const Arg& Y, const Arg& Z, const Arg& W) {
              auto f = [&](const Arg& x, const Arg& y, const Arg& z) {
                return o.Dh(Obj::R, x, {y, z, W}) + o.P(x, o.Rh(y, z), W) + o.R(o.Q(x, y), z, W);
              };
              return cyclic(f, X, Y, Z);
            });
          });

    b.group = "lifted Bianchi and metricity";
    b.add("G3." + s + ".a", "cyclic{K(X,Y) rho Z + D_X T(Y,Z) + T(X,[Y,Z])} = 0 over lifts X,Y,Z", "(1,3) on lifts",
          curv, [c](Eval& e) { return lifted_first(e, c); });
    b.add("G3." + s + ".b", "cyclic{D_Z(K(X,Y)W) - K(X,Y) D_Z W - K([X,Y],Z)W} = 0 over lifts X,Y,Z",
          "(1,4) on lifts", dcurv, [c](Eval& e) { return lifted_second(e, c); });
    b.add("G3." + s + ".c",
          "g(K(X,Y)Z,W) + g(K(X,Y)W,Z) = D_X(D_Y g)(W,Z) - D_Y(D_X g)(W,Z) - (D_[X,Y] g)(W,Z)", "(0,4) on lifts",
          curv, [c](Eval& e) { return lifted_metric(e, c); });
  }
}

}  // namespace finsler::identities::detail
