// Cartan connection: axioms and the properties of T, S, P and R.

#include <algorithm>

#include "ops.hpp"

namespace finsler::identities::detail {

namespace {

// 2 g(D_X rho Y, rho Z) against the torsion-aware Koszul expression, over
// all triples of basis lifts.
double koszul(Eval& e) {
  Ops o(e, CA);
  auto& ctx = e.ctx();
  const auto& f = ctx.frame();
  const int n = f.n, m = 2 * n;
  const auto& Hc = e.t(Obj::Hc, CA);
  const auto& Vc = e.t(Obj::Vc, CA);
  const auto& G = e.t(Obj::G);
  LiftBrackets br(f);
  auto rho = [&](int a) { return lift_split(n, a).h; };
  // X . g(rho Y, rho Z)
  auto dg = [&](int x, int y, int z) {
    if (y >= n || z >= n) return 0.0;
    const Jet& gyz = f.g(y, z);
    return x < n ? f.delta(gyz, x).value() : f.vdot(gyz, x - n).value();
  };
  auto gg = [&](const Vec& a, const Vec& b) { return dot(G, a, b); };
  double res = 0.0;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z) {
        Split sx = lift_split(n, x), sy = lift_split(n, y), sz = lift_split(n, z);
        Vec dxy(static_cast<std::size_t>(n), 0.0);
        if (y < n) dxy = x < n ? vec(Hc, {Arg::basis(x), Arg::basis(y)}) : vec(Vc, {Arg::basis(x - n), Arg::basis(y)});
        const double lhs = 2.0 * gg(dxy, rho(z));
        auto brh = [&](int a, int b) { return br.h(a, b); };
        const double rhs = dg(x, y, z) + dg(y, z, x) - dg(z, x, y) - gg(rho(x), bold_torsion(o, sy, sz)) +
                           gg(rho(y), bold_torsion(o, sz, sx)) + gg(rho(z), bold_torsion(o, sx, sy)) -
                           gg(rho(x), brh(y, z)) + gg(rho(y), brh(z, x)) + gg(rho(z), brh(x, y));
        e.note(lhs);
        res = std::max(res, std::abs(lhs - rhs));
      }
  return res;
}

}  // namespace

void register_cartan(std::vector<Identity>& out) {
  Builder b{out, "Cartan connection", {CA}};

  b.group = "Cartan axioms";
  b.add("C0.a", "D_{beta X} g = 0", "(0,3)", 4, [](Eval& e) { return magnitude(e, Obj::G, CA, Der::H, CA); });
  b.add("C0.b", "D_{gamma X} g = 0", "(0,3)", 4, [](Eval& e) { return magnitude(e, Obj::G, CA, Der::V, CA); });
  b.add("C0.c", "Q = 0", "(1,2)", 4, [](Eval& e) { return magnitude(e, Obj::Q, CA); });
  b.add("C0.d",
        "2g(D_X rho Y, rho Z) = X.g(rho Y,rho Z) + Y.g(rho Z,rho X) - Z.g(rho X,rho Y) - g(rho X,T(Y,Z)) + "
        "g(rho Y,T(Z,X)) + g(rho Z,T(X,Y)) - g(rho X,rho[Y,Z]) + g(rho Y,rho[Z,X]) + g(rho Z,rho[X,Y])",
        "scalar on lifts", 4, koszul);

  b.group = "Cartan v-torsion T";
  b.add("C1.a", "T(X,Y,Z) = T(X,Z,Y)", "(0,3)", 4, [](Eval& e) {
    Ops o(e, CA);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.Tl(X, Y, Z) - o.Tl(X, Z, Y); });
  });
  b.add("C1.b", "(D_W T)(X,Y,Z) = g((D_W T)(X,Y),Z) = g((D_W T)(X,Z),Y) for W horizontal and vertical", "(0,4)",
        4, [](Eval& e) {
          Ops o(e, CA);
          return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
            double r = 0.0;
            for (bool hor : {true, false}) {
              double low = hor ? o.Dhl(Obj::Tl, W, {X, Y, Z}) : o.Dvl(Obj::Tl, W, {X, Y, Z});
              Vec dxy = hor ? o.Dh(Obj::T, W, {X, Y}) : o.Dv(Obj::T, W, {X, Y});
              Vec dxz = hor ? o.Dh(Obj::T, W, {X, Z}) : o.Dv(Obj::T, W, {X, Z});
              double a = scal(e.t(Obj::G), {dxy, Z}), c = scal(e.t(Obj::G), {dxz, Y});
              r = std::max({r, std::abs(low - a), std::abs(a - c)});
            }
            return r;
          });
        });
  b.add("C1.c", "T(X,eta) = 0", "(1,1)", 4, [](Eval& e) {
    Ops o(e, CA);
    const Arg eta = o.eta();
    return sweep1(e, [&](auto& X) { return o.T(X, eta); });
  });
  b.add("C1.d", "(D_{gamma X}T)(Y,Z) = (D_{gamma Y}T)(X,Z)", "(1,3)", 4, [](Eval& e) {
    Ops o(e, CA);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.Dv(Obj::T, X, {Y, Z}) - o.Dv(Obj::T, Y, {X, Z}); });
  });
  b.add("C1.e", "(D_{gamma eta}T)(X,Y) = -T(X,Y)", "(1,2)", 4, [](Eval& e) {
    Ops o(e, CA);
    const Arg eta = o.eta();
    return sweep2(e, [&](auto& X, auto& Y) { return o.Dv(Obj::T, eta, {X, Y}) + o.T(X, Y); });
  });
  b.add("C1.f", "T(X,Y,Z) is totally symmetric", "(0,3)", 4, [](Eval& e) {
    Ops o(e, CA);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) {
      const double t = o.Tl(X, Y, Z);
      return worst({t - o.Tl(Y, X, Z), t - o.Tl(X, Z, Y), t - o.Tl(Z, Y, X)});
    });
  });

  b.group = "Cartan v-curvature S";
  b.add("C2.a", "S(X,Y,Z,W) = -S(Y,X,Z,W)", "(0,4)", 4, [](Eval& e) {
    Ops o(e, CA);
    return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) { return o.Sl(X, Y, Z, W) + o.Sl(Y, X, Z, W); });
  });
  b.add("C2.b", "S(X,Y,Z,W) = -S(X,Y,W,Z)", "(0,4)", 4, [](Eval& e) {
    Ops o(e, CA);
    return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) { return o.Sl(X, Y, Z, W) + o.Sl(X, Y, W, Z); });
  });
  b.add("C2.c", "S(X,Y)Z = T(X,T(Y,Z)) - T(Y,T(X,Z))", "(1,3)", 4, [](Eval& e) {
    Ops o(e, CA);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) {
      return o.S(X, Y, Z) - o.T(X, o.T(Y, Z)) + o.T(Y, o.T(X, Z));
    });
  });
  b.add("C2.d", "S(X,Y,Z,W) = g(T(X,W), T(Y,Z)) - g(T(Y,W), T(X,Z))", "(0,4)", 4, [](Eval& e) {
    Ops o(e, CA);
    return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
      return o.Sl(X, Y, Z, W) - (o.g(o.T(X, W), o.T(Y, Z)) - o.g(o.T(Y, W), o.T(X, Z)));
    });
  });
  b.add("C2.e", "S(Z,W,X,Y) = S(X,Y,Z,W)", "(0,4)", 4, [](Eval& e) {
    Ops o(e, CA);
    return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) { return o.Sl(Z, W, X, Y) - o.Sl(X, Y, Z, W); });
  });
  b.add("C2.f", "S(X,eta)Y = S(eta,X)Y = Shat(X,Y) = 0", "(1,2)", 4, [](Eval& e) {
    Ops o(e, CA);
    const Arg eta = o.eta();
    return sweep2(e, [&](auto& X, auto& Y) {
      return worst({max_abs(o.S(X, eta, Y)), max_abs(o.S(eta, X, Y)), max_abs(o.Sh(X, Y))});
    });
  });
  b.add("C2.g", "cyclic_{X,Y,Z}(D_{gamma X}S)(Y,Z,W) = 0", "(1,4)", 5, [](Eval& e) {
    Ops o(e, CA);
    return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
      auto f = [&](const Arg& x, const Arg& y, const Arg& z) { return o.Dv(Obj::S, x, {y, z, W}); };
      return cyclic(f, X, Y, Z);
    });
  });
  b.add("C2.h", "cyclic_{X,Y,Z} S(X,Y)Z = 0", "(1,3)", 4, [](Eval& e) {
    Ops o(e, CA);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) {
      auto f = [&](const Arg& x, const Arg& y, const Arg& z) { return o.S(x, y, z); };
      return cyclic(f, X, Y, Z);
    });
  });
  b.add("C2.i", "(D_{gamma eta}S)(X,Y,Z) = -2 S(X,Y)Z", "(1,3)", 5, [](Eval& e) {
    Ops o(e, CA);
    const Arg eta = o.eta();
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.Dv(Obj::S, eta, {X, Y, Z}) + 2.0 * o.S(X, Y, Z); });
  });
  b.add("C2.j",
        "(D_{beta Z}S)(X,Y,W) = (D_{gamma X}P)(Z,Y,W) - (D_{gamma Y}P)(Z,X,W) - S(Phat(Z,Y),X)W + S(Phat(Z,X),Y)W - "
        "P(T(Y,Z),X)W + P(T(X,Z),Y)W",
        "(1,4)", 5, [](Eval& e) {
          Ops o(e, CA);
          return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
            Vec rhs = o.Dv(Obj::P, X, {Z, Y, W}) - o.Dv(Obj::P, Y, {Z, X, W}) - o.S(o.Ph(Z, Y), X, W) +
                      o.S(o.Ph(Z, X), Y, W) - o.P(o.T(Y, Z), X, W) + o.P(o.T(X, Z), Y, W);
            return o.Dh(Obj::S, Z, {X, Y, W}) - rhs;
          });
        });

  b.group = "Cartan hv-curvature P";
  b.add("C3.a", "P(X,Y,Z,W) = -P(X,Y,W,Z)", "(0,4)", 4, [](Eval& e) {
    Ops o(e, CA);
    return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) { return o.Pl(X, Y, Z, W) + o.Pl(X, Y, W, Z); });
  });
  b.add("C3.b",
        "P(X,Y)Z - P(Z,Y)X = (D_{beta Z}T)(Y,X) - (D_{beta X}T)(Y,Z) - T(Phat(Z,Y),X) + T(Phat(X,Y),Z)", "(1,3)", 4,
        [](Eval& e) {
          Ops o(e, CA);
          return sweep3(e, [&](auto& X, auto& Y, auto& Z) {
            Vec rhs = o.Dh(Obj::T, Z, {Y, X}) - o.Dh(Obj::T, X, {Y, Z}) - o.T(o.Ph(Z, Y), X) + o.T(o.Ph(X, Y), Z);
            return o.P(X, Y, Z) - o.P(Z, Y, X) - rhs;
          });
        });
  b.add("C3.c",
        "P(X,Y,Z,W) = g((D_{beta Z}T)(X,Y),W) - g((D_{beta W}T)(X,Y),Z) + g(T(X,Z),Phat(W,Y)) - "
        "g(T(X,W),Phat(Z,Y))",
        "(0,4)", 4, [](Eval& e) {
          Ops o(e, CA);
          return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
            const double rhs = scal(e.t(Obj::G), {o.Dh(Obj::T, Z, {X, Y}), W}) -
                               scal(e.t(Obj::G), {o.Dh(Obj::T, W, {X, Y}), Z}) + o.g(o.T(X, Z), o.Ph(W, Y)) -
                               o.g(o.T(X, W), o.Ph(Z, Y));
            return o.Pl(X, Y, Z, W) - rhs;
          });
        });
  b.add("C3.d", "Phat(eta,X) = 0", "(1,1)", 4, [](Eval& e) {
    Ops o(e, CA);
    const Arg eta = o.eta();
    return sweep1(e, [&](auto& X) { return o.Ph(eta, X); });
  });
  b.add("C3.e", "Phat(X,Y) = (D_{beta eta}T)(X,Y)", "(1,2)", 4, [](Eval& e) {
    Ops o(e, CA);
    const Arg eta = o.eta();
    return sweep2(e, [&](auto& X, auto& Y) { return o.Ph(X, Y) - o.Dh(Obj::T, eta, {X, Y}); });
  });
  b.add("C3.f", "Phat(X,Y) = Phat(Y,X)", "(1,2)", 4, [](Eval& e) {
    Ops o(e, CA);
    return sweep2(e, [&](auto& X, auto& Y) { return o.Ph(X, Y) - o.Ph(Y, X); });
  });
  b.add("C3.g", "P(eta,X)Y = P(X,eta)Y = 0", "(1,2)", 4, [](Eval& e) {
    Ops o(e, CA);
    const Arg eta = o.eta();
    return sweep2(e, [&](auto& X, auto& Y) { return worst({max_abs(o.P(eta, X, Y)), max_abs(o.P(X, eta, Y))}); });
  });
  b.add("C3.h", "(D_{gamma eta}P)(X,Y,Z) = -P(X,Y)Z", "(1,3)", 5, [](Eval& e) {
    Ops o(e, CA);
    const Arg eta = o.eta();
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.Dv(Obj::P, eta, {X, Y, Z}) + o.P(X, Y, Z); });
  });
  b.add("C3.i", "P(X,Y)Z = P(Y,X)Z - (D_{beta eta}S)(X,Y,Z)", "(1,3)", 5, [](Eval& e) {
    Ops o(e, CA);
    const Arg eta = o.eta();
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) {
      return o.P(X, Y, Z) - o.P(Y, X, Z) + o.Dh(Obj::S, eta, {X, Y, Z});
    });
  });

  b.group = "Cartan h-curvature R";
  b.add("C4.a", "R(X,Y)Z = -R(Y,X)Z", "(1,3)", 4, [](Eval& e) {
    Ops o(e, CA);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.R(X, Y, Z) + o.R(Y, X, Z); });
  });
  b.add("C4.b", "R(X,Y,Z,W) = -R(X,Y,W,Z)", "(0,4)", 4, [](Eval& e) {
    Ops o(e, CA);
    return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) { return o.Rl(X, Y, Z, W) + o.Rl(X, Y, W, Z); });
  });
  b.add("C4.c", "Rhat(X,Y) = vertical part of [beta X, beta Y], computed directly", "(1,2)", 4, [](Eval& e) {
    const auto& f = e.ctx().frame();
    LiftBrackets br(f);
    PiTensor direct = bracket_curvature(br, f.n);
    e.note(direct);
    return geometry::max_abs(e.t(Obj::Rhat, CA) - direct);
  });
  b.add("C4.d", "cyclic{R(X,Y)Z - T(Rhat(X,Y),Z)} = 0", "(1,3)", 4, [](Eval& e) {
    Ops o(e, CA);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) {
      auto f = [&](const Arg& x, const Arg& y, const Arg& z) { return o.R(x, y, z) - o.T(o.Rh(x, y), z); };
      return cyclic(f, X, Y, Z);
    });
  });
  b.add("C4.e", "cyclic_{X,Y,Z}{(D_{beta X}R)(Y,Z,W) + P(X,Rhat(Y,Z))W} = 0", "(1,4)", 5, [](Eval& e) {
    Ops o(e, CA);
    return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
      auto f = [&](const Arg& x, const Arg& y, const Arg& z) {
        return o.Dh(Obj::R, x, {y, z, W}) + o.P(x, o.Rh(y, z), W);
      };
      return cyclic(f, X, Y, Z);
    });
  });
  b.add("C4.f",
        "(D_{gamma X}R)(Y,Z,W) + (D_{beta Y}P)(Z,X,W) - (D_{beta Z}P)(Y,X,W) - P(Z,Phat(Y,X))W + R(T(X,Y),Z)W - "
        "S(Rhat(Y,Z),X)W + P(Y,Phat(Z,X))W - R(T(X,Z),Y)W = 0",
        "(1,4)", 5, [](Eval& e) {
          Ops o(e, CA);
          return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
            return o.Dv(Obj::R, X, {Y, Z, W}) + o.Dh(Obj::P, Y, {Z, X, W}) - o.Dh(Obj::P, Z, {Y, X, W}) -
                   o.P(Z, o.Ph(Y, X), W) + o.R(o.T(X, Y), Z, W) - o.S(o.Rh(Y, Z), X, W) + o.P(Y, o.Ph(Z, X), W) -
                   o.R(o.T(X, Z), Y, W);
          });
        });
  b.add("C4.g", "(D_{gamma eta}R)(X,Y,Z) = 0", "(1,3)", 5, [](Eval& e) {
    Ops o(e, CA);
    const Arg eta = o.eta();
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.Dv(Obj::R, eta, {X, Y, Z}); });
  });
}

}  // namespace finsler::identities::detail
