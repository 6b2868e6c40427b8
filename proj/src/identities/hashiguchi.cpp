// Hashiguchi connection.

#include <algorithm>

#include "ops.hpp"

namespace finsler::identities::detail {

void register_hashiguchi(std::vector<Identity>& out) {
  Builder b{out, "Hashiguchi connection", {HA}};

  b.group = "Hashiguchi structure";
  b.add("S0.a", "T(X,Y,Z) = T(X,Z,Y)", "(0,3)", 4, [](Eval& e) {
    Ops o(e, HA);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.Tl(X, Y, Z) - o.Tl(X, Z, Y); });
  });
  b.add("S0.b", "Q = 0", "(1,2)", 4, [](Eval& e) { return magnitude(e, Obj::Q, HA); });
  b.add("S0.c", "Phat = 0", "(1,2)", 4, [](Eval& e) { return magnitude(e, Obj::Phat, HA); });
  b.conns = {HA, CA};
  b.add("S0.d", "T = T_Cartan", "(1,2)", 4, [](Eval& e) {
    Ops o(e, HA), c(e, CA);
    return sweep2(e, [&](auto& X, auto& Y) { return o.T(X, Y) - c.T(X, Y); });
  });

  b.conns = {HA};
  b.group = "Hashiguchi metricity";
  b.add("S1.a", "D_{gamma X} g = 0", "(0,3)", 4, [](Eval& e) { return magnitude(e, Obj::G, HA, Der::V, HA); });
  b.conns = {HA, CA};
  b.add("S1.b", "(D_{beta X}g)(Y,Z) = -2 g(Phat(X,Y),Z)", "(0,3)", 4, [](Eval& e) {
    Ops o(e, HA), c(e, CA);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.Dhl(Obj::G, X, {Y, Z}) + 2.0 * c.Phl(X, Y, Z); });
  });

  b.conns = {HA};
  b.group = "Hashiguchi v-curvature";
  b.add("S2.a", "S(X,Y)Z = -S(Y,X)Z", "(1,3)", 5, [](Eval& e) {
    Ops o(e, HA);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.S(X, Y, Z) + o.S(Y, X, Z); });
  });
  b.add("S2.b", "S(X,Y,Z,W) = -S(X,Y,W,Z)", "(0,4)", 5, [](Eval& e) {
    Ops o(e, HA);
    return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) { return o.Sl(X, Y, Z, W) + o.Sl(X, Y, W, Z); });
  });
  b.conns = {HA, CA};
  b.add("S2.c", "S(X,Y,Z,W) = S_Cartan(X,Y,Z,W) = g(T(X,W),T(Y,Z)) - g(T(Y,W),T(X,Z))", "(0,4)", 5, [](Eval& e) {
    Ops o(e, HA), c(e, CA);
    return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
      const double s = o.Sl(X, Y, Z, W);
      return worst({s - c.Sl(X, Y, Z, W), s - (o.g(c.T(X, W), c.T(Y, Z)) - o.g(c.T(Y, W), c.T(X, Z)))});
    });
  });
  b.conns = {HA};
  b.add("S2.d", "cyclic_{X,Y,Z}(D_{gamma X}S)(Y,Z,W) = 0", "(1,4)", 5, [](Eval& e) {
    Ops o(e, HA);
    return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
      auto f = [&](const Arg& x, const Arg& y, const Arg& z) { return o.Dv(Obj::S, x, {y, z, W}); };
      return cyclic(f, X, Y, Z);
    });
  });
  b.add("S2.e", "(D_{gamma eta}S)(X,Y,Z) = -2 S(X,Y)Z", "(1,3)", 5, [](Eval& e) {
    Ops o(e, HA);
    const Arg eta = o.eta();
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.Dv(Obj::S, eta, {X, Y, Z}) + 2.0 * o.S(X, Y, Z); });
  });
  b.add("S2.f",
        "(D_{beta Z}S)(X,Y,W) = (D_{gamma X}P)(Z,Y,W) - (D_{gamma Y}P)(Z,X,W) - P(T(Y,Z),X)W + P(T(X,Z),Y)W",
        "(1,4)", 6, [](Eval& e) {
          Ops o(e, HA);
          return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
            Vec rhs = o.Dv(Obj::P, X, {Z, Y, W}) - o.Dv(Obj::P, Y, {Z, X, W}) - o.P(o.T(Y, Z), X, W) +
                      o.P(o.T(X, Z), Y, W);
            return o.Dh(Obj::S, Z, {X, Y, W}) - rhs;
          });
        });

  b.group = "Hashiguchi hv-curvature";
  b.conns = {HA, CA};
  b.add("S3.a", "P(X,Y,Z,W) + P(X,Y,W,Z) = 2(D_{gamma Y}Phat)(X,Z,W) + 2 Phat(T(X,Y),Z,W)", "(0,4)", 5,
        [](Eval& e) {
          Ops o(e, HA), c(e, CA, HA);
          return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
            return o.Pl(X, Y, Z, W) + o.Pl(X, Y, W, Z) - 2.0 * c.Dvl(Obj::Phatl, Y, {X, Z, W}) -
                   2.0 * c.Phl(o.T(X, Y), Z, W);
          });
        });
  b.conns = {HA};
  b.add("S3.b", "Phat = 0 (as a torsion of this connection)", "(1,2)", 4,
        [](Eval& e) { return magnitude(e, Obj::Phat, HA); });
  b.add("S3.c", "P(X,Y)Z - P(Z,Y)X = (D_{beta Z}T)(Y,X) - (D_{beta X}T)(Y,Z)", "(1,3)", 5, [](Eval& e) {
    Ops o(e, HA);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) {
      return o.P(X, Y, Z) - o.P(Z, Y, X) - (o.Dh(Obj::T, Z, {Y, X}) - o.Dh(Obj::T, X, {Y, Z}));
    });
  });
  b.add("S3.d", "P(X,Y)Z = P(X,Z)Y", "(1,3)", 5, [](Eval& e) {
    Ops o(e, HA);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.P(X, Y, Z) - o.P(X, Z, Y); });
  });
  b.add("S3.e", "P(eta,X)Y = -(D_{beta eta}T)(X,Y) and P(X,eta)Y = 0", "(1,2)", 5, [](Eval& e) {
    Ops o(e, HA);
    const Arg eta = o.eta();
    return sweep2(e, [&](auto& X, auto& Y) {
      return worst({max_abs(o.P(eta, X, Y) + o.Dh(Obj::T, eta, {X, Y})), max_abs(o.P(X, eta, Y))});
    });
  });
  b.add(
      "S3.e.printed", "0 = -(D_{beta eta}T)(X,Y) (variant reading the contraction with the torsion; diagnostic)",
      "(1,2)", 4,
      [](Eval& e) {
        Ops o(e, HA);
        const Arg eta = o.eta();
        return sweep2(e, [&](auto& X, auto& Y) { return o.Dh(Obj::T, eta, {X, Y}); });
      },
      Guard::None, false);
  b.add("S3.f", "(D_{gamma eta}P)(X,Y,Z) = -P(X,Y)Z", "(1,3)", 6, [](Eval& e) {
    Ops o(e, HA);
    const Arg eta = o.eta();
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.Dv(Obj::P, eta, {X, Y, Z}) + o.P(X, Y, Z); });
  });

  b.group = "Hashiguchi h-curvature";
  b.add("S4.a", "R(X,Y)Z = -R(Y,X)Z", "(1,3)", 5, [](Eval& e) {
    Ops o(e, HA);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.R(X, Y, Z) + o.R(Y, X, Z); });
  });
  b.conns = {HA, CA};
  b.add("S4.b", "R(X,Y,Z,W) + R(X,Y,W,Z) = 2 interchange_{X,Y}{(D_{beta Y}Phat)(X,Z,W)}", "(0,4)", 5, [](Eval& e) {
    Ops o(e, HA), c(e, CA, HA);
    return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
      auto f = [&](const Arg& x, const Arg& y) { return c.Dhl(Obj::Phatl, y, {x, Z, W}); };
      return o.Rl(X, Y, Z, W) + o.Rl(X, Y, W, Z) - 2.0 * interchange(f, X, Y);
    });
  });
  b.conns = {HA};
  b.add("S4.c", "Rhat(X,Y) = R(X,Y)eta = vertical part of [beta X, beta Y]", "(1,2)", 5, [](Eval& e) {
    Ops o(e, HA);
    const Arg eta = o.eta();
    const auto& f = e.ctx().frame();
    LiftBrackets br(f);
    PiTensor direct = bracket_curvature(br, f.n);
    double r = geometry::max_abs(e.t(Obj::Rhat, HA) - direct);
    return std::max(r, sweep2(e, [&](auto& X, auto& Y) { return o.R(X, Y, eta) - o.Rh(X, Y); }));
  });
  b.add("S4.d", "cyclic{R(X,Y)Z - T(Rhat(X,Y),Z)} = 0", "(1,3)", 5, [](Eval& e) {
    Ops o(e, HA);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) {
      auto f = [&](const Arg& x, const Arg& y, const Arg& z) { return o.R(x, y, z) - o.T(o.Rh(x, y), z); };
      return cyclic(f, X, Y, Z);
    });
  });
  b.add("S4.e", "cyclic_{X,Y,Z}{(D_{beta X}R)(Y,Z,W) + P(X,Rhat(Y,Z))W} = 0", "(1,4)", 6, [](Eval& e) {
    Ops o(e, HA);
    return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
      auto f = [&](const Arg& x, const Arg& y, const Arg& z) {
        return o.Dh(Obj::R, x, {y, z, W}) + o.P(x, o.Rh(y, z), W);
      };
      return cyclic(f, X, Y, Z);
    });
  });
  b.add("S4.f",
        "(D_{gamma X}R)(Y,Z,W) + (D_{beta Y}P)(Z,X,W) - (D_{beta Z}P)(Y,X,W) + R(T(X,Y),Z)W - S(Rhat(Y,Z),X)W - "
        "R(T(X,Z),Y)W = 0",
        "(1,4)", 6, [](Eval& e) {
          Ops o(e, HA);
          return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
            return o.Dv(Obj::R, X, {Y, Z, W}) + o.Dh(Obj::P, Y, {Z, X, W}) - o.Dh(Obj::P, Z, {Y, X, W}) +
                   o.R(o.T(X, Y), Z, W) - o.S(o.Rh(Y, Z), X, W) - o.R(o.T(X, Z), Y, W);
          });
        });
  b.add("S4.g", "(D_{gamma eta}R)(X,Y,Z) = 0", "(1,3)", 6, [](Eval& e) {
    Ops o(e, HA);
    const Arg eta = o.eta();
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.Dv(Obj::R, eta, {X, Y, Z}); });
  });
}

}  // namespace finsler::identities::detail
