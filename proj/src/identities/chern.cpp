// Chern connection.

#include <algorithm>

#include "ops.hpp"

namespace finsler::identities::detail {

void register_chern(std::vector<Identity>& out) {
  Builder b{out, "Chern connection", {CH}};

  b.group = "Chern structure";
  b.add("H0", "Q = 0 and T = 0", "(1,2)", 4,
        [](Eval& e) { return std::max(magnitude(e, Obj::Q, CH), magnitude(e, Obj::T, CH)); });

  b.conns = {CH, CA};
  b.group = "Chern metricity";
  b.add("H1.a", "(D_{gamma X}g)(Y,Z) = 2 T(X,Y,Z)", "(0,3)", 4, [](Eval& e) {
    Ops o(e, CH), c(e, CA);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.Dvl(Obj::G, X, {Y, Z}) - 2.0 * c.Tl(X, Y, Z); });
  });
  b.conns = {CH};
  b.add("H1.b", "D_{beta X} g = 0", "(0,3)", 4, [](Eval& e) { return magnitude(e, Obj::G, CH, Der::H, CH); });

  b.group = "Chern v-curvature";
  b.add("H2", "S = 0", "(1,3)", 4, [](Eval& e) { return magnitude(e, Obj::S, CH); });

  b.conns = {CH, CA};
  b.group = "Chern hv-curvature";
  b.add("H3.a", "P(X,Y,Z,W) + P(X,Y,W,Z) = 2(D_{beta X}T)(Y,Z,W) - 2T(Phat(X,Y),Z,W)", "(0,4)", 4, [](Eval& e) {
    Ops o(e, CH), c(e, CA, CH);
    return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
      return o.Pl(X, Y, Z, W) + o.Pl(X, Y, W, Z) - 2.0 * c.Dhl(Obj::Tl, X, {Y, Z, W}) +
             2.0 * c.Tl(o.Ph(X, Y), Z, W);
    });
  });
  b.conns = {CH};
  b.add("H3.b", "P(X,Y)Z = P(Z,Y)X", "(1,3)", 4, [](Eval& e) {
    Ops o(e, CH);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.P(X, Y, Z) - o.P(Z, Y, X); });
  });
  b.conns = {CH, CA};
  b.add("H3.c",
        "P(X,Y,Z,W) = (D_{beta X}T)(Y,Z,W) + (D_{beta Z}T)(Y,W,X) - (D_{beta W}T)(Y,X,Z) + T(Phat(W,Y),X,Z) - "
        "T(Phat(X,Y),Z,W) - T(Phat(Z,Y),W,X)",
        "(0,4)", 4, [](Eval& e) {
          Ops o(e, CH), c(e, CA, CH);
          return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
            const double rhs = c.Dhl(Obj::Tl, X, {Y, Z, W}) + c.Dhl(Obj::Tl, Z, {Y, W, X}) -
                               c.Dhl(Obj::Tl, W, {Y, X, Z}) + c.Tl(o.Ph(W, Y), X, Z) - c.Tl(o.Ph(X, Y), Z, W) -
                               c.Tl(o.Ph(Z, Y), W, X);
            return o.Pl(X, Y, Z, W) - rhs;
          });
        });
  b.conns = {CH};
  b.add("H3.d", "Phat(eta,X) = 0", "(1,1)", 4, [](Eval& e) {
    Ops o(e, CH);
    const Arg eta = o.eta();
    return sweep1(e, [&](auto& X) { return o.Ph(eta, X); });
  });
  b.conns = {CH, CA};
  b.add("H3.e", "Phat(X,Y) = Phat_Cartan(X,Y) = (D_{beta eta}T)(X,Y)", "(1,2)", 4, [](Eval& e) {
    Ops o(e, CH), c(e, CA, CH), ca(e, CA);
    const Arg eta = o.eta();
    return sweep2(e, [&](auto& X, auto& Y) {
      Vec p = o.Ph(X, Y);
      return worst({max_abs(p - ca.Ph(X, Y)), max_abs(p - c.Dh(Obj::T, eta, {X, Y}))});
    });
  });
  b.conns = {CH};
  b.add("H3.f", "Phat(X,Y) = Phat(Y,X)", "(1,2)", 4, [](Eval& e) {
    Ops o(e, CH);
    return sweep2(e, [&](auto& X, auto& Y) { return o.Ph(X, Y) - o.Ph(Y, X); });
  });
  b.conns = {CH, CA};
  b.add("H3.g", "P(X,eta)Y = 0 and P(eta,X)Y = (D_{beta eta}T)(X,Y)", "(1,2)", 4, [](Eval& e) {
    Ops o(e, CH), c(e, CA, CH);
    const Arg eta = o.eta();
    return sweep2(e, [&](auto& X, auto& Y) {
      return worst({max_abs(o.P(X, eta, Y)), max_abs(o.P(eta, X, Y) - c.Dh(Obj::T, eta, {X, Y}))});
    });
  });
  b.conns = {CH};
  b.add("H3.h", "(D_{gamma X}P)(Z,Y,W) = (D_{gamma Y}P)(Z,X,W)", "(1,4)", 5, [](Eval& e) {
    Ops o(e, CH);
    return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
      return o.Dv(Obj::P, X, {Z, Y, W}) - o.Dv(Obj::P, Y, {Z, X, W});
    });
  });
  b.add("H3.i", "(D_{gamma eta}P)(X,Y,Z) = -P(X,Y)Z", "(1,3)", 5, [](Eval& e) {
    Ops o(e, CH);
    const Arg eta = o.eta();
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.Dv(Obj::P, eta, {X, Y, Z}) + o.P(X, Y, Z); });
  });

  b.conns = {CH, CA};
  b.group = "Chern Berwald regime";
  b.add(
      "H4", "Riemannian or locally Minkowski: P (Cartan), Phat (Cartan) and Phat (Chern) all vanish", "(1,3)", 4,
      [](Eval& e) {
        return worst({magnitude(e, Obj::P, CA), magnitude(e, Obj::Phat, CA), magnitude(e, Obj::Phat, CH)});
      },
      Guard::BerwaldRegime);

  b.conns = {CH};
  b.group = "Chern h-curvature";
  b.add("H5.a", "R(X,Y)Z = -R(Y,X)Z", "(1,3)", 4, [](Eval& e) {
    Ops o(e, CH);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.R(X, Y, Z) + o.R(Y, X, Z); });
  });
  b.add("H5.b", "Rhat(X,Y) = R(X,Y)eta = vertical part of [beta X, beta Y]", "(1,2)", 4, [](Eval& e) {
    Ops o(e, CH);
    const Arg eta = o.eta();
    const auto& f = e.ctx().frame();
    LiftBrackets br(f);
    PiTensor direct = bracket_curvature(br, f.n);
    double r = geometry::max_abs(e.t(Obj::Rhat, CH) - direct);
    return std::max(r, sweep2(e, [&](auto& X, auto& Y) { return o.R(X, Y, eta) - o.Rh(X, Y); }));
  });
  b.conns = {CH, CA};
  b.add("H5.c", "R(X,Y,Z,W) = -R(X,Y,W,Z) - 2T(Rhat(X,Y),Z,W)", "(0,4)", 4, [](Eval& e) {
    Ops o(e, CH), c(e, CA);
    return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
      return o.Rl(X, Y, Z, W) + o.Rl(X, Y, W, Z) + 2.0 * c.Tl(o.Rh(X, Y), Z, W);
    });
  });
  b.conns = {CH};
  b.add("H5.d", "cyclic R(X,Y)Z = 0", "(1,3)", 4, [](Eval& e) {
    Ops o(e, CH);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) {
      auto f = [&](const Arg& x, const Arg& y, const Arg& z) { return o.R(x, y, z); };
      return cyclic(f, X, Y, Z);
    });
  });
  b.add("H5.e", "cyclic_{X,Y,Z}{(D_{beta X}R)(Y,Z,W) + P(X,Rhat(Y,Z))W} = 0", "(1,4)", 5, [](Eval& e) {
    Ops o(e, CH);
    return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
      auto f = [&](const Arg& x, const Arg& y, const Arg& z) {
        return o.Dh(Obj::R, x, {y, z, W}) + o.P(x, o.Rh(y, z), W);
      };
      return cyclic(f, X, Y, Z);
    });
  });
  b.add("H5.f",
        "(D_{gamma X}R)(Y,Z,W) + (D_{beta Y}P)(Z,X,W) - (D_{beta Z}P)(Y,X,W) - P(Z,Phat(Y,X))W + P(Y,Phat(Z,X))W = 0",
        "(1,4)", 5, [](Eval& e) {
          Ops o(e, CH);
          return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
            return o.Dv(Obj::R, X, {Y, Z, W}) + o.Dh(Obj::P, Y, {Z, X, W}) - o.Dh(Obj::P, Z, {Y, X, W}) -
                   o.P(Z, o.Ph(Y, X), W) + o.P(Y, o.Ph(Z, X), W);
          });
        });
  b.add("H5.g", "(D_{gamma eta}R)(X,Y,Z) = 0", "(1,3)", 5, [](Eval& e) {
    Ops o(e, CH);
    const Arg eta = o.eta();
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.Dv(Obj::R, eta, {X, Y, Z}); });
  });
}

}  // namespace finsler::identities::detail
