// Berwald connection.

#include <algorithm>

#include "ops.hpp"

namespace finsler::identities::detail {

namespace {

struct Flatness {
  double bracket, r, rhat_b, rhat, h;
};

// Magnitudes of the five objects whose joint vanishing is compared.
Flatness flatness(Eval& e) {
  const auto& f = e.ctx().frame();
  LiftBrackets br(f);
  return {geometry::max_abs(bracket_curvature(br, f.n)), magnitude(e, Obj::R, BE), magnitude(e, Obj::Rhat, BE),
          magnitude(e, Obj::Rhat, CA), magnitude(e, Obj::Htensor, BE)};
}

}  // namespace

void register_berwald(std::vector<Identity>& out) {
  Builder b{out, "Berwald connection", {BE}};

  b.group = "Berwald structure";
  b.add("B0.a", "delta_k L = 0", "(0,1)", 4, [](Eval& e) {
    const auto& f = e.ctx().frame();
    double r = 0.0;
    for (int k = 0; k < f.n; ++k) r = std::max(r, std::abs(f.delta(f.L, k).value()));
    e.note(f.L.value());
    return r;
  });
  b.add("B0.b", "Q = 0 and T = 0", "(1,2)", 4,
        [](Eval& e) { return std::max(magnitude(e, Obj::Q, BE), magnitude(e, Obj::T, BE)); });

  b.conns = {BE, CA};
  b.group = "Berwald metricity";
  b.add("B1.a", "(D_{gamma X}g)(Y,Z) = 2 T(X,Y,Z)", "(0,3)", 4, [](Eval& e) {
    Ops o(e, BE), c(e, CA);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.Dvl(Obj::G, X, {Y, Z}) - 2.0 * c.Tl(X, Y, Z); });
  });
  b.add("B1.b", "(D_{beta X}g)(Y,Z) = -2 Phat(X,Y,Z)", "(0,3)", 4, [](Eval& e) {
    Ops o(e, BE), c(e, CA);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.Dhl(Obj::G, X, {Y, Z}) + 2.0 * c.Phl(X, Y, Z); });
  });

  b.conns = {BE};
  b.group = "Berwald v-curvature";
  b.add("B2", "S = 0", "(1,3)", 5, [](Eval& e) { return magnitude(e, Obj::S, BE); });

  b.group = "Berwald hv-curvature";
  b.add("B3.a", "Phat = 0", "(1,2)", 4, [](Eval& e) { return magnitude(e, Obj::Phat, BE); });
  b.conns = {BE, CA};
  b.add("B3.b", "P(X,Y,Z,W) + P(X,Y,W,Z) = 2(D_{beta X}T)(Y,Z,W) + 2(D_{gamma Y}Phat)(X,Z,W)", "(0,4)", 5,
        [](Eval& e) {
          Ops o(e, BE), c(e, CA, BE);
          return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
            return o.Pl(X, Y, Z, W) + o.Pl(X, Y, W, Z) - 2.0 * c.Dhl(Obj::Tl, X, {Y, Z, W}) -
                   2.0 * c.Dvl(Obj::Phatl, Y, {X, Z, W});
          });
        });
  b.conns = {BE};
  b.add("B3.c", "P(X,Y)Z = P(Z,Y)X", "(1,3)", 5, [](Eval& e) {
    Ops o(e, BE);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.P(X, Y, Z) - o.P(Z, Y, X); });
  });
  b.add("B3.d", "(D_{gamma X}P)(Y,Z,W) = (D_{gamma Z}P)(Y,X,W)", "(1,4)", 6, [](Eval& e) {
    Ops o(e, BE);
    return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
      return o.Dv(Obj::P, X, {Y, Z, W}) - o.Dv(Obj::P, Z, {Y, X, W});
    });
  });
  b.add("B3.e", "P(X,Y)Z is totally symmetric in X, Y, Z", "(1,3)", 5, [](Eval& e) {
    Ops o(e, BE);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) {
      Vec p = o.P(X, Y, Z);
      return worst({max_abs(p - o.P(Y, X, Z)), max_abs(p - o.P(X, Z, Y)), max_abs(p - o.P(Z, Y, X))});
    });
  });
  b.add("B3.f", "(D_{gamma eta}P)(X,Y,Z) = -P(X,Y)Z", "(1,3)", 6, [](Eval& e) {
    Ops o(e, BE);
    const Arg eta = o.eta();
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.Dv(Obj::P, eta, {X, Y, Z}) + o.P(X, Y, Z); });
  });
  b.add(
      "B3.f.printed", "(D_{gamma eta}P)(X,Y,Z) = -P(X,Y)Y (variant with the repeated argument; diagnostic)", "(1,3)",
      6,
      [](Eval& e) {
        Ops o(e, BE);
        const Arg eta = o.eta();
        return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.Dv(Obj::P, eta, {X, Y, Z}) + o.P(X, Y, Y); });
      },
      Guard::None, false);

  b.group = "Berwald h-curvature";
  b.add("B4.a", "R(X,Y)Z = -R(Y,X)Z", "(1,3)", 5, [](Eval& e) {
    Ops o(e, BE);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.R(X, Y, Z) + o.R(Y, X, Z); });
  });
  b.add("B4.b", "R(X,Y)eta = Rhat(X,Y) = vertical part of [beta X, beta Y]", "(1,2)", 5, [](Eval& e) {
    Ops o(e, BE);
    const Arg eta = o.eta();
    const auto& f = e.ctx().frame();
    LiftBrackets br(f);
    PiTensor direct = bracket_curvature(br, f.n);
    double r = geometry::max_abs(e.t(Obj::Rhat, BE) - direct);
    return std::max(r, sweep2(e, [&](auto& X, auto& Y) { return o.R(X, Y, eta) - o.Rh(X, Y); }));
  });
  b.conns = {BE, CA};
  b.add("B4.c",
        "R(X,Y,Z,W) + R(X,Y,W,Z) = 2 interchange_{X,Y}{(D_{beta Y}Phat)(X,Z,W)} - 2 T(Rhat(X,Y),Z,W)", "(0,4)", 5,
        [](Eval& e) {
          Ops o(e, BE), c(e, CA, BE);
          return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
            auto f = [&](const Arg& x, const Arg& y) { return c.Dhl(Obj::Phatl, y, {x, Z, W}); };
            return o.Rl(X, Y, Z, W) + o.Rl(X, Y, W, Z) - 2.0 * interchange(f, X, Y) +
                   2.0 * c.Tl(o.Rh(X, Y), Z, W);
          });
        });
  b.conns = {BE};
  b.add("B4.d", "cyclic R(X,Y)Z = 0", "(1,3)", 5, [](Eval& e) {
    Ops o(e, BE);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) {
      auto f = [&](const Arg& x, const Arg& y, const Arg& z) { return o.R(x, y, z); };
      return cyclic(f, X, Y, Z);
    });
  });
  b.add("B4.e", "cyclic_{X,Y,Z}{(D_{beta X}R)(Y,Z,W) + P(X,Rhat(Y,Z))W} = 0", "(1,4)", 6, [](Eval& e) {
    Ops o(e, BE);
    return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
      auto f = [&](const Arg& x, const Arg& y, const Arg& z) {
        return o.Dh(Obj::R, x, {y, z, W}) + o.P(x, o.Rh(y, z), W);
      };
      return cyclic(f, X, Y, Z);
    });
  });
  b.add("B4.f", "(D_{gamma X}R)(Y,Z,W) = (D_{beta Z}P)(Y,X,W) - (D_{beta Y}P)(Z,X,W)", "(1,4)", 6, [](Eval& e) {
    Ops o(e, BE);
    return sweep4(e, [&](auto& X, auto& Y, auto& Z, auto& W) {
      return o.Dv(Obj::R, X, {Y, Z, W}) - o.Dh(Obj::P, Z, {Y, X, W}) + o.Dh(Obj::P, Y, {Z, X, W});
    });
  });
  b.add("B4.g", "(D_{gamma eta}R)(X,Y,Z) = 0", "(1,3)", 6, [](Eval& e) {
    Ops o(e, BE);
    const Arg eta = o.eta();
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.Dv(Obj::R, eta, {X, Y, Z}); });
  });
  b.add("B4.h", "Rhat(X,Y) = (1/3){(D_{gamma X}H)(Y) - (D_{gamma Y}H)(X)}, H the contraction Rhat(eta, .)", "(1,2)",
        5, [](Eval& e) {
          Ops o(e, BE);
          return sweep2(e, [&](auto& X, auto& Y) {
            return o.Rh(X, Y) - (1.0 / 3.0) * (o.Dv(Obj::Htensor, X, {Y}) - o.Dv(Obj::Htensor, Y, {X}));
          });
        });
  b.add("B4.i", "R(X,Y)Z = (D_{gamma Z}Rhat)(X,Y)", "(1,3)", 5, [](Eval& e) {
    Ops o(e, BE);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.R(X, Y, Z) - o.Dv(Obj::Rhat, Z, {X, Y}); });
  });

  b.conns = {BE, CA};
  b.group = "flatness chain";
  b.add(
      "B5.flat",
      "locally Minkowski: v[beta X, beta Y], R, Rhat (Berwald), Rhat (Cartan) and the H-tensor all vanish",
      "(1,3)", 5,
      [](Eval& e) {
        Flatness fl = flatness(e);
        return worst({fl.bracket, fl.r, fl.rhat_b, fl.rhat, fl.h});
      },
      Guard::LocallyMinkowski);
  b.add(
      "B5.curved",
      "round sphere: each of v[beta X, beta Y], R, Rhat (Berwald), Rhat (Cartan), H-tensor has a component "
      ">= 1e-3 (residual 0 when all do, 1 otherwise)",
      "scalar", 5,
      [](Eval& e) {
        Flatness fl = flatness(e);
        const double least = std::min({fl.bracket, fl.r, fl.rhat_b, fl.rhat, fl.h});
        return least >= 1e-3 ? 0.0 : 1.0;
      },
      Guard::Sphere);
}

}  // namespace finsler::identities::detail
