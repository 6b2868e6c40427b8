// Cross-connection relations: coefficient differences, torsion and
// metricity per connection, and curvatures expressed through Cartan data.

#include <algorithm>

#include "ops.hpp"

namespace finsler::identities::detail {

void register_tables(std::vector<Identity>& out) {
  Builder b{out, "connection comparison", {}};

  // Coefficient differences against the Cartan connection.
  b.group = "coefficient differences";
  for (K c : {BE, CH, HA}) {
    const std::string s = slug(c);
    const bool v_minus_t = c != HA;
    const bool h_plus_phat = c != CH;
    b.conns = {c, CA};
    b.add("X1." + s + ".v", v_minus_t ? "D_{gamma X}Y = D^Cartan_{gamma X}Y - T(X,Y)" : "D_{gamma X}Y = D^Cartan_{gamma X}Y",
          "(1,2)", 4, [c, v_minus_t](Eval& e) {
            Ops o(e, c), ca(e, CA);
            return sweep2(e, [&](auto& X, auto& Y) {
              Vec rhs = ca.A(Obj::Vc, {X, Y});
              if (v_minus_t) rhs = rhs - ca.T(X, Y);
              return o.A(Obj::Vc, {X, Y}) - rhs;
            });
          });
    b.add("X1." + s + ".h",
          h_plus_phat ? "D_{beta X}Y = D^Cartan_{beta X}Y + Phat(X,Y)" : "D_{beta X}Y = D^Cartan_{beta X}Y", "(1,2)", 4,
          [c, h_plus_phat](Eval& e) {
            Ops o(e, c), ca(e, CA);
            return sweep2(e, [&](auto& X, auto& Y) {
              Vec rhs = ca.A(Obj::Hc, {X, Y});
              if (h_plus_phat) rhs = rhs + ca.Ph(X, Y);
              return o.A(Obj::Hc, {X, Y}) - rhs;
            });
          });
  }

  // Torsion, v-curvature and metricity columns.
  for (K c : connections::kAllConnections) {
    const std::string s = slug(c);
    const bool has_t = c == CA || c == HA;
    const bool has_phat = c == CA || c == CH;
    b.conns = {c, CA};
    b.group = "torsion table";
    b.add("X1." + s + ".torsion",
          std::string("T = ") + (has_t ? "T_Cartan" : "0") + ", Phat = " +
              (c == CA ? "(D_{beta eta}T)" : has_phat ? "Phat_Cartan" : "0") +
              ", Q = Shat = 0, Rhat = vertical part of [beta X, beta Y]",
          "(1,2)", 4, [c, has_t, has_phat](Eval& e) {
            Ops o(e, c), ca(e, CA);
            const Arg eta = o.eta();
            const auto& f = e.ctx().frame();
            LiftBrackets br(f);
            PiTensor direct = bracket_curvature(br, f.n);
            e.note(direct);
            double r = geometry::max_abs(e.t(Obj::Rhat, c) - direct);
            r = std::max({r, magnitude(e, Obj::Q, c), magnitude(e, Obj::Shat, c)});
            return std::max(r, sweep2(e, [&](auto& X, auto& Y) {
                              Vec t = has_t ? ca.T(X, Y) : Vec(static_cast<std::size_t>(e.n()), 0.0);
                              Vec p = !has_phat                ? Vec(static_cast<std::size_t>(e.n()), 0.0)
                                      : c == CA ? ca.Dh(Obj::T, eta, {X, Y})
                                                : ca.Ph(X, Y);
                              return worst({max_abs(o.T(X, Y) - t), max_abs(o.Ph(X, Y) - p)});
                            }));
          });
    b.group = "v-curvature table";
    b.add("X1." + s + ".vcurvature", std::string("S = ") + (has_t ? "S_Cartan" : "0"), "(1,3)",
          c == BE || c == HA ? 5 : 4,
          [c, has_t](Eval& e) {
            Ops o(e, c), ca(e, CA);
            return sweep3(e, [&](auto& X, auto& Y, auto& Z) {
              return has_t ? o.S(X, Y, Z) - ca.S(X, Y, Z) : o.S(X, Y, Z);
            });
          });
    b.group = "metricity table";
    const bool v_def = c == BE || c == CH;
    const bool h_def = c == BE || c == HA;
    b.add("X1." + s + ".metricity",
          std::string("(D_{gamma X}g)(Y,Z) = ") + (v_def ? "2T(X,Y,Z)" : "0") + ", (D_{beta X}g)(Y,Z) = " +
              (h_def ? "-2Phat(X,Y,Z)" : "0"),
          "(0,3)", 4, [c, v_def, h_def](Eval& e) {
            Ops o(e, c), ca(e, CA);
            return sweep3(e, [&](auto& X, auto& Y, auto& Z) {
              const double v = o.Dvl(Obj::G, X, {Y, Z}) - (v_def ? 2.0 * ca.Tl(X, Y, Z) : 0.0);
              const double h = o.Dhl(Obj::G, X, {Y, Z}) + (h_def ? 2.0 * ca.Phl(X, Y, Z) : 0.0);
              return worst({v, h});
            });
          });
  }

  b.group = "curvature table";
  b.conns = {CA};
  const char* kinds[] = {"R", "P", "S"};
  for (int kind = 0; kind < 3; ++kind) {
    b.add(std::string("X2.cartan.") + kinds[kind],
          std::string(kinds[kind]) + "(X,Y)Z = -D_X D_Y Z + D_Y D_X Z + D_[X,Y] Z on " +
              (kind == 0 ? "beta X, beta Y" : kind == 1 ? "beta X, gamma Y" : "gamma X, gamma Y"),
          "(1,3)", 4, [kind](Eval& e) {
            auto& ctx = e.ctx();
            const int n = e.n();
            const Obj obj = kind == 0 ? Obj::R : kind == 1 ? Obj::P : Obj::S;
            const auto& A = e.t(obj, CA);
            LiftBrackets br(ctx.frame());
            double r = 0.0;
            for (int x = 0; x < n; ++x)
              for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                  const int a = kind == 2 ? x + n : x;
                  const int bb = kind == 0 ? y : y + n;
                  Vec direct = composed_curvature(ctx, CA, br, a, bb, z);
                  r = std::max(r, max_abs(direct - vec(A, {Arg::basis(x), Arg::basis(y), Arg::basis(z)})));
                }
            return r;
          });
  }

  b.conns = {CH, CA};
  b.add("X2.chern.S", "S = 0", "(1,3)", 4, [](Eval& e) { return magnitude(e, Obj::S, CH); });
  b.add("X2.chern.P", "P(X,Y)Z = P_C(X,Y)Z - T(Phat(X,Y),Z) + (D^C_{beta X}T)(Y,Z)", "(1,3)", 4, [](Eval& e) {
    Ops o(e, CH), c(e, CA);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) {
      return o.P(X, Y, Z) - (c.P(X, Y, Z) - c.T(c.Ph(X, Y), Z) + c.Dh(Obj::T, X, {Y, Z}));
    });
  });
  b.add("X2.chern.R", "R(X,Y)Z = R_C(X,Y)Z - T(Rhat(X,Y),Z)", "(1,3)", 4, [](Eval& e) {
    Ops o(e, CH), c(e, CA);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.R(X, Y, Z) - (c.R(X, Y, Z) - c.T(c.Rh(X, Y), Z)); });
  });

  b.conns = {HA, CA};
  b.add("X2.hashiguchi.S", "S = S_C", "(1,3)", 5, [](Eval& e) {
    Ops o(e, HA), c(e, CA);
    return sweep3(e, [&](auto& X, auto& Y, auto& Z) { return o.S(X, Y, Z) - c.S(X, Y, Z); });
  });
  b.add("X2.hashiguchi.P", "P(X,Y)Z = P_C(X,Y)Z + Phat(T(X,Y),Z) + (D^C_{gamma Y}Phat)(X,Z)", "(1,3)", 5,
        [](Eval& e) {
          Ops o(e, HA), c(e, CA);
          return sweep3(e, [&](auto& X, auto& Y, auto& Z) {
            return o.P(X, Y, Z) - (c.P(X, Y, Z) + c.Ph(c.T(X, Y), Z) + c.Dv(Obj::Phat, Y, {X, Z}));
          });
        });
  b.add("X2.hashiguchi.R",
        "R(X,Y)Z = R_C(X,Y)Z - interchange_{X,Y}{(D^C_{beta X}Phat)(Y,Z) + Phat(X,Phat(Y,Z))}", "(1,3)", 5,
        [](Eval& e) {
          Ops o(e, HA), c(e, CA);
          return sweep3(e, [&](auto& X, auto& Y, auto& Z) {
            auto f = [&](const Arg& x, const Arg& y) { return c.Dh(Obj::Phat, x, {y, Z}) + c.Ph(x, c.Ph(y, Z)); };
            return o.R(X, Y, Z) - (c.R(X, Y, Z) - interchange(f, X, Y));
          });
        });

  b.conns = {BE, CA};
  b.add("X2.berwald.S", "S = 0", "(1,3)", 5, [](Eval& e) { return magnitude(e, Obj::S, BE); });
  b.add("X2.berwald.P",
        "P(X,Y)Z = P_C(X,Y)Z + (D^C_{gamma Y}Phat)(X,Z) + Phat(T(Y,X),Z) + Phat(X,T(Y,Z)) + (D^C_{beta X}T)(Y,Z) - "
        "T(Y,Phat(X,Z)) - T(Phat(X,Y),Z)",
        "(1,3)", 5, [](Eval& e) {
          Ops o(e, BE), c(e, CA);
          return sweep3(e, [&](auto& X, auto& Y, auto& Z) {
            Vec rhs = c.P(X, Y, Z) + c.Dv(Obj::Phat, Y, {X, Z}) + c.Ph(c.T(Y, X), Z) + c.Ph(X, c.T(Y, Z)) +
                      c.Dh(Obj::T, X, {Y, Z}) - c.T(Y, c.Ph(X, Z)) - c.T(c.Ph(X, Y), Z);
            return o.P(X, Y, Z) - rhs;
          });
        });
  b.add("X2.berwald.R",
        "R(X,Y)Z = R_C(X,Y)Z - T(Rhat(X,Y),Z) - interchange_{X,Y}{(D^C_{beta X}Phat)(Y,Z) + Phat(X,Phat(Y,Z))}",
        "(1,3)", 5, [](Eval& e) {
          Ops o(e, BE), c(e, CA);
          return sweep3(e, [&](auto& X, auto& Y, auto& Z) {
            auto f = [&](const Arg& x, const Arg& y) { return c.Dh(Obj::Phat, x, {y, Z}) + c.Ph(x, c.Ph(y, Z)); };
            return o.R(X, Y, Z) - (c.R(X, Y, Z) - c.T(c.Rh(X, Y), Z) - interchange(f, X, Y));
          });
        });
}

}  // namespace finsler::identities::detail
