#include "finsler/curvature/curvature.hpp"

namespace finsler::curvature {

using geometry::slots;
using jets::Jet;

JetTensor delta_all(const JetTensor& A, const geometry::Frame& f) {
  const int n = f.n;
  auto sl = A.slots();
  sl.push_back(geometry::Slot::Down);
  JetTensor out(n, sl, f.zero());
  std::vector<Jet> dy(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < A.size(); ++a) {
    const Jet& c = A.data()[a];
    for (int m = 0; m < n; ++m) dy[m] = c.d(n + m);
    for (int k = 0; k < n; ++k) {
      Jet v = c.d(k);
      for (int m = 0; m < n; ++m) v.sub_product(f.N(m, k), dy[m]);
      out.data()[a * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)] = v;
    }
  }
  return out;
}

JetTensor vdot_all(const JetTensor& A, const geometry::Frame& f) {
  const int n = f.n;
  auto sl = A.slots();
  sl.push_back(geometry::Slot::Down);
  JetTensor out(n, sl, f.zero());
  for (std::size_t a = 0; a < A.size(); ++a)
    for (int k = 0; k < n; ++k)
      out.data()[a * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)] = A.data()[a].d(n + k);
  return out;
}

namespace {

JetTensor barthel_rhat(const geometry::Frame& f) {
  const int n = f.n;
  const JetTensor dNh = delta_all(f.N, f);  // dNh(i, x, k) = delta_k N^i_x
  JetTensor R(n, slots({'u', 'd', 'd'}), f.zero());
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) R(i, x, y) = dNh(i, x, y) - dNh(i, y, x);
  return R;
}

}  // namespace

TorsionSet torsions(const ConnectionData& c) {
  const auto& f = *c.frame;
  const int n = f.n;
  TorsionSet t;
  t.Q = JetTensor(n, slots({'u', 'd', 'd'}), f.zero());
  t.T = t.Q;
  t.Phat = t.Q;
  t.Shat = t.Q;
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        t.Q(i, x, y) = c.H(i, y, x) - c.H(i, x, y);
        t.T(i, x, y) = c.V(i, y, x);
        t.Phat(i, x, y) = f.dN(i, x, y) - c.H(i, y, x);
        t.Shat(i, x, y) = c.V(i, x, y) - c.V(i, y, x);
      }
  t.Rhat = barthel_rhat(f);
  return t;
}

CurvatureSet curvatures(const ConnectionData& c) {
  const auto& f = *c.frame;
  const int n = f.n;
  const bool hasV = !c.v_vanishes;
  const JetTensor& H = c.H;
  const JetTensor& V = c.V;
  const JetTensor dH = delta_all(H, f);  // dH(i, j, l, k) = delta_k H^i_jl
  const JetTensor vH = vdot_all(H, f);
  const JetTensor Rhat = barthel_rhat(f);

  CurvatureSet cs;
  cs.R = JetTensor(n, slots({'u', 'd', 'd', 'd'}), f.zero());
  cs.P = cs.R;
  cs.S = cs.R;

  JetTensor dV, vV;
  if (hasV) {
    dV = delta_all(V, f);
    vV = vdot_all(V, f);
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          // R: -(delta_k H^i_jl + H^m_jl H^i_mk) + (delta_l H^i_jk + H^m_jk H^i_ml) + V^i_jm Rhat^m_kl
          Jet r = dH(i, j, k, l) - dH(i, j, l, k);
          for (int m = 0; m < n; ++m) {
            r.sub_product(H(m, j, l), H(i, m, k));
            r.add_product(H(m, j, k), H(i, m, l));
          }
          if (hasV)
            for (int m = 0; m < n; ++m) r.add_product(V(i, j, m), Rhat(m, k, l));
          cs.R(i, j, k, l) = r;

          // P: -delta_k V^i_jl - V^m_jl H^i_mk + d_l H^i_jk + H^m_jk V^i_ml + dN^m_kl V^i_jm
          Jet p = vH(i, j, k, l);
          if (hasV) {
            p -= dV(i, j, l, k);
            for (int m = 0; m < n; ++m) {
              p.sub_product(V(m, j, l), H(i, m, k));
              p.add_product(H(m, j, k), V(i, m, l));
              p.add_product(f.dN(m, k, l), V(i, j, m));
            }
          }
          cs.P(i, j, k, l) = p;

          // S: -d_k V^i_jl - V^m_jl V^i_mk + d_l V^i_jk + V^m_jk V^i_ml
          if (hasV) {
            Jet s = vV(i, j, k, l) - vV(i, j, l, k);
            for (int m = 0; m < n; ++m) {
              s.sub_product(V(m, j, l), V(i, m, k));
              s.add_product(V(m, j, k), V(i, m, l));
            }
            cs.S(i, j, k, l) = s;
          }
        }
  return cs;
}

JetTensor h_tensor(const geometry::Frame& f) {
  const int n = f.n;
  const JetTensor Rhat = barthel_rhat(f);
  JetTensor Ht(n, slots({'u', 'd'}), f.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Jet s = f.y(0) * Rhat(i, 0, j);
      for (int a = 1; a < n; ++a) s.add_product(f.y(a), Rhat(i, a, j));
      Ht(i, j) = s;
    }
  return Ht;
}

}  // namespace finsler::curvature
