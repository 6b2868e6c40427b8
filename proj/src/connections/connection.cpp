#include "finsler/connections/connection.hpp"

namespace finsler::connections {

using geometry::slots;
using jets::Jet;

const char* name(ConnectionKind k) {
  switch (k) {
    case ConnectionKind::Cartan: return "cartan";
    case ConnectionKind::Berwald: return "berwald";
    case ConnectionKind::Chern: return "chern";
    case ConnectionKind::Hashiguchi: return "hashiguchi";
  }
  return "?";
}

std::optional<ConnectionKind> parse_connection(std::string_view s) {
  for (auto k : kAllConnections)
    if (s == name(k)) return k;
  return std::nullopt;
}

namespace {

JetTensor cartan_h(const geometry::Frame& f) {
  const int n = f.n;
  // dg(a, b, c) = delta_c g_ab
  JetTensor dg(n, slots({'d', 'd', 'd'}), f.zero());
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Jet d = f.delta(f.g(a, b), c);
        dg(a, b, c) = d;
        dg(b, a, c) = d;
      }
  JetTensor H(n, slots({'u', 'd', 'd'}), f.zero());
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      std::vector<Jet> low;
      for (int h = 0; h < n; ++h) low.push_back(dg(h, k, j) + dg(h, j, k) - dg(j, k, h));
      for (int i = 0; i < n; ++i) {
        Jet s = f.g_inv(i, 0) * low[0];
        for (int h = 1; h < n; ++h) s.add_product(f.g_inv(i, h), low[h]);
        s *= 0.5;
        H(i, j, k) = s;
        H(i, k, j) = s;
      }
    }
  return H;
}

JetTensor cartan_v(const geometry::Frame& f) {
  const int n = f.n;
  JetTensor V(n, slots({'u', 'd', 'd'}), f.zero());
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        Jet s = f.g_inv(i, 0) * f.C(0, j, k);
        for (int h = 1; h < n; ++h) s.add_product(f.g_inv(i, h), f.C(h, j, k));
        V(i, j, k) = s;
        V(i, k, j) = s;
      }
  return V;
}

JetTensor zero_coefficients(const geometry::Frame& f) {
  return JetTensor(f.n, slots({'u', 'd', 'd'}), f.zero());
}

}  // namespace

ConnectionData cartan_connection(const FramePtr& f) {
  return {ConnectionKind::Cartan, f, cartan_h(*f), cartan_v(*f), false};
}

ConnectionData berwald_connection(const FramePtr& f) {
  return {ConnectionKind::Berwald, f, f->dN, zero_coefficients(*f), true};
}

ConnectionData chern_connection(const FramePtr& f) {
  return {ConnectionKind::Chern, f, cartan_h(*f), zero_coefficients(*f), true};
}

ConnectionData hashiguchi_connection(const FramePtr& f) {
  return {ConnectionKind::Hashiguchi, f, f->dN, cartan_v(*f), false};
}

ConnectionData make_connection(ConnectionKind k, const FramePtr& f) {
  switch (k) {
    case ConnectionKind::Cartan: return cartan_connection(f);
    case ConnectionKind::Berwald: return berwald_connection(f);
    case ConnectionKind::Chern: return chern_connection(f);
    case ConnectionKind::Hashiguchi: return hashiguchi_connection(f);
  }
  throw std::invalid_argument("unknown connection");
}

namespace {

enum class Direction { Horizontal, Vertical };

JetTensor cov_deriv(const JetTensor& A, const ConnectionData& c, Direction dir) {
  const auto& f = *c.frame;
  const int n = f.n;
  const JetTensor& coef = dir == Direction::Horizontal ? c.H : c.V;
  const bool skip_coef = dir == Direction::Vertical && c.v_vanishes;
  auto sl = A.slots();
  sl.push_back(geometry::Slot::Down);
  JetTensor out(n, sl, f.zero());
  const int r = A.rank();
  std::vector<int> idx(static_cast<std::size_t>(r)), src(static_cast<std::size_t>(r));
  std::vector<Jet> dy(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < A.size(); ++a) {
    idx = A.unflatten(a);
    const Jet& comp = A.data()[a];
    for (int m = 0; m < n; ++m) dy[m] = comp.d(n + m);
    for (int k = 0; k < n; ++k) {
      Jet v;
      if (dir == Direction::Horizontal) {
        v = comp.d(k);
        for (int m = 0; m < n; ++m) v.sub_product(f.N(m, k), dy[m]);
      } else {
        v = dy[k];
      }
      if (!skip_coef) {
        for (int s = 0; s < r; ++s) {
          src = idx;
          for (int m = 0; m < n; ++m) {
            src[s] = m;
            if (A.slot(s) == geometry::Slot::Up)
              v.add_product(coef(idx[s], m, k), A.at(src));
            else
              v.sub_product(coef(m, idx[s], k), A.at(src));
          }
        }
      }
      out.data()[a * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)] = v;
    }
  }
  return out;
}

}  // namespace

JetTensor h_cov_deriv(const JetTensor& A, const ConnectionData& c) { return cov_deriv(A, c, Direction::Horizontal); }
JetTensor v_cov_deriv(const JetTensor& A, const ConnectionData& c) { return cov_deriv(A, c, Direction::Vertical); }

std::vector<Jet> covariant_along(const std::vector<Jet>& Z, const std::vector<Jet>& hx, const std::vector<Jet>& vy,
                                 const ConnectionData& c) {
  const auto& f = *c.frame;
  const int n = f.n;
  std::vector<Jet> out;
  for (int i = 0; i < n; ++i) {
    // X(Z^i) with X = hx^k delta_k + vy^k d/dy^k
    Jet v = f.zero();
    bool first = true;
    for (int k = 0; k < n; ++k) {
      Jet t = hx[k] * f.delta(Z[i], k) + vy[k] * f.vdot(Z[i], k);
      if (first) {
        v = t;
        first = false;
      } else {
        v += t;
      }
      for (int j = 0; j < n; ++j) {
        v.add_product(c.H(i, j, k), Z[j] * hx[k]);
        if (!c.v_vanishes) v.add_product(c.V(i, j, k), Z[j] * vy[k]);
      }
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace finsler::connections
