#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "finsler/geometry/frame.hpp"

namespace finsler::connections {

using geometry::FramePtr;
using geometry::JetTensor;
using geometry::PiTensor;

enum class ConnectionKind { Cartan, Berwald, Chern, Hashiguchi };

inline constexpr std::array<ConnectionKind, 4> kAllConnections{ConnectionKind::Cartan, ConnectionKind::Berwald,
                                                               ConnectionKind::Chern, ConnectionKind::Hashiguchi};

const char* name(ConnectionKind k);
std::optional<ConnectionKind> parse_connection(std::string_view s);

/// Coefficients of a regular connection on the pullback bundle.
///
///   H(i, j, k) = (D_{delta_k} e_j)^i    V(i, j, k) = (D_{d/dy^k} e_j)^i
///
/// N is always the Barthel connection of the frame. Both H and V are
/// symmetric in (j, k) by construction (computed for j <= k and mirrored).
struct ConnectionData {
  ConnectionKind kind = ConnectionKind::Cartan;
  FramePtr frame;
  JetTensor H;
  JetTensor V;
  bool v_vanishes = false;  // V is structurally zero

  const JetTensor& N() const { return frame->N; }
  int dim() const { return frame->n; }
};

ConnectionData cartan_connection(const FramePtr& f);
ConnectionData berwald_connection(const FramePtr& f);
ConnectionData chern_connection(const FramePtr& f);
ConnectionData hashiguchi_connection(const FramePtr& f);
ConnectionData make_connection(ConnectionKind k, const FramePtr& f);

/// Horizontal covariant derivative; the direction becomes a new last
/// covariant slot:
///   A^{i..}_{j..|k} = delta_k A + sum_up H^i_mk A^{m..} - sum_down H^m_jk A_{m..}
JetTensor h_cov_deriv(const JetTensor& A, const ConnectionData& c);
/// Vertical covariant derivative, same shape rule with d/dy^k and V.
JetTensor v_cov_deriv(const JetTensor& A, const ConnectionData& c);

/// Covariant derivative of a pi-vector field in the direction of the
/// coordinate vector field sum_k (hx^k delta_k + vy^k d/dy^k) given by its
/// horizontal and vertical components (jets): returns the components of
/// D_X Z as jets.
std::vector<jets::Jet> covariant_along(const std::vector<jets::Jet>& Z, const std::vector<jets::Jet>& hx,
                                       const std::vector<jets::Jet>& vy, const ConnectionData& c);

}  // namespace finsler::connections
