#pragma once

#include "finsler/connections/connection.hpp"

namespace finsler::curvature {

using connections::ConnectionData;
using geometry::JetTensor;
using geometry::PiTensor;

/// The five torsions, stored in argument order: A(i, x, y) = A(e_x, e_y)^i.
/// For P-hat the first argument is the horizontal one.
///
///   Q(i,x,y)    = H^i_yx - H^i_xy
///   T(i,x,y)    = V^i_yx
///   Rhat(i,x,y) = delta_y N^i_x - delta_x N^i_y
///   Phat(i,x,y) = d N^i_x / dy^y - H^i_yx
///   Shat(i,x,y) = V^i_xy - V^i_yx
struct TorsionSet {
  JetTensor Q, T, Rhat, Phat, Shat;
};

/// The three curvatures, R(i, j, k, l) = [K(lift_k, lift_l) e_j]^i with
/// K(X,Y) = -D_X D_Y + D_Y D_X + D_[X,Y]; for R both lifts are horizontal,
/// for P lift_k is horizontal and lift_l vertical, for S both are vertical.
struct CurvatureSet {
  JetTensor R, P, S;
};

TorsionSet torsions(const ConnectionData& c);
CurvatureSet curvatures(const ConnectionData& c);

/// H^i_j = Rhat(eta, e_j)^i of the Berwald connection (equivalently of the
/// Barthel connection, which all four share).
JetTensor h_tensor(const geometry::Frame& f);

/// delta_k of every component, as a new last slot (no connection terms).
JetTensor delta_all(const JetTensor& A, const geometry::Frame& f);
/// d/dy^k of every component, as a new last slot.
JetTensor vdot_all(const JetTensor& A, const geometry::Frame& f);

/// (1,2) torsion to its lowered form A(x, y, z) = g(A(e_x, e_y), e_z).
template <class T>
geometry::Tensor<T> lower_torsion(const geometry::Tensor<T>& A, const geometry::Tensor<T>& g) {
  return geometry::permute(geometry::lower(A, g, 0), {1, 2, 0});
}

/// (1,3) curvature to its lowered form A(x, y, z, w) = g(A(e_x, e_y) e_z, e_w).
template <class T>
geometry::Tensor<T> lower_curvature(const geometry::Tensor<T>& A, const geometry::Tensor<T>& g) {
  return geometry::permute(geometry::lower(A, g, 0), {2, 3, 1, 0});
}

}  // namespace finsler::curvature
