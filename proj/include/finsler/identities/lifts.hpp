#pragma once

#include <vector>

#include "finsler/connections/connection.hpp"

namespace finsler::identities {

using jets::Jet;

/// Vector field on the slit tangent bundle by its 2n coordinate components
/// (d/dx^1..d/dx^n, d/dy^1..d/dy^n), each a jet.
struct VectorField {
  std::vector<Jet> c;
};

/// Components in the adapted frame: X = h^k delta_k + v^k d/dy^k.
struct Adapted {
  std::vector<Jet> h;
  std::vector<Jet> v;
};

/// Constant pi-vector field e_i.
std::vector<Jet> basis_field(const geometry::Frame& f, int i);
/// The canonical section eta (components y^i).
std::vector<Jet> eta_field(const geometry::Frame& f);

/// beta Z = Z^k delta_k in coordinates.
VectorField horizontal_lift(const geometry::Frame& f, const std::vector<Jet>& Z);
/// gamma Z = Z^k d/dy^k.
VectorField vertical_lift(const geometry::Frame& f, const std::vector<Jet>& Z);
/// Lift number a: delta_a for a < n, d/dy^(a-n) otherwise.
VectorField basis_lift(const geometry::Frame& f, int a);

/// X . phi
Jet apply(const VectorField& X, const Jet& phi);
/// Lie bracket from coordinate components.
VectorField bracket(const VectorField& U, const VectorField& W);
/// Split into adapted components using the Barthel coefficients.
Adapted adapted(const geometry::Frame& f, const VectorField& X);

std::vector<double> values(const std::vector<Jet>& v);

}  // namespace finsler::identities
