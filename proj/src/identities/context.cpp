#include "finsler/identities/context.hpp"

#include <cmath>

namespace finsler::identities {

using connections::h_cov_deriv;
using connections::v_cov_deriv;
using curvature::lower_curvature;
using curvature::lower_torsion;
using geometry::permute;
using geometry::values;

const char* name(Obj o) {
  switch (o) {
    case Obj::G: return "g";
    case Obj::Ginv: return "g_inv";
    case Obj::Eta: return "eta";
    case Obj::Htensor: return "Htensor";
    case Obj::Hc: return "H";
    case Obj::Vc: return "V";
    case Obj::Q: return "Q";
    case Obj::T: return "T";
    case Obj::Rhat: return "Rhat";
    case Obj::Phat: return "Phat";
    case Obj::Shat: return "Shat";
    case Obj::R: return "R";
    case Obj::P: return "P";
    case Obj::S: return "S";
    case Obj::Tl: return "T_lowered";
    case Obj::Phatl: return "Phat_lowered";
    case Obj::Rl: return "R_lowered";
    case Obj::Pl: return "P_lowered";
    case Obj::Sl: return "S_lowered";
  }
  return "?";
}

namespace {

bool connection_free(Obj o) { return o == Obj::G || o == Obj::Ginv || o == Obj::Eta || o == Obj::Htensor; }

// storage (i, j, k, l) -> argument order (i, k, l, j)
const std::vector<int> kArgOrder{0, 2, 3, 1};

}  // namespace

PointContext::PointContext(metric::MetricPtr metric, geometry::ChartPoint p, int order)
    : frame_(geometry::build_frame(std::move(metric), p, order)) {}

const ConnectionData& PointContext::connection(ConnectionKind k) {
  auto it = conn_.find(k);
  if (it == conn_.end()) it = conn_.emplace(k, connections::make_connection(k, frame_)).first;
  return it->second;
}

const curvature::TorsionSet& PointContext::torsions(ConnectionKind k) {
  auto it = tors_.find(k);
  if (it == tors_.end()) it = tors_.emplace(k, curvature::torsions(connection(k))).first;
  return it->second;
}

const curvature::CurvatureSet& PointContext::curvatures(ConnectionKind k) {
  auto it = curv_.find(k);
  if (it == curv_.end()) it = curv_.emplace(k, curvature::curvatures(connection(k))).first;
  return it->second;
}

PointContext::Key PointContext::key(Obj o, ConnectionKind owner, Der d, ConnectionKind by) const {
  if (connection_free(o)) owner = ConnectionKind::Cartan;
  if (d == Der::None) by = ConnectionKind::Cartan;
  return {static_cast<int>(o), static_cast<int>(owner), static_cast<int>(d), static_cast<int>(by)};
}

const JetTensor& PointContext::jets(Obj o, ConnectionKind owner) {
  const Key k = key(o, owner, Der::None, ConnectionKind::Cartan);
  if (auto it = jets_.find(k); it != jets_.end()) return it->second;
  const auto& f = *frame_;
  JetTensor out;
  switch (o) {
    case Obj::G: out = f.g; break;
    case Obj::Ginv: out = f.g_inv; break;
    case Obj::Eta: out = f.eta(); break;
    case Obj::Htensor: out = curvature::h_tensor(f); break;
    case Obj::Hc: out = permute(connection(owner).H, {0, 2, 1}); break;
    case Obj::Vc: out = permute(connection(owner).V, {0, 2, 1}); break;
    case Obj::Q: out = torsions(owner).Q; break;
    case Obj::T: out = torsions(owner).T; break;
    case Obj::Rhat: out = torsions(owner).Rhat; break;
    case Obj::Phat: out = torsions(owner).Phat; break;
    case Obj::Shat: out = torsions(owner).Shat; break;
    case Obj::R: out = permute(curvatures(owner).R, kArgOrder); break;
    case Obj::P: out = permute(curvatures(owner).P, kArgOrder); break;
    case Obj::S: out = permute(curvatures(owner).S, kArgOrder); break;
    case Obj::Tl: out = lower_torsion(torsions(owner).T, f.g); break;
    case Obj::Phatl: out = lower_torsion(torsions(owner).Phat, f.g); break;
    case Obj::Rl: out = lower_curvature(curvatures(owner).R, f.g); break;
    case Obj::Pl: out = lower_curvature(curvatures(owner).P, f.g); break;
    case Obj::Sl: out = lower_curvature(curvatures(owner).S, f.g); break;
  }
  return jets_.emplace(k, std::move(out)).first->second;
}

const JetTensor& PointContext::deriv_jets(Obj o, ConnectionKind owner, Der d, ConnectionKind by) {
  if (d == Der::None) return jets(o, owner);
  const Key k = key(o, owner, d, by);
  if (auto it = jets_.find(k); it != jets_.end()) return it->second;
  const JetTensor& src = jets(o, owner);
  JetTensor out = d == Der::H ? h_cov_deriv(src, connection(by)) : v_cov_deriv(src, connection(by));
  return jets_.emplace(k, std::move(out)).first->second;
}

const PiTensor& PointContext::value(Obj o, ConnectionKind owner, Der d, ConnectionKind by) {
  const Key k = key(o, owner, d, by);
  if (auto it = values_.find(k); it != values_.end()) return it->second;
  PiTensor v = values(deriv_jets(o, owner, d, by));
  return values_.emplace(k, std::move(v)).first->second;
}

void Eval::note(double magnitude) { scale_ = std::max(scale_, std::abs(magnitude)); }
void Eval::note(const PiTensor& t) { note(geometry::max_abs(t)); }

const PiTensor& Eval::t(Obj o, ConnectionKind owner) {
  const PiTensor& r = ctx_.value(o, owner);
  note(r);
  return r;
}
const PiTensor& Eval::h(Obj o, ConnectionKind owner, ConnectionKind by) {
  const PiTensor& r = ctx_.value(o, owner, Der::H, by);
  note(r);
  return r;
}
const PiTensor& Eval::v(Obj o, ConnectionKind owner, ConnectionKind by) {
  const PiTensor& r = ctx_.value(o, owner, Der::V, by);
  note(r);
  return r;
}

Vec Eval::eta_vec() { return ctx_.value(Obj::Eta, ConnectionKind::Cartan).data(); }
Arg Eval::eta() { return Arg(eta_vec()); }

}  // namespace finsler::identities
