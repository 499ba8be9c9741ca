#pragma once

// The GIT problem [V/GL2] with V = Hom(C^6,T) + Sym^3 T*: torus weights of V
// and of gl2, the eta window widths, the closed-form semistability criteria
// for both stability conditions, the KN stratum predicates (copied verbatim
// from the Z/Y coordinate tables), and the residual-weight slice models.
//
// Sign conventions are pinned in one place, by two requirements:
//   * eta(lambda0, lambda1, lambda2) = (12, 5, 12) with the V-weights below,
//   * the Z/Y predicates below, with psi-coordinates (c30,c21,c12,c03).
// Every other module consumes weights through this file's GitProblem.

#include "flopkit/binary_cubics.hpp"
#include "flopkit/weights.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace flopkit {

enum class Side { Minus, Plus };

struct GitProblem {
  std::vector<Weight> v_weights;
  std::vector<Weight> g_weights;
  std::vector<OnePS> lambdas;

  static GitProblem standard() {
    GitProblem p;
    for (int k = 0; k < 6; ++k) p.v_weights.emplace_back(1, 0);  // Phi row 1
    for (int k = 0; k < 6; ++k) p.v_weights.emplace_back(0, 1);  // Phi row 2
    p.v_weights.emplace_back(-3, 0);  // coefficient directions of Sym^3 T*
    p.v_weights.emplace_back(-2, -1);
    p.v_weights.emplace_back(-1, -2);
    p.v_weights.emplace_back(0, -3);
    p.g_weights = {Weight(0, 0), Weight(0, 0), Weight(1, -1), Weight(-1, 1)};
    p.lambdas = {kLambda0, kLambda1, kLambda2};
    return p;
  }

  Weight total_v_weight() const {
    Weight s(0, 0);
    for (const auto& w : v_weights) s = s + w;
    return s;
  }
  bool calabi_yau() const { return total_v_weight() == Weight(0, 0); }
};

inline Int eta(const GitProblem& p, const OnePS& l) {
  Int e = 0;
  for (const auto& w : p.v_weights) {
    Int v = pair(l, w);
    if (v > 0) e += v;
  }
  for (const auto& w : p.g_weights) {
    Int v = pair(l, w);
    if (v > 0) e -= v;
  }
  return e;
}

// A point of V: a 2x6 matrix Phi and a binary cubic psi.
struct PointV {
  std::array<std::array<Rat, 6>, 2> phi{};
  BinaryCubic psi;

  bool phi_is_zero() const {
    for (const auto& row : phi)
      for (const auto& c : row)
        if (c != 0) return false;
    return true;
  }
  bool row_is_zero(int r) const {
    for (const auto& c : phi[r])
      if (c != 0) return false;
    return true;
  }
  int phi_rank() const {
    bool nonzero = !phi_is_zero();
    if (!nonzero) return 0;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (phi[0][i] * phi[1][j] - phi[0][j] * phi[1][i] != 0) return 2;
    return 1;
  }
  // Image of Phi contained in the line spanned by (u,v)?
  bool image_in_line(const ProjectivePoint& p) const {
    for (int i = 0; i < 6; ++i)
      if (phi[0][i] * p.v - phi[1][i] * p.u != 0) return false;
    return true;
  }
};

// Twisted action g.(Phi, psi) = (g Phi, psi o g^-1).
inline PointV act(const std::array<std::array<Rat, 2>, 2>& g, const PointV& p) {
  Rat det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  if (det == 0) throw std::invalid_argument("act: singular group element");
  std::array<std::array<Rat, 2>, 2> ginv = {
      {{g[1][1] / det, -g[0][1] / det}, {-g[1][0] / det, g[0][0] / det}}};
  PointV q;
  for (int i = 0; i < 6; ++i) {
    q.phi[0][i] = g[0][0] * p.phi[0][i] + g[0][1] * p.phi[1][i];
    q.phi[1][i] = g[1][0] * p.phi[0][i] + g[1][1] * p.phi[1][i];
  }
  q.psi = p.psi.pullback(ginv);
  return q;
}

// Closed-form semistability.
//   minus: rank Phi = 2.
//   plus:  psi has at least two distinct roots, and when psi has exactly a
//          double root the image of Phi must not lie in that root.
inline bool semistable(const PointV& p, Side side) {
  if (side == Side::Minus) return p.phi_rank() == 2;
  Stratum s = stratum(p.psi);
  if (s == Stratum::S0 || s == Stratum::S1) return false;
  if (s == Stratum::S3) return true;
  auto root = repeated_root(p.psi);
  return !p.image_in_line(*root);
}

// --- KN stratum predicates, verbatim from the coordinate tables. ---------

enum class StratumPiece { Z0, Y0, Z1, Y1, Z2, Y2 };

inline bool psi_coeffs_zero_except(const BinaryCubic& psi, std::initializer_list<int> keep) {
  std::array<Rat, 4> c = psi.coeffs();
  std::array<bool, 4> free{};
  for (int k : keep) free[k] = true;
  for (int k = 0; k < 4; ++k)
    if (!free[k] && c[k] != 0) return false;
  return true;
}

inline bool in_stratum(const PointV& p, Side side, StratumPiece piece) {
  const std::array<Rat, 4> c = p.psi.coeffs();
  bool phi0 = p.phi_is_zero();
  bool row1 = !p.row_is_zero(0);  // Phi_1 nonzero
  bool row2zero = p.row_is_zero(1);
  if (side == Side::Minus) {
    switch (piece) {
      case StratumPiece::Z0: return phi0 && p.psi.is_zero();
      case StratumPiece::Y0: return phi0;
      case StratumPiece::Z1: return row1 && row2zero && psi_coeffs_zero_except(p.psi, {0});
      case StratumPiece::Y1: return row1 && row2zero;
      // lambda2 is redundant on the minus side: everything it destabilizes
      // is already destabilized by lambda1 (recorded here, not re-verified;
      // the orbit-closure statement is not combinatorial).
      default: throw std::invalid_argument("no lambda2 stratum on the minus side");
    }
  }
  switch (piece) {
    case StratumPiece::Z0: return phi0 && p.psi.is_zero();
    case StratumPiece::Y0: return p.psi.is_zero();
    case StratumPiece::Z1: return row2zero && c[0] != 0 && psi_coeffs_zero_except(p.psi, {0});
    case StratumPiece::Y1: return c[0] != 0 && psi_coeffs_zero_except(p.psi, {0});
    case StratumPiece::Z2: return phi0 && c[1] != 0 && psi_coeffs_zero_except(p.psi, {1});
    case StratumPiece::Y2:
      return p.row_is_zero(0) && c[1] != 0 && psi_coeffs_zero_except(p.psi, {0, 1});
  }
  return false;
}

// --- Residual-weight slice models of the flop local structure. -----------

struct SliceModel {
  std::string name;
  std::string base;
  std::vector<Int> bundle_weights;   // residual 1-PS weights on the fibre
  std::vector<Int> isotropy_weights; // weighted-projective data, when any
};

inline SliceModel slice_weights(const std::string& model) {
  if (model == "generic-sing-slice-minus")
    return {model, "P4", {-2, -3}, {}};
  if (model == "generic-sing-slice-plus")
    return {model, "P1_{2:3}", {-1, -1, -1, -1, -1}, {2, 3}};
  if (model == "F-resolution")
    return {model, "P6_{1:1:1:1:1:1:6}", {1, 1, 1, 1, 1, 1, 6}, {}};
  throw std::invalid_argument("unknown slice model: " + model);
}

}  // namespace flopkit
