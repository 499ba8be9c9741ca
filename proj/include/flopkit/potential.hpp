#pragma once

// The superpotential W = sum_k psi_k * fhat(Phi_1 x (3-k), Phi_2 x k) for a
// fixed cubic f in six variables, with fhat the symmetric trilinear form
// normalized by fhat(x,x,x) = f(x). Exact evaluation, exact gradients, the
// pullback-cubic criterion for the psi-derivatives, and the stratumwise
// critical-locus report.

#include "flopkit/git.hpp"

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace flopkit {

// A cubic in six variables, keyed by sorted index triples 0 <= i <= j <= k < 6.
struct Cubic6 {
  std::map<std::array<int, 3>, Rat> coeff;

  static Cubic6 fermat() {
    Cubic6 f;
    for (int i = 0; i < 6; ++i) f.coeff[{i, i, i}] = 1;
    return f;
  }

  bool is_fermat() const { return coeff == fermat().coeff; }

  Rat eval(const std::array<Rat, 6>& x) const {
    Rat s(0);
    for (auto& [t, c] : coeff) s += c * x[t[0]] * x[t[1]] * x[t[2]];
    return s;
  }

  // fhat(x,y,z): each monomial c * x_i x_j x_k contributes c/N times the sum
  // over its N distinct orderings.
  Rat fhat(const std::array<Rat, 6>& x, const std::array<Rat, 6>& y,
           const std::array<Rat, 6>& z) const {
    Rat s(0);
    for (auto& [t, c] : coeff) {
      std::array<int, 3> p = t;
      Rat acc(0);
      int n = 0;
      std::sort(p.begin(), p.end());
      do {
        acc += x[p[0]] * y[p[1]] * z[p[2]];
        ++n;
      } while (std::next_permutation(p.begin(), p.end()));
      s += c * acc / n;
    }
    return s;
  }
};

inline std::array<Rat, 6> basis6(int i) {
  std::array<Rat, 6> e{};
  e[i] = 1;
  return e;
}

inline Rat eval_W(const Cubic6& f, const PointV& p) {
  const auto& r1 = p.phi[0];
  const auto& r2 = p.phi[1];
  return p.psi.c30 * f.fhat(r1, r1, r1) + p.psi.c21 * f.fhat(r1, r1, r2) +
         p.psi.c12 * f.fhat(r1, r2, r2) + p.psi.c03 * f.fhat(r2, r2, r2);
}

struct WGradient {
  std::array<std::array<Rat, 6>, 2> dphi{};
  std::array<Rat, 4> dpsi{};

  bool phi_part_zero() const {
    for (const auto& row : dphi)
      for (const auto& c : row)
        if (c != 0) return false;
    return true;
  }
  bool all_zero() const {
    if (!phi_part_zero()) return false;
    for (const auto& c : dpsi)
      if (c != 0) return false;
    return true;
  }
};

inline WGradient grad_W(const Cubic6& f, const PointV& p) {
  const auto& r1 = p.phi[0];
  const auto& r2 = p.phi[1];
  WGradient g;
  for (int i = 0; i < 6; ++i) {
    auto e = basis6(i);
    g.dphi[0][i] = Rat(3) * p.psi.c30 * f.fhat(e, r1, r1) +
                   Rat(2) * p.psi.c21 * f.fhat(e, r1, r2) + p.psi.c12 * f.fhat(e, r2, r2);
    g.dphi[1][i] = p.psi.c21 * f.fhat(r1, r1, e) + Rat(2) * p.psi.c12 * f.fhat(r1, r2, e) +
                   Rat(3) * p.psi.c03 * f.fhat(r2, r2, e);
  }
  g.dpsi = {f.fhat(r1, r1, r1), f.fhat(r1, r1, r2), f.fhat(r1, r2, r2), f.fhat(r2, r2, r2)};
  return g;
}

// f o (t1 Phi_1 + t2 Phi_2), a binary cubic; the psi-gradient vanishes
// exactly when this is the zero cubic.
inline BinaryCubic pullback_cubic(const Cubic6& f, const PointV& p) {
  const auto& r1 = p.phi[0];
  const auto& r2 = p.phi[1];
  return BinaryCubic(f.fhat(r1, r1, r1), Rat(3) * f.fhat(r1, r1, r2),
                     Rat(3) * f.fhat(r1, r2, r2), f.fhat(r2, r2, r2));
}

// --- Stratumwise critical-locus report. -----------------------------------

struct CriticalCheck {
  std::string stratum;
  std::string claim;
  bool pass{false};
  bool indeterminate{false};
  std::string detail;
};

struct CriticalReport {
  bool fermat{false};
  std::vector<CriticalCheck> checks;
  long sigma2_semistable_samples{0};
  long sigma2_semistable_noncritical{0};

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass && !c.indeterminate) return false;
    return sigma2_semistable_samples == sigma2_semistable_noncritical;
  }
};

namespace detail {

inline Rat random_rat(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  for (;;) {
    Rat r(num(rng), den(rng));
    if (!nonzero || r != 0) return r;
  }
}

inline std::array<std::array<Rat, 2>, 2> random_gl2(std::mt19937_64& rng) {
  for (;;) {
    std::array<std::array<Rat, 2>, 2> g = {
        {{random_rat(rng), random_rat(rng)}, {random_rat(rng), random_rat(rng)}}};
    if (g[0][0] * g[1][1] - g[0][1] * g[1][0] != 0) return g;
  }
}

inline std::array<Rat, 6> random_vec6(std::mt19937_64& rng) {
  std::array<Rat, 6> v;
  for (auto& c : v) c = random_rat(rng);
  return v;
}

}  // namespace detail

// For the Fermat cubic the stratum formulas reduce to explicit squares and
// the vanishing-locus claims are exact; for a general f the same identities
// are sampled and the locus claims are reported indeterminate.
inline CriticalReport critical_stratum_check(const Cubic6& f, unsigned long seed = 0,
                                             long samples = 1000) {
  std::mt19937_64 rng(seed);
  CriticalReport rep;
  rep.fermat = f.is_fermat();
  const int id_checks = 32;

  auto rand_point = [&](const BinaryCubic& psi) {
    PointV p;
    p.psi = psi;
    for (int i = 0; i < 6; ++i) {
      p.phi[0][i] = detail::random_rat(rng);
      p.phi[1][i] = detail::random_rat(rng);
    }
    return p;
  };

  {  // Sigma0: psi = 0 forces W == 0, so the Phi-gradient vanishes.
    CriticalCheck c{"Sigma0", "psi = 0 makes every Phi-derivative vanish identically", true, false, ""};
    for (int t = 0; t < id_checks && c.pass; ++t) {
      PointV p = rand_point(BinaryCubic());
      if (!grad_W(f, p).phi_part_zero() || eval_W(f, p) != 0) c.pass = false;
    }
    rep.checks.push_back(c);
  }
  {  // Sigma1: psi = t1^3, W = f(Phi_1); gradient vanishes iff Phi_1 = 0.
    CriticalCheck c{"Sigma1", "W = f(Phi_1); Phi-gradient vanishes exactly at Phi_1 = 0",
                    true, !rep.fermat, ""};
    for (int t = 0; t < id_checks && c.pass; ++t) {
      PointV p = rand_point(BinaryCubic::t1_cubed());
      WGradient g = grad_W(f, p);
      if (eval_W(f, p) != f.eval(p.phi[0])) c.pass = false;
      for (int i = 0; i < 6; ++i) {
        if (rep.fermat && g.dphi[0][i] != Rat(3) * p.phi[0][i] * p.phi[0][i]) c.pass = false;
        if (g.dphi[1][i] != 0) c.pass = false;
      }
      // Vanishing at Phi_1 = 0.
      p.phi[0] = {};
      if (!grad_W(f, p).phi_part_zero()) c.pass = false;
    }
    if (rep.fermat)
      c.detail = "dW/dPhi_1i = 3 Phi_1i^2, a sum of squares; zero iff Phi_1 = 0";
    rep.checks.push_back(c);
  }
  {  // Sigma2: psi = t1^2 t2; dW/dPhi_2i recovers the partials of f at Phi_1.
    CriticalCheck c{"Sigma2", "dW/dPhi_2i = fhat(Phi_1,Phi_1,e_i); vanishes exactly at Phi_1 = 0",
                    true, !rep.fermat, ""};
    for (int t = 0; t < id_checks && c.pass; ++t) {
      PointV p = rand_point(BinaryCubic::t1sq_t2());
      WGradient g = grad_W(f, p);
      if (eval_W(f, p) != f.fhat(p.phi[0], p.phi[0], p.phi[1])) c.pass = false;
      for (int i = 0; i < 6; ++i)
        if (rep.fermat && g.dphi[1][i] != p.phi[0][i] * p.phi[0][i]) c.pass = false;
      // At Phi_1 = 0 the Phi_1-derivatives (quadratic in Phi_1) vanish too.
      p.phi[0] = {};
      if (!grad_W(f, p).phi_part_zero()) c.pass = false;
    }
    if (rep.fermat)
      c.detail = "dW/dPhi_2i = Phi_1i^2; the remaining derivatives vanish on Phi_1 = 0";
    rep.checks.push_back(c);
  }
  {  // Sigma3: psi = t1^3 + t2^3, W = f(Phi_1) + f(Phi_2); vanishes only at Phi = 0.
    CriticalCheck c{"Sigma3", "W = f(Phi_1) + f(Phi_2); Phi-gradient vanishes only at Phi = 0",
                    true, !rep.fermat, ""};
    for (int t = 0; t < id_checks && c.pass; ++t) {
      PointV p = rand_point(BinaryCubic::fermat2());
      if (eval_W(f, p) != f.eval(p.phi[0]) + f.eval(p.phi[1])) c.pass = false;
      WGradient g = grad_W(f, p);
      if (rep.fermat)
        for (int i = 0; i < 6; ++i)
          if (g.dphi[0][i] != Rat(3) * p.phi[0][i] * p.phi[0][i] ||
              g.dphi[1][i] != Rat(3) * p.phi[1][i] * p.phi[1][i])
            c.pass = false;
    }
    if (rep.fermat) c.detail = "both rows of the gradient are sums of squares";
    rep.checks.push_back(c);
  }

  // Semistable points with psi in Sigma2 are never critical (their gradient
  // does not fully vanish): the critical ones have the image of Phi inside
  // the double root, which is exactly the unstable condition.
  for (long t = 0; t < samples; ++t) {
    auto g2 = detail::random_gl2(rng);
    BinaryCubic psi = BinaryCubic::t1sq_t2().pullback(g2);
    auto root = repeated_root(psi);
    PointV p;
    p.psi = psi;
    do {
      for (int i = 0; i < 6; ++i) {
        p.phi[0][i] = detail::random_rat(rng);
        p.phi[1][i] = detail::random_rat(rng);
      }
    } while (p.image_in_line(*root));
    ++rep.sigma2_semistable_samples;
    if (!semistable(p, Side::Plus)) continue;  // should not happen
    if (!grad_W(f, p).all_zero()) ++rep.sigma2_semistable_noncritical;
  }
  return rep;
}

}  // namespace flopkit
