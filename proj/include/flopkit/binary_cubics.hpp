#pragma once

// Binary cubic forms over Q: discriminant, root-multiplicity strata
// S0 c S1 c S2 c S3, and the GL2 pullback action. Roots are handled through
// gcd/multiplicity logic over Q; no extension fields.

#include "flopkit/rational.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace flopkit {

enum class Stratum { S0, S1, S2, S3 };

inline const char* stratum_name(Stratum s) {
  switch (s) {
    case Stratum::S0: return "Sigma0";
    case Stratum::S1: return "Sigma1";
    case Stratum::S2: return "Sigma2";
    default: return "Sigma3";
  }
}

// A point [u:v] of P^1, up to scale.
struct ProjectivePoint {
  Rat u;
  Rat v;
  ProjectivePoint(Rat u_, Rat v_) : u(std::move(u_)), v(std::move(v_)) {
    if (u == 0 && v == 0) throw std::invalid_argument("projective point (0,0)");
  }
  bool same_point(const ProjectivePoint& o) const { return u * o.v - v * o.u == 0; }
};

// Homogeneous binary form of degree d, coefficients c[k] of t1^(d-k) t2^k.
using BinaryForm = std::vector<Rat>;

inline int form_degree(const BinaryForm& f) { return static_cast<int>(f.size()) - 1; }

inline bool form_is_zero(const BinaryForm& f) {
  for (const auto& c : f)
    if (c != 0) return false;
  return true;
}

namespace detail {

// Univariate gcd over Q, coefficients low-to-high in x, made monic.
inline std::vector<Rat> poly_trim(std::vector<Rat> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline std::vector<Rat> poly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat q = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a = poly_trim(std::move(a));
  }
  return a;
}

inline std::vector<Rat> poly_gcd(std::vector<Rat> a, std::vector<Rat> b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    auto r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace detail

// gcd of nonzero binary forms: split off t1^i t2^j, dehomogenize, Euclid.
inline BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g) {
  if (form_is_zero(f)) return g;
  if (form_is_zero(g)) return f;
  auto split = [](const BinaryForm& h) {
    int d = form_degree(h);
    int t2pow = 0;
    while (h[t2pow] == 0) ++t2pow;  // h = t2^t2pow * (...)
    int t1pow = 0;
    while (h[d - t1pow] == 0) ++t1pow;  // trailing t1 powers
    // Dehomogenized core in x = t2/t1, low-to-high: coefficients c[t2pow..d-t1pow].
    std::vector<Rat> core(h.begin() + t2pow, h.end() - t1pow);
    return std::tuple<int, int, std::vector<Rat>>(t1pow, t2pow, core);
  };
  auto [a1, a2, pa] = split(f);
  auto [b1, b2, pb] = split(g);
  auto core = detail::poly_gcd(pa, pb);
  int t1pow = std::min(a1, b1), t2pow = std::min(a2, b2);
  // Rehomogenize: degree = t1pow + t2pow + deg(core).
  int cd = static_cast<int>(core.size()) - 1;
  BinaryForm out(t1pow + t2pow + cd + 1, Rat(0));
  for (int k = 0; k <= cd; ++k) out[t2pow + k] = core[k];
  return out;
}

struct BinaryCubic {
  // Coefficients of t1^3, t1^2 t2, t1 t2^2, t2^3.
  Rat c30, c21, c12, c03;

  BinaryCubic() : c30(0), c21(0), c12(0), c03(0) {}
  BinaryCubic(Rat a, Rat b, Rat c, Rat d)
      : c30(std::move(a)), c21(std::move(b)), c12(std::move(c)), c03(std::move(d)) {}

  static BinaryCubic t1_cubed() { return BinaryCubic(1, 0, 0, 0); }
  static BinaryCubic t1sq_t2() { return BinaryCubic(0, 1, 0, 0); }
  static BinaryCubic fermat2() { return BinaryCubic(1, 0, 0, 1); }  // t1^3 + t2^3

  bool is_zero() const { return c30 == 0 && c21 == 0 && c12 == 0 && c03 == 0; }

  std::array<Rat, 4> coeffs() const { return {c30, c21, c12, c03}; }
  BinaryForm form() const { return {c30, c21, c12, c03}; }

  Rat eval(const Rat& t1, const Rat& t2) const {
    return c30 * t1 * t1 * t1 + c21 * t1 * t1 * t2 + c12 * t1 * t2 * t2 + c03 * t2 * t2 * t2;
  }

  // (psi o g)(t) = psi(g t) for a 2x2 matrix g acting on column vectors.
  BinaryCubic pullback(const std::array<std::array<Rat, 2>, 2>& g) const {
    // t1 -> g00 t1 + g01 t2, t2 -> g10 t1 + g11 t2; expand monomial by monomial.
    BinaryForm acc(4, Rat(0));
    const std::array<Rat, 4> c = coeffs();
    for (int k = 0; k < 4; ++k) {
      if (c[k] == 0) continue;
      // (g00 t1 + g01 t2)^(3-k) (g10 t1 + g11 t2)^k: binomial convolution.
      BinaryForm term(4, Rat(0));
      for (int i = 0; i <= 3 - k; ++i)
        for (int j = 0; j <= k; ++j) {
          Rat binom = Rat(detail_binom(3 - k, i)) * Rat(detail_binom(k, j));
          Rat coeff = binom * pow_rat(g[0][0], 3 - k - i) * pow_rat(g[0][1], i) *
                      pow_rat(g[1][0], k - j) * pow_rat(g[1][1], j);
          term[i + j] += coeff;
        }
      for (int m = 0; m < 4; ++m) acc[m] += c[k] * term[m];
    }
    return BinaryCubic(acc[0], acc[1], acc[2], acc[3]);
  }

  bool operator==(const BinaryCubic&) const = default;

 private:
  static long detail_binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }
  static Rat pow_rat(const Rat& x, int e) {
    Rat r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
  }
};

// Classical discriminant 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2,
// normalized so disc(t1^3 + t2^3) = -27. Vanishes exactly on S2.
inline Rat discriminant(const BinaryCubic& psi) {
  const Rat &a = psi.c30, &b = psi.c21, &c = psi.c12, &d = psi.c03;
  return Rat(18) * a * b * c * d - Rat(4) * b * b * b * d + b * b * c * c -
         Rat(4) * a * c * c * c - Rat(27) * a * a * d * d;
}

inline BinaryForm cubic_dt1(const BinaryCubic& p) { return {Rat(3) * p.c30, Rat(2) * p.c21, p.c12}; }
inline BinaryForm cubic_dt2(const BinaryCubic& p) { return {p.c21, Rat(2) * p.c12, Rat(3) * p.c03}; }

inline Stratum stratum(const BinaryCubic& psi) {
  if (psi.is_zero()) return Stratum::S0;
  BinaryForm g = form_gcd(form_gcd(psi.form(), cubic_dt1(psi)), cubic_dt2(psi));
  switch (form_degree(g)) {
    case 2: return Stratum::S1;  // triple root
    case 1: return Stratum::S2;  // double root
    default: return Stratum::S3;
  }
}

// The repeated-root point of a S1/S2 cubic (the root of gcd(psi, dpsi)).
inline std::optional<ProjectivePoint> repeated_root(const BinaryCubic& psi) {
  if (psi.is_zero()) return std::nullopt;
  BinaryForm g = form_gcd(form_gcd(psi.form(), cubic_dt1(psi)), cubic_dt2(psi));
  int d = form_degree(g);
  if (d == 0) return std::nullopt;
  if (d == 1) {
    // g = g0 t1 + g1 t2 vanishes at [-g1 : g0].
    return ProjectivePoint(-g[1], g[0]);
  }
  // d == 2, g = ell^2 for the triple root ell: root of dt1 g = 2g0 t1 + g1 t2.
  if (g[0] != 0 || g[1] != 0) return ProjectivePoint(-g[1], Rat(2) * g[0]);
  return ProjectivePoint(Rat(1), Rat(0));  // g = c * t2^2
}

inline int root_multiplicity(const BinaryCubic& psi, const ProjectivePoint& p) {
  if (psi.is_zero()) throw std::invalid_argument("root_multiplicity: zero cubic");
  if (p.v != 0) {
    // Dehomogenize at t2=1: q(x) = psi(x,1); divide by (x - u/v) repeatedly.
    Rat x0 = p.u / p.v;
    std::vector<Rat> q = {psi.c03, psi.c12, psi.c21, psi.c30};  // low-to-high in x = t1
    q = detail::poly_trim(std::move(q));
    int mult = 0;
    while (!q.empty()) {
      // Evaluate and synthetic-divide.
      Rat val(0);
      for (auto it = q.rbegin(); it != q.rend(); ++it) val = val * x0 + *it;
      if (val != 0) break;
      std::vector<Rat> next(q.size() - 1, Rat(0));
      Rat carry(0);
      for (size_t i = q.size(); i-- > 1;) {
        carry = q[i] + carry * x0;
        next[i - 1] = carry;
      }
      q = detail::poly_trim(std::move(next));
      ++mult;
    }
    return mult;
  }
  // p = [1:0]: multiplicity of the t2 factor; c[k] multiplies t1^(3-k) t2^k.
  const std::array<Rat, 4> c = psi.coeffs();
  for (int k = 0; k < 4; ++k)
    if (c[k] != 0) return k;
  return 3;
}

}  // namespace flopkit
