#pragma once

// The finite group G = (Z3 x Z3) : Z2 inside GL2, realized as the stabilizer
// of t1^3 + t2^3. Elements are diag(w^i, w^j) optionally post-composed with
// the coordinate swap. The nine irreducible characters are built explicitly:
// six linear ones through det, three 2-dimensional ones induced from the
// nontrivial character orbits of Z3 x Z3. All values live in Z[w].

#include "flopkit/characters.hpp"
#include "flopkit/eisenstein.hpp"
#include "flopkit/weights.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace flopkit {

struct GammaElement {
  bool swap{false};
  int i{0};  // phases in Z3
  int j{0};

  // Matrix: diag(w^i, w^j) followed by the swap when requested.
  std::array<std::array<Eisenstein, 2>, 2> matrix() const {
    Eisenstein wi = Eisenstein::omega_pow(i), wj = Eisenstein::omega_pow(j);
    if (!swap) return {{{wi, Eisenstein()}, {Eisenstein(), wj}}};
    return {{{Eisenstein(), wj}, {wi, Eisenstein()}}};
  }

  auto operator<=>(const GammaElement&) const = default;
};

inline GammaElement gamma_mul(const GammaElement& g, const GammaElement& h) {
  // s^eg D(gi,gj) s^eh D(hi,hj) = s^(eg+eh) D(swap^eh(gi,gj) + (hi,hj)).
  int gi = g.i, gj = g.j;
  if (h.swap) std::swap(gi, gj);
  return GammaElement{g.swap != h.swap, (gi + h.i) % 3, (gj + h.j) % 3};
}

inline GammaElement gamma_inv(const GammaElement& g) {
  if (!g.swap) return GammaElement{false, (3 - g.i) % 3, (3 - g.j) % 3};
  // (s D(i,j))^-1 = D(-i,-j) s = s D(-j,-i).
  return GammaElement{true, (3 - g.j) % 3, (3 - g.i) % 3};
}

// Pullback of the cubic t1^3 + t2^3 along the element's matrix; returns the
// four coefficients of (psi o g). Used to certify stabilizer membership.
inline std::array<Eisenstein, 4> gamma_pullback_fermat(const GammaElement& g) {
  auto m = g.matrix();
  std::array<Eisenstein, 4> out{};
  // (m00 t1 + m01 t2)^3 + (m10 t1 + m11 t2)^3, binomial expansion.
  for (int row = 0; row < 2; ++row) {
    Eisenstein a = m[row][0], b = m[row][1];
    Eisenstein a2 = a * a, b2 = b * b;
    const std::int64_t binom[4] = {1, 3, 3, 1};
    std::array<Eisenstein, 4> pw = {a2 * a, a2 * b, a * b2, b2 * b};
    for (int k = 0; k < 4; ++k) out[k] += Eisenstein(binom[k], 0) * pw[k];
  }
  return out;
}

struct ConjClass {
  GammaElement rep;
  std::vector<GammaElement> members;
  int size() const { return static_cast<int>(members.size()); }
};

struct GammaGroup {
  std::vector<GammaElement> elements;  // all 18, sorted
  std::vector<ConjClass> classes;      // sorted by minimal member

  static GammaGroup build() {
    GammaGroup g;
    for (int s = 0; s < 2; ++s)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g.elements.push_back(GammaElement{s == 1, i, j});
    std::sort(g.elements.begin(), g.elements.end());

    std::set<GammaElement> seen;
    for (const auto& e : g.elements) {
      if (seen.count(e)) continue;
      std::set<GammaElement> orbit;
      for (const auto& h : g.elements) orbit.insert(gamma_mul(gamma_mul(h, e), gamma_inv(h)));
      ConjClass cls;
      cls.rep = *orbit.begin();
      cls.members.assign(orbit.begin(), orbit.end());
      g.classes.push_back(cls);
      seen.insert(orbit.begin(), orbit.end());
    }
    std::sort(g.classes.begin(), g.classes.end(),
              [](const ConjClass& a, const ConjClass& b) { return a.rep < b.rep; });
    return g;
  }

  // Subgroup generated by all commutators, by closure.
  std::set<GammaElement> commutator_subgroup() const {
    std::set<GammaElement> gens;
    for (const auto& a : elements)
      for (const auto& b : elements)
        gens.insert(gamma_mul(gamma_mul(a, b), gamma_mul(gamma_inv(a), gamma_inv(b))));
    std::set<GammaElement> sub = gens;
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<GammaElement> cur(sub.begin(), sub.end());
      for (const auto& a : cur)
        for (const auto& b : cur)
          if (sub.insert(gamma_mul(a, b)).second) grew = true;
    }
    return sub;
  }
};

// det(g) as a 6th root of unity: sign * w^k.
struct Unit6 {
  int sign{0};  // exponent of -1, in {0,1}
  int wexp{0};  // exponent of w, in {0,1,2}

  Eisenstein value() const {
    Eisenstein v = Eisenstein::omega_pow(wexp);
    return sign ? -v : v;
  }
  Unit6 pow(const Int& e) const {
    long ei = static_cast<long>(e % 6);
    return Unit6{static_cast<int>(((sign * ei) % 2 + 2) % 2),
                 static_cast<int>(((wexp * ei) % 3 + 3) % 3)};
  }
};

inline Unit6 gamma_det(const GammaElement& g) {
  // det diag(w^i,w^j) = w^(i+j); det of the swapped form is -w^(i+j).
  return Unit6{g.swap ? 1 : 0, (g.i + g.j) % 3};
}

struct GammaIrrep {
  std::string label;
  int dim{1};
  std::vector<Eisenstein> values;  // per class, in GammaGroup::classes order
};

struct GammaCharTable {
  GammaGroup group;
  std::vector<GammaIrrep> irreps;  // 9 of them

  // Exact inner product <chi, psi> = (1/18) sum size * chi * conj(psi).
  // Throws if the result is not a rational integer.
  std::int64_t inner(const std::vector<Eisenstein>& chi, const std::vector<Eisenstein>& psi) const {
    Eisenstein acc;
    for (size_t c = 0; c < group.classes.size(); ++c)
      acc += Eisenstein(group.classes[c].size(), 0) * chi[c] * psi[c].conj();
    if (!acc.is_rational_integer() || acc.x % 18 != 0)
      throw std::logic_error("character inner product is not an integer");
    return acc.x / 18;
  }
};

inline GammaCharTable character_table() {
  GammaCharTable t;
  t.group = GammaGroup::build();
  const auto& classes = t.group.classes;

  // Six linear characters: powers of det.
  for (int k = 0; k < 6; ++k) {
    GammaIrrep ir;
    ir.label = "det^" + std::to_string(k);
    ir.dim = 1;
    for (const auto& cls : classes) ir.values.push_back(gamma_det(cls.rep).pow(k).value());
    t.irreps.push_back(std::move(ir));
  }
  // Three 2-dimensional irreps induced from the Z3xZ3 character orbits
  // {(1,0),(0,1)}, {(2,0),(0,2)}, {(1,2),(2,1)}.
  const std::array<std::array<int, 2>, 3> orbit_reps = {{{1, 0}, {2, 0}, {1, 2}}};
  for (const auto& mn : orbit_reps) {
    GammaIrrep ir;
    ir.label = "ind(" + std::to_string(mn[0]) + "," + std::to_string(mn[1]) + ")";
    ir.dim = 2;
    for (const auto& cls : classes) {
      const auto& g = cls.rep;
      if (g.swap) {
        ir.values.push_back(Eisenstein());
      } else {
        ir.values.push_back(Eisenstein::omega_pow(mn[0] * g.i + mn[1] * g.j) +
                            Eisenstein::omega_pow(mn[0] * g.j + mn[1] * g.i));
      }
    }
    t.irreps.push_back(std::move(ir));
  }
  return t;
}

// Trace of Sym^c T (x) det^b at a group element, by the monomial action on
// Sym^c of the 2x2 matrix.
inline Eisenstein gamma_trace(const GammaElement& g, const Int& c_, const Int& b) {
  long c = static_cast<long>(c_);
  Eisenstein tr;
  if (!g.swap) {
    for (long p = 0; p <= c; ++p)
      tr += Eisenstein::omega_pow(static_cast<int>(((g.i * p + g.j * (c - p)) % 3 + 3) % 3));
  } else {
    // Antidiagonal [[0, w^j],[w^i, 0]]: only balanced monomials contribute.
    if (c % 2 == 0) {
      long h = c / 2;
      tr = Eisenstein::omega_pow(static_cast<int>((((g.i + g.j) * h) % 3 + 3) % 3));
    }
  }
  return gamma_det(g).pow(b).value() * tr;
}

// Restriction of the GL2 irrep with highest weight chi to the finite group,
// as multiplicities over the nine irreducibles.
inline std::map<std::string, std::int64_t> restrict_gl2(const GammaCharTable& t,
                                                        const Weight& chi) {
  if (!chi.dominant()) throw std::invalid_argument("restrict_gl2: non-dominant weight");
  std::vector<Eisenstein> tr;
  for (const auto& cls : t.group.classes) tr.push_back(gamma_trace(cls.rep, chi.a - chi.b, chi.b));
  std::map<std::string, std::int64_t> out;
  for (const auto& ir : t.irreps) {
    std::int64_t m = t.inner(tr, ir.values);
    if (m != 0) out[ir.label] = m;
  }
  return out;
}

// Order of the linear character det^k |_Gamma in the character group.
inline int restricted_det_order(const GammaCharTable& t) {
  for (int n = 1; n <= 6; ++n) {
    bool trivial = true;
    for (const auto& cls : t.group.classes)
      if (!(gamma_det(cls.rep).pow(n).value() == Eisenstein(1, 0))) trivial = false;
    if (trivial) return n;
  }
  return 0;
}

}  // namespace flopkit
