#pragma once

// Multigraded Koszul homology at desk scale.
//
// A problem is a list of lambda-homogeneous polynomials over an integer-
// weighted polynomial ring with exact rational coefficients. The pipeline:
//
//   1. specialize weight-zero invertible variables to 1 (invertibles with
//      nonzero weight get the adjoined-inverse encoding),
//   2. eliminate_linear: repeatedly remove an element containing a bare
//      linear variable occurring in none of its other monomials, by the
//      triangular substitution; Koszul homology and all lambda-weight
//      reports are unchanged,
//   3. if the reduced elements are all monomials, the complex splits over
//      the fine Z^n multigrading into finite slices, each computed
//      completely by exact Gaussian elimination; otherwise a total-degree
//      filtration truncation is used and the report is only certified to
//      the truncation.
//
// The Koszul generator e_i carries the multidegree and lambda-weight of its
// element, making the differential degree- and weight-preserving. For
// monomial problems the report also lists, per homological degree, the
// lambda-weights of a minimal generating set of the homology module; these
// are the stable, truncation-independent weight data of the torsion module.

#include "flopkit/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace flopkit {

// --- polynomials ----------------------------------------------------------

using Expv = std::vector<int>;  // exponent vector

inline int expv_total(const Expv& e) { return std::accumulate(e.begin(), e.end(), 0); }

struct Poly {
  std::map<Expv, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  bool is_monomial() const { return terms.size() == 1; }

  void add_term(const Expv& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  Poly plus(const Poly& o) const {
    Poly r = *this;
    for (auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
  }
  Poly scaled(const Rat& s) const {
    Poly r;
    if (s == 0) return r;
    for (auto& [e, c] : terms) r.terms[e] = c * s;
    return r;
  }
  Poly times(const Poly& o) const {
    Poly r;
    for (auto& [e1, c1] : terms)
      for (auto& [e2, c2] : o.terms) {
        Expv e = e1;
        for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }

  // Substitute variable v by the polynomial g (which must not contain v).
  Poly substituted(size_t v, const Poly& g) const {
    Poly r;
    for (auto& [e, c] : terms) {
      int k = e[v];
      Expv base = e;
      base[v] = 0;
      Poly part;
      part.add_term(base, c);
      for (int t = 0; t < k; ++t) part = part.times(g);
      r = r.plus(part);
    }
    return r;
  }

  // Remove a variable that no term uses.
  Poly with_var_dropped(size_t v) const {
    Poly r;
    for (auto& [e, c] : terms) {
      if (e[v] != 0) throw std::logic_error("dropping a live variable");
      Expv ne;
      ne.reserve(e.size() - 1);
      for (size_t i = 0; i < e.size(); ++i)
        if (i != v) ne.push_back(e[i]);
      r.terms.emplace(std::move(ne), c);
    }
    return r;
  }

  int max_total_degree() const {
    int d = 0;
    for (auto& [e, c] : terms) d = std::max(d, expv_total(e));
    return d;
  }
};

inline Poly poly_monomial(size_t nvars, std::initializer_list<std::pair<size_t, int>> exps,
                          Rat coeff = Rat(1)) {
  Expv e(nvars, 0);
  for (auto& [v, k] : exps) e[v] += k;
  Poly p;
  p.add_term(e, coeff);
  return p;
}

// --- graded ring and problems ----------------------------------------------

struct GradedRing {
  std::vector<std::string> var_names;
  std::vector<Int> weights;      // lambda-weight per variable
  std::vector<bool> invertible;  // handled by specialization / adjunction

  size_t nvars() const { return var_names.size(); }

  Int weight_of(const Expv& e) const {
    Int w = 0;
    for (size_t i = 0; i < e.size(); ++i) w += Int(e[i]) * weights[i];
    return w;
  }
};

struct KoszulProblem {
  GradedRing ring;
  std::vector<Poly> elements;

  // Every element must be lambda-homogeneous; returns the element weights.
  std::vector<Int> element_weights() const {
    std::vector<Int> out;
    for (const auto& f : elements) {
      if (f.is_zero()) {
        out.emplace_back(0);
        continue;
      }
      std::optional<Int> w;
      for (auto& [e, c] : f.terms) {
        Int we = ring.weight_of(e);
        if (!w)
          w = we;
        else if (*w != we)
          throw std::invalid_argument("koszul element is not lambda-homogeneous");
      }
      out.push_back(*w);
    }
    return out;
  }
};

// --- the two pinned fixtures -------------------------------------------------

// Torsion along the fixed locus with psi1 != 0 (plus-side chart v = 1):
// ring C[x1..x6, a^(+-1), b, g, u, v], weights (1,..,1 | 0,-1,-2 | -1, 0),
// elements x1,..,x6, b - u a, g - u b, -u g. The invertible a and the
// weight-0 v are specialized to 1 before elimination.
inline KoszulProblem koszul_z1plus_problem() {
  KoszulProblem p;
  p.ring.var_names = {"x1", "x2", "x3", "x4", "x5", "x6", "a", "b", "g", "u", "v"};
  p.ring.weights = {1, 1, 1, 1, 1, 1, 0, -1, -2, -1, 0};
  p.ring.invertible = {false, false, false, false, false, false, true, false, false, false, true};
  size_t n = 11;
  for (size_t i = 0; i < 6; ++i) p.elements.push_back(poly_monomial(n, {{i, 1}}));
  Poly f1 = poly_monomial(n, {{7, 1}});                          // b
  f1 = f1.plus(poly_monomial(n, {{9, 1}, {6, 1}}, Rat(-1)));     // - u a
  p.elements.push_back(f1);
  Poly f2 = poly_monomial(n, {{8, 1}});                          // g
  f2 = f2.plus(poly_monomial(n, {{9, 1}, {7, 1}}, Rat(-1)));     // - u b
  p.elements.push_back(f2);
  p.elements.push_back(poly_monomial(n, {{9, 1}, {8, 1}}, Rat(-1)));  // -u g
  return p;
}

// The same computation along the minus-side chart u = 1: ring
// C[x1..x6, a, b, g, v] with weights (0,..,0 | 1, 2, 3 | -1), the unique
// assignment (up to the recorded orientation) making vx1,..,vx6, vb - a,
// vg - b, -g simultaneously homogeneous.
inline KoszulProblem koszul_z1minus_problem() {
  KoszulProblem p;
  p.ring.var_names = {"x1", "x2", "x3", "x4", "x5", "x6", "a", "b", "g", "v"};
  p.ring.weights = {0, 0, 0, 0, 0, 0, 1, 2, 3, -1};
  p.ring.invertible.assign(10, false);
  size_t n = 10;
  for (size_t i = 0; i < 6; ++i) p.elements.push_back(poly_monomial(n, {{9, 1}, {i, 1}}));
  Poly f1 = poly_monomial(n, {{9, 1}, {7, 1}});       // v b
  f1 = f1.plus(poly_monomial(n, {{6, 1}}, Rat(-1)));  // - a
  p.elements.push_back(f1);
  Poly f2 = poly_monomial(n, {{9, 1}, {8, 1}});       // v g
  f2 = f2.plus(poly_monomial(n, {{7, 1}}, Rat(-1)));  // - b
  p.elements.push_back(f2);
  p.elements.push_back(poly_monomial(n, {{8, 1}}, Rat(-1)));  // -g
  return p;
}

// --- elimination ---------------------------------------------------------------

inline KoszulProblem specialize_invertibles(KoszulProblem p) {
  for (;;) {
    bool acted = false;
    for (size_t v = 0; v < p.ring.nvars(); ++v) {
      if (!p.ring.invertible[v]) continue;
      if (p.ring.weights[v] == 0) {
        Poly one;
        one.add_term(Expv(p.ring.nvars(), 0), Rat(1));
        for (auto& f : p.elements) f = f.substituted(v, one).with_var_dropped(v);
        p.ring.var_names.erase(p.ring.var_names.begin() + v);
        p.ring.weights.erase(p.ring.weights.begin() + v);
        p.ring.invertible.erase(p.ring.invertible.begin() + v);
      } else {
        // y invertible of nonzero weight: adjoin y_inv with y*y_inv = 1.
        size_t n = p.ring.nvars();
        p.ring.var_names.push_back(p.ring.var_names[v] + "_inv");
        p.ring.weights.push_back(-p.ring.weights[v]);
        p.ring.invertible.push_back(false);
        p.ring.invertible[v] = false;
        for (auto& f : p.elements) {
          Poly g;
          for (auto& [e, c] : f.terms) {
            Expv ne = e;
            ne.push_back(0);
            g.add_term(ne, c);
          }
          f = g;
        }
        Poly rel = poly_monomial(n + 1, {{v, 1}, {n, 1}});
        rel = rel.plus(poly_monomial(n + 1, {}, Rat(-1)));
        p.elements.push_back(rel);
      }
      acted = true;
      break;
    }
    if (!acted) return p;
  }
}

// An eliminable pair: element containing a bare linear variable that occurs
// in none of its other monomials.
inline std::optional<std::pair<size_t, size_t>> find_eliminable(const KoszulProblem& p) {
  for (size_t fi = 0; fi < p.elements.size(); ++fi) {
    const Poly& f = p.elements[fi];
    for (size_t v = 0; v < p.ring.nvars(); ++v) {
      Expv bare(p.ring.nvars(), 0);
      bare[v] = 1;
      auto it = f.terms.find(bare);
      if (it == f.terms.end()) continue;
      bool elsewhere = false;
      for (auto& [e, c] : f.terms)
        if (e != bare && e[v] != 0) elsewhere = true;
      if (!elsewhere) return std::make_pair(fi, v);
    }
  }
  return std::nullopt;
}

inline KoszulProblem eliminate_linear(KoszulProblem p) {
  p = specialize_invertibles(std::move(p));
  for (;;) {
    auto hit = find_eliminable(p);
    if (!hit) break;
    auto [fi, v] = *hit;
    Poly f = p.elements[fi];
    Expv bare(p.ring.nvars(), 0);
    bare[v] = 1;
    Rat c = f.terms.at(bare);
    Poly rest = f;
    rest.terms.erase(bare);
    Poly g = rest.scaled(Rat(-1) / c);  // v := g
    p.elements.erase(p.elements.begin() + fi);
    for (auto& h : p.elements) h = h.substituted(v, g).with_var_dropped(v);
    p.ring.var_names.erase(p.ring.var_names.begin() + v);
    p.ring.weights.erase(p.ring.weights.begin() + v);
    p.ring.invertible.erase(p.ring.invertible.begin() + v);
  }
  return p;
}

// --- exact dense linear algebra over Q -----------------------------------------

namespace linalg {

using Matrix = std::vector<std::vector<Rat>>;  // row-major

inline size_t rank(Matrix m) {
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat t = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= t * m[r][j];
    }
    ++r;
  }
  return r;
}

// Basis of the null space; m has `cols` columns.
inline std::vector<std::vector<Rat>> nullspace(Matrix m, size_t cols) {
  size_t rows = m.size();
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Rat inv = Rat(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat t = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= t * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[c] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i)
      if (pivot_col[i] < c) v[pivot_col[i]] = -m[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace linalg

// --- reports ---------------------------------------------------------------------

enum class KoszulStatus { Exact, CertifiedToTruncation, Inconclusive };
enum class Regularity { Regular, NotRegular, Inconclusive };

struct RegularityVerdict {
  Regularity verdict{Regularity::Inconclusive};
  bool exact{false};
  std::string reason;
};

struct TorWeightReport {
  KoszulStatus status{KoszulStatus::Inconclusive};
  int truncation{0};
  std::string path;  // "monomial" or "filtered"
  RegularityVerdict regularity;
  // homological degree -> lambda-weight -> (internal degree -> multiplicity).
  std::map<int, std::map<Int, std::map<int, std::int64_t>>> support;
  // homological degree -> lambda-weights of minimal module generators.
  std::map<int, std::set<Int>> generator_support;
  KoszulProblem reduced;

  std::set<Int> support_weights(int j) const {
    std::set<Int> s;
    auto it = support.find(j);
    if (it != support.end())
      for (auto& [w, series] : it->second) s.insert(w);
    return s;
  }
  std::set<Int> positive_degree_support() const {
    std::set<Int> s;
    for (auto& [j, m] : support)
      if (j > 0)
        for (auto& [w, series] : m) s.insert(w);
    return s;
  }
  std::set<Int> all_generator_weights() const {
    std::set<Int> s;
    for (auto& [j, ws] : generator_support) s.insert(ws.begin(), ws.end());
    return s;
  }
  std::set<Int> all_support_weights() const {
    std::set<Int> s;
    for (auto& [j, m] : support)
      for (auto& [w, series] : m) s.insert(w);
    return s;
  }
  bool homology_in_degree_zero_only() const {
    for (auto& [j, m] : support)
      if (j > 0 && !m.empty()) return false;
    return true;
  }
};

// --- the monomial fast path ---------------------------------------------------

namespace detail_koszul {

// The slice of the Koszul complex at a multidegree depends only on which
// subset masks fit under it (a downward-closed family on the k elements), so
// all linear algebra is cached per family; only a handful of families occur.
struct SliceData {
  std::vector<std::vector<std::uint32_t>> basis;      // per j: subset masks
  std::vector<size_t> rank_d;                         // per j: rank of d_j
  std::vector<std::vector<std::vector<Rat>>> cycles;  // per j: nullspace of d_j
  std::vector<size_t> hdim;                           // per j: homology dim
};

struct MonomialEngine {
  size_t nvars;
  size_t k;
  std::vector<Expv> mdeg;
  std::vector<Rat> mcoeff;
  std::vector<Expv> subset_deg;
  std::map<std::vector<std::uint32_t>, SliceData> family_cache;

  explicit MonomialEngine(const KoszulProblem& p) {
    nvars = p.ring.nvars();
    k = p.elements.size();
    if (k > 16) throw std::invalid_argument("monomial engine: too many elements");
    for (const auto& f : p.elements) {
      mdeg.push_back(f.terms.begin()->first);
      mcoeff.push_back(f.terms.begin()->second);
    }
    subset_deg.resize(size_t(1) << k, Expv(nvars, 0));
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::uint32_t low = mask & (~mask + 1);
      int i = std::countr_zero(low);
      Expv d = subset_deg[mask ^ low];
      for (size_t v = 0; v < nvars; ++v) d[v] += mdeg[i][v];
      subset_deg[mask] = d;
    }
  }

  static bool leq(const Expv& a, const Expv& b) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  }

  std::vector<std::uint32_t> family_of(const Expv& mu) const {
    std::vector<std::uint32_t> fam;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask)
      if (leq(subset_deg[mask], mu)) fam.push_back(mask);
    return fam;
  }

  const SliceData& slice(const Expv& mu) { return family_slice(family_of(mu)); }

  const SliceData& family_slice(const std::vector<std::uint32_t>& fam) {
    auto it = family_cache.find(fam);
    if (it != family_cache.end()) return it->second;
    SliceData s;
    s.basis.assign(k + 2, {});
    for (std::uint32_t mask : fam) s.basis[std::popcount(mask)].push_back(mask);
    std::vector<std::map<std::uint32_t, size_t>> pos(k + 2);
    for (size_t j = 0; j <= k; ++j)
      for (size_t idx = 0; idx < s.basis[j].size(); ++idx) pos[j][s.basis[j][idx]] = idx;
    s.rank_d.assign(k + 2, 0);
    s.cycles.assign(k + 2, {});
    for (size_t j = 1; j <= k; ++j) {
      size_t cols = s.basis[j].size();
      size_t rows = s.basis[j - 1].size();
      if (cols == 0) continue;
      linalg::Matrix m(rows, std::vector<Rat>(cols, Rat(0)));
      for (size_t cidx = 0; cidx < cols; ++cidx) {
        std::uint32_t mask = s.basis[j][cidx];
        int signpos = 0;
        for (size_t i = 0; i < k; ++i) {
          if (!(mask & (1u << i))) continue;
          auto pit = pos[j - 1].find(mask ^ (1u << i));
          if (pit != pos[j - 1].end())
            m[pit->second][cidx] += ((signpos % 2 == 0) ? mcoeff[i] : -mcoeff[i]);
          ++signpos;
        }
      }
      s.rank_d[j] = linalg::rank(m);
      s.cycles[j] = linalg::nullspace(std::move(m), cols);
    }
    {
      size_t c0 = s.basis[0].size();
      for (size_t idx = 0; idx < c0; ++idx) {
        std::vector<Rat> v(c0, Rat(0));
        v[idx] = 1;
        s.cycles[0].push_back(std::move(v));
      }
    }
    s.hdim.assign(k + 1, 0);
    for (size_t j = 0; j <= k; ++j) {
      size_t dimj = s.basis[j].size();
      size_t rj = (j == 0) ? 0 : s.rank_d[j];
      size_t rj1 = (j + 1 <= k) ? s.rank_d[j + 1] : 0;
      s.hdim[j] = dimj - rj - rj1;
    }
    return family_cache.emplace(fam, std::move(s)).first->second;
  }

  // Minimal-generator count of H_j at mu: cycle classes not explained by
  // boundaries plus variable multiples of cycles from one degree lower.
  size_t generator_count(const Expv& mu, size_t j) {
    std::vector<std::uint32_t> fam = family_of(mu);
    SliceData s = family_slice(fam);  // copy: neighbor lookups may rehash
    size_t dimj = s.basis[j].size();
    if (dimj == 0 || s.cycles[j].empty()) return 0;
    std::map<std::uint32_t, size_t> posj;
    for (size_t idx = 0; idx < dimj; ++idx) posj[s.basis[j][idx]] = idx;
    std::vector<std::vector<Rat>> cols;
    if (j + 1 <= k) {
      for (std::uint32_t mask : s.basis[j + 1]) {
        std::vector<Rat> v(dimj, Rat(0));
        int signpos = 0;
        for (size_t i = 0; i < k; ++i) {
          if (!(mask & (1u << i))) continue;
          auto pit = posj.find(mask ^ (1u << i));
          if (pit != posj.end()) v[pit->second] += ((signpos % 2 == 0) ? mcoeff[i] : -mcoeff[i]);
          ++signpos;
        }
        cols.push_back(std::move(v));
      }
    }
    for (size_t v = 0; v < nvars; ++v) {
      if (mu[v] == 0) continue;
      Expv nu = mu;
      nu[v] -= 1;
      const SliceData& lower = family_slice(family_of(nu));
      for (const auto& cyc : lower.cycles[j]) {
        std::vector<Rat> lifted(dimj, Rat(0));
        for (size_t idx = 0; idx < lower.basis[j].size(); ++idx) {
          if (cyc[idx] == 0) continue;
          lifted[posj.at(lower.basis[j][idx])] = cyc[idx];
        }
        cols.push_back(std::move(lifted));
      }
    }
    linalg::Matrix sub = cols;
    size_t rank_sub = linalg::rank(std::move(sub));
    linalg::Matrix all = cols;
    for (const auto& z : s.cycles[j]) all.push_back(z);
    size_t rank_all = linalg::rank(std::move(all));
    return rank_all - rank_sub;
  }
};

inline void enumerate_expv(size_t nvars, int maxtotal, const std::function<void(const Expv&)>& fn) {
  Expv cur(nvars, 0);
  std::function<void(size_t, int)> rec = [&](size_t i, int left) {
    if (i == nvars) {
      fn(cur);
      return;
    }
    for (int kk = 0; kk <= left; ++kk) {
      cur[i] = kk;
      rec(i + 1, left - kk);
    }
    cur[i] = 0;
  };
  rec(0, maxtotal);
}

inline long long binom_ll(long long n, long long kk) {
  if (kk < 0 || kk > n) return 0;
  kk = std::min(kk, n - kk);
  long long r = 1;
  for (long long i = 1; i <= kk; ++i) r = r * (n - kk + i) / i;
  return r;
}

}  // namespace detail_koszul

// Exact regularity for monomial sequences: H_1 of the Koszul complex is
// generated by the pairwise lcm syzygies, so it vanishes iff it vanishes in
// those multidegrees. A single nonzero non-unit monomial is regular.
inline RegularityVerdict monomial_regularity(const KoszulProblem& p) {
  RegularityVerdict v;
  v.exact = true;
  for (const auto& f : p.elements) {
    if (f.is_zero()) {
      v.verdict = Regularity::NotRegular;
      v.reason = "zero element";
      return v;
    }
    if (expv_total(f.terms.begin()->first) == 0) {
      v.verdict = Regularity::Regular;
      v.reason = "unit element, Koszul complex exact";
      return v;
    }
  }
  detail_koszul::MonomialEngine eng(p);
  for (size_t i = 0; i < eng.k; ++i)
    for (size_t j = i + 1; j < eng.k; ++j) {
      Expv lcm(eng.nvars, 0);
      for (size_t t = 0; t < eng.nvars; ++t) lcm[t] = std::max(eng.mdeg[i][t], eng.mdeg[j][t]);
      if (eng.slice(lcm).hdim[1] != 0) {
        v.verdict = Regularity::NotRegular;
        v.reason = "first Koszul homology is nonzero at lcm of elements " + std::to_string(i) +
                   " and " + std::to_string(j);
        return v;
      }
    }
  v.verdict = Regularity::Regular;
  v.reason = "first Koszul homology vanishes at every pairwise lcm";
  return v;
}

// Every variable with a pure power among the elements makes the quotient
// finite-dimensional; returns its top degree.
inline std::optional<int> monomial_quotient_finite_bound(const KoszulProblem& p) {
  size_t n = p.ring.nvars();
  int bound = 0;
  for (size_t v = 0; v < n; ++v) {
    int best = -1;
    for (const auto& f : p.elements) {
      const Expv& e = f.terms.begin()->first;
      if (e[v] == 0) continue;
      bool pure = true;
      for (size_t t = 0; t < n; ++t)
        if (t != v && e[t] != 0) pure = false;
      if (pure && (best < 0 || e[v] < best)) best = e[v];
    }
    if (best < 0) return std::nullopt;
    bound += best - 1;
  }
  return bound;
}

// Coefficients of prod (1 - t^(d_i)) / (1 - t)^n up to degree maxd.
inline std::vector<std::int64_t> ci_hilbert_prediction(const std::vector<int>& degs, size_t nvars,
                                                       int maxd) {
  std::vector<std::int64_t> h(maxd + 1, 0);
  for (int d = 0; d <= maxd; ++d)
    h[d] = detail_koszul::binom_ll(static_cast<long long>(nvars) + d - 1, d);
  for (int deg : degs) {
    std::vector<std::int64_t> nh(maxd + 1, 0);
    for (int d = 0; d <= maxd; ++d) {
      nh[d] = h[d];
      if (d >= deg) nh[d] -= h[d - deg];
    }
    h = std::move(nh);
  }
  return h;
}

// --- tor_weights ------------------------------------------------------------------

inline TorWeightReport tor_weights(const KoszulProblem& problem, int truncation) {
  if (truncation < 4) throw std::invalid_argument("tor_weights: truncation must be >= 4");
  problem.element_weights();  // validate homogeneity
  TorWeightReport rep;
  rep.truncation = truncation;
  rep.reduced = eliminate_linear(problem);
  rep.reduced.element_weights();
  const KoszulProblem& p = rep.reduced;
  size_t n = p.ring.nvars();

  bool monomial = true;
  for (const auto& f : p.elements)
    if (!f.is_monomial()) monomial = false;

  if (monomial) {
    rep.path = "monomial";
    rep.regularity = p.elements.empty()
                         ? RegularityVerdict{Regularity::Regular, true, "empty sequence"}
                         : monomial_regularity(p);
    detail_koszul::MonomialEngine eng(p);
    if ((size_t(1) << eng.k) * static_cast<size_t>(detail_koszul::binom_ll(
                                   static_cast<long long>(n) + truncation, truncation)) >
        8000000)
      throw std::invalid_argument("monomial path: problem too large for the truncation");
    // Reported multidegrees: deg(e_I) + a over all subsets and |a| <= trunc.
    std::set<Expv> mus;
    for (std::uint32_t mask = 0; mask < (1u << eng.k); ++mask) {
      const Expv& base = eng.subset_deg[mask];
      detail_koszul::enumerate_expv(n, truncation, [&](const Expv& a) {
        Expv mu = base;
        for (size_t v = 0; v < n; ++v) mu[v] += a[v];
        mus.insert(mu);
      });
    }
    for (const Expv& mu : mus) {
      Int w = p.ring.weight_of(mu);
      int level = expv_total(mu);
      std::vector<size_t> hdims = eng.slice(mu).hdim;
      for (size_t j = 0; j <= eng.k; ++j) {
        if (hdims[j] == 0) continue;
        rep.support[static_cast<int>(j)][w][level] += static_cast<std::int64_t>(hdims[j]);
        if (eng.generator_count(mu, j) > 0)
          rep.generator_support[static_cast<int>(j)].insert(w);
      }
    }
    bool finite = false;
    if (auto bound = monomial_quotient_finite_bound(p))
      finite = (*bound <= truncation) && rep.regularity.verdict == Regularity::Regular;
    rep.status = finite ? KoszulStatus::Exact : KoszulStatus::CertifiedToTruncation;
    return rep;
  }

  // General filtered path: basis e_I (x) x^a with |a| plus the summed
  // element degrees over I at most the truncation, sliced by lambda-weight.
  rep.path = "filtered";
  size_t k = p.elements.size();
  if (k > 12) throw std::invalid_argument("filtered path: too many elements");
  std::vector<Int> eweights = p.element_weights();
  std::vector<int> edegs;
  for (const auto& f : p.elements) edegs.push_back(f.max_total_degree());

  struct BasisElem {
    std::uint32_t mask;
    Expv a;
  };
  std::map<Int, std::vector<std::vector<BasisElem>>> bases;
  std::map<Int, std::vector<std::map<std::pair<std::uint32_t, Expv>, size_t>>> index;
  size_t total_basis = 0;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    int j = std::popcount(mask);
    int fdeg = 0;
    Int wmask = 0;
    for (size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) {
        fdeg += edegs[i];
        wmask += eweights[i];
      }
    if (fdeg > truncation) continue;
    detail_koszul::enumerate_expv(n, truncation - fdeg, [&](const Expv& a) {
      Int w = wmask + p.ring.weight_of(a);
      auto& bw = bases[w];
      auto& iw = index[w];
      if (bw.empty()) {
        bw.assign(k + 2, {});
        iw.assign(k + 2, {});
      }
      iw[j][{mask, a}] = bw[j].size();
      bw[j].push_back(BasisElem{mask, a});
      ++total_basis;
    });
    if (total_basis > 200000) throw std::invalid_argument("filtered path: basis too large");
  }

  for (auto& [w, bw] : bases) {
    auto& iw = index[w];
    std::vector<size_t> rank_d(k + 2, 0);
    for (size_t j = 1; j <= k; ++j) {
      size_t cols = bw[j].size();
      size_t rows = bw[j - 1].size();
      if (cols == 0 || rows == 0) {
        rank_d[j] = 0;
        continue;
      }
      linalg::Matrix m(rows, std::vector<Rat>(cols, Rat(0)));
      for (size_t cidx = 0; cidx < cols; ++cidx) {
        const auto& be = bw[j][cidx];
        int signpos = 0;
        for (size_t i = 0; i < k; ++i) {
          if (!(be.mask & (1u << i))) continue;
          std::uint32_t sub = be.mask ^ (1u << i);
          for (auto& [e, c] : p.elements[i].terms) {
            Expv na = be.a;
            for (size_t v = 0; v < n; ++v) na[v] += e[v];
            auto pit = iw[j - 1].find({sub, na});
            if (pit != iw[j - 1].end()) m[pit->second][cidx] += ((signpos % 2 == 0) ? c : -c);
          }
          ++signpos;
        }
      }
      rank_d[j] = linalg::rank(std::move(m));
    }
    for (size_t j = 0; j <= k; ++j) {
      size_t dimj = bw[j].size();
      if (dimj == 0) continue;
      size_t hd = dimj - (j == 0 ? 0 : rank_d[j]) - (j + 1 <= k ? rank_d[j + 1] : 0);
      if (hd > 0) rep.support[static_cast<int>(j)][w][truncation] += static_cast<std::int64_t>(hd);
    }
  }
  rep.status = KoszulStatus::CertifiedToTruncation;

  // Regularity through the Hilbert function when total-degree graded.
  bool graded = true;
  std::vector<int> degs;
  for (const auto& f : p.elements) {
    int d = -1;
    for (auto& [e, c] : f.terms) {
      if (d < 0)
        d = expv_total(e);
      else if (d != expv_total(e))
        graded = false;
    }
    degs.push_back(d);
  }
  if (!graded) {
    rep.regularity = {Regularity::Inconclusive, false, "elements not total-degree homogeneous"};
    return rep;
  }
  std::vector<std::int64_t> predicted = ci_hilbert_prediction(degs, n, truncation);
  for (int d = 0; d <= truncation; ++d) {
    std::vector<Expv> monos;
    detail_koszul::enumerate_expv(n, d, [&](const Expv& e) {
      if (expv_total(e) == d) monos.push_back(e);
    });
    std::map<Expv, size_t> mpos;
    for (size_t i = 0; i < monos.size(); ++i) mpos[monos[i]] = i;
    linalg::Matrix rowsm;
    for (size_t i = 0; i < p.elements.size(); ++i) {
      if (degs[i] > d) continue;
      detail_koszul::enumerate_expv(n, d - degs[i], [&](const Expv& b) {
        if (expv_total(b) != d - degs[i]) return;
        std::vector<Rat> row(monos.size(), Rat(0));
        for (auto& [e, c] : p.elements[i].terms) {
          Expv m = b;
          for (size_t v = 0; v < n; ++v) m[v] += e[v];
          row[mpos.at(m)] += c;
        }
        rowsm.push_back(std::move(row));
      });
    }
    std::int64_t hd = static_cast<std::int64_t>(monos.size()) -
                      static_cast<std::int64_t>(rowsm.empty() ? 0 : linalg::rank(std::move(rowsm)));
    if (hd != predicted[d]) {
      rep.regularity = {Regularity::NotRegular, true,
                        "Hilbert function deviates from the complete-intersection value at degree " +
                            std::to_string(d)};
      return rep;
    }
  }
  rep.regularity = {Regularity::Regular, false,
                    "Hilbert function matches the complete-intersection prediction up to the truncation"};
  return rep;
}

inline RegularityVerdict regularity_certificate(const KoszulProblem& p, int truncation) {
  return tor_weights(p, truncation).regularity;
}

}  // namespace flopkit
