#pragma once

// Exact GL2 character calculus on the weight lattice: products, plethysm by
// weight-multiset expansion, duals, highest-weight stripping, and the graded
// Hom Euler series on the quotient stack.
//
// Multiplicities are kept as 64-bit integers; the sizes that occur here
// (dim <= ~20, sym powers <= ~12) stay far below overflow.

#include "flopkit/weights.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace flopkit {

struct VirtualCharacterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite multiplicity map on Z^2. Entries with multiplicity 0 are erased.
class LaurentChar {
 public:
  std::map<Weight, std::int64_t> mult;

  LaurentChar() = default;

  static LaurentChar trivial() { return unit_weight(Weight(0, 0)); }
  static LaurentChar unit_weight(const Weight& w) {
    LaurentChar c;
    c.mult[w] = 1;
    return c;
  }

  void add(const Weight& w, std::int64_t m) {
    if (m == 0) return;
    auto it = mult.find(w);
    if (it == mult.end()) {
      mult.emplace(w, m);
    } else {
      it->second += m;
      if (it->second == 0) mult.erase(it);
    }
  }

  std::int64_t at(const Weight& w) const {
    auto it = mult.find(w);
    return it == mult.end() ? 0 : it->second;
  }

  std::int64_t dim() const {
    std::int64_t d = 0;
    for (auto& [w, m] : mult) d += m;
    return d;
  }

  bool non_virtual() const {
    for (auto& [w, m] : mult)
      if (m < 0) return false;
    return true;
  }

  bool swap_symmetric() const {
    for (auto& [w, m] : mult)
      if (at(w.weyl_partner()) != m) return false;
    return true;
  }

  bool operator==(const LaurentChar&) const = default;
};

// Finite map from dominant highest weight to (possibly virtual) multiplicity.
using IrrepDecomp = std::map<Weight, std::int64_t>;

inline LaurentChar char_of_irrep(const Weight& chi) {
  if (!chi.dominant()) throw std::invalid_argument("char_of_irrep: non-dominant weight");
  LaurentChar c;
  for (const auto& w : weight_multiset(chi)) c.add(w, 1);
  return c;
}

inline LaurentChar char_of_decomp(const IrrepDecomp& d) {
  LaurentChar c;
  for (auto& [chi, m] : d) {
    if (m == 0) continue;
    for (const auto& w : weight_multiset(chi)) c.add(w, m);
  }
  return c;
}

inline LaurentChar multiply(const LaurentChar& a, const LaurentChar& b) {
  LaurentChar c;
  for (auto& [wa, ma] : a.mult)
    for (auto& [wb, mb] : b.mult) c.add(wa + wb, ma * mb);
  return c;
}

inline LaurentChar dual(const LaurentChar& a) {
  LaurentChar c;
  for (auto& [w, m] : a.mult) c.add(Weight(-w.a, -w.b), m);
  return c;
}

namespace detail {

inline std::int64_t binom64(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Enumerate compositions (k_1,..,k_r) of n over the distinct weights of c,
// calling visit(weight-sum, product-of-per-bucket-counts).
template <class CountFn, class Visit>
void plethysm_walk(const std::vector<std::pair<Weight, std::int64_t>>& buckets, int n,
                   CountFn count, Visit visit) {
  std::function<void(size_t, int, Weight, std::int64_t)> rec =
      [&](size_t i, int remaining, Weight acc, std::int64_t ways) {
        if (ways == 0) return;
        if (i == buckets.size()) {
          if (remaining == 0) visit(acc, ways);
          return;
        }
        if (i + 1 == buckets.size()) {
          // Last bucket must absorb the remainder.
          std::int64_t w = count(buckets[i].second, remaining);
          if (w != 0)
            visit(Weight(acc.a + Int(remaining) * buckets[i].first.a,
                         acc.b + Int(remaining) * buckets[i].first.b),
                  ways * w);
          return;
        }
        for (int k = 0; k <= remaining; ++k) {
          std::int64_t w = count(buckets[i].second, k);
          if (w == 0) continue;
          rec(i + 1, remaining - k,
              Weight(acc.a + Int(k) * buckets[i].first.a, acc.b + Int(k) * buckets[i].first.b),
              ways * w);
        }
      };
  rec(0, n, Weight(0, 0), 1);
}

}  // namespace detail

inline LaurentChar sym_power(const LaurentChar& c, int n) {
  if (n < 0) throw std::invalid_argument("sym_power: negative n");
  if (!c.non_virtual()) throw VirtualCharacterError("sym_power of a virtual character");
  std::vector<std::pair<Weight, std::int64_t>> buckets(c.mult.begin(), c.mult.end());
  LaurentChar out;
  detail::plethysm_walk(
      buckets, n, [](std::int64_t m, int k) { return detail::binom64(m + k - 1, k); },
      [&](const Weight& w, std::int64_t ways) { out.add(w, ways); });
  return out;
}

inline LaurentChar ext_power(const LaurentChar& c, int n) {
  if (n < 0) throw std::invalid_argument("ext_power: negative n");
  if (!c.non_virtual()) throw VirtualCharacterError("ext_power of a virtual character");
  std::vector<std::pair<Weight, std::int64_t>> buckets(c.mult.begin(), c.mult.end());
  LaurentChar out;
  detail::plethysm_walk(
      buckets, n, [](std::int64_t m, int k) { return detail::binom64(m, k); },
      [&](const Weight& w, std::int64_t ways) { out.add(w, ways); });
  return out;
}

// Highest-weight stripping. The character splits over the value of a+b; in
// each slice the extreme entry (maximal a) is the highest weight of an irrep
// summand. `strict` refuses negative multiplicities (genuine characters);
// the virtual variant extends by linearity.
inline IrrepDecomp decompose_impl(const LaurentChar& c, bool strict) {
  if (!c.swap_symmetric())
    throw VirtualCharacterError("decompose: character is not Weyl-symmetric");
  std::map<Int, LaurentChar> slices;
  for (auto& [w, m] : c.mult) slices[w.a + w.b].add(w, m);
  IrrepDecomp out;
  for (auto& [s, slice] : slices) {
    while (!slice.mult.empty()) {
      // Maximal a in this slice.
      auto it = std::prev(slice.mult.end());
      Weight hw = it->first;
      std::int64_t m = it->second;
      if (!hw.dominant())
        throw VirtualCharacterError("decompose: extreme weight below the diagonal");
      if (strict && m < 0)
        throw VirtualCharacterError("decompose: negative multiplicity (virtual character)");
      out[hw] += m;
      for (const auto& w : weight_multiset(hw)) slice.add(w, -m);
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline IrrepDecomp decompose(const LaurentChar& c) { return decompose_impl(c, true); }
inline IrrepDecomp decompose_virtual(const LaurentChar& c) { return decompose_impl(c, false); }

// Multiplicity of the trivial irrep in a (possibly virtual) symmetric
// character: m(0,0) - m(1,-1).
inline std::int64_t trivial_multiplicity(const LaurentChar& c) {
  return c.at(Weight(0, 0)) - c.at(Weight(1, -1));
}

// Multiplicity of the irrep with highest weight chi: m(chi) - m(chi + (1,-1)).
inline std::int64_t irrep_multiplicity(const LaurentChar& c, const Weight& chi) {
  return c.at(chi) - c.at(Weight(chi.a + 1, chi.b - 1));
}

// Graded Hom Euler series on the stack [V/GL2]: entry n is the multiplicity
// of the trivial irrep in dual(src) * tgt * Sym^n(dual V). Linear in src and
// tgt, so virtual decompositions (alternating sums of complexes) are fine.
inline std::vector<std::int64_t> hom_euler_series(const IrrepDecomp& src, const IrrepDecomp& tgt,
                                                  const LaurentChar& V, int N) {
  if (N < 0) throw std::invalid_argument("hom_euler_series: negative truncation");
  std::vector<std::int64_t> out;
  LaurentChar base = multiply(dual(char_of_decomp(src)), char_of_decomp(tgt));
  LaurentChar Vdual = dual(V);
  for (int n = 0; n <= N; ++n)
    out.push_back(trivial_multiplicity(multiply(base, sym_power(Vdual, n))));
  return out;
}

}  // namespace flopkit
