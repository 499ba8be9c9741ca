#pragma once

// GL2 weight lattice. A highest weight (a,b) with a >= b indexes the irrep
// Sym^{a-b} T (x) (det T)^b; the pairing against a 1-parameter subgroup
// (w1,w2) of the diagonal torus is w1*a + w2*b.

#include "flopkit/rational.hpp"

#include <compare>
#include <ostream>
#include <set>
#include <stdexcept>
#include <vector>

namespace flopkit {

struct Weight {
  Int a{0};
  Int b{0};

  Weight() = default;
  Weight(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}
  Weight(long a_, long b_) : a(a_), b(b_) {}

  bool dominant() const { return a >= b; }
  Weight weyl_partner() const { return Weight(b, a); }
  Weight dual() const { return Weight(-b, -a); }
  Int dim() const { return a - b + 1; }  // only meaningful when dominant

  Weight det_twist(const Int& k) const { return Weight(a + k, b + k); }
  Weight operator+(const Weight& o) const { return Weight(a + o.a, b + o.b); }
  Weight operator-(const Weight& o) const { return Weight(a - o.a, b - o.b); }

  bool operator==(const Weight& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  bool operator<(const Weight& o) const { return a != o.a ? a < o.a : b < o.b; }
};

inline std::ostream& operator<<(std::ostream& os, const Weight& w) {
  return os << "(" << w.a << "," << w.b << ")";
}

// 1-PS of the diagonal torus, written (w1,w2).
struct OnePS {
  Int w1{0};
  Int w2{0};

  OnePS() = default;
  OnePS(Int w1_, Int w2_) : w1(std::move(w1_)), w2(std::move(w2_)) {}
  OnePS(long w1_, long w2_) : w1(w1_), w2(w2_) {}

  OnePS operator-() const { return OnePS(-w1, -w2); }
  bool operator==(const OnePS& o) const { return w1 == o.w1 && w2 == o.w2; }
  bool operator<(const OnePS& o) const { return w1 != o.w1 ? w1 < o.w1 : w2 < o.w2; }
};

inline const OnePS kLambda0{1, 1};
inline const OnePS kLambda1{0, 1};
inline const OnePS kLambda2{-1, 2};

inline Int pair(const OnePS& l, const Weight& chi) { return l.w1 * chi.a + l.w2 * chi.b; }

// The Sym^c T (x) det^b labelling, as a conversion only; highest-weight
// pairs are the single storage format.
inline Weight weight_from_sym_det(const Int& c, const Int& b) { return Weight(b + c, b); }

// Torus weights of the irrep with highest weight chi: {(a-i, b+i)}.
inline std::vector<Weight> weight_multiset(const Weight& chi) {
  if (!chi.dominant()) throw std::invalid_argument("weight_multiset: non-dominant weight");
  std::vector<Weight> out;
  Int c = chi.a - chi.b;
  for (Int i = 0; i <= c; ++i) out.emplace_back(chi.a - i, chi.b + i);
  return out;
}

using WeightSet = std::set<Weight>;

}  // namespace flopkit
