#pragma once

// Grade restriction rules. A rule is a 1-PS lambda with width eta and the
// half-open interval [-eta/2, eta/2); a dominant weight chi passes when both
// <lambda,chi> and <lambda,chi'> (Weyl partner) lie in the interval. The
// minus side carries two rules, the plus side three.

#include "flopkit/git.hpp"
#include "flopkit/weights.hpp"

#include <string>
#include <vector>

namespace flopkit {

struct WindowRule {
  OnePS lambda;
  Int eta;
  Rat offset{0};  // intervals are centered at 0 by default

  Rat lo() const { return Rat(-eta, 2) + offset; }
  Rat hi() const { return Rat(eta, 2) + offset; }
  bool contains(const Int& v) const { return Rat(v) >= lo() && Rat(v) < hi(); }
};

struct WindowSet {
  Side side{Side::Minus};
  std::vector<WindowRule> rules;
};

inline WindowSet minus_window(const GitProblem& p = GitProblem::standard()) {
  WindowSet w;
  w.side = Side::Minus;
  w.rules = {WindowRule{kLambda0, eta(p, kLambda0)}, WindowRule{kLambda1, eta(p, kLambda1)}};
  return w;
}

inline WindowSet plus_window(const GitProblem& p = GitProblem::standard()) {
  WindowSet w;
  w.side = Side::Plus;
  w.rules = {WindowRule{kLambda0, eta(p, kLambda0)}, WindowRule{kLambda1, eta(p, kLambda1)},
             WindowRule{kLambda2, eta(p, kLambda2)}};
  return w;
}

inline bool weight_in_window(const Weight& chi, const WindowSet& ws) {
  if (!chi.dominant()) throw std::invalid_argument("weight_in_window: non-dominant weight");
  Weight partner = chi.weyl_partner();
  for (const auto& r : ws.rules)
    if (!r.contains(pair(r.lambda, chi)) || !r.contains(pair(r.lambda, partner))) return false;
  return true;
}

// All dominant weights in [-box,box]^2 passing every rule. The rule-implied
// bound is far below box=8 for this problem, so the result is box-stable.
inline WeightSet enumerate_window(const WindowSet& ws, long box = 8) {
  if (box < 8) throw std::invalid_argument("enumerate_window: box bound must be >= 8");
  WeightSet out;
  for (long a = -box; a <= box; ++a)
    for (long b = -box; b <= a; ++b) {
      Weight chi(a, b);
      if (weight_in_window(chi, ws)) out.insert(chi);
    }
  return out;
}

// One row of an orthogonality comparison against a pivot weight.
struct OrthoEntry {
  Weight chi;
  Int value;        // <lambda, chi>
  Int partner_value;  // <lambda, chi'>
  enum class Verdict { Pass, Boundary, Fail } verdict;
};

struct OrthoReport {
  Weight pivot;
  OnePS lambda;
  Int pivot_value;
  bool strict;
  std::vector<OrthoEntry> entries;
  std::vector<Weight> failures;
  std::vector<Weight> boundary;

  bool all_pass() const { return failures.empty() && (!strict || boundary.empty()); }
};

// Compares <lambda, chi> against <lambda, pivot> for each chi. With strict
// semantics an equality counts as a failure; either way equalities are
// listed separately as boundary cases.
inline OrthoReport orthogonality_report(const std::vector<Weight>& weights, const Weight& pivot,
                                        const OnePS& lambda, bool strict) {
  OrthoReport rep;
  rep.pivot = pivot;
  rep.lambda = lambda;
  rep.pivot_value = pair(lambda, pivot);
  rep.strict = strict;
  for (const auto& chi : weights) {
    OrthoEntry e{chi, pair(lambda, chi), pair(lambda, chi.weyl_partner()),
                 OrthoEntry::Verdict::Pass};
    if (e.value > rep.pivot_value) {
      e.verdict = OrthoEntry::Verdict::Pass;
    } else if (e.value == rep.pivot_value) {
      e.verdict = OrthoEntry::Verdict::Boundary;
      rep.boundary.push_back(chi);
    } else {
      e.verdict = OrthoEntry::Verdict::Fail;
      rep.failures.push_back(chi);
    }
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace flopkit
