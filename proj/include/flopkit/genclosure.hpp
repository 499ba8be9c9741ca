#pragma once

// Triangulated generation closure over exact-sequence templates. A template
// is an ordered list of terms, each a multiset of weights (plus optionally
// the distinguished torsion kernel object); templates may be twisted by any
// power of det. If all but exactly one term of a twisted template are
// already generated, the remaining term's weights become generated.

#include "flopkit/bott_weyman.hpp"
#include "flopkit/weights.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flopkit {

struct TemplateTerm {
  std::vector<Weight> weights;  // multiset
  bool is_kernel_object{false}; // the distinguished object K
};

struct SequenceTemplate {
  std::string name;
  std::vector<TemplateTerm> terms;
  long twist_lo{-16};
  long twist_hi{16};
};

inline SequenceTemplate template_from_weights(const std::string& name,
                                              const std::vector<std::vector<Weight>>& terms) {
  SequenceTemplate t;
  t.name = name;
  for (const auto& tw : terms) t.terms.push_back(TemplateTerm{tw, false});
  return t;
}

// The engine-regenerated lambda1 sequences (exact by construction).
inline std::vector<SequenceTemplate> lambda1_sequence_templates() {
  std::vector<SequenceTemplate> out;
  int k = 0;
  for (const auto& chk : sequences_lambda1()) {
    std::vector<std::vector<Weight>> terms;
    for (const auto& dec : chk.engine) {
      std::vector<Weight> t;
      for (auto& [chi, m] : dec)
        for (std::int64_t i = 0; i < m; ++i) t.push_back(chi);
      terms.push_back(std::move(t));
    }
    out.push_back(template_from_weights("seq" + std::to_string(++k), terms));
  }
  return out;
}

// The K-resolution as a long template: [K, C_0, C_1, ..., C_top].
inline SequenceTemplate kernel_resolution_template() {
  SequenceTemplate t;
  t.name = "K-resolution";
  t.terms.push_back(TemplateTerm{{}, true});
  for (const auto& term : resolution_of_K().terms) {
    std::vector<Weight> tw;
    for (auto& [chi, m] : term.bundles)
      for (std::int64_t i = 0; i < m; ++i) tw.push_back(chi);
    t.terms.push_back(TemplateTerm{std::move(tw), false});
  }
  return t;
}

struct TraceStep {
  std::string tmpl;
  long twist;
  std::vector<Weight> produced;
  bool produced_kernel{false};
};

struct ClosureState {
  WeightSet generated;
  // det-twists k for which the twisted kernel object K (x) det^k is known to
  // lie in the generated span; the distinguished object itself is twist 0.
  std::set<long> kernel_twists;
  std::vector<TraceStep> trace;

  bool has(const Weight& w) const { return generated.count(w) > 0; }
  bool kernel_generated() const { return kernel_twists.count(0) > 0; }
};

namespace detail {

inline bool weight_in_box(const Weight& w, long box) {
  return w.a >= -box && w.a <= box && w.b >= -box && w.b <= box;
}

inline bool term_generated(const TemplateTerm& t, long twist, const ClosureState& st) {
  if (t.is_kernel_object) return st.kernel_twists.count(twist) > 0;
  for (const auto& w : t.weights)
    if (!st.has(w.det_twist(Int(twist)))) return false;
  return true;
}

}  // namespace detail

// Deterministic fixed point: scan templates and twists in order, fire the
// cone rule wherever exactly one term is not yet generated, repeat until
// stable. Twists are admitted only when every weight of every term stays in
// the box.
inline ClosureState closure(const WeightSet& initial, const std::vector<SequenceTemplate>& templates,
                            long box = 8, bool kernel_initially_generated = false) {
  if (box < 8) throw std::invalid_argument("closure: box bound must be >= 8");
  ClosureState st;
  st.generated = initial;
  if (kernel_initially_generated) st.kernel_twists.insert(0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& tmpl : templates) {
      for (long k = tmpl.twist_lo; k <= tmpl.twist_hi; ++k) {
        bool in_box = true;
        for (const auto& t : tmpl.terms)
          for (const auto& w : t.weights)
            if (!detail::weight_in_box(w.det_twist(Int(k)), box)) in_box = false;
        if (!in_box) continue;
        int missing = -1;
        bool multiple = false;
        for (size_t i = 0; i < tmpl.terms.size(); ++i) {
          if (detail::term_generated(tmpl.terms[i], k, st)) continue;
          if (missing >= 0) {
            multiple = true;
            break;
          }
          missing = static_cast<int>(i);
        }
        if (multiple || missing < 0) continue;
        const auto& t = tmpl.terms[missing];
        TraceStep step{tmpl.name, k, {}, false};
        if (t.is_kernel_object) {
          st.kernel_twists.insert(k);
          step.produced_kernel = true;
        } else {
          for (const auto& w : t.weights) {
            Weight tw = w.det_twist(Int(k));
            if (!st.has(tw)) {
              st.generated.insert(tw);
              step.produced.push_back(tw);
            }
          }
        }
        if (!step.produced.empty() || step.produced_kernel) {
          st.trace.push_back(std::move(step));
          changed = true;
        }
      }
    }
  }
  return st;
}

struct GenerationAnswer {
  bool generated{false};
  std::vector<TraceStep> chain;  // steps that produced the weight, oldest first
};

inline GenerationAnswer is_generated(const Weight& chi, const ClosureState& st) {
  GenerationAnswer ans;
  ans.generated = st.has(chi);
  if (!ans.generated) return ans;
  for (const auto& step : st.trace)
    if (std::find(step.produced.begin(), step.produced.end(), chi) != step.produced.end()) {
      ans.chain.push_back(step);
      break;
    }
  return ans;
}

}  // namespace flopkit
