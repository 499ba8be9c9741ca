#pragma once

// The acceptance suite: one named check per criterion, each with a stable
// anchor string, a pass/fail/inconclusive status and a JSON payload. The
// CLI `verify-all` and the acceptance test binary both run this registry.

#include "flopkit/json_io.hpp"
#include "flopkit/svg.hpp"

#include <random>
#include <sstream>

namespace flopkit {

enum class CheckStatus { Pass, Fail, Inconclusive };

struct CheckResult {
  std::string name;
  std::string anchor;
  CheckStatus status{CheckStatus::Fail};
  std::string detail;
  json payload = json::object();
};

struct RunReport {
  unsigned long seed{0};
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }
  json to_json() const {
    json arr = json::array();
    for (const auto& c : checks)
      arr.push_back(json{{"name", c.name},
                         {"anchor", c.anchor},
                         {"status", c.status == CheckStatus::Pass
                                        ? "pass"
                                        : (c.status == CheckStatus::Fail ? "fail" : "inconclusive")},
                         {"detail", c.detail},
                         {"payload", c.payload}});
    return json{{"seed", seed}, {"checks", arr}};
  }
};

namespace verify_detail {

inline WeightSet fifteen_bundle_set() {
  // { (b+c, b) : c <= 4, -2 <= b <= 2-c }
  WeightSet s;
  for (long c = 0; c <= 4; ++c)
    for (long b = -2; b <= 2 - c; ++b) s.insert(Weight(b + c, b));
  return s;
}

inline WeightSet k_resolution_expected_support() {
  return {Weight(0, -3), Weight(0, -2), Weight(0, -1), Weight(0, 0),  Weight(1, 1),
          Weight(2, 1),  Weight(-3, -3), Weight(-2, -2), Weight(-1, -2), Weight(1, -2)};
}

inline Rat fd_partial(const Cubic6& f, PointV p, int coord, const Rat& h) {
  auto bump = [&](PointV& q, const Rat& delta) {
    if (coord < 12) {
      q.phi[coord / 6][coord % 6] += delta;
    } else {
      switch (coord - 12) {
        case 0: q.psi.c30 += delta; break;
        case 1: q.psi.c21 += delta; break;
        case 2: q.psi.c12 += delta; break;
        default: q.psi.c03 += delta; break;
      }
    }
  };
  PointV hi = p, lo = p;
  bump(hi, h);
  bump(lo, -h);
  return (eval_W(f, hi) - eval_W(f, lo)) / (Rat(2) * h);
}

inline Rat grad_coord(const WGradient& g, int coord) {
  if (coord < 12) return g.dphi[coord / 6][coord % 6];
  return g.dpsi[coord - 12];
}

}  // namespace verify_detail

inline RunReport verify_all(unsigned long seed = 0) {
  using verify_detail::fifteen_bundle_set;
  using verify_detail::k_resolution_expected_support;
  RunReport rep;
  rep.seed = seed;
  GitProblem prob = GitProblem::standard();

  {  // 1. eta invariants.
    CheckResult c{"eta-invariants", "eta(lambda0,lambda1,lambda2) = (12,5,12), symmetric under negation"};
    Int e0 = eta(prob, kLambda0), e1 = eta(prob, kLambda1), e2 = eta(prob, kLambda2);
    bool sym = e0 == eta(prob, -kLambda0) && e1 == eta(prob, -kLambda1) && e2 == eta(prob, -kLambda2);
    bool cy = prob.calabi_yau();
    c.status = (e0 == 12 && e1 == 5 && e2 == 12 && sym && cy) ? CheckStatus::Pass : CheckStatus::Fail;
    c.payload = json{{"eta", {to_i64(e0), to_i64(e1), to_i64(e2)}},
                     {"negation_symmetric", sym},
                     {"sum_of_v_weights_zero", cy}};
    rep.checks.push_back(c);
  }

  WeightSet nminus = enumerate_window(minus_window(prob));
  WeightSet nplus = enumerate_window(plus_window(prob));
  {  // 2. window sets.
    CheckResult c{"window-sets", "|nabla-| = 15 wide-window weights, nabla+ = nabla- minus (2,-2), dual-invariant"};
    WeightSet expected = fifteen_bundle_set();
    WeightSet nminus_minus_pivot = nminus;
    nminus_minus_pivot.erase(Weight(2, -2));
    bool dual_inv = true;
    for (const auto& w : nplus)
      if (!nplus.count(w.dual())) dual_inv = false;
    c.status = (nminus == expected && nminus.size() == 15 && nplus.size() == 14 &&
                nplus == nminus_minus_pivot && dual_inv)
                   ? CheckStatus::Pass
                   : CheckStatus::Fail;
    c.payload = json{{"nabla_minus", to_json(nminus)},
                     {"nabla_plus", to_json(nplus)},
                     {"dual_invariant", dual_inv}};
    rep.checks.push_back(c);
  }

  GammaCharTable table = character_table();
  {  // 3. finite stabilizer data.
    CheckResult c{"gamma-data", "9 classes, dims {1^6,2^3}, exact orthogonality, det of order 6, covering restrictions"};
    bool ok = table.group.classes.size() == 9 && table.irreps.size() == 9;
    std::multiset<int> dims;
    std::int64_t dimsq = 0;
    for (const auto& ir : table.irreps) {
      dims.insert(ir.dim);
      dimsq += ir.dim * ir.dim;
    }
    ok = ok && dims == std::multiset<int>{1, 1, 1, 1, 1, 1, 2, 2, 2} && dimsq == 18;
    bool ortho = true;
    for (size_t i = 0; i < table.irreps.size() && ortho; ++i)
      for (size_t j = 0; j < table.irreps.size() && ortho; ++j) {
        std::int64_t ip = table.inner(table.irreps[i].values, table.irreps[j].values);
        if (ip != (i == j ? 1 : 0)) ortho = false;
      }
    ok = ok && ortho;
    bool detord = restricted_det_order(table) == 6;
    ok = ok && detord;
    // Sym^2 T (x) det^-1 restricted contains det^3 restricted.
    auto r21 = restrict_gl2(table, Weight(1, -1));
    auto rdet3 = restrict_gl2(table, Weight(3, 3));
    bool contains = true;
    for (auto& [label, m] : rdet3)
      if (r21.find(label) == r21.end() || r21[label] < m) contains = false;
    ok = ok && contains;
    std::set<std::string> covered;
    for (const auto& w : nplus)
      for (auto& [label, m] : restrict_gl2(table, w)) covered.insert(label);
    ok = ok && covered.size() == 9;
    c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    c.payload = json{{"classes", table.group.classes.size()},
                     {"orthogonal", ortho},
                     {"det_order", restricted_det_order(table)},
                     {"sym2_det_inv_contains_det3", contains},
                     {"irreps_covered_by_nabla_plus", covered.size()}};
    rep.checks.push_back(c);
  }

  {  // 4. Euler characteristics.
    CheckResult c{"euler-characteristics", "9 irreducibles + chi(P^5) = 15 = |nabla-|"};
    bool ok = table.irreps.size() + 6 == 15 && nminus.size() == 15;
    c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    c.payload = json{{"gamma_irreps", table.irreps.size()}, {"chi_p5", 6}, {"nabla_minus", nminus.size()}};
    rep.checks.push_back(c);
  }

  {  // 5. pushforward anchor.
    CheckResult c{"pushforward-anchor", "L^-k pushes to T_(0,-k) for k = 0..6; degree (a,a-1) is acyclic"};
    bool ok = true;
    for (long k = 0; k <= 6; ++k) {
      BottResult b = bott_pushforward(LineBundleWeight(-k, 0));
      if (b.zero || b.coh_degree != 0 || !(b.weight == Weight(0, -k))) ok = false;
    }
    for (long a = -5; a <= 5; ++a)
      if (!bott_pushforward(LineBundleWeight(a, a - 1)).zero) ok = false;
    c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    rep.checks.push_back(c);
  }

  WeymanComplex sres = resolution_of_S();
  WeymanComplex kres = resolution_of_K();
  {  // 6. kernel resolution.
    CheckResult c{"kernel-resolution", "K-resolution support is the ten listed weights; final term (0,-3) once; exactness to degree 4"};
    bool support_ok = kres.weight_support() == k_resolution_expected_support();
    bool final_ok = false;
    if (!kres.terms.empty()) {
      const auto& last = kres.terms.back();
      final_ok = last.bundles == IrrepDecomp{{Weight(0, -3), 1}} &&
                 kres.multiplicity(Weight(0, -3)) == 1;
    }
    const WeymanTerm* first = sres.term_at(0);
    bool first_ok = first && first->bundles == IrrepDecomp{{Weight(2, -2), 1}};
    bool exact_ok = exactness_check(sres, resolution_model("lambda2-plus"), 4);
    c.status = (support_ok && final_ok && first_ok && exact_ok) ? CheckStatus::Pass : CheckStatus::Fail;
    c.payload = json{{"support_matches", support_ok},
                     {"final_term_is_0_-3_once", final_ok},
                     {"s_resolution_starts_at_2_-2", first_ok},
                     {"euler_exactness_to_degree_4", exact_ok},
                     {"complex", to_json(kres)}};
    rep.checks.push_back(c);
  }

  {  // 7. orthogonality inequalities.
    CheckResult c{"orthogonality-inequalities", "<lambda2,chi> > -6 strictly on nabla+; >= -6 on the K-resolution support with the boundary listed"};
    std::vector<Weight> nplus_vec(nplus.begin(), nplus.end());
    OrthoReport strict = orthogonality_report(nplus_vec, Weight(2, -2), kLambda2, true);
    WeightSet ksup = kres.weight_support();
    std::vector<Weight> ksup_vec(ksup.begin(), ksup.end());
    OrthoReport weak = orthogonality_report(ksup_vec, Weight(2, -2), kLambda2, false);
    bool ok = strict.all_pass() && weak.failures.empty() &&
              weak.boundary == std::vector<Weight>{Weight(0, -3)};
    c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    c.payload = json{{"nabla_plus_strict", to_json(strict)}, {"k_support_nonstrict", to_json(weak)}};
    rep.checks.push_back(c);
  }

  {  // 8. Euler-pairing vanishing.
    CheckResult c{"euler-pairing-vanishing", "graded Euler pairing of both torsion resolutions against every wide-window bundle vanishes to degree 4"};
    bool ok = true;
    json left = json::object(), right = json::object();
    WeymanComplex sdual = resolution_of_S_dual();
    for (const auto& mu : nminus) {
      auto series = euler_pairing_series(sres, mu, 4);
      if (!std::all_of(series.begin(), series.end(), [](auto v) { return v == 0; })) ok = false;
      left[mu.a.str() + "," + mu.b.str()] = series;
      auto dseries = euler_pairing_series(sdual, mu, 4);
      if (!std::all_of(dseries.begin(), dseries.end(), [](auto v) { return v == 0; })) ok = false;
      right[mu.a.str() + "," + mu.b.str()] = dseries;
    }
    c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    c.payload = json{{"s_resolution_vs_nabla_minus", left},
                     {"s_dual_resolution_vs_nabla_minus", right}};
    rep.checks.push_back(c);
  }

  {  // 9. generation closure.
    CheckResult c{"generation-closure", "nabla+ with the three sequences generates det^k for k in [-5,5]; adding the kernel object reaches (0,-3), (-2,-4), (-6,-6)"};
    auto seqs = lambda1_sequence_templates();
    ClosureState without = closure(nplus, seqs, 8, false);
    bool dets_ok = true;
    for (long k = -5; k <= 5; ++k)
      if (!without.has(Weight(k, k))) dets_ok = false;
    bool no_kernel_route = !without.has(Weight(0, -3));
    auto seqs_k = seqs;
    seqs_k.push_back(kernel_resolution_template());
    ClosureState without_k_marked = closure(nplus, seqs_k, 8, false);
    bool still_no = !without_k_marked.has(Weight(0, -3));
    ClosureState with = closure(nplus, seqs_k, 8, true);
    bool reach = with.has(Weight(0, -3)) && with.has(Weight(-2, -4)) && with.has(Weight(-6, -6));
    bool final_dets = true;
    for (long k = -6; k <= 5; ++k)
      if (!with.has(Weight(k, k))) final_dets = false;
    c.status = (dets_ok && no_kernel_route && still_no && reach && final_dets) ? CheckStatus::Pass
                                                                               : CheckStatus::Fail;
    c.payload = json{{"closure_without_kernel_size", without.generated.size()},
                     {"det_range_minus5_to_5", dets_ok},
                     {"kernel_needed_for_0_-3", no_kernel_route && still_no},
                     {"closure_with_kernel_size", with.generated.size()},
                     {"reaches_0-3_-2-4_-6-6", reach},
                     {"det_range_minus6_to_5", final_dets}};
    rep.checks.push_back(c);
  }

  {  // 10. Koszul / Tor weights.
    CheckResult c{"koszul-tor-weights", "plus chart: regular, Tor weights {0,-1,-2}, inside the width-5 window; minus chart: not regular, generator weights {0..-5}, violating it"};
    TorWeightReport zp = tor_weights(koszul_z1plus_problem(), 6);
    WindowRule lam1_rule{kLambda1, 5};
    bool zp_ok = zp.status == KoszulStatus::Exact && zp.regularity.verdict == Regularity::Regular &&
                 zp.regularity.exact && zp.homology_in_degree_zero_only();
    std::set<Int> zp_sup = zp.all_support_weights();
    zp_ok = zp_ok && zp_sup == std::set<Int>{0, -1, -2};
    for (const auto& w : zp_sup)
      if (!lam1_rule.contains(w)) zp_ok = false;

    TorWeightReport zm = tor_weights(koszul_z1minus_problem(), 8);
    bool zm_ok = zm.regularity.verdict == Regularity::NotRegular && zm.regularity.exact;
    std::set<Int> zm_gens = zm.all_generator_weights();
    zm_ok = zm_ok && zm_gens == std::set<Int>{0, -1, -2, -3, -4, -5};
    zm_ok = zm_ok && zm.positive_degree_support() == std::set<Int>{-1, -2, -3, -4, -5};
    bool violated = false;
    for (const auto& w : zm_gens)
      if (!lam1_rule.contains(w)) violated = true;
    zm_ok = zm_ok && violated;
    c.status = (zp_ok && zm_ok) ? CheckStatus::Pass : CheckStatus::Fail;
    c.payload = json{{"z1plus", to_json(zp)}, {"z1minus", to_json(zm)}};
    rep.checks.push_back(c);
  }

  {  // 11. stability criteria.
    CheckResult c{"stability-criteria", "standard forms classify as stated; semistability is invariant under 100 random group moves per fixture"};
    std::mt19937_64 rng(seed);
    PointV p1;  // rank-2 Phi, psi = 0
    p1.phi[0][0] = 1;
    p1.phi[1][1] = 1;
    PointV p2;  // Phi = 0, psi with three distinct roots
    p2.psi = BinaryCubic::fermat2();
    PointV p3;  // image inside the double root of t1^2 t2
    p3.psi = BinaryCubic::t1sq_t2();
    for (int i = 0; i < 6; ++i) p3.phi[1][i] = Rat(i + 1);
    PointV p4;  // double root but image off it: semistable on the plus side
    p4.psi = BinaryCubic::t1sq_t2();
    p4.phi[0][0] = 1;
    bool classify = semistable(p1, Side::Minus) && !semistable(p1, Side::Plus) &&
                    !semistable(p2, Side::Minus) && semistable(p2, Side::Plus) &&
                    !semistable(p3, Side::Plus) && !semistable(p3, Side::Minus) &&
                    semistable(p4, Side::Plus);
    bool invariant = true;
    for (const PointV* p : {&p1, &p2, &p3, &p4}) {
      bool m = semistable(*p, Side::Minus), q = semistable(*p, Side::Plus);
      for (int t = 0; t < 100; ++t) {
        PointV moved = act(detail::random_gl2(rng), *p);
        if (semistable(moved, Side::Minus) != m || semistable(moved, Side::Plus) != q)
          invariant = false;
      }
    }
    c.status = (classify && invariant) ? CheckStatus::Pass : CheckStatus::Fail;
    c.payload = json{{"classification", classify}, {"group_invariant", invariant}};
    rep.checks.push_back(c);
  }

  {  // 12. superpotential.
    CheckResult c{"superpotential", "analytic gradient matches central differences; the four stratum formulas hold; semistable double-root samples are noncritical"};
    std::mt19937_64 rng(seed + 1);
    Cubic6 f = Cubic6::fermat();
    bool fd_ok = true;
    Rat h(1, 16384);
    Rat tol(1, 1000000);
    for (int t = 0; t < 100 && fd_ok; ++t) {
      PointV p;
      for (int i = 0; i < 6; ++i) {
        p.phi[0][i] = detail::random_rat(rng);
        p.phi[1][i] = detail::random_rat(rng);
      }
      p.psi = BinaryCubic(detail::random_rat(rng), detail::random_rat(rng),
                          detail::random_rat(rng), detail::random_rat(rng));
      WGradient g = grad_W(f, p);
      for (int coords = 0; coords < 16; ++coords) {
        Rat analytic = verify_detail::grad_coord(g, coords);
        Rat fd = verify_detail::fd_partial(f, p, coords, h);
        Rat err = rat_abs(fd - analytic);
        Rat scale = rat_abs(analytic) > 1 ? rat_abs(analytic) : Rat(1);
        if (err > tol * scale) fd_ok = false;
      }
    }
    CriticalReport crit = critical_stratum_check(f, seed + 2, 1000);
    c.status = (fd_ok && crit.all_pass()) ? CheckStatus::Pass : CheckStatus::Fail;
    json checks = json::array();
    for (const auto& ck : crit.checks)
      checks.push_back(json{{"stratum", ck.stratum},
                            {"claim", ck.claim},
                            {"pass", ck.pass},
                            {"indeterminate", ck.indeterminate},
                            {"detail", ck.detail}});
    c.payload = json{{"finite_difference_agreement", fd_ok},
                     {"stratum_checks", checks},
                     {"sigma2_semistable_samples", crit.sigma2_semistable_samples},
                     {"sigma2_semistable_noncritical", crit.sigma2_semistable_noncritical}};
    rep.checks.push_back(c);
  }

  {  // 13. slice models.
    CheckResult c{"slice-models", "toric local-model weights and the weighted projective resolution weights"};
    auto minus = slice_weights("generic-sing-slice-minus");
    auto plus = slice_weights("generic-sing-slice-plus");
    auto fres = slice_weights("F-resolution");
    bool ok = minus.bundle_weights == std::vector<Int>{-2, -3} && minus.base == "P4" &&
              plus.bundle_weights == std::vector<Int>{-1, -1, -1, -1, -1} &&
              plus.isotropy_weights == std::vector<Int>{2, 3} &&
              fres.bundle_weights == std::vector<Int>{1, 1, 1, 1, 1, 1, 6};
    c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    rep.checks.push_back(c);
  }

  return rep;
}

}  // namespace flopkit
