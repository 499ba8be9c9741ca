#include "flopkit/koszul.hpp"
#include "flopkit/json_io.hpp"
#include "flopkit/windows.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace flopkit;

namespace {

KoszulProblem simple(std::vector<std::string> names, std::vector<long> weights,
                     std::vector<Poly> elems) {
  KoszulProblem p;
  p.ring.var_names = std::move(names);
  for (long w : weights) p.ring.weights.emplace_back(w);
  p.ring.invertible.assign(p.ring.weights.size(), false);
  p.elements = std::move(elems);
  return p;
}

}  // namespace

TEST_CASE("homogeneity validation") {
  // x + y with weights 1, 2 is not homogeneous.
  auto p = simple({"x", "y"}, {1, 2},
                  {poly_monomial(2, {{0, 1}}).plus(poly_monomial(2, {{1, 1}}))});
  CHECK_THROWS(p.element_weights());
  auto q = simple({"x", "y"}, {2, 1},
                  {poly_monomial(2, {{0, 1}}).plus(poly_monomial(2, {{1, 2}}))});
  CHECK(q.element_weights() == std::vector<Int>{2});
}

TEST_CASE("elimination of coordinate sequences") {
  // (x, y) over C[x,y] reduces to the empty problem over C.
  auto p = simple({"x", "y"}, {1, 1}, {poly_monomial(2, {{0, 1}}), poly_monomial(2, {{1, 1}})});
  KoszulProblem r = eliminate_linear(p);
  CHECK(r.ring.nvars() == 0);
  CHECK(r.elements.empty());

  TorWeightReport rep = tor_weights(p, 4);
  CHECK(rep.regularity.verdict == Regularity::Regular);
  CHECK(rep.support_weights(0) == std::set<Int>{0});
  CHECK(rep.homology_in_degree_zero_only());
}

TEST_CASE("the plus-chart problem reduces to a single cube") {
  KoszulProblem r = eliminate_linear(koszul_z1plus_problem());
  REQUIRE(r.ring.nvars() == 1);
  CHECK(r.ring.var_names == std::vector<std::string>{"u"});
  CHECK(r.ring.weights == std::vector<Int>{-1});
  REQUIRE(r.elements.size() == 1);
  REQUIRE(r.elements[0].is_monomial());
  CHECK(r.elements[0].terms.begin()->first == Expv{3});  // u^3
}

TEST_CASE("the minus-chart problem reduces to the six shared-variable monomials") {
  KoszulProblem r = eliminate_linear(koszul_z1minus_problem());
  REQUIRE(r.ring.nvars() == 7);  // x1..x6 and v
  REQUIRE(r.elements.size() == 6);
  for (const auto& f : r.elements) {
    REQUIRE(f.is_monomial());
    const Expv& e = f.terms.begin()->first;
    CHECK(expv_total(e) == 2);
    CHECK(e[6] == 1);  // every element is v times a distinct x
  }
}

TEST_CASE("plus-chart Tor weights") {
  TorWeightReport rep = tor_weights(koszul_z1plus_problem(), 6);
  CHECK(rep.path == "monomial");
  CHECK(rep.status == KoszulStatus::Exact);
  CHECK(rep.regularity.verdict == Regularity::Regular);
  CHECK(rep.regularity.exact);
  CHECK(rep.homology_in_degree_zero_only());
  CHECK(rep.support_weights(0) == std::set<Int>{0, -1, -2});
  // All weights inside the width-5 window.
  WindowRule rule{kLambda1, 5};
  for (const auto& w : rep.all_support_weights()) CHECK(rule.contains(w));
}

TEST_CASE("single cube directly") {
  auto p = simple({"u"}, {-1}, {poly_monomial(1, {{0, 3}})});
  TorWeightReport rep = tor_weights(p, 5);
  CHECK(rep.status == KoszulStatus::Exact);
  CHECK(rep.support_weights(0) == std::set<Int>{0, -1, -2});
  CHECK(rep.generator_support.at(0) == std::set<Int>{0});
  CHECK(rep.regularity.verdict == Regularity::Regular);
}

TEST_CASE("minus-chart Tor weights") {
  TorWeightReport rep = tor_weights(koszul_z1minus_problem(), 6);
  CHECK(rep.path == "monomial");
  CHECK(rep.regularity.verdict == Regularity::NotRegular);
  CHECK(rep.regularity.exact);
  CHECK(rep.positive_degree_support() == std::set<Int>{-1, -2, -3, -4, -5});
  CHECK(rep.all_generator_weights() == std::set<Int>{0, -1, -2, -3, -4, -5});
  // Each positive degree is concentrated in a single weight.
  for (int j = 1; j <= 5; ++j) CHECK(rep.support_weights(j) == std::set<Int>{-j});
  CHECK(rep.support_weights(6).empty());
  // Window violation.
  WindowRule rule{kLambda1, 5};
  bool violated = false;
  for (const auto& w : rep.all_generator_weights())
    if (!rule.contains(w)) violated = true;
  CHECK(violated);
}

TEST_CASE("minus-chart homology equals the shared-variable Koszul complex") {
  // Direct six-element problem vx1..vx6 over C[x1..x6, v].
  std::vector<Poly> elems;
  for (size_t i = 0; i < 6; ++i) elems.push_back(poly_monomial(7, {{6, 1}, {i, 1}}));
  auto direct = simple({"x1", "x2", "x3", "x4", "x5", "x6", "v"}, {0, 0, 0, 0, 0, 0, -1}, elems);
  TorWeightReport a = tor_weights(direct, 6);
  TorWeightReport b = tor_weights(koszul_z1minus_problem(), 6);
  CHECK(a.support == b.support);
  CHECK(a.generator_support == b.generator_support);
}

TEST_CASE("tor_weights is invariant under elimination preprocessing") {
  // (x y, z) over C[x,y,z]: z eliminable, xy not.
  auto full = simple({"x", "y", "z"}, {1, -1, 2},
                     {poly_monomial(3, {{0, 1}, {1, 1}}), poly_monomial(3, {{2, 1}})});
  auto reduced = simple({"x", "y"}, {1, -1}, {poly_monomial(2, {{0, 1}, {1, 1}})});
  TorWeightReport a = tor_weights(full, 5);
  TorWeightReport b = tor_weights(reduced, 5);
  CHECK(a.support == b.support);
  CHECK(a.generator_support == b.generator_support);
  CHECK(a.regularity.verdict == b.regularity.verdict);
}

TEST_CASE("degree-zero support equals the monomial quotient basis") {
  // Oracle: monomials not divisible by any element, enumerated directly.
  auto p = simple({"x", "y"}, {1, -2},
                  {poly_monomial(2, {{0, 2}}), poly_monomial(2, {{0, 1}, {1, 1}})});
  TorWeightReport rep = tor_weights(p, 6);
  std::map<Int, std::map<int, std::int64_t>> oracle;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b) {
      bool divisible = (a >= 2) || (a >= 1 && b >= 1);
      if (!divisible) oracle[Int(a) - 2 * Int(b)][a + b] += 1;
    }
  CHECK(rep.support.at(0) == oracle);
}

TEST_CASE("regularity certificates") {
  // (x, x): not regular.
  auto dup = simple({"x"}, {1}, {poly_monomial(1, {{0, 1}}), poly_monomial(1, {{0, 1}})});
  CHECK(regularity_certificate(dup, 4).verdict == Regularity::NotRegular);

  // (x^2, x^2 y): not regular.
  auto nested = simple({"x", "y"}, {1, 1},
                       {poly_monomial(2, {{0, 2}}), poly_monomial(2, {{0, 2}, {1, 1}})});
  CHECK(regularity_certificate(nested, 5).verdict == Regularity::NotRegular);

  // (x^2 - y z, y^2): a genuine non-monomial regular pair, certified to the
  // truncation through the Hilbert function.
  Poly f = poly_monomial(3, {{0, 2}});
  f = f.plus(poly_monomial(3, {{1, 1}, {2, 1}}, Rat(-1)));
  auto mixed = simple({"x", "y", "z"}, {1, 1, 1}, {f, poly_monomial(3, {{1, 2}})});
  TorWeightReport rep = tor_weights(mixed, 5);
  CHECK(rep.path == "filtered");
  CHECK(rep.regularity.verdict == Regularity::Regular);
  CHECK_FALSE(rep.regularity.exact);

  // A repeated non-monomial element: (f, f) is not regular, and the exact
  // Hilbert mismatch catches it.
  auto bad = simple({"x", "y", "z"}, {1, 1, 1}, {f, f});
  auto bad_verdict = regularity_certificate(bad, 5);
  CHECK(bad_verdict.verdict == Regularity::NotRegular);
  CHECK(bad_verdict.exact);
}

TEST_CASE("inverse adjunction for weighted units") {
  // Single unit variable t of weight 2 with element t - 1... instead use an
  // invertible variable of nonzero weight appearing in a monomial problem:
  // (t x) over C[t^(+-1), x] is the same as (x) over C[x, t, t_inv]/(t t_inv - 1).
  KoszulProblem p;
  p.ring.var_names = {"t", "x"};
  p.ring.weights = {Int(2), Int(-1)};
  p.ring.invertible = {true, false};
  p.elements = {poly_monomial(2, {{0, 1}, {1, 1}})};
  KoszulProblem s = specialize_invertibles(p);
  REQUIRE(s.ring.nvars() == 3);
  CHECK(s.ring.var_names == std::vector<std::string>{"t", "x", "t_inv"});
  CHECK(s.ring.weights == std::vector<Int>{2, -1, -2});
  REQUIRE(s.elements.size() == 2);
  s.element_weights();  // all homogeneous, including t*t_inv - 1
}

TEST_CASE("custom problems load from json") {
  json j;
  j["vars"] = json::array();
  j["vars"].push_back(json{{"name", "x"}, {"weight", 1}});
  j["vars"].push_back(json{{"name", "y"}, {"weight", -1}, {"invertible", false}});
  json term1 = json{{"coeff", "1"}, {"exps", json::array({2, 0})}};
  json term2 = json{{"coeff", "-1/2"}, {"exps", json::array({1, 1})}};
  j["elements"] = json::array({json::array({term1, term2})});
  KoszulProblem p = koszul_problem_from_json(j);
  REQUIRE(p.ring.nvars() == 2);
  REQUIRE(p.elements.size() == 1);
  CHECK(p.elements[0].terms.size() == 2);
  CHECK_THROWS(p.element_weights());  // x^2 has weight 2, xy has weight 0
}
