#include "flopkit/weights.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace flopkit;

TEST_CASE("pairing against one-parameter subgroups") {
  CHECK(pair(kLambda2, Weight(2, -2)) == -6);
  CHECK(pair(kLambda0, Weight(2, -2)) == 0);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-20, 20);
  for (int t = 0; t < 50; ++t) {
    Weight chi(d(rng), d(rng));
    CHECK(pair(kLambda1, chi) == chi.b);
  }
}

TEST_CASE("pairing is bilinear") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-15, 15);
  for (int t = 0; t < 60; ++t) {
    OnePS l1(d(rng), d(rng)), l2(d(rng), d(rng));
    Weight c1(d(rng), d(rng)), c2(d(rng), d(rng));
    CHECK(pair(OnePS(l1.w1 + l2.w1, l1.w2 + l2.w2), c1) == pair(l1, c1) + pair(l2, c1));
    CHECK(pair(l1, c1 + c2) == pair(l1, c1) + pair(l1, c2));
    // pairing chi plus its partner sees only the determinant direction
    CHECK(pair(l1, c1) + pair(l1, c1.weyl_partner()) == (l1.w1 + l1.w2) * (c1.a + c1.b));
  }
}

TEST_CASE("weyl partner") {
  CHECK(Weight(2, -2).weyl_partner() == Weight(-2, 2));
  CHECK(Weight(5, 3).weyl_partner() == Weight(3, 5));
  for (long k = -4; k <= 4; ++k) CHECK(Weight(k, k).weyl_partner() == Weight(k, k));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int t = 0; t < 40; ++t) {
    Weight chi(d(rng), d(rng));
    CHECK(chi.weyl_partner().weyl_partner() == chi);
  }
}

TEST_CASE("weight multiset of an irreducible") {
  auto std_rep = weight_multiset(Weight(1, 0));
  REQUIRE(std_rep.size() == 2);
  CHECK(std_rep[0] == Weight(1, 0));
  CHECK(std_rep[1] == Weight(0, 1));

  CHECK(weight_multiset(Weight(4, 4)) == std::vector<Weight>{Weight(4, 4)});

  auto sym3 = weight_multiset(Weight(3, 0));
  REQUIRE(sym3.size() == 4);
  CHECK(sym3 == std::vector<Weight>{Weight(3, 0), Weight(2, 1), Weight(1, 2), Weight(0, 3)});

  CHECK_THROWS(weight_multiset(Weight(0, 1)));
}

TEST_CASE("sym-det labels convert to highest weights") {
  CHECK(weight_from_sym_det(4, -2) == Weight(2, -2));
  CHECK(weight_from_sym_det(0, 3) == Weight(3, 3));
  CHECK(weight_from_sym_det(1, 0) == Weight(1, 0));
  // The label is recovered as c = a - b, b = b.
  Weight w = weight_from_sym_det(3, -1);
  CHECK(w.a - w.b == 3);
  CHECK(w.b == -1);
}

TEST_CASE("weight multiset is swap symmetric") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-8, 8);
  for (int t = 0; t < 40; ++t) {
    long a = d(rng), b = d(rng);
    if (a < b) std::swap(a, b);
    auto ms = weight_multiset(Weight(a, b));
    CHECK(ms.size() == static_cast<size_t>(a - b + 1));
    std::multiset<std::pair<long, long>> fwd, swapped;
    for (const auto& w : ms) {
      fwd.insert({static_cast<long>(w.a), static_cast<long>(w.b)});
      swapped.insert({static_cast<long>(w.b), static_cast<long>(w.a)});
    }
    CHECK(fwd == swapped);
  }
}
