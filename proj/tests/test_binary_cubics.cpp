#include "flopkit/binary_cubics.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace flopkit;

namespace {

Rat rr(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  for (;;) {
    Rat r(num(rng), den(rng));
    if (!nonzero || r != 0) return r;
  }
}

std::array<std::array<Rat, 2>, 2> random_gl2(std::mt19937_64& rng) {
  for (;;) {
    std::array<std::array<Rat, 2>, 2> g = {{{rr(rng), rr(rng)}, {rr(rng), rr(rng)}}};
    if (g[0][0] * g[1][1] - g[0][1] * g[1][0] != 0) return g;
  }
}

Rat det2(const std::array<std::array<Rat, 2>, 2>& g) {
  return g[0][0] * g[1][1] - g[0][1] * g[1][0];
}

// Product of linear forms (a t1 + b t2)(c t1 + d t2)(e t1 + f t2).
BinaryCubic from_roots(Rat a, Rat b, Rat c, Rat d, Rat e, Rat f) {
  return BinaryCubic(a * c * e, a * c * f + a * d * e + b * c * e,
                     a * d * f + b * c * f + b * d * e, b * d * f);
}

}  // namespace

TEST_CASE("discriminant values") {
  CHECK(discriminant(BinaryCubic::t1sq_t2()) == 0);
  // Oracle: evaluate 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2 at (1,0,0,1).
  auto direct = [](Rat a, Rat b, Rat c, Rat d) {
    return Rat(18) * a * b * c * d - Rat(4) * b * b * b * d + b * b * c * c -
           Rat(4) * a * c * c * c - Rat(27) * a * a * d * d;
  };
  CHECK(direct(1, 0, 0, 1) == -27);
  CHECK(discriminant(BinaryCubic::fermat2()) == -27);
}

TEST_CASE("discriminant covariance disc(psi o g) = det(g)^6 disc(psi)") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    BinaryCubic psi(rr(rng), rr(rng), rr(rng), rr(rng));
    auto g = random_gl2(rng);
    Rat d = det2(g);
    Rat d6 = d * d * d * d * d * d;
    CHECK(discriminant(psi.pullback(g)) == d6 * discriminant(psi));
  }
}

TEST_CASE("strata of the standard forms") {
  CHECK(stratum(BinaryCubic()) == Stratum::S0);
  CHECK(stratum(BinaryCubic::t1_cubed()) == Stratum::S1);
  CHECK(stratum(BinaryCubic::t1sq_t2()) == Stratum::S2);
  CHECK(stratum(BinaryCubic::fermat2()) == Stratum::S3);
}

TEST_CASE("stratum is a pullback invariant") {
  std::mt19937_64 rng(23);
  for (const auto& psi : {BinaryCubic::t1_cubed(), BinaryCubic::t1sq_t2(), BinaryCubic::fermat2(),
                          from_roots(1, 2, 1, 2, 3, -1), from_roots(1, 0, 1, 0, 0, 1)}) {
    Stratum s = stratum(psi);
    for (int t = 0; t < 40; ++t) CHECK(stratum(psi.pullback(random_gl2(rng))) == s);
  }
}

TEST_CASE("discriminant vanishes exactly on repeated roots") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 60; ++t) {
    // Random product of three rational linear forms: stratum known by design.
    Rat a = rr(rng, true), b = rr(rng), c = rr(rng, true), d = rr(rng), e = rr(rng, true),
        f = rr(rng);
    BinaryCubic psi = from_roots(a, b, c, d, e, f);
    bool repeated = (a * d - b * c == 0) || (a * f - b * e == 0) || (c * f - d * e == 0);
    CHECK((discriminant(psi) == 0) == repeated);
    CHECK((discriminant(psi) == 0) == (stratum(psi) != Stratum::S3));
  }
}

TEST_CASE("root multiplicities") {
  CHECK(root_multiplicity(BinaryCubic::t1sq_t2(), ProjectivePoint(0, 1)) == 2);
  CHECK(root_multiplicity(BinaryCubic::fermat2(), ProjectivePoint(1, -1)) == 1);
  CHECK(root_multiplicity(BinaryCubic::t1_cubed(), ProjectivePoint(1, 0)) == 0);
  CHECK(root_multiplicity(BinaryCubic::t1_cubed(), ProjectivePoint(0, 1)) == 3);
  CHECK_THROWS(root_multiplicity(BinaryCubic(), ProjectivePoint(1, 1)));

  // (t1 - t2)^2 (t1 + 2 t2): multiplicities 2 and 1 at the two roots.
  BinaryCubic psi = from_roots(1, -1, 1, -1, 1, 2);
  CHECK(root_multiplicity(psi, ProjectivePoint(1, 1)) == 2);
  CHECK(root_multiplicity(psi, ProjectivePoint(-2, 1)) == 1);
  CHECK(root_multiplicity(psi, ProjectivePoint(1, 0)) == 0);
  CHECK(root_multiplicity(psi, ProjectivePoint(1, 1)) +
            root_multiplicity(psi, ProjectivePoint(-2, 1)) <=
        3);
}

TEST_CASE("repeated root extraction") {
  auto r = repeated_root(BinaryCubic::t1sq_t2());
  REQUIRE(r.has_value());
  CHECK(r->same_point(ProjectivePoint(0, 1)));

  auto r2 = repeated_root(from_roots(1, -2, 1, -2, 0, 1));  // (t1 - 2 t2)^2 t2
  REQUIRE(r2.has_value());
  CHECK(r2->same_point(ProjectivePoint(2, 1)));

  auto r3 = repeated_root(BinaryCubic::t1_cubed());
  REQUIRE(r3.has_value());
  CHECK(r3->same_point(ProjectivePoint(0, 1)));

  CHECK_FALSE(repeated_root(BinaryCubic::fermat2()).has_value());
}
