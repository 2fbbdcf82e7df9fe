#include <stdexcept>

#include "doctest.h"
#include "severi/composition.hpp"
#include "severi/linalg.hpp"
#include "severi/random.hpp"
#include "support.hpp"

using namespace severi;
using testgen::for_trials;
using testgen::Gen;

namespace {

CompositionElement elem(AlgebraTag tag, std::initializer_list<long> v) {
  std::vector<Rational> c;
  for (long x : v) c.emplace_back(x);
  return CompositionElement(tag, std::move(c));
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("canonical form and parsing") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7").is_integer());
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
  }

  TEST_CASE("field axioms on samples") {
    for_trials("rational-field", 200, [](Gen& g) {
      const Rational a = g.rational(), b = g.rational(), c = g.rational();
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a - a == Rational(0));
      if (!b.is_zero()) CHECK((a / b) * b == a);
    });
  }
}

TEST_SUITE("random") {
  TEST_CASE("pcg32 matches the reference generator") {
    // pcg32_srandom_r(42, 54) from the reference C implementation
    Pcg32 rng(42, 54);
    const std::uint32_t expected[] = {0xa15c02b7u, 0x7b47f409u, 0xba1d3330u, 0x83d2f293u, 0xbfa4784bu, 0xcbed606eu};
    for (auto e : expected) CHECK(rng.next_u32() == e);
  }

  TEST_CASE("bounded draws stay in range") {
    Pcg32 rng(1, 2);
    for (int k = 0; k < 2000; ++k) {
      const long v = rng.uniform_int(3);
      CHECK(v >= -3);
      CHECK(v <= 3);
      CHECK(rng.nonzero_int(2) != 0);
    }
  }

  TEST_CASE("keyed streams are independent of call order") {
    Pcg32 a = keyed_stream(5, "s", "m", "c", 3);
    Pcg32 other = keyed_stream(5, "s", "m", "c", 4);
    other.next_u32();
    Pcg32 b = keyed_stream(5, "s", "m", "c", 3);
    CHECK(a.next_u64() == b.next_u64());
    CHECK(keyed_stream(5, "s", "m", "c", 3).next_u32() != keyed_stream(6, "s", "m", "c", 3).next_u32());
  }

  TEST_CASE("fnv1a reference values") {
    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  }
}

TEST_SUITE("composition") {
  TEST_CASE("quaternion i j = k") {
    auto i = CompositionElement::unit(AlgebraTag::H, 1), j = CompositionElement::unit(AlgebraTag::H, 2);
    CHECK(i * j == CompositionElement::unit(AlgebraTag::H, 3));
    CHECK(j * i == Rational(-1) * CompositionElement::unit(AlgebraTag::H, 3));
  }

  TEST_CASE("octonion associator (e1 e2) e4 - e1 (e2 e4)") {
    auto e = [](std::size_t k) { return CompositionElement::unit(AlgebraTag::O, k); };
    // independent recursive evaluation in Python: 2 e7
    CHECK((e(1) * e(2)) * e(4) - e(1) * (e(2) * e(4)) == Rational(2) * e(7));
  }

  TEST_CASE("octonion product frozen value") {
    auto x = elem(AlgebraTag::O, {1, -2, 3, 0, 5, -1, 2, 7});
    auto y = elem(AlgebraTag::O, {0, 4, -3, 1, 1, 2, -6, 3});
    CHECK(x * y == elem(AlgebraTag::O, {5, -30, -50, 1, 20, -52, -23, -3}));
  }

  TEST_CASE("norm and conjugation") {
    CHECK(norm_form(elem(AlgebraTag::C, {1, 1})) == Rational(2));
    auto x = elem(AlgebraTag::H, {1, 2, -3, 4});
    CHECK(conjugate(x) == elem(AlgebraTag::H, {1, -2, 3, -4}));
    CHECK(real_part(x) == Rational(1));
    CHECK(norm_form(x) == Rational(30));
  }

  TEST_CASE("tag mismatch is rejected") {
    CHECK_THROWS_AS(CompositionElement::one(AlgebraTag::C) * CompositionElement::one(AlgebraTag::H), TagMismatch);
    CHECK_THROWS_AS(CompositionElement(AlgebraTag::H, std::vector<Rational>(3)), std::invalid_argument);
  }

  TEST_CASE("composition laws on seeded samples") {
    for (AlgebraTag tag : {AlgebraTag::R, AlgebraTag::C, AlgebraTag::H, AlgebraTag::O}) {
      CAPTURE(to_string(tag));
      for_trials("composition-" + to_string(tag), 50, [&](Gen& g) {
        auto x = g.element(tag), y = g.element(tag);
        CHECK(cd_multiply(x, y) == cd_multiply_recursive(x, y));
        CHECK(norm_form(x * y) == norm_form(x) * norm_form(y));
        CHECK(conjugate(x * y) == conjugate(y) * conjugate(x));
        CHECK(x * (x * y) == (x * x) * y);
        CHECK((y * x) * x == y * (x * x));
        CHECK(real_part_of_product(x, y) == real_part(x * y));
        CHECK(norm_polar(x, x) == norm_form(x));
      });
    }
  }

  TEST_CASE("commutativity and associativity by level") {
    for_trials("composition-levels", 30, [](Gen& g) {
      auto c1 = g.element(AlgebraTag::C), c2 = g.element(AlgebraTag::C);
      CHECK(c1 * c2 == c2 * c1);
      auto h1 = g.element(AlgebraTag::H), h2 = g.element(AlgebraTag::H), h3 = g.element(AlgebraTag::H);
      CHECK((h1 * h2) * h3 == h1 * (h2 * h3));
    });
  }
}

TEST_SUITE("linalg") {
  TEST_CASE("rank, inverse, nullspace") {
    RVector r0 = testgen::ints({1, 2, 3}), r1 = testgen::ints({2, 4, 6}), r2 = testgen::ints({0, 1, 1});
    const RVector rows[] = {r0, r1, r2};
    Matrix m = Matrix::from_rows(rows, 3);
    CHECK(rank(m) == 2);
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(is_zero(m.apply(ns[0])));
    CHECK_THROWS_AS(inverse(m), SingularMatrix);

    const RVector s[] = {testgen::ints({2, 1}), testgen::ints({1, 1})};
    Matrix a = Matrix::from_rows(s, 2);
    CHECK((a * inverse(a)).is_identity());
    CHECK(solve(a, testgen::ints({3, 2})) == testgen::ints({1, 1}));
  }

  TEST_CASE("span membership") {
    const RVector basis[] = {testgen::ints({1, 0, 1}), testgen::ints({0, 1, 1})};
    auto c = coordinates_in_span(basis, testgen::ints({2, 3, 5}));
    REQUIRE(c);
    CHECK(*c == testgen::ints({2, 3}));
    CHECK_FALSE(in_span(basis, testgen::ints({0, 0, 1})));
    CHECK(proportional(testgen::ints({1, -2}), testgen::ints({-3, 6})));
    CHECK_FALSE(proportional(testgen::ints({1, 2}), testgen::ints({2, 3})));
  }

  TEST_CASE("random invertible matrices") {
    for_trials("linalg-inverse", 20, [](Gen& g) {
      Matrix m(5, 5);
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) m(i, j) = g.rational();
      if (rank(m) < 5) return;
      CHECK((inverse(m) * m).is_identity());
      CHECK(nullspace(m).empty());
    });
  }
}
