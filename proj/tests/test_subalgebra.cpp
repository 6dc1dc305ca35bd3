#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "assignalg/subalgebra.hpp"
#include "test_util.hpp"

using namespace assignalg;
using testutil::Rng;

TEST_CASE("kernel constructions") {
  CHECK(Subalgebra::from_kernel({}, 2) == Subalgebra::full(2));

  Subalgebra line = Subalgebra::from_kernel({{Rational(1), Rational(0)}}, 2);
  CHECK(line.dim() == 1);
  CHECK(line.contains_vector({Rational(0), Rational(1)}));

  // Three forms spanning the dual plane cut out the zero subalgebra.
  Subalgebra z = Subalgebra::from_kernel({{Rational(2), Rational(0)},
                                          {Rational(0), Rational(2)},
                                          {Rational(1), Rational(1)}},
                                         2);
  CHECK(z.dim() == 0);
}

TEST_CASE("intersection and containment") {
  Subalgebra ker1 = Subalgebra::from_kernel({{Rational(1), Rational(0)}}, 2);
  Subalgebra ker2 = Subalgebra::from_kernel({{Rational(0), Rational(1)}}, 2);
  CHECK(ker1.intersect(ker1) == ker1);
  CHECK(ker1.contains(ker1));
  CHECK(ker1.intersect(ker2) == Subalgebra::zero(2));

  Subalgebra antidiag_kernel =
      Subalgebra::from_kernel({{Rational(1), Rational(-1)}}, 2);
  CHECK(antidiag_kernel.contains(
      Subalgebra::from_span({{Rational(1), Rational(1)}}, 2)));
}

TEST_CASE("vanishing ideals") {
  CHECK(Subalgebra::full(2).vanishing_ideal().empty());

  auto zero_ideal = Subalgebra::zero(2).vanishing_ideal();
  REQUIRE(zero_ideal.size() == 2);
  CHECK(zero_ideal[0] == LinearForm{Rational(1), Rational(0)});
  CHECK(zero_ideal[1] == LinearForm{Rational(0), Rational(1)});

  Subalgebra diag = Subalgebra::from_span({{Rational(1), Rational(1)}}, 2);
  auto diag_ideal = diag.vanishing_ideal();
  REQUIRE(diag_ideal.size() == 1);
  // u1 - u2 up to the RREF scaling convention.
  CHECK(diag_ideal[0] == LinearForm{Rational(1), Rational(-1)});
}

TEST_CASE("normal form and restriction") {
  int n = 2;
  Polynomial u1 = Polynomial::variable(n, 0);
  Polynomial u2 = Polynomial::variable(n, 1);

  Polynomial p = u1 * u2 + u2;
  CHECK(Subalgebra::full(n).normal_form(p) == p);

  Subalgebra ker_u2 = Subalgebra::from_kernel({{Rational(0), Rational(1)}}, n);
  CHECK(ker_u2.normal_form(u1 - u2) == u1);
  Subalgebra ker_u1 = Subalgebra::from_kernel({{Rational(1), Rational(0)}}, n);
  CHECK(ker_u1.normal_form(u1 * (u2 * u2 + u1)).is_zero());

  Subalgebra diag = Subalgebra::from_span({{Rational(1), Rational(1)}}, n);
  CHECK(diag.restrict_to(Polynomial::constant(n, Rational(3))) ==
        Polynomial::constant(1, Rational(3)));
  CHECK(diag.restrict_to(u1 + u2) == Polynomial::variable(1, 0).scaled(Rational(2)));
  CHECK(diag.restrict_to(u1 - u2).is_zero());
}

TEST_CASE("canonicity on random subalgebras") {
  Rng rng(31);
  for (int it = 0; it < 200; ++it) {
    int ambient = testutil::uniform(rng, 1, 5);
    int dim = testutil::uniform(rng, 1, ambient);
    Subalgebra h = testutil::random_subalgebra(rng, ambient, dim);
    CHECK(Subalgebra::from_kernel(h.vanishing_ideal(), ambient) == h);
  }
}

TEST_CASE("normal form and restriction vanish together") {
  Rng rng(32);
  for (int it = 0; it < 100; ++it) {
    int ambient = testutil::uniform(rng, 1, 4);
    Subalgebra h = testutil::random_subalgebra(rng, ambient,
                                               testutil::uniform(rng, 0, ambient));
    Polynomial p = testutil::random_polynomial(rng, ambient, 3);
    CHECK(h.normal_form(p).is_zero() == h.restrict_to(p).is_zero());
    // Multiplicativity modulo the ideal.
    Polynomial q = testutil::random_polynomial(rng, ambient, 3);
    CHECK(h.normal_form(p * q) ==
          h.normal_form(h.normal_form(p) * h.normal_form(q)));
    // Idempotence.
    CHECK(h.normal_form(h.normal_form(p)) == h.normal_form(p));
  }
}

TEST_CASE("containment transfers vanishing") {
  Rng rng(33);
  for (int it = 0; it < 100; ++it) {
    int ambient = testutil::uniform(rng, 1, 4);
    Subalgebra h1 = testutil::random_subalgebra(rng, ambient,
                                                testutil::uniform(rng, 0, ambient));
    Subalgebra h2 = h1.intersect(testutil::random_subalgebra(
        rng, ambient, testutil::uniform(rng, 0, ambient)));
    REQUIRE(h1.contains(h2));
    Polynomial p = testutil::random_polynomial(rng, ambient, 3);
    if (h1.normal_form(p).is_zero()) CHECK(h2.normal_form(p).is_zero());
  }
}

TEST_CASE("collinearity classes") {
  // Collinear inputs with mixed scalings collapse to one primitive class.
  auto one = collinearity_classes(
      {{Rational(-2), Rational(2)}, {Rational(-1), Rational(1)}});
  REQUIRE(one.size() == 1);
  CHECK(one[0].representative == LinearForm{Rational(1), Rational(-1)});
  CHECK(one[0].multiplicity == 2);

  auto two = collinearity_classes(
      {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
  CHECK(two.size() == 2);

  auto weights = collinearity_classes({{Rational(1), Rational(0)},
                                       {Rational(-1), Rational(0)},
                                       {Rational(0), Rational(1)},
                                       {Rational(0), Rational(-1)}});
  REQUIRE(weights.size() == 2);
  CHECK(weights[0].representative == LinearForm{Rational(1), Rational(0)});
  CHECK(weights[1].representative == LinearForm{Rational(0), Rational(1)});

  CHECK_THROWS(collinearity_classes({{Rational(0), Rational(0)}}));

  // Invariance under rescaling and permutation.
  Rng rng(34);
  for (int it = 0; it < 50; ++it) {
    int ambient = testutil::uniform(rng, 1, 3);
    std::vector<LinearForm> forms;
    for (int i = 0; i < 4; ++i) {
      LinearForm f;
      do {
        f = testutil::random_vector(rng, ambient);
      } while (std::all_of(f.begin(), f.end(),
                           [](const Rational& x) { return x == 0; }));
      forms.push_back(std::move(f));
    }
    std::vector<LinearForm> scaled = forms;
    for (auto& f : scaled) {
      Rational c(testutil::uniform(rng, 1, 3), testutil::uniform(rng, 1, 3));
      if (testutil::uniform(rng, 0, 1)) c = -c;
      for (auto& x : f) x *= c;
    }
    std::shuffle(scaled.begin(), scaled.end(), rng);
    auto a = collinearity_classes(forms);
    auto b = collinearity_classes(scaled);
    REQUIRE(a.size() == b.size());
    // Same class sets with the same multiplicities, order aside.
    for (const auto& ca : a) {
      bool found = false;
      for (const auto& cb : b) {
        if (ca.representative == cb.representative) {
          found = true;
          CHECK(ca.multiplicity == cb.multiplicity);
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("primitive representative") {
  CHECK(primitive_representative({Rational(-2), Rational(4)}) ==
        LinearForm{Rational(1), Rational(-2)});
  CHECK(primitive_representative({Rational(1, 2), Rational(1, 3)}) ==
        LinearForm{Rational(3), Rational(2)});
}
