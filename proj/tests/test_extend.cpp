#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "assignalg/extend.hpp"
#include "test_util.hpp"

using namespace assignalg;
using testutil::Rng;

namespace {

ExtensionProblem dependent_triple() {
  // Forms u1, u2, u1+u2 with pairwise-compatible targets and no global
  // solution: a solution would satisfy f(1,-1) = f(1,0) - f(0,1).
  ExtensionProblem prob;
  prob.ambient_dim = 2;
  prob.forms = {{Rational(1), Rational(0)},
                {Rational(0), Rational(1)},
                {Rational(1), Rational(1)}};
  prob.constraints = {
      ExtensionConstraint{{0}, Polynomial::variable(2, 1)},
      ExtensionConstraint{{1}, Polynomial::variable(2, 0)},
      ExtensionConstraint{{2}, Polynomial::variable(2, 0)},
  };
  return prob;
}

bool satisfies(const ExtensionProblem& prob, const Polynomial& f) {
  for (const auto& c : prob.constraints) {
    Subalgebra v = c.subspace(prob.forms, prob.ambient_dim);
    if (!v.normal_form(f - c.target).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("constraint subspaces") {
  ExtensionProblem prob = dependent_triple();
  Subalgebra v0 = prob.constraints[0].subspace(prob.forms, 2);
  CHECK(v0 == Subalgebra::from_span({{Rational(0), Rational(1)}}, 2));
  Subalgebra v2 = prob.constraints[2].subspace(prob.forms, 2);
  CHECK(v2.contains_vector({Rational(1), Rational(-1)}));
}

TEST_CASE("compatibility check") {
  ExtensionProblem single;
  single.ambient_dim = 2;
  single.forms = {{Rational(1), Rational(0)}};
  single.constraints = {ExtensionConstraint{{0}, Polynomial::variable(2, 1)}};
  CHECK(compatibility_check(single).ok);

  // Dependent triple: pairwise compatible even though globally infeasible.
  CHECK(compatibility_check(dependent_triple()).ok);

  // Restrictions of one global polynomial are always compatible.
  Rng rng(61);
  for (int it = 0; it < 30; ++it) {
    auto gen = testutil::random_independent_problem(rng);
    CHECK(compatibility_check(gen.problem).ok);
  }

  // A genuine conflict is reported with its residue.
  ExtensionProblem conflict;
  conflict.ambient_dim = 2;
  conflict.forms = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  conflict.constraints = {
      ExtensionConstraint{{0}, Polynomial::constant(2, Rational(1))},
      ExtensionConstraint{{1}, Polynomial::constant(2, Rational(2))},
  };
  auto result = compatibility_check(conflict);
  CHECK(!result.ok);
  REQUIRE(result.conflicts.size() == 1);
  CHECK(result.conflicts[0].i == 0);
  CHECK(result.conflicts[0].j == 1);
  CHECK(!result.conflicts[0].residue.is_zero());
}

TEST_CASE("extend_independent simple cases") {
  // Single constant constraint.
  ExtensionProblem single;
  single.ambient_dim = 2;
  single.forms = {{Rational(1), Rational(0)}};
  single.constraints = {
      ExtensionConstraint{{0}, Polynomial::constant(2, Rational(5))}};
  Polynomial f = extend_independent(single);
  CHECK(satisfies(single, f));

  // Targets u2^2 on ker u1, u1^3 on ker u2, 0 at the origin.
  ExtensionProblem axes;
  axes.ambient_dim = 2;
  axes.forms = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  Polynomial u1 = Polynomial::variable(2, 0);
  Polynomial u2 = Polynomial::variable(2, 1);
  axes.constraints = {
      ExtensionConstraint{{0}, u2 * u2},
      ExtensionConstraint{{1}, u1 * u1 * u1},
      ExtensionConstraint{{0, 1}, Polynomial::zero(2)},
  };
  Polynomial g = extend_independent(axes);
  CHECK(satisfies(axes, g));
  // The answer agrees with u1^3 + u2^2 up to the ideal (u1*u2).
  Subalgebra origin = Subalgebra::zero(2);
  CHECK(origin.normal_form(g).is_zero());
}

TEST_CASE("extend_independent error paths") {
  ExtensionProblem dep = dependent_triple();
  CHECK_THROWS_AS(extend_independent(dep), DependentFormsError);

  ExtensionProblem incompatible;
  incompatible.ambient_dim = 2;
  incompatible.forms = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  incompatible.constraints = {
      ExtensionConstraint{{0}, Polynomial::constant(2, Rational(1))},
      ExtensionConstraint{{1}, Polynomial::constant(2, Rational(2))},
  };
  CHECK_THROWS_AS(extend_independent(incompatible), IncompatibleTargetsError);
}

TEST_CASE("completeness on random independent problems") {
  Rng rng(62);
  for (int it = 0; it < 200; ++it) {
    auto gen = testutil::random_independent_problem(rng);
    Polynomial f = extend_independent(gen.problem);
    CHECK(satisfies(gen.problem, f));
    // Agreement: the degreewise solver finds a witness at the same bound.
    int bound = gen.hidden.degree().value_or(0);
    auto solved = extend_solve(gen.problem, bound);
    REQUIRE(std::holds_alternative<Polynomial>(solved));
    CHECK(satisfies(gen.problem, std::get<Polynomial>(solved)));
  }
}

TEST_CASE("extend_solve on the dependent triple") {
  auto result = extend_solve(dependent_triple(), 1);
  REQUIRE(std::holds_alternative<Infeasible>(result));
  CHECK(std::get<Infeasible>(result).obstruction_degree == 1);
  CHECK(!std::get<Infeasible>(result).certificate_row.empty());

  // Monotonicity: homogeneous degree-1 targets stay infeasible at any
  // larger bound, with the same obstruction degree.
  for (int bound = 2; bound <= 4; ++bound) {
    auto again = extend_solve(dependent_triple(), bound);
    REQUIRE(std::holds_alternative<Infeasible>(again));
    CHECK(std::get<Infeasible>(again).obstruction_degree == 1);
  }
}

TEST_CASE("extend_solve trivial cases") {
  ExtensionProblem empty;
  empty.ambient_dim = 2;
  auto result = extend_solve(empty, 3);
  REQUIRE(std::holds_alternative<Polynomial>(result));
  CHECK(std::get<Polynomial>(result).is_zero());
}
