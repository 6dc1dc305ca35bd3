#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "assignalg/polynomial.hpp"
#include "assignalg/subalgebra.hpp"

namespace assignalg {

// Prescribe the restriction of an unknown global polynomial on the
// subspace cut out by the named forms.
struct ExtensionConstraint {
  std::vector<int> form_indices;  // nonempty subset of {0..m-1}
  Polynomial target;              // ambient representative; stored as the
                                  // normal form on the subspace

  Subalgebra subspace(const std::vector<LinearForm>& forms, int ambient_dim) const;
};

struct ExtensionProblem {
  int ambient_dim;
  std::vector<LinearForm> forms;
  std::vector<ExtensionConstraint> constraints;
};

struct CompatibilityResult {
  bool ok = true;
  // Pairs of constraint indices whose targets differ on the intersection,
  // with the nonzero residue.
  struct Conflict {
    int i;
    int j;
    Polynomial residue;
  };
  std::vector<Conflict> conflicts;
};

CompatibilityResult compatibility_check(const ExtensionProblem& prob);

class DependentFormsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IncompatibleTargetsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Never expected on valid inputs; raised when the assembled polynomial
// fails its own restriction check.
class AssemblyVerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Recursive inclusion-exclusion construction; requires the forms to be
// linearly independent and the targets pairwise compatible. The result
// always satisfies every constraint (this is re-verified before return).
Polynomial extend_independent(const ExtensionProblem& prob);

struct Infeasible {
  int obstruction_degree;
  // RREF row of the augmented degreewise system witnessing 0 = 1.
  std::vector<Rational> certificate_row;
};

using ExtendSolveResult = std::variant<Polynomial, Infeasible>;

// Degreewise linear solve for a witness of total degree <= degree_bound;
// handles dependent forms, and certifies infeasibility at the bound.
ExtendSolveResult extend_solve(const ExtensionProblem& prob, int degree_bound);

}  // namespace assignalg
