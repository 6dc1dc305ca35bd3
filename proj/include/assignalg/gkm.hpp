#pragma once

#include <optional>
#include <string>
#include <vector>

#include "assignalg/polynomial.hpp"
#include "assignalg/subalgebra.hpp"

namespace assignalg {

// Fixed component of the torus action, with optional data consumed by the
// moment-map pipeline.
struct GkmComponent {
  std::string name;
  std::optional<Rational> moment;        // scalar moment value
  std::vector<LinearForm> weights;       // isotropy weights at the component
};

// Codimension-one isotropy record: all listed components sit in one
// connected piece of the fixed set of the subtorus with Lie algebra g.
struct GkmPiece {
  Subalgebra g;
  std::vector<int> members;  // component indices, size >= 2
};

// Combinatorial presentation of an assignment algebra: tuples
// (f_1, ..., f_n) of polynomials on the torus whose pairwise differences
// vanish on the appropriate codimension-one isotropy algebras.
class GkmPresentation {
 public:
  GkmPresentation(int torus_dim, std::vector<GkmComponent> components,
                  std::vector<GkmPiece> pieces);

  int torus_dim() const { return torus_dim_; }
  int component_count() const { return static_cast<int>(components_.size()); }
  const std::vector<GkmComponent>& components() const { return components_; }
  const std::vector<GkmPiece>& pieces() const { return pieces_; }

 private:
  int torus_dim_;
  std::vector<GkmComponent> components_;
  std::vector<GkmPiece> pieces_;
};

// One tuple (f_1, ..., f_n).
struct AssignmentTuple {
  std::vector<Polynomial> polys;

  bool operator==(const AssignmentTuple& other) const = default;
};

struct PieceDiagnostic {
  int piece_index;
  int member_r;
  int member_s;
  Polynomial residue;  // nonzero normal form of f_r - f_s on the piece
};

struct MembershipResult {
  bool ok = true;
  std::vector<PieceDiagnostic> failures;
};

MembershipResult is_member(const GkmPresentation& p, const AssignmentTuple& a);

// Exact basis of the homogeneous degree-d slice; deterministic order.
std::vector<AssignmentTuple> graded_basis(const GkmPresentation& p, int d);

// Degree-d slice subject to extra conditions f_r = 0 for r in `vanishing`.
std::vector<AssignmentTuple> graded_basis_vanishing(
    const GkmPresentation& p, int d, const std::vector<int>& vanishing);

struct Generator {
  AssignmentTuple tuple;
  int degree;
};

std::vector<Generator> minimal_generators(const GkmPresentation& p, int degree_bound);

// Minimal generators of the submodule of tuples vanishing at the listed
// components.
std::vector<Generator> minimal_generators_vanishing(
    const GkmPresentation& p, int degree_bound, const std::vector<int>& vanishing);

// Concatenated degree-d coefficient vectors of the tuple's polynomials.
std::vector<Rational> tuple_degree_coefficients(const AssignmentTuple& tuple, int d);

enum class Freeness { kFree, kNotFree, kUndeterminedAtBound };

struct GradedModuleReport {
  int degree_bound;
  std::vector<int> dims;  // dims[d] = dim of degree-d slice, d = 0..bound
  std::vector<Generator> generators;
  int rank;
  Freeness freeness;
  std::string caveat;
};

GradedModuleReport module_report(const GkmPresentation& p, int degree_bound);

}  // namespace assignalg
