#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "assignalg/polynomial.hpp"
#include "assignalg/subalgebra.hpp"

namespace assignalg {

struct Stratum {
  std::string id;
  Subalgebra isotropy;
};

// Poset of infinitesimal strata. The order relation leq(y, z) reads
// "Y precedes Z in the closure order", which forces the isotropy of Z to
// be contained in the isotropy of Y. Stored reflexively and transitively
// closed; construction rejects order pairs violating the containment rule
// and relations that would break antisymmetry.
class StratifiedSpace {
 public:
  StratifiedSpace(int torus_dim, std::vector<Stratum> strata,
                  const std::vector<std::pair<int, int>>& order_pairs);

  int torus_dim() const { return torus_dim_; }
  int stratum_count() const { return static_cast<int>(strata_.size()); }
  const std::vector<Stratum>& strata() const { return strata_; }
  const Stratum& stratum(int i) const { return strata_[i]; }
  int index_of(const std::string& id) const;

  bool leq(int y, int z) const { return leq_[static_cast<size_t>(y) * strata_.size() + z]; }
  // Pairs (y, z) with y <= z and y != z.
  std::vector<std::pair<int, int>> strict_relations() const;

  // Indices of strata with full isotropy.
  std::vector<int> fixed_strata() const;
  // Indices of strata whose isotropy has dimension >= torus_dim - 1.
  std::vector<int> skeleton_strata() const;

  // True when the original input pairs were already transitively closed.
  bool input_was_closed() const { return input_was_closed_; }

 private:
  int torus_dim_;
  std::vector<Stratum> strata_;
  std::vector<char> leq_;
  bool input_was_closed_ = true;
};

// Values are stored as normal forms modulo each stratum's isotropy ideal.
using PartialAssignment = std::map<int, Polynomial>;

struct RelationDiagnostic {
  int lower;  // Y
  int upper;  // Z
  Polynomial residue;
};

struct AssignmentCheck {
  bool ok = true;
  std::vector<RelationDiagnostic> failures;
};

AssignmentCheck is_assignment(const StratifiedSpace& s, const PartialAssignment& a);

// Exact basis of degree-d assignments, each a full assignment on s.
std::vector<PartialAssignment> graded_basis_oracle(const StratifiedSpace& s, int d);

// Same, with the extra conditions value = 0 on the listed strata.
std::vector<PartialAssignment> graded_basis_oracle_vanishing(
    const StratifiedSpace& s, int d, const std::vector<int>& vanishing);

// A stratum subset is glueable when it is closed upward: together with
// any member it contains everything above it in the order. (Such subsets
// model open invariant subspaces; their minimal strata are the deepest.)
bool is_order_closed(const StratifiedSpace& s, const std::set<int>& subset);

struct GlueError {
  int stratum;
  Polynomial residue;
};

// Unique common extension of two assignments agreeing on the overlap.
// Returns the disagreement witness instead when they conflict.
std::optional<PartialAssignment> glue(const StratifiedSpace& s,
                                      const std::set<int>& ysub,
                                      const std::set<int>& zsub,
                                      const PartialAssignment& b,
                                      const PartialAssignment& c,
                                      GlueError* error = nullptr);

// Stratum map between spaces: stratum i of the source is sent to
// image[i] in the target. Must be order preserving, and the image's
// isotropy must contain the source's.
struct StratumMap {
  const StratifiedSpace* source;
  const StratifiedSpace* target;
  std::vector<int> image;

  bool valid(std::string* reason = nullptr) const;
};

PartialAssignment pullback(const StratumMap& f, const PartialAssignment& a);

struct SkeletonCheck {
  bool equal = true;
  std::vector<int> full_image_dims;      // per degree 0..bound
  std::vector<int> skeleton_image_dims;  // per degree 0..bound
};

// Compares the image of the whole algebra and of the one-skeleton algebra
// inside the fixed-stratum algebra, degree by degree.
SkeletonCheck chang_skjelbred_check(const StratifiedSpace& s, int degree_bound);

struct CircleQuotient {
  StratifiedSpace space;            // over torus_dim - 1
  RationalMatrix projection;        // (torus_dim-1) x torus_dim quotient map
  std::vector<RationalMatrix> lifts;  // per stratum: section of the projection
                                      // restricted to the quotient isotropy

  PartialAssignment transport(const StratifiedSpace& upstairs,
                              const PartialAssignment& a) const;
};

// Quotient by a one-dimensional subalgebra q meeting no isotropy; the new
// ambient coordinates are the standard coordinates away from the RREF
// pivot of q.
CircleQuotient quotient_by_circle(const StratifiedSpace& s, const Subalgebra& q);

// Advisory check that every stratum has some fixed stratum under it in
// the closure order (fixed strata are minimal); names the offenders.
std::vector<int> strata_without_fixed_below(const StratifiedSpace& s);

// Induced poset on a subset of strata; new stratum i is the old
// stratum indices[i].
StratifiedSpace induced_subspace(const StratifiedSpace& s,
                                 const std::vector<int>& indices);

}  // namespace assignalg
