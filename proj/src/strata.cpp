#include "assignalg/strata.hpp"

#include <algorithm>

#include "assignalg/parallel.hpp"

namespace assignalg {

StratifiedSpace::StratifiedSpace(int torus_dim, std::vector<Stratum> strata,
                                 const std::vector<std::pair<int, int>>& order_pairs)
    : torus_dim_(torus_dim), strata_(std::move(strata)) {
  if (torus_dim_ < 0) throw ParseError("torus dimension must be non-negative");
  size_t n = strata_.size();
  std::set<std::string> ids;
  for (const auto& st : strata_) {
    if (!ids.insert(st.id).second) {
      throw ParseError("duplicate stratum id '" + st.id + "'");
    }
    if (st.isotropy.ambient_dim() != torus_dim_) {
      throw ParseError("stratum '" + st.id + "' isotropy has wrong ambient dimension");
    }
  }

  leq_.assign(n * n, 0);
  for (size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
  for (const auto& [y, z] : order_pairs) {
    if (y < 0 || z < 0 || static_cast<size_t>(y) >= n || static_cast<size_t>(z) >= n) {
      throw ParseError("order pair index out of range");
    }
    leq_[static_cast<size_t>(y) * n + z] = 1;
  }
  std::vector<char> given = leq_;
  // Warshall transitive closure.
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < n; ++i) {
      if (!leq_[i * n + k]) continue;
      for (size_t j = 0; j < n; ++j) {
        if (leq_[k * n + j]) leq_[i * n + j] = 1;
      }
    }
  }
  input_was_closed_ = given == leq_;

  for (size_t y = 0; y < n; ++y) {
    for (size_t z = 0; z < n; ++z) {
      if (y != z && leq_[y * n + z] && leq_[z * n + y]) {
        throw ParseError("closure order is not antisymmetric between '" +
                         strata_[y].id + "' and '" + strata_[z].id + "'");
      }
      if (leq_[y * n + z] &&
          !strata_[y].isotropy.contains(strata_[z].isotropy)) {
        throw ParseError("order relation '" + strata_[y].id + "' before '" +
                         strata_[z].id +
                         "' violates isotropy containment");
      }
    }
  }
}

int StratifiedSpace::index_of(const std::string& id) const {
  for (size_t i = 0; i < strata_.size(); ++i) {
    if (strata_[i].id == id) return static_cast<int>(i);
  }
  throw ParseError("unknown stratum id '" + id + "'");
}

std::vector<std::pair<int, int>> StratifiedSpace::strict_relations() const {
  std::vector<std::pair<int, int>> out;
  int n = stratum_count();
  for (int y = 0; y < n; ++y) {
    for (int z = 0; z < n; ++z) {
      if (y != z && leq(y, z)) out.emplace_back(y, z);
    }
  }
  return out;
}

std::vector<int> StratifiedSpace::fixed_strata() const {
  std::vector<int> out;
  for (int i = 0; i < stratum_count(); ++i) {
    if (strata_[i].isotropy.dim() == torus_dim_) out.push_back(i);
  }
  return out;
}

std::vector<int> StratifiedSpace::skeleton_strata() const {
  std::vector<int> out;
  for (int i = 0; i < stratum_count(); ++i) {
    if (strata_[i].isotropy.dim() >= torus_dim_ - 1) out.push_back(i);
  }
  return out;
}

AssignmentCheck is_assignment(const StratifiedSpace& s, const PartialAssignment& a) {
  for (int i = 0; i < s.stratum_count(); ++i) {
    if (!a.count(i)) {
      throw ParseError("assignment is missing stratum '" + s.stratum(i).id + "'");
    }
  }
  AssignmentCheck check;
  for (const auto& [y, z] : s.strict_relations()) {
    Polynomial residue =
        s.stratum(z).isotropy.normal_form(a.at(y) - a.at(z));
    if (!residue.is_zero()) {
      check.ok = false;
      check.failures.push_back(RelationDiagnostic{y, z, std::move(residue)});
    }
  }
  return check;
}

namespace {

RationalMatrix stratum_normal_form_matrix(const Subalgebra& h, int d) {
  int k = h.ambient_dim();
  auto basis = monomial_basis(k, d);
  int m = static_cast<int>(basis.size());
  RationalMatrix out(m, m);
  for (int j = 0; j < m; ++j) {
    Polynomial nf = h.normal_form(Polynomial::term(k, basis[j], Rational(1)));
    auto col = nf.coefficients_of_degree(d);
    for (int i = 0; i < m; ++i) out.at(i, j) = col[i];
  }
  return out;
}

std::vector<PartialAssignment> solve_oracle(const StratifiedSpace& s, int d,
                                            const std::vector<int>& vanishing) {
  int k = s.torus_dim();
  int n = s.stratum_count();
  int m = static_cast<int>(monomial_basis(k, d).size());

  // One degree-d ambient polynomial per stratum, pinned to its own normal
  // form; closure relations compare normal forms on the upper stratum.
  std::vector<RationalMatrix> nf;
  nf.reserve(n);
  for (int i = 0; i < n; ++i) {
    nf.push_back(stratum_normal_form_matrix(s.stratum(i).isotropy, d));
  }

  std::vector<std::vector<Rational>> rows;
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < m; ++i) {
      std::vector<Rational> row(static_cast<size_t>(n) * m);
      bool nonzero = false;
      for (int j = 0; j < m; ++j) {
        Rational v = nf[c].at(i, j);
        if (i == j) v -= 1;
        if (v != 0) nonzero = true;
        row[static_cast<size_t>(c) * m + j] = v;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  for (const auto& [y, z] : s.strict_relations()) {
    for (int i = 0; i < m; ++i) {
      std::vector<Rational> row(static_cast<size_t>(n) * m);
      for (int j = 0; j < m; ++j) {
        const Rational& v = nf[z].at(i, j);
        if (v == 0) continue;
        row[static_cast<size_t>(y) * m + j] += v;
        row[static_cast<size_t>(z) * m + j] -= v;
      }
      rows.push_back(std::move(row));
    }
  }
  for (int c : vanishing) {
    for (int j = 0; j < m; ++j) {
      std::vector<Rational> row(static_cast<size_t>(n) * m);
      row[static_cast<size_t>(c) * m + j] = 1;
      rows.push_back(std::move(row));
    }
  }

  auto kernel = RationalMatrix::from_rows(rows, n * m).nullspace_basis();
  std::vector<PartialAssignment> out;
  out.reserve(kernel.size());
  for (const auto& v : kernel) {
    PartialAssignment a;
    for (int c = 0; c < n; ++c) {
      std::vector<Rational> coeffs(v.begin() + static_cast<size_t>(c) * m,
                                   v.begin() + static_cast<size_t>(c + 1) * m);
      a[c] = Polynomial::from_degree_coefficients(k, d, coeffs);
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

std::vector<PartialAssignment> graded_basis_oracle(const StratifiedSpace& s, int d) {
  return solve_oracle(s, d, {});
}

std::vector<PartialAssignment> graded_basis_oracle_vanishing(
    const StratifiedSpace& s, int d, const std::vector<int>& vanishing) {
  return solve_oracle(s, d, vanishing);
}

bool is_order_closed(const StratifiedSpace& s, const std::set<int>& subset) {
  for (int y : subset) {
    for (int z = 0; z < s.stratum_count(); ++z) {
      if (s.leq(y, z) && !subset.count(z)) return false;
    }
  }
  return true;
}

std::optional<PartialAssignment> glue(const StratifiedSpace& s,
                                      const std::set<int>& ysub,
                                      const std::set<int>& zsub,
                                      const PartialAssignment& b,
                                      const PartialAssignment& c,
                                      GlueError* error) {
  if (!is_order_closed(s, ysub) || !is_order_closed(s, zsub)) {
    throw ParseError("glue subsets must be closed upward in the closure order");
  }
  for (int i : ysub) {
    if (!b.count(i)) {
      throw ParseError("first assignment misses stratum '" + s.stratum(i).id + "'");
    }
  }
  for (int i : zsub) {
    if (!c.count(i)) {
      throw ParseError("second assignment misses stratum '" + s.stratum(i).id + "'");
    }
  }
  PartialAssignment out;
  for (int i : ysub) out[i] = s.stratum(i).isotropy.normal_form(b.at(i));
  for (int i : zsub) {
    Polynomial v = s.stratum(i).isotropy.normal_form(c.at(i));
    auto it = out.find(i);
    if (it == out.end()) {
      out[i] = std::move(v);
    } else if (!(it->second == v)) {
      if (error) *error = GlueError{i, it->second - v};
      return std::nullopt;
    }
  }
  return out;
}

bool StratumMap::valid(std::string* reason) const {
  if (static_cast<int>(image.size()) != source->stratum_count()) {
    if (reason) *reason = "image list length does not match source strata";
    return false;
  }
  for (int i : image) {
    if (i < 0 || i >= target->stratum_count()) {
      if (reason) *reason = "image index out of range";
      return false;
    }
  }
  for (int y = 0; y < source->stratum_count(); ++y) {
    for (int z = 0; z < source->stratum_count(); ++z) {
      if (source->leq(y, z) && !target->leq(image[y], image[z])) {
        if (reason) *reason = "map is not order preserving";
        return false;
      }
    }
    if (!target->stratum(image[y]).isotropy.contains(
            source->stratum(y).isotropy)) {
      if (reason) {
        *reason = "image isotropy does not contain source isotropy at '" +
                  source->stratum(y).id + "'";
      }
      return false;
    }
  }
  return true;
}

PartialAssignment pullback(const StratumMap& f, const PartialAssignment& a) {
  std::string reason;
  if (!f.valid(&reason)) throw ParseError("invalid stratum map: " + reason);
  PartialAssignment out;
  for (int y = 0; y < f.source->stratum_count(); ++y) {
    out[y] = f.source->stratum(y).isotropy.normal_form(a.at(f.image[y]));
  }
  return out;
}

namespace {

// Rank of the restriction-to-fixed-strata image of the given degree-d
// assignment basis.
int fixed_image_rank(const StratifiedSpace& s, const std::vector<int>& fixed,
                     const std::vector<PartialAssignment>& basis, int d) {
  int k = s.torus_dim();
  int m = static_cast<int>(monomial_basis(k, d).size());
  RowSpace image(static_cast<int>(fixed.size()) * m);
  for (const auto& a : basis) {
    std::vector<Rational> v;
    v.reserve(fixed.size() * m);
    for (int f : fixed) {
      auto coeffs = a.at(f).coefficients_of_degree(d);
      v.insert(v.end(), coeffs.begin(), coeffs.end());
    }
    image.insert(std::move(v));
  }
  return image.rank();
}

}  // namespace

StratifiedSpace induced_subspace(const StratifiedSpace& s,
                                 const std::vector<int>& indices) {
  std::vector<Stratum> strata;
  strata.reserve(indices.size());
  for (int i : indices) strata.push_back(s.stratum(i));
  std::vector<std::pair<int, int>> pairs;
  for (size_t a = 0; a < indices.size(); ++a) {
    for (size_t b = 0; b < indices.size(); ++b) {
      if (a != b && s.leq(indices[a], indices[b])) {
        pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  return StratifiedSpace(s.torus_dim(), std::move(strata), pairs);
}

SkeletonCheck chang_skjelbred_check(const StratifiedSpace& s, int degree_bound) {
  std::vector<int> fixed = s.fixed_strata();
  std::vector<int> skeleton = s.skeleton_strata();
  StratifiedSpace sk = induced_subspace(s, skeleton);
  // Positions of the fixed strata inside the skeleton model.
  std::vector<int> fixed_in_sk;
  for (size_t i = 0; i < skeleton.size(); ++i) {
    if (s.stratum(skeleton[i]).isotropy.dim() == s.torus_dim()) {
      fixed_in_sk.push_back(static_cast<int>(i));
    }
  }

  SkeletonCheck check;
  check.full_image_dims.resize(degree_bound + 1);
  check.skeleton_image_dims.resize(degree_bound + 1);
  parallel_for(degree_bound + 1, [&](int d) {
    check.full_image_dims[d] =
        fixed_image_rank(s, fixed, graded_basis_oracle(s, d), d);
    check.skeleton_image_dims[d] =
        fixed_image_rank(sk, fixed_in_sk, graded_basis_oracle(sk, d), d);
  });
  check.equal = check.full_image_dims == check.skeleton_image_dims;
  return check;
}

CircleQuotient quotient_by_circle(const StratifiedSpace& s, const Subalgebra& q) {
  int k = s.torus_dim();
  if (q.ambient_dim() != k || q.dim() != 1) {
    throw ParseError("circle direction must be a one-dimensional subalgebra");
  }
  for (const auto& st : s.strata()) {
    if (st.isotropy.contains(q)) {
      throw ParseError("circle direction lies in the isotropy of stratum '" +
                       st.id + "'");
    }
  }

  // Coordinates on the quotient: the standard coordinates away from the
  // pivot of q's basis row.
  std::vector<Rational> v = q.basis().row(0);
  int pivot = 0;
  while (v[pivot] == 0) ++pivot;
  RationalMatrix projection(k - 1, k);
  {
    int r = 0;
    for (int j = 0; j < k; ++j) {
      if (j == pivot) continue;
      projection.at(r, j) = 1;
      projection.at(r, pivot) = -v[j];
      ++r;
    }
  }

  std::vector<Stratum> new_strata;
  std::vector<RationalMatrix> lifts;
  new_strata.reserve(s.stratum_count());
  lifts.reserve(s.stratum_count());
  for (const auto& st : s.strata()) {
    const RationalMatrix& basis = st.isotropy.basis();
    std::vector<std::vector<Rational>> projected;
    projected.reserve(basis.rows());
    for (int i = 0; i < basis.rows(); ++i) {
      projected.push_back(projection.apply(basis.row(i)));
    }
    new_strata.push_back(
        Stratum{st.id, Subalgebra::from_span(projected, k - 1)});

    // Section of the projection over the projected isotropy: a linear map
    // back upstairs sending each projected basis vector to its original.
    RationalMatrix constraints =
        RationalMatrix::from_rows(projected, k - 1);
    RationalMatrix lift(k, k - 1);
    for (int coord = 0; coord < k; ++coord) {
      std::vector<Rational> rhs;
      rhs.reserve(projected.size());
      for (int i = 0; i < basis.rows(); ++i) rhs.push_back(basis.at(i, coord));
      auto sol = solve_particular(constraints, rhs);
      // Projected basis vectors are independent, so this always solves.
      for (int j = 0; j < k - 1; ++j) lift.at(coord, j) = (*sol)[j];
    }
    lifts.push_back(std::move(lift));
  }

  std::vector<std::pair<int, int>> pairs = s.strict_relations();
  CircleQuotient out{
      StratifiedSpace(k - 1, std::move(new_strata), pairs),
      std::move(projection), std::move(lifts)};
  return out;
}

PartialAssignment CircleQuotient::transport(const StratifiedSpace& upstairs,
                                            const PartialAssignment& a) const {
  PartialAssignment out;
  for (int i = 0; i < upstairs.stratum_count(); ++i) {
    out[i] = space.stratum(i).isotropy.normal_form(
        a.at(i).substitute_linear(lifts[i]));
  }
  return out;
}

std::vector<int> strata_without_fixed_below(const StratifiedSpace& s) {
  std::vector<int> fixed = s.fixed_strata();
  std::vector<int> out;
  for (int y = 0; y < s.stratum_count(); ++y) {
    bool ok = false;
    for (int f : fixed) {
      if (s.leq(f, y)) {
        ok = true;
        break;
      }
    }
    if (!ok) out.push_back(y);
  }
  return out;
}

}  // namespace assignalg
