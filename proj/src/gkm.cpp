#include "assignalg/gkm.hpp"

#include <algorithm>
#include <set>

#include "assignalg/parallel.hpp"

namespace assignalg {

GkmPresentation::GkmPresentation(int torus_dim,
                                 std::vector<GkmComponent> components,
                                 std::vector<GkmPiece> pieces)
    : torus_dim_(torus_dim),
      components_(std::move(components)),
      pieces_(std::move(pieces)) {
  if (torus_dim_ < 1) throw ParseError("torus dimension must be positive");
  if (components_.empty()) throw ParseError("presentation needs at least one component");
  std::set<std::string> names;
  for (const auto& c : components_) {
    if (!names.insert(c.name).second) {
      throw ParseError("duplicate component name '" + c.name + "'");
    }
  }
  int n = static_cast<int>(components_.size());
  for (const auto& piece : pieces_) {
    if (piece.g.ambient_dim() != torus_dim_) {
      throw ParseError("piece isotropy lives in the wrong ambient space");
    }
    // Isotropies of positive codimension only; dim < torus_dim - 1 is
    // accepted (it just imposes a stronger congruence).
    if (piece.g.dim() >= torus_dim_) {
      throw ParseError("piece isotropy must be a proper subalgebra");
    }
    if (piece.members.size() < 2) {
      throw ParseError("piece needs at least two member components");
    }
    std::set<int> seen;
    for (int m : piece.members) {
      if (m < 0 || m >= n) throw ParseError("piece member index out of range");
      if (!seen.insert(m).second) throw ParseError("duplicate piece member");
    }
  }
}

MembershipResult is_member(const GkmPresentation& p, const AssignmentTuple& a) {
  if (static_cast<int>(a.polys.size()) != p.component_count()) {
    throw DimensionMismatchError("tuple length does not match component count");
  }
  MembershipResult result;
  for (size_t pi = 0; pi < p.pieces().size(); ++pi) {
    const auto& piece = p.pieces()[pi];
    int r0 = piece.members[0];
    for (size_t k = 1; k < piece.members.size(); ++k) {
      int s = piece.members[k];
      Polynomial residue = piece.g.normal_form(a.polys[r0] - a.polys[s]);
      if (!residue.is_zero()) {
        result.ok = false;
        result.failures.push_back(
            PieceDiagnostic{static_cast<int>(pi), r0, s, std::move(residue)});
      }
    }
  }
  return result;
}

namespace {

// Matrix of the degree-preserving linear map "take the normal form modulo
// the isotropy's vanishing ideal" on the degree-d coefficient space.
RationalMatrix normal_form_matrix(const Subalgebra& g, int d) {
  int k = g.ambient_dim();
  auto basis = monomial_basis(k, d);
  int m = static_cast<int>(basis.size());
  RationalMatrix out(m, m);
  for (int j = 0; j < m; ++j) {
    Polynomial nf = g.normal_form(Polynomial::term(k, basis[j], Rational(1)));
    auto col = nf.coefficients_of_degree(d);
    for (int i = 0; i < m; ++i) out.at(i, j) = col[i];
  }
  return out;
}

std::vector<AssignmentTuple> solve_graded(const GkmPresentation& p, int d,
                                          const std::vector<int>& vanishing) {
  int k = p.torus_dim();
  int n = p.component_count();
  int m = static_cast<int>(monomial_basis(k, d).size());

  std::vector<std::vector<Rational>> rows;
  for (const auto& piece : p.pieces()) {
    RationalMatrix nf = normal_form_matrix(piece.g, d);
    int r0 = piece.members[0];
    for (size_t mk = 1; mk < piece.members.size(); ++mk) {
      int s = piece.members[mk];
      for (int i = 0; i < m; ++i) {
        std::vector<Rational> row(static_cast<size_t>(n) * m);
        for (int j = 0; j < m; ++j) {
          const Rational& v = nf.at(i, j);
          if (v == 0) continue;
          row[static_cast<size_t>(r0) * m + j] += v;
          row[static_cast<size_t>(s) * m + j] -= v;
        }
        rows.push_back(std::move(row));
      }
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
  std::vector<AssignmentTuple> out;
  out.reserve(kernel.size());
  for (const auto& v : kernel) {
    AssignmentTuple tuple;
    tuple.polys.reserve(n);
    for (int c = 0; c < n; ++c) {
      std::vector<Rational> coeffs(v.begin() + static_cast<size_t>(c) * m,
                                   v.begin() + static_cast<size_t>(c + 1) * m);
      tuple.polys.push_back(Polynomial::from_degree_coefficients(k, d, coeffs));
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

}  // namespace

std::vector<Rational> tuple_degree_coefficients(const AssignmentTuple& tuple, int d) {
  std::vector<Rational> out;
  for (const auto& poly : tuple.polys) {
    auto c = poly.coefficients_of_degree(d);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

std::vector<AssignmentTuple> graded_basis(const GkmPresentation& p, int d) {
  return solve_graded(p, d, {});
}

std::vector<AssignmentTuple> graded_basis_vanishing(
    const GkmPresentation& p, int d, const std::vector<int>& vanishing) {
  return solve_graded(p, d, vanishing);
}

std::vector<Generator> minimal_generators(const GkmPresentation& p,
                                          int degree_bound) {
  return minimal_generators_vanishing(p, degree_bound, {});
}

std::vector<Generator> minimal_generators_vanishing(
    const GkmPresentation& p, int degree_bound, const std::vector<int>& vanishing) {
  int k = p.torus_dim();
  int n = p.component_count();

  std::vector<std::vector<AssignmentTuple>> bases(degree_bound + 1);
  parallel_for(degree_bound + 1,
               [&](int d) { bases[d] = solve_graded(p, d, vanishing); });

  std::vector<Generator> generators;
  for (int d = 0; d <= degree_bound; ++d) {
    int m = static_cast<int>(monomial_basis(k, d).size());
    RowSpace span(n * m);
    if (d > 0) {
      // The module generated through degree d-1 fills all of the
      // degree-(d-1) slice, so multiplying its basis by the coordinate
      // forms spans the non-generator part of degree d.
      for (const auto& b : bases[d - 1]) {
        for (int var = 0; var < k; ++var) {
          AssignmentTuple shifted;
          shifted.polys.reserve(n);
          Polynomial u = Polynomial::variable(k, var);
          for (const auto& poly : b.polys) shifted.polys.push_back(poly * u);
          span.insert(tuple_degree_coefficients(shifted, d));
        }
      }
    }
    for (const auto& b : bases[d]) {
      if (span.insert(tuple_degree_coefficients(b, d))) {
        generators.push_back(Generator{b, d});
      }
    }
  }
  return generators;
}

GradedModuleReport module_report(const GkmPresentation& p, int degree_bound) {
  GradedModuleReport report;
  report.degree_bound = degree_bound;
  report.rank = p.component_count();
  report.generators = minimal_generators(p, degree_bound);
  report.dims.resize(degree_bound + 1);
  parallel_for(degree_bound + 1, [&](int d) {
    report.dims[d] = static_cast<int>(graded_basis(p, d).size());
  });

  int count = static_cast<int>(report.generators.size());
  int top_generator_degree =
      report.generators.empty() ? 0 : report.generators.back().degree;
  if (count > report.rank) {
    report.freeness = Freeness::kNotFree;
    report.caveat =
        "more minimal generators than the rank: no basis can exist";
  } else if (count == report.rank && degree_bound >= 2 &&
             top_generator_degree <= degree_bound - 2) {
    report.freeness = Freeness::kFree;
  } else {
    report.freeness = Freeness::kUndeterminedAtBound;
    report.caveat = "generator count has not stabilized below degree bound " +
                    std::to_string(degree_bound);
  }
  return report;
}

}  // namespace assignalg
