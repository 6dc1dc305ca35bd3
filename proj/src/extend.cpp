#include "assignalg/extend.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace assignalg {

Subalgebra ExtensionConstraint::subspace(const std::vector<LinearForm>& forms,
                                         int ambient_dim) const {
  std::vector<LinearForm> cut;
  cut.reserve(form_indices.size());
  for (int i : form_indices) {
    if (i < 0 || i >= static_cast<int>(forms.size())) {
      throw ParseError("constraint form index out of range");
    }
    cut.push_back(forms[i]);
  }
  return Subalgebra::from_kernel(cut, ambient_dim);
}

CompatibilityResult compatibility_check(const ExtensionProblem& prob) {
  CompatibilityResult result;
  int n = static_cast<int>(prob.constraints.size());
  std::vector<Subalgebra> spaces;
  spaces.reserve(n);
  for (const auto& c : prob.constraints) {
    spaces.push_back(c.subspace(prob.forms, prob.ambient_dim));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Subalgebra meet = spaces[i].intersect(spaces[j]);
      Polynomial residue = meet.normal_form(prob.constraints[i].target -
                                            prob.constraints[j].target);
      if (!residue.is_zero()) {
        result.ok = false;
        result.conflicts.push_back(
            CompatibilityResult::Conflict{i, j, std::move(residue)});
      }
    }
  }
  return result;
}

namespace {

// Zero out the coordinates listed in `mask` (a substitution matrix that
// is the identity with those rows cleared).
Polynomial zero_coordinates(const Polynomial& p, unsigned mask) {
  RationalMatrix sub = RationalMatrix::identity(p.nvars());
  for (unsigned bits = mask; bits != 0; bits &= bits - 1) {
    sub.at(std::countr_zero(bits), std::countr_zero(bits)) = 0;
  }
  return p.substitute_linear(sub);
}

}  // namespace

Polynomial extend_independent(const ExtensionProblem& prob) {
  int n = prob.ambient_dim;
  int m = static_cast<int>(prob.forms.size());
  if (m > n ||
      RationalMatrix::from_rows(prob.forms, n).rank() != m) {
    throw DependentFormsError("the cutting forms are linearly dependent");
  }
  CompatibilityResult compat = compatibility_check(prob);
  if (!compat.ok) {
    throw IncompatibleTargetsError(
        "targets disagree on an intersection of constraint subspaces");
  }
  if (m > 30) throw ParseError("too many forms for the subset enumeration");

  // Adapted coordinates x = C u in which ker(form j) is {x_j = 0}: the
  // first m rows of C are the forms, completed by standard coordinate
  // forms picked greedily in RREF pivot order.
  std::vector<std::vector<Rational>> c_rows(prob.forms.begin(), prob.forms.end());
  for (int j = 0; j < n && static_cast<int>(c_rows.size()) < n; ++j) {
    std::vector<Rational> e(n);
    e[j] = 1;
    c_rows.push_back(std::move(e));
    if (RationalMatrix::from_rows(c_rows, n).rank() !=
        static_cast<int>(c_rows.size())) {
      c_rows.pop_back();
    }
  }
  RationalMatrix c = RationalMatrix::from_rows(c_rows, n);
  RationalMatrix c_inv = *c.inverse();

  // Targets in adapted coordinates, stored with the coordinates of their
  // own subspace already zeroed.
  struct AdaptedConstraint {
    unsigned mask;
    Polynomial target;
  };
  std::vector<AdaptedConstraint> adapted;
  adapted.reserve(prob.constraints.size());
  for (const auto& con : prob.constraints) {
    if (con.form_indices.empty()) throw ParseError("empty constraint index set");
    unsigned mask = 0;
    for (int i : con.form_indices) {
      if (i < 0 || i >= m) throw ParseError("constraint form index out of range");
      mask |= 1u << i;
    }
    adapted.push_back(
        AdaptedConstraint{mask, zero_coordinates(
                                    con.target.substitute_linear(c_inv), mask)});
  }

  // h[J] interpolates the prescribed values on {x_j = 0 : j in J}; built
  // from the deepest subsets up, unconstrained ones by inclusion-exclusion
  // over the complementary subsets.
  unsigned full = (1u << m) - 1;
  std::map<unsigned, Polynomial> h;
  std::vector<unsigned> subsets;
  for (unsigned j = 1; j <= full; ++j) subsets.push_back(j);
  std::sort(subsets.begin(), subsets.end(), [](unsigned a, unsigned b) {
    int pa = std::popcount(a);
    int pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  for (unsigned j : subsets) {
    const AdaptedConstraint* found = nullptr;
    for (const auto& a : adapted) {
      if ((a.mask & ~j) == 0) {  // constraint subspace contains this one
        found = &a;
        break;
      }
    }
    if (found) {
      h.emplace(j, zero_coordinates(found->target, j));
      continue;
    }
    Polynomial sum(n);
    unsigned comp = full & ~j;
    for (unsigned k = comp; k != 0; k = (k - 1) & comp) {
      const Polynomial& deeper = h.at(j | k);
      sum = std::popcount(k) % 2 == 1 ? sum + deeper : sum - deeper;
    }
    h.emplace(j, std::move(sum));
  }

  Polynomial f_adapted(n);
  for (unsigned j = 1; j <= full; ++j) {
    f_adapted = std::popcount(j) % 2 == 1 ? f_adapted + h.at(j)
                                          : f_adapted - h.at(j);
  }
  Polynomial f = f_adapted.substitute_linear(c);

  for (const auto& con : prob.constraints) {
    Subalgebra v = con.subspace(prob.forms, n);
    if (!v.normal_form(f - con.target).is_zero()) {
      throw AssemblyVerificationError(
          "assembled extension fails its restriction check");
    }
  }
  return f;
}

ExtendSolveResult extend_solve(const ExtensionProblem& prob, int degree_bound) {
  int n = prob.ambient_dim;
  std::vector<Subalgebra> spaces;
  std::vector<Polynomial> targets;
  int max_degree = degree_bound;
  for (const auto& con : prob.constraints) {
    Subalgebra v = con.subspace(prob.forms, n);
    Polynomial t = v.normal_form(con.target);
    if (auto d = t.degree(); d && *d > max_degree) max_degree = *d;
    spaces.push_back(std::move(v));
    targets.push_back(std::move(t));
  }

  Polynomial witness(n);
  for (int d = 0; d <= max_degree; ++d) {
    auto basis = monomial_basis(n, d);
    int m_d = static_cast<int>(basis.size());
    int cols = d <= degree_bound ? m_d : 0;

    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (size_t ci = 0; ci < spaces.size(); ++ci) {
      // Matrix of the normal-form map on the degree-d slice.
      std::vector<std::vector<Rational>> nf_cols;
      for (int j = 0; j < cols; ++j) {
        nf_cols.push_back(spaces[ci]
                              .normal_form(Polynomial::term(n, basis[j], Rational(1)))
                              .coefficients_of_degree(d));
      }
      auto target_coeffs = targets[ci].coefficients_of_degree(d);
      for (int i = 0; i < m_d; ++i) {
        std::vector<Rational> row(cols);
        for (int j = 0; j < cols; ++j) row[j] = nf_cols[j][i];
        rows.push_back(std::move(row));
        rhs.push_back(target_coeffs[i]);
      }
    }
    RationalMatrix a = RationalMatrix::from_rows(rows, cols);
    std::vector<Rational> certificate;
    auto sol = solve_particular(a, rhs, &certificate);
    if (!sol) return Infeasible{d, std::move(certificate)};
    if (cols > 0) {
      witness = witness + Polynomial::from_degree_coefficients(n, d, *sol);
    }
  }
  return witness;
}

}  // namespace assignalg
