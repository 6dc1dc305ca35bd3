#pragma once

#include <random>
#include <utility>
#include <vector>

#include "assignalg/extend.hpp"
#include "assignalg/polynomial.hpp"
#include "assignalg/strata.hpp"
#include "assignalg/subalgebra.hpp"

namespace assignalg::testutil {

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng) {
  return Rational(uniform(rng, -5, 5), uniform(rng, 1, 4));
}

inline std::vector<Rational> random_vector(Rng& rng, int n) {
  std::vector<Rational> v(n);
  for (auto& x : v) x = Rational(uniform(rng, -3, 3));
  return v;
}

inline Polynomial random_polynomial(Rng& rng, int nvars, int max_degree,
                                    int terms = 4) {
  Polynomial p = Polynomial::zero(nvars);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    m.exponents.assign(nvars, 0);
    int budget = uniform(rng, 0, max_degree);
    for (int b = 0; b < budget; ++b) m.exponents[uniform(rng, 0, nvars - 1)]++;
    p = p + Polynomial::term(nvars, m, random_rational(rng));
  }
  return p;
}

inline Subalgebra random_subalgebra(Rng& rng, int ambient, int dim) {
  // Retry until the requested dimension is reached.
  for (;;) {
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < dim; ++i) rows.push_back(random_vector(rng, ambient));
    Subalgebra h = Subalgebra::from_span(rows, ambient);
    if (h.dim() == dim) return h;
  }
}

// Random valid stratified space: the order relation only relates strata
// whose isotropies are comparable, oriented so that larger isotropies come
// first (ties broken by index to keep the relation acyclic).
inline StratifiedSpace random_stratified_space(Rng& rng, int max_torus_dim = 3,
                                               int max_strata = 6) {
  int k = uniform(rng, 1, max_torus_dim);
  int n = uniform(rng, 1, max_strata);
  std::vector<Stratum> strata;
  for (int i = 0; i < n; ++i) {
    strata.push_back(Stratum{"s" + std::to_string(i),
                             random_subalgebra(rng, k, uniform(rng, 0, k))});
  }
  std::vector<std::pair<int, int>> pairs;
  for (int y = 0; y < n; ++y) {
    for (int z = 0; z < n; ++z) {
      if (y == z) continue;
      const Subalgebra& iy = strata[y].isotropy;
      const Subalgebra& iz = strata[z].isotropy;
      bool strict = iy.contains(iz) && iy.dim() > iz.dim();
      bool tie = iy == iz && y < z;
      if ((strict || tie) && uniform(rng, 0, 2) > 0) pairs.emplace_back(y, z);
    }
  }
  return StratifiedSpace(k, std::move(strata), pairs);
}

// Random model in which every stratum has a fixed stratum below it in the
// closure order.
inline StratifiedSpace random_fixed_rooted_space(Rng& rng, int max_torus_dim = 2,
                                                 int max_extra = 4) {
  int k = uniform(rng, 1, max_torus_dim);
  int fixed = uniform(rng, 1, 3);
  int extra = uniform(rng, 0, max_extra);
  std::vector<Stratum> strata;
  for (int i = 0; i < fixed; ++i) {
    strata.push_back(Stratum{"f" + std::to_string(i), Subalgebra::full(k)});
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < extra; ++i) {
    strata.push_back(Stratum{"e" + std::to_string(i),
                             random_subalgebra(rng, k, uniform(rng, 0, k - 1))});
    int idx = fixed + i;
    // Guarantee at least one fixed stratum below, then sprinkle extras.
    pairs.emplace_back(uniform(rng, 0, fixed - 1), idx);
    for (int f = 0; f < fixed; ++f) {
      if (uniform(rng, 0, 1)) pairs.emplace_back(f, idx);
    }
    for (int j = 0; j < i; ++j) {
      const Subalgebra& ij = strata[fixed + j].isotropy;
      const Subalgebra& ii = strata[idx].isotropy;
      if (ij.contains(ii) && ij.dim() > ii.dim() && uniform(rng, 0, 1)) {
        pairs.emplace_back(fixed + j, idx);
      }
    }
  }
  return StratifiedSpace(k, std::move(strata), pairs);
}

// Random full assignment built as a combination of graded basis elements
// in degrees 0..max_degree.
inline PartialAssignment random_assignment(Rng& rng, const StratifiedSpace& s,
                                           int max_degree = 2) {
  PartialAssignment a;
  for (int i = 0; i < s.stratum_count(); ++i) {
    a[i] = Polynomial::zero(s.torus_dim());
  }
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& b : graded_basis_oracle(s, d)) {
      Rational c(uniform(rng, -2, 2));
      if (c == 0) continue;
      for (auto& [i, v] : a) v = v + b.at(i).scaled(c);
    }
  }
  return a;
}

struct IndependentProblem {
  ExtensionProblem problem;
  Polynomial hidden;  // all targets are restrictions of this polynomial
};

// Random extension problem with independent forms and targets cut from a
// hidden global polynomial, hence always feasible.
inline IndependentProblem random_independent_problem(Rng& rng) {
  int n = uniform(rng, 1, 4);
  int m = uniform(rng, 1, n);
  ExtensionProblem prob;
  prob.ambient_dim = n;
  for (;;) {
    prob.forms.clear();
    for (int i = 0; i < m; ++i) prob.forms.push_back(random_vector(rng, n));
    if (RationalMatrix::from_rows(prob.forms, n).rank() == m) break;
  }
  Polynomial hidden = random_polynomial(rng, n, 4);
  int count = uniform(rng, 1, std::min(4, (1 << m) - 1));
  std::vector<int> masks;
  while (static_cast<int>(masks.size()) < count) {
    int mask = uniform(rng, 1, (1 << m) - 1);
    bool fresh = true;
    for (int seen : masks) fresh = fresh && seen != mask;
    if (!fresh) continue;
    masks.push_back(mask);
    ExtensionConstraint c;
    for (int j = 0; j < m; ++j) {
      if (mask & (1 << j)) c.form_indices.push_back(j);
    }
    c.target = hidden;
    prob.constraints.push_back(std::move(c));
  }
  return IndependentProblem{std::move(prob), std::move(hidden)};
}

}  // namespace assignalg::testutil
