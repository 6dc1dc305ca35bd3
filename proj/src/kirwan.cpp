#include "assignalg/kirwan.hpp"

#include <algorithm>

#include "assignalg/parallel.hpp"

namespace assignalg {

SurjectivityReport check_surjectivity_hypothesis(const GkmPresentation& p) {
  SurjectivityReport report;
  for (int i = 0; i < p.component_count(); ++i) {
    const auto& comp = p.components()[i];
    if (comp.weights.empty()) {
      throw ParseError("component '" + comp.name + "' carries no weights");
    }
    auto classes = collinearity_classes(comp.weights);
    std::vector<std::vector<Rational>> reps;
    reps.reserve(classes.size());
    for (const auto& c : classes) reps.push_back(c.representative);
    int rank = RationalMatrix::from_rows(reps, p.torus_dim()).rank();
    bool independent = rank == static_cast<int>(classes.size());
    report.verdicts.push_back(ComponentSurjectivityVerdict{
        i, static_cast<int>(classes.size()), independent});
    if (!independent) report.all_pass = false;
  }
  return report;
}

namespace {

std::pair<std::vector<int>, std::vector<int>> moment_signs(
    const GkmPresentation& p) {
  std::vector<int> plus;
  std::vector<int> minus;
  for (int i = 0; i < p.component_count(); ++i) {
    const auto& comp = p.components()[i];
    if (!comp.moment) {
      throw RegularityError("component '" + comp.name + "' has no moment value");
    }
    if (*comp.moment == 0) {
      throw RegularityError("component '" + comp.name +
                            "' sits at the zero moment level");
    }
    (*comp.moment > 0 ? plus : minus).push_back(i);
  }
  return {plus, minus};
}

}  // namespace

KernelReport kernel_generators(const GkmPresentation& p, int degree_bound) {
  auto [plus, minus] = moment_signs(p);
  KernelReport report;
  // K+ vanishes where the moment is positive, K- where it is negative.
  report.plus_generators = minimal_generators_vanishing(p, degree_bound, plus);
  report.minus_generators = minimal_generators_vanishing(p, degree_bound, minus);

  int k = p.torus_dim();
  int n = p.component_count();
  report.plus_dims.resize(degree_bound + 1);
  report.minus_dims.resize(degree_bound + 1);
  std::vector<char> direct(degree_bound + 1, 1);
  parallel_for(degree_bound + 1, [&, plus = plus, minus = minus](int d) {
    auto plus_basis = graded_basis_vanishing(p, d, plus);
    auto minus_basis = graded_basis_vanishing(p, d, minus);
    report.plus_dims[d] = static_cast<int>(plus_basis.size());
    report.minus_dims[d] = static_cast<int>(minus_basis.size());
    int m = static_cast<int>(monomial_basis(k, d).size());
    RowSpace sum(n * m);
    for (const auto& b : plus_basis) sum.insert(tuple_degree_coefficients(b, d));
    for (const auto& b : minus_basis) sum.insert(tuple_degree_coefficients(b, d));
    direct[d] =
        sum.rank() == report.plus_dims[d] + report.minus_dims[d] ? 1 : 0;
  });
  report.direct_sum =
      std::all_of(direct.begin(), direct.end(), [](char c) { return c == 1; });
  return report;
}

QuotientReport quotient_report(const GkmPresentation& p, const Subalgebra& q,
                               int degree_bound) {
  int k = p.torus_dim();
  if (q.ambient_dim() != k || q.dim() != 1) {
    throw ParseError("circle direction must be a one-dimensional subalgebra");
  }
  auto [plus, minus] = moment_signs(p);
  int n = p.component_count();

  // Degree-1 piece of the subring of polynomials constant along q.
  std::vector<Polynomial> subring_forms;
  for (const auto& form : q.vanishing_ideal()) {
    subring_forms.push_back(Polynomial::from_linear_form(form));
  }

  std::vector<std::vector<AssignmentTuple>> bases(degree_bound + 1);
  std::vector<std::vector<AssignmentTuple>> plus_bases(degree_bound + 1);
  std::vector<std::vector<AssignmentTuple>> minus_bases(degree_bound + 1);
  parallel_for(degree_bound + 1, [&, plus = plus, minus = minus](int d) {
    bases[d] = graded_basis(p, d);
    plus_bases[d] = graded_basis_vanishing(p, d, plus);
    minus_bases[d] = graded_basis_vanishing(p, d, minus);
  });

  QuotientReport report;
  report.dims.resize(degree_bound + 1);
  for (int d = 0; d <= degree_bound; ++d) {
    int m = static_cast<int>(monomial_basis(k, d).size());
    RowSpace kernel_span(n * m);
    for (const auto& b : plus_bases[d]) {
      kernel_span.insert(tuple_degree_coefficients(b, d));
    }
    for (const auto& b : minus_bases[d]) {
      kernel_span.insert(tuple_degree_coefficients(b, d));
    }
    int kernel_rank = kernel_span.rank();
    report.dims[d] = static_cast<int>(bases[d].size()) - kernel_rank;

    // Generator sweep in the quotient: mod out the kernel plus the
    // subring-degree-1 multiples of the previous slice.
    RowSpace span = std::move(kernel_span);
    if (d > 0) {
      for (const auto& b : bases[d - 1]) {
        for (const auto& w : subring_forms) {
          AssignmentTuple shifted;
          shifted.polys.reserve(n);
          for (const auto& poly : b.polys) shifted.polys.push_back(poly * w);
          span.insert(tuple_degree_coefficients(shifted, d));
        }
      }
    }
    for (const auto& b : bases[d]) {
      if (span.insert(tuple_degree_coefficients(b, d))) {
        report.generators.push_back(Generator{b, d});
      }
    }
  }

  bool has_weights = std::all_of(
      p.components().begin(), p.components().end(),
      [](const GkmComponent& c) { return !c.weights.empty(); });
  if (has_weights) {
    report.surjectivity_hypothesis_holds =
        check_surjectivity_hypothesis(p).all_pass;
    if (!report.surjectivity_hypothesis_holds) {
      report.caveat =
          "surjectivity hypothesis fails: the quotient computes only the "
          "algebra modulo the Kirwan kernel";
    }
  } else {
    report.caveat = "no weights provided: surjectivity hypothesis unchecked";
  }
  return report;
}

}  // namespace assignalg
