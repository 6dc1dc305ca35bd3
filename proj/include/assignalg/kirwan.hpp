#pragma once

#include <string>
#include <vector>

#include "assignalg/gkm.hpp"
#include "assignalg/subalgebra.hpp"

namespace assignalg {

struct ComponentSurjectivityVerdict {
  int component;
  int class_count;
  bool independent;
};

struct SurjectivityReport {
  bool all_pass = true;
  std::vector<ComponentSurjectivityVerdict> verdicts;
};

// Per fixed component: group the isotropy weights up to scalar multiple
// and test linear independence of the class representatives.
SurjectivityReport check_surjectivity_hypothesis(const GkmPresentation& p);

class RegularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KernelReport {
  std::vector<Generator> plus_generators;   // vanish where moment > 0
  std::vector<Generator> minus_generators;  // vanish where moment < 0
  std::vector<int> plus_dims;               // per degree 0..bound
  std::vector<int> minus_dims;
  bool direct_sum = true;  // degreewise intersection is zero
};

// Minimal generators of the two halves of the Kirwan-map kernel. Every
// component must carry a nonzero moment value.
KernelReport kernel_generators(const GkmPresentation& p, int degree_bound);

struct QuotientReport {
  std::vector<int> dims;  // dim of (A / (K+ + K-))_d, d = 0..bound
  // Generators over the subring of polynomials constant along the circle
  // direction; degrees use the ambient grading.
  std::vector<Generator> generators;
  bool surjectivity_hypothesis_holds = false;
  std::string caveat;
};

// Graded structure of the quotient by the Kirwan kernel, as a module over
// the polynomial subring generated by the annihilator of the circle
// direction q (which must be one-dimensional).
QuotientReport quotient_report(const GkmPresentation& p, const Subalgebra& q,
                               int degree_bound);

}  // namespace assignalg
