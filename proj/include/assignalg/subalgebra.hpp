#pragma once

#include <string>
#include <vector>

#include "assignalg/matrix.hpp"
#include "assignalg/polynomial.hpp"
#include "assignalg/rational.hpp"

namespace assignalg {

// Linear subspace of the torus Lie algebra, kept in a canonical form:
// the RREF of a spanning-row matrix. Two subalgebras are equal exactly
// when those matrices coincide.
class Subalgebra {
 public:
  explicit Subalgebra(int ambient_dim)
      : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

  static Subalgebra zero(int ambient_dim) { return Subalgebra(ambient_dim); }
  static Subalgebra full(int ambient_dim);
  static Subalgebra from_span(const std::vector<std::vector<Rational>>& vectors,
                              int ambient_dim);
  // Joint kernel of the given forms; dependent or zero forms are fine.
  static Subalgebra from_kernel(const std::vector<LinearForm>& forms,
                                int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return basis_.rows(); }
  const RationalMatrix& basis() const { return basis_; }

  bool operator==(const Subalgebra& other) const = default;

  Subalgebra intersect(const Subalgebra& other) const;
  bool contains(const Subalgebra& other) const;
  bool contains_vector(const std::vector<Rational>& v) const;

  // RREF basis of the linear forms vanishing on this subspace;
  // ambient_dim - dim of them.
  std::vector<LinearForm> vanishing_ideal() const;

  // Canonical ambient representative of p modulo the vanishing ideal:
  // each pivot variable of the ideal's RREF is substituted away. Zero
  // exactly when p restricts to zero on the subspace.
  Polynomial normal_form(const Polynomial& p) const;

  // p written in dim() parameters, one per basis row. Zero iff
  // normal_form(p) is zero.
  Polynomial restrict_to(const Polynomial& p) const;

  std::string to_string() const;

 private:
  int ambient_dim_;
  RationalMatrix basis_;
};

// Unique representative of the scaling class of a nonzero rational form:
// coprime integer coefficients, first nonzero one positive.
LinearForm primitive_representative(const LinearForm& form);

struct CollinearityClass {
  LinearForm representative;
  int multiplicity = 0;
};

// Groups nonzero weights up to scalar multiple. Throws ParseError-style
// std::invalid_argument on a zero weight.
std::vector<CollinearityClass> collinearity_classes(
    const std::vector<LinearForm>& weights);

}  // namespace assignalg
