#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "assignalg/matrix.hpp"
#include "assignalg/rational.hpp"

namespace assignalg {

// Exponent vector of a monomial in a fixed ambient coordinate system.
struct Monomial {
  std::vector<int> exponents;

  int degree() const;
  bool operator==(const Monomial& other) const = default;
};

// Canonical term order: total degree first, then lexicographically on the
// exponent vector, larger terms first. monomial_basis(2, 2) lists
// u1^2, u1*u2, u2^2 in that order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// All monomials of total degree d in nvars variables, in canonical order.
std::vector<Monomial> monomial_basis(int nvars, int d);

// Sparse multivariate polynomial with exact rational coefficients.
// Immutable in spirit: all operations return new values.
class Polynomial {
 public:
  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int index);
  static Polynomial term(int nvars, Monomial m, const Rational& c);
  static Polynomial from_linear_form(const LinearForm& form);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  // Degree of the zero polynomial is the "minus infinity" sentinel nullopt.
  std::optional<int> degree() const;
  bool is_homogeneous() const;

  const std::map<Monomial, Rational, MonomialOrder>& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Rational& c) const;
  bool operator==(const Polynomial& other) const = default;

  // Sum of the terms of total degree exactly d.
  Polynomial graded_component(int d) const;

  // Substitutes each variable by a linear form in new variables; `sub` has
  // one row per old variable, row length = new variable count.
  Polynomial substitute_linear(const RationalMatrix& sub) const;

  // Coefficients over monomial_basis(nvars, d), canonical order.
  std::vector<Rational> coefficients_of_degree(int d) const;
  static Polynomial from_degree_coefficients(int nvars, int d,
                                             const std::vector<Rational>& coeffs);

  // Canonical text: terms in canonical order, variables u1..uN, e.g.
  // "3/2*u1^2*u2 - u3". Parsing accepts arbitrary term order and whitespace.
  std::string to_string() const;
  static Polynomial parse(const std::string& text, int nvars);

 private:
  void add_term(const Monomial& m, const Rational& c);

  int nvars_;
  std::map<Monomial, Rational, MonomialOrder> terms_;
};

}  // namespace assignalg
