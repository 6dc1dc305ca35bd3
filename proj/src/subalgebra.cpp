#include "assignalg/subalgebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace assignalg {

namespace {

RationalMatrix rref_no_zero_rows(const RationalMatrix& m) {
  std::vector<int> pivots;
  RationalMatrix r = m.rref(&pivots);
  RationalMatrix out(static_cast<int>(pivots.size()), m.cols());
  for (int i = 0; i < out.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = r.at(i, j);
  }
  return out;
}

}  // namespace

Subalgebra Subalgebra::full(int ambient_dim) {
  Subalgebra h(ambient_dim);
  h.basis_ = RationalMatrix::identity(ambient_dim);
  return h;
}

Subalgebra Subalgebra::from_span(const std::vector<std::vector<Rational>>& vectors,
                                 int ambient_dim) {
  Subalgebra h(ambient_dim);
  h.basis_ = rref_no_zero_rows(RationalMatrix::from_rows(vectors, ambient_dim));
  return h;
}

Subalgebra Subalgebra::from_kernel(const std::vector<LinearForm>& forms,
                                   int ambient_dim) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : forms) {
    if (static_cast<int>(f.size()) != ambient_dim) {
      throw DimensionMismatchError("kernel form length mismatch");
    }
    rows.push_back(f);
  }
  auto kernel = RationalMatrix::from_rows(rows, ambient_dim).nullspace_basis();
  return from_span(kernel, ambient_dim);
}

Subalgebra Subalgebra::intersect(const Subalgebra& other) const {
  if (ambient_dim_ != other.ambient_dim_) {
    throw DimensionMismatchError("subalgebra intersection across ambient spaces");
  }
  auto forms = vanishing_ideal();
  auto other_forms = other.vanishing_ideal();
  forms.insert(forms.end(), other_forms.begin(), other_forms.end());
  return from_kernel(forms, ambient_dim_);
}

bool Subalgebra::contains(const Subalgebra& other) const {
  if (ambient_dim_ != other.ambient_dim_) {
    throw DimensionMismatchError("subalgebra containment across ambient spaces");
  }
  for (int i = 0; i < other.basis_.rows(); ++i) {
    if (!contains_vector(other.basis_.row(i))) return false;
  }
  return true;
}

bool Subalgebra::contains_vector(const std::vector<Rational>& v) const {
  RowSpace span(ambient_dim_);
  for (int i = 0; i < basis_.rows(); ++i) span.insert(basis_.row(i));
  return span.contains(v);
}

std::vector<LinearForm> Subalgebra::vanishing_ideal() const {
  auto kernel = basis_.nullspace_basis();
  auto rref = rref_no_zero_rows(RationalMatrix::from_rows(kernel, ambient_dim_));
  std::vector<LinearForm> forms;
  forms.reserve(rref.rows());
  for (int i = 0; i < rref.rows(); ++i) forms.push_back(rref.row(i));
  return forms;
}

Polynomial Subalgebra::normal_form(const Polynomial& p) const {
  if (p.nvars() != ambient_dim_) {
    throw DimensionMismatchError("normal form across ambient spaces");
  }
  auto ideal = vanishing_ideal();
  if (ideal.empty()) return p;
  // Each RREF form reads u_pivot + sum_j c_j u_j = 0; substitute the pivot
  // variable by -sum_j c_j u_j and leave the free variables alone.
  RationalMatrix sub = RationalMatrix::identity(ambient_dim_);
  for (const auto& form : ideal) {
    int pivot = 0;
    while (form[pivot] == 0) ++pivot;
    for (int j = 0; j < ambient_dim_; ++j) {
      sub.at(pivot, j) = j == pivot ? Rational(0) : -form[j];
    }
  }
  return p.substitute_linear(sub);
}

Polynomial Subalgebra::restrict_to(const Polynomial& p) const {
  if (p.nvars() != ambient_dim_) {
    throw DimensionMismatchError("restriction across ambient spaces");
  }
  // Points of the subspace are sum_k s_k * (basis row k); the ambient
  // variable u_j becomes the linear form sum_k basis(k, j) s_k.
  RationalMatrix sub(ambient_dim_, dim());
  for (int j = 0; j < ambient_dim_; ++j) {
    for (int k = 0; k < dim(); ++k) sub.at(j, k) = basis_.at(k, j);
  }
  return p.substitute_linear(sub);
}

std::string Subalgebra::to_string() const {
  std::string out = "span{";
  for (int i = 0; i < basis_.rows(); ++i) {
    if (i > 0) out += ", ";
    out += "(";
    for (int j = 0; j < ambient_dim_; ++j) {
      if (j > 0) out += ", ";
      out += rational_to_string(basis_.at(i, j));
    }
    out += ")";
  }
  out += "}";
  return out;
}

LinearForm primitive_representative(const LinearForm& form) {
  Integer lcm_den(1);
  bool all_zero = true;
  for (const auto& c : form) {
    if (c != 0) {
      all_zero = false;
      lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
    }
  }
  if (all_zero) throw std::invalid_argument("zero form has no primitive representative");

  std::vector<Integer> ints;
  ints.reserve(form.size());
  Integer g(0);
  for (const auto& c : form) {
    Integer v = numerator(c) * (lcm_den / denominator(c));
    ints.push_back(v);
    g = boost::multiprecision::gcd(g, v);
  }
  bool flip = false;
  for (const auto& v : ints) {
    if (v != 0) {
      flip = v < 0;
      break;
    }
  }
  LinearForm out;
  out.reserve(form.size());
  for (const auto& v : ints) {
    Integer w = v / g;
    out.push_back(Rational(flip ? Integer(-w) : w));
  }
  return out;
}

std::vector<CollinearityClass> collinearity_classes(
    const std::vector<LinearForm>& weights) {
  std::vector<CollinearityClass> classes;
  for (const auto& w : weights) {
    LinearForm rep = primitive_representative(w);
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const CollinearityClass& c) {
                             return c.representative == rep;
                           });
    if (it == classes.end()) {
      classes.push_back(CollinearityClass{std::move(rep), 1});
    } else {
      ++it->multiplicity;
    }
  }
  return classes;
}

}  // namespace assignalg
