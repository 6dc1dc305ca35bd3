#include "assignalg/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace assignalg {

int Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da > db;
  return a.exponents > b.exponents;
}

namespace {

void enumerate_monomials(int nvars, int d, std::vector<int>& prefix,
                         std::vector<Monomial>& out) {
  if (static_cast<int>(prefix.size()) == nvars - 1) {
    prefix.push_back(d);
    out.push_back(Monomial{prefix});
    prefix.pop_back();
    return;
  }
  for (int e = d; e >= 0; --e) {
    prefix.push_back(e);
    enumerate_monomials(nvars, d - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(int nvars, int d) {
  if (nvars == 0) {
    if (d == 0) return {Monomial{{}}};
    return {};
  }
  std::vector<Monomial> out;
  std::vector<int> prefix;
  enumerate_monomials(nvars, d, prefix, out);
  return out;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial{std::vector<int>(nvars, 0)}, c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) {
    throw DimensionMismatchError("variable index out of range");
  }
  std::vector<int> e(nvars, 0);
  e[index] = 1;
  Polynomial p(nvars);
  p.add_term(Monomial{std::move(e)}, Rational(1));
  return p;
}

Polynomial Polynomial::term(int nvars, Monomial m, const Rational& c) {
  if (static_cast<int>(m.exponents.size()) != nvars) {
    throw DimensionMismatchError("monomial length does not match nvars");
  }
  Polynomial p(nvars);
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::from_linear_form(const LinearForm& form) {
  int nvars = static_cast<int>(form.size());
  Polynomial p(nvars);
  for (int i = 0; i < nvars; ++i) {
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    p.add_term(Monomial{std::move(e)}, form[i]);
  }
  return p;
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  // The map is ordered with larger degree first.
  return terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
  return coefficient(Monomial{std::vector<int>(nvars_, 0)});
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (nvars_ != other.nvars_) {
    throw DimensionMismatchError("polynomial addition across variable counts");
  }
  Polynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out(nvars_);
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (nvars_ != other.nvars_) {
    throw DimensionMismatchError("polynomial product across variable counts");
  }
  Polynomial out(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m;
      m.exponents.resize(nvars_);
      for (int i = 0; i < nvars_; ++i) {
        m.exponents[i] = ma.exponents[i] + mb.exponents[i];
      }
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::graded_component(int d) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == d) out.terms_.emplace(m, c);
  }
  return out;
}

Polynomial Polynomial::substitute_linear(const RationalMatrix& sub) const {
  if (sub.rows() != nvars_) {
    throw DimensionMismatchError("substitution needs one row per variable");
  }
  int new_nvars = sub.cols();
  std::vector<Polynomial> images;
  images.reserve(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    images.push_back(Polynomial::from_linear_form(sub.row(i)));
  }
  // Powers of each image, grown on demand.
  std::vector<std::vector<Polynomial>> powers(
      nvars_, {Polynomial::constant(new_nvars, Rational(1))});
  auto power = [&](int var, int e) -> const Polynomial& {
    auto& cache = powers[var];
    while (static_cast<int>(cache.size()) <= e) {
      cache.push_back(cache.back() * images[var]);
    }
    return cache[e];
  };

  Polynomial out(new_nvars);
  for (const auto& [m, c] : terms_) {
    Polynomial term = Polynomial::constant(new_nvars, c);
    for (int i = 0; i < nvars_; ++i) {
      if (m.exponents[i] > 0) term = term * power(i, m.exponents[i]);
    }
    out = out + term;
  }
  return out;
}

std::vector<Rational> Polynomial::coefficients_of_degree(int d) const {
  auto basis = monomial_basis(nvars_, d);
  std::vector<Rational> out;
  out.reserve(basis.size());
  for (const auto& m : basis) out.push_back(coefficient(m));
  return out;
}

Polynomial Polynomial::from_degree_coefficients(int nvars, int d,
                                                const std::vector<Rational>& coeffs) {
  auto basis = monomial_basis(nvars, d);
  if (basis.size() != coeffs.size()) {
    throw DimensionMismatchError("coefficient vector length mismatch");
  }
  Polynomial p(nvars);
  for (size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coeffs[i]);
  return p;
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "u" + std::to_string(i + 1);
    if (m.exponents[i] > 1) out += "^" + std::to_string(m.exponents[i]);
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono = monomial_text(m);
    if (mono.empty()) {
      out += rational_to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += rational_to_string(mag) + "*" + mono;
    }
  }
  return out;
}

Polynomial Polynomial::parse(const std::string& text, int nvars) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw ParseError("empty polynomial");

  Polynomial result(nvars);
  size_t i = 0;
  auto read_uint = [&]() -> long {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected digits at position " +
                                     std::to_string(start) + " in '" + text + "'");
    return std::stol(s.substr(start, i - start));
  };

  while (i < s.size()) {
    Rational sign(1);
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    if (i >= s.size()) throw ParseError("dangling sign in '" + text + "'");

    Rational coeff(1);
    std::vector<int> exps(nvars, 0);
    bool expect_factor = true;
    while (expect_factor) {
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        long num = read_uint();
        if (i < s.size() && s[i] == '/') {
          ++i;
          long den = read_uint();
          if (den == 0) throw ParseError("zero denominator in '" + text + "'");
          coeff *= Rational(num, den);
        } else {
          coeff *= num;
        }
      } else if (i < s.size() && s[i] == 'u') {
        ++i;
        long var = read_uint();
        if (var < 1 || var > nvars) {
          throw ParseError("variable u" + std::to_string(var) +
                           " out of range for " + std::to_string(nvars) +
                           " variables");
        }
        long e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          e = read_uint();
        }
        exps[var - 1] += static_cast<int>(e);
      } else {
        throw ParseError("unexpected character at position " + std::to_string(i) +
                         " in '" + text + "'");
      }
      expect_factor = i < s.size() && s[i] == '*';
      if (expect_factor) ++i;
    }
    result.add_term(Monomial{std::move(exps)}, sign * coeff);
    if (i < s.size() && s[i] != '+' && s[i] != '-') {
      throw ParseError("expected '+' or '-' at position " + std::to_string(i) +
                       " in '" + text + "'");
    }
  }
  return result;
}

}  // namespace assignalg
