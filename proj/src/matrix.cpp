#include "assignalg/matrix.hpp"

#include <algorithm>
#include <cctype>

namespace assignalg {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw ParseError("empty rational literal");
  auto check_int = [&](const std::string& part) {
    if (part.empty()) throw ParseError("malformed rational: '" + text + "'");
    size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw ParseError("malformed rational: '" + text + "'");
    for (size_t i = start; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
        throw ParseError("malformed rational: '" + text + "'");
      }
    }
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    check_int(s);
    return Rational(Integer(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(Integer(num), d);
}

std::string rational_to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(
    const std::vector<std::vector<Rational>>& rows, int cols) {
  RationalMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols) {
      throw DimensionMismatchError("row length does not match column count");
    }
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  }
  return m;
}

std::vector<Rational> RationalMatrix::row(int i) const {
  return std::vector<Rational>(entries_.begin() + static_cast<size_t>(i) * cols_,
                               entries_.begin() + static_cast<size_t>(i + 1) * cols_);
}

RationalMatrix RationalMatrix::rref(std::vector<int>* pivots) const {
  RationalMatrix m = *this;
  if (pivots) pivots->clear();
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int pivot_row = -1;
    for (int i = r; i < rows_; ++i) {
      if (m.at(i, c) != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != r) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(r, j), m.at(pivot_row, j));
    }
    Rational inv = Rational(1) / m.at(r, c);
    for (int j = c; j < cols_; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rational factor = m.at(i, c);
      for (int j = c; j < cols_; ++j) m.at(i, j) -= factor * m.at(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

int RationalMatrix::rank() const {
  std::vector<int> pivots;
  rref(&pivots);
  return static_cast<int>(pivots.size());
}

std::vector<std::vector<Rational>> RationalMatrix::nullspace_basis() const {
  std::vector<int> pivots;
  RationalMatrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (int free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(cols_);
    v[free_col] = 1;
    for (size_t pr = 0; pr < pivots.size(); ++pr) {
      v[pivots[pr]] = -r.at(static_cast<int>(pr), free_col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix RationalMatrix::multiplied_by(const RationalMatrix& other) const {
  if (cols_ != other.rows_) {
    throw DimensionMismatchError("matrix product dimension mismatch");
  }
  RationalMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        out.at(i, j) += a * other.at(k, j);
      }
    }
  }
  return out;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_) {
    throw DimensionMismatchError("matrix-vector dimension mismatch");
  }
  std::vector<Rational> out(rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  }
  return out;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  RationalMatrix aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  std::vector<int> pivots;
  RationalMatrix r = aug.rref(&pivots);
  if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_) {
    return std::nullopt;
  }
  RationalMatrix inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = r.at(i, cols_ + j);
  }
  return inv;
}

bool RowSpace::insert(std::vector<Rational> v) {
  if (static_cast<int>(v.size()) != cols_) {
    throw DimensionMismatchError("row space dimension mismatch");
  }
  v = reduce(std::move(v));
  int pivot = -1;
  for (int j = 0; j < cols_; ++j) {
    if (v[j] != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return false;
  Rational inv = Rational(1) / v[pivot];
  for (int j = pivot; j < cols_; ++j) v[j] *= inv;
  // Clear the new pivot column in the existing rows to stay in RREF.
  for (auto& row : rows_) {
    if (row[pivot] != 0) {
      Rational factor = row[pivot];
      for (int j = pivot; j < cols_; ++j) row[j] -= factor * v[j];
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  size_t idx = static_cast<size_t>(pos - pivots_.begin());
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

bool RowSpace::contains(const std::vector<Rational>& v) const {
  auto residue = reduce(v);
  for (const auto& x : residue) {
    if (x != 0) return false;
  }
  return true;
}

std::vector<Rational> RowSpace::reduce(std::vector<Rational> v) const {
  if (static_cast<int>(v.size()) != cols_) {
    throw DimensionMismatchError("row space dimension mismatch");
  }
  for (size_t i = 0; i < rows_.size(); ++i) {
    int p = pivots_[i];
    if (v[p] != 0) {
      Rational factor = v[p];
      for (int j = p; j < cols_; ++j) v[j] -= factor * rows_[i][j];
    }
  }
  return v;
}

std::optional<std::vector<Rational>> solve_particular(
    const RationalMatrix& a, const std::vector<Rational>& b,
    std::vector<Rational>* inconsistency_row) {
  if (static_cast<int>(b.size()) != a.rows()) {
    throw DimensionMismatchError("right-hand side length mismatch");
  }
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<int> pivots;
  RationalMatrix r = aug.rref(&pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) {
    if (inconsistency_row) {
      *inconsistency_row = r.row(static_cast<int>(pivots.size()) - 1);
    }
    return std::nullopt;
  }
  std::vector<Rational> x(a.cols());
  for (size_t pr = 0; pr < pivots.size(); ++pr) {
    x[pivots[pr]] = r.at(static_cast<int>(pr), a.cols());
  }
  return x;
}

}  // namespace assignalg
