#pragma once

// Dense matrices over an arbitrary Kleene algebra, with block operations and
// the block-recursive star.

#include <concepts>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kadec/regex.hpp"

namespace kadec::kamat {

/// A Kleene algebra instance: a traits type bundling the carrier and its
/// operations. Instances are expected to satisfy the KA axioms; the test
/// suite checks them exhaustively for finite carriers.
template <class K>
concept KleeneAlgebra = requires(const typename K::value_type& x, const typename K::value_type& y) {
  typename K::value_type;
  { K::zero() } -> std::convertible_to<typename K::value_type>;
  { K::one() } -> std::convertible_to<typename K::value_type>;
  { K::plus(x, y) } -> std::convertible_to<typename K::value_type>;
  { K::dot(x, y) } -> std::convertible_to<typename K::value_type>;
  { K::star(x) } -> std::convertible_to<typename K::value_type>;
  { K::equal(x, y) } -> std::convertible_to<bool>;
};

/// Booleans: the two-element Kleene algebra (relations on a point).
struct BoolKA {
  using value_type = bool;
  static bool zero() { return false; }
  static bool one() { return true; }
  static bool plus(bool x, bool y) { return x || y; }
  static bool dot(bool x, bool y) { return x && y; }
  static bool star(bool) { return true; }
  static bool equal(bool x, bool y) { return x == y; }
};

/// Regular expressions with their syntactic constructors. equal() is
/// structural; callers compare up to a weaker relation through the
/// predicate overloads of Matrix::equals.
struct RegexKA {
  using value_type = Regex;
  static Regex zero() { return Regex::zero(); }
  static Regex one() { return Regex::one(); }
  static Regex plus(const Regex& x, const Regex& y) { return Regex::plus(x, y); }
  static Regex dot(const Regex& x, const Regex& y) { return Regex::dot(x, y); }
  static Regex star(const Regex& x) { return Regex::star(x); }
  static bool equal(const Regex& x, const Regex& y) { return x == y; }
};

/// Regular expressions whose operations apply x.0 = 0.x = 0, x+0 = 0+x = x,
/// x.1 = 1.x = x and 0* = 1 on the fly. Symbolic matrix products stay small
/// and their results are already in simplified form.
struct SimplifyingRegexKA {
  using value_type = Regex;
  static Regex zero() { return Regex::zero(); }
  static Regex one() { return Regex::one(); }
  static Regex plus(const Regex& x, const Regex& y) {
    if (x.is(RegexKind::Zero)) return y;
    if (y.is(RegexKind::Zero)) return x;
    return Regex::plus(x, y);
  }
  static Regex dot(const Regex& x, const Regex& y) {
    if (x.is(RegexKind::Zero) || y.is(RegexKind::Zero)) return Regex::zero();
    if (x.is(RegexKind::One)) return y;
    if (y.is(RegexKind::One)) return x;
    return Regex::dot(x, y);
  }
  static Regex star(const Regex& x) { return x.is(RegexKind::Zero) ? Regex::one() : Regex::star(x); }
  static bool equal(const Regex& x, const Regex& y) { return x == y; }
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <KleeneAlgebra K>
class Matrix {
 public:
  using value_type = typename K::value_type;

  Matrix() = default;
  /// rows x cols zero matrix.
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Cell{K::zero()}) {}
  Matrix(std::initializer_list<std::initializer_list<value_type>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      for (const auto& x : r) data_.push_back(Cell{x});
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const value_type& operator()(std::size_t i, std::size_t j) const {
    check(i, j);
    return data_[i * cols_ + j].value;
  }
  value_type& operator()(std::size_t i, std::size_t j) {
    check(i, j);
    return data_[i * cols_ + j].value;
  }

  /// Entry-wise comparison with a caller-supplied entry relation.
  template <class Eq>
  bool equals(const Matrix& other, Eq&& eq) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!eq(data_[k].value, other.data_[k].value)) return false;
    }
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.equals(b, K::equal); }

 private:
  // Wrapped so that bool entries do not hit std::vector<bool>.
  struct Cell {
    value_type value;
  };

  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
      throw std::out_of_range("matrix entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                              std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cell> data_;
};

template <KleeneAlgebra K>
Matrix<K> mx_zero(std::size_t rows, std::size_t cols) {
  return Matrix<K>(rows, cols);
}

template <KleeneAlgebra K>
Matrix<K> mx_one(std::size_t n) {
  Matrix<K> m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = K::one();
  return m;
}

template <KleeneAlgebra K>
Matrix<K> mx_plus(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("mx_plus: shape mismatch");
  Matrix<K> r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = K::plus(a(i, j), b(i, j));
  return r;
}

/// (a.b)[i,j] = sum over k of a[i,k].b[k,j], folded from zero in order of k.
template <KleeneAlgebra K>
Matrix<K> mx_dot(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.cols() != b.rows()) throw DimensionError("mx_dot: inner dimensions differ");
  Matrix<K> r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      typename K::value_type acc = K::zero();
      for (std::size_t k = 0; k < a.cols(); ++k) acc = K::plus(acc, K::dot(a(i, k), b(k, j)));
      r(i, j) = acc;
    }
  }
  return r;
}

/// x at (i, j), zero elsewhere.
template <KleeneAlgebra K>
Matrix<K> mx_point(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j, typename K::value_type x) {
  if (i >= rows || j >= cols) throw std::out_of_range("mx_point: position outside matrix");
  Matrix<K> m(rows, cols);
  m(i, j) = std::move(x);
  return m;
}

/// [[a, b], [c, d]].
template <KleeneAlgebra K>
Matrix<K> mx_blocks(const Matrix<K>& a, const Matrix<K>& b, const Matrix<K>& c, const Matrix<K>& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols()) {
    throw DimensionError("mx_blocks: incompatible block shapes");
  }
  const std::size_t x = a.rows(), y = a.cols();
  Matrix<K> r(x + c.rows(), y + b.cols());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t j = 0; j < r.cols(); ++j) {
      if (i < x) {
        r(i, j) = j < y ? a(i, j) : b(i, j - y);
      } else {
        r(i, j) = j < y ? c(i - x, j) : d(i - x, j - y);
      }
    }
  }
  return r;
}

/// Sub-matrix of the given shape starting at (row, col).
template <KleeneAlgebra K>
Matrix<K> mx_sub(const Matrix<K>& m, std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) {
  if (row + rows > m.rows() || col + cols > m.cols()) throw DimensionError("mx_sub: block outside matrix");
  Matrix<K> r(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r(i, j) = m(row + i, col + j);
  return r;
}

// Inverse of mx_blocks for a matrix split after x rows and y columns.
template <KleeneAlgebra K>
Matrix<K> mx_sub00(const Matrix<K>& m, std::size_t x, std::size_t y) {
  return mx_sub(m, 0, 0, x, y);
}
template <KleeneAlgebra K>
Matrix<K> mx_sub01(const Matrix<K>& m, std::size_t x, std::size_t y) {
  if (y > m.cols()) throw DimensionError("mx_sub01: split outside matrix");
  return mx_sub(m, 0, y, x, m.cols() - y);
}
template <KleeneAlgebra K>
Matrix<K> mx_sub10(const Matrix<K>& m, std::size_t x, std::size_t y) {
  if (x > m.rows()) throw DimensionError("mx_sub10: split outside matrix");
  return mx_sub(m, x, 0, m.rows() - x, y);
}
template <KleeneAlgebra K>
Matrix<K> mx_sub11(const Matrix<K>& m, std::size_t x, std::size_t y) {
  if (x > m.rows() || y > m.cols()) throw DimensionError("mx_sub11: split outside matrix");
  return mx_sub(m, x, y, m.rows() - x, m.cols() - y);
}

template <KleeneAlgebra K>
Matrix<K> mx_star(const Matrix<K>& m);

/// Star of a square matrix split into blocks [[A, B], [C, D]] with A of
/// size x by x:
///   D' = D*, A' = (A + B.D'.C)*,
///   M* = [[A', A'.B.D'], [D'.C.A', D' + D'.C.A'.B.D']].
/// Any split gives the same matrix; mx_star uses x = 1.
template <KleeneAlgebra K>
Matrix<K> mx_star_block(const Matrix<K>& m, std::size_t x) {
  if (m.rows() != m.cols()) throw DimensionError("mx_star: matrix is not square");
  if (x > m.rows()) throw DimensionError("mx_star_block: split outside matrix");
  const Matrix<K> a = mx_sub00(m, x, x), b = mx_sub01(m, x, x), c = mx_sub10(m, x, x), d = mx_sub11(m, x, x);
  const Matrix<K> ds = mx_star(d);
  const Matrix<K> b_ds = mx_dot(b, ds);
  const Matrix<K> as = mx_star(mx_plus(a, mx_dot(b_ds, c)));
  const Matrix<K> ds_c_as = mx_dot(mx_dot(ds, c), as);
  const Matrix<K> as_b_ds = mx_dot(as, b_ds);
  return mx_blocks(as, as_b_ds, ds_c_as, mx_plus(ds, mx_dot(ds_c_as, b_ds)));
}

template <KleeneAlgebra K>
Matrix<K> mx_star(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw DimensionError("mx_star: matrix is not square");
  if (m.rows() == 0) return m;
  if (m.rows() == 1) {
    Matrix<K> r(1, 1);
    r(0, 0) = K::star(m(0, 0));
    return r;
  }
  return mx_star_block(m, 1);
}

/// a <= b in the natural order of the semilattice: a + b == b.
template <KleeneAlgebra K>
bool mx_leq(const Matrix<K>& a, const Matrix<K>& b) {
  return mx_plus(a, b) == b;
}

/// Single entry of a 1x1 matrix.
template <KleeneAlgebra K>
typename K::value_type mx_to_scal(const Matrix<K>& m) {
  if (m.rows() != 1 || m.cols() != 1) throw DimensionError("mx_to_scal: matrix is not 1x1");
  return m(0, 0);
}

using BoolMatrix = Matrix<BoolKA>;
using RegexMatrix = Matrix<RegexKA>;

}  // namespace kadec::kamat
