#pragma once

#include <cassert>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "lefschetz/rational.hpp"

namespace lefschetz {

/// Dense row-major matrix over the exact rationals. Degenerate shapes
/// (zero rows and/or columns) are first-class values; they carry the
/// zero-dimensional cohomology spaces that show up at sequence boundaries.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
    assert(rows >= 0 && cols >= 0);
  }
  RationalMatrix(int rows, int cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    assert(entries_.size() == static_cast<std::size_t>(rows_) * cols_);
  }
  /// Row-of-rows literal, mostly for tests: RationalMatrix({{1,2},{3,4}}).
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(int n);
  static RationalMatrix zeros(int rows, int cols) { return RationalMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Rational& at(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
  }
  Rational& at(int r, int c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
  }
  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const;
  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix scaled(const Rational& s) const;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  std::vector<Rational> column(int c) const;
  void set_column(int c, const std::vector<Rational>& v);

  /// Columns of `this` followed by columns of `o` (row counts must agree).
  RationalMatrix hstack(const RationalMatrix& o) const;
  /// Rows of `this` followed by rows of `o` (column counts must agree).
  RationalMatrix vstack(const RationalMatrix& o) const;
  RationalMatrix columns(const std::vector<int>& idx) const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

 private:
  int rows_, cols_;
  std::vector<Rational> entries_;
};

}  // namespace lefschetz
