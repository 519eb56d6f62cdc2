#include "lefschetz/matrix.hpp"

#include <ostream>

namespace lefschetz {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  entries_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& row : rows) {
    assert(static_cast<int>(row.size()) == cols_);
    for (const auto& e : row) entries_.push_back(e);
  }
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  assert(cols_ == o.rows_);
  RationalMatrix out(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(r, k);
      if (a.is_zero()) continue;
      for (int c = 0; c < o.cols_; ++c) {
        const Rational& b = o.at(k, c);
        if (!b.is_zero()) out.at(r, c) += a * b;
      }
    }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + o.entries_[i];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - o.entries_[i];
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * s;
  return out;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
  assert(static_cast<int>(v.size()) == cols_);
  std::vector<Rational> out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
  return out;
}

std::vector<Rational> RationalMatrix::column(int c) const {
  std::vector<Rational> out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

void RationalMatrix::set_column(int c, const std::vector<Rational>& v) {
  assert(static_cast<int>(v.size()) == rows_);
  for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& o) const {
  assert(rows_ == o.rows_);
  RationalMatrix out(rows_, cols_ + o.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
    for (int c = 0; c < o.cols_; ++c) out.at(r, cols_ + c) = o.at(r, c);
  }
  return out;
}

RationalMatrix RationalMatrix::vstack(const RationalMatrix& o) const {
  assert(cols_ == o.cols_);
  RationalMatrix out(rows_ + o.rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
  for (int r = 0; r < o.rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(rows_ + r, c) = o.at(r, c);
  return out;
}

RationalMatrix RationalMatrix::columns(const std::vector<int>& idx) const {
  RationalMatrix out(rows_, static_cast<int>(idx.size()));
  for (int c = 0; c < out.cols(); ++c)
    for (int r = 0; r < rows_; ++r) out.at(r, c) = at(r, idx[c]);
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  os << "[";
  for (int r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (int c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m.at(r, c);
    os << "]";
  }
  return os << "]";
}

}  // namespace lefschetz
