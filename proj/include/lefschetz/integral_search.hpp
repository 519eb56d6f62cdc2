#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "lefschetz/matrix.hpp"

namespace lefschetz {

class PolynomialParseError : public std::runtime_error {
 public:
  explicit PolynomialParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Sparse multivariate polynomial over Q. Exponent vectors are keyed in an
/// ordered map so iteration (printing, evaluation) is deterministic.
class Polynomial {
 public:
  explicit Polynomial(int num_vars = 0) : num_vars_(num_vars) {}

  /// CLI syntax: terms `coef*x1^e1*...*xn^en` joined by + and -, rational
  /// coefficients `p/q`, variables x1..xn. The variable count is the largest
  /// index mentioned, or `min_vars` if larger.
  static Polynomial parse(const std::string& text, int min_vars = 0);

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest exponent of any single variable in any term.
  int max_single_degree() const;

  void add_term(const std::vector<int>& exponents, const Rational& coeff);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& s) const;

  Rational eval(const std::vector<Rational>& point) const;
  Rational eval_integers(const std::vector<mpz_class>& point) const;

  /// q(y) = p(A^T y): substitutes x_j := sum_i a(i,j) * y_i. `a` must be
  /// square with side num_vars().
  Polynomial substitute_linear(const RationalMatrix& a) const;

  std::string str() const;

  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

 private:
  int num_vars_;
  std::map<std::vector<int>, Rational> terms_;  // no zero coefficients stored
};

struct LatticePoint {
  std::vector<mpz_class> coords;
};

struct IntegralCombination {
  LatticePoint z;
  std::vector<Rational> c;  // c_j = sum_i a(i,j) * z_i
  Rational value;           // p(c) = q(z), nonzero
};

/// Returns z with p(z) != 0 by scanning the grid {0..d}^n (d = max single
/// variable degree) with the first variable varying fastest; a nonzero
/// polynomial cannot vanish on the whole grid. Throws on the zero polynomial.
LatticePoint find_nonvanishing_point(const Polynomial& p);

/// Lemma-style search: given a nonsingular change of basis `a` and a nonzero
/// polynomial p, finds integers z with q(z) = p(A^T z) != 0 and returns the
/// combination coefficients c and the value.
IntegralCombination integral_combination(const RationalMatrix& a, const Polynomial& p);

}  // namespace lefschetz
