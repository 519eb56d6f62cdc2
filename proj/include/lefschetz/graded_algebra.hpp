#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lefschetz/linalg.hpp"
#include "lefschetz/matrix.hpp"

namespace lefschetz {

/// Graded vector space H^0 .. H^top_degree with one label per basis element.
struct GradedVectorSpace {
  int top_degree = 0;
  std::vector<int> dims;                            // indexed by degree 0..top_degree
  std::vector<std::vector<std::string>> basis_labels;

  /// Zero outside 0..top_degree, so boundary degrees need no special-casing.
  int dim(int k) const {
    return (k < 0 || k > top_degree) ? 0 : dims[static_cast<std::size_t>(k)];
  }
};

struct AlgebraElement {
  int degree = 0;
  std::vector<Rational> coords;

  bool is_zero() const {
    for (const auto& c : coords)
      if (!c.is_zero()) return false;
    return true;
  }
};

/// Degree-2 class acting as the Lefschetz multiplier.
struct EulerClass {
  std::vector<Rational> coords;

  bool is_zero() const {
    for (const auto& c : coords)
      if (!c.is_zero()) return false;
    return true;
  }
};

struct ValidationIssue {
  enum class Kind { Structure, Unit, GradedCommutativity, Associativity, DegreeBound };
  Kind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Finite-dimensional graded-commutative algebra over Q presented by sparse
/// structure constants. Absent products are zero; stored products must list
/// both operand orders (validation checks the graded sign between them).
class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  GradedAlgebra(int n, GradedVectorSpace space) : n_(n), space_(std::move(space)) {}

  int n() const { return n_; }
  int top_degree() const { return 2 * n_; }
  int dim(int k) const { return space_.dim(k); }
  const GradedVectorSpace& space() const { return space_; }
  const std::string& label(int degree, int index) const {
    return space_.basis_labels[static_cast<std::size_t>(degree)][static_cast<std::size_t>(index)];
  }

  /// Coefficient vector of basis(d1,i) * basis(d2,j) in degree d1+d2, or
  /// nullptr when the product is zero / not stored.
  const std::vector<Rational>* product(int d1, int i, int d2, int j) const;
  void set_product(int d1, int i, int d2, int j, std::vector<Rational> coeffs);

  struct ProductEntry {
    int d1, i, d2, j;
    std::vector<Rational> coeffs;
  };
  /// All stored products sorted by (d1, i, d2, j); serialization order.
  std::vector<ProductEntry> sorted_products() const;

 private:
  static std::uint64_t key(int d1, int i, int d2, int j) {
    return (std::uint64_t(std::uint16_t(d1)) << 48) | (std::uint64_t(std::uint16_t(i)) << 32) |
           (std::uint64_t(std::uint16_t(d2)) << 16) | std::uint64_t(std::uint16_t(j));
  }

  int n_ = 0;
  GradedVectorSpace space_;
  std::unordered_map<std::uint64_t, std::vector<Rational>> products_;
};

/// Convenience builder that fills the unit row and the graded-commutative
/// mirror of every product automatically.
class AlgebraBuilder {
 public:
  AlgebraBuilder(int n, std::vector<int> dims, std::vector<std::vector<std::string>> labels);

  /// Sets basis(d1,i)*basis(d2,j) = coeffs and its mirror with the sign
  /// (-1)^(d1*d2). Degrees above 2n are ignored (products there are zero).
  AlgebraBuilder& set_product(int d1, int i, int d2, int j, std::vector<Rational> coeffs);
  /// Raw single-entry write, no mirroring; for constructing invalid tables.
  AlgebraBuilder& set_product_raw(int d1, int i, int d2, int j, std::vector<Rational> coeffs);

  GradedAlgebra build();

 private:
  GradedAlgebra algebra_;
};

/// Checks unit, graded commutativity, associativity on all basis triples of
/// total degree <= 2n, and degree bounds. Violations are data, not errors.
ValidationReport validate_algebra(const GradedAlgebra& a);

/// Bilinear extension of the structure constants; degree = x.degree + y.degree
/// (the zero element of that degree when it exceeds 2n).
AlgebraElement multiply(const GradedAlgebra& a, const AlgebraElement& x, const AlgebraElement& y);

/// Matrix of x -> x * e^power from H^k to H^(k+2*power) in the chosen bases.
RationalMatrix lefschetz_matrix(const GradedAlgebra& a, const EulerClass& e, int k, int power);

/// Per-degree pairing H^k x H^(2n-k) -> H^2n ~ Q; entry (i,j) is the
/// top-degree coefficient of basis_i * basis_j.
struct PairingData {
  std::vector<RationalMatrix> matrices;  // index k = 0..2n, shape dim(k) x dim(2n-k)

  bool nonsingular_everywhere() const;
};

/// PairingData when dim(2n) == 1; nullopt otherwise (pairing not applicable).
std::optional<PairingData> build_pairing(const GradedAlgebra& a);

}  // namespace lefschetz
