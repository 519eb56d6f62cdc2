#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/graded_algebra.hpp"

namespace lefschetz {

/// Raised when a model violates its contract (invalid algebra, inexact maps,
/// shape mismatch). The CLI maps this to "invalid input".
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

/// A basic cohomology ring with Euler class plus the total cohomology
/// dimensions b_k and the connecting maps of the long exact sequence
///   ... -> H^{k-2}_B -e-> H^k_B -iota_k-> H^k_M -rho_k-> H^{k-1}_B -e-> ...
struct FlowModel {
  GradedAlgebra algebra;  // H^*_B
  EulerClass euler;
  std::vector<int> total_dims;          // b_k for k = 0..2n+1
  std::vector<RationalMatrix> iota;     // iota_k: H^k_B -> H^k_M, k = 0..2n+1
  std::vector<RationalMatrix> rho;      // rho_k: H^k_M -> H^{k-1}_B, k = 0..2n+1
  std::string name;
  std::string provenance;
  bool exactness_verified = false;

  int n() const { return algebra.n(); }
  int bdim(int k) const { return algebra.dim(k); }
  int tdim(int k) const {
    return (k < 0 || k >= static_cast<int>(total_dims.size())) ? 0 : total_dims[static_cast<std::size_t>(k)];
  }
  const RationalMatrix& iota_at(int k) const;
  const RationalMatrix& rho_at(int k) const;
  /// Multiplication by the Euler class, H^{k-1}_B -> H^{k+1}_B.
  RationalMatrix epsilon(int k) const { return lefschetz_matrix(algebra, euler, k - 1, 1); }
};

struct ExactnessNode {
  enum class Kind { Basic, Total, Connecting };
  int degree = 0;
  Kind kind = Kind::Basic;
  int ker_dim = 0;
  int im_dim = 0;
  bool exact = false;
  /// A vector in one space but not the other, present when inexact.
  std::optional<std::vector<Rational>> defect;
};

struct ExactnessReport {
  std::vector<ExactnessNode> nodes;

  bool all_exact() const {
    for (const auto& n : nodes)
      if (!n.exact) return false;
    return true;
  }
  std::string first_defect() const;
};

/// Builds total cohomology from (H^*_B, e): the degree-k total basis is the
/// canonical cokernel complement of multiplication-by-e into degree k,
/// followed by a kernel basis of multiplication-by-e out of degree k-1.
/// The result is verified exact before being returned.
FlowModel build_flow_model(const GradedAlgebra& a, const EulerClass& e);

/// One record per node of the sequence, degrees -1..2n+2. A model is a valid
/// Gysin model iff every node is exact.
ExactnessReport check_exactness(const FlowModel& m);

}  // namespace lefschetz
