#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lefschetz/matrix.hpp"

namespace lefschetz {

/// Reduced row-echelon decomposition. `rref` is the unique RREF of the
/// input, `pivots` the pivot column indices in increasing order.
struct RrefResult {
  RationalMatrix rref;
  std::vector<int> pivots;
  int rank = 0;
};

/// RREF together with the invertible row transform: transform * input == rref.
struct RrefTransform {
  RationalMatrix rref;
  RationalMatrix transform;
  std::vector<int> pivots;
  int rank = 0;
};

RrefResult rref_decompose(const RationalMatrix& m);
RrefTransform rref_with_transform(const RationalMatrix& m);

int rank(const RationalMatrix& m);
Rational det(const RationalMatrix& m);
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// A linear subspace of Q^ambient_dim given by an independent column basis.
struct Subspace {
  int ambient_dim = 0;
  RationalMatrix basis;  // ambient_dim x dim, independent columns

  int dim() const { return basis.cols(); }
  static Subspace zero(int ambient_dim) { return {ambient_dim, RationalMatrix(ambient_dim, 0)}; }
  static Subspace full(int ambient_dim) { return {ambient_dim, RationalMatrix::identity(ambient_dim)}; }
};

/// Canonical kernel basis (free variable set to 1, remaining free variables 0,
/// in increasing free-column order).
Subspace kernel(const RationalMatrix& m);
/// Column-space basis: the pivot columns of the input, in order.
Subspace image(const RationalMatrix& m);
/// Standard basis vectors at the non-pivot coordinates of `u`, in increasing
/// index order; their classes form a basis of Q^ambient_dim / u.
Subspace quotient_representatives(int ambient_dim, const Subspace& u);

bool contains(const Subspace& s, const std::vector<Rational>& v);
bool subspace_equal(const Subspace& a, const Subspace& b);

/// Particular solution of a*x = b with all free variables set to zero;
/// nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b);

/// Affine family of square matrices {base + sum_i t_i * directions[i]}.
/// Directions are linearly independent as vectors in the dim^2-dimensional
/// matrix space.
struct AffineMatrixFamily {
  int dim = 0;
  RationalMatrix base;
  std::vector<RationalMatrix> directions;

  RationalMatrix member(const std::vector<Rational>& t) const;
};

/// Solves `constraint_rows * vec(X) = rhs` for a square dim x dim unknown X,
/// vec() flattening row-major. Returns the full solution set as an affine
/// family (base = particular solution with free variables zero, directions =
/// canonical kernel basis), or nullopt when infeasible.
std::optional<AffineMatrixFamily> solve_affine_constraint(const RationalMatrix& constraint_rows,
                                                          const std::vector<Rational>& rhs,
                                                          int dim);

/// Constructs an invertible D x D solution of the two-sided system
/// P*X*Q = R (P: q x D, Q: D x s, R: q x s). Caller's contract: the system is
/// feasible (im R inside im P, ker Q inside ker R) and
/// rank R >= rank P + rank Q - D, which is exactly when an invertible
/// solution exists. Deterministic.
RationalMatrix invertible_sandwich_solution(const RationalMatrix& p, const RationalMatrix& q,
                                            const RationalMatrix& r, int dim);

struct SearchPolicy {
  std::uint64_t seed = 0;
  std::uint32_t trial_budget = 512;
  std::uint64_t grid_cap = 100000;
};

struct InvertibleSearchResult {
  enum class Kind { Found, NoneExists, Unknown };
  Kind kind = Kind::Unknown;
  RationalMatrix witness;       // Found only; re-verified member with det != 0
  std::uint64_t trials = 0;     // sample points examined

  bool found() const { return kind == Kind::Found; }
};

/// Decides whether the family contains an invertible member.
/// When the evaluation grid {0..dim}^p fits under policy.grid_cap the answer
/// is certified both ways (det has degree <= dim in each parameter, so
/// vanishing on the whole grid means vanishing identically). Otherwise
/// seeded integer sampling in [-10^6, 10^6] may find a member; exhausting the
/// trial budget yields Unknown, never a probabilistic NoneExists.
InvertibleSearchResult find_invertible_member(const AffineMatrixFamily& family,
                                              const SearchPolicy& policy);

}  // namespace lefschetz
