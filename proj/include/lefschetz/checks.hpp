#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/gysin.hpp"

namespace lefschetz {

enum class Property { THL, P1, P2, HL, Parity, Equivalence };
enum class Outcome { Holds, Fails, Trivial, Unknown };

std::string to_string(Property p);
std::string to_string(Outcome o);

/// Invertible matrix realizing the commutative square
///   rho_{2n-k+1} . matrix . i_k  ==  L^{n-k} restricted to PH^k_B,
/// where i_k is iota_k restricted to the primitive subspace.
struct HLWitness {
  int degree = 0;
  RationalMatrix matrix;  // H^k_M -> H^{2n-k+1}_M
};

/// Certificate that no member of the constrained family is invertible:
/// every solution maps `u` into `w` and dim u > dim w.
struct SingularityCertificate {
  Subspace u;  // inside the domain H^k_M
  Subspace w;  // inside the codomain H^{2n-k+1}_M
};

struct WitnessClass {
  std::string kind;  // "kernel", "cokernel", "intersection", ...
  std::string space; // "basic" or "total"
  int degree = 0;
  std::vector<Rational> coords;
};

struct Verdict {
  Property property = Property::THL;
  int degree = 0;
  Outcome outcome = Outcome::Holds;
  std::string detail;

  std::optional<WitnessClass> witness_class;
  std::optional<HLWitness> hl_witness;
  std::optional<SingularityCertificate> certificate;
  std::optional<std::uint64_t> trials;

  bool holds_or_trivial() const { return outcome == Outcome::Holds || outcome == Outcome::Trivial; }
};

struct PrimitiveSubspace {
  int degree = 0;
  Subspace basis;  // inside H^k_B
};

/// THL_k: L^{n-k}: H^k_B -> H^{2n-k}_B is an isomorphism. Trivial outside
/// 0..2n. For k > n the power n-k is negative and the property is decided as
/// invertibility of the reverse multiplication map L^{k-n}: H^{2n-k} -> H^k,
/// so THL_k and THL_{2n-k} agree by construction.
Verdict check_thl(const FlowModel& m, int k);

/// PH^k_B = ker(L^{n-k+1}: H^k_B -> H^{2n-k+2}_B) for 0 <= k <= n+1; the zero
/// subspace above that (the power would be negative).
PrimitiveSubspace primitive_subspace(const FlowModel& m, int k);

/// (P1)_k: iota_k restricted to PH^k_B is an isomorphism onto H^k_M.
/// (P2)_k: H^k_B = PH^k_B (+) L(H^{k-2}_B) as a direct sum.
/// Requires 0 <= k <= n and a model that passed check_exactness.
std::pair<Verdict, Verdict> check_primitive_conditions(const FlowModel& m, int k);

/// HL_k: existence of an invertible Lambda: H^k_M -> H^{2n-k+1}_M with
/// rho_{2n-k+1} . Lambda . i_k = L^{n-k} on PH^k_B. The constraint has the
/// two-sided form P.Lambda.Q = R, so existence is decided exactly: feasible
/// and rank R >= rank P + rank Q - dim. Holds carries a re-verified witness;
/// Fails carries either an infeasibility witness or a singularity
/// certificate. The search policy only seeds tie-breaking in tests; the
/// decision itself never samples.
Verdict check_hl(const FlowModel& m, int k, const SearchPolicy& policy);

/// Aggregate cross-check: "THL_j for all j <= k" == "HL_j for all j <= k".
/// Requires k <= n, an exact model and a nonsingular basic pairing in every
/// degree (throws ModelError otherwise); Trivial outcomes count as holding.
Verdict check_equivalence(const FlowModel& m, int k, const SearchPolicy& policy);

/// THL_{k-1} => iota_k surjective (vacuously Holds when THL_{k-1} fails).
/// Fails only on corrupted model data. Requires k <= n and an exact model.
Verdict check_lemma_iota_epi(const FlowModel& m, int k);

/// When the model satisfies THL in every degree, checks that b_k is even for
/// every odd k <= n; Trivial when the model is not Lefschetz.
Verdict check_betti_parity(const FlowModel& m, const SearchPolicy& policy);

}  // namespace lefschetz
