#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lefschetz/checks.hpp"
#include "lefschetz/gysin.hpp"

namespace lefschetz {

/// Raised on malformed model files: JSON syntax, schema violations, bad
/// rational literals, algebra axiom failures, inexact supplied totals. The
/// message carries the JSON path or byte position of the offender.
class LoadError : public std::runtime_error {
 public:
  explicit LoadError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses and fully validates a model file; when the file has no "total"
/// section the total cohomology is built from (basic, euler).
FlowModel load_model(const std::filesystem::path& path);
FlowModel model_from_json(const std::string& text);

/// Serializes a model; load_model(save_model(m)) reproduces m bit-exactly.
void save_model(const FlowModel& m, const std::filesystem::path& path);
std::string model_to_json(const FlowModel& m);

struct ExpectedVerdict {
  Property property;
  int degree;
  Outcome outcome;
};

struct CorpusEntry {
  std::string id;
  FlowModel model;
  std::vector<ExpectedVerdict> expected;
};

/// The built-in examples: the connected-sum flow, the 4-torus bundle with
/// square-zero Euler class, trivial products over T^2 and T^4, the Hopf-type
/// bundle over CP^2, and symplectic-torus members of the integral-e family.
const std::vector<CorpusEntry>& bundled_corpus();

// Ring builders used by the corpus and by randomized tests.

/// Exterior algebra on `m` degree-1 generators (the torus T^m), n = m/2.
/// `m` must be even so the top degree is 2n.
GradedAlgebra exterior_algebra(int m);
/// H^*(CP^2 # CP^2): dims (1,0,2,0,1) with a*b = 0, a^2 = b^2 = vol.
GradedAlgebra cp2cp2_algebra();
/// H^*(CP^2): truncated polynomial ring on the hyperplane class.
GradedAlgebra cp2_algebra();

/// Gysin model over the exterior algebra T^m with the given degree-2 Euler
/// coordinates (the selectable integral-e family).
FlowModel exterior_model(int m, const std::vector<Rational>& euler_coords, std::string name = "");

bool operator==(const GradedAlgebra& a, const GradedAlgebra& b);
bool operator==(const FlowModel& a, const FlowModel& b);

}  // namespace lefschetz
