// Acceptance suite: one criterion per block, one PASS/FAIL line each, exact
// arithmetic throughout. Exit code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "lefschetz/checks.hpp"
#include "lefschetz/corpus_io.hpp"
#include "lefschetz/integral_search.hpp"
#include "test_support.hpp"

using namespace lefschetz;
namespace lt = lefschetz::testing;

namespace {

struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

const FlowModel& corpus_model(const std::string& id) {
  for (const auto& e : bundled_corpus())
    if (e.id == id) return e.model;
  throw std::logic_error("missing corpus entry " + id);
}

std::string fmt_dims(const std::vector<int>& dims) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  os << ")";
  return os.str();
}

// Shared randomized population: exterior algebras T^2, T^4, T^6 with seeded
// integral Euler classes.
const std::vector<FlowModel>& random_population() {
  static const std::vector<FlowModel> population = [] {
    std::vector<FlowModel> out;
    std::mt19937_64 rng(20240809);
    const GradedAlgebra t2 = exterior_algebra(2);
    const GradedAlgebra t4 = exterior_algebra(4);
    const GradedAlgebra t6 = exterior_algebra(6);
    for (int i = 0; i < 34; ++i)
      for (const GradedAlgebra* a : {&t2, &t4, &t6}) {
        FlowModel m = build_flow_model(*a, EulerClass{lt::random_euler(rng, *a)});
        m.name = "random_t" + std::to_string(a->top_degree()) + "_" + std::to_string(i);
        out.push_back(std::move(m));
      }
    return out;
  }();
  return population;
}

bool verify_hl_witness(const FlowModel& m, const Verdict& v, Check& check) {
  if (!v.hl_witness) {
    check.expect(false, m.name + ": HL witness missing at degree " + std::to_string(v.degree));
    return false;
  }
  const int k = v.degree, n = m.n();
  const auto& lambda = v.hl_witness->matrix;
  const Subspace ph = primitive_subspace(m, k).basis;
  const bool invertible = !det(lambda).is_zero();
  const bool commutes = m.rho_at(2 * n - k + 1) * lambda * (m.iota_at(k) * ph.basis) ==
                        lefschetz_matrix(m.algebra, m.euler, k, n - k) * ph.basis;
  check.expect(invertible, m.name + ": HL witness singular at degree " + std::to_string(k));
  check.expect(commutes, m.name + ": HL witness square does not commute at " + std::to_string(k));
  return invertible && commutes;
}

void verify_singularity_certificate(const FlowModel& m, const Verdict& v, Check& check) {
  if (!v.certificate) {
    check.expect(false, m.name + ": NoneExists certificate missing");
    return;
  }
  const auto sys = lt::hl_constraint_system(m, v.degree);
  const auto family = solve_affine_constraint(sys.rows, sys.rhs, sys.dim);
  if (!family) {
    check.expect(false, m.name + ": certificate present but constraint infeasible");
    return;
  }
  const auto& cert = *v.certificate;
  check.expect(cert.u.dim() > cert.w.dim(), m.name + ": certificate dims not contracting");
  auto absorbed = [&](const RationalMatrix& member) {
    for (int c = 0; c < cert.u.dim(); ++c)
      if (!contains(cert.w, member.apply(cert.u.basis.column(c)))) return false;
    return true;
  };
  check.expect(absorbed(family->base), m.name + ": certificate fails on the base solution");
  for (const auto& d : family->directions)
    check.expect(absorbed(d), m.name + ": certificate fails on a family direction");
}

// ---- criteria ----

void criterion1(Check& check) {  // connected-sum flow
  const auto& m = corpus_model("cp2cp2_e_a");
  for (int k : {0, 1, 2})
    check.expect(check_thl(m, k).outcome == Outcome::Holds,
                 "THL_" + std::to_string(k) + " must hold");
  check.expect(m.total_dims == std::vector<int>{1, 0, 1, 1, 0, 1},
               "total dims " + fmt_dims(m.total_dims) + " != (1,0,1,1,0,1)");
  for (int k : {0, 1, 2}) {
    const auto v = check_hl(m, k, {});
    check.expect(v.outcome == Outcome::Holds, "HL_" + std::to_string(k) + " must hold");
    if (v.outcome == Outcome::Holds) verify_hl_witness(m, v, check);
  }
}

void criterion2(Check& check) {  // square-zero Euler class bundle
  const auto& m = corpus_model("t4_bundle_e12");
  const auto thl0 = check_thl(m, 0);
  check.expect(thl0.outcome == Outcome::Fails, "THL_0 must fail");
  check.expect(thl0.witness_class && thl0.witness_class->degree == 0 &&
                   thl0.witness_class->coords == std::vector<Rational>{Rational(1)},
               "THL_0 witness must be the unit class");
  const auto hl0 = check_hl(m, 0, {});
  check.expect(hl0.outcome == Outcome::Fails, "HL_0 must fail");
  verify_singularity_certificate(m, hl0, check);
  check.expect(check_equivalence(m, 0, {}).outcome == Outcome::Holds,
               "equivalence at k=0 must hold (both sides false)");
}

void criterion3(Check& check) {  // trivial products against the Kuenneth oracle
  for (const char* id : {"trivial_t2", "trivial_t4"}) {
    const auto& m = corpus_model(id);
    check.expect(check_thl(m, 0).outcome == Outcome::Fails,
                 std::string(id) + ": THL_0 must fail (not Lefschetz)");
    const auto oracle = lt::kuenneth_circle_dims(m.algebra.space().dims);
    check.expect(m.total_dims == oracle, std::string(id) + ": total dims " +
                                             fmt_dims(m.total_dims) + " != Kuenneth " +
                                             fmt_dims(oracle));
  }
}

void criterion4(Check& check) {  // Hopf-type model over CP^2
  const auto& m = corpus_model("cp2_hopf");
  for (int k = 0; k <= 2 * m.n(); ++k)
    check.expect(check_thl(m, k).holds_or_trivial(),
                 "THL_" + std::to_string(k) + " must hold on the Hopf model");
  check.expect(m.total_dims == std::vector<int>{1, 0, 0, 0, 0, 1},
               "total dims " + fmt_dims(m.total_dims) + " != (1,0,0,0,0,1)");
}

void criterion5(Check& check) {  // equivalence property suite
  int models = 0;
  auto run = [&](const FlowModel& m) {
    const auto pairing = build_pairing(m.algebra);
    if (!pairing || !pairing->nonsingular_everywhere()) return;
    ++models;
    bool thl_agg = true, hl_agg = true;
    for (int k = 0; k <= m.n(); ++k) {
      thl_agg = thl_agg && check_thl(m, k).holds_or_trivial();
      const auto hl = check_hl(m, k, {});
      check.expect(hl.outcome != Outcome::Unknown,
                   m.name + ": Unknown HL outcome at k=" + std::to_string(k));
      hl_agg = hl_agg && hl.holds_or_trivial();
      check.expect(thl_agg == hl_agg, m.name + ": THL_{<=k} != HL_{<=k} at k=" +
                                          std::to_string(k));
    }
  };
  for (const auto& e : bundled_corpus()) run(e.model);
  for (const auto& m : random_population()) run(m);
  check.expect(models >= 100 + 7, "population too small: " + std::to_string(models));
}

void criterion6(Check& check) {  // two consecutive THL degrees force P_k
  auto run = [&](const FlowModel& m) {
    for (int k = 0; k <= m.n(); ++k) {
      if (!check_thl(m, k - 1).holds_or_trivial()) continue;
      if (!check_thl(m, k - 2).holds_or_trivial()) continue;
      const auto [p1, p2] = check_primitive_conditions(m, k);
      check.expect(p1.outcome == Outcome::Holds,
                   m.name + ": P1 must hold at k=" + std::to_string(k));
      check.expect(p2.outcome == Outcome::Holds,
                   m.name + ": P2 must hold at k=" + std::to_string(k));
    }
  };
  for (const auto& e : bundled_corpus()) run(e.model);
  for (const auto& m : random_population()) run(m);
}

void criterion7(Check& check) {  // Betti parity on Lefschetz models
  auto run = [&](const FlowModel& m) {
    const auto v = check_betti_parity(m, {});
    check.expect(v.outcome != Outcome::Fails, m.name + ": odd Betti number on a Lefschetz model");
  };
  for (const auto& e : bundled_corpus()) run(e.model);
  for (const auto& m : random_population()) run(m);
}

void criterion8(Check& check) {  // Gysin exactness incl. mutation detection
  auto run = [&](const FlowModel& m) {
    check.expect(check_exactness(m).all_exact(), m.name + ": built model inexact");
  };
  for (const auto& e : bundled_corpus()) run(e.model);
  for (const auto& m : random_population()) run(m);

  for (const char* id : {"trivial_t2", "t4_e_symp"}) {
    FlowModel m = corpus_model(id);
    m.iota[1] = RationalMatrix::zeros(m.tdim(1), m.bdim(1));
    bool at_node = false;
    for (const auto& node : check_exactness(m).nodes)
      if (node.degree == 1 && node.kind == ExactnessNode::Kind::Basic) at_node = !node.exact;
    check.expect(at_node, std::string(id) + ": zeroed iota_1 not detected at the basic node");

    // Zero the first rho that actually carries something.
    FlowModel m2 = corpus_model(id);
    int target = -1;
    for (int k = 1; k <= 2 * m2.n() + 1 && target < 0; ++k)
      if (!m2.rho_at(k).is_zero()) target = k;
    check.expect(target > 0, std::string(id) + ": no nonzero rho to mutate");
    if (target > 0) {
      m2.rho[static_cast<std::size_t>(target)] =
          RationalMatrix::zeros(m2.bdim(target - 1), m2.tdim(target));
      bool at_total = false;
      for (const auto& node : check_exactness(m2).nodes)
        if (node.degree == target && node.kind == ExactnessNode::Kind::Total)
          at_total = !node.exact;
      check.expect(at_total, std::string(id) + ": zeroed rho_" + std::to_string(target) +
                                 " not detected at the total node");
    }
  }
}

void criterion9(Check& check) {  // integral search
  const auto ic = integral_combination(RationalMatrix::identity(2), Polynomial::parse("x1*x2"));
  check.expect(!ic.value.is_zero() && ic.z.coords == std::vector<mpz_class>{1, 1},
               "x1*x2 must yield z=(1,1) with nonzero value");

  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> nvars(1, 4), nterms(1, 6), expd(0, 5);
  std::uniform_int_distribution<long> coeff(-9, 9);
  int ran = 0;
  for (int trial = 0; ran < 500; ++trial) {
    const int n = nvars(rng);
    Polynomial p(n);
    for (int t = nterms(rng); t > 0; --t) {
      std::vector<int> exps(static_cast<std::size_t>(n));
      for (auto& e : exps) e = expd(rng);
      long c = coeff(rng);
      p.add_term(exps, Rational(c == 0 ? 1 : c));
    }
    if (p.is_zero()) continue;
    ++ran;
    const auto z = find_nonvanishing_point(p);
    const int d = p.max_single_degree();
    bool inside = true;
    for (const auto& c : z.coords) inside = inside && c >= 0 && c <= d;
    check.expect(inside, "point escaped the degree grid");
    check.expect(!p.eval_integers(z.coords).is_zero(), "claimed point evaluates to zero");
  }
}

void criterion10(Check& check) {  // invertible-member search vs symbolic oracle
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> dim_d(1, 3), p_d(0, 3), kind_d(0, 3);
  std::uniform_int_distribution<long> entry_d(-4, 4);
  const SearchPolicy policy;

  auto random_entry_matrix = [&](int dim) {
    RationalMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) m.at(r, c) = Rational(entry_d(rng));
    return m;
  };

  for (int trial = 0; trial < 200; ++trial) {
    const int dim = dim_d(rng);
    const int p = p_d(rng);
    const int kind = kind_d(rng);
    AffineMatrixFamily f;
    f.dim = dim;
    f.base = random_entry_matrix(dim);
    for (int i = 0; i < p; ++i) f.directions.push_back(random_entry_matrix(dim));
    if (kind == 1) {
      // Shared zero row: det vanishes identically.
      const int r = static_cast<int>(rng() % dim);
      for (int c = 0; c < dim; ++c) {
        f.base.at(r, c) = Rational(0);
        for (auto& d : f.directions) d.at(r, c) = Rational(0);
      }
    } else if (kind == 2 && dim > 1) {
      // Support in the first column only: rank <= 1 everywhere.
      for (int r = 0; r < dim; ++r)
        for (int c = 1; c < dim; ++c) {
          f.base.at(r, c) = Rational(0);
          for (auto& d : f.directions) d.at(r, c) = Rational(0);
        }
    }
    // Drop dependent directions so the family invariant holds.
    {
      RationalMatrix flat(dim * dim, 0);
      std::vector<RationalMatrix> kept;
      for (const auto& d : f.directions) {
        RationalMatrix col(dim * dim, 1, d.entries());
        RationalMatrix cand = flat.hstack(col);
        if (rank(cand) > flat.cols()) {
          flat = std::move(cand);
          kept.push_back(d);
        }
      }
      f.directions = std::move(kept);
    }

    const Polynomial det_poly = lt::symbolic_family_det(f);
    const auto result = find_invertible_member(f, policy);
    check.expect(result.kind != InvertibleSearchResult::Kind::Unknown,
                 "small family must be decided either way");
    if (det_poly.is_zero())
      check.expect(result.kind == InvertibleSearchResult::Kind::NoneExists,
                   "oracle says det == 0 but search found a member");
    else
      check.expect(result.kind == InvertibleSearchResult::Kind::Found,
                   "oracle says det != 0 but search returned NoneExists");
    if (result.kind == InvertibleSearchResult::Kind::Found)
      check.expect(!det(result.witness).is_zero(), "found witness is singular");
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Check&)> fn;
    double seconds_budget;
  };
  const std::vector<Criterion> criteria = {
      {1, "connected-sum flow: THL holds, total dims, verified HL witnesses", criterion1, 1.0},
      {2, "T^4 bundle: THL_0/HL_0 fail with certificates, equivalence at 0", criterion2, 1.0},
      {3, "trivial products: not Lefschetz, totals match the Kuenneth oracle", criterion3, 1.0},
      {4, "Hopf-type model: THL everywhere, sphere totals", criterion4, 1.0},
      {5, "equivalence of THL_{<=k} and HL_{<=k} across corpus + 102 random models", criterion5,
       60.0},
      {6, "consecutive THL degrees force both primitive conditions", criterion6, 60.0},
      {7, "even odd-degree Betti numbers on Lefschetz models", criterion7, 60.0},
      {8, "Gysin exactness everywhere; mutations detected at the right node", criterion8, 60.0},
      {9, "integral search: worked example + 500 random polynomials in the grid bound",
       criterion9, 30.0},
      {10, "invertible-member search agrees with the symbolic determinant oracle", criterion10,
       30.0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.fn(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > c.seconds_budget)
      check.expect(false, "time budget exceeded: " + std::to_string(elapsed) + " s > " +
                              std::to_string(c.seconds_budget) + " s");
    const bool pass = check.failures.empty();
    failures += pass ? 0 : 1;
    std::printf("criterion %2d: %s (%6.2f s) %s\n", c.id, pass ? "PASS" : "FAIL", elapsed,
                c.title);
    for (const auto& f : check.failures) std::printf("    - %s\n", f.c_str());
  }
  return failures;
}
