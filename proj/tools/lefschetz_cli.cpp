#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <json.hpp>

#include "lefschetz/corpus_io.hpp"
#include "lefschetz/integral_search.hpp"
#include "lefschetz/report.hpp"

namespace {

using namespace lefschetz;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUnknown = 3;

int exit_code_for(Outcome o) {
  switch (o) {
    case Outcome::Holds:
    case Outcome::Trivial: return kExitHolds;
    case Outcome::Fails: return kExitFails;
    case Outcome::Unknown: return kExitUnknown;
  }
  return kExitInvalid;
}

int aggregate_exit(const std::vector<Verdict>& verdicts) {
  bool any_fails = false, any_unknown = false;
  for (const auto& v : verdicts) {
    any_fails = any_fails || v.outcome == Outcome::Fails;
    any_unknown = any_unknown || v.outcome == Outcome::Unknown;
  }
  if (any_fails) return kExitFails;
  if (any_unknown) return kExitUnknown;
  return kExitHolds;
}

void print_verdict_line(const Verdict& v) {
  std::cout << to_string(v.property);
  if (v.property != Property::Parity) std::cout << "_" << v.degree;
  std::cout << ": " << to_string(v.outcome) << "\n";
  if (v.outcome == Outcome::Fails || v.outcome == Outcome::Unknown) {
    std::cout << "  " << v.detail << "\n";
    if (v.witness_class) {
      std::cout << "  witness (" << v.witness_class->kind << ", "
                << (v.witness_class->space == "basic" ? "H^" : "H^") << v.witness_class->degree
                << (v.witness_class->space == "basic" ? "_B" : "_M") << "): [";
      for (std::size_t i = 0; i < v.witness_class->coords.size(); ++i)
        std::cout << (i ? ", " : "") << v.witness_class->coords[i];
      std::cout << "]\n";
    }
    if (v.certificate)
      std::cout << "  certificate: every solution maps a " << v.certificate->u.dim()
                << "-dim subspace into a " << v.certificate->w.dim() << "-dim subspace\n";
  } else if (v.property == Property::HL && v.hl_witness) {
    std::cout << "  witness: " << v.hl_witness->matrix << "\n";
  }
}

SearchPolicy make_policy(std::uint64_t seed, long budget_flag) {
  SearchPolicy policy;
  policy.seed = seed;
  if (const char* env = std::getenv("LEFSCHETZ_BUDGET")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) policy.trial_budget = static_cast<std::uint32_t>(v);
  }
  if (budget_flag > 0) policy.trial_budget = static_cast<std::uint32_t>(budget_flag);
  return policy;
}

/// Runs `fn` for each requested degree concurrently; output stays ordered by
/// degree.
template <typename Fn>
std::vector<Verdict> degree_fanout(int lo, int hi, Fn fn) {
  std::vector<std::future<Verdict>> futures;
  for (int k = lo; k <= hi; ++k)
    futures.push_back(std::async(std::launch::async, [&fn, k] { return fn(k); }));
  std::vector<Verdict> out;
  out.reserve(futures.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

RationalMatrix parse_matrix_arg(const std::string& arg, int expected_side) {
  if (arg.rfind("id", 0) == 0 && arg.size() > 2) {
    const int side = std::stoi(arg.substr(2));
    return RationalMatrix::identity(side);
  }
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw LoadError("cannot open matrix file: " + arg);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError("matrix file " + arg + ": " + e.what());
  }
  if (!doc.is_array()) throw LoadError("matrix file must hold an array of rows");
  const int rows = static_cast<int>(doc.size());
  const int cols = rows > 0 && doc[0].is_array() ? static_cast<int>(doc[0].size()) : 0;
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!doc[static_cast<std::size_t>(r)].is_array() ||
        static_cast<int>(doc[static_cast<std::size_t>(r)].size()) != cols)
      throw LoadError("matrix rows must be arrays of equal length");
    for (int c = 0; c < cols; ++c) {
      const auto& cell = doc[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (!cell.is_string()) throw LoadError("matrix entries must be rational strings");
      m.at(r, c) = Rational::parse(cell.get<std::string>());
    }
  }
  (void)expected_side;
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hard Lefschetz duality checks for isometric flows at the level of "
               "finite-dimensional cohomological data"};
  app.require_subcommand(1);

  std::string model_path, base_path, out_path, poly_expr, matrix_arg, format = "human";
  int degree = -1;
  bool degree_set = false;
  std::uint64_t seed = 0;
  long budget = 0;

  auto add_model_opts = [&](CLI::App* cmd, bool with_search = false) {
    cmd->add_option("--model", model_path, "model file")->required();
    if (with_search) {
      cmd->add_option("--seed", seed, "search policy seed");
      cmd->add_option("--budget", budget, "search trial budget");
    }
  };
  auto add_degree_opt = [&](CLI::App* cmd) {
    cmd->add_option("--degree", degree, "degree k; omitted = all degrees 0..n")
        ->each([&](const std::string&) { degree_set = true; });
  };

  auto* validate_cmd = app.add_subcommand("validate", "validate a model file");
  add_model_opts(validate_cmd);

  auto* gysin_cmd = app.add_subcommand("gysin", "Gysin sequence operations");
  auto* gysin_build = gysin_cmd->add_subcommand("build", "build total cohomology from (basic, euler)");
  gysin_build->add_option("--base", base_path, "input model file (total section ignored)")->required();
  gysin_build->add_option("--out", out_path, "output model file")->required();

  auto* check_cmd = app.add_subcommand("check", "property checks");
  auto* thl_cmd = check_cmd->add_subcommand("thl", "transversal Hard Lefschetz at a degree");
  add_model_opts(thl_cmd, true);
  add_degree_opt(thl_cmd);
  auto* pk_cmd = check_cmd->add_subcommand("pk", "primitive conditions P1/P2 at a degree");
  add_model_opts(pk_cmd, true);
  add_degree_opt(pk_cmd);
  auto* hl_cmd = check_cmd->add_subcommand("hl", "Hard Lefschetz at a degree");
  add_model_opts(hl_cmd, true);
  add_degree_opt(hl_cmd);
  auto* eq_cmd = check_cmd->add_subcommand("equivalence", "THL_{<=k} vs HL_{<=k} cross-check");
  add_model_opts(eq_cmd, true);
  add_degree_opt(eq_cmd);
  auto* parity_cmd = check_cmd->add_subcommand("parity", "odd Betti numbers even up to degree n");
  add_model_opts(parity_cmd, true);

  auto* search_cmd = app.add_subcommand("search", "integral lattice searches");
  auto* integral_cmd = search_cmd->add_subcommand("integral", "nonvanishing integral combination");
  integral_cmd->add_option("--poly", poly_expr, "polynomial, e.g. \"x1*x2\" or \"2*x1^2 - 1/3*x2\"")
      ->required();
  integral_cmd->add_option("--matrix", matrix_arg, "change-of-basis matrix: idN or a JSON file");

  auto* report_cmd = app.add_subcommand("report", "full verdict table for a model");
  add_model_opts(report_cmd, true);
  report_cmd->add_option("--format", format, "human|machine")
      ->check(CLI::IsMember({"human", "machine"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error[usage]: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (*validate_cmd) {
      // Parse + axioms + exactness; violations are verdict data, not errors,
      // so run the pieces separately instead of load_model's all-or-nothing.
      try {
        const FlowModel m = load_model(model_path);
        std::cout << "valid: " << m.name << " (n = " << m.n() << ")\n";
        return kExitHolds;
      } catch (const LoadError& e) {
        const std::string what = e.what();
        // Distinguish semantic validation failures from unreadable input.
        // TODO: carry a category on LoadError instead of matching substrings.
        if (what.find("algebra validation failed") != std::string::npos ||
            what.find("not exact") != std::string::npos) {
          std::cout << "invalid: " << what << "\n";
          return kExitFails;
        }
        throw;
      }
    }

    if (*gysin_build) {
      const FlowModel base = load_model(base_path);
      FlowModel rebuilt = build_flow_model(base.algebra, base.euler);
      rebuilt.name = base.name;
      rebuilt.provenance = base.provenance;
      save_model(rebuilt, out_path);
      std::cout << "built total dims: [";
      for (std::size_t i = 0; i < rebuilt.total_dims.size(); ++i)
        std::cout << (i ? ", " : "") << rebuilt.total_dims[i];
      std::cout << "] -> " << out_path << "\n";
      return kExitHolds;
    }

    const SearchPolicy policy = make_policy(seed, budget);

    if (*thl_cmd || *pk_cmd || *hl_cmd || *eq_cmd || *parity_cmd) {
      const FlowModel m = load_model(model_path);
      std::vector<Verdict> verdicts;
      const int lo = degree_set ? degree : 0;
      const int hi = degree_set ? degree : m.n();
      if (*thl_cmd) {
        verdicts = degree_fanout(lo, hi, [&](int k) { return check_thl(m, k); });
      } else if (*hl_cmd) {
        verdicts = degree_fanout(lo, hi, [&](int k) { return check_hl(m, k, policy); });
      } else if (*eq_cmd) {
        verdicts = degree_fanout(lo, hi, [&](int k) { return check_equivalence(m, k, policy); });
      } else if (*parity_cmd) {
        verdicts.push_back(check_betti_parity(m, policy));
      } else {  // pk
        for (int k = lo; k <= hi; ++k) {
          auto [p1, p2] = check_primitive_conditions(m, k);
          verdicts.push_back(std::move(p1));
          verdicts.push_back(std::move(p2));
        }
      }
      for (const auto& v : verdicts) print_verdict_line(v);
      return aggregate_exit(verdicts);
    }

    if (*integral_cmd) {
      const Polynomial p = Polynomial::parse(poly_expr);
      const RationalMatrix a = matrix_arg.empty() ? RationalMatrix::identity(p.num_vars())
                                                  : parse_matrix_arg(matrix_arg, p.num_vars());
      const IntegralCombination ic = integral_combination(a, p);
      std::cout << "z = (";
      for (std::size_t i = 0; i < ic.z.coords.size(); ++i)
        std::cout << (i ? ", " : "") << ic.z.coords[i].get_str();
      std::cout << ")\nc = (";
      for (std::size_t i = 0; i < ic.c.size(); ++i) std::cout << (i ? ", " : "") << ic.c[i];
      std::cout << ")\nvalue = " << ic.value << "\n";
      return kExitHolds;
    }

    if (*report_cmd) {
      const FlowModel m = load_model(model_path);
      const Report r = build_report(m, policy);
      std::cout << (format == "machine" ? render_machine(r) : render_human(r));
      return kExitHolds;
    }
  } catch (const LoadError& e) {
    std::cerr << "error[input]: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const RationalParseError& e) {
    std::cerr << "error[input]: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const PolynomialParseError& e) {
    std::cerr << "error[input]: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ModelError& e) {
    std::cerr << "error[precondition]: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error[input]: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
