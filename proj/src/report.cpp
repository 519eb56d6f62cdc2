#include "lefschetz/report.hpp"

#include <future>
#include <json.hpp>
#include <sstream>

namespace lefschetz {

namespace {

using json = nlohmann::ordered_json;

json subspace_to_json(const Subspace& s) {
  json out;
  out["ambient"] = s.ambient_dim;
  out["dim"] = s.dim();
  json basis = json::array();
  for (const auto& e : s.basis.entries()) basis.push_back(e.str());
  out["basis"] = std::move(basis);
  return out;
}

json verdict_to_json(const Verdict& v) {
  json out;
  out["property"] = to_string(v.property);
  out["degree"] = v.degree;
  out["outcome"] = to_string(v.outcome);
  out["detail"] = v.detail;
  if (v.witness_class) {
    json w;
    w["kind"] = v.witness_class->kind;
    w["space"] = v.witness_class->space;
    w["degree"] = v.witness_class->degree;
    json coords = json::array();
    for (const auto& c : v.witness_class->coords) coords.push_back(c.str());
    w["coords"] = std::move(coords);
    out["witness"] = std::move(w);
  }
  if (v.hl_witness) {
    json w;
    w["degree"] = v.hl_witness->degree;
    w["rows"] = v.hl_witness->matrix.rows();
    w["cols"] = v.hl_witness->matrix.cols();
    json entries = json::array();
    for (const auto& e : v.hl_witness->matrix.entries()) entries.push_back(e.str());
    w["entries"] = std::move(entries);
    out["witness_matrix"] = std::move(w);
  }
  if (v.certificate) {
    json c;
    c["u"] = subspace_to_json(v.certificate->u);
    c["w"] = subspace_to_json(v.certificate->w);
    out["certificate"] = std::move(c);
  }
  if (v.trials) out["trials"] = *v.trials;
  return out;
}

}  // namespace

std::string verdict_to_json_string(const Verdict& v) { return verdict_to_json(v).dump(2); }

Report build_report(const FlowModel& m, const SearchPolicy& policy) {
  Report r;
  r.model_id = m.name;
  r.n = m.n();
  for (int k = 0; k <= 2 * r.n; ++k) r.basic_dims.push_back(m.bdim(k));
  r.total_dims = m.total_dims;
  r.exact = m.exactness_verified;
  r.policy = policy;

  const auto pairing = build_pairing(m.algebra);
  r.pd_applicable = pairing.has_value();
  r.pd_nonsingular = pairing && pairing->nonsingular_everywhere();

  struct DegreeRow {
    Verdict thl, p1, p2, hl;
  };
  std::vector<std::future<DegreeRow>> rows;
  rows.reserve(static_cast<std::size_t>(r.n) + 1);
  for (int k = 0; k <= r.n; ++k) {
    rows.push_back(std::async(std::launch::async, [&m, &policy, k] {
      DegreeRow row;
      row.thl = check_thl(m, k);
      auto pk = check_primitive_conditions(m, k);
      row.p1 = std::move(pk.first);
      row.p2 = std::move(pk.second);
      row.hl = check_hl(m, k, policy);
      return row;
    }));
  }
  r.lefschetz = true;
  for (auto& f : rows) {
    DegreeRow row = f.get();
    r.lefschetz = r.lefschetz && row.thl.holds_or_trivial();
    r.thl.push_back(std::move(row.thl));
    r.p1.push_back(std::move(row.p1));
    r.p2.push_back(std::move(row.p2));
    r.hl.push_back(std::move(row.hl));
  }

  if (r.pd_nonsingular) r.equivalence = check_equivalence(m, r.n, policy);
  r.parity = check_betti_parity(m, policy);
  return r;
}

std::string render_machine(const Report& r) {
  json doc;
  doc["schema_version"] = "1";
  doc["model"] = r.model_id;
  doc["n"] = r.n;
  doc["basic_dims"] = r.basic_dims;
  doc["total_dims"] = r.total_dims;
  doc["exact"] = r.exact;
  doc["pd"] = {{"applicable", r.pd_applicable}, {"nonsingular", r.pd_nonsingular}};
  doc["policy"] = {{"seed", r.policy.seed}, {"budget", r.policy.trial_budget}};
  json degrees = json::array();
  for (int k = 0; k <= r.n; ++k) {
    json row;
    row["k"] = k;
    row["thl"] = verdict_to_json(r.thl[static_cast<std::size_t>(k)]);
    row["p1"] = verdict_to_json(r.p1[static_cast<std::size_t>(k)]);
    row["p2"] = verdict_to_json(r.p2[static_cast<std::size_t>(k)]);
    row["hl"] = verdict_to_json(r.hl[static_cast<std::size_t>(k)]);
    degrees.push_back(std::move(row));
  }
  doc["degrees"] = std::move(degrees);
  if (r.equivalence)
    doc["equivalence"] = verdict_to_json(*r.equivalence);
  else
    doc["equivalence"] = nullptr;
  doc["parity"] = verdict_to_json(r.parity);
  doc["lefschetz"] = r.lefschetz;
  return doc.dump(2) + "\n";
}

std::string render_human(const Report& r) {
  std::ostringstream os;
  os << "model: " << r.model_id << "   (n = " << r.n << ", dim M = " << 2 * r.n + 1 << ")\n";
  os << "basic dims: [";
  for (std::size_t i = 0; i < r.basic_dims.size(); ++i)
    os << (i ? ", " : "") << r.basic_dims[i];
  os << "]\n";
  os << "total dims: [";
  for (std::size_t i = 0; i < r.total_dims.size(); ++i)
    os << (i ? ", " : "") << r.total_dims[i];
  os << "]\n";
  os << "exactness:  " << (r.exact ? "exact at every node" : "NOT verified") << "\n";
  os << "basic PD:   "
     << (!r.pd_applicable ? "not applicable (dim H^2n != 1)"
                          : (r.pd_nonsingular ? "nonsingular in every degree" : "singular"))
     << "\n\n";

  auto cell = [](const Verdict& v) { return to_string(v.outcome); };
  os << "  k | THL      | P1       | P2       | HL\n";
  os << "----+----------+----------+----------+---------\n";
  for (int k = 0; k <= r.n; ++k) {
    std::ostringstream row;
    row << "  " << k << " | ";
    auto pad = [](std::string s) {
      s.resize(8, ' ');
      return s;
    };
    row << pad(cell(r.thl[static_cast<std::size_t>(k)])) << " | "
        << pad(cell(r.p1[static_cast<std::size_t>(k)])) << " | "
        << pad(cell(r.p2[static_cast<std::size_t>(k)])) << " | "
        << cell(r.hl[static_cast<std::size_t>(k)]);
    os << row.str() << "\n";
  }
  os << "\n";
  if (r.equivalence)
    os << "equivalence (k <= " << r.n << "): " << to_string(r.equivalence->outcome) << " ("
       << r.equivalence->detail << ")\n";
  else
    os << "equivalence: skipped (requires a nonsingular basic pairing)\n";
  os << "betti parity: " << to_string(r.parity.outcome) << " (" << r.parity.detail << ")\n";
  os << "overall: " << (r.lefschetz ? "Lefschetz flow" : "not a Lefschetz flow") << "\n";
  return os.str();
}

}  // namespace lefschetz
