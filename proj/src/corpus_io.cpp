#include "lefschetz/corpus_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace lefschetz {

namespace {

using json = nlohmann::ordered_json;

void reject_unknown_fields(const json& obj, const std::string& path,
                           std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw LoadError("unknown field '" + key + "' at " + path);
  }
}

const json& field(const json& obj, const std::string& path, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) throw LoadError("missing field '" + std::string(name) + "' at " + path);
  return *it;
}

int int_field(const json& obj, const std::string& path, const char* name) {
  const json& v = field(obj, path, name);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw LoadError("field '" + std::string(name) + "' at " + path + " must be a nonnegative integer");
  return v.get<int>();
}

Rational rational_field(const json& v, const std::string& path) {
  if (!v.is_string())
    throw LoadError("expected a rational string \"p\" or \"p/q\" at " + path +
                    " (floating point literals are rejected)");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const RationalParseError& e) {
    throw LoadError(std::string(e.what()) + " at " + path);
  }
}

std::vector<Rational> rational_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw LoadError("expected an array of rational strings at " + path);
  std::vector<Rational> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(rational_field(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

RationalMatrix matrix_from_flat(const json& v, int rows, int cols, const std::string& path) {
  auto entries = rational_array(v, path);
  if (static_cast<int>(entries.size()) != rows * cols)
    throw LoadError("matrix at " + path + " has " + std::to_string(entries.size()) +
                    " entries, expected " + std::to_string(rows) + "x" + std::to_string(cols));
  return RationalMatrix(rows, cols, std::move(entries));
}

json matrix_to_flat(const RationalMatrix& m) {
  json out = json::array();
  for (const auto& e : m.entries()) out.push_back(e.str());
  return out;
}

}  // namespace

FlowModel model_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError("JSON syntax error: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw LoadError("model file must contain a JSON object");
  reject_unknown_fields(doc, "$", {"schema_version", "metadata", "n", "basic", "euler", "total"});

  const json& version = field(doc, "$", "schema_version");
  if (!version.is_string() || version.get<std::string>() != "1")
    throw LoadError("unsupported schema_version (expected \"1\")");

  const int n = int_field(doc, "$", "n");
  const int top = 2 * n;

  // metadata
  std::string name, provenance;
  {
    const json& md = field(doc, "$", "metadata");
    if (!md.is_object()) throw LoadError("metadata must be an object");
    reject_unknown_fields(md, "$.metadata", {"name", "provenance"});
    const json& nm = field(md, "$.metadata", "name");
    if (!nm.is_string()) throw LoadError("metadata.name must be a string");
    name = nm.get<std::string>();
    if (md.contains("provenance")) {
      if (!md["provenance"].is_string()) throw LoadError("metadata.provenance must be a string");
      provenance = md["provenance"].get<std::string>();
    }
  }

  // basic ring
  const json& basic = field(doc, "$", "basic");
  if (!basic.is_object()) throw LoadError("basic must be an object");
  reject_unknown_fields(basic, "$.basic", {"dims", "basis_labels", "products"});

  std::vector<int> dims;
  {
    const json& jd = field(basic, "$.basic", "dims");
    if (!jd.is_array() || static_cast<int>(jd.size()) != top + 1)
      throw LoadError("basic.dims must be an array of length 2n+1");
    for (std::size_t i = 0; i < jd.size(); ++i) {
      if (!jd[i].is_number_integer() || jd[i].get<long long>() < 0)
        throw LoadError("basic.dims[" + std::to_string(i) + "] must be a nonnegative integer");
      dims.push_back(jd[i].get<int>());
    }
  }
  std::vector<std::vector<std::string>> labels;
  {
    const json& jl = field(basic, "$.basic", "basis_labels");
    if (!jl.is_array() || jl.size() != dims.size())
      throw LoadError("basic.basis_labels must have one entry per degree 0..2n");
    for (std::size_t k = 0; k < jl.size(); ++k) {
      const std::string path = "$.basic.basis_labels[" + std::to_string(k) + "]";
      if (!jl[k].is_array() || static_cast<int>(jl[k].size()) != dims[k])
        throw LoadError(path + " must list one label per basis element");
      std::vector<std::string> row;
      for (std::size_t i = 0; i < jl[k].size(); ++i) {
        if (!jl[k][i].is_string()) throw LoadError(path + " entries must be strings");
        row.push_back(jl[k][i].get<std::string>());
      }
      for (std::size_t i = 0; i < row.size(); ++i)
        for (std::size_t j = i + 1; j < row.size(); ++j)
          if (row[i] == row[j]) throw LoadError("duplicate basis label '" + row[i] + "' at " + path);
      labels.push_back(std::move(row));
    }
  }

  GradedVectorSpace space{top, dims, labels};
  GradedAlgebra algebra(n, std::move(space));
  {
    const json& jp = field(basic, "$.basic", "products");
    if (!jp.is_array()) throw LoadError("basic.products must be an array");
    for (std::size_t t = 0; t < jp.size(); ++t) {
      const std::string path = "$.basic.products[" + std::to_string(t) + "]";
      const json& entry = jp[t];
      if (!entry.is_object()) throw LoadError(path + " must be an object");
      reject_unknown_fields(entry, path, {"d1", "i", "d2", "j", "coeffs"});
      const int d1 = int_field(entry, path, "d1");
      const int i = int_field(entry, path, "i");
      const int d2 = int_field(entry, path, "d2");
      const int j = int_field(entry, path, "j");
      if (d1 > top || d2 > top || i >= algebra.dim(d1) || j >= algebra.dim(d2))
        throw LoadError("product indices out of range at " + path);
      if (d1 + d2 > top)
        throw LoadError("product lands above degree 2n at " + path);
      auto coeffs = rational_array(field(entry, path, "coeffs"), path + ".coeffs");
      if (static_cast<int>(coeffs.size()) != algebra.dim(d1 + d2))
        throw LoadError("coeffs length must equal dim of degree " + std::to_string(d1 + d2) +
                        " at " + path);
      if (algebra.product(d1, i, d2, j))
        throw LoadError("duplicate product entry at " + path);
      algebra.set_product(d1, i, d2, j, std::move(coeffs));
    }
  }

  const auto report = validate_algebra(algebra);
  if (!report.ok()) {
    std::ostringstream os;
    os << "algebra validation failed (" << report.issues.size() << " issue"
       << (report.issues.size() == 1 ? "" : "s") << "): " << report.issues.front().detail;
    throw LoadError(os.str());
  }

  // euler class
  EulerClass euler;
  {
    const json& je = field(doc, "$", "euler");
    if (!je.is_object()) throw LoadError("euler must be an object");
    reject_unknown_fields(je, "$.euler", {"coords"});
    euler.coords = rational_array(field(je, "$.euler", "coords"), "$.euler.coords");
    if (static_cast<int>(euler.coords.size()) != algebra.dim(2))
      throw LoadError("euler.coords length must equal dim H^2_B");
  }

  if (!doc.contains("total")) {
    FlowModel m = build_flow_model(algebra, euler);
    m.name = std::move(name);
    m.provenance = std::move(provenance);
    return m;
  }

  // user-supplied total structure
  FlowModel m;
  m.algebra = std::move(algebra);
  m.euler = std::move(euler);
  m.name = std::move(name);
  m.provenance = std::move(provenance);
  const json& total = doc["total"];
  if (!total.is_object()) throw LoadError("total must be an object");
  reject_unknown_fields(total, "$.total", {"dims", "iota", "rho"});
  {
    const json& jd = field(total, "$.total", "dims");
    if (!jd.is_array() || static_cast<int>(jd.size()) != 2 * n + 2)
      throw LoadError("total.dims must be an array of length 2n+2");
    for (std::size_t i = 0; i < jd.size(); ++i) {
      if (!jd[i].is_number_integer() || jd[i].get<long long>() < 0)
        throw LoadError("total.dims[" + std::to_string(i) + "] must be a nonnegative integer");
      m.total_dims.push_back(jd[i].get<int>());
    }
  }
  const json& ji = field(total, "$.total", "iota");
  const json& jr = field(total, "$.total", "rho");
  if (!ji.is_array() || static_cast<int>(ji.size()) != 2 * n + 2)
    throw LoadError("total.iota must list one matrix per degree 0..2n+1");
  if (!jr.is_array() || static_cast<int>(jr.size()) != 2 * n + 2)
    throw LoadError("total.rho must list one matrix per degree 0..2n+1");
  for (int k = 0; k <= 2 * n + 1; ++k) {
    m.iota.push_back(matrix_from_flat(ji[static_cast<std::size_t>(k)], m.tdim(k), m.bdim(k),
                                      "$.total.iota[" + std::to_string(k) + "]"));
    m.rho.push_back(matrix_from_flat(jr[static_cast<std::size_t>(k)], m.bdim(k - 1), m.tdim(k),
                                     "$.total.rho[" + std::to_string(k) + "]"));
  }

  const auto exact = check_exactness(m);
  if (!exact.all_exact())
    throw LoadError("supplied total structure is not exact: " + exact.first_defect());
  m.exactness_verified = true;
  return m;
}

FlowModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open model file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return model_from_json(buf.str());
  } catch (const LoadError& e) {
    throw LoadError(path.string() + ": " + e.what());
  }
}

std::string model_to_json(const FlowModel& m) {
  const int n = m.n();
  json doc;
  doc["schema_version"] = "1";
  doc["metadata"] = {{"name", m.name}, {"provenance", m.provenance}};
  doc["n"] = n;

  json basic;
  basic["dims"] = json::array();
  basic["basis_labels"] = json::array();
  for (int k = 0; k <= 2 * n; ++k) {
    basic["dims"].push_back(m.bdim(k));
    json row = json::array();
    for (int i = 0; i < m.bdim(k); ++i) row.push_back(m.algebra.label(k, i));
    basic["basis_labels"].push_back(std::move(row));
  }
  basic["products"] = json::array();
  for (const auto& entry : m.algebra.sorted_products()) {
    json e;
    e["d1"] = entry.d1;
    e["i"] = entry.i;
    e["d2"] = entry.d2;
    e["j"] = entry.j;
    json coeffs = json::array();
    for (const auto& c : entry.coeffs) coeffs.push_back(c.str());
    e["coeffs"] = std::move(coeffs);
    basic["products"].push_back(std::move(e));
  }
  doc["basic"] = std::move(basic);

  json euler;
  euler["coords"] = json::array();
  for (const auto& c : m.euler.coords) euler["coords"].push_back(c.str());
  doc["euler"] = std::move(euler);

  json total;
  total["dims"] = m.total_dims;
  total["iota"] = json::array();
  total["rho"] = json::array();
  for (int k = 0; k <= 2 * n + 1; ++k) {
    total["iota"].push_back(matrix_to_flat(m.iota_at(k)));
    total["rho"].push_back(matrix_to_flat(m.rho_at(k)));
  }
  doc["total"] = std::move(total);

  return doc.dump(2) + "\n";
}

void save_model(const FlowModel& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LoadError("cannot write model file: " + path.string());
  out << model_to_json(m);
  if (!out) throw LoadError("short write to " + path.string());
}

GradedAlgebra exterior_algebra(int m) {
  if (m < 0 || m % 2 != 0)
    throw std::invalid_argument("exterior_algebra expects an even number of generators");
  const int n = m / 2;

  // Basis of degree k: k-subsets of {1..m} in lexicographic order.
  std::vector<std::vector<std::vector<int>>> subsets(static_cast<std::size_t>(m) + 1);
  {
    std::vector<int> cur;
    // iterative enumeration by size
    for (int k = 0; k <= m; ++k) {
      std::vector<int> idx(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
      if (k == 0) {
        subsets[0].push_back({});
        continue;
      }
      for (;;) {
        subsets[static_cast<std::size_t>(k)].push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - (k - 1 - i)) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }

  std::vector<int> dims;
  std::vector<std::vector<std::string>> labels;
  for (int k = 0; k <= m; ++k) {
    dims.push_back(static_cast<int>(subsets[static_cast<std::size_t>(k)].size()));
    std::vector<std::string> row;
    for (const auto& s : subsets[static_cast<std::size_t>(k)]) {
      if (s.empty()) {
        row.push_back("1");
        continue;
      }
      std::string label;
      for (int v : s) label += "x" + std::to_string(v);
      row.push_back(std::move(label));
    }
    labels.push_back(std::move(row));
  }

  GradedVectorSpace space{m, dims, labels};
  GradedAlgebra algebra(n, std::move(space));

  auto position = [&](int k, const std::vector<int>& s) {
    const auto& list = subsets[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < list.size(); ++i)
      if (list[i] == s) return static_cast<int>(i);
    throw std::logic_error("subset not found");
  };

  for (int d1 = 0; d1 <= m; ++d1)
    for (int d2 = 0; d1 + d2 <= m; ++d2)
      for (std::size_t i = 0; i < subsets[static_cast<std::size_t>(d1)].size(); ++i)
        for (std::size_t j = 0; j < subsets[static_cast<std::size_t>(d2)].size(); ++j) {
          const auto& s = subsets[static_cast<std::size_t>(d1)][i];
          const auto& t = subsets[static_cast<std::size_t>(d2)][j];
          bool disjoint = true;
          for (int a : s)
            for (int b : t) disjoint = disjoint && a != b;
          if (!disjoint) continue;  // product is zero, entry stays absent
          long inversions = 0;
          for (int a : s)
            for (int b : t)
              if (a > b) ++inversions;
          std::vector<int> merged;
          merged.reserve(s.size() + t.size());
          merged.insert(merged.end(), s.begin(), s.end());
          merged.insert(merged.end(), t.begin(), t.end());
          std::sort(merged.begin(), merged.end());
          std::vector<Rational> coeffs(static_cast<std::size_t>(algebra.dim(d1 + d2)));
          coeffs[static_cast<std::size_t>(position(d1 + d2, merged))] =
              Rational(inversions % 2 == 0 ? 1 : -1);
          algebra.set_product(d1, static_cast<int>(i), d2, static_cast<int>(j), std::move(coeffs));
        }

  return algebra;
}

GradedAlgebra cp2cp2_algebra() {
  AlgebraBuilder b(2, {1, 0, 2, 0, 1}, {{"1"}, {}, {"a", "b"}, {}, {"vol"}});
  b.set_product(2, 0, 2, 0, {Rational(1)});   // a*a = vol
  b.set_product(2, 1, 2, 1, {Rational(1)});   // b*b = vol
  b.set_product(2, 0, 2, 1, {Rational(0)});   // a*b = 0 (stored explicitly)
  return b.build();
}

GradedAlgebra cp2_algebra() {
  AlgebraBuilder b(2, {1, 0, 1, 0, 1}, {{"1"}, {}, {"h"}, {}, {"h2"}});
  b.set_product(2, 0, 2, 0, {Rational(1)});  // h*h = h2
  return b.build();
}

FlowModel exterior_model(int m, const std::vector<Rational>& euler_coords, std::string name) {
  const GradedAlgebra algebra = exterior_algebra(m);
  EulerClass e{euler_coords};
  FlowModel model = build_flow_model(algebra, e);
  model.name = name.empty() ? ("t" + std::to_string(m) + "_model") : std::move(name);
  return model;
}

bool operator==(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (a.n() != b.n()) return false;
  if (a.space().dims != b.space().dims) return false;
  if (a.space().basis_labels != b.space().basis_labels) return false;
  const auto pa = a.sorted_products();
  const auto pb = b.sorted_products();
  if (pa.size() != pb.size()) return false;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (std::tie(pa[i].d1, pa[i].i, pa[i].d2, pa[i].j) !=
        std::tie(pb[i].d1, pb[i].i, pb[i].d2, pb[i].j))
      return false;
    if (pa[i].coeffs != pb[i].coeffs) return false;
  }
  return true;
}

bool operator==(const FlowModel& a, const FlowModel& b) {
  return a.algebra == b.algebra && a.euler.coords == b.euler.coords &&
         a.total_dims == b.total_dims && a.iota == b.iota && a.rho == b.rho && a.name == b.name &&
         a.provenance == b.provenance;
}

namespace {

std::vector<Rational> euler_zero(const GradedAlgebra& a) {
  return std::vector<Rational>(static_cast<std::size_t>(a.dim(2)));
}

std::vector<ExpectedVerdict> all_holds(int n) {
  std::vector<ExpectedVerdict> v;
  for (int k = 0; k <= n; ++k) {
    v.push_back({Property::THL, k, Outcome::Holds});
    v.push_back({Property::P1, k, Outcome::Holds});
    v.push_back({Property::P2, k, Outcome::Holds});
    v.push_back({Property::HL, k, Outcome::Holds});
    v.push_back({Property::Equivalence, k, Outcome::Holds});
  }
  v.push_back({Property::Parity, -1, Outcome::Holds});
  return v;
}

CorpusEntry make_cp2cp2() {
  CorpusEntry e;
  e.id = "cp2cp2_e_a";
  FlowModel m = build_flow_model(cp2cp2_algebra(), EulerClass{{Rational(1), Rational(0)}});
  m.name = e.id;
  m.provenance = "connected sum of two complex projective planes, Euler class a";
  e.model = std::move(m);
  e.expected = all_holds(2);
  return e;
}

CorpusEntry make_t4_bundle() {
  CorpusEntry e;
  e.id = "t4_bundle_e12";
  const GradedAlgebra a = exterior_algebra(4);
  std::vector<Rational> coords = euler_zero(a);
  coords[0] = Rational(1);  // x1x2
  FlowModel m = build_flow_model(a, EulerClass{coords});
  m.name = e.id;
  m.provenance = "circle bundle over the 4-torus with Euler class x1x2 (square zero)";
  e.model = std::move(m);
  e.expected = {
      {Property::THL, 0, Outcome::Fails},  {Property::THL, 1, Outcome::Fails},
      {Property::THL, 2, Outcome::Holds},  {Property::P1, 0, Outcome::Holds},
      {Property::P1, 1, Outcome::Holds},   {Property::P1, 2, Outcome::Fails},
      {Property::P2, 0, Outcome::Holds},   {Property::P2, 1, Outcome::Holds},
      {Property::P2, 2, Outcome::Fails},   {Property::HL, 0, Outcome::Fails},
      {Property::HL, 1, Outcome::Fails},   {Property::HL, 2, Outcome::Fails},
      {Property::Equivalence, 0, Outcome::Holds}, {Property::Equivalence, 1, Outcome::Holds},
      {Property::Equivalence, 2, Outcome::Holds}, {Property::Parity, -1, Outcome::Trivial},
  };
  return e;
}

CorpusEntry make_trivial(int m_gens) {
  CorpusEntry e;
  e.id = "trivial_t" + std::to_string(m_gens);
  const GradedAlgebra a = exterior_algebra(m_gens);
  FlowModel m = build_flow_model(a, EulerClass{euler_zero(a)});
  m.name = e.id;
  m.provenance = "trivial product flow over the " + std::to_string(m_gens) +
                 "-torus; the Euler class vanishes";
  e.model = std::move(m);
  if (m_gens == 2) {
    e.expected = {
        {Property::THL, 0, Outcome::Fails}, {Property::THL, 1, Outcome::Holds},
        {Property::P1, 0, Outcome::Holds},  {Property::P1, 1, Outcome::Fails},
        {Property::P2, 0, Outcome::Holds},  {Property::P2, 1, Outcome::Holds},
        {Property::HL, 0, Outcome::Fails},  {Property::HL, 1, Outcome::Holds},
        {Property::Equivalence, 0, Outcome::Holds}, {Property::Equivalence, 1, Outcome::Holds},
        {Property::Parity, -1, Outcome::Trivial},
    };
  } else {
    e.expected = {
        {Property::THL, 0, Outcome::Fails}, {Property::THL, 1, Outcome::Fails},
        {Property::THL, 2, Outcome::Holds}, {Property::P1, 0, Outcome::Holds},
        {Property::P1, 1, Outcome::Fails},  {Property::P1, 2, Outcome::Fails},
        {Property::P2, 0, Outcome::Holds},  {Property::P2, 1, Outcome::Holds},
        {Property::P2, 2, Outcome::Holds},  {Property::HL, 0, Outcome::Fails},
        {Property::HL, 1, Outcome::Fails},  {Property::HL, 2, Outcome::Holds},
        {Property::Equivalence, 0, Outcome::Holds}, {Property::Equivalence, 1, Outcome::Holds},
        {Property::Equivalence, 2, Outcome::Holds}, {Property::Parity, -1, Outcome::Trivial},
    };
  }
  return e;
}

CorpusEntry make_cp2_hopf() {
  CorpusEntry e;
  e.id = "cp2_hopf";
  FlowModel m = build_flow_model(cp2_algebra(), EulerClass{{Rational(1)}});
  m.name = e.id;
  m.provenance = "Hopf-type circle bundle over the complex projective plane (total space S^5)";
  e.model = std::move(m);
  e.expected = all_holds(2);
  return e;
}

CorpusEntry make_torus_symplectic(int m_gens) {
  CorpusEntry e;
  e.id = "t" + std::to_string(m_gens) + "_e_symp";
  const GradedAlgebra a = exterior_algebra(m_gens);
  // e = x1x2 + x3x4 + ... : consecutive index pairs.
  std::vector<Rational> coords = euler_zero(a);
  int pos = 0;
  for (int k = 0; k < a.dim(2); ++k) coords[static_cast<std::size_t>(k)] = Rational(0);
  for (int first = 1; first < m_gens; first += 2) {
    // locate the pair {first, first+1} among the lex-ordered 2-subsets
    int idx = 0;
    for (int x = 1; x <= m_gens; ++x)
      for (int y = x + 1; y <= m_gens; ++y) {
        if (x == first && y == first + 1) pos = idx;
        ++idx;
      }
    coords[static_cast<std::size_t>(pos)] = Rational(1);
  }
  FlowModel m = build_flow_model(a, EulerClass{coords});
  m.name = e.id;
  m.provenance = "integral-e family sample: " + std::to_string(m_gens) +
                 "-torus with the standard symplectic Euler class";
  e.model = std::move(m);
  e.expected = all_holds(m_gens / 2);
  return e;
}

}  // namespace

const std::vector<CorpusEntry>& bundled_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> out;
    out.push_back(make_cp2cp2());
    out.push_back(make_t4_bundle());
    out.push_back(make_trivial(2));
    out.push_back(make_trivial(4));
    out.push_back(make_cp2_hopf());
    out.push_back(make_torus_symplectic(4));
    out.push_back(make_torus_symplectic(6));
    return out;
  }();
  return corpus;
}

}  // namespace lefschetz
