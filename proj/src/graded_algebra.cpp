#include "lefschetz/graded_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lefschetz {

namespace {

std::string triple_str(const GradedAlgebra& a, int d1, int i, int d2, int j) {
  std::ostringstream os;
  os << a.label(d1, i) << " (deg " << d1 << ") * " << a.label(d2, j) << " (deg " << d2 << ")";
  return os.str();
}

std::vector<Rational> coords_or_zero(const GradedAlgebra& a, int d1, int i, int d2, int j) {
  const int target = d1 + d2;
  const auto* v = a.product(d1, i, d2, j);
  if (v) return *v;
  return std::vector<Rational>(static_cast<std::size_t>(a.dim(target)));
}

}  // namespace

const std::vector<Rational>* GradedAlgebra::product(int d1, int i, int d2, int j) const {
  auto it = products_.find(key(d1, i, d2, j));
  return it == products_.end() ? nullptr : &it->second;
}

void GradedAlgebra::set_product(int d1, int i, int d2, int j, std::vector<Rational> coeffs) {
  products_[key(d1, i, d2, j)] = std::move(coeffs);
}

std::vector<GradedAlgebra::ProductEntry> GradedAlgebra::sorted_products() const {
  std::vector<ProductEntry> out;
  out.reserve(products_.size());
  for (const auto& [k, v] : products_) {
    ProductEntry e;
    e.d1 = static_cast<int>((k >> 48) & 0xffff);
    e.i = static_cast<int>((k >> 32) & 0xffff);
    e.d2 = static_cast<int>((k >> 16) & 0xffff);
    e.j = static_cast<int>(k & 0xffff);
    e.coeffs = v;
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const ProductEntry& a, const ProductEntry& b) {
    return std::tie(a.d1, a.i, a.d2, a.j) < std::tie(b.d1, b.i, b.d2, b.j);
  });
  return out;
}

AlgebraBuilder::AlgebraBuilder(int n, std::vector<int> dims,
                               std::vector<std::vector<std::string>> labels) {
  if (n < 0) throw std::invalid_argument("negative n");
  if (static_cast<int>(dims.size()) != 2 * n + 1 || dims.size() != labels.size())
    throw std::invalid_argument("dims/labels must cover degrees 0..2n");
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (static_cast<int>(labels[k].size()) != dims[k])
      throw std::invalid_argument("label count mismatch in degree " + std::to_string(k));
  GradedVectorSpace space{2 * n, std::move(dims), std::move(labels)};
  algebra_ = GradedAlgebra(n, std::move(space));
  // Unit row: basis(0,0) is the two-sided unit.
  if (algebra_.dim(0) >= 1) {
    for (int k = 0; k <= 2 * n; ++k)
      for (int j = 0; j < algebra_.dim(k); ++j) {
        std::vector<Rational> e(static_cast<std::size_t>(algebra_.dim(k)));
        e[static_cast<std::size_t>(j)] = Rational(1);
        algebra_.set_product(0, 0, k, j, e);
        if (k != 0 || j != 0) algebra_.set_product(k, j, 0, 0, std::move(e));
      }
  }
}

AlgebraBuilder& AlgebraBuilder::set_product(int d1, int i, int d2, int j,
                                            std::vector<Rational> coeffs) {
  if (d1 + d2 > algebra_.top_degree()) return *this;
  const int sign = (d1 % 2 != 0 && d2 % 2 != 0) ? -1 : 1;
  std::vector<Rational> mirror = coeffs;
  if (sign < 0)
    for (auto& c : mirror) c = -c;
  algebra_.set_product(d1, i, d2, j, std::move(coeffs));
  if (d1 != d2 || i != j) algebra_.set_product(d2, j, d1, i, std::move(mirror));
  return *this;
}

AlgebraBuilder& AlgebraBuilder::set_product_raw(int d1, int i, int d2, int j,
                                                std::vector<Rational> coeffs) {
  algebra_.set_product(d1, i, d2, j, std::move(coeffs));
  return *this;
}

GradedAlgebra AlgebraBuilder::build() { return algebra_; }

ValidationReport validate_algebra(const GradedAlgebra& a) {
  ValidationReport report;
  const int top = a.top_degree();

  if (a.dim(0) < 1) {
    report.issues.push_back({ValidationIssue::Kind::Unit, "degree 0 is empty, no unit"});
    return report;
  }

  // Stored entries must have consistent shape and respect the degree bound.
  for (const auto& entry : a.sorted_products()) {
    if (entry.d1 < 0 || entry.d1 > top || entry.d2 < 0 || entry.d2 > top ||
        entry.i >= a.dim(entry.d1) || entry.j >= a.dim(entry.d2)) {
      report.issues.push_back({ValidationIssue::Kind::Structure, "product entry out of range"});
      continue;
    }
    const int target = entry.d1 + entry.d2;
    if (target > top) {
      bool nonzero = false;
      for (const auto& c : entry.coeffs) nonzero = nonzero || !c.is_zero();
      if (nonzero || !entry.coeffs.empty())
        report.issues.push_back({ValidationIssue::Kind::DegreeBound,
                                 "product above degree " + std::to_string(top) + ": " +
                                     triple_str(a, entry.d1, entry.i, entry.d2, entry.j)});
      continue;
    }
    if (static_cast<int>(entry.coeffs.size()) != a.dim(target))
      report.issues.push_back({ValidationIssue::Kind::Structure,
                               "coefficient vector length mismatch for " +
                                   triple_str(a, entry.d1, entry.i, entry.d2, entry.j)});
  }
  if (!report.ok()) return report;  // shape errors make the axiom checks unreliable

  // Unit axiom: basis(0,0) * x = x * basis(0,0) = x.
  for (int k = 0; k <= top; ++k)
    for (int j = 0; j < a.dim(k); ++j) {
      std::vector<Rational> e(static_cast<std::size_t>(a.dim(k)));
      e[static_cast<std::size_t>(j)] = Rational(1);
      if (coords_or_zero(a, 0, 0, k, j) != e)
        report.issues.push_back(
            {ValidationIssue::Kind::Unit, "unit * " + a.label(k, j) + " != " + a.label(k, j)});
      if (coords_or_zero(a, k, j, 0, 0) != e)
        report.issues.push_back(
            {ValidationIssue::Kind::Unit, a.label(k, j) + " * unit != " + a.label(k, j)});
    }

  // Graded commutativity: x*y = (-1)^(kl) y*x.
  for (int d1 = 0; d1 <= top; ++d1)
    for (int d2 = d1; d1 + d2 <= top; ++d2)
      for (int i = 0; i < a.dim(d1); ++i)
        for (int j = 0; j < a.dim(d2); ++j) {
          if (d1 == d2 && j < i) continue;
          auto xy = coords_or_zero(a, d1, i, d2, j);
          auto yx = coords_or_zero(a, d2, j, d1, i);
          const bool flip = (d1 % 2 != 0) && (d2 % 2 != 0);
          if (flip)
            for (auto& c : yx) c = -c;
          if (xy != yx)
            report.issues.push_back({ValidationIssue::Kind::GradedCommutativity,
                                     triple_str(a, d1, i, d2, j) + " violates x*y = (-1)^(kl) y*x"});
        }

  // Associativity on basis triples with total degree <= 2n.
  for (int d1 = 0; d1 <= top; ++d1)
    for (int d2 = 0; d1 + d2 <= top; ++d2)
      for (int d3 = 0; d1 + d2 + d3 <= top; ++d3)
        for (int i = 0; i < a.dim(d1); ++i)
          for (int j = 0; j < a.dim(d2); ++j)
            for (int l = 0; l < a.dim(d3); ++l) {
              AlgebraElement x{d1, {}}, y{d2, {}}, z{d3, {}};
              x.coords.assign(static_cast<std::size_t>(a.dim(d1)), Rational(0));
              y.coords.assign(static_cast<std::size_t>(a.dim(d2)), Rational(0));
              z.coords.assign(static_cast<std::size_t>(a.dim(d3)), Rational(0));
              x.coords[static_cast<std::size_t>(i)] = Rational(1);
              y.coords[static_cast<std::size_t>(j)] = Rational(1);
              z.coords[static_cast<std::size_t>(l)] = Rational(1);
              const auto left = multiply(a, multiply(a, x, y), z);
              const auto right = multiply(a, x, multiply(a, y, z));
              if (left.coords != right.coords) {
                std::ostringstream os;
                os << "(" << a.label(d1, i) << " * " << a.label(d2, j) << ") * " << a.label(d3, l)
                   << " != " << a.label(d1, i) << " * (" << a.label(d2, j) << " * "
                   << a.label(d3, l) << ")";
                report.issues.push_back({ValidationIssue::Kind::Associativity, os.str()});
              }
            }

  return report;
}

AlgebraElement multiply(const GradedAlgebra& a, const AlgebraElement& x, const AlgebraElement& y) {
  if (static_cast<int>(x.coords.size()) != a.dim(x.degree) ||
      static_cast<int>(y.coords.size()) != a.dim(y.degree))
    throw std::invalid_argument("element coordinates do not match the algebra dimensions");
  AlgebraElement out;
  out.degree = x.degree + y.degree;
  out.coords.assign(static_cast<std::size_t>(a.dim(out.degree)), Rational(0));
  if (out.coords.empty()) return out;
  for (int i = 0; i < static_cast<int>(x.coords.size()); ++i) {
    if (x.coords[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < static_cast<int>(y.coords.size()); ++j) {
      if (y.coords[static_cast<std::size_t>(j)].is_zero()) continue;
      const auto* table = a.product(x.degree, i, y.degree, j);
      if (!table) continue;
      const Rational f = x.coords[static_cast<std::size_t>(i)] * y.coords[static_cast<std::size_t>(j)];
      for (std::size_t t = 0; t < out.coords.size(); ++t)
        if (!(*table)[t].is_zero()) out.coords[t] += f * (*table)[t];
    }
  }
  return out;
}

RationalMatrix lefschetz_matrix(const GradedAlgebra& a, const EulerClass& e, int k, int power) {
  if (power < 0) throw std::invalid_argument("negative Lefschetz power");
  if (power == 0) return RationalMatrix::identity(a.dim(k));
  const int target = k + 2 * power;
  RationalMatrix m(a.dim(target), a.dim(k));

  AlgebraElement e_pow{2, e.coords};
  AlgebraElement e_elt{2, e.coords};
  for (int i = 1; i < power; ++i) e_pow = multiply(a, e_pow, e_elt);

  for (int j = 0; j < a.dim(k); ++j) {
    AlgebraElement basis{k, std::vector<Rational>(static_cast<std::size_t>(a.dim(k)))};
    basis.coords[static_cast<std::size_t>(j)] = Rational(1);
    const auto prod = multiply(a, basis, e_pow);
    m.set_column(j, prod.coords);
  }
  return m;
}

bool PairingData::nonsingular_everywhere() const {
  for (const auto& m : matrices) {
    if (m.rows() != m.cols()) return false;
    if (rank(m) != m.rows()) return false;
  }
  return true;
}

std::optional<PairingData> build_pairing(const GradedAlgebra& a) {
  const int top = a.top_degree();
  if (a.dim(top) != 1) return std::nullopt;
  PairingData pd;
  pd.matrices.reserve(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) {
    RationalMatrix m(a.dim(k), a.dim(top - k));
    for (int i = 0; i < a.dim(k); ++i)
      for (int j = 0; j < a.dim(top - k); ++j) {
        const auto* v = a.product(k, i, top - k, j);
        if (v) m.at(i, j) = (*v)[0];
      }
    pd.matrices.push_back(std::move(m));
  }
  return pd;
}

}  // namespace lefschetz
