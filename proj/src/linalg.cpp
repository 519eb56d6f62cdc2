#include "lefschetz/linalg.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace lefschetz {

namespace {

// Gauss-Jordan on `m`, optionally carrying an identity block to record the
// row transform.
void reduce(RationalMatrix& m, RationalMatrix* transform, std::vector<int>& pivots) {
  const int rows = m.rows(), cols = m.cols();
  int lead = 0;
  for (int c = 0; c < cols && lead < rows; ++c) {
    int pivot = -1;
    for (int r = lead; r < rows; ++r)
      if (!m.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != lead) {
      for (int k = 0; k < cols; ++k) std::swap(m.at(pivot, k), m.at(lead, k));
      if (transform)
        for (int k = 0; k < transform->cols(); ++k)
          std::swap(transform->at(pivot, k), transform->at(lead, k));
    }
    const Rational inv = Rational(1) / m.at(lead, c);
    for (int k = 0; k < cols; ++k) m.at(lead, k) *= inv;
    if (transform)
      for (int k = 0; k < transform->cols(); ++k) transform->at(lead, k) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == lead) continue;
      const Rational f = m.at(r, c);
      if (f.is_zero()) continue;
      for (int k = 0; k < cols; ++k) m.at(r, k) -= f * m.at(lead, k);
      if (transform)
        for (int k = 0; k < transform->cols(); ++k)
          transform->at(r, k) -= f * transform->at(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
}

}  // namespace

RrefResult rref_decompose(const RationalMatrix& m) {
  RrefResult out;
  out.rref = m;
  reduce(out.rref, nullptr, out.pivots);
  out.rank = static_cast<int>(out.pivots.size());
  return out;
}

RrefTransform rref_with_transform(const RationalMatrix& m) {
  RrefTransform out;
  out.rref = m;
  out.transform = RationalMatrix::identity(m.rows());
  reduce(out.rref, &out.transform, out.pivots);
  out.rank = static_cast<int>(out.pivots.size());
  return out;
}

int rank(const RationalMatrix& m) { return rref_decompose(m).rank; }

Rational det(const RationalMatrix& m) {
  assert(m.rows() == m.cols());
  const int n = m.rows();
  if (n == 0) return Rational(1);  // empty product
  RationalMatrix a = m;
  Rational result(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!a.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != c) {
      for (int k = c; k < n; ++k) std::swap(a.at(pivot, k), a.at(c, k));
      result = -result;
    }
    result *= a.at(c, c);
    const Rational inv = Rational(1) / a.at(c, c);
    for (int r = c + 1; r < n; ++r) {
      const Rational f = a.at(r, c) * inv;
      if (f.is_zero()) continue;
      for (int k = c; k < n; ++k) a.at(r, k) -= f * a.at(c, k);
    }
  }
  return result;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  assert(m.rows() == m.cols());
  auto rt = rref_with_transform(m);
  if (rt.rank != m.rows()) return std::nullopt;
  return rt.transform;
}

Subspace kernel(const RationalMatrix& m) {
  const auto rr = rref_decompose(m);
  const int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int p : rr.pivots) is_pivot[p] = true;

  RationalMatrix basis(cols, cols - rr.rank);
  int out_col = 0;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis.at(free, out_col) = Rational(1);
    for (int i = 0; i < rr.rank; ++i) basis.at(rr.pivots[i], out_col) = -rr.rref.at(i, free);
    ++out_col;
  }
  return {cols, std::move(basis)};
}

Subspace image(const RationalMatrix& m) {
  const auto rr = rref_decompose(m);
  return {m.rows(), m.columns(rr.pivots)};
}

Subspace quotient_representatives(int ambient_dim, const Subspace& u) {
  assert(u.ambient_dim == ambient_dim);
  const auto rr = rref_decompose(u.basis.transpose());
  std::vector<bool> is_pivot(ambient_dim, false);
  for (int p : rr.pivots) is_pivot[p] = true;
  RationalMatrix reps(ambient_dim, ambient_dim - rr.rank);
  int out_col = 0;
  for (int i = 0; i < ambient_dim; ++i)
    if (!is_pivot[i]) reps.at(i, out_col++) = Rational(1);
  return {ambient_dim, std::move(reps)};
}

bool contains(const Subspace& s, const std::vector<Rational>& v) {
  return solve(s.basis, v).has_value();
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim != b.ambient_dim) return false;
  if (a.dim() != b.dim()) return false;
  return rank(a.basis.hstack(b.basis)) == a.dim();
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  assert(static_cast<int>(b.size()) == a.rows());
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  const auto rr = rref_decompose(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return std::nullopt;  // 0 = 1 row
  std::vector<Rational> x(a.cols());
  for (int i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.rref.at(i, a.cols());
  return x;
}

RationalMatrix invertible_sandwich_solution(const RationalMatrix& p, const RationalMatrix& q,
                                            const RationalMatrix& r, int dim) {
  const auto q_rref = rref_decompose(q);
  const int rq = q_rref.rank;

  // The constraint only pins X on im(Q): X(Q e_c) must be a preimage of
  // R e_c under P, for the pivot columns c of Q.
  RationalMatrix u_cols = q.columns(q_rref.pivots);
  RationalMatrix r_cols = r.columns(q_rref.pivots);

  // Maximal independent subset of the target columns, greedily.
  std::vector<int> sel;
  {
    RationalMatrix acc(r.rows(), 0);
    for (int t = 0; t < rq; ++t) {
      RationalMatrix cand = acc.hstack(r_cols.columns({t}));
      if (rank(cand) > acc.cols()) {
        acc = std::move(cand);
        sel.push_back(t);
      }
    }
  }

  auto contract = [](bool ok) {
    if (!ok)
      throw std::logic_error(
          "invertible_sandwich_solution: system infeasible or rank inequality violated");
  };
  contract(rank(r) >= rank(p) + rq - dim);

  // Particular preimages of the selected targets; their P-images are
  // independent, so they are independent modulo ker P.
  RationalMatrix x_sel(dim, static_cast<int>(sel.size()));
  for (std::size_t i = 0; i < sel.size(); ++i) {
    auto x = solve(p, r_cols.column(sel[i]));
    contract(x.has_value());
    x_sel.set_column(static_cast<int>(i), *x);
  }
  const Subspace ker_p = kernel(p);

  RationalMatrix v_cols(dim, rq);
  {
    std::vector<bool> selected(static_cast<std::size_t>(rq), false);
    for (int t : sel) selected[static_cast<std::size_t>(t)] = true;
    int sel_pos = 0, spare = 0;
    const RationalMatrix decomp = x_sel.hstack(ker_p.basis);
    for (int t = 0; t < rq; ++t) {
      if (selected[static_cast<std::size_t>(t)]) {
        v_cols.set_column(t, x_sel.column(sel_pos++));
        continue;
      }
      // The remaining preimages lie in span(x_sel) + ker P; swapping their
      // ker-P part for a fresh kernel basis vector keeps all images
      // independent. The rank inequality guarantees enough spares.
      auto x = solve(p, r_cols.column(t));
      contract(x.has_value());
      auto y = solve(decomp, *x);
      contract(y.has_value());
      std::vector<Rational> v(static_cast<std::size_t>(dim));
      for (int c = 0; c < x_sel.cols(); ++c)
        if (!(*y)[static_cast<std::size_t>(c)].is_zero())
          for (int rr = 0; rr < dim; ++rr)
            v[static_cast<std::size_t>(rr)] += (*y)[static_cast<std::size_t>(c)] * x_sel.at(rr, c);
      for (int rr = 0; rr < dim; ++rr) v[static_cast<std::size_t>(rr)] += ker_p.basis.at(rr, spare);
      ++spare;
      v_cols.set_column(t, v);
    }
  }

  const RationalMatrix u_ext =
      u_cols.hstack(quotient_representatives(dim, Subspace{dim, u_cols}).basis);
  const RationalMatrix v_ext =
      v_cols.hstack(quotient_representatives(dim, Subspace{dim, v_cols}).basis);
  const auto u_inv = inverse(u_ext);
  contract(u_inv.has_value());
  return v_ext * *u_inv;
}

RationalMatrix AffineMatrixFamily::member(const std::vector<Rational>& t) const {
  assert(t.size() == directions.size());
  RationalMatrix m = base;
  for (std::size_t i = 0; i < directions.size(); ++i)
    if (!t[i].is_zero()) m = m + directions[i].scaled(t[i]);
  return m;
}

std::optional<AffineMatrixFamily> solve_affine_constraint(const RationalMatrix& constraint_rows,
                                                          const std::vector<Rational>& rhs,
                                                          int dim) {
  assert(constraint_rows.cols() == dim * dim);
  auto particular = solve(constraint_rows, rhs);
  if (!particular) return std::nullopt;

  auto unflatten = [dim](const std::vector<Rational>& v) {
    return RationalMatrix(dim, dim, v);
  };
  AffineMatrixFamily family;
  family.dim = dim;
  family.base = unflatten(*particular);
  const Subspace null = kernel(constraint_rows);
  family.directions.reserve(null.dim());
  for (int c = 0; c < null.dim(); ++c) family.directions.push_back(unflatten(null.basis.column(c)));
  return family;
}

InvertibleSearchResult find_invertible_member(const AffineMatrixFamily& family,
                                              const SearchPolicy& policy) {
  InvertibleSearchResult out;
  const int p = static_cast<int>(family.directions.size());

  auto try_point = [&](const std::vector<Rational>& t) -> bool {
    RationalMatrix m = family.member(t);
    if (det(m).is_zero()) return false;
    out.kind = InvertibleSearchResult::Kind::Found;
    out.witness = std::move(m);
    return true;
  };

  if (p == 0) {
    out.trials = 1;
    if (try_point({})) return out;
    out.kind = InvertibleSearchResult::Kind::NoneExists;
    return out;
  }

  // det(base + sum t_i D_i) has degree <= dim in each t_i, so vanishing on
  // the full grid {0..dim}^p certifies it vanishes identically.
  const std::uint64_t side = static_cast<std::uint64_t>(family.dim) + 1;
  std::uint64_t grid_total = 1;
  bool too_big = false;
  for (int i = 0; i < p; ++i) {
    if (grid_total > policy.grid_cap / side) {  // grid_total * side would exceed the cap
      too_big = true;
      break;
    }
    grid_total *= side;
  }

  if (!too_big) {
    std::vector<Rational> t(p, Rational(0));
    std::vector<std::uint64_t> digits(p, 0);
    for (std::uint64_t idx = 0; idx < grid_total; ++idx) {
      ++out.trials;
      if (try_point(t)) return out;
      for (int i = 0; i < p; ++i) {  // increment mixed-radix counter
        if (++digits[i] < side) {
          t[i] = Rational(static_cast<long>(digits[i]));
          break;
        }
        digits[i] = 0;
        t[i] = Rational(0);
      }
    }
    out.kind = InvertibleSearchResult::Kind::NoneExists;
    return out;
  }

  std::mt19937_64 rng(policy.seed);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  std::vector<Rational> t(p);
  for (std::uint32_t trial = 0; trial < policy.trial_budget; ++trial) {
    for (int i = 0; i < p; ++i) t[i] = Rational(dist(rng));
    ++out.trials;
    if (try_point(t)) return out;
  }
  out.kind = InvertibleSearchResult::Kind::Unknown;
  return out;
}

}  // namespace lefschetz
