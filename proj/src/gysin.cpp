#include "lefschetz/gysin.hpp"

#include <sstream>

namespace lefschetz {

namespace {

const RationalMatrix kEmpty{};

// ker(outgoing) == im(incoming), with the zero-map convention for boundary
// degrees baked into the matrix shapes.
ExactnessNode check_node(int degree, ExactnessNode::Kind kind, const RationalMatrix& incoming,
                         const RationalMatrix& outgoing) {
  ExactnessNode node;
  node.degree = degree;
  node.kind = kind;
  const Subspace ker = kernel(outgoing);
  const Subspace im = image(incoming);
  node.ker_dim = ker.dim();
  node.im_dim = im.dim();
  node.exact = subspace_equal(ker, im);
  if (!node.exact) {
    // Witness: a kernel vector outside the image, or an image vector outside
    // the kernel (one of the two must exist).
    for (int c = 0; c < ker.dim(); ++c) {
      auto v = ker.basis.column(c);
      if (!contains(im, v)) {
        node.defect = std::move(v);
        break;
      }
    }
    if (!node.defect) {
      for (int c = 0; c < im.dim(); ++c) {
        auto v = im.basis.column(c);
        if (!contains(ker, v)) {
          node.defect = std::move(v);
          break;
        }
      }
    }
  }
  return node;
}

}  // namespace

const RationalMatrix& FlowModel::iota_at(int k) const {
  if (k < 0 || k >= static_cast<int>(iota.size())) return kEmpty;
  return iota[static_cast<std::size_t>(k)];
}

const RationalMatrix& FlowModel::rho_at(int k) const {
  if (k < 0 || k >= static_cast<int>(rho.size())) return kEmpty;
  return rho[static_cast<std::size_t>(k)];
}

std::string ExactnessReport::first_defect() const {
  for (const auto& n : nodes) {
    if (n.exact) continue;
    std::ostringstream os;
    os << "inexact at the degree-" << n.degree << " ";
    switch (n.kind) {
      case ExactnessNode::Kind::Basic: os << "basic"; break;
      case ExactnessNode::Kind::Total: os << "total"; break;
      case ExactnessNode::Kind::Connecting: os << "connecting"; break;
    }
    os << " node (ker dim " << n.ker_dim << ", im dim " << n.im_dim << ")";
    return os.str();
  }
  return "";
}

FlowModel build_flow_model(const GradedAlgebra& a, const EulerClass& e) {
  const auto report = validate_algebra(a);
  if (!report.ok()) throw ModelError("invalid algebra: " + report.issues.front().detail);
  if (static_cast<int>(e.coords.size()) != a.dim(2))
    throw ModelError("euler class coordinates do not match dim H^2_B");

  FlowModel m;
  m.algebra = a;
  m.euler = e;
  const int top_total = 2 * a.n() + 1;
  m.total_dims.assign(static_cast<std::size_t>(top_total) + 1, 0);
  m.iota.resize(static_cast<std::size_t>(top_total) + 1);
  m.rho.resize(static_cast<std::size_t>(top_total) + 1);

  for (int k = 0; k <= top_total; ++k) {
    const RationalMatrix eps_in = m.epsilon(k - 1);  // H^{k-2}_B -> H^k_B
    const RationalMatrix eps_out = m.epsilon(k);     // H^{k-1}_B -> H^{k+1}_B
    const Subspace im_in = image(eps_in);
    const Subspace coker_reps = quotient_representatives(a.dim(k), im_in);
    const Subspace ker_out = kernel(eps_out);
    const int c = coker_reps.dim();
    const int d = ker_out.dim();
    m.total_dims[static_cast<std::size_t>(k)] = c + d;

    // iota_k: express x in the basis (im basis | reps), keep the reps block.
    RationalMatrix iota_k(c + d, a.dim(k));
    if (a.dim(k) > 0) {
      const RationalMatrix change = im_in.basis.hstack(coker_reps.basis);
      const auto inv = inverse(change);  // square by construction
      if (!inv) throw std::logic_error("internal error: cokernel basis change not invertible");
      for (int r = 0; r < c; ++r)
        for (int col = 0; col < a.dim(k); ++col) iota_k.at(r, col) = inv->at(im_in.dim() + r, col);
    }
    m.iota[static_cast<std::size_t>(k)] = std::move(iota_k);

    // rho_k: zero on the cokernel block, kernel basis inclusion on the rest.
    RationalMatrix rho_k(a.dim(k - 1), c + d);
    for (int col = 0; col < d; ++col)
      for (int r = 0; r < a.dim(k - 1); ++r) rho_k.at(r, c + col) = ker_out.basis.at(r, col);
    m.rho[static_cast<std::size_t>(k)] = std::move(rho_k);
  }

  const auto exact = check_exactness(m);
  if (!exact.all_exact())
    throw ModelError("constructed model failed exactness: " + exact.first_defect());
  m.exactness_verified = true;
  return m;
}

ExactnessReport check_exactness(const FlowModel& m) {
  ExactnessReport report;
  const int n = m.n();
  for (int k = -1; k <= 2 * n + 2; ++k) {
    // Basic node H^k_B: im eps_{k-1} = ker iota_k.
    report.nodes.push_back(
        check_node(k, ExactnessNode::Kind::Basic, m.epsilon(k - 1), m.iota_at(k)));
    // Total node H^k_M: im iota_k = ker rho_k.
    report.nodes.push_back(check_node(k, ExactnessNode::Kind::Total, m.iota_at(k), m.rho_at(k)));
    // Connecting node H^k_B as the target of rho_{k+1}: im rho_{k+1} = ker eps_{k+1}.
    report.nodes.push_back(
        check_node(k, ExactnessNode::Kind::Connecting, m.rho_at(k + 1), m.epsilon(k + 1)));
  }
  return report;
}

}  // namespace lefschetz
