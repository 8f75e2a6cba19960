#ifndef BRAIDREP_EXTRACT_HPP_
#define BRAIDREP_EXTRACT_HPP_

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "braidrep/braid.hpp"
#include "braidrep/construct.hpp"
#include "braidrep/error.hpp"
#include "braidrep/fivetuple.hpp"
#include "braidrep/linalg.hpp"
#include "braidrep/tolerances.hpp"

namespace braidrep {

/// Spectral decomposition of the family psi_k psi_k^H. points[i] is the label
/// (cluster index per generator) of the joint eigenspace spanned by
/// fiber_bases[i]; labels are sorted lexicographically.
struct SpectralData {
  std::vector<CMatrix> positive;
  std::vector<std::vector<linalg::EigenCluster>> clusters;
  linalg::JointEigenStructure joint;
  std::vector<std::vector<int>> points;
  std::vector<CMatrix> fiber_bases;
  std::vector<std::string> warnings;

  Complex lambda(int k, std::size_t point) const {
    return joint.operator_eigenvalues[static_cast<std::size_t>(k)]
                                     [static_cast<std::size_t>(points[point][static_cast<std::size_t>(k)])];
  }

  /// Orthogonal projection onto the l-th eigenspace of psi_k psi_k^H.
  CMatrix projection(int k, int l) const {
    const auto& b = clusters[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)].basis;
    return b * b.adjoint();
  }
};

/// Checks commutativity of psi_k psi_k^H (condition (2)) before requiring
/// at least two eigenvalue clusters per operator (condition (1)).
inline SpectralData spectral_decomposition(const Representation& rep, const Tolerances& tol = {},
                                           std::span<const int> seed_order = {}) {
  validate_representation(rep, tol.inv);
  SpectralData s;
  for (const auto& g : rep.generators) s.positive.push_back(g * g.adjoint());
  const auto g = s.positive.size();
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = i + 1; j < g; ++j) {
      const double r = linalg::relative_commutator(s.positive[i], s.positive[j]);
      if (r > tol.comm) {
        throw Error(ErrorKind::NotCommuting,
                    "condition (2): psi_" + std::to_string(i + 1) + " psi_" + std::to_string(i + 1) + "^H and psi_" +
                        std::to_string(j + 1) + " psi_" + std::to_string(j + 1) +
                        "^H do not commute (relative commutator " + std::to_string(r) + ")",
                    {static_cast<long>(i + 1), static_cast<long>(j + 1)}, r);
      }
    }
  }
  for (std::size_t k = 0; k < g; ++k) {
    auto clusters = linalg::hermitian_eig(s.positive[k], tol.cluster, tol.herm);
    if (clusters.size() < 2) {
      throw Error(ErrorKind::ScalarOperator,
                  "condition (1): scalar operator psi_" + std::to_string(k + 1) + " psi_" + std::to_string(k + 1) + "^H",
                  {static_cast<long>(k + 1)});
    }
    // Gaps that only just clear the clustering threshold are reported.
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (s.positive[k] + s.positive[k].adjoint()),
                                                  Eigen::EigenvaluesOnly);
    const auto& v = solver.eigenvalues();
    const double thr = tol.cluster * std::max(1.0, v.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 1; i < v.size(); ++i) {
      const double gap = v(i) - v(i - 1);
      if (gap > thr && gap <= 10.0 * thr) {
        s.warnings.push_back("near-degenerate eigenvalues of psi_" + std::to_string(k + 1) + " psi_" +
                             std::to_string(k + 1) + "^H: gap " + std::to_string(gap));
      }
    }
    s.clusters.push_back(std::move(clusters));
  }
  s.joint = linalg::joint_eigenspaces(s.positive, tol.cluster, tol.comm, seed_order, tol.herm);
  s.points = s.joint.labels;
  s.fiber_bases = s.joint.bases;
  return s;
}

/// Image of P_{j,l} under conjugation by psi_k, as a set of points.
struct ConjugationImage {
  int k = 0;  // 0-based generator indices
  int j = 0;
  int l = 0;
  std::vector<std::size_t> points;
};

struct ClosureReport {
  ValidationReport report;
  std::vector<ConjugationImage> images;
};

/// For all k, j, l: Q = psi_k P_{j,l} psi_k^{-1} must act as 0 or as the
/// identity on every joint eigenspace. The residual per (Q, x) is
/// min(||Q B_x||, ||Q B_x - B_x||) / sqrt(nu(x)).
inline ClosureReport check_conjugation_closure(const Representation& rep, const SpectralData& s,
                                               const Tolerances& tol = {}) {
  ClosureReport out{{"conjugation_closure", true, 0.0, tol.match, {}}, {}};
  const auto g = static_cast<int>(rep.generators.size());
  for (int k = 0; k < g; ++k) {
    const CMatrix& psi = rep.generators[static_cast<std::size_t>(k)];
    const CMatrix psi_inv = psi.inverse();
    for (int j = 0; j < g; ++j) {
      const int nl = static_cast<int>(s.clusters[static_cast<std::size_t>(j)].size());
      for (int l = 0; l < nl; ++l) {
        const CMatrix q = psi * s.projection(j, l) * psi_inv;
        ConjugationImage img{k, j, l, {}};
        for (std::size_t x = 0; x < s.points.size(); ++x) {
          const CMatrix& b = s.fiber_bases[x];
          const CMatrix qb = q * b;
          const double zero = qb.norm();
          const double one = (qb - b).norm();
          const double res = std::min(zero, one) / std::sqrt(static_cast<double>(b.cols()));
          out.report.record(res, {k + 1, static_cast<long>(x),
                                  "condition (3): psi_" + std::to_string(k + 1) + " P_{" + std::to_string(j + 1) +
                                      "," + std::to_string(l) + "} psi_" + std::to_string(k + 1) +
                                      "^-1 is not a projection in N"});
          if (one < zero) img.points.push_back(x);
        }
        out.images.push_back(std::move(img));
      }
    }
  }
  return out;
}

/// pi_k(x) = the point x' with psi_k B_x B_x^H psi_k^{-1} = B_x' B_x'^H.
inline std::vector<Permutation> derive_action(const Representation& rep, const SpectralData& s,
                                              const Tolerances& tol = {}) {
  const auto np = s.points.size();
  std::vector<CMatrix> proj;
  for (const auto& b : s.fiber_bases) proj.push_back(b * b.adjoint());
  std::vector<Permutation> action;
  for (std::size_t k = 0; k < rep.generators.size(); ++k) {
    const CMatrix& psi = rep.generators[k];
    const CMatrix psi_inv = psi.inverse();
    Permutation p(np);
    std::vector<bool> hit(np, false);
    for (std::size_t x = 0; x < np; ++x) {
      const CMatrix c = psi * proj[x] * psi_inv;
      std::size_t best = np;
      double best_d = tol.match;
      for (std::size_t y = 0; y < np; ++y) {
        if (s.fiber_bases[y].cols() != s.fiber_bases[x].cols()) continue;
        const double d = (c - proj[y]).norm();
        if (d < best_d) {
          best_d = d;
          best = y;
        }
      }
      if (best == np) {
        throw Error(ErrorKind::NoMatch,
                    "condition (3): conjugated fiber projection of point " + std::to_string(x) + " under psi_" +
                        std::to_string(k + 1) + " matches no point",
                    {static_cast<long>(k + 1), static_cast<long>(x)});
      }
      if (hit[best]) {
        throw Error(ErrorKind::NotPermutation, "derived action of generator " + std::to_string(k + 1) + " is not injective",
                    {static_cast<long>(k + 1), static_cast<long>(best)});
      }
      hit[best] = true;
      p[x] = best;
    }
    action.push_back(std::move(p));
  }
  FiveTuple probe;
  probe.n = rep.n;
  probe.action = action;
  probe.points = s.points;
  const auto rel = check_action_braid_relations(probe);
  if (!rel.pass) {
    throw Error(ErrorKind::NotPermutation, "derived action violates " + rel.witnesses.front().detail,
                {rel.witnesses.front().generator, rel.witnesses.front().point});
  }
  return action;
}

struct CocycleExtraction {
  std::vector<std::map<std::size_t, CMatrix>> blocks;
  /// U U^H against lambda_{k, (pi_k y)_k} I, relative.
  ValidationReport lambda_check;
};

/// U(tau_k, y) = B_{pi_k y}^H psi_k B_y.
inline CocycleExtraction extract_cocycle(const Representation& rep, const SpectralData& s,
                                         const std::vector<Permutation>& action, const Tolerances& tol = {}) {
  CocycleExtraction out;
  out.lambda_check = {"cocycle_scalar", true, 0.0, tol.equiv, {}};
  for (std::size_t k = 0; k < rep.generators.size(); ++k) {
    std::map<std::size_t, CMatrix> blocks;
    for (std::size_t y = 0; y < s.points.size(); ++y) {
      const auto x = action[k][y];
      const CMatrix& by = s.fiber_bases[y];
      const CMatrix& bx = s.fiber_bases[x];
      if (bx.cols() != by.cols()) {
        throw Error(ErrorKind::NonSquareBlock,
                    "fiber dimension changes along pi_" + std::to_string(k + 1),
                    {static_cast<long>(k + 1), static_cast<long>(y)});
      }
      CMatrix u = bx.adjoint() * rep.generators[k] * by;
      const Complex lam = s.lambda(static_cast<int>(k), x);
      const CMatrix uu = u * u.adjoint();
      const double res = (uu - lam * CMatrix::Identity(uu.rows(), uu.cols())).norm() /
                         (std::abs(lam) * std::sqrt(static_cast<double>(uu.rows())));
      out.lambda_check.record(res, {static_cast<int>(k + 1), static_cast<long>(y), "U U^H != lambda I"});
      blocks.emplace(y, std::move(u));
    }
    out.blocks.push_back(std::move(blocks));
  }
  return out;
}

struct Parametrization {
  FiveTuple tuple;
  SpectralData spectral;
  ClosureReport closure;
  ValidationReport lambda_check;
  /// Columns are the fiber bases in layout order: psi_k W = W phi_k.
  CMatrix change_of_basis;
  double equivalence_residual = 0.0;
  std::vector<std::string> warnings;
};

/// Full pipeline: conditions (2), (1), (3), action, cocycle, then a rebuild
/// checked against the input through the change of basis.
inline Parametrization parametrize(const Representation& rep, const Tolerances& tol = {},
                                   std::span<const int> seed_order = {}) {
  detail::require_relations(rep, tol.rel);
  Parametrization out;
  out.spectral = spectral_decomposition(rep, tol, seed_order);
  out.warnings = out.spectral.warnings;
  out.closure = check_conjugation_closure(rep, out.spectral, tol);
  if (!out.closure.report.pass) {
    const auto& w = out.closure.report.witnesses.front();
    throw Error(ErrorKind::ClosureFailed, w.detail + " (residual " + std::to_string(out.closure.report.worst_residual) + ")",
                {w.generator, w.point}, out.closure.report.worst_residual);
  }
  const auto action = derive_action(rep, out.spectral, tol);
  auto cocycle = extract_cocycle(rep, out.spectral, action, tol);
  out.lambda_check = cocycle.lambda_check;
  if (!out.lambda_check.pass) {
    out.warnings.push_back("extracted U U^H deviates from lambda I by " + std::to_string(out.lambda_check.worst_residual));
  }

  auto& t = out.tuple;
  t.n = rep.n;
  t.points = out.spectral.points;
  t.mu.assign(t.points.size(), 1.0);
  for (const auto& b : out.spectral.fiber_bases) t.nu.push_back(static_cast<int>(b.cols()));
  t.action = action;
  t.derive_inverses();
  t.cocycle = std::move(cocycle.blocks);

  const Representation rebuilt = build_representation(t, tol.validate);
  const auto& layout = rebuilt.provenance->layout;
  out.change_of_basis = CMatrix(rep.dim, rep.dim);
  for (auto x : layout.point_order) {
    const auto& b = out.spectral.fiber_bases[x];
    out.change_of_basis.middleCols(layout.offsets.at(x), b.cols()) = b;
  }
  for (std::size_t k = 0; k < rep.generators.size(); ++k) {
    const CMatrix& psi = rep.generators[k];
    const double r = (psi * out.change_of_basis - out.change_of_basis * rebuilt.generators[k]).norm() /
                     std::max(psi.norm(), 1.0);
    out.equivalence_residual = std::max(out.equivalence_residual, r);
  }
  if (out.equivalence_residual > tol.equiv) {
    out.warnings.push_back("round-trip equivalence residual " + std::to_string(out.equivalence_residual) +
                           " exceeds tolerance");
  }
  return out;
}

/// Compression k -> P^H psi_k P onto an invariant subspace of a
/// representation with self-adjoint generators.
inline Representation restrict_to_invariant_subspace(const Representation& rep, const CMatrix& subspace,
                                                     const Tolerances& tol = {}) {
  validate_representation(rep, tol.inv);
  if (subspace.rows() != rep.dim || subspace.cols() < 1 || subspace.cols() > rep.dim) {
    throw Error(ErrorKind::DimensionMismatch, "subspace must have dim rows and at least one column");
  }
  const auto m = subspace.cols();
  if ((subspace.adjoint() * subspace - CMatrix::Identity(m, m)).norm() > tol.orth * std::sqrt(static_cast<double>(m)) * 10) {
    throw Error(ErrorKind::InvalidParameter, "subspace columns are not orthonormal");
  }
  for (std::size_t k = 0; k < rep.generators.size(); ++k) {
    const double h = linalg::hermitian_defect(rep.generators[k]);
    if (h > tol.subspace) {
      throw Error(ErrorKind::NotSelfAdjoint, "psi_" + std::to_string(k + 1) + " is not self-adjoint",
                  {static_cast<long>(k + 1)}, h);
    }
  }
  const CMatrix comp = CMatrix::Identity(rep.dim, rep.dim) - subspace * subspace.adjoint();
  Representation out;
  out.n = rep.n;
  out.dim = static_cast<int>(m);
  for (std::size_t k = 0; k < rep.generators.size(); ++k) {
    const CMatrix& psi = rep.generators[k];
    const double leak = (comp * psi * subspace).norm() / std::max(psi.norm(), 1.0);
    if (leak > tol.subspace) {
      throw Error(ErrorKind::NotInvariant, "subspace is not invariant under psi_" + std::to_string(k + 1),
                  {static_cast<long>(k + 1)}, leak);
    }
    out.generators.push_back(subspace.adjoint() * psi * subspace);
  }
  return out;
}

/// Outcome of comparing the parametrization of a compressed representation
/// with that of its parent: every sub-fiber (mapped back through the
/// subspace) must lie in one parent fiber, and the sub-fiber dimensions
/// collected in a parent fiber must not exceed it.
struct SubspacePrediction {
  Parametrization parent;
  Parametrization child;
  std::vector<std::size_t> parent_of;  // child point -> parent point
  bool points_nested = true;
  bool nu_bounded = true;
  double worst_residual = 0.0;
};

inline SubspacePrediction check_subspace_prediction(const Representation& rep, const CMatrix& subspace,
                                                    const Tolerances& tol = {}) {
  SubspacePrediction out;
  const Representation child = restrict_to_invariant_subspace(rep, subspace, tol);
  out.parent = parametrize(rep, tol);
  out.child = parametrize(child, tol);
  const auto& pb = out.parent.spectral.fiber_bases;
  std::vector<int> used(pb.size(), 0);
  for (const auto& cb : out.child.spectral.fiber_bases) {
    const CMatrix ambient = subspace * cb;
    std::size_t best = pb.size();
    double best_r = 1e300;
    for (std::size_t x = 0; x < pb.size(); ++x) {
      const double r = (ambient - pb[x] * (pb[x].adjoint() * ambient)).norm() /
                       std::sqrt(static_cast<double>(ambient.cols()));
      if (r < best_r) {
        best_r = r;
        best = x;
      }
    }
    out.worst_residual = std::max(out.worst_residual, best_r);
    if (best_r > tol.match) out.points_nested = false;
    out.parent_of.push_back(best);
    used[best] += static_cast<int>(cb.cols());
  }
  for (std::size_t x = 0; x < pb.size(); ++x) {
    if (used[x] > pb[x].cols()) out.nu_bounded = false;
  }
  return out;
}

}  // namespace braidrep

#endif  // BRAIDREP_EXTRACT_HPP_
