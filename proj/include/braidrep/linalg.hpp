#ifndef BRAIDREP_LINALG_HPP_
#define BRAIDREP_LINALG_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "braidrep/error.hpp"
#include "braidrep/tolerances.hpp"

namespace braidrep {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

namespace linalg {

/// One eigenvalue cluster of a Hermitian matrix: representative value,
/// multiplicity and an orthonormal eigenspace basis (columns).
struct EigenCluster {
  Complex value;
  int multiplicity = 0;
  CMatrix basis;
};

/// Simultaneous eigenspaces of a commuting Hermitian family. `labels[s][j]` is
/// the cluster index (into `operator_eigenvalues[j]`) of operator j on
/// subspace s; `bases[s]` is an orthonormal basis of that subspace.
struct JointEigenStructure {
  std::vector<std::vector<int>> labels;
  std::vector<CMatrix> bases;
  std::vector<std::vector<Complex>> operator_eigenvalues;
};

struct RadicalInfo {
  int radical_dim = 0;
  int semisimple_quotient_dim = 0;
  double closure_residual = 0.0;
};

inline bool all_finite(const CMatrix& a) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (!std::isfinite(a.data()[i].real()) || !std::isfinite(a.data()[i].imag())) return false;
  }
  return true;
}

inline void require_square(const CMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " must be a non-empty square matrix, got " +
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

inline void require_same_square(std::span<const CMatrix> family, const char* what) {
  if (family.empty()) return;
  const auto d = family.front().rows();
  for (const auto& m : family) {
    require_square(m, what);
    if (m.rows() != d) {
      throw Error(ErrorKind::DimensionMismatch, std::string(what) + " matrices differ in size");
    }
  }
}

inline CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

inline double relative_commutator(const CMatrix& a, const CMatrix& b) {
  const double scale = a.norm() * b.norm();
  const double c = commutator(a, b).norm();
  return scale > 0.0 ? c / scale : c;
}

inline double hermitian_defect(const CMatrix& a) {
  const double n = a.norm();
  const double d = (a - a.adjoint()).norm();
  return n > 0.0 ? d / n : d;
}

inline Eigen::VectorXd singular_values(const CMatrix& a) {
  Eigen::BDCSVD<CMatrix> svd(a);
  return svd.singularValues();
}

/// Ratio s_min / s_max; 0 for singular or empty matrices.
inline double inverse_condition(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  const Eigen::VectorXd s = singular_values(a);
  if (s(0) <= 0.0) return 0.0;
  return s(s.size() - 1) / s(0);
}

/// Orthonormal basis (columns) of the null space of `m`. Singular values at or
/// below eps_null * s_max count as zero.
inline CMatrix null_space(const CMatrix& m, double eps_null = 1e-10) {
  const auto cols = m.cols();
  if (m.rows() == 0) return CMatrix::Identity(cols, cols);
  Eigen::BDCSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double smax = s.size() > 0 ? s(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > eps_null * smax && s(i) > 0.0) ++rank;
  }
  return svd.matrixV().rightCols(cols - rank);
}

/// Gram-Schmidt (two passes) of `v` against the orthonormal columns of
/// `basis`; returns the residual vector.
inline CVector orthogonalize(const CMatrix& basis, CVector v) {
  if (basis.cols() == 0) return v;
  for (int pass = 0; pass < 2; ++pass) v -= basis * (basis.adjoint() * v);
  return v;
}

/// Deterministic orthonormal basis of range(q): project standard basis vectors
/// e_i (in `seed_order`, default 0..d-1) onto the range and orthonormalize,
/// discarding near-zero residuals.
inline CMatrix projected_standard_basis(const CMatrix& q, std::span<const int> seed_order = {}) {
  const auto d = q.rows();
  const auto r = q.cols();
  if (r == 0) return CMatrix(d, 0);
  std::vector<int> order(static_cast<std::size_t>(d));
  if (seed_order.empty()) {
    std::iota(order.begin(), order.end(), 0);
  } else {
    order.assign(seed_order.begin(), seed_order.end());
  }
  CMatrix acc(d, r);
  Eigen::Index count = 0;
  for (int i : order) {
    if (count == r) break;
    CVector v = q * q.row(i).adjoint();
    v = orthogonalize(acc.leftCols(count), v);
    v = q * (q.adjoint() * v);
    v = orthogonalize(acc.leftCols(count), v);
    const double nv = v.norm();
    if (nv > 1e-6) {
      acc.col(count++) = v / nv;
    }
  }
  if (count < r) {
    // Degenerate seeds: complete with the columns of q itself.
    for (Eigen::Index c = 0; c < r && count < r; ++c) {
      CVector v = orthogonalize(acc.leftCols(count), q.col(c));
      const double nv = v.norm();
      if (nv > 1e-8) acc.col(count++) = v / nv;
    }
  }
  return acc.leftCols(count);
}

/// Eigenvalue clusters of a Hermitian matrix, sorted by descending value.
/// Consecutive eigenvalues whose gap is at most eps_cluster * max(1, |lambda|max)
/// are merged.
inline std::vector<EigenCluster> hermitian_eig(const CMatrix& a, double eps_cluster = 1e-8,
                                               double eps_herm = 1e-10) {
  require_square(a, "hermitian_eig input");
  const double defect = hermitian_defect(a);
  if (defect > eps_herm) {
    throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian", {}, defect);
  }
  const CMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  const Eigen::VectorXd& vals = solver.eigenvalues();  // ascending
  const CMatrix& vecs = solver.eigenvectors();
  const auto d = vals.size();
  const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
  const double gap = eps_cluster * scale;

  std::vector<EigenCluster> clusters;
  Eigen::Index hi = d - 1;
  while (hi >= 0) {
    Eigen::Index lo = hi;
    while (lo - 1 >= 0 && vals(lo) - vals(lo - 1) <= gap) --lo;
    EigenCluster c;
    const auto m = hi - lo + 1;
    c.multiplicity = static_cast<int>(m);
    c.value = Complex(vals.segment(lo, m).mean(), 0.0);
    c.basis = vecs.middleCols(lo, m);
    clusters.push_back(std::move(c));
    hi = lo - 1;
  }
  return clusters;
}

/// Joint eigenspaces of a commuting Hermitian family by successive refinement.
/// `seed_order` permutes the Gram-Schmidt seeds used for the final bases.
inline JointEigenStructure joint_eigenspaces(std::span<const CMatrix> family,
                                             double eps_cluster = 1e-8, double eps_comm = 1e-9,
                                             std::span<const int> seed_order = {},
                                             double eps_herm = 1e-10) {
  JointEigenStructure out;
  if (family.empty()) return out;
  require_same_square(family, "joint_eigenspaces family");
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const double r = relative_commutator(family[i], family[j]);
      if (r > eps_comm) {
        throw Error(ErrorKind::NotCommuting,
                    "operators " + std::to_string(i) + " and " + std::to_string(j) + " do not commute",
                    {static_cast<long>(i), static_cast<long>(j)}, r);
      }
    }
  }
  const auto d = family.front().rows();

  struct Part {
    std::vector<int> label;
    CMatrix q;
  };
  std::vector<Part> parts{{{}, CMatrix::Identity(d, d)}};

  for (const auto& op : family) {
    const auto clusters = hermitian_eig(op, eps_cluster, eps_herm);
    std::vector<Complex> values;
    for (const auto& c : clusters) values.push_back(c.value);
    out.operator_eigenvalues.push_back(values);

    const CMatrix h = 0.5 * (op + op.adjoint());
    std::vector<Part> next;
    for (auto& part : parts) {
      CMatrix m = part.q.adjoint() * h * part.q;
      m = 0.5 * (m + m.adjoint()).eval();
      Eigen::SelfAdjointEigenSolver<CMatrix> solver(m);
      const auto& lv = solver.eigenvalues();
      std::vector<std::vector<Eigen::Index>> by_cluster(values.size());
      for (Eigen::Index i = 0; i < lv.size(); ++i) {
        std::size_t best = 0;
        double best_d = std::abs(lv(i) - values[0].real());
        for (std::size_t c = 1; c < values.size(); ++c) {
          const double dist = std::abs(lv(i) - values[c].real());
          if (dist < best_d) {
            best_d = dist;
            best = c;
          }
        }
        by_cluster[best].push_back(i);
      }
      for (std::size_t c = 0; c < values.size(); ++c) {
        if (by_cluster[c].empty()) continue;
        CMatrix sub(part.q.rows(), static_cast<Eigen::Index>(by_cluster[c].size()));
        for (std::size_t i = 0; i < by_cluster[c].size(); ++i) {
          sub.col(static_cast<Eigen::Index>(i)) = part.q * solver.eigenvectors().col(by_cluster[c][i]);
        }
        Part p{part.label, std::move(sub)};
        p.label.push_back(static_cast<int>(c));
        next.push_back(std::move(p));
      }
    }
    parts = std::move(next);
  }

  std::sort(parts.begin(), parts.end(),
            [](const Part& a, const Part& b) { return a.label < b.label; });
  for (auto& p : parts) {
    out.labels.push_back(p.label);
    out.bases.push_back(projected_standard_basis(p.q, seed_order));
  }
  return out;
}

/// Column-major vectorization.
inline CVector vec(const CMatrix& m) {
  return Eigen::Map<const CVector>(m.data(), m.size());
}

inline CMatrix unvec(const CVector& v, Eigen::Index rows, Eigen::Index cols) {
  return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

/// Orthonormal (Frobenius) basis of a matrix subspace, kept as columns of
/// vectorized matrices.
class MatrixSpan {
 public:
  MatrixSpan(Eigen::Index rows, Eigen::Index cols)
      : rows_(rows), cols_(cols), basis_(rows * cols, 0) {}

  Eigen::Index dim() const { return basis_.cols(); }

  /// Distance of m from the span relative to max(||m||, scale). A positive
  /// scale keeps round-off in (near-)zero products from looking significant.
  double residual(const CMatrix& m, double scale = 0.0) const {
    const CVector v = vec(m);
    const double denom = std::max(v.norm(), scale);
    if (denom == 0.0) return 0.0;
    return orthogonalize(basis_, v).norm() / denom;
  }

  /// Adds m if it lies outside the span by more than eps (relative, as in
  /// residual); returns whether the span grew.
  bool add(const CMatrix& m, double eps, double scale = 0.0) {
    const CVector v = vec(m);
    const double denom = std::max(v.norm(), scale);
    if (denom == 0.0) return false;
    CVector r = orthogonalize(basis_, v);
    const double nr = r.norm();
    if (nr <= eps * denom) return false;
    basis_.conservativeResize(Eigen::NoChange, basis_.cols() + 1);
    basis_.col(basis_.cols() - 1) = r / nr;
    return true;
  }

  CMatrix element(Eigen::Index i) const { return unvec(basis_.col(i), rows_, cols_); }

  std::vector<CMatrix> elements() const {
    std::vector<CMatrix> out;
    out.reserve(static_cast<std::size_t>(dim()));
    for (Eigen::Index i = 0; i < dim(); ++i) out.push_back(element(i));
    return out;
  }

  const CMatrix& vectors() const { return basis_; }

 private:
  Eigen::Index rows_;
  Eigen::Index cols_;
  CMatrix basis_;
};

/// Orthonormal basis of the (unital, if requested) algebra generated by
/// `generators`: seed with identity + generators, then multiply new elements
/// on the left by generators until the span stops growing.
inline std::vector<CMatrix> algebra_closure(std::span<const CMatrix> generators,
                                            bool include_identity = true,
                                            double eps_member = 1e-8) {
  require_same_square(generators, "algebra_closure generators");
  if (generators.empty()) {
    if (!include_identity) return {};
    throw Error(ErrorKind::DimensionMismatch, "algebra_closure needs at least one generator");
  }
  const auto d = generators.front().rows();
  MatrixSpan span(d, d);
  std::vector<CMatrix> frontier;
  if (include_identity && span.add(CMatrix::Identity(d, d), eps_member)) {
    frontier.push_back(CMatrix::Identity(d, d));
  }
  for (const auto& g : generators) {
    if (span.add(g, eps_member)) frontier.push_back(g);
  }
  const auto full = d * d;
  while (!frontier.empty() && span.dim() < full) {
    std::vector<CMatrix> grown;
    for (const auto& w : frontier) {
      for (const auto& g : generators) {
        CMatrix p = g * w;
        if (span.add(p, eps_member, g.norm() * w.norm())) grown.push_back(std::move(p));
        if (span.dim() == full) break;
      }
      if (span.dim() == full) break;
    }
    frontier = std::move(grown);
  }
  return span.elements();
}

/// Basis of {S : S * a[i] == b[i] * S for all i}; a[i] are d x d, b[i] e x e.
inline std::vector<CMatrix> intertwiner_space(std::span<const CMatrix> a, std::span<const CMatrix> b,
                                              double eps_null = 1e-10) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch, "intertwiner_space lists differ in length");
  }
  if (a.empty()) {
    throw Error(ErrorKind::DimensionMismatch, "intertwiner_space needs at least one pair");
  }
  require_same_square(a, "intertwiner_space A");
  require_same_square(b, "intertwiner_space B");
  const auto d = a.front().rows();
  const auto e = b.front().rows();
  const auto n = d * e;
  CMatrix system(static_cast<Eigen::Index>(a.size()) * n, n);
  const CMatrix id_e = CMatrix::Identity(e, e);
  for (std::size_t i = 0; i < a.size(); ++i) {
    // vec(S A) = (A^T kron I_e) vec(S); vec(B S) = (I_d kron B) vec(S)
    CMatrix block = CMatrix::Zero(n, n);
    const CMatrix at = a[i].transpose();
    for (Eigen::Index r = 0; r < d; ++r) {
      for (Eigen::Index c = 0; c < d; ++c) {
        block.block(r * e, c * e, e, e) += at(r, c) * id_e;
        if (r == c) block.block(r * e, c * e, e, e) -= b[i];
      }
    }
    system.middleRows(static_cast<Eigen::Index>(i) * n, n) = block;
  }
  const CMatrix ns = null_space(system, eps_null);
  std::vector<CMatrix> out;
  for (Eigen::Index c = 0; c < ns.cols(); ++c) out.push_back(unvec(ns.col(c), e, d));
  return out;
}

/// Radical of a matrix algebra as the null space of the trace form
/// (x, y) -> tr(xy). Throws NotClosed if products leave the span.
inline RadicalInfo radical_dimension(std::span<const CMatrix> basis, double eps_member = 1e-8,
                                     double eps_null = 1e-10) {
  RadicalInfo info;
  if (basis.empty()) return info;
  require_same_square(basis, "radical_dimension basis");
  const auto d = basis.front().rows();
  MatrixSpan span(d, d);
  for (const auto& b : basis) span.add(b, 1e-12);
  const auto m = static_cast<Eigen::Index>(basis.size());
  CMatrix gram(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const CMatrix p = basis[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(j)];
      const double r = span.residual(
          p, basis[static_cast<std::size_t>(i)].norm() * basis[static_cast<std::size_t>(j)].norm());
      info.closure_residual = std::max(info.closure_residual, r);
      if (r > eps_member) {
        throw Error(ErrorKind::NotClosed, "product of basis elements leaves the span",
                    {static_cast<long>(i), static_cast<long>(j)}, r);
      }
      gram(i, j) = p.trace();
    }
  }
  const Eigen::VectorXd s = singular_values(gram);
  const double smax = s.size() > 0 ? s(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > eps_null * smax && s(i) > 0.0) ++rank;
  }
  info.semisimple_quotient_dim = rank;
  info.radical_dim = static_cast<int>(m) - rank;
  return info;
}

}  // namespace linalg
}  // namespace braidrep

#endif  // BRAIDREP_LINALG_HPP_
