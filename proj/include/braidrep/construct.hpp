#ifndef BRAIDREP_CONSTRUCT_HPP_
#define BRAIDREP_CONSTRUCT_HPP_

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "braidrep/braid.hpp"
#include "braidrep/error.hpp"
#include "braidrep/fivetuple.hpp"
#include "braidrep/linalg.hpp"

namespace braidrep {

/// Global orthonormal basis of the direct sum over the support: support
/// points in lexicographic label order, fiber coordinates 0..nu(x)-1.
struct BasisLayout {
  std::vector<std::pair<std::size_t, int>> entries;  // (point index, fiber coordinate)
  std::vector<std::size_t> point_order;              // support points in layout order
  std::map<std::size_t, Eigen::Index> offsets;       // point index -> first global index
  Eigen::Index total_dim = 0;
};

struct Provenance {
  FiveTuple tuple;
  BasisLayout layout;
};

inline BasisLayout basis_layout(const FiveTuple& t) {
  BasisLayout layout;
  layout.point_order = t.support();
  if (layout.point_order.empty()) {
    throw Error(ErrorKind::EmptySupport, "no point carries positive measure");
  }
  std::sort(layout.point_order.begin(), layout.point_order.end(),
            [&](std::size_t a, std::size_t b) { return t.points[a] < t.points[b]; });
  for (auto x : layout.point_order) {
    layout.offsets[x] = layout.total_dim;
    for (int c = 0; c < t.nu[x]; ++c) layout.entries.emplace_back(x, c);
    layout.total_dim += t.nu[x];
  }
  return layout;
}

/// Thrown when a tuple fails a validator; carries the failing report.
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report)
      : Error(ErrorKind::ValidationFailed, describe(report), witness_of(report), report.worst_residual),
        report_(std::move(report)) {}

  const ValidationReport& report() const noexcept { return report_; }

 private:
  static std::string describe(const ValidationReport& r) {
    std::string s = r.check + " failed (worst residual " + std::to_string(r.worst_residual) + ")";
    if (!r.witnesses.empty()) s += " at " + r.witnesses.front().detail;
    return s;
  }
  static std::vector<long> witness_of(const ValidationReport& r) {
    if (r.witnesses.empty()) return {};
    return {r.witnesses.front().generator, r.witnesses.front().point};
  }

  ValidationReport report_;
};

/// Every validator that build_representation requires, in order.
inline std::vector<ValidationReport> validate_tuple(const FiveTuple& t, double tol = 1e-9) {
  validate_structure(t);
  std::vector<ValidationReport> reports;
  reports.push_back(check_action_braid_relations(t));
  reports.push_back(check_quasi_invariance(t).report);
  reports.push_back(check_nu_invariance(t));
  if (reports.back().pass && reports[1].pass) {
    reports.push_back(check_cocycle_equations(t, tol));
  }
  return reports;
}

namespace detail {

inline void require_valid(const FiveTuple& t, double tol) {
  for (auto& r : validate_tuple(t, tol)) {
    if (!r.pass) throw ValidationError(std::move(r));
  }
}

inline void require_relations(const Representation& rep, double tol) {
  ValidationReport r{"generator_braid_relations", true, 0.0, tol, {}};
  for (const auto& rel : braid_relation_residuals(rep)) {
    r.record(rel.residual, {rel.i, -1, rel.relation});
  }
  if (!r.pass) throw ValidationError(std::move(r));
}

template <typename Weight>
Representation assemble(const FiveTuple& t, const BasisLayout& layout, Weight weight) {
  Representation rep;
  rep.n = t.n;
  rep.dim = static_cast<int>(layout.total_dim);
  for (int k = 0; k < t.generator_count(); ++k) {
    CMatrix m = CMatrix::Zero(layout.total_dim, layout.total_dim);
    const auto& p = t.action[static_cast<std::size_t>(k)];
    for (auto y : layout.point_order) {
      const auto col = layout.offsets.at(y);
      const auto row = layout.offsets.at(p[y]);
      const CMatrix& u = t.block(k, y);
      m.block(row, col, u.rows(), u.cols()) = weight(k, y) * u;
    }
    rep.generators.push_back(std::move(m));
  }
  return rep;
}

}  // namespace detail

/// psi_k in orthonormal coordinates: block (row pi_k y, column y) = U(tau_k, y).
/// The Radon-Nikodym factor cancels against the sqrt(mu) weights.
inline Representation build_representation(const FiveTuple& t, double tol = 1e-9) {
  detail::require_valid(t, tol);
  auto layout = basis_layout(t);
  Representation rep = detail::assemble(t, layout, [](int, std::size_t) { return 1.0; });
  detail::require_relations(rep, tol);
  rep.provenance = std::make_shared<const Provenance>(Provenance{t, std::move(layout)});
  return rep;
}

/// Literal formula in unnormalized coordinates, with the explicit factor
/// sqrt(mu(pi_k^{-1} x) / mu(x)) at x = pi_k y. Conjugating by diag(sqrt mu)
/// recovers build_representation.
inline Representation build_representation_weighted(const FiveTuple& t, double tol = 1e-9) {
  detail::require_valid(t, tol);
  auto layout = basis_layout(t);
  Representation rep = detail::assemble(t, layout, [&](int k, std::size_t y) {
    const auto x = t.action[static_cast<std::size_t>(k)][y];
    return radon_nikodym_factor(t, k, x, true);
  });
  detail::require_relations(rep, tol);
  rep.provenance = std::make_shared<const Provenance>(Provenance{t, std::move(layout)});
  return rep;
}

/// diag(sqrt mu) in layout order; D psi_weighted D^{-1} = psi.
inline Eigen::VectorXd sqrt_mu_diagonal(const FiveTuple& t, const BasisLayout& layout) {
  Eigen::VectorXd d(layout.total_dim);
  for (Eigen::Index i = 0; i < layout.total_dim; ++i) {
    d(i) = std::sqrt(t.mu[layout.entries[static_cast<std::size_t>(i)].first]);
  }
  return d;
}

}  // namespace braidrep

#endif  // BRAIDREP_CONSTRUCT_HPP_
