#ifndef BRAIDREP_FIVETUPLE_HPP_
#define BRAIDREP_FIVETUPLE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "braidrep/error.hpp"
#include "braidrep/linalg.hpp"
#include "braidrep/tolerances.hpp"

namespace braidrep {

/// perm[x] is the image of point index x.
using Permutation = std::vector<std::size_t>;

inline bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

inline Permutation inverse_permutation(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) inv[p[x]] = x;
  return inv;
}

/// (a o b)(x) = a(b(x))
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

/// Finite-support 5-tuple (pi, X, mu, nu, U). Generators are 0-based here:
/// action[k] is pi_{k+1}. Cocycle blocks U(tau_{k+1}, x) exist only for
/// points with mu(x) > 0; block (row pi_k x, column x) of the built operator
/// is U(tau_k, x).
struct FiveTuple {
  int n = 2;
  std::vector<std::vector<int>> points;
  std::vector<double> mu;
  std::vector<int> nu;
  std::vector<Permutation> action;
  std::vector<Permutation> action_inverse;
  std::vector<std::map<std::size_t, CMatrix>> cocycle;

  std::size_t size() const noexcept { return points.size(); }
  int generator_count() const noexcept { return n - 1; }
  bool in_support(std::size_t x) const { return mu[x] > 0.0; }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t x = 0; x < mu.size(); ++x) {
      if (mu[x] > 0.0) s.push_back(x);
    }
    return s;
  }

  double total_mass() const {
    double m = 0.0;
    for (double v : mu) m += v;
    return m;
  }

  const CMatrix& block(int k, std::size_t x) const {
    const auto& blocks = cocycle.at(static_cast<std::size_t>(k));
    auto it = blocks.find(x);
    if (it == blocks.end()) {
      throw Error(ErrorKind::InvalidTuple,
                  "no cocycle block for generator " + std::to_string(k + 1) + " at point " +
                      std::to_string(x),
                  {k + 1, static_cast<long>(x)});
    }
    return it->second;
  }

  bool has_block(int k, std::size_t x) const {
    return cocycle.at(static_cast<std::size_t>(k)).contains(x);
  }

  /// Fills action_inverse from action.
  void derive_inverses() {
    action_inverse.clear();
    for (const auto& p : action) action_inverse.push_back(inverse_permutation(p));
  }
};

/// Structural invariants: sizes, distinct points, permutations, inverse
/// consistency, block coverage of exactly the support, block shapes and
/// invertibility. Throws InvalidTuple / EmptySupport.
inline void validate_structure(const FiveTuple& t, double eps_inv = 1e-12) {
  if (t.n < 2) throw Error(ErrorKind::InvalidTuple, "n must be >= 2");
  const auto np = t.size();
  if (t.mu.size() != np || t.nu.size() != np) {
    throw Error(ErrorKind::InvalidTuple, "mu/nu not aligned with points");
  }
  const auto g = static_cast<std::size_t>(t.generator_count());
  if (t.action.size() != g || t.action_inverse.size() != g || t.cocycle.size() != g) {
    throw Error(ErrorKind::InvalidTuple, "action/cocycle must have one entry per generator");
  }
  std::set<std::vector<int>> seen(t.points.begin(), t.points.end());
  if (seen.size() != np) throw Error(ErrorKind::InvalidTuple, "points are not pairwise distinct");
  bool any = false;
  for (std::size_t x = 0; x < np; ++x) {
    if (!(t.mu[x] >= 0.0) || !std::isfinite(t.mu[x])) {
      throw Error(ErrorKind::InvalidTuple, "mu must be finite and nonnegative", {static_cast<long>(x)});
    }
    if (t.nu[x] < 1) throw Error(ErrorKind::InvalidTuple, "nu must be positive", {static_cast<long>(x)});
    any = any || t.mu[x] > 0.0;
  }
  if (!any) throw Error(ErrorKind::EmptySupport, "no point carries positive measure");
  for (std::size_t k = 0; k < g; ++k) {
    const auto& p = t.action[k];
    const auto& q = t.action_inverse[k];
    if (p.size() != np || q.size() != np || !is_permutation(p) || !is_permutation(q)) {
      throw Error(ErrorKind::InvalidTuple, "action of generator " + std::to_string(k + 1) + " is not a permutation",
                  {static_cast<long>(k + 1)});
    }
    for (std::size_t x = 0; x < np; ++x) {
      if (p[q[x]] != x) {
        throw Error(ErrorKind::InvalidTuple,
                    "action_inverse of generator " + std::to_string(k + 1) + " is not the inverse",
                    {static_cast<long>(k + 1), static_cast<long>(x)});
      }
    }
    const auto& blocks = t.cocycle[k];
    for (const auto& [x, b] : blocks) {
      if (x >= np || !t.in_support(x)) {
        throw Error(ErrorKind::InvalidTuple, "cocycle block outside the support",
                    {static_cast<long>(k + 1), static_cast<long>(x)});
      }
      const auto nx = t.nu[x];
      if (b.rows() != nx || b.cols() != nx) {
        throw Error(ErrorKind::InvalidTuple, "cocycle block shape differs from nu(x)",
                    {static_cast<long>(k + 1), static_cast<long>(x)});
      }
      if (!linalg::all_finite(b) || linalg::inverse_condition(b) <= eps_inv) {
        throw Error(ErrorKind::InvalidTuple, "cocycle block is not invertible",
                    {static_cast<long>(k + 1), static_cast<long>(x)});
      }
    }
    for (std::size_t x = 0; x < np; ++x) {
      if (t.in_support(x) && !blocks.contains(x)) {
        throw Error(ErrorKind::InvalidTuple, "missing cocycle block on the support",
                    {static_cast<long>(k + 1), static_cast<long>(x)});
      }
    }
  }
}

struct Witness {
  int generator = 0;  // 1-based; 0 when not applicable
  long point = -1;
  std::string detail;
};

/// Outcome of one validator. pass <=> worst_residual <= tolerance.
struct ValidationReport {
  std::string check;
  bool pass = true;
  double worst_residual = 0.0;
  double tolerance = 0.0;
  std::vector<Witness> witnesses;

  void record(double residual, Witness w) {
    worst_residual = std::max(worst_residual, residual);
    if (residual > tolerance) witnesses.push_back(std::move(w));
    pass = worst_residual <= tolerance;
  }
};

struct QuasiInvarianceReport {
  ValidationReport report;
  bool invariant = false;
};

namespace detail {

inline double relative_gap(const CMatrix& lhs, const CMatrix& rhs) {
  return (lhs - rhs).norm() / std::max(lhs.norm(), 1.0);
}

}  // namespace detail

/// Exact permutation identities pi_k pi_{k+1} pi_k = pi_{k+1} pi_k pi_{k+1}
/// and pi_k pi_j = pi_j pi_k for |j - k| > 1, over all points. The residual
/// is the number of points where an identity fails.
inline ValidationReport check_action_braid_relations(const FiveTuple& t) {
  ValidationReport r{"action_braid_relations", true, 0.0, 0.0, {}};
  const int g = t.generator_count();
  for (int k = 0; k < g; ++k) {
    for (int j = k + 1; j < g; ++j) {
      const auto& a = t.action[static_cast<std::size_t>(k)];
      const auto& b = t.action[static_cast<std::size_t>(j)];
      Permutation lhs;
      Permutation rhs;
      if (j == k + 1) {
        lhs = compose(a, compose(b, a));
        rhs = compose(b, compose(a, b));
      } else {
        lhs = compose(a, b);
        rhs = compose(b, a);
      }
      double bad = 0.0;
      long first = -1;
      for (std::size_t x = 0; x < lhs.size(); ++x) {
        if (lhs[x] != rhs[x]) {
          bad += 1.0;
          if (first < 0) first = static_cast<long>(x);
        }
      }
      r.record(bad, {k + 1, first,
                     (j == k + 1 ? "braid(" : "commute(") + std::to_string(k + 1) + "," +
                         std::to_string(j + 1) + ")"});
    }
  }
  return r;
}

/// mu(x) > 0 <=> mu(pi_k x) > 0 for every k and x; also reports whether
/// mu(pi_k x) == mu(x) everywhere.
inline QuasiInvarianceReport check_quasi_invariance(const FiveTuple& t, double eps_invariant = 1e-12) {
  QuasiInvarianceReport out{{"quasi_invariance", true, 0.0, 0.0, {}}, true};
  double scale = 0.0;
  for (double m : t.mu) scale = std::max(scale, m);
  for (int k = 0; k < t.generator_count(); ++k) {
    const auto& p = t.action[static_cast<std::size_t>(k)];
    for (std::size_t x = 0; x < t.size(); ++x) {
      const bool a = t.mu[x] > 0.0;
      const bool b = t.mu[p[x]] > 0.0;
      out.report.record(a == b ? 0.0 : 1.0,
                        {k + 1, static_cast<long>(x), "support not stable under pi_" + std::to_string(k + 1)});
      if (std::abs(t.mu[p[x]] - t.mu[x]) > eps_invariant * scale) out.invariant = false;
    }
  }
  return out;
}

/// nu(x) == nu(pi_k x) for all k and all support points x.
inline ValidationReport check_nu_invariance(const FiveTuple& t) {
  ValidationReport r{"nu_invariance", true, 0.0, 0.0, {}};
  for (int k = 0; k < t.generator_count(); ++k) {
    const auto& p = t.action[static_cast<std::size_t>(k)];
    for (std::size_t x = 0; x < t.size(); ++x) {
      if (!t.in_support(x)) continue;
      const double diff = std::abs(t.nu[x] - t.nu[p[x]]);
      r.record(diff, {k + 1, static_cast<long>(x), "nu changes along pi_" + std::to_string(k + 1)});
    }
  }
  return r;
}

/// sqrt(mu(pi_k^{-1} x) / mu(x)) when `inverse`, else sqrt(mu(pi_k x) / mu(x)).
/// k is 0-based.
inline double radon_nikodym_factor(const FiveTuple& t, int k, std::size_t x, bool inverse) {
  if (!(t.mu.at(x) > 0.0)) {
    throw Error(ErrorKind::ZeroDenominator, "mu(x) = 0", {k + 1, static_cast<long>(x)});
  }
  const auto& perm = inverse ? t.action_inverse.at(static_cast<std::size_t>(k))
                             : t.action.at(static_cast<std::size_t>(k));
  return std::sqrt(t.mu[perm[x]] / t.mu[x]);
}

/// Generator cocycle equations on every support point: the braid equation for
/// adjacent generators and the commuting equation for distant ones.
inline ValidationReport check_cocycle_equations(const FiveTuple& t, double tol = 1e-9) {
  ValidationReport r{"cocycle_equations", true, 0.0, tol, {}};
  const auto nu_report = check_nu_invariance(t);
  if (!nu_report.pass) {
    throw Error(ErrorKind::ShapeMismatch, "nu is not pi-invariant; cocycle blocks cannot be composed",
                {nu_report.witnesses.front().generator, nu_report.witnesses.front().point});
  }
  const int g = t.generator_count();
  auto inv = [&](int k, std::size_t x) { return t.action_inverse[static_cast<std::size_t>(k)][x]; };
  auto blk = [&](int k, std::size_t x) -> const CMatrix* {
    const auto& blocks = t.cocycle[static_cast<std::size_t>(k)];
    auto it = blocks.find(x);
    return it == blocks.end() ? nullptr : &it->second;
  };
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (!t.in_support(x)) continue;
    for (int k = 0; k < g; ++k) {
      for (int j = k + 1; j < g; ++j) {
        const CMatrix* f[6];
        std::string name;
        if (j == k + 1) {
          name = "braid(" + std::to_string(k + 1) + "," + std::to_string(j + 1) + ")";
          const auto ax = inv(k, x);
          const auto bax = inv(j, ax);
          const auto abax = inv(k, bax);
          const auto bx = inv(j, x);
          const auto abx = inv(k, bx);
          const auto babx = inv(j, abx);
          f[0] = blk(k, ax);
          f[1] = blk(j, bax);
          f[2] = blk(k, abax);
          f[3] = blk(j, bx);
          f[4] = blk(k, abx);
          f[5] = blk(j, babx);
          bool missing = false;
          for (auto* p : f) missing = missing || p == nullptr;
          if (missing) {
            r.record(std::numeric_limits<double>::infinity(), {k + 1, static_cast<long>(x), name + ": block outside support"});
            continue;
          }
          r.record(detail::relative_gap((*f[0]) * (*f[1]) * (*f[2]), (*f[3]) * (*f[4]) * (*f[5])),
                   {k + 1, static_cast<long>(x), name});
        } else {
          name = "commute(" + std::to_string(k + 1) + "," + std::to_string(j + 1) + ")";
          const auto ax = inv(k, x);
          const auto cax = inv(j, ax);
          const auto cx = inv(j, x);
          const auto acx = inv(k, cx);
          f[0] = blk(k, ax);
          f[1] = blk(j, cax);
          f[2] = blk(j, cx);
          f[3] = blk(k, acx);
          if (!f[0] || !f[1] || !f[2] || !f[3]) {
            r.record(std::numeric_limits<double>::infinity(), {k + 1, static_cast<long>(x), name + ": block outside support"});
            continue;
          }
          r.record(detail::relative_gap((*f[0]) * (*f[1]), (*f[2]) * (*f[3])),
                   {k + 1, static_cast<long>(x), name});
        }
      }
    }
  }
  return r;
}

/// Simplified sufficient conditions for actions with pi_k^{-1} = pi_k:
/// (1) U(k+1, pi_{k+1} x) = U(k, pi_k pi_{k+1} pi_k x);
/// (2) U(k, pi_k pi_j x) = U(k, pi_j x) for |j - k| > 1;
/// (3) U(k, pi_k x), U(k, pi_k pi_{k+1} x), U(k, pi_k pi_{k+1} pi_k x) commute,
///     and U(k, pi_k x) commutes with U(k, pi_k pi_j x).
/// Only instances whose points all lie in the support are checked.
inline ValidationReport check_transposition_shortcut(const FiveTuple& t, double tol = 1e-9) {
  const int g = t.generator_count();
  for (int k = 0; k < g; ++k) {
    const auto& p = t.action[static_cast<std::size_t>(k)];
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (p[p[x]] != x) {
        throw Error(ErrorKind::NotSelfInverse, "pi_" + std::to_string(k + 1) + " is not an involution",
                    {k + 1, static_cast<long>(x)});
      }
    }
  }
  ValidationReport r{"transposition_shortcut", true, 0.0, tol, {}};
  auto pi = [&](int k, std::size_t x) { return t.action[static_cast<std::size_t>(k)][x]; };
  auto blk = [&](int k, std::size_t x) -> const CMatrix* {
    const auto& blocks = t.cocycle[static_cast<std::size_t>(k)];
    auto it = blocks.find(x);
    return it == blocks.end() ? nullptr : &it->second;
  };
  auto comm = [](const CMatrix& a, const CMatrix& b) { return detail::relative_gap(a * b, b * a); };
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (!t.in_support(x)) continue;
    for (int k = 0; k < g; ++k) {
      const CMatrix* u_kx = blk(k, pi(k, x));
      if (k + 1 < g) {
        const CMatrix* lhs = blk(k + 1, pi(k + 1, x));
        const CMatrix* rhs = blk(k, pi(k, pi(k + 1, pi(k, x))));
        if (lhs && rhs) {
          r.record(detail::relative_gap(*lhs, *rhs), {k + 1, static_cast<long>(x), "(1)"});
        }
        const CMatrix* u_b = blk(k, pi(k, pi(k + 1, x)));
        const CMatrix* u_c = rhs;
        if (u_kx && u_b && u_c) {
          const double c3 = std::max({comm(*u_kx, *u_b), comm(*u_kx, *u_c), comm(*u_b, *u_c)});
          r.record(c3, {k + 1, static_cast<long>(x), "(3)"});
        }
      }
      for (int j = 0; j < g; ++j) {
        if (std::abs(j - k) <= 1) continue;
        const CMatrix* lhs = blk(k, pi(k, pi(j, x)));
        const CMatrix* rhs = blk(k, pi(j, x));
        if (lhs && rhs) {
          r.record(detail::relative_gap(*lhs, *rhs),
                   {k + 1, static_cast<long>(x), "(2) j=" + std::to_string(j + 1)});
        }
        if (u_kx && lhs) {
          r.record(comm(*u_kx, *lhs), {k + 1, static_cast<long>(x), "(3) j=" + std::to_string(j + 1)});
        }
      }
    }
  }
  return r;
}

/// U(tau_k, x) U(tau_k, x)^H must be a scalar multiple of the identity on each
/// fiber; residual = ||M - (tr M / nu) I||_F / ||M||_F.
inline ValidationReport check_uu_star_diagonalizable(const FiveTuple& t, double tol = 1e-9) {
  ValidationReport r{"uu_star_scalar", true, 0.0, tol, {}};
  for (int k = 0; k < t.generator_count(); ++k) {
    for (const auto& [x, u] : t.cocycle[static_cast<std::size_t>(k)]) {
      const CMatrix m = u * u.adjoint();
      const Complex c = m.trace() / static_cast<double>(m.rows());
      const double nm = m.norm();
      const double res = nm > 0.0 ? (m - c * CMatrix::Identity(m.rows(), m.cols())).norm() / nm : 0.0;
      r.record(res, {k + 1, static_cast<long>(x), "U U^H not scalar"});
    }
  }
  return r;
}

}  // namespace braidrep

#endif  // BRAIDREP_FIVETUPLE_HPP_
