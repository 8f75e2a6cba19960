#ifndef BRAIDREP_ANALYZE_HPP_
#define BRAIDREP_ANALYZE_HPP_

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "braidrep/braid.hpp"
#include "braidrep/construct.hpp"
#include "braidrep/error.hpp"
#include "braidrep/fivetuple.hpp"
#include "braidrep/linalg.hpp"
#include "braidrep/tolerances.hpp"

namespace braidrep {

enum class Verdict { Yes, No, Inconclusive };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "YES";
    case Verdict::No:
      return "NO";
    default:
      return "INCONCLUSIVE";
  }
}

struct CommutantReport {
  int dimension = 0;
  std::vector<CMatrix> basis;
  int radical_dim = 0;
  int semisimple_quotient_dim = 0;
  bool is_scalar = false;
  bool is_local = false;
};

inline CommutantReport commutant(const Representation& rep, const Tolerances& tol = {}) {
  validate_representation(rep, tol.inv);
  CommutantReport r;
  r.basis = linalg::intertwiner_space(rep.generators, rep.generators, tol.null);
  r.dimension = static_cast<int>(r.basis.size());
  const auto rad = linalg::radical_dimension(r.basis, tol.member, tol.null);
  r.radical_dim = rad.radical_dim;
  r.semisimple_quotient_dim = rad.semisimple_quotient_dim;
  r.is_scalar = r.dimension == 1;
  r.is_local = r.semisimple_quotient_dim == 1;
  return r;
}

namespace detail {

/// Largest relative leak ||(1 - P P^H) psi_k P|| / ||psi_k|| over k, P with
/// orthonormal columns.
inline double invariance_leak(const Representation& rep, const CMatrix& p) {
  const CMatrix comp = CMatrix::Identity(rep.dim, rep.dim) - p * p.adjoint();
  double worst = 0.0;
  for (const auto& g : rep.generators) worst = std::max(worst, (comp * g * p).norm() / std::max(g.norm(), 1.0));
  return worst;
}

inline CMatrix orthonormal_range(const CMatrix& m, double eps) {
  if (m.cols() == 0) return CMatrix(m.rows(), 0);
  Eigen::BDCSVD<CMatrix> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > eps * s(0)) ++rank;
  }
  return svd.matrixU().leftCols(rank);
}

/// Proper invariant subspace from an eigenspace of a non-scalar commutant
/// element, else from cyclic subspaces A e_j or orthocomplements of A^H e_j.
inline std::optional<CMatrix> find_invariant_subspace(const Representation& rep,
                                                      const std::vector<CMatrix>& algebra,
                                                      const std::vector<CMatrix>& commutant_basis,
                                                      const Tolerances& tol) {
  const auto d = rep.dim;
  const double eps = 1e-8;
  auto proper_invariant = [&](const CMatrix& p) {
    return p.cols() > 0 && p.cols() < d && invariance_leak(rep, p) <= eps;
  };
  if (commutant_basis.size() > 1) {
    std::mt19937 rng(7);
    std::normal_distribution<double> g;
    CMatrix s = CMatrix::Zero(d, d);
    for (const auto& b : commutant_basis) s += Complex(g(rng), g(rng)) * b;
    Eigen::ComplexEigenSolver<CMatrix> es(s, false);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      const CMatrix shifted = s - es.eigenvalues()(i) * CMatrix::Identity(d, d);
      for (double e : {1e-10, 1e-8, 1e-6}) {
        const CMatrix ker = linalg::null_space(shifted, e);
        if (proper_invariant(ker)) return ker;
      }
    }
  }
  for (Eigen::Index j = 0; j < d; ++j) {
    CMatrix cyc(d, static_cast<Eigen::Index>(algebra.size()));
    CMatrix dual(d, static_cast<Eigen::Index>(algebra.size()));
    for (std::size_t a = 0; a < algebra.size(); ++a) {
      cyc.col(static_cast<Eigen::Index>(a)) = algebra[a].col(j);
      dual.col(static_cast<Eigen::Index>(a)) = algebra[a].adjoint().col(j);
    }
    const CMatrix p = orthonormal_range(cyc, tol.null * 100);
    if (proper_invariant(p)) return p;
    const CMatrix q = orthonormal_range(dual, tol.null * 100);
    if (q.cols() > 0 && q.cols() < d) {
      const CMatrix perp = linalg::null_space(q.adjoint(), tol.null);
      if (proper_invariant(perp)) return perp;
    }
  }
  return std::nullopt;
}

}  // namespace detail

struct IrreducibilityResult {
  Verdict verdict = Verdict::Inconclusive;
  int closure_dim = 0;
  int full_dim = 0;
  std::optional<CMatrix> invariant_subspace;
};

/// Burnside: irreducible iff the unital algebra generated by the generators
/// is all of M_d.
inline IrreducibilityResult is_irreducible(const Representation& rep, const Tolerances& tol = {},
                                           bool want_witness = true) {
  validate_representation(rep, tol.inv);
  IrreducibilityResult r;
  r.full_dim = rep.dim * rep.dim;
  const auto algebra = linalg::algebra_closure(rep.generators, true, tol.member);
  r.closure_dim = static_cast<int>(algebra.size());
  r.verdict = r.closure_dim == r.full_dim ? Verdict::Yes : Verdict::No;
  if (r.verdict == Verdict::No && want_witness) {
    const auto comm = linalg::intertwiner_space(rep.generators, rep.generators, tol.null);
    r.invariant_subspace = detail::find_invariant_subspace(rep, algebra, comm, tol);
  }
  return r;
}

struct FactorResult {
  Verdict verdict = Verdict::Inconclusive;
  int algebra_dim = 0;
  int center_dim = 0;
};

/// Center of the generated algebra: combinations sum c_a E_a of an algebra
/// basis commuting with every generator.
inline FactorResult is_factor(const Representation& rep, const Tolerances& tol = {}) {
  validate_representation(rep, tol.inv);
  FactorResult r;
  const auto algebra = linalg::algebra_closure(rep.generators, true, tol.member);
  r.algebra_dim = static_cast<int>(algebra.size());
  const auto d = rep.dim;
  if (r.algebra_dim == d * d) {
    r.center_dim = 1;
    r.verdict = Verdict::Yes;
    return r;
  }
  const auto dd = static_cast<Eigen::Index>(d) * d;
  const auto g = static_cast<Eigen::Index>(rep.generators.size());
  CMatrix system(g * dd, static_cast<Eigen::Index>(algebra.size()));
  for (std::size_t a = 0; a < algebra.size(); ++a) {
    for (Eigen::Index k = 0; k < g; ++k) {
      system.block(k * dd, static_cast<Eigen::Index>(a), dd, 1) =
          linalg::vec(linalg::commutator(algebra[a], rep.generators[static_cast<std::size_t>(k)]));
    }
  }
  r.center_dim = static_cast<int>(linalg::null_space(system, tol.null).cols());
  r.verdict = r.center_dim == 1 ? Verdict::Yes : Verdict::No;
  return r;
}

struct IndecomposabilityResult {
  Verdict verdict = Verdict::Inconclusive;
  CommutantReport commutant;
};

/// Indecomposable iff the commutant is a local algebra.
inline IndecomposabilityResult is_indecomposable(const Representation& rep, const Tolerances& tol = {}) {
  IndecomposabilityResult r;
  r.commutant = commutant(rep, tol);
  r.verdict = r.commutant.is_local ? Verdict::Yes : Verdict::No;
  return r;
}

/// Fixed seed for the random intertwiner search in are_equivalent.
inline constexpr unsigned kEquivalenceSeed = 20240917u;

struct EquivalenceResult {
  Verdict verdict = Verdict::Inconclusive;
  int intertwiner_dim = 0;
  std::optional<CMatrix> witness;  // S with S psi1_k = psi2_k S
  double residual = 0.0;
  std::string note;
};

inline EquivalenceResult are_equivalent(const Representation& a, const Representation& b, const Tolerances& tol = {},
                                        int trials = 20) {
  EquivalenceResult r;
  if (a.n != b.n) {
    r.verdict = Verdict::No;
    r.note = "different strand counts";
    return r;
  }
  validate_representation(a, tol.inv);
  validate_representation(b, tol.inv);
  if (a.dim != b.dim) {
    r.verdict = Verdict::No;
    r.note = "different dimensions";
    return r;
  }
  bool identical = true;
  for (std::size_t k = 0; k < a.generators.size() && identical; ++k) {
    identical = a.generators[k] == b.generators[k];
  }
  const auto space = linalg::intertwiner_space(a.generators, b.generators, tol.null);
  r.intertwiner_dim = static_cast<int>(space.size());
  auto residual_of = [&](const CMatrix& s) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.generators.size(); ++k) {
      worst = std::max(worst, (s * a.generators[k] - b.generators[k] * s).norm() /
                                  (s.norm() * std::max({a.generators[k].norm(), b.generators[k].norm(), 1.0})));
    }
    return worst;
  };
  if (identical) {
    r.verdict = Verdict::Yes;
    r.witness = CMatrix::Identity(a.dim, a.dim);
    return r;
  }
  if (space.empty()) {
    r.verdict = Verdict::No;
    r.note = "intertwiner space is zero";
    return r;
  }
  std::mt19937 rng(kEquivalenceSeed);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < trials; ++trial) {
    CMatrix s = CMatrix::Zero(a.dim, a.dim);
    for (const auto& e : space) s += Complex(g(rng), g(rng)) * e;
    if (linalg::inverse_condition(s) > tol.inv) {
      r.verdict = Verdict::Yes;
      r.residual = residual_of(s);
      r.witness = std::move(s);
      return r;
    }
  }
  r.verdict = Verdict::Inconclusive;
  r.note = "no invertible element found in " + std::to_string(trials) + " random combinations";
  return r;
}

struct OrbitReport {
  std::vector<std::vector<std::size_t>> orbits;  // support points, sorted
  std::vector<double> masses;
  bool ergodic = false;
};

inline OrbitReport orbit_decomposition(const FiveTuple& t) {
  const auto np = t.size();
  std::vector<std::size_t> parent(np);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : t.action) {
    for (std::size_t x = 0; x < np; ++x) {
      if (!t.in_support(x) || !t.in_support(p[x])) continue;
      const auto a = find(x), b = find(p[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  OrbitReport r;
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t x = 0; x < np; ++x) {
    if (!t.in_support(x)) continue;
    const auto root = find(x);
    auto [it, fresh] = slot.emplace(root, r.orbits.size());
    if (fresh) {
      r.orbits.emplace_back();
      r.masses.push_back(0.0);
    }
    r.orbits[it->second].push_back(x);
    r.masses[it->second] += t.mu[x];
  }
  r.ergodic = r.orbits.size() == 1;
  return r;
}

struct DisjointnessResult {
  bool disjoint = false;
  bool equivalent = false;
  std::vector<std::size_t> witness_set;  // F, a union of orbits in X
  double mass_first = 0.0;
  double mass_second = 0.0;
};

/// Two ergodic normalized measures on the same (X, pi): either the same null
/// sets, or a pi-invariant F with mu1(F) = 1 and mu2(F) = 0.
inline DisjointnessResult check_disjointness(const FiveTuple& t1, const FiveTuple& t2, double eps_mass = 1e-9) {
  if (t1.points != t2.points || t1.action != t2.action) {
    throw Error(ErrorKind::InvalidParameter, "tuples must share the point set and the action");
  }
  for (const auto* t : {&t1, &t2}) {
    if (std::abs(t->total_mass() - 1.0) > eps_mass) {
      throw Error(ErrorKind::NotNormalized, "measure has total mass " + std::to_string(t->total_mass()));
    }
    if (!orbit_decomposition(*t).ergodic) throw Error(ErrorKind::NotErgodic, "measure is not ergodic");
  }
  DisjointnessResult r;
  if (t1.support() == t2.support()) {
    r.equivalent = true;
    r.witness_set = t1.support();
    r.mass_first = 1.0;
    r.mass_second = 1.0;
    return r;
  }
  // Orbit of the first support in all of X.
  std::vector<bool> in_f(t1.size(), false);
  std::vector<std::size_t> stack = t1.support();
  for (auto x : stack) in_f[x] = true;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (const auto* acts : {&t1.action, &t1.action_inverse}) {
      for (const auto& p : *acts) {
        if (!in_f[p[x]]) {
          in_f[p[x]] = true;
          stack.push_back(p[x]);
        }
      }
    }
  }
  for (std::size_t x = 0; x < t1.size(); ++x) {
    if (!in_f[x]) continue;
    r.witness_set.push_back(x);
    r.mass_first += t1.mu[x];
    r.mass_second += t2.mu[x];
  }
  r.disjoint = std::abs(r.mass_first - 1.0) <= eps_mass && r.mass_second <= eps_mass;
  return r;
}

enum class CrossVerdict { Confirmed, Vacuous, Violation };

inline const char* cross_verdict_name(CrossVerdict v) {
  switch (v) {
    case CrossVerdict::Confirmed:
      return "CONFIRMED";
    case CrossVerdict::Vacuous:
      return "VACUOUS";
    default:
      return "VIOLATION";
  }
}

struct Hypothesis {
  std::string name;
  bool holds = false;
};

struct PropositionCheck {
  std::string proposition;
  std::vector<Hypothesis> hypotheses;
  std::string conclusion;
  std::optional<bool> conclusion_holds;  // unset when hypotheses fail and the test was skipped
  CrossVerdict verdict = CrossVerdict::Vacuous;
};

struct CrossCheckReport {
  std::vector<PropositionCheck> checks;

  bool any_violation() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const PropositionCheck& c) { return c.verdict == CrossVerdict::Violation; });
  }
  const PropositionCheck& at(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.proposition == name) return c;
    }
    throw Error(ErrorKind::InvalidParameter, "no proposition " + name);
  }
};

namespace detail {

/// Every fiber projection lies in the commutative algebra generated by the
/// psi_k psi_k^H, i.e. each of their joint eigenspaces sits inside one fiber
/// or is orthogonal to it.
inline bool fibers_in_spectral_algebra(const Representation& rep, const Tolerances& tol) {
  std::vector<CMatrix> h;
  for (const auto& g : rep.generators) h.push_back(g * g.adjoint());
  linalg::JointEigenStructure joint;
  try {
    joint = linalg::joint_eigenspaces(h, tol.cluster, tol.comm, {}, tol.herm);
  } catch (const Error&) {
    return false;
  }
  const auto& layout = rep.provenance->layout;
  for (const auto& b : joint.bases) {
    for (const auto& [x, off] : layout.offsets) {
      const Eigen::Index width = rep.provenance->tuple.nu[x];
      const double inside = b.middleRows(off, width).norm() / b.norm();
      if (inside > tol.match && inside < 1.0 - tol.match) return false;
    }
  }
  return true;
}

inline bool blocks_nonconstant(const FiveTuple& t, double tol) {
  for (const auto& blocks : t.cocycle) {
    if (blocks.empty()) continue;
    const CMatrix& first = blocks.begin()->second;
    for (const auto& [x, u] : blocks) {
      if (u.rows() != first.rows() || ::braidrep::detail::relative_gap(u, first) > tol) return true;
    }
  }
  return false;
}

inline CrossVerdict decide(const std::vector<Hypothesis>& hyps, const std::optional<bool>& conclusion) {
  const bool all = std::all_of(hyps.begin(), hyps.end(), [](const Hypothesis& h) { return h.holds; });
  if (!all) return CrossVerdict::Vacuous;
  return conclusion.value_or(false) ? CrossVerdict::Confirmed : CrossVerdict::Violation;
}

}  // namespace detail

/// Evaluates the irreducibility, factor and unit-multiplicity propositions on
/// the representation built from t and compares each prediction with a
/// direct computation. The factor property follows the source definition
/// (scalar commutant). Propositions relying on the invariant-subspace
/// corollary carry its premise that the fiber projections lie in the algebra
/// generated by the psi_k psi_k^H.
inline CrossCheckReport cross_check_section6(const FiveTuple& t, const Tolerances& tol = {}) {
  const Representation rep = build_representation(t, tol.validate);
  const auto orbits = orbit_decomposition(t);
  const auto support = t.support();
  const bool self_adjoint = std::all_of(rep.generators.begin(), rep.generators.end(), [&](const CMatrix& g) {
    return linalg::hermitian_defect(g) <= tol.subspace;
  });
  const bool normalized = std::abs(t.total_mass() - 1.0) <= tol.validate;
  const bool invariant = check_quasi_invariance(t).invariant;
  const bool nu_one = std::all_of(support.begin(), support.end(), [&](std::size_t x) { return t.nu[x] == 1; });
  const bool nu_constant =
      std::all_of(support.begin(), support.end(), [&](std::size_t x) { return t.nu[x] == t.nu[support.front()]; });
  const bool nonconstant_u = detail::blocks_nonconstant(t, tol.validate);
  const bool fibers_in_n = detail::fibers_in_spectral_algebra(rep, tol);

  // Direct tests, evaluated lazily. A non-ergodic measure gives the orbit
  // projection as a non-scalar element of the commutant.
  auto orbit_projection_commutes = [&]() {
    if (orbits.ergodic) return false;
    const auto& layout = rep.provenance->layout;
    CMatrix p = CMatrix::Zero(rep.dim, rep.dim);
    for (Eigen::Index i = 0; i < rep.dim; ++i) {
      const auto x = layout.entries[static_cast<std::size_t>(i)].first;
      if (std::find(orbits.orbits.front().begin(), orbits.orbits.front().end(), x) != orbits.orbits.front().end()) {
        p(i, i) = 1.0;
      }
    }
    for (const auto& g : rep.generators) {
      if (linalg::commutator(p, g).norm() > tol.subspace * std::max(g.norm(), 1.0)) return false;
    }
    return true;
  };
  std::optional<bool> irreducible_cache;
  auto irreducible = [&]() {
    if (!irreducible_cache) {
      irreducible_cache = orbit_projection_commutes() ? false
                                                      : is_irreducible(rep, tol, false).verdict == Verdict::Yes;
    }
    return *irreducible_cache;
  };
  std::optional<bool> scalar_commutant_cache;
  auto scalar_commutant = [&]() {
    if (!scalar_commutant_cache) {
      if (orbit_projection_commutes()) {
        scalar_commutant_cache = false;
      } else if (irreducible()) {
        scalar_commutant_cache = true;
      } else {
        scalar_commutant_cache =
            linalg::intertwiner_space(rep.generators, rep.generators, tol.null).size() == 1;
      }
    }
    return *scalar_commutant_cache;
  };

  CrossCheckReport report;
  auto add = [&](std::string name, std::vector<Hypothesis> hyps, std::string conclusion, auto&& evaluate) {
    PropositionCheck c{std::move(name), std::move(hyps), std::move(conclusion), std::nullopt, CrossVerdict::Vacuous};
    const bool all = std::all_of(c.hypotheses.begin(), c.hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
    if (all) c.conclusion_holds = evaluate();
    c.verdict = detail::decide(c.hypotheses, c.conclusion_holds);
    report.checks.push_back(std::move(c));
  };

  add("selfadjoint_ergodic_irreducible",
      {{"self_adjoint", self_adjoint},
       {"nu_one", nu_one},
       {"ergodic", orbits.ergodic},
       {"normalized", normalized},
       {"cocycle_nonconstant", nonconstant_u},
       {"fibers_in_spectral_algebra", fibers_in_n}},
      "irreducible", irreducible);

  add("factor_implies_ergodic", {{"factor", scalar_commutant()}}, "ergodic", [&] { return orbits.ergodic; });

  add("factor_implies_constant_nu", {{"factor", scalar_commutant()}, {"nu_bounded", true}}, "nu_constant",
      [&] { return nu_constant; });

  bool shortcut = false;
  try {
    shortcut = check_transposition_shortcut(t, tol.validate).pass;
  } catch (const Error&) {
    shortcut = false;
  }
  // Cheap hypotheses first; irreducibility is only computed when they hold.
  std::vector<Hypothesis> unit_hyps{{"transposition_shortcut", shortcut}, {"invariant_measure", invariant}};
  const bool cheap = shortcut && invariant;
  unit_hyps.push_back({"irreducible", cheap && irreducible()});
  add("irreducible_implies_unit_nu", std::move(unit_hyps), "nu_one", [&] { return nu_one; });

  // Constant cocycle U(tau_k, .) = rho_k with rho irreducible and self-adjoint.
  bool constant_rho = nu_constant && !support.empty();
  std::vector<CMatrix> rho;
  if (constant_rho) {
    for (const auto& blocks : t.cocycle) {
      const CMatrix& first = blocks.at(support.front());
      for (auto x : support) {
        if (::braidrep::detail::relative_gap(blocks.at(x), first) > tol.validate) constant_rho = false;
      }
      rho.push_back(first);
    }
  }
  bool rho_self_adjoint = constant_rho;
  bool rho_irreducible = constant_rho;
  if (constant_rho) {
    for (const auto& r : rho) rho_self_adjoint = rho_self_adjoint && linalg::hermitian_defect(r) <= tol.subspace;
    const auto m = rho.front().rows();
    rho_irreducible = m == 1 || static_cast<Eigen::Index>(linalg::algebra_closure(rho, true, tol.member).size()) == m * m;
  }
  add("constant_cocycle_irreducible",
      {{"cocycle_constant", constant_rho},
       {"rho_self_adjoint", rho_self_adjoint},
       {"rho_irreducible", rho_irreducible},
       {"nu_constant", nu_constant},
       {"ergodic", orbits.ergodic},
       {"invariant_measure", invariant},
       {"fibers_in_spectral_algebra", fibers_in_n}},
      "irreducible", irreducible);
  return report;
}

}  // namespace braidrep

#endif  // BRAIDREP_ANALYZE_HPP_
