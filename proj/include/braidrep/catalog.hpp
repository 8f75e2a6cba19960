#ifndef BRAIDREP_CATALOG_HPP_
#define BRAIDREP_CATALOG_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "braidrep/braid.hpp"
#include "braidrep/construct.hpp"
#include "braidrep/error.hpp"
#include "braidrep/fivetuple.hpp"

namespace braidrep::catalog {

namespace detail {

inline void require_nonzero(Complex t, const char* what) {
  if (t == Complex(0.0, 0.0) || !std::isfinite(t.real()) || !std::isfinite(t.imag())) {
    throw Error(ErrorKind::InvalidParameter, std::string(what) + " must be a nonzero finite number");
  }
}

inline Eigen::Index ipow(Eigen::Index b, int e) {
  Eigen::Index r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

/// All words of length len over {0..base-1} in lexicographic order.
inline std::vector<std::vector<int>> all_words(int base, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(static_cast<std::size_t>(len), 0);
  const auto total = ipow(base, len);
  for (Eigen::Index i = 0; i < total; ++i) {
    out.push_back(w);
    for (int pos = len - 1; pos >= 0; --pos) {
      if (++w[static_cast<std::size_t>(pos)] < base) break;
      w[static_cast<std::size_t>(pos)] = 0;
    }
  }
  return out;
}

/// Big-endian index of a word.
inline Eigen::Index word_index(const std::vector<int>& w, int base) {
  Eigen::Index idx = 0;
  for (int v : w) idx = idx * base + v;
  return idx;
}

/// Chain label ((j1,j2),(j2,j3),...) flattened.
inline std::vector<int> chain_label(const std::vector<int>& j) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < j.size(); ++i) {
    out.push_back(j[i]);
    out.push_back(j[i + 1]);
  }
  return out;
}

/// Tuple over all flattened pair-tuples with mu = 1 on chains. `step(k, word)`
/// returns (image word, scalar) for generator k (0-based) on a chain word.
/// Off the chains the action is the identity.
inline FiveTuple chain_tuple(int base, int n,
                             const std::function<std::pair<std::vector<int>, Complex>(int, const std::vector<int>&)>& step) {
  FiveTuple t;
  t.n = n;
  t.points = all_words(base, 2 * (n - 1));
  const auto np = t.points.size();
  t.mu.assign(np, 0.0);
  t.nu.assign(np, 1);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < np; ++i) index[t.points[i]] = i;
  const auto words = all_words(base, n);
  for (const auto& w : words) t.mu[index.at(chain_label(w))] = 1.0;
  for (int k = 0; k < n - 1; ++k) {
    Permutation p(np);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::map<std::size_t, CMatrix> blocks;
    for (const auto& w : words) {
      const auto [image, scalar] = step(k, w);
      const auto x = index.at(chain_label(w));
      p[x] = index.at(chain_label(image));
      blocks[x] = CMatrix::Constant(1, 1, scalar);
    }
    t.action.push_back(std::move(p));
    t.cocycle.push_back(std::move(blocks));
  }
  t.derive_inverses();
  return t;
}

}  // namespace detail

/// n x n matrices: identity with [[0, t], [1, 0]] at rows/cols k, k+1.
inline Representation standard(int n, Complex t) {
  if (n < 3) throw Error(ErrorKind::InvalidParameter, "standard needs n >= 3");
  detail::require_nonzero(t, "t");
  Representation rep;
  rep.n = n;
  rep.dim = n;
  for (int k = 0; k < n - 1; ++k) {
    CMatrix m = CMatrix::Identity(n, n);
    m(k, k) = 0.0;
    m(k + 1, k + 1) = 0.0;
    m(k, k + 1) = t;
    m(k + 1, k) = 1.0;
    rep.generators.push_back(std::move(m));
  }
  return rep;
}

/// X = {0,1}^{n-1}; support delta_0 = 0 and delta_j = e_j. pi_k swaps
/// delta_k and delta_{k+1} for k <= n-2, pi_{n-1} swaps delta_0 and
/// delta_{n-1}; every other point is fixed. U(tau_k, y) = 1 + (t-1)(pi_k y)_k.
inline FiveTuple standard_tuple(int n, Complex t) {
  if (n < 3) throw Error(ErrorKind::InvalidParameter, "standard_tuple needs n >= 3");
  detail::require_nonzero(t, "t");
  FiveTuple tu;
  tu.n = n;
  tu.points = detail::all_words(2, n - 1);
  const auto np = tu.points.size();
  tu.mu.assign(np, 0.0);
  tu.nu.assign(np, 1);
  std::vector<std::size_t> delta(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<int> w(static_cast<std::size_t>(n - 1), 0);
    if (j > 0) w[static_cast<std::size_t>(j - 1)] = 1;
    delta[static_cast<std::size_t>(j)] = static_cast<std::size_t>(detail::word_index(w, 2));
    tu.mu[delta[static_cast<std::size_t>(j)]] = 1.0;
  }
  for (int k = 1; k <= n - 1; ++k) {
    Permutation p(np);
    std::iota(p.begin(), p.end(), std::size_t{0});
    const auto a = delta[static_cast<std::size_t>(k == n - 1 ? 0 : k)];
    const auto b = delta[static_cast<std::size_t>(k == n - 1 ? n - 1 : k + 1)];
    p[a] = b;
    p[b] = a;
    std::map<std::size_t, CMatrix> blocks;
    for (auto y : delta) {
      const int coord = tu.points[p[y]][static_cast<std::size_t>(k - 1)];
      blocks[y] = CMatrix::Constant(1, 1, 1.0 + (t - 1.0) * static_cast<double>(coord));
    }
    tu.action.push_back(std::move(p));
    tu.cocycle.push_back(std::move(blocks));
  }
  tu.derive_inverses();
  return tu;
}

/// (n-1) x (n-1) reduced Burau matrices.
inline Representation burau(int n, Complex t) {
  if (n < 3) throw Error(ErrorKind::InvalidParameter, "burau needs n >= 3");
  detail::require_nonzero(t, "t");
  const int d = n - 1;
  Representation rep;
  rep.n = n;
  rep.dim = d;
  for (int k = 1; k <= n - 1; ++k) {
    CMatrix m = CMatrix::Identity(d, d);
    if (k == 1) {
      m(0, 0) = -t;
      m(0, 1) = 1.0;
    } else if (k == n - 1) {
      m(d - 1, d - 2) = t;
      m(d - 1, d - 1) = -t;
    } else {
      const int r = k - 1;
      m(r, r - 1) = t;
      m(r, r) = -t;
      m(r, r + 1) = 1.0;
    }
    rep.generators.push_back(std::move(m));
  }
  return rep;
}

/// c_k(v_{j_1} ... v_{j_n}) = q(j_k, j_{k+1}) v_{... j_{k+1} j_k ...} on
/// (C^m)^{tensor n}, big-endian basis order.
inline Representation diagonal_local(const CMatrix& q, int n) {
  if (q.rows() != q.cols() || q.rows() < 1) throw Error(ErrorKind::InvalidParameter, "q must be square");
  if (n < 2) throw Error(ErrorKind::InvalidParameter, "diagonal_local needs n >= 2");
  for (Eigen::Index i = 0; i < q.size(); ++i) detail::require_nonzero(q(i), "every q entry");
  const int m = static_cast<int>(q.rows());
  const auto words = detail::all_words(m, n);
  const auto dim = static_cast<Eigen::Index>(words.size());
  Representation rep;
  rep.n = n;
  rep.dim = static_cast<int>(dim);
  for (int k = 0; k < n - 1; ++k) {
    CMatrix c = CMatrix::Zero(dim, dim);
    for (const auto& w : words) {
      auto img = w;
      std::swap(img[static_cast<std::size_t>(k)], img[static_cast<std::size_t>(k + 1)]);
      c(detail::word_index(img, m), detail::word_index(w, m)) =
          q(w[static_cast<std::size_t>(k)], w[static_cast<std::size_t>(k + 1)]);
    }
    rep.generators.push_back(std::move(c));
  }
  return rep;
}

/// Pair-tuple model: points ((a_1,b_1),...,(a_{n-1},b_{n-1})) flattened,
/// mu = 1 on chains b_i = a_{i+1}, U(tau_k, x) = q(a_k, b_k).
inline FiveTuple diagonal_local_tuple(const CMatrix& q, int n) {
  if (q.rows() != q.cols() || q.rows() < 1) throw Error(ErrorKind::InvalidParameter, "q must be square");
  if (n < 2) throw Error(ErrorKind::InvalidParameter, "diagonal_local needs n >= 2");
  for (Eigen::Index i = 0; i < q.size(); ++i) detail::require_nonzero(q(i), "every q entry");
  return detail::chain_tuple(static_cast<int>(q.rows()), n, [&](int k, const std::vector<int>& w) {
    auto img = w;
    std::swap(img[static_cast<std::size_t>(k)], img[static_cast<std::size_t>(k + 1)]);
    return std::make_pair(img, Complex(q(w[static_cast<std::size_t>(k)], w[static_cast<std::size_t>(k + 1)])));
  });
}

/// Explicit finite group by multiplication table; product[g][h] = gh.
struct GroupTable {
  int order = 0;
  std::vector<std::vector<int>> product;
  std::vector<int> inverse;
  int identity = 0;

  int mul(int g, int h) const { return product[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]; }
  int inv(int g) const { return inverse[static_cast<std::size_t>(g)]; }
  int conj(int g, int t) const { return mul(mul(g, t), inv(g)); }

  /// Associativity, identity and inverse laws, exhaustively.
  void validate() const {
    if (order < 1 || product.size() != static_cast<std::size_t>(order) ||
        inverse.size() != static_cast<std::size_t>(order) || identity < 0 || identity >= order) {
      throw Error(ErrorKind::InvalidParameter, "malformed group table");
    }
    for (const auto& row : product) {
      if (row.size() != static_cast<std::size_t>(order)) throw Error(ErrorKind::InvalidParameter, "malformed group table");
      for (int v : row) {
        if (v < 0 || v >= order) throw Error(ErrorKind::InvalidParameter, "product outside the group");
      }
    }
    for (int g = 0; g < order; ++g) {
      if (mul(identity, g) != g || mul(g, identity) != g) {
        throw Error(ErrorKind::InvalidParameter, "identity law fails", {g});
      }
      if (inv(g) < 0 || inv(g) >= order || mul(g, inv(g)) != identity || mul(inv(g), g) != identity) {
        throw Error(ErrorKind::InvalidParameter, "inverse law fails", {g});
      }
      for (int h = 0; h < order; ++h) {
        for (int k = 0; k < order; ++k) {
          if (mul(mul(g, h), k) != mul(g, mul(h, k))) {
            throw Error(ErrorKind::InvalidParameter, "associativity fails", {g, h, k});
          }
        }
      }
    }
  }
};

struct ConjClosedSubset {
  std::vector<int> elements;

  void validate(const GroupTable& h) const {
    std::set<int> s(elements.begin(), elements.end());
    if (s.empty() || s.size() != elements.size()) {
      throw Error(ErrorKind::InvalidParameter, "subset must be nonempty with distinct elements");
    }
    for (int t : elements) {
      if (t < 0 || t >= h.order) throw Error(ErrorKind::InvalidParameter, "subset element outside the group");
      for (int g = 0; g < h.order; ++g) {
        if (!s.contains(h.conj(g, t))) {
          throw Error(ErrorKind::InvalidParameter, "subset not closed under conjugation", {g, t});
        }
      }
    }
  }
};

/// gamma(g, t) for g in H, t in T.
struct GammaCocycle {
  std::map<std::pair<int, int>, Complex> values;

  Complex at(int g, int t) const {
    auto it = values.find({g, t});
    if (it == values.end()) {
      throw Error(ErrorKind::InvalidGamma, "gamma undefined at (" + std::to_string(g) + "," + std::to_string(t) + ")",
                  {g, t});
    }
    return it->second;
  }

  /// gamma(1, t) = 1 and gamma(gh, t) = gamma(g, h t h^{-1}) gamma(h, t), exhaustively.
  void validate(const GroupTable& h, const ConjClosedSubset& tset, double tol = 1e-12) const {
    for (int t : tset.elements) {
      if (std::abs(at(h.identity, t) - 1.0) > tol) {
        throw Error(ErrorKind::InvalidGamma, "gamma(1, t) != 1 at t = " + std::to_string(t), {h.identity, t});
      }
      for (int g = 0; g < h.order; ++g) {
        if (at(g, t) == Complex(0.0, 0.0)) throw Error(ErrorKind::InvalidGamma, "gamma vanishes", {g, t});
        for (int k = 0; k < h.order; ++k) {
          const Complex lhs = at(h.mul(g, k), t);
          const Complex rhs = at(g, h.conj(k, t)) * at(k, t);
          if (std::abs(lhs - rhs) > tol * std::max(1.0, std::abs(lhs))) {
            throw Error(ErrorKind::InvalidGamma,
                        "gamma(gh,t) != gamma(g,hth^-1) gamma(h,t) at g=" + std::to_string(g) +
                            " h=" + std::to_string(k) + " t=" + std::to_string(t),
                        {g, k, t}, std::abs(lhs - rhs));
          }
        }
      }
    }
  }
};

/// Symmetric group on {0..k-1}; elements are the permutations in
/// lexicographic order (element 0 is the identity), (gh)(x) = g(h(x)).
struct SymmetricGroup {
  GroupTable table;
  std::vector<std::vector<int>> perms;

  int sign(int g) const {
    const auto& p = perms[static_cast<std::size_t>(g)];
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        if (p[i] > p[j]) s = -s;
      }
    }
    return s;
  }

  /// Elements moving exactly two points.
  ConjClosedSubset transpositions() const {
    ConjClosedSubset t;
    for (std::size_t g = 0; g < perms.size(); ++g) {
      int moved = 0;
      for (std::size_t i = 0; i < perms[g].size(); ++i) moved += perms[g][i] != static_cast<int>(i);
      if (moved == 2) t.elements.push_back(static_cast<int>(g));
    }
    return t;
  }
};

inline SymmetricGroup symmetric_group(int k) {
  SymmetricGroup s;
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  do {
    s.perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < s.perms.size(); ++i) index[s.perms[i]] = static_cast<int>(i);
  auto& t = s.table;
  t.order = static_cast<int>(s.perms.size());
  t.identity = 0;
  t.product.assign(s.perms.size(), std::vector<int>(s.perms.size()));
  t.inverse.assign(s.perms.size(), 0);
  for (std::size_t g = 0; g < s.perms.size(); ++g) {
    std::vector<int> inv(static_cast<std::size_t>(k));
    for (int x = 0; x < k; ++x) inv[static_cast<std::size_t>(s.perms[g][static_cast<std::size_t>(x)])] = x;
    t.inverse[g] = index.at(inv);
    for (std::size_t h = 0; h < s.perms.size(); ++h) {
      std::vector<int> gh(static_cast<std::size_t>(k));
      for (int x = 0; x < k; ++x) {
        gh[static_cast<std::size_t>(x)] = s.perms[g][static_cast<std::size_t>(s.perms[h][static_cast<std::size_t>(x)])];
      }
      t.product[g][h] = index.at(gh);
    }
  }
  return s;
}

inline GammaCocycle gamma_trivial(const GroupTable& h, const ConjClosedSubset& tset) {
  GammaCocycle c;
  for (int g = 0; g < h.order; ++g) {
    for (int t : tset.elements) c.values[{g, t}] = 1.0;
  }
  return c;
}

/// gamma(g, t) = chi(g) f(g t g^{-1}) / f(t) for a character chi and any
/// nonzero f on T; satisfies both cocycle identities.
inline GammaCocycle gamma_coboundary(const GroupTable& h, const ConjClosedSubset& tset,
                                     const std::function<Complex(int)>& chi,
                                     const std::map<int, Complex>& f) {
  GammaCocycle c;
  for (int g = 0; g < h.order; ++g) {
    for (int t : tset.elements) c.values[{g, t}] = chi(g) * f.at(h.conj(g, t)) / f.at(t);
  }
  return c;
}

namespace detail {

inline void require_group_data(const GroupTable& h, const ConjClosedSubset& tset, const GammaCocycle& gamma, int n) {
  if (n < 2) throw Error(ErrorKind::InvalidParameter, "group_cocycle_local needs n >= 2");
  h.validate();
  tset.validate(h);
  gamma.validate(h, tset);
}

}  // namespace detail

/// c(v_s (x) v_t) = gamma(s, t) v_{s t s^{-1}} (x) v_s on V^{tensor n}, basis
/// indexed by positions in T.elements, big-endian.
inline Representation group_cocycle_local(const GroupTable& h, const ConjClosedSubset& tset,
                                          const GammaCocycle& gamma, int n) {
  detail::require_group_data(h, tset, gamma, n);
  const int m = static_cast<int>(tset.elements.size());
  std::map<int, int> pos;
  for (int i = 0; i < m; ++i) pos[tset.elements[static_cast<std::size_t>(i)]] = i;
  const auto words = detail::all_words(m, n);
  const auto dim = static_cast<Eigen::Index>(words.size());
  Representation rep;
  rep.n = n;
  rep.dim = static_cast<int>(dim);
  for (int k = 0; k < n - 1; ++k) {
    CMatrix c = CMatrix::Zero(dim, dim);
    for (const auto& w : words) {
      const int s = tset.elements[static_cast<std::size_t>(w[static_cast<std::size_t>(k)])];
      const int t = tset.elements[static_cast<std::size_t>(w[static_cast<std::size_t>(k + 1)])];
      auto img = w;
      img[static_cast<std::size_t>(k)] = pos.at(h.conj(s, t));
      img[static_cast<std::size_t>(k + 1)] = pos.at(s);
      c(detail::word_index(img, m), detail::word_index(w, m)) = gamma.at(s, t);
    }
    rep.generators.push_back(std::move(c));
  }
  validate_representation(rep);
  for (const auto& r : braid_relation_residuals(rep)) {
    if (r.residual > 1e-9) {
      throw Error(ErrorKind::InvalidGamma, "braid relation " + r.relation + " fails", {r.i, r.j}, r.residual);
    }
  }
  return rep;
}

/// Pair-tuple model on T positions: mu = 1 on chains, pi_k sends the chain of
/// (..., g_k, g_{k+1}, ...) to that of (..., g_k g_{k+1} g_k^{-1}, g_k, ...),
/// U(tau_k, x) = gamma(g_k, g_{k+1}).
inline FiveTuple group_cocycle_local_tuple(const GroupTable& h, const ConjClosedSubset& tset,
                                           const GammaCocycle& gamma, int n) {
  detail::require_group_data(h, tset, gamma, n);
  const int m = static_cast<int>(tset.elements.size());
  std::map<int, int> pos;
  for (int i = 0; i < m; ++i) pos[tset.elements[static_cast<std::size_t>(i)]] = i;
  return detail::chain_tuple(m, n, [&](int k, const std::vector<int>& w) {
    const int s = tset.elements[static_cast<std::size_t>(w[static_cast<std::size_t>(k)])];
    const int t = tset.elements[static_cast<std::size_t>(w[static_cast<std::size_t>(k + 1)])];
    auto img = w;
    img[static_cast<std::size_t>(k)] = pos.at(h.conj(s, t));
    img[static_cast<std::size_t>(k + 1)] = pos.at(s);
    return std::make_pair(img, gamma.at(s, t));
  });
}

using PairWeight = std::function<Complex(int, int)>;

/// q(a, b) = 1 if a == b, t otherwise.
inline PairWeight eg_symmetric_q(Complex t) {
  return [t](int a, int b) { return a == b ? Complex(1.0, 0.0) : t; };
}

struct EgFamily {
  Representation rep;
  FiveTuple tuple;
};

/// phi(tau_k) v_x = q(x_k, x_{k+1}) v_{sigma_k x} on the permutation orbit of
/// z (sorted), and the tuple over Y^n with mu = 1 on that orbit.
inline EgFamily eg_family(const std::vector<int>& z, const PairWeight& q, int n) {
  if (n < 2 || z.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::InvalidParameter, "z must have n >= 2 entries");
  }
  for (int v : z) {
    if (v < 0) throw Error(ErrorKind::InvalidParameter, "z entries must be nonnegative");
  }
  std::vector<int> values(z.begin(), z.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (int a : values) {
    for (int b : values) detail::require_nonzero(q(a, b), "q");
  }

  std::vector<std::vector<int>> orbit;
  auto sorted = z;
  std::sort(sorted.begin(), sorted.end());
  do {
    orbit.push_back(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  std::map<std::vector<int>, Eigen::Index> orbit_index;
  for (std::size_t i = 0; i < orbit.size(); ++i) orbit_index[orbit[i]] = static_cast<Eigen::Index>(i);

  EgFamily out;
  const auto dim = static_cast<Eigen::Index>(orbit.size());
  out.rep.n = n;
  out.rep.dim = static_cast<int>(dim);
  for (int k = 0; k < n - 1; ++k) {
    CMatrix m = CMatrix::Zero(dim, dim);
    for (const auto& x : orbit) {
      auto img = x;
      std::swap(img[static_cast<std::size_t>(k)], img[static_cast<std::size_t>(k + 1)]);
      m(orbit_index.at(img), orbit_index.at(x)) = q(x[static_cast<std::size_t>(k)], x[static_cast<std::size_t>(k + 1)]);
    }
    out.rep.generators.push_back(std::move(m));
  }

  auto& t = out.tuple;
  t.n = n;
  for (const auto& w : detail::all_words(static_cast<int>(values.size()), n)) {
    std::vector<int> label;
    for (int i : w) label.push_back(values[static_cast<std::size_t>(i)]);
    t.points.push_back(std::move(label));
  }
  const auto np = t.points.size();
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < np; ++i) index[t.points[i]] = i;
  t.mu.assign(np, 0.0);
  t.nu.assign(np, 1);
  for (const auto& x : orbit) t.mu[index.at(x)] = 1.0;
  for (int k = 0; k < n - 1; ++k) {
    Permutation p(np);
    std::map<std::size_t, CMatrix> blocks;
    for (std::size_t i = 0; i < np; ++i) {
      auto img = t.points[i];
      std::swap(img[static_cast<std::size_t>(k)], img[static_cast<std::size_t>(k + 1)]);
      p[i] = index.at(img);
      if (t.mu[i] > 0.0) {
        blocks[i] = CMatrix::Constant(
            1, 1, q(t.points[i][static_cast<std::size_t>(k)], t.points[i][static_cast<std::size_t>(k + 1)]));
      }
    }
    t.action.push_back(std::move(p));
    t.cocycle.push_back(std::move(blocks));
  }
  t.derive_inverses();
  return out;
}

/// X = {0,1}^n, coordinate transpositions, mu = 1, nu = 2, constant cocycle
/// A = [[1, 1], [0, 1]].
inline FiveTuple indecomposable_example(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidParameter, "indecomposable_example needs n >= 2");
  FiveTuple t;
  t.n = n;
  t.points = detail::all_words(2, n);
  const auto np = t.points.size();
  t.mu.assign(np, 1.0);
  t.nu.assign(np, 2);
  CMatrix a(2, 2);
  a << 1.0, 1.0, 0.0, 1.0;
  for (int k = 0; k < n - 1; ++k) {
    Permutation p(np);
    std::map<std::size_t, CMatrix> blocks;
    for (std::size_t i = 0; i < np; ++i) {
      auto img = t.points[i];
      std::swap(img[static_cast<std::size_t>(k)], img[static_cast<std::size_t>(k + 1)]);
      p[i] = static_cast<std::size_t>(detail::word_index(img, 2));
      blocks[i] = a;
    }
    t.action.push_back(std::move(p));
    t.cocycle.push_back(std::move(blocks));
  }
  t.derive_inverses();
  return t;
}

}  // namespace braidrep::catalog

#endif  // BRAIDREP_CATALOG_HPP_
