#ifndef BRAIDREP_BRAID_HPP_
#define BRAIDREP_BRAID_HPP_

#include <cstdlib>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "braidrep/error.hpp"
#include "braidrep/linalg.hpp"

namespace braidrep {

/// Strand count of B_n; generators are tau_1 .. tau_{n-1}.
class BraidContext {
 public:
  explicit BraidContext(int n) : n_(n) {
    if (n < 2) throw Error(ErrorKind::InvalidParameter, "braid group needs n >= 2");
  }
  int n() const noexcept { return n_; }
  int generator_count() const noexcept { return n_ - 1; }

 private:
  int n_;
};

/// Word in the generators: letter k stands for tau_k, -k for its inverse.
struct BraidWord {
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;

  void validate(const BraidContext& ctx) const {
    for (int l : letters) {
      if (l == 0 || std::abs(l) > ctx.generator_count()) {
        throw Error(ErrorKind::InvalidParameter,
                    "letter " + std::to_string(l) + " outside [1, " +
                        std::to_string(ctx.generator_count()) + "]");
      }
    }
  }
};

inline BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

struct Provenance;

/// Invertible matrix per generator on a common space; generators[k] is
/// psi(tau_{k+1}).
struct Representation {
  int n = 2;
  int dim = 0;
  std::vector<CMatrix> generators;
  std::shared_ptr<const Provenance> provenance;

  BraidContext context() const { return BraidContext(n); }
};

/// Checks shape, finiteness and invertibility of every generator.
inline void validate_representation(const Representation& rep, double eps_inv = 1e-12) {
  const BraidContext ctx(rep.n);
  if (static_cast<int>(rep.generators.size()) != ctx.generator_count()) {
    throw Error(ErrorKind::MissingGenerator,
                "expected " + std::to_string(ctx.generator_count()) + " generators, got " +
                    std::to_string(rep.generators.size()));
  }
  for (std::size_t k = 0; k < rep.generators.size(); ++k) {
    const auto& g = rep.generators[k];
    if (g.rows() != rep.dim || g.cols() != rep.dim) {
      throw Error(ErrorKind::DimensionMismatch,
                  "generator " + std::to_string(k + 1) + " is not " + std::to_string(rep.dim) + "x" +
                      std::to_string(rep.dim));
    }
    if (!linalg::all_finite(g)) {
      throw Error(ErrorKind::InvalidParameter, "generator " + std::to_string(k + 1) + " has non-finite entries");
    }
    if (linalg::inverse_condition(g) <= eps_inv) {
      throw Error(ErrorKind::SingularGenerator, "generator " + std::to_string(k + 1) + " is singular",
                  {static_cast<long>(k + 1)});
    }
  }
}

/// Cancels adjacent (k, -k) pairs; free reduction only.
inline BraidWord free_reduce(const BraidWord& w) {
  BraidWord out;
  for (int l : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -l) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

/// Ordered product of psi_k^{+-1} over the letters; empty word is the identity.
inline CMatrix evaluate_word(const Representation& rep, const BraidWord& w, double eps_inv = 1e-12) {
  w.validate(rep.context());
  std::map<int, CMatrix> inverses;
  CMatrix out = CMatrix::Identity(rep.dim, rep.dim);
  for (int l : w.letters) {
    const auto k = static_cast<std::size_t>(std::abs(l) - 1);
    if (k >= rep.generators.size()) {
      throw Error(ErrorKind::MissingGenerator, "generator " + std::to_string(std::abs(l)) + " missing");
    }
    if (l > 0) {
      out = out * rep.generators[k];
    } else {
      auto it = inverses.find(l);
      if (it == inverses.end()) {
        if (linalg::inverse_condition(rep.generators[k]) <= eps_inv) {
          throw Error(ErrorKind::SingularGenerator, "generator " + std::to_string(-l) + " is singular",
                      {static_cast<long>(-l)});
        }
        it = inverses.emplace(l, rep.generators[k].inverse()).first;
      }
      out = out * it->second;
    }
  }
  return out;
}

struct RelationResidual {
  std::string relation;  // e.g. "braid(1,2)" or "commute(1,3)"
  int i = 0;             // 1-based generator numbers
  int j = 0;
  double residual = 0.0;
};

/// One residual per defining relation of B_n:
/// ||LHS - RHS||_F / max(||LHS||_F, 1).
inline std::vector<RelationResidual> braid_relation_residuals(const std::map<int, CMatrix>& assignment,
                                                              int n) {
  const BraidContext ctx(n);
  for (int k = 1; k <= ctx.generator_count(); ++k) {
    if (!assignment.contains(k)) {
      throw Error(ErrorKind::MissingGenerator, "generator " + std::to_string(k) + " missing", {k});
    }
  }
  std::vector<CMatrix> gens;
  for (int k = 1; k <= ctx.generator_count(); ++k) gens.push_back(assignment.at(k));
  linalg::require_same_square(gens, "braid generator");

  auto rel = [](const CMatrix& lhs, const CMatrix& rhs) {
    return (lhs - rhs).norm() / std::max(lhs.norm(), 1.0);
  };
  std::vector<RelationResidual> out;
  for (int i = 1; i <= ctx.generator_count(); ++i) {
    for (int j = i + 1; j <= ctx.generator_count(); ++j) {
      const CMatrix& a = gens[static_cast<std::size_t>(i - 1)];
      const CMatrix& b = gens[static_cast<std::size_t>(j - 1)];
      if (j == i + 1) {
        out.push_back({"braid(" + std::to_string(i) + "," + std::to_string(j) + ")", i, j,
                       rel(a * b * a, b * a * b)});
      } else {
        out.push_back({"commute(" + std::to_string(i) + "," + std::to_string(j) + ")", i, j,
                       rel(a * b, b * a)});
      }
    }
  }
  return out;
}

inline std::vector<RelationResidual> braid_relation_residuals(const Representation& rep) {
  std::map<int, CMatrix> assignment;
  for (std::size_t k = 0; k < rep.generators.size(); ++k) {
    assignment.emplace(static_cast<int>(k + 1), rep.generators[k]);
  }
  return braid_relation_residuals(assignment, rep.n);
}

inline double max_relation_residual(const std::vector<RelationResidual>& rs) {
  double worst = 0.0;
  for (const auto& r : rs) worst = std::max(worst, r.residual);
  return worst;
}

}  // namespace braidrep

#endif  // BRAIDREP_BRAID_HPP_
