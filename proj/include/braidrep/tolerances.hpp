#ifndef BRAIDREP_TOLERANCES_HPP_
#define BRAIDREP_TOLERANCES_HPP_

namespace braidrep {

// Default numerical thresholds. Every operation that compares floating-point
// quantities takes one of these (or a whole Tolerances) and can be overridden
// per call.
struct Tolerances {
  double cluster = 1e-8;   // eigenvalue grouping, relative to max(1, |lambda|_max)
  double herm = 1e-10;     // ||A - A^H||_F <= herm * ||A||_F
  double comm = 1e-9;      // ||[A,B]||_F <= comm * ||A||_F ||B||_F
  double null = 1e-10;     // singular values below null * s_max count as zero
  double orth = 1e-9;
  double res = 1e-9;
  double member = 1e-8;    // span membership, relative
  double rel = 1e-9;       // braid relations, relative Frobenius
  double inv = 1e-12;      // generator invertibility: s_min > inv * s_max
  double match = 1e-6;     // projection matching when deriving the action
  double validate = 1e-9;  // five-tuple validators
  double equiv = 1e-7;     // round-trip intertwiner residual
  double subspace = 1e-9;  // invariant-subspace checks
};

}  // namespace braidrep

#endif  // BRAIDREP_TOLERANCES_HPP_
