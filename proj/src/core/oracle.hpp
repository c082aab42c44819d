#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "core/gamma_ideal.hpp"
#include "core/poly.hpp"

namespace hilbworst {

using RationalPoint = std::vector<Rational>;

/// t-values of the subscheme supported at n+1 points whose evaluation matrix on
/// 1, x_1, ..., x_n is invertible: x_i x_j = c_0 + sum_k c_k x_k on the points gives t(i,j,k) = -c_k.
/// Throws Error(BasisCriterionFailure) for a singular evaluation matrix.
Assignment point_from_configuration(const std::vector<RationalPoint>& points, int n);

struct FiberReport {
  /// Dimension of the fiber of the universal family over the t-point.
  int dimension = 0;
  /// 1, x_1, ..., x_n reduce to a basis of the fiber.
  bool basis_ok = false;
  /// Dimension of the span forced to zero by non-commuting multiplication operators.
  int defect_rank = 0;
};

/// The family's relations x_a x_b = -sum_k t(a,b,k) x_k - c_ab define operators M_a on
/// span(1, x_1..x_n); the fiber is that span modulo the smallest M-stable subspace
/// containing every commutator defect (M_a M_b - M_b M_a) v.
FiberReport fiber_check(const Assignment& tvals, int n);

/// Every generator of J vanishes at tvals (unassigned t are zero).
bool in_variety(const IdealPresentation& J, const Assignment& tvals);

enum class SampleKind { Configuration, Flipped, Subspace, Generic, Perturbed };
std::string to_string(SampleKind k);

/// Rationals p/q with |p| <= height and 1 <= q <= height, drawn from the raw engine output.
class RationalSampler {
 public:
  RationalSampler(std::uint64_t seed, int n, int height = 10);
  Rational next();
  int index(int bound);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  int height_;
};

/// Draws configurations until the evaluation matrix is invertible.
std::vector<RationalPoint> sample_configuration(RationalSampler& rs, int n);
Assignment sample_subspace_point(RationalSampler& rs, int n);
Assignment sample_generic_point(RationalSampler& rs, int n);

struct OracleSample {
  std::size_t index = 0;
  SampleKind kind = SampleKind::Generic;
  Assignment tvals;
  bool in_variety = false;
  bool associative = false;
  FiberReport fiber;
  bool agree() const { return in_variety == associative && associative == fiber.basis_ok; }
};

struct OracleReport {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<OracleSample> samples;
  std::size_t members = 0;
  std::size_t non_members = 0;
  std::size_t disagreements = 0;
  bool ok() const { return disagreements == 0 && !samples.empty(); }
};

/// Samples cycle through configuration, flipped configuration, subspace, generic and
/// perturbed configuration points; each is tested by symbolic evaluation, table
/// associativity and the fiber check.
OracleReport run_oracle(int n, std::uint64_t seed, std::size_t samples);

}  // namespace hilbworst
