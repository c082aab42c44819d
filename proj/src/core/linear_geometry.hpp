#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/gamma_ideal.hpp"
#include "core/rational.hpp"

namespace hilbworst {

/// The coordinate subspace L_{A,B}: t(i,j,k) may be nonzero only for i != j in A and k in B.
/// With `diagonal` the coordinates t(i,i,k), i in A, k in B, are free as well.
struct LinearSubspaceSpec {
  int n = 0;
  std::vector<int> A;
  std::vector<int> B;
  bool diagonal = false;
};

/// Throws Error(InvalidArgument) if A and B overlap, repeat an index or leave 1..n.
void validate_spec(const LinearSubspaceSpec& spec);

/// Whether t(i,j,k) is a free coordinate of L_{A,B}.
bool in_support(const LinearSubspaceSpec& spec, int i, int j, int k);

/// a(a-1)b/2, or a(a+1)b/2 with the diagonal.
std::int64_t subspace_dim(const LinearSubspaceSpec& spec);

/// Sets every t-variable outside the support to zero.
Poly restrict_to_subspace(const Poly& p, const LinearSubspaceSpec& spec);

enum class ContainmentMethod {
  /// Substitute into every generator of J and compare with zero.
  Symbolic,
  /// Every monomial of gamma(i,j,k;l) is t(i,j,lambda) t(k,lambda,l); count the monomials
  /// with both factors in the support and restrict symbolically only if any survive.
  TermSupport,
};

struct ContainmentReport {
  LinearSubspaceSpec spec;
  ContainmentMethod method = ContainmentMethod::Symbolic;
  std::size_t generators_checked = 0;
  std::size_t surviving_terms = 0;
  std::vector<std::string> nonzero;
  bool ok() const { return nonzero.empty(); }
};

/// Symbolic for n <= 6 unless a method is forced.
ContainmentReport containment_check(const LinearSubspaceSpec& spec);
ContainmentReport containment_check(const LinearSubspaceSpec& spec, ContainmentMethod method);

struct LinearMaximum {
  int n = 0;
  /// max over 1 <= a <= n-1 of a(a-1)(n-a)/2.
  BigInt dim;
  std::vector<int> maximizers;
  /// floor and ceiling of ((n+1) + sqrt(n^2-n+1))/3, computed with an integer square root.
  int a_floor = 0;
  int a_ceil = 0;
  /// The closed formula for n mod 3 and the subspace count exponent m.
  Rational case_formula;
  int m = 0;
  BigInt count_lower_bound;
  bool formula_matches = false;
  bool maximizers_within_floor_ceil = false;
  bool m_is_maximizer = false;
  std::vector<std::string> discrepancies;
};

LinearMaximum max_linear_dim(int n);

/// n^2 + n.
std::int64_t smoothing_dim(int n);

struct SubspaceSummary {
  LinearMaximum maximum;
  std::int64_t smoothing = 0;
  /// dim of the best linear subspace exceeds the smoothing component.
  bool reducible = false;
};

SubspaceSummary subspace_summary(int n);

/// Up to `cap` optimal specs: A ranges over the m-subsets of 1..n in lexicographic order, B is the complement.
std::vector<LinearSubspaceSpec> enumerate_optimal(int n, std::size_t cap);

}  // namespace hilbworst
