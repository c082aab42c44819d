#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/gamma_ideal.hpp"
#include "core/poly.hpp"

namespace hilbworst {

/// Structure constants v_i * v_j = sum_k s(i,j,k) v_k for 0 <= i,j,k <= n, stored densely.
template <class C>
struct BasicMulTable {
  int n = 0;
  std::vector<C> s;

  BasicMulTable() = default;
  explicit BasicMulTable(int n_, const C& fill = C()) : n(n_), s(static_cast<std::size_t>((n_ + 1) * (n_ + 1) * (n_ + 1)), fill) {}

  C& at(int i, int j, int k) { return s[index(i, j, k)]; }
  const C& at(int i, int j, int k) const { return s[index(i, j, k)]; }

 private:
  std::size_t index(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0 || i > n || j > n || k > n) fail(ErrorCode::IndexOutOfRange, "table index out of range");
    return static_cast<std::size_t>((i * (n + 1) + j) * (n + 1) + k);
  }
};

using MulTable = BasicMulTable<Rational>;
using SymbolicMulTable = BasicMulTable<Poly>;

using Triple = std::array<int, 3>;

/// Throws Error(MalformedTable) naming the first violated commutativity or unit relation.
void validate_table(const MulTable& T);

/// Residual of (v_j v_i) v_k - v_j (v_i v_k) in the basis v_0..v_n for every triple (i,j,k).
template <class C>
std::map<Triple, std::vector<C>> residuals_unchecked(const BasicMulTable<C>& T) {
  const int n = T.n;
  std::map<Triple, std::vector<C>> out;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k) {
        std::vector<C> r(static_cast<std::size_t>(n + 1), C());
        for (int l = 0; l <= n; ++l)
          for (int lam = 0; lam <= n; ++lam) {
            r[l] += T.at(j, i, lam) * T.at(lam, k, l);
            r[l] -= T.at(i, k, lam) * T.at(j, lam, l);
          }
        out.emplace(Triple{i, j, k}, std::move(r));
      }
  return out;
}

std::map<Triple, std::vector<Rational>> associativity_residual(const MulTable& T);
bool is_associative(const MulTable& T);

/// Fully generic commutative unital table: s(min(i,j),max(i,j),k) for i,j >= 1, unit rows for 0.
SymbolicMulTable generic_table(int n);

/// gamma~(i,j,k;l) = sum_{lambda=0..n} s(i,j,lambda) s(k,lambda,l) - s(i,k,lambda) s(j,lambda,l).
Poly gamma_tilde(int i, int j, int k, int l, int n);

/// Commutativity, unit relations and the associativity quadrics with j != k, labelled
/// "comm(i,j;k)", "unit(i)", "unit(i;j)", "assoc(i,j,k;l)".
IdealPresentation b_ideal_generators(int n);

/// s(0,j,k) and s(j,0,k) -> [j == k]; s(i,j,0) -> -(1/(n-1)) sum_lambda gamma(i,j,lambda;lambda); s(i,j,k) -> t(i,j,k).
Poly pi_map(const Poly& p, int n);
/// t(i,j,k) -> s(i,j,k).
Poly iota_map(const Poly& q, int n);
/// Substitution modulo the commutativity and unit relations: s(i,j,k) -> s(min,max,k), unit rows -> 0/1.
Poly reduce_mod_J0(const Poly& p, int n);

struct BasedIsomorphismReport {
  int n = 0;
  /// Generators of the associativity ideal whose image under pi lies in J.
  std::size_t forward_checked = 0;
  std::vector<std::string> forward_failures;
  /// Generators of J whose image under iota is a constant combination of reduced associativity quadrics.
  std::size_t backward_checked = 0;
  std::vector<std::string> backward_failures;
  /// Every s(i,j,0) agrees modulo the ideal with a polynomial in the s(i,j,k), i,j,k >= 1.
  std::size_t surjectivity_checked = 0;
  std::vector<std::string> surjectivity_failures;
  bool pi_iota_identity = false;
  bool ok() const {
    return forward_failures.empty() && backward_failures.empty() && surjectivity_failures.empty() && pi_iota_identity;
  }
};

BasedIsomorphismReport verify_based_isomorphism(int n);

/// The table of the universal family at a t-point: s(i,j,k) = -t(i,j,k),
/// s(i,j,0) = -sum_k gamma(i,j,k;k)(t) / (n-1), unit rows for 0. Unassigned t are zero.
MulTable table_from_point(const Assignment& tvals, int n);

/// p(-t) == p for every generator of J.
bool sign_flip_invariant(const IdealPresentation& J);

}  // namespace hilbworst
