#pragma once

#include <map>
#include <utility>
#include <vector>

#include "core/gamma_ideal.hpp"
#include "core/module_elt.hpp"
#include "core/taylor.hpp"

namespace hilbworst {

/// The truncated Koszul-Tate resolution P^-2 -> P^-1 -> P^0 = S.
/// P^-1 has the e-symbols, P^-2 the Koszul squares e[a,b]v[c,d] and the S^q wedges
/// e[a,b]^e[c,d]; S-valued results are carried on the symbol 1.
class TruncatedResolution {
 public:
  explicit TruncatedResolution(int n);

  int n() const { return n_; }
  /// Generators of P^-2: every curly symbol followed by every wedge symbol.
  std::vector<BasisSymbol> degree_minus2_generators() const;

  /// d(e) = f(e); d(a v b) = f(a) b - f(b) a; d(w) = r(w); d(1) = 0.
  FreeModElt differential(const FreeModElt& m) const;

 private:
  int n_;
};

/// Derivation of cohomological degree 1 and internal degree -1 on the truncated
/// resolution, given on the free generators (e-symbols and S^q wedges); values on
/// Koszul squares follow the graded Leibniz rule d(ab) = d(a) b + (-1)^{|a|} a d(b).
class DerivationTrunc {
 public:
  DerivationTrunc(int n, bool drop_diagonal);

  int n() const { return n_; }
  int cohomological_degree() const { return 1; }
  int internal_degree() const { return -1; }
  bool drops_diagonal() const { return drop_diagonal_; }

  /// phi(e[l,m]) = sum_lambda t(l,m,lambda) x_lambda.
  Poly on_e(int l, int m) const;
  /// On e[i,j]^e[i,k]: sum_lambda t(i,j,lambda) e[k,lambda] - t(i,k,lambda) e[j,lambda];
  /// on a Koszul wedge e[a,b]^e[c,d]: -phi(e[c,d]) e[a,b] + phi(e[a,b]) e[c,d].
  FreeModElt on_wedge(const BasisSymbol& w) const;

  FreeModElt apply(const FreeModElt& m) const;

 private:
  Poly t(int i, int j, int k) const;
  int n_;
  bool drop_diagonal_;
};

/// phi lifting sum t(i,j,k) theta^{ij}_k. The miniversal flavor uses t(i,i,i) = 0;
/// the hilbert flavor keeps every t(i,j,k).
DerivationTrunc build_phi(int n, Flavor flavor = Flavor::Miniversal);

struct ClosednessEntry {
  BasisSymbol generator;
  FreeModElt residual;
};

/// [d, phi] = d phi + phi d on every e-symbol, every wedge and every Koszul square.
std::vector<ClosednessEntry> closedness_residual(const DerivationTrunc& phi);

struct CupEntry {
  BasisSymbol generator;
  /// phi(phi(g)) before reduction.
  Poly raw;
  /// Its residue in S/I.
  Poly value;
  /// sum_l gamma(i,j,k;l) x_l on e[i,j]^e[i,k], zero on Koszul wedges and squares.
  Poly expected;
  bool matches() const { return value == expected; }
};

/// phi o phi on every generator of P^-2.
std::vector<CupEntry> cup_product(const DerivationTrunc& phi);

struct KuranishiLocus {
  int n = 0;
  Flavor flavor = Flavor::Miniversal;
  /// Conditions for the existence of psi with phi o phi = psi o d modulo I.
  std::vector<Poly> constraints;
  /// Particular psi(e[l,m]) (free values set to zero).
  std::map<std::pair<int, int>, Poly> psi;
};

KuranishiLocus kuranishi_quadratic_locus(int n, Flavor flavor = Flavor::Miniversal);

struct ClassicalDglaComparison {
  int n = 0;
  SpanComparison spans;
  /// psi(e[l,m]) + c_{lm} reduces to zero modulo J for every l <= m.
  bool psi_is_minus_tail = false;
};

/// Classical second-order constraints (with t(i,i,i) -> 0) against the Kuranishi constraints.
ClassicalDglaComparison compare_classical_dgla(int n);

}  // namespace hilbworst
