#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/gamma_ideal.hpp"
#include "core/module_elt.hpp"
#include "core/taylor.hpp"

namespace hilbworst {

/// f1(e[l,m]) = sum_lambda t(l,m,lambda) x_lambda.
Poly f1_of(int l, int m, int n);
/// c_{lm} = sum_k gamma(l,m,k;k) / (n-1).
Poly tail_of(int l, int m, int n);

/// Applies an e-symbol map S-linearly: sum coeff * image(a, b).
Poly apply_on_e(const FreeModElt& m, const std::function<Poly(int, int)>& image);

/// Images of every e-symbol under f1, in e_basis order.
std::vector<std::pair<BasisSymbol, Poly>> build_f1(int n);

/// r1 on a wedge: the trivial lift -f1(e_kl) e_ij + f1(e_ij) e_kl on Koszul wedges,
/// sum_lambda t(i,j,lambda) e[k,lambda] - t(i,k,lambda) e[j,lambda] on e[i,j]^e[i,k].
FreeModElt r1_of(const BasisSymbol& w, int n);
std::vector<std::pair<BasisSymbol, FreeModElt>> build_r1(int n);

struct WedgeResidual {
  BasisSymbol wedge;
  Poly residual;
};

/// f0 r1 + f1 r0 on every wedge.
std::vector<WedgeResidual> first_order_residual(int n);

/// One x_l-coefficient of (f1 r1 + f2 r0)(e[i,j]^e[i,k]) = 0 with the tails unknown:
/// gamma_part + sum tail_coeffs[(a,b)] * c_{ab} = 0.
struct ObstructionEquation {
  OrientedWedge wedge;
  int l = 0;
  Poly gamma_part;
  std::map<std::pair<int, int>, Rational> tail_coeffs;
};

std::vector<ObstructionEquation> obstruction_equations(int n);

struct SecondOrderObstruction {
  int n = 0;
  std::vector<ObstructionEquation> equations;
  /// Combinations of gamma parts that must vanish for the tails to exist.
  std::vector<Poly> constraints;
  /// Solved tails c_{lm}, l <= m (free tails set to zero).
  std::map<std::pair<int, int>, Poly> tails;
  std::map<std::pair<int, int>, bool> tail_determined;
};

SecondOrderObstruction second_order_obstruction(int n);

/// x_i x_j + sum_k (t(i,j,k) x_k + gamma(i,j,k;k)/(n-1)), i <= j; miniversal drops t(i,i,i).
struct Family {
  int n = 0;
  Flavor flavor = Flavor::Hilbert;
  std::vector<Poly> generators;
  std::vector<std::pair<int, int>> pairs;
};
Family universal_family(int n, Flavor flavor = Flavor::Hilbert);

/// sum_{l,lambda} t(i,j,l) gamma(k,l,lambda;lambda) - t(i,k,l) gamma(j,l,lambda;lambda).
Poly syzygy_cubic(int i, int j, int k, int n);
/// Linear-form certificate of the cubic over J; throws Error(CertificateNotFound).
Certificate syzygy_certificate(int i, int j, int k, const IdealMembership& J);

struct FlatnessEntry {
  BasisSymbol wedge;
  Poly degree0;
  Poly degree1;
  /// x-monomial coefficients of the t-degree-2 part.
  std::vector<Poly> degree2_coefficients;
  bool degree2_in_J = false;
  Poly degree3;
  bool degree3_matches_syzygy = false;
  bool degree3_in_J = false;
  bool ok() const { return degree0.is_zero() && degree1.is_zero() && degree2_in_J && degree3_matches_syzygy && degree3_in_J; }
};

/// (f0+f1+f2)(r0+r1) on every non-Koszul wedge, split by t-degree and certified in J.
std::vector<FlatnessEntry> flatness_residual(int n, const IdealMembership& J);

/// (f0+f1+f2) applied to the trivial full lift on every Koszul wedge; returns the wedges whose product is nonzero.
std::vector<BasisSymbol> koszul_full_lift_failures(int n);

}  // namespace hilbworst
