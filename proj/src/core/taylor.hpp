#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/module_elt.hpp"
#include "core/poly.hpp"

namespace hilbworst {

/// The generators e[i,j], i <= j, in lexicographic order (p = n + n(n-1)/2 of them).
std::vector<BasisSymbol> e_basis(int n);
/// Position of e[i,j] in e_basis(n).
std::size_t e_position(int i, int j, int n);
/// All S^q wedges e[a,b]^e[c,d] with (a,b) < (c,d) (q = p(p-1)/2 of them).
std::vector<BasisSymbol> wedge_basis(int n);

/// A wedge whose two index pairs are disjoint.
bool is_koszul(const BasisSymbol& w);

/// A non-Koszul wedge read as e[i,j]^e[i,k]: i is the shared index, j the other index
/// of the first stored pair, k that of the second.
struct OrientedWedge {
  int i = 0, j = 0, k = 0;
};
std::optional<OrientedWedge> orient(const BasisSymbol& w);

std::vector<BasisSymbol> koszul_wedges(int n);
std::vector<BasisSymbol> non_koszul_wedges(int n);

/// f(e[i,j]) = x_i x_j, extended S-linearly; only e-symbols are accepted.
Poly f_map(const FreeModElt& m);

/// r(e[i,j]^e[k,l]) = (-x_k x_l e[i,j] + x_i x_j e[k,l]) / prod over the common indices.
FreeModElt r_of(const BasisSymbol& w, int n);
FreeModElt r_map(const FreeModElt& m);

/// Drops every term of x-degree >= 2 (the residue in S/I, coefficients may involve t).
Poly reduce_mod_I(const Poly& p);

/// Splits p by its x-part: x-monomial -> coefficient (a polynomial in the other variables).
std::map<Monomial, Poly> x_coefficients(const Poly& p);

/// theta^{ij}_k on the generator x_l x_m, as an element of S/I.
Poly theta(int i, int j, int k, int l, int m, int n);
/// theta^{ij}_k applied S-linearly to an element over the e-symbols, reduced mod I.
Poly theta_apply(int i, int j, int k, const FreeModElt& m);

struct TangentDims {
  int n = 0;
  std::size_t hom_dim = 0;
  std::size_t hom_degree_minus2 = 0;
  std::size_t hom_degree_minus1 = 0;
  std::size_t theta_rank = 0;
  std::size_t derivation_rank = 0;
  std::size_t t1_dim = 0;
  std::size_t expected_hom = 0;
  std::size_t expected_t1 = 0;
  /// Image of d/dx_i equals 2 theta^{ii}_i + sum_{j != i} theta^{ij}_j for every i.
  bool derivation_identity = false;
  /// Whether the image equals the literal sum_j theta^{ij}_j (it does not: the diagonal term is doubled).
  bool derivation_identity_literal = false;
};

/// Hom_S(I, S/I) and T^1 dimensions by exact rank computation over the
/// constraint systems theta o r = 0 in internal degrees -2 and -1.
TangentDims tangent_dims(int n);

/// x_l r(e_ij^e_ik) - x_k r(e_ij^e_il) + x_j r(e_ik^e_il).
FreeModElt linear_syzygy(int i, int j, int k, int l, int n);

struct ObstructionDegreeReport {
  int n = 0;
  std::size_t tuples = 0;
  std::vector<std::string> nonzero;
};

/// Checks the linear syzygy above for every i and every distinct j, k, l.
ObstructionDegreeReport obstruction_degree_check(int n);

}  // namespace hilbworst
