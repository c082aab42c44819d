#include "core/dgla.hpp"

#include "core/classical.hpp"
#include "core/errors.hpp"
#include "core/linalg.hpp"

#include <set>

namespace hilbworst {

TruncatedResolution::TruncatedResolution(int n) : n_(n) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "the resolution is built for n >= 3");
}

std::vector<BasisSymbol> TruncatedResolution::degree_minus2_generators() const {
  auto es = e_basis(n_);
  std::vector<BasisSymbol> out;
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b)
      out.push_back(canonical_pair(SymbolKind::Curly, es[a].a, es[a].b, es[b].a, es[b].b).first);
  for (const auto& w : wedge_basis(n_)) out.push_back(w);
  return out;
}

FreeModElt TruncatedResolution::differential(const FreeModElt& m) const {
  auto f = [this](int a, int b) { return Poly::x(n_, a) * Poly::x(n_, b); };
  FreeModElt out(n_);
  for (const auto& [sym, c] : m.terms()) {
    switch (sym.kind) {
      case SymbolKind::One:
        break;
      case SymbolKind::E:
        out.add(BasisSymbol::one(), c * f(sym.a, sym.b));
        break;
      case SymbolKind::Curly:
        out += FreeModElt::e(n_, sym.c, sym.d, c * f(sym.a, sym.b));
        out -= FreeModElt::e(n_, sym.a, sym.b, c * f(sym.c, sym.d));
        break;
      case SymbolKind::Wedge:
        out += c * r_of(sym, n_);
        break;
    }
  }
  return out;
}

DerivationTrunc::DerivationTrunc(int n, bool drop_diagonal) : n_(n), drop_diagonal_(drop_diagonal) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "phi is built for n >= 3");
}

Poly DerivationTrunc::t(int i, int j, int k) const {
  if (drop_diagonal_ && i == j && j == k) return Poly(n_);
  return Poly::t(n_, i, j, k);
}

Poly DerivationTrunc::on_e(int l, int m) const {
  Poly out(n_);
  for (int lam = 1; lam <= n_; ++lam) out += t(l, m, lam) * Poly::x(n_, lam);
  return out;
}

FreeModElt DerivationTrunc::on_wedge(const BasisSymbol& w) const {
  if (is_koszul(w))
    return FreeModElt::e(n_, w.a, w.b, -on_e(w.c, w.d)) + FreeModElt::e(n_, w.c, w.d, on_e(w.a, w.b));
  auto o = orient(w);
  if (!o) fail(ErrorCode::InvalidArgument, "on_wedge needs an S^q wedge");
  FreeModElt out(n_);
  for (int lam = 1; lam <= n_; ++lam) {
    out += FreeModElt::e(n_, o->k, lam, t(o->i, o->j, lam));
    out -= FreeModElt::e(n_, o->j, lam, t(o->i, o->k, lam));
  }
  return out;
}

FreeModElt DerivationTrunc::apply(const FreeModElt& m) const {
  FreeModElt out(n_);
  for (const auto& [sym, c] : m.terms()) {
    switch (sym.kind) {
      case SymbolKind::One:
        break;
      case SymbolKind::E:
        out.add(BasisSymbol::one(), c * on_e(sym.a, sym.b));
        break;
      case SymbolKind::Curly:
        // e_ab has degree -1, so the second Leibniz term carries the sign (-1)^{-1}.
        out += FreeModElt::e(n_, sym.c, sym.d, c * on_e(sym.a, sym.b));
        out -= FreeModElt::e(n_, sym.a, sym.b, c * on_e(sym.c, sym.d));
        break;
      case SymbolKind::Wedge:
        out += c * on_wedge(sym);
        break;
    }
  }
  return out;
}

DerivationTrunc build_phi(int n, Flavor flavor) {
  if (flavor == Flavor::BasedAlgebra) fail(ErrorCode::InvalidArgument, "phi is defined for hilbert or miniversal");
  return DerivationTrunc(n, flavor == Flavor::Miniversal);
}

std::vector<ClosednessEntry> closedness_residual(const DerivationTrunc& phi) {
  TruncatedResolution P(phi.n());
  const int n = phi.n();
  std::vector<BasisSymbol> gens = e_basis(n);
  for (const auto& g : P.degree_minus2_generators()) gens.push_back(g);
  std::vector<ClosednessEntry> out;
  for (const auto& g : gens) {
    FreeModElt x = FreeModElt::basis(n, g, Poly::constant(n, 1));
    out.push_back({g, P.differential(phi.apply(x)) + phi.apply(P.differential(x))});
  }
  return out;
}

std::vector<CupEntry> cup_product(const DerivationTrunc& phi) {
  TruncatedResolution P(phi.n());
  const int n = phi.n();
  std::vector<CupEntry> out;
  for (const auto& g : P.degree_minus2_generators()) {
    CupEntry e;
    e.generator = g;
    e.raw = phi.apply(phi.apply(FreeModElt::basis(n, g, Poly::constant(n, 1)))).coefficient(BasisSymbol::one());
    e.value = reduce_mod_I(e.raw);
    e.expected = Poly(n);
    if (auto o = orient(g)) {
      for (int l = 1; l <= n; ++l) e.expected += gamma(o->i, o->j, o->k, l, n) * Poly::x(n, l);
      if (phi.drops_diagonal()) e.expected = drop_diagonal(e.expected);
    }
    out.push_back(std::move(e));
  }
  return out;
}

KuranishiLocus kuranishi_quadratic_locus(int n, Flavor flavor) {
  DerivationTrunc phi = build_phi(n, flavor);
  TruncatedResolution P(n);
  const auto basis = e_basis(n);
  PolyRhsSystem system(n, basis.size());
  for (const auto& entry : cup_product(phi)) {
    FreeModElt dg = P.differential(FreeModElt::basis(n, entry.generator, Poly::constant(n, 1)));
    // Residues in S/I are indexed by 1 (key n) and x_l (key l-1).
    std::map<std::uint32_t, std::map<std::uint32_t, Rational>> coeffs;
    std::map<std::uint32_t, Poly> rhs;
    for (const auto& [sym, s] : dg.terms()) {
      auto a = static_cast<std::uint32_t>(e_position(sym.a, sym.b, n));
      for (const auto& [xs, c] : x_coefficients(s)) {
        if (xs.degree() > 1) continue;
        std::uint32_t key = xs.is_one() ? static_cast<std::uint32_t>(n) : xs.factors()[0];
        coeffs[key][a] += *c.constant_value();
      }
    }
    for (const auto& [xs, c] : x_coefficients(entry.value)) {
      std::uint32_t key = xs.is_one() ? static_cast<std::uint32_t>(n) : xs.factors()[0];
      rhs[key] = c;
    }
    std::set<std::uint32_t> keys;
    for (const auto& [k, v] : coeffs) keys.insert(k);
    for (const auto& [k, v] : rhs) keys.insert(k);
    for (auto k : keys) {
      SparseVec<std::uint32_t> row;
      for (auto it = coeffs[k].rbegin(); it != coeffs[k].rend(); ++it)
        if (it->second != 0) row.entries.emplace_back(it->first, it->second);
      system.add_row(std::move(row), rhs.count(k) ? rhs[k] : Poly(n));
    }
  }
  auto sol = system.solve();
  KuranishiLocus out;
  out.n = n;
  out.flavor = flavor;
  out.constraints = std::move(sol.constraints);
  for (std::size_t a = 0; a < basis.size(); ++a) out.psi[{basis[a].a, basis[a].b}] = sol.values[a];
  return out;
}

ClassicalDglaComparison compare_classical_dgla(int n) {
  ClassicalDglaComparison out;
  out.n = n;
  auto classical = second_order_obstruction(n);
  std::vector<Poly> restricted;
  for (const auto& c : classical.constraints) restricted.push_back(drop_diagonal(c));
  auto kur = kuranishi_quadratic_locus(n, Flavor::Miniversal);
  out.spans = compare_spans(restricted, kur.constraints, n);
  IdealMembership J(ideal_generators(n, Flavor::Miniversal));
  out.psi_is_minus_tail = true;
  for (const auto& [pair, psi] : kur.psi) {
    Poly c = drop_diagonal(tail_of(pair.first, pair.second, n));
    out.psi_is_minus_tail = out.psi_is_minus_tail && J.normal_form(psi + c).is_zero();
  }
  return out;
}

}  // namespace hilbworst
