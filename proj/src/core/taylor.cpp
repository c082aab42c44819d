#include "core/taylor.hpp"

#include <algorithm>
#include <map>

#include "core/errors.hpp"
#include "core/linalg.hpp"

namespace hilbworst {

namespace {

using Coords = SparseVec<std::uint32_t>;

Coords coords_from(const std::map<std::uint32_t, Rational>& m) {
  Coords v;
  for (auto it = m.rbegin(); it != m.rend(); ++it)
    if (it->second != 0) v.entries.emplace_back(it->first, it->second);
  return v;
}

// x-degree of a monomial (variables below n are the x's).
unsigned x_degree(const Monomial& m, int n) {
  unsigned d = 0;
  for (auto v : m.factors())
    if (v < static_cast<std::uint32_t>(n)) ++d;
  return d;
}

// Product of x-variables with the given indices.
Poly x_product(int n, std::vector<int> idx) {
  Poly p = Poly::constant(n, Rational(1));
  for (int i : idx) p = p * Poly::x(n, i);
  return p;
}

}  // namespace

std::vector<BasisSymbol> e_basis(int n) {
  std::vector<BasisSymbol> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.push_back(BasisSymbol::e(i, j));
  return out;
}

std::size_t e_position(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n) fail(ErrorCode::IndexOutOfRange, "e-symbol index out of range");
  return static_cast<std::size_t>((i - 1) * n - (i - 1) * (i - 2) / 2 + (j - i));
}

std::vector<BasisSymbol> wedge_basis(int n) {
  auto es = e_basis(n);
  std::vector<BasisSymbol> out;
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b)
      out.push_back(canonical_pair(SymbolKind::Wedge, es[a].a, es[a].b, es[b].a, es[b].b).first);
  return out;
}

bool is_koszul(const BasisSymbol& w) { return w.a != w.c && w.a != w.d && w.b != w.c && w.b != w.d; }

std::optional<OrientedWedge> orient(const BasisSymbol& w) {
  if (w.kind != SymbolKind::Wedge || is_koszul(w)) return std::nullopt;
  int shared = (w.a == w.c || w.a == w.d) ? w.a : w.b;
  int j = (w.a == shared) ? w.b : w.a;
  int k = (w.c == shared) ? w.d : w.c;
  return OrientedWedge{shared, j, k};
}

std::vector<BasisSymbol> koszul_wedges(int n) {
  std::vector<BasisSymbol> out;
  for (const auto& w : wedge_basis(n))
    if (is_koszul(w)) out.push_back(w);
  return out;
}

std::vector<BasisSymbol> non_koszul_wedges(int n) {
  std::vector<BasisSymbol> out;
  for (const auto& w : wedge_basis(n))
    if (!is_koszul(w)) out.push_back(w);
  return out;
}

Poly f_map(const FreeModElt& m) {
  Poly out(m.n());
  for (const auto& [sym, c] : m.terms()) {
    if (sym.kind != SymbolKind::E) fail(ErrorCode::InvalidArgument, "f is defined on the e-symbols only");
    out += c * x_product(m.n(), {sym.a, sym.b});
  }
  return out;
}

FreeModElt r_of(const BasisSymbol& w, int n) {
  if (w.kind != SymbolKind::Wedge) fail(ErrorCode::InvalidArgument, "r is defined on the S^q wedges only");
  std::vector<int> first{w.a, w.b}, second{w.c, w.d};
  std::vector<int> common;
  for (int v : {static_cast<int>(w.a), static_cast<int>(w.b)})
    if ((v == w.c || v == w.d) && std::find(common.begin(), common.end(), v) == common.end()) common.push_back(v);
  auto divided = [&](std::vector<int> idx) {
    for (int v : common) idx.erase(std::find(idx.begin(), idx.end(), v));
    return x_product(n, idx);
  };
  FreeModElt out(n);
  out.add(BasisSymbol::e(w.a, w.b), -divided(second));
  out.add(BasisSymbol::e(w.c, w.d), divided(first));
  return out;
}

FreeModElt r_map(const FreeModElt& m) {
  FreeModElt out(m.n());
  for (const auto& [sym, c] : m.terms()) out += c * r_of(sym, m.n());
  return out;
}

Poly reduce_mod_I(const Poly& p) {
  std::vector<Poly::Term> kept;
  for (const auto& t : p.terms())
    if (x_degree(t.mono, p.n()) <= 1) kept.push_back(t);
  return Poly::from_terms(p.n(), std::move(kept));
}

std::map<Monomial, Poly> x_coefficients(const Poly& p) {
  std::map<Monomial, std::vector<Poly::Term>> parts;
  for (const auto& t : p.terms()) {
    Monomial xs, rest;
    t.mono.for_each_power([&](std::uint32_t v, unsigned e) {
      if (v < static_cast<std::uint32_t>(p.n()))
        xs = xs * Monomial::of(v, e);
      else
        rest = rest * Monomial::of(v, e);
    });
    parts[xs].push_back({rest, t.coeff});
  }
  std::map<Monomial, Poly> out;
  for (auto& [xs, terms] : parts) out.emplace(xs, Poly::from_terms(p.n(), std::move(terms)));
  return out;
}

Poly theta(int i, int j, int k, int l, int m, int n) {
  if (i > j) std::swap(i, j);
  if (l > m) std::swap(l, m);
  if (i == l && j == m) return Poly::x(n, k);
  return Poly(n);
}

Poly theta_apply(int i, int j, int k, const FreeModElt& m) {
  Poly out(m.n());
  for (const auto& [sym, c] : m.terms()) {
    if (sym.kind != SymbolKind::E) fail(ErrorCode::InvalidArgument, "theta is defined on the e-symbols only");
    out += c * theta(i, j, k, sym.a, sym.b, m.n());
  }
  return reduce_mod_I(out);
}

TangentDims tangent_dims(int n) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "tangent_dims needs n >= 3");
  TangentDims out;
  out.n = n;
  const std::size_t p = e_basis(n).size();
  const auto un = static_cast<std::uint32_t>(n);
  auto coord = [&](int a, int b, int k) { return static_cast<std::uint32_t>(e_position(a, b, n)) * un + (k - 1u); };

  // theta o r = 0 in S/I. Degree -2: theta(e_a) = b_a (constants); degree -1: theta(e_a) = sum_k a_{a,k} x_k.
  std::vector<Coords> rows_m2, rows_m1;
  for (const auto& w : wedge_basis(n)) {
    FreeModElt rw = r_of(w, n);
    std::map<std::uint32_t, std::map<std::uint32_t, Rational>> by_target_m2, by_target_m1;
    for (const auto& [sym, s] : rw.terms()) {
      auto a = static_cast<std::uint32_t>(e_position(sym.a, sym.b, n));
      for (const auto& t : s.terms()) {
        unsigned d = x_degree(t.mono, n);
        // s_a * b_a survives in S/I only through x-linear parts of s_a.
        if (d == 1) by_target_m2[t.mono.factors()[0]][a] += t.coeff;
        // s_a * x_k survives only through constant parts of s_a.
        if (d == 0)
          for (std::uint32_t k = 0; k < un; ++k) by_target_m1[k][a * un + k] += t.coeff;
      }
    }
    for (const auto& [target, row] : by_target_m2) rows_m2.push_back(coords_from(row));
    for (const auto& [target, row] : by_target_m1) rows_m1.push_back(coords_from(row));
  }
  out.hom_degree_minus2 = p - sparse_rank(rows_m2);
  out.hom_degree_minus1 = p * n - sparse_rank(rows_m1);
  out.hom_dim = out.hom_degree_minus2 + out.hom_degree_minus1;

  std::vector<Coords> thetas;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = 1; k <= n; ++k) thetas.push_back(Coords::unit(coord(i, j, k)));
  out.theta_rank = sparse_rank(thetas);

  std::vector<Coords> derivations;
  bool corrected = true, literal = true;
  for (int i = 1; i <= n; ++i) {
    std::map<std::uint32_t, Rational> image;
    for (int l = 1; l <= n; ++l)
      for (int m = l; m <= n; ++m) {
        if (l == i) image[coord(l, m, m)] += 1;
        if (m == i) image[coord(l, m, l)] += 1;
      }
    std::map<std::uint32_t, Rational> fixed, printed;
    for (int j = 1; j <= n; ++j) {
      fixed[coord(i, j, j)] += (j == i) ? 2 : 1;
      printed[coord(i, j, j)] += 1;
    }
    Coords d = coords_from(image);
    corrected = corrected && d.entries == coords_from(fixed).entries;
    literal = literal && d.entries == coords_from(printed).entries;
    derivations.push_back(std::move(d));
  }
  out.derivation_identity = corrected;
  out.derivation_identity_literal = literal;
  out.derivation_rank = sparse_rank(derivations);
  out.t1_dim = out.hom_dim - out.derivation_rank;
  out.expected_hom = static_cast<std::size_t>(n * n * (n + 1) / 2);
  out.expected_t1 = static_cast<std::size_t>((n + 2) * n * (n - 1) / 2);
  return out;
}

FreeModElt linear_syzygy(int i, int j, int k, int l, int n) {
  auto r = [&](int a, int b, int c, int d) { return r_map(FreeModElt::wedge(n, a, b, c, d, Poly::constant(n, 1))); };
  return Poly::x(n, l) * r(i, j, i, k) - Poly::x(n, k) * r(i, j, i, l) + Poly::x(n, j) * r(i, k, i, l);
}

ObstructionDegreeReport obstruction_degree_check(int n) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "obstruction_degree_check needs n >= 3");
  ObstructionDegreeReport rep;
  rep.n = n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (j == k || j == l || k == l) continue;
          ++rep.tuples;
          FreeModElt s = linear_syzygy(i, j, k, l, n);
          if (!s.is_zero())
            rep.nonzero.push_back("(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," +
                                  std::to_string(l) + "): " + s.to_string());
        }
  return rep;
}

}  // namespace hilbworst
