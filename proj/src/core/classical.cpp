#include "core/classical.hpp"

#include "core/errors.hpp"
#include "core/linalg.hpp"

namespace hilbworst {

namespace {

void require_n(int n) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "the classical lifting assumes n >= 3, got n=" + std::to_string(n));
}

Poly x_coefficient(const Poly& p, int l) {
  auto parts = x_coefficients(p);
  auto it = parts.find(Monomial::of(static_cast<std::uint32_t>(l - 1)));
  return it == parts.end() ? Poly(p.n()) : it->second;
}

Poly full_f(int a, int b, int n) { return Poly::x(n, a) * Poly::x(n, b) + f1_of(a, b, n) + tail_of(a, b, n); }

}  // namespace

Poly f1_of(int l, int m, int n) {
  Poly out(n);
  for (int lam = 1; lam <= n; ++lam) out += Poly::t(n, l, m, lam) * Poly::x(n, lam);
  return out;
}

Poly tail_of(int l, int m, int n) {
  Poly sum(n);
  for (int k = 1; k <= n; ++k) sum += gamma(l, m, k, k, n);
  return sum * Rational(1, n - 1);
}

Poly apply_on_e(const FreeModElt& m, const std::function<Poly(int, int)>& image) {
  Poly out(m.n());
  for (const auto& [sym, c] : m.terms()) {
    if (sym.kind != SymbolKind::E) fail(ErrorCode::InvalidArgument, "map defined on e-symbols only");
    out += c * image(sym.a, sym.b);
  }
  return out;
}

std::vector<std::pair<BasisSymbol, Poly>> build_f1(int n) {
  require_n(n);
  std::vector<std::pair<BasisSymbol, Poly>> out;
  for (const auto& e : e_basis(n)) out.emplace_back(e, f1_of(e.a, e.b, n));
  return out;
}

FreeModElt r1_of(const BasisSymbol& w, int n) {
  if (is_koszul(w)) {
    return FreeModElt::e(n, w.a, w.b, -f1_of(w.c, w.d, n)) + FreeModElt::e(n, w.c, w.d, f1_of(w.a, w.b, n));
  }
  auto o = orient(w);
  if (!o) fail(ErrorCode::InvalidArgument, "r1 is defined on wedges only");
  FreeModElt out(n);
  for (int lam = 1; lam <= n; ++lam) {
    out += FreeModElt::e(n, o->k, lam, Poly::t(n, o->i, o->j, lam));
    out -= FreeModElt::e(n, o->j, lam, Poly::t(n, o->i, o->k, lam));
  }
  return out;
}

std::vector<std::pair<BasisSymbol, FreeModElt>> build_r1(int n) {
  require_n(n);
  std::vector<std::pair<BasisSymbol, FreeModElt>> out;
  for (const auto& w : wedge_basis(n)) out.emplace_back(w, r1_of(w, n));
  return out;
}

std::vector<WedgeResidual> first_order_residual(int n) {
  require_n(n);
  auto f0 = [n](int a, int b) { return Poly::x(n, a) * Poly::x(n, b); };
  auto f1 = [n](int a, int b) { return f1_of(a, b, n); };
  std::vector<WedgeResidual> out;
  for (const auto& w : wedge_basis(n))
    out.push_back({w, apply_on_e(r1_of(w, n), f0) + apply_on_e(r_of(w, n), f1)});
  return out;
}

std::vector<ObstructionEquation> obstruction_equations(int n) {
  require_n(n);
  auto f1 = [n](int a, int b) { return f1_of(a, b, n); };
  std::vector<ObstructionEquation> out;
  for (const auto& w : non_koszul_wedges(n)) {
    OrientedWedge o = *orient(w);
    Poly f1r1 = apply_on_e(r1_of(w, n), f1);
    FreeModElt r0 = r_of(w, n);
    for (int l = 1; l <= n; ++l) {
      ObstructionEquation eq;
      eq.wedge = o;
      eq.l = l;
      eq.gamma_part = x_coefficient(f1r1, l);
      for (const auto& [sym, s] : r0.terms()) {
        Poly c = x_coefficient(s, l);
        if (c.is_zero()) continue;
        eq.tail_coeffs[{sym.a, sym.b}] += *c.constant_value();
      }
      std::erase_if(eq.tail_coeffs, [](const auto& kv) { return kv.second == 0; });
      out.push_back(std::move(eq));
    }
  }
  return out;
}

SecondOrderObstruction second_order_obstruction(int n) {
  require_n(n);
  SecondOrderObstruction out;
  out.n = n;
  out.equations = obstruction_equations(n);
  const auto basis = e_basis(n);
  PolyRhsSystem system(n, basis.size());
  for (const auto& eq : out.equations) {
    SparseVec<std::uint32_t> coeffs;
    std::map<std::uint32_t, Rational> dense;
    for (const auto& [pair, c] : eq.tail_coeffs)
      dense[static_cast<std::uint32_t>(e_position(pair.first, pair.second, n))] += c;
    for (auto it = dense.rbegin(); it != dense.rend(); ++it) coeffs.entries.emplace_back(it->first, it->second);
    system.add_row(std::move(coeffs), -eq.gamma_part);
  }
  auto sol = system.solve();
  out.constraints = std::move(sol.constraints);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    out.tails[{basis[a].a, basis[a].b}] = sol.values[a];
    out.tail_determined[{basis[a].a, basis[a].b}] = sol.determined[a];
  }
  return out;
}

Family universal_family(int n, Flavor flavor) {
  require_n(n);
  if (flavor == Flavor::BasedAlgebra) fail(ErrorCode::InvalidArgument, "the family is defined for hilbert or miniversal");
  Family fam;
  fam.n = n;
  fam.flavor = flavor;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Poly g = full_f(i, j, n);
      if (flavor == Flavor::Miniversal) g = drop_diagonal(g);
      fam.generators.push_back(std::move(g));
      fam.pairs.emplace_back(i, j);
    }
  return fam;
}

Poly syzygy_cubic(int i, int j, int k, int n) {
  Poly out(n);
  for (int l = 1; l <= n; ++l) {
    Poly gk(n), gj(n);
    for (int lam = 1; lam <= n; ++lam) {
      gk += gamma(k, l, lam, lam, n);
      gj += gamma(j, l, lam, lam, n);
    }
    out += Poly::t(n, i, j, l) * gk - Poly::t(n, i, k, l) * gj;
  }
  return out;
}

Certificate syzygy_certificate(int i, int j, int k, const IdealMembership& J) {
  if (j == k) fail(ErrorCode::InvalidArgument, "the syzygy needs j != k");
  auto res = J.membership(syzygy_cubic(i, j, k, J.n()));
  if (!res.member)
    fail(ErrorCode::CertificateNotFound, "no certificate for the syzygy cubic (" + std::to_string(i) + "," +
                                             std::to_string(j) + "," + std::to_string(k) + "): " + res.reason);
  return *res.certificate;
}

std::vector<FlatnessEntry> flatness_residual(int n, const IdealMembership& J) {
  require_n(n);
  auto F = [n](int a, int b) { return full_f(a, b, n); };
  std::vector<FlatnessEntry> out;
  for (const auto& w : non_koszul_wedges(n)) {
    OrientedWedge o = *orient(w);
    FlatnessEntry e;
    e.wedge = w;
    e.degree0 = Poly(n);
    e.degree1 = Poly(n);
    e.degree3 = Poly(n);
    Poly total = apply_on_e(r_of(w, n) + r1_of(w, n), F);
    Poly degree2(n);
    for (auto& [d, comp] : homogeneous_components(total, Grading::TDegree)) {
      if (d == 0) e.degree0 = comp;
      if (d == 1) e.degree1 = comp;
      if (d == 2) degree2 = comp;
      if (d == 3) e.degree3 = comp;
      if (d > 3) fail(ErrorCode::InvalidArgument, "unexpected t-degree in the flatness product");
    }
    e.degree2_in_J = true;
    for (auto& [xs, coeff] : x_coefficients(degree2)) {
      e.degree2_in_J = e.degree2_in_J && J.membership(coeff).member;
      e.degree2_coefficients.push_back(coeff);
    }
    e.degree3_matches_syzygy = e.degree3 == syzygy_cubic(o.i, o.j, o.k, n) * Rational(1, n - 1);
    e.degree3_in_J = J.membership(e.degree3).member;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<BasisSymbol> koszul_full_lift_failures(int n) {
  require_n(n);
  auto F = [n](int a, int b) { return full_f(a, b, n); };
  std::vector<BasisSymbol> bad;
  for (const auto& w : koszul_wedges(n)) {
    FreeModElt lift = FreeModElt::e(n, w.a, w.b, -F(w.c, w.d)) + FreeModElt::e(n, w.c, w.d, F(w.a, w.b));
    if (!apply_on_e(lift, F).is_zero()) bad.push_back(w);
  }
  return bad;
}

}  // namespace hilbworst
