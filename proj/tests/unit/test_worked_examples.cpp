// Small hand-checkable instances of the constructions.

#include "core/based_algebra.hpp"
#include "core/classical.hpp"
#include "core/dgla.hpp"
#include "core/linear_geometry.hpp"
#include "core/oracle.hpp"
#include "core/taylor.hpp"
#include "support.hpp"

using namespace hilbworst;

namespace {

Poly x(int n, int i) { return Poly::x(n, i); }
Poly t(int n, int i, int j, int k) { return Poly::t(n, i, j, k); }
Poly one(int n) { return Poly::constant(n, 1); }

BasisSymbol wedge(int i, int j, int k, int l) { return canonical_pair(SymbolKind::Wedge, i, j, k, l).first; }

bool in_span(const std::vector<Poly>& gens, const Poly& p) {
  std::vector<Poly> more = gens;
  more.push_back(p);
  return span_rank(more) == span_rank(gens);
}

}  // namespace

TEST_CASE("t(2,1,3) is the same coordinate as t(1,2,3)") {
  CHECK(t(3, 1, 2, 3) * t(3, 2, 1, 3) == t(3, 1, 2, 3) * t(3, 1, 2, 3));
}

TEST_CASE("gamma relations on named tuples") {
  CHECK((gamma(1, 2, 3, 1, 3) + gamma(1, 3, 2, 1, 3)).is_zero());
  CHECK(cyclic_sum_check(1, 2, 3, 1, 3).is_zero());
  CHECK(cyclic_sum_check(1, 1, 2, 3, 3).is_zero());
  CHECK(cyclic_sum_check(2, 3, 4, 1, 4).is_zero());
}

TEST_CASE("miniversal ideal is the hilbert ideal with t_ii^i set to zero") {
  std::vector<Poly> dropped;
  for (const auto& g : ideal_generators(3).generators) dropped.push_back(drop_diagonal(g));
  CHECK(compare_spans(dropped, ideal_generators(3, Flavor::Miniversal).generators, 3).equal);
}

TEST_CASE("named members of J at n=3") {
  auto J = ideal_generators(3);
  IdealMembership M(J);
  auto r = M.membership(gamma(1, 2, 3, 1, 3));
  REQUIRE(r.member);
  REQUIRE(r.certificate->terms.size() == 1);
  CHECK(r.certificate->terms[0].second == one(3));
  CHECK(M.membership(gamma(1, 1, 2, 2, 3) - gamma(1, 1, 3, 3, 3)).member);
  CHECK(in_span(alternate_generators(3).generators, gamma(1, 1, 2, 2, 3) - gamma(1, 1, 3, 3, 3)));

  Poly avg(3);
  for (int k = 1; k <= 3; ++k) avg += gamma(1, 2, k, k, 3);
  CHECK(M.normal_form(gamma(1, 2, 1, 1, 3)) == M.normal_form(Rational(1, 2) * avg));
}

TEST_CASE("Taylor maps on named symbols") {
  const int n = 4;
  CHECK(f_map(FreeModElt::e(n, 1, 2, one(n))) == x(n, 1) * x(n, 2));
  CHECK(FreeModElt::e(n, 2, 1, one(n)) == FreeModElt::e(n, 1, 2, one(n)));
  CHECK(r_of(wedge(1, 2, 3, 4), n) ==
        FreeModElt::e(n, 1, 2, -(x(n, 3) * x(n, 4))) + FreeModElt::e(n, 3, 4, x(n, 1) * x(n, 2)));
  CHECK(r_of(wedge(1, 2, 1, 3), n) == FreeModElt::e(n, 1, 2, -x(n, 3)) + FreeModElt::e(n, 1, 3, x(n, 2)));
  CHECK(theta(1, 2, 3, 1, 2, 3) == x(3, 3));
  CHECK(theta(1, 2, 3, 1, 3, 3).is_zero());
  CHECK(theta_apply(1, 2, 3, r_of(wedge(1, 2, 1, 3), 3)).is_zero());
  CHECK(linear_syzygy(1, 2, 3, 4, 4).is_zero());
  auto d4 = tangent_dims(4);
  CHECK(d4.hom_dim == 40);
  CHECK(d4.t1_dim == 36);
}

TEST_CASE("first-order data at n=3") {
  const int n = 3;
  CHECK(f1_of(1, 2, n) == t(n, 1, 2, 1) * x(n, 1) + t(n, 1, 2, 2) * x(n, 2) + t(n, 1, 2, 3) * x(n, 3));
  FreeModElt expected(n);
  for (int lam = 1; lam <= n; ++lam) {
    expected += FreeModElt::e(n, 3, lam, t(n, 1, 2, lam));
    expected -= FreeModElt::e(n, 2, lam, t(n, 1, 3, lam));
  }
  CHECK(r1_of(wedge(1, 2, 1, 3), n) == expected);
  CHECK(r1_of(wedge(1, 2, 3, 4), 4) ==
        FreeModElt::e(4, 1, 2, -f1_of(3, 4, 4)) + FreeModElt::e(4, 3, 4, f1_of(1, 2, 4)));
}

TEST_CASE("obstruction equations on the wedge e12^e13") {
  int seen = 0;
  for (const auto& e : obstruction_equations(3)) {
    if (e.wedge.i != 1 || e.wedge.j != 2 || e.wedge.k != 3) continue;
    ++seen;
    CHECK(e.gamma_part == gamma(1, 2, 3, e.l, 3));
    if (e.l == 1) CHECK(e.tail_coeffs.empty());
    if (e.l == 3) {
      REQUIRE(e.tail_coeffs.size() == 1);
      CHECK(e.tail_coeffs.at({1, 2}) == -1);
    }
  }
  CHECK(seen == 3);
}

TEST_CASE("the (1,1) member of the family at n=3") {
  const int n = 3;
  Poly expected = x(n, 1) * x(n, 1);
  for (int k = 1; k <= n; ++k) expected += t(n, 1, 1, k) * x(n, k) + Rational(1, 2) * gamma(1, 1, k, k, n);
  auto F = universal_family(n);
  CHECK(F.generators[0] == expected);
}

TEST_CASE("phi agrees with the first-order lift") {
  auto phi = build_phi(3, Flavor::Hilbert);
  CHECK(phi.on_e(1, 2) == f1_of(1, 2, 3));
  CHECK(phi.on_wedge(wedge(1, 2, 1, 3)) == r1_of(wedge(1, 2, 1, 3), 3));
  for (const auto& e : cup_product(build_phi(4))) {
    if (e.generator.kind == SymbolKind::Wedge && is_koszul(e.generator)) CHECK(e.value.is_zero());
  }
}

TEST_CASE("named relations of the based-algebra ideal") {
  const int n = 3;
  auto B = b_ideal_generators(n).generators;
  CHECK(in_span(B, Poly::s(n, 0, 1, 1) - one(n)));
  CHECK(in_span(B, Poly::s(n, 1, 2, 3) - Poly::s(n, 2, 1, 3)));
  for (int l = 0; l <= n; ++l) CHECK(in_span(B, gamma_tilde(1, 2, 3, l, n)));
  CHECK(pi_map(Poly::s(n, 0, 1, 1), n) == one(n));
  CHECK(pi_map(iota_map(t(n, 1, 2, 3), n), n) == t(n, 1, 2, 3));
}

TEST_CASE("pi on associativity quadrics") {
  Poly avg(4);
  for (int lam = 1; lam <= 4; ++lam) avg += gamma(1, 2, lam, lam, 4);
  CHECK(pi_map(gamma_tilde(1, 2, 3, 3, 4), 4) == gamma(1, 2, 3, 3, 4) - Rational(1, 3) * avg);
  IdealMembership M(ideal_generators(3));
  CHECK(M.membership(pi_map(gamma_tilde(1, 2, 3, 0, 3), 3)).member);
}

TEST_CASE("points of L_{A,B} are points of the chart") {
  const int n = 5;
  LinearSubspaceSpec s{n, {1, 2, 3}, {4, 5}};
  RationalSampler rs(17, n);
  for (int round = 0; round < 5; ++round) {
    Assignment p;
    for (const auto& v : Universe(n).t_variables())
      if (in_support(s, v.i, v.j, v.k)) p[v] = rs.next();
    CHECK(is_associative(table_from_point(p, n)));
    auto f = fiber_check(p, n);
    CHECK(f.dimension == 6);
    CHECK(f.basis_ok);
  }
  CHECK(subspace_dim({3, {1, 2}, {3}}) == 1);
  CHECK(containment_check({3, {1, 2}, {3}}).ok());
  CHECK(containment_check(s).ok());
  CHECK(smoothing_dim(3) == 12);
  CHECK(smoothing_dim(14) == 210);
  CHECK(max_linear_dim(4).maximizers == std::vector<int>{3});
}

TEST_CASE("averaged gamma congruence holds exactly when lambda != j") {
  const int n = 3;
  IdealMembership M(ideal_generators(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Poly avg(n);
      for (int k = 1; k <= n; ++k) avg += gamma(i, j, k, k, n);
      avg *= Rational(1, n - 1);
      for (int lam = 1; lam <= n; ++lam) CHECK(M.normal_form(gamma(i, j, lam, lam, n) - avg).is_zero() == (lam != j));
    }
}
