#include "core/dgla.hpp"
#include "core/taylor.hpp"
#include "support.hpp"

using namespace hilbworst;

TEST_CASE("the truncated resolution is a complex") {
  for (int n = 3; n <= 4; ++n) {
    TruncatedResolution P(n);
    for (const auto& g : P.degree_minus2_generators()) {
      auto once = P.differential(FreeModElt::basis(n, g, Poly::constant(n, 1)));
      CHECK(P.differential(once).is_zero());
    }
  }
}

TEST_CASE("phi is closed") {
  for (int n = 3; n <= 4; ++n)
    for (Flavor fl : {Flavor::Miniversal, Flavor::Hilbert}) {
      auto phi = build_phi(n, fl);
      CHECK(phi.drops_diagonal() == (fl == Flavor::Miniversal));
      CHECK(phi.cohomological_degree() == 1);
      CHECK(phi.internal_degree() == -1);
      for (const auto& e : closedness_residual(phi)) CHECK(e.residual.is_zero());
    }
}

TEST_CASE("cup product is sum_l gamma x_l") {
  for (int n = 3; n <= 4; ++n) {
    auto phi = build_phi(n);
    for (const auto& e : cup_product(phi)) {
      CHECK(e.matches());
      CHECK(reduce_mod_I(e.raw) == e.value);
    }
  }
  auto phi = build_phi(4, Flavor::Hilbert);
  for (const auto& e : cup_product(phi)) {
    if (e.generator.kind != SymbolKind::Wedge || is_koszul(e.generator)) continue;
    auto o = orient(e.generator);
    REQUIRE(o);
    Poly expected(4);
    for (int l = 1; l <= 4; ++l) expected += gamma(o->i, o->j, o->k, l, 4) * Poly::x(4, l);
    CHECK(e.expected == expected);
  }
}

TEST_CASE("the quadratic Kuranishi locus is J") {
  const std::size_t constraints[] = {21, 86};
  for (int n = 3; n <= 4; ++n) {
    auto kur = kuranishi_quadratic_locus(n);
    CHECK(kur.constraints.size() == constraints[n - 3]);
    auto cmp = compare_spans(kur.constraints, ideal_generators(n, Flavor::Miniversal).generators, n);
    CHECK(cmp.equal);
    CHECK(kur.psi.size() == static_cast<std::size_t>(n * (n + 1) / 2));
  }
}

TEST_CASE("classical and DGLA routes agree") {
  for (int n = 3; n <= 5; ++n) {
    auto cmp = compare_classical_dgla(n);
    CHECK(cmp.spans.equal);
    CHECK(cmp.psi_is_minus_tail);
  }
}
