#include <algorithm>

#include "core/classical.hpp"
#include "core/taylor.hpp"
#include "support.hpp"

using namespace hilbworst;
using testing::code_of;

TEST_CASE("Taylor truncation sizes") {
  for (int n = 3; n <= 6; ++n) {
    const std::size_t p = static_cast<std::size_t>(n * (n + 1) / 2);
    CHECK(e_basis(n).size() == p);
    CHECK(wedge_basis(n).size() == p * (p - 1) / 2);
    CHECK(koszul_wedges(n).size() + non_koszul_wedges(n).size() == wedge_basis(n).size());
    for (std::size_t q = 0; q < e_basis(n).size(); ++q) {
      auto [i, j] = e_basis(n)[q].first();
      CHECK(e_position(i, j, n) == q);
    }
  }
}

TEST_CASE("r is the Koszul relation: f o r vanishes on every wedge") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& w : wedge_basis(n)) CHECK(f_map(r_of(w, n)).is_zero());
  CHECK(code_of([] { r_of(BasisSymbol::e(1, 2), 3); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("every theta map kills the relations") {
  for (int n = 3; n <= 4; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (const auto& w : wedge_basis(n)) CHECK(theta_apply(i, j, k, r_of(w, n)).is_zero());
}

TEST_CASE("tangent dimensions") {
  auto d3 = tangent_dims(3);
  CHECK(d3.hom_dim == 18);
  CHECK(d3.t1_dim == 15);
  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    auto d = tangent_dims(n);
    CHECK(d.hom_dim == static_cast<std::size_t>(n * n * (n + 1) / 2));
    CHECK(d.t1_dim == static_cast<std::size_t>((n + 2) * n * (n - 1) / 2));
    CHECK(d.hom_dim == d.hom_degree_minus2 + d.hom_degree_minus1);
    CHECK(d.derivation_identity);
    CHECK_FALSE(d.derivation_identity_literal);
  }
}

TEST_CASE("linear syzygies among the relations vanish") {
  for (int n = 3; n <= 5; ++n) {
    auto rep = obstruction_degree_check(n);
    CHECK(rep.tuples == static_cast<std::size_t>(n * n * (n - 1) * (n - 2)));
    CHECK(rep.nonzero.empty());
  }
}

TEST_CASE("first-order lift is exact on every wedge") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& w : first_order_residual(n)) CHECK(w.residual.is_zero());
}

TEST_CASE("second-order obstruction reproduces J and its tails") {
  for (int n = 3; n <= 5; ++n) {
    CAPTURE(n);
    auto J = ideal_generators(n);
    IdealMembership M(J);
    auto so = second_order_obstruction(n);
    CHECK(compare_spans(so.constraints, J.generators, n).equal);
    CHECK(so.tails.size() == static_cast<std::size_t>(n * (n + 1) / 2));
    for (const auto& [pair, c] : so.tails) CHECK(M.normal_form(c - tail_of(pair.first, pair.second, n)).is_zero());
  }
}

TEST_CASE("universal family shape") {
  const int n = 3;
  auto F = universal_family(n);
  REQUIRE(F.generators.size() == 6);
  CHECK(F.pairs.front() == std::pair{1, 1});
  Assignment zero;
  for (const auto& v : Universe(n).t_variables()) zero[v] = 0;
  for (std::size_t g = 0; g < F.generators.size(); ++g) {
    auto [i, j] = F.pairs[g];
    CHECK(evaluate(F.generators[g], zero) == Poly::x(n, i) * Poly::x(n, j));
  }
  for (const auto& g : universal_family(n, Flavor::Miniversal).generators)
    for (const auto& v : g.variables()) CHECK_FALSE((v.kind == VarKind::T && v.i == v.j && v.j == v.k));
  CHECK(code_of([] { universal_family(3, Flavor::BasedAlgebra); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("cubic syzygies are certified in J") {
  for (int n = 3; n <= 4; ++n) {
    auto J = ideal_generators(n);
    IdealMembership M(J);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          if (j == k) continue;
          Certificate c = syzygy_certificate(i, j, k, M);
          CHECK(expand(c, J.generators, n) == syzygy_cubic(i, j, k, n));
          for (const auto& [g, mult] : c.terms) CHECK(mult.degree() <= 1);
        }
  }
  IdealMembership M3(ideal_generators(3));
  CHECK(code_of([&] { syzygy_certificate(1, 2, 2, M3); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("the family is flat to the order the ideal sees") {
  for (int n = 3; n <= 4; ++n) {
    IdealMembership M(ideal_generators(n));
    auto entries = flatness_residual(n, M);
    CHECK(entries.size() == non_koszul_wedges(n).size());
    for (const auto& e : entries) {
      CHECK(e.degree0.is_zero());
      CHECK(e.degree1.is_zero());
      CHECK(e.degree2_in_J);
      CHECK(e.degree3_matches_syzygy);
      CHECK(e.degree3_in_J);
    }
    CHECK(koszul_full_lift_failures(n).empty());
  }
}
