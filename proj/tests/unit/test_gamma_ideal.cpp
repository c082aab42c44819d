#include "core/gamma_ideal.hpp"
#include "support.hpp"

using namespace hilbworst;
using testing::code_of;

namespace {

struct Counts {
  int n;
  std::size_t raw, zero, dup, kept, rank;
};

}  // namespace

// Frozen from tests/oracles/gamma_oracle.py (plain Python, Fraction arithmetic).
TEST_CASE("generator counts and ranks match the independent oracle") {
  const Counts hilbert[] = {{3, 54, 18, 18, 18, 15}, {4, 240, 48, 96, 96, 64}, {5, 700, 100, 300, 300, 175}};
  for (const auto& c : hilbert) {
    CAPTURE(c.n);
    auto J = ideal_generators(c.n, Flavor::Hilbert);
    CHECK(J.raw_count == c.raw);
    CHECK(J.zero_dropped == c.zero);
    CHECK(J.duplicates_dropped == c.dup);
    CHECK(J.generators.size() == c.kept);
    CHECK(J.labels.size() == c.kept);
    CHECK(span_rank(J.generators) == c.rank);

    auto M = ideal_generators(c.n, Flavor::Miniversal);
    CHECK(M.generators.size() == c.kept);
    CHECK(span_rank(M.generators) == c.rank);
  }
  const Counts alternate[] = {{3, 0, 6, 33, 15, 15}, {4, 0, 12, 126, 102, 64}, {5, 0, 20, 370, 310, 175}};
  for (const auto& c : alternate) {
    CAPTURE(c.n);
    auto A = alternate_generators(c.n);
    CHECK(A.zero_dropped == c.zero);
    CHECK(A.duplicates_dropped == c.dup);
    CHECK(A.generators.size() == c.kept);
    CHECK(span_rank(A.generators) == c.rank);
  }
}

TEST_CASE("gamma(1,2,3,4) at n=4 term by term") {
  Poly expected = parse_poly(
      "t(1,2,1)*t(1,3,4) + t(1,2,2)*t(2,3,4) + t(1,2,3)*t(3,3,4) - t(1,2,4)*t(1,3,1) + t(1,2,4)*t(3,4,4)"
      " - t(1,3,2)*t(2,2,4) - t(1,3,3)*t(2,3,4) - t(1,3,4)*t(2,4,4)",
      4);
  CHECK(gamma(1, 2, 3, 4, 4) == expected);
  CHECK(gamma(1, 2, 3, 4, 4).size() == 8);
}

TEST_CASE("antisymmetry and cyclic sum vanish identically") {
  for (int n = 3; n <= 5; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            CHECK(antisymmetry_check(i, j, k, l, n).is_zero());
            CHECK(cyclic_sum_check(i, j, k, l, n).is_zero());
          }
}

TEST_CASE("gamma rejects bad indices") {
  CHECK(code_of([] { gamma(0, 1, 2, 3, 3); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { gamma(1, 2, 3, 4, 3); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { ideal_generators(2); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { parse_flavor("versal"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("miniversal generators carry no diagonal t_ii^i") {
  for (int n = 3; n <= 4; ++n) {
    auto M = ideal_generators(n, Flavor::Miniversal);
    for (const auto& g : M.generators) {
      for (const auto& v : g.variables()) CHECK_FALSE((v.i == v.j && v.j == v.k));
      CHECK(drop_diagonal(g) == g);
    }
  }
}

TEST_CASE("the two presentations span the same quadrics, with certificates both ways") {
  for (int n = 3; n <= 5; ++n) {
    CAPTURE(n);
    auto J = ideal_generators(n).generators;
    auto A = alternate_generators(n).generators;
    auto cmp = compare_spans(J, A, n);
    CHECK(cmp.equal);
    CHECK(cmp.rank_joint == cmp.rank_a);
    REQUIRE(cmp.a_in_b.size() == J.size());
    REQUIRE(cmp.b_in_a.size() == A.size());
    for (std::size_t g = 0; g < J.size(); ++g) {
      REQUIRE(cmp.a_in_b[g].has_value());
      CHECK(expand(*cmp.a_in_b[g], A, n) == J[g]);
    }
    for (std::size_t g = 0; g < A.size(); ++g) {
      REQUIRE(cmp.b_in_a[g].has_value());
      CHECK(expand(*cmp.b_in_a[g], J, n) == A[g]);
    }
  }
}

TEST_CASE("membership in degrees two and three") {
  const int n = 3;
  auto J = ideal_generators(n);
  IdealMembership M(J);
  CHECK(M.degree2_rank() == 15);

  auto r = M.membership(J.generators[4] - Rational(3) * J.generators[7]);
  CHECK(r.member);
  REQUIRE(r.certificate);
  CHECK(expand(*r.certificate, J.generators, n) == J.generators[4] - Rational(3) * J.generators[7]);

  Poly cubic = Poly::t(n, 1, 2, 3) * J.generators[0] - Poly::t(n, 3, 3, 1) * J.generators[11];
  auto rc = M.membership(cubic);
  CHECK(rc.member);
  REQUIRE(rc.certificate);
  CHECK(expand(*rc.certificate, J.generators, n) == cubic);

  CHECK(M.membership(Poly(n)).member);
  CHECK_FALSE(M.membership(Poly::t(n, 1, 2, 3)).member);
  CHECK_FALSE(M.membership(Poly::t(n, 1, 2, 3) * Poly::t(n, 1, 2, 3)).member);
  CHECK_FALSE(M.membership(J.generators[0] + Poly::t(n, 1, 1, 1)).member);
  CHECK(M.normal_form(J.generators[2]).is_zero());

  Poly quartic = J.generators[0] * J.generators[1];
  CHECK(code_of([&] { M.membership(quartic); }) == ErrorCode::UnsupportedDegree);
  CHECK(code_of([&] { M.membership(Poly::x(n, 1) * Poly::t(n, 1, 1, 1)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("random cubic combinations are members") {
  const int n = 4;
  auto J = ideal_generators(n);
  IdealMembership M(J);
  std::mt19937_64 rng(5);
  for (int round = 0; round < 10; ++round) {
    Poly p(n);
    for (int s = 0; s < 4; ++s) {
      std::size_t g = rng() % J.generators.size();
      int i = 1 + static_cast<int>(rng() % n), j = 1 + static_cast<int>(rng() % n), k = 1 + static_cast<int>(rng() % n);
      p += Rational(static_cast<long>(rng() % 9) - 4) * Poly::t(n, i, j, k) * J.generators[g];
    }
    auto r = M.membership(p);
    CHECK(r.member);
    if (r.certificate) CHECK(expand(*r.certificate, J.generators, n) == p);
  }
}
