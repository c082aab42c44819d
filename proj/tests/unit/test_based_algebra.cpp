#include "core/based_algebra.hpp"
#include "support.hpp"

using namespace hilbworst;
using testing::code_of;

TEST_CASE("based ideal generator counts") {
  struct Row {
    int n;
    std::size_t raw, dup, kept;
  };
  for (const Row& r : {Row{3, 232, 96, 136}, Row{4, 575, 250, 325}, Row{5, 1206, 540, 666}}) {
    auto B = b_ideal_generators(r.n);
    CHECK(B.flavor == Flavor::BasedAlgebra);
    CHECK(B.raw_count == r.raw);
    CHECK(B.duplicates_dropped == r.dup);
    CHECK(B.generators.size() == r.kept);
  }
}

TEST_CASE("generic associativity residuals are the reduced gamma tilde") {
  for (int n = 3; n <= 4; ++n)
    for (const auto& [key, r] : residuals_unchecked(generic_table(n)))
      for (int l = 0; l <= n; ++l) CHECK(r[l] == reduce_mod_J0(gamma_tilde(key[0], key[1], key[2], l, n), n));
}

TEST_CASE("pi and iota on single elements") {
  const int n = 3;
  Poly expected(n);
  for (int lam = 1; lam <= n; ++lam) expected += gamma(1, 2, lam, lam, n);
  CHECK(pi_map(Poly::s(n, 1, 2, 0), n) == Rational(-1, 2) * expected);
  CHECK(pi_map(Poly::s(n, 0, 2, 2), n) == Poly::constant(n, 1));
  CHECK(pi_map(Poly::s(n, 2, 0, 1), n).is_zero());
  CHECK(pi_map(gamma_tilde(1, 2, 3, 4, 4), 4) == gamma(1, 2, 3, 4, 4));
  for (const auto& v : Universe(4).t_variables()) CHECK(pi_map(iota_map(Poly::var(4, v), 4), 4) == Poly::var(4, v));
}

TEST_CASE("pi and iota induce mutually inverse maps") {
  for (int n = 3; n <= 4; ++n) {
    auto rep = verify_based_isomorphism(n);
    CHECK(rep.forward_checked == b_ideal_generators(n).generators.size());
    CHECK(rep.backward_checked == ideal_generators(n).generators.size());
    CHECK(rep.surjectivity_checked == static_cast<std::size_t>(n * (n + 1) / 2));
    CHECK(rep.forward_failures.empty());
    CHECK(rep.backward_failures.empty());
    CHECK(rep.surjectivity_failures.empty());
    CHECK(rep.pi_iota_identity);
    CHECK(rep.ok());
  }
}

TEST_CASE("tables: validation and associativity") {
  const int n = 3;
  MulTable T(n);
  CHECK(code_of([&] { validate_table(T); }) == ErrorCode::MalformedTable);
  for (int i = 0; i <= n; ++i) T.at(0, i, i) = T.at(i, 0, i) = 1;
  validate_table(T);
  CHECK(is_associative(T));
  T.at(1, 2, 3) = 1;
  CHECK(code_of([&] { validate_table(T); }) == ErrorCode::MalformedTable);
  T.at(2, 1, 3) = 1;
  CHECK(is_associative(T));
  T.at(3, 3, 1) = 1;
  CHECK_FALSE(is_associative(T));
  CHECK(code_of([&] { (void)T.at(0, 0, 4); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("reference points of the family give associative tables") {
  for (int n = 3; n <= 5; ++n) {
    CHECK(is_associative(table_from_point({}, n)));
    Assignment idem;
    for (int i = 1; i <= n; ++i) idem[VarId::t(i, i, i)] = -1;
    MulTable T = table_from_point(idem, n);
    CHECK(is_associative(T));
    for (int i = 1; i <= n; ++i) CHECK(T.at(i, i, i) == 1);
  }
  Assignment one{{VarId::t(1, 2, 3), Rational(1)}};
  CHECK(is_associative(table_from_point(one, 3)));
  Assignment other{{VarId::t(1, 1, 2), Rational(1)}, {VarId::t(2, 2, 1), Rational(1)}};
  CHECK_FALSE(is_associative(table_from_point(other, 3)));
}

TEST_CASE("J is invariant under t -> -t") {
  for (int n = 3; n <= 5; ++n) CHECK(sign_flip_invariant(ideal_generators(n)));
}
