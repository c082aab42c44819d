#include "core/serialize.hpp"
#include "core/verify.hpp"
#include "support.hpp"

using namespace hilbworst;
using testing::code_of;

TEST_CASE("route parsing") {
  CHECK(parse_routes("all") == known_routes());
  CHECK(parse_routes("dgla,classical,dgla") == std::vector<std::string>{"dgla", "classical"});
  CHECK(code_of([] { parse_routes("dgla,lean"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { parse_routes(""); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("full verification at n=3") {
  VerifyOptions opts;
  auto rep = verify(opts);
  CHECK(rep.ok());
  CHECK(rep.first_failure() == nullptr);
  CHECK(rep.records.size() == 26);
  CHECK(rep.oracle_samples.size() == 100);
  for (const auto& r : rep.records) {
    CAPTURE(r.route + "/" + r.check);
    CHECK(r.pass);
    CHECK(r.checked > 0);
  }
  Json j = to_json(rep);
  CHECK(j["schema"] == "hilbworst/1");
  CHECK(j["passed"] == true);
  CHECK_FALSE(j.contains("first_failure"));
  CHECK(to_text(rep).find("all checks passed") != std::string::npos);
}

TEST_CASE("verify rejects bad options") {
  VerifyOptions o;
  o.n = 2;
  CHECK(code_of([&] { verify(o); }) == ErrorCode::InvalidArgument);
  o.n = 3;
  o.flavor = Flavor::BasedAlgebra;
  CHECK(code_of([&] { verify(o); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("ideal and family serialization") {
  auto J = ideal_generators(3);
  Json j = to_json(J);
  CHECK(j["schema"] == kSchema);
  CHECK(j["kind"] == "ideal");
  CHECK(j["generators"].size() == 18);
  CHECK(j["counts"]["kept"] == 18);
  CHECK(parse_poly(j["generators"][0].get<std::string>(), 3) == J.generators[0]);
  std::string cas = to_text(universal_family(3), TextFormat::Cas);
  CHECK(cas.rfind("f_1_1 = ", 0) == 0);
  CHECK(cas.find("t(") == std::string::npos);
  CHECK(to_text(J, TextFormat::Canonical).find(J.labels[0] + ": ") == 0);
}

TEST_CASE("t-values round trip") {
  Assignment t{{VarId::t(1, 2, 3), Rational(-3, 7)}, {VarId::t(3, 3, 1), Rational(2)}};
  Json doc{{"n", 3}, {"t", tvals_json(t)}};
  auto [n, back] = parse_tvals(doc.dump());
  CHECK(n == 3);
  CHECK(back == t);
  auto [n2, ints] = parse_tvals(R"({"n": 4, "t": [[2, 1, 3, 5]]})");
  CHECK(n2 == 4);
  CHECK(ints.at(VarId::t(1, 2, 3)) == 5);
  CHECK(code_of([] { parse_tvals("{"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_tvals(R"({"t": []})"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_tvals(R"({"n": 3, "t": [[1, 2]]})"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_tvals(R"({"n": 3, "t": [[1, 2, 4, "1"]]})"); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { parse_tvals(R"({"n": 3, "t": [[1, 2, 3, "1/0"]]})"); }) == ErrorCode::Parse);
}

TEST_CASE("table document") {
  MulTable T = table_from_point({{VarId::t(1, 1, 1), Rational(-1)}}, 3);
  Json j = table_json(T, associativity_residual(T));
  CHECK(j["associative"] == true);
  CHECK(j["residuals"].empty());
  CHECK(j["s"][1][1][1] == "1");
  CHECK(j["s"][0][2][2] == "1");
}

TEST_CASE("subspace document") {
  Json j = to_json(subspace_summary(16), enumerate_optimal(16, 2));
  CHECK(j["max_dim"] == "275");
  CHECK(j["smoothing_dim"] == 272);
  CHECK(j["reducible"] == true);
  CHECK(j["optimal"].size() == 2);
}
