#include "core/verify.hpp"

#include <algorithm>
#include <sstream>

#include "core/based_algebra.hpp"
#include "core/classical.hpp"
#include "core/dgla.hpp"
#include "core/errors.hpp"
#include "core/linear_geometry.hpp"
#include "core/taylor.hpp"

namespace hilbworst {

namespace {

class Tally {
 public:
  Tally(std::string route, std::string check) {
    rec_.route = std::move(route);
    rec_.check = std::move(check);
  }

  void see(bool ok, const std::string& what, const std::string& residual = "") {
    ++rec_.checked;
    if (!ok) flag(what, residual);
  }

  void count(std::size_t k) { rec_.checked += k; }

  void flag(const std::string& what, const std::string& residual = "") {
    if (!rec_.pass) return;
    rec_.pass = false;
    rec_.generator = what;
    rec_.residual = residual.empty() ? "nonzero" : residual;
  }

  void note(std::string residual) {
    if (rec_.pass) rec_.residual = std::move(residual);
  }
  void emit(std::vector<CheckRecord>& out) { out.push_back(rec_); }

 private:
  CheckRecord rec_;
};

std::string tuple_text(std::initializer_list<int> xs) {
  std::string s = "(";
  for (int x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + ")";
}

std::string ranks_text(const SpanComparison& c) {
  return "ranks " + std::to_string(c.rank_a) + "/" + std::to_string(c.rank_b) + "/" + std::to_string(c.rank_joint);
}

}  // namespace

bool VerifyReport::ok() const { return first_failure() == nullptr; }

const CheckRecord* VerifyReport::first_failure() const {
  for (const auto& r : records)
    if (!r.pass) return &r;
  return nullptr;
}

const std::vector<std::string>& known_routes() {
  static const std::vector<std::string> routes{"classical", "dgla", "based", "oracle"};
  return routes;
}

std::vector<std::string> parse_routes(const std::string& text) {
  if (text == "all") return known_routes();
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto& known = known_routes();
    if (std::find(known.begin(), known.end(), item) == known.end())
      fail(ErrorCode::InvalidArgument, "unknown route '" + item + "' (expected classical, dgla, based, oracle or all)");
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  if (out.empty()) fail(ErrorCode::InvalidArgument, "no route selected");
  return out;
}

void run_classical_route(int n, std::vector<CheckRecord>& out) {
  const std::string route = "classical";
  {
    Tally anti(route, "gamma_antisymmetry"), cyc(route, "gamma_cyclic_sum");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            Poly a = antisymmetry_check(i, j, k, l, n), c = cyclic_sum_check(i, j, k, l, n);
            anti.see(a.is_zero(), tuple_text({i, j, k, l}), a.to_string());
            cyc.see(c.is_zero(), tuple_text({i, j, k, l}), c.to_string());
          }
    anti.emit(out);
    cyc.emit(out);
  }

  IdealPresentation J = ideal_generators(n, Flavor::Hilbert);
  IdealMembership member(J);
  {
    Tally t(route, "presentation_equivalence");
    auto cmp = compare_spans(J.generators, alternate_generators(n).generators, n);
    t.see(cmp.equal, "alternate presentation", ranks_text(cmp));
    t.note(ranks_text(cmp));
    t.emit(out);
  }
  {
    Tally t(route, "tangent_dimensions");
    auto d = tangent_dims(n);
    std::string text = "hom " + std::to_string(d.hom_dim) + " t1 " + std::to_string(d.t1_dim);
    t.see(d.hom_dim == d.expected_hom && d.t1_dim == d.expected_t1 && d.derivation_identity, "n=" + std::to_string(n), text);
    t.note(text);
    t.emit(out);
  }
  {
    Tally t(route, "linear_syzygies");
    auto rep = obstruction_degree_check(n);
    t.count(rep.tuples);
    if (!rep.nonzero.empty()) t.flag(rep.nonzero.front());
    t.emit(out);
  }
  {
    Tally t(route, "first_order_lift");
    for (const auto& w : first_order_residual(n)) t.see(w.residual.is_zero(), to_string(w.wedge), w.residual.to_string());
    t.emit(out);
  }
  auto so = second_order_obstruction(n);
  {
    Tally t(route, "second_order_constraints");
    auto cmp = compare_spans(so.constraints, J.generators, n);
    t.see(cmp.equal, "constraint span", ranks_text(cmp));
    t.note(ranks_text(cmp));
    t.emit(out);
  }
  {
    Tally t(route, "tails_modulo_J");
    for (const auto& [pair, c] : so.tails) {
      Poly diff = member.normal_form(c - tail_of(pair.first, pair.second, n));
      t.see(diff.is_zero(), "c" + tuple_text({pair.first, pair.second}), diff.to_string());
    }
    t.emit(out);
  }
  {
    Tally t(route, "syzygy_certificates");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          if (j == k) continue;
          t.see(member.membership(syzygy_cubic(i, j, k, n)).member, tuple_text({i, j, k}));
        }
    t.emit(out);
  }
  {
    Tally t(route, "flatness");
    for (const auto& e : flatness_residual(n, member)) t.see(e.ok(), to_string(e.wedge), e.degree3.to_string());
    t.emit(out);
  }
  {
    Tally t(route, "koszul_lifts");
    auto bad = koszul_full_lift_failures(n);
    for (const auto& w : koszul_wedges(n))
      t.see(std::find(bad.begin(), bad.end(), w) == bad.end(), to_string(w));
    t.emit(out);
  }
}

void run_dgla_route(int n, Flavor flavor, std::vector<CheckRecord>& out) {
  const std::string route = "dgla";
  DerivationTrunc phi = build_phi(n, flavor);
  {
    Tally t(route, "closedness");
    for (const auto& e : closedness_residual(phi)) t.see(e.residual.is_zero(), to_string(e.generator), e.residual.to_string());
    t.emit(out);
  }
  {
    Tally t(route, "cup_product");
    for (const auto& e : cup_product(phi))
      t.see(e.matches(), to_string(e.generator), (e.value - e.expected).to_string());
    t.emit(out);
  }
  {
    Tally t(route, "kuranishi_locus");
    auto kur = kuranishi_quadratic_locus(n, flavor);
    auto cmp = compare_spans(kur.constraints, ideal_generators(n, flavor).generators, n);
    t.see(cmp.equal, "quadratic locus", ranks_text(cmp));
    t.note(ranks_text(cmp));
    t.emit(out);
  }
  {
    auto cmp = compare_classical_dgla(n);
    Tally spans(route, "classical_vs_dgla"), psi(route, "psi_equals_minus_tail");
    spans.see(cmp.spans.equal, "constraint spans", ranks_text(cmp.spans));
    spans.note(ranks_text(cmp.spans));
    psi.see(cmp.psi_is_minus_tail, "psi + c");
    spans.emit(out);
    psi.emit(out);
  }
}

void run_based_route(int n, std::vector<CheckRecord>& out) {
  const std::string route = "based";
  {
    Tally t(route, "generic_residuals");
    for (const auto& [key, r] : residuals_unchecked(generic_table(n)))
      for (int l = 0; l <= n; ++l) {
        Poly diff = r[l] - reduce_mod_J0(gamma_tilde(key[0], key[1], key[2], l, n), n);
        t.see(diff.is_zero(), "assoc" + tuple_text({key[0], key[1], key[2], l}), diff.to_string());
      }
    t.emit(out);
  }
  {
    auto rep = verify_based_isomorphism(n);
    Tally fwd(route, "pi_into_J"), back(route, "iota_into_J_tilde"), surj(route, "surjectivity"), sec(route, "pi_iota_identity");
    fwd.count(rep.forward_checked);
    if (!rep.forward_failures.empty()) fwd.flag(rep.forward_failures.front());
    back.count(rep.backward_checked);
    if (!rep.backward_failures.empty()) back.flag(rep.backward_failures.front());
    surj.count(rep.surjectivity_checked);
    if (!rep.surjectivity_failures.empty()) surj.flag(rep.surjectivity_failures.front());
    sec.see(rep.pi_iota_identity, "t-variables");
    fwd.emit(out);
    back.emit(out);
    surj.emit(out);
    sec.emit(out);
  }
  {
    Tally t(route, "sign_flip");
    t.see(sign_flip_invariant(ideal_generators(n, Flavor::Hilbert)), "J");
    t.emit(out);
  }
  {
    Tally t(route, "reference_tables");
    t.see(is_associative(table_from_point({}, n)), "square-zero");
    Assignment idem;
    for (int i = 1; i <= n; ++i) idem[VarId::t(i, i, i)] = -1;
    t.see(is_associative(table_from_point(idem, n)), "coordinate points");
    t.see(is_associative(table_from_point({{VarId::t(1, 1, 1), Rational(-1)}}, n)), "single idempotent");
    t.emit(out);
  }
}

void run_oracle_route(int n, std::uint64_t seed, std::size_t samples, std::vector<CheckRecord>& out,
                      std::vector<OracleSample>* samples_out) {
  const std::string route = "oracle";
  auto rep = run_oracle(n, seed, samples);
  {
    Tally t(route, "three_way_agreement");
    for (const auto& s : rep.samples)
      t.see(s.agree(), "sample " + std::to_string(s.index) + " (" + to_string(s.kind) + ")",
            "variety=" + std::to_string(s.in_variety) + " associative=" + std::to_string(s.associative) +
                " fiber=" + std::to_string(s.fiber.dimension));
    t.note("members " + std::to_string(rep.members) + " non-members " + std::to_string(rep.non_members));
    if (rep.members == 0 || rep.non_members == 0) t.flag("sample mix", "one side of the test is empty");
    t.emit(out);
  }
  {
    Tally t(route, "configuration_round_trip");
    for (const auto& s : rep.samples)
      if (s.kind == SampleKind::Configuration)
        t.see(s.in_variety && s.fiber.basis_ok && s.fiber.dimension == n + 1, "sample " + std::to_string(s.index));
    t.emit(out);
  }
  {
    Tally t(route, "subspace_containment");
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        LinearSubspaceSpec spec{n, {}, {}};
        for (int v = 1; v <= a; ++v) spec.A.push_back(v);
        for (int v = a + 1; v <= a + b; ++v) spec.B.push_back(v);
        auto r = containment_check(spec);
        t.see(r.ok(), "a=" + std::to_string(a) + " b=" + std::to_string(b), r.ok() ? "" : r.nonzero.front());
      }
    t.emit(out);
  }
  if (samples_out) *samples_out = std::move(rep.samples);
}

VerifyReport verify(const VerifyOptions& opts) {
  if (opts.n < 3) fail(ErrorCode::InvalidArgument, "verify needs n >= 3");
  if (opts.flavor == Flavor::BasedAlgebra) fail(ErrorCode::InvalidArgument, "verify runs with the hilbert or miniversal flavor");
  VerifyReport rep;
  rep.options = opts;
  for (const auto& r : opts.routes) {
    if (r == "classical")
      run_classical_route(opts.n, rep.records);
    else if (r == "dgla")
      run_dgla_route(opts.n, opts.flavor, rep.records);
    else if (r == "based")
      run_based_route(opts.n, rep.records);
    else if (r == "oracle")
      run_oracle_route(opts.n, opts.seed, opts.samples, rep.records, &rep.oracle_samples);
    else
      fail(ErrorCode::InvalidArgument, "unknown route '" + r + "'");
  }
  return rep;
}

}  // namespace hilbworst
