// Acceptance run: one PASS/FAIL line per criterion. Every criterion is an exact
// statement, so the only tolerance is zero; the time limits are wall-clock seconds.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "core/based_algebra.hpp"
#include "core/classical.hpp"
#include "core/dgla.hpp"
#include "core/gamma_ideal.hpp"
#include "core/linear_geometry.hpp"
#include "core/oracle.hpp"
#include "core/taylor.hpp"

using namespace hilbworst;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string num(std::size_t v) { return std::to_string(v); }

Outcome gamma_identities() {
  Outcome o;
  std::size_t tuples = 0;
  for (int n = 3; n <= 5; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            ++tuples;
            std::string at = "n=" + std::to_string(n) + " (" + std::to_string(i) + "," + std::to_string(j) + "," +
                             std::to_string(k) + "," + std::to_string(l) + ")";
            o.require(antisymmetry_check(i, j, k, l, n).is_zero(), "antisymmetry at " + at);
            o.require(cyclic_sum_check(i, j, k, l, n).is_zero(), "cyclic sum at " + at);
          }
  if (o.ok) o.detail = num(tuples) + " index tuples";
  return o;
}

Outcome generator_replacement() {
  Outcome o;
  std::ostringstream ranks;
  for (int n = 3; n <= 5; ++n) {
    auto J = ideal_generators(n).generators;
    auto A = alternate_generators(n).generators;
    auto cmp = compare_spans(J, A, n);
    o.require(cmp.equal, "spans differ at n=" + std::to_string(n));
    for (std::size_t g = 0; g < J.size(); ++g)
      o.require(cmp.a_in_b[g] && expand(*cmp.a_in_b[g], A, n) == J[g], "missing certificate for a main generator");
    for (std::size_t g = 0; g < A.size(); ++g)
      o.require(cmp.b_in_a[g] && expand(*cmp.b_in_a[g], J, n) == A[g], "missing certificate for an alternate generator");
    ranks << (n > 3 ? ", " : "") << "n=" << n << " rank " << cmp.rank_joint;
  }
  if (o.ok) o.detail = ranks.str();
  return o;
}

Outcome tangent_dimensions() {
  Outcome o;
  for (int n = 3; n <= 8; ++n) {
    auto d = tangent_dims(n);
    const std::size_t hom = static_cast<std::size_t>(n * n * (n + 1) / 2);
    const std::size_t t1 = static_cast<std::size_t>((n + 2) * n * (n - 1) / 2);
    o.require(d.hom_dim == hom && d.t1_dim == t1,
              "n=" + std::to_string(n) + ": hom " + num(d.hom_dim) + " t1 " + num(d.t1_dim));
  }
  auto d3 = tangent_dims(3);
  o.require(d3.hom_dim == 18 && d3.t1_dim == 15, "n=3 should give 18 and 15");
  if (o.ok) o.detail = "n=3..8, n=3 gives 18 and 15";
  return o;
}

Outcome first_order() {
  Outcome o;
  std::size_t wedges = 0;
  for (int n = 3; n <= 6; ++n)
    for (const auto& w : first_order_residual(n)) {
      ++wedges;
      o.require(w.residual.is_zero(), "n=" + std::to_string(n) + " wedge " + to_string(w.wedge));
    }
  if (o.ok) o.detail = num(wedges) + " wedges";
  return o;
}

Outcome second_order() {
  Outcome o;
  for (int n = 3; n <= 5; ++n) {
    auto J = ideal_generators(n);
    IdealMembership M(J);
    auto so = second_order_obstruction(n);
    o.require(compare_spans(so.constraints, J.generators, n).equal, "constraint span differs at n=" + std::to_string(n));
    o.require(so.tails.size() == static_cast<std::size_t>(n * (n + 1) / 2), "tail count at n=" + std::to_string(n));
    for (const auto& [pair, c] : so.tails)
      o.require(M.normal_form(c - tail_of(pair.first, pair.second, n)).is_zero(),
                "tail (" + std::to_string(pair.first) + "," + std::to_string(pair.second) + ") at n=" + std::to_string(n));
  }
  if (o.ok) o.detail = "n=3..5";
  return o;
}

Outcome syzygies_and_flatness() {
  Outcome o;
  std::size_t certs = 0, wedges = 0;
  for (int n = 3; n <= 4; ++n) {
    auto J = ideal_generators(n);
    IdealMembership M(J);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          if (j == k) continue;
          ++certs;
          auto r = M.membership(syzygy_cubic(i, j, k, n));
          o.require(r.member && r.certificate && expand(*r.certificate, J.generators, n) == syzygy_cubic(i, j, k, n),
                    "syzygy (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
        }
    for (const auto& e : flatness_residual(n, M)) {
      ++wedges;
      o.require(e.ok(), "flatness at " + to_string(e.wedge));
    }
  }
  if (o.ok) o.detail = num(certs) + " cubic certificates, " + num(wedges) + " non-Koszul wedges";
  return o;
}

Outcome dgla_route() {
  Outcome o;
  for (int n = 3; n <= 4; ++n) {
    auto phi = build_phi(n, Flavor::Miniversal);
    for (const auto& e : closedness_residual(phi)) o.require(e.residual.is_zero(), "closedness at " + to_string(e.generator));
    for (const auto& e : cup_product(phi)) o.require(e.matches(), "cup product at " + to_string(e.generator));
    auto kur = kuranishi_quadratic_locus(n, Flavor::Miniversal);
    o.require(compare_spans(kur.constraints, ideal_generators(n, Flavor::Miniversal).generators, n).equal,
              "Kuranishi locus differs at n=" + std::to_string(n));
  }
  for (int n = 3; n <= 5; ++n) {
    auto cmp = compare_classical_dgla(n);
    o.require(cmp.spans.equal, "classical vs DGLA spans at n=" + std::to_string(n));
  }
  if (o.ok) o.detail = "closed, cup = sum gamma x, Kuranishi = J (n=3,4); spans agree n=3..5";
  return o;
}

Outcome based_algebras() {
  Outcome o;
  std::ostringstream d;
  for (int n = 3; n <= 4; ++n) {
    auto rep = verify_based_isomorphism(n);
    if (!rep.forward_failures.empty()) o.require(false, "pi at n=" + std::to_string(n) + ": " + rep.forward_failures.front());
    if (!rep.backward_failures.empty()) o.require(false, "iota at n=" + std::to_string(n) + ": " + rep.backward_failures.front());
    if (!rep.surjectivity_failures.empty())
      o.require(false, "surjectivity at n=" + std::to_string(n) + ": " + rep.surjectivity_failures.front());
    o.require(rep.pi_iota_identity, "pi o iota != id at n=" + std::to_string(n));
    d << (n > 3 ? "; " : "") << "n=" << n << " " << rep.forward_checked << " + " << rep.backward_checked << " generators";
  }
  if (o.ok) o.detail = d.str();
  return o;
}

Outcome linear_subspaces() {
  Outcome o;
  std::size_t specs = 0;
  for (int n = 3; n <= 20; ++n)
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        LinearSubspaceSpec s{n, {}, {}};
        for (int v = 1; v <= a; ++v) s.A.push_back(v);
        for (int v = a + 1; v <= a + b; ++v) s.B.push_back(v);
        ++specs;
        o.require(containment_check(s).ok(), "L_{A,B} not contained: n=" + std::to_string(n) + " a=" + std::to_string(a) +
                                                 " b=" + std::to_string(b));
      }
  LinearSubspaceSpec ex{16, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, {12, 13, 14, 15, 16}};
  o.require(subspace_dim(ex) == 275, "subspace_dim(11,5) != 275");
  o.require(smoothing_dim(16) == 272, "smoothing_dim(16) != 272");
  for (int n = 3; n <= 200; ++n) {
    auto m = max_linear_dim(n);
    o.require(m.formula_matches && m.discrepancies.empty(), "closed formula differs at n=" + std::to_string(n));
  }
  if (o.ok) o.detail = num(specs) + " subspaces, 275 vs 272, formulas n=3..200";
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  std::ostringstream d;
  for (int n = 3; n <= 5; ++n) {
    auto rep = run_oracle(n, 20261016, 100);
    std::size_t configs = 0;
    for (const auto& s : rep.samples) configs += s.kind == SampleKind::Configuration && s.in_variety;
    o.require(rep.samples.size() >= 100, "fewer than 100 samples");
    o.require(rep.disagreements == 0, std::to_string(rep.disagreements) + " disagreements at n=" + std::to_string(n));
    o.require(configs > 0 && rep.non_members > 0, "sample mix lacks members or non-members at n=" + std::to_string(n));
    d << (n > 3 ? "; " : "") << "n=" << n << " " << rep.members << "/" << rep.non_members;
  }
  if (o.ok) o.detail = "members/non-members " + d.str();
  return o;
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "gamma identities", 5, gamma_identities},
      {2, "generator replacement", 30, generator_replacement},
      {3, "tangent dimensions", 10, tangent_dimensions},
      {4, "first-order lifting", 30, first_order},
      {5, "second-order obstruction", 60, second_order},
      {6, "cubic syzygy and flatness", 120, syzygies_and_flatness},
      {7, "DGLA route", 120, dgla_route},
      {8, "based algebras", 600, based_algebras},
      {9, "linear subspaces", 10, linear_subspaces},
      {10, "oracle agreement", 120, oracle_agreement},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs <= c.limit_seconds;
    bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("%s [%d] %s: %s (%.2fs, limit %.0fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                c.limit_seconds, in_time ? "" : ", over time");
    std::fflush(stdout);
  }
  std::printf("%d/10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
