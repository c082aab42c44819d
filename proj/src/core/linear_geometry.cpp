#include "core/linear_geometry.hpp"

#include <algorithm>
#include <optional>

#include "core/errors.hpp"

namespace hilbworst {

namespace {

std::vector<bool> mask_of(const std::vector<int>& s, int n) {
  std::vector<bool> m(static_cast<std::size_t>(n + 1), false);
  for (int v : s) m[v] = true;
  return m;
}

BigInt f_value(int a, int n) { return BigInt(a) * (a - 1) * (n - a) / 2; }

BigInt binomial(int n, int k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

void validate_spec(const LinearSubspaceSpec& spec) {
  if (spec.n < 1) fail(ErrorCode::InvalidArgument, "subspace spec needs n >= 1");
  std::vector<int> seen(static_cast<std::size_t>(spec.n + 1), 0);
  for (const auto* part : {&spec.A, &spec.B})
    for (int v : *part) {
      if (v < 1 || v > spec.n) fail(ErrorCode::InvalidArgument, "index " + std::to_string(v) + " outside 1.." + std::to_string(spec.n));
      if (seen[v]++) fail(ErrorCode::InvalidArgument, "A and B must be disjoint sets; index " + std::to_string(v) + " repeats");
    }
}

bool in_support(const LinearSubspaceSpec& spec, int i, int j, int k) {
  auto has = [](const std::vector<int>& s, int v) { return std::find(s.begin(), s.end(), v) != s.end(); };
  return (spec.diagonal || i != j) && has(spec.A, i) && has(spec.A, j) && has(spec.B, k);
}

std::int64_t subspace_dim(const LinearSubspaceSpec& spec) {
  validate_spec(spec);
  const auto a = static_cast<std::int64_t>(spec.A.size());
  const auto b = static_cast<std::int64_t>(spec.B.size());
  return a * (spec.diagonal ? a + 1 : a - 1) * b / 2;
}

Poly restrict_to_subspace(const Poly& p, const LinearSubspaceSpec& spec) {
  validate_spec(spec);
  auto A = mask_of(spec.A, spec.n), B = mask_of(spec.B, spec.n);
  return substitute(p, [&](const VarId& v) -> std::optional<Poly> {
    if (v.kind != VarKind::T) return std::nullopt;
    if ((spec.diagonal || v.i != v.j) && A[v.i] && A[v.j] && B[v.k]) return std::nullopt;
    return Poly(p.n());
  });
}

ContainmentReport containment_check(const LinearSubspaceSpec& spec) {
  return containment_check(spec, spec.n <= 6 ? ContainmentMethod::Symbolic : ContainmentMethod::TermSupport);
}

ContainmentReport containment_check(const LinearSubspaceSpec& spec, ContainmentMethod method) {
  validate_spec(spec);
  const int n = spec.n;
  if (n < 3) fail(ErrorCode::InvalidArgument, "containment is checked for n >= 3");
  ContainmentReport rep;
  rep.spec = spec;
  rep.method = method;

  if (method == ContainmentMethod::TermSupport) {
    auto A = mask_of(spec.A, n), B = mask_of(spec.B, n);
    auto S = [&](int i, int j, int k) { return (spec.diagonal || i != j) && A[i] && A[j] && B[k]; };
    for (int lam = 1; lam <= n; ++lam) {
      std::size_t left = 0, right = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          left += S(i, j, lam);
          right += S(i, lam, j);
        }
      rep.surviving_terms += left * right;
    }
    const auto un = static_cast<std::size_t>(n);
    rep.generators_checked = un * un * (un - 1) * (un - 2) + un * un * (un - 1) * (un - 1);
    if (rep.surviving_terms == 0) return rep;
    rep.method = ContainmentMethod::Symbolic;
    rep.generators_checked = 0;
  }

  IdealPresentation J = ideal_generators(n, Flavor::Hilbert);
  for (std::size_t g = 0; g < J.generators.size(); ++g) {
    ++rep.generators_checked;
    if (!restrict_to_subspace(J.generators[g], spec).is_zero()) rep.nonzero.push_back(J.labels[g]);
  }
  return rep;
}

LinearMaximum max_linear_dim(int n) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "max_linear_dim needs n >= 3");
  LinearMaximum out;
  out.n = n;
  for (int a = 1; a <= n - 1; ++a) {
    BigInt v = f_value(a, n);
    if (out.maximizers.empty() || v > out.dim) {
      out.dim = v;
      out.maximizers = {a};
    } else if (v == out.dim) {
      out.maximizers.push_back(a);
    }
  }

  BigInt disc = BigInt(n) * n - n + 1, root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  BigInt num = BigInt(n + 1) + root;
  out.a_floor = static_cast<int>(BigInt(num / 3).get_si());
  bool exact = root * root == disc && num % 3 == 0;
  out.a_ceil = exact ? out.a_floor : out.a_floor + 1;

  const Rational n3 = Rational(n) * n * n, n2 = Rational(n) * n;
  Rational base = Rational(2, 27) * n3 - Rational(1, 9) * n2;
  switch (n % 3) {
    case 0:
      out.case_formula = base;
      out.m = 2 * n / 3;
      break;
    case 1:
      out.case_formula = base + Rational(1, 27);
      out.m = (2 * n + 1) / 3;
      break;
    default:
      out.case_formula = base - Rational(1, 9) * n + Rational(2, 27);
      out.m = (2 * n + 2) / 3;
      break;
  }
  out.case_formula.canonicalize();
  out.count_lower_bound = binomial(n, out.m);

  out.formula_matches = out.case_formula == Rational(out.dim);
  out.maximizers_within_floor_ceil = std::all_of(out.maximizers.begin(), out.maximizers.end(),
                                                 [&](int a) { return a == out.a_floor || a == out.a_ceil; });
  out.m_is_maximizer = std::find(out.maximizers.begin(), out.maximizers.end(), out.m) != out.maximizers.end();
  if (!out.formula_matches)
    out.discrepancies.push_back("case formula " + to_string(out.case_formula) + " differs from the maximum " + out.dim.get_str());
  if (!out.maximizers_within_floor_ceil) out.discrepancies.push_back("a maximizer lies outside floor/ceiling of a_max");
  if (!out.m_is_maximizer)
    out.discrepancies.push_back("m=" + std::to_string(out.m) + " is not a maximizer of a(a-1)(n-a)/2");
  return out;
}

std::int64_t smoothing_dim(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "smoothing_dim needs n >= 1");
  return static_cast<std::int64_t>(n) * n + n;
}

SubspaceSummary subspace_summary(int n) {
  SubspaceSummary s;
  s.maximum = max_linear_dim(n);
  s.smoothing = smoothing_dim(n);
  s.reducible = s.maximum.dim > BigInt(static_cast<long>(s.smoothing));
  return s;
}

std::vector<LinearSubspaceSpec> enumerate_optimal(int n, std::size_t cap) {
  const int m = max_linear_dim(n).m;
  std::vector<LinearSubspaceSpec> out;
  std::vector<int> pick(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) pick[i] = i + 1;
  while (out.size() < cap) {
    LinearSubspaceSpec spec;
    spec.n = n;
    spec.A = pick;
    for (int v = 1; v <= n; ++v)
      if (std::find(pick.begin(), pick.end(), v) == pick.end()) spec.B.push_back(v);
    out.push_back(std::move(spec));
    int pos = m - 1;
    while (pos >= 0 && pick[pos] == n - m + pos + 1) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int q = pos + 1; q < m; ++q) pick[q] = pick[q - 1] + 1;
  }
  return out;
}

}  // namespace hilbworst
