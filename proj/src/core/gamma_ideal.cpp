#include "core/gamma_ideal.hpp"

#include <unordered_set>

#include "core/errors.hpp"

namespace hilbworst {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::Hilbert:
      return "hilbert";
    case Flavor::Miniversal:
      return "miniversal";
    case Flavor::BasedAlgebra:
      return "based_algebra";
  }
  return {};
}

Flavor parse_flavor(const std::string& s) {
  if (s == "hilbert") return Flavor::Hilbert;
  if (s == "miniversal") return Flavor::Miniversal;
  if (s == "based_algebra" || s == "based") return Flavor::BasedAlgebra;
  fail(ErrorCode::InvalidArgument, "unknown flavor '" + s + "'");
}

namespace {

void check_index(int v, int n) {
  if (v < 1 || v > n)
    fail(ErrorCode::IndexOutOfRange, "index " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
}

std::string gamma_label(int i, int j, int k, int l) {
  return "gamma(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ";" + std::to_string(l) +
         ")";
}

void require_n(int n) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "the ideal J is defined for n >= 3, got n=" + std::to_string(n));
  Universe check(n);
}

}  // namespace

Poly gamma(int i, int j, int k, int l, int n) {
  for (int v : {i, j, k, l}) check_index(v, n);
  Universe u(n);
  std::vector<Poly::Term> terms;
  terms.reserve(2 * static_cast<std::size_t>(n));
  for (int lam = 1; lam <= n; ++lam) {
    terms.push_back({Monomial::of(u.index(VarId::t(i, j, lam))) * Monomial::of(u.index(VarId::t(k, lam, l))),
                     Rational(1)});
    terms.push_back({Monomial::of(u.index(VarId::t(i, k, lam))) * Monomial::of(u.index(VarId::t(j, lam, l))),
                     Rational(-1)});
  }
  return Poly::from_terms(n, std::move(terms));
}

Poly cyclic_sum_check(int i, int j, int k, int l, int n) {
  return gamma(i, j, k, l, n) + gamma(j, k, i, l, n) + gamma(k, i, j, l, n);
}

Poly antisymmetry_check(int i, int j, int k, int l, int n) { return gamma(i, j, k, l, n) + gamma(i, k, j, l, n); }

Poly drop_diagonal(const Poly& p) {
  return substitute(p, [](const VarId& v) -> std::optional<Poly> {
    if (v.kind == VarKind::T && v.i == v.j && v.j == v.k) return Poly(0);
    return std::nullopt;
  });
}

IdealPresentation presentation_from(int n, Flavor flavor, const std::vector<Poly>& raw,
                                    const std::vector<std::string>& labels) {
  IdealPresentation out;
  out.n = n;
  out.flavor = flavor;
  out.raw_count = raw.size();
  std::unordered_set<std::string> seen;
  for (std::size_t idx = 0; idx < raw.size(); ++idx) {
    const Poly& g = raw[idx];
    if (g.is_zero()) {
      ++out.zero_dropped;
      continue;
    }
    Poly normalized = g.leading_coefficient() < 0 ? -g : g;
    if (!seen.insert(normalized.to_string()).second) {
      ++out.duplicates_dropped;
      continue;
    }
    out.generators.push_back(g);
    out.labels.push_back(idx < labels.size() ? labels[idx] : "c" + std::to_string(idx + 1));
  }
  return out;
}

namespace {

void enumerate_first_family(int n, std::vector<Poly>& raw, std::vector<std::string>& labels) {
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (j == k || j == l || k == l) continue;
          raw.push_back(gamma(i, j, k, l, n));
          labels.push_back(gamma_label(i, j, k, l));
        }
}

}  // namespace

IdealPresentation ideal_generators(int n, Flavor flavor) {
  require_n(n);
  if (flavor == Flavor::BasedAlgebra)
    fail(ErrorCode::InvalidArgument, "the based-algebra ideal lives in s-variables; use b_ideal_generators");
  std::vector<Poly> raw;
  std::vector<std::string> labels;
  enumerate_first_family(n, raw, labels);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (j == k || j == l) continue;
          raw.push_back(gamma(i, j, k, k, n) - gamma(i, j, l, l, n));
          labels.push_back(gamma_label(i, j, k, k) + "-" + gamma_label(i, j, l, l));
        }
  if (flavor == Flavor::Miniversal)
    for (auto& g : raw) g = drop_diagonal(g);
  return presentation_from(n, flavor, raw, labels);
}

IdealPresentation alternate_generators(int n) {
  require_n(n);
  std::vector<Poly> raw;
  std::vector<std::string> labels;
  enumerate_first_family(n, raw, labels);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (j == k || i == l) continue;
          raw.push_back(gamma(i, j, k, k, n) - gamma(j, i, l, l, n));
          labels.push_back(gamma_label(i, j, k, k) + "-" + gamma_label(j, i, l, l));
        }
  IdealPresentation out = presentation_from(n, Flavor::Hilbert, raw, labels);
  out.presentation = "alternate";
  return out;
}

Poly expand(const Certificate& c, const std::vector<Poly>& generators, int n) {
  Poly sum(n);
  for (const auto& [idx, mult] : c.terms) {
    if (idx >= generators.size()) fail(ErrorCode::IndexOutOfRange, "certificate refers to a missing generator");
    sum += mult * generators[idx];
  }
  return sum;
}

// ---------------------------------------------------------------- membership

struct IdealMembership::Impl {
  const IdealPresentation* ideal = nullptr;
  Universe universe{3};
  MonomialSpan quadrics{true};
  std::vector<Weight> generator_weight;
  std::map<Weight, std::vector<std::uint32_t>> t_by_weight;
  mutable std::map<Weight, std::unique_ptr<MonomialSpan>> cubic_blocks;

  explicit Impl(const IdealPresentation& id) : ideal(&id), universe(id.n) {
    for (std::size_t g = 0; g < id.generators.size(); ++g) {
      const Poly& gen = id.generators[g];
      if (gen.degree() != 2 || homogeneous_components(gen, Grading::TDegree).size() != 1)
        fail(ErrorCode::InvalidArgument, "membership needs t-quadric generators; got " + id.labels[g]);
      auto w = weight_of(gen);
      if (!w) fail(ErrorCode::InvalidArgument, "generator " + id.labels[g] + " is not weight-homogeneous");
      generator_weight.push_back(*w);
      quadrics.insert(to_sparse(gen), static_cast<std::uint32_t>(g));
    }
    for (const auto& v : universe.t_variables()) {
      if (id.flavor == Flavor::Miniversal && v.i == v.j && v.j == v.k) continue;
      Weight w(static_cast<std::size_t>(id.n), 0);
      add_weight(w, v, id.n);
      t_by_weight[w].push_back(universe.index(v));
    }
  }

  std::uint32_t t_local(std::uint32_t var) const { return var - static_cast<std::uint32_t>(ideal->n); }

  const MonomialSpan& block(const Weight& w) const {
    auto it = cubic_blocks.find(w);
    if (it != cubic_blocks.end()) return *it->second;
    auto span = std::make_unique<MonomialSpan>(true);
    Weight need(w.size());
    std::uint32_t num_t = universe.num_t();
    for (std::size_t g = 0; g < ideal->generators.size(); ++g) {
      for (std::size_t a = 0; a < w.size(); ++a) need[a] = w[a] - generator_weight[g][a];
      auto vars = t_by_weight.find(need);
      if (vars == t_by_weight.end()) continue;
      for (auto var : vars->second) {
        Poly row = Poly::from_terms(ideal->n, {{Monomial::of(var), Rational(1)}}) * ideal->generators[g];
        span->insert(to_sparse(row), static_cast<std::uint32_t>(g) * num_t + t_local(var));
      }
    }
    return *cubic_blocks.emplace(w, std::move(span)).first->second;
  }

  Weight monomial_weight(const Monomial& m) const {
    Weight w(static_cast<std::size_t>(ideal->n), 0);
    m.for_each_power([&](std::uint32_t v, unsigned e) { add_weight(w, universe.var(v), ideal->n, static_cast<int>(e)); });
    return w;
  }
};

IdealMembership::IdealMembership(IdealPresentation ideal) : ideal_(std::move(ideal)) {
  impl_ = std::make_unique<Impl>(ideal_);
}
IdealMembership::~IdealMembership() = default;
IdealMembership::IdealMembership(IdealMembership&& o) noexcept : ideal_(std::move(o.ideal_)), impl_(std::move(o.impl_)) {
  if (impl_) impl_->ideal = &ideal_;
}
IdealMembership& IdealMembership::operator=(IdealMembership&& o) noexcept {
  ideal_ = std::move(o.ideal_);
  impl_ = std::move(o.impl_);
  if (impl_) impl_->ideal = &ideal_;
  return *this;
}

std::size_t IdealMembership::degree2_rank() const { return impl_->quadrics.rank(); }

Poly IdealMembership::normal_form(const Poly& p) const {
  return from_sparse(ideal_.n, impl_->quadrics.reduce(to_sparse(p.rebased(ideal_.n))));
}

MembershipResult IdealMembership::membership(const Poly& query) const {
  Poly p = query.rebased(ideal_.n);
  for (const auto& t : p.terms())
    if (kind_degree(t.mono, impl_->universe, VarKind::T) != t.mono.degree())
      fail(ErrorCode::InvalidArgument, "membership queries must be polynomials in the t-variables only");
  MembershipResult result;
  if (p.is_zero()) {
    result.member = true;
    result.certificate = Certificate{};
    return result;
  }
  Certificate cert;
  std::map<std::size_t, Poly> cubic_mult;
  std::uint32_t num_t = impl_->universe.num_t();
  for (const auto& [deg, comp] : homogeneous_components(p, Grading::TDegree)) {
    if (deg >= 4)
      fail(ErrorCode::UnsupportedDegree,
           "membership is decided for t-degree <= 3 only; got a component of degree " + std::to_string(deg));
    if (deg < 2) {
      result.reason = "nonzero component of t-degree " + std::to_string(deg) + " (the ideal starts in degree 2)";
      return result;
    }
    if (deg == 2) {
      auto combo = impl_->quadrics.express(to_sparse(comp));
      if (!combo) {
        result.reason = "t-degree 2 component is outside the span of the generators";
        return result;
      }
      for (const auto& [src, c] : combo->entries) cert.terms.emplace_back(src, Poly::constant(ideal_.n, c));
      continue;
    }
    std::map<Weight, std::vector<Poly::Term>> by_weight;
    for (const auto& t : comp.terms()) by_weight[impl_->monomial_weight(t.mono)].push_back(t);
    for (auto& [w, terms] : by_weight) {
      auto combo = impl_->block(w).express(to_sparse(Poly::from_terms(ideal_.n, std::move(terms))));
      if (!combo) {
        result.reason = "t-degree 3 component of weight block has no linear-form certificate";
        return result;
      }
      for (const auto& [src, c] : combo->entries) {
        std::size_t g = src / num_t;
        std::uint32_t var = src % num_t + static_cast<std::uint32_t>(ideal_.n);
        auto [it, fresh] = cubic_mult.try_emplace(g, Poly(ideal_.n));
        (void)fresh;
        it->second += Poly::from_terms(ideal_.n, {{Monomial::of(var), c}});
      }
    }
  }
  for (auto& [g, m] : cubic_mult) cert.terms.emplace_back(g, std::move(m));
  if (expand(cert, ideal_.generators, ideal_.n) != p)
    fail(ErrorCode::CertificateNotFound, "certificate failed re-expansion");
  result.member = true;
  result.certificate = std::move(cert);
  return result;
}

// ---------------------------------------------------------------- spans

std::size_t span_rank(const std::vector<Poly>& polys) {
  MonomialSpan span;
  for (const auto& p : polys) span.insert(to_sparse(p));
  return span.rank();
}

SpanComparison compare_spans(const std::vector<Poly>& a, const std::vector<Poly>& b, int n) {
  SpanComparison out;
  MonomialSpan sa(true), sb(true), joint;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa.insert(to_sparse(a[i]), static_cast<std::uint32_t>(i));
    joint.insert(to_sparse(a[i]));
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    sb.insert(to_sparse(b[i]), static_cast<std::uint32_t>(i));
    joint.insert(to_sparse(b[i]));
  }
  out.rank_a = sa.rank();
  out.rank_b = sb.rank();
  out.rank_joint = joint.rank();
  bool all = true;
  auto certify = [&](const std::vector<Poly>& from, const MonomialSpan& into, const std::vector<Poly>& basis,
                     std::vector<std::optional<Certificate>>& sink) {
    for (const auto& p : from) {
      auto combo = into.express(to_sparse(p));
      if (!combo) {
        sink.emplace_back();
        all = false;
        continue;
      }
      Certificate c;
      for (const auto& [src, coeff] : combo->entries) c.terms.emplace_back(src, Poly::constant(n, coeff));
      if (expand(c, basis, n) != p.rebased(n)) fail(ErrorCode::CertificateNotFound, "span certificate failed re-expansion");
      sink.emplace_back(std::move(c));
    }
  };
  certify(a, sb, b, out.a_in_b);
  certify(b, sa, a, out.b_in_a);
  out.equal = all && out.rank_a == out.rank_b && out.rank_a == out.rank_joint;
  return out;
}

}  // namespace hilbworst
