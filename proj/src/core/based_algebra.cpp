#include "core/based_algebra.hpp"

#include <optional>

#include "core/linalg.hpp"

namespace hilbworst {

namespace {

void require_n(int n) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "based algebras are handled for n >= 3, got n=" + std::to_string(n));
}

std::string triple_text(int i, int j, int k) {
  return std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
}

// Dense t-values indexed by (i,j,k) in 1..n, symmetric in (i,j).
class DenseT {
 public:
  DenseT(const Assignment& tvals, int n) : n_(n), v_(static_cast<std::size_t>(n * n * n)) {
    for (const auto& [var, val] : tvals) {
      if (var.kind != VarKind::T) fail(ErrorCode::InvalidArgument, "expected t-variables only, got " + to_string(var));
      if (var.i < 1 || var.j > n || var.k < 1 || var.k > n) fail(ErrorCode::IndexOutOfRange, "t-variable out of range: " + to_string(var));
      at(var.i, var.j, var.k) = val;
      at(var.j, var.i, var.k) = val;
    }
  }
  Rational& at(int i, int j, int k) { return v_[idx(i, j, k)]; }
  const Rational& at(int i, int j, int k) const { return v_[idx(i, j, k)]; }
  Rational gamma(int i, int j, int k, int l) const {
    Rational g;
    for (int lam = 1; lam <= n_; ++lam) g += at(i, j, lam) * at(k, lam, l) - at(i, k, lam) * at(j, lam, l);
    return g;
  }

 private:
  std::size_t idx(int i, int j, int k) const { return static_cast<std::size_t>(((i - 1) * n_ + (j - 1)) * n_ + (k - 1)); }
  int n_;
  std::vector<Rational> v_;
};

}  // namespace

void validate_table(const MulTable& T) {
  const int n = T.n;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k)
        if (T.at(i, j, k) != T.at(j, i, k))
          fail(ErrorCode::MalformedTable, "table is not commutative at s(" + triple_text(i, j, k) + ")");
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (T.at(0, i, j) != Rational(i == j ? 1 : 0))
        fail(ErrorCode::MalformedTable, "v_0 is not the unit: s(" + triple_text(0, i, j) + ") = " + to_string(T.at(0, i, j)));
}

std::map<Triple, std::vector<Rational>> associativity_residual(const MulTable& T) {
  validate_table(T);
  return residuals_unchecked(T);
}

bool is_associative(const MulTable& T) {
  for (const auto& [key, r] : associativity_residual(T))
    for (const auto& c : r)
      if (c != 0) return false;
  return true;
}

SymbolicMulTable generic_table(int n) {
  SymbolicMulTable T(n, Poly(n));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k) {
        if (i == 0 || j == 0)
          T.at(i, j, k) = Poly::constant(n, Rational((i == 0 ? j : i) == k ? 1 : 0));
        else
          T.at(i, j, k) = Poly::s(n, std::min(i, j), std::max(i, j), k);
      }
  return T;
}

Poly gamma_tilde(int i, int j, int k, int l, int n) {
  Poly g(n);
  for (int lam = 0; lam <= n; ++lam)
    g += Poly::s(n, i, j, lam) * Poly::s(n, k, lam, l) - Poly::s(n, i, k, lam) * Poly::s(n, j, lam, l);
  return g;
}

IdealPresentation b_ideal_generators(int n) {
  require_n(n);
  std::vector<Poly> raw;
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 0; k <= n; ++k) {
        raw.push_back(Poly::s(n, i, j, k) - Poly::s(n, j, i, k));
        labels.push_back("comm(" + std::to_string(i) + "," + std::to_string(j) + ";" + std::to_string(k) + ")");
      }
  for (int i = 0; i <= n; ++i) {
    raw.push_back(Poly::s(n, 0, i, i) - Poly::constant(n, 1));
    labels.push_back("unit(" + std::to_string(i) + ")");
  }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      raw.push_back(Poly::s(n, 0, i, j));
      labels.push_back("unit(" + std::to_string(i) + ";" + std::to_string(j) + ")");
    }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= n; ++l) {
          if (j == k) continue;
          raw.push_back(gamma_tilde(i, j, k, l, n));
          labels.push_back("assoc(" + triple_text(i, j, k) + ";" + std::to_string(l) + ")");
        }
  IdealPresentation out = presentation_from(n, Flavor::BasedAlgebra, raw, labels);
  out.presentation = "based";
  return out;
}

Poly pi_map(const Poly& p, int n) {
  std::map<std::pair<int, int>, Poly> tails;
  auto image = [&](const VarId& v) -> std::optional<Poly> {
    if (v.kind != VarKind::S) return std::nullopt;
    const int i = v.i, j = v.j, k = v.k;
    if (i == 0) return Poly::constant(n, Rational(j == k ? 1 : 0));
    if (j == 0) return Poly::constant(n, Rational(i == k ? 1 : 0));
    if (k == 0) {
      auto key = std::minmax(i, j);
      auto it = tails.find(key);
      if (it == tails.end()) {
        Poly sum(n);
        for (int lam = 1; lam <= n; ++lam) sum += gamma(i, j, lam, lam, n);
        it = tails.emplace(key, sum * Rational(-1, n - 1)).first;
      }
      return it->second;
    }
    return Poly::t(n, i, j, k);
  };
  return substitute(p, image, n);
}

Poly iota_map(const Poly& q, int n) {
  return substitute(
      q,
      [n](const VarId& v) -> std::optional<Poly> {
        if (v.kind != VarKind::T) return std::nullopt;
        return Poly::s(n, v.i, v.j, v.k);
      },
      n);
}

Poly reduce_mod_J0(const Poly& p, int n) {
  return substitute(
      p,
      [n](const VarId& v) -> std::optional<Poly> {
        if (v.kind != VarKind::S) return std::nullopt;
        if (v.i == 0) return Poly::constant(n, Rational(v.j == v.k ? 1 : 0));
        if (v.j == 0) return Poly::constant(n, Rational(v.i == v.k ? 1 : 0));
        if (v.i > v.j) return Poly::s(n, v.j, v.i, v.k);
        return std::nullopt;
      },
      n);
}

BasedIsomorphismReport verify_based_isomorphism(int n) {
  require_n(n);
  BasedIsomorphismReport rep;
  rep.n = n;

  IdealPresentation J = ideal_generators(n, Flavor::Hilbert);
  IdealMembership member(J);
  IdealPresentation B = b_ideal_generators(n);
  for (std::size_t g = 0; g < B.generators.size(); ++g) {
    ++rep.forward_checked;
    Poly image = pi_map(B.generators[g], n);
    for (const auto& [d, comp] : homogeneous_components(image, Grading::TDegree)) {
      if (comp.is_zero()) continue;
      if (d < 2 || !member.membership(comp).member) {
        rep.forward_failures.push_back(B.labels[g] + " (t-degree " + std::to_string(d) + ")");
        break;
      }
    }
  }

  std::vector<Poly> reduced;
  MonomialSpan span(true);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 0; l <= n; ++l) {
          if (j == k) continue;
          Poly h = reduce_mod_J0(gamma_tilde(i, j, k, l, n), n);
          if (h.is_zero()) continue;
          span.insert(to_sparse(h), static_cast<std::uint32_t>(reduced.size()));
          reduced.push_back(std::move(h));
        }
  for (std::size_t g = 0; g < J.generators.size(); ++g) {
    ++rep.backward_checked;
    Poly q = reduce_mod_J0(iota_map(J.generators[g], n), n);
    auto combo = span.express(to_sparse(q));
    bool ok = combo.has_value();
    if (ok) {
      Poly back(n);
      for (const auto& [src, c] : combo->entries) back.add_scaled(reduced[src], c);
      ok = back == q;
    }
    if (!ok) rep.backward_failures.push_back(J.labels[g]);
  }

  Universe u(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      ++rep.surjectivity_checked;
      int k = j == 1 ? 2 : 1;
      Poly rest = reduce_mod_J0(gamma_tilde(i, j, k, k, n), n) - Poly::s(n, i, j, 0);
      bool clean = true;
      for (const auto& v : rest.variables())
        if (v.kind == VarKind::S && v.k == 0) clean = false;
      if (!clean) rep.surjectivity_failures.push_back("s(" + triple_text(i, j, 0) + ")");
    }

  rep.pi_iota_identity = true;
  for (const auto& v : u.t_variables()) {
    Poly t = Poly::var(n, v);
    rep.pi_iota_identity = rep.pi_iota_identity && pi_map(iota_map(t, n), n) == t;
  }
  return rep;
}

MulTable table_from_point(const Assignment& tvals, int n) {
  require_n(n);
  DenseT t(tvals, n);
  MulTable T(n);
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= n; ++k) {
      T.at(0, i, k) = Rational(i == k ? 1 : 0);
      T.at(i, 0, k) = Rational(i == k ? 1 : 0);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Rational tail;
      for (int k = 1; k <= n; ++k) {
        T.at(i, j, k) = -t.at(i, j, k);
        tail += t.gamma(i, j, k, k);
      }
      T.at(i, j, 0) = -tail / Rational(n - 1);
    }
  return T;
}

bool sign_flip_invariant(const IdealPresentation& J) {
  const int n = J.n;
  auto flip = [n](const VarId& v) -> std::optional<Poly> {
    if (v.kind != VarKind::T) return std::nullopt;
    return -Poly::var(n, v);
  };
  for (const auto& g : J.generators)
    if (!(substitute(g, flip, n) == g)) return false;
  return true;
}

}  // namespace hilbworst
