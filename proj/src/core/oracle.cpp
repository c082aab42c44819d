#include "core/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "core/based_algebra.hpp"
#include "core/errors.hpp"
#include "core/linalg.hpp"

namespace hilbworst {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

std::optional<Matrix> inverse(Matrix m) {
  const std::size_t d = m.size();
  Matrix inv(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && m[piv][col] == 0) ++piv;
    if (piv == d) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational s = 1 / m[col][col];
    for (std::size_t k = 0; k < d; ++k) {
      m[col][k] *= s;
      inv[col][k] *= s;
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t k = 0; k < d; ++k) {
        m[r][k] -= f * m[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

Matrix evaluation_matrix(const std::vector<RationalPoint>& points, int n) {
  Matrix m(points.size(), std::vector<Rational>(static_cast<std::size_t>(n + 1)));
  for (std::size_t p = 0; p < points.size(); ++p) {
    m[p][0] = 1;
    for (int a = 0; a < n; ++a) m[p][a + 1] = points[p][a];
  }
  return m;
}

// t(i,j,k) as a dense symmetric array over 1..n.
struct TValues {
  int n;
  std::vector<Rational> v;
  TValues(const Assignment& tvals, int n_) : n(n_), v(static_cast<std::size_t>(n_ * n_ * n_)) {
    for (const auto& [var, val] : tvals) {
      if (var.kind != VarKind::T || var.k < 1 || var.k > n || var.i < 1 || var.j > n)
        fail(ErrorCode::InvalidArgument, "not a t-variable of n=" + std::to_string(n) + ": " + to_string(var));
      at(var.i, var.j, var.k) = val;
      at(var.j, var.i, var.k) = val;
    }
  }
  Rational& at(int i, int j, int k) { return v[static_cast<std::size_t>(((i - 1) * n + j - 1) * n + k - 1)]; }
  const Rational& at(int i, int j, int k) const {
    return v[static_cast<std::size_t>(((i - 1) * n + j - 1) * n + k - 1)];
  }
  Rational gamma(int i, int j, int k, int l) const {
    Rational g;
    for (int lam = 1; lam <= n; ++lam) g += at(i, j, lam) * at(k, lam, l) - at(i, k, lam) * at(j, lam, l);
    return g;
  }
  Rational tail(int i, int j) const {
    Rational c;
    for (int k = 1; k <= n; ++k) c += gamma(i, j, k, k);
    return c / (n - 1);
  }
};

SparseVec<std::uint32_t> sparse_of(const std::vector<Rational>& dense) {
  SparseVec<std::uint32_t> out;
  for (std::size_t k = dense.size(); k-- > 0;)
    if (dense[k] != 0) out.entries.emplace_back(static_cast<std::uint32_t>(k), dense[k]);
  return out;
}

}  // namespace

Assignment point_from_configuration(const std::vector<RationalPoint>& points, int n) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "configurations are handled for n >= 3");
  if (points.size() != static_cast<std::size_t>(n + 1))
    fail(ErrorCode::InvalidArgument, "expected " + std::to_string(n + 1) + " points, got " + std::to_string(points.size()));
  for (const auto& p : points)
    if (p.size() != static_cast<std::size_t>(n)) fail(ErrorCode::InvalidArgument, "every point needs n coordinates");
  auto inv = inverse(evaluation_matrix(points, n));
  if (!inv) fail(ErrorCode::BasisCriterionFailure, "1, x_1, ..., x_n do not restrict to a basis on these points");

  Assignment out;
  std::map<std::pair<int, int>, Rational> constants;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      std::vector<Rational> c(static_cast<std::size_t>(n + 1));
      for (std::size_t p = 0; p < points.size(); ++p) {
        Rational v = points[p][i - 1] * points[p][j - 1];
        if (v == 0) continue;
        for (int r = 0; r <= n; ++r) c[r] += (*inv)[r][p] * v;
      }
      for (int k = 1; k <= n; ++k)
        if (c[k] != 0) out[VarId::t(i, j, k)] = -c[k];
      constants[{i, j}] = c[0];
    }

  TValues t(out, n);
  for (const auto& [ij, c0] : constants)
    if (c0 != -t.tail(ij.first, ij.second))
      fail(ErrorCode::CertificateNotFound, "configuration point does not match the family constant at (" +
                                               std::to_string(ij.first) + "," + std::to_string(ij.second) + ")");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          bool first = j != k && j != l && k != l;
          bool second = j != k && j != l;
          if ((first && t.gamma(i, j, k, l) != 0) || (second && t.gamma(i, j, k, k) != t.gamma(i, j, l, l)))
            fail(ErrorCode::CertificateNotFound, "configuration point violates a generator of J");
        }
  return out;
}

FiberReport fiber_check(const Assignment& tvals, int n) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "fiber_check needs n >= 3");
  TValues t(tvals, n);
  const auto d = static_cast<std::size_t>(n + 1);
  // M[a][b] is the image of basis vector b (0 = 1, b = x_b) under multiplication by x_a.
  std::vector<Matrix> M(d, Matrix(d, std::vector<Rational>(d)));
  for (int a = 1; a <= n; ++a) {
    M[a][0][a] = 1;
    for (int b = 1; b <= n; ++b) {
      for (int k = 1; k <= n; ++k) M[a][b][k] = -t.at(a, b, k);
      M[a][b][0] = -t.tail(a, b);
    }
  }
  auto apply = [&](int a, const std::vector<Rational>& v) {
    std::vector<Rational> out(d);
    for (std::size_t b = 0; b < d; ++b) {
      if (v[b] == 0) continue;
      for (std::size_t k = 0; k < d; ++k) out[k] += v[b] * M[a][b][k];
    }
    return out;
  };

  CoordinateSpan span;
  std::vector<std::vector<Rational>> queue;
  auto push = [&](std::vector<Rational> v) {
    if (span.insert(sparse_of(v))) queue.push_back(std::move(v));
  };
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        std::vector<Rational> e(d);
        e[c] = 1;
        auto ab = apply(a, apply(b, e)), ba = apply(b, apply(a, e));
        for (std::size_t k = 0; k < d; ++k) ab[k] -= ba[k];
        push(std::move(ab));
      }
  for (std::size_t q = 0; q < queue.size() && span.rank() < d; ++q)
    for (int a = 1; a <= n; ++a) push(apply(a, queue[q]));

  FiberReport rep;
  rep.defect_rank = static_cast<int>(span.rank());
  rep.dimension = n + 1 - rep.defect_rank;
  rep.basis_ok = rep.defect_rank == 0;
  return rep;
}

bool in_variety(const IdealPresentation& J, const Assignment& tvals) {
  Assignment full;
  for (const auto& v : Universe(J.n).t_variables()) full[v] = 0;
  for (const auto& [v, val] : tvals) full[v] = val;
  for (const auto& g : J.generators)
    if (evaluate_rational(g, full) != 0) return false;
  return true;
}

std::string to_string(SampleKind k) {
  switch (k) {
    case SampleKind::Configuration: return "configuration";
    case SampleKind::Flipped: return "flipped";
    case SampleKind::Subspace: return "subspace";
    case SampleKind::Generic: return "generic";
    case SampleKind::Perturbed: return "perturbed";
  }
  return "unknown";
}

RationalSampler::RationalSampler(std::uint64_t seed, int n, int height) : height_(height) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(n)};
  rng_.seed(seq);
}

int RationalSampler::index(int bound) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(bound)); }

Rational RationalSampler::next() {
  int num = index(2 * height_ + 1) - height_;
  int den = index(height_) + 1;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::vector<RationalPoint> sample_configuration(RationalSampler& rs, int n) {
  for (;;) {
    std::vector<RationalPoint> pts(static_cast<std::size_t>(n + 1), RationalPoint(static_cast<std::size_t>(n)));
    for (auto& p : pts)
      for (auto& c : p) c = rs.next();
    if (inverse(evaluation_matrix(pts, n))) return pts;
  }
}

Assignment sample_subspace_point(RationalSampler& rs, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rs.index(i + 1)]);
  int a = 2 + rs.index(n - 2);
  int b = 1 + rs.index(n - a);
  std::vector<int> A(perm.begin(), perm.begin() + a), B(perm.begin() + a, perm.begin() + a + b);
  Assignment out;
  for (int i : A)
    for (int j : A)
      if (i < j)
        for (int k : B) {
          Rational v = rs.next();
          if (v != 0) out[VarId::t(i, j, k)] = v;
        }
  return out;
}

Assignment sample_generic_point(RationalSampler& rs, int n) {
  Assignment out;
  for (const auto& v : Universe(n).t_variables()) {
    Rational q = rs.next();
    if (q != 0) out[v] = q;
  }
  return out;
}

OracleReport run_oracle(int n, std::uint64_t seed, std::size_t samples) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "the oracle runs for n >= 3");
  OracleReport rep;
  rep.n = n;
  rep.seed = seed;
  IdealPresentation J = ideal_generators(n, Flavor::Hilbert);
  RationalSampler rs(seed, n);
  const auto tvars = Universe(n).t_variables();
  for (std::size_t s = 0; s < samples; ++s) {
    OracleSample os;
    os.index = s;
    os.kind = static_cast<SampleKind>(s % 5);
    switch (os.kind) {
      case SampleKind::Configuration:
        os.tvals = point_from_configuration(sample_configuration(rs, n), n);
        break;
      case SampleKind::Flipped:
        os.tvals = point_from_configuration(sample_configuration(rs, n), n);
        for (auto& [v, val] : os.tvals) val = -val;
        break;
      case SampleKind::Subspace:
        os.tvals = sample_subspace_point(rs, n);
        break;
      case SampleKind::Generic:
        os.tvals = sample_generic_point(rs, n);
        break;
      case SampleKind::Perturbed: {
        os.tvals = point_from_configuration(sample_configuration(rs, n), n);
        Rational bump;
        while (bump == 0) bump = rs.next();
        const VarId& v = tvars[static_cast<std::size_t>(rs.index(static_cast<int>(tvars.size())))];
        Rational moved = os.tvals[v] + bump;
        if (moved == 0)
          os.tvals.erase(v);
        else
          os.tvals[v] = moved;
        break;
      }
    }
    os.in_variety = in_variety(J, os.tvals);
    os.associative = is_associative(table_from_point(os.tvals, n));
    os.fiber = fiber_check(os.tvals, n);
    (os.in_variety ? rep.members : rep.non_members) += 1;
    if (!os.agree()) ++rep.disagreements;
    rep.samples.push_back(std::move(os));
  }
  return rep;
}

}  // namespace hilbworst
