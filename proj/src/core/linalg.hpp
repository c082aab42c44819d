#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "core/poly.hpp"
#include "core/rational.hpp"

namespace hilbworst {

/// Sparse vector with entries sorted by descending key, no zero entries.
template <class Key>
struct SparseVec {
  std::vector<std::pair<Key, Rational>> entries;

  bool empty() const { return entries.empty(); }
  const Key& lead() const { return entries.front().first; }

  Rational at(const Key& k) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), k,
                               [](const auto& e, const Key& key) { return e.first > key; });
    if (it != entries.end() && it->first == k) return it->second;
    return Rational(0);
  }

  void scale(const Rational& c) {
    for (auto& e : entries) e.second *= c;
  }

  /// this += c * o
  void add_scaled(const SparseVec& o, const Rational& c) {
    if (c == 0 || o.entries.empty()) return;
    std::vector<std::pair<Key, Rational>> out;
    out.reserve(entries.size() + o.entries.size());
    auto a = entries.begin();
    auto b = o.entries.begin();
    while (a != entries.end() || b != o.entries.end()) {
      if (b == o.entries.end() || (a != entries.end() && a->first > b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == entries.end() || b->first > a->first) {
        out.emplace_back(b->first, b->second * c);
        ++b;
      } else {
        Rational s = a->second + b->second * c;
        if (s != 0) out.emplace_back(std::move(a->first), std::move(s));
        ++a;
        ++b;
      }
    }
    entries = std::move(out);
  }

  static SparseVec unit(const Key& k) {
    SparseVec v;
    v.entries.emplace_back(k, Rational(1));
    return v;
  }
};

inline SparseVec<Monomial> to_sparse(const Poly& p) {
  SparseVec<Monomial> v;
  v.entries.reserve(p.size());
  for (const auto& t : p.terms()) v.entries.emplace_back(t.mono, t.coeff);
  return v;
}

inline Poly from_sparse(int n, const SparseVec<Monomial>& v) {
  std::vector<Poly::Term> terms;
  terms.reserve(v.entries.size());
  for (const auto& [m, c] : v.entries) terms.push_back({m, c});
  return Poly::from_terms(n, std::move(terms));
}

/// Fully reduced row echelon form over Q, rows keyed by their leading key.
/// With tracking enabled every row remembers its expression in terms of the
/// inserted source vectors, which yields membership certificates.
template <class Key, class Hash = std::hash<Key>>
class EchelonSpan {
 public:
  using Vec = SparseVec<Key>;
  using Combo = SparseVec<std::uint32_t>;

  explicit EchelonSpan(bool track = false) : track_(track) {}

  std::size_t rank() const { return rows_.size(); }
  bool tracking() const { return track_; }

  /// Inserts v under source id `source`; returns true if the rank grew.
  bool insert(Vec v, std::uint32_t source = 0) {
    Combo combo;
    if (track_) combo = Combo::unit(source);
    reduce_in_place(v, track_ ? &combo : nullptr);
    if (v.empty()) return false;
    Rational inv = 1 / v.entries.front().second;
    v.scale(inv);
    if (track_) combo.scale(inv);
    Key pivot = v.lead();
    for (auto& row : rows_) {
      Rational c = row.vec.at(pivot);
      if (c == 0) continue;
      row.vec.add_scaled(v, -c);
      if (track_) row.combo.add_scaled(combo, -c);
    }
    index_.emplace(pivot, rows_.size());
    rows_.push_back({std::move(v), std::move(combo)});
    return true;
  }

  /// Remainder of v after subtracting its projection on the span (the canonical normal form).
  Vec reduce(Vec v, Combo* combo_out = nullptr) const {
    Combo c;
    reduce_in_place(v, combo_out ? &c : nullptr, true);
    if (combo_out) *combo_out = std::move(c);
    return v;
  }

  /// If v lies in the span, returns coefficients over the source ids with v = sum c_s * source_s.
  std::optional<Combo> express(const Vec& v) const {
    Combo c;
    Vec rest = v;
    reduce_in_place(rest, &c, true);
    if (!rest.empty()) return std::nullopt;
    return c;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }

 private:
  struct Row {
    Vec vec;
    Combo combo;
  };

  // subtract_sign=false: used on insert, combo accumulates -coeff * row combo (v itself becomes a new row).
  // subtract_sign=true: used on queries, combo accumulates +coeff * row combo (v = sum + remainder).
  void reduce_in_place(Vec& v, Combo* combo, bool query = false) const {
    std::vector<std::pair<const Row*, Rational>> hits;
    for (const auto& [k, c] : v.entries) {
      auto it = index_.find(k);
      if (it != index_.end()) hits.emplace_back(&rows_[it->second], c);
    }
    for (const auto& [row, c] : hits) {
      v.add_scaled(row->vec, -c);
      if (combo && track_) combo->add_scaled(row->combo, query ? c : -c);
    }
  }

  bool track_;
  std::vector<Row> rows_;
  std::unordered_map<Key, std::size_t, Hash> index_;
};

using MonomialSpan = EchelonSpan<Monomial, MonomialHash>;
using CoordinateSpan = EchelonSpan<std::uint32_t>;

/// Rank of a family of sparse coordinate vectors.
inline std::size_t sparse_rank(const std::vector<SparseVec<std::uint32_t>>& rows) {
  CoordinateSpan span;
  for (const auto& r : rows) span.insert(r);
  return span.rank();
}

/// Linear system  sum_u a_{r,u} * y_u = rhs_r  in unknowns y_u with rational a and
/// polynomial right-hand sides. Elimination separates the rows into pivot rows
/// (which solve for an unknown) and consistency rows, whose right-hand sides must
/// vanish for the system to be solvable.
class PolyRhsSystem {
 public:
  PolyRhsSystem(int poly_n, std::size_t unknowns) : n_(poly_n), unknowns_(unknowns) {}

  void add_row(SparseVec<std::uint32_t> coeffs, Poly rhs) { rows_.push_back({std::move(coeffs), std::move(rhs)}); }
  std::size_t rows() const { return rows_.size(); }

  struct Solution {
    /// Particular solution with free unknowns set to zero.
    std::vector<Poly> values;
    std::vector<bool> determined;
    /// Right-hand side combinations that must vanish.
    std::vector<Poly> constraints;
  };

  Solution solve() const {
    struct Work {
      SparseVec<std::uint32_t> a;
      Poly rhs;
    };
    std::vector<Work> pivots;
    std::unordered_map<std::uint32_t, std::size_t> where;
    Solution sol;
    for (const auto& row : rows_) {
      Work w{row.coeffs, row.rhs};
      std::vector<std::pair<std::size_t, Rational>> hits;
      for (const auto& [k, c] : w.a.entries) {
        auto it = where.find(k);
        if (it != where.end()) hits.emplace_back(it->second, c);
      }
      for (const auto& [p, c] : hits) {
        w.a.add_scaled(pivots[p].a, -c);
        w.rhs.add_scaled(pivots[p].rhs, -c);
      }
      if (w.a.empty()) {
        if (!w.rhs.is_zero()) sol.constraints.push_back(std::move(w.rhs));
        continue;
      }
      Rational inv = 1 / w.a.entries.front().second;
      w.a.scale(inv);
      w.rhs *= inv;
      std::uint32_t piv = w.a.lead();
      for (auto& other : pivots) {
        Rational c = other.a.at(piv);
        if (c == 0) continue;
        other.a.add_scaled(w.a, -c);
        other.rhs.add_scaled(w.rhs, -c);
      }
      where.emplace(piv, pivots.size());
      pivots.push_back(std::move(w));
    }
    sol.values.assign(unknowns_, Poly(n_));
    sol.determined.assign(unknowns_, false);
    for (const auto& w : pivots) {
      std::uint32_t piv = w.a.lead();
      sol.values[piv] = w.rhs;
      sol.determined[piv] = w.a.entries.size() == 1;
    }
    return sol;
  }

 private:
  struct Row {
    SparseVec<std::uint32_t> coeffs;
    Poly rhs;
  };
  int n_;
  std::size_t unknowns_;
  std::vector<Row> rows_;
};

}  // namespace hilbworst
