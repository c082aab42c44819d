#pragma once

#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/rational.hpp"
#include "core/variables.hpp"

namespace hilbworst {

/// A monomial stored as the multiset of its variable indices, sorted descending.
/// Ordering is graded lexicographic: total degree first, then the exponent of the
/// largest variable in which the two monomials differ.
class Monomial {
 public:
  using Storage = boost::container::small_vector<std::uint32_t, 6>;

  Monomial() = default;
  static Monomial of(std::uint32_t var, unsigned power = 1);

  std::size_t degree() const { return factors_.size(); }
  bool is_one() const { return factors_.empty(); }
  const Storage& factors() const { return factors_; }

  /// Visits (variable index, exponent) pairs in ascending variable order.
  template <class F>
  void for_each_power(F&& f) const {
    std::size_t pos = factors_.size();
    while (pos > 0) {
      std::uint32_t v = factors_[pos - 1];
      unsigned e = 0;
      while (pos > 0 && factors_[pos - 1] == v) {
        ++e;
        --pos;
      }
      f(v, e);
    }
  }

  unsigned exponent(std::uint32_t var) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

 private:
  Storage factors_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Sparse polynomial with exact rational coefficients. Terms are kept in
/// descending monomial order with no zero coefficients; values are immutable
/// once built (all mutation goes through the compound operators).
///
/// `n` names the ambient variable universe; n == 0 marks a scalar that is
/// compatible with every universe. Mixing two different nonzero n throws
/// Error(UniverseMismatch).
class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Poly() = default;
  explicit Poly(int n) : n_(n) {}

  static Poly constant(int n, const Rational& c);
  static Poly var(int n, const VarId& v);
  static Poly x(int n, int i) { return var(n, VarId::x(i)); }
  static Poly t(int n, int i, int j, int k) { return var(n, VarId::t(i, j, k)); }
  static Poly s(int n, int i, int j, int k) { return var(n, VarId::s(i, j, k)); }
  /// Builds from arbitrary terms: sorts, merges equal monomials, drops zeros.
  static Poly from_terms(int n, std::vector<Term> terms);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Rational& leading_coefficient() const { return terms_.front().coeff; }
  Rational coefficient(const Monomial& m) const;
  std::optional<Rational> constant_value() const;

  /// Total degree (-1 for the zero polynomial).
  int degree() const;

  Poly& operator+=(const Poly& o) { return add_scaled(o, Rational(1)); }
  Poly& operator-=(const Poly& o) { return add_scaled(o, Rational(-1)); }
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  /// this += c * o
  Poly& add_scaled(const Poly& o, const Rational& c);

  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b);

  /// Canonical text: "3/2*x(1)^2*t(1,2,3) - x(2) + 1"; `cas` uses x_1, t_1_2_3.
  std::string to_string(bool cas = false) const;

  /// Variables occurring in the polynomial, ascending.
  std::vector<VarId> variables() const;
  /// Returns the same polynomial re-expressed in the universe of `n` (all variables must exist there).
  Poly rebased(int n) const;

 private:
  static int combine(int a, int b);

  int n_ = 0;
  std::vector<Term> terms_;
};

using Assignment = std::map<VarId, Rational>;

/// Partial substitution of rational values; unassigned variables stay symbolic.
Poly evaluate(const Poly& p, const Assignment& values);
/// Full evaluation; throws Error(InvalidArgument) if a variable is left unassigned.
Rational evaluate_rational(const Poly& p, const Assignment& values);

/// Ring homomorphism x -> image(x). `image` returns nullopt to keep a variable.
/// The result lives in universe `target_n` (0: same as p).
Poly substitute(const Poly& p, const std::function<std::optional<Poly>(const VarId&)>& image, int target_n = 0);

enum class Grading { TDegree, XDegree, Internal };

/// Splits p into graded pieces. Internal degree counts x- and t-variables with weight 1
/// (s-variables carry internal degree 0).
std::map<int, Poly> homogeneous_components(const Poly& p, Grading grading);

/// Torus weight of p if every term has the same weight, nullopt otherwise (zero -> nullopt).
std::optional<Weight> weight_of(const Poly& p);

/// Degree of a monomial counting only variables of `kind`.
unsigned kind_degree(const Monomial& m, const Universe& u, VarKind kind);

/// Parses the canonical grammar (also accepts the CAS spelling of variables).
Poly parse_poly(std::string_view text, int n);

}  // namespace hilbworst
