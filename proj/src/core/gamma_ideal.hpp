#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/linalg.hpp"
#include "core/poly.hpp"

namespace hilbworst {

enum class Flavor { Hilbert, Miniversal, BasedAlgebra };

std::string to_string(Flavor f);
/// "hilbert" | "miniversal" | "based_algebra"; throws Error(InvalidArgument).
Flavor parse_flavor(const std::string& s);

/// gamma(i,j,k;l) = sum_lambda t(i,j,lambda) t(k,lambda,l) - t(i,k,lambda) t(j,lambda,l).
Poly gamma(int i, int j, int k, int l, int n);
/// gamma(i,j,k;l) + gamma(j,k,i;l) + gamma(k,i,j;l); identically zero.
Poly cyclic_sum_check(int i, int j, int k, int l, int n);
/// gamma(i,j,k;l) + gamma(i,k,j;l); identically zero.
Poly antisymmetry_check(int i, int j, int k, int l, int n);

/// Substitutes t(i,i,i) -> 0 for every i.
Poly drop_diagonal(const Poly& p);

struct IdealPresentation {
  int n = 0;
  Flavor flavor = Flavor::Hilbert;
  std::string presentation = "main";
  std::vector<Poly> generators;
  std::vector<std::string> labels;
  std::size_t raw_count = 0;
  std::size_t zero_dropped = 0;
  std::size_t duplicates_dropped = 0;
};

/// Generators of the ideal J in its two index families, in enumeration
/// order (i,j,k,l lexicographic, first family then second), with zero polynomials,
/// duplicates and negated duplicates removed. The miniversal flavor applies
/// t(i,i,i) -> 0 to the raw list before deduplication. Requires n >= 3.
IdealPresentation ideal_generators(int n, Flavor flavor = Flavor::Hilbert);

/// Second presentation: gamma(i,j,k;l) with j,k,l distinct and
/// gamma(i,j,k;k) - gamma(j,i,l;l) with j != k, i != l.
IdealPresentation alternate_generators(int n);

/// Builds a presentation from an arbitrary list (labels "c1", "c2", ... unless given),
/// applying the same deduplication rules.
IdealPresentation presentation_from(int n, Flavor flavor, const std::vector<Poly>& raw,
                                    const std::vector<std::string>& labels = {});

/// p = sum_i multiplier_i * generator_i. Multipliers are constants (degree-2 queries)
/// or linear forms in t (degree-3 queries).
struct Certificate {
  std::vector<std::pair<std::size_t, Poly>> terms;
};

Poly expand(const Certificate& c, const std::vector<Poly>& generators, int n);

struct MembershipResult {
  bool member = false;
  std::optional<Certificate> certificate;
  std::string reason;
};

/// Membership in an ideal generated by t-quadrics, for polynomials whose homogeneous
/// t-components have degree at most 3. Degree-3 components are decided in torus-weight
/// blocks: only products t_v * g with weight(t_v) + weight(g) equal to the target weight
/// can contribute. Every certificate is re-expanded and compared before it is returned.
class IdealMembership {
 public:
  explicit IdealMembership(IdealPresentation ideal);
  ~IdealMembership();
  IdealMembership(IdealMembership&&) noexcept;
  IdealMembership& operator=(IdealMembership&&) noexcept;

  const IdealPresentation& ideal() const { return ideal_; }
  int n() const { return ideal_.n; }
  std::size_t degree2_rank() const;

  /// Throws Error(UnsupportedDegree) for a component of t-degree >= 4 and
  /// Error(InvalidArgument) if p involves x- or s-variables.
  MembershipResult membership(const Poly& p) const;

  /// Canonical representative of a t-quadric modulo the degree-2 span of the ideal.
  Poly normal_form(const Poly& p) const;

 private:
  struct Impl;
  IdealPresentation ideal_;
  std::unique_ptr<Impl> impl_;
};

struct SpanComparison {
  std::size_t rank_a = 0;
  std::size_t rank_b = 0;
  std::size_t rank_joint = 0;
  bool equal = false;
  /// For each element of a, its certificate over b (nullopt if not in span), and vice versa.
  std::vector<std::optional<Certificate>> a_in_b;
  std::vector<std::optional<Certificate>> b_in_a;
};

/// Compares the linear spans of two lists of polynomials with explicit mutual certificates.
SpanComparison compare_spans(const std::vector<Poly>& a, const std::vector<Poly>& b, int n);

/// Rank of the linear span of a list of polynomials.
std::size_t span_rank(const std::vector<Poly>& polys);

}  // namespace hilbworst
