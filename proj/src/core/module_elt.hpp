#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "core/poly.hpp"

namespace hilbworst {

enum class SymbolKind : std::uint8_t { One, E, Wedge, Curly };

/// Basis symbol of a free module: 1, e[a,b] (a <= b), the S^q wedge e[a,b]^e[c,d]
/// or the Koszul square e[a,b]v[c,d]. Wedge and curly pairs are stored with
/// (a,b) < (c,d), each pair sorted.
struct BasisSymbol {
  SymbolKind kind = SymbolKind::One;
  std::uint8_t a = 0, b = 0, c = 0, d = 0;

  static BasisSymbol one() { return {}; }
  static BasisSymbol e(int i, int j);

  std::pair<int, int> first() const { return {a, b}; }
  std::pair<int, int> second() const { return {c, d}; }

  friend auto operator<=>(const BasisSymbol&, const BasisSymbol&) = default;
};

/// Canonical form of e[i,j] (op) e[k,l] for op in {Wedge, Curly}: the symbol and the
/// sign it carries (0 when both factors coincide).
std::pair<BasisSymbol, int> canonical_pair(SymbolKind kind, int i, int j, int k, int l);

std::string to_string(const BasisSymbol& s);

/// Element of a free module over the polynomial ring: finite sum of Poly * symbol.
class FreeModElt {
 public:
  FreeModElt() = default;
  explicit FreeModElt(int n) : n_(n) {}

  static FreeModElt basis(int n, const BasisSymbol& s, const Poly& coeff);
  static FreeModElt e(int n, int i, int j, const Poly& coeff);
  /// coeff * e[i,j]^e[k,l] (sign-canonicalized).
  static FreeModElt wedge(int n, int i, int j, int k, int l, const Poly& coeff);
  /// coeff * e[i,j]v[k,l] (sign-canonicalized).
  static FreeModElt curly(int n, int i, int j, int k, int l, const Poly& coeff);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<BasisSymbol, Poly>& terms() const { return terms_; }
  Poly coefficient(const BasisSymbol& s) const;

  FreeModElt& add(const BasisSymbol& s, const Poly& coeff);
  FreeModElt& operator+=(const FreeModElt& o);
  FreeModElt& operator-=(const FreeModElt& o);
  FreeModElt operator-() const;
  friend FreeModElt operator+(FreeModElt a, const FreeModElt& b) { return a += b; }
  friend FreeModElt operator-(FreeModElt a, const FreeModElt& b) { return a -= b; }
  friend FreeModElt operator*(const Poly& p, const FreeModElt& m);
  friend bool operator==(const FreeModElt& a, const FreeModElt& b) { return a.terms_ == b.terms_; }

  /// Applies f to every coefficient (e.g. a substitution), dropping zeros.
  template <class F>
  FreeModElt map_coefficients(F&& f) const {
    FreeModElt out(n_);
    for (const auto& [s, c] : terms_) out.add(s, f(c));
    return out;
  }

  /// "(-1) * x(3) * e[1,2] + (1) * x(2) * e[1,3]"; "0" for the zero element.
  std::string to_string(bool cas = false) const;

 private:
  int n_ = 0;
  std::map<BasisSymbol, Poly> terms_;
};

}  // namespace hilbworst
