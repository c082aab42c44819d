#include "core/module_elt.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace hilbworst {

namespace {

std::uint8_t idx8(int v) {
  if (v < 1 || v > 255) fail(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(v) + " out of range");
  return static_cast<std::uint8_t>(v);
}

}  // namespace

BasisSymbol BasisSymbol::e(int i, int j) {
  if (i > j) std::swap(i, j);
  return BasisSymbol{SymbolKind::E, idx8(i), idx8(j), 0, 0};
}

std::pair<BasisSymbol, int> canonical_pair(SymbolKind kind, int i, int j, int k, int l) {
  if (kind != SymbolKind::Wedge && kind != SymbolKind::Curly)
    fail(ErrorCode::InvalidArgument, "canonical_pair needs a wedge or curly kind");
  if (i > j) std::swap(i, j);
  if (k > l) std::swap(k, l);
  std::pair<int, int> p{i, j}, q{k, l};
  if (p == q) return {BasisSymbol{kind, idx8(i), idx8(j), idx8(k), idx8(l)}, 0};
  int sign = 1;
  if (q < p) {
    std::swap(p, q);
    sign = -1;
  }
  return {BasisSymbol{kind, idx8(p.first), idx8(p.second), idx8(q.first), idx8(q.second)}, sign};
}

std::string to_string(const BasisSymbol& s) {
  auto pair = [](int x, int y) { return "[" + std::to_string(x) + "," + std::to_string(y) + "]"; };
  switch (s.kind) {
    case SymbolKind::One:
      return "1";
    case SymbolKind::E:
      return "e" + pair(s.a, s.b);
    case SymbolKind::Wedge:
      return "e" + pair(s.a, s.b) + "^e" + pair(s.c, s.d);
    case SymbolKind::Curly:
      return "e" + pair(s.a, s.b) + "v" + pair(s.c, s.d);
  }
  return {};
}

FreeModElt FreeModElt::basis(int n, const BasisSymbol& s, const Poly& coeff) {
  FreeModElt m(n);
  m.add(s, coeff);
  return m;
}

FreeModElt FreeModElt::e(int n, int i, int j, const Poly& coeff) { return basis(n, BasisSymbol::e(i, j), coeff); }

FreeModElt FreeModElt::wedge(int n, int i, int j, int k, int l, const Poly& coeff) {
  auto [sym, sign] = canonical_pair(SymbolKind::Wedge, i, j, k, l);
  FreeModElt m(n);
  if (sign != 0) m.add(sym, coeff * Rational(sign));
  return m;
}

FreeModElt FreeModElt::curly(int n, int i, int j, int k, int l, const Poly& coeff) {
  auto [sym, sign] = canonical_pair(SymbolKind::Curly, i, j, k, l);
  FreeModElt m(n);
  if (sign != 0) m.add(sym, coeff * Rational(sign));
  return m;
}

Poly FreeModElt::coefficient(const BasisSymbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Poly(n_) : it->second;
}

FreeModElt& FreeModElt::add(const BasisSymbol& s, const Poly& coeff) {
  if (coeff.is_zero()) return *this;
  auto [it, fresh] = terms_.try_emplace(s, coeff.rebased(n_));
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

FreeModElt& FreeModElt::operator+=(const FreeModElt& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

FreeModElt& FreeModElt::operator-=(const FreeModElt& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

FreeModElt FreeModElt::operator-() const {
  FreeModElt out(n_);
  for (const auto& [s, c] : terms_) out.terms_.emplace(s, -c);
  return out;
}

FreeModElt operator*(const Poly& p, const FreeModElt& m) {
  FreeModElt out(m.n_ != 0 ? m.n_ : p.n());
  for (const auto& [s, c] : m.terms_) out.add(s, p * c);
  return out;
}

std::string FreeModElt::to_string(bool cas) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [sym, coeff] : terms_) {
    for (const auto& t : coeff.terms()) {
      if (!out.empty()) out += " + ";
      out += "(" + hilbworst::to_string(t.coeff) + ") * ";
      std::string mono = Poly::from_terms(coeff.n(), {{t.mono, Rational(1)}}).to_string(cas);
      if (mono != "1") out += mono + " * ";
      out += hilbworst::to_string(sym);
    }
  }
  return out;
}

}  // namespace hilbworst
