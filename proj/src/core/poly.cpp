#include "core/poly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "core/errors.hpp"

namespace hilbworst {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(std::uint32_t var, unsigned power) {
  Monomial m;
  m.factors_.assign(power, var);
  return m;
}

unsigned Monomial::exponent(std::uint32_t var) const {
  return static_cast<unsigned>(std::count(factors_.begin(), factors_.end(), var));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.resize(a.factors_.size() + b.factors_.size());
  std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(), out.factors_.begin(),
             std::greater<>());
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.factors_.size() <=> b.factors_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
                                                b.factors_.end());
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ factors_.size();
  for (auto f : factors_) h = (h ^ f) * 0x100000001b3ull + (h >> 29);
  return h;
}

// ---------------------------------------------------------------- Poly basics

int Poly::combine(int a, int b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  fail(ErrorCode::UniverseMismatch,
       "polynomials over different universes (n=" + std::to_string(a) + " vs n=" + std::to_string(b) + ")");
}

Poly Poly::constant(int n, const Rational& c) {
  Poly p(n);
  if (c != 0) p.terms_.push_back({Monomial(), c});
  return p;
}

Poly Poly::var(int n, const VarId& v) {
  Universe u(n);
  Poly p(n);
  p.terms_.push_back({Monomial::of(u.index(v)), Rational(1)});
  return p;
}

Poly Poly::from_terms(int n, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  Poly p(n);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return t.mono > key;
  });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Rational(0);
}

std::optional<Rational> Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coeff;
  return std::nullopt;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

Poly& Poly::add_scaled(const Poly& o, const Rational& c) {
  n_ = combine(n_, o.n_);
  if (o.terms_.empty() || c == 0) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->mono > b->mono)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mono > a->mono) {
      merged.push_back({b->mono, b->coeff * c});
      ++b;
    } else {
      Rational sum = a->coeff + b->coeff * c;
      if (sum != 0) merged.push_back({std::move(a->mono), std::move(sum)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  int n = Poly::combine(a.n_, b.n_);
  if (a.terms_.empty() || b.terms_.empty()) return Poly(n);
  if (b.terms_.size() == 1 && b.terms_[0].mono.is_one()) return Poly(a).rebased(n) * b.terms_[0].coeff;
  if (a.terms_.size() == 1 && a.terms_[0].mono.is_one()) return Poly(b).rebased(n) * a.terms_[0].coeff;
  std::vector<Poly::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prods.push_back({x.mono * y.mono, x.coeff * y.coeff});
  return Poly::from_terms(n, std::move(prods));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_ != b.terms_) return false;
  if (a.n_ == b.n_ || a.n_ == 0 || b.n_ == 0) return true;
  return a.is_constant();
}

std::vector<VarId> Poly::variables() const {
  std::vector<std::uint32_t> idx;
  for (const auto& t : terms_) idx.insert(idx.end(), t.mono.factors().begin(), t.mono.factors().end());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<VarId> out;
  if (idx.empty()) return out;
  Universe u(n_);
  for (auto i : idx) out.push_back(u.var(i));
  return out;
}

Poly Poly::rebased(int n) const {
  if (n == n_ || n == 0) return *this;
  if (is_constant()) {
    Poly p = *this;
    p.n_ = n;
    return p;
  }
  if (n_ == 0) {
    Poly p = *this;
    p.n_ = n;
    return p;
  }
  Universe from(n_), to(n);
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    t.mono.for_each_power([&](std::uint32_t v, unsigned e) { m = m * Monomial::of(to.index(from.var(v)), e); });
    terms.push_back({std::move(m), t.coeff});
  }
  return from_terms(n, std::move(terms));
}

std::string Poly::to_string(bool cas) const {
  if (terms_.empty()) return "0";
  std::string out;
  std::optional<Universe> u;
  if (n_ > 0) u.emplace(n_);
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coeff < 0;
    Rational mag = negative ? Rational(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string factors;
    t.mono.for_each_power([&](std::uint32_t v, unsigned e) {
      if (!factors.empty()) factors += "*";
      factors += hilbworst::to_string(u->var(v), cas);
      if (e > 1) factors += "^" + std::to_string(e);
    });
    if (factors.empty()) {
      out += hilbworst::to_string(mag);
    } else if (mag == 1) {
      out += factors;
    } else {
      out += hilbworst::to_string(mag) + "*" + factors;
    }
  }
  return out;
}

// ---------------------------------------------------------------- evaluation

Poly substitute(const Poly& p, const std::function<std::optional<Poly>(const VarId&)>& image, int target_n) {
  if (target_n == 0) target_n = p.n();
  if (p.n() == 0) return p.rebased(target_n);
  Universe u(p.n());
  std::unordered_map<std::uint32_t, std::optional<Poly>> cache;
  auto image_of = [&](std::uint32_t v) -> const std::optional<Poly>& {
    auto it = cache.find(v);
    if (it == cache.end()) {
      auto img = image(u.var(v));
      if (img) *img = img->rebased(target_n);
      it = cache.emplace(v, std::move(img)).first;
    }
    return it->second;
  };
  std::optional<Universe> tu;
  if (target_n > 0) tu.emplace(target_n);
  Poly out(target_n);
  std::vector<Poly::Term> kept;
  for (const auto& t : p.terms()) {
    Monomial plain;
    Poly factor = Poly::constant(target_n, t.coeff);
    bool substituted = false;
    t.mono.for_each_power([&](std::uint32_t v, unsigned e) {
      const auto& img = image_of(v);
      if (img) {
        for (unsigned r = 0; r < e; ++r) factor = factor * *img;
        substituted = true;
      } else {
        plain = plain * Monomial::of(tu->index(u.var(v)), e);
      }
    });
    if (!substituted) {
      kept.push_back({std::move(plain), t.coeff});
    } else if (!factor.is_zero()) {
      Poly mono(target_n);
      mono = Poly::from_terms(target_n, {{std::move(plain), Rational(1)}});
      out += factor * mono;
    }
  }
  out += Poly::from_terms(target_n, std::move(kept));
  return out;
}

Poly evaluate(const Poly& p, const Assignment& values) {
  return substitute(p, [&](const VarId& v) -> std::optional<Poly> {
    auto it = values.find(v);
    if (it == values.end()) return std::nullopt;
    return Poly::constant(0, it->second);
  });
}

Rational evaluate_rational(const Poly& p, const Assignment& values) {
  Poly r = evaluate(p, values);
  auto c = r.constant_value();
  if (!c) fail(ErrorCode::InvalidArgument, "evaluation left variables unassigned: " + r.to_string());
  return *c;
}

unsigned kind_degree(const Monomial& m, const Universe& u, VarKind kind) {
  unsigned d = 0;
  for (auto v : m.factors())
    if (u.kind(v) == kind) ++d;
  return d;
}

std::map<int, Poly> homogeneous_components(const Poly& p, Grading grading) {
  std::map<int, std::vector<Poly::Term>> buckets;
  std::optional<Universe> u;
  if (p.n() > 0) u.emplace(p.n());
  for (const auto& t : p.terms()) {
    int d = 0;
    for (auto v : t.mono.factors()) {
      VarKind k = u->kind(v);
      if ((grading == Grading::TDegree && k == VarKind::T) || (grading == Grading::XDegree && k == VarKind::X) ||
          (grading == Grading::Internal && k != VarKind::S))
        ++d;
    }
    buckets[d].push_back(t);
  }
  std::map<int, Poly> out;
  for (auto& [d, terms] : buckets) out.emplace(d, Poly::from_terms(p.n(), std::move(terms)));
  return out;
}

std::optional<Weight> weight_of(const Poly& p) {
  if (p.is_zero()) return std::nullopt;
  std::optional<Weight> common;
  std::optional<Universe> u;
  if (p.n() > 0) u.emplace(p.n());
  for (const auto& t : p.terms()) {
    Weight w(static_cast<std::size_t>(std::max(p.n(), 0)), 0);
    t.mono.for_each_power([&](std::uint32_t v, unsigned e) { add_weight(w, u->var(v), p.n(), static_cast<int>(e)); });
    if (!common) {
      common = std::move(w);
    } else if (*common != w) {
      return std::nullopt;
    }
  }
  return common;
}

// ---------------------------------------------------------------- parsing

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int n) : s_(text), n_(n) {}

  Poly parse() {
    Poly result(n_);
    skip();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip();
    }
    result += negative ? -term() : term();
    skip();
    while (pos_ < s_.size()) {
      char op = get();
      if (op != '+' && op != '-') error("expected '+' or '-'");
      skip();
      Poly t = term();
      result += op == '-' ? -t : t;
      skip();
    }
    return result;
  }

 private:
  Poly term() {
    Poly acc = Poly::constant(n_, Rational(1));
    acc = acc * factor();
    skip();
    while (peek() == '*') {
      get();
      skip();
      acc = acc * factor();
      skip();
    }
    return acc;
  }

  Poly factor() {
    skip();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) get();
      if (peek() == '/') {
        get();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected denominator");
        while (std::isdigit(static_cast<unsigned char>(peek()))) get();
      }
      return Poly::constant(n_, parse_rational(s_.substr(start, pos_ - start)));
    }
    if (c == '(') {
      get();
      Poly inner = PolyParser(read_balanced(), n_).parse();
      return power(inner);
    }
    if (c != 'x' && c != 't' && c != 's') error("expected a variable or coefficient");
    get();
    std::vector<int> idx;
    if (peek() == '(') {
      get();
      idx.push_back(number());
      while (peek() == ',') {
        get();
        idx.push_back(number());
      }
      if (get() != ')') error("expected ')'");
    } else if (peek() == '_') {
      while (peek() == '_') {
        get();
        idx.push_back(number());
      }
    } else {
      error("expected variable indices");
    }
    VarId v;
    if (c == 'x' && idx.size() == 1) {
      v = VarId::x(idx[0]);
    } else if (c == 't' && idx.size() == 3) {
      v = VarId::t(idx[0], idx[1], idx[2]);
    } else if (c == 's' && idx.size() == 3) {
      v = VarId::s(idx[0], idx[1], idx[2]);
    } else {
      error("wrong number of indices for variable");
    }
    return power(Poly::var(n_, v));
  }

  Poly power(const Poly& base) {
    skip();
    if (peek() != '^') return base;
    get();
    skip();
    int e = number();
    Poly out = Poly::constant(n_, Rational(1));
    for (int r = 0; r < e; ++r) out = out * base;
    return out;
  }

  std::string_view read_balanced() {
    std::size_t start = pos_;
    int depth = 1;
    while (pos_ < s_.size() && depth > 0) {
      char c = get();
      if (c == '(') ++depth;
      if (c == ')') --depth;
    }
    if (depth != 0) error("unbalanced parentheses");
    return s_.substr(start, pos_ - start - 1);
  }

  int number() {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected integer");
    int v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > 1000000) error("integer too large");
    }
    skip();
    return v;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, int n) {
  Universe check(n);
  (void)check;
  return PolyParser(text, n).parse();
}

}  // namespace hilbworst
