#include "core/variables.hpp"

#include <utility>

#include "core/errors.hpp"

namespace hilbworst {

namespace {

std::uint8_t narrow(int v) {
  if (v < 0 || v > 255) fail(ErrorCode::IndexOutOfRange, "variable index " + std::to_string(v) + " out of range");
  return static_cast<std::uint8_t>(v);
}

// Position of the pair (i,j), 1 <= i <= j <= n, in the order (1,1),(1,2),...,(1,n),(2,2),...
std::uint32_t pair_index(int i, int j, int n) {
  // rows before i contribute (n - r + 1) pairs each, r = 1..i-1
  int before = (i - 1) * n - (i - 1) * (i - 2) / 2;
  return static_cast<std::uint32_t>(before + (j - i));
}

}  // namespace

VarId VarId::x(int i) { return VarId{VarKind::X, narrow(i), 0, 0}; }

VarId VarId::t(int i, int j, int k) {
  if (i > j) std::swap(i, j);
  return VarId{VarKind::T, narrow(i), narrow(j), narrow(k)};
}

VarId VarId::s(int i, int j, int k) { return VarId{VarKind::S, narrow(i), narrow(j), narrow(k)}; }

std::string to_string(const VarId& v, bool cas) {
  auto num = [](std::uint8_t a) { return std::to_string(static_cast<int>(a)); };
  switch (v.kind) {
    case VarKind::X:
      return cas ? "x_" + num(v.i) : "x(" + num(v.i) + ")";
    case VarKind::T:
      return cas ? "t_" + num(v.i) + "_" + num(v.j) + "_" + num(v.k)
                 : "t(" + num(v.i) + "," + num(v.j) + "," + num(v.k) + ")";
    case VarKind::S:
      return cas ? "s_" + num(v.i) + "_" + num(v.j) + "_" + num(v.k)
                 : "s(" + num(v.i) + "," + num(v.j) + "," + num(v.k) + ")";
  }
  return {};
}

Universe::Universe(int n) : n_(n) {
  if (n < 1 || n > 40) fail(ErrorCode::InvalidArgument, "ambient n must lie in [1, 40], got " + std::to_string(n));
  num_x_ = static_cast<std::uint32_t>(n);
  num_t_ = static_cast<std::uint32_t>(n * (n * (n + 1) / 2));
  num_s_ = static_cast<std::uint32_t>((n + 1) * (n + 1) * (n + 1));
}

bool Universe::contains(const VarId& v) const {
  switch (v.kind) {
    case VarKind::X:
      return v.i >= 1 && v.i <= n_;
    case VarKind::T:
      return v.i >= 1 && v.i <= v.j && v.j <= n_ && v.k >= 1 && v.k <= n_;
    case VarKind::S:
      return v.i <= n_ && v.j <= n_ && v.k <= n_;
  }
  return false;
}

std::uint32_t Universe::index(const VarId& v) const {
  if (!contains(v))
    fail(ErrorCode::IndexOutOfRange, "variable " + to_string(v) + " outside the universe for n=" + std::to_string(n_));
  switch (v.kind) {
    case VarKind::X:
      return v.i - 1u;
    case VarKind::T:
      return num_x_ + pair_index(v.i, v.j, n_) * static_cast<std::uint32_t>(n_) + (v.k - 1u);
    case VarKind::S: {
      std::uint32_t m = static_cast<std::uint32_t>(n_ + 1);
      return num_x_ + num_t_ + (v.i * m + v.j) * m + v.k;
    }
  }
  return 0;
}

VarId Universe::var(std::uint32_t index) const {
  if (index < num_x_) return VarId::x(static_cast<int>(index) + 1);
  index -= num_x_;
  if (index < num_t_) {
    int k = static_cast<int>(index % n_) + 1;
    int pair = static_cast<int>(index / n_);
    int i = 1;
    while (pair >= n_ - i + 1) {
      pair -= n_ - i + 1;
      ++i;
    }
    return VarId::t(i, i + pair, k);
  }
  index -= num_t_;
  if (index < num_s_) {
    int m = n_ + 1;
    int k = static_cast<int>(index) % m;
    int j = (static_cast<int>(index) / m) % m;
    int i = static_cast<int>(index) / (m * m);
    return VarId::s(i, j, k);
  }
  fail(ErrorCode::IndexOutOfRange, "variable index " + std::to_string(index) + " outside the universe");
}

std::vector<VarId> Universe::t_variables() const {
  std::vector<VarId> out;
  out.reserve(num_t_);
  for (std::uint32_t idx = 0; idx < num_t_; ++idx) out.push_back(var(num_x_ + idx));
  return out;
}

void add_weight(Weight& w, const VarId& v, int n, int power) {
  if (w.empty()) w.assign(static_cast<std::size_t>(n), 0);
  auto bump = [&](int idx, int by) {
    if (idx >= 1) w[static_cast<std::size_t>(idx - 1)] += by * power;
  };
  switch (v.kind) {
    case VarKind::X:
      bump(v.i, 1);
      break;
    case VarKind::T:
    case VarKind::S:
      bump(v.k, 1);
      bump(v.i, -1);
      bump(v.j, -1);
      break;
  }
}

}  // namespace hilbworst
