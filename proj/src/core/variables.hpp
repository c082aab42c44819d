#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hilbworst {

enum class VarKind : std::uint8_t { X, T, S };

/// A variable of the ambient ring: x(i), t(i,j,k) (stored with i <= j) or s(i,j,k).
struct VarId {
  VarKind kind = VarKind::X;
  std::uint8_t i = 0, j = 0, k = 0;

  static VarId x(int i);
  /// t(i,j,k) == t(j,i,k); the pair is stored sorted.
  static VarId t(int i, int j, int k);
  static VarId s(int i, int j, int k);

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// Render as "x(1)", "t(1,2,3)", "s(0,1,1)"; `cas` selects "x_1", "t_1_2_3".
std::string to_string(const VarId& v, bool cas = false);

/// Torus weight in Z^n: x_i -> e_i, t(i,j,k) -> e_k - e_i - e_j, s(i,j,k) -> e_k - e_i - e_j with e_0 = 0.
using Weight = std::vector<int>;

/// Dense indexing of the variable universe for a fixed ambient n, in the global order
/// x(1) < ... < x(n) < t(1,1,1) < t(1,1,2) < ... < t(n,n,n) < s(0,0,0) < ... < s(n,n,n).
class Universe {
 public:
  explicit Universe(int n);

  int n() const { return n_; }
  std::uint32_t size() const { return num_x_ + num_t_ + num_s_; }
  std::uint32_t num_t() const { return num_t_; }

  /// Validates indices against n; throws Error(IndexOutOfRange).
  std::uint32_t index(const VarId& v) const;
  VarId var(std::uint32_t index) const;
  VarKind kind(std::uint32_t index) const {
    return index < num_x_ ? VarKind::X : (index < num_x_ + num_t_ ? VarKind::T : VarKind::S);
  }
  bool contains(const VarId& v) const;

  /// All t-variables, in index order.
  std::vector<VarId> t_variables() const;

 private:
  int n_;
  std::uint32_t num_x_, num_t_, num_s_;
};

void add_weight(Weight& w, const VarId& v, int n, int power = 1);

}  // namespace hilbworst
