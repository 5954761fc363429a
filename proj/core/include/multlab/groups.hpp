#pragma once

// Finite groups given by multiplication tables, dual groups of abelian
// groups, and right actions on finite sets. Haar measure is counting
// measure and the modular function is identically 1 throughout.

#include "multlab/numerics.hpp"

#include <string>
#include <vector>

namespace multlab::groups {

struct GroupStructure {
  enum class Kind { Cyclic, Product, Dihedral, Symmetric, Table };
  Kind kind = Kind::Table;
  int n = 0;
  std::vector<GroupStructure> factors;

  bool operator==(const GroupStructure&) const = default;
};

class FiniteGroup {
 public:
  // Validates the group axioms exhaustively; throws NotAGroup with a witness.
  FiniteGroup(std::vector<int> mul, GroupStructure structure, std::vector<std::string> labels = {});

  int order() const noexcept { return order_; }
  int identity() const noexcept { return identity_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  // a * b^{-1}
  int div(int a, int b) const { return mul(a, inv(b)); }

  const std::vector<int>& table() const noexcept { return mul_; }
  const GroupStructure& structure() const noexcept { return structure_; }
  const std::string& label(int a) const { return labels_[a]; }

  bool is_abelian() const;
  int element_order(int a) const;
  int exponent() const;
  bool is_subgroup(const std::vector<int>& elements) const;

  // Equal multiplication tables.
  bool operator==(const FiniteGroup& other) const { return mul_ == other.mul_; }

 private:
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  GroupStructure structure_;
  std::vector<std::string> labels_;
};

FiniteGroup cyclic(int n);
// Elements ordered lexicographically, first factor most significant.
FiniteGroup direct_product(const std::vector<FiniteGroup>& factors);
// Order 2n; element k + n*f is r^k s^f.
FiniteGroup dihedral(int n);
// Permutations of {0..n-1} in lexicographic order, (p q)(i) = p(q(i)); n <= 4.
FiniteGroup symmetric(int n);
// Row-major n x n table; the identity is located automatically.
FiniteGroup from_table(const std::vector<std::vector<int>>& mul);

class DualGroup {
 public:
  const FiniteGroup& base() const noexcept { return base_; }
  // The dual as an abstract group; index k multiplies like characters k.
  const FiniteGroup& group() const noexcept { return group_; }
  int size() const noexcept { return static_cast<int>(characters_.size()); }
  Complex operator()(int character, int element) const { return characters_[character](element); }
  const Vector& character(int k) const { return characters_[k]; }
  int trivial() const noexcept { return group_.identity(); }

 private:
  friend DualGroup dual_abelian(const FiniteGroup& g);
  DualGroup(FiniteGroup base, FiniteGroup group, std::vector<Vector> characters)
      : base_(std::move(base)), group_(std::move(group)), characters_(std::move(characters)) {}

  FiniteGroup base_;
  FiniteGroup group_;
  std::vector<Vector> characters_;
};

// Requires a structure tree of Cyclic and Product nodes; throws NotAbelian
// or UnsupportedStructure.
DualGroup dual_abelian(const FiniteGroup& g);

// u_hat(chi) = (1/|H|) sum_s u(s) conj(chi(s)).
Vector fourier_coefficients(const DualGroup& dual, const Vector& u);
// u(s) = sum_chi u_hat(chi) chi(s).
Vector inverse_fourier(const DualGroup& dual, const Vector& coefficients);

// Right action z.t of a group on {0..space_size-1}.
class GroupAction {
 public:
  // act[z][t]; throws NotAnAction with witness when z.e != z or (z.s).t != z.(st).
  GroupAction(FiniteGroup group, int space_size, std::vector<int> act);

  const FiniteGroup& group() const noexcept { return group_; }
  int space_size() const noexcept { return space_; }
  int act(int z, int t) const { return act_[static_cast<std::size_t>(z) * group_.order() + t]; }
  const std::vector<int>& table() const noexcept { return act_; }
  // Z = G with z.t = zt.
  bool is_translation() const;

  bool operator==(const GroupAction& other) const {
    return group_ == other.group_ && space_ == other.space_ && act_ == other.act_;
  }

 private:
  FiniteGroup group_;
  int space_ = 0;
  std::vector<int> act_;
};

GroupAction action_from_translation(const FiniteGroup& g);
GroupAction trivial_action(const FiniteGroup& g, int space_size);
GroupAction action_from_table(const FiniteGroup& g, const std::vector<std::vector<int>>& act);

}  // namespace multlab::groups
