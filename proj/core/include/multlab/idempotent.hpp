#pragma once

// Combinatorics of idempotent multipliers: 3-of-4 patterns, rectangle
// decompositions, transformation-groupoid subsets and cosets.

#include "multlab/groups.hpp"
#include "multlab/herz_schur.hpp"
#include "multlab/schur.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace multlab::idempotent {

using groups::FiniteGroup;
using groups::GroupAction;

class Pattern {
 public:
  Pattern(int x_size, int y_size);
  static Pattern from_members(int x_size, int y_size, const std::vector<std::pair<int, int>>& members);
  // phi must be 0/1-valued (phi^2 = phi within tol); NotIdempotent otherwise.
  static Pattern from_multiplier(const schur::ScalarMultiplier& phi, double tol = 1e-10);

  int x_size() const noexcept { return x_; }
  int y_size() const noexcept { return y_; }
  bool contains(int x, int y) const { return bits_[static_cast<std::size_t>(x) * y_ + y]; }
  void set(int x, int y, bool value = true);
  std::vector<std::pair<int, int>> members() const;
  schur::ScalarMultiplier indicator() const;

 private:
  int x_ = 0;
  int y_ = 0;
  std::vector<bool> bits_;
};

using Quadruple = std::array<std::pair<int, int>, 4>;  // (x1,y1),(x1,y2),(x2,y1),(x2,y2)

struct ThreeOfFour {
  bool holds = true;
  std::optional<Quadruple> witness;
};

ThreeOfFour three_of_four(const Pattern& e);

struct Rectangle {
  std::vector<int> rows;
  std::vector<int> cols;
};

// Connected components of the bipartite incidence graph, ordered by their
// smallest row. Throws Not3of4 (witness flattened x1,y1,x1,y2,...) when a
// component is not a full rectangle.
std::vector<Rectangle> rectangle_decomposition(const Pattern& e);

// Square pattern that is a disjoint union of squares I x I.
bool positive_pattern(const Pattern& e);

// Arrows (z, t) of the transformation groupoid Z x G.
struct Arrow {
  int z = 0;
  int t = 0;
  bool operator==(const Arrow&) const = default;
};

// (z,t)(z.t, s) = (z, ts); NotComposable unless q.z = p.z . p.t.
Arrow compose(const GroupAction& action, Arrow p, Arrow q);
Arrow inverse(const GroupAction& action, Arrow p);
Arrow domain(const GroupAction& action, Arrow p);
Arrow range(const GroupAction& action, Arrow p);

class GroupoidSubset {
 public:
  explicit GroupoidSubset(GroupAction action);
  GroupoidSubset(GroupAction action, const std::vector<Arrow>& members);

  const GroupAction& action() const noexcept { return action_; }
  bool contains(int z, int t) const { return bits_[static_cast<std::size_t>(z) * action_.group().order() + t]; }
  bool contains(Arrow a) const { return contains(a.z, a.t); }
  void set(int z, int t, bool value = true);
  std::vector<Arrow> members() const;

  // F(r, z) = 1 if (z, r) in V.
  herz_schur::CentralHSMultiplier indicator() const;

 private:
  GroupAction action_;
  std::vector<bool> bits_;
};

struct GroupoidCheck {
  bool holds = true;
  std::optional<std::array<int, 4>> witness;  // (x, r, s, t)
};

// (x,t), (x,s), (xr, r^-1 s) in V  implies  (xr, r^-1 t) in V.
GroupoidCheck groupoid_idempotent_check(const GroupoidSubset& v);

// Closed under inverses and composable products.
bool subgroupoid_check(const GroupoidSubset& v);

struct CosetResult {
  bool coset = false;
  std::vector<int> subgroup;  // K = w0^-1 W, ascending
  int representative = -1;    // w0, the smallest element of W
};

// W is a coset iff x y^-1 z in W for all x, y, z in W. EmptySet on empty W.
CosetResult coset_check(const FiniteGroup& h, const std::vector<int>& w);

}  // namespace multlab::idempotent
