#include "multlab/idempotent.hpp"

#include "multlab/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace multlab::idempotent {

Pattern::Pattern(int x_size, int y_size) : x_(x_size), y_(y_size) {
  if (x_size < 1 || y_size < 1) throw Error(ErrorCode::InvalidInput, "pattern dimensions must be positive");
  bits_.assign(static_cast<std::size_t>(x_) * y_, false);
}

Pattern Pattern::from_members(int x_size, int y_size, const std::vector<std::pair<int, int>>& members) {
  Pattern p(x_size, y_size);
  for (const auto& [x, y] : members) p.set(x, y);
  return p;
}

Pattern Pattern::from_multiplier(const schur::ScalarMultiplier& phi, double tol) {
  Pattern p(phi.x_size(), phi.y_size());
  for (int x = 0; x < phi.x_size(); ++x)
    for (int y = 0; y < phi.y_size(); ++y) {
      const Complex v = phi(x, y);
      if (std::abs(v * v - v) > tol) {
        throw Error(ErrorCode::NotIdempotent, "multiplier is not 0/1-valued", {x, y});
      }
      p.set(x, y, std::abs(v) > 0.5);
    }
  return p;
}

void Pattern::set(int x, int y, bool value) {
  if (x < 0 || x >= x_ || y < 0 || y >= y_) throw Error(ErrorCode::InvalidInput, "pattern member out of range", {x, y});
  bits_[static_cast<std::size_t>(x) * y_ + y] = value;
}

std::vector<std::pair<int, int>> Pattern::members() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < x_; ++x)
    for (int y = 0; y < y_; ++y)
      if (contains(x, y)) out.emplace_back(x, y);
  return out;
}

schur::ScalarMultiplier Pattern::indicator() const {
  Matrix m = Matrix::Zero(x_, y_);
  for (int x = 0; x < x_; ++x)
    for (int y = 0; y < y_; ++y)
      if (contains(x, y)) m(x, y) = 1.0;
  return schur::ScalarMultiplier(std::move(m));
}

ThreeOfFour three_of_four(const Pattern& e) {
  for (int x1 = 0; x1 < e.x_size(); ++x1)
    for (int x2 = x1 + 1; x2 < e.x_size(); ++x2)
      for (int y1 = 0; y1 < e.y_size(); ++y1)
        for (int y2 = y1 + 1; y2 < e.y_size(); ++y2) {
          const int count = e.contains(x1, y1) + e.contains(x1, y2) + e.contains(x2, y1) + e.contains(x2, y2);
          if (count == 3) return {false, Quadruple{{{x1, y1}, {x1, y2}, {x2, y1}, {x2, y2}}}};
        }
  return {};
}

std::vector<Rectangle> rectangle_decomposition(const Pattern& e) {
  const int m = e.x_size(), n = e.y_size();
  std::vector<int> parent(m + n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::vector<bool> row_used(m, false), col_used(n, false);
  for (const auto& [x, y] : e.members()) {
    row_used[x] = col_used[y] = true;
    const int a = find(x), b = find(m + y);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<Rectangle> out;
  std::vector<int> slot(m + n, -1);
  for (int x = 0; x < m; ++x) {
    if (!row_used[x]) continue;
    const int root = find(x);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[root]].rows.push_back(x);
  }
  for (int y = 0; y < n; ++y)
    if (col_used[y]) out[slot[find(m + y)]].cols.push_back(y);

  for (const Rectangle& r : out)
    for (int x : r.rows)
      for (int y : r.cols)
        if (!e.contains(x, y)) {
          const ThreeOfFour t = three_of_four(e);
          std::vector<std::int64_t> w;
          if (t.witness)
            for (const auto& [a, b] : *t.witness) w.insert(w.end(), {a, b});
          throw Error(ErrorCode::Not3of4, "pattern lacks the 3-of-4 property", std::move(w));
        }
  return out;
}

bool positive_pattern(const Pattern& e) {
  if (e.x_size() != e.y_size()) return false;
  if (!three_of_four(e).holds) return false;
  for (const Rectangle& r : rectangle_decomposition(e))
    if (r.rows != r.cols) return false;
  return true;
}

Arrow compose(const GroupAction& action, Arrow p, Arrow q) {
  if (q.z != action.act(p.z, p.t)) {
    throw Error(ErrorCode::NotComposable, "arrows are not composable", {p.z, p.t, q.z, q.t});
  }
  return {p.z, action.group().mul(p.t, q.t)};
}

Arrow inverse(const GroupAction& action, Arrow p) { return {action.act(p.z, p.t), action.group().inv(p.t)}; }
Arrow domain(const GroupAction& action, Arrow p) { return {action.act(p.z, p.t), action.group().identity()}; }
Arrow range(const GroupAction& action, Arrow p) { return {p.z, action.group().identity()}; }

GroupoidSubset::GroupoidSubset(GroupAction action) : action_(std::move(action)) {
  bits_.assign(static_cast<std::size_t>(action_.space_size()) * action_.group().order(), false);
}

GroupoidSubset::GroupoidSubset(GroupAction action, const std::vector<Arrow>& members)
    : GroupoidSubset(std::move(action)) {
  for (const Arrow& a : members) set(a.z, a.t);
}

void GroupoidSubset::set(int z, int t, bool value) {
  if (z < 0 || z >= action_.space_size() || t < 0 || t >= action_.group().order()) {
    throw Error(ErrorCode::InvalidInput, "groupoid arrow out of range", {z, t});
  }
  bits_[static_cast<std::size_t>(z) * action_.group().order() + t] = value;
}

std::vector<Arrow> GroupoidSubset::members() const {
  std::vector<Arrow> out;
  for (int z = 0; z < action_.space_size(); ++z)
    for (int t = 0; t < action_.group().order(); ++t)
      if (contains(z, t)) out.push_back({z, t});
  return out;
}

herz_schur::CentralHSMultiplier GroupoidSubset::indicator() const {
  Matrix f = Matrix::Zero(action_.group().order(), action_.space_size());
  for (const Arrow& a : members()) f(a.t, a.z) = 1.0;
  return herz_schur::CentralHSMultiplier(action_, std::move(f));
}

GroupoidCheck groupoid_idempotent_check(const GroupoidSubset& v) {
  const GroupAction& act = v.action();
  const FiniteGroup& g = act.group();
  for (int x = 0; x < act.space_size(); ++x)
    for (int r = 0; r < g.order(); ++r) {
      const int xr = act.act(x, r);
      const int ri = g.inv(r);
      for (int s = 0; s < g.order(); ++s) {
        if (!v.contains(x, s) || !v.contains(xr, g.mul(ri, s))) continue;
        for (int t = 0; t < g.order(); ++t)
          if (v.contains(x, t) && !v.contains(xr, g.mul(ri, t))) return {false, std::array<int, 4>{x, r, s, t}};
      }
    }
  return {};
}

bool subgroupoid_check(const GroupoidSubset& v) {
  const GroupAction& act = v.action();
  const std::vector<Arrow> arrows = v.members();
  for (const Arrow& p : arrows) {
    if (!v.contains(inverse(act, p))) return false;
    for (const Arrow& q : arrows)
      if (q.z == act.act(p.z, p.t) && !v.contains(compose(act, p, q))) return false;
  }
  return true;
}

CosetResult coset_check(const FiniteGroup& h, const std::vector<int>& w) {
  if (w.empty()) throw Error(ErrorCode::EmptySet, "coset test needs a nonempty set");
  std::vector<bool> in(h.order(), false);
  for (int a : w) {
    if (a < 0 || a >= h.order()) throw Error(ErrorCode::InvalidInput, "element out of range", {a});
    in[a] = true;
  }
  const std::set<int> elems(w.begin(), w.end());
  CosetResult out;
  out.representative = *elems.begin();
  for (int x : elems)
    for (int y : elems)
      for (int z : elems)
        if (!in[h.mul(h.div(x, y), z)]) return out;
  out.coset = true;
  const int inv0 = h.inv(out.representative);
  for (int a : elems) out.subgroup.push_back(h.mul(inv0, a));
  std::sort(out.subgroup.begin(), out.subgroup.end());
  return out;
}

}  // namespace multlab::idempotent
