#include "multlab/groups.hpp"

#include "multlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace multlab::groups {

namespace {

[[noreturn]] void not_a_group(const std::string& msg, std::vector<std::int64_t> witness) {
  throw Error(ErrorCode::NotAGroup, msg, std::move(witness));
}

// exp(2 pi i k / n), exact at quarter turns.
Complex root_of_unity(long k, long n) {
  k = ((k % n) + n) % n;
  if ((4 * k) % n == 0) {
    switch ((4 * k) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return std::polar(1.0, angle);
}

bool structurally_abelian(const GroupStructure& s) {
  switch (s.kind) {
    case GroupStructure::Kind::Cyclic: return true;
    case GroupStructure::Kind::Product:
      return std::all_of(s.factors.begin(), s.factors.end(), structurally_abelian);
    default: return false;
  }
}

// Characters of a structurally built abelian group, lexicographic index order.
std::vector<Vector> characters_of(const GroupStructure& s) {
  if (s.kind == GroupStructure::Kind::Cyclic) {
    std::vector<Vector> chars;
    for (int k = 0; k < s.n; ++k) {
      Vector c(s.n);
      for (int j = 0; j < s.n; ++j) c(j) = root_of_unity(static_cast<long>(k) * j, s.n);
      chars.push_back(std::move(c));
    }
    return chars;
  }
  std::vector<Vector> acc{Vector::Ones(1)};
  for (const GroupStructure& f : s.factors) {
    const std::vector<Vector> fc = characters_of(f);
    std::vector<Vector> next;
    for (const Vector& a : acc) {
      for (const Vector& b : fc) {
        Vector c(a.size() * b.size());
        for (Eigen::Index i = 0; i < a.size(); ++i)
          for (Eigen::Index j = 0; j < b.size(); ++j) c(i * b.size() + j) = a(i) * b(j);
        next.push_back(std::move(c));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<int> table, GroupStructure structure, std::vector<std::string> labels)
    : mul_(std::move(table)), structure_(std::move(structure)), labels_(std::move(labels)) {
  const auto n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(mul_.size()))));
  if (n <= 0 || static_cast<std::size_t>(n) * n != mul_.size()) {
    not_a_group("multiplication table must be square and nonempty", {});
  }
  order_ = n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int c = mul(a, b);
      if (c < 0 || c >= n) not_a_group("table entry out of range", {a, b});
    }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) not_a_group("no identity element", {});
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0) not_a_group("element without inverse", {a});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) not_a_group("multiplication is not associative", {a, b, c});
  if (labels_.size() != static_cast<std::size_t>(n)) {
    labels_.clear();
    for (int a = 0; a < n; ++a) labels_.push_back(std::to_string(a));
  }
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int a = 0; a < order_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elements) const {
  if (elements.empty()) return false;
  std::vector<bool> in(order_, false);
  for (int a : elements) {
    if (a < 0 || a >= order_) return false;
    in[a] = true;
  }
  for (int a = 0; a < order_; ++a) {
    if (!in[a]) continue;
    for (int b = 0; b < order_; ++b)
      if (in[b] && !in[div(a, b)]) return false;
  }
  return true;
}

FiniteGroup cyclic(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "cyclic group order must be >= 1");
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return FiniteGroup(std::move(mul), {GroupStructure::Kind::Cyclic, n, {}});
}

FiniteGroup direct_product(const std::vector<FiniteGroup>& factors) {
  if (factors.empty()) throw Error(ErrorCode::InvalidInput, "direct product of no factors");
  int order = 1;
  for (const FiniteGroup& f : factors) order *= f.order();
  const auto digits = [&](int a) {
    std::vector<int> d(factors.size());
    for (std::size_t k = factors.size(); k-- > 0;) {
      d[k] = a % factors[k].order();
      a /= factors[k].order();
    }
    return d;
  };
  const auto index = [&](const std::vector<int>& d) {
    int a = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) a = a * factors[k].order() + d[k];
    return a;
  };
  std::vector<int> mul(static_cast<std::size_t>(order) * order);
  std::vector<std::string> labels;
  for (int a = 0; a < order; ++a) {
    const std::vector<int> da = digits(a);
    std::string lab = "(";
    for (std::size_t k = 0; k < da.size(); ++k) lab += (k ? "," : "") + factors[k].label(da[k]);
    labels.push_back(lab + ")");
    for (int b = 0; b < order; ++b) {
      const std::vector<int> db = digits(b);
      std::vector<int> dc(factors.size());
      for (std::size_t k = 0; k < factors.size(); ++k) dc[k] = factors[k].mul(da[k], db[k]);
      mul[static_cast<std::size_t>(a) * order + b] = index(dc);
    }
  }
  GroupStructure s{GroupStructure::Kind::Product, static_cast<int>(factors.size()), {}};
  for (const FiniteGroup& f : factors) s.factors.push_back(f.structure());
  return FiniteGroup(std::move(mul), std::move(s), std::move(labels));
}

FiniteGroup dihedral(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "dihedral parameter must be >= 1");
  const int order = 2 * n;
  std::vector<int> mul(static_cast<std::size_t>(order) * order);
  std::vector<std::string> labels;
  for (int a = 0; a < order; ++a) {
    const int ka = a % n, fa = a / n;
    labels.push_back("r" + std::to_string(ka) + (fa ? "s" : ""));
    for (int b = 0; b < order; ++b) {
      const int kb = b % n, fb = b / n;
      // r^ka s^fa r^kb s^fb = r^(ka + (-1)^fa kb) s^(fa + fb)
      const int k = ((ka + (fa ? -kb : kb)) % n + n) % n;
      mul[static_cast<std::size_t>(a) * order + b] = k + n * ((fa + fb) % 2);
    }
  }
  return FiniteGroup(std::move(mul), {GroupStructure::Kind::Dihedral, n, {}}, std::move(labels));
}

FiniteGroup symmetric(int n) {
  if (n < 1 || n > 4) throw Error(ErrorCode::InvalidInput, "symmetric group supported for 1 <= n <= 4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  std::vector<int> mul(static_cast<std::size_t>(order) * order);
  std::vector<std::string> labels;
  for (int a = 0; a < order; ++a) {
    std::string lab = "[";
    for (int i = 0; i < n; ++i) lab += (i ? " " : "") + std::to_string(perms[a][i]);
    labels.push_back(lab + "]");
    for (int b = 0; b < order; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      const auto it = std::lower_bound(perms.begin(), perms.end(), c);
      mul[static_cast<std::size_t>(a) * order + b] = static_cast<int>(it - perms.begin());
    }
  }
  return FiniteGroup(std::move(mul), {GroupStructure::Kind::Symmetric, n, {}}, std::move(labels));
}

FiniteGroup from_table(const std::vector<std::vector<int>>& mul) {
  const std::size_t n = mul.size();
  std::vector<int> flat;
  for (const auto& row : mul) {
    if (row.size() != n) not_a_group("multiplication table must be square", {});
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FiniteGroup(std::move(flat), {GroupStructure::Kind::Table, static_cast<int>(n), {}});
}

DualGroup dual_abelian(const FiniteGroup& g) {
  if (!g.is_abelian()) throw Error(ErrorCode::NotAbelian, "dual group requires an abelian group");
  if (!structurally_abelian(g.structure())) {
    throw Error(ErrorCode::UnsupportedStructure,
                "dual group requires a group built from cyclic groups and direct products");
  }
  std::vector<Vector> chars = characters_of(g.structure());
  std::vector<std::string> labels;
  for (int k = 0; k < g.order(); ++k) labels.push_back("chi" + g.label(k));
  FiniteGroup dual_group(g.table(), g.structure(), std::move(labels));
  return DualGroup(g, std::move(dual_group), std::move(chars));
}

Vector fourier_coefficients(const DualGroup& dual, const Vector& u) {
  const int n = dual.base().order();
  if (u.size() != n) throw Error(ErrorCode::DimensionMismatch, "function length differs from group order");
  Vector out(dual.size());
  for (int k = 0; k < dual.size(); ++k) out(k) = dual.character(k).dot(u) / static_cast<double>(n);
  return out;
}

Vector inverse_fourier(const DualGroup& dual, const Vector& coefficients) {
  const int n = dual.base().order();
  if (coefficients.size() != dual.size()) throw Error(ErrorCode::DimensionMismatch, "coefficient length differs from dual size");
  Vector out = Vector::Zero(n);
  for (int k = 0; k < dual.size(); ++k) out += coefficients(k) * dual.character(k);
  return out;
}

GroupAction::GroupAction(FiniteGroup group, int space_size, std::vector<int> table)
    : group_(std::move(group)), space_(space_size), act_(std::move(table)) {
  const int g = group_.order();
  if (space_ < 1) throw Error(ErrorCode::NotAnAction, "space must be nonempty");
  if (act_.size() != static_cast<std::size_t>(space_) * g) throw Error(ErrorCode::NotAnAction, "action table has wrong size");
  for (int z = 0; z < space_; ++z)
    for (int t = 0; t < g; ++t)
      if (act(z, t) < 0 || act(z, t) >= space_) throw Error(ErrorCode::NotAnAction, "action maps outside the space", {z, t});
  for (int z = 0; z < space_; ++z) {
    if (act(z, group_.identity()) != z) throw Error(ErrorCode::NotAnAction, "identity does not act trivially", {z});
    for (int s = 0; s < g; ++s)
      for (int t = 0; t < g; ++t)
        if (act(act(z, s), t) != act(z, group_.mul(s, t)))
          throw Error(ErrorCode::NotAnAction, "(z.s).t differs from z.(st)", {z, s, t});
  }
}

bool GroupAction::is_translation() const {
  return space_ == group_.order() && act_ == group_.table();
}

GroupAction action_from_translation(const FiniteGroup& g) {
  return GroupAction(g, g.order(), g.table());
}

GroupAction trivial_action(const FiniteGroup& g, int space_size) {
  std::vector<int> act(static_cast<std::size_t>(space_size) * g.order());
  for (int z = 0; z < space_size; ++z)
    for (int t = 0; t < g.order(); ++t) act[static_cast<std::size_t>(z) * g.order() + t] = z;
  return GroupAction(g, space_size, std::move(act));
}

GroupAction action_from_table(const FiniteGroup& g, const std::vector<std::vector<int>>& act) {
  std::vector<int> flat;
  for (const auto& row : act) {
    if (row.size() != static_cast<std::size_t>(g.order())) throw Error(ErrorCode::NotAnAction, "action row length differs from group order");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return GroupAction(g, static_cast<int>(act.size()), std::move(flat));
}

}  // namespace multlab::groups
