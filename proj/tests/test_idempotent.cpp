#include "doctest.h"

#include "multlab/error.hpp"
#include "multlab/idempotent.hpp"
#include "multlab/random.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace multlab;
using namespace multlab::idempotent;
using groups::FiniteGroup;
using groups::GroupAction;

namespace {

Pattern from_bits(int bits, int m, int n) {
  Pattern p(m, n);
  for (int i = 0; i < m * n; ++i)
    if (bits >> i & 1) p.set(i / n, i % n);
  return p;
}

std::vector<int> shuffled(CounterRng& rng, int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(v[i], v[rng.below(i + 1)]);
  return v;
}

GroupoidSubset subset_from_bits(const GroupAction& act, int bits) {
  GroupoidSubset v(act);
  const int n = act.group().order();
  for (int i = 0; i < act.space_size() * n; ++i)
    if (bits >> i & 1) v.set(i / n, i % n);
  return v;
}

std::vector<GroupAction> tiny_actions() {
  const FiniteGroup z2 = groups::cyclic(2);
  return {groups::action_from_translation(z2), groups::trivial_action(z2, 2)};
}

}  // namespace

TEST_CASE("3-of-4 property") {
  CHECK(three_of_four(from_bits(0b1111, 2, 2)).holds);
  const ThreeOfFour l = three_of_four(Pattern::from_members(2, 2, {{0, 0}, {0, 1}, {1, 0}}));
  CHECK_FALSE(l.holds);
  REQUIRE(l.witness);
  const Quadruple expected{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
  CHECK(*l.witness == expected);

  Pattern blocks(5, 5);
  for (int x : {0, 1})
    for (int y : {2, 3}) blocks.set(x, y);
  for (int x : {2, 4})
    for (int y : {0, 4}) blocks.set(x, y);
  CHECK(three_of_four(blocks).holds);
  blocks.set(3, 1);
  CHECK(three_of_four(blocks).holds);
  blocks.set(3, 0);
  CHECK_FALSE(three_of_four(blocks).holds);
}

TEST_CASE("3-of-4 matches the Schur norm on all 2x3 and 3x2 patterns") {
  const double triangle = 2.0 / std::sqrt(3.0);
  for (const auto [m, n] : {std::pair{2, 3}, std::pair{3, 2}}) {
    for (int bits = 0; bits < (1 << (m * n)); ++bits) {
      const Pattern e = from_bits(bits, m, n);
      const double norm = schur::norm(e.indicator());
      const bool contractive = norm <= 1.0 + 1e-6;
      CHECK_MESSAGE(three_of_four(e).holds == contractive, "pattern " << bits);
      if (!contractive) CHECK(norm >= triangle - 1e-6);
    }
  }
}

TEST_CASE("rectangle decomposition") {
  const std::vector<Rectangle> one = rectangle_decomposition(from_bits(0b111111, 2, 3));
  REQUIRE(one.size() == 1);
  CHECK(one[0].rows == std::vector<int>{0, 1});
  CHECK(one[0].cols == std::vector<int>{0, 1, 2});

  Pattern id(4, 4);
  for (int i = 0; i < 4; ++i) id.set(i, i);
  const std::vector<Rectangle> singles = rectangle_decomposition(id);
  REQUIRE(singles.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(singles[i].rows == std::vector<int>{i});
    CHECK(singles[i].cols == std::vector<int>{i});
  }

  CounterRng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    // Three rectangles on consecutive ranges, then rows and columns shuffled.
    const int m = 9, n = 8;
    const std::vector<int> rp = shuffled(rng, m), cp = shuffled(rng, n);
    const std::vector<std::pair<int, int>> row_ranges{{0, 2}, {2, 5}, {5, 9}}, col_ranges{{0, 3}, {3, 4}, {4, 8}};
    Pattern e(m, n);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> truth;
    for (int k = 0; k < 3; ++k) {
      std::vector<int> rows, cols;
      for (int x = row_ranges[k].first; x < row_ranges[k].second; ++x) rows.push_back(rp[x]);
      for (int y = col_ranges[k].first; y < col_ranges[k].second; ++y) cols.push_back(cp[y]);
      std::sort(rows.begin(), rows.end());
      std::sort(cols.begin(), cols.end());
      for (int x : rows)
        for (int y : cols) e.set(x, y);
      truth.emplace_back(rows, cols);
    }
    const std::vector<Rectangle> got = rectangle_decomposition(e);
    REQUIRE(got.size() == 3);
    for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1].rows.front() < got[i].rows.front());
    for (const Rectangle& r : got)
      CHECK(std::find(truth.begin(), truth.end(), std::pair{r.rows, r.cols}) != truth.end());
  }

  try {
    rectangle_decomposition(Pattern::from_members(2, 2, {{0, 0}, {0, 1}, {1, 0}}));
    FAIL("expected Not3of4");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Not3of4);
    CHECK(e.witness() == std::vector<std::int64_t>{0, 0, 0, 1, 1, 0, 1, 1});
  }
}

TEST_CASE("positive patterns") {
  Pattern id(3, 3);
  for (int i = 0; i < 3; ++i) id.set(i, i);
  CHECK(positive_pattern(id));
  CHECK_FALSE(positive_pattern(Pattern::from_members(2, 2, {{0, 1}, {1, 0}})));
  CHECK_FALSE(positive_pattern(from_bits(0b111111, 2, 3)));

  CounterRng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 7;
    const std::vector<int> p = shuffled(rng, n);
    Pattern e(n, n);
    // Blocks {p0,p1,p2}, {p3}, {p5,p6}; p4 left out.
    for (const std::vector<int>& block : {std::vector<int>{0, 1, 2}, {3}, {5, 6}})
      for (int a : block)
        for (int b : block) e.set(p[a], p[b]);
    CHECK(positive_pattern(e));
    CHECK(schur::is_positive(e.indicator()));
    CHECK(schur::norm(e.indicator()) <= 1.0 + 1e-6);
  }
}

TEST_CASE("patterns from multipliers") {
  Matrix m(2, 2);
  m << 1, 0, 0, 1;
  const Pattern p = Pattern::from_multiplier(schur::ScalarMultiplier(m));
  CHECK(p.members() == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
  m(0, 1) = 0.5;
  try {
    Pattern::from_multiplier(schur::ScalarMultiplier(m));
    FAIL("expected NotIdempotent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIdempotent);
    CHECK(e.witness() == std::vector<std::int64_t>{0, 1});
  }
  CHECK_THROWS_AS(Pattern(2, 2).set(2, 0), Error);
}

TEST_CASE("transformation groupoid operations") {
  const FiniteGroup s3 = groups::symmetric(3);
  const GroupAction act = groups::action_from_translation(s3);
  const int e = s3.identity();
  for (int z = 0; z < 6; ++z) {
    CHECK(inverse(act, {z, e}) == Arrow{z, e});
    for (int t = 0; t < 6; ++t) {
      const Arrow p{z, t};
      CHECK(domain(act, p) == Arrow{act.act(z, t), e});
      CHECK(range(act, p) == Arrow{z, e});
      CHECK(compose(act, p, inverse(act, p)) == Arrow{z, e});
      CHECK(compose(act, inverse(act, p), p) == domain(act, p));
      for (int s = 0; s < 6; ++s) CHECK(compose(act, p, {act.act(z, t), s}) == Arrow{z, s3.mul(t, s)});
    }
  }
  try {
    compose(act, {0, 1}, {0, 1});
    FAIL("expected NotComposable");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotComposable);
  }
}

TEST_CASE("groupoid idempotent condition") {
  const FiniteGroup z4 = groups::cyclic(4);
  const GroupAction act = groups::action_from_translation(z4);
  const auto z_times = [&](const std::vector<int>& c) {
    GroupoidSubset v(act);
    for (int z = 0; z < 4; ++z)
      for (int t : c) v.set(z, t);
    return v;
  };
  CHECK(groupoid_idempotent_check(z_times({0, 2})).holds);
  CHECK(groupoid_idempotent_check(z_times({0, 1, 2, 3})).holds);
  CHECK(groupoid_idempotent_check(z_times({1, 3})).holds);
  const GroupoidSubset bad = z_times({0, 1});
  const GroupoidCheck c = groupoid_idempotent_check(bad);
  CHECK_FALSE(c.holds);
  REQUIRE(c.witness);
  CHECK(hs_norm_central(bad.indicator()).value > 1.0 + 1e-3);

  const std::vector<int> st{0, 2};
  CHECK(std::abs(hs_norm_central(z_times(st).indicator()).value - 1.0) <= 1e-6);
}

TEST_CASE("groupoid conditions match norms and positivity on small systems") {
  for (const GroupAction& act : tiny_actions()) {
    const int cells = act.space_size() * act.group().order();
    for (int bits = 0; bits < (1 << cells); ++bits) {
      const GroupoidSubset v = subset_from_bits(act, bits);
      const herz_schur::CentralHSMultiplier f = v.indicator();
      const central::CentralNorm cn = hs_norm_central(f);
      CHECK_MESSAGE(groupoid_idempotent_check(v).holds == (cn.value <= 1.0 + 1e-6), "subset " << bits);
      const bool positive = central::is_positive_central(herz_schur::transference_central(f));
      CHECK_MESSAGE(subgroupoid_check(v) == (positive && cn.value <= 1.0 + 1e-6), "subset " << bits);
    }
  }
}

TEST_CASE("subgroupoids") {
  const FiniteGroup s3 = groups::symmetric(3);
  std::vector<std::vector<int>> table(3, std::vector<int>(6));
  // S3 permuting {0,1,2} from the right through its cosets of {e, (1 2)}.
  const std::vector<int> h{0, 1};
  std::vector<int> which(6, -1);
  std::vector<int> reps;
  for (int x = 0; x < 6; ++x) {
    if (which[x] >= 0) continue;
    for (int a : h) which[s3.mul(a, x)] = static_cast<int>(reps.size());
    reps.push_back(x);
  }
  for (int z = 0; z < 3; ++z)
    for (int t = 0; t < 6; ++t) table[z][t] = which[s3.mul(reps[z], t)];
  const GroupAction act = groups::action_from_table(s3, table);

  GroupoidSubset units(act), all(act), isotropy(act);
  for (int z = 0; z < 3; ++z)
    for (int t = 0; t < 6; ++t) {
      all.set(z, t);
      if (t == s3.identity()) units.set(z, t);
      if (act.act(z, t) == z) isotropy.set(z, t);
    }
  CHECK(subgroupoid_check(units));
  CHECK(subgroupoid_check(all));
  CHECK(subgroupoid_check(isotropy));
  CHECK(groupoid_idempotent_check(isotropy).holds);
  GroupoidSubset broken = isotropy;
  broken.set(0, 3);
  CHECK_FALSE(subgroupoid_check(broken));
}

TEST_CASE("idempotent subsets containing an arrow and its units contain its inverse") {
  for (const GroupAction& act : tiny_actions()) {
    const int cells = act.space_size() * act.group().order();
    for (int bits = 0; bits < (1 << cells); ++bits) {
      const GroupoidSubset v = subset_from_bits(act, bits);
      if (!groupoid_idempotent_check(v).holds) continue;
      for (const Arrow& p : v.members()) {
        if (!v.contains(range(act, p)) || !v.contains(domain(act, p))) continue;
        CHECK(v.contains(inverse(act, p)));
        for (const Arrow& q : v.members())
          if (q.z == act.act(p.z, p.t) && v.contains(range(act, q)) && v.contains(domain(act, q)))
            CHECK(v.contains(compose(act, p, q)));
      }
    }
  }
}

TEST_CASE("coset test") {
  const FiniteGroup z4 = groups::cyclic(4);
  CosetResult r = coset_check(z4, {0, 2});
  CHECK(r.coset);
  CHECK(r.subgroup == std::vector<int>{0, 2});
  CHECK(r.representative == 0);
  r = coset_check(z4, {3, 1});
  CHECK(r.coset);
  CHECK(r.subgroup == std::vector<int>{0, 2});
  CHECK(r.representative == 1);
  CHECK_FALSE(coset_check(z4, {0, 1, 2}).coset);
  try {
    coset_check(z4, {});
    FAIL("expected EmptySet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptySet);
  }

  const FiniteGroup s3 = groups::symmetric(3);
  for (int a = 0; a < 6; ++a) CHECK(coset_check(s3, {a}).coset);
  CHECK(coset_check(s3, {0, 1, 2, 3, 4, 5}).coset);
  CHECK_FALSE(coset_check(s3, {0, 1, 2}).coset);
}

TEST_CASE("sections of a coset are cosets") {
  // A coset of the diagonal-type subgroup {(a, e, b, e)} + (c, 1, d, 1) of
  // (Z4 x Z2)^2, shifted by (1, 0, 2, 0).
  const FiniteGroup g = groups::direct_product({groups::cyclic(4), groups::cyclic(2)});
  const FiniteGroup h = groups::direct_product({g, g});
  std::vector<int> w;
  for (int s = 0; s < 8; ++s)
    for (int x = 0; x < 8; ++x)
      if (s % 2 == x % 2) w.push_back(h.mul(s * 8 + x, 2 * 8 + 4));
  const CosetResult r = coset_check(h, w);
  REQUIRE(r.coset);
  for (int s = 0; s < 8; ++s) {
    std::vector<int> section;
    for (int a : w)
      if (a / 8 == s) section.push_back(a % 8);
    if (!section.empty()) CHECK(coset_check(g, section).coset);
  }
  for (int x = 0; x < 8; ++x) {
    std::vector<int> section;
    for (int a : w)
      if (a % 8 == x) section.push_back(a / 8);
    if (!section.empty()) CHECK(coset_check(g, section).coset);
  }
}
