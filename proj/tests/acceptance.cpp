// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is the number of failing criteria.

#include "multlab/central.hpp"
#include "multlab/convolution.hpp"
#include "multlab/herz_schur.hpp"
#include "multlab/idempotent.hpp"
#include "multlab/random.hpp"
#include "multlab/schur.hpp"
#include "schur_oracle.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace multlab;
using groups::FiniteGroup;
using groups::GroupAction;

namespace {

const double kTriangle = 2.0 / std::sqrt(3.0);

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates the worst residual and the first counterexample.
class Tally {
 public:
  void residual(double r, double tol, const std::string& what) {
    worst_ = std::max(worst_, r);
    if (!(r <= tol)) fail(what + " residual " + fmt(r));
  }
  void require(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void absorb(const Tally& other) {
    if (other.failures_ > 0) fail(other.first_ + " (" + std::to_string(other.failures_) + " total)");
  }
  double worst() const { return worst_; }
  Outcome done(std::string detail) const {
    if (!first_.empty()) detail += "; first failure: " + first_ + " (" + std::to_string(failures_) + " total)";
    return {failures_ == 0, detail};
  }
  static std::string fmt(double v, int digits = 3) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
  }

 private:
  void fail(const std::string& what) {
    if (failures_++ == 0) first_ = what;
  }
  double worst_ = 0.0;
  int failures_ = 0;
  std::string first_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

schur::NormOptions raw() {
  schur::NormOptions o;
  o.presolve = false;
  return o;
}

int between(CounterRng& rng, int lo, int hi) { return lo + rng.below(hi - lo + 1); }

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double svd_trace_norm(const Matrix& m) { return Eigen::JacobiSVD<Matrix>(m).singularValues().sum(); }

central::CentralMultiplier random_central(CounterRng& rng) {
  const int x = between(rng, 1, 5), y = between(rng, 1, 5), z = between(rng, 1, 4);
  std::vector<Matrix> s;
  for (int k = 0; k < z; ++k) s.push_back(rng.complex_matrix(x, y));
  return central::CentralMultiplier(std::move(s));
}

Complex root(long k, long n) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(((k % n) + n) % n) / static_cast<double>(n));
}

// --- 1 -------------------------------------------------------------------

Outcome triangle() {
  Matrix t(2, 2);
  t << 1, 1, 0, 1;
  const auto t0 = std::chrono::steady_clock::now();
  const double norm = schur::norm(schur::ScalarMultiplier(t));
  const double elapsed = seconds_since(t0);
  const oracle::Bounds b = oracle::schur_bounds(t, 8, 11);
  Tally tally;
  tally.residual(std::abs(b.lower - kTriangle), 1e-6, "oracle lower bound");
  tally.residual(std::abs(b.upper - kTriangle), 1e-6, "oracle upper bound");
  tally.residual(std::abs(norm - kTriangle), 1e-6, "sdp norm");
  tally.require(elapsed < 1.0, "runtime " + Tally::fmt(elapsed) + " s");
  return tally.done("norm " + Tally::fmt(norm, 10) + ", 2/sqrt(3) " + Tally::fmt(kTriangle, 10) + ", oracle [" +
                    Tally::fmt(b.lower, 10) + ", " + Tally::fmt(b.upper, 10) +
                    "], " + Tally::fmt(elapsed) + " s");
}

// --- 2 -------------------------------------------------------------------

Outcome factorization_consistency() {
  const auto t0 = std::chrono::steady_clock::now();
  Tally gap, rep;
  for (int i = 0; i < 100; ++i) {
    CounterRng rng(2, i);
    const schur::ScalarMultiplier phi(rng.complex_matrix(4, 4));
    const schur::NormResult r = schur::solve_norm(phi);
    gap.residual(std::abs(r.factorization.bound - r.value), 1e-5, "instance " + std::to_string(i) + " bound");
    rep.residual(schur::reproduction_error(phi, r.factorization), 1e-6, "instance " + std::to_string(i) + " reproduction");
  }
  const double elapsed = seconds_since(t0);
  Tally all;
  all.absorb(gap);
  all.absorb(rep);
  all.require(elapsed < 30.0, "runtime " + Tally::fmt(elapsed) + " s");
  return all.done("max |bound-norm| " + Tally::fmt(gap.worst()) + ", max reproduction " + Tally::fmt(rep.worst()) +
                  ", " + Tally::fmt(elapsed) + " s");
}

// --- 3, 4 ----------------------------------------------------------------

Outcome sup_z_equality() {
  Tally tally;
  for (int i = 0; i < 50; ++i) {
    CounterRng rng(3, i);
    const central::CentralMultiplier phi = random_central(rng);
    const double sup = central::central_norm(phi).value;
    const double big = schur::norm(schur::ScalarMultiplier(central::block_diagonal_embedding(phi)), raw());
    tally.residual(std::abs(sup - big), 1e-6, "instance " + std::to_string(i));
  }
  return tally.done("max |sup - block| " + Tally::fmt(tally.worst()));
}

Outcome s1_bound() {
  Tally tally;
  double tightest = 0.0;
  for (int i = 0; i < 100; ++i) {
    CounterRng rng(4, i);
    const central::CentralMultiplier phi = random_central(rng);
    const Matrix h = rng.complex_matrix(phi.z_size(), phi.y_size());
    const Matrix k = rng.complex_matrix(phi.y_size(), phi.x_size());
    const double lhs = svd_trace_norm(central::bilinear_apply(phi, h, k));
    const double rhs = central::central_norm(phi).value * h.norm() * k.norm();
    tightest = std::max(tightest, lhs / rhs);
    tally.residual(std::max(0.0, lhs - rhs), 1e-6, "instance " + std::to_string(i));
  }
  return tally.done("max excess " + Tally::fmt(tally.worst()) + ", max ratio " + Tally::fmt(tightest));
}

// --- 5, 6 ----------------------------------------------------------------

GroupAction coset_action(const FiniteGroup& g, const std::vector<int>& h) {
  std::vector<int> which(g.order(), -1), reps;
  for (int x = 0; x < g.order(); ++x) {
    if (which[x] >= 0) continue;
    for (int a : h) which[g.mul(a, x)] = static_cast<int>(reps.size());
    reps.push_back(x);
  }
  std::vector<std::vector<int>> act(reps.size(), std::vector<int>(g.order()));
  for (std::size_t z = 0; z < reps.size(); ++z)
    for (int t = 0; t < g.order(); ++t) act[z][t] = which[g.mul(reps[z], t)];
  return groups::action_from_table(g, act);
}

std::vector<GroupAction> systems() {
  const FiniteGroup s3 = groups::symmetric(3), z2 = groups::cyclic(2);
  return {groups::action_from_translation(z2),
          groups::action_from_table(z2, {{0, 1}, {1, 0}, {2, 2}}),
          groups::trivial_action(groups::cyclic(3), 2),
          groups::action_from_translation(groups::cyclic(3)),
          groups::action_from_translation(groups::cyclic(4)),
          groups::action_from_translation(s3),
          coset_action(s3, {0, 1}),
          groups::trivial_action(s3, 2)};
}

Outcome transference() {
  Tally hom, inverse, iso;
  const std::vector<GroupAction> sys = systems();
  for (int i = 0; i < 50; ++i) {
    CounterRng rng(5, i);
    const GroupAction& act = sys[rng.below(static_cast<int>(sys.size()))];
    const int n = act.group().order(), nz = act.space_size();
    const Matrix a = rng.complex_matrix(n, nz), b = rng.complex_matrix(n, nz);
    const central::CentralMultiplier lhs =
        herz_schur::transference_central(herz_schur::CentralHSMultiplier(act, a.cwiseProduct(b)));
    const central::CentralMultiplier rhs = herz_schur::transference_central(herz_schur::CentralHSMultiplier(act, a)) *
                                           herz_schur::transference_central(herz_schur::CentralHSMultiplier(act, b));
    for (int z = 0; z < nz; ++z)
      hom.residual(max_abs(lhs.slices()[z] - rhs.slices()[z]), 0.0, "homomorphism instance " + std::to_string(i));
  }
  const std::vector<FiniteGroup> gs{groups::cyclic(2), groups::cyclic(3), groups::symmetric(3)};
  for (int i = 0; i < 30; ++i) {
    CounterRng rng(55, i);
    const FiniteGroup& g = gs[i % 3];
    const schur::ScalarMultiplier phi(rng.complex_matrix(g.order(), g.order()));
    const herz_schur::CentralHSMultiplier a = herz_schur::from_schur(g, phi);
    const schur::ScalarMultiplier back = herz_schur::to_schur(a);
    inverse.residual(max_abs(back.values() - phi.values()), 0.0, "to_schur(from_schur) instance " + std::to_string(i));
    inverse.residual(max_abs(herz_schur::from_schur(g, back).values() - a.values()), 0.0,
                     "from_schur(to_schur) instance " + std::to_string(i));
    iso.residual(std::abs(herz_schur::hs_norm_central(a).value - schur::norm(phi)), 1e-6,
                 "isometry instance " + std::to_string(i));
  }
  Tally all;
  for (const Tally* t : {&hom, &inverse, &iso}) all.absorb(*t);
  return all.done("homomorphism max " + Tally::fmt(hom.worst()) + ", inverse max " + Tally::fmt(inverse.worst()) +
                  ", isometry max " + Tally::fmt(iso.worst()));
}

Outcome sf_law() {
  Tally tally;
  const std::vector<GroupAction> sys = systems();
  for (int i = 0; i < 30; ++i) {
    CounterRng rng(6, i);
    const GroupAction& act = sys[i % sys.size()];
    const FiniteGroup& g = act.group();
    const int n = g.order(), nz = act.space_size();
    const herz_schur::CentralHSMultiplier f(act, rng.complex_matrix(n, nz));
    const herz_schur::CrossedProductElement e(act, rng.complex_matrix(n, nz));
    // Psi((t,z),(s,z')) = F(t s^-1, z t^-1), independent of z'.
    Matrix psi(n * nz, n * nz);
    for (int t = 0; t < n; ++t)
      for (int z = 0; z < nz; ++z)
        for (int s = 0; s < n; ++s)
          for (int w = 0; w < nz; ++w) psi(t * nz + z, s * nz + w) = f(g.div(t, s), act.act(z, g.inv(t)));
    const Matrix em = e.matrix();
    tally.residual(max_abs(herz_schur::apply_SF(f, e).matrix() - psi.cwiseProduct(em)), 0.0,
                   "instance " + std::to_string(i));
  }
  return tally.done("max entry difference " + Tally::fmt(tally.worst()));
}

// --- 7 -------------------------------------------------------------------

// A finite abelian group as a product of cyclic factors, indexed
// lexicographically; returns false if the table disagrees.
bool cyclic_factors(const FiniteGroup& g, const std::vector<int>& factors) {
  const int n = g.order();
  std::vector<std::vector<int>> coords(n);
  for (int a = 0; a < n; ++a) {
    int rest = a;
    coords[a].resize(factors.size());
    for (int f = static_cast<int>(factors.size()) - 1; f >= 0; --f) {
      coords[a][f] = rest % factors[f];
      rest /= factors[f];
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = 0;
      for (std::size_t f = 0; f < factors.size(); ++f) c = c * factors[f] + (coords[a][f] + coords[b][f]) % factors[f];
      if (g.mul(a, b) != c) return false;
    }
  return true;
}

Outcome abelian_isometry() {
  struct Case {
    FiniteGroup g;
    std::vector<int> factors;
  };
  const std::vector<Case> cases{{groups::cyclic(2), {2}},
                                {groups::cyclic(3), {3}},
                                {groups::cyclic(4), {4}},
                                {groups::direct_product({groups::cyclic(2), groups::cyclic(2)}), {2, 2}}};
  const auto t0 = std::chrono::steady_clock::now();
  Tally lib, indep;
  for (const Case& c : cases) {
    const FiniteGroup& g = c.g;
    const int n = g.order(), h = n * n;
    indep.require(cyclic_factors(g, c.factors), "group table");
    for (int i = 0; i < 20; ++i) {
      CounterRng rng(7, n * 100 + static_cast<int>(c.factors.size()) * 1000 + i);
      const Matrix values = rng.complex_matrix(n, n);
      const convolution::AdmissiblePair psi(g, values);
      // The dual of G is isomorphic to G; on G x Gamma the convolution kernel
      // is normal with eigenvalues |H| times the Fourier coefficients.
      Matrix phi(h, h);
      for (int a = 0; a < h; ++a)
        for (int b = 0; b < h; ++b) {
          const int s = a / n, x = a % n, t = b / n, y = b % n;
          phi(a, b) = values(g.div(s, t), g.div(x, y));
        }
      const double fourier = svd_trace_norm(phi) / h;
      const double sdp = schur::norm(schur::ScalarMultiplier(phi), raw());
      const convolution::ConvNorms lib_norms = convolution::conv_norm_abelian(psi);
      const std::string tag = "|G|=" + std::to_string(n) + " instance " + std::to_string(i);
      indep.residual(std::abs(fourier - sdp), 1e-5, tag + " fourier vs sdp");
      lib.residual(std::abs(lib_norms.fourier - fourier), 1e-9, tag + " library fourier");
      lib.residual(std::abs(lib_norms.sdp - lib_norms.fourier), 1e-5, tag + " library sdp");
    }
  }
  const double elapsed = seconds_since(t0);
  Tally all;
  all.absorb(indep);
  all.absorb(lib);
  all.require(elapsed < 300.0, "runtime " + Tally::fmt(elapsed) + " s");
  return all.done("max |fourier - sdp| " + Tally::fmt(indep.worst()) + ", library vs independent " +
                  Tally::fmt(lib.worst()) + ", " + Tally::fmt(elapsed) + " s");
}

// --- 8 -------------------------------------------------------------------

Outcome pattern_equivalence() {
  Tally tally;
  int contractive = 0;
  double min_failing = 1e9;
  for (int mask = 0; mask < 512; ++mask) {
    idempotent::Pattern e(3, 3);
    for (int i = 0; i < 9; ++i)
      if (mask >> i & 1) e.set(i / 3, i % 3);
    const double norm = schur::norm(e.indicator());
    const bool holds = idempotent::three_of_four(e).holds;
    const std::string tag = "mask " + std::to_string(mask);
    tally.require(holds == (norm <= 1.0 + 1e-6), tag + " norm " + Tally::fmt(norm));
    if (holds) {
      ++contractive;
    } else {
      min_failing = std::min(min_failing, norm);
      tally.require(norm >= kTriangle - 1e-6, tag + " failing norm " + Tally::fmt(norm));
    }
  }
  return tally.done(std::to_string(contractive) + " contractive of 512, min failing norm " + Tally::fmt(min_failing));
}

// --- 9 -------------------------------------------------------------------

// Every action of a group of order <= 3 on at most 3 points.
std::vector<GroupAction> small_systems() {
  std::vector<GroupAction> out;
  for (int n = 1; n <= 3; ++n)
    for (int z = 1; z <= 3; ++z) out.push_back(groups::trivial_action(groups::cyclic(n), z));
  const FiniteGroup z2 = groups::cyclic(2), z3 = groups::cyclic(3);
  out.push_back(groups::action_from_translation(z2));
  out.push_back(groups::action_from_table(z2, {{0, 1}, {1, 0}, {2, 2}}));
  out.push_back(groups::action_from_table(z2, {{0, 0}, {1, 2}, {2, 1}}));
  out.push_back(groups::action_from_table(z2, {{0, 2}, {1, 1}, {2, 0}}));
  out.push_back(groups::action_from_translation(z3));
  out.push_back(groups::action_from_table(z3, {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}));
  return out;
}

void groupoid_case(const idempotent::GroupoidSubset& v, const std::string& tag, Tally& idem, Tally& sub) {
  const herz_schur::CentralHSMultiplier f = v.indicator();
  const central::CentralNorm norm = herz_schur::hs_norm_central(f);
  const bool contractive = norm.value <= 1.0 + 1e-6;
  idem.require(idempotent::groupoid_idempotent_check(v).holds == contractive, tag + " idempotent");
  const central::CentralMultiplier phi = herz_schur::transference_central(f);
  bool pc = true;
  for (int z = 0; z < phi.z_size(); ++z)
    pc = pc && schur::is_positive(phi.slice(z)) && norm.per_slice[z].value <= 1.0 + 1e-6;
  sub.require(idempotent::subgroupoid_check(v) == pc, tag + " subgroupoid");
}

Outcome groupoid_equivalences() {
  Tally idem, sub;
  int count = 0;
  for (const GroupAction& act :
       {groups::action_from_translation(groups::cyclic(2)), groups::trivial_action(groups::cyclic(2), 2)}) {
    for (int mask = 0; mask < 16; ++mask, ++count) {
      idempotent::GroupoidSubset v(act);
      for (int i = 0; i < 4; ++i)
        if (mask >> i & 1) v.set(i / 2, i % 2);
      groupoid_case(v, "exhaustive mask " + std::to_string(mask), idem, sub);
    }
  }
  const std::vector<GroupAction> sys = small_systems();
  for (int i = 0; i < 200; ++i, ++count) {
    CounterRng rng(9, i);
    const GroupAction& act = sys[rng.below(static_cast<int>(sys.size()))];
    idempotent::GroupoidSubset v(act);
    for (int z = 0; z < act.space_size(); ++z)
      for (int t = 0; t < act.group().order(); ++t)
        if (rng.coin()) v.set(z, t);
    groupoid_case(v, "random " + std::to_string(i), idem, sub);
  }
  Tally all;
  all.absorb(idem);
  all.absorb(sub);
  return all.done(std::to_string(count) + " subsets");
}

// --- 10 ------------------------------------------------------------------

Outcome greenleaf() {
  Tally tally;
  std::ostringstream detail;
  for (int n : {4, 6}) {
    const FiniteGroup g = groups::cyclic(n);
    // gamma * m_H for every subgroup dZ_n and every character restricted to it.
    std::vector<Vector> expected;
    for (int d = 1; d <= n; ++d) {
      if (n % d) continue;
      const int order = n / d;
      for (int k = 0; k < order; ++k) {
        Vector m = Vector::Zero(n);
        for (int j = 0; j < order; ++j) m(j * d) = root(static_cast<long>(k) * j * d, n) / double(order);
        expected.push_back(m);
      }
    }
    int norm_one = 0;
    for (int mask = 1; mask < (1 << n); ++mask) {
      Vector mu = Vector::Zero(n);
      for (int k = 0; k < n; ++k)
        if (mask >> k & 1)
          for (int t = 0; t < n; ++t) mu(t) += root(static_cast<long>(k) * t, n) / double(n);
      const double l1 = mu.cwiseAbs().sum();
      const bool listed = std::any_of(expected.begin(), expected.end(),
                                      [&](const Vector& e) { return (e - mu).cwiseAbs().maxCoeff() <= 1e-12; });
      const std::string tag = "n=" + std::to_string(n) + " mask " + std::to_string(mask);
      tally.require(listed == (std::abs(l1 - 1.0) <= 1e-9), tag + " norm " + Tally::fmt(l1));
      if (!listed) tally.require(l1 > 1.0 + 1e-6, tag + " norm " + Tally::fmt(l1));
      const convolution::IdempotentClass c = convolution::classify_idempotent_measure(convolution::Measure(g, mu));
      if (listed) {
        ++norm_one;
        tally.require(c.kind == convolution::IdempotentClass::Kind::NormOne, tag + " kind");
        Vector rebuilt = Vector::Zero(n);
        for (std::size_t i = 0; i < c.subgroup.size(); ++i)
          rebuilt(c.subgroup[i]) = c.character(static_cast<Eigen::Index>(i)) / double(c.subgroup.size());
        tally.residual((rebuilt - mu).cwiseAbs().maxCoeff(), 1e-12, tag + " gamma m_H");
      } else {
        tally.require(c.kind == convolution::IdempotentClass::Kind::NormGreaterOne, tag + " kind");
      }
    }
    tally.require(norm_one == static_cast<int>(expected.size()), "n=" + std::to_string(n) + " count");
    detail << "n=" << n << ": " << norm_one << " of " << (1 << n) - 1 << " nonzero idempotents have norm 1; ";
  }
  return tally.done(detail.str());
}

// --- 11 ------------------------------------------------------------------

Outcome coset_fixture() {
  const FiniteGroup g = groups::direct_product({groups::cyclic(4), groups::cyclic(2)});
  // H = {(s, x) : the Z2 coordinates of s and x agree}, index 2 in (Z4 x Z2)^2
  // and not of the form A x B.
  Matrix values = Matrix::Zero(8, 8);
  for (int s = 0; s < 8; ++s)
    for (int x = 0; x < 8; ++x)
      if (s % 2 == x % 2) values(s, x) = 1.0;
  const convolution::AdmissiblePair psi(g, values);
  std::vector<int> w;
  for (int i = 0; i < 64; ++i)
    if (std::abs(psi.as_function()(i)) > 0.5) w.push_back(i);
  Tally tally;
  std::vector<char> rows(8, 0), cols(8, 0);
  for (int s = 0; s < 8; ++s)
    for (int x = 0; x < 8; ++x)
      if (values(s, x) != 0.0) rows[s] = cols[x] = 1;
  tally.require(std::count(rows.begin(), rows.end(), 1) * std::count(cols.begin(), cols.end(), 1) == 64 &&
                    w.size() == 32,
                "fixture is a product set");
  const idempotent::CosetResult cr = idempotent::coset_check(psi.product(), w);
  tally.require(cr.coset, "not classified as a coset");
  const convolution::ConvNorms c = convolution::conv_norm_abelian(psi);
  tally.residual(std::abs(c.fourier - 1.0), 1e-5, "fourier norm");
  tally.residual(std::abs(c.sdp - 1.0), 1e-5, "sdp norm");
  return tally.done("coset of order " + std::to_string(w.size()) + ", fourier " + Tally::fmt(c.fourier) + ", sdp " +
                    Tally::fmt(c.sdp));
}

// --- 12 ------------------------------------------------------------------

FiniteGroup group_up_to_8(int i) {
  switch (i % 10) {
    case 0: return groups::cyclic(1 + i / 10 % 8);
    case 1: return groups::cyclic(2);
    case 2: return groups::direct_product({groups::cyclic(2), groups::cyclic(2)});
    case 3: return groups::symmetric(3);
    case 4: return groups::dihedral(4);
    case 5: return groups::direct_product({groups::cyclic(2), groups::cyclic(4)});
    case 6: return groups::direct_product({groups::cyclic(2), groups::cyclic(2), groups::cyclic(2)});
    case 7: return groups::cyclic(6);
    case 8: return groups::cyclic(7);
    default: return groups::cyclic(8);
  }
}

Vector gaussian_integers(CounterRng& rng, int n) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(between(rng, -4, 4), between(rng, -4, 4));
  return v;
}

Outcome theta() {
  Tally iso, mult, right;
  for (int i = 0; i < 100; ++i) {
    CounterRng rng(12, i);
    const FiniteGroup g = group_up_to_8(i);
    const int n = g.order();
    const convolution::Measure mu(g, rng.complex_vector(n));
    iso.residual(std::abs(convolution::theta_norm(mu) - mu.weights().cwiseAbs().sum()), 1e-8,
                 "isometry instance " + std::to_string(i));
    // Integer data keeps every product exact.
    const convolution::Measure a(g, gaussian_integers(rng, n)), b(g, gaussian_integers(rng, n));
    const Matrix prod = convolution::theta_matrix(a) * convolution::theta_matrix(b);
    mult.residual(max_abs(convolution::theta_matrix(convolution::convolve(a, b)) - prod), 0.0,
                  "multiplicativity instance " + std::to_string(i));
    std::vector<Vector> ms;
    for (int t = 0; t < n; ++t) ms.push_back(rng.complex_vector(n));
    right.require(convolution::right_multiplier_check(convolution::ConvolutionFamily(g, ms)).holds,
                  "measure family " + std::to_string(i));
  }
  // Negative controls on S3.
  CounterRng rng(1212);
  const FiniteGroup s3 = groups::symmetric(3);
  std::vector<Vector> ms;
  for (int t = 0; t < 6; ++t) ms.push_back(rng.complex_vector(6));
  convolution::OperatorTable bad = convolution::conv_transference(convolution::ConvolutionFamily(s3, ms));
  bad.at(1, 2) += rng.complex_matrix(6, 6);
  right.require(!convolution::right_multiplier_check(s3, bad).holds, "corrupted table accepted");
  convolution::OperatorTable left{6, std::vector<Matrix>(36)};
  for (int s = 0; s < 6; ++s)
    for (int t = 0; t < 6; ++t) {
      Matrix m = Matrix::Zero(6, 6);
      const Vector& mu = ms[s3.div(t, s)];
      for (int x = 0; x < 6; ++x)
        for (int u = 0; u < 6; ++u) m(x, s3.mul(u, x)) += mu(u);
      left.at(s, t) = m;
    }
  right.require(!convolution::right_multiplier_check(s3, left).holds, "left-translation table accepted");
  Tally all;
  for (const Tally* t : {&iso, &mult, &right}) all.absorb(*t);
  return all.done("max isometry error " + Tally::fmt(iso.worst()) + ", max product error " + Tally::fmt(mult.worst()) +
                  ", 100 families accepted, 2 controls rejected");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"triangle norm", triangle},
      {"factorization consistency", factorization_consistency},
      {"sup-z equality", sup_z_equality},
      {"S1-multiplier bound", s1_bound},
      {"transference isometry and homomorphism", transference},
      {"S_F matrix law", sf_law},
      {"abelian convolution isometry", abelian_isometry},
      {"idempotent pattern equivalence", pattern_equivalence},
      {"groupoid equivalences", groupoid_equivalences},
      {"Greenleaf classification", greenleaf},
      {"coset fixture", coset_fixture},
      {"theta isometry and multiplicativity", theta},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %2zu %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  return failed;
}
