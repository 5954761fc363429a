#include "multlab/central.hpp"
#include "multlab/cli/verify.hpp"
#include "multlab/convolution.hpp"
#include "multlab/error.hpp"
#include "multlab/herz_schur.hpp"
#include "multlab/idempotent.hpp"
#include "multlab/io.hpp"
#include "multlab/random.hpp"
#include "multlab/schur.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace multlab::cli {

namespace {

using groups::FiniteGroup;
using groups::GroupAction;

schur::NormOptions raw() {
  schur::NormOptions o;
  o.presolve = false;
  return o;
}

int between(CounterRng& rng, int lo, int hi) { return lo + rng.below(hi - lo + 1); }

Matrix gram(CounterRng& rng, int n, int d) {
  const Matrix v = rng.complex_matrix(d, n);
  return v.adjoint() * v;
}

InstanceOutcome outcome(double residual, double tol, json instance) {
  return {residual, residual <= tol, std::move(instance)};
}

// Right action of g on the right cosets of a subgroup h.
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

// Dynamical systems with |G| <= 3 and |Z| <= 3.
GroupAction small_system(CounterRng& rng) {
  switch (rng.below(6)) {
    case 0: return groups::trivial_action(groups::cyclic(1), between(rng, 1, 3));
    case 1: return groups::action_from_translation(groups::cyclic(2));
    case 2: return groups::trivial_action(groups::cyclic(2), between(rng, 1, 3));
    case 3: return groups::action_from_table(groups::cyclic(2), {{0, 1}, {1, 0}, {2, 2}});
    case 4: return groups::action_from_translation(groups::cyclic(3));
    default: return groups::trivial_action(groups::cyclic(3), between(rng, 1, 2));
  }
}

// Dynamical systems up to |G| = 6 for the algebraic identities.
GroupAction any_system(CounterRng& rng) {
  const FiniteGroup s3 = groups::symmetric(3);
  switch (rng.below(5)) {
    case 0: return small_system(rng);
    case 1: return groups::action_from_translation(s3);
    case 2: return coset_action(s3, {0, 1});
    case 3: return groups::action_from_translation(groups::cyclic(4));
    default: return groups::trivial_action(s3, 2);
  }
}

FiniteGroup group_up_to_8(CounterRng& rng) {
  switch (rng.below(8)) {
    case 0: return groups::cyclic(between(rng, 1, 8));
    case 1: return groups::direct_product({groups::cyclic(2), groups::cyclic(2)});
    case 2: return groups::symmetric(3);
    case 3: return groups::dihedral(4);
    case 4: return groups::direct_product({groups::cyclic(2), groups::cyclic(4)});
    case 5: return groups::direct_product({groups::cyclic(2), groups::cyclic(2), groups::cyclic(2)});
    case 6: return groups::cyclic(6);
    default: return groups::cyclic(8);
  }
}

FiniteGroup abelian_up_to_4(CounterRng& rng) {
  switch (rng.below(4)) {
    case 0: return groups::cyclic(2);
    case 1: return groups::cyclic(3);
    case 2: return groups::cyclic(4);
    default: return groups::direct_product({groups::cyclic(2), groups::cyclic(2)});
  }
}

idempotent::GroupoidSubset random_subset(CounterRng& rng, const GroupAction& act) {
  idempotent::GroupoidSubset v(act);
  for (int z = 0; z < act.space_size(); ++z)
    for (int t = 0; t < act.group().order(); ++t)
      if (rng.coin()) v.set(z, t);
  return v;
}

// The two systems with |Z| = |G| = 2; instances below 32 enumerate all of
// their subsets, later ones are random.
idempotent::GroupoidSubset groupoid_instance(CounterRng& rng, int index) {
  if (index < 32) {
    const GroupAction act = index < 16 ? groups::action_from_translation(groups::cyclic(2))
                                       : groups::trivial_action(groups::cyclic(2), 2);
    idempotent::GroupoidSubset v(act);
    for (int i = 0; i < 4; ++i)
      if ((index % 16) >> i & 1) v.set(i / 2, i % 2);
    return v;
  }
  return random_subset(rng, small_system(rng));
}

// --- schur ---------------------------------------------------------------

InstanceOutcome factorization_consistency(std::uint64_t seed, int index) {
  CounterRng rng(seed, index);
  const schur::ScalarMultiplier phi(rng.complex_matrix(4, 4));
  const schur::NormResult r = schur::solve_norm(phi);
  const double gap = std::abs(r.factorization.bound - r.value);
  const double rep = schur::reproduction_error(phi, r.factorization);
  return {std::max(gap, rep), gap <= 1e-5 && rep <= 1e-6,
          {{"phi", io::multiplier_to_json(phi)}, {"norm", r.value}, {"bound", r.factorization.bound},
           {"reproduction_error", rep}}};
}

InstanceOutcome triangle_property(std::uint64_t seed, int index) {
  // All 3-of-4 violations have norm >= that of the triangle; every pattern
  // is either contractive or beyond it.
  CounterRng rng(seed, index);
  const int m = between(rng, 2, 4), n = between(rng, 2, 4);
  idempotent::Pattern e(m, n);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < n; ++y)
      if (rng.coin()) e.set(x, y);
  const double norm = schur::norm(e.indicator());
  const bool holds = idempotent::three_of_four(e).holds;
  const double triangle = 2.0 / std::sqrt(3.0);
  double residual = 0.0;
  if (holds) residual = std::max(0.0, norm - 1.0);
  else residual = std::max(0.0, triangle - norm);
  return outcome(residual, 1e-6, {{"pattern", io::pattern_to_json(e)}, {"norm", norm}, {"three_of_four", holds}});
}

// --- central -------------------------------------------------------------

central::CentralMultiplier random_central(CounterRng& rng, int max_xy, int max_z) {
  const int x = between(rng, 1, max_xy), y = between(rng, 1, max_xy), z = between(rng, 1, max_z);
  std::vector<Matrix> s;
  for (int k = 0; k < z; ++k) s.push_back(rng.complex_matrix(x, y));
  return central::CentralMultiplier(std::move(s));
}

InstanceOutcome sup_z_equality(std::uint64_t seed, int index) {
  CounterRng rng(seed, index);
  const central::CentralMultiplier phi = random_central(rng, 5, 4);
  const double sup = central::central_norm(phi).value;
  const double big = schur::norm(schur::ScalarMultiplier(central::block_diagonal_embedding(phi)), raw());
  return outcome(std::abs(sup - big), 1e-6, {{"phi", io::central_to_json(phi)}, {"central_norm", sup}, {"block_norm", big}});
}

InstanceOutcome s1_bound(std::uint64_t seed, int index) {
  CounterRng rng(seed, index);
  const central::CentralMultiplier phi = random_central(rng, 5, 4);
  const Matrix h = rng.complex_matrix(phi.z_size(), phi.y_size());
  const Matrix k = rng.complex_matrix(phi.y_size(), phi.x_size());
  const double lhs = numerics::trace_norm(central::bilinear_apply(phi, h, k));
  const double rhs = central::central_norm(phi).value * h.norm() * k.norm();
  return outcome(std::max(0.0, lhs - rhs), 1e-6,
                 {{"phi", io::central_to_json(phi)}, {"h", io::matrix_to_json(h)}, {"k", io::matrix_to_json(k)},
                  {"trace_norm", lhs}, {"bound", rhs}});
}

InstanceOutcome central_positivity(std::uint64_t seed, int index) {
  // Positive phi maps PSD block kernels to PSD block kernels; a slice with a
  // negative eigenvalue is caught by a rank-one kernel.
  CounterRng rng(seed, index);
  const int n = between(rng, 1, 4), nz = between(rng, 1, 3);
  const bool positive = index % 2 == 0;
  std::vector<Matrix> slices;
  for (int z = 0; z < nz; ++z) slices.push_back(gram(rng, n, between(rng, 1, n)).transpose());
  if (!positive) slices[rng.below(nz)](0, 0) -= 1.0 + numerics::op_norm(slices[0]) * 4.0;
  const central::CentralMultiplier phi(slices);
  const bool test = central::is_positive_central(phi);
  double worst = 0.0;
  for (int trial = 0; trial < 4; ++trial) {
    central::BlockKernel h;
    for (int z = 0; z < nz; ++z) h.push_back(gram(rng, n, between(rng, 1, n)));
    for (const Matrix& b : central::apply_block(phi, h))
      worst = std::min(worst, numerics::herm_eig(0.5 * (b + b.adjoint())).values.minCoeff());
  }
  double residual = 0.0;
  if (test != positive) residual = 1.0;
  if (positive) residual = std::max(residual, -worst);
  return outcome(residual, 1e-8, {{"phi", io::central_to_json(phi)}, {"positive", test}, {"min_eigenvalue", worst}});
}

// --- herz_schur ----------------------------------------------------------

InstanceOutcome transference_isometry(std::uint64_t seed, int index) {
  CounterRng rng(seed, index);
  const FiniteGroup g = std::array{groups::cyclic(2), groups::cyclic(3), groups::symmetric(3)}[rng.below(3)];
  const int n = g.order();
  const schur::ScalarMultiplier phi(rng.complex_matrix(n, n));
  const herz_schur::CentralHSMultiplier a = herz_schur::from_schur(g, phi);
  const double round = numerics::max_abs(herz_schur::to_schur(a).values() - phi.values()) +
                       numerics::max_abs(herz_schur::from_schur(g, herz_schur::to_schur(a)).values() - a.values());
  const double hs = herz_schur::hs_norm_central(a).value, sn = schur::norm(phi);
  const double residual = round > 0.0 ? 1.0 : std::abs(hs - sn);
  return outcome(residual, 1e-6,
                 {{"group", io::group_to_json(g)}, {"phi", io::multiplier_to_json(phi)}, {"hs_norm", hs}, {"schur_norm", sn}});
}

InstanceOutcome transference_homomorphism(std::uint64_t seed, int index) {
  CounterRng rng(seed, index);
  const GroupAction act = any_system(rng);
  const int n = act.group().order(), nz = act.space_size();
  const Matrix a = rng.complex_matrix(n, nz), b = rng.complex_matrix(n, nz);
  const central::CentralMultiplier lhs =
      herz_schur::transference_central(herz_schur::CentralHSMultiplier(act, a.cwiseProduct(b)));
  const central::CentralMultiplier rhs = herz_schur::transference_central(herz_schur::CentralHSMultiplier(act, a)) *
                                         herz_schur::transference_central(herz_schur::CentralHSMultiplier(act, b));
  double residual = 0.0;
  for (int z = 0; z < nz; ++z) residual = std::max(residual, numerics::max_abs(lhs.slices()[z] - rhs.slices()[z]));
  return outcome(residual, 0.0, {{"action", io::action_to_json(act)}, {"a", io::matrix_to_json(a)}, {"b", io::matrix_to_json(b)}});
}

InstanceOutcome sf_matrix_law(std::uint64_t seed, int index) {
  CounterRng rng(seed, index);
  const GroupAction act = any_system(rng);
  const int n = act.group().order(), nz = act.space_size();
  const herz_schur::CentralHSMultiplier f(act, rng.complex_matrix(n, nz));
  const herz_schur::CrossedProductElement e(act, rng.complex_matrix(n, nz));
  const double residual =
      numerics::max_abs(herz_schur::apply_SF(f, e).matrix() - numerics::hadamard(herz_schur::psi_matrix(f), e.matrix()));
  return outcome(residual, 0.0,
                 {{"action", io::action_to_json(act)}, {"F", io::matrix_to_json(f.values())},
                  {"element", io::matrix_to_json(e.coefficients())}});
}

InstanceOutcome hs_block_equality(std::uint64_t seed, int index) {
  CounterRng rng(seed, index);
  const FiniteGroup g = std::array{groups::cyclic(2), groups::cyclic(3), groups::cyclic(4),
                                   groups::direct_product({groups::cyclic(2), groups::cyclic(2)})}[rng.below(4)];
  const int nz = between(rng, 1, 4);
  std::vector<std::vector<int>> table(nz, std::vector<int>(g.order()));
  for (int z = 0; z < nz; ++z)
    for (int t = 0; t < g.order(); ++t) table[z][t] = z;
  // Translation when sizes allow, otherwise a trivial action.
  const GroupAction act = nz == g.order() && rng.coin() ? groups::action_from_translation(g)
                                                         : groups::action_from_table(g, table);
  const herz_schur::CentralHSMultiplier f(act, rng.complex_matrix(g.order(), nz));
  const double hs = herz_schur::hs_norm_central(f).value;
  const double big = schur::norm(schur::ScalarMultiplier(herz_schur::psi_block_diagonal(f)), raw());
  return outcome(std::abs(hs - big), 1e-6,
                 {{"action", io::action_to_json(act)}, {"F", io::matrix_to_json(f.values())}, {"hs_norm", hs}, {"block_norm", big}});
}

// --- convolution ---------------------------------------------------------

InstanceOutcome abelian_conv_isometry(std::uint64_t seed, int index) {
  CounterRng rng(seed, index);
  const FiniteGroup g = abelian_up_to_4(rng);
  const convolution::AdmissiblePair psi(g, rng.complex_matrix(g.order(), g.order()));
  const convolution::ConvNorms c = convolution::conv_norm_abelian(psi);
  json inst{{"group", io::group_to_json(g)}, {"fourier", c.fourier}, {"sdp", c.sdp}};
  inst["psi"] = io::matrix_to_json(psi.values());
  return outcome(std::abs(c.fourier - c.sdp), 1e-5, std::move(inst));
}

InstanceOutcome theta_isometry(std::uint64_t seed, int index) {
  CounterRng rng(seed, index);
  const FiniteGroup g = group_up_to_8(rng);
  const int n = g.order();
  const convolution::Measure mu(g, rng.complex_vector(n)), nu(g, rng.complex_vector(n));
  const Vector f = rng.complex_vector(n);
  const double iso = std::abs(convolution::theta_norm(mu) - mu.norm1());
  const double mult = numerics::max_abs(convolution::theta_apply(convolution::convolve(mu, nu), f) -
                                        convolution::theta_apply(mu, convolution::theta_apply(nu, f)));
  return {std::max(iso, mult), iso <= 1e-8 && mult <= 1e-12,
          {{"mu", io::measure_to_json(mu)}, {"nu", io::measure_to_json(nu)}, {"f", io::vector_to_json(f)}}};
}

InstanceOutcome right_multiplier(std::uint64_t seed, int index) {
  CounterRng rng(seed, index);
  const FiniteGroup g = group_up_to_8(rng);
  std::vector<Vector> ms;
  for (int t = 0; t < g.order(); ++t) ms.push_back(rng.complex_vector(g.order()));
  const convolution::RightMultiplierReport rep = convolution::right_multiplier_check(convolution::ConvolutionFamily(g, ms));
  json fam = json::array();
  for (const Vector& m : ms) fam.push_back(io::vector_to_json(m));
  return {std::max(rep.invariance_residual, rep.module_residual), rep.holds,
          {{"group", io::group_to_json(g)}, {"family", fam}}};
}

InstanceOutcome greenleaf(std::uint64_t seed, int index) {
  // Idempotents of l1(Z_n) are (1/n) sum over a set S of characters; the
  // contractive ones are exactly those with S a coset of the dual.
  CounterRng rng(seed, index);
  const int n = between(rng, 1, 8);
  const FiniteGroup g = groups::cyclic(n);
  const groups::DualGroup dual = groups::dual_abelian(g);
  std::vector<int> s;
  for (int k = 0; k < n; ++k)
    if (rng.coin()) s.push_back(k);
  if (s.empty()) s.push_back(rng.below(n));
  Vector mu = Vector::Zero(n);
  for (int k : s) mu += dual.character(k) / double(n);
  const convolution::Measure m(g, mu);
  const convolution::IdempotentClass c = convolution::classify_idempotent_measure(m);
  const bool coset = idempotent::coset_check(dual.group(), s).coset;
  const auto expected = coset ? convolution::IdempotentClass::Kind::NormOne : convolution::IdempotentClass::Kind::NormGreaterOne;
  const bool norm_ok = coset == (std::abs(c.norm1 - 1.0) <= 1e-8);
  return {c.kind == expected && norm_ok ? 0.0 : 1.0, c.kind == expected && norm_ok,
          {{"n", n}, {"characters", s}, {"kind", convolution::kind_name(c.kind)}, {"norm1", c.norm1}}};
}

InstanceOutcome coset_conv_norm(std::uint64_t seed, int index) {
  // chi_W on G x Gamma is contractive iff W is a coset; half the instances
  // build a coset on purpose.
  CounterRng rng(seed, index);
  const FiniteGroup g = std::array{groups::cyclic(2), groups::cyclic(3)}[rng.below(2)];
  const convolution::AdmissiblePair shape(g, Matrix::Ones(g.order(), g.order()));
  const FiniteGroup& h = shape.product();
  std::vector<char> in(h.order(), 0);
  if (index % 2 == 0) {
    std::vector<int> k{h.identity()};
    const int gen = rng.below(h.order());
    for (int a = gen; a != h.identity(); a = h.mul(a, gen)) k.push_back(a);
    const int shift = rng.below(h.order());
    for (int a : k) in[h.mul(shift, a)] = 1;
  } else {
    for (int a = 0; a < h.order(); ++a) in[a] = rng.coin();
    in[rng.below(h.order())] = 1;
  }
  std::vector<int> w;
  Matrix values = Matrix::Zero(g.order(), g.order());
  for (int a = 0; a < h.order(); ++a)
    if (in[a]) {
      w.push_back(a);
      values(a / g.order(), a % g.order()) = 1.0;
    }
  const bool coset = idempotent::coset_check(h, w).coset;
  const convolution::ConvNorms c = convolution::conv_norm_abelian(convolution::AdmissiblePair(g, values));
  const bool one = std::abs(c.fourier - 1.0) <= 1e-5 && std::abs(c.sdp - 1.0) <= 1e-5;
  double residual = std::abs(c.fourier - c.sdp);
  if (coset != one) residual = std::max(residual, 1.0);
  return outcome(residual, 1e-5,
                 {{"group", io::group_to_json(g)}, {"members", w}, {"coset", coset}, {"fourier", c.fourier}, {"sdp", c.sdp}});
}

// --- idempotent ----------------------------------------------------------

InstanceOutcome groupoid_equivalence(std::uint64_t seed, int index) {
  CounterRng rng(seed, index);
  const idempotent::GroupoidSubset v = groupoid_instance(rng, index);
  const bool check = idempotent::groupoid_idempotent_check(v).holds;
  const double norm = herz_schur::hs_norm_central(v.indicator()).value;
  const bool contractive = norm <= 1.0 + 1e-6;
  return outcome(check == contractive ? 0.0 : 1.0, 0.0,
                 {{"subset", io::groupoid_to_json(v)}, {"check", check}, {"norm", norm}});
}

InstanceOutcome subgroupoid_positivity(std::uint64_t seed, int index) {
  CounterRng rng(seed, index);
  const idempotent::GroupoidSubset v = groupoid_instance(rng, index);
  const bool check = idempotent::subgroupoid_check(v);
  const herz_schur::CentralHSMultiplier f = v.indicator();
  const bool positive = central::is_positive_central(herz_schur::transference_central(f));
  const double norm = herz_schur::hs_norm_central(f).value;
  const bool pc = positive && norm <= 1.0 + 1e-6;
  return outcome(check == pc ? 0.0 : 1.0, 0.0,
                 {{"subset", io::groupoid_to_json(v)}, {"check", check}, {"positive", positive}, {"norm", norm}});
}

std::vector<Property> build() {
  return {
      {"factorization-consistency", "schur factorization bound equals the norm; reproduction error small", 1e-5, 100,
       factorization_consistency},
      {"pattern-norm-dichotomy", "0/1 patterns: 3-of-4 gives norm 1, otherwise norm >= 2/sqrt(3)", 1e-6, 100,
       triangle_property},
      {"sup-z-equality", "central norm equals the block-diagonal Schur norm", 1e-6, 50, sup_z_equality},
      {"s1-bound", "trace norm of the bilinear map is bounded by the central norm", 1e-6, 100, s1_bound},
      {"central-positivity", "positive central multipliers preserve PSD block kernels", 1e-8, 40, central_positivity},
      {"transference-isometry", "the Schur bijection for translation is inverse and isometric", 1e-6, 30,
       transference_isometry},
      {"transference-homomorphism", "central transference is multiplicative", 0.0, 50, transference_homomorphism},
      {"sf-matrix-law", "S_F acts on crossed-product matrices by entrywise Psi", 0.0, 30, sf_matrix_law},
      {"hs-block-equality", "Herz-Schur norm equals the block-diagonal crossed-product norm", 1e-6, 30,
       hs_block_equality},
      {"abelian-conv-isometry", "Fourier and SDP norms agree over G x Gamma", 1e-5, 30, abelian_conv_isometry},
      {"theta-isometry", "theta is isometric and multiplicative", 1e-8, 100, theta_isometry},
      {"right-multiplier", "measure families give right multipliers", 1e-10, 50, right_multiplier},
      {"greenleaf-classification", "contractive idempotents of l1(Z_n) are gamma m_H", 0.0, 100, greenleaf},
      {"coset-conv-norm", "chi_W has convolution norm 1 iff W is a coset", 1e-5, 40, coset_conv_norm},
      {"groupoid-idempotent-equivalence", "groupoid closure condition iff contractive", 0.0, 32, groupoid_equivalence},
      {"subgroupoid-positivity", "subgroupoid iff positive and contractive", 0.0, 32, subgroupoid_positivity},
  };
}

}  // namespace

const std::vector<Property>& registry() {
  static const std::vector<Property> props = build();
  return props;
}

const Property& find_property(const std::string& name) {
  for (const Property& p : registry())
    if (p.name == name) return p;
  throw Error(ErrorCode::UnknownProperty, "unknown property \"" + name + "\"");
}

}  // namespace multlab::cli
