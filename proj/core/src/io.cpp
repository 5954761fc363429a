#include "multlab/io.hpp"

#include "multlab/error.hpp"

#include <optional>
#include <string>

namespace multlab::io {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::InvalidInput, msg); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int count_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer() || v.get<long long>() < 0) bad(std::string("field \"") + name + "\" must be a count");
  return v.get<int>();
}

std::vector<double> numbers(const json& j, const char* name) {
  if (!j.is_array()) bad(std::string("field \"") + name + "\" must be an array of numbers");
  std::vector<double> out;
  for (const json& v : j) {
    if (!v.is_number()) bad(std::string("field \"") + name + "\" must be an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

// Reads "re"/"im" of length n.
std::vector<Complex> complex_data(const json& j, std::size_t n) {
  const std::vector<double> re = numbers(field(j, "re"), "re");
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("im")) im = numbers(j.at("im"), "im");
  if (re.size() != n || im.size() != n) bad("expected " + std::to_string(n) + " entries in re/im");
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = {re[i], im[i]};
  return out;
}

void put_complex(json& j, const Complex* data, std::size_t n) {
  json re = json::array(), im = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    re.push_back(data[i].real());
    im.push_back(data[i].imag());
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
}

Matrix row_major(const std::vector<Complex>& d, int rows, int cols) {
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = d[static_cast<std::size_t>(r) * cols + c];
  return m;
}

void put_matrix_data(json& j, const Matrix& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
}

std::vector<std::vector<int>> int_table(const json& j, const char* name) {
  if (!j.is_array()) bad(std::string("field \"") + name + "\" must be a list of integer lists");
  std::vector<std::vector<int>> out;
  for (const json& row : j) {
    if (!row.is_array()) bad(std::string("field \"") + name + "\" must be a list of integer lists");
    std::vector<int> r;
    for (const json& v : row) {
      if (!v.is_number_integer()) bad(std::string("field \"") + name + "\" must contain integers");
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool serializable_structure(const groups::GroupStructure& s) {
  using K = groups::GroupStructure::Kind;
  if (s.kind == K::Table) return false;
  if (s.kind == K::Product) {
    for (const auto& f : s.factors)
      if (!serializable_structure(f)) return false;
  }
  return true;
}

json structure_to_json(const groups::GroupStructure& s) {
  using K = groups::GroupStructure::Kind;
  switch (s.kind) {
    case K::Cyclic: return {{"type", "cyclic"}, {"n", s.n}};
    case K::Dihedral: return {{"type", "dihedral"}, {"n", s.n}};
    case K::Symmetric: return {{"type", "symmetric"}, {"n", s.n}};
    case K::Product: {
      json f = json::array();
      for (const auto& x : s.factors) f.push_back(structure_to_json(x));
      return {{"type", "product"}, {"factors", f}};
    }
    case K::Table: break;
  }
  return {};
}

const groups::FiniteGroup& pick_group(const json& j, const groups::FiniteGroup* given, std::optional<groups::FiniteGroup>& store) {
  if (j.is_object() && j.contains("group")) {
    store = group_from_json(j.at("group"));
    return *store;
  }
  if (!given) bad("missing field \"group\"");
  return *given;
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json j{{"rows", m.rows()}, {"cols", m.cols()}};
  put_matrix_data(j, m);
  return j;
}

Matrix matrix_from_json(const json& j) {
  const int rows = count_field(j, "rows"), cols = count_field(j, "cols");
  return row_major(complex_data(j, static_cast<std::size_t>(rows) * cols), rows, cols);
}

json vector_to_json(const Vector& v) {
  json j = json::object();
  put_complex(j, v.data(), static_cast<std::size_t>(v.size()));
  return j;
}

Vector vector_from_json(const json& j) {
  const std::size_t n = numbers(field(j, "re"), "re").size();
  const std::vector<Complex> d = complex_data(j, n);
  Vector v(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) v(static_cast<Eigen::Index>(i)) = d[i];
  return v;
}

json multiplier_to_json(const schur::ScalarMultiplier& phi) {
  json j{{"x", phi.x_size()}, {"y", phi.y_size()}};
  put_matrix_data(j, phi.values());
  return j;
}

schur::ScalarMultiplier multiplier_from_json(const json& j) {
  const int x = count_field(j, "x"), y = count_field(j, "y");
  if (x == 0 || y == 0) bad("multiplier dimensions must be positive");
  return schur::ScalarMultiplier(row_major(complex_data(j, static_cast<std::size_t>(x) * y), x, y));
}

json central_to_json(const central::CentralMultiplier& phi) {
  json j{{"x", phi.x_size()}, {"y", phi.y_size()}, {"z", phi.z_size()}};
  json re = json::array(), im = json::array();
  for (const Matrix& s : phi.slices())
    for (Eigen::Index r = 0; r < s.rows(); ++r)
      for (Eigen::Index c = 0; c < s.cols(); ++c) {
        re.push_back(s(r, c).real());
        im.push_back(s(r, c).imag());
      }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

central::CentralMultiplier central_from_json(const json& j) {
  const int x = count_field(j, "x"), y = count_field(j, "y"), z = count_field(j, "z");
  if (x == 0 || y == 0 || z == 0) bad("central multiplier dimensions must be positive");
  const std::size_t per = static_cast<std::size_t>(x) * y;
  const std::vector<Complex> d = complex_data(j, per * z);
  std::vector<Matrix> slices;
  for (int k = 0; k < z; ++k) {
    std::vector<Complex> part(d.begin() + static_cast<std::ptrdiff_t>(k * per),
                              d.begin() + static_cast<std::ptrdiff_t>((k + 1) * per));
    slices.push_back(row_major(part, x, y));
  }
  return central::CentralMultiplier(std::move(slices));
}

json group_to_json(const groups::FiniteGroup& g) {
  if (serializable_structure(g.structure())) return structure_to_json(g.structure());
  json rows = json::array();
  for (int a = 0; a < g.order(); ++a) {
    json r = json::array();
    for (int b = 0; b < g.order(); ++b) r.push_back(g.mul(a, b));
    rows.push_back(std::move(r));
  }
  return {{"type", "table"}, {"mul", rows}};
}

groups::FiniteGroup group_from_json(const json& j) {
  const json& type = field(j, "type");
  if (!type.is_string()) bad("group \"type\" must be a string");
  const std::string t = type.get<std::string>();
  if (t == "cyclic") return groups::cyclic(count_field(j, "n"));
  if (t == "dihedral") return groups::dihedral(count_field(j, "n"));
  if (t == "symmetric") return groups::symmetric(count_field(j, "n"));
  if (t == "table") return groups::from_table(int_table(field(j, "mul"), "mul"));
  if (t == "product") {
    const json& f = field(j, "factors");
    if (!f.is_array() || f.empty()) bad("product \"factors\" must be a nonempty list");
    std::vector<groups::FiniteGroup> factors;
    for (const json& x : f) factors.push_back(group_from_json(x));
    return groups::direct_product(factors);
  }
  bad("unknown group type \"" + t + "\"");
}

json action_to_json(const groups::GroupAction& a) {
  json j{{"group", group_to_json(a.group())}};
  if (a.is_translation()) {
    j["space"] = "translation";
    return j;
  }
  j["space"] = a.space_size();
  json rows = json::array();
  for (int z = 0; z < a.space_size(); ++z) {
    json r = json::array();
    for (int t = 0; t < a.group().order(); ++t) r.push_back(a.act(z, t));
    rows.push_back(std::move(r));
  }
  j["act"] = std::move(rows);
  return j;
}

groups::GroupAction action_from_json(const json& j, const groups::FiniteGroup* group) {
  std::optional<groups::FiniteGroup> store;
  const groups::FiniteGroup& g = pick_group(j, group, store);
  const json& space = field(j, "space");
  if (space.is_string()) {
    if (space.get<std::string>() != "translation") bad("\"space\" must be a count or \"translation\"");
    return groups::action_from_translation(g);
  }
  const int k = count_field(j, "space");
  const auto act = int_table(field(j, "act"), "act");
  if (static_cast<int>(act.size()) != k) bad("\"act\" must have one row per point");
  return groups::action_from_table(g, act);
}

herz_schur::CentralHSMultiplier hs_multiplier_from_json(const json& j, const groups::GroupAction& action) {
  return herz_schur::CentralHSMultiplier(action, matrix_from_json(j));
}

json measure_to_json(const convolution::Measure& mu) {
  json j{{"group", group_to_json(mu.group())}};
  put_complex(j, mu.weights().data(), static_cast<std::size_t>(mu.weights().size()));
  return j;
}

convolution::Measure measure_from_json(const json& j, const groups::FiniteGroup* group) {
  std::optional<groups::FiniteGroup> store;
  const groups::FiniteGroup& g = pick_group(j, group, store);
  const std::vector<Complex> d = complex_data(j, static_cast<std::size_t>(g.order()));
  Vector w(g.order());
  for (int i = 0; i < g.order(); ++i) w(i) = d[i];
  return convolution::Measure(g, std::move(w));
}

convolution::ConvolutionFamily family_from_json(const json& j, const groups::FiniteGroup* group) {
  std::optional<groups::FiniteGroup> store;
  const groups::FiniteGroup& g = pick_group(j, group, store);
  const json& list = j.is_array() ? j : field(j, "family");
  if (!list.is_array()) bad("\"family\" must be a list of measures");
  std::vector<Vector> measures;
  for (const json& m : list) {
    const std::vector<Complex> d = complex_data(m, static_cast<std::size_t>(g.order()));
    Vector w(g.order());
    for (int i = 0; i < g.order(); ++i) w(i) = d[i];
    measures.push_back(std::move(w));
  }
  return convolution::ConvolutionFamily(g, std::move(measures));
}

convolution::AdmissiblePair admissible_from_json(const json& j, const groups::FiniteGroup* group) {
  std::optional<groups::FiniteGroup> store;
  const groups::FiniteGroup& g = pick_group(j, group, store);
  const int n = g.order();
  return convolution::AdmissiblePair(g, row_major(complex_data(j, static_cast<std::size_t>(n) * n), n, n));
}

json pattern_to_json(const idempotent::Pattern& e) {
  json members = json::array();
  for (const auto& [x, y] : e.members()) members.push_back({x, y});
  return {{"x", e.x_size()}, {"y", e.y_size()}, {"members", members}};
}

idempotent::Pattern pattern_from_json(const json& j) {
  const int x = count_field(j, "x"), y = count_field(j, "y");
  std::vector<std::pair<int, int>> members;
  for (const auto& m : int_table(field(j, "members"), "members")) {
    if (m.size() != 2) bad("pattern members must be [x, y] pairs");
    members.emplace_back(m[0], m[1]);
  }
  return idempotent::Pattern::from_members(x, y, members);
}

json groupoid_to_json(const idempotent::GroupoidSubset& v) {
  json members = json::array();
  for (const auto& a : v.members()) members.push_back({a.z, a.t});
  return {{"action", action_to_json(v.action())}, {"members", members}};
}

idempotent::GroupoidSubset groupoid_from_json(const json& j, const groups::GroupAction* action) {
  std::optional<groups::GroupAction> store;
  if (j.contains("action")) store = action_from_json(j.at("action"));
  else if (!action) bad("missing field \"action\"");
  const groups::GroupAction& act = store ? *store : *action;
  std::vector<idempotent::Arrow> members;
  for (const auto& m : int_table(field(j, "members"), "members")) {
    if (m.size() != 2) bad("groupoid members must be [z, t] pairs");
    members.push_back({m[0], m[1]});
  }
  return idempotent::GroupoidSubset(act, members);
}

}  // namespace multlab::io
