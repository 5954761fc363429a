#include "multlab/cli/app.hpp"

#include "multlab/central.hpp"
#include "multlab/cli/verify.hpp"
#include "multlab/convolution.hpp"
#include "multlab/error.hpp"
#include "multlab/herz_schur.hpp"
#include "multlab/idempotent.hpp"
#include "multlab/io.hpp"
#include "multlab/schur.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace multlab::cli {

namespace {

using groups::FiniteGroup;
using groups::GroupAction;

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open \"" + path + "\"");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, "\"" + path + "\" is not valid JSON: " + e.what());
  }
}

json witness_pairs(const std::vector<std::pair<int, int>>& pairs) {
  json out = json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

json norm_json(const schur::NormResult& r) {
  return {{"norm", r.value}, {"lower", r.lower}, {"gap", r.gap}, {"status", sdp::status_name(r.status)}};
}

json central_json(const central::CentralNorm& c) {
  json slices = json::array();
  for (const schur::NormResult& r : c.per_slice) slices.push_back(r.value);
  return {{"norm", c.value}, {"lower", c.lower}, {"argmax_z", c.argmax_z}, {"per_slice", slices}};
}

// A multiplier document {"x","y",...} or a plain matrix document.
schur::ScalarMultiplier scalar_input(const json& j) {
  if (j.is_object() && j.contains("x")) return io::multiplier_from_json(j);
  return schur::ScalarMultiplier(io::matrix_from_json(j));
}

json classification_json(const convolution::IdempotentClass& c) {
  json j{{"kind", convolution::kind_name(c.kind)}, {"norm1", c.norm1}, {"residual", c.residual}};
  if (c.kind == convolution::IdempotentClass::Kind::NormOne) {
    j["subgroup"] = c.subgroup;
    j["character"] = io::vector_to_json(c.character);
    j["positive"] = c.positive;
  }
  return j;
}

struct Options {
  std::string input, group, action, multiplier, output, direction = "to-schur", property;
  bool no_presolve = false, with_factorization = false, list = false;
  double tol = numerics::kPsdTol;
  std::uint64_t seed = 1;
  int count = -1, threads = 0;
};

std::optional<FiniteGroup> optional_group(const Options& o) {
  if (o.group.empty()) return std::nullopt;
  return io::group_from_json(read_json(o.group));
}

schur::NormOptions norm_options(const Options& o) {
  schur::NormOptions n;
  n.presolve = !o.no_presolve;
  return n;
}

json schur_norm(const Options& o) {
  const schur::ScalarMultiplier phi = scalar_input(read_json(o.input));
  const schur::NormResult r = schur::solve_norm(phi, norm_options(o));
  json j = norm_json(r);
  json f{{"dim", r.factorization.dim}, {"bound", r.factorization.bound},
         {"reproduction_error", schur::reproduction_error(phi, r.factorization)}};
  if (o.with_factorization) {
    f["v"] = io::matrix_to_json(r.factorization.v);
    f["w"] = io::matrix_to_json(r.factorization.w);
  }
  j["factorization"] = f;
  return j;
}

json central_norm(const Options& o) {
  return central_json(central::central_norm(io::central_from_json(read_json(o.input)), norm_options(o)));
}

json central_positive(const Options& o) {
  const central::CentralMultiplier phi = io::central_from_json(read_json(o.input));
  if (phi.x_size() != phi.y_size()) throw Error(ErrorCode::DimensionMismatch, "positivity needs x = y");
  json slices = json::array();
  for (int z = 0; z < phi.z_size(); ++z) slices.push_back(schur::is_positive(phi.slice(z), o.tol));
  return {{"positive", central::is_positive_central(phi, o.tol)}, {"per_slice", slices}};
}

GroupAction action_input(const Options& o) {
  const std::optional<FiniteGroup> g = optional_group(o);
  return io::action_from_json(read_json(o.action), g ? &*g : nullptr);
}

json hs_norm(const Options& o) {
  const GroupAction act = action_input(o);
  const herz_schur::CentralHSMultiplier f = io::hs_multiplier_from_json(read_json(o.multiplier), act);
  return central_json(herz_schur::hs_norm_central(f, norm_options(o)));
}

json hs_bijection(const Options& o) {
  const std::optional<FiniteGroup> g = optional_group(o);
  if (!g) throw Error(ErrorCode::InvalidInput, "--group is required");
  const GroupAction act = groups::action_from_translation(*g);
  const json in = read_json(o.input);
  if (o.direction == "to-schur") {
    return {{"multiplier", io::multiplier_to_json(herz_schur::to_schur(io::hs_multiplier_from_json(in, act)))}};
  }
  if (o.direction == "from-schur") {
    const herz_schur::CentralHSMultiplier a = herz_schur::from_schur(*g, scalar_input(in));
    return {{"action", io::action_to_json(a.action())}, {"F", io::matrix_to_json(a.values())}};
  }
  throw Error(ErrorCode::InvalidInput, "--direction must be to-schur or from-schur");
}

json conv_norm(const Options& o) {
  const std::optional<FiniteGroup> g = optional_group(o);
  const convolution::AdmissiblePair psi = io::admissible_from_json(read_json(o.input), g ? &*g : nullptr);
  const convolution::ConvNorms c = convolution::conv_norm_abelian(psi, norm_options(o));
  return {{"norm_fourier", c.fourier}, {"norm_sdp", c.sdp}, {"difference", std::abs(c.fourier - c.sdp)},
          {"status", sdp::status_name(c.sdp_detail.status)}};
}

json classify_measure(const Options& o) {
  const std::optional<FiniteGroup> g = optional_group(o);
  return classification_json(
      convolution::classify_idempotent_measure(io::measure_from_json(read_json(o.input), g ? &*g : nullptr)));
}

json idem_pattern(const Options& o) {
  const idempotent::Pattern e = io::pattern_from_json(read_json(o.input));
  const idempotent::ThreeOfFour t = idempotent::three_of_four(e);
  if (!t.holds) return {{"three_of_four", false}, {"witness", witness_pairs({t.witness->begin(), t.witness->end()})}};
  json rects = json::array();
  for (const idempotent::Rectangle& r : idempotent::rectangle_decomposition(e))
    rects.push_back({{"rows", r.rows}, {"cols", r.cols}});
  json j{{"three_of_four", true}, {"rectangles", rects}};
  if (e.x_size() == e.y_size()) j["positive"] = idempotent::positive_pattern(e);
  return j;
}

json idem_groupoid(const Options& o) {
  std::optional<GroupAction> act;
  if (!o.action.empty()) act = action_input(o);
  const idempotent::GroupoidSubset v = io::groupoid_from_json(read_json(o.input), act ? &*act : nullptr);
  const idempotent::GroupoidCheck c = idempotent::groupoid_idempotent_check(v);
  json j{{"idempotent", c.holds}, {"subgroupoid", idempotent::subgroupoid_check(v)}};
  if (c.witness) j["witness"] = *c.witness;
  return j;
}

json idem_coset(const Options& o) {
  const json in = read_json(o.input);
  std::optional<FiniteGroup> g = optional_group(o);
  if (!g) {
    if (!in.is_object() || !in.contains("group")) throw Error(ErrorCode::InvalidInput, "missing field \"group\"");
    g = io::group_from_json(in.at("group"));
  }
  const json& members = in.is_array() ? in : in.contains("members") ? in.at("members") : json();
  if (!members.is_array()) throw Error(ErrorCode::InvalidInput, "missing field \"members\"");
  std::vector<int> w;
  for (const json& m : members) {
    if (!m.is_number_integer()) throw Error(ErrorCode::InvalidInput, "members must be element indices");
    w.push_back(m.get<int>());
  }
  const idempotent::CosetResult r = idempotent::coset_check(*g, w);
  json j{{"coset", r.coset}};
  if (r.coset) {
    j["subgroup"] = r.subgroup;
    j["representative"] = r.representative;
  }
  return j;
}

json list_properties() {
  json out = json::array();
  for (const Property& p : registry())
    out.push_back({{"name", p.name}, {"description", p.description}, {"tolerance", p.tolerance},
                   {"default_count", p.default_count}});
  return {{"properties", out}};
}

struct Failed {
  json report;
};

json run_verify(const Options& o) {
  if (o.list) return list_properties();
  if (o.property.empty()) throw Error(ErrorCode::InvalidInput, "--property is required");
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.count = o.count;
  vo.threads = o.threads;
  json report;
  if (o.property == "all") {
    report = {{"seed", o.seed}, {"reports", json::array()}, {"passed", true}};
    for (const Property& p : registry()) {
      json r = verify(p, vo);
      report["passed"] = report["passed"].get<bool>() && r["passed"].get<bool>();
      report["reports"].push_back(std::move(r));
    }
  } else {
    report = verify(find_property(o.property), vo);
  }
  if (!o.output.empty()) {
    std::ofstream f(o.output);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot write \"" + o.output + "\"");
    f << report.dump(2) << '\n';
  }
  if (!report["passed"].get<bool>()) throw Failed{report};
  return report;
}

json error_json(const std::string& name, const std::string& message, const std::vector<std::int64_t>& witness = {}) {
  json j{{"error", name}, {"message", message}};
  if (!witness.empty()) j["witness"] = witness;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::function<json(const Options&)> action;

  CLI::App app{"Norms and structure of Schur, Herz-Schur and convolution multipliers on finite sets and groups",
               "multlab"};
  app.require_subcommand(1);
  const auto presolve_flag = [&](CLI::App* c) { c->add_flag("--no-presolve", o.no_presolve, "Solve the full SDP"); };
  const auto leaf = [&](CLI::App* parent, const char* name, const char* help, json (*fn)(const Options&)) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->callback([&action, fn] { action = fn; });
    return c;
  };

  CLI::App* schur_cmd = app.add_subcommand("schur", "Scalar Schur multipliers");
  schur_cmd->require_subcommand(1);
  CLI::App* sn = leaf(schur_cmd, "norm", "Schur norm by semidefinite programming", schur_norm);
  sn->add_option("--input", o.input, "Multiplier JSON {x,y,re,im} or matrix JSON")->required();
  sn->add_flag("--factorization", o.with_factorization, "Include the vectors v(x), w(y)");
  presolve_flag(sn);

  CLI::App* central_cmd = app.add_subcommand("central", "Central Schur multipliers");
  central_cmd->require_subcommand(1);
  CLI::App* cn = leaf(central_cmd, "norm", "sup over z of the slice norms", central_norm);
  cn->add_option("--input", o.input, "Central multiplier JSON {x,y,z,re,im}")->required();
  presolve_flag(cn);
  CLI::App* cp = leaf(central_cmd, "positive", "Positivity of every slice", central_positive);
  cp->add_option("--input", o.input, "Central multiplier JSON")->required();
  cp->add_option("--tol", o.tol, "PSD tolerance");

  CLI::App* hs_cmd = app.add_subcommand("hs", "Herz-Schur multipliers of dynamical systems");
  hs_cmd->require_subcommand(1);
  CLI::App* hn = leaf(hs_cmd, "norm", "Norm through central transference", hs_norm);
  hn->add_option("--group", o.group, "Group JSON (when the action omits it)");
  hn->add_option("--action", o.action, "Action JSON")->required();
  hn->add_option("--multiplier", o.multiplier, "Matrix JSON F(r,z), |G| x |Z|")->required();
  presolve_flag(hn);
  CLI::App* hb = leaf(hs_cmd, "bijection", "Translation-action bijection with Schur multipliers", hs_bijection);
  hb->add_option("--group", o.group, "Group JSON")->required();
  hb->add_option("--input", o.input, "F as matrix JSON (to-schur) or a multiplier (from-schur)")->required();
  hb->add_option("--direction", o.direction, "to-schur or from-schur")
      ->check(CLI::IsMember({"to-schur", "from-schur"}));

  CLI::App* conv_cmd = app.add_subcommand("conv", "Convolution multipliers");
  conv_cmd->require_subcommand(1);
  CLI::App* ca = leaf(conv_cmd, "norm-abelian", "Fourier and SDP norms over G x Gamma", conv_norm);
  ca->add_option("--input", o.input, "Admissible pair JSON {group,re,im}, |G| x |Gamma|")->required();
  ca->add_option("--group", o.group, "Group JSON (when the input omits it)");
  presolve_flag(ca);
  CLI::App* cm = leaf(conv_cmd, "classify-measure", "Idempotent measure classification", classify_measure);
  cm->add_option("--input", o.input, "Measure JSON {group,re,im}")->required();
  cm->add_option("--group", o.group, "Group JSON (when the input omits it)");

  CLI::App* idem_cmd = app.add_subcommand("idem", "Idempotent multipliers");
  idem_cmd->require_subcommand(1);
  CLI::App* ip = leaf(idem_cmd, "pattern", "3-of-4 test and rectangle decomposition", idem_pattern);
  ip->add_option("--input", o.input, "Pattern JSON {x,y,members}")->required();
  CLI::App* ig = leaf(idem_cmd, "groupoid", "Groupoid idempotent and subgroupoid tests", idem_groupoid);
  ig->add_option("--input", o.input, "Groupoid subset JSON {action,members}")->required();
  ig->add_option("--action", o.action, "Action JSON (when the input omits it)");
  ig->add_option("--group", o.group, "Group JSON (when the action omits it)");
  CLI::App* ic = leaf(idem_cmd, "coset", "Coset test", idem_coset);
  ic->add_option("--input", o.input, "{group, members} or a bare member list")->required();
  ic->add_option("--group", o.group, "Group JSON (when the input omits it)");
  CLI::App* im = leaf(idem_cmd, "measure", "Idempotent measure classification", classify_measure);
  im->add_option("--input", o.input, "Measure JSON {group,re,im}")->required();
  im->add_option("--group", o.group, "Group JSON (when the input omits it)");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a registered property on seeded random instances");
  verify_cmd->callback([&action] { action = run_verify; });
  verify_cmd->add_option("--property", o.property, "Property name, or \"all\"");
  verify_cmd->add_option("--seed", o.seed, "Seed");
  verify_cmd->add_option("--count", o.count, "Number of instances (default: per property)");
  verify_cmd->add_option("--output", o.output, "Also write the report to this file");
  verify_cmd->add_option("--threads", o.threads, "Worker threads (capped by MULTLAB_THREADS)");
  verify_cmd->add_flag("--list", o.list, "List the registered properties");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_json("Usage", e.what()).dump(2) << '\n';
    err << app.help();
    return 2;
  }

  try {
    out << action(o).dump(2) << '\n';
    return 0;
  } catch (const Failed& f) {
    out << f.report.dump(2) << '\n';
    return 1;
  } catch (const Error& e) {
    out << error_json(std::string(error_name(e.code())), e.what(), e.witness()).dump(2) << '\n';
    return 2;
  } catch (const std::exception& e) {
    out << error_json("Internal", e.what()).dump(2) << '\n';
    return 1;
  }
}

}  // namespace multlab::cli
