#include "fdalg/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "fdalg/decompose.hpp"
#include "fdalg/gallery.hpp"
#include "fdalg/identities.hpp"
#include "fdalg/io.hpp"
#include "fdalg/localmaps.hpp"

namespace fdalg::cli {

namespace {

using io::Json;

struct Options {
  std::string algebra;
  std::string map;
  std::string what;
  std::string method = "auto";
  std::string identity;
  std::string mode = "formal";
  std::string target;
  std::string at;
  std::string at_y;
  std::string monomial;
  std::string theorem;
  std::string complement;
  std::string kind;
  std::string fixture;
  std::string out_dir;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  std::uint64_t samples = 256;
  unsigned workers = 0;
  bool allow_char_violation = false;
  bool verify_all = false;
  bool timings = false;
};

struct Outcome {
  Json report;
  int code = 0;
};

int code_for(std::string_view status) {
  if (status == "PASS" || status == "OK") return 0;
  if (status == "FAIL" || status == "ANOMALY") return 1;
  if (status == "UNDECIDED_SAMPLED") return 2;
  return 3;
}

Outcome finish(Json report, const std::string& status) {
  report["status"] = status;
  return {std::move(report), code_for(status)};
}

RadicalMethod parse_method(const std::string& m) {
  if (m == "trace-form" || m == "dickson") return RadicalMethod::TraceForm;
  if (m == "brute") return RadicalMethod::Brute;
  if (m == "frobenius") return RadicalMethod::Frobenius;
  return RadicalMethod::Auto;
}

Json labelled(const Algebra& a, const std::vector<std::size_t>& indices) {
  Json out = Json::array();
  for (auto i : indices) out.push_back(a.labels()[i]);
  return out;
}

Json polys(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string("x"));
  return out;
}

Json flags(const MapProfile& p) {
  Json out = Json::object();
  for (const auto& [name, value] : profile_flags(p)) out[name] = value;
  return out;
}

Json maps_json(const std::vector<LinMap>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(io::map_to_json(m));
  return out;
}

// Element representation plus its scalar value when it is a multiple of the unit.
Json element_report(const Algebra& a, const Element& x) {
  Json out = io::element_to_json(x);
  if (a.unit()) {
    const Element& one = *a.unit();
    for (std::size_t k = 0; k < a.dim(); ++k) {
      if (one[k].is_zero()) continue;
      const Scalar c = x[k] / one[k];
      if (scale(c, one) == x) out["scalar"] = c.to_string();
      break;
    }
  }
  return out;
}

Json orbit_json(const OrbitWitness& w) {
  Json out{{"member", w.member}};
  if (w.derivation_coords) out["derivation_coords"] = io::vec_to_json(*w.derivation_coords);
  if (w.generator) out["generator"] = io::element_to_json(*w.generator);
  if (w.source_factors) out["source_invariant_factors"] = polys(*w.source_factors);
  if (w.image_factors) out["image_invariant_factors"] = polys(*w.image_factors);
  return out;
}

Json certification_json(const Certification& c) {
  Json out{{"status", status_token(c.status)}, {"mode", mode_token(c.mode)}, {"checked", c.checked}, {"budget", c.budget}};
  if (c.seed) out["seed"] = *c.seed;
  if (c.witness) out["witness"] = io::element_to_json(*c.witness);
  Json audits = Json::array();
  for (const auto& p : c.audits) audits.push_back(Json{{"x", io::element_to_json(p.x)}, {"witness_data", orbit_json(p.witness)}});
  out["audits"] = std::move(audits);
  return out;
}

Json rows_json(const std::vector<RowOutcome>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back(Json{{"operation", r.operation},
                       {"arguments", r.arguments},
                       {"expected", r.expected},
                       {"computed", r.computed},
                       {"pass", r.pass}});
  return out;
}

Json expected_json(const Fixture& f) {
  Json rows = Json::array();
  for (const auto& r : f.expected)
    rows.push_back(Json{{"operation", r.operation}, {"arguments", r.arguments}, {"expected", r.expected}});
  return Json{{"fixture", f.name}, {"notes", f.notes}, {"rows", std::move(rows)}};
}

Algebra load_algebra(const Options& o) { return io::algebra_from_json(io::read_json_file(o.algebra)); }

LinMap load_map(const Options& o, const Algebra& a) { return io::map_from_json(io::read_json_file(o.map), a); }

Element load_element(const std::string& path, const Algebra& a) {
  return io::element_from_json(io::read_json_file(path), a);
}

Outcome cmd_validate(Json r, const Options& o) {
  const Algebra a = load_algebra(o);
  r["field"] = a.field().name();
  r["dim"] = a.dim();
  r["unital"] = a.unit().has_value();
  if (a.unit()) r["unit"] = io::element_to_json(*a.unit());
  r["commutative"] = a.is_commutative();
  r["matrix_algebra"] = a.is_matrix_algebra();
  return finish(std::move(r), "OK");
}

Outcome cmd_invariant(Json r, const Options& o) {
  const Algebra a = load_algebra(o);
  r["what"] = o.what;
  if (o.what == "radical") {
    r["method"] = o.method;
    r["budget"] = o.budget;
    const Subspace rad = a.radical(parse_method(o.method), o.budget);
    r["dim"] = rad.dim();
    r["subspace"] = io::subspace_to_json(rad);
  } else if (o.what == "center" || o.what == "commutator") {
    const Subspace s = o.what == "center" ? a.center() : a.commutator_space();
    r["dim"] = s.dim();
    r["subspace"] = io::subspace_to_json(s);
  } else if (o.what == "derivations") {
    const auto der = a.derivation_space();
    r["dim"] = der.size();
    r["basis"] = maps_json(der);
  } else {
    const Subspace m = a.multiplication_algebra();
    std::vector<LinMap> ops;
    for (const auto& v : m.basis()) ops.push_back(LinMap::from_vectorized(a.field(), a.dim(), v));
    r["dim"] = ops.size();
    r["basis"] = maps_json(ops);
  }
  return finish(std::move(r), "OK");
}

std::vector<std::size_t> parse_indices(const std::string& text, std::size_t n) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size() || v >= n)
      throw Error(ErrorCode::MalformedInput, "monomial entries must be basis indices below " + std::to_string(n));
    out.push_back(v);
  }
  return out;
}

Outcome cmd_check(Json r, const Options& o) {
  const Algebra a = load_algebra(o);
  const IdentityKind kind = *parse_identity_kind(o.identity);
  IdentitySpec spec{kind, load_map(o, a), std::nullopt};
  if (!o.target.empty()) spec.target = io::subspace_from_json(io::read_json_file(o.target), a);
  const Subspace target = identity_target(a, spec);
  r["identity"] = o.identity;
  r["target"] = io::subspace_to_json(target);
  const unsigned degree = identity_degree(kind);
  r["modes_equivalent"] = modes_equivalent(a.field(), degree);
  const bool h1 = kind == IdentityKind::H1;

  if (!o.at.empty()) {
    const Element x = load_element(o.at, a);
    std::optional<Element> y;
    if (h1) {
      if (o.at_y.empty()) throw Error(ErrorCode::MalformedInput, "h1 needs --at-y");
      y = load_element(o.at_y, a);
    }
    const Element value = evaluate_identity(a, spec, x, y);
    r["mode"] = "single_point";
    r["x"] = io::element_to_json(x);
    if (y) r["y"] = io::element_to_json(*y);
    r["value"] = io::element_to_json(value);
    return finish(std::move(r), target.contains(value) ? "PASS" : "FAIL");
  }

  if (!o.monomial.empty()) {
    std::vector<std::size_t> idx = parse_indices(o.monomial, a.dim());
    std::optional<std::size_t> y;
    if (h1 && !idx.empty()) {
      y = idx.back();
      idx.pop_back();
    }
    const Element value = symmetrized_coefficient(a, spec, idx, y);
    r["mode"] = "single_monomial";
    if (y) idx.push_back(*y);
    r["monomial"] = idx;
    r["monomial_labels"] = labelled(a, idx);
    r["value"] = io::element_to_json(value);
    return finish(std::move(r), target.contains(value) ? "PASS" : "FAIL");
  }

  Verdict v;
  if (o.mode == "formal") {
    v = check_formal(a, spec);
  } else {
    PointwiseOptions opts;
    opts.budget = o.budget;
    opts.seed = o.seed;
    opts.samples = o.samples;
    opts.workers = o.workers;
    v = check_pointwise(a, spec, opts);
    r["budget"] = o.budget;
    r["seed"] = o.seed;
  }
  r["mode"] = mode_token(v.mode);
  r["equivalence_note"] = v.equivalence_note;
  r["checked"] = v.checked;
  if (!v.witness.empty()) {
    Json w{{"x", io::element_to_json(v.witness[0])}};
    if (v.witness.size() > 1) w["y"] = io::element_to_json(v.witness[1]);
    w["value"] = io::element_to_json(*v.witness_value);
    r["witness"] = std::move(w);
  }
  if (v.coefficient_witness) {
    r["witness"] = Json{{"monomial", *v.coefficient_witness},
                        {"monomial_labels", labelled(a, *v.coefficient_witness)},
                        {"value", io::element_to_json(*v.coefficient_value)}};
  }
  return finish(std::move(r), std::string(status_token(v.status)));
}

Outcome cmd_classify(Json r, const Options& o) {
  const Algebra a = load_algebra(o);
  r["flags"] = flags(classify(a, load_map(o, a)));
  return finish(std::move(r), "OK");
}

Outcome cmd_decompose(Json r, const Options& o) {
  const Algebra a = load_algebra(o);
  const LinMap t = load_map(o, a);
  const RadicalMethod method = parse_method(o.method);
  r["theorem"] = o.theorem;
  r["allow_char_violation"] = o.allow_char_violation;

  if (!o.complement.empty()) {
    if (o.theorem != "a") throw Error(ErrorCode::MalformedInput, "--complement requires --theorem a");
    r["theorem"] = "ac3";
    const Subspace s = io::subspace_from_json(io::read_json_file(o.complement), a);
    const Ac3Result res = split_ac3(a, t, s, o.allow_char_violation, method);
    r["warnings"] = res.warnings;
    r["radical"] = io::subspace_to_json(res.rad);
    if (!res.split) {
      r["failure"] = "JORDAN_ENDO_FAIL";
      r["failing_pair"] = Json{{"indices", {res.jordan_failure->first, res.jordan_failure->second}},
                               {"labels", {a.labels()[res.jordan_failure->first], a.labels()[res.jordan_failure->second]}}};
      return finish(std::move(r), "FAIL");
    }
    r["jordan_part"] = io::map_to_json(res.split->jordan_part);
    r["radical_part"] = io::map_to_json(res.split->radical_part);
    return finish(std::move(r), "OK");
  }

  if (o.theorem == "d") {
    const auto res = decompose_theorem_d(a, t, o.allow_char_violation, method);
    r["warnings"] = res.warnings;
    if (!res.decomposition) {
      r["failure"] = "NO_DECOMPOSITION";
      r["inconsistent_prefix"] = *res.inconsistent_prefix;
      return finish(std::move(r), "FAIL");
    }
    r["a"] = io::element_to_json(res.decomposition->a);
    r["residual"] = io::map_to_json(res.decomposition->residual);
    r["radical"] = io::subspace_to_json(res.decomposition->rad);
    return finish(std::move(r), "OK");
  }

  const auto res = decompose_theorem_a(a, t, o.allow_char_violation, method);
  r["warnings"] = res.warnings;
  if (res.alpha) r["alpha"] = element_report(a, *res.alpha);
  if (!res.factorization) {
    r["failure"] = failure_token(res.failure);
    r["detail"] = res.detail;
    return finish(std::move(r), "FAIL");
  }
  r["j"] = io::map_to_json(res.factorization->j);
  return finish(std::move(r), "OK");
}

Outcome cmd_local(Json r, const Options& o) {
  const Algebra a = load_algebra(o);
  const LinMap t = load_map(o, a);
  const LocalKind kind = *parse_local_kind(o.kind);
  r["kind"] = o.kind;
  if (!o.at.empty()) {
    const Element x = load_element(o.at, a);
    const OrbitWitness w = orbit_membership(a, kind, t, x);
    r["mode"] = "single_point";
    r["x"] = io::element_to_json(x);
    r["witness_data"] = orbit_json(w);
    return finish(std::move(r), w.member ? "PASS" : "FAIL");
  }
  PointwiseOptions opts;
  opts.budget = o.budget;
  opts.seed = o.seed;
  opts.samples = o.samples;
  opts.workers = o.workers;
  const Certification c = certify_local(a, kind, t, opts);
  Json cert = certification_json(c);
  cert["seed"] = o.seed;
  for (auto& [key, value] : cert.items())
    if (key != "status") r[key] = value;
  return finish(std::move(r), std::string(status_token(c.status)));
}

Outcome cmd_a2(Json r, const Options& o) {
  const Algebra a = load_algebra(o);
  const A2Report rep = experiment_a2(a, load_map(o, a), o.budget, o.workers);
  r["certification"] = certification_json(rep.certification);
  if (rep.profile) r["flags"] = flags(*rep.profile);
  r["anomaly"] = rep.anomaly;
  if (rep.anomaly) return finish(std::move(r), "ANOMALY");
  return finish(std::move(r), rep.certification.status == VerdictStatus::Pass ? "PASS" : "FAIL");
}

Outcome cmd_gallery(Json r, const Options& o) {
  if (o.fixture.empty() && !o.verify_all) throw Error(ErrorCode::MalformedInput, "gallery needs a fixture name or --verify-all");
  const std::vector<std::string> names = o.fixture.empty() ? fixture_names() : std::vector<std::string>{o.fixture};
  if (o.fixture.empty() && !o.out_dir.empty()) throw Error(ErrorCode::MalformedInput, "--out needs a fixture name");

  if (!o.out_dir.empty()) {
    const Fixture f = build_fixture(o.fixture);
    std::filesystem::create_directories(o.out_dir);
    const std::filesystem::path dir(o.out_dir);
    io::write_json_file(dir / "algebra.json", io::algebra_to_json(f.algebra));
    io::write_json_file(dir / "map.json", io::map_to_json(f.map));
    io::write_json_file(dir / "expected.json", expected_json(f));
    r["written"] = {(dir / "algebra.json").string(), (dir / "map.json").string(), (dir / "expected.json").string()};
  }

  if (!o.verify_all) {
    const Fixture f = build_fixture(o.fixture);
    const Json table = expected_json(f);
    for (const auto& [key, value] : table.items()) r[key] = value;
    return finish(std::move(r), "OK");
  }

  bool all = true;
  Json fixtures = Json::array();
  for (const auto& name : names) {
    const Fixture f = build_fixture(name);
    const auto rows = verify_fixture(f);
    bool ok = true;
    for (const auto& row : rows) ok = ok && row.pass;
    all = all && ok;
    fixtures.push_back(Json{{"fixture", name}, {"status", ok ? "PASS" : "FAIL"}, {"rows", rows_json(rows)}});
  }
  r["fixtures"] = std::move(fixtures);
  return finish(std::move(r), all ? "PASS" : "FAIL");
}

void add_budget(CLI::App* sub, Options& o) {
  sub->add_option("--budget", o.budget, "Enumeration budget")->capture_default_str();
  sub->add_option("--workers", o.workers, "Worker threads (0 = hardware concurrency)");
}

void add_sampling(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "Seed for sampled runs")->capture_default_str();
  sub->add_option("--samples", o.samples, "Random points in sampled runs")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations with finite-dimensional associative algebras", "fdalg"};
  app.require_subcommand(1);
  app.add_flag("--timings", o.timings, "Include wall-clock timings in the report");
  app.fallthrough();

  auto algebra_arg = [&](CLI::App* sub) { sub->add_option("algebra", o.algebra, "Algebra file")->required(); };
  auto map_arg = [&](CLI::App* sub) { sub->add_option("--map", o.map, "Map file")->required(); };
  const std::vector<std::string> methods{"auto", "dickson", "trace-form", "brute", "frobenius"};

  auto* validate = app.add_subcommand("validate", "Check a structure table");
  algebra_arg(validate);

  auto* invariant = app.add_subcommand("invariant", "Compute a derived subspace");
  algebra_arg(invariant);
  invariant->add_option("--what", o.what, "radical|center|commutator|derivations|multalg")
      ->required()
      ->check(CLI::IsMember({"radical", "center", "commutator", "derivations", "multalg"}));
  invariant->add_option("--method", o.method, "Radical method")->check(CLI::IsMember(methods))->capture_default_str();
  invariant->add_option("--budget", o.budget, "Brute-force budget")->capture_default_str();

  auto* check = app.add_subcommand("check", "Test a polynomial identity");
  algebra_arg(check);
  map_arg(check);
  check->add_option("--identity", o.identity, "xdxx|cube|square|quartic-rad|h1|xd")
      ->required()
      ->check(CLI::IsMember({"xdxx", "cube", "square", "quartic-rad", "h1", "xd"}));
  check->add_option("--mode", o.mode, "formal|pointwise")->check(CLI::IsMember({"formal", "pointwise"}))->capture_default_str();
  check->add_option("--target", o.target, "Subspace file replacing the default target");
  check->add_option("--at", o.at, "Evaluate at one point (element file)");
  check->add_option("--at-y", o.at_y, "Second point for h1");
  check->add_option("--monomial", o.monomial, "Comma-separated basis indices of one symmetrized coefficient");
  add_budget(check, o);
  add_sampling(check, o);

  auto* classify_cmd = app.add_subcommand("classify", "Classify a linear map");
  algebra_arg(classify_cmd);
  map_arg(classify_cmd);

  auto* decompose = app.add_subcommand("decompose", "Decompose a map");
  algebra_arg(decompose);
  map_arg(decompose);
  decompose->add_option("--theorem", o.theorem, "d|a")->required()->check(CLI::IsMember({"d", "a"}));
  decompose->add_flag("--allow-char-violation", o.allow_char_violation, "Proceed in excluded characteristics");
  decompose->add_option("--complement", o.complement, "Subspace file of a complement to the radical");
  decompose->add_option("--method", o.method, "Radical method")->check(CLI::IsMember(methods))->capture_default_str();

  auto* local = app.add_subcommand("local", "Certify a local map");
  algebra_arg(local);
  map_arg(local);
  local->add_option("--kind", o.kind, "derivation|inner-derivation|inner-automorphism|jordan-automorphism")
      ->required()
      ->check(CLI::IsMember({"derivation", "inner-derivation", "inner-automorphism", "jordan-automorphism"}));
  local->add_option("--at", o.at, "Test one point (element file)");
  add_budget(local, o);
  add_sampling(local, o);

  auto* a2 = app.add_subcommand("a2", "Local Jordan automorphism experiment");
  algebra_arg(a2);
  map_arg(a2);
  add_budget(a2, o);

  auto* gallery = app.add_subcommand("gallery", "Built-in example fixtures");
  gallery->add_option("name", o.fixture, "Fixture name");
  gallery->add_option("--out", o.out_dir, "Write algebra.json, map.json and expected.json here");
  gallery->add_flag("--verify-all", o.verify_all, "Run every expected row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "fdalg: " << e.what() << '\n';
    return 3;
  }

  CLI::App* sub = app.get_subcommands().front();
  Json report{{"tool_version", kToolVersion}, {"command", sub->get_name()}};
  const auto start = std::chrono::steady_clock::now();
  Outcome res;
  try {
    const std::string name = sub->get_name();
    if (name == "validate") res = cmd_validate(report, o);
    else if (name == "invariant") res = cmd_invariant(report, o);
    else if (name == "check") res = cmd_check(report, o);
    else if (name == "classify") res = cmd_classify(report, o);
    else if (name == "decompose") res = cmd_decompose(report, o);
    else if (name == "local") res = cmd_local(report, o);
    else if (name == "a2") res = cmd_a2(report, o);
    else res = cmd_gallery(report, o);
  } catch (const Error& e) {
    const bool invalid = sub->get_name() == "validate" &&
                         (e.code() == ErrorCode::NotAssociative || e.code() == ErrorCode::MalformedTable);
    report["error"] = error_code_name(e.code());
    report["message"] = e.what();
    res = finish(std::move(report), invalid ? "FAIL" : "ERROR");
    err << "fdalg: " << e.what() << '\n';
  } catch (const std::exception& e) {
    report["error"] = "INTERNAL";
    report["message"] = e.what();
    res = finish(std::move(report), "ERROR");
    err << "fdalg: internal error: " << e.what() << '\n';
  }
  if (o.timings) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    res.report["timings"] = Json{{"elapsed_ms", ms}};
  }
  out << res.report.dump(2) << '\n';
  return res.code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace fdalg::cli
