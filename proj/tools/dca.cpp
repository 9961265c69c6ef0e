// Command-line front end: classify models, apply operations, compute
// conjugates and biconjugates, run the closure-table verifier, and inspect
// the fixture registry.  stdout is always a single JSON document; errors go
// to stderr as a JSON object; exit codes: 0 pass, 1 verdict-false or
// verification failure, 2 usage/parse error, 3 inconclusive.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dca/conjugate.hpp"
#include "dca/fixtures.hpp"
#include "dca/io.hpp"
#include "dca/tables.hpp"
#include "dca/transform.hpp"

using namespace dca;
using nlohmann::json;

namespace {

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw usage_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    out.push_back(std::stol(tok));
  if (out.empty()) throw usage_error("empty coordinate list");
  return out;
}

Point parse_point(const std::string& s, size_t dim) {
  std::vector<long> v = parse_longs(s);
  if (v.size() != dim)
    throw usage_error("expected " + std::to_string(dim) + " coordinates");
  Point p(dim);
  for (size_t i = 0; i < dim; ++i) p[i] = v[i];
  return p;
}

// "LO..HI" as a symmetric cube, or "l1,l2..h1,h2" as a general box
Window parse_box(const std::string& s, size_t dim) {
  auto pos = s.find("..");
  if (pos == std::string::npos) throw usage_error("box must be LO..HI");
  std::string lo = s.substr(0, pos), hi = s.substr(pos + 2);
  if (lo.find(',') == std::string::npos) {
    return Window(Point(dim, Int(std::stol(lo))),
                  Point(dim, Int(std::stol(hi))));
  }
  return Window(parse_point(lo, dim), parse_point(hi, dim));
}

std::uint64_t default_seed() {
  if (const char* e = std::getenv("DCA_SEED"))
    return std::strtoull(e, nullptr, 10);
  return 42;
}

json verdict_json(const Verdict& v) {
  json j;
  j["holds"] = v.holds;
  if (!v.holds) {
    j["reason"] = v.reason;
    json pts = json::array();
    for (const Point& p : v.points) {
      json a = json::array();
      for (const Int& c : p) a.push_back(c.get_si());
      pts.push_back(a);
    }
    j["witness-points"] = pts;
    j["witness-indices"] = v.indices;
  }
  return j;
}

// ---- classify ---------------------------------------------------------------

int cmd_classify(const std::string& file, const std::string& cls, bool all) {
  json in = read_json_file(file);
  json out;
  bool every = true;
  if (in.value("kind", "") == "set") {
    LatticeSet s = set_from_json(in);
    out["kind"] = "set";
    json verdicts = json::array();
    std::vector<SetClass> asked;
    if (all) {
      asked = all_set_classes();
    } else {
      auto c = parse_set_class(cls);
      if (!c) throw usage_error("unknown set class: " + cls);
      asked = {*c};
    }
    for (SetClass c : asked) {
      json v = verdict_json(check_set(s, c));
      v["class"] = set_class_name(c);
      every = every && v["holds"].get<bool>();
      verdicts.push_back(std::move(v));
    }
    out["verdicts"] = std::move(verdicts);
  } else if (in.value("kind", "") == "function") {
    LatticeFunction f = function_from_json(in);
    out["kind"] = "function";
    json verdicts = json::array();
    std::vector<FnClass> asked;
    if (all) {
      asked = all_fn_classes();
    } else {
      auto c = parse_fn_class(cls);
      if (!c) throw usage_error("unknown function class: " + cls);
      asked = {*c};
    }
    for (FnClass c : asked) {
      json v = verdict_json(check_fn(f, c));
      v["class"] = fn_class_name(c);
      every = every && v["holds"].get<bool>();
      verdicts.push_back(std::move(v));
    }
    out["verdicts"] = std::move(verdicts);
  } else {
    throw usage_error("input must have kind \"set\" or \"function\"");
  }
  emit(out);
  return every ? 0 : 1;
}

// ---- apply ------------------------------------------------------------------

struct ApplyArgs {
  std::string op, file, out, with_file, t, signs, perm, u, box, beta;
  long alpha = 2;
};

int cmd_apply(const ApplyArgs& a) {
  json in = read_json_file(a.file);
  std::string kind = in.value("kind", "");
  json result;

  auto need = [&](const std::string& flag, const std::string& val) {
    if (val.empty())
      throw usage_error("op " + a.op + " needs --" + flag);
    return val;
  };

  if (kind == "set") {
    LatticeSet s = set_from_json(in);
    LatticeSet r;
    if (a.op == "translate")
      r = apply_change(s, Shift{parse_point(need("t", a.t), s.dim)});
    else if (a.op == "invert")
      r = apply_change(s, InvertAll{});
    else if (a.op == "signs") {
      std::vector<long> v = parse_longs(need("signs", a.signs));
      r = apply_change(s, InvertSigns{{v.begin(), v.end()}});
    } else if (a.op == "permute") {
      std::vector<long> v = parse_longs(need("perm", a.perm));
      std::vector<size_t> p(v.begin(), v.end());
      r = apply_change(s, Permute{p});
    } else if (a.op == "varscale")
      r = apply_change(s, VarScale{a.alpha});
    else if (a.op == "restrict") {
      std::vector<long> v = parse_longs(need("u", a.u));
      r = restrict_to(s, {v.begin(), v.end()});
    } else if (a.op == "project") {
      std::vector<long> v = parse_longs(need("u", a.u));
      r = project_to(s, {v.begin(), v.end()});
    } else if (a.op == "restrictbox")
      r = intersect_box(s, parse_box(need("box", a.box), s.dim));
    else if (a.op == "intersect")
      r = intersect(s, set_from_json(read_json_file(need("with", a.with_file))));
    else if (a.op == "minkowski" || a.op == "convolve")
      r = minkowski_sum(
          s, set_from_json(read_json_file(need("with", a.with_file))));
    else if (a.op == "lift-mnat-m")
      r = lift_mnat_to_m(s);
    else if (a.op == "mm-to-lnat")
      r = mm_to_lnat(s);
    else if (a.op == "lnat-to-mm")
      r = lnat_to_mm(s);
    else
      throw usage_error("unknown set op: " + a.op);
    result = to_json(r);
  } else if (kind == "function") {
    LatticeFunction f = function_from_json(in);
    LatticeFunction r;
    if (a.op == "translate")
      r = apply_change(f, Shift{parse_point(need("t", a.t), f.dim)});
    else if (a.op == "invert")
      r = apply_change(f, InvertAll{});
    else if (a.op == "signs") {
      std::vector<long> v = parse_longs(need("signs", a.signs));
      r = apply_change(f, InvertSigns{{v.begin(), v.end()}});
    } else if (a.op == "permute") {
      std::vector<long> v = parse_longs(need("perm", a.perm));
      std::vector<size_t> p(v.begin(), v.end());
      r = apply_change(f, Permute{p});
    } else if (a.op == "varscale")
      r = apply_change(f, VarScale{a.alpha});
    else if (a.op == "valscale")
      r = value_scale(f, parse_rational(need("beta", a.beta)));
    else if (a.op == "restrict") {
      std::vector<long> v = parse_longs(need("u", a.u));
      r = restrict_to(f, {v.begin(), v.end()});
    } else if (a.op == "project") {
      std::vector<long> v = parse_longs(need("u", a.u));
      r = project_to(f, {v.begin(), v.end()});
    } else if (a.op == "restrictbox")
      r = restrict_box(f, parse_box(need("box", a.box), f.dim));
    else if (a.op == "add")
      r = add(f, function_from_json(read_json_file(need("with", a.with_file))));
    else if (a.op == "convolve")
      r = convolve(f,
                   function_from_json(read_json_file(need("with", a.with_file))));
    else if (a.op == "lift-mnat-m")
      r = lift_mnat_to_m(f);
    else if (a.op == "lift-jmnat-m")
      r = lift_jump_mnat_to_m(f);
    else if (a.op == "lift-lnat-l")
      r = lift_lnat_to_l(f);
    else if (a.op == "mm-to-lnat")
      r = mm_to_lnat(f);
    else if (a.op == "lnat-to-mm")
      r = lnat_to_mm(f);
    else
      throw usage_error("unknown function op: " + a.op);
    result = to_json(r);
  } else {
    throw usage_error("input must have kind \"set\" or \"function\"");
  }

  if (!a.out.empty()) write_json_file(a.out, result);
  json summary;
  summary["op"] = a.op;
  summary["written"] = a.out;
  summary["result"] = a.out.empty() ? result : json(result["kind"]);
  emit(a.out.empty() ? result : summary);
  return 0;
}

// ---- quadratic helper --------------------------------------------------------

int cmd_quadratic(const std::string& afile, const std::string& window,
                  const std::string& out) {
  json in = read_json_file(afile);
  if (!in.contains("a") || !in["a"].is_array())
    throw usage_error("quadratic file needs a matrix field \"a\"");
  std::vector<std::vector<Rat>> a;
  for (const auto& row : in["a"]) {
    std::vector<Rat> r;
    for (const auto& e : row)
      r.push_back(e.is_string() ? parse_rational(e.get<std::string>())
                                : Rat(e.get<long>()));
    a.push_back(std::move(r));
  }
  size_t n = a.size();
  Window w = parse_box(window, n);
  LatticeFunction f = quadratic_function(a, w);
  json result = to_json(f);
  json summary;
  summary["criterion"] = verdict_json(quadratic_multimodular(a));
  summary["function"] = result;
  if (!out.empty()) write_json_file(out, result);
  emit(summary);
  return summary["criterion"]["holds"].get<bool>() ? 0 : 1;
}

// ---- conjugate / biconjugate ---------------------------------------------------

int cmd_conjugate(const std::string& file, const std::string& pbox,
                  const std::string& out) {
  LatticeFunction f = function_from_json(read_json_file(file));
  Window w = pbox.empty() ? default_conjugate_window(f)
                          : parse_box(pbox, f.dim);
  LatticeFunction g = conjugate(f, w);
  json result = to_json(g);
  if (!out.empty()) write_json_file(out, result);
  emit(result);
  return 0;
}

int cmd_biconjugate(const std::string& file, const std::string& at) {
  LatticeFunction f = function_from_json(read_json_file(file));
  Point x = parse_point(at, f.dim);
  BiconjugateResult r = biconjugate_at(f, x);
  json out;
  out["value"] = r.value.is_inf() ? "inf" : rational_to_string(r.value.finite());
  out["envelope"] =
      r.envelope.is_inf() ? "inf" : rational_to_string(r.envelope.finite());
  out["radius"] = r.radius.get_si();
  auto sub = integer_subgradient(f, x);
  out["integer-subgradient"] = sub.has_value();
  emit(out);
  return 0;
}

// ---- verify / fixture ----------------------------------------------------------

int cmd_verify(const std::string& table, long trials, std::uint64_t seed,
               const std::string& report_path) {
  json report = verify_all(trials, seed, table);
  if (!report_path.empty()) write_json_file(report_path, report);
  emit(report["summary"]);
  return report["summary"]["pass"].get<bool>() ? 0 : 1;
}

int cmd_fixture(bool list, const std::string& run_id,
                const std::string& export_dir) {
  if (list) {
    json arr = json::array();
    for (const Fixture& f : fixture_registry())
      arr.push_back({{"id", f.id}, {"note", f.note}});
    emit(arr);
    return 0;
  }
  if (!export_dir.empty()) {
    json written = json::array();
    for (const Fixture& f : fixture_registry()) {
      json payload = f.payload();
      payload["id"] = f.id;
      payload["note"] = f.note;
      write_json_file(export_dir + "/" + f.id + ".json", payload);
      written.push_back(f.id);
    }
    emit(json{{"exported", written}});
    return 0;
  }
  const Fixture* f = find_fixture(run_id);
  if (!f) throw usage_error("unknown fixture id: " + run_id);
  FixtureResult r = run_fixture(*f);
  json checks = json::array();
  for (const FixtureCheck& c : r.checks)
    checks.push_back({{"what", c.what}, {"pass", c.pass}, {"detail", c.detail}});
  emit(json{{"id", r.id}, {"pass", r.pass}, {"checks", checks}});
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact discrete convexity toolkit"};
  app.require_subcommand(1);

  // classify
  auto* classify = app.add_subcommand(
      "classify", "check a set or function against a convexity class");
  std::string cl_file, cl_class;
  bool cl_all = false;
  classify->add_option("file", cl_file, "model JSON file")->required();
  classify->add_option("--class", cl_class,
                       "kebab-case class name (see README for the table)");
  classify->add_flag("--all", cl_all, "check every applicable class");

  // apply
  auto* apply = app.add_subcommand("apply", "apply an operation to a model");
  ApplyArgs aa;
  apply->add_option("--op", aa.op, "operation name")->required();
  apply->add_option("file", aa.file, "model JSON file")->required();
  apply->add_option("-o,--out", aa.out, "output file");
  apply->add_option("--with", aa.with_file, "second operand file");
  apply->add_option("--t", aa.t, "translation vector, e.g. 1,0,-2");
  apply->add_option("--signs", aa.signs, "sign vector, e.g. 1,-1");
  apply->add_option("--perm", aa.perm, "0-based permutation, e.g. 1,0,2");
  apply->add_option("--u", aa.u, "0-based coordinate list");
  apply->add_option("--box", aa.box, "box LO..HI");
  apply->add_option("--alpha", aa.alpha, "domain scaling factor (default 2)");
  apply->add_option("--beta", aa.beta, "value scaling factor, rational");

  // quadratic helper
  auto* quad = app.add_subcommand(
      "quadratic", "tabulate x^T A x on a window and test the "
                   "multimodularity coefficient criterion");
  std::string q_a, q_window, q_out;
  quad->add_option("matrix", q_a, "JSON file with field \"a\"")->required();
  quad->add_option("--window", q_window, "box LO..HI")->required();
  quad->add_option("-o,--out", q_out, "output file for the tabulated function");

  // conjugate
  auto* conj = app.add_subcommand("conjugate",
                                  "tabulate the integral conjugate");
  std::string co_file, co_pbox, co_out;
  conj->add_option("file", co_file, "function JSON file")->required();
  conj->add_option("--pbox", co_pbox, "p-window LO..HI (default adaptive)");
  conj->add_option("-o,--out", co_out, "output file");

  // biconjugate
  auto* biconj = app.add_subcommand("biconjugate",
                                    "evaluate the integral biconjugate");
  std::string bi_file, bi_at;
  biconj->add_option("file", bi_file, "function JSON file")->required();
  biconj->add_option("--at", bi_at, "evaluation point x1,...,xn")->required();

  // verify
  auto* verify = app.add_subcommand("verify",
                                    "run the closure-table verifier");
  std::string v_table, v_report;
  long v_trials = 200;
  std::uint64_t v_seed = default_seed();
  verify->add_option("--table", v_table,
                     "restrict to one table (sets-coordinate, "
                     "sets-structural, fns-coordinate, fns-value, conjugacy)");
  verify->add_option("--trials", v_trials, "trials per Y cell (default 200)");
  verify->add_option("--seed", v_seed, "base seed (default $DCA_SEED or 42)");
  verify->add_option("--report", v_report, "write the full JSON report here");

  // fixture
  auto* fixture = app.add_subcommand("fixture", "inspect the example registry");
  std::string f_run, f_export;
  bool f_list = false;
  fixture->add_flag("--list", f_list, "list fixture ids and notes");
  fixture->add_option("--run", f_run, "run one fixture by id");
  fixture->add_option("--export", f_export,
                      "write every fixture payload into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << json{{"error", e.what()}, {"code", 2}}.dump() << "\n";
    return 2;
  }

  try {
    if (classify->parsed()) {
      if (cl_class.empty() && !cl_all)
        throw usage_error("classify needs --class or --all");
      return cmd_classify(cl_file, cl_class, cl_all);
    }
    if (apply->parsed()) return cmd_apply(aa);
    if (quad->parsed()) return cmd_quadratic(q_a, q_window, q_out);
    if (conj->parsed()) return cmd_conjugate(co_file, co_pbox, co_out);
    if (biconj->parsed()) return cmd_biconjugate(bi_file, bi_at);
    if (verify->parsed()) return cmd_verify(v_table, v_trials, v_seed, v_report);
    if (fixture->parsed()) {
      if (!f_list && f_run.empty() && f_export.empty())
        throw usage_error("fixture needs --list, --run, or --export");
      return cmd_fixture(f_list, f_run, f_export);
    }
  } catch (const inconclusive_error& e) {
    std::cerr << json{{"error", e.what()}, {"code", 3}}.dump() << "\n";
    return 3;
  } catch (const usage_error& e) {
    std::cerr << json{{"error", e.what()}, {"code", 2}}.dump() << "\n";
    return 2;
  } catch (const io_error& e) {
    std::cerr << json{{"error", e.what()}, {"code", 2}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}, {"code", 1}}.dump() << "\n";
    return 1;
  }
  return 2;
}
