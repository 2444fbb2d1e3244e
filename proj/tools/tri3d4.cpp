#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "tri3d4/orbits.hpp"
#include "tri3d4/suites.hpp"

using namespace tri3d4;

namespace {

struct RunConfig {
  std::uint32_t p = 3;
  std::uint32_t k = 1;
  std::string format = "json";
  std::uint64_t seed = 42;
  std::uint64_t budget = 0;
  std::string output;
  std::string suite = "all";
  std::string op;
};

// Exit codes
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadArguments = 2;

FieldTower make_field(const RunConfig& cfg) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < cfg.k && q <= 7; ++i) q *= cfg.p;
  if (cfg.k == 0 || q > 7)
    throw Error(ErrorKind::TooLarge, "q = p^k must be at most 7 (got p = " + std::to_string(cfg.p) +
                                         ", k = " + std::to_string(cfg.k) + ")");
  return FieldTower(cfg.p, cfg.k);
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot open " + cfg.output);
  out << text;
}

int cmd_table(const RunConfig& cfg) {
  const FieldTower F = make_field(cfg);
  if (cfg.format == "latex") {
    emit(cfg, table_to_latex(F));
    return kOk;
  }
  const auto t = build_table(F);
  emit(cfg, cfg.format == "csv" ? table_to_csv(t) : table_to_json(F, t).dump() + "\n");
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  const FieldTower F = make_field(cfg);
  SuiteOptions opt;
  opt.seed = cfg.seed;
  opt.budget = cfg.budget ? cfg.budget : (exhaustive_scale(F) ? 100000 : 1000000);
  std::vector<std::string> names;
  if (cfg.suite == "all")
    names = suite_names();
  else
    names = {cfg.suite};
  Json report;
  report["meta"] = field_meta(F);
  report["seed"] = opt.seed;
  report["budget"] = opt.budget;
  Json suites = Json::array();
  bool all = true;
  for (const auto& name : names) {
    const auto start = std::chrono::steady_clock::now();
    const SuiteResult r = run_suite(F, name, opt);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << name << ": " << (r.pass ? "pass" : "FAIL") << " (" << secs << " s)\n";
    suites.push_back(Json{{"suite", r.name}, {"pass", r.pass}, {"details", r.details}});
    all = all && r.pass;
  }
  report["suites"] = suites;
  report["pass"] = all;
  emit(cfg, report.dump(2) + "\n");
  return all ? kOk : kFailed;
}

int cmd_orbits(const RunConfig& cfg) {
  const FieldTower F = make_field(cfg);
  Json out;
  out["meta"] = field_meta(F);
  Json fams = Json::array();
  std::uint64_t total = 0;
  for (const auto& [f, c] : orbit_census(F)) {
    total += c.orbits;
    fams.push_back(Json{{"family", to_string(f)},
                        {"orbits", c.orbits},
                        {"orbit_size", orbit_size(F, f)},
                        {"stabilizer_size", stabilizer_size(F, f)}});
  }
  out["families"] = fams;
  out["orbits"] = total;
  if (exhaustive_scale(F)) {
    const auto rep = verify_orbit_partition(F);
    out["exhaustive"] = Json{{"patterns", rep.patterns}, {"violations", rep.violations}};
  }
  emit(cfg, out.dump(2) + "\n");
  return kOk;
}

int cmd_superclasses(const RunConfig& cfg) {
  const FieldTower F = make_field(cfg);
  SuperclassCatalog cat(F);
  Json out;
  out["meta"] = field_meta(F);
  out["count"] = cat.size();
  Json ids = Json::array();
  for (const auto& id : cat.ids()) ids.push_back(to_json(F, id));
  out["superclasses"] = ids;
  emit(cfg, out.dump() + "\n");
  return kOk;
}

Fq3 root_param(const FieldTower& F, const Json& j, int i, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 || j.get<std::uint64_t>() >= F.q3())
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be a field element index");
  const Fq3 t{j.get<std::uint32_t>()};
  if (root_in_fq(i) && !F.in_fq(t)) throw Error(ErrorKind::NotInFq, std::string(what) + " must lie in F_q");
  return t;
}

int root_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<int>() < 1 || j.get<int>() > 6)
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be a root index 1..6");
  return j.get<int>();
}

int cmd_elem(const RunConfig& cfg) {
  const FieldTower F = make_field(cfg);
  Json in;
  try {
    in = Json::parse(std::cin);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("bad JSON input: ") + e.what());
  }
  Json out;
  if (cfg.op == "mul") {
    out = to_json(u_mul(F, uelem_from_json(F, in.at("a")), uelem_from_json(F, in.at("b"))));
  } else if (cfg.op == "inv") {
    out = to_json(u_inv(F, uelem_from_json(F, in.at("a"))));
  } else {
    if (in.contains("a") && in.contains("b")) {
      const UElem a = uelem_from_json(F, in.at("a")), b = uelem_from_json(F, in.at("b"));
      out = to_json(u_mul(F, u_mul(F, u_inv(F, a), u_inv(F, b)), u_mul(F, a, b)));
    } else {
      const int i = root_index(in.at("i"), "i"), j = root_index(in.at("j"), "j");
      out = to_json(commutator(F, i, root_param(F, in.at("ti"), i, "ti"), j, root_param(F, in.at("tj"), j, "tj")));
    }
  }
  emit(cfg, out.dump() + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supercharacter engine for the Sylow p-subgroup of 3D4(q^3)"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto field_opts = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "odd prime p")->capture_default_str();
    sub->add_option("--k", cfg.k, "q = p^k")->capture_default_str();
    sub->add_option("-o,--output", cfg.output, "output file (default stdout)");
  };
  auto* table = app.add_subcommand("table", "supercharacter table");
  field_opts(table);
  table->add_option("--format", cfg.format, "json, csv or latex")
      ->check(CLI::IsMember({"json", "csv", "latex"}))
      ->capture_default_str();
  auto* verify = app.add_subcommand("verify", "run verification suites");
  field_opts(verify);
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", cfg.suite, "suite name or all")->check(CLI::IsMember(suites))->capture_default_str();
  verify->add_option("--seed", cfg.seed, "PRNG seed")->capture_default_str();
  verify->add_option("--budget", cfg.budget, "element samples (default 1e5 at q=3, 1e6 above)")
      ->check(CLI::PositiveNumber);
  auto* orbits = app.add_subcommand("orbits", "orbit census");
  field_opts(orbits);
  auto* classes = app.add_subcommand("superclasses", "superclass census");
  field_opts(classes);
  auto* elem = app.add_subcommand("elem", "element algebra on JSON from stdin");
  field_opts(elem);
  elem->add_option("op", cfg.op, "mul, inv or comm")->required()->check(CLI::IsMember({"mul", "inv", "comm"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadArguments;
  }
  try {
    if (*table) return cmd_table(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*orbits) return cmd_orbits(cfg);
    if (*classes) return cmd_superclasses(cfg);
    return cmd_elem(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArguments;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArguments;
  }
}
