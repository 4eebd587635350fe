// ghr: command-line front end for finite Gamma-hemirings, their operator
// hemirings and fuzzy h-ideals.
//
// Exit codes: 0 success, 1 property/check failure, 2 input error, 3 capacity.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "ghr/ghr.hpp"

namespace {

using namespace ghr;
using io::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInput = 2;
constexpr int kCapacity = 3;

/// Test hook: GHR_FAULTS="plus-prime-max,skip-z,flip-left" switches on
/// deliberate defects for fault-injection runs.
FaultPlan faults_from_environment() {
  FaultPlan plan;
  const char* spec = std::getenv("GHR_FAULTS");
  if (!spec) return plan;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "plus-prime-max") plan.plus_prime_uses_max = true;
    else if (item == "skip-z") plan.h_scan_skips_z = true;
    else if (item == "flip-left") plan.flip_left_composition = true;
    else if (!item.empty()) throw StructuralError("unknown GHR_FAULTS entry: " + item);
  }
  return plan;
}

std::string describe_unity(const GammaHemiring& g, const std::optional<Unity>& u, Side side) {
  std::string which = to_string(side);
  if (!u) return "no " + which + " unity";
  if (u->strong) return "strong " + which + " unity " + to_string(g, u->witness);
  return which + " unity (" + std::to_string(u->witness.terms.size()) + " terms), not strong: " + to_string(g, u->witness);
}

json operator_json(const GammaHemiring& g, const OperatorHemiring& op, const std::optional<Unity>& u) {
  json labels = json::array(), provenance = json::array();
  for (std::size_t i = 0; i < op.size(); ++i) {
    labels.push_back(OperatorHemiring::label(static_cast<Elem>(i)));
    provenance.push_back(to_string(g, op.provenance[i]));
  }
  json unity = nullptr;
  if (u) unity = json{{"strong", u->strong}, {"witness", to_string(g, u->witness)}};
  auto h = op.as_hemiring();
  return json{{"size", op.size()},
              {"unity", std::move(unity)},
              {"labels", std::move(labels)},
              {"provenance", std::move(provenance)},
              {"hemiring", io::dump_structure(from_hemiring(h, std::string("op-") + to_string(op.side)))}};
}

int cmd_validate(const std::string& path, const Limits& limits) {
  auto g = io::load_structure(path);
  auto report = validate_gamma_hemiring(g, limits);
  if (report.valid()) {
    std::cout << g.name << ": valid Gamma-hemiring (|S|=" << g.size() << ", |Gamma|=" << g.gamma_size() << ")\n";
    return kOk;
  }
  std::cout << g.name << ": " << report.violations.size() << (report.truncated ? "+" : "") << " violation(s)\n";
  for (const auto& v : report.violations) std::cout << "  axiom " << v.axiom << " at " << to_string(v.witness) << "\n";
  return kFailed;
}

int cmd_operators(const std::string& path, const std::string& side, bool dump, const Limits& limits) {
  auto ctx = CorrespondenceContext::build(io::load_structure(path), limits);
  const bool left = side != "right", right = side != "left";
  if (dump) {
    json out{{"structure", io::dump_structure(ctx.G)}};
    if (left) out["left"] = operator_json(ctx.G, ctx.L, ctx.left_unity);
    if (right) out["right"] = operator_json(ctx.G, ctx.R, ctx.right_unity);
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << "structure " << ctx.G.name << "\n";
  auto print = [&](const OperatorHemiring& op, const std::optional<Unity>& u, const char* name) {
    std::cout << "|" << name << "|=" << op.size() << "\n" << describe_unity(ctx.G, u, op.side) << "\n";
    for (std::size_t i = 0; i < op.size(); ++i)
      std::cout << "  " << OperatorHemiring::label(static_cast<Elem>(i)) << " = " << to_string(ctx.G, op.provenance[i])
                << "\n";
  };
  if (left) print(ctx.L, ctx.left_unity, "L");
  if (right) print(ctx.R, ctx.right_unity, "R");
  return kOk;
}

int cmd_h_ideals(const std::string& path, const Limits& limits) {
  auto ctx = CorrespondenceContext::build(io::load_structure(path), limits);
  Workbench wb(ctx, {Rational01::zero(), Rational01::one()}, limits);
  for (const char* c : {"S", "L", "R"}) {
    const auto& ideals = wb.h_ideals(c);
    std::cout << "h-ideals of " << c << " (" << ideals.size() << "):";
    for (const auto& i : ideals) std::cout << " " << wb.show(i);
    std::cout << "\n";
  }
  std::cout << "I -> I+' -> I*'\n";
  for (const auto& i : wb.h_ideals("S"))
    std::cout << "  " << wb.show(i) << " -> " << wb.show(crisp_plus_prime(ctx, i)) << " -> "
              << wb.show(crisp_star_prime(ctx, i)) << "\n";
  int code = kOk;
  for (const char* id : {"T3.15", "T3.16"}) {
    auto r = run_check(id, wb);
    std::cout << (std::string(id) == "T3.15" ? "S <-> L" : "S <-> R") << " bijection: " << to_string(r.status);
    if (!r.note.empty()) std::cout << " (" << r.note << ")";
    if (r.witness) std::cout << " " << to_string(*r.witness);
    std::cout << "\n";
    if (r.status == Status::fail) code = kFailed;
  }
  return code;
}

int cmd_check(const std::string& path, const std::string& fuzzy_path, const std::string& kind, const std::string& side,
              const std::string& grid_text, const Limits& limits) {
  auto ctx = CorrespondenceContext::build(io::load_structure(path), limits);
  auto mu = io::parse_fuzzy(io::read_json_file(fuzzy_path), ctx);
  auto grid = io::parse_grid(grid_text);
  const auto& p = ctx.view(mu.carrier);
  auto sidedness = side == "left" ? Sidedness::left : side == "right" ? Sidedness::right : Sidedness::two_sided;

  CheckResult r;
  if (kind == "h-ideal") {
    r = is_fuzzy_h_ideal(p, mu, sidedness);
  } else if (kind == "bi") {
    r = is_fuzzy_h_bi_ideal(p, mu);
  } else if (kind == "quasi") {
    r = is_fuzzy_h_quasi_ideal(p, mu);
  } else {
    if (auto h = is_fuzzy_h_ideal(p, mu, sidedness); !h) {
      r = h;
      r.note = "not a fuzzy h-ideal: " + r.note;
    } else {
      auto family = enumerate_fuzzy_h_ideals(p, grid, sidedness, limits);
      r = kind == "prime" ? is_prime_fuzzy_h_ideal(p, mu, family) : is_semiprime_fuzzy_h_ideal(p, mu, family);
    }
  }
  std::cout << kind << " (" << to_string(sidedness) << ") on " << mu.carrier << ": " << (r.holds ? "holds" : "fails");
  if (!r.note.empty()) std::cout << " (" << r.note << ")";
  if (r.witness) std::cout << " witness " << to_string(*r.witness);
  std::cout << "\n";
  return r.holds ? kOk : kFailed;
}

int cmd_map(const std::string& path, const std::string& fuzzy_path, const std::string& dir, const Limits& limits) {
  auto ctx = CorrespondenceContext::build(io::load_structure(path), limits);
  auto mu = io::parse_fuzzy(io::read_json_file(fuzzy_path), ctx);
  FuzzySubset out;
  if (dir == "plus") out = plus(ctx, mu);
  else if (dir == "plusprime") out = plus_prime(ctx, mu);
  else if (dir == "star") out = star(ctx, mu);
  else out = star_prime(ctx, mu);
  std::cout << io::dump_fuzzy(out, ctx).dump(2) << "\n";
  return kOk;
}

int cmd_verify(const std::string& path, const std::string& suite, const std::string& grid_text, bool timings,
               const Limits& limits) {
  auto ctx = CorrespondenceContext::build(io::load_structure(path), limits);
  auto report = run_suite(ctx, io::parse_grid(grid_text), parse_suite(suite), limits);
  std::cout << io::report_json(report, timings).dump(2) << "\n";
  return report.overall() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Gamma-hemiring workbench"};
  app.require_subcommand(1);

  std::string path, fuzzy_path, side = "both", kind = "h-ideal", check_side = "two-sided", dir, suite = "all";
  std::string grid = "0,1/2,1";
  bool dump = false, timings = false;

  auto* validate = app.add_subcommand("validate", "check the Gamma-hemiring axioms of a structure file");
  validate->add_option("structure", path, "structure JSON")->required();

  auto* operators = app.add_subcommand("operators", "build the left/right operator hemirings");
  operators->add_option("structure", path, "structure JSON")->required();
  operators->add_option("--side", side, "left, right or both")->check(CLI::IsMember({"left", "right", "both"}));
  operators->add_flag("--dump-tables", dump, "emit full tables as JSON");

  auto* h_ideals = app.add_subcommand("h-ideals", "list h-ideals of S, L, R and the correspondence");
  h_ideals->add_option("structure", path, "structure JSON")->required();

  auto* check = app.add_subcommand("check", "check a fuzzy subset against an ideal notion");
  check->add_option("structure", path, "structure JSON")->required();
  check->add_option("fuzzy", fuzzy_path, "fuzzy subset JSON")->required();
  check->add_option("--kind", kind, "h-ideal, bi, quasi, prime or semiprime")
      ->check(CLI::IsMember({"h-ideal", "bi", "quasi", "prime", "semiprime"}));
  check->add_option("--side", check_side, "left, right or two-sided")
      ->check(CLI::IsMember({"left", "right", "two-sided"}));
  check->add_option("--grid", grid, "value grid for prime/semiprime families");

  auto* map = app.add_subcommand("map", "apply a correspondence map");
  map->add_option("structure", path, "structure JSON")->required();
  map->add_option("fuzzy", fuzzy_path, "fuzzy subset JSON")->required();
  map->add_option("--dir", dir, "plus, plusprime, star or starprime")
      ->required()
      ->check(CLI::IsMember({"plus", "plusprime", "star", "starprime"}));

  auto* verify = app.add_subcommand("verify", "run the property catalog and print a JSON report");
  verify->add_option("structure", path, "structure JSON")->required();
  verify->add_option("--suite", suite, "all, section2, section3 or section4")
      ->check(CLI::IsMember({"all", "section2", "section3", "section4"}));
  verify->add_option("--grid", grid, "comma separated ascending values, 0 and 1 included");
  verify->add_flag("--timings", timings, "report per-check milliseconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    auto limits = Limits::from_environment();
    ScopedFaults faults(faults_from_environment());
    if (*validate) return cmd_validate(path, limits);
    if (*operators) return cmd_operators(path, side, dump, limits);
    if (*h_ideals) return cmd_h_ideals(path, limits);
    if (*check) return cmd_check(path, fuzzy_path, kind, check_side, grid, limits);
    if (*map) return cmd_map(path, fuzzy_path, dir, limits);
    if (*verify) return cmd_verify(path, suite, grid, timings, limits);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
