// borel: command-line front end for the gin / Lefschetz toolkit.

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "borel.hpp"

#ifndef BOREL_FIXTURE_DIR
#define BOREL_FIXTURE_DIR "fixtures/paper"
#endif

namespace {

using namespace borel;

enum Exit { kOk = 0, kVerdictFalse = 1, kInputError = 2, kInternal = 3 };

struct Common {
  bool json = false;
  std::uint64_t seed = 0;
  int trials = 3;
  std::int64_t entry_bound = 100;
  std::int64_t degree_bound = kDefaultDegreeBound;

  GinOptions gin_options() const { return {trials, entry_bound, seed}; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_flag("--json", c.json, "Emit JSON instead of text");
  cmd->add_option("--seed", c.seed, "Seed for random coordinate changes")->envname("BOREL_SEED");
  cmd->add_option("--trials", c.trials, "Random coordinate changes that must agree")
      ->envname("BOREL_TRIALS")
      ->check(CLI::Range(2, 1000));
  cmd->add_option("--entry-bound", c.entry_bound, "Matrix entries are drawn from [-B, B]")
      ->envname("BOREL_ENTRY_BOUND")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--degree-bound", c.degree_bound, "Give up on Artinian checks past this degree")
      ->envname("BOREL_DEGREE_BOUND")
      ->check(CLI::PositiveNumber);
}

std::string slurp(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  return read_file(path);
}

bool all_monomial(const IdealFile& f) {
  for (const auto& p : f.generators)
    if (!p.is_zero() && !p.is_monomial()) return false;
  return true;
}

void print_ideal(const MonomialIdeal& I, const std::vector<std::string>& names) {
  const auto& g = I.generators();
  for (std::size_t k = 0; k < g.size(); ++k) std::cout << (k ? ", " : "") << to_string(g[k], names);
  std::cout << "\n";
}

int cmd_gin(const Common& c, const std::string& path) {
  IdealFile f = parse_ideal(slurp(path));
  MonomialIdeal G = gin(f.generators, f.num_vars(), c.gin_options());
  if (c.json) std::cout << to_json(G, f.names).dump(2) << "\n";
  else print_ideal(G, f.names);
  return kOk;
}

int cmd_hilbert(const Common& c, const std::string& path) {
  IdealFile f = parse_ideal(slurp(path));
  HilbertFunction H = all_monomial(f) ? hilbert_function(monomial_ideal(f), c.degree_bound)
                                      : hilbert_function(f.generators, f.num_vars(), c.degree_bound);
  if (c.json) {
    std::cout << Json{{"hilbert", to_json(H)}, {"socle_degree", H.socle_degree()}}.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < H.values().size(); ++k) std::cout << (k ? " " : "") << H.values()[k];
    std::cout << "\nt = " << H.socle_degree() << "\n";
  }
  return kOk;
}

int cmd_betti(const Common& c, const std::string& path, const std::string& method) {
  IdealFile f = parse_ideal(slurp(path));
  BettiTable B;
  if (method == "ek") {
    if (!all_monomial(f)) fail(ErrorKind::NotStable, "the Eliahou-Kervaire formula needs a stable monomial ideal; use --method koszul");
    B = ek_betti(monomial_ideal(f));
  } else {
    B = all_monomial(f) ? koszul_betti(monomial_ideal(f)) : koszul_betti(f.generators, f.num_vars());
  }
  if (c.json) std::cout << Json{{"n", f.num_vars()}, {"method", method}, {"betti", to_json(B)}}.dump(2) << "\n";
  else std::cout << betti_diagram(B);
  return kOk;
}

Property property_from(const std::string& s) {
  if (s == "wlp") return Property::WLP;
  if (s == "slp") return Property::SLP;
  return Property::SSP;
}

Method method_from(const std::string& s) {
  if (s == "criterion") return Method::Criterion;
  if (s == "betti") return Method::Betti;
  return Method::Oracle;
}

int cmd_lefschetz(const Common& c, const std::string& path, const std::string& property, const std::string& method) {
  IdealFile f = parse_ideal(slurp(path));
  MonomialIdeal I = working_ideal(f, c.gin_options());
  LefschetzReport rep = analyze(I, property_from(property), method_from(method), c.gin_options());
  if (c.json) {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    std::cout << to_string(rep.property) << ": " << (rep.verdict ? "true" : "false") << " (" << to_string(rep.method);
    if (rep.r1) std::cout << ", r1 = " << *rep.r1;
    std::cout << ", t = " << rep.t << ")\n";
    for (const auto& w : rep.witnesses)
      std::cout << "  " << to_string(w.tuple) << ": " << w.condition << " fails, " << w.lhs << " vs " << w.required << "\n";
  }
  return rep.verdict ? kOk : kVerdictFalse;
}

int cmd_reconstruct(const Common& c, const std::string& path, const std::string& mode) {
  Json in;
  try {
    in = Json::parse(slurp(path));
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::InvalidArgument, std::string("reconstruction input is not JSON: ") + e.what());
  }
  if (!in.is_object()) fail(ErrorKind::InvalidArgument, "reconstruction input must be a JSON object");
  const std::size_t n = in.value("n", std::size_t{3});
  if (n != 3) fail(ErrorKind::InvalidArgument, "reconstruction is only defined for n = 3");
  std::optional<BettiTable> B;
  if (in.contains("betti")) B = betti_from_json(in["betti"], n);
  std::optional<HilbertFunction> H;
  if (in.contains("hilbert")) H = hilbert_from_json(in["hilbert"]);
  if (B) {
    HilbertFunction derived = hilbert_from_betti(*B);
    if (H && !(*H == derived)) fail(ErrorKind::InconsistentInput, "Betti table and Hilbert function disagree");
    H = derived;
  }
  if (mode != "ssp-hilbert" && !B) fail(ErrorKind::InvalidArgument, "mode " + mode + " needs a \"betti\" table");
  if (!H) fail(ErrorKind::InvalidArgument, "need \"hilbert\" or \"betti\"");

  const std::vector<std::string> names{"x1", "x2", "x3"};
  Json out{{"mode", mode}, {"n", n}};
  std::optional<MonomialIdeal> result;
  if (mode == "wlp-betti") {
    BettiTable G = betti_gin_from_betti_I(*B, *H);
    Max2Generators low = reconstruct_max2_generators(G, r1_from_hf_wlp(*H));
    MonomialIdeal part(3, low.generators());
    out["betti_gin"] = to_json(G);
    out["f1"] = low.f1;
    out["f2"] = low.f2;
    out["generators"] = to_json(part, names)["generators"];
    if (!c.json) {
      std::cout << betti_diagram(G) << "generators without x3: ";
      print_ideal(part, names);
    }
  } else {
    result = mode == "slp-betti" ? reconstruct_gin_slp(*B, *H) : reconstruct_gin_ssp(*H);
    out["generators"] = to_json(*result, names)["generators"];
    if (!c.json) print_ideal(*result, names);
  }
  if (c.json) std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_gallery(const Common& c, const std::string& dir) {
  auto cases = run_gallery(dir, c.gin_options());
  bool ok = !cases.empty();
  Json arr = Json::array();
  for (const auto& g : cases) {
    ok = ok && g.passed();
    Json checks = Json::array();
    for (const auto& k : g.checks) checks.push_back({{"expectation", k.expectation}, {"passed", k.passed}, {"detail", k.detail}});
    Json item{{"name", g.name}, {"file", g.path.filename().string()}, {"passed", g.passed()}, {"checks", checks}};
    if (g.error) item["error"] = *g.error;
    arr.push_back(item);
    if (!c.json) {
      std::cout << (g.passed() ? "PASS " : "FAIL ") << g.name << " (" << g.path.filename().string() << ")\n";
      if (g.error) std::cout << "  error: " << *g.error << "\n";
      for (const auto& k : g.checks)
        if (!k.passed) std::cout << "  expected " << k.expectation << ", got " << k.detail << "\n";
    }
  }
  if (c.json) std::cout << Json{{"passed", ok}, {"cases", arr}}.dump(2) << "\n";
  else std::cout << cases.size() << " fixtures, " << (ok ? "all passed" : "failures") << "\n";
  return ok ? kOk : kVerdictFalse;
}

void print_error(const Json& err) { std::cerr << err.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic initial ideals, Betti numbers and Lefschetz properties"};
  app.require_subcommand(1);
  Common common;
  std::string file, method = "criterion", property = "wlp", betti_method = "ek", mode, dir = BOREL_FIXTURE_DIR;

  auto* gin_cmd = app.add_subcommand("gin", "Generic initial ideal under revlex");
  auto* hf_cmd = app.add_subcommand("hilbert", "Hilbert function of R/I");
  auto* betti_cmd = app.add_subcommand("betti", "Graded Betti numbers of I");
  auto* lef_cmd = app.add_subcommand("lefschetz", "Decide WLP, SLP or SSP");
  auto* rec_cmd = app.add_subcommand("reconstruct", "Rebuild gin(I) in three variables from numerical data");
  auto* gal_cmd = app.add_subcommand("gallery", "Replay the bundled example fixtures");

  for (auto* cmd : {gin_cmd, hf_cmd, betti_cmd, lef_cmd, rec_cmd}) {
    cmd->add_option("file", file, "Input file, - for stdin")->required();
    add_common(cmd, common);
  }
  add_common(gal_cmd, common);
  gal_cmd->add_option("dir", dir, "Fixture directory");
  betti_cmd->add_option("--method", betti_method, "ek or koszul")->check(CLI::IsMember({"ek", "koszul"}));
  lef_cmd->add_option("--property", property, "wlp, slp or ssp")->check(CLI::IsMember({"wlp", "slp", "ssp"}));
  lef_cmd->add_option("--method", method, "criterion, betti or oracle")
      ->check(CLI::IsMember({"criterion", "betti", "oracle"}));
  rec_cmd->add_option("--mode", mode, "wlp-betti, slp-betti or ssp-hilbert")
      ->required()
      ->check(CLI::IsMember({"wlp-betti", "slp-betti", "ssp-hilbert"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error({{"error", {{"kind", "UsageError"}, {"message", e.what()}}}});
    return kInputError;
  }

  try {
    if (*gin_cmd) return cmd_gin(common, file);
    if (*hf_cmd) return cmd_hilbert(common, file);
    if (*betti_cmd) return cmd_betti(common, file, betti_method);
    if (*lef_cmd) return cmd_lefschetz(common, file, property, method);
    if (*rec_cmd) return cmd_reconstruct(common, file, mode);
    if (*gal_cmd) return cmd_gallery(common, dir);
  } catch (const Error& e) {
    print_error(to_json(e));
    return e.is_internal() ? kInternal : kInputError;
  } catch (const std::exception& e) {
    print_error({{"error", {{"kind", "Internal"}, {"message", e.what()}}}});
    return kInternal;
  }
  return kInternal;
}
