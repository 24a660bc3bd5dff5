#include "suite.hpp"

#include "robusta/errors.hpp"
#include "robusta/graver.hpp"
#include "robusta/groebner.hpp"
#include "robusta/lattice.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#ifndef ROBUSTA_DATA_DIR
#define ROBUSTA_DATA_DIR "data"
#endif

namespace {

using namespace robusta;
using io::Json;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitBudget = 2;
constexpr int kExitMismatch = 3;

struct Config {
  std::string format = "text";
  unsigned threads = 1;
  std::string budget;
  std::uint64_t spairs = 0, cells = 0, multidegrees = 0, lex_orders = 0;
  std::string mode = "cells";
  std::uint64_t samples = 1000;
  std::optional<std::uint64_t> seed;

  std::string matrix, ideal, mideal, monomial_matrix;
  bool lawrence = false;
  bool bruteforce = false;
  int box = 6;
  std::string data_dir = ROBUSTA_DATA_DIR;
  bool quick = false;
  bool update_golden = false;

  bool json() const { return format == "json"; }

  Budgets budgets() const {
    auto b = Budgets::from_environment();
    if (!budget.empty()) b.apply_override(budget);
    if (spairs) b.spairs = spairs;
    if (cells) b.cells = cells;
    if (multidegrees) b.multidegrees = multidegrees;
    if (lex_orders) b.lex_orders = lex_orders;
    return b;
  }

  FanOptions fan_options() const {
    FanOptions o;
    o.mode = mode == "lex" ? FanMode::Lex : mode == "sample" ? FanMode::Sample : FanMode::Cells;
    if (o.mode == FanMode::Sample && !seed) throw InvalidInput("--seed is required with --mode sample");
    o.samples = samples;
    o.seed = seed.value_or(0);
    o.threads = threads;
    o.budgets = budgets();
    return o;
  }
};

void emit(const Config& cfg, const Json& doc, const std::string& text) {
  if (cfg.json())
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

std::string lines(const std::vector<Binomial>& bs, const VariableContext& ctx) {
  std::string out;
  for (const auto& b : bs) out += "  " + to_string(b, ctx) + "\n";
  return out;
}

/// The ideal named on the command line: --ideal as written, --matrix as its
/// toric ideal (of the Lawrence lifting with --lawrence).
BinomialIdeal load_binomial_ideal(const Config& cfg) {
  if (!cfg.ideal.empty() && !cfg.matrix.empty()) throw InvalidInput("give either --ideal or --matrix");
  if (!cfg.ideal.empty()) {
    if (cfg.lawrence) throw InvalidInput("--lawrence applies to --matrix");
    return io::parse_ideal(io::read_file(cfg.ideal));
  }
  if (cfg.matrix.empty()) throw InvalidInput("an input is required (--ideal or --matrix)");
  const auto A = io::parse_matrix(io::read_file(cfg.matrix));
  if (cfg.lawrence) return toric_ideal(lawrence_lift(kernel_lattice(A)), lawrence_context(A.cols()), cfg.budgets());
  return toric_from_matrix(A, default_context(A.cols()), cfg.budgets());
}

int run_toric(const Config& cfg) {
  if (cfg.matrix.empty()) throw InvalidInput("toric needs --matrix");
  const auto I = load_binomial_ideal(cfg);
  emit(cfg, io::document("toric", io::to_json(I)), io::format_ideal(I));
  return kExitOk;
}

int run_graver(const Config& cfg) {
  Lattice L;
  VariableContext ctx;
  if (!cfg.matrix.empty() && cfg.ideal.empty()) {
    const auto A = io::parse_matrix(io::read_file(cfg.matrix));
    L = kernel_lattice(A);
    ctx = default_context(A.cols());
    if (cfg.lawrence) {
      L = lawrence_lift(L);
      ctx = lawrence_context(A.cols());
    }
  } else {
    const auto I = load_binomial_ideal(cfg);
    L = ideal_lattice(I);
    ctx = I.context();
  }
  const auto G = cfg.bruteforce ? graver_bruteforce(L, cfg.box) : graver_basis(L, cfg.budgets());
  std::ostringstream text;
  text << "graver basis" << (cfg.bruteforce ? " within box " + std::to_string(cfg.box) : std::string()) << ": "
       << G.size() << " elements\n"
       << lines(G.binomials(), ctx);
  emit(cfg, io::document("graver", io::to_json(G, ctx)), text.str());
  return kExitOk;
}

int run_ugb(const Config& cfg) {
  const auto I = load_binomial_ideal(cfg);
  const auto fan = enumerate_fan(I, cfg.fan_options());
  std::ostringstream text;
  text << "mode: " << to_string(fan.mode) << (fan.exhaustive ? "" : " (not exhaustive)") << "\n"
       << "graver basis: " << fan.graver_size << "\n"
       << "initial ideals: " << fan.cones.size() << "\n"
       << "reduced bases: " << fan.reduced_gbs.size() << "\n"
       << "universal basis: " << fan.universal_gb.size() << "\n"
       << lines(fan.universal_gb, I.context());
  emit(cfg, io::document("ugb", io::to_json(fan, I.context())), text.str());
  return kExitOk;
}

int run_robust_monomial_matrix(const Config& cfg) {
  const auto A = io::parse_monomial_matrix(io::read_file(cfg.monomial_matrix));
  const auto minors = minors_of_monomial_matrix(A);
  const auto c = coprimality_criterion(A);
  const auto s = robust_set_check(minors.minors, cfg.budgets());
  Json j;
  j["minors"] = io::to_json(minors.minors);
  j["coprime"] = c.coprime;
  j["witness"] = c.witness_label;
  j["set_robustness"] = io::to_json(s, A.context);
  std::ostringstream text;
  text << "minors:\n" << lines(minors.minors.generators(), A.context)
       << "entries pairwise coprime: " << (c.coprime ? "yes" : "no (" + c.witness_label + ")") << "\n"
       << "universal groebner basis: " << (s.universal ? "yes" : "no") << "\n"
       << "minimal: " << (s.minimal ? "yes" : "no") << "\n"
       << "robust: " << (s.robust() ? "yes" : "no") << "\n";
  emit(cfg, io::document("robust-monomial-matrix", std::move(j)), text.str());
  return kExitOk;
}

int run_robust(const Config& cfg) {
  if (!cfg.monomial_matrix.empty()) return run_robust_monomial_matrix(cfg);
  const auto I = load_binomial_ideal(cfg);
  const auto r = robust_check(I, cfg.fan_options());
  std::ostringstream text;
  text << "robust: " << (r.robust ? "yes" : "no") << (r.exhaustive ? "" : " (not exhaustive)") << "\n"
       << "mu: " << r.mu << "\n"
       << "universal basis: " << r.ugb_size << "\n"
       << "graver basis: " << r.graver_size << "\n"
       << "lawrence-like lattice: " << (r.lawrence_like ? "yes" : "no") << "\n"
       << "reduced bases: " << r.reduced_gb_count << "\n"
       << "components: " << r.components.size() << "\n";
  if (!r.redundant_elements.empty())
    text << "universal basis elements lying in the ideal of the others:\n" << lines(r.redundant_elements, I.context());
  emit(cfg, io::document("robust", io::to_json(r, I.context())), text.str());
  return kExitOk;
}

int run_betti(const Config& cfg) {
  if (!cfg.mideal.empty()) {
    const auto M = io::parse_monomial_ideal(io::read_file(cfg.mideal));
    const auto T = graded_betti(M.ideal, cfg.budgets());
    Json j;
    j["generators"] = io::to_json(M.ideal, M.context);
    j["table"] = io::to_json(T);
    emit(cfg, io::document("betti", std::move(j)), T.to_macaulay());
    return kExitOk;
  }
  const auto I = load_binomial_ideal(cfg);
  const auto b = betti_robustness_check(I, cfg.fan_options());
  Json j;
  j["variables"] = io::to_json(I)["variables"];
  j["mode"] = to_string(b.fan.mode);
  j["exhaustive"] = b.exhaustive;
  j["initial_ideals"] = b.initial_ideals;
  j["robust_betti"] = b.robust_betti;
  Json tables = Json::array();
  std::ostringstream text;
  text << "initial ideals: " << b.initial_ideals << (b.exhaustive ? "" : " (not exhaustive)") << "\n"
       << "distinct betti tables: " << b.tables.size() << "\n"
       << "robust betti numbers: " << (b.robust_betti ? "yes" : "no") << "\n";
  for (std::size_t k = 0; k < b.tables.size(); ++k) {
    const auto& cone = b.fan.cones[b.representatives[k]];
    Json t = io::to_json(b.tables[k]);
    t["weight"] = cone.weight;
    t["initial_ideal"] = io::to_json(cone.initial, I.context());
    tables.push_back(std::move(t));
    text << "\ntable " << k + 1 << ", weight";
    for (auto w : cone.weight) text << " " << w;
    text << "\n" << b.tables[k].to_macaulay();
  }
  j["tables"] = std::move(tables);
  emit(cfg, io::document("betti-robustness", std::move(j)), text.str());
  return kExitOk;
}

int run_reproduce(const Config& cfg) {
  const fs::path data(cfg.data_dir);
  const auto examples = data / "examples";
  const auto golden = data / "golden" / "v1";
  Json results = Json::array();
  std::ostringstream text;
  text << std::left << std::setw(20) << "item" << std::setw(10) << "golden" << std::setw(10) << "claim"
       << std::setw(10) << "seconds" << "statement\n";
  bool all_golden = true;
  std::size_t claims_held = 0, ran = 0;
  for (const auto& item : suite::items()) {
    if (item.slow && cfg.quick) continue;
    ++ran;
    const auto t0 = std::chrono::steady_clock::now();
    const auto outcome = item.run(examples, cfg.threads);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Json doc = io::document("reproduce-item", Json{{"item", item.name}, {"claim", item.claim}, {"claim_holds", outcome.claim}});
    doc["result"] = outcome.payload;
    const auto rendered = doc.dump(2) + "\n";
    const auto file = golden / (item.name + ".json");
    std::string status;
    if (cfg.update_golden) {
      fs::create_directories(golden);
      std::ofstream(file, std::ios::binary) << rendered;
      status = "written";
    } else if (!fs::exists(file)) {
      status = "missing";
      all_golden = false;
    } else if (io::read_file(file) == rendered) {
      status = "match";
    } else {
      status = "DIFFERS";
      all_golden = false;
    }
    claims_held += outcome.claim ? 1 : 0;
    results.push_back(Json{{"item", item.name}, {"golden", status}, {"claim_holds", outcome.claim}});
    char secs_text[32];
    std::snprintf(secs_text, sizeof secs_text, "%.2f", secs);
    text << std::setw(20) << item.name << std::setw(10) << status << std::setw(10)
         << (outcome.claim ? "holds" : "FAILS") << std::setw(10) << secs_text << item.claim << "\n";
  }
  text << "\n" << ran << " items, golden " << (cfg.update_golden ? "written" : all_golden ? "all match" : "mismatch") << ", claims held "
       << claims_held << "/" << ran << "\n";
  Json j;
  j["items"] = std::move(results);
  j["golden_ok"] = all_golden;
  j["claims_held"] = claims_held;
  emit(cfg, io::document("reproduce", std::move(j)), text.str());
  return all_golden ? kExitOk : kExitMismatch;
}

void add_input_options(CLI::App* sub, Config& cfg, bool matrix, bool ideal) {
  if (matrix) {
    sub->add_option("--matrix", cfg.matrix, "integer matrix file (.mat); its kernel defines the lattice")
        ->check(CLI::ExistingFile);
    sub->add_flag("--lawrence", cfg.lawrence, "use the Lawrence lifting of the kernel lattice");
  }
  if (ideal) sub->add_option("--ideal", cfg.ideal, "binomial ideal file (.ideal)")->check(CLI::ExistingFile);
}

void add_fan_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--mode", cfg.mode, "term orders to visit: cells (exhaustive), lex, sample")
      ->check(CLI::IsMember({"cells", "lex", "sample"}));
  sub->add_option("--samples", cfg.samples, "random weights drawn in sample mode")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "seed for sample mode (required there)");
}

} // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"robusta: robust toric ideals, universal Groebner bases and Betti tables"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", cfg.threads, "worker threads for fan enumeration")->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget,
                 "budget override: N for all, or spairs=N,cells=N,multidegrees=N,lex_orders=N "
                 "(default from ROBUSTA_BUDGET)");
  app.add_option("--spairs", cfg.spairs, "S-pair budget per Buchberger run")->check(CLI::PositiveNumber);
  app.add_option("--cells", cfg.cells, "cell budget per arrangement enumeration")->check(CLI::PositiveNumber);
  app.add_option("--multidegrees", cfg.multidegrees, "multidegree budget per Betti table")->check(CLI::PositiveNumber);
  app.add_option("--lex-orders", cfg.lex_orders, "maximum number of lex orders in a sweep")->check(CLI::PositiveNumber);

  auto* toric = app.add_subcommand("toric", "toric ideal of the kernel lattice of a matrix");
  add_input_options(toric, cfg, true, false);
  auto* graver = app.add_subcommand("graver", "Graver basis of a lattice");
  add_input_options(graver, cfg, true, true);
  graver->add_flag("--bruteforce", cfg.bruteforce, "exhaustive search over a box (complete only within the box)");
  graver->add_option("--box", cfg.box, "box bound |u_i| <= K for --bruteforce")->check(CLI::Range(1, 12));
  auto* ugb = app.add_subcommand("ugb", "universal Groebner basis and Groebner fan summary");
  add_input_options(ugb, cfg, true, true);
  add_fan_options(ugb, cfg);
  auto* robust = app.add_subcommand("robust", "robustness of a toric ideal or of monomial-matrix minors");
  add_input_options(robust, cfg, true, true);
  add_fan_options(robust, cfg);
  robust->add_option("--monomial-matrix", cfg.monomial_matrix, "2 x n monomial matrix file (.mmat)")
      ->check(CLI::ExistingFile);
  auto* betti = app.add_subcommand("betti", "Betti table of a monomial ideal, or Betti robustness of a toric ideal");
  add_input_options(betti, cfg, true, true);
  add_fan_options(betti, cfg);
  betti->add_option("--mideal,--monomial-ideal", cfg.mideal, "monomial ideal file (.mideal)")->check(CLI::ExistingFile);
  betti->add_flag("--all-orders", "compare the tables of all initial ideals (the default for --ideal/--matrix)");
  betti->add_option_function<std::uint64_t>(
          "--sample",
          [&cfg](const std::uint64_t& k) {
            cfg.mode = "sample";
            cfg.samples = k;
          },
          "shorthand for --mode sample --samples K")
      ->check(CLI::PositiveNumber);
  auto* reproduce = app.add_subcommand("reproduce-paper", "run the reproduction suite and diff against golden files");
  reproduce->add_option("--data-dir", cfg.data_dir, "directory holding examples/ and golden/v1/");
  reproduce->add_flag("--quick", cfg.quick, "skip items that take minutes");
  reproduce->add_flag("--update-golden", cfg.update_golden, "rewrite the golden files instead of comparing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*toric) return run_toric(cfg);
    if (*graver) return run_graver(cfg);
    if (*ugb) return run_ugb(cfg);
    if (*robust) return run_robust(cfg);
    if (*betti) return run_betti(cfg);
    if (*reproduce) return run_reproduce(cfg);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
