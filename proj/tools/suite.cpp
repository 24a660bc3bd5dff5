#include "suite.hpp"

#include "robusta/errors.hpp"
#include "robusta/graver.hpp"
#include "robusta/groebner.hpp"
#include "robusta/lattice.hpp"

#include <algorithm>

namespace robusta::suite {

namespace {

namespace fs = std::filesystem;
using io::Json;

BinomialIdeal matrix_ideal(const fs::path& file, const Budgets& budgets = {}) {
  const auto A = io::parse_matrix(io::read_file(file));
  return toric_from_matrix(A, default_context(A.cols()), budgets);
}

std::vector<Binomial> sorted(std::vector<Binomial> v) {
  canonicalize(v);
  return v;
}

std::vector<Binomial> parse_set(const VariableContext& ctx, std::initializer_list<const char*> texts) {
  std::vector<Binomial> out;
  for (const char* t : texts) {
    const auto b = io::parse_binomial(t, ctx);
    out.push_back(Binomial::make(b.plus, b.minus));
  }
  return sorted(std::move(out));
}

bool strict_superset(const std::vector<Binomial>& big, const std::vector<Binomial>& small) {
  return big.size() > small.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

FanOptions cells(unsigned threads) {
  FanOptions o;
  o.threads = threads;
  return o;
}

Outcome m4x6_toric(const fs::path& ex, unsigned) {
  const auto I = matrix_ideal(ex / "m4x6.mat");
  const auto expected = parse_set(I.context(), {"b^2*e - a^2*f", "b*c^2 - a*d*f", "a*c^2 - b*d*e", "c^4 - d^2*e*f"});
  return {io::to_json(I), sorted(I.generators()) == expected};
}

Outcome m4x6_robust(const fs::path& ex, unsigned threads) {
  const auto I = matrix_ideal(ex / "m4x6.mat");
  const auto r = robust_check(I, cells(threads));
  return {io::to_json(r, I.context()), r.robust && r.mu == 4 && r.ugb_size == 4 && !r.lawrence_like};
}

Outcome m4x6_graver(const fs::path& ex, unsigned) {
  const auto A = io::parse_matrix(io::read_file(ex / "m4x6.mat"));
  const auto L = kernel_lattice(A);
  const auto G = graver_basis(L);
  auto j = io::to_json(G, default_context(A.cols()));
  j["lawrence_like"] = is_lawrence_lattice(L);
  return {j, G.size() > 4};
}

Outcome chain(const fs::path& ex, unsigned threads) {
  const auto I = io::parse_ideal(io::read_file(ex / "chain.ideal"));
  const auto r = robust_check(I, cells(threads));
  const auto fan = enumerate_fan(I, cells(threads));
  Json mus = Json::array();
  bool all_two = !fan.cones.empty();
  for (const auto& c : fan.cones) {
    mus.push_back(c.initial.size());
    all_two = all_two && c.initial.size() == 2;
  }
  auto j = io::to_json(r, I.context());
  j["initial_ideal_mu"] = std::move(mus);
  return {j, !r.robust && r.ugb_size == 3 && r.mu == 2 && all_two};
}

Outcome generic_minors(const fs::path& ex, unsigned threads, int rows, int cols) {
  const auto I = matrix_ideal(ex / ("generic" + std::to_string(rows) + "x" + std::to_string(cols) + ".mat"));
  const auto r = robust_check(I, cells(threads));
  const auto ugb = sorted(r.universal_gb);
  const auto gens = sorted(I.generators());
  const std::size_t pairs = static_cast<std::size_t>(rows * (rows - 1) / 2) * static_cast<std::size_t>(cols * (cols - 1) / 2);
  const bool claim = rows == 2 ? (r.robust && ugb == gens && gens.size() == pairs)
                               : (!r.robust && gens.size() == pairs && strict_superset(ugb, gens));
  return {io::to_json(r, I.context()), claim};
}

Outcome lex_sweep(const fs::path& ex, unsigned threads, const char* file) {
  const auto I = matrix_ideal(ex / file);
  const auto lex = union_of(lex_orders_sweep(I));
  const auto ugb = universal_gb(I, cells(threads));
  Json j;
  j["variables"] = io::to_json(I)["variables"];
  j["lex_union_size"] = lex.size();
  j["universal_gb_size"] = ugb.size();
  return {j, lex == ugb};
}

Outcome monomial_matrix(const fs::path& ex, const char* file) {
  const auto A = io::parse_monomial_matrix(io::read_file(ex / file));
  const auto minors = minors_of_monomial_matrix(A);
  const auto c = coprimality_criterion(A);
  const auto s = robust_set_check(minors.minors);
  Json j;
  j["minors"] = io::to_json(minors.minors);
  j["coprime"] = c.coprime;
  j["witness"] = c.witness_label;
  j["set_robustness"] = io::to_json(s, minors.minors.context());
  return {j, s.robust() == c.coprime};
}

Outcome betti_minors(const fs::path& ex, unsigned threads, int cols) {
  const auto I = matrix_ideal(ex / ("generic2x" + std::to_string(cols) + ".mat"));
  const auto b = betti_robustness_check(I, cells(threads));
  bool claim = b.robust_betti && b.exhaustive && b.tables.size() == 1;
  for (const auto& cone : b.fan.cones) {
    claim = claim && cone.initial.is_squarefree();
    const auto p = resolution_predicates(b.tables.front(), static_cast<std::size_t>(cols - 1), cone.initial);
    claim = claim && p.linear && p.cohen_macaulay && p.squarefree;
  }
  claim = claim && b.tables.front().projective_dimension() == cols - 1;
  Json j;
  j["initial_ideals"] = b.initial_ideals;
  j["robust_betti"] = b.robust_betti;
  j["table"] = io::to_json(b.tables.front());
  return {j, claim};
}

BinomialIdeal lawrence2x5_ideal(const fs::path& ex) {
  const auto A = io::parse_matrix(io::read_file(ex / "curve2x5.mat"));
  return toric_ideal(lawrence_lift(kernel_lattice(A)), lawrence_context(A.cols()));
}

Outcome lawrence2x5_graver(const fs::path& ex, unsigned) {
  const auto I = lawrence2x5_ideal(ex);
  const auto G = graver_basis(ideal_lattice(I));
  const auto mingens = sorted(minimal_generators(I).generators);
  Json j;
  j["ideal"] = io::to_json(I);
  j["mu"] = mingens.size();
  j["graver_size"] = G.size();
  return {j, sorted(G.binomials()) == mingens};
}

Outcome lawrence2x5_betti(const fs::path& ex, unsigned threads) {
  const auto I = lawrence2x5_ideal(ex);
  FanOptions o;
  o.mode = FanMode::Sample;
  o.samples = 50;
  o.seed = 1;
  o.threads = threads;
  const auto b = betti_robustness_check(I, o, true);
  Json j;
  j["samples"] = o.samples;
  j["seed"] = o.seed;
  j["initial_ideals"] = b.initial_ideals;
  j["robust_betti"] = b.robust_betti;
  Json tables = Json::array();
  for (std::size_t k = 0; k < b.tables.size(); ++k) {
    Json t = io::to_json(b.tables[k]);
    t["weight"] = b.fan.cones[b.representatives[k]].weight;
    tables.push_back(std::move(t));
  }
  j["tables"] = std::move(tables);
  return {j, !b.robust_betti && b.tables.size() >= 2};
}

} // namespace

std::vector<Item> items() {
  std::vector<Item> v;
  v.push_back({"m4x6-toric", "toric ideal has the 4 listed generators", false, m4x6_toric});
  v.push_back({"m4x6-robust", "robust, mu = |UGB| = 4, not Lawrence", false, m4x6_robust});
  v.push_back({"m4x6-graver", "Graver basis larger than 4", false, m4x6_graver});
  v.push_back({"chain-xyz", "not robust, |UGB| = 3, every initial ideal has 2 generators", false, chain});
  for (int n : {3, 4, 5})
    v.push_back({"minors-2x" + std::to_string(n), "UGB equals the 2x2 minors", false,
                 [n](const fs::path& ex, unsigned t) { return generic_minors(ex, t, 2, n); }});
  v.push_back({"minors-3x3", "UGB strictly contains the 2x2 minors", false,
               [](const fs::path& ex, unsigned t) { return generic_minors(ex, t, 3, 3); }});
  v.push_back({"minors-3x4", "UGB strictly contains the 2x2 minors", true,
               [](const fs::path& ex, unsigned t) { return generic_minors(ex, t, 3, 4); }});
  v.push_back({"lex-2x3", "union over lex orders equals UGB", false,
               [](const fs::path& ex, unsigned t) { return lex_sweep(ex, t, "generic2x3.mat"); }});
  v.push_back({"lex-2x4", "union over lex orders equals UGB", false,
               [](const fs::path& ex, unsigned t) { return lex_sweep(ex, t, "generic2x4.mat"); }});
  v.push_back({"coprime-2x3", "minors robust iff entries pairwise coprime", false,
               [](const fs::path& ex, unsigned) { return monomial_matrix(ex, "coprime2x3.mmat"); }});
  v.push_back({"planted-2x3", "minors robust iff entries pairwise coprime", false,
               [](const fs::path& ex, unsigned) { return monomial_matrix(ex, "planted2x3.mmat"); }});
  v.push_back({"planted-2x4", "minors robust iff entries pairwise coprime", false,
               [](const fs::path& ex, unsigned) { return monomial_matrix(ex, "planted2x4.mmat"); }});
  for (int n : {3, 4})
    v.push_back({"betti-2x" + std::to_string(n), "one linear squarefree Betti table, pdim = n - 1", false,
                 [n](const fs::path& ex, unsigned t) { return betti_minors(ex, t, n); }});
  v.push_back({"lawrence2x5-graver", "minimal generators coincide with the Graver basis", false, lawrence2x5_graver});
  v.push_back({"lawrence2x5-betti", "two sampled initial ideals with different Betti tables", false, lawrence2x5_betti});
  return v;
}

} // namespace robusta::suite
