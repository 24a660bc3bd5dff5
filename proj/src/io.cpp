#include "robusta/io.hpp"

#include "robusta/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace robusta::io {

namespace {

std::string strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  std::string s(line.substr(0, hash));
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    auto s = strip_comment(line);
    if (!s.empty()) out.push_back(std::move(s));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::string remove_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::optional<VariableContext> vars_header(const std::string& line) {
  if (line.rfind("vars:", 0) != 0) return std::nullopt;
  std::istringstream in(line.substr(5));
  std::vector<std::string> names;
  for (std::string n; in >> n;) {
    if (!is_name_start(n[0]) || !std::all_of(n.begin(), n.end(), is_name_char))
      throw InvalidInput("invalid variable name '" + n + "'");
    names.push_back(n);
  }
  return VariableContext(std::move(names));
}

std::int32_t parse_exponent(std::string_view s, std::string_view whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InvalidInput("bad exponent in '" + std::string(whole) + "'");
  if (s.size() > 9) throw InvalidInput("exponent too large in '" + std::string(whole) + "'");
  const auto e = std::stol(std::string(s));
  if (e <= 0) throw InvalidInput("exponents must be positive in '" + std::string(whole) + "'");
  return static_cast<std::int32_t>(e);
}

/// Monomial body without spaces: factor ("*" factor)* or "1".
Monomial parse_monomial_body(const std::string& s, const VariableContext& ctx, std::string_view whole) {
  Monomial m(ctx.size());
  if (s == "1") return m;
  if (s.empty()) throw InvalidInput("missing monomial in '" + std::string(whole) + "'");
  std::size_t pos = 0;
  for (;;) {
    const auto star = s.find('*', pos);
    const auto factor = s.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    const auto caret = factor.find('^');
    const auto name = factor.substr(0, caret);
    if (name.empty() || !is_name_start(name[0]) || !std::all_of(name.begin(), name.end(), is_name_char))
      throw InvalidInput("bad factor '" + factor + "' in '" + std::string(whole) + "'");
    const auto idx = ctx.index_of(name);
    if (!idx) throw InvalidInput("unknown variable '" + name + "' in '" + std::string(whole) + "'");
    const std::int32_t e = caret == std::string::npos ? 1 : parse_exponent(factor.substr(caret + 1), whole);
    const std::int64_t total = std::int64_t{m[*idx]} + e;
    if (total > std::numeric_limits<std::int32_t>::max()) throw OverflowError("exponent overflow");
    m.set(*idx, static_cast<std::int32_t>(total));
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return m;
}

/// Term without spaces and without a leading sign: coefficient? monomial.
std::pair<mpq_class, Monomial> parse_term(const std::string& s, const VariableContext& ctx, std::string_view whole) {
  std::size_t k = 0;
  while (k < s.size() && (std::isdigit(static_cast<unsigned char>(s[k])) || s[k] == '/')) ++k;
  mpq_class c = 1;
  std::string rest = s.substr(k);
  if (k > 0) {
    try {
      c = mpq_class(s.substr(0, k));
    } catch (const std::exception&) {
      throw InvalidInput("bad coefficient in '" + std::string(whole) + "'");
    }
    c.canonicalize();
    if (c == 0) throw InvalidInput("zero coefficient in '" + std::string(whole) + "'");
    if (!rest.empty() && rest[0] == '*') rest.erase(0, 1);
    if (rest.empty()) rest = "1";
  }
  return {c, parse_monomial_body(rest, ctx, whole)};
}

} // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IntegerMatrix parse_matrix(std::string_view text) {
  std::string body;
  for (const auto& l : content_lines(text)) body += l + "\n";
  std::istringstream in(body);
  long rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows < 0 || cols <= 0) throw InvalidInput("matrix header must be 'rows cols'");
  IntegerMatrix A(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) {
      std::string tok;
      if (!(in >> tok)) throw InvalidInput("matrix has fewer entries than declared");
      try {
        A.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = mpz_class(tok);
      } catch (const std::exception&) {
        throw InvalidInput("bad matrix entry '" + tok + "'");
      }
    }
  std::string extra;
  if (in >> extra) throw InvalidInput("matrix has more entries than declared");
  return A;
}

Monomial parse_monomial(std::string_view text, const VariableContext& ctx) {
  return parse_monomial_body(remove_spaces(text), ctx, text);
}

ScaledBinomial parse_binomial(std::string_view text, const VariableContext& ctx) {
  auto s = remove_spaces(text);
  if (s.empty()) throw InvalidInput("empty binomial");
  int lead_sign = 1;
  if (s[0] == '-' || s[0] == '+') {
    lead_sign = s[0] == '-' ? -1 : 1;
    s.erase(0, 1);
  }
  const auto op = s.find_first_of("+-");
  if (op == std::string::npos) throw InvalidInput("binomial needs two terms: '" + std::string(text) + "'");
  if (s.find_first_of("+-", op + 1) != std::string::npos)
    throw InvalidInput("more than two terms in '" + std::string(text) + "'");
  auto [c1, m1] = parse_term(s.substr(0, op), ctx, text);
  auto [c2, m2] = parse_term(s.substr(op + 1), ctx, text);
  c1 *= lead_sign;
  if (s[op] == '-') c2 = -c2;
  return ScaledBinomial{c1, std::move(m1), c2, std::move(m2)};
}

BinomialIdeal parse_ideal(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw InvalidInput("ideal file is empty");
  auto ctx = vars_header(lines.front());
  if (!ctx) throw InvalidInput("ideal file must start with 'vars: ...'");
  std::vector<ScaledBinomial> gens;
  bool pure = true;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto b = parse_binomial(lines[i], *ctx);
    if (b.plus == b.minus) throw InvalidInput("binomial terms coincide: '" + lines[i] + "'");
    if (b.c_plus + b.c_minus != 0) pure = false;
    gens.push_back(std::move(b));
  }
  if (pure) {
    std::vector<Binomial> out;
    for (const auto& g : gens) out.push_back(Binomial::make(g.plus, g.minus));
    return BinomialIdeal(*ctx, std::move(out));
  }
  return rescale_normalize(*ctx, gens).ideal;
}

ParsedMonomialIdeal parse_monomial_ideal(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw InvalidInput("monomial ideal file is empty");
  auto ctx = vars_header(lines.front());
  if (!ctx) throw InvalidInput("monomial ideal file must start with 'vars: ...'");
  std::vector<Monomial> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) gens.push_back(parse_monomial(lines[i], *ctx));
  const auto n = ctx->size();
  return ParsedMonomialIdeal{std::move(*ctx), MonomialIdeal(n, std::move(gens))};
}

MonomialMatrix parse_monomial_matrix(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw InvalidInput("monomial matrix file is empty");
  std::optional<VariableContext> ctx = vars_header(lines.front());
  if (ctx) lines.erase(lines.begin());
  std::string body;
  for (const auto& l : lines) body += l + "\n";
  std::istringstream in(body);
  long rows = 0, n = 0;
  if (!(in >> rows >> n) || rows != 2 || n < 2) throw InvalidInput("monomial matrix header must be '2 n' with n >= 2");
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  if (tokens.size() != static_cast<std::size_t>(2 * n))
    throw InvalidInput("monomial matrix needs exactly " + std::to_string(2 * n) + " entries");
  if (!ctx) {
    std::set<std::string> names;
    for (const auto& t : tokens) {
      std::size_t pos = 0;
      for (;;) {
        const auto star = t.find('*', pos);
        auto f = t.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        f = f.substr(0, f.find('^'));
        if (f != "1" && !f.empty()) names.insert(f);
        if (star == std::string::npos) break;
        pos = star + 1;
      }
    }
    ctx = VariableContext(std::vector<std::string>(names.begin(), names.end()));
  }
  std::vector<Monomial> top, bottom;
  for (long k = 0; k < n; ++k) top.push_back(parse_monomial(tokens[static_cast<std::size_t>(k)], *ctx));
  for (long k = 0; k < n; ++k) bottom.push_back(parse_monomial(tokens[static_cast<std::size_t>(n + k)], *ctx));
  return MonomialMatrix(*ctx, std::move(top), std::move(bottom));
}

std::string format_ideal(const BinomialIdeal& I) {
  std::string out = "vars:";
  for (const auto& n : I.context().names()) out += " " + n;
  out += "\n";
  for (const auto& g : I.generators()) out += to_string(g, I.context()) + "\n";
  return out;
}

namespace {

Json exponents(const Monomial& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) a.push_back(m[i]);
  return a;
}

Json names(const VariableContext& ctx) {
  Json a = Json::array();
  for (const auto& n : ctx.names()) a.push_back(n);
  return a;
}

Json binomial_list(const std::vector<Binomial>& bs, const VariableContext& ctx) {
  Json a = Json::array();
  for (const auto& b : bs) a.push_back(to_json(b, ctx));
  return a;
}

} // namespace

Json to_json(const Binomial& b, const VariableContext& ctx) {
  Json j;
  j["plus"] = exponents(b.plus());
  j["minus"] = exponents(b.minus());
  j["text"] = to_string(b, ctx);
  return j;
}

Json to_json(const MarkedBinomial& b, const VariableContext& ctx) {
  Json j;
  j["lead"] = exponents(b.lead);
  j["trail"] = exponents(b.trail);
  j["text"] = to_string(b, ctx);
  return j;
}

Json to_json(const BinomialIdeal& I) {
  Json j;
  j["variables"] = names(I.context());
  j["generators"] = binomial_list(I.generators(), I.context());
  return j;
}

Json to_json(const MonomialIdeal& I, const VariableContext& ctx) {
  Json gens = Json::array();
  for (const auto& m : I.generators()) gens.push_back(to_string(m, ctx));
  return gens;
}

Json to_json(const BettiTable& T) {
  Json j;
  Json entries = Json::object();
  for (const auto& [key, v] : T.entries()) entries[std::to_string(key.first) + "," + std::to_string(key.second)] = v;
  j["entries"] = std::move(entries);
  j["totals"] = T.totals();
  j["projective_dimension"] = T.projective_dimension();
  j["regularity"] = T.regularity();
  return j;
}

Json to_json(const GraverBasis& G, const VariableContext& ctx) {
  Json j;
  j["variables"] = names(ctx);
  j["size"] = G.size();
  Json vs = Json::array();
  for (const auto& v : G.vectors) vs.push_back(v);
  j["vectors"] = std::move(vs);
  j["binomials"] = binomial_list(G.binomials(), ctx);
  return j;
}

Json to_json(const FanEnumeration& fan, const VariableContext& ctx) {
  Json j;
  j["variables"] = names(ctx);
  j["mode"] = to_string(fan.mode);
  j["exhaustive"] = fan.exhaustive;
  j["cells"] = fan.cells;
  j["graver_size"] = fan.graver_size;
  Json gbs = Json::array();
  for (const auto& g : fan.reduced_gbs) gbs.push_back(binomial_list(g, ctx));
  j["reduced_gbs"] = std::move(gbs);
  j["universal_gb"] = binomial_list(fan.universal_gb, ctx);
  Json ins = Json::array();
  for (const auto& c : fan.cones) {
    Json cone;
    cone["generators"] = to_json(c.initial, ctx);
    cone["weight"] = c.weight;
    ins.push_back(std::move(cone));
  }
  j["initial_ideals"] = std::move(ins);
  return j;
}

Json to_json(const RobustnessReport& r, const VariableContext& ctx) {
  Json j;
  j["robust"] = r.robust;
  j["mu"] = r.mu;
  j["ugb_size"] = r.ugb_size;
  j["graver_size"] = r.graver_size;
  j["redundant_elements"] = binomial_list(r.redundant_elements, ctx);
  j["lawrence_like"] = r.lawrence_like;
  j["graver_equals_mingens"] = r.graver_equals_mingens;
  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json vs = Json::array();
    for (auto v : c.variables) vs.push_back(ctx.name(v));
    comps.push_back(std::move(vs));
  }
  j["components"] = std::move(comps);
  j["minimal_generators"] = binomial_list(r.minimal_generators, ctx);
  j["universal_gb"] = binomial_list(r.universal_gb, ctx);
  j["reduced_gb_count"] = r.reduced_gb_count;
  j["initial_ideal_count"] = r.initial_ideal_count;
  j["exhaustive"] = r.exhaustive;
  return j;
}

Json to_json(const SetRobustness& r, const VariableContext& ctx) {
  Json j;
  j["robust"] = r.robust();
  j["universal"] = r.universal;
  j["minimal"] = r.minimal;
  j["markings"] = r.markings;
  j["failing_weight"] = r.failing_weight ? Json(*r.failing_weight) : Json(nullptr);
  j["redundant_elements"] = binomial_list(r.redundant_elements, ctx);
  return j;
}

Json document(std::string_view kind, Json payload) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  for (auto it = payload.begin(); it != payload.end(); ++it) j[it.key()] = it.value();
  return j;
}

} // namespace robusta::io
