#include "robusta/monomial.hpp"

#include "robusta/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace robusta {

namespace {

Exponent checked_exponent(std::int64_t v) {
  if (v < 0 || v > std::numeric_limits<Exponent>::max())
    throw OverflowError("exponent out of range: " + std::to_string(v));
  return static_cast<Exponent>(v);
}

void require_same_size(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    throw InvalidInput("monomials from different contexts (" + std::to_string(a.size()) +
                       " vs " + std::to_string(b.size()) + " variables)");
}

} // namespace

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InvalidInput("variable context must not be empty");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InvalidInput("empty variable name");
    if (!seen.insert(n).second) throw InvalidInput("duplicate variable name '" + n + "'");
  }
}

VariableContext VariableContext::numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return VariableContext(std::move(names));
}

std::optional<std::size_t> VariableContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

VariableContext VariableContext::prefix(std::size_t k) const {
  if (k > names_.size()) throw InvalidInput("prefix longer than context");
  VariableContext out;
  out.names_.assign(names_.begin(), names_.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

VariableContext VariableContext::subset(std::span<const std::size_t> indices) const {
  VariableContext out;
  for (auto i : indices) out.names_.push_back(names_.at(i));
  return out;
}

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (auto e : exps_)
    if (e < 0) throw InvalidInput("negative exponent in monomial");
}

void Monomial::set(std::size_t i, Exponent e) {
  if (e < 0) throw InvalidInput("negative exponent in monomial");
  exps_.at(i) = e;
}

std::int64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::int64_t{0});
}

std::int64_t Monomial::weighted_degree(std::span<const std::int64_t> weights) const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) d += weights[i] * exps_[i];
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) s.push_back(i);
  return s;
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) mask |= std::uint64_t{1} << std::min<std::size_t>(i, 63);
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out.exps_[i] = checked_exponent(std::int64_t{a.exps_[i]} + b.exps_[i]);
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b.exps_[i] > a.exps_[i]) throw InvalidInput("monomial division is not exact");
    out.exps_[i] = a.exps_[i] - b.exps_[i];
  }
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw InvalidInput("lcm of monomials from different contexts");
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw InvalidInput("gcd of monomials from different contexts");
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Exponent exponent_of(const Monomial& m, std::size_t var) { return m[var]; }

Monomial positive_part(std::span<const std::int64_t> u) {
  std::vector<Exponent> e(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) e[i] = u[i] > 0 ? checked_exponent(u[i]) : 0;
  return Monomial(std::move(e));
}

Monomial negative_part(std::span<const std::int64_t> u) {
  std::vector<Exponent> e(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) e[i] = u[i] < 0 ? checked_exponent(-u[i]) : 0;
  return Monomial(std::move(e));
}

std::string to_string(const Monomial& m, const VariableContext& ctx) {
  if (m.size() != ctx.size()) throw InvalidInput("monomial does not match context");
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

} // namespace robusta
