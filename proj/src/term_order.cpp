#include "robusta/term_order.hpp"

#include "robusta/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace robusta {

namespace {

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

void check_permutation(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (auto v : perm) {
    if (v >= perm.size() || seen[v]) throw InvalidInput("term order permutation is not a permutation");
    seen[v] = true;
  }
}

} // namespace

TermOrder::TermOrder(std::vector<std::vector<std::int64_t>> rows, Tail tail, std::vector<std::size_t> perm)
    : rows_(std::move(rows)), tail_(tail), perm_(std::move(perm)) {
  check_permutation(perm_);
  for (const auto& r : rows_)
    if (r.size() != perm_.size()) throw InvalidInput("weight row length does not match variable count");
  if (tail_ == Tail::RevLex && rows_.empty())
    throw InvalidInput("reverse lex needs a preceding weight row to be a monomial order");
}

TermOrder TermOrder::lex(std::size_t n) { return lex(identity(n)); }

TermOrder TermOrder::lex(std::vector<std::size_t> perm) { return TermOrder({}, Tail::Lex, std::move(perm)); }

TermOrder TermOrder::grevlex(std::size_t n) { return grevlex(identity(n)); }

TermOrder TermOrder::grevlex(std::vector<std::size_t> perm) {
  const auto n = perm.size();
  return TermOrder({std::vector<std::int64_t>(n, 1)}, Tail::RevLex, std::move(perm));
}

TermOrder TermOrder::weighted_revlex(std::vector<std::int64_t> w, std::vector<std::size_t> perm) {
  return TermOrder({std::move(w)}, Tail::RevLex, std::move(perm));
}

TermOrder TermOrder::weight(std::vector<std::int64_t> w, const TermOrder& tiebreak) {
  auto rows = tiebreak.rows_;
  rows.insert(rows.begin(), std::move(w));
  return TermOrder(std::move(rows), tiebreak.tail_, tiebreak.perm_);
}

TermOrder TermOrder::weight(std::span<const mpq_class> w, const TermOrder& tiebreak) {
  mpz_class denom_lcm = 1;
  for (const auto& q : w) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> scaled;
  mpz_class g = 0;
  for (const auto& q : w) {
    mpz_class v = q.get_num() * (denom_lcm / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    scaled.push_back(v);
  }
  std::vector<std::int64_t> row;
  for (auto& v : scaled) {
    if (g != 0) v /= g;
    if (!v.fits_slong_p()) throw OverflowError("weight vector entry does not fit 64 bits");
    row.push_back(v.get_si());
  }
  return weight(std::move(row), tiebreak);
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  const auto n = perm_.size();
  if (a.size() != n || b.size() != n)
    throw InvalidInput("term order over " + std::to_string(n) + " variables applied to monomials of size " +
                       std::to_string(a.size()) + "/" + std::to_string(b.size()));
  for (const auto& row : rows_) {
    __int128 d = 0;
    for (std::size_t i = 0; i < n; ++i) d += static_cast<__int128>(row[i]) * (a[i] - b[i]);
    if (d > 0) return std::strong_ordering::greater;
    if (d < 0) return std::strong_ordering::less;
  }
  if (tail_ == Tail::Lex) {
    for (auto v : perm_) {
      if (a[v] != b[v]) return a[v] > b[v] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  } else {
    for (auto it = perm_.rbegin(); it != perm_.rend(); ++it) {
      const auto v = *it;
      if (a[v] != b[v]) return a[v] < b[v] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::string TermOrder::describe() const {
  std::ostringstream os;
  for (const auto& row : rows_) {
    os << "weight(";
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << ") ";
  }
  os << (tail_ == Tail::Lex ? "lex[" : "revlex[");
  for (std::size_t i = 0; i < perm_.size(); ++i) os << (i ? "," : "") << perm_[i];
  os << "]";
  return os.str();
}

const TermOrder& canonical_order(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<TermOrder>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<TermOrder>(TermOrder::grevlex(n));
  return *slot;
}

} // namespace robusta
