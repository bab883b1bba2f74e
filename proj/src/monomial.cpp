#include "tspread/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "tspread/binomial.hpp"
#include "tspread/errors.hpp"

namespace tspread {

namespace {

void require_same_ambient(const Monomial& a, const Monomial& b) {
  if (a.ambient_n() != b.ambient_n())
    throw PreconditionError("ambient_mismatch", "monomials live in rings with " + std::to_string(a.ambient_n()) +
                                                    " and " + std::to_string(b.ambient_n()) + " variables");
}

}  // namespace

void validate(const Params& p) {
  if (p.n < 1) throw PreconditionError("n_positive", "n = " + std::to_string(p.n));
  if (p.d < 1) throw PreconditionError("d_positive", "d = " + std::to_string(p.d));
  if (p.t < 0) throw PreconditionError("t_nonnegative", "t = " + std::to_string(p.t));
}

Monomial::Monomial(int ambient_n) {
  if (ambient_n < 0) throw PreconditionError("n_positive", "ambient ring size " + std::to_string(ambient_n));
  exps_.assign(static_cast<std::size_t>(ambient_n), 0);
}

Monomial::Monomial(int ambient_n, std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  if (static_cast<int>(exps_.size()) != ambient_n)
    throw PreconditionError("exponent_length", "expected " + std::to_string(ambient_n) + " exponents, got " +
                                                   std::to_string(exps_.size()));
}

Monomial Monomial::from_indices(int ambient_n, const std::vector<int>& indices) {
  Monomial m(ambient_n);
  for (int i : indices) {
    if (i < 1 || i > ambient_n)
      throw PreconditionError("variable_in_range",
                              "x" + std::to_string(i) + " is not a variable of a ring with " +
                                  std::to_string(ambient_n) + " variables");
    ++m.exps_[static_cast<std::size_t>(i - 1)];
  }
  return m;
}

int Monomial::degree() const noexcept {
  return static_cast<int>(std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0}));
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::vector<int> Monomial::indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    for (Exponent k = 0; k < exps_[i]; ++k) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) out.push_back(static_cast<int>(i) + 1);
  return out;
}

int Monomial::min_index() const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) return static_cast<int>(i) + 1;
  return 0;
}

int Monomial::max_index() const noexcept {
  for (std::size_t i = exps_.size(); i-- > 0;)
    if (exps_[i] > 0) return static_cast<int>(i) + 1;
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ambient(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same_ambient(*this, other);
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_ambient(*this, other);
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::times_var(int i) const {
  if (i < 1 || i > ambient_n())
    throw PreconditionError("variable_in_range", "x" + std::to_string(i) + " out of range");
  Monomial r = *this;
  ++r.exps_[static_cast<std::size_t>(i - 1)];
  return r;
}

Monomial Monomial::div_var(int i) const {
  if (i < 1 || i > ambient_n() || exps_[static_cast<std::size_t>(i - 1)] == 0)
    throw PreconditionError("variable_divides", "x" + std::to_string(i) + " does not divide " + to_string());
  Monomial r = *this;
  --r.exps_[static_cast<std::size_t>(i - 1)];
  return r;
}

Monomial Monomial::with_ambient(int ambient_n) const {
  if (max_index() > ambient_n)
    throw PreconditionError("variable_in_range", to_string() + " does not live in a ring with " +
                                                     std::to_string(ambient_n) + " variables");
  Monomial r(ambient_n);
  std::copy_n(exps_.begin(), std::min<std::size_t>(exps_.size(), r.exps_.size()), r.exps_.begin());
  return r;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (exps_[i] > 1) {
      out += '^';
      out += std::to_string(exps_[i]);
    }
  }
  return out.empty() ? "1" : out;
}

Monomial Monomial::parse(std::string_view text, int ambient_n) {
  auto fail = [&](const std::string& why) -> PreconditionError {
    return PreconditionError("monomial_syntax", "'" + std::string(text) + "': " + why);
  };
  auto read_int = [&](std::string_view s) {
    unsigned long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) throw fail("expected a number, got '" + std::string(s) + "'");
    return value;
  };

  // Surrounding whitespace is tolerated; inner whitespace is not.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  Monomial m(ambient_n);
  if (text == "1") return m;
  if (text.empty()) throw fail("empty monomial");

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t star = text.find('*', pos);
    const std::string_view factor = text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
    if (factor.size() < 2 || factor.front() != 'x') throw fail("factor '" + std::string(factor) + "' is not of the form x<i>[^<e>]");
    const std::size_t caret = factor.find('^');
    const unsigned long var = read_int(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1));
    const unsigned long exp = caret == std::string_view::npos ? 1 : read_int(factor.substr(caret + 1));
    if (var < 1 || var > static_cast<unsigned long>(ambient_n))
      throw PreconditionError("variable_in_range", "x" + std::to_string(var) + " is not a variable of a ring with " +
                                                       std::to_string(ambient_n) + " variables");
    if (exp == 0) throw fail("zero exponent");
    m.exps_[var - 1] += static_cast<Exponent>(exp);
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return m;
}

std::strong_ordering cmp_lex(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] != eb[i]) return ea[i] <=> eb[i];
  return std::strong_ordering::equal;
}

std::strong_ordering cmp_slex(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  if (a.degree() != b.degree())
    throw PreconditionError("equal_degree", a.to_string() + " and " + b.to_string() + " differ in degree");
  const auto ia = a.indices();
  const auto ib = b.indices();
  for (std::size_t s = 0; s < ia.size(); ++s)
    if (ia[s] != ib[s]) return ib[s] <=> ia[s];
  return std::strong_ordering::equal;
}

bool is_tspread(const Monomial& m, int t) {
  const auto idx = m.indices();
  for (std::size_t j = 0; j + 1 < idx.size(); ++j)
    if (idx[j + 1] - idx[j] < t) return false;
  return true;
}

bool in_set(const Monomial& m, const Params& p) {
  return m.ambient_n() == p.n && m.degree() == p.d && is_tspread(m, p.t);
}

std::pair<Monomial, Monomial> extremes(const Params& p) {
  validate(p);
  if (!p.admissible())
    throw PreconditionError("set_nonempty", "M(" + std::to_string(p.n) + "," + std::to_string(p.d) + "," +
                                                std::to_string(p.t) + ") is empty");
  std::vector<int> top(static_cast<std::size_t>(p.d));
  std::vector<int> bottom(static_cast<std::size_t>(p.d));
  for (int j = 0; j < p.d; ++j) {
    top[static_cast<std::size_t>(j)] = 1 + j * p.t;
    bottom[static_cast<std::size_t>(j)] = p.n - (p.d - 1 - j) * p.t;
  }
  return {Monomial::from_indices(p.n, top), Monomial::from_indices(p.n, bottom)};
}

std::uint64_t cardinality(const Params& p) {
  validate(p);
  if (!p.admissible()) return 0;
  return binomial(static_cast<std::int64_t>(p.n) - static_cast<std::int64_t>(p.d - 1) * (p.t - 1), p.d);
}

namespace {

void require_member(const Monomial& u, const Params& p) {
  validate(p);
  if (!in_set(u, p))
    throw PreconditionError("tspread_member", u.to_string() + " is not in M(" + std::to_string(p.n) + "," +
                                                  std::to_string(p.d) + "," + std::to_string(p.t) + ")");
}

}  // namespace

GapProfile gap_profile(const Monomial& u, const Params& p) {
  require_member(u, p);
  const auto idx = u.indices();
  GapProfile out;
  for (int j = 1; j < p.d; ++j) {
    const int w = idx[static_cast<std::size_t>(j)] - idx[static_cast<std::size_t>(j - 1)] - p.t;
    if (w > 0) out.push_back({j, w});
  }
  const int tail = p.n - idx.back();
  if (tail > 0) out.push_back({p.d, tail});
  return out;
}

std::optional<Monomial> slex_successor(const Monomial& u, const Params& p) {
  const GapProfile gaps = gap_profile(u, p);
  if (gaps.empty()) return std::nullopt;
  const int pos = gaps.back().position;
  auto idx = u.indices();
  int next = idx[static_cast<std::size_t>(pos - 1)] + 1;
  for (int j = pos; j <= p.d; ++j, next += p.t) idx[static_cast<std::size_t>(j - 1)] = next;
  return Monomial::from_indices(p.n, idx);
}

std::vector<Monomial> enumerate(const Params& p) {
  validate(p);
  std::vector<Monomial> out;
  if (!p.admissible()) return out;
  out.reserve(static_cast<std::size_t>(cardinality(p)));
  std::optional<Monomial> cur = extremes(p).first;
  while (cur) {
    out.push_back(*cur);
    cur = slex_successor(*cur, p);
  }
  return out;
}

Monomial shift_sigma(const Monomial& m, int s) {
  if (s < 0) throw PreconditionError("shift_nonnegative", "s = " + std::to_string(s));
  auto idx = m.indices();
  const int d = static_cast<int>(idx.size());
  if (d == 0) return m;
  for (int j = 0; j < d; ++j) idx[static_cast<std::size_t>(j)] += j * s;
  return Monomial::from_indices(m.ambient_n() + (d - 1) * s, idx);
}

Monomial shift_tau(const Monomial& m, int s) {
  if (s < 0) throw PreconditionError("shift_nonnegative", "s = " + std::to_string(s));
  auto idx = m.indices();
  const int d = static_cast<int>(idx.size());
  if (d == 0) return m;
  for (std::size_t j = 0; j + 1 < idx.size(); ++j)
    if (idx[j + 1] - idx[j] < s)
      throw PreconditionError("shift_in_range", "tau^" + std::to_string(s) + " is undefined on " + m.to_string() +
                                                    " (consecutive indices closer than " + std::to_string(s) + ")");
  for (int j = 0; j < d; ++j) idx[static_cast<std::size_t>(j)] -= j * s;
  return Monomial::from_indices(m.ambient_n() - (d - 1) * s, idx);
}

}  // namespace tspread
