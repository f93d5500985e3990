#include "saga/monomial.hpp"

#include <algorithm>
#include <set>

#include "saga/errors.hpp"

namespace saga {

namespace {

void check_exponent(unsigned value) {
  if (value > 255) fail(ErrorKind::InvalidArgument, "exponent exceeds 255");
}

void enumerate(std::size_t nvars, std::size_t var, unsigned remaining,
               std::array<unsigned, kMaxVariables>& current, std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    current[var] = remaining;
    out.emplace_back(std::span<const unsigned>(current.data(), nvars));
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current[var] = e;
    enumerate(nvars, var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables) {
    fail(ErrorKind::InvalidArgument, "too many variables for a monomial");
  }
  unsigned total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    check_exponent(exponents[i]);
    exponents_[i] = static_cast<std::uint8_t>(exponents[i]);
    total += exponents[i];
  }
  degree_ = static_cast<std::uint16_t>(total);
}

Monomial Monomial::variable(std::size_t index, unsigned exponent) {
  if (index >= kMaxVariables) fail(ErrorKind::InvalidArgument, "variable index out of range");
  check_exponent(exponent);
  Monomial m;
  m.exponents_[index] = static_cast<std::uint8_t>(exponent);
  m.degree_ = static_cast<std::uint16_t>(exponent);
  return m;
}

std::size_t Monomial::support_end() const {
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (exponents_[i] != 0) return i + 1;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned{exponents_[i]} + other.exponents_[i];
    check_exponent(e);
    r.exponents_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exponents_[i] = static_cast<std::uint8_t>(exponents_[i] - other.exponents_[i]);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ - other.degree_);
  return r;
}

Monomial Monomial::times_variable(std::size_t index) const {
  Monomial r = *this;
  check_exponent(unsigned{r.exponents_[index]} + 1);
  ++r.exponents_[index];
  ++r.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  unsigned total = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exponents_[i] = std::max(exponents_[i], other.exponents_[i]);
    total += r.exponents_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(total);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exponents_[i] != 0 && other.exponents_[i] != 0) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (a.exponents_[i] != b.exponents_[i]) return b.exponents_[i] <=> a.exponents_[i];
  }
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : exponents_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<Monomial> monomial_basis(std::size_t n, unsigned degree) {
  std::size_t nvars = n + 1;
  if (nvars > kMaxVariables) fail(ErrorKind::InvalidArgument, "too many variables");
  std::vector<Monomial> out;
  std::array<unsigned, kMaxVariables> current{};
  enumerate(nvars, 0, degree, current, out);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t multinomial(const Monomial& m) {
  std::uint64_t r = 1;
  unsigned seen = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    seen += m[i];
    r *= binomial(seen, m[i]);
  }
  return r;
}

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) fail(ErrorKind::InvalidArgument, "a variable context needs at least one variable");
  if (names_.size() > kMaxVariables) fail(ErrorKind::InvalidArgument, "too many variables");
  std::set<std::string> seen;
  for (const auto& s : names_) {
    if (s.empty()) fail(ErrorKind::InvalidArgument, "empty variable name");
    if (!seen.insert(s).second) fail(ErrorKind::InvalidArgument, "duplicate variable name " + s);
  }
}

VariableContext VariableContext::ring(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return VariableContext(std::move(names));
}

VariableContext VariableContext::dual(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i) names.push_back("w" + std::to_string(i));
  return VariableContext(std::move(names));
}

std::size_t VariableContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return names_.size();
}

VariableContext VariableContext::extended(std::string name) const {
  auto names = names_;
  names.push_back(std::move(name));
  return VariableContext(std::move(names));
}

std::string format_monomial(const Monomial& m, const VariableContext& ctx) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace saga
