#include "saga/field.hpp"

#include <algorithm>
#include <cctype>

#include "saga/errors.hpp"

namespace saga {

namespace {

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!valid_integer(s)) fail(ErrorKind::ParseError, "bad integer '" + std::string(s) + "'");
  std::string text(s);
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

mpq_class parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return mpq_class(parse_integer(text));
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

Rationals::Element Rationals::inv(const Element& a) const {
  if (is_zero(a)) fail(ErrorKind::InvalidArgument, "division by zero");
  return Element(1) / a;
}

Rationals::Element Rationals::parse(std::string_view text) const { return parse_rational(text); }

Rationals::Element Rationals::random(Rng& rng) const { return small_random(rng, kSampleBound); }

Rationals::Element Rationals::small_random(Rng& rng, long bound) const {
  std::uniform_int_distribution<long> dist(-bound, bound);
  return Element(dist(rng));
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : p_(modulus) {
  if (modulus >= (1ULL << 32)) {
    fail(ErrorKind::InvalidArgument, "prime modulus must be below 2^32, got " + std::to_string(modulus));
  }
  if (!is_prime_u64(modulus)) {
    fail(ErrorKind::InvalidArgument, "modulus " + std::to_string(modulus) + " is not prime");
  }
}

PrimeField::Element PrimeField::from_int(long long v) const {
  long long m = static_cast<long long>(p_);
  long long r = v % m;
  if (r < 0) r += m;
  return {static_cast<std::uint32_t>(r)};
}

PrimeField::Element PrimeField::from_mpz(const mpz_class& v) const {
  mpz_class r = v % mpz_class(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  return {static_cast<std::uint32_t>(r.get_ui())};
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
  Element den = from_mpz(q.get_den());
  if (is_zero(den)) {
    fail(ErrorKind::InvalidArgument,
         "denominator of " + q.get_str() + " vanishes modulo " + std::to_string(p_));
  }
  return div(from_mpz(q.get_num()), den);
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const {
  return {static_cast<std::uint32_t>(powmod(a.value, e, p_))};
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a.value == 0) fail(ErrorKind::InvalidArgument, "division by zero");
  // extended Euclid on signed 64-bit values
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p_), new_r = a.value;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<long long>(p_);
  return {static_cast<std::uint32_t>(t)};
}

PrimeField::Element PrimeField::parse(std::string_view text) const {
  return from_rational(parse_rational(text));
}

PrimeField::Element PrimeField::random(Rng& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(0, p_ - 1);
  return {static_cast<std::uint32_t>(dist(rng))};
}

AnyField parse_field_descriptor(std::string_view text) {
  if (text == "Q") return Rationals{};
  if (text.starts_with("Fp:")) {
    auto digits = text.substr(3);
    if (digits.empty() || digits.size() > 19 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      fail(ErrorKind::ParseError, "bad modulus in field descriptor '" + std::string(text) + "'");
    }
    return PrimeField(std::stoull(std::string(digits)));
  }
  fail(ErrorKind::ParseError, "field must be Q or Fp:<prime>, got '" + std::string(text) + "'");
}

}  // namespace saga
