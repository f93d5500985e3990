#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "saga/random.hpp"

namespace saga {

/// Interface shared by the two exact scalar backends.  Elements are plain
/// values; every operation goes through the field object, which for prime
/// fields carries the modulus.
template <class F>
concept ExactField = std::copy_constructible<F> && std::equality_comparable<F> &&
    requires(const F& K, const typename F::Element& a, Rng& rng, long long i,
             const mpq_class& q, std::string_view text) {
      { K.zero() } -> std::same_as<typename F::Element>;
      { K.one() } -> std::same_as<typename F::Element>;
      { K.from_int(i) } -> std::same_as<typename F::Element>;
      { K.from_rational(q) } -> std::same_as<typename F::Element>;
      { K.add(a, a) } -> std::same_as<typename F::Element>;
      { K.sub(a, a) } -> std::same_as<typename F::Element>;
      { K.mul(a, a) } -> std::same_as<typename F::Element>;
      { K.neg(a) } -> std::same_as<typename F::Element>;
      { K.inv(a) } -> std::same_as<typename F::Element>;
      { K.div(a, a) } -> std::same_as<typename F::Element>;
      { K.is_zero(a) } -> std::same_as<bool>;
      { K.equal(a, a) } -> std::same_as<bool>;
      { K.is_negative(a) } -> std::same_as<bool>;
      { K.format(a) } -> std::same_as<std::string>;
      { K.parse(text) } -> std::same_as<typename F::Element>;
      { K.random(rng) } -> std::same_as<typename F::Element>;
      { K.sample_space_size() } -> std::same_as<mpz_class>;
      { K.characteristic() } -> std::same_as<std::uint64_t>;
      { K.descriptor() } -> std::same_as<std::string>;
    };

/// Exact rationals.  GMP keeps every value in lowest terms with a positive
/// denominator.
class Rationals {
 public:
  using Element = mpq_class;

  /// Half-width of the integer box used for Schwartz-Zippel sampling.
  static constexpr long kSampleBound = 1'000'000;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long long v) const { return Element(static_cast<long>(v)); }
  Element from_rational(const mpq_class& q) const { return q; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }

  std::string format(const Element& a) const { return a.get_str(); }
  /// Accepts "p" or "p/q" with an optional leading sign.
  Element parse(std::string_view text) const;

  Element random(Rng& rng) const;
  /// Uniform integer in [-bound, bound]; used for instance generation.
  Element small_random(Rng& rng, long bound) const;
  mpz_class sample_space_size() const { return mpz_class(2 * kSampleBound + 1); }

  std::uint64_t characteristic() const { return 0; }
  std::string descriptor() const { return "Q"; }

  friend bool operator==(const Rationals&, const Rationals&) = default;
};

struct Residue {
  std::uint32_t value = 0;
  friend bool operator==(Residue, Residue) = default;
};

/// Prime field Z/pZ with p < 2^32 so that products fit in 64 bits.
class PrimeField {
 public:
  using Element = Residue;

  static constexpr std::uint64_t kDefaultModulus = 2147483629ULL;

  explicit PrimeField(std::uint64_t modulus = kDefaultModulus);

  std::uint64_t modulus() const { return p_; }

  Element zero() const { return {0}; }
  Element one() const { return {1}; }
  Element from_int(long long v) const;
  Element from_mpz(const mpz_class& v) const;
  Element from_rational(const mpq_class& q) const;

  Element add(Element a, Element b) const {
    std::uint64_t s = std::uint64_t{a.value} + b.value;
    return {static_cast<std::uint32_t>(s >= p_ ? s - p_ : s)};
  }
  Element sub(Element a, Element b) const {
    return {static_cast<std::uint32_t>(a.value >= b.value ? a.value - b.value
                                                          : a.value + p_ - b.value)};
  }
  Element mul(Element a, Element b) const {
    return {static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p_)};
  }
  Element neg(Element a) const {
    return {static_cast<std::uint32_t>(a.value == 0 ? 0 : p_ - a.value)};
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;

  bool is_zero(Element a) const { return a.value == 0; }
  bool equal(Element a, Element b) const { return a == b; }
  /// Residues above p/2 print as negatives so small integers read naturally.
  bool is_negative(Element a) const { return a.value > p_ / 2; }

  std::string format(Element a) const { return std::to_string(a.value); }
  Element parse(std::string_view text) const;

  Element random(Rng& rng) const;
  Element small_random(Rng& rng, long) const { return random(rng); }
  mpz_class sample_space_size() const { return mpz_class(static_cast<unsigned long>(p_)); }

  std::uint64_t characteristic() const { return p_; }
  std::string descriptor() const { return "Fp:" + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Either backend, selected at run time from a descriptor "Q" or "Fp:<p>".
using AnyField = std::variant<Rationals, PrimeField>;

AnyField parse_field_descriptor(std::string_view text);

static_assert(ExactField<Rationals>);
static_assert(ExactField<PrimeField>);

}  // namespace saga
