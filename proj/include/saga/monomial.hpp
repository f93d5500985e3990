#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace saga {

/// Hard cap on the number of variables of any polynomial ring the engine
/// builds (ring variables, dual variables and one Rabinowitsch variable).
inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector with cached total degree.  Unused slots are zero, so
/// comparison does not need to know the ring size.
///
/// The order is graded reverse lexicographic with x0 > x1 > ... : higher
/// total degree wins, ties are broken by the last differing exponent, the
/// smaller one being the larger monomial.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t index, unsigned exponent = 1);

  unsigned operator[](std::size_t i) const { return exponents_[i]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Largest variable index with nonzero exponent (+1), 0 for the unit.
  std::size_t support_end() const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; the caller guarantees divides(other, *this).
  Monomial operator/(const Monomial& other) const;
  Monomial times_variable(std::size_t index) const;

  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVariables> exponents_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of degree `degree` in `n + 1` variables, largest first.
std::vector<Monomial> monomial_basis(std::size_t n, unsigned degree);

/// Binomial coefficient as an unsigned 64-bit integer (small arguments only).
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Multinomial coefficient deg(m)! / prod(m_i!).
std::uint64_t multinomial(const Monomial& m);

/// Names of the variables of a polynomial ring.  Ring-side contexts use
/// x0..xn, dual-side contexts use w0..wn.
class VariableContext {
 public:
  explicit VariableContext(std::vector<std::string> names);

  static VariableContext ring(std::size_t n);
  static VariableContext dual(std::size_t n);

  /// Number of variables (n + 1 in the ring-side convention).
  std::size_t size() const { return names_.size(); }
  std::size_t n() const { return names_.size() - 1; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of `name`, or size() when absent.
  std::size_t index_of(std::string_view name) const;

  /// Same context with one more variable appended.
  VariableContext extended(std::string name) const;

  friend bool operator==(const VariableContext&, const VariableContext&) = default;

 private:
  std::vector<std::string> names_;
};

std::string format_monomial(const Monomial& m, const VariableContext& ctx);

}  // namespace saga

template <>
struct std::hash<saga::Monomial> {
  std::size_t operator()(const saga::Monomial& m) const { return m.hash(); }
};
