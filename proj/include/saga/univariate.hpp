#pragma once

#include <algorithm>
#include <type_traits>
#include <vector>

#include "saga/errors.hpp"
#include "saga/field.hpp"
#include "saga/random.hpp"

namespace saga {

/// Dense univariate polynomials, coefficient i multiplying t^i.
namespace univariate {

template <ExactField F>
using Poly = std::vector<typename F::Element>;

template <ExactField F>
void trim(const F& K, Poly<F>& a) {
  while (!a.empty() && K.is_zero(a.back())) a.pop_back();
}

/// -1 for the zero polynomial.
template <ExactField F>
int degree(const F& K, Poly<F> a) {
  trim(K, a);
  return static_cast<int>(a.size()) - 1;
}

template <ExactField F>
typename F::Element evaluate(const F& K, const Poly<F>& a, const typename F::Element& t) {
  auto acc = K.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = K.add(K.mul(acc, t), a[i]);
  return acc;
}

template <ExactField F>
Poly<F> mod(const F& K, Poly<F> a, Poly<F> b) {
  trim(K, a);
  trim(K, b);
  if (b.empty()) return a;
  auto lead_inv = K.inv(b.back());
  while (a.size() >= b.size()) {
    auto factor = K.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = K.sub(a[shift + i], K.mul(factor, b[i]));
    trim(K, a);
  }
  return a;
}

template <ExactField F>
Poly<F> monic(const F& K, Poly<F> a) {
  trim(K, a);
  if (a.empty()) return a;
  auto inv = K.inv(a.back());
  for (auto& c : a) c = K.mul(c, inv);
  return a;
}

template <ExactField F>
Poly<F> gcd(const F& K, Poly<F> a, Poly<F> b) {
  trim(K, a);
  trim(K, b);
  while (!b.empty()) {
    auto r = mod(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(K, a);
}

template <ExactField F>
Poly<F> mul_mod(const F& K, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
  if (a.empty() || b.empty()) return {};
  Poly<F> prod(a.size() + b.size() - 1, K.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = K.add(prod[i + j], K.mul(a[i], b[j]));
  return mod(K, prod, m);
}

/// base^e mod m.
template <ExactField F>
Poly<F> pow_mod(const F& K, Poly<F> base, std::uint64_t e, const Poly<F>& m) {
  Poly<F> result = mod(K, Poly<F>{K.one()}, m);
  base = mod(K, base, m);
  while (e > 0) {
    if (e & 1) result = mul_mod(K, result, base, m);
    base = mul_mod(K, base, base, m);
    e >>= 1;
  }
  return result;
}

template <ExactField F>
struct RootSearch {
  std::vector<typename F::Element> roots;
  /// False when the search could not guarantee that every root in the field
  /// was found (only possible over Q with very large coefficients).
  bool complete = true;
};

namespace detail {

inline void split_roots(const PrimeField& K, Poly<PrimeField> g, Rng& rng,
                        std::vector<PrimeField::Element>& out) {
  int d = degree(K, g);
  if (d <= 0) return;
  if (d == 1) {
    g = monic(K, g);
    out.push_back(K.neg(g[0]));
    return;
  }
  const std::uint64_t half = (K.modulus() - 1) / 2;
  for (int attempt = 0; attempt < 200; ++attempt) {
    Poly<PrimeField> shifted{K.random(rng), K.one()};
    auto h = pow_mod(K, shifted, half, g);
    if (h.empty()) h.push_back(K.zero());
    h[0] = K.sub(h[0], K.one());
    auto f = gcd(K, g, h);
    int df = degree(K, f);
    if (df > 0 && df < d) {
      Poly<PrimeField> rest = g;
      // exact division g / f
      Poly<PrimeField> quotient(static_cast<std::size_t>(d - df + 1), K.zero());
      Poly<PrimeField> rem = g;
      auto lead_inv = K.inv(f.back());
      for (int i = d - df; i >= 0; --i) {
        auto c = K.mul(rem[static_cast<std::size_t>(i + df)], lead_inv);
        quotient[static_cast<std::size_t>(i)] = c;
        for (int j = 0; j <= df; ++j) {
          auto idx = static_cast<std::size_t>(i + j);
          rem[idx] = K.sub(rem[idx], K.mul(c, f[static_cast<std::size_t>(j)]));
        }
      }
      split_roots(K, f, rng, out);
      split_roots(K, quotient, rng, out);
      return;
    }
  }
  fail(ErrorKind::BudgetExceeded, "root splitting did not converge");
}

std::vector<mpz_class> positive_divisors(const mpz_class& n, bool& complete);

}  // namespace detail

/// Distinct roots lying in the field itself.
template <ExactField F>
RootSearch<F> roots(const F& K, Poly<F> f) {
  trim(K, f);
  RootSearch<F> result;
  if (f.size() <= 1) return result;  // constants (the zero polynomial is rejected upstream)
  if constexpr (std::is_same_v<F, PrimeField>) {
    if (K.modulus() <= (1u << 14)) {
      for (std::uint32_t v = 0; v < K.modulus(); ++v) {
        if (K.is_zero(evaluate(K, f, PrimeField::Element{v}))) result.roots.push_back({v});
      }
      return result;
    }
    // roots are those of gcd(f, t^p - t)
    auto xp = pow_mod(K, Poly<F>{K.zero(), K.one()}, K.modulus(), f);
    xp.resize(std::max<std::size_t>(xp.size(), 2), K.zero());
    xp[1] = K.sub(xp[1], K.one());
    auto g = gcd(K, f, xp);
    Rng rng(0x5eed);
    detail::split_roots(K, g, rng, result.roots);
    std::sort(result.roots.begin(), result.roots.end(),
              [](auto a, auto b) { return a.value < b.value; });
    return result;
  } else {
    // rational root test on the primitive integer multiple of f
    mpz_class den_lcm = 1;
    for (const auto& c : f) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : f) ints.push_back(mpz_class(c * den_lcm));
    std::size_t low = 0;
    while (ints[low] == 0) ++low;
    if (low > 0) result.roots.push_back(K.zero());
    if (low + 1 == ints.size()) return result;
    bool complete = true;
    auto num_divs = detail::positive_divisors(abs(ints[low]), complete);
    auto den_divs = detail::positive_divisors(abs(ints.back()), complete);
    result.complete = complete;
    for (const auto& a : num_divs) {
      for (const auto& b : den_divs) {
        for (int sign : {1, -1}) {
          mpq_class cand(sign * a, b);
          cand.canonicalize();
          if (K.is_zero(evaluate(K, f, cand)) &&
              std::find(result.roots.begin(), result.roots.end(), cand) == result.roots.end()) {
            result.roots.push_back(cand);
          }
        }
      }
    }
    std::sort(result.roots.begin(), result.roots.end());
    return result;
  }
}

}  // namespace univariate
}  // namespace saga
