#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "saga/algebra.hpp"

namespace saga {

enum class Verdict { Holds, Fails };

std::string to_string(Verdict v);

struct SamplingOptions {
  std::uint64_t seed = 1;
  /// Minimum number of samples to draw before declaring a deficiency; the
  /// count actually used is raised until the error bound is met.
  std::size_t min_samples = 1;
  /// Deficiency claims need (D/|S|)^t < 2^-threshold_bits.
  unsigned threshold_bits = 60;
  /// Hard cap on samples; exceeding it raises BudgetExceeded.
  std::size_t max_samples = 10000;
  unsigned threads = 1;
  /// If nonempty, x is drawn from the span of these coordinate vectors of
  /// R^1 instead of all of R^1; the certificate then speaks about that
  /// family.
  std::vector<std::vector<mpq_class>> subspace;
};

/// Certificate for the generic rank of x^s* : R^a -> R^{a+s}.
///
/// A Witness is a sample x at which the rank is max_possible; since rank is
/// lower semicontinuous this settles generic maximality deterministically.
/// Otherwise the certificate is Probabilistic: t independent uniform samples
/// from a set S all had rank below max_possible.  If the generic rank were
/// maximal some maximal minor would be a nonzero polynomial of degree at
/// most D = s * max_possible in the coordinates of x, and by Schwartz-Zippel
/// all t samples miss its non-vanishing set with probability <= (D/|S|)^t.
template <ExactField F>
struct RankCertificate {
  enum class Kind { Witness, Probabilistic };

  unsigned power = 0;
  unsigned source_degree = 0;
  std::size_t generic_rank = 0;
  std::size_t max_possible = 0;
  Kind kind = Kind::Witness;
  /// Sample attaining generic_rank; for a Witness its rank is max_possible.
  AlgebraElement<F> witness;
  std::size_t exact_rank = 0;
  std::size_t samples = 0;
  mpz_class sample_space;
  std::size_t minor_degree_bound = 0;
  /// (D/|S|)^t, exact; zero for a Witness.
  mpq_class error_bound;
  unsigned threshold_bits = 60;
  std::uint64_t seed = 0;
  /// Sampled family; empty for all of R^1.
  std::vector<std::vector<mpq_class>> subspace;
};

template <ExactField F>
struct LefschetzCheck {
  Verdict verdict = Verdict::Holds;
  RankCertificate<F> certificate;
};

/// Samples x in R^1 (or the configured subspace) until x^s* : R^a -> R^{a+s}
/// reaches maximal rank or the deficiency bound is met.
template <ExactField F>
RankCertificate<F> generic_rank(const GradedAlgebra<F>& A, unsigned s, unsigned a,
                                const SamplingOptions& options = {});

/// WLP in degree k: generic x* : R^k -> R^{k+1} has maximal rank.
template <ExactField F>
LefschetzCheck<F> check_wlp(const GradedAlgebra<F>& A, unsigned k, const SamplingOptions& options = {});

/// SLP in degree k at range s: generic x^s* : R^k -> R^{k+s} has maximal rank.
template <ExactField F>
LefschetzCheck<F> check_slp(const GradedAlgebra<F>& A, unsigned k, unsigned s,
                            const SamplingOptions& options = {});

/// Exact test that x* : R^a -> R^{a+1} has maximal rank.
template <ExactField F>
bool is_lefschetz_element(const GradedAlgebra<F>& A, const AlgebraElement<F>& x, unsigned a);

/// Searches coordinate points, the supplied extra candidates, and `budget`
/// random vectors with small support and small coefficients for a linear form
/// that is not a Lefschetz element in degree a.  nullopt does not prove that
/// none exists.
template <ExactField F>
std::optional<AlgebraElement<F>> non_lefschetz_witness_search(const GradedAlgebra<F>& A, unsigned a,
                                                              std::size_t budget,
                                                              std::span<const AlgebraElement<F>> extra = {},
                                                              std::uint64_t seed = 1);

/// Number of uniform samples from a set of size |S| needed so that
/// (D/|S|)^t < 2^-bits; InsufficientFieldSize when D >= |S|.
std::size_t required_samples(std::size_t minor_degree_bound, const mpz_class& sample_space, unsigned bits);

/// Outcome of re-checking a certificate from its stored data alone.
struct CertificateAudit {
  bool ok = false;
  std::string detail;
};

/// Witness: the rank at the stored x is recomputed exactly and must equal
/// exact_rank and generic_rank (max_possible for a Witness).  Probabilistic:
/// D, the bound (D/|S|)^t and its comparison with 2^-threshold are
/// recomputed; the stored best sample must attain generic_rank.
template <ExactField F>
CertificateAudit audit_certificate(const GradedAlgebra<F>& A, const RankCertificate<F>& cert);

#define SAGA_LEFSCHETZ_EXTERN(F)                                                                          \
  extern template RankCertificate<F> generic_rank(const GradedAlgebra<F>&, unsigned, unsigned,             \
                                                  const SamplingOptions&);                                 \
  extern template LefschetzCheck<F> check_wlp(const GradedAlgebra<F>&, unsigned, const SamplingOptions&); \
  extern template LefschetzCheck<F> check_slp(const GradedAlgebra<F>&, unsigned, unsigned,                 \
                                              const SamplingOptions&);                                     \
  extern template bool is_lefschetz_element(const GradedAlgebra<F>&, const AlgebraElement<F>&, unsigned);  \
  extern template std::optional<AlgebraElement<F>> non_lefschetz_witness_search(                           \
      const GradedAlgebra<F>&, unsigned, std::size_t, std::span<const AlgebraElement<F>>, std::uint64_t);   \
  extern template CertificateAudit audit_certificate(const GradedAlgebra<F>&, const RankCertificate<F>&);
SAGA_LEFSCHETZ_EXTERN(Rationals)
SAGA_LEFSCHETZ_EXTERN(PrimeField)
#undef SAGA_LEFSCHETZ_EXTERN

}  // namespace saga
