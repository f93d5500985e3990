#include "saga/lefschetz.hpp"

#include <algorithm>
#include <thread>

namespace saga {

std::string to_string(Verdict v) { return v == Verdict::Holds ? "HOLDS" : "FAILS"; }

std::size_t required_samples(std::size_t minor_degree_bound, const mpz_class& sample_space, unsigned bits) {
  if (minor_degree_bound == 0) return 1;
  mpz_class D(static_cast<unsigned long>(minor_degree_bound));
  if (D >= sample_space) {
    fail(ErrorKind::InsufficientFieldSize, "minor degree bound " + D.get_str() + " is not below the sample space size " +
                                               sample_space.get_str());
  }
  // smallest t with D^t * 2^bits < |S|^t
  mpz_class lhs = mpz_class(1) << bits;
  mpz_class rhs = 1;
  std::size_t t = 0;
  while (lhs >= rhs) {
    lhs *= D;
    rhs *= sample_space;
    ++t;
  }
  return t;
}

namespace {

template <ExactField F>
AlgebraElement<F> sample_linear_form(const GradedAlgebra<F>& A, std::uint64_t seed, std::size_t index,
                                     const std::vector<std::vector<mpq_class>>& subspace) {
  const F& K = A.field();
  Rng rng = make_rng(seed, index);
  std::vector<typename F::Element> coords;
  if (subspace.empty()) {
    for (std::size_t i = 0; i < A.num_variables(); ++i) coords.push_back(K.random(rng));
    return A.linear(coords);
  }
  coords.assign(A.num_variables(), K.zero());
  for (const auto& u : subspace) {
    if (u.size() != A.num_variables()) fail(ErrorKind::InvalidArgument, "subspace vector has the wrong length");
    auto c = K.random(rng);
    for (std::size_t i = 0; i < u.size(); ++i) coords[i] = K.add(coords[i], K.mul(c, K.from_rational(u[i])));
  }
  return A.linear(coords);
}

template <ExactField F>
std::size_t rank_at(const GradedAlgebra<F>& A, const AlgebraElement<F>& x, unsigned s, unsigned a) {
  return rank(A.mult_map_matrix(A.power(x, s), a));
}

template <ExactField F>
void check_range(const GradedAlgebra<F>& A, unsigned s, unsigned a) {
  if (a + s > A.socle_degree()) {
    fail(ErrorKind::DegreeOutOfRange, "source degree " + std::to_string(a) + " plus power " + std::to_string(s) +
                                          " exceeds the socle degree " + std::to_string(A.socle_degree()));
  }
}

mpq_class bound_value(std::size_t D, const mpz_class& sample_space, std::size_t t) {
  mpz_class num = 1, den = 1;
  for (std::size_t i = 0; i < t; ++i) {
    num *= static_cast<unsigned long>(D);
    den *= sample_space;
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

bool below_threshold(const mpq_class& bound, unsigned bits) {
  mpz_class scaled = bound.get_num() << bits;
  return scaled < bound.get_den();
}

}  // namespace

template <ExactField F>
RankCertificate<F> generic_rank(const GradedAlgebra<F>& A, unsigned s, unsigned a, const SamplingOptions& options) {
  check_range(A, s, a);
  RankCertificate<F> cert;
  cert.power = s;
  cert.source_degree = a;
  cert.max_possible = std::min(A.dim(a), A.dim(a + s));
  cert.sample_space = A.field().sample_space_size();
  cert.minor_degree_bound = s * cert.max_possible;
  cert.threshold_bits = options.threshold_bits;
  cert.seed = options.seed;
  cert.subspace = options.subspace;

  const std::size_t needed =
      std::max(options.min_samples, required_samples(cert.minor_degree_bound, cert.sample_space, options.threshold_bits));
  if (needed > options.max_samples) {
    fail(ErrorKind::BudgetExceeded, "a deficiency certificate needs " + std::to_string(needed) +
                                        " samples, above the cap of " + std::to_string(options.max_samples));
  }

  const std::size_t batch = std::max<unsigned>(1, options.threads);
  std::vector<std::size_t> ranks(batch);
  std::vector<AlgebraElement<F>> xs(batch);
  bool have_best = false;
  for (std::size_t start = 0; start < needed; start += batch) {
    const std::size_t count = std::min(batch, needed - start);
    auto work = [&](std::size_t j) {
      xs[j] = sample_linear_form(A, options.seed, start + j, options.subspace);
      ranks[j] = rank_at(A, xs[j], s, a);
    };
    if (count == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t j = 0; j < count; ++j) pool.emplace_back(work, j);
    }
    // results are consumed in index order, so the outcome does not depend on
    // the batch size
    for (std::size_t j = 0; j < count; ++j) {
      if (!have_best || ranks[j] > cert.generic_rank) {
        have_best = true;
        cert.generic_rank = ranks[j];
        cert.exact_rank = ranks[j];
        cert.witness = xs[j];
      }
      if (ranks[j] == cert.max_possible) {
        cert.kind = RankCertificate<F>::Kind::Witness;
        cert.samples = start + j + 1;
        cert.error_bound = 0;
        return cert;
      }
    }
  }
  cert.kind = RankCertificate<F>::Kind::Probabilistic;
  cert.samples = needed;
  cert.error_bound = bound_value(cert.minor_degree_bound, cert.sample_space, needed);
  return cert;
}

template <ExactField F>
LefschetzCheck<F> check_slp(const GradedAlgebra<F>& A, unsigned k, unsigned s, const SamplingOptions& options) {
  LefschetzCheck<F> out;
  out.certificate = generic_rank(A, s, k, options);
  out.verdict = out.certificate.kind == RankCertificate<F>::Kind::Witness ? Verdict::Holds : Verdict::Fails;
  return out;
}

template <ExactField F>
LefschetzCheck<F> check_wlp(const GradedAlgebra<F>& A, unsigned k, const SamplingOptions& options) {
  return check_slp(A, k, 1, options);
}

template <ExactField F>
bool is_lefschetz_element(const GradedAlgebra<F>& A, const AlgebraElement<F>& x, unsigned a) {
  if (x.degree != 1) fail(ErrorKind::InvalidArgument, "a Lefschetz element is a linear form");
  check_range(A, 1, a);
  return rank_at(A, x, 1, a) == std::min(A.dim(a), A.dim(a + 1));
}

template <ExactField F>
std::optional<AlgebraElement<F>> non_lefschetz_witness_search(const GradedAlgebra<F>& A, unsigned a,
                                                              std::size_t budget,
                                                              std::span<const AlgebraElement<F>> extra,
                                                              std::uint64_t seed) {
  check_range(A, 1, a);
  const F& K = A.field();
  const std::size_t m = A.num_variables();
  for (std::size_t i = 0; i < m; ++i) {
    auto x = A.variable(i);
    if (!is_lefschetz_element(A, x, a)) return x;
  }
  for (const auto& x : extra) {
    if (!A.is_zero(x) && !is_lefschetz_element(A, x, a)) return x;
  }
  for (std::size_t trial = 0; trial < budget; ++trial) {
    Rng rng = make_rng(seed, trial);
    std::size_t support = 2 + rng() % std::max<std::size_t>(1, m - 1);
    std::vector<std::size_t> vars(m);
    for (std::size_t i = 0; i < m; ++i) vars[i] = i;
    std::shuffle(vars.begin(), vars.end(), rng);
    std::vector<typename F::Element> coords(m, K.zero());
    for (std::size_t i = 0; i < std::min(support, m); ++i) {
      long c = static_cast<long>(rng() % 5) - 2;
      coords[vars[i]] = K.from_int(c == 0 ? 1 : c);
    }
    auto x = A.linear(coords);
    if (!is_lefschetz_element(A, x, a)) return x;
  }
  return std::nullopt;
}

template <ExactField F>
CertificateAudit audit_certificate(const GradedAlgebra<F>& A, const RankCertificate<F>& cert) {
  using Kind = typename RankCertificate<F>::Kind;
  auto fail_with = [](std::string why) { return CertificateAudit{false, std::move(why)}; };
  if (cert.source_degree + cert.power > A.socle_degree()) return fail_with("degrees out of range");
  if (cert.max_possible != std::min(A.dim(cert.source_degree), A.dim(cert.source_degree + cert.power))) {
    return fail_with("max_possible does not match the Hilbert function");
  }
  if (cert.witness.degree != 1 || cert.witness.coords.size() != A.num_variables()) {
    return fail_with("stored sample is not a linear form");
  }
  std::size_t r = rank_at(A, cert.witness, cert.power, cert.source_degree);
  if (r != cert.exact_rank || r != cert.generic_rank) return fail_with("rank at the stored sample is " + std::to_string(r));

  if (cert.kind == Kind::Witness) {
    if (r != cert.max_possible) return fail_with("witness rank is not maximal");
    return {true, "witness rank " + std::to_string(r) + " re-verified"};
  }

  if (cert.generic_rank >= cert.max_possible) return fail_with("probabilistic certificate claims no deficiency");
  if (cert.sample_space != A.field().sample_space_size()) return fail_with("sample space size mismatch");
  if (cert.minor_degree_bound != cert.power * cert.max_possible) return fail_with("minor degree bound mismatch");
  if (cert.error_bound != bound_value(cert.minor_degree_bound, cert.sample_space, cert.samples)) {
    return fail_with("error bound does not equal (D/|S|)^t");
  }
  if (!below_threshold(cert.error_bound, cert.threshold_bits)) {
    return fail_with("error bound is not below 2^-" + std::to_string(cert.threshold_bits));
  }
  // replay the seeded samples: none may exceed the claimed rank
  for (std::size_t i = 0; i < cert.samples; ++i) {
    if (rank_at(A, sample_linear_form(A, cert.seed, i, cert.subspace), cert.power, cert.source_degree) > cert.generic_rank) {
      return fail_with("replayed sample " + std::to_string(i) + " exceeds the claimed rank");
    }
  }
  return {true, "bound and " + std::to_string(cert.samples) + " samples re-verified"};
}

#define SAGA_LEFSCHETZ_INSTANTIATE(F)                                                                           \
  template RankCertificate<F> generic_rank(const GradedAlgebra<F>&, unsigned, unsigned, const SamplingOptions&); \
  template LefschetzCheck<F> check_wlp(const GradedAlgebra<F>&, unsigned, const SamplingOptions&);              \
  template LefschetzCheck<F> check_slp(const GradedAlgebra<F>&, unsigned, unsigned, const SamplingOptions&);    \
  template bool is_lefschetz_element(const GradedAlgebra<F>&, const AlgebraElement<F>&, unsigned);              \
  template std::optional<AlgebraElement<F>> non_lefschetz_witness_search(                                       \
      const GradedAlgebra<F>&, unsigned, std::size_t, std::span<const AlgebraElement<F>>, std::uint64_t);        \
  template CertificateAudit audit_certificate(const GradedAlgebra<F>&, const RankCertificate<F>&);
SAGA_LEFSCHETZ_INSTANTIATE(Rationals)
SAGA_LEFSCHETZ_INSTANTIATE(PrimeField)

}  // namespace saga
