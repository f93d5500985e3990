#include <doctest.h>

#include "saga/constructions.hpp"
#include "saga/lefschetz.hpp"

using namespace saga;

namespace {

template <ExactField F>
GradedAlgebra<F> algebra(const F& K, std::size_t n, std::vector<std::string> gens) {
  return GradedAlgebra<F>::build(QuadricPresentation<F>::parse(K, n, gens));
}

template <ExactField F>
AlgebraElement<F> elem(const GradedAlgebra<F>& A, std::string_view text) {
  return A.normal_form(parse_poly(text, A.presentation().context(), A.field()));
}

const std::vector<std::string> kFermat3{"x0^2", "x1^2", "x2^2", "x3^2"};
const std::vector<std::string> kEx5{"x0^2", "x1^2", "x2^2", "x3^2 + 2*x0*x1"};

std::vector<mpq_class> unit(std::size_t size, std::size_t i) {
  std::vector<mpq_class> v(size, 0);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("generic rank of the Fermat quadrics") {
  PrimeField K;
  auto A = algebra(K, 3, kFermat3);
  auto c11 = generic_rank(A, 1, 1);
  CHECK(c11.kind == RankCertificate<PrimeField>::Kind::Witness);
  CHECK(c11.generic_rank == 4);
  CHECK(c11.max_possible == 4);
  auto c21 = generic_rank(A, 2, 1);
  CHECK(c21.generic_rank == 4);
  CHECK(c21.kind == RankCertificate<PrimeField>::Kind::Witness);
  auto c02 = generic_rank(A, 0, 2);
  CHECK(c02.generic_rank == 6);
  CHECK_THROWS_AS(generic_rank(A, 2, 3), Error);

  // the sum of the variables is an explicit witness
  auto x = elem(A, "x0 + x1 + x2 + x3");
  CHECK(is_lefschetz_element(A, x, 1));
  CHECK_FALSE(is_lefschetz_element(A, A.variable(0), 1));
}

TEST_CASE("Lefschetz element examples") {
  PrimeField K;
  auto ex5 = algebra(K, 3, kEx5);
  CHECK_FALSE(is_lefschetz_element(ex5, ex5.variable(0), 1));
  CHECK(rank(ex5.mult_map_matrix(ex5.variable(0), 1)) == 3);
  auto found = non_lefschetz_witness_search(ex5, 1, 10);
  REQUIRE(found);
  CHECK(ex5.equal(*found, ex5.variable(0)));

  auto fermat = algebra(K, 3, kFermat3);
  auto f = non_lefschetz_witness_search(fermat, 1, 10);
  REQUIRE(f);
  CHECK(fermat.equal(*f, fermat.variable(0)));
  try {
    is_lefschetz_element(fermat, fermat.variable(0), 4);
    FAIL("expected DegreeOutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeOutOfRange);
  }
}

TEST_CASE("EX4 has a non-Lefschetz linear form in degree 1") {
  PrimeField K;
  auto A = GradedAlgebra<PrimeField>::build(instance_presentation(corpus_instance("EX4"), K));
  // x0 * (9x0 - 2x1 - 2x2 - 2x3) = 0 in this ring
  CHECK(A.is_zero(A.multiply(A.variable(0), elem(A, "9*x0 - 2*x1 - 2*x2 - 2*x3"))));
  CHECK_FALSE(is_lefschetz_element(A, A.variable(0), 1));
  auto found = non_lefschetz_witness_search(A, 1, 50);
  REQUIRE(found);
  CHECK_FALSE(is_lefschetz_element(A, *found, 1));
  CHECK(check_wlp(A, 1).verdict == Verdict::Holds);
}

TEST_CASE("WLP and SLP checks") {
  PrimeField K;
  auto fermat = algebra(K, 3, kFermat3);
  CHECK(check_wlp(fermat, 1).verdict == Verdict::Holds);
  CHECK(check_slp(fermat, 1, 2).verdict == Verdict::Holds);

  auto A5 = GradedAlgebra<PrimeField>::build(random_quadric_ci(4, 11, K));
  CHECK(check_wlp(A5, 2).verdict == Verdict::Holds);
  CHECK(check_slp(A5, 1, 3).verdict == Verdict::Holds);

  auto A6 = GradedAlgebra<PrimeField>::build(random_quadric_ci(5, 3, K));
  auto slp = check_slp(A6, 1, 4);
  CHECK(slp.verdict == Verdict::Holds);
  CHECK(slp.certificate.generic_rank == 6);

  Rationals Q;
  auto AQ = GradedAlgebra<Rationals>::build(random_quadric_ci(3, 5, Q));
  auto q = check_slp(AQ, 1, 2);
  CHECK(q.verdict == Verdict::Holds);
  CHECK(audit_certificate(AQ, q.certificate).ok);
}

TEST_CASE("deficient families get probabilistic certificates") {
  PrimeField K;
  auto A = algebra(K, 3, kFermat3);
  // on span{x0, x1} every x has x^3 = 0, so x^2 * R^1 has rank at most 2
  SamplingOptions options;
  options.subspace = {unit(4, 0), unit(4, 1)};
  auto cert = generic_rank(A, 2, 1, options);
  CHECK(cert.kind == RankCertificate<PrimeField>::Kind::Probabilistic);
  CHECK(cert.generic_rank == 2);
  CHECK(cert.minor_degree_bound == 8);
  CHECK(cert.samples == required_samples(8, K.sample_space_size(), 60));
  // (D/|S|)^t < 2^-60
  CHECK(cert.error_bound * (mpz_class(1) << 60) < 1);
  auto audit = audit_certificate(A, cert);
  CHECK(audit.ok);
  auto check = check_slp(A, 1, 2, options);
  CHECK(check.verdict == Verdict::Fails);

  // a richer family through the same map is maximal
  options.subspace = {unit(4, 0), unit(4, 1), unit(4, 2), unit(4, 3)};
  CHECK(generic_rank(A, 2, 1, options).kind == RankCertificate<PrimeField>::Kind::Witness);

  // over Q the sample box has 2*10^6 + 1 points
  Rationals Q;
  auto AQ = algebra(Q, 3, kFermat3);
  SamplingOptions qopt;
  qopt.subspace = {unit(4, 0), unit(4, 1)};
  auto qcert = generic_rank(AQ, 2, 1, qopt);
  CHECK(qcert.kind == RankCertificate<Rationals>::Kind::Probabilistic);
  CHECK(qcert.sample_space == 2000001);
  CHECK(audit_certificate(AQ, qcert).ok);
}

TEST_CASE("sample counts and field-size guard") {
  mpz_class p(2147483629UL);
  std::size_t t = required_samples(24, p, 60);
  auto below = [&](std::size_t samples) {
    mpz_class lhs = mpz_class(1) << 60, rhs = 1;
    for (std::size_t i = 0; i < samples; ++i) {
      lhs *= 24;
      rhs *= p;
    }
    return lhs < rhs;
  };
  CHECK(below(t));
  CHECK_FALSE(below(t - 1));
  CHECK(required_samples(0, p, 60) == 1);
  try {
    required_samples(10, mpz_class(7), 60);
    FAIL("expected InsufficientFieldSize");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InsufficientFieldSize);
  }
  // x_i^2 over F_5: D = 2 * 4 = 8 >= 5
  PrimeField F5(5);
  auto A = algebra(F5, 3, kFermat3);
  CHECK_THROWS_AS(generic_rank(A, 2, 1), Error);

  PrimeField K;
  auto B = algebra(K, 3, kFermat3);
  SamplingOptions tight;
  tight.max_samples = 1;
  tight.subspace = {unit(4, 0)};
  try {
    generic_rank(B, 1, 1, tight);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("tampered certificates fail the audit") {
  PrimeField K;
  auto A = algebra(K, 3, kFermat3);
  auto good = generic_rank(A, 1, 1);
  REQUIRE(audit_certificate(A, good).ok);

  auto bad = good;
  bad.witness = A.variable(0);
  CHECK_FALSE(audit_certificate(A, bad).ok);

  SamplingOptions options;
  options.subspace = {unit(4, 0), unit(4, 1)};
  auto prob = generic_rank(A, 2, 1, options);
  auto fewer = prob;
  fewer.samples -= 1;
  CHECK_FALSE(audit_certificate(A, fewer).ok);
  auto loose = prob;
  loose.error_bound = mpq_class(1, 2);
  CHECK_FALSE(audit_certificate(A, loose).ok);
  // claiming a deficiency for the whole space is caught by the replay
  auto wide = prob;
  wide.subspace.clear();
  CHECK_FALSE(audit_certificate(A, wide).ok);
}

TEST_CASE("semicontinuity, duality and monotonicity on random instances") {
  PrimeField K(32003);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    std::size_t n = 2 + seed % 4;
    auto A = GradedAlgebra<PrimeField>::build(random_quadric_ci(n, seed, K));
    const unsigned N = A.socle_degree();
    for (unsigned a = 0; a + 1 <= N; ++a) {
      auto cert = generic_rank(A, 1, a);
      for (std::uint64_t i = 0; i < 100; ++i) {
        Rng rng = make_rng(seed * 1000 + a, i);
        std::vector<Residue> c;
        for (std::size_t j = 0; j <= n; ++j) c.push_back(K.from_int(static_cast<long long>(rng() % 7) - 3));
        CHECK(rank(A.mult_map_matrix(A.linear(c), a)) <= cert.generic_rank);
      }
      CHECK(check_wlp(A, a).verdict == check_wlp(A, N - a - 1).verdict);
    }
    for (unsigned s = 2; 1 + s <= N; ++s) {
      auto strong = check_slp(A, 1, s);
      if (strong.verdict != Verdict::Holds) continue;
      const auto& x = strong.certificate.witness;
      auto m = A.mult_map_matrix(A.power(x, s - 1), 1);
      CHECK(rank(m) == std::min(A.dim(1), A.dim(s)));
    }
  }
}

TEST_CASE("results do not depend on the thread count") {
  PrimeField K;
  auto A = algebra(K, 3, kFermat3);
  SamplingOptions one, four;
  one.subspace = four.subspace = {unit(4, 0), unit(4, 1)};
  four.threads = 4;
  auto a = generic_rank(A, 2, 1, one);
  auto b = generic_rank(A, 2, 1, four);
  CHECK(a.samples == b.samples);
  CHECK(a.generic_rank == b.generic_rank);
  CHECK(A.equal(a.witness, b.witness));
  auto c = generic_rank(A, 1, 1, four);
  auto d = generic_rank(A, 1, 1, one);
  CHECK(A.equal(c.witness, d.witness));
  CHECK(c.samples == d.samples);
}
