#include <doctest.h>

#include "oracle.hpp"
#include "saga/algebra.hpp"

using namespace saga;

namespace {

template <ExactField F>
GradedAlgebra<F> algebra(const F& K, std::size_t n, std::vector<std::string> gens) {
  return GradedAlgebra<F>::build(QuadricPresentation<F>::parse(K, n, gens));
}

template <ExactField F>
Polynomial<F> poly(const GradedAlgebra<F>& A, std::string_view text) {
  return parse_poly(text, A.presentation().context(), A.field());
}

template <ExactField F>
AlgebraElement<F> elem(const GradedAlgebra<F>& A, std::string_view text) {
  return A.normal_form(poly(A, text));
}

template <ExactField F>
std::vector<Polynomial<F>> dense_quadrics(const F& K, std::size_t n, Rng& rng) {
  std::vector<Polynomial<F>> gens;
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<typename Polynomial<F>::Term> terms;
    for (const auto& m : monomial_basis(n, 2)) terms.push_back({m, K.small_random(rng, 10)});
    gens.push_back(Polynomial<F>::from_terms(K, n + 1, std::move(terms), 2));
  }
  return gens;
}

const std::vector<std::string> kFermat3{"x0^2", "x1^2", "x2^2", "x3^2"};
const std::vector<std::string> kEx5{"x0^2", "x1^2", "x2^2", "x3^2 + 2*x0*x1"};

std::vector<std::size_t> binomial_row(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= n + 2; ++k) out.push_back(k <= n + 1 ? binomial(n + 1, k) : 0);
  return out;
}

}  // namespace

TEST_CASE("Hilbert function of Fermat and EX5 quadrics") {
  Rationals Q;
  auto fermat = algebra(Q, 3, kFermat3);
  CHECK(fermat.dims() == std::vector<std::size_t>{1, 4, 6, 4, 1, 0});
  auto ex5 = algebra(Q, 3, kEx5);
  CHECK(ex5.dims() == std::vector<std::size_t>{1, 4, 6, 4, 1, 0});
  CHECK(ex5.socle_degree() == 4);
}

TEST_CASE("non-regular presentations are rejected with the failing degree") {
  Rationals Q;
  try {
    algebra(Q, 3, {"x0^2", "x0*x1", "x1^2", "x2^2"});
    FAIL("expected NotRegularSequence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotRegularSequence);
    // four independent quadrics: degree 2 has the right size, degree 3 does not
    REQUIRE(e.degree().has_value());
    CHECK(*e.degree() == 3);
  }
  // independent quadrics with the common zero (0:0:1)
  try {
    algebra(Q, 2, {"x0^2", "x1^2", "x0*x2 + x1*x2"});
    FAIL("expected NotRegularSequence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotRegularSequence);
    CHECK(*e.degree() >= 2);
  }
  // singular cubic x0^3: partials 3x0^2, 0, 0, 0
  CHECK_THROWS_AS(algebra(Q, 3, {"3*x0^2", "0*x1^2", "0*x2^2", "0*x3^2"}), Error);
}

TEST_CASE("presentation validation") {
  Rationals Q;
  CHECK_THROWS_AS(QuadricPresentation<Rationals>::parse(Q, 3, {"x0^2", "x1^2", "x2^2"}), Error);
  CHECK_THROWS_AS(QuadricPresentation<Rationals>::parse(Q, 1, {"x0^2", "x1^3"}), Error);
  CHECK_THROWS_AS(QuadricPresentation<Rationals>::parse(Q, 1, {"x0^2", "x1^2 + x0"}), Error);
}

TEST_CASE("normal forms from the examples") {
  Rationals Q;
  auto fermat = algebra(Q, 3, kFermat3);
  CHECK(fermat.is_zero(elem(fermat, "x0^2")));
  auto socle = elem(fermat, "x0*x1*x2*x3");
  CHECK(fermat.standard_monomials(4) == std::vector<Monomial>{Monomial{1, 1, 1, 1}});
  CHECK(socle.coords == std::vector<mpq_class>{1});

  auto ex5 = algebra(Q, 3, kEx5);
  // degrevlex puts x0*x1 above x3^2, so x0*x1 is the leading monomial of the
  // fourth generator and the survivor is x3^2: x0*x1 = -1/2 x3^2
  auto x0x1 = elem(ex5, "x0*x1");
  CHECK(ex5.to_polynomial(x0x1) == poly(ex5, "-1/2*x3^2"));
  auto x3sq = elem(ex5, "x3^2");
  CHECK(ex5.equal(x3sq, ex5.scale(x0x1, mpq_class(-2))));
  // reducing twice changes nothing
  for (unsigned k = 0; k <= 5; ++k) {
    for (const auto& m : monomial_basis(3, k)) {
      auto once = ex5.normal_form(Polynomial<Rationals>::monomial(Q, 4, m, 1));
      auto twice = ex5.normal_form(ex5.to_polynomial(once));
      CHECK(ex5.equal(once, twice));
    }
  }
  CHECK_THROWS_AS(ex5.normal_form(poly(ex5, "x0^6")), Error);
}

TEST_CASE("multiplication and powers") {
  Rationals Q;
  auto fermat = algebra(Q, 3, kFermat3);
  auto s = elem(fermat, "x0 + x1");
  CHECK(fermat.to_polynomial(fermat.multiply(s, s)) == poly(fermat, "2*x0*x1"));
  CHECK(fermat.is_zero(fermat.multiply(elem(fermat, "x0"), elem(fermat, "x0*x1*x2"))));
  auto sum = elem(fermat, "x0 + x1 + x2 + x3");
  CHECK(fermat.to_polynomial(fermat.power(sum, 4)) == poly(fermat, "24*x0*x1*x2*x3"));
  CHECK(fermat.is_zero(fermat.power(elem(fermat, "x0"), 2)));
  CHECK(fermat.is_zero(fermat.power(s, 3)));

  auto ex5 = algebra(Q, 3, kEx5);
  auto x3 = elem(ex5, "x3");
  CHECK(ex5.equal(ex5.multiply(x3, x3), elem(ex5, "-2*x0*x1")));

  // EX3 jacobian ring: partials of x0^3+x1^3+x2^3+x3^3+3x0x1x2 divided by 3
  auto ex3 = algebra(Q, 3, {"x0^2 + x1*x2", "x1^2 + x0*x2", "x2^2 + x0*x1", "x3^2"});
  CHECK_FALSE(ex3.is_zero(ex3.power(elem(ex3, "x2"), 2)));
  CHECK(ex3.is_zero(ex3.power(elem(ex3, "x3"), 2)));

  // associativity and commutativity on random elements
  Rng rng(17);
  PrimeField K;
  for (int trial = 0; trial < 20; ++trial) {
    auto A = GradedAlgebra<PrimeField>::build(QuadricPresentation<PrimeField>(K, VariableContext::ring(4), dense_quadrics(K, 4, rng)));
    auto rand_elem = [&](unsigned k) {
      auto e = A.zero(k);
      for (auto& c : e.coords) c = K.random(rng);
      return e;
    };
    auto a = rand_elem(1), b = rand_elem(2), c = rand_elem(1);
    CHECK(A.equal(A.multiply(a, b), A.multiply(b, a)));
    CHECK(A.equal(A.multiply(A.multiply(a, b), c), A.multiply(a, A.multiply(b, c))));
  }
}

TEST_CASE("multiplication maps and kernels") {
  Rationals Q;
  auto fermat = algebra(Q, 3, kFermat3);
  auto x0 = elem(fermat, "x0");
  auto m = fermat.mult_map_matrix(x0, 1);
  CHECK(m.rows() == 6);
  CHECK(m.cols() == 4);
  CHECK(rank(m) == 3);
  auto k1 = fermat.kernel(x0, 1);
  REQUIRE(k1.size() == 1);
  CHECK(fermat.to_polynomial(k1[0]) == poly(fermat, "x0"));
  auto k2 = fermat.kernel(x0, 2);
  REQUIRE(k2.size() == 3);
  std::vector<std::vector<mpq_class>> got, want;
  for (const auto& e : k2) got.push_back(e.coords);
  for (auto t : {"x0*x1", "x0*x2", "x0*x3"}) want.push_back(elem(fermat, t).coords);
  CHECK(same_span<Rationals>(Q, got, want, 6));

  CHECK(fermat.mult_map_matrix(fermat.one(), 2) == Matrix<Rationals>::identity(Q, 6));
  auto socle_map = fermat.mult_map_matrix(elem(fermat, "x0*x1*x2*x3"), 1);
  CHECK(socle_map.rows() == 0);
  CHECK(fermat.kernel(fermat.zero(2), 1).size() == 4);
}

TEST_CASE("socle pairing is perfect") {
  Rationals Q;
  auto fermat = algebra(Q, 3, kFermat3);
  auto p1 = fermat.socle_pairing_matrix(1);
  CHECK(rank(p1) == 4);
  for (std::size_t u = 0; u < 4; ++u) {
    std::size_t nonzero = 0;
    for (std::size_t v = 0; v < 4; ++v) nonzero += Q.is_zero(p1(u, v)) ? 0 : 1;
    CHECK(nonzero == 1);
  }
  CHECK(rank(fermat.socle_pairing_matrix(0)) == 1);
  CHECK(rank(fermat.socle_pairing_matrix(2)) == 6);
  CHECK_THROWS_AS(fermat.socle_pairing_matrix(5), Error);

  auto ex5 = algebra(Q, 3, kEx5);
  for (unsigned j = 0; j <= 4; ++j) CHECK(rank(ex5.socle_pairing_matrix(j)) == ex5.dim(j));
}

TEST_CASE("random quadrics over both fields give complete intersections") {
  Rng rng(2024);
  PrimeField K;
  Rationals Q;
  for (std::size_t n = 1; n <= 6; ++n) {
    auto A = GradedAlgebra<PrimeField>::build(QuadricPresentation<PrimeField>(K, VariableContext::ring(n), dense_quadrics(K, n, rng)));
    CHECK(A.dims() == binomial_row(n));
    for (unsigned j = 0; j <= A.socle_degree(); ++j) CHECK(rank(A.socle_pairing_matrix(j)) == A.dim(j));
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    auto A = GradedAlgebra<Rationals>::build(QuadricPresentation<Rationals>(Q, VariableContext::ring(n), dense_quadrics(Q, n, rng)));
    CHECK(A.dims() == binomial_row(n));
  }
}

TEST_CASE("normal forms agree with the Macaulay matrix reducer") {
  Rng rng(99);
  PrimeField K(32003);
  Rationals Q;
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    auto gens = dense_quadrics(K, n, rng);
    auto A = GradedAlgebra<PrimeField>::build(QuadricPresentation<PrimeField>(K, VariableContext::ring(n), gens), 4);
    oracle::MacaulayReducer<PrimeField> ref(K, n, gens);
    for (unsigned d = 0; d <= 4; ++d) {
      CHECK(ref.surviving(d) == A.standard_monomials(d));
      std::vector<typename Polynomial<PrimeField>::Term> terms;
      for (const auto& m : monomial_basis(n, d)) terms.push_back({m, K.random(rng)});
      auto f = Polynomial<PrimeField>::from_terms(K, n + 1, terms, d);
      auto nf = A.normal_form(f);
      auto expected = ref.reduce(f);
      std::size_t i = 0;
      for (const auto& [mono, coeff] : expected) {
        CHECK(mono == A.standard_monomials(d)[i]);
        CHECK(coeff == nf.coords[i]);
        ++i;
      }
    }
  }
  auto gens = dense_quadrics(Q, 3, rng);
  auto A = GradedAlgebra<Rationals>::build(QuadricPresentation<Rationals>(Q, VariableContext::ring(3), gens));
  oracle::MacaulayReducer<Rationals> ref(Q, 3, gens);
  auto f = parse_poly("x0^3 - 2*x1*x2*x3 + 5*x3^3", A.presentation().context(), Q);
  auto nf = A.normal_form(f);
  std::size_t i = 0;
  for (const auto& [mono, coeff] : ref.reduce(f)) CHECK(coeff == nf.coords[i++]);
}

TEST_CASE("quotient by an annihilated linear form") {
  Rationals Q;
  auto ex5 = algebra(Q, 3, kEx5);
  auto quotient = ex5.quotient_by_linear(elem(ex5, "x0"));
  CHECK(quotient.quotient.dims() == std::vector<std::size_t>{1, 3, 3, 1, 0});
  CHECK(quotient.identities_hold);
  REQUIRE(quotient.identities.size() == 4);
  CHECK(quotient.identities[0].kernel_w == 1);
  CHECK(quotient.identities[0].previous_dim == 1);
  CHECK(quotient.identities[0].kernel_z_previous == 0);
  CHECK(ex5.to_polynomial(quotient.annihilator) == poly(ex5, "x0"));

  auto fermat = algebra(Q, 3, kFermat3);
  auto fq = fermat.quotient_by_linear(elem(fermat, "x0"));
  auto gens = fq.quotient.presentation().generators();
  auto ctx = fq.quotient.presentation().context();
  std::vector<Polynomial<Rationals>> expected{parse_poly("x0^2", ctx, Q), parse_poly("x1^2", ctx, Q),
                                              parse_poly("x2^2", ctx, Q)};
  CHECK(gens == expected);

  CHECK_THROWS_AS(fermat.quotient_by_linear(elem(fermat, "x0 + x1 + x2 + x3")), Error);
  try {
    fermat.quotient_by_linear(elem(fermat, "x0 + x1 + x2 + x3"));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAnnihilated);
  }
}

TEST_CASE("presentation files round trip") {
  auto file = parse_presentation_file("# EX5\nn=3 field=Fp:9973\nx0^2\nx1^2\n\nx2^2\nx3^2 + 2*x0*x1  # perturbed\n");
  CHECK(file.n == 3);
  CHECK(file.field == "Fp:9973");
  REQUIRE(file.generators.size() == 4);
  PrimeField K(9973);
  auto pres = QuadricPresentation<PrimeField>::parse(K, file.n, file.generators);
  auto text = format_presentation(pres);
  CHECK(text == "n=3 field=Fp:9973\nx0^2\nx1^2\nx2^2\n2*x0*x1 + x3^2\n");
  auto again = parse_presentation_file(text);
  CHECK(again.generators.size() == 4);
  CHECK_THROWS_AS(parse_presentation_file("n=3 field=Q\nx0^2\n"), Error);
  CHECK_THROWS_AS(parse_presentation_file("x0^2\n"), Error);
  CHECK_THROWS_AS(parse_presentation_file("n=3 fld=Q\n"), Error);
}
