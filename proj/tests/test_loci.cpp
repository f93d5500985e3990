#include <doctest.h>

#include "saga/constructions.hpp"
#include "saga/lefschetz.hpp"
#include "saga/loci.hpp"

using namespace saga;

namespace {

template <ExactField F>
GradedAlgebra<F> algebra(const F& K, std::size_t n, std::vector<std::string> gens) {
  return GradedAlgebra<F>::build(QuadricPresentation<F>::parse(K, n, gens));
}

template <ExactField F>
GradedAlgebra<F> corpus_algebra(const F& K, std::string_view name) {
  return GradedAlgebra<F>::build(instance_presentation(corpus_instance(name), K));
}

template <ExactField F>
AlgebraElement<F> point(const GradedAlgebra<F>& A, std::vector<long long> c) {
  std::vector<typename F::Element> coords;
  for (auto v : c) coords.push_back(A.field().from_int(v));
  return A.linear(coords);
}

template <ExactField F>
Ideal<F> dual_ideal(const F& K, std::size_t n, std::vector<std::string> gens) {
  auto ctx = VariableContext::dual(n);
  std::vector<Polynomial<F>> polys;
  for (const auto& g : gens) polys.push_back(parse_affine_poly(g, ctx, K));
  return Ideal<F>(K, ctx, std::move(polys));
}

template <ExactField F>
bool vanishes_at(const Ideal<F>& I, const AlgebraElement<F>& x) {
  for (const auto& g : I.generators()) {
    if (!I.field().is_zero(g.evaluate(x.coords))) return false;
  }
  return true;
}

template <ExactField F>
AlgebraElement<F> random_linear(const GradedAlgebra<F>& A, std::uint64_t seed, std::uint64_t index) {
  Rng rng = make_rng(seed, index);
  std::vector<typename F::Element> coords;
  for (std::size_t i = 0; i < A.num_variables(); ++i) coords.push_back(A.field().random(rng));
  return A.linear(coords);
}

const std::vector<std::string> kFermat3{"x0^2", "x1^2", "x2^2", "x3^2"};

}  // namespace

TEST_CASE("nihil ideal equations are the coordinates of the k-th power") {
  PrimeField K(32003);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    auto A = GradedAlgebra<PrimeField>::build(random_quadric_ci(2 + seed % 3, seed, K));
    for (unsigned k = 2; k <= A.socle_degree(); ++k) {
      auto locus = nihil_ideal(A, k);
      CHECK(locus.kind == LocusIdeal<PrimeField>::Kind::Nihil);
      REQUIRE(locus.ideal.generators().size() == A.dim(k));
      for (std::uint64_t i = 0; i < 5; ++i) {
        auto x = random_linear(A, seed, i);
        auto power = A.power(x, k);
        for (std::size_t j = 0; j < A.dim(k); ++j) {
          CHECK(locus.ideal.generators()[j].evaluate(x.coords) == power.coords[j]);
        }
      }
    }
  }
  PrimeField P;
  auto F = algebra(P, 3, kFermat3);
  try {
    nihil_ideal(F, 1);
    FAIL("expected DegreeOutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeOutOfRange);
  }
  CHECK_THROWS_AS(nihil_ideal(F, 5), Error);
}

TEST_CASE("nihil membership agrees with the defining equations") {
  PrimeField K;
  auto A = corpus_algebra(K, "EX5");
  std::vector<AlgebraElement<PrimeField>> pts{point(A, {1, 0, 0, 0}), point(A, {0, 1, 0, 0}),
                                              point(A, {1, 1, 0, 0}),  point(A, {3, 1, 0, 3}),
                                              point(A, {0, 0, 0, 1}),  random_linear(A, 7, 0)};
  for (unsigned k = 2; k <= 4; ++k) {
    auto locus = nihil_ideal(A, k);
    for (const auto& x : pts) {
      bool member = nihil_membership(A, x, k);
      CHECK(member == vanishes_at(locus.ideal, x));
      CHECK(member == A.is_zero(A.power(x, k)));
    }
  }
  // w3^2 = 3 w0 w1 with w2 = 0 lies on the conic component of N3
  CHECK(nihil_membership(A, point(A, {3, 1, 0, 3}), 3));
  CHECK_FALSE(nihil_membership(A, point(A, {3, 1, 0, 3}), 2));
  CHECK(nihil_membership(A, point(A, {1, 0, 0, 0}), 2));
}

TEST_CASE("Fermat nihil loci are coordinate subspaces") {
  PrimeField K;
  auto A = algebra(K, 3, kFermat3);
  CHECK(nihil_dimension(A, 2) == 0);
  CHECK(nihil_dimension(A, 3) == 1);
  CHECK(nihil_dimension(A, 4) == 2);
  auto B = algebra(K, 4, {"x0^2", "x1^2", "x2^2", "x3^2", "x4^2"});
  for (unsigned k = 2; k <= 5; ++k) CHECK(nihil_dimension(B, k) == static_cast<int>(k) - 2);

  std::vector<Ideal<PrimeField>> lines;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      std::vector<std::string> gens;
      for (std::size_t l = 0; l < 4; ++l) {
        if (l != i && l != j) gens.push_back("w" + std::to_string(l));
      }
      lines.push_back(dual_ideal(K, 3, gens));
    }
  }
  CHECK(verify_component_decomposition(A, 3, lines).holds);
  auto missing = lines;
  missing.pop_back();
  CHECK_FALSE(verify_component_decomposition(A, 3, missing).holds);
  CHECK_FALSE(verify_component_decomposition(A, 2, lines).holds);
}

TEST_CASE("nihil loci form an ascending chain") {
  PrimeField K(32003);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    auto A = GradedAlgebra<PrimeField>::build(random_quadric_ci(3, seed, K));
    for (unsigned k = 2; k < A.socle_degree(); ++k) {
      auto lower = buchberger(nihil_ideal(A, k).ideal);
      auto upper = nihil_ideal(A, k + 1);
      for (const auto& g : upper.ideal.generators()) CHECK(member(g, lower).member);
    }
  }
}

TEST_CASE("dimension of N_k is at most k-2") {
  PrimeField K(32003);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    auto A = GradedAlgebra<PrimeField>::build(random_quadric_ci(3, seed, K));
    for (unsigned k = 2; k <= 4; ++k) CHECK(nihil_dimension(A, k) <= static_cast<int>(k) - 2);
  }
  auto B = GradedAlgebra<PrimeField>::build(random_quadric_ci(4, 1, K));
  for (unsigned k = 2; k <= 3; ++k) CHECK(nihil_dimension(B, k) <= static_cast<int>(k) - 2);
  for (const auto& inst : paper_corpus()) {
    auto C = corpus_algebra(K, inst.name);
    for (unsigned k = 2; k <= 4; ++k) CHECK(nihil_dimension(C, k) <= static_cast<int>(k) - 2);
  }
}

TEST_CASE("N2 points") {
  PrimeField K;
  auto fermat = n2_analysis(algebra(K, 3, kFermat3));
  CHECK(fermat.degree == 4);
  CHECK(fermat.rational_points.size() == 4);
  CHECK(fermat.points_complete);
  CHECK(fermat.independent);
  CHECK(fermat.product_nonzero);
  CHECK(fermat.fermat_candidate);

  auto A5 = corpus_algebra(K, "EX5");
  auto ex5 = n2_analysis(A5);
  CHECK(ex5.degree == 3);
  REQUIRE(ex5.rational_points.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<long long> c(4, 0);
    c[i] = 1;
    bool found = false;
    for (const auto& p : ex5.rational_points) found = found || A5.equal(p, point(A5, c));
    CHECK(found);
  }
  CHECK_FALSE(ex5.fermat_candidate);

  // 9973 = 1 mod 3 has cube roots of unity, 10007 = 2 mod 3 does not
  auto ex2 = n2_analysis(corpus_algebra(PrimeField(9973), "EX2"));
  CHECK(ex2.degree == 4);
  CHECK(ex2.rational_points.size() == 4);
  CHECK(ex2.fermat_candidate);
  auto ex2b = n2_analysis(corpus_algebra(PrimeField(10007), "EX2"));
  CHECK(ex2b.degree == 4);
  CHECK(ex2b.rational_points.size() == 2);
  CHECK(ex2b.points_complete);

  auto empty = n2_analysis(corpus_algebra(K, "EX4"));
  CHECK(empty.degree == 0);
  CHECK(empty.rational_points.empty());

  Rationals Q;
  auto q = n2_analysis(algebra(Q, 3, kFermat3));
  CHECK(q.degree == 4);
  CHECK(q.rational_points.size() == 4);
}

TEST_CASE("tangent spaces of nihil loci") {
  PrimeField K;
  auto A = algebra(K, 3, kFermat3);
  auto t2 = tangent_space(A, point(A, {1, 0, 0, 0}), 2);
  CHECK(t2.jacobian_nullspace.size() == 1);
  CHECK(t2.kernel_space.size() == 1);
  CHECK(t2.power_nonzero);
  CHECK(t2.equal);

  auto t3 = tangent_space(A, point(A, {1, 1, 0, 0}), 3);
  CHECK(t3.jacobian_nullspace.size() == 2);
  CHECK(t3.kernel_space.size() == 2);
  CHECK(t3.equal);

  try {
    tangent_space(A, point(A, {1, 1, 0, 0}), 2);
    FAIL("expected NotOnLocus");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotOnLocus);
  }

  auto B = corpus_algebra(K, "EX5");
  auto conic = tangent_space(B, point(B, {3, 1, 0, 3}), 3);
  CHECK(conic.contained);
  CHECK(conic.equal);
}

TEST_CASE("secant combinations") {
  PrimeField K;
  auto A = algebra(K, 3, kFermat3);
  std::vector<AlgebraElement<PrimeField>> pts{point(A, {1, 0, 0, 0}), point(A, {0, 1, 0, 0}),
                                              point(A, {0, 0, 1, 0}), point(A, {0, 0, 0, 1})};
  auto two = secant_containment_check<PrimeField>(A, pts, 2, 2, 3, 30);
  CHECK(two.holds);
  CHECK(two.trials == 30);
  auto three = secant_containment_check<PrimeField>(A, pts, 2, 3, 3, 30);
  CHECK_FALSE(three.holds);
  REQUIRE(three.counterexample);
  CHECK_FALSE(nihil_membership(A, *three.counterexample, 3));
  CHECK(secant_containment_check<PrimeField>(A, pts, 2, 3, 4, 30).holds);

  std::vector<AlgebraElement<PrimeField>> bad{point(A, {1, 1, 0, 0}), point(A, {0, 1, 0, 0})};
  try {
    secant_containment_check<PrimeField>(A, bad, 2, 2, 3, 5);
    FAIL("expected NotOnLocus");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotOnLocus);
  }
  try {
    secant_containment_check<PrimeField>(A, std::span(pts).first(1), 2, 2, 3, 5);
    FAIL("expected InsufficientPoints");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InsufficientPoints);
  }
}

TEST_CASE("lines in N3 meet N2 in two points") {
  PrimeField K;
  auto A = algebra(K, 3, kFermat3);
  auto line = line_in_n3_check(A, point(A, {1, 0, 0, 0}), point(A, {0, 1, 0, 0}));
  CHECK(line.holds);
  CHECK(line.distinct_points == 2);
  CHECK(line.rational_points.size() == 2);

  auto B = corpus_algebra(K, "EX5");
  CHECK(line_in_n3_check(B, point(B, {1, 0, 0, 0}), point(B, {0, 1, 0, 0})).holds);

  for (auto [v, w] : {std::pair{point(A, {1, 0, 0, 0}), point(A, {2, 0, 0, 0})},
                      std::pair{point(A, {1, 0, 0, 0}), point(A, {0, 1, 1, 0})}}) {
    try {
      line_in_n3_check(A, v, w);
      FAIL("expected NotALineInN3");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotALineInN3);
    }
  }
}

TEST_CASE("plane sections of N_{k+1}") {
  PrimeField K;
  auto A = algebra(K, 3, kFermat3);
  std::vector<AlgebraElement<PrimeField>> plane{point(A, {1, 0, 0, 0}), point(A, {0, 1, 0, 0}),
                                                point(A, {0, 0, 1, 0})};
  auto section = plane_section_check(A, plane);
  CHECK(section.proportional);
  REQUIRE(section.basis.size() == 3);
  CHECK_FALSE(A.is_zero(A.power(section.basis.back(), 3)));
  CHECK(section.nondegenerate_points.size() == 3);

  // (sum a_i b_i)^k = p_k(a) * b_{k-1}^k at random a
  auto top = A.power(section.basis.back(), 3);
  for (std::uint64_t i = 0; i < 10; ++i) {
    Rng rng = make_rng(3, i);
    std::vector<Residue> a{K.random(rng), K.random(rng), K.random(rng)};
    auto x = A.scale(section.basis[0], a[0]);
    x = A.add(x, A.scale(section.basis[1], a[1]));
    x = A.add(x, A.scale(section.basis[2], a[2]));
    CHECK(A.equal(A.power(x, 3), A.scale(top, section.p_k.evaluate(a))));
  }

  auto line = plane_section_check(A, {point(A, {1, 0, 0, 0}), point(A, {0, 1, 0, 0})});
  CHECK(line.proportional);
  CHECK(line.nondegenerate_points.size() == 2);

  try {
    plane_section_check(A, {point(A, {1, 1, 0, 0}), point(A, {0, 0, 1, 1})});
    FAIL("expected PlaneNotInLocus");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PlaneNotInLocus);
  }
}

TEST_CASE("non-Lefschetz locus equations") {
  PrimeField K;
  auto A = algebra(K, 3, kFermat3);
  auto locus = non_lefschetz_ideal(A, 1);
  CHECK(locus.kind == LocusIdeal<PrimeField>::Kind::NonLefschetz);
  // at most C(6, 4) maximal minors; identically zero ones are dropped
  CHECK(locus.ideal.generators().size() <= 15);
  for (const auto& g : locus.ideal.generators()) CHECK_FALSE(g.is_zero());
  CHECK(projective_dimension(buchberger(locus.ideal)) == 1);
  std::vector<AlgebraElement<PrimeField>> pts{point(A, {1, 0, 0, 0}), point(A, {1, 1, 0, 0}),
                                              point(A, {1, 1, 1, 0}), point(A, {1, 2, 3, 4}),
                                              random_linear(A, 5, 0)};
  for (const auto& x : pts) CHECK(vanishes_at(locus.ideal, x) == !is_lefschetz_element(A, x, 1));

  auto B = corpus_algebra(K, "EX4");
  auto b = non_lefschetz_ideal(B, 1);
  CHECK(projective_dimension(buchberger(b.ideal)) == 0);
  CHECK(vanishes_at(b.ideal, B.variable(0)));

  try {
    non_lefschetz_ideal(A, 1, 10);
    FAIL("expected SizeGateExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeGateExceeded);
  }
  CHECK_THROWS_AS(non_lefschetz_ideal(A, 4), Error);
}

TEST_CASE("kernel dimensions of powers of random forms") {
  PrimeField K;
  auto A = algebra(K, 3, kFermat3);
  auto one = fiber_statistics(A, 1, 20);
  CHECK(one.generic == 0);
  CHECK(one.histogram.at(0) == 20);
  auto three = fiber_statistics(A, 3, 20);
  CHECK(three.generic == 3);
  CHECK(fiber_statistics(A, 4, 5).generic == 4);
}
