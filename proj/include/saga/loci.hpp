#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "saga/algebra.hpp"
#include "saga/groebner.hpp"

namespace saga {

/// Defining ideal of a locus in P(R^1), in the dual variables w0..wn, where
/// the point [w] stands for the linear form sum w_i x_i.
template <ExactField F>
struct LocusIdeal {
  enum class Kind { Nihil, NonLefschetz };
  Kind kind = Kind::Nihil;
  /// k for N_k, a for the non-Lefschetz locus in degree a.
  unsigned degree = 0;
  Ideal<F> ideal;
  std::string provenance;
};

/// Coordinates of (sum w_i x_i)^k in the standard monomial basis of R^k:
/// dim R^k forms of degree k whose projective zero locus is N_k.
template <ExactField F>
LocusIdeal<F> nihil_ideal(const GradedAlgebra<F>& A, unsigned k);

/// x^k = 0 in R.
template <ExactField F>
bool nihil_membership(const GradedAlgebra<F>& A, const AlgebraElement<F>& x, unsigned k);

/// Projective dimension of N_k, -1 when empty.
template <ExactField F>
int nihil_dimension(const GradedAlgebra<F>& A, unsigned k, const GroebnerBudget& budget = {});

/// Projective point of P(R^1) as a linear form, scaled so that its first
/// nonzero coordinate is 1.
template <ExactField F>
AlgebraElement<F> normalized_point(const GradedAlgebra<F>& A, AlgebraElement<F> x);

template <ExactField F>
struct N2Analysis {
  /// Length of the scheme N_2, counted chart by chart.
  std::size_t degree = 0;
  std::vector<AlgebraElement<F>> rational_points;
  /// False if some univariate root search could not be completed.
  bool points_complete = true;
  bool independent = true;
  /// Product of the rational points is nonzero in R.
  bool product_nonzero = true;
  bool fermat_candidate = false;
};

/// Length and rational points of N_2.  Chart i is w_i = 1, w_j = 0 for j < i,
/// so every projective point is counted once.  Rational points are found by
/// triangularizing each chart: roots of the minimal polynomial of one
/// coordinate are substituted and the remaining system is solved recursively.
template <ExactField F>
N2Analysis<F> n2_analysis(const GradedAlgebra<F>& A, const GroebnerBudget& budget = {});

template <ExactField F>
struct TangentSpaceReport {
  AlgebraElement<F> point;
  unsigned k = 0;
  /// Nullspace of the Jacobian of the N_k equations at the point.
  std::vector<std::vector<typename F::Element>> jacobian_nullspace;
  /// K^1 of point^(k-1).
  std::vector<std::vector<typename F::Element>> kernel_space;
  bool power_nonzero = false;
  bool contained = false;
  bool equal = false;
};

/// NotOnLocus unless point^k = 0.
template <ExactField F>
TangentSpaceReport<F> tangent_space(const GradedAlgebra<F>& A, const AlgebraElement<F>& point, unsigned k);

struct DecompositionCheck {
  bool holds = false;
  std::vector<std::string> log;
};

/// N_k equals the union of the V(components), set-theoretically: every N_k
/// equation lies in the radical of every component ideal, and every product
/// of one generator per component lies in the radical of the N_k ideal.
template <ExactField F>
DecompositionCheck verify_component_decomposition(const GradedAlgebra<F>& A, unsigned k,
                                                  const std::vector<Ideal<F>>& components,
                                                  const GroebnerBudget& budget = {});

template <ExactField F>
struct SecantCheck {
  bool holds = true;
  std::size_t trials = 0;
  std::optional<AlgebraElement<F>> counterexample;
};

/// Random combinations of k points from `points` (all in N_a) lie in N_r.
template <ExactField F>
SecantCheck<F> secant_containment_check(const GradedAlgebra<F>& A, std::span<const AlgebraElement<F>> points,
                                        unsigned a, unsigned k, unsigned r, std::size_t trials,
                                        std::uint64_t seed = 1);

template <ExactField F>
struct LineCheck {
  /// Number of distinct points of N_2 on the line over the algebraic closure.
  std::size_t distinct_points = 0;
  std::vector<AlgebraElement<F>> rational_points;
  /// Univariate polynomial in t cutting out N_2 on the chart v + t w,
  /// lowest coefficient first.
  std::vector<typename F::Element> chart_polynomial;
  bool point_at_infinity = false;
  bool holds = false;
};

/// For a line <v, w> contained in N_3, counts the points of N_2 on it; the
/// check holds when there are exactly two.  NotALineInN3 if v, w are
/// dependent or the pencil leaves N_3.
template <ExactField F>
LineCheck<F> line_in_n3_check(const GradedAlgebra<F>& A, const AlgebraElement<F>& v, const AlgebraElement<F>& w);

template <ExactField F>
struct PlaneSection {
  /// Basis actually used; its last element has nonzero k-th power.
  std::vector<AlgebraElement<F>> basis;
  /// p_k with (sum a_i basis_i)^k = p_k(a) * basis_{k-1}^k, in a0..a_{k-1}.
  Polynomial<F> p_k;
  /// Whether every k-th power of the plane was a multiple of basis_{k-1}^k.
  bool proportional = false;
  /// k independent points of V(p_k) with nonzero product in R, if found.
  std::vector<AlgebraElement<F>> nondegenerate_points;
};

/// plane spans a (k-1)-plane inside N_{k+1}.  PlaneNotInLocus if it does not
/// lie in N_{k+1}; BasePointInNk if the whole plane lies in N_k.
template <ExactField F>
PlaneSection<F> plane_section_check(const GradedAlgebra<F>& A, const std::vector<AlgebraElement<F>>& plane,
                                    std::uint64_t seed = 1);

/// Maximal minors of the matrix of x* : R^a -> R^{a+1}, x = sum w_i x_i.
/// SizeGateExceeded when the number of minors exceeds `gate`.
template <ExactField F>
LocusIdeal<F> non_lefschetz_ideal(const GradedAlgebra<F>& A, unsigned a, std::size_t gate = 10000);

struct FiberStatistics {
  /// dim K^1_{x^k} -> number of samples.
  std::map<std::size_t, std::size_t> histogram;
  std::size_t generic = 0;
};

template <ExactField F>
FiberStatistics fiber_statistics(const GradedAlgebra<F>& A, unsigned k, std::size_t samples, std::uint64_t seed = 1);

#define SAGA_LOCI_EXTERN(F)                                                                                 \
  extern template LocusIdeal<F> nihil_ideal(const GradedAlgebra<F>&, unsigned);                             \
  extern template bool nihil_membership(const GradedAlgebra<F>&, const AlgebraElement<F>&, unsigned);       \
  extern template int nihil_dimension(const GradedAlgebra<F>&, unsigned, const GroebnerBudget&);            \
  extern template AlgebraElement<F> normalized_point(const GradedAlgebra<F>&, AlgebraElement<F>);          \
  extern template N2Analysis<F> n2_analysis(const GradedAlgebra<F>&, const GroebnerBudget&);                \
  extern template TangentSpaceReport<F> tangent_space(const GradedAlgebra<F>&, const AlgebraElement<F>&,    \
                                                      unsigned);                                            \
  extern template DecompositionCheck verify_component_decomposition(                                        \
      const GradedAlgebra<F>&, unsigned, const std::vector<Ideal<F>>&, const GroebnerBudget&);              \
  extern template SecantCheck<F> secant_containment_check(                                                  \
      const GradedAlgebra<F>&, std::span<const AlgebraElement<F>>, unsigned, unsigned, unsigned, std::size_t, \
      std::uint64_t);                                                                                       \
  extern template LineCheck<F> line_in_n3_check(const GradedAlgebra<F>&, const AlgebraElement<F>&,          \
                                                const AlgebraElement<F>&);                                  \
  extern template PlaneSection<F> plane_section_check(const GradedAlgebra<F>&,                              \
                                                      const std::vector<AlgebraElement<F>>&, std::uint64_t); \
  extern template LocusIdeal<F> non_lefschetz_ideal(const GradedAlgebra<F>&, unsigned, std::size_t);        \
  extern template FiberStatistics fiber_statistics(const GradedAlgebra<F>&, unsigned, std::size_t, std::uint64_t);
SAGA_LOCI_EXTERN(Rationals)
SAGA_LOCI_EXTERN(PrimeField)
#undef SAGA_LOCI_EXTERN

}  // namespace saga
