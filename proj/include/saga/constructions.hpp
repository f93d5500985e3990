#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "saga/algebra.hpp"
#include "saga/lefschetz.hpp"
#include "saga/loci.hpp"

namespace saga {

template <ExactField F>
Polynomial<F> fermat_cubic(const F& field, std::size_t n);

/// The n+1 partial derivatives of a cubic form in x0..xn.  Whether they form
/// a regular sequence (V(F) smooth) is decided by GradedAlgebra::build.
template <ExactField F>
QuadricPresentation<F> jacobian_ring(const Polynomial<F>& cubic);

/// n+1 dense random quadrics; retried with fresh streams until the algebra
/// builds.  Coefficients are uniform over F_p and integers in [-10, 10] over Q.
template <ExactField F>
QuadricPresentation<F> random_quadric_ci(std::size_t n, std::uint64_t seed, const F& field,
                                         std::size_t max_retries = 20);

/// Random complete intersection whose first quadric is x0 * l for a random
/// linear form l, so that x0 is not a Lefschetz element in degree 1 and
/// x0 * l = 0.
template <ExactField F>
QuadricPresentation<F> annihilated_linear_instance(std::size_t n, std::uint64_t seed, const F& field,
                                                   std::size_t max_retries = 20);

template <ExactField F>
struct JacobianTest {
  bool jacobian = false;
  /// Dimension of the space of cubics whose partials all lie in I_2.
  std::size_t cubic_space_dimension = 0;
  /// A cubic whose partials span I_2, when one was found.
  std::optional<Polynomial<F>> cubic;
  /// False only when cubics exist but none sampled had spanning partials.
  bool exact = true;
};

/// Whether I_2 is spanned by the partials of some cubic.
template <ExactField F>
JacobianTest<F> is_jacobian_presentation(const QuadricPresentation<F>& pres, std::uint64_t seed = 1);

template <ExactField F>
struct FermatReconstruction {
  /// Row i holds the coordinates of the i-th point of N_2; these linear
  /// forms are the new coordinates y_i.
  Matrix<F> change_of_coordinates;
  bool squares_vanish = false;
  bool independent = false;
  /// The y_i^2 span I_2, so I = (y_0^2, ..., y_n^2).
  bool same_ideal = false;
};

/// NotFermatCandidate unless N_2 has length n+1; nullopt when fewer than n+1
/// of its points are rational over the working field.
template <ExactField F>
std::optional<FermatReconstruction<F>> fermat_reconstruct(const GradedAlgebra<F>& A, const N2Analysis<F>& n2);

template <ExactField F>
struct LiftingCheck {
  Verdict quotient_wlp2 = Verdict::Holds;
  Verdict parent_wlp2 = Verdict::Holds;
  LefschetzCheck<F> quotient_check;
  LefschetzCheck<F> parent_check;
  bool consistent_with_theorem = false;
};

/// Compares WLP in degree 2 of R and R/(z) for a non-Lefschetz z.  The
/// implication "R/(z) has it => R has it" can only be falsified here.
template <ExactField F>
LiftingCheck<F> verify_lifting(const GradedAlgebra<F>& A, const AlgebraElement<F>& z,
                               const SamplingOptions& options = {});

/// Singular locus of a hypersurface V(q): the ideal (q, dq/dw_i).
template <ExactField F>
Ideal<F> hypersurface_singular_ideal(const Polynomial<F>& q, const VariableContext& ctx);

/// A claimed fact about a corpus instance, checked by verify_example.
struct ExpectedFact {
  std::string id;
  std::string statement;
};

struct NamedInstance {
  std::string name;
  std::string description;
  std::size_t n = 3;
  /// The cubic, for jacobian instances.
  std::optional<std::string> cubic;
  /// Quadric generators in x0..xn.
  std::vector<std::string> generators;
  std::string default_field;
  bool jacobian = true;
  std::vector<ExpectedFact> facts;
};

/// EX1..EX5.
const std::vector<NamedInstance>& paper_corpus();
const NamedInstance& corpus_instance(std::string_view name);

template <ExactField F>
QuadricPresentation<F> instance_presentation(const NamedInstance& inst, const F& field);

enum class FactStatus { Pass, Fail, Skipped };

std::string to_string(FactStatus s);

struct FactResult {
  std::string id;
  std::string statement;
  FactStatus status = FactStatus::Fail;
  std::string detail;
};

struct ExampleOptions {
  GroebnerBudget budget;
  SamplingOptions sampling;
  /// Points sampled per locus for the tangent-space comparison.
  std::size_t tangent_samples = 20;
};

/// Checks every expected fact of the instance over `field`.
template <ExactField F>
std::vector<FactResult> verify_example(const NamedInstance& inst, const F& field, const ExampleOptions& options = {});

#define SAGA_CONSTRUCTIONS_EXTERN(F)                                                                              \
  extern template Polynomial<F> fermat_cubic(const F&, std::size_t);                                              \
  extern template QuadricPresentation<F> jacobian_ring(const Polynomial<F>&);                                     \
  extern template QuadricPresentation<F> random_quadric_ci(std::size_t, std::uint64_t, const F&, std::size_t);    \
  extern template QuadricPresentation<F> annihilated_linear_instance(std::size_t, std::uint64_t, const F&,        \
                                                                     std::size_t);                                \
  extern template JacobianTest<F> is_jacobian_presentation(const QuadricPresentation<F>&, std::uint64_t);         \
  extern template std::optional<FermatReconstruction<F>> fermat_reconstruct(const GradedAlgebra<F>&,              \
                                                                            const N2Analysis<F>&);                \
  extern template LiftingCheck<F> verify_lifting(const GradedAlgebra<F>&, const AlgebraElement<F>&,              \
                                                 const SamplingOptions&);                                         \
  extern template Ideal<F> hypersurface_singular_ideal(const Polynomial<F>&, const VariableContext&);             \
  extern template QuadricPresentation<F> instance_presentation(const NamedInstance&, const F&);                   \
  extern template std::vector<FactResult> verify_example(const NamedInstance&, const F&, const ExampleOptions&);
SAGA_CONSTRUCTIONS_EXTERN(Rationals)
SAGA_CONSTRUCTIONS_EXTERN(PrimeField)
#undef SAGA_CONSTRUCTIONS_EXTERN

}  // namespace saga
