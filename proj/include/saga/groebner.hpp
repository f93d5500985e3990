#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "saga/errors.hpp"
#include "saga/field.hpp"
#include "saga/monomial.hpp"
#include "saga/polynomial.hpp"

namespace saga {

/// Caps on a Buchberger run; exceeding either raises BudgetExceeded.
struct GroebnerBudget {
  std::size_t max_pairs = 200000;
  unsigned max_degree = 60;
};

/// Finitely generated ideal in the polynomial ring named by `ctx`.
template <ExactField F>
class Ideal {
 public:
  Ideal(F field, VariableContext ctx, std::vector<Polynomial<F>> generators);

  const F& field() const { return field_; }
  const VariableContext& context() const { return ctx_; }
  std::size_t num_variables() const { return ctx_.size(); }
  const std::vector<Polynomial<F>>& generators() const { return generators_; }

 private:
  F field_;
  VariableContext ctx_;
  std::vector<Polynomial<F>> generators_;
};

/// Reduced, monic Groebner basis for degrevlex, sorted by increasing leading
/// monomial.  The unit ideal is represented by {1}.
template <ExactField F>
class GroebnerBasis {
 public:
  GroebnerBasis(F field, std::size_t nvars, std::vector<Polynomial<F>> basis, std::size_t pairs)
      : field_(std::move(field)), nvars_(nvars), basis_(std::move(basis)), pairs_processed_(pairs) {}

  const F& field() const { return field_; }
  std::size_t num_variables() const { return nvars_; }
  const std::vector<Polynomial<F>>& polynomials() const { return basis_; }
  std::vector<Monomial> leading_monomials() const;
  bool is_unit() const { return basis_.size() == 1 && basis_.front().is_constant() && !basis_.front().is_zero(); }
  bool is_zero_ideal() const { return basis_.empty(); }
  std::size_t pairs_processed() const { return pairs_processed_; }

 private:
  F field_;
  std::size_t nvars_;
  std::vector<Polynomial<F>> basis_;
  std::size_t pairs_processed_;
};

template <ExactField F>
GroebnerBasis<F> buchberger(const Ideal<F>& ideal, const GroebnerBudget& budget = {});

template <ExactField F>
struct Division {
  bool member = false;
  Polynomial<F> remainder;
};

/// Multivariate division by the basis; the remainder is fully reduced.
template <ExactField F>
Division<F> member(const Polynomial<F>& f, const GroebnerBasis<F>& G);

/// f vanishes on V(I), decided by 1 in I + (1 - t f) with one extra variable.
template <ExactField F>
bool radical_membership(const Polynomial<F>& f, const Ideal<F>& ideal, const GroebnerBudget& budget = {});

/// Affine dimension of V(I) over the algebraic closure: the size of a largest
/// set of variables containing the support of no leading monomial.  -1 for
/// the unit ideal.
template <ExactField F>
int krull_dimension(const GroebnerBasis<F>& G);

/// Projective dimension of a homogeneous ideal's zero locus: affine cone
/// dimension minus one, with -1 standing for the empty locus.
template <ExactField F>
int projective_dimension(const GroebnerBasis<F>& G) {
  return std::max(krull_dimension(G) - 1, -1);
}

/// Number of standard monomials; NotZeroDimensional unless finite.
template <ExactField F>
std::size_t zero_dim_degree(const GroebnerBasis<F>& G);

/// Standard monomials of a zero-dimensional ideal, increasing.
template <ExactField F>
std::vector<Monomial> standard_monomials(const GroebnerBasis<F>& G);

#define SAGA_GROEBNER_EXTERN(F)                                                                 \
  extern template class Ideal<F>;                                                               \
  extern template class GroebnerBasis<F>;                                                       \
  extern template GroebnerBasis<F> buchberger(const Ideal<F>&, const GroebnerBudget&);          \
  extern template Division<F> member(const Polynomial<F>&, const GroebnerBasis<F>&);            \
  extern template bool radical_membership(const Polynomial<F>&, const Ideal<F>&, const GroebnerBudget&); \
  extern template int krull_dimension(const GroebnerBasis<F>&);                                 \
  extern template std::size_t zero_dim_degree(const GroebnerBasis<F>&);                         \
  extern template std::vector<Monomial> standard_monomials(const GroebnerBasis<F>&);
SAGA_GROEBNER_EXTERN(Rationals)
SAGA_GROEBNER_EXTERN(PrimeField)
#undef SAGA_GROEBNER_EXTERN

}  // namespace saga
