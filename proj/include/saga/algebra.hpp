#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "saga/errors.hpp"
#include "saga/field.hpp"
#include "saga/matrix.hpp"
#include "saga/monomial.hpp"
#include "saga/polynomial.hpp"

namespace saga {

/// n+1 quadratic forms in x0..xn.  Zero generators are accepted here (the
/// jacobian of a singular cubic can have vanishing partials); such a
/// presentation then fails the regularity test in GradedAlgebra::build.
template <ExactField F>
class QuadricPresentation {
 public:
  QuadricPresentation(F field, VariableContext ctx, std::vector<Polynomial<F>> generators);

  const F& field() const { return field_; }
  const VariableContext& context() const { return ctx_; }
  std::size_t n() const { return ctx_.n(); }
  std::size_t num_variables() const { return ctx_.size(); }
  const std::vector<Polynomial<F>>& generators() const { return generators_; }

  /// Parses generator strings in the ring context x0..xn.
  static QuadricPresentation parse(const F& field, std::size_t n, const std::vector<std::string>& lines);

 private:
  F field_;
  VariableContext ctx_;
  std::vector<Polynomial<F>> generators_;
};

/// Contents of a presentation file: header `n=<int> field=<descriptor>`
/// followed by n+1 polynomial lines.  Blank lines and '#' comments are
/// skipped.
struct PresentationFile {
  std::size_t n = 0;
  std::string field;
  std::vector<std::string> generators;
};

PresentationFile parse_presentation_file(std::string_view text);

template <ExactField F>
std::string format_presentation(const QuadricPresentation<F>& pres) {
  std::string out = "n=" + std::to_string(pres.n()) + " field=" + pres.field().descriptor() + "\n";
  for (const auto& g : pres.generators()) out += format_poly(g, pres.context()) + "\n";
  return out;
}

/// Homogeneous element of R: its degree and coordinates in the standard
/// monomial basis of that degree.
template <ExactField F>
struct AlgebraElement {
  unsigned degree = 0;
  std::vector<typename F::Element> coords;
};

template <ExactField F>
class GradedAlgebra;

/// One instance of dim K^s_w = dim R^{s-1} - dim K^{s-1}_z.
struct DimensionIdentity {
  unsigned s = 0;
  std::size_t kernel_w = 0;
  std::size_t previous_dim = 0;
  std::size_t kernel_z_previous = 0;
  bool holds = false;
};

template <ExactField F>
struct LinearQuotient;

/// R = S/I for I generated by n+1 quadrics, stored degree by degree.
///
/// The basis of R^k consists of the standard monomials: degree-k monomials
/// that are not leading monomials (degrevlex) of any element of I_k.  Each
/// degree stores the normal form of every degree-k monomial.
///
/// Degree k >= 3 is obtained from degree k-1 without forming the full
/// Macaulay matrix: R^k is the quotient of the direct sum of n+1 copies of
/// R^{k-1} (the summand j standing for multiplication by x_j) by the Koszul
/// relations x_j*(x_i b) = x_i*(x_j b), b running over the basis of R^{k-2}.
/// Every summand element is written on the monomials x_j b, b standard, and
/// the relations are row reduced on those monomials in decreasing order.
///
/// Regularity is certified by the Hilbert function: build() fails with
/// NotRegularSequence unless dim R^k = C(n+1, k) for k <= n+1 and R^{n+2} = 0.
template <ExactField F>
class GradedAlgebra {
 public:
  using Element = typename F::Element;
  using Vector = std::vector<Element>;

  /// Builds through degree max(max_degree, n+2).
  static GradedAlgebra build(const QuadricPresentation<F>& pres, unsigned max_degree = 0);

  const QuadricPresentation<F>& presentation() const { return pres_; }
  const F& field() const { return pres_.field(); }
  std::size_t n() const { return pres_.n(); }
  std::size_t num_variables() const { return pres_.num_variables(); }
  unsigned socle_degree() const { return static_cast<unsigned>(n() + 1); }
  unsigned max_degree() const { return static_cast<unsigned>(degrees_.size() - 1); }

  std::size_t dim(unsigned k) const;
  std::vector<std::size_t> dims() const;
  const std::vector<Monomial>& standard_monomials(unsigned k) const;

  AlgebraElement<F> zero(unsigned k) const;
  AlgebraElement<F> one() const;
  AlgebraElement<F> basis_element(unsigned k, std::size_t index) const;
  /// Linear form sum c_i x_i; R^1 has the variables as basis, in order.
  AlgebraElement<F> linear(const Vector& coefficients) const;
  AlgebraElement<F> variable(std::size_t i) const;

  AlgebraElement<F> normal_form(const Polynomial<F>& f) const;
  /// Normal form of a single monomial, as a coordinate vector.
  const Vector& normal_form(const Monomial& m) const;
  /// Standard-monomial representative.
  Polynomial<F> to_polynomial(const AlgebraElement<F>& a) const;

  AlgebraElement<F> add(const AlgebraElement<F>& a, const AlgebraElement<F>& b) const;
  AlgebraElement<F> scale(const AlgebraElement<F>& a, const Element& c) const;
  bool is_zero(const AlgebraElement<F>& a) const;
  bool equal(const AlgebraElement<F>& a, const AlgebraElement<F>& b) const;

  AlgebraElement<F> multiply(const AlgebraElement<F>& a, const AlgebraElement<F>& b) const;
  AlgebraElement<F> power(const AlgebraElement<F>& a, unsigned k) const;

  /// Matrix of q* : R^a -> R^{a+deg q}; column j is the image of the j-th
  /// basis monomial of R^a.
  Matrix<F> mult_map_matrix(const AlgebraElement<F>& q, unsigned a) const;
  /// Echelonized basis of K^a_q = ker(q* : R^a -> R^{a+deg q}).
  std::vector<AlgebraElement<F>> kernel(const AlgebraElement<F>& q, unsigned a) const;
  std::size_t kernel_dimension(const AlgebraElement<F>& q, unsigned a) const;
  /// Entry (u, v) is the socle coordinate of b_u * b_v, b_u in R^j and
  /// b_v in R^{N-j}.
  Matrix<F> socle_pairing_matrix(unsigned j) const;

  /// R / (z) for z in R^1 annihilated by some nonzero w in R^1.
  LinearQuotient<F> quotient_by_linear(const AlgebraElement<F>& z) const;

 private:
  struct Degree {
    std::vector<Monomial> standard;
    std::vector<Monomial> monomials;  // monomial_basis(n, k)
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    std::vector<Vector> normal_forms;  // indexed like `monomials`
  };

  explicit GradedAlgebra(QuadricPresentation<F> pres) : pres_(std::move(pres)) {}

  void build_degree_two();
  void build_degree(unsigned k);
  void check_degree(unsigned k, const char* what) const;
  void check_element(const AlgebraElement<F>& a) const;
  Degree make_degree(unsigned k) const;

  QuadricPresentation<F> pres_;
  std::vector<Degree> degrees_;
};

template <ExactField F>
struct LinearQuotient {
  GradedAlgebra<F> quotient;
  /// Nonzero w in R^1 with z*w = 0 (first vector of the kernel basis).
  AlgebraElement<F> annihilator;
  /// Variable of the parent ring eliminated along z.
  std::size_t eliminated_variable = 0;
  std::vector<DimensionIdentity> identities;
  bool identities_hold = false;
};

extern template class QuadricPresentation<Rationals>;
extern template class QuadricPresentation<PrimeField>;
extern template class GradedAlgebra<Rationals>;
extern template class GradedAlgebra<PrimeField>;

}  // namespace saga
