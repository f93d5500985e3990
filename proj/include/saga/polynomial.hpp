#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "saga/errors.hpp"
#include "saga/field.hpp"
#include "saga/monomial.hpp"

namespace saga {

/// Sparse multivariate polynomial over an exact field.  Terms are kept sorted
/// by decreasing monomial (degrevlex) and carry no zero coefficients.  The
/// zero polynomial remembers a nominal degree so that homogeneity checks stay
/// total; products involving zero are zero of the summed degree.
///
/// Homogeneity is not enforced here (Groebner computations need affine
/// polynomials); callers that require forms check is_homogeneous().
template <ExactField F>
class Polynomial {
 public:
  using Element = typename F::Element;

  struct Term {
    Monomial monomial;
    Element coeff;
  };

  Polynomial(F field, std::size_t nvars, unsigned nominal_degree = 0)
      : field_(std::move(field)), nvars_(nvars), nominal_degree_(nominal_degree) {
    if (nvars == 0 || nvars > kMaxVariables) {
      fail(ErrorKind::InvalidArgument, "polynomial ring size out of range");
    }
  }

  static Polynomial constant(const F& field, std::size_t nvars, const Element& c) {
    return monomial(field, nvars, Monomial{}, c);
  }

  static Polynomial monomial(const F& field, std::size_t nvars, const Monomial& m, const Element& c) {
    Polynomial p(field, nvars, m.degree());
    p.check_monomial(m);
    if (!field.is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }

  static Polynomial variable(const F& field, std::size_t nvars, std::size_t index) {
    return monomial(field, nvars, Monomial::variable(index), field.one());
  }

  /// Sums duplicate monomials, drops zeros and sorts.
  static Polynomial from_terms(const F& field, std::size_t nvars, std::vector<Term> terms,
                               unsigned nominal_degree = 0) {
    Polynomial p(field, nvars, nominal_degree);
    for (const auto& t : terms) p.check_monomial(t.monomial);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
      } else {
        if (!p.terms_.empty() && field.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && field.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    return p;
  }

  const F& field() const { return field_; }
  std::size_t num_variables() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  /// Total degree of the leading term (degrevlex is graded), or the nominal
  /// degree for the zero polynomial.
  unsigned degree() const { return terms_.empty() ? nominal_degree_ : terms_.front().monomial.degree(); }

  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.monomial.degree() == degree(); });
  }

  bool is_constant() const { return terms_.empty() || terms_.front().monomial.is_one(); }

  const Term& leading_term() const {
    if (terms_.empty()) fail(ErrorKind::InvalidArgument, "zero polynomial has no leading term");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Element& leading_coefficient() const { return leading_term().coeff; }

  Element coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.monomial > key; });
    if (it != terms_.end() && it->monomial == m) return it->coeff;
    return field_.zero();
  }

  Polynomial operator+(const Polynomial& other) const { return combine(other, false); }
  Polynomial operator-(const Polynomial& other) const { return combine(other, true); }
  Polynomial operator-() const { return scaled(field_.neg(field_.one())); }

  Polynomial operator*(const Polynomial& other) const {
    check_compatible(other);
    std::vector<Term> product;
    product.reserve(terms_.size() * other.terms_.size());
    for (const auto& a : terms_) {
      for (const auto& b : other.terms_) {
        product.push_back({a.monomial * b.monomial, field_.mul(a.coeff, b.coeff)});
      }
    }
    return from_terms(field_, nvars_, std::move(product), degree() + other.degree());
  }

  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  Polynomial scaled(const Element& c) const {
    Polynomial r(field_, nvars_, degree());
    if (field_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial, field_.mul(t.coeff, c)});
    return r;
  }

  /// c * m * this; order-preserving so no re-sort is needed.
  Polynomial mul_term(const Monomial& m, const Element& c) const {
    check_monomial(m);
    Polynomial r(field_, nvars_, degree() + m.degree());
    if (field_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, field_.mul(t.coeff, c)});
    return r;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading_coefficient()));
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(field_, nvars_, field_.one());
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  Polynomial derivative(std::size_t var) const {
    if (var >= nvars_) fail(ErrorKind::InvalidArgument, "derivative variable out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
      unsigned e = t.monomial[var];
      if (e == 0) continue;
      out.push_back({t.monomial / Monomial::variable(var), field_.mul(t.coeff, field_.from_int(e))});
    }
    return from_terms(field_, nvars_, std::move(out), degree() == 0 ? 0 : degree() - 1);
  }

  Element evaluate(std::span<const Element> point) const {
    if (point.size() < nvars_) fail(ErrorKind::InvalidArgument, "evaluation point too short");
    Element total = field_.zero();
    for (const auto& t : terms_) {
      Element v = t.coeff;
      for (std::size_t i = 0; i < nvars_; ++i) {
        for (unsigned e = 0; e < t.monomial[i]; ++e) v = field_.mul(v, point[i]);
      }
      total = field_.add(total, v);
    }
    return total;
  }

  /// Substitute polynomials (all in one target ring) for the variables.
  Polynomial substitute(std::span<const Polynomial> images) const {
    if (images.size() < nvars_) fail(ErrorKind::InvalidArgument, "substitution list too short");
    const std::size_t target_vars = images.front().num_variables();
    Polynomial total(field_, target_vars, degree());
    for (const auto& t : terms_) {
      Polynomial v = constant(field_, target_vars, t.coeff);
      for (std::size_t i = 0; i < nvars_; ++i) {
        for (unsigned e = 0; e < t.monomial[i]; ++e) v = v * images[i];
      }
      total = total + v;
    }
    return total;
  }

  /// Reinterpret in a ring with more variables (new variables unused).
  Polynomial with_num_variables(std::size_t nvars) const {
    if (nvars < nvars_) {
      for (const auto& t : terms_) {
        if (t.monomial.support_end() > nvars) fail(ErrorKind::InvalidArgument, "variable still in use");
      }
    }
    Polynomial r(field_, nvars, nominal_degree_);
    r.terms_ = terms_;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!(a.field_ == b.field_) || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].monomial != b.terms_[i].monomial ||
          !a.field_.equal(a.terms_[i].coeff, b.terms_[i].coeff)) {
        return false;
      }
    }
    return true;
  }

  void check_compatible(const Polynomial& other) const {
    if (!(field_ == other.field_)) {
      fail(ErrorKind::FieldMismatch, field_.descriptor() + " vs " + other.field_.descriptor());
    }
    if (nvars_ != other.nvars_) {
      fail(ErrorKind::FieldMismatch, "polynomials live in rings of different size");
    }
  }

 private:
  void check_monomial(const Monomial& m) const {
    if (m.support_end() > nvars_) fail(ErrorKind::InvalidArgument, "monomial uses a variable outside the ring");
  }

  Polynomial combine(const Polynomial& other, bool subtract) const {
    check_compatible(other);
    Polynomial r(field_, nvars_, std::max(degree(), other.degree()));
    r.terms_.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    auto push_other = [&](const Term& t) {
      r.terms_.push_back({t.monomial, subtract ? field_.neg(t.coeff) : t.coeff});
    };
    while (a != terms_.end() || b != other.terms_.end()) {
      if (b == other.terms_.end() || (a != terms_.end() && a->monomial > b->monomial)) {
        r.terms_.push_back(*a++);
      } else if (a == terms_.end() || b->monomial > a->monomial) {
        push_other(*b++);
      } else {
        Element c = subtract ? field_.sub(a->coeff, b->coeff) : field_.add(a->coeff, b->coeff);
        if (!field_.is_zero(c)) r.terms_.push_back({a->monomial, std::move(c)});
        ++a;
        ++b;
      }
    }
    return r;
  }

  F field_;
  std::size_t nvars_;
  unsigned nominal_degree_;
  std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// Text form: terms separated by + or -, each an optional coefficient ("3",
// "3/2") followed by *-separated variables with optional ^exponent.

/// One parsed term before coefficients are mapped into a field.
struct RawTerm {
  bool negative = false;
  std::string coefficient;  // empty means 1
  Monomial monomial;
};

/// Tokenizes and validates the grammar; variable names come from `ctx`.
std::vector<RawTerm> parse_raw_terms(std::string_view text, const VariableContext& ctx);

/// Any polynomial (homogeneity not required).
template <ExactField F>
Polynomial<F> parse_affine_poly(std::string_view text, const VariableContext& ctx, const F& field) {
  std::vector<typename Polynomial<F>::Term> terms;
  unsigned max_degree = 0;
  for (const auto& raw : parse_raw_terms(text, ctx)) {
    auto c = raw.coefficient.empty() ? field.one() : field.parse(raw.coefficient);
    if (raw.negative) c = field.neg(c);
    max_degree = std::max(max_degree, raw.monomial.degree());
    terms.push_back({raw.monomial, c});
  }
  return Polynomial<F>::from_terms(field, ctx.size(), std::move(terms), max_degree);
}

/// A homogeneous form; a cancelled sum is the zero form of the stated degree.
template <ExactField F>
Polynomial<F> parse_poly(std::string_view text, const VariableContext& ctx, const F& field) {
  auto raw = parse_raw_terms(text, ctx);
  for (const auto& t : raw) {
    if (t.monomial.degree() != raw.front().monomial.degree()) {
      fail(ErrorKind::NotHomogeneous, "mixed degrees in '" + std::string(text) + "'");
    }
  }
  return parse_affine_poly(text, ctx, field);
}

template <ExactField F>
std::string format_poly(const Polynomial<F>& p, const VariableContext& ctx) {
  if (p.is_zero()) return "0";
  const F& K = p.field();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = K.is_negative(t.coeff);
    auto magnitude = negative ? K.neg(t.coeff) : t.coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    bool unit = K.equal(magnitude, K.one());
    if (t.monomial.is_one()) {
      out += K.format(magnitude);
    } else if (unit) {
      out += format_monomial(t.monomial, ctx);
    } else {
      out += K.format(magnitude) + "*" + format_monomial(t.monomial, ctx);
    }
  }
  return out;
}

}  // namespace saga
