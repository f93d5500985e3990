#include "saga/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace saga {

template <ExactField F>
QuadricPresentation<F>::QuadricPresentation(F field, VariableContext ctx, std::vector<Polynomial<F>> generators)
    : field_(std::move(field)), ctx_(std::move(ctx)), generators_(std::move(generators)) {
  if (generators_.size() != ctx_.size()) {
    fail(ErrorKind::InvalidArgument, "expected " + std::to_string(ctx_.size()) + " quadrics, got " +
                                         std::to_string(generators_.size()));
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (!(g.field() == field_)) fail(ErrorKind::FieldMismatch, "generator " + std::to_string(i) + " field");
    if (g.num_variables() != ctx_.size()) {
      fail(ErrorKind::FieldMismatch, "generator " + std::to_string(i) + " lives in another ring");
    }
    if (!g.is_homogeneous()) fail(ErrorKind::NotHomogeneous, "generator " + std::to_string(i));
    if (g.degree() != 2) {
      fail(ErrorKind::InvalidArgument,
           "generator " + std::to_string(i) + " has degree " + std::to_string(g.degree()) + ", expected 2");
    }
  }
}

template <ExactField F>
QuadricPresentation<F> QuadricPresentation<F>::parse(const F& field, std::size_t n,
                                                     const std::vector<std::string>& lines) {
  auto ctx = VariableContext::ring(n);
  std::vector<Polynomial<F>> gens;
  for (const auto& line : lines) gens.push_back(parse_poly(line, ctx, field));
  return QuadricPresentation(field, ctx, std::move(gens));
}

namespace {

std::string trim(std::string_view s) {
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

}  // namespace

PresentationFile parse_presentation_file(std::string_view text) {
  PresentationFile file;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (!have_header) {
      std::istringstream tokens(line);
      std::string token;
      bool have_n = false, have_field = false;
      while (tokens >> token) {
        if (token.starts_with("n=")) {
          auto digits = token.substr(2);
          if (digits.empty() || digits.size() > 2 ||
              !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            fail(ErrorKind::ParseError, "bad header entry '" + token + "'");
          }
          file.n = std::stoul(digits);
          have_n = true;
        } else if (token.starts_with("field=")) {
          file.field = token.substr(6);
          have_field = true;
        } else {
          fail(ErrorKind::ParseError, "unknown header entry '" + token + "'");
        }
      }
      if (!have_n || !have_field) fail(ErrorKind::ParseError, "header must read 'n=<int> field=<Q|Fp:p>'");
      if (file.n < 1 || file.n + 2 > kMaxVariables) fail(ErrorKind::ParseError, "n out of range");
      have_header = true;
      continue;
    }
    file.generators.push_back(line);
  }
  if (!have_header) fail(ErrorKind::ParseError, "missing header line");
  if (file.generators.size() != file.n + 1) {
    fail(ErrorKind::ParseError, "expected " + std::to_string(file.n + 1) + " generator lines, found " +
                                    std::to_string(file.generators.size()));
  }
  return file;
}

// ---------------------------------------------------------------------------

template <ExactField F>
typename GradedAlgebra<F>::Degree GradedAlgebra<F>::make_degree(unsigned k) const {
  Degree d;
  d.monomials = monomial_basis(n(), k);
  d.index.reserve(d.monomials.size());
  for (std::size_t i = 0; i < d.monomials.size(); ++i) d.index.emplace(d.monomials[i], i);
  return d;
}

template <ExactField F>
GradedAlgebra<F> GradedAlgebra<F>::build(const QuadricPresentation<F>& pres, unsigned max_degree) {
  GradedAlgebra A(pres);
  const F& K = A.field();
  const unsigned top = std::max<unsigned>(max_degree, static_cast<unsigned>(pres.n() + 2));

  Degree d0 = A.make_degree(0);
  d0.standard = d0.monomials;
  d0.normal_forms = {Vector{K.one()}};
  A.degrees_.push_back(std::move(d0));

  Degree d1 = A.make_degree(1);
  d1.standard = d1.monomials;
  for (std::size_t i = 0; i < d1.monomials.size(); ++i) {
    Vector e(d1.monomials.size(), K.zero());
    e[i] = K.one();
    d1.normal_forms.push_back(std::move(e));
  }
  A.degrees_.push_back(std::move(d1));

  A.build_degree_two();
  for (unsigned k = 3; k <= top; ++k) A.build_degree(k);
  return A;
}

namespace {

std::size_t expected_dim(std::size_t n, unsigned k) {
  return k <= n + 1 ? static_cast<std::size_t>(binomial(n + 1, k)) : 0;
}

[[noreturn]] void not_regular(unsigned k, std::size_t found, std::size_t expected) {
  fail(ErrorKind::NotRegularSequence,
       "dim R^" + std::to_string(k) + " = " + std::to_string(found) + ", expected " + std::to_string(expected),
       static_cast<int>(k));
}

}  // namespace

template <ExactField F>
void GradedAlgebra<F>::build_degree_two() {
  const F& K = field();
  Degree d = make_degree(2);
  const std::size_t cols = d.monomials.size();
  Matrix<F> m(K, pres_.generators().size(), cols);
  for (std::size_t r = 0; r < pres_.generators().size(); ++r) {
    for (const auto& t : pres_.generators()[r].terms()) m(r, d.index.at(t.monomial)) = t.coeff;
  }
  auto ech = row_reduce(std::move(m));
  const std::size_t expected = expected_dim(n(), 2);
  if (cols - ech.rank() != expected) not_regular(2, cols - ech.rank(), expected);

  std::vector<long> pivot_row(cols, -1);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) pivot_row[ech.pivots[r]] = static_cast<long>(r);
  std::vector<std::size_t> standard_pos(cols, 0);
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_row[c] >= 0) continue;
    standard_pos[c] = d.standard.size();
    d.standard.push_back(d.monomials[c]);
  }
  for (std::size_t c = 0; c < cols; ++c) {
    Vector v(d.standard.size(), K.zero());
    if (pivot_row[c] < 0) {
      v[standard_pos[c]] = K.one();
    } else {
      auto r = static_cast<std::size_t>(pivot_row[c]);
      for (std::size_t j = 0; j < cols; ++j) {
        if (pivot_row[j] < 0 && !K.is_zero(ech.reduced(r, j))) v[standard_pos[j]] = K.neg(ech.reduced(r, j));
      }
    }
    d.normal_forms.push_back(std::move(v));
  }
  degrees_.push_back(std::move(d));
}

template <ExactField F>
void GradedAlgebra<F>::build_degree(unsigned k) {
  const F& K = field();
  const std::size_t nv = num_variables();
  const Degree& prev = degrees_[k - 1];
  const Degree& prev2 = degrees_[k - 2];
  Degree d = make_degree(k);

  // candidates x_j * b, b standard in degree k-1, in decreasing order
  std::vector<Monomial> cand;
  for (const auto& b : prev.standard)
    for (std::size_t j = 0; j < nv; ++j) cand.push_back(b.times_variable(j));
  std::sort(cand.begin(), cand.end(), std::greater<>());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::unordered_map<Monomial, std::size_t, MonomialHash> cand_index;
  for (std::size_t i = 0; i < cand.size(); ++i) cand_index.emplace(cand[i], i);

  const std::size_t expected = expected_dim(n(), k);
  if (cand.size() < expected) not_regular(k, cand.size(), expected);
  // Upper semicontinuity of the Hilbert function: n+1 forms never cut out
  // fewer relations in degree k than a complete intersection, so no further
  // row can raise the rank once it reaches this bound.
  const std::size_t rank_bound = cand.size() - expected;

  IncrementalEchelon<F> ech(K, cand.size());
  Vector row(cand.size(), K.zero());
  auto accumulate = [&](std::size_t var, const Vector& nf, bool negate) {
    for (std::size_t t = 0; t < nf.size(); ++t) {
      if (K.is_zero(nf[t])) continue;
      auto col = cand_index.at(prev.standard[t].times_variable(var));
      row[col] = negate ? K.sub(row[col], nf[t]) : K.add(row[col], nf[t]);
    }
  };
  for (const auto& b : prev2.standard) {
    if (ech.rank() >= rank_bound) break;
    for (std::size_t i = 0; i < nv && ech.rank() < rank_bound; ++i) {
      const auto xi_b = b.times_variable(i);
      const auto& nf_i = prev.normal_forms[prev.index.at(xi_b)];
      const bool i_standard = std::binary_search(prev.standard.begin(), prev.standard.end(), xi_b, std::greater<>());
      for (std::size_t j = i + 1; j < nv && ech.rank() < rank_bound; ++j) {
        const auto xj_b = b.times_variable(j);
        if (i_standard && std::binary_search(prev.standard.begin(), prev.standard.end(), xj_b, std::greater<>())) {
          continue;  // the relation is x_i x_j b - x_j x_i b = 0
        }
        const auto& nf_j = prev.normal_forms[prev.index.at(xj_b)];
        std::fill(row.begin(), row.end(), K.zero());
        accumulate(j, nf_i, false);
        accumulate(i, nf_j, true);
        ech.add(row);
      }
    }
  }
  ech.finish();
  if (cand.size() - ech.rank() != expected) not_regular(k, cand.size() - ech.rank(), expected);

  std::vector<long> pivot_row(cand.size(), -1);
  for (std::size_t r = 0; r < ech.pivots().size(); ++r) pivot_row[ech.pivots()[r]] = static_cast<long>(r);
  std::vector<std::size_t> standard_pos(cand.size(), 0);
  for (std::size_t c = 0; c < cand.size(); ++c) {
    if (pivot_row[c] >= 0) continue;
    standard_pos[c] = d.standard.size();
    d.standard.push_back(cand[c]);
  }
  // reduction of every candidate onto the standard monomials
  std::vector<Vector> reduced(cand.size());
  for (std::size_t c = 0; c < cand.size(); ++c) {
    Vector v(d.standard.size(), K.zero());
    if (pivot_row[c] < 0) {
      v[standard_pos[c]] = K.one();
    } else {
      const auto& r = ech.rows()[static_cast<std::size_t>(pivot_row[c])];
      for (std::size_t j = c + 1; j < cand.size(); ++j) {
        if (pivot_row[j] < 0 && !K.is_zero(r[j])) v[standard_pos[j]] = K.neg(r[j]);
      }
    }
    reduced[c] = std::move(v);
  }
  // NF(m) = sum_t NF(m / x_j)[t] * NF(x_j * b_t)
  d.normal_forms.reserve(d.monomials.size());
  for (const auto& m : d.monomials) {
    std::size_t j = 0;
    while (m[j] == 0) ++j;
    const auto& lower = prev.normal_forms[prev.index.at(m / Monomial::variable(j))];
    Vector v(d.standard.size(), K.zero());
    for (std::size_t t = 0; t < lower.size(); ++t) {
      if (K.is_zero(lower[t])) continue;
      const auto& red = reduced[cand_index.at(prev.standard[t].times_variable(j))];
      for (std::size_t s = 0; s < v.size(); ++s) {
        if (!K.is_zero(red[s])) v[s] = K.add(v[s], K.mul(lower[t], red[s]));
      }
    }
    d.normal_forms.push_back(std::move(v));
  }
  degrees_.push_back(std::move(d));
}

template <ExactField F>
void GradedAlgebra<F>::check_degree(unsigned k, const char* what) const {
  if (k > max_degree()) {
    fail(ErrorKind::DegreeOutOfRange, std::string(what) + ": degree " + std::to_string(k) +
                                          " exceeds the built range " + std::to_string(max_degree()));
  }
}

template <ExactField F>
void GradedAlgebra<F>::check_element(const AlgebraElement<F>& a) const {
  check_degree(a.degree, "element");
  if (a.coords.size() != dim(a.degree)) fail(ErrorKind::InvalidArgument, "coordinate vector has wrong length");
}

template <ExactField F>
std::size_t GradedAlgebra<F>::dim(unsigned k) const {
  check_degree(k, "dim");
  return degrees_[k].standard.size();
}

template <ExactField F>
std::vector<std::size_t> GradedAlgebra<F>::dims() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees_) out.push_back(d.standard.size());
  return out;
}

template <ExactField F>
const std::vector<Monomial>& GradedAlgebra<F>::standard_monomials(unsigned k) const {
  check_degree(k, "standard_monomials");
  return degrees_[k].standard;
}

template <ExactField F>
AlgebraElement<F> GradedAlgebra<F>::zero(unsigned k) const {
  return {k, Vector(dim(k), field().zero())};
}

template <ExactField F>
AlgebraElement<F> GradedAlgebra<F>::one() const {
  return {0, Vector{field().one()}};
}

template <ExactField F>
AlgebraElement<F> GradedAlgebra<F>::basis_element(unsigned k, std::size_t index) const {
  auto e = zero(k);
  if (index >= e.coords.size()) fail(ErrorKind::InvalidArgument, "basis index out of range");
  e.coords[index] = field().one();
  return e;
}

template <ExactField F>
AlgebraElement<F> GradedAlgebra<F>::linear(const Vector& coefficients) const {
  if (coefficients.size() != num_variables()) fail(ErrorKind::InvalidArgument, "linear form needs n+1 coefficients");
  return {1, coefficients};
}

template <ExactField F>
AlgebraElement<F> GradedAlgebra<F>::variable(std::size_t i) const {
  return basis_element(1, i);
}

template <ExactField F>
const typename GradedAlgebra<F>::Vector& GradedAlgebra<F>::normal_form(const Monomial& m) const {
  check_degree(m.degree(), "normal_form");
  const auto& d = degrees_[m.degree()];
  auto it = d.index.find(m);
  if (it == d.index.end()) fail(ErrorKind::InvalidArgument, "monomial outside the ring");
  return d.normal_forms[it->second];
}

template <ExactField F>
AlgebraElement<F> GradedAlgebra<F>::normal_form(const Polynomial<F>& f) const {
  if (!(f.field() == field())) fail(ErrorKind::FieldMismatch, f.field().descriptor() + " vs " + field().descriptor());
  if (f.num_variables() != num_variables()) fail(ErrorKind::FieldMismatch, "polynomial lives in another ring");
  if (!f.is_homogeneous()) fail(ErrorKind::NotHomogeneous, "normal_form needs a form");
  const F& K = field();
  auto out = zero(f.degree());
  for (const auto& t : f.terms()) {
    const auto& nf = normal_form(t.monomial);
    for (std::size_t s = 0; s < nf.size(); ++s) {
      if (!K.is_zero(nf[s])) out.coords[s] = K.add(out.coords[s], K.mul(t.coeff, nf[s]));
    }
  }
  return out;
}

template <ExactField F>
Polynomial<F> GradedAlgebra<F>::to_polynomial(const AlgebraElement<F>& a) const {
  check_element(a);
  std::vector<typename Polynomial<F>::Term> terms;
  const auto& basis = degrees_[a.degree].standard;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!field().is_zero(a.coords[i])) terms.push_back({basis[i], a.coords[i]});
  }
  return Polynomial<F>::from_terms(field(), num_variables(), std::move(terms), a.degree);
}

template <ExactField F>
AlgebraElement<F> GradedAlgebra<F>::add(const AlgebraElement<F>& a, const AlgebraElement<F>& b) const {
  check_element(a);
  check_element(b);
  if (a.degree != b.degree) fail(ErrorKind::InvalidArgument, "adding elements of different degrees");
  auto out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = field().add(out.coords[i], b.coords[i]);
  return out;
}

template <ExactField F>
AlgebraElement<F> GradedAlgebra<F>::scale(const AlgebraElement<F>& a, const Element& c) const {
  check_element(a);
  auto out = a;
  for (auto& x : out.coords) x = field().mul(x, c);
  return out;
}

template <ExactField F>
bool GradedAlgebra<F>::is_zero(const AlgebraElement<F>& a) const {
  return std::all_of(a.coords.begin(), a.coords.end(), [&](const Element& x) { return field().is_zero(x); });
}

template <ExactField F>
bool GradedAlgebra<F>::equal(const AlgebraElement<F>& a, const AlgebraElement<F>& b) const {
  if (a.degree != b.degree || a.coords.size() != b.coords.size()) return false;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (!field().equal(a.coords[i], b.coords[i])) return false;
  }
  return true;
}

template <ExactField F>
AlgebraElement<F> GradedAlgebra<F>::multiply(const AlgebraElement<F>& a, const AlgebraElement<F>& b) const {
  check_element(a);
  check_element(b);
  const F& K = field();
  auto out = zero(a.degree + b.degree);
  const auto& ba = degrees_[a.degree].standard;
  const auto& bb = degrees_[b.degree].standard;
  for (std::size_t u = 0; u < ba.size(); ++u) {
    if (K.is_zero(a.coords[u])) continue;
    for (std::size_t v = 0; v < bb.size(); ++v) {
      if (K.is_zero(b.coords[v])) continue;
      auto c = K.mul(a.coords[u], b.coords[v]);
      const auto& nf = normal_form(ba[u] * bb[v]);
      for (std::size_t s = 0; s < nf.size(); ++s) {
        if (!K.is_zero(nf[s])) out.coords[s] = K.add(out.coords[s], K.mul(c, nf[s]));
      }
    }
  }
  return out;
}

template <ExactField F>
AlgebraElement<F> GradedAlgebra<F>::power(const AlgebraElement<F>& a, unsigned k) const {
  check_element(a);
  check_degree(a.degree * k, "power");
  auto out = one();
  for (unsigned i = 0; i < k; ++i) out = multiply(out, a);
  return out;
}

template <ExactField F>
Matrix<F> GradedAlgebra<F>::mult_map_matrix(const AlgebraElement<F>& q, unsigned a) const {
  check_element(q);
  check_degree(a + q.degree, "mult_map_matrix");
  const F& K = field();
  const auto& source = degrees_[a].standard;
  const auto& qbasis = degrees_[q.degree].standard;
  Matrix<F> m(K, dim(a + q.degree), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    for (std::size_t t = 0; t < qbasis.size(); ++t) {
      if (K.is_zero(q.coords[t])) continue;
      const auto& nf = normal_form(qbasis[t] * source[j]);
      for (std::size_t s = 0; s < nf.size(); ++s) {
        if (!K.is_zero(nf[s])) m(s, j) = K.add(m(s, j), K.mul(q.coords[t], nf[s]));
      }
    }
  }
  return m;
}

template <ExactField F>
std::vector<AlgebraElement<F>> GradedAlgebra<F>::kernel(const AlgebraElement<F>& q, unsigned a) const {
  std::vector<AlgebraElement<F>> out;
  for (auto& v : nullspace(mult_map_matrix(q, a))) out.push_back({a, std::move(v)});
  return out;
}

template <ExactField F>
std::size_t GradedAlgebra<F>::kernel_dimension(const AlgebraElement<F>& q, unsigned a) const {
  auto m = mult_map_matrix(q, a);
  return m.cols() - rank(m);
}

template <ExactField F>
Matrix<F> GradedAlgebra<F>::socle_pairing_matrix(unsigned j) const {
  const unsigned N = socle_degree();
  if (j > N) fail(ErrorKind::DegreeOutOfRange, "pairing degree " + std::to_string(j) + " exceeds the socle degree");
  const auto& left = degrees_[j].standard;
  const auto& right = degrees_[N - j].standard;
  Matrix<F> m(field(), left.size(), right.size());
  for (std::size_t u = 0; u < left.size(); ++u)
    for (std::size_t v = 0; v < right.size(); ++v) m(u, v) = normal_form(left[u] * right[v])[0];
  return m;
}

template <ExactField F>
LinearQuotient<F> GradedAlgebra<F>::quotient_by_linear(const AlgebraElement<F>& z) const {
  check_element(z);
  if (z.degree != 1) fail(ErrorKind::InvalidArgument, "quotient_by_linear needs a linear form");
  if (is_zero(z)) fail(ErrorKind::InvalidArgument, "quotient_by_linear needs a nonzero linear form");
  auto annihilators = kernel(z, 1);
  if (annihilators.empty()) fail(ErrorKind::NotAnnihilated, "no nonzero w in R^1 with z*w = 0");
  const F& K = field();

  // eliminate the first variable with a nonzero coefficient in z
  std::size_t p = 0;
  while (K.is_zero(z.coords[p])) ++p;
  const std::size_t target_vars = num_variables() - 1;
  const auto target_ctx = VariableContext::ring(target_vars - 1);
  std::vector<Polynomial<F>> images;
  auto scale = K.neg(K.inv(z.coords[p]));
  for (std::size_t i = 0; i < num_variables(); ++i) {
    if (i == p) {
      Polynomial<F> sub(K, target_vars, 1);
      for (std::size_t j = 0; j < num_variables(); ++j) {
        if (j == p || K.is_zero(z.coords[j])) continue;
        auto var = Polynomial<F>::variable(K, target_vars, j < p ? j : j - 1);
        sub += var.scaled(K.mul(scale, z.coords[j]));
      }
      images.push_back(std::move(sub));
    } else {
      images.push_back(Polynomial<F>::variable(K, target_vars, i < p ? i : i - 1));
    }
  }
  // the n+1 reduced quadrics span an n-dimensional space; keep an echelon basis
  const auto quad_basis = monomial_basis(target_vars - 1, 2);
  Matrix<F> coeffs(K, num_variables(), quad_basis.size());
  for (std::size_t r = 0; r < num_variables(); ++r) {
    auto g = pres_.generators()[r].substitute(images);
    for (const auto& t : g.terms()) {
      auto pos = std::find(quad_basis.begin(), quad_basis.end(), t.monomial) - quad_basis.begin();
      coeffs(r, static_cast<std::size_t>(pos)) = t.coeff;
    }
  }
  auto ech = row_reduce(std::move(coeffs));
  if (ech.rank() != target_vars) {
    fail(ErrorKind::NotRegularSequence,
         "reduced quadrics span a space of dimension " + std::to_string(ech.rank()) + ", expected " +
             std::to_string(target_vars),
         2);
  }
  std::vector<Polynomial<F>> gens;
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    std::vector<typename Polynomial<F>::Term> terms;
    for (std::size_t c = 0; c < quad_basis.size(); ++c) {
      if (!K.is_zero(ech.reduced(r, c))) terms.push_back({quad_basis[c], ech.reduced(r, c)});
    }
    gens.push_back(Polynomial<F>::from_terms(K, target_vars, std::move(terms), 2));
  }
  QuadricPresentation<F> qpres(K, target_ctx, std::move(gens));

  LinearQuotient<F> result{GradedAlgebra::build(qpres), annihilators.front(), p, {}, true};
  const auto& w = result.annihilator;
  for (unsigned s = 1; s <= socle_degree(); ++s) {
    DimensionIdentity id;
    id.s = s;
    id.kernel_w = kernel_dimension(w, s);
    id.previous_dim = dim(s - 1);
    id.kernel_z_previous = kernel_dimension(z, s - 1);
    id.holds = id.kernel_w + id.kernel_z_previous == id.previous_dim;
    result.identities_hold = result.identities_hold && id.holds;
    result.identities.push_back(id);
  }
  return result;
}

template class QuadricPresentation<Rationals>;
template class QuadricPresentation<PrimeField>;
template class GradedAlgebra<Rationals>;
template class GradedAlgebra<PrimeField>;

}  // namespace saga
