#include "saga/loci.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "saga/univariate.hpp"

namespace saga {

namespace {

template <ExactField F>
using Vec = std::vector<typename F::Element>;

template <ExactField F>
void check_linear(const AlgebraElement<F>& x, const char* what) {
  if (x.degree != 1) fail(ErrorKind::InvalidArgument, std::string(what) + " must be a linear form");
}

template <ExactField F>
void check_power_range(const GradedAlgebra<F>& A, unsigned k) {
  if (k > A.max_degree()) fail(ErrorKind::DegreeOutOfRange, "power " + std::to_string(k) + " beyond the built degrees");
}

VariableContext numbered_context(std::string_view prefix, std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return VariableContext(std::move(names));
}

/// Linear form with the given coefficients over `basis`.
template <ExactField F>
AlgebraElement<F> combination(const GradedAlgebra<F>& A, const std::vector<AlgebraElement<F>>& basis,
                              const Vec<F>& coeffs) {
  auto x = A.zero(1);
  for (std::size_t i = 0; i < basis.size(); ++i) x = A.add(x, A.scale(basis[i], coeffs[i]));
  return x;
}

/// prod basis_i^beta_i
template <ExactField F>
AlgebraElement<F> monomial_in(const GradedAlgebra<F>& A, const std::vector<AlgebraElement<F>>& basis,
                              const Monomial& beta) {
  auto out = A.one();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (unsigned e = 0; e < beta[i]; ++e) out = A.multiply(out, basis[i]);
  }
  return out;
}

template <ExactField F>
std::vector<Vec<F>> coordinate_vectors(const std::vector<AlgebraElement<F>>& xs) {
  std::vector<Vec<F>> out;
  for (const auto& x : xs) out.push_back(x.coords);
  return out;
}

template <ExactField F>
univariate::Poly<F> derivative(const F& K, const univariate::Poly<F>& f) {
  univariate::Poly<F> d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(K.mul(f[i], K.from_int(static_cast<long long>(i))));
  univariate::trim(K, d);
  return d;
}

/// Number of distinct roots over the algebraic closure (characteristic zero
/// or larger than the degree).
template <ExactField F>
std::size_t distinct_root_count(const F& K, const univariate::Poly<F>& f) {
  int d = univariate::degree(K, f);
  if (d <= 0) return 0;
  auto g = univariate::gcd(K, f, derivative(K, f));
  return static_cast<std::size_t>(d - std::max(0, univariate::degree(K, g)));
}

/// Minimal polynomial of the variable `var` in K[y]/I for zero-dimensional I.
template <ExactField F>
univariate::Poly<F> minimal_polynomial(const GroebnerBasis<F>& G, std::size_t var) {
  const F& K = G.field();
  const std::size_t nv = G.num_variables();
  auto basis = standard_monomials(G);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  auto to_vector = [&](const Polynomial<F>& r) {
    Vec<F> v(basis.size(), K.zero());
    for (const auto& t : r.terms()) v[index.at(t.monomial)] = t.coeff;
    return v;
  };
  auto y = Polynomial<F>::variable(K, nv, var);
  auto current = member(Polynomial<F>::constant(K, nv, K.one()), G).remainder;
  std::vector<Vec<F>> powers;
  while (true) {
    powers.push_back(to_vector(current));
    Matrix<F> m(K, basis.size(), powers.size());
    for (std::size_t j = 0; j < powers.size(); ++j) m.set_column(j, powers[j]);
    auto null = nullspace(m);
    if (!null.empty()) {
      univariate::Poly<F> f(null.front().begin(), null.front().end());
      univariate::trim(K, f);
      return univariate::monic(K, f);
    }
    current = member(current * y, G).remainder;
  }
}

template <ExactField F>
struct Solutions {
  std::vector<Vec<F>> points;
  bool complete = true;
};

/// All solutions in K^m of a zero-dimensional affine system in m >= 1
/// variables.
template <ExactField F>
Solutions<F> solve_zero_dimensional(const F& K, std::size_t m, const std::vector<Polynomial<F>>& system,
                                    const GroebnerBudget& budget) {
  Solutions<F> out;
  auto G = buchberger(Ideal<F>(K, numbered_context("y", m), system), budget);
  if (G.is_unit()) return out;
  auto f = minimal_polynomial(G, 0);
  auto found = univariate::roots(K, f);
  out.complete = found.complete;
  for (const auto& r : found.roots) {
    if (m == 1) {
      out.points.push_back({r});
      continue;
    }
    std::vector<Polynomial<F>> images;
    images.push_back(Polynomial<F>::constant(K, m - 1, r));
    for (std::size_t j = 1; j < m; ++j) images.push_back(Polynomial<F>::variable(K, m - 1, j - 1));
    std::vector<Polynomial<F>> reduced;
    for (const auto& g : G.polynomials()) reduced.push_back(g.substitute(images));
    auto rest = solve_zero_dimensional(K, m - 1, reduced, budget);
    out.complete = out.complete && rest.complete;
    for (auto& p : rest.points) {
      p.insert(p.begin(), r);
      out.points.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

template <ExactField F>
LocusIdeal<F> nihil_ideal(const GradedAlgebra<F>& A, unsigned k) {
  if (k < 2 || k > A.socle_degree()) {
    fail(ErrorKind::DegreeOutOfRange, "nihil ideal degree " + std::to_string(k) + " outside [2, N]");
  }
  const F& K = A.field();
  const std::size_t nv = A.num_variables();
  std::vector<Polynomial<F>> eqs(A.dim(k), Polynomial<F>(K, nv, k));
  std::vector<std::vector<typename Polynomial<F>::Term>> terms(A.dim(k));
  for (const auto& m : monomial_basis(A.n(), k)) {
    auto c = K.from_int(static_cast<long long>(multinomial(m)));
    const auto& nf = A.normal_form(m);
    for (std::size_t b = 0; b < nf.size(); ++b) {
      if (!K.is_zero(nf[b])) terms[b].push_back({m, K.mul(c, nf[b])});
    }
  }
  for (std::size_t b = 0; b < eqs.size(); ++b) eqs[b] = Polynomial<F>::from_terms(K, nv, std::move(terms[b]), k);
  return {LocusIdeal<F>::Kind::Nihil, k, Ideal<F>(K, VariableContext::dual(A.n()), std::move(eqs)),
          "coordinates of (w0*x0 + ... + w" + std::to_string(A.n()) + "*x" + std::to_string(A.n()) + ")^" +
              std::to_string(k) + " in the standard monomial basis of R^" + std::to_string(k) + " over " +
              K.descriptor()};
}

template <ExactField F>
bool nihil_membership(const GradedAlgebra<F>& A, const AlgebraElement<F>& x, unsigned k) {
  check_linear(x, "nihil_membership argument");
  check_power_range(A, k);
  return A.is_zero(A.power(x, k));
}

template <ExactField F>
int nihil_dimension(const GradedAlgebra<F>& A, unsigned k, const GroebnerBudget& budget) {
  return projective_dimension(buchberger(nihil_ideal(A, k).ideal, budget));
}

template <ExactField F>
AlgebraElement<F> normalized_point(const GradedAlgebra<F>& A, AlgebraElement<F> x) {
  const F& K = A.field();
  for (const auto& c : x.coords) {
    if (!K.is_zero(c)) return A.scale(x, K.inv(c));
  }
  return x;
}

template <ExactField F>
N2Analysis<F> n2_analysis(const GradedAlgebra<F>& A, const GroebnerBudget& budget) {
  const F& K = A.field();
  const std::size_t nv = A.num_variables();
  auto eqs = nihil_ideal(A, 2).ideal.generators();
  N2Analysis<F> out;
  for (std::size_t i = 0; i < nv; ++i) {
    const std::size_t m = nv - i - 1;
    Vec<F> prefix(nv, K.zero());
    prefix[i] = K.one();
    if (m == 0) {
      bool vanish = std::all_of(eqs.begin(), eqs.end(), [&](const auto& g) { return K.is_zero(g.evaluate(prefix)); });
      if (vanish) {
        ++out.degree;
        out.rational_points.push_back(A.linear(prefix));
      }
      continue;
    }
    std::vector<Polynomial<F>> images;
    for (std::size_t j = 0; j < nv; ++j) {
      if (j < i) images.push_back(Polynomial<F>::constant(K, m, K.zero()));
      else if (j == i) images.push_back(Polynomial<F>::constant(K, m, K.one()));
      else images.push_back(Polynomial<F>::variable(K, m, j - i - 1));
    }
    std::vector<Polynomial<F>> chart;
    for (const auto& g : eqs) chart.push_back(g.substitute(images));
    auto G = buchberger(Ideal<F>(K, numbered_context("y", m), chart), budget);
    if (G.is_unit()) continue;
    out.degree += zero_dim_degree(G);
    auto sols = solve_zero_dimensional(K, m, G.polynomials(), budget);
    out.points_complete = out.points_complete && sols.complete;
    for (const auto& s : sols.points) {
      Vec<F> coords = prefix;
      std::copy(s.begin(), s.end(), coords.begin() + static_cast<std::ptrdiff_t>(i + 1));
      out.rational_points.push_back(A.linear(coords));
    }
  }
  auto vectors = coordinate_vectors(out.rational_points);
  out.independent = span_dimension<F>(K, vectors, nv) == vectors.size();
  if (out.rational_points.size() > A.socle_degree()) {
    out.product_nonzero = false;
  } else {
    auto product = A.one();
    for (const auto& p : out.rational_points) product = A.multiply(product, p);
    out.product_nonzero = !A.is_zero(product);
  }
  out.fermat_candidate = out.degree == nv;
  return out;
}

template <ExactField F>
TangentSpaceReport<F> tangent_space(const GradedAlgebra<F>& A, const AlgebraElement<F>& point, unsigned k) {
  check_linear(point, "tangent_space point");
  if (!nihil_membership(A, point, k)) fail(ErrorKind::NotOnLocus, "point^" + std::to_string(k) + " is not zero");
  const F& K = A.field();
  const std::size_t nv = A.num_variables();
  const auto locus = nihil_ideal(A, k);
  const auto& eqs = locus.ideal.generators();
  Matrix<F> jac(K, eqs.size(), nv);
  for (std::size_t r = 0; r < eqs.size(); ++r) {
    for (std::size_t c = 0; c < nv; ++c) jac(r, c) = eqs[r].derivative(c).evaluate(point.coords);
  }
  TangentSpaceReport<F> out;
  out.point = point;
  out.k = k;
  out.jacobian_nullspace = nullspace(jac);
  auto eta = A.power(point, k - 1);
  out.power_nonzero = !A.is_zero(eta);
  out.kernel_space = coordinate_vectors(A.kernel(eta, 1));
  auto both = out.jacobian_nullspace;
  both.insert(both.end(), out.kernel_space.begin(), out.kernel_space.end());
  out.contained = span_dimension<F>(K, both, nv) == out.kernel_space.size();
  out.equal = same_span<F>(K, out.jacobian_nullspace, out.kernel_space, nv);
  return out;
}

template <ExactField F>
DecompositionCheck verify_component_decomposition(const GradedAlgebra<F>& A, unsigned k,
                                                  const std::vector<Ideal<F>>& components,
                                                  const GroebnerBudget& budget) {
  if (components.empty()) fail(ErrorKind::InvalidArgument, "no components given");
  auto nihil = nihil_ideal(A, k).ideal;
  DecompositionCheck out;
  out.holds = true;

  // in the radical of I: cheap ideal membership first, Rabinowitsch otherwise
  auto in_radical = [&](const Polynomial<F>& f, const Ideal<F>& I, const GroebnerBasis<F>& G) {
    return member(f, G).member || radical_membership(f, I, budget);
  };

  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& comp = components[c];
    if (comp.num_variables() != A.num_variables() || !(comp.field() == A.field())) {
      fail(ErrorKind::FieldMismatch, "component " + std::to_string(c) + " lives in another ring");
    }
    auto G = buchberger(comp, budget);
    std::size_t bad = 0;
    for (const auto& g : nihil.generators()) {
      if (!in_radical(g, comp, G)) ++bad;
    }
    out.log.push_back("component " + std::to_string(c) + " inside N_" + std::to_string(k) + ": " +
                      (bad == 0 ? "yes" : std::to_string(bad) + " equations do not vanish"));
    out.holds = out.holds && bad == 0;
  }

  std::vector<std::vector<Polynomial<F>>> gens;
  for (const auto& comp : components) {
    std::vector<Polynomial<F>> nonzero;
    for (const auto& g : comp.generators()) {
      if (!g.is_zero()) nonzero.push_back(g);
    }
    gens.push_back(std::move(nonzero));
  }
  auto G = buchberger(nihil, budget);
  std::size_t checked = 0, bad = 0;
  bool empty_component = std::any_of(gens.begin(), gens.end(), [](const auto& g) { return g.empty(); });
  if (empty_component) {
    out.log.push_back("a component has no equations and covers everything");
  } else {
    std::vector<std::size_t> pick(gens.size(), 0);
    while (true) {
      auto f = gens[0][pick[0]];
      for (std::size_t c = 1; c < gens.size(); ++c) f = f * gens[c][pick[c]];
      ++checked;
      if (!in_radical(f, nihil, G)) ++bad;
      std::size_t c = 0;
      while (c < pick.size() && ++pick[c] == gens[c].size()) pick[c++] = 0;
      if (c == pick.size()) break;
    }
  }
  out.log.push_back("N_" + std::to_string(k) + " inside the union: " + std::to_string(checked) + " products, " +
                    (bad == 0 ? "all in the radical" : std::to_string(bad) + " outside the radical"));
  out.holds = out.holds && bad == 0;
  return out;
}

template <ExactField F>
SecantCheck<F> secant_containment_check(const GradedAlgebra<F>& A, std::span<const AlgebraElement<F>> points,
                                        unsigned a, unsigned k, unsigned r, std::size_t trials, std::uint64_t seed) {
  if (points.size() < k) {
    fail(ErrorKind::InsufficientPoints,
         "need " + std::to_string(k) + " points of N_" + std::to_string(a) + ", have " + std::to_string(points.size()));
  }
  for (const auto& p : points) {
    if (!nihil_membership(A, p, a)) fail(ErrorKind::NotOnLocus, "a supplied point is not in N_" + std::to_string(a));
  }
  SecantCheck<F> out;
  std::vector<std::size_t> order(points.size());
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = make_rng(seed, t);
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    auto x = A.zero(1);
    for (unsigned i = 0; i < k; ++i) x = A.add(x, A.scale(points[order[i]], A.field().random(rng)));
    ++out.trials;
    if (!nihil_membership(A, x, r)) {
      out.holds = false;
      out.counterexample = x;
      break;
    }
  }
  return out;
}

template <ExactField F>
LineCheck<F> line_in_n3_check(const GradedAlgebra<F>& A, const AlgebraElement<F>& v, const AlgebraElement<F>& w) {
  check_linear(v, "line endpoint");
  check_linear(w, "line endpoint");
  const F& K = A.field();
  std::vector<Vec<F>> span{v.coords, w.coords};
  if (span_dimension<F>(K, span, A.num_variables()) != 2) fail(ErrorKind::NotALineInN3, "points are dependent");
  auto v2 = A.multiply(v, v), vw = A.multiply(v, w), w2 = A.multiply(w, w);
  // (v + t w)^3 = v^3 + 3t v^2 w + 3t^2 v w^2 + t^3 w^3
  for (const auto& c : {A.multiply(v2, v), A.multiply(v2, w), A.multiply(w2, v), A.multiply(w2, w)}) {
    if (!A.is_zero(c)) fail(ErrorKind::NotALineInN3, "the pencil leaves N_3");
  }
  LineCheck<F> out;
  out.point_at_infinity = A.is_zero(w2);
  // (v + t w)^2 = v^2 + 2t vw + t^2 w^2, coordinate by coordinate
  univariate::Poly<F> g;
  for (std::size_t b = 0; b < v2.coords.size(); ++b) {
    univariate::Poly<F> f{v2.coords[b], K.add(vw.coords[b], vw.coords[b]), w2.coords[b]};
    univariate::trim(K, f);
    g = univariate::gcd(K, g, f);
  }
  out.chart_polynomial = g;
  if (g.empty()) {
    // the whole line lies in N_2
    out.holds = false;
    return out;
  }
  out.distinct_points = distinct_root_count(K, g) + (out.point_at_infinity ? 1 : 0);
  for (const auto& t : univariate::roots(K, g).roots) {
    out.rational_points.push_back(normalized_point(A, A.add(v, A.scale(w, t))));
  }
  if (out.point_at_infinity) out.rational_points.push_back(normalized_point(A, w));
  out.holds = out.distinct_points == 2;
  return out;
}

template <ExactField F>
PlaneSection<F> plane_section_check(const GradedAlgebra<F>& A, const std::vector<AlgebraElement<F>>& plane,
                                    std::uint64_t seed) {
  const F& K = A.field();
  const unsigned k = static_cast<unsigned>(plane.size());
  if (k == 0) fail(ErrorKind::InvalidArgument, "empty plane");
  for (const auto& x : plane) check_linear(x, "plane basis element");
  auto vectors = coordinate_vectors(plane);
  if (span_dimension<F>(K, vectors, A.num_variables()) != k) fail(ErrorKind::InvalidArgument, "dependent plane basis");
  check_power_range(A, k + 1);

  // the plane lies in N_{k+1} iff every degree-(k+1) monomial in the basis vanishes
  for (const auto& beta : monomial_basis(k - 1, k + 1)) {
    if (!A.is_zero(monomial_in(A, plane, beta))) {
      fail(ErrorKind::PlaneNotInLocus, "the plane is not contained in N_" + std::to_string(k + 1));
    }
  }

  // choose a basis whose last element is not in N_k
  std::vector<Vec<F>> candidates;
  auto unit = [&](std::size_t i) {
    Vec<F> e(k, K.zero());
    e[i] = K.one();
    return e;
  };
  candidates.push_back(unit(k - 1));
  for (std::size_t i = 0; i + 1 < k; ++i) candidates.push_back(unit(i));
  for (std::size_t i = 0; i + 1 < k; ++i) {
    auto e = unit(k - 1);
    e[i] = K.one();
    candidates.push_back(e);
  }
  for (std::size_t t = 0; t < 16; ++t) {
    Rng rng = make_rng(seed, t);
    Vec<F> e(k);
    for (auto& c : e) c = K.random(rng);
    candidates.push_back(e);
  }
  PlaneSection<F> out{{}, Polynomial<F>(K, k, k), true, {}};
  for (const auto& c : candidates) {
    auto x = combination(A, plane, c);
    if (A.is_zero(A.power(x, k))) continue;
    std::size_t drop = 0;
    while (K.is_zero(c[drop])) ++drop;
    for (std::size_t i = 0; i < k; ++i) {
      if (i != drop) out.basis.push_back(plane[i]);
    }
    out.basis.push_back(x);
    break;
  }
  if (out.basis.empty()) fail(ErrorKind::BasePointInNk, "no element of the plane found outside N_" + std::to_string(k));

  auto top = A.power(out.basis.back(), k);
  std::size_t pivot = 0;
  while (K.is_zero(top.coords[pivot])) ++pivot;
  std::vector<typename Polynomial<F>::Term> terms;
  for (const auto& beta : monomial_basis(k - 1, k)) {
    auto P = monomial_in(A, out.basis, beta);
    auto c = K.div(P.coords[pivot], top.coords[pivot]);
    if (!A.equal(P, A.scale(top, c))) out.proportional = false;
    terms.push_back({beta, K.mul(c, K.from_int(static_cast<long long>(multinomial(beta))))});
  }
  out.p_k = Polynomial<F>::from_terms(K, k, std::move(terms), k);

  // points of V(p_k): coordinate points, then roots along random lines
  std::vector<Vec<F>> found;
  auto add_point = [&](Vec<F> a) {
    std::size_t lead = 0;
    while (lead < a.size() && K.is_zero(a[lead])) ++lead;
    if (lead == a.size()) return;
    auto inv = K.inv(a[lead]);
    for (auto& c : a) c = K.mul(c, inv);
    for (const auto& f : found) {
      if (std::equal(f.begin(), f.end(), a.begin(), [&](const auto& x, const auto& y) { return K.equal(x, y); })) return;
    }
    found.push_back(std::move(a));
  };
  for (std::size_t i = 0; i < k; ++i) {
    if (K.is_zero(out.p_k.evaluate(unit(i)))) add_point(unit(i));
  }
  if (k >= 2 && !out.p_k.is_zero()) {
    for (std::size_t t = 0; t < 40 && found.size() < 4 * k; ++t) {
      Rng rng = make_rng(seed ^ 0xabcdefULL, t);
      Vec<F> u(k), d(k);
      for (auto& c : u) c = K.small_random(rng, 5);
      for (auto& c : d) c = K.small_random(rng, 5);
      std::vector<Polynomial<F>> images;
      for (std::size_t i = 0; i < k; ++i) {
        images.push_back(Polynomial<F>::constant(K, 1, u[i]) + Polynomial<F>::variable(K, 1, 0).scaled(d[i]));
      }
      auto h = out.p_k.substitute(images);
      univariate::Poly<F> f(k + 1, K.zero());
      for (const auto& term : h.terms()) f[term.monomial[0]] = term.coeff;
      univariate::trim(K, f);
      if (f.empty()) continue;
      for (const auto& r : univariate::roots(K, f).roots) {
        Vec<F> a(k);
        for (std::size_t i = 0; i < k; ++i) a[i] = K.add(u[i], K.mul(r, d[i]));
        add_point(std::move(a));
      }
    }
  }

  // k independent points with nonzero product, by bounded depth-first search
  std::vector<std::size_t> chosen;
  std::size_t leaves = 0;
  auto search = [&](auto&& self, std::size_t start) -> bool {
    if (chosen.size() == k) {
      ++leaves;
      auto product = A.one();
      for (auto i : chosen) product = A.multiply(product, combination(A, out.basis, found[i]));
      return !A.is_zero(product);
    }
    for (std::size_t i = start; i < found.size() && leaves < 5000; ++i) {
      std::vector<Vec<F>> rows;
      for (auto j : chosen) rows.push_back(found[j]);
      rows.push_back(found[i]);
      if (span_dimension<F>(K, rows, k) != rows.size()) continue;
      chosen.push_back(i);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (search(search, 0)) {
    for (auto i : chosen) out.nondegenerate_points.push_back(combination(A, out.basis, found[i]));
  }
  return out;
}

template <ExactField F>
LocusIdeal<F> non_lefschetz_ideal(const GradedAlgebra<F>& A, unsigned a, std::size_t gate) {
  if (a + 1 > A.socle_degree()) {
    fail(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(a) + " has no successor below the socle");
  }
  const F& K = A.field();
  const std::size_t nv = A.num_variables();
  std::vector<Matrix<F>> mats;
  for (std::size_t i = 0; i < nv; ++i) mats.push_back(A.mult_map_matrix(A.variable(i), a));
  const std::size_t rows = A.dim(a + 1), cols = A.dim(a);
  // index the long side by a bitmask; minors use every line of the short side
  const bool transpose = cols > rows;
  const std::size_t long_side = transpose ? cols : rows;
  const std::size_t r = transpose ? rows : cols;
  const std::uint64_t count = binomial(long_side, r);
  if (count > gate || long_side > 63) {
    fail(ErrorKind::SizeGateExceeded,
         std::to_string(count) + " maximal minors exceed the gate of " + std::to_string(gate));
  }
  auto entry = [&](std::size_t l, std::size_t s) {
    std::vector<typename Polynomial<F>::Term> t;
    for (std::size_t i = 0; i < nv; ++i) {
      const auto& c = transpose ? mats[i](s, l) : mats[i](l, s);
      if (!K.is_zero(c)) t.push_back({Monomial::variable(i), c});
    }
    return Polynomial<F>::from_terms(K, nv, std::move(t), 1);
  };
  std::vector<std::vector<Polynomial<F>>> E(long_side);
  for (std::size_t l = 0; l < long_side; ++l)
    for (std::size_t s = 0; s < r; ++s) E[l].push_back(entry(l, s));

  // D(S) = det(rows S, columns 0..|S|-1), by expansion along the last column
  std::unordered_map<std::uint64_t, Polynomial<F>> memo;
  auto det = [&](auto&& self, std::uint64_t S) -> Polynomial<F> {
    const int m = std::popcount(S);
    if (m == 0) return Polynomial<F>::constant(K, nv, K.one());
    if (auto it = memo.find(S); it != memo.end()) return it->second;
    Polynomial<F> total(K, nv, static_cast<unsigned>(m));
    int q = 0;
    for (std::size_t l = 0; l < long_side; ++l) {
      if (!(S >> l & 1)) continue;
      const auto& e = E[l][static_cast<std::size_t>(m - 1)];
      if (!e.is_zero()) {
        auto term = e * self(self, S & ~(std::uint64_t{1} << l));
        total = ((q + m - 1) % 2 == 0) ? total + term : total - term;
      }
      ++q;
    }
    memo.emplace(S, total);
    return total;
  };
  std::vector<Polynomial<F>> minors;
  if (r == 0) {
    minors.push_back(Polynomial<F>::constant(K, nv, K.one()));
  } else {
    // every r-subset of the long side, in colex order
    std::uint64_t S = (std::uint64_t{1} << r) - 1;
    const std::uint64_t limit = std::uint64_t{1} << long_side;
    while (S < limit) {
      auto d = det(det, S);
      if (!d.is_zero()) minors.push_back(std::move(d));
      std::uint64_t c = S & -S, rr = S + c;
      S = (((rr ^ S) >> 2) / c) | rr;
    }
  }
  if (minors.empty()) minors.push_back(Polynomial<F>(K, nv, static_cast<unsigned>(r)));
  return {LocusIdeal<F>::Kind::NonLefschetz, a, Ideal<F>(K, VariableContext::dual(A.n()), std::move(minors)),
          "nonzero maximal minors (size " + std::to_string(r) + ") of the matrix of (w0*x0 + ... )*: R^" +
              std::to_string(a) + " -> R^" + std::to_string(a + 1) + " in standard monomial bases over " +
              K.descriptor()};
}

template <ExactField F>
FiberStatistics fiber_statistics(const GradedAlgebra<F>& A, unsigned k, std::size_t samples, std::uint64_t seed) {
  check_power_range(A, k + 1);
  FiberStatistics out;
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng = make_rng(seed, i);
    Vec<F> coords;
    for (std::size_t j = 0; j < A.num_variables(); ++j) coords.push_back(A.field().random(rng));
    ++out.histogram[A.kernel_dimension(A.power(A.linear(coords), k), 1)];
  }
  if (!out.histogram.empty()) out.generic = out.histogram.begin()->first;
  return out;
}

#define SAGA_LOCI_INSTANTIATE(F)                                                                                   \
  template LocusIdeal<F> nihil_ideal(const GradedAlgebra<F>&, unsigned);                                           \
  template bool nihil_membership(const GradedAlgebra<F>&, const AlgebraElement<F>&, unsigned);                     \
  template int nihil_dimension(const GradedAlgebra<F>&, unsigned, const GroebnerBudget&);                          \
  template AlgebraElement<F> normalized_point(const GradedAlgebra<F>&, AlgebraElement<F>);                        \
  template N2Analysis<F> n2_analysis(const GradedAlgebra<F>&, const GroebnerBudget&);                              \
  template TangentSpaceReport<F> tangent_space(const GradedAlgebra<F>&, const AlgebraElement<F>&, unsigned);       \
  template DecompositionCheck verify_component_decomposition(const GradedAlgebra<F>&, unsigned,                    \
                                                             const std::vector<Ideal<F>>&, const GroebnerBudget&); \
  template SecantCheck<F> secant_containment_check(const GradedAlgebra<F>&, std::span<const AlgebraElement<F>>,   \
                                                   unsigned, unsigned, unsigned, std::size_t, std::uint64_t);       \
  template LineCheck<F> line_in_n3_check(const GradedAlgebra<F>&, const AlgebraElement<F>&,                        \
                                         const AlgebraElement<F>&);                                                \
  template PlaneSection<F> plane_section_check(const GradedAlgebra<F>&, const std::vector<AlgebraElement<F>>&,     \
                                               std::uint64_t);                                                     \
  template LocusIdeal<F> non_lefschetz_ideal(const GradedAlgebra<F>&, unsigned, std::size_t);                      \
  template FiberStatistics fiber_statistics(const GradedAlgebra<F>&, unsigned, std::size_t, std::uint64_t);
SAGA_LOCI_INSTANTIATE(Rationals)
SAGA_LOCI_INSTANTIATE(PrimeField)

}  // namespace saga
