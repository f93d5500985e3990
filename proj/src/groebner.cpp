#include "saga/groebner.hpp"

#include <algorithm>
#include <bit>

namespace saga {

template <ExactField F>
Ideal<F>::Ideal(F field, VariableContext ctx, std::vector<Polynomial<F>> generators)
    : field_(std::move(field)), ctx_(std::move(ctx)), generators_(std::move(generators)) {
  if (generators_.empty()) fail(ErrorKind::InvalidArgument, "an ideal needs at least one generator");
  for (const auto& g : generators_) {
    if (!(g.field() == field_)) fail(ErrorKind::FieldMismatch, "ideal generator over another field");
    if (g.num_variables() != ctx_.size()) fail(ErrorKind::FieldMismatch, "ideal generator in another ring");
  }
}

template <ExactField F>
std::vector<Monomial> GroebnerBasis<F>::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : basis_) out.push_back(g.leading_monomial());
  return out;
}

namespace {

std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (m[i] != 0) mask |= 1u << i;
  }
  return mask;
}

/// Working state of one Buchberger run.  Polynomials are plain term vectors
/// sorted by decreasing monomial, kept monic.
template <ExactField F>
class Engine {
 public:
  using Element = typename F::Element;
  using Term = typename Polynomial<F>::Term;
  using Terms = std::vector<Term>;

  Engine(const F& K) : K_(K) {}

  std::size_t add(Terms p, unsigned sugar) {
    polys_.push_back(std::move(p));
    sugar_.push_back(sugar);
    masks_.push_back(support_mask(polys_.back().front().monomial));
    active_.push_back(false);
    return polys_.size() - 1;
  }

  const Terms& poly(std::size_t i) const { return polys_[i]; }
  const Monomial& lm(std::size_t i) const { return polys_[i].front().monomial; }
  unsigned sugar(std::size_t i) const { return sugar_[i]; }
  bool active(std::size_t i) const { return active_[i]; }
  void set_active(std::size_t i, bool on) { active_[i] = on; }
  std::size_t size() const { return polys_.size(); }

  void make_monic(Terms& p) const {
    if (p.empty() || K_.equal(p.front().coeff, K_.one())) return;
    auto inv = K_.inv(p.front().coeff);
    for (auto& t : p) t.coeff = K_.mul(t.coeff, inv);
  }

  /// a*ma - b*mb with the leading terms assumed to cancel.
  Terms combine(const Terms& a, const Monomial& ma, const Element& ca, const Terms& b, const Monomial& mb,
                const Element& cb, std::size_t a_start, std::size_t b_start) const {
    Terms out;
    out.reserve(a.size() - a_start + b.size() - b_start);
    std::size_t i = a_start, j = b_start;
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        out.push_back({a[i].monomial * ma, K_.mul(ca, a[i].coeff)});
        ++i;
        continue;
      }
      Monomial mj = b[j].monomial * mb;
      if (i == a.size()) {
        out.push_back({mj, K_.neg(K_.mul(cb, b[j].coeff))});
        ++j;
        continue;
      }
      Monomial mi = a[i].monomial * ma;
      if (mi > mj) {
        out.push_back({mi, K_.mul(ca, a[i].coeff)});
        ++i;
      } else if (mj > mi) {
        out.push_back({mj, K_.neg(K_.mul(cb, b[j].coeff))});
        ++j;
      } else {
        auto c = K_.sub(K_.mul(ca, a[i].coeff), K_.mul(cb, b[j].coeff));
        if (!K_.is_zero(c)) out.push_back({mi, c});
        ++i;
        ++j;
      }
    }
    return out;
  }

  long find_divisor(const Monomial& m, long skip = -1) const {
    const auto mask = support_mask(m);
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (!active_[i] || static_cast<long>(i) == skip) continue;
      if ((masks_[i] & ~mask) != 0) continue;
      if (lm(i).divides(m)) return static_cast<long>(i);
    }
    return -1;
  }

  /// Full reduction by the active polynomials (except `skip`).
  Terms reduce(Terms p, unsigned& sugar, long skip = -1) const {
    Terms done;
    std::size_t start = 0;
    const Monomial one;
    while (start < p.size()) {
      long d = find_divisor(p[start].monomial, skip);
      if (d < 0) {
        done.push_back(std::move(p[start]));
        ++start;
        continue;
      }
      const auto& g = polys_[static_cast<std::size_t>(d)];
      Monomial q = p[start].monomial / g.front().monomial;
      sugar = std::max(sugar, q.degree() + sugar_[static_cast<std::size_t>(d)]);
      // p - c q g with c the leading coefficient of p[start..] (g is monic)
      p = combine(p, one, K_.one(), g, q, p[start].coeff, start + 1, 1);
      start = 0;
    }
    return done;
  }

  Terms s_polynomial(std::size_t i, std::size_t j, unsigned& sugar) const {
    Monomial l = lm(i).lcm(lm(j));
    Monomial mi = l / lm(i), mj = l / lm(j);
    sugar = std::max(sugar_[i] + mi.degree(), sugar_[j] + mj.degree());
    return combine(polys_[i], mi, K_.one(), polys_[j], mj, K_.one(), 1, 1);
  }

  void replace(std::size_t i, Terms p) { polys_[i] = std::move(p); }

 private:
  const F& K_;
  std::vector<Terms> polys_;
  std::vector<unsigned> sugar_;
  std::vector<std::uint32_t> masks_;
  std::vector<bool> active_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

template <ExactField F>
GroebnerBasis<F> unit_basis(const F& K, std::size_t nvars, std::size_t pairs) {
  return GroebnerBasis<F>(K, nvars, {Polynomial<F>::constant(K, nvars, K.one())}, pairs);
}

}  // namespace

template <ExactField F>
GroebnerBasis<F> buchberger(const Ideal<F>& ideal, const GroebnerBudget& budget) {
  const F& K = ideal.field();
  const std::size_t nvars = ideal.num_variables();
  Engine<F> engine(K);
  std::vector<Pair> pairs;
  std::size_t processed = 0;

  auto pair_sugar = [&](std::size_t i, std::size_t j, const Monomial& l) {
    return std::max(engine.sugar(i) + (l.degree() - engine.lm(i).degree()),
                    engine.sugar(j) + (l.degree() - engine.lm(j).degree()));
  };

  // Gebauer-Moeller update for a new basis element h
  auto update = [&](std::size_t h) {
    const Monomial& lh = engine.lm(h);
    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < engine.size(); ++g) {
      if (g == h || !engine.active(g)) continue;
      Monomial l = engine.lm(g).lcm(lh);
      fresh.push_back({g, h, l, pair_sugar(g, h, l)});
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const auto& p = fresh[a];
      bool coprime = engine.lm(p.i).coprime(lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < fresh.size() && !dominated; ++b) dominated = fresh[b].lcm.divides(p.lcm);
        for (std::size_t b = 0; b < kept.size() && !dominated; ++b) dominated = kept[b].lcm.divides(p.lcm);
      }
      if (coprime || !dominated) kept.push_back(p);
    }
    std::erase_if(kept, [&](const Pair& p) { return engine.lm(p.i).coprime(lh); });
    std::erase_if(pairs, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      return engine.lm(p.i).lcm(lh) != p.lcm && engine.lm(p.j).lcm(lh) != p.lcm;
    });
    pairs.insert(pairs.end(), kept.begin(), kept.end());
    for (std::size_t g = 0; g < engine.size(); ++g) {
      if (g != h && engine.active(g) && lh.divides(engine.lm(g))) engine.set_active(g, false);
    }
    engine.set_active(h, true);
  };

  for (const auto& g : ideal.generators()) {
    if (g.is_zero()) continue;
    typename Engine<F>::Terms terms(g.terms().begin(), g.terms().end());
    unsigned sugar = g.degree();
    terms = engine.reduce(std::move(terms), sugar);
    if (terms.empty()) continue;
    engine.make_monic(terms);
    if (terms.front().monomial.is_one()) return unit_basis(K, nvars, processed);
    update(engine.add(std::move(terms), sugar));
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      return a.lcm < b.lcm;
    });
    Pair p = *best;
    pairs.erase(best);
    if (++processed > budget.max_pairs) {
      fail(ErrorKind::BudgetExceeded, "Groebner pair budget of " + std::to_string(budget.max_pairs) + " exhausted");
    }
    if (p.lcm.degree() > budget.max_degree) {
      fail(ErrorKind::BudgetExceeded, "Groebner degree cap of " + std::to_string(budget.max_degree) + " exceeded");
    }
    unsigned sugar = 0;
    auto s = engine.s_polynomial(p.i, p.j, sugar);
    s = engine.reduce(std::move(s), sugar);
    if (s.empty()) continue;
    engine.make_monic(s);
    if (s.front().monomial.is_one()) return unit_basis(K, nvars, processed);
    update(engine.add(std::move(s), sugar));
  }

  // the active set is minimal; reduce tails against each other
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < engine.size(); ++i) {
    if (engine.active(i)) active.push_back(i);
  }
  for (auto i : active) {
    unsigned sugar = engine.sugar(i);
    auto reduced = engine.reduce(engine.poly(i), sugar, static_cast<long>(i));
    engine.replace(i, std::move(reduced));
  }
  std::vector<Polynomial<F>> basis;
  for (auto i : active) {
    const auto& t = engine.poly(i);
    basis.push_back(Polynomial<F>::from_terms(K, nvars, t, t.front().monomial.degree()));
  }
  std::sort(basis.begin(), basis.end(), [](const Polynomial<F>& a, const Polynomial<F>& b) {
    return a.leading_monomial() < b.leading_monomial();
  });
  return GroebnerBasis<F>(K, nvars, std::move(basis), processed);
}

template <ExactField F>
Division<F> member(const Polynomial<F>& f, const GroebnerBasis<F>& G) {
  if (f.num_variables() != G.num_variables() || !(f.field() == G.field())) {
    fail(ErrorKind::FieldMismatch, "polynomial and basis live in different rings");
  }
  Engine<F> engine(G.field());
  for (const auto& g : G.polynomials()) {
    auto idx = engine.add(typename Engine<F>::Terms(g.terms().begin(), g.terms().end()), g.degree());
    engine.set_active(idx, true);
  }
  unsigned sugar = f.degree();
  auto r = engine.reduce(typename Engine<F>::Terms(f.terms().begin(), f.terms().end()), sugar);
  auto remainder = Polynomial<F>::from_terms(G.field(), G.num_variables(), std::move(r), f.degree());
  return {remainder.is_zero(), std::move(remainder)};
}

template <ExactField F>
bool radical_membership(const Polynomial<F>& f, const Ideal<F>& ideal, const GroebnerBudget& budget) {
  if (f.is_zero()) return true;
  const F& K = ideal.field();
  const std::size_t nvars = ideal.num_variables();
  if (nvars + 1 > kMaxVariables) fail(ErrorKind::InvalidArgument, "no room for the Rabinowitsch variable");
  auto ctx = ideal.context().extended("t_rabinowitsch");
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.with_num_variables(nvars + 1));
  auto t = Polynomial<F>::variable(K, nvars + 1, nvars);
  gens.push_back(Polynomial<F>::constant(K, nvars + 1, K.one()) - t * f.with_num_variables(nvars + 1));
  return buchberger(Ideal<F>(K, ctx, std::move(gens)), budget).is_unit();
}

template <ExactField F>
int krull_dimension(const GroebnerBasis<F>& G) {
  if (G.is_unit()) return -1;
  const std::size_t nvars = G.num_variables();
  std::vector<std::uint32_t> masks;
  for (const auto& m : G.leading_monomials()) masks.push_back(support_mask(m));
  int best = 0;
  for (std::uint32_t u = 0; u < (1u << nvars); ++u) {
    int size = std::popcount(u);
    if (size <= best) continue;
    bool independent = std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & ~u) != 0; });
    if (independent) best = size;
  }
  return best;
}

template <ExactField F>
std::vector<Monomial> standard_monomials(const GroebnerBasis<F>& G) {
  const std::size_t nvars = G.num_variables();
  const auto lms = G.leading_monomials();
  for (std::size_t i = 0; i < nvars; ++i) {
    bool pure = std::any_of(lms.begin(), lms.end(), [&](const Monomial& m) {
      return m.degree() == m[i] && m[i] > 0;
    });
    if (!pure && !G.is_unit()) fail(ErrorKind::NotZeroDimensional, "no pure power of variable " + std::to_string(i) + " leads");
  }
  if (G.is_unit()) return {};
  auto standard = [&](const Monomial& m) {
    return std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  // grow by multiplying with variables of index >= the last one used
  std::vector<std::pair<Monomial, std::size_t>> stack{{Monomial{}, 0}};
  std::vector<Monomial> out;
  while (!stack.empty()) {
    auto [m, from] = stack.back();
    stack.pop_back();
    out.push_back(m);
    for (std::size_t i = from; i < nvars; ++i) {
      auto next = m.times_variable(i);
      if (standard(next)) stack.push_back({next, i});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <ExactField F>
std::size_t zero_dim_degree(const GroebnerBasis<F>& G) {
  return standard_monomials(G).size();
}

#define SAGA_GROEBNER_INSTANTIATE(F)                                                     \
  template class Ideal<F>;                                                               \
  template class GroebnerBasis<F>;                                                       \
  template GroebnerBasis<F> buchberger(const Ideal<F>&, const GroebnerBudget&);          \
  template Division<F> member(const Polynomial<F>&, const GroebnerBasis<F>&);            \
  template bool radical_membership(const Polynomial<F>&, const Ideal<F>&, const GroebnerBudget&); \
  template int krull_dimension(const GroebnerBasis<F>&);                                 \
  template std::size_t zero_dim_degree(const GroebnerBasis<F>&);                         \
  template std::vector<Monomial> standard_monomials(const GroebnerBasis<F>&);
SAGA_GROEBNER_INSTANTIATE(Rationals)
SAGA_GROEBNER_INSTANTIATE(PrimeField)
#undef SAGA_GROEBNER_INSTANTIATE

}  // namespace saga
