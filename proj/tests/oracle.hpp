#pragma once

// Brute-force reference for normal forms in S/I: the full Macaulay matrix
// {m * g_i : deg m = d - 2} in degree d, fully row reduced with its own
// elimination loop.  Shares nothing with GradedAlgebra beyond the monomial
// and polynomial types.

#include <map>
#include <vector>

#include "saga/polynomial.hpp"

namespace oracle {

template <saga::ExactField F>
class MacaulayReducer {
 public:
  using Element = typename F::Element;

  MacaulayReducer(const F& K, std::size_t n, std::vector<saga::Polynomial<F>> gens)
      : K_(K), n_(n), gens_(std::move(gens)) {}

  /// Coordinates of f modulo I on the surviving (non-pivot) monomials,
  /// listed in decreasing order.
  std::map<saga::Monomial, Element, std::greater<>> reduce(const saga::Polynomial<F>& f) {
    const auto& level = degree(f.degree());
    std::vector<Element> v(level.columns.size(), K_.zero());
    for (const auto& t : f.terms()) v[column(level, t.monomial)] = t.coeff;
    for (std::size_t r = 0; r < level.rows.size(); ++r) {
      auto c = level.pivots[r];
      if (K_.is_zero(v[c])) continue;
      auto factor = v[c];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = K_.sub(v[j], K_.mul(factor, level.rows[r][j]));
    }
    std::map<saga::Monomial, Element, std::greater<>> out;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!level.is_pivot[j]) out.emplace(level.columns[j], v[j]);
    }
    return out;
  }

  std::vector<saga::Monomial> surviving(unsigned d) {
    const auto& level = degree(d);
    std::vector<saga::Monomial> out;
    for (std::size_t j = 0; j < level.columns.size(); ++j) {
      if (!level.is_pivot[j]) out.push_back(level.columns[j]);
    }
    return out;
  }

 private:
  struct Level {
    std::vector<saga::Monomial> columns;
    std::vector<std::vector<Element>> rows;
    std::vector<std::size_t> pivots;
    std::vector<bool> is_pivot;
  };

  static std::size_t column(const Level& level, const saga::Monomial& m) {
    for (std::size_t j = 0; j < level.columns.size(); ++j) {
      if (level.columns[j] == m) return j;
    }
    throw std::logic_error("monomial not in degree");
  }

  const Level& degree(unsigned d) {
    auto it = levels_.find(d);
    if (it != levels_.end()) return it->second;
    Level level;
    level.columns = saga::monomial_basis(n_, d);
    std::vector<std::vector<Element>> m;
    if (d >= 2) {
      for (const auto& mono : saga::monomial_basis(n_, d - 2)) {
        for (const auto& g : gens_) {
          std::vector<Element> row(level.columns.size(), K_.zero());
          for (const auto& t : g.terms()) {
            auto c = column(level, t.monomial * mono);
            row[c] = K_.add(row[c], t.coeff);
          }
          m.push_back(std::move(row));
        }
      }
    }
    // Gauss-Jordan, leftmost column = largest monomial
    std::size_t r = 0;
    for (std::size_t c = 0; c < level.columns.size() && r < m.size(); ++c) {
      std::size_t p = r;
      while (p < m.size() && K_.is_zero(m[p][c])) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[r]);
      auto inv = K_.inv(m[r][c]);
      for (auto& x : m[r]) x = K_.mul(x, inv);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == r || K_.is_zero(m[i][c])) continue;
        auto factor = m[i][c];
        for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] = K_.sub(m[i][j], K_.mul(factor, m[r][j]));
      }
      level.pivots.push_back(c);
      ++r;
    }
    m.resize(r);
    level.rows = std::move(m);
    level.is_pivot.assign(level.columns.size(), false);
    for (auto c : level.pivots) level.is_pivot[c] = true;
    return levels_.emplace(d, std::move(level)).first->second;
  }

  F K_;
  std::size_t n_;
  std::vector<saga::Polynomial<F>> gens_;
  std::map<unsigned, Level> levels_;
};

}  // namespace oracle
