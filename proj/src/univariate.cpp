#include "saga/univariate.hpp"

namespace saga::univariate::detail {

namespace {
// Trial division beyond this bound is refused; the search is then reported
// incomplete rather than silently truncated.
const mpz_class kFactorBound("1000000000000");
}  // namespace

std::vector<mpz_class> positive_divisors(const mpz_class& n, bool& complete) {
  std::vector<mpz_class> divs;
  if (n == 0) return divs;
  if (n > kFactorBound) {
    complete = false;
    divs.push_back(1);
    divs.push_back(n);
    return divs;
  }
  unsigned long v = n.get_ui();
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.push_back(d);
    if (d != v / d) large.push_back(v / d);
  }
  for (auto d : small) divs.emplace_back(d);
  for (auto it = large.rbegin(); it != large.rend(); ++it) divs.emplace_back(*it);
  return divs;
}

}  // namespace saga::univariate::detail
