#include "saga/matrix.hpp"

namespace saga::detail {

std::optional<Matrix<PrimeField>> reduce_modulo_shadow_prime(const Matrix<Rationals>& m) {
  PrimeField K(kShadowPrime);
  Matrix<PrimeField> out(K, m.rows(), m.cols());
  const mpz_class p(static_cast<unsigned long>(kShadowPrime));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& q = m(r, c);
      if (mpz_divisible_p(q.get_den().get_mpz_t(), p.get_mpz_t())) return std::nullopt;
      out(r, c) = K.from_rational(q);
    }
  }
  return out;
}

}  // namespace saga::detail
