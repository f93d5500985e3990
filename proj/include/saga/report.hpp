#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "saga/algebra.hpp"
#include "saga/lefschetz.hpp"
#include "saga/loci.hpp"

namespace saga::report {

using Json = nlohmann::json;

inline constexpr std::string_view kSchema = "saga-report/1";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// Numbers go into reports as decimal strings.
template <typename T>
std::string num(T value) {
  return std::to_string(value);
}
inline std::string num(const mpz_class& value) { return value.get_str(); }
inline std::string num(const mpq_class& value) { return value.get_str(); }

/// "0" for zero, "<2^-bits" when below the threshold, the exact fraction
/// otherwise.
std::string format_error_bound(const mpq_class& bound, unsigned bits);

template <ExactField F>
Json coords_json(const F& K, const std::vector<typename F::Element>& coords) {
  Json out = Json::array();
  for (const auto& c : coords) out.push_back(K.format(c));
  return out;
}

/// {"degree", "coords", "form"}; the form is written in x0..xn.
template <ExactField F>
Json element_json(const GradedAlgebra<F>& A, const AlgebraElement<F>& x);

template <ExactField F>
AlgebraElement<F> element_from_json(const GradedAlgebra<F>& A, const Json& j);

template <ExactField F>
Json certificate_json(const GradedAlgebra<F>& A, const RankCertificate<F>& cert);

/// Inverse of certificate_json.  The derived "error_bound" display string is
/// ignored; the exact fraction is read from "error_bound_exact".
template <ExactField F>
RankCertificate<F> certificate_from_json(const GradedAlgebra<F>& A, const Json& j);

template <ExactField F>
Json locus_json(const LocusIdeal<F>& locus);

/// Pretty-printed JSON; keys come out sorted.
std::string emit(const Json& j);

#define SAGA_REPORT_EXTERN(F)                                                                       \
  extern template Json element_json(const GradedAlgebra<F>&, const AlgebraElement<F>&);             \
  extern template AlgebraElement<F> element_from_json(const GradedAlgebra<F>&, const Json&);         \
  extern template Json certificate_json(const GradedAlgebra<F>&, const RankCertificate<F>&);         \
  extern template RankCertificate<F> certificate_from_json(const GradedAlgebra<F>&, const Json&);    \
  extern template Json locus_json(const LocusIdeal<F>&);
SAGA_REPORT_EXTERN(Rationals)
SAGA_REPORT_EXTERN(PrimeField)
#undef SAGA_REPORT_EXTERN

}  // namespace saga::report
