#include "saga/report.hpp"

namespace saga::report {

std::string format_error_bound(const mpq_class& bound, unsigned bits) {
  if (sgn(bound) == 0) return "0";
  mpz_class scaled = bound.get_num() << bits;
  if (scaled < bound.get_den()) return "<2^-" + std::to_string(bits);
  return bound.get_str();
}

std::string emit(const Json& j) { return j.dump(2) + "\n"; }

namespace {

std::size_t size_field(const Json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorKind::ParseError, std::string("certificate lacks \"") + key + "\"");
  try {
    return static_cast<std::size_t>(std::stoull(j.at(key).get<std::string>()));
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, std::string("certificate field \"") + key + "\" is not a decimal string");
  }
}

mpq_class rational_field(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) fail(ErrorKind::ParseError, "not a rational number: " + text);
  q.canonicalize();
  return q;
}

}  // namespace

template <ExactField F>
Json element_json(const GradedAlgebra<F>& A, const AlgebraElement<F>& x) {
  Json out;
  out["degree"] = num(x.degree);
  out["coords"] = coords_json(A.field(), x.coords);
  out["form"] = format_poly(A.to_polynomial(x), A.presentation().context());
  return out;
}

template <ExactField F>
AlgebraElement<F> element_from_json(const GradedAlgebra<F>& A, const Json& j) {
  const F& K = A.field();
  AlgebraElement<F> x;
  x.degree = static_cast<unsigned>(size_field(j, "degree"));
  if (x.degree > A.max_degree()) fail(ErrorKind::DegreeOutOfRange, "element degree beyond the algebra");
  for (const auto& c : j.at("coords")) x.coords.push_back(K.from_rational(rational_field(c.get<std::string>())));
  if (x.coords.size() != A.dim(x.degree)) fail(ErrorKind::ParseError, "element has the wrong number of coordinates");
  return x;
}

template <ExactField F>
Json certificate_json(const GradedAlgebra<F>& A, const RankCertificate<F>& cert) {
  using Kind = typename RankCertificate<F>::Kind;
  Json out;
  out["kind"] = cert.kind == Kind::Witness ? "witness" : "probabilistic";
  out["power"] = num(cert.power);
  out["source_degree"] = num(cert.source_degree);
  out["generic_rank"] = num(cert.generic_rank);
  out["max_possible"] = num(cert.max_possible);
  out["witness"] = element_json(A, cert.witness);
  out["exact_rank"] = num(cert.exact_rank);
  out["samples"] = num(cert.samples);
  out["sample_space"] = num(cert.sample_space);
  out["minor_degree_bound"] = num(cert.minor_degree_bound);
  out["error_bound"] = format_error_bound(cert.error_bound, cert.threshold_bits);
  out["error_bound_exact"] = num(cert.error_bound);
  out["threshold_bits"] = num(cert.threshold_bits);
  out["seed"] = num(cert.seed);
  Json subspace = Json::array();
  for (const auto& u : cert.subspace) {
    Json row = Json::array();
    for (const auto& c : u) row.push_back(num(c));
    subspace.push_back(row);
  }
  out["subspace"] = subspace;
  return out;
}

template <ExactField F>
RankCertificate<F> certificate_from_json(const GradedAlgebra<F>& A, const Json& j) {
  using Kind = typename RankCertificate<F>::Kind;
  RankCertificate<F> cert;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "witness") {
    cert.kind = Kind::Witness;
  } else if (kind == "probabilistic") {
    cert.kind = Kind::Probabilistic;
  } else {
    fail(ErrorKind::ParseError, "unknown certificate kind " + kind);
  }
  cert.power = static_cast<unsigned>(size_field(j, "power"));
  cert.source_degree = static_cast<unsigned>(size_field(j, "source_degree"));
  cert.generic_rank = size_field(j, "generic_rank");
  cert.max_possible = size_field(j, "max_possible");
  cert.witness = element_from_json(A, j.at("witness"));
  cert.exact_rank = size_field(j, "exact_rank");
  cert.samples = size_field(j, "samples");
  cert.sample_space = mpz_class(j.at("sample_space").get<std::string>());
  cert.minor_degree_bound = size_field(j, "minor_degree_bound");
  cert.error_bound = rational_field(j.at("error_bound_exact").get<std::string>());
  cert.threshold_bits = static_cast<unsigned>(size_field(j, "threshold_bits"));
  cert.seed = std::stoull(j.at("seed").get<std::string>());
  for (const auto& row : j.at("subspace")) {
    std::vector<mpq_class> u;
    for (const auto& c : row) u.push_back(rational_field(c.get<std::string>()));
    cert.subspace.push_back(std::move(u));
  }
  return cert;
}

template <ExactField F>
Json locus_json(const LocusIdeal<F>& locus) {
  Json out;
  out["kind"] = locus.kind == LocusIdeal<F>::Kind::Nihil ? "nihil" : "non_lefschetz";
  out["degree"] = num(locus.degree);
  Json gens = Json::array();
  for (const auto& g : locus.ideal.generators()) gens.push_back(format_poly(g, locus.ideal.context()));
  out["equations"] = gens;
  out["provenance"] = locus.provenance;
  return out;
}

#define SAGA_REPORT_INSTANTIATE(F)                                                           \
  template Json element_json(const GradedAlgebra<F>&, const AlgebraElement<F>&);             \
  template AlgebraElement<F> element_from_json(const GradedAlgebra<F>&, const Json&);         \
  template Json certificate_json(const GradedAlgebra<F>&, const RankCertificate<F>&);         \
  template RankCertificate<F> certificate_from_json(const GradedAlgebra<F>&, const Json&);    \
  template Json locus_json(const LocusIdeal<F>&);
SAGA_REPORT_INSTANTIATE(Rationals)
SAGA_REPORT_INSTANTIATE(PrimeField)

}  // namespace saga::report
