#include "saga/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "saga/constructions.hpp"
#include "saga/report.hpp"

namespace saga::cli {

using report::Json;
using report::num;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::SizeGateExceeded:
      return 3;
    case ErrorKind::NotRegularSequence:
    case ErrorKind::NotAnnihilated:
    case ErrorKind::NotZeroDimensional:
    case ErrorKind::NotOnLocus:
    case ErrorKind::NotALineInN3:
    case ErrorKind::PlaneNotInLocus:
    case ErrorKind::BasePointInNk:
    case ErrorKind::NotFermatCandidate:
    case ErrorKind::RetriesExhausted:
      return 1;
    default:
      return 2;
  }
}

namespace {

constexpr std::string_view kDefaultField = "Fp:2147483629";

struct Options {
  std::string field, file, instance;
  std::size_t random_n = 0;
  std::uint64_t seed = 1;
  std::size_t samples = 1;
  std::size_t max_samples = 10000;
  std::size_t max_pairs = 200000;
  unsigned max_degree = 60;
  unsigned threads = 1;

  std::string output;
  unsigned wlp = 0;
  std::vector<unsigned> slp;
  std::string element;
  unsigned degree = 1;
  unsigned search = 0;
  std::size_t budget = 200;
  std::string audit;
  std::vector<std::string> subspace;
  unsigned k = 2;
  std::string point;
  std::vector<std::string> components;
  std::string cubic;
  std::size_t cubic_n = 0;
  std::string z;
  std::string example;
  std::size_t tangent_samples = 20;
  std::size_t count = 100;

  // which optional flags were given
  bool has_field = false, has_file = false, has_instance = false, has_random = false;
  bool has_wlp = false, has_element = false, has_search = false, has_audit = false, has_point = false;
  bool has_cubic = false, has_output = false;
};

/// Where the quadrics come from.  Random instances are drawn once the field
/// is known.
struct Input {
  std::string source;
  std::string name;
  std::size_t n = 0;
  std::optional<std::string> field;
  std::vector<std::string> generators;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

Json lines_json(const std::string& text) {
  Json out = Json::array();
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

Json dims_json(const std::vector<std::size_t>& dims) {
  Json out = Json::array();
  for (auto d : dims) out.push_back(num(d));
  return out;
}

// dims up to the socle degree; the zero degree above it is left out
template <ExactField F>
std::vector<std::size_t> nonzero_dims(const GradedAlgebra<F>& A) {
  auto dims = A.dims();
  dims.resize(A.socle_degree() + 1);
  return dims;
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (auto v : values) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
  }
  return out;
}

std::optional<Input> resolve_input(const Options& o, const std::string& command) {
  const int given = int(o.has_file) + int(o.has_instance) + int(o.has_random);
  if (given > 1) fail(ErrorKind::InvalidArgument, "give at most one of --file, --instance, --random");
  if (o.has_file) {
    auto pf = parse_presentation_file(read_file(o.file));
    Input in{"file", o.file, pf.n, std::nullopt, pf.generators};
    if (!pf.field.empty()) in.field = pf.field;
    return in;
  }
  if (o.has_instance) {
    const auto& inst = corpus_instance(o.instance);
    return Input{"instance", inst.name, inst.n, inst.default_field, inst.generators};
  }
  if (o.has_random) return Input{"random", "random n=" + std::to_string(o.random_n), o.random_n, std::nullopt, {}};
  if (command == "verify-example") {
    const auto& inst = corpus_instance(o.example);
    return Input{"instance", inst.name, inst.n, inst.default_field, inst.generators};
  }
  if (command == "lefschetz" && o.has_audit) {
    // the report being audited names its own instance
    auto j = Json::parse(read_file(o.audit));
    if (!j.contains("instance") || !j.contains("field")) return std::nullopt;
    const auto& inst = j.at("instance");
    Input in{"report", o.audit, std::stoull(inst.at("n").get<std::string>()), j.at("field").get<std::string>(), {}};
    for (const auto& g : inst.at("generators")) in.generators.push_back(g.get<std::string>());
    return in;
  }
  return std::nullopt;
}

std::string resolve_field(const Options& o, const std::optional<Input>& input) {
  if (o.has_field) return o.field;
  if (input && input->field) return *input->field;
  if (const char* env = std::getenv("SAGA_FIELD"); env && *env) return env;
  return std::string(kDefaultField);
}

template <ExactField F>
class Session {
 public:
  Session(const F& K, const Options& o, std::optional<Input> input, Json& report, std::ostream& err)
      : K_(K), o_(o), input_(std::move(input)), report_(report), err_(err) {}

  int run(const std::string& command) {
    const std::map<std::string, std::function<int()>> commands{
        {"build", [&] { return build(); }},
        {"hilbert", [&] { return hilbert(); }},
        {"lefschetz", [&] { return lefschetz(); }},
        {"nihil", [&] { return nihil(); }},
        {"n2", [&] { return n2(); }},
        {"decompose", [&] { return decompose(); }},
        {"jacobian", [&] { return jacobian(); }},
        {"quotient", [&] { return quotient(); }},
        {"verify-example", [&] { return verify(); }},
        {"fibers", [&] { return fibers(); }},
    };
    return commands.at(command)();
  }

 private:
  QuadricPresentation<F> presentation() {
    if (!input_) fail(ErrorKind::InvalidArgument, "no input: give --file, --instance or --random");
    if (input_->source == "random" && input_->generators.empty()) {
      auto pres = random_quadric_ci(input_->n, o_.seed, K_);
      for (const auto& g : pres.generators()) input_->generators.push_back(format_poly(g, pres.context()));
      describe_input();
      return pres;
    }
    describe_input();
    return QuadricPresentation<F>::parse(K_, input_->n, input_->generators);
  }

  GradedAlgebra<F> algebra() { return GradedAlgebra<F>::build(presentation()); }

  void describe_input() {
    Json in;
    in["source"] = input_->source;
    in["name"] = input_->name;
    in["n"] = num(input_->n);
    in["generators"] = input_->generators;
    report_["instance"] = in;
  }

  GroebnerBudget budget() const { return {o_.max_pairs, o_.max_degree}; }

  SamplingOptions sampling(const GradedAlgebra<F>& A) const {
    SamplingOptions s;
    s.seed = o_.seed;
    s.min_samples = o_.samples;
    s.max_samples = o_.max_samples;
    s.threads = o_.threads;
    Rationals Q;
    for (const auto& text : o_.subspace) {
      auto p = parse_poly(text, A.presentation().context(), Q);
      if (p.degree() != 1) fail(ErrorKind::InvalidArgument, "subspace element is not linear: " + text);
      std::vector<mpq_class> u;
      for (std::size_t i = 0; i < A.num_variables(); ++i) u.push_back(p.coefficient(Monomial::variable(i)));
      s.subspace.push_back(std::move(u));
    }
    return s;
  }

  AlgebraElement<F> linear_form(const GradedAlgebra<F>& A, const std::string& text) const {
    auto x = A.normal_form(parse_poly(text, A.presentation().context(), K_));
    if (x.degree != 1) fail(ErrorKind::InvalidArgument, "not a linear form: " + text);
    return x;
  }

  int build() {
    auto pres = presentation();
    auto A = GradedAlgebra<F>::build(pres);
    Json r;
    r["dims"] = dims_json(nonzero_dims(A));
    r["socle_degree"] = num(A.socle_degree());
    Json standard = Json::array();
    for (unsigned k = 0; k <= A.socle_degree(); ++k) {
      Json row = Json::array();
      for (const auto& m : A.standard_monomials(k)) row.push_back(format_monomial(m, pres.context()));
      standard.push_back(row);
    }
    r["standard_monomials"] = standard;
    r["presentation"] = lines_json(format_presentation(pres));
    if (o_.has_output) {
      write_file(o_.output, format_presentation(pres));
      r["output"] = o_.output;
    }
    report_["results"] = r;
    err_ << "build: dims " << join(nonzero_dims(A)) << "\n";
    return 0;
  }

  int hilbert() {
    auto A = algebra();
    bool duality = true;
    for (unsigned j = 0; j <= A.socle_degree(); ++j) duality = duality && rank(A.socle_pairing_matrix(j)) == A.dim(j);
    Json r;
    r["dims"] = dims_json(nonzero_dims(A));
    r["socle_degree"] = num(A.socle_degree());
    r["gorenstein_duality"] = duality;
    report_["results"] = r;
    err_ << "hilbert: dims " << join(nonzero_dims(A)) << (duality ? ", pairing perfect" : ", pairing DEGENERATE") << "\n";
    return duality ? 0 : 1;
  }

  int lefschetz() {
    const int modes = int(o_.has_wlp) + int(!o_.slp.empty()) + int(o_.has_element) + int(o_.has_search) +
                      int(o_.has_audit);
    if (modes != 1) fail(ErrorKind::InvalidArgument, "give exactly one of --wlp, --slp, --element, --search, --audit");
    if (o_.has_audit) return audit();
    auto A = algebra();
    Json r;
    if (o_.has_element) {
      auto x = linear_form(A, o_.element);
      bool ok = is_lefschetz_element(A, x, o_.degree);
      r["element"] = report::element_json(A, x);
      r["degree"] = num(o_.degree);
      r["lefschetz"] = ok;
      r["rank"] = num(rank(A.mult_map_matrix(x, o_.degree)));
      r["max_possible"] = num(std::min(A.dim(o_.degree), A.dim(o_.degree + 1)));
      report_["results"] = r;
      err_ << "lefschetz: " << o_.element << (ok ? " is" : " is not") << " a Lefschetz element in degree "
           << o_.degree << "\n";
      return 0;
    }
    if (o_.has_search) {
      auto found = non_lefschetz_witness_search(A, o_.search, o_.budget, {}, o_.seed);
      r["degree"] = num(o_.search);
      r["budget"] = num(o_.budget);
      r["found"] = found.has_value();
      if (found) r["element"] = report::element_json(A, *found);
      report_["results"] = r;
      err_ << "lefschetz: "
           << (found ? "non-Lefschetz element " + format_poly(A.to_polynomial(*found), A.presentation().context())
                     : std::string("no non-Lefschetz element found"))
           << "\n";
      return 0;
    }
    const bool weak = o_.has_wlp;
    const unsigned k = weak ? o_.wlp : o_.slp[0];
    const unsigned s = weak ? 1 : o_.slp[1];
    auto check = check_slp(A, k, s, sampling(A));
    const auto& cert = check.certificate;
    r["property"] = weak ? "WLP" : "SLP";
    r["degree"] = num(k);
    r["power"] = num(s);
    r["verdict"] = to_string(check.verdict);
    r["generic_rank"] = num(cert.generic_rank);
    r["max_possible"] = num(cert.max_possible);
    report_["results"] = r;
    report_["certificates"] = Json::array({report::certificate_json(A, cert)});
    err_ << "lefschetz: " << (weak ? "WLP_" + std::to_string(k) : "SLP_" + std::to_string(k) + "(" + std::to_string(s) + ")")
         << " " << to_string(check.verdict) << ", generic rank " << cert.generic_rank << " of " << cert.max_possible
         << (cert.kind == RankCertificate<F>::Kind::Witness
                 ? " (witness)"
                 : " (" + std::to_string(cert.samples) + " samples, error " +
                       report::format_error_bound(cert.error_bound, cert.threshold_bits) + ")")
         << "\n";
    return check.verdict == Verdict::Holds ? 0 : 1;
  }

  int audit() {
    auto A = algebra();
    auto j = Json::parse(read_file(o_.audit));
    Json certs = j.contains("certificates") ? j.at("certificates") : Json::array({j});
    Json audits = Json::array();
    bool all = true;
    for (const auto& c : certs) {
      auto result = audit_certificate(A, report::certificate_from_json(A, c));
      all = all && result.ok;
      Json a;
      a["ok"] = result.ok;
      a["detail"] = result.detail;
      a["kind"] = c.at("kind");
      audits.push_back(a);
      err_ << "audit: " << (result.ok ? "ok" : "REJECTED") << ": " << result.detail << "\n";
    }
    Json r;
    r["audits"] = audits;
    r["all_ok"] = all;
    report_["results"] = r;
    return all ? 0 : 1;
  }

  int nihil() {
    auto A = algebra();
    auto locus = nihil_ideal(A, o_.k);
    int dim = nihil_dimension(A, o_.k, budget());
    Json r;
    r["k"] = num(o_.k);
    r["locus"] = report::locus_json(locus);
    r["dimension"] = num(dim);
    if (o_.has_point) {
      auto x = linear_form(A, o_.point);
      r["point"] = report::element_json(A, x);
      r["member"] = nihil_membership(A, x, o_.k);
    }
    report_["results"] = r;
    err_ << "nihil: N_" << o_.k << " has " << locus.ideal.generators().size() << " equations, projective dimension "
         << dim << "\n";
    return 0;
  }

  int n2() {
    auto A = algebra();
    auto a = n2_analysis(A, budget());
    Json points = Json::array();
    for (const auto& p : a.rational_points) points.push_back(report::element_json(A, p));
    Json r;
    r["degree"] = num(a.degree);
    r["points"] = points;
    r["points_complete"] = a.points_complete;
    r["independent"] = a.independent;
    r["product_nonzero"] = a.product_nonzero;
    r["fermat_candidate"] = a.fermat_candidate;
    report_["results"] = r;
    err_ << "n2: length " << a.degree << ", " << a.rational_points.size() << " rational points"
         << (a.fermat_candidate ? ", Fermat candidate" : "") << "\n";
    return 0;
  }

  int decompose() {
    auto A = algebra();
    if (o_.components.empty()) fail(ErrorKind::InvalidArgument, "give at least one --component");
    const auto ctx = VariableContext::dual(A.n());
    std::vector<Ideal<F>> components;
    Json listed = Json::array();
    for (const auto& text : o_.components) {
      std::vector<Polynomial<F>> gens;
      Json eqs = Json::array();
      for (const auto& g : split_commas(text)) {
        gens.push_back(parse_affine_poly(g, ctx, K_));
        eqs.push_back(format_poly(gens.back(), ctx));
      }
      if (gens.empty()) fail(ErrorKind::InvalidArgument, "empty component");
      components.emplace_back(K_, ctx, std::move(gens));
      listed.push_back(eqs);
    }
    auto check = verify_component_decomposition(A, o_.k, components, budget());
    Json r;
    r["k"] = num(o_.k);
    r["components"] = listed;
    r["holds"] = check.holds;
    r["log"] = check.log;
    report_["results"] = r;
    err_ << "decompose: N_" << o_.k << (check.holds ? " equals" : " does NOT equal") << " the union of "
         << components.size() << " components\n";
    return check.holds ? 0 : 1;
  }

  int jacobian() {
    Json r;
    if (o_.has_cubic) {
      if (o_.cubic_n == 0) fail(ErrorKind::InvalidArgument, "--cubic needs --n");
      auto ctx = VariableContext::ring(o_.cubic_n);
      auto f = parse_poly(o_.cubic, ctx, K_);
      input_ = Input{"cubic", o_.cubic, o_.cubic_n, std::nullopt, {}};
      auto pres = jacobian_ring(f);
      for (const auto& g : pres.generators()) input_->generators.push_back(format_poly(g, ctx));
      describe_input();
      r["cubic"] = format_poly(f, ctx);
      r["presentation"] = lines_json(format_presentation(pres));
      auto A = GradedAlgebra<F>::build(pres);
      r["dims"] = dims_json(nonzero_dims(A));
      report_["results"] = r;
      err_ << "jacobian: partials form a regular sequence, dims " << join(nonzero_dims(A)) << "\n";
      return 0;
    }
    auto pres = presentation();
    auto test = is_jacobian_presentation(pres, o_.seed);
    r["jacobian"] = test.jacobian;
    r["cubic_space_dimension"] = num(test.cubic_space_dimension);
    r["exact"] = test.exact;
    if (test.cubic) r["cubic"] = format_poly(*test.cubic, pres.context());
    report_["results"] = r;
    err_ << "jacobian: " << (test.jacobian ? "I_2 is spanned by the partials of a cubic" : "not a jacobian ideal")
         << "\n";
    return 0;
  }

  int quotient() {
    auto A = algebra();
    auto z = linear_form(A, o_.z);
    auto q = A.quotient_by_linear(z);
    Json identities = Json::array();
    for (const auto& id : q.identities) {
      Json e;
      e["s"] = num(id.s);
      e["kernel_w"] = num(id.kernel_w);
      e["previous_dim"] = num(id.previous_dim);
      e["kernel_z_previous"] = num(id.kernel_z_previous);
      e["holds"] = id.holds;
      identities.push_back(e);
    }
    const auto text = format_presentation(q.quotient.presentation());
    Json r;
    r["z"] = report::element_json(A, z);
    r["annihilator"] = report::element_json(A, q.annihilator);
    r["eliminated_variable"] = num(q.eliminated_variable);
    r["quotient_presentation"] = lines_json(text);
    r["quotient_dims"] = dims_json(nonzero_dims(q.quotient));
    r["identities"] = identities;
    r["identities_hold"] = q.identities_hold;
    if (o_.has_output) {
      write_file(o_.output, text);
      r["output"] = o_.output;
    }
    report_["results"] = r;
    err_ << "quotient: dims " << join(nonzero_dims(q.quotient)) << ", kernel identities "
         << (q.identities_hold ? "hold" : "FAIL") << "\n";
    return q.identities_hold ? 0 : 1;
  }

  int verify() {
    describe_input();
    ExampleOptions opts;
    opts.budget = budget();
    opts.sampling.seed = o_.seed;
    opts.sampling.min_samples = o_.samples;
    opts.sampling.max_samples = o_.max_samples;
    opts.sampling.threads = o_.threads;
    opts.tangent_samples = o_.tangent_samples;
    auto results = verify_example(corpus_instance(o_.example), K_, opts);
    Json facts = Json::array();
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto& f : results) {
      Json e;
      e["id"] = f.id;
      e["statement"] = f.statement;
      e["status"] = to_string(f.status);
      e["detail"] = f.detail;
      facts.push_back(e);
      passed += f.status == FactStatus::Pass;
      failed += f.status == FactStatus::Fail;
      skipped += f.status == FactStatus::Skipped;
      err_ << o_.example << " " << f.id << ": " << to_string(f.status) << " (" << f.detail << ")\n";
    }
    Json r;
    r["facts"] = facts;
    r["passed"] = num(passed);
    r["failed"] = num(failed);
    r["skipped"] = num(skipped);
    report_["results"] = r;
    return failed == 0 ? 0 : 1;
  }

  int fibers() {
    auto A = algebra();
    auto stats = fiber_statistics(A, o_.k, o_.count, o_.seed);
    Json hist = Json::object();
    for (const auto& [dim, n] : stats.histogram) hist[std::to_string(dim)] = num(n);
    Json r;
    r["k"] = num(o_.k);
    r["samples"] = num(o_.count);
    r["histogram"] = hist;
    r["generic"] = num(stats.generic);
    report_["results"] = r;
    err_ << "fibers: generic dim K^1 of x^" << o_.k << " is " << stats.generic << "\n";
    return 0;
  }

  const F& K_;
  const Options& o_;
  std::optional<Input> input_;
  Json& report_;
  std::ostream& err_;
};

void add_input_options(CLI::App& app, Options& o) {
  app.add_option("--field", o.field, "Q or Fp:<prime>; defaults to the input's field, then $SAGA_FIELD, then " +
                                         std::string(kDefaultField));
  app.add_option("--file", o.file, "presentation file");
  app.add_option("--instance", o.instance, "corpus instance EX1..EX5");
  app.add_option("--random", o.random_n, "random quadric complete intersection in n+1 variables");
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--samples", o.samples, "minimum number of random samples")->capture_default_str();
  app.add_option("--max-samples", o.max_samples, "cap on random samples")->capture_default_str();
  app.add_option("--max-pairs", o.max_pairs, "Groebner pair budget")->capture_default_str();
  app.add_option("--max-degree", o.max_degree, "Groebner degree cap")->capture_default_str();
  app.add_option("--threads", o.threads, "worker threads for sampling")->capture_default_str()->check(
      CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Artinian algebras of quadrics: Hilbert functions, Lefschetz properties, nihilpotent loci", "saga"};
  app.require_subcommand(1);
  app.fallthrough();
  add_input_options(app, o);

  auto* build = app.add_subcommand("build", "build R and list standard monomials");
  build->add_option("--output", o.output, "write the normalized presentation file here");
  app.add_subcommand("hilbert", "Hilbert function and Gorenstein duality");
  auto* lef = app.add_subcommand("lefschetz", "weak and strong Lefschetz checks with certificates");
  lef->add_option("--wlp", o.wlp, "WLP in degree k");
  lef->add_option("--slp", o.slp, "SLP in degree k with power s")->expected(2);
  lef->add_option("--element", o.element, "test one linear form");
  lef->add_option("--degree", o.degree, "source degree for --element")->capture_default_str();
  lef->add_option("--search", o.search, "search for a non-Lefschetz linear form in degree a");
  lef->add_option("--budget", o.budget, "random trials for --search")->capture_default_str();
  lef->add_option("--audit", o.audit, "re-verify the certificates of a saved report");
  lef->add_option("--subspace", o.subspace, "sample x from the span of these linear forms");
  auto* nihil = app.add_subcommand("nihil", "equations and dimension of N_k");
  nihil->add_option("--k", o.k, "power k")->capture_default_str();
  nihil->add_option("--point", o.point, "test membership of a linear form");
  app.add_subcommand("n2", "length and rational points of N_2");
  auto* dec = app.add_subcommand("decompose", "check N_k against a union of components");
  dec->add_option("--k", o.k, "power k")->capture_default_str();
  dec->add_option("--component", o.components, "comma-separated equations in w0..wn")->take_all();
  auto* jac = app.add_subcommand("jacobian", "jacobian ring of a cubic, or test whether I is one");
  jac->add_option("--cubic", o.cubic, "cubic form in x0..xn");
  jac->add_option("--n", o.cubic_n, "index of the last variable of --cubic");
  auto* quot = app.add_subcommand("quotient", "quotient by an annihilated linear form");
  quot->add_option("--z", o.z, "linear form z")->required();
  quot->add_option("--output", o.output, "write the quotient presentation file here");
  auto* ver = app.add_subcommand("verify-example", "verify the expected facts of a corpus instance");
  ver->add_option("name", o.example, "EX1..EX5")->required();
  ver->add_option("--tangent-samples", o.tangent_samples, "sampled points per locus")->capture_default_str();
  auto* fib = app.add_subcommand("fibers", "kernel dimensions of x^k on R^1 at random x");
  fib->add_option("--k", o.k, "power k")->capture_default_str();
  fib->add_option("--count", o.count, "number of samples")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  o.has_field = app.count("--field") > 0;
  o.has_file = app.count("--file") > 0;
  o.has_instance = app.count("--instance") > 0;
  o.has_random = app.count("--random") > 0;
  o.has_wlp = lef->count("--wlp") > 0;
  o.has_element = lef->count("--element") > 0;
  o.has_search = lef->count("--search") > 0;
  o.has_audit = lef->count("--audit") > 0;
  o.has_point = nihil->count("--point") > 0;
  o.has_cubic = jac->count("--cubic") > 0;
  o.has_output = build->count("--output") > 0 || quot->count("--output") > 0;

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  Json report;
  report["schema"] = report::kSchema;
  report["tool_version"] = report::kToolVersion;
  report["command"] = command;
  report["seed"] = num(o.seed);
  int code = 0;
  try {
    auto input = resolve_input(o, command);
    const auto descriptor = resolve_field(o, input);
    auto field = parse_field_descriptor(descriptor);
    report["field"] = std::visit([](const auto& K) { return K.descriptor(); }, field);
    code = std::visit(
        [&](const auto& K) {
          using F = std::decay_t<decltype(K)>;
          return Session<F>(K, o, input, report, err).run(command);
        },
        field);
  } catch (const Error& e) {
    code = exit_code(e.kind());
    Json error;
    error["kind"] = std::string(to_string(e.kind()));
    error["message"] = e.what();
    if (e.degree()) error["degree"] = num(*e.degree());
    report["error"] = error;
    err << command << ": " << e.what() << "\n";
  } catch (const Json::exception& e) {
    code = 2;
    report["error"] = {{"kind", "ParseError"}, {"message", e.what()}};
    err << command << ": " << e.what() << "\n";
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  report["timings"] = {{"total_ms", num(elapsed.count())}};
  report["exit_code"] = num(code);
  out << report::emit(report);
  return code;
}

}  // namespace saga::cli
