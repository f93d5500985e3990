#include <doctest.h>

#include <fstream>
#include <sstream>

#include "saga/constructions.hpp"
#include "saga/report.hpp"

using namespace saga;
using report::Json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kCorpusDir = std::string(SAGA_DATA_DIR) + "/corpus/";

}  // namespace

TEST_CASE("shipped corpus files match the built-in corpus") {
  auto manifest = Json::parse(slurp(kCorpusDir + "manifest.json"));
  const auto& instances = manifest.at("instances");
  REQUIRE(instances.size() == paper_corpus().size());
  for (const auto& entry : instances) {
    const auto& inst = corpus_instance(entry.at("name").get<std::string>());
    INFO(inst.name);
    CHECK(entry.at("default_field") == inst.default_field);
    CHECK(entry.at("jacobian") == inst.jacobian);
    CHECK(entry.at("n") == std::to_string(inst.n));
    if (inst.cubic) CHECK(entry.at("cubic") == *inst.cubic);
    REQUIRE(entry.at("facts").size() == inst.facts.size());
    for (std::size_t i = 0; i < inst.facts.size(); ++i) {
      CHECK(entry.at("facts")[i].at("id") == inst.facts[i].id);
      CHECK(entry.at("facts")[i].at("statement") == inst.facts[i].statement);
    }

    auto file = parse_presentation_file(slurp(kCorpusDir + entry.at("file").get<std::string>()));
    CHECK(file.n == inst.n);
    CHECK(file.field == inst.default_field);
    auto K = std::get<PrimeField>(parse_field_descriptor(file.field));
    auto shipped = QuadricPresentation<PrimeField>::parse(K, file.n, file.generators);
    CHECK(shipped.generators() == instance_presentation(inst, K).generators());
  }
}
