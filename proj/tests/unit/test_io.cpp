#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "gen.hpp"
#include "wehrhart/error.hpp"
#include "wehrhart/io.hpp"

using namespace wehrhart;
using io::json;

namespace {

std::filesystem::path corpus_file(const std::string& name) {
  return std::filesystem::path(WEHRHART_CORPUS_DIR) / (name + ".json");
}

}  // namespace

TEST(Io, LaurentRoundTrip) {
  gen::Source src(91);
  for (int i = 0; i < 50; ++i) {
    const LaurentPoly p = src.laurent(-4, 4);
    EXPECT_EQ(io::laurent_from_json(io::to_json(p)), p);
  }
  EXPECT_EQ(io::to_json(LaurentPoly::monomial(Rat(-3, 4), -2)),
            json::parse(R"([{"exp":-2,"coeff":"-3/4"}])"));
}

TEST(Io, LaurentRejectsMalformedTerms) {
  EXPECT_THROW(io::laurent_from_json(json::parse(R"({"exp":1})")), ParseError);
  EXPECT_THROW(io::laurent_from_json(json::parse(R"([{"exp":"a","coeff":"1"}])")), ParseError);
  EXPECT_THROW(io::laurent_from_json(json::parse(R"([{"exp":1,"coeff":"1/0"}])")), ParseError);
  EXPECT_THROW(io::laurent_from_json(json::parse(R"([{"coeff":"1"}])")), ParseError);
}

TEST(Io, CorpusFilesMatchGenerators) {
  for (const auto& e : corpus::standard()) {
    const LatticePolytope from_file = io::polytope_from_json(io::read_json_file(corpus_file(e.name)));
    EXPECT_EQ(from_file, facet_presentation(e.points)) << e.name;
  }
}

TEST(Io, PolytopeErrors) {
  EXPECT_THROW(io::polytope_from_json(json::parse(R"({"verts":[[0]]})")), ParseError);
  EXPECT_THROW(io::polytope_from_json(json::parse(R"({"vertices":[[0.5],[1]]})")), ParseError);
  EXPECT_THROW(io::polytope_from_json(json::parse(R"({"vertices":[[0,0],[1,1]]})")), ValidationError);
  EXPECT_THROW(io::read_json_file("/nonexistent/file.json"), ParseError);
  const auto tmp = std::filesystem::temp_directory_path() / "wehrhart_bad.json";
  std::ofstream(tmp) << "{ not json";
  EXPECT_THROW(io::read_json_file(tmp), ParseError);
  std::filesystem::remove(tmp);
}

TEST(Io, FaceLatticeRoundTrip) {
  for (const auto& c : fixtures::corpus()) {
    const json doc = io::to_json(*c.lattice);
    const auto back = io::face_lattice_from_json(doc);
    EXPECT_EQ(back->polytope(), c.lattice->polytope());
    EXPECT_EQ(io::to_json(*back), doc);
    EXPECT_EQ(doc["f_vector"].get<std::vector<int>>(), c.lattice->f_vector());
  }
  json tampered = io::to_json(*fixtures::lattice("square"));
  tampered["order"].erase(0);
  EXPECT_THROW(io::face_lattice_from_json(tampered), ValidationError);
}

TEST(Io, WeightRoundTripAndHashCheck) {
  const auto pyr = fixtures::lattice("pyramid");
  for (std::uint64_t s = 0; s < 10; ++s) {
    const WeightFunction f = random_weight(pyr, s);
    EXPECT_EQ(io::weights_from_json(io::to_json(f), pyr), f);
  }
  const json doc = io::to_json(all_ones_weight(pyr));
  EXPECT_THROW(io::weights_from_json(doc, fixtures::lattice("cube")), ValidationError);
  json bad = doc;
  bad["values"]["x1"] = json::array();
  EXPECT_THROW(io::weights_from_json(bad, pyr), ParseError);
  bad = doc;
  bad["values"]["0"] = json::parse(R"([{"exp":0,"coeff":"1"}])");
  EXPECT_THROW(io::weights_from_json(bad, pyr), ValidationError);
}

TEST(Io, PhiRoundTripAndHomogeneity) {
  gen::Source src(92);
  for (int i = 0; i < 20; ++i) {
    const HomogPoly phi = src.homogeneous(3, static_cast<int>(src.integer(0, 3)));
    const HomogPoly back = io::phi_from_json(io::to_json(phi));
    EXPECT_EQ(io::to_json(back), io::to_json(phi));
  }
  const json inhomogeneous =
      json::parse(R"({"n":2,"monomials":[{"exps":[1,0],"coeff":"1"},{"exps":[1,1],"coeff":"2"}]})");
  EXPECT_THROW(io::phi_from_json(inhomogeneous), ValidationError);
  EXPECT_THROW(io::phi_from_json(json::parse(R"({"monomials":[]})")), ParseError);
}

TEST(Io, CharacterSumAndZPolyRoundTrip) {
  const auto cube = fixtures::lattice("cube");
  for (std::int64_t l : {-2, 0, 2}) {
    const CharacterSum s = hodge_character_sum(random_weight(cube, 4), l);
    const json doc = io::to_json(s);
    EXPECT_EQ(io::charsum_from_json(doc), s);
    const auto& terms = doc["terms"];
    for (std::size_t i = 1; i < terms.size(); ++i)
      EXPECT_LT(terms[i - 1]["m"].get<Point>(), terms[i]["m"].get<Point>());
  }
  const ZPoly z = ehrhart_polynomial(random_weight(cube, 4), fixtures::linear_form(3), Variant::E);
  EXPECT_EQ(io::zpoly_from_json(io::to_json(z)), z);
}

TEST(Io, ReportCarriesBothSides) {
  const auto sq = fixtures::lattice("square");
  SuiteConfig config;
  config.suites = {Suite::Reciprocity};
  config.lmax = 1;
  config.weights = {{"ones", all_ones_weight(sq)}};
  config.phis = {{"one", HomogPoly::constant(2, 1)}};
  const json doc = io::to_json(run_suites(sq, config));
  EXPECT_EQ(doc["passed"], true);
  EXPECT_EQ(doc["failures"], 0);
  for (const auto& c : doc["checks"]) {
    EXPECT_EQ(c["status"], "pass");
    EXPECT_TRUE(c.contains("lhs"));
    EXPECT_TRUE(c.contains("rhs"));
  }
}
