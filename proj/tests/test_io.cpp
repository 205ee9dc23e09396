#include "support.hpp"

#include <intlink/cli.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace intlink;
using namespace testing_support;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("intlink-test-" + name)).string();
}

}  // namespace

TEST(ParseInstance, Points3) {
  const auto inst = parse_instance(R"({"kind": "points3", "positions": [["1/2", "3", -4], [0, 0, "7/14"]]})");
  const auto& pts = std::get<std::vector<Point3>>(inst);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0], (Point3{ratio(1, 2), 3, -4}));
  EXPECT_EQ(pts[1], (Point3{0, 0, ratio(1, 2)}));
}

TEST(ParseInstance, DrawingFixture) {
  const auto inst = parse_instance(cli_detail::read_file(fixture("k5-pentagon.json")));
  EXPECT_EQ(std::get<PlanarDrawing>(inst), pentagon_k5());
  EXPECT_EQ(instance_kind(inst), "drawing");
}

TEST(ParseInstance, RouteKeysInEitherOrder) {
  const std::string forward = R"({"kind": "embedding", "graph": {"vertices": [0, 1], "edges": [[0, 1]]},
    "positions": {"0": [0, 0, 0], "1": [4, 0, 0]}, "routes": {"0-1": [[1, 1, 0], [3, 1, 0]]}})";
  const std::string backward = R"({"kind": "embedding", "graph": {"vertices": [0, 1], "edges": [[0, 1]]},
    "positions": {"0": [0, 0, 0], "1": [4, 0, 0]}, "routes": {"1-0": [[3, 1, 0], [1, 1, 0]]}})";
  EXPECT_EQ(std::get<PLEmbedding>(parse_instance(forward)), std::get<PLEmbedding>(parse_instance(backward)));
}

TEST(ParseInstance, Errors) {
  EXPECT_THROW(parse_instance(cli_detail::read_file(fixture("bad-rational.json"))), ParseError);
  EXPECT_THROW(parse_instance("{\"kind\": \"points3\", \"positions\": [[1, 2]]}"), ParseError);
  EXPECT_THROW(parse_instance("{\"kind\": \"lattice\"}"), ParseError);
  EXPECT_THROW(parse_instance("[1, 2"), ParseError);
  EXPECT_THROW(parse_instance(R"({"kind": "drawing", "graph": {"vertices": [0, 1], "edges": [[0, 1], [1, 0]]},
    "positions": {"0": [0, 0], "1": [1, 0]}})"),
               ValidationError);
  EXPECT_THROW(parse_instance(R"({"kind": "drawing", "graph": {"vertices": [0, 1], "edges": [[0, 1]]},
    "positions": {"0": [0, 0]}})"),
               ValidationError);
}

TEST(ParseInstance, SyntaxErrorNamesLineAndColumn) {
  try {
    parse_instance("{\n  \"kind\": \"points3\",\n  \"positions\": [[1, 2, 3]\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

TEST(EmitInstance, RoundTripsEveryKind) {
  for (const auto& kind : generator_kinds()) {
    const Instance inst = generate(kind, RunConfig{5});
    const std::string text = emit_instance(inst);
    EXPECT_EQ(parse_instance(text), inst) << kind;
    EXPECT_EQ(emit_instance(parse_instance(text)), text) << kind;
  }
}

TEST(Generate, DeterministicPerSeed) {
  for (const auto& kind : generator_kinds()) {
    EXPECT_EQ(emit_instance(generate(kind, RunConfig{9})), emit_instance(generate(kind, RunConfig{9}))) << kind;
    EXPECT_NE(emit_instance(generate(kind, RunConfig{9})), emit_instance(generate(kind, RunConfig{10}))) << kind;
  }
}

TEST(Generate, InstancesAreValid) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_TRUE(gp_points3(std::get<std::vector<Point3>>(generate("k6-points", RunConfig{seed}))));
    EXPECT_TRUE(validate_embedding(std::get<PLEmbedding>(generate("k44-linear", RunConfig{seed}))).empty());
    EXPECT_TRUE(validate_embedding(std::get<PLEmbedding>(generate("k6-pl-subdivided", RunConfig{seed}))).empty());
    EXPECT_TRUE(validate_drawing(std::get<PlanarDrawing>(generate("k5-drawing", RunConfig{seed}))).empty());
    EXPECT_TRUE(validate_drawing(std::get<PlanarDrawing>(generate("k33-drawing", RunConfig{seed}))).empty());
    EXPECT_TRUE(validate_drawing(std::get<PlanarDrawing>(generate("polygon-pair", RunConfig{seed}))).empty());
  }
}

TEST(Generate, CoordinatesWithinBound) {
  const auto pts = std::get<std::vector<Point3>>(generate("k6-points", RunConfig{1, 10000, 7}));
  for (const auto& p : pts)
    for (const Rational* c : {&p.x, &p.y, &p.z}) EXPECT_LE(abs(*c), 7);
}

TEST(Generate, UnknownKind) { EXPECT_THROW(generate("k7-points", RunConfig{}), std::invalid_argument); }

TEST(ReportJson, CarriesLedgers) {
  LinkReport r = find_linked_triangles_linear(moment_curve(6));
  const json j = report_json(r);
  EXPECT_EQ(j.at("method"), "linear-central");
  EXPECT_EQ(j.at("lk"), 1);
  EXPECT_TRUE(j.at("oracle_confirmed").is_null());
  EXPECT_EQ(j.at("ledgers").size(), r.ledgers.size());
  confirm_with_oracle(r, straight_map(complete_graph(6), moment_curve(6)), 0);
  EXPECT_EQ(report_json(r).at("oracle_confirmed"), true);
}

TEST(Svg, PlainDrawingHasNoGaps) {
  const std::string s = render_svg(pentagon_k5());
  EXPECT_EQ(count_of(s, "<path class=\"edge\""), 10u);
  EXPECT_EQ(count_of(s, "<circle class=\"crossing\""), 5u);
  EXPECT_EQ(count_of(s, " M "), 0u);
  EXPECT_EQ(count_of(s, "<circle class=\"vertex\""), 5u);
}

TEST(Svg, ProjectedDiagramGapsEveryLowerStrand) {
  const PLEmbedding emb = straight_map(complete_graph(6), moment_curve(6));
  const auto diag = project_orthogonal(emb, find_general_plane(emb, 0));
  const std::string s = render_svg(diag);
  EXPECT_GT(diag.crossings.size(), 0u);
  EXPECT_EQ(count_of(s, " M "), diag.crossings.size());
  EXPECT_EQ(count_of(s, "<circle class=\"crossing\""), diag.crossings.size());
}

TEST(Svg, EmptyGraph) {
  const std::string s = render_svg(PlanarDrawing{});
  EXPECT_NE(s.find("<svg"), std::string::npos);
  EXPECT_NE(s.find("</svg>"), std::string::npos);
}

TEST(Cli, CheckAndVanKampen) {
  EXPECT_EQ(run({"check", fixture("k5-pentagon.json")}).code, 0);
  const CliRun vk = run({"vankampen", fixture("k5-pentagon.json")});
  EXPECT_EQ(vk.code, 0);
  EXPECT_EQ(vk.out, "1\n");
  const CliRun bad = run({"check", fixture("crossing-routes.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("routes-meet"), std::string::npos) << bad.out;
}

TEST(Cli, ParseFailuresExitOne) {
  const CliRun r = run({"check", fixture("bad-rational.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("3/0"), std::string::npos) << r.err;
  EXPECT_EQ(run({"check", temp_path("missing.json")}).code, 1);
  EXPECT_EQ(run({"gen", "--kind", "k7-points"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, FindLinkedVerify) {
  const CliRun r = run({"find-linked", fixture("moment-k6-points.json"), "--verify"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("oracle_confirmed"), true);
  EXPECT_EQ(j.at("lk"), 1);
}

TEST(Cli, GenWritesFileAndPipelineRuns) {
  const std::string path = temp_path("k44.json");
  ASSERT_EQ(run({"gen", "--kind", "k44-linear", "--seed", "3", "-o", path}).code, 0);
  EXPECT_EQ(run({"check", path}).code, 0);
  const CliRun found = run({"find-linked", path, "--seed", "1", "--verify"});
  ASSERT_EQ(found.code, 0) << found.err;
  EXPECT_EQ(json::parse(found.out).at("method"), "pl-orthogonal");
  const CliRun oracle = run({"oracle", path, "--cycles", "4,4"});
  ASSERT_EQ(oracle.code, 0) << oracle.err;
  EXPECT_EQ(json::parse(oracle.out).at("pairs_examined"), 18);
  const std::string svg = temp_path("k44.svg");
  const CliRun proj = run({"project", path, "--svg", svg});
  ASSERT_EQ(proj.code, 0) << proj.err;
  EXPECT_NE(cli_detail::read_file(svg).find("<svg"), std::string::npos);
  std::filesystem::remove(path);
  std::filesystem::remove(svg);
}

TEST(Cli, GenIsByteIdenticalAcrossRuns) {
  const CliRun a = run({"gen", "--kind", "k6-pl-subdivided", "--seed", "12"});
  const CliRun b = run({"gen", "--kind", "k6-pl-subdivided", "--seed", "12"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, LinkTwoPolygons) {
  const CliRun r = run({"link", fixture("linked-a.json"), fixture("linked-b.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1\n");
}
