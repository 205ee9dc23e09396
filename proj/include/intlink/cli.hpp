#pragma once

// Command-line surface. Exit codes: 0 success, 1 bad input or failed
// validation, 2 internal parity failure.

#include <intlink/embedding.hpp>
#include <intlink/errors.hpp>
#include <intlink/generate.hpp>
#include <intlink/invariants.hpp>
#include <intlink/io.hpp>
#include <intlink/linking.hpp>
#include <intlink/projection.hpp>
#include <intlink/svg.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace intlink {

namespace cli_detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError(path + ": cannot write file");
  out << text;
}

inline Instance load(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_instance(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

/// Points lists are read as the straight-line complete graph on the points.
inline PLEmbedding as_embedding(const Instance& inst) {
  if (const auto* e = std::get_if<PLEmbedding>(&inst)) return *e;
  if (const auto* p = std::get_if<std::vector<Point3>>(&inst))
    return straight_map(complete_graph(static_cast<int>(p->size())), *p);
  throw ValidationError("expected an embedding or a points3 file");
}

inline void print_violations(std::ostream& out, const std::vector<Violation>& vs) {
  json j = json::array();
  for (const auto& v : vs) j.push_back(violation_json(v));
  out << j.dump(2) << "\n";
}

inline int cmd_check(const std::string& file, std::ostream& out) {
  const Instance inst = load(file);
  std::vector<Violation> vs;
  if (const auto* p3 = std::get_if<std::vector<Point3>>(&inst)) {
    if (!gp_points3(*p3)) vs.push_back({"general-position", "four of the points are coplanar"});
  } else if (const auto* p2 = std::get_if<std::vector<Point2>>(&inst)) {
    if (!gp_points2(*p2)) vs.push_back({"general-position", "three of the points are collinear"});
  } else if (const auto* e = std::get_if<PLEmbedding>(&inst)) {
    vs = validate_embedding(*e);
  } else {
    vs = validate_drawing(std::get<PlanarDrawing>(inst));
  }
  if (vs.empty()) {
    out << "ok\n";
    return 0;
  }
  print_violations(out, vs);
  return 1;
}

inline int cmd_vankampen(const std::string& file, std::ostream& out) {
  const Instance inst = load(file);
  if (const auto* d = std::get_if<PlanarDrawing>(&inst)) {
    out << van_kampen_drawing(*d) << "\n";
  } else if (const auto* p = std::get_if<std::vector<Point2>>(&inst)) {
    out << van_kampen_points(*p) << "\n";
  } else {
    throw ValidationError("vankampen expects a drawing or a points2 file");
  }
  return 0;
}

inline int cmd_find_linked(const std::string& file, std::uint64_t seed, bool verify, std::ostream& out) {
  const Instance inst = load(file);
  LinkReport report;
  PLEmbedding emb;
  if (const auto* p = std::get_if<std::vector<Point3>>(&inst)) {
    report = find_linked_triangles_linear(*p);
    emb = straight_map(complete_graph(6), *p);
  } else if (const auto* e = std::get_if<PLEmbedding>(&inst)) {
    emb = *e;
    const Graph g = smooth_all(*e).graph;
    if (is_complete(g, 6))
      report = find_linked_cycles_k6(emb, seed);
    else if (as_complete_bipartite(g, 4))
      report = find_linked_cycles_k44(emb, seed);
    else
      throw ValidationError("find-linked needs six points or an embedding of K6 or K4,4");
  } else {
    throw ValidationError("find-linked needs six points or an embedding of K6 or K4,4");
  }
  if (verify) {
    confirm_with_oracle(report, emb, seed);
    if (!*report.oracle_confirmed) {
      out << report_json(report).dump(2) << "\n";
      throw InternalParityFailure("oracle does not confirm the reported pair");
    }
  }
  out << report_json(report).dump(2) << "\n";
  return 0;
}

inline int cmd_oracle(const std::string& file, const std::vector<std::size_t>& lengths, std::uint64_t seed,
                      std::ostream& out) {
  if (lengths.size() != 2 || lengths[0] < 3 || lengths[1] < 3)
    throw ValidationError("--cycles takes two lengths, each at least 3");
  const PLEmbedding emb = as_embedding(load(file));
  const OracleResult r = oracle_count_linked_pairs(emb, lengths[0], lengths[1], seed);
  out << oracle_json(r, lengths[0], lengths[1]).dump(2) << "\n";
  return 0;
}

inline int cmd_project(const std::string& file, std::uint64_t seed, const std::string& svg, std::ostream& out) {
  const PLEmbedding emb = as_embedding(load(file));
  if (auto vs = validate_embedding(emb); !vs.empty()) throw EmbeddingInvalid("invalid embedding", std::move(vs));
  const Direction3 d = find_general_plane(emb, seed);
  const ProjectedDiagram diag = project_orthogonal(emb, d);
  if (!svg.empty()) write_file(svg, render_svg(diag));
  out << diagram_json(diag, d).dump(2) << "\n";
  return 0;
}

inline SpatialPolyline load_polygon(const std::string& file) {
  const Instance inst = load(file);
  const auto* p = std::get_if<std::vector<Point3>>(&inst);
  if (!p) throw ValidationError(file + ": expected a points3 file listing polygon corners");
  return SpatialPolyline::normalized(*p, true);
}

inline int cmd_link(const std::string& a_file, const std::string& b_file, std::uint64_t seed, std::ostream& out) {
  const SpatialPolyline a = load_polygon(a_file), b = load_polygon(b_file);
  if (!polylines_disjoint(a, b)) throw PolylinesNotDisjoint("the polygons intersect");
  out << linking_mod2_cone(a, b, sample_general_apex(a, b, seed)) << "\n";
  return 0;
}

inline int cmd_gen(const std::string& kind, const RunConfig& cfg, const std::string& output, std::ostream& out) {
  const std::string text = emit_instance(generate(kind, cfg));
  if (output.empty())
    out << text;
  else
    write_file(output, text);
  return 0;
}

}  // namespace cli_detail

/// Runs the command line `args` (without the program name).
inline int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linked cycles in spatial graphs, exactly."};
  app.name("intlink");
  app.require_subcommand(1);

  std::string file, file_b, output, svg, kind;
  std::uint64_t seed = 0;
  bool verify = false;
  std::vector<std::size_t> lengths;
  RunConfig cfg;

  auto* check = app.add_subcommand("check", "Validate an instance file");
  check->add_option("file", file, "Instance file")->required();

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--kind", kind, "Instance kind")->required()->check(CLI::IsMember(generator_kinds()));
  gen->add_option("--seed", cfg.seed, "PRNG seed");
  gen->add_option("--bound", cfg.bound, "Coordinate bound B")->check(CLI::PositiveNumber);
  gen->add_option("--max-tries", cfg.max_tries, "Rejection sampling budget")->check(CLI::PositiveNumber);
  gen->add_option("-o,--output", output, "Output file (default stdout)");

  auto* vk = app.add_subcommand("vankampen", "Print the van Kampen invariant of a drawing");
  vk->add_option("file", file, "Drawing or points2 file")->required();

  auto* find = app.add_subcommand("find-linked", "Find two linked cycles and print the report");
  find->add_option("file", file, "points3 file or embedding")->required();
  find->add_option("--seed", seed, "Seed for the projection direction search");
  find->add_flag("--verify", verify, "Reconfirm the reported pair with the oracle");

  auto* oracle = app.add_subcommand("oracle", "Count linked pairs of disjoint cycles");
  oracle->add_option("file", file, "Embedding or points3 file")->required();
  oracle->add_option("--cycles", lengths, "Cycle lengths L1,L2")->required()->delimiter(',')->expected(2);
  oracle->add_option("--seed", seed, "Seed for apex sampling");

  auto* project = app.add_subcommand("project", "Project an embedding along a general direction");
  project->add_option("file", file, "Embedding or points3 file")->required();
  project->add_option("--seed", seed, "Seed for the direction search");
  project->add_option("--svg", svg, "Write the diagram as SVG");

  auto* link = app.add_subcommand("link", "Mod 2 linking number of two closed polygons");
  link->add_option("a", file, "points3 file with the corners of the first polygon")->required();
  link->add_option("b", file_b, "points3 file with the corners of the second polygon")->required();
  link->add_option("--seed", seed, "Seed for apex sampling");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (*check) return cli_detail::cmd_check(file, out);
    if (*gen) return cli_detail::cmd_gen(kind, cfg, output, out);
    if (*vk) return cli_detail::cmd_vankampen(file, out);
    if (*find) return cli_detail::cmd_find_linked(file, seed, verify, out);
    if (*oracle) return cli_detail::cmd_oracle(file, lengths, seed, out);
    if (*project) return cli_detail::cmd_project(file, seed, svg, out);
    if (*link) return cli_detail::cmd_link(file, file_b, seed, out);
  } catch (const InternalParityFailure& e) {
    err << "internal parity failure: " << e.what() << "\n";
    return 2;
  } catch (const ViolationError& e) {
    err << "error: " << e.what() << "\n";
    cli_detail::print_violations(err, e.violations);
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace intlink
