// Command-line front end. All verbs are deterministic: the same flags always
// produce the same bytes. Indices and word positions are 1-based on this
// surface.
//
// Exit codes: 0 success / all verdicts true, 1 some verdict false, 2 checker
// error, 64 usage error, 70 internal invariant failure.
#pragma once

#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "strpoly/atoms.hpp"
#include "strpoly/tableaux.hpp"

namespace strpoly {

namespace cli_detail {

inline std::vector<int> parse_csv(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(std::stoi(item));
  }
  return out;
}

inline std::string format_vector(const std::vector<int>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

struct CommonArgs {
  int n = 0;
  std::string word_csv;
  std::string lambda_csv;
  std::string format = "text";
  std::string out_path;
  int jobs = 1;

  ReducedWord word() const {
    require(n >= 2, "--n must be at least 2");
    if (word_csv.empty()) return lex_least_reduced_word(n);
    return ReducedWord::make(n, parse_csv(word_csv));
  }

  Weight lambda() const {
    require(!lambda_csv.empty(), "--lambda is required for this command");
    auto fw = parse_csv(lambda_csv);
    require(static_cast<int>(fw.size()) == n - 1, "--lambda needs n-1 entries");
    Weight w{fw};
    require(w.dominant(), "--lambda must be dominant");
    return w;
  }

  void emit(const std::string& payload, std::ostream& fallback) const {
    if (out_path.empty()) {
      fallback << payload;
      return;
    }
    std::ofstream file(out_path, std::ios::binary);
    require(file.good(), "cannot open output file: " + out_path);
    file << payload;
  }
};

inline void add_common(CLI::App* cmd, CommonArgs& args, bool with_lambda) {
  cmd->add_option("--n", args.n, "rank: number of wires")->required();
  cmd->add_option("--word", args.word_csv,
                  "reduced word for the longest element, comma separated "
                  "(default: lexicographically least)");
  if (with_lambda) cmd->add_option("--lambda", args.lambda_csv, "dominant weight, comma separated");
  cmd->add_option("--format", args.format, "output format: text|json|dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  cmd->add_option("--out", args.out_path, "write output to a file instead of stdout");
  cmd->add_option("--jobs", args.jobs, "data-parallel fan-out (output is order-independent)")
      ->check(CLI::PositiveNumber);
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  using cli_detail::CommonArgs;
  using cli_detail::format_vector;

  CLI::App app{"string polytopes, their crystal structure, and atomic decompositions"};
  app.require_subcommand(1);

  CommonArgs cone_args, poly_args, points_args, graph_args, z_args, embed_args, proj_args,
      atom_args, oracle_args;
  int z_j = 1, embed_j = 1, proj_j = 1, atom_i = 0, atom_k = 1;

  auto* cone = app.add_subcommand("cone", "string cone inequalities of a reduced word");
  cli_detail::add_common(cone, cone_args, false);

  auto* poly = app.add_subcommand("polytope", "string polytope inequalities");
  cli_detail::add_common(poly, poly_args, true);

  auto* points = app.add_subcommand("points", "lattice points of a string polytope");
  cli_detail::add_common(points, points_args, true);

  auto* graph = app.add_subcommand("crystal-graph", "crystal graph on the lattice points");
  cli_detail::add_common(graph, graph_args, true);

  auto* zcmd = app.add_subcommand("z", "weight-zero translation vector z_j");
  cli_detail::add_common(zcmd, z_args, false);
  zcmd->add_option("--j", z_j, "index of the weight-zero element")->required();

  auto* embed = app.add_subcommand("embed-check",
                                   "verify the translation x -> x + z_j against the crystal");
  cli_detail::add_common(embed, embed_args, true);
  embed->add_option("--j", embed_j, "translation index")->required();

  auto* proj = app.add_subcommand("project",
                                  "find a wire-removal sequence carrying z_j to an extremal "
                                  "z and verify the projected implications");
  cli_detail::add_common(proj, proj_args, true);
  proj->add_option("--j", proj_j, "translation index")->required();

  auto* atom = app.add_subcommand("atom-check", "complement-atom verdicts in B(k*theta)");
  cli_detail::add_common(atom, atom_args, false);
  atom->add_option("--k", atom_k, "scaling of the highest root")->check(CLI::PositiveNumber);
  atom->add_option("--i", atom_i, "atom index (default: all)");

  auto* oracle = app.add_subcommand("oracle-compare",
                                    "compare the path crystal with the tableaux crystal");
  cli_detail::add_common(oracle, oracle_args, true);

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 64;
  }

  try {
    if (cone->parsed()) {
      auto word = cone_args.word();
      WiringDiagram d = WiringDiagram::build(word);
      auto sys = cone_inequalities(d);
      std::string payload;
      if (cone_args.format == "json") {
        payload =
            polytope_to_json(word, zero_weight(word.n), sys, nullptr).dump(2) + "\n";
      } else if (cone_args.format == "dot") {
        payload = to_dot(d);
      } else {
        std::ostringstream text;
        for (const auto& row : sys.rows) {
          text << format_vector(row.normal) << " <= " << row.bound << "\n";
        }
        payload = text.str();
      }
      cone_args.emit(payload, out);
      return 0;
    }
    if (poly->parsed()) {
      auto word = poly_args.word();
      auto lambda = poly_args.lambda();
      WiringDiagram d = WiringDiagram::build(word);
      auto sys = polytope_inequalities(d, lambda);
      std::string payload;
      if (poly_args.format == "json") {
        payload = polytope_to_json(word, lambda, sys, nullptr).dump(2) + "\n";
      } else {
        std::ostringstream text;
        for (const auto& row : sys.rows) {
          text << format_vector(row.normal) << " <= " << row.bound << "\n";
        }
        payload = text.str();
      }
      poly_args.emit(payload, out);
      return 0;
    }
    if (points->parsed()) {
      auto word = points_args.word();
      auto lambda = points_args.lambda();
      StringPolytope poly_obj(word, lambda);
      const auto& pts = poly_obj.points();
      std::string payload;
      if (points_args.format == "json") {
        payload = polytope_to_json(word, lambda, poly_obj.system(), &pts).dump(2) + "\n";
      } else {
        std::ostringstream text;
        for (const auto& p : pts) text << format_vector(p) << "\n";
        text << "count: " << pts.size() << "\n";
        payload = text.str();
      }
      points_args.emit(payload, out);
      return 0;
    }
    if (graph->parsed()) {
      auto word = graph_args.word();
      auto lambda = graph_args.lambda();
      StringCrystal cr(word, lambda);
      CrystalGraph g = crystal_graph(cr);
      std::string payload;
      if (graph_args.format == "dot") {
        payload = to_dot(g);
      } else if (graph_args.format == "json") {
        payload = crystal_graph_to_json(cr, g).dump(2) + "\n";
      } else {
        std::ostringstream text;
        text << "vertices: " << g.vertices.size() << "\nedges: " << g.edges.size() << "\n";
        for (const auto& e : g.edges) {
          text << format_vector(g.vertices[e.from]) << " -" << e.colour << "-> "
               << format_vector(g.vertices[e.to]) << "\n";
        }
        payload = text.str();
      }
      graph_args.emit(payload, out);
      return 0;
    }
    if (zcmd->parsed()) {
      auto word = z_args.word();
      ZVector z = z_vector(word, z_j);
      std::string payload;
      if (z_args.format == "json") {
        nlohmann::ordered_json j;
        j["word"] = word.letters;
        j["j"] = z.j;
        j["coords"] = z.coords;
        payload = j.dump(2) + "\n";
      } else {
        payload = format_vector(z.coords) + "\n";
      }
      z_args.emit(payload, out);
      return 0;
    }
    if (embed->parsed()) {
      auto word = embed_args.word();
      auto report = check_morphism(word, embed_args.lambda(), embed_j, embed_args.jobs);
      std::string payload;
      if (embed_args.format == "json") {
        payload = morphism_report_to_json(report).dump(2) + "\n";
      } else {
        std::ostringstream text;
        text << "points: " << report.points_checked
             << " violations: " << report.violations.size() << " status: "
             << (report.ok() ? "ok" : "violated") << "\n";
        payload = text.str();
      }
      embed_args.emit(payload, out);
      return report.ok() ? 0 : 1;
    }
    if (proj->parsed()) {
      auto word = proj_args.word();
      auto report =
          check_projection_theorem(word, proj_args.lambda(), proj_j, proj_args.jobs);
      std::string payload;
      if (proj_args.format == "json") {
        payload = projection_report_to_json(report).dump(2) + "\n";
      } else {
        std::ostringstream text;
        text << "found: " << (report.found ? "yes" : "no");
        if (report.found) {
          text << " steps: " << report.sequence.size()
               << " violations: " << report.violations.size();
        }
        text << "\n";
        payload = text.str();
      }
      proj_args.emit(payload, out);
      return report.ok() ? 0 : 1;
    }
    if (atom->parsed()) {
      auto word = atom_args.word();
      std::vector<int> indices;
      if (atom_i > 0) {
        indices.push_back(atom_i);
      } else {
        for (int i = 1; i <= word.n - 1; ++i) indices.push_back(i);
      }
      bool all_big = true;
      nlohmann::ordered_json payload = nlohmann::ordered_json::array();
      for (int i : indices) {
        ConjectureVerdict v = conjecture_atom(word, atom_k, i, atom_args.jobs);
        all_big = all_big && v.atom.is_big_atom;
        payload.push_back(verdict_to_json(v));
      }
      if (atom_args.format == "json") {
        atom_args.emit(payload.dump(2) + "\n", out);
      } else {
        std::ostringstream text;
        for (const auto& v : payload) {
          text << "i=" << v["i"] << " atom=" << v["atom"] << " big_atom=" << v["big_atom"]
               << " size=" << v["atom_size"] << "\n";
        }
        atom_args.emit(text.str(), out);
      }
      return all_big ? 0 : 1;
    }
    if (oracle->parsed()) {
      auto word = oracle_args.word();
      auto lambda = oracle_args.lambda();
      StringCrystal cr(word, lambda);
      TableauxCrystal tcr = generate_crystal(word.n, lambda);
      std::size_t mismatches = 0;
      std::set<std::vector<int>> seen;
      for (const auto& t : tcr.elements) {
        auto x = adapted_string(t, word);
        bool ok = cr.member(x) && seen.insert(x).second &&
                  cr.weight(x) == tableau_weight(t);
        for (int a = 1; ok && a <= word.n - 1; ++a) {
          auto ft = tableau_f(t, a);
          auto fx = cr.f(x, a);
          if (ft.has_value() != fx.has_value()) ok = false;
          if (ft && fx && adapted_string(*ft, word) != *fx) ok = false;
        }
        if (!ok) ++mismatches;
      }
      bool sizes = tcr.elements.size() == cr.polytope().points().size();
      bool good = mismatches == 0 && sizes;
      nlohmann::ordered_json j;
      j["word"] = word.letters;
      j["lambda"] = lambda.fw;
      j["tableaux"] = tcr.elements.size();
      j["lattice_points"] = cr.polytope().points().size();
      j["mismatches"] = mismatches;
      j["status"] = good ? "isomorphic" : "mismatch";
      if (oracle_args.format == "json") {
        oracle_args.emit(j.dump(2) + "\n", out);
      } else {
        std::ostringstream text;
        text << "tableaux: " << tcr.elements.size()
             << " lattice points: " << cr.polytope().points().size()
             << " status: " << j["status"].get<std::string>() << "\n";
        oracle_args.emit(text.str(), out);
      }
      return good ? 0 : 1;
    }
  } catch (const internal_error& e) {
    nlohmann::ordered_json j;
    j["error"] = "internal";
    j["message"] = e.what();
    err << j.dump(2) << "\n";
    return 70;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 64;
}

}  // namespace strpoly
