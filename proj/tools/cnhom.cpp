#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cnhom/builders.hpp"
#include "cnhom/chain.hpp"
#include "cnhom/face_complex.hpp"
#include "cnhom/homology.hpp"
#include "cnhom/obstruction.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // failed validation or negative verdict
constexpr int kExitUsage = 2;     // usage, IO, or malformed document

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageFailure("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageFailure("cannot write file: " + path);
  out << content;
}

int parse_count(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw UsageFailure(what + ": expected an integer, got '" + text + "'");
  }
}

cnhom::FaceComplex load_complex(const std::string& path, bool allow_disconnected) {
  return cnhom::parse_complex(read_file(path), allow_disconnected);
}

int run_build(const std::string& kind, const std::vector<std::string>& args,
              const std::string& out_path) {
  auto need_args = [&](std::size_t n, const std::string& what) {
    if (args.size() != n)
      throw UsageFailure("build " + kind + ": expected " + what + ", got " +
                         std::to_string(args.size()) + " argument(s)");
  };
  std::optional<cnhom::FaceComplex> x;
  if (kind == "interval") {
    need_args(0, "no arguments");
    x = cnhom::interval();
  } else if (kind == "disk") {
    need_args(0, "no arguments");
    x = cnhom::disk();
  } else if (kind == "polygon") {
    need_args(1, "the edge count K");
    x = cnhom::polygon(parse_count(args[0], "polygon K"));
  } else if (kind == "simplex") {
    need_args(1, "the dimension N");
    x = cnhom::simplex(parse_count(args[0], "simplex N"));
  } else if (kind == "hypercube") {
    need_args(1, "the dimension N");
    x = cnhom::hypercube(parse_count(args[0], "hypercube N"));
  } else if (kind == "product") {
    need_args(2, "two complex documents");
    x = cnhom::product(load_complex(args[0], false), load_complex(args[1], false));
  } else {
    throw UsageFailure("unknown builder: " + kind);
  }
  write_output(out_path, cnhom::serialize(*x));
  return kExitOk;
}

int run_validate(const std::string& path, bool allow_disconnected) {
  std::string text = read_file(path);
  try {
    cnhom::FaceComplex x = cnhom::parse_complex(text, allow_disconnected);
    std::cout << "ok: " << x.name() << ": " << x.faces().size() << " faces, "
              << x.incidences().size() << " incidences, codim " << x.codim() << "\n";
    return kExitOk;
  } catch (const cnhom::ValidationError& e) {
    std::cout << "invalid: " << e.report().violations.size() << " violation(s)\n";
    for (const std::string& violation : e.report().violations)
      std::cout << "  - " << violation << "\n";
    return kExitNegative;
  }
}

std::string format_matrix_block(const cnhom::BoundaryMatrix& bm, int p) {
  std::ostringstream os;
  os << "delta_" << p << ": rows [";
  for (std::size_t i = 0; i < bm.row_labels.size(); ++i) os << (i ? " " : "") << bm.row_labels[i];
  os << "]; cols [";
  for (std::size_t i = 0; i < bm.col_labels.size(); ++i) os << (i ? " " : "") << bm.col_labels[i];
  os << "]\n";
  for (Eigen::Index i = 0; i < bm.mat.rows(); ++i) {
    for (Eigen::Index j = 0; j < bm.mat.cols(); ++j) os << (j ? " " : "") << bm.mat(i, j);
    os << "\n";
  }
  return os.str();
}

ordered_json matrix_json(const cnhom::BoundaryMatrix& bm, int p) {
  ordered_json j;
  j["degree"] = p;
  j["rows"] = bm.row_labels;
  j["cols"] = bm.col_labels;
  j["entries"] = ordered_json::array();
  for (Eigen::Index i = 0; i < bm.mat.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index jj = 0; jj < bm.mat.cols(); ++jj) row.push_back(cnhom::to_long(bm.mat(i, jj)));
    j["entries"].push_back(std::move(row));
  }
  return j;
}

void print_group_lines(const cnhom::HomologyGroup& g, const std::string& indent) {
  std::cout << indent << "p=" << g.degree << ": " << cnhom::format_group(g) << "\n";
  for (const cnhom::Chain& c : g.free_generators)
    std::cout << indent << "  generator: " << cnhom::format_chain(c) << "\n";
  for (const auto& [c, order] : g.torsion_generators)
    std::cout << indent << "  torsion generator (order " << order.get_str()
              << "): " << cnhom::format_chain(c) << "\n";
}

int run_homology(const std::string& path, bool periodic, bool dump_matrices, bool as_json,
                 bool allow_disconnected) {
  cnhom::FaceComplex x = load_complex(path, allow_disconnected);
  if (as_json) {
    ordered_json j;
    j["name"] = x.name();
    j["codim"] = x.codim();
    if (periodic) {
      cnhom::PeriodicGroups pg = cnhom::periodic_homology(x);
      j["even"] = ordered_json::array();
      for (const cnhom::HomologyGroup& g : pg.even) j["even"].push_back(cnhom::group_to_json(g));
      j["odd"] = ordered_json::array();
      for (const cnhom::HomologyGroup& g : pg.odd) j["odd"].push_back(cnhom::group_to_json(g));
    } else {
      j["groups"] = ordered_json::array();
      for (const cnhom::HomologyGroup& g : cnhom::all_homology(x))
        j["groups"].push_back(cnhom::group_to_json(g));
    }
    if (dump_matrices) {
      j["matrices"] = ordered_json::array();
      for (int p = 1; p <= x.codim(); ++p)
        j["matrices"].push_back(matrix_json(cnhom::boundary_matrix(x, p), p));
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  if (periodic) {
    cnhom::PeriodicGroups pg = cnhom::periodic_homology(x);
    std::cout << "even:\n";
    for (const cnhom::HomologyGroup& g : pg.even) print_group_lines(g, "  ");
    std::cout << "odd:\n";
    for (const cnhom::HomologyGroup& g : pg.odd) print_group_lines(g, "  ");
  } else {
    std::vector<cnhom::HomologyGroup> groups = cnhom::all_homology(x);
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) print_group_lines(*it, "");
  }
  if (dump_matrices)
    for (int p = 1; p <= x.codim(); ++p)
      std::cout << format_matrix_block(cnhom::boundary_matrix(x, p), p);
  return kExitOk;
}

int run_faces(const std::string& path, int p, bool cycles, bool delta, bool allow_disconnected) {
  cnhom::FaceComplex x = load_complex(path, allow_disconnected);
  std::vector<cnhom::FaceId> faces;
  if (cycles) faces = cnhom::corner_cycle_faces(x, p);
  else if (delta) faces = cnhom::boundary_touched_faces(x, p);
  else faces = x.faces_of_codim(p);
  for (std::size_t i = 0; i < faces.size(); ++i) std::cout << (i ? " " : "") << faces[i];
  std::cout << "\n";
  return kExitOk;
}

void print_class(const cnhom::ClassCoordinates& cc) {
  std::cout << "class: free [";
  for (std::size_t i = 0; i < cc.free.size(); ++i) std::cout << (i ? " " : "") << cc.free[i].get_str();
  std::cout << "], torsion [";
  for (std::size_t i = 0; i < cc.torsion.size(); ++i)
    std::cout << (i ? " " : "") << cc.torsion[i].get_str();
  std::cout << "]\n";
}

int run_obstruction(const std::string& path, const std::string& indices_path,
                    const std::vector<std::string>& odd_paths, bool as_json,
                    bool allow_disconnected) {
  cnhom::FaceComplex x = load_complex(path, allow_disconnected);
  cnhom::IndexAssignment idx = cnhom::parse_index_assignment(read_file(indices_path));
  cnhom::ObstructionVerdict verdict = cnhom::decide_sfp(x, idx);
  std::optional<cnhom::OddIndexClass> odd;
  if (!odd_paths.empty()) {
    cnhom::IndexAssignment top = cnhom::parse_index_assignment(read_file(odd_paths[0]));
    cnhom::IndexAssignment one = cnhom::parse_index_assignment(read_file(odd_paths[1]));
    odd = cnhom::odd_index_class(x, top, one);
  }

  if (as_json) {
    ordered_json j = cnhom::verdict_json(verdict);
    if (odd) j["odd"] = cnhom::odd_class_json(*odd);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "status: " << cnhom::to_string(verdict.status) << "\n";
    if (verdict.witness) std::cout << "witness: " << cnhom::format_chain(*verdict.witness) << "\n";
    if (verdict.class_coordinates) print_class(*verdict.class_coordinates);
    for (const std::string& w : verdict.warnings) std::cout << "warning: " << w << "\n";
    for (const std::string& d : verdict.diagnostics) std::cout << "note: " << d << "\n";
    if (odd) {
      if (odd->top_cycle)
        std::cout << "odd top cycle: " << cnhom::format_chain(*odd->top_cycle) << "\n";
      if (odd->h1_class) {
        std::cout << "odd ";
        print_class(*odd->h1_class);
      }
    }
  }
  bool negative = verdict.status == cnhom::SfpStatus::sfp_fails ||
                  verdict.status == cnhom::SfpStatus::not_a_cycle;
  return negative ? kExitNegative : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conormal homology of manifolds with embedded corners and the Fredholm "
               "perturbation obstruction"};
  app.require_subcommand(1);

  std::string build_kind, build_out;
  std::vector<std::string> build_args;
  CLI::App* build = app.add_subcommand("build", "construct a standard complex document");
  build->add_option("kind", build_kind,
                    "one of: interval, disk, polygon K, simplex N, hypercube N, product A.json B.json")
      ->required();
  build->add_option("args", build_args, "builder arguments");
  build->add_option("-o,--output", build_out, "output path (default: standard output)");

  std::string validate_path;
  bool validate_allow = false;
  CLI::App* validate = app.add_subcommand("validate", "check a complex document");
  validate->add_option("complex", validate_path, "complex document")->required();
  validate->add_flag("--allow-disconnected", validate_allow,
                     "permit more than one codimension-0 face");

  std::string homology_path;
  bool homology_periodic = false, homology_dump = false, homology_json = false,
       homology_allow = false;
  CLI::App* homology = app.add_subcommand("homology", "compute conormal homology");
  homology->add_option("complex", homology_path, "complex document")->required();
  homology->add_flag("--periodic", homology_periodic, "group degrees by parity");
  homology->add_flag("--dump-matrices", homology_dump, "also print the boundary matrices");
  homology->add_flag("--json", homology_json, "emit one JSON document");
  homology->add_flag("--allow-disconnected", homology_allow,
                     "permit more than one codimension-0 face");

  std::string faces_path;
  int faces_p = 0;
  bool faces_cycles = false, faces_delta = false, faces_allow = false;
  CLI::App* faces = app.add_subcommand("faces", "list faces of a codimension");
  faces->add_option("complex", faces_path, "complex document")->required();
  faces->add_option("-p", faces_p, "codimension")->required();
  CLI::Option* cycles_flag =
      faces->add_flag("--cycles", faces_cycles, "only faces carried by some integer cycle");
  faces->add_flag("--delta", faces_delta, "only faces hit by a boundary from one degree up")
      ->excludes(cycles_flag);
  faces->add_flag("--allow-disconnected", faces_allow,
                  "permit more than one codimension-0 face");

  std::string obstruction_path, obstruction_indices;
  std::vector<std::string> obstruction_odd;
  bool obstruction_json = false, obstruction_allow = false;
  CLI::App* obstruction =
      app.add_subcommand("obstruction", "decide the Fredholm perturbation obstruction");
  obstruction->add_option("complex", obstruction_path, "complex document")->required();
  obstruction->add_option("--indices", obstruction_indices, "degree-2 index assignment document")
      ->required();
  obstruction->add_option("--odd", obstruction_odd,
                          "top-degree and degree-1 assignment documents for the odd classes")
      ->expected(2);
  obstruction->add_flag("--json", obstruction_json, "emit one JSON document");
  obstruction->add_flag("--allow-disconnected", obstruction_allow,
                        "permit more than one codimension-0 face");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (build->parsed()) return run_build(build_kind, build_args, build_out);
    if (validate->parsed()) return run_validate(validate_path, validate_allow);
    if (homology->parsed())
      return run_homology(homology_path, homology_periodic, homology_dump, homology_json,
                          homology_allow);
    if (faces->parsed())
      return run_faces(faces_path, faces_p, faces_cycles, faces_delta, faces_allow);
    if (obstruction->parsed())
      return run_obstruction(obstruction_path, obstruction_indices, obstruction_odd,
                             obstruction_json, obstruction_allow);
  } catch (const cnhom::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const std::string& violation : e.report().violations)
      std::cerr << "  - " << violation << "\n";
    return kExitNegative;
  } catch (const cnhom::NotACycleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const cnhom::SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
