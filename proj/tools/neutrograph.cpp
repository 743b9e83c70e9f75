// Command-line front end: classify graphs, take complements, count walks,
// explore subgraph spaces and subset graphs, and export DOT.
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "neutro/graph.hpp"
#include "neutro/io.hpp"
#include "neutro/matrix.hpp"
#include "neutro/subgraph_space.hpp"
#include "neutro/subset_vertex.hpp"
#include "neutro/transform.hpp"
#include "neutro/walks.hpp"

namespace {

using nlohmann::ordered_json;

ordered_json envelope(const std::string& command) {
  ordered_json j;
  j["command"] = command;
  j["version"] = "1";
  return j;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

// --cap beats the NEUTROGRAPH_CAP environment override beats the built-in.
std::size_t resolve_cap(const CLI::Option* opt, std::size_t flag_value,
                        std::size_t builtin) {
  if (opt != nullptr && opt->count() > 0) return flag_value;
  if (const char* env = std::getenv("NEUTROGRAPH_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return builtin;
}

ordered_json num_json(const neutro::Num& v) {
  return {{"real", v.real_part().str()}, {"indet", v.indet_part().str()}};
}

ordered_json matrix_json(const neutro::Matrix& m) {
  ordered_json j;
  j["rows"] = m.row_labels();
  j["cols"] = m.col_labels();
  ordered_json entries = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(num_json(m.at(r, c)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

void print_matrix(const neutro::Matrix& m) {
  std::vector<std::size_t> width(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    width[c] = m.col_labels()[c].size();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      width[c] = std::max(width[c], m.at(r, c).str().size());
    }
  }
  std::size_t head = 0;
  for (const auto& l : m.row_labels()) head = std::max(head, l.size());
  std::cout << std::string(head, ' ');
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const auto& l = m.col_labels()[c];
    std::cout << "  " << std::string(width[c] - l.size(), ' ') << l;
  }
  std::cout << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto& l = m.row_labels()[r];
    std::cout << l << std::string(head - l.size(), ' ');
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string cell = m.at(r, c).str();
      std::cout << "  " << std::string(width[c] - cell.size(), ' ') << cell;
    }
    std::cout << '\n';
  }
}

ordered_json census_json(const neutro::CircuitCensus& census) {
  using neutro::WalkClass;
  ordered_json j;
  j["usual"] = census.by_class.at(WalkClass::Usual);
  j["neutrosophic"] = census.by_class.at(WalkClass::Neutrosophic);
  j["pure"] = census.by_class.at(WalkClass::PureNeutrosophic);
  j["strong"] = census.by_class.at(WalkClass::StrongNeutrosophic);
  j["strong_pure"] = census.by_class.at(WalkClass::StrongPureNeutrosophic);
  return j;
}

neutro::ComplementMode parse_mode(const std::string& mode) {
  if (mode == "vertex") return neutro::ComplementMode::VertexKind;
  if (mode == "strong") return neutro::ComplementMode::Strong;
  return neutro::ComplementMode::EdgeKind;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graphs over the indeterminacy semiring: taxonomy, complements,"
               " walk counting, subgraph spaces, and subset graphs"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of plain text");

  std::string file, second_file, mode = "edge", method = "y", kind = "adjacency";
  std::string what = "graph", blocks;
  std::size_t k = 1, cap = 0, n = 1, m = 1;
  long long edges_flag = -1;
  bool list_trees = false;

  auto* classify = app.add_subcommand("classify", "Name the graph's class");
  classify->add_option("file", file, "graph file")->required();

  auto* complement = app.add_subcommand("complement", "Toggle kind labels");
  complement->add_option("file", file, "graph file")->required();
  complement->add_option("--mode", mode, "edge|vertex|strong|quasi")
      ->check(CLI::IsMember({"edge", "vertex", "strong", "quasi"}));

  auto* selfcomp = app.add_subcommand("selfcomp",
                                      "Exact self-complement search");
  selfcomp->add_option("file", file, "graph file")->required();
  selfcomp->add_option("--mode", mode, "edge|vertex|strong")
      ->check(CLI::IsMember({"edge", "vertex", "strong"}));
  auto* selfcomp_cap = selfcomp->add_option("--cap", cap, "vertex cap");

  auto* circuits = app.add_subcommand("circuits", "Enumerate simple cycles");
  circuits->add_option("file", file, "graph file")->required();
  auto* circuits_cap = circuits->add_option("--cap", cap, "vertex cap");

  auto* eulerian = app.add_subcommand("eulerian",
                                      "Trail using every edge once?");
  eulerian->add_option("file", file, "graph file")->required();

  auto* matrix = app.add_subcommand("matrix", "Adjacency or incidence matrix");
  matrix->add_option("file", file, "graph file")->required();
  matrix->add_option("--kind", kind, "adjacency|incidence")
      ->check(CLI::IsMember({"adjacency", "incidence"}));

  auto* power = app.add_subcommand("power", "Adjacency power / walk counts");
  power->add_option("file", file, "graph file")->required();
  power->add_option("--k", k, "walk length")->required();

  auto* connectivity = app.add_subcommand("connectivity",
                                          "Connectivity with witnesses");
  connectivity->add_option("file", file, "graph file")->required();
  connectivity->add_option("--method", method, "y|bfs")
      ->check(CLI::IsMember({"y", "bfs"}));

  auto* components = app.add_subcommand("components", "Connected components");
  components->add_option("file", file, "graph file")->required();
  components->add_option("--blocks", blocks,
                         "also print the block form of this matrix")
      ->check(CLI::IsMember({"adjacency", "incidence"}));

  auto* space = app.add_subcommand("space", "The space of all subgraphs");
  space->require_subcommand(1);
  auto* space_count = space->add_subcommand("count", "How many subgraphs");
  space_count->add_option("file", file, "graph file")->required();
  auto* space_enum = space->add_subcommand("enumerate", "List every subgraph");
  space_enum->add_option("file", file, "graph file")->required();
  auto* space_enum_cap = space_enum->add_option("--cap", cap, "member cap");
  auto* space_check = space->add_subcommand("check",
                                            "Lattice / topology report");
  space_check->add_option("file", file, "graph file")->required();
  auto* space_check_cap = space_check->add_option("--cap", cap, "member cap");
  auto* space_hasse = space->add_subcommand("hasse", "Cover diagram as DOT");
  space_hasse->add_option("file", file, "graph file")->required();
  auto* space_hasse_cap = space_hasse->add_option("--cap", cap, "member cap");

  auto* subset = app.add_subcommand("subset", "Subset vertex graphs");
  subset->require_subcommand(1);
  auto* subset_type1 = subset->add_subcommand(
      "type1", "The subset graph induced by a host graph");
  subset_type1->add_option("file", file, "graph file")->required();
  auto* subset_type1_cap = subset_type1->add_option("--cap", cap, "host vertex cap");
  auto* subset_count = subset->add_subcommand(
      "count", "Count free-edge subset graphs on an n-set universe");
  subset_count->add_option("--n", n, "base set size")->required();
  subset_count->add_option("--edges", edges_flag, "exact edge count");
  auto* subset_trees = subset->add_subcommand(
      "trees", "Labeled trees on the subset universe");
  subset_trees->add_option("--n", n, "base set size")->required();
  subset_trees->add_flag("--list", list_trees, "enumerate them too");
  auto* subset_trees_cap = subset_trees->add_option("--cap", cap, "universe cap");
  auto* subset_iso = subset->add_subcommand(
      "enum-iso", "Graphs on m vertices up to isomorphism");
  subset_iso->add_option("--m", m, "vertex count")->required();
  subset_iso->add_option("--edges", edges_flag, "exact edge count");
  auto* subset_merge = subset->add_subcommand("merge",
                                              "Union of two subset graphs");
  subset_merge->add_option("first", file, "subset graph file")->required();
  subset_merge->add_option("second", second_file, "subset graph file")->required();

  auto* export_dot = app.add_subcommand("export-dot", "Graphviz output");
  export_dot->add_option("file", file, "graph file")->required();
  export_dot->add_option("--what", what, "graph|hasse|type1")
      ->check(CLI::IsMember({"graph", "hasse", "type1"}));
  auto* export_cap = export_dot->add_option("--cap", cap, "cap for hasse/type1");

  // Let the global --json flag appear after any (nested) subcommand.
  const std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (auto* sub : a->get_subcommands({})) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);

    if (*classify) {
      const auto g = neutro::load_graph(file);
      const auto c = neutro::classify(g);
      if (json) {
        auto j = envelope("classify");
        j["class"] = to_string(c.cls);
        j["vertices"] = to_string(c.vertices);
        j["edges"] = to_string(c.edges);
        emit(j);
      } else {
        std::cout << to_string(c) << '\n';
      }
    } else if (*complement) {
      const auto g = neutro::load_graph(file);
      const auto out = mode == "quasi"
                           ? neutro::quasi_vertex_strong_complement(g)
                           : neutro::complement(g, parse_mode(mode));
      if (json) {
        auto j = envelope("complement");
        j["mode"] = mode;
        j["graph"] = neutro::render_graph(out);
        emit(j);
      } else {
        std::cout << neutro::render_graph(out);
      }
    } else if (*selfcomp) {
      const auto g = neutro::load_graph(file);
      const auto r = neutro::is_self_complemented(
          g, parse_mode(mode), resolve_cap(selfcomp_cap, cap, 9));
      if (json) {
        auto j = envelope("selfcomp");
        j["mode"] = mode;
        j["self_complemented"] = r.self_complemented;
        j["witness"] = ordered_json(r.witness);
        emit(j);
      } else {
        std::cout << "self-complemented (" << mode
                  << "): " << yes_no(r.self_complemented) << '\n';
        for (const auto& [from, to] : r.witness) {
          std::cout << "  " << from << " -> " << to << '\n';
        }
      }
    } else if (*circuits) {
      const auto g = neutro::load_graph(file);
      const auto census =
          neutro::enumerate_circuits(g, resolve_cap(circuits_cap, cap, 12));
      if (json) {
        auto j = envelope("circuits");
        ordered_json list = ordered_json::array();
        for (const auto& c : census.circuits) {
          list.push_back({{"vertices", c.vertices}, {"class", to_string(c.cls)}});
        }
        j["circuits"] = std::move(list);
        j["census"] = census_json(census);
        emit(j);
      } else {
        for (const auto& c : census.circuits) {
          for (std::size_t i = 0; i < c.vertices.size(); ++i) {
            std::cout << (i ? " " : "") << c.vertices[i];
          }
          std::cout << "  [" << to_string(c.cls) << "]\n";
        }
        std::cout << census_json(census).dump() << '\n';
      }
    } else if (*eulerian) {
      const auto g = neutro::load_graph(file);
      const bool ok = neutro::has_eulerian_trail(g);
      if (json) {
        auto j = envelope("eulerian");
        j["eulerian"] = ok;
        emit(j);
      } else {
        std::cout << yes_no(ok) << '\n';
      }
    } else if (*matrix) {
      const auto g = neutro::load_graph(file);
      const auto mat =
          kind == "incidence" ? neutro::incidence(g) : neutro::adjacency(g);
      if (json) {
        auto j = envelope("matrix");
        j["kind"] = kind;
        j.update(matrix_json(mat));
        emit(j);
      } else {
        print_matrix(mat);
      }
    } else if (*power) {
      const auto g = neutro::load_graph(file);
      const auto mat = neutro::walk_counts(g, k);
      if (json) {
        auto j = envelope("power");
        j["k"] = k;
        j.update(matrix_json(mat));
        emit(j);
      } else {
        print_matrix(mat);
      }
    } else if (*connectivity) {
      const auto g = neutro::load_graph(file);
      if (method == "bfs") {
        const bool c = neutro::is_connected(g);
        if (json) {
          auto j = envelope("connectivity");
          j["method"] = method;
          j["connected"] = c;
          emit(j);
        } else {
          std::cout << (c ? "connected" : "disconnected") << '\n';
        }
      } else {
        const auto r = neutro::connectivity_by_y(g);
        if (json) {
          auto j = envelope("connectivity");
          j["method"] = method;
          j["connected"] = r.connected;
          ordered_json zeros = ordered_json::array();
          for (const auto& [u, v] : r.zeros) zeros.push_back({u, v});
          j["zeros"] = std::move(zeros);
          emit(j);
        } else {
          std::cout << (r.connected ? "connected" : "disconnected") << '\n';
          for (const auto& [u, v] : r.zeros) {
            std::cout << "zero: " << u << ' ' << v << '\n';
          }
        }
      }
    } else if (*components) {
      const auto g = neutro::load_graph(file);
      const auto comps = neutro::components(g);
      std::optional<neutro::BlockDecomposition> block;
      if (!blocks.empty()) {
        block = neutro::block_decompose(g, blocks == "incidence"
                                               ? neutro::MatrixKind::Incidence
                                               : neutro::MatrixKind::Adjacency);
      }
      if (json) {
        auto j = envelope("components");
        j["components"] = comps;
        if (block) {
          ordered_json b;
          b["kind"] = blocks;
          b["row_blocks"] = block->row_blocks;
          b["col_blocks"] = block->col_blocks;
          b.update(matrix_json(block->permuted));
          j["blocks"] = std::move(b);
        }
        emit(j);
      } else {
        for (const auto& comp : comps) {
          for (std::size_t i = 0; i < comp.size(); ++i) {
            std::cout << (i ? " " : "") << comp[i];
          }
          std::cout << '\n';
        }
        if (block) print_matrix(block->permuted);
      }
    } else if (*space_count) {
      const auto g = neutro::load_graph(file);
      const auto total = neutro::count_subgraphs(g);
      if (json) {
        auto j = envelope("space count");
        j["count"] = total.str();
        emit(j);
      } else {
        std::cout << total.str() << '\n';
      }
    } else if (*space_enum) {
      const auto g = neutro::load_graph(file);
      const auto s = neutro::enumerate_space(
          g, neutro::BigInt(resolve_cap(space_enum_cap, cap, 100000)));
      if (json) {
        auto j = envelope("space enumerate");
        j["count"] = std::to_string(s.members.size());
        ordered_json list = ordered_json::array();
        for (const auto& sg : s.members) list.push_back(neutro::member_label(sg));
        j["members"] = std::move(list);
        emit(j);
      } else {
        for (const auto& sg : s.members) {
          std::cout << neutro::member_label(sg) << '\n';
        }
      }
    } else if (*space_check) {
      const auto g = neutro::load_graph(file);
      const auto s = neutro::enumerate_space(
          g, neutro::BigInt(resolve_cap(space_check_cap, cap, 100000)));
      const auto r = neutro::lattice_check(s);
      const bool smar = neutro::is_smarandache(s);
      if (json) {
        auto j = envelope("space check");
        j["count"] = std::to_string(s.members.size());
        j["is_lattice"] = r.is_lattice;
        j["is_distributive"] = r.is_distributive;
        j["is_complemented"] = r.is_complemented;
        j["is_boolean_algebra"] = r.is_boolean_algebra;
        j["is_topology"] = r.is_topology;
        j["is_smarandache"] = smar;
        emit(j);
      } else {
        std::cout << "members: " << s.members.size() << '\n'
                  << "lattice: " << yes_no(r.is_lattice) << '\n'
                  << "distributive: " << yes_no(r.is_distributive) << '\n'
                  << "complemented: " << yes_no(r.is_complemented) << '\n'
                  << "boolean algebra: " << yes_no(r.is_boolean_algebra) << '\n'
                  << "topology: " << yes_no(r.is_topology) << '\n'
                  << "smarandache: " << yes_no(smar) << '\n';
      }
    } else if (*space_hasse) {
      const auto g = neutro::load_graph(file);
      const auto s = neutro::enumerate_space(
          g, neutro::BigInt(resolve_cap(space_hasse_cap, cap, 100000)));
      const std::string dot = neutro::hasse_dot(s);
      if (json) {
        auto j = envelope("space hasse");
        j["dot"] = dot;
        emit(j);
      } else {
        std::cout << dot;
      }
    } else if (*subset_type1) {
      const auto g = neutro::load_graph(file);
      const auto s =
          neutro::build_type_one(g, resolve_cap(subset_type1_cap, cap, 10));
      if (json) {
        auto j = envelope("subset type1");
        j["base"] = s.base;
        ordered_json vs = ordered_json::array();
        for (const auto msk : s.vertices) vs.push_back(s.label(msk));
        j["vertices"] = std::move(vs);
        ordered_json es = ordered_json::array();
        for (const auto& [lo, hi] : s.edges) {
          es.push_back({s.label(lo), s.label(hi)});
        }
        j["edges"] = std::move(es);
        emit(j);
      } else {
        std::cout << neutro::render_subset_graph(s);
      }
    } else if (*subset_count) {
      const auto total =
          edges_flag >= 0
              ? neutro::count_type_two_with_edges(
                    static_cast<unsigned>(n), neutro::BigInt(edges_flag))
              : neutro::count_type_two(static_cast<unsigned>(n));
      if (json) {
        auto j = envelope("subset count");
        j["n"] = n;
        if (edges_flag >= 0) j["edges"] = edges_flag;
        j["count"] = total.str();
        emit(j);
      } else {
        std::cout << total.str() << '\n';
      }
    } else if (*subset_trees) {
      const auto total = neutro::count_labeled_trees(static_cast<unsigned>(n));
      std::vector<neutro::RootedTree> trees;
      if (list_trees) {
        trees = neutro::enumerate_trees(static_cast<unsigned>(n),
                                        resolve_cap(subset_trees_cap, cap, 7));
      }
      if (json) {
        auto j = envelope("subset trees");
        j["n"] = n;
        j["count"] = total.str();
        if (list_trees) {
          ordered_json list = ordered_json::array();
          for (const auto& t : trees) {
            ordered_json item;
            item["root"] = t.tree.label(t.root);
            ordered_json es = ordered_json::array();
            for (const auto& [lo, hi] : t.tree.edges) {
              es.push_back({t.tree.label(lo), t.tree.label(hi)});
            }
            item["edges"] = std::move(es);
            list.push_back(std::move(item));
          }
          j["trees"] = std::move(list);
        }
        emit(j);
      } else {
        std::cout << total.str() << '\n';
        for (const auto& t : trees) {
          std::cout << "root=" << t.tree.label(t.root) << ";";
          for (const auto& [lo, hi] : t.tree.edges) {
            std::cout << ' ' << t.tree.label(lo) << '-' << t.tree.label(hi);
          }
          std::cout << '\n';
        }
      }
    } else if (*subset_iso) {
      std::optional<std::size_t> r;
      if (edges_flag >= 0) r = static_cast<std::size_t>(edges_flag);
      const auto census = neutro::enumerate_type_two_iso(m, r);
      if (json) {
        auto j = envelope("subset enum-iso");
        j["m"] = m;
        if (r) j["edges"] = *r;
        j["class_count"] = census.classes.size();
        j["total_labeled"] = census.total_labeled;
        ordered_json list = ordered_json::array();
        for (const auto& cls : census.classes) {
          ordered_json item;
          item["edge_count"] = cls.edge_count;
          item["labeled_count"] = cls.labeled_count;
          ordered_json es = ordered_json::array();
          for (const auto& e : cls.representative.edges()) {
            es.push_back({e.a, e.b});
          }
          item["edges"] = std::move(es);
          list.push_back(std::move(item));
        }
        j["classes"] = std::move(list);
        emit(j);
      } else {
        std::cout << census.classes.size() << " classes ("
                  << census.total_labeled << " labeled)\n";
        for (const auto& cls : census.classes) {
          std::cout << "edges=" << cls.edge_count
                    << " labeled=" << cls.labeled_count << ":";
          for (const auto& e : cls.representative.edges()) {
            std::cout << ' ' << e.a << '-' << e.b;
          }
          std::cout << '\n';
        }
      }
    } else if (*subset_merge) {
      const auto a = neutro::load_subset_graph(file);
      const auto b = neutro::load_subset_graph(second_file);
      const auto r = neutro::merge(a, b);
      if (json) {
        auto j = envelope("subset merge");
        j["graph"] = neutro::render_subset_graph(r.merged);
        j["is_tree"] = r.is_tree;
        j["meshed"] = r.meshed;
        emit(j);
      } else {
        std::cout << neutro::render_subset_graph(r.merged)
                  << "tree: " << yes_no(r.is_tree) << '\n'
                  << "meshed: " << yes_no(r.meshed) << '\n';
      }
    } else if (*export_dot) {
      std::string dot;
      if (what == "hasse") {
        const auto g = neutro::load_graph(file);
        dot = neutro::hasse_dot(neutro::enumerate_space(
            g, neutro::BigInt(resolve_cap(export_cap, cap, 100000))));
      } else if (what == "type1") {
        const auto g = neutro::load_graph(file);
        dot = neutro::to_dot(
            neutro::build_type_one(g, resolve_cap(export_cap, cap, 10)));
      } else {
        dot = neutro::to_dot(neutro::load_graph(file));
      }
      if (json) {
        auto j = envelope("export-dot");
        j["what"] = what;
        j["dot"] = dot;
        emit(j);
      } else {
        std::cout << dot;
      }
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
