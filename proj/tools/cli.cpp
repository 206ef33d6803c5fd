#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "graphpoly/canonical.hpp"
#include "graphpoly/classes.hpp"
#include "graphpoly/errors.hpp"
#include "graphpoly/experiments.hpp"
#include "graphpoly/graph6.hpp"
#include "graphpoly/invariants.hpp"
#include "graphpoly/mates.hpp"
#include "graphpoly/parallel.hpp"

namespace graphpoly::cli {

namespace {

struct Options {
  std::string poly;
  std::string cls = "all";
  std::string format;
  std::string output;
  std::vector<std::string> graph6;
  std::string file;
  std::size_t n = 0;
  std::uint64_t seed = 1;
  std::size_t budget = 0;
  std::size_t jobs = 1;
  std::size_t max_edges = 0;
  bool buckets = false;
  /// Read graphs from --graph6, --file or stdin instead of enumerating.
  bool from_inputs = false;
  // mates
  std::string construction = "search";
  std::string host;
  Vertex attach = 1;
  Vertex root_position = 3;
  // pendant-freq
  std::string pendant = "A_";
  Vertex root = 1;
  std::size_t samples = 1000;
  bool exhaustive = false;
  // search
  std::string target = "order10";
  std::vector<std::string> fingerprints;
  std::string relation = "isomorphic";
  std::size_t max_order = 0;
  std::size_t hosts = 50;
};

std::vector<std::string> polynomial_names() {
  std::vector<std::string> names;
  for (auto id : all_polynomial_ids()) names.emplace_back(polynomial_name(id));
  return names;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

std::string footer() {
  return "Polynomial ids: " + join(polynomial_names()) + "\nClasses: " + join(class_names()) +
         "\nExit status: 0 success, 1 invalid input, 2 resource budget exceeded.";
}

void require_format(const Options& o, const std::vector<std::string>& allowed, const std::string& command) {
  if (std::find(allowed.begin(), allowed.end(), o.format) == allowed.end())
    throw DomainError("--format " + o.format + " is not available for " + command + " (use " + join(allowed) + ")");
}

std::vector<Graph> read_inputs(const Options& o, std::istream& in) {
  std::vector<Graph> graphs;
  if (!o.graph6.empty()) {
    for (const auto& code : o.graph6) graphs.push_back(parse_graph_line(code));
  } else if (!o.file.empty()) {
    std::ifstream f(o.file);
    if (!f) throw DomainError("cannot open input file '" + o.file + "'");
    graphs = read_graph_lines(f);
  } else {
    graphs = read_graph_lines(in);
  }
  if (graphs.empty()) throw DomainError("no input graphs (use --graph6, --file or standard input)");
  return graphs;
}

std::size_t common_order(const std::vector<Graph>& graphs) {
  const auto n = graphs.front().order();
  for (const auto& g : graphs)
    if (g.order() != n) throw DomainError("input graphs must share one order");
  return n;
}

// ---- subcommands ----

void do_compute(const Options& o, std::istream& in, std::ostream& out) {
  require_format(o, {"text", "json", "csv"}, "compute");
  const auto id = polynomial_id(o.poly);
  const auto graphs = read_inputs(o, in);
  if (o.format == "csv") out << "graph6,polynomial_id,polynomial\n";
  for (const auto& g : graphs) {
    const auto p = compute(id, g);
    if (o.format == "text") {
      out << p.to_string() << '\n';
    } else if (o.format == "csv") {
      out << write_graph_line(g) << ',' << o.poly << ',' << p.to_string() << '\n';
    } else {
      out << nlohmann::json{{"graph6", write_graph_line(g)}, {"polynomial_id", o.poly}, {"polynomial", p.to_string()}}
                 .dump()
          << '\n';
    }
  }
}

void do_enumerate(const Options& o, std::istream& in, std::ostream& out) {
  require_format(o, {"text", "json"}, "enumerate");
  const auto spec = class_spec(o.cls);
  std::vector<Graph> graphs;
  if (o.from_inputs)
    graphs = canonical_members(spec, read_inputs(o, in), o.jobs);
  else if (o.max_edges > 0)
    graphs = enumerate_class_sparse(spec, o.n, o.max_edges, o.jobs);
  else
    graphs = enumerate_class(spec, o.n, o.jobs);
  if (o.format == "text") {
    for (const auto& g : graphs) out << write_graph_line(g) << '\n';
  } else {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& g : graphs) j.push_back(write_graph_line(g));
    out << j.dump() << '\n';
  }
}

void do_ratio(const Options& o, std::istream& in, std::ostream& out) {
  require_format(o, {"json", "csv"}, "ratio");
  const auto id = polynomial_id(o.poly);
  const auto spec = class_spec(o.cls);
  UniquenessReport r;
  if (o.from_inputs) {
    const auto graphs = canonical_members(spec, read_inputs(o, in), o.jobs);
    if (graphs.empty()) throw DomainError("no input graph belongs to class " + o.cls);
    r = uniqueness_ratio(id, graphs, spec.name, common_order(graphs), o.jobs, o.buckets);
  } else {
    r = uniqueness_ratio(id, spec, o.n, o.jobs, o.buckets);
  }
  if (o.format == "csv")
    out << uniqueness_csv_header() << '\n' << to_csv_row(r) << '\n';
  else
    out << to_json(r).dump(2) << '\n';
}

void do_audit(const Options& o, std::istream& in, std::ostream& out) {
  require_format(o, {"json", "csv"}, "audit");
  const auto spec = class_spec(o.cls);
  DpAuditReport a;
  if (o.from_inputs) {
    const auto graphs = canonical_members(spec, read_inputs(o, in), o.jobs);
    if (graphs.empty()) throw DomainError("no input graph belongs to class " + o.cls);
    a = dp_chain_audit(graphs, spec.name, common_order(graphs), o.jobs);
  } else {
    a = dp_chain_audit(spec, o.n, o.jobs);
  }
  if (o.format == "csv")
    out << dp_audit_csv_header() << '\n' << to_csv(a);
  else
    out << to_json(a).dump(2) << '\n';
}

void do_pendant_freq(const Options& o, std::ostream& out) {
  require_format(o, {"json", "csv"}, "pendant-freq");
  const auto pendant = make_pendant(parse_graph_line(o.pendant), o.root);
  const auto r = pendant_frequency(pendant, class_spec(o.cls), o.n, o.samples, o.seed, o.exhaustive);
  if (o.format == "csv")
    out << pendant_frequency_csv_header() << '\n' << to_csv_row(r) << '\n';
  else
    out << to_json(r).dump(2) << '\n';
}

struct Surgery {
  Graph g;
  PendantOccurrence occ;
};

Surgery locate(const Options& o, const Graph& input, const RootedPendant& gadget, const std::string& what) {
  if (!o.host.empty()) {
    const auto host = parse_graph_line(o.host);
    Surgery s{graft_pendant(host, o.attach, gadget), {}};
    for (Vertex i = 1; i <= gadget.graph.order(); ++i) s.occ.witness.push_back(static_cast<Vertex>(host.order() + i));
    s.occ.root = static_cast<Vertex>(host.order() + gadget.root);
    s.occ.host_vertex = o.attach;
    return s;
  }
  if (input.order() <= gadget.graph.order())
    throw DomainError("graph " + write_graph_line(input) + " is too small to contain a pendant " + what);
  const auto occs = find_pendant_occurrences(input, gadget, PendantMatch::relaxed);
  if (occs.empty()) throw DomainError("graph " + write_graph_line(input) + " has no pendant " + what);
  return {input, occs.front()};
}

void do_mates(const Options& o, std::istream& in, std::ostream& out) {
  require_format(o, {"json"}, "mates");
  const auto construction = construction_from_name(o.construction);
  std::vector<Graph> inputs;
  if (o.host.empty() || construction == Construction::search || construction == Construction::stem_toggle)
    inputs = read_inputs(o, in);
  else
    inputs.emplace_back(0);

  auto emit = [&](const MateCertificate& c) {
    auto j = to_json(c);
    j["applicable"] = true;
    out << j.dump() << '\n';
  };

  switch (construction) {
    case Construction::search: {
      const auto id = polynomial_id(o.poly);
      if (inputs.size() % 2 != 0) throw DomainError("mates search needs graphs in pairs (g, h)");
      for (std::size_t i = 0; i < inputs.size(); i += 2) emit(verify_mate(inputs[i], inputs[i + 1], id));
      break;
    }
    case Construction::stem_toggle:
      for (const auto& g : inputs) {
        if (auto c = stem_toggle(g)) {
          emit(*c);
        } else {
          out << nlohmann::json{{"construction", "stem_toggle"},
                                {"g", write_graph_line(g)},
                                {"applicable", false},
                                {"reason", "no two adjacent stems"}}
                     .dump()
              << '\n';
        }
      }
      break;
    case Construction::schwenk_swap:
    case Construction::xi_swap: {
      const bool schwenk = construction == Construction::schwenk_swap;
      const auto pairs = schwenk ? find_pseudosimilar_trees(9, DeletionRelation::cospectral, o.jobs)
                                 : find_pseudosimilar_trees(11, DeletionRelation::isomorphic, o.jobs);
      const auto& pair = pairs.front();
      const RootedPendant gadget{pair.tree, pair.v};
      for (const auto& g : inputs) {
        const auto s = locate(o, g, gadget, "copy of the gadget tree " + write_graph_line(pair.tree));
        emit(schwenk ? schwenk_swap(s.g, s.occ, pair) : xi_swap(s.g, s.occ, pair));
      }
      break;
    }
    case Construction::p5_graft:
      for (const auto& g : inputs) {
        const auto s = locate(o, g, p5_pendant(o.root_position), "P5");
        emit(p5_graft_swap(s.g, s.occ));
      }
      break;
    case Construction::clique_root_swap:
      for (const auto& g : inputs) {
        const auto s = locate(o, g, make_pendant(path_graph(3), 1), "P3 rooted at an end");
        emit(clique_root_swap(s.g, s.occ));
      }
      break;
  }
}

Fingerprint parse_fingerprint(const std::string& text) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos) throw DomainError("fingerprint '" + text + "' must look like label:polynomial_id:value");
  return {text.substr(0, a), polynomial_id(text.substr(a + 1, b - a - 1)), Polynomial::parse(text.substr(b + 1))};
}

void do_search(const Options& o, std::istream& in, std::ostream& out) {
  require_format(o, {"json"}, "search");
  if (o.target == "order10") {
    std::vector<Fingerprint> fps;
    for (const auto& f : o.fingerprints) fps.push_back(parse_fingerprint(f));
    if (fps.empty()) fps = order10_fingerprints();
    FingerprintReport r;
    if (!o.file.empty() || !o.graph6.empty())
      r = fingerprint_search(fps, read_inputs(o, in), o.file.empty() ? "graph6" : o.file, o.budget, o.jobs);
    else
      r = fingerprint_search(fps, class_spec(o.cls), o.n == 0 ? 10 : o.n, o.budget, o.jobs);
    out << to_json(r).dump(2) << '\n';
  } else if (o.target == "pseudosimilar") {
    const auto relation = o.relation == "cospectral" ? DeletionRelation::cospectral : DeletionRelation::isomorphic;
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : find_pseudosimilar_trees(o.max_order == 0 ? 11 : o.max_order, relation, o.jobs))
      j.push_back({{"tree", write_graph_line(p.tree)}, {"u", p.u}, {"v", p.v}, {"relation", o.relation}});
    out << j.dump(2) << '\n';
  } else {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : laplacian_swap_search(o.max_order == 0 ? 7 : o.max_order, o.hosts, o.seed, o.jobs))
      j.push_back({{"graph", write_graph_line(c.tree)}, {"u", c.u}, {"v", c.v}, {"hosts_verified", c.hosts_verified}});
    out << j.dump(2) << '\n';
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  o.jobs = default_jobs();
  CLI::App app{"Graph polynomials, mates and distinctive-power experiments", "graphpoly"};
  app.footer(footer());
  app.require_subcommand(1);

  const auto ids = polynomial_names();
  const auto classes = class_names();
  auto add_common = [&](CLI::App* sub, const std::string& default_format) {
    o.format = default_format;
    sub->add_option("--format", o.format, "Output format")->capture_default_str();
    sub->add_option("--output", o.output, "Write the report to this file instead of standard output");
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 1024))->capture_default_str();
    sub->footer(footer());
  };
  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("--graph6", o.graph6, "Input graph (graph6 or sparse6); repeatable");
    sub->add_option("--file", o.file, "File with one graph6/sparse6 code per line")->check(CLI::ExistingFile);
  };
  auto add_poly = [&](CLI::App* sub, bool required) {
    auto opt = sub->add_option("--poly", o.poly, "Polynomial id")->check(CLI::IsMember(ids));
    if (required) opt->required();
  };
  auto add_class = [&](CLI::App* sub) {
    sub->add_option("--class", o.cls, "Graph class")->check(CLI::IsMember(classes))->capture_default_str();
  };

  auto* compute_cmd = app.add_subcommand("compute", "Compute one polynomial for each input graph");
  add_poly(compute_cmd, true);
  add_inputs(compute_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the isomorphism classes of a class at one order");
  add_class(enumerate_cmd);
  enumerate_cmd->add_option("--n", o.n, "Order (omit to read graphs from --graph6, --file or stdin)");
  enumerate_cmd->add_option("--max-edges", o.max_edges, "Only graphs with at most this many edges");
  add_inputs(enumerate_cmd);

  auto* ratio_cmd = app.add_subcommand("ratio", "Uniqueness ratio of a polynomial on a class at one order");
  add_poly(ratio_cmd, true);
  add_class(ratio_cmd);
  ratio_cmd->add_option("--n", o.n, "Order (omit to read graphs from --graph6, --file or stdin)");
  ratio_cmd->add_flag("--buckets", o.buckets, "Include the mate buckets (JSON)");
  add_inputs(ratio_cmd);

  auto* mates_cmd = app.add_subcommand("mates", "Build and certify P-mates");
  mates_cmd
      ->add_option("--construction", o.construction, "schwenk_swap, stem_toggle, p5_graft, xi_swap, clique_root_swap or search")
      ->check(CLI::IsMember({"schwenk_swap", "stem_toggle", "p5_graft", "xi_swap", "clique_root_swap", "search"}))
      ->capture_default_str();
  add_poly(mates_cmd, false);
  mates_cmd->add_option("--host", o.host, "Graft the construction's gadget onto this host graph");
  mates_cmd->add_option("--attach", o.attach, "Host vertex receiving the gadget")->capture_default_str();
  mates_cmd->add_option("--root-position", o.root_position, "Root of the pendant P5 along the path (2..4)")
      ->check(CLI::Range(1, 5))
      ->capture_default_str();
  add_inputs(mates_cmd);

  auto* audit_cmd = app.add_subcommand("audit", "Check the claimed distinctive-power relations on a class");
  add_class(audit_cmd);
  audit_cmd->add_option("--n", o.n, "Order (omit to read graphs from --graph6, --file or stdin)");
  add_inputs(audit_cmd);

  auto* pendant_cmd = app.add_subcommand("pendant-freq", "Distribution of pendant copies of a rooted graph");
  pendant_cmd->add_option("--pendant", o.pendant, "Pendant graph (graph6)")->capture_default_str();
  pendant_cmd->add_option("--root", o.root, "Pendant root")->capture_default_str();
  o.cls = "trees";
  add_class(pendant_cmd);
  o.cls = "all";
  pendant_cmd->add_option("--n", o.n, "Order");
  pendant_cmd->add_option("--samples", o.samples, "Random samples")->capture_default_str();
  pendant_cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  pendant_cmd->add_flag("--exhaustive", o.exhaustive, "Enumerate every labeled member instead of sampling");

  auto* search_cmd = app.add_subcommand("search", "Fingerprint, pseudosimilar and Laplacian gadget searches");
  search_cmd->add_option("--target", o.target, "order10, pseudosimilar or laplacian")
      ->check(CLI::IsMember({"order10", "pseudosimilar", "laplacian"}))
      ->capture_default_str();
  search_cmd->add_option("--fingerprint", o.fingerprints, "label:polynomial_id:value; repeatable");
  add_class(search_cmd);
  search_cmd->add_option("--n", o.n, "Order (default 10)");
  search_cmd->add_option("--budget", o.budget, "Maximum graphs scanned (0: all)")->capture_default_str();
  search_cmd->add_option("--relation", o.relation, "isomorphic or cospectral")
      ->check(CLI::IsMember({"isomorphic", "cospectral"}))
      ->capture_default_str();
  search_cmd->add_option("--max-order", o.max_order, "Largest gadget order");
  search_cmd->add_option("--hosts", o.hosts, "Random hosts per Laplacian candidate")->capture_default_str();
  search_cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  add_inputs(search_cmd);

  for (auto* sub : {compute_cmd, enumerate_cmd, ratio_cmd, mates_cmd, audit_cmd, pendant_cmd, search_cmd})
    add_common(sub, sub == compute_cmd || sub == enumerate_cmd ? "text" : "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  // defaults depend on the chosen subcommand
  auto* chosen = app.get_subcommands().front();
  auto given = [&](const char* name) {
    const auto* opt = chosen->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (!given("--format")) o.format = chosen == compute_cmd || chosen == enumerate_cmd ? "text" : "json";
  if (!given("--class")) o.cls = chosen == pendant_cmd ? "trees" : "all";

  try {
    o.from_inputs = !given("--n") || given("--file") || given("--graph6");
    std::ostringstream buf;
    if (chosen == compute_cmd) {
      do_compute(o, in, buf);
    } else if (chosen == enumerate_cmd) {
      do_enumerate(o, in, buf);
    } else if (chosen == ratio_cmd) {
      do_ratio(o, in, buf);
    } else if (chosen == mates_cmd) {
      if (o.construction == "search" && o.poly.empty()) throw DomainError("mates search requires --poly");
      do_mates(o, in, buf);
    } else if (chosen == audit_cmd) {
      do_audit(o, in, buf);
    } else if (chosen == pendant_cmd) {
      if (!given("--n")) throw DomainError("--n is required");
      do_pendant_freq(o, buf);
    } else {
      do_search(o, in, buf);
    }
    if (o.output.empty()) {
      out << buf.str();
    } else {
      std::ofstream f(o.output, std::ios::binary);
      if (!f) throw DomainError("cannot write output file '" + o.output + "'");
      f << buf.str();
    }
    return 0;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"graphpoly"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace graphpoly::cli
