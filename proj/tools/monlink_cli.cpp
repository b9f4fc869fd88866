#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "monlink/betti.hpp"
#include "monlink/harness.hpp"
#include "monlink/licci.hpp"
#include "monlink/linkage.hpp"
#include "monlink/polarization.hpp"
#include "monlink/serialize.hpp"
#include "monlink/simplicial.hpp"

using namespace monlink;

namespace {

constexpr int kInputError = 2;
constexpr int kCheckFailed = 1;

std::string read_source(const std::string& source) {
  if (source == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(source);
  if (!in) throw ParseError("cannot open '" + source + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

std::optional<VariableSet> vars_option(const std::string& vars) {
  if (vars.empty()) return std::nullopt;
  std::vector<std::string> names;
  std::stringstream in(vars);
  for (std::string name; std::getline(in, name, ',');) names.push_back(name);
  try {
    return VariableSet(std::move(names));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

// An ideal from a document file, "-" for stdin, or the text form.
struct IdealInput {
  std::string source;
  std::string text;
  std::string vars;

  void add_to(CLI::App* app, const std::string& name = "ideal") {
    app->add_option(name, source, "ideal document file, or - for stdin");
    app->add_option("--text", text, "ideal in text form, e.g. \"x1^2*x2, x3\"");
    app->add_option("--vars", vars, "comma-separated ring variables for --text");
  }
  MonomialIdeal load() const {
    if (!text.empty()) return parse_ideal_text(text, vars_option(vars));
    if (source.empty()) throw ParseError("no ideal given");
    return ideal_from_json(parse_json(read_source(source), source));
  }
};

Graph parse_graph(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    std::vector<std::size_t> args;
    std::stringstream in(spec.substr(colon + 1));
    for (std::string part; std::getline(in, part, ',');) {
      try {
        std::size_t used = 0;
        args.push_back(std::stoul(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        throw ParseError("bad graph argument '" + part + "'");
      }
    }
    auto need = [&](std::size_t lo, std::size_t hi) {
      if (args.size() < lo || args.size() > hi) throw ParseError("wrong argument count in '" + spec + "'");
    };
    auto cap = [](std::size_t n) {
      if (n > variable_cap()) throw VariableCapError(n, variable_cap());
      return n;
    };
    try {
      if (kind == "cycle" || kind == "complete" || kind == "path") {
        need(1, 1);
        const std::size_t n = cap(args[0]);
        if (kind == "cycle") return Graph::cycle(n);
        if (kind == "complete") return Graph::complete(n);
        return Graph::path(n);
      }
      if (kind == "star") {
        need(1, 2);
        const std::size_t isolated = args.size() == 2 ? args[1] : 0;
        cap(1 + args[0] + isolated);
        return Graph::star(args[0], isolated);
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    if (kind != "file") throw ParseError("unknown graph builder '" + kind + "'");
    return graph_from_json(parse_json(read_source(spec.substr(colon + 1)), spec));
  }
  return graph_from_json(parse_json(read_source(spec), spec));
}

void emit(const Json& doc, bool text_ideal = false) {
  if (text_ideal) {
    std::cout << to_text(ideal_from_json(doc)) << "\n";
  } else {
    std::cout << dump(doc);
  }
}

void print_summary(const HarnessSummary& summary) {
  std::cout << "seed " << summary.seed << "\n";
  for (const auto& r : summary.results) {
    std::cout << r.id << " " << r.name << ": " << (r.outcome.passed ? "PASS" : "FAIL") << "\n";
    std::cout << "  cites: " << r.citation << "\n";
    for (const auto& note : r.outcome.notes) std::cout << "  note: " << note << "\n";
    for (const auto& f : r.outcome.failures) std::cout << "  failed: " << f << "\n";
  }
  std::cout << (summary.passed() ? "all selected tasks passed" : "some tasks failed") << "\n";
}

Json summary_json(const HarnessSummary& summary) {
  Json tasks = Json::array();
  for (const auto& r : summary.results) {
    tasks.push_back({{"id", r.id},
                     {"name", r.name},
                     {"citation", r.citation},
                     {"passed", r.outcome.passed},
                     {"notes", r.outcome.notes},
                     {"failures", r.outcome.failures}});
  }
  return Json{{"seed", summary.seed}, {"passed", summary.passed()}, {"tasks", std::move(tasks)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monomial ideals: Betti tables, linkage and licci verdicts"};
  app.require_subcommand(1);

  std::string kind, graph_spec;
  std::size_t t = 2;
  bool construct_text = false;
  auto* construct = app.add_subcommand("construct", "build an ideal from a graph");
  construct->add_option("kind", kind, "edge|path|complementary|suspension|depolarize")->required()
      ->check(CLI::IsMember({"edge", "path", "complementary", "suspension", "depolarize"}));
  construct->add_option("--graph", graph_spec, "cycle:N, complete:N, path:N, star:K[,M] or a graph document")
      ->required();
  construct->add_option("--t", t, "path length parameter (vertices per path)");
  construct->add_flag("--as-text", construct_text, "print the text form");

  IdealInput betti_in;
  std::string field_text = "q";
  bool oracle = false, macaulay = false;
  auto* betti = app.add_subcommand("betti", "graded Betti numbers and invariants of S/I");
  betti_in.add_to(betti);
  betti->add_option("--field", field_text, "q or fp:<p>");
  betti->add_flag("--oracle", oracle, "use the Taylor complex instead of Hochster's formula");
  betti->add_flag("--macaulay", macaulay, "print a Betti diagram instead of a document");

  IdealInput licci_in;
  bool artinian_only = false, audit_mode = false;
  auto* licci = app.add_subcommand("licci", "licci verdict with rule citations");
  licci_in.add_to(licci);
  licci->add_option("--field", field_text, "q or fp:<p>");
  licci->add_flag("--artinian-only", artinian_only, "run only the Huneke-Ulrich iteration");
  licci->add_flag("--audit", audit_mode, "list every applicable rule");

  IdealInput dual_in;
  auto* dual = app.add_subcommand("dual", "Alexander dual and minimal primes of a squarefree ideal");
  dual_in.add_to(dual);

  std::string link_a, link_b, regseq_text, link_vars;
  auto* link = app.add_subcommand("link", "check a direct link over a monomial regular sequence");
  link->add_option("i1", link_a, "first ideal document")->required();
  link->add_option("i2", link_b, "second ideal document")->required();
  link->add_option("--regseq", regseq_text, "regular sequence in text form, e.g. \"x1*x2, x3\"")->required();

  std::vector<std::string> task_ids;
  bool list = false, as_json = false;
  std::uint64_t seed = kDefaultSeed;
  auto* verify = app.add_subcommand("verify-paper", "run the verification tasks");
  verify->add_option("tasks", task_ids, "task ids, all when omitted");
  verify->add_flag("--list", list, "list the tasks");
  verify->add_option("--seed", seed, "seed for randomized corpora");
  verify->add_flag("--json", as_json, "print a document instead of text");

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) {
      const Graph g = parse_graph(graph_spec);
      MonomialIdeal ideal;
      if (kind == "edge") {
        ideal = edge_ideal(g);
      } else if (kind == "path") {
        ideal = t_path_ideal(g, t);
      } else if (kind == "complementary") {
        ideal = complementary_edge_ideal(g);
      } else if (kind == "suspension") {
        const std::size_t width = g.num_vertices() * t;
        if (width > variable_cap()) throw VariableCapError(width, variable_cap());
        ideal = t_path_ideal(suspension(g, t), t);
      } else {
        ideal = depolarize_suspension(g, t);
      }
      if (construct_text) {
        std::cout << to_text(ideal) << "\n";
      } else {
        emit(to_json(ideal));
      }
      return 0;
    }
    if (betti->parsed()) {
      const MonomialIdeal ideal = betti_in.load();
      const FieldSpec field = FieldSpec::parse(field_text);
      const BettiTable table = oracle ? taylor_oracle(ideal, field) : betti_table(ideal, field);
      if (macaulay) {
        std::cout << table.diagram();
      } else {
        emit(Json{{"table", to_json(table)}, {"invariants", to_json(invariants(table, ideal))}});
      }
      return 0;
    }
    if (licci->parsed()) {
      const MonomialIdeal ideal = licci_in.load();
      const FieldSpec field = FieldSpec::parse(field_text);
      if (audit_mode) {
        LicciVerdict listing;
        listing.rules = audit(ideal, field);
        listing.status = classify(ideal, field).status;
        emit(Json{{"verdict", to_json(listing)}, {"consistent", audit_consistent(listing.rules)}});
        return 0;
      }
      emit(to_json(artinian_only ? hu_decide(ideal) : classify(ideal, field)));
      return 0;
    }
    if (dual->parsed()) {
      const MonomialIdeal ideal = dual_in.load();
      Json primes = Json::array();
      for (std::uint64_t mask : minimal_primes(ideal)) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < ideal.num_vars(); ++i) {
          if (mask >> i & 1) names.push_back(ideal.vars().name(i));
        }
        primes.push_back(names);
      }
      emit(Json{{"dual", to_json(alexander_dual(ideal))}, {"minimal_primes", std::move(primes)}});
      return 0;
    }
    if (link->parsed()) {
      const MonomialIdeal a = ideal_from_json(parse_json(read_source(link_a), link_a));
      const MonomialIdeal b = ideal_from_json(parse_json(read_source(link_b), link_b));
      if (a.vars() != b.vars()) throw ParseError("the two ideals live in different rings");
      std::vector<Monomial> regseq;
      std::stringstream in(regseq_text);
      for (std::string part; std::getline(in, part, ',');) {
        const MonomialIdeal one = parse_ideal_text(part, a.vars());
        if (one.num_generators() != 1) throw ParseError("regular sequence entries must be monomials");
        regseq.push_back(one.generators().front());
      }
      const LinkReport report = verify_direct_link(a, b, regseq);
      emit(to_json(report));
      return report.passed() ? 0 : kCheckFailed;
    }
    if (verify->parsed()) {
      if (list) {
        for (const auto& task : harness_tasks()) {
          std::cout << task.id << " " << task.name << ": " << task.description << "\n";
        }
        return 0;
      }
      const HarnessSummary summary = verify_paper(task_ids, seed);
      if (as_json) {
        emit(summary_json(summary));
      } else {
        print_summary(summary);
      }
      return summary.passed() ? 0 : kCheckFailed;
    }
  } catch (const VariableCapError& e) {
    std::cerr << "error: " << e.requested() << " variables requested, cap is " << e.cap()
              << " (set MONLINK_VAR_CAP to raise it)\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
