#include "monlink/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <set>

namespace monlink {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

bool is_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// Compares names chunk by chunk, digit runs numerically: x2 < x10 < y1.
bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && digit(a[ie])) ++ie;
      while (je < b.size() && digit(b[je])) ++je;
      std::string_view da(a.data() + i, ie - i), db(b.data() + j, je - j);
      while (da.size() > 1 && da.front() == '0') da.remove_prefix(1);
      while (db.size() > 1 && db.front() == '0') db.remove_prefix(1);
      if (da.size() != db.size()) return da.size() < db.size();
      if (da != db) return da < db;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if (a.size() - i != b.size() - j) return a.size() - i < b.size() - j;
  return a < b;
}

Exponent parse_exponent(std::string_view s) {
  Exponent value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad exponent '" + std::string(s) + "'");
  }
  return value;
}

using Factors = std::vector<std::pair<std::string, Exponent>>;

Factors parse_monomial_factors(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty generator");
  Factors out;
  if (text == "1") return out;
  for (std::string_view factor : split(text, '*')) {
    factor = trim(factor);
    const auto caret = factor.find('^');
    const std::string_view name = trim(factor.substr(0, caret));
    if (!is_name(name)) throw ParseError("bad variable '" + std::string(name) + "'");
    const Exponent e = caret == std::string_view::npos ? 1 : parse_exponent(trim(factor.substr(caret + 1)));
    out.emplace_back(std::string(name), e);
  }
  return out;
}

template <typename T>
T get(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type");
  }
}

const Json& array_field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key) || !doc.at(key).is_array()) {
    throw ParseError(std::string("field '") + key + "' must be a list");
  }
  return doc.at(key);
}

}  // namespace

std::string to_text(const Monomial& m, const VariableSet& vars) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string to_text(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += to_text(g, ideal.vars());
  }
  return out;
}

MonomialIdeal parse_ideal_text(std::string_view text, const std::optional<VariableSet>& vars) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty ideal");
  std::vector<Factors> gens;
  if (text != "0") {
    for (std::string_view part : split(text, ',')) gens.push_back(parse_monomial_factors(part));
  }
  VariableSet ring;
  if (vars) {
    ring = *vars;
  } else {
    std::set<std::string> seen;
    for (const auto& g : gens) {
      for (const auto& f : g) seen.insert(f.first);
    }
    std::vector<std::string> names(seen.begin(), seen.end());
    std::sort(names.begin(), names.end(), natural_less);
    ring = VariableSet(std::move(names));
  }
  if (ring.size() > variable_cap()) throw VariableCapError(ring.size(), variable_cap());
  std::vector<Monomial> monomials;
  for (const auto& g : gens) {
    std::vector<Exponent> e(ring.size(), 0);
    for (const auto& [name, power] : g) {
      const auto index = ring.index_of(name);
      if (!index) throw ParseError("unknown variable '" + name + "'");
      e[*index] += power;
    }
    monomials.emplace_back(std::move(e));
  }
  return MonomialIdeal(std::move(ring), std::move(monomials));
}

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) {
    gens.push_back(std::vector<Exponent>(g.exponents().begin(), g.exponents().end()));
  }
  return Json{{"vars", ideal.vars().names()}, {"gens", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const Json& doc) {
  auto names = get<std::vector<std::string>>(doc, "vars");
  if (names.size() > variable_cap()) throw VariableCapError(names.size(), variable_cap());
  for (const auto& name : names) {
    if (!is_name(name)) throw ParseError("bad variable '" + name + "'");
  }
  VariableSet vars;
  try {
    vars = VariableSet(std::move(names));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  std::vector<Monomial> gens;
  for (const auto& row : array_field(doc, "gens")) {
    const bool ok = row.is_array() && std::all_of(row.begin(), row.end(), [](const Json& x) {
      return x.is_number_unsigned() && x.get<std::uint64_t>() <= std::numeric_limits<Exponent>::max();
    });
    if (!ok) throw ParseError("generators must be lists of nonnegative integers");
    std::vector<Exponent> e = row.get<std::vector<Exponent>>();
    if (e.size() != vars.size()) throw ParseError("generator length does not match vars");
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(std::move(vars), std::move(gens));
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return Json{{"n", g.num_vertices()}, {"labels", g.labels()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& doc) {
  const auto n = get<std::size_t>(doc, "n");
  if (n > variable_cap()) throw VariableCapError(n, variable_cap());
  std::vector<std::string> labels;
  if (doc.contains("labels")) labels = get<std::vector<std::string>>(doc, "labels");
  if (!labels.empty() && labels.size() != n) throw ParseError("labels must have n entries");
  for (const auto& l : labels) {
    if (!is_name(l)) throw ParseError("bad label '" + l + "'");
  }
  std::vector<Graph::Edge> edges;
  for (const auto& e : array_field(doc, "edges")) {
    std::vector<std::size_t> pair;
    try {
      pair = e.get<std::vector<std::size_t>>();
    } catch (const nlohmann::json::exception&) {
      throw ParseError("edges must be pairs of vertex numbers");
    }
    if (pair.size() != 2 || pair[0] < 1 || pair[1] < 1 || pair[0] > n || pair[1] > n) {
      throw ParseError("edges must be pairs of vertex numbers in 1..n");
    }
    edges.emplace_back(pair[0] - 1, pair[1] - 1);
  }
  try {
    return Graph(n, edges, std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [key, value] : table.entries()) entries.push_back({key.first, key.second, value});
  return Json{{"field", table.field().to_string()}, {"n_vars", table.n_vars()}, {"entries", std::move(entries)}};
}

BettiTable betti_from_json(const Json& doc) {
  FieldSpec field;
  try {
    field = FieldSpec::parse(get<std::string>(doc, "field"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  BettiTable table(get<std::size_t>(doc, "n_vars"), field);
  for (const auto& e : array_field(doc, "entries")) {
    if (!e.is_array() || e.size() != 3) throw ParseError("betti entries are (i, j, rank) triples");
    try {
      table.add(e[0].get<int>(), e[1].get<int>(), e[2].get<std::uint64_t>());
    } catch (const nlohmann::json::exception&) {
      throw ParseError("betti entries are (i, j, rank) triples");
    }
  }
  return table;
}

Json to_json(const Invariants& inv) {
  return Json{{"pd", inv.pd},
              {"reg", inv.reg},
              {"depth", inv.depth},
              {"height", inv.height},
              {"alpha", inv.alpha},
              {"cohen_macaulay", inv.is_cm},
              {"gorenstein", inv.is_gorenstein},
              {"linear_resolution", inv.has_linear_resolution}};
}

Json to_json(const LicciVerdict& verdict) {
  Json rules = Json::array();
  for (const auto& r : verdict.rules) {
    Json witnesses = Json::array();
    for (const auto& [name, value] : r.witnesses) witnesses.push_back({{"name", name}, {"value", value}});
    rules.push_back({{"id", r.id},
                     {"citation", r.citation},
                     {"conclusion", to_string(r.conclusion)},
                     {"witnesses", std::move(witnesses)}});
  }
  Json doc{{"status", to_string(verdict.status)}, {"rules", std::move(rules)}};
  if (verdict.hu_trace) {
    Json trace = Json::array();
    for (const auto& e : *verdict.hu_trace) {
      trace.push_back({{"k", e.k}, {"ideal", to_json(e.ideal)}, {"summary", e.summary}});
    }
    doc["trace"] = std::move(trace);
  }
  return doc;
}

LicciVerdict verdict_from_json(const Json& doc) {
  LicciVerdict verdict;
  try {
    verdict.status = parse_licci_status(get<std::string>(doc, "status"));
    for (const auto& r : array_field(doc, "rules")) {
      RuleFiring firing{get<std::string>(r, "id"), get<std::string>(r, "citation"),
                        parse_licci_status(get<std::string>(r, "conclusion")), {}};
      for (const auto& w : array_field(r, "witnesses")) {
        firing.witnesses.emplace_back(get<std::string>(w, "name"), get<std::string>(w, "value"));
      }
      verdict.rules.push_back(std::move(firing));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (doc.contains("trace")) {
    std::vector<HuTraceEntry> trace;
    for (const auto& e : array_field(doc, "trace")) {
      if (!e.contains("ideal")) throw ParseError("missing field 'ideal'");
      trace.push_back({get<std::size_t>(e, "k"), ideal_from_json(e.at("ideal")), get<std::string>(e, "summary")});
    }
    verdict.hu_trace = std::move(trace);
  }
  return verdict;
}

Json to_json(const LinkReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json witnesses = Json::array();
    for (const auto& [label, ideal] : c.witnesses) witnesses.push_back({{"label", label}, {"ideal", to_json(ideal)}});
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witnesses", std::move(witnesses)}});
  }
  return Json{{"passed", report.passed()}, {"checks", std::move(checks)}};
}

LinkReport report_from_json(const Json& doc) {
  LinkReport report;
  for (const auto& c : array_field(doc, "checks")) {
    LinkCheck check{get<std::string>(c, "name"), get<bool>(c, "passed"), {}};
    for (const auto& w : array_field(c, "witnesses")) {
      if (!w.contains("ideal")) throw ParseError("missing field 'ideal'");
      check.witnesses.emplace_back(get<std::string>(w, "label"), ideal_from_json(w.at("ideal")));
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace monlink
