#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "monlink/betti.hpp"
#include "monlink/graph.hpp"
#include "monlink/licci.hpp"
#include "monlink/linkage.hpp"
#include "monlink/monomial.hpp"

namespace monlink {

using Json = nlohmann::json;

/// Raised for malformed documents or text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text form: "x1^2*x2", "1" for the unit monomial; ideals are comma-separated
// generator lists with "0" for the zero ideal.
std::string to_text(const Monomial& m, const VariableSet& vars);
std::string to_text(const MonomialIdeal& ideal);
/// Parses the text form. Without `vars`, the ring consists of the names that
/// occur, in natural order (x2 before x10).
MonomialIdeal parse_ideal_text(std::string_view text,
                               const std::optional<VariableSet>& vars = std::nullopt);

Json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& doc);

Json to_json(const Graph& g);
Graph graph_from_json(const Json& doc);

Json to_json(const BettiTable& table);
BettiTable betti_from_json(const Json& doc);
Json to_json(const Invariants& inv);

Json to_json(const LicciVerdict& verdict);
LicciVerdict verdict_from_json(const Json& doc);

Json to_json(const LinkReport& report);
LinkReport report_from_json(const Json& doc);

/// Canonical printed form of a document: two-space indentation, trailing newline.
std::string dump(const Json& doc);

}  // namespace monlink
