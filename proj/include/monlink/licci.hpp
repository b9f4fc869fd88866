#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monlink/betti.hpp"
#include "monlink/exact_field.hpp"
#include "monlink/monomial.hpp"

namespace monlink {

enum class LicciStatus { kLicci, kNotLicci, kUnknown };

std::string to_string(LicciStatus status);
/// Accepts "Licci", "NotLicci", "Unknown".
LicciStatus parse_licci_status(std::string_view text);

/// One rule of the classification cascade together with what it concluded
/// and the computed quantities it relied on.
struct RuleFiring {
  std::string id;
  std::string citation;
  LicciStatus conclusion = LicciStatus::kUnknown;
  std::vector<std::pair<std::string, std::string>> witnesses;

  friend bool operator==(const RuleFiring&, const RuleFiring&) = default;
};

/// I^{k} together with a description of the standard form that produced it.
struct HuTraceEntry {
  std::size_t k = 0;
  MonomialIdeal ideal;
  std::string summary;

  friend bool operator==(const HuTraceEntry&, const HuTraceEntry&) = default;
};

struct LicciVerdict {
  LicciStatus status = LicciStatus::kUnknown;
  std::vector<RuleFiring> rules;
  std::optional<std::vector<HuTraceEntry>> hu_trace;

  friend bool operator==(const LicciVerdict&, const LicciVerdict&) = default;
};

// Rule identifiers of the cascade, in evaluation order.
inline constexpr std::string_view kRuleNotCohenMacaulay = "R1";
inline constexpr std::string_view kRuleCompleteIntersection = "R2";
inline constexpr std::string_view kRuleHeightAtMostTwo = "R3";
inline constexpr std::string_view kRuleGorensteinHeightThree = "R4";
inline constexpr std::string_view kRuleDegreeObstruction = "R5";
inline constexpr std::string_view kRuleHunekeUlrich = "R6";
inline constexpr std::string_view kRuleBiCohenMacaulay = "R7";

/// Outcome of one Huneke-Ulrich step on an Artinian ideal.
struct HuStep {
  enum class Kind {
    kNext,      ///< `next` holds I^{1}.
    kUnit,      ///< I^{1} is the whole ring.
    kFixpoint,  ///< The sharp part has gcd 1, so I^{1} = I.
  };
  Kind kind = Kind::kNext;
  MonomialIdeal next;
  std::string summary;
};

/// One step I -> I^{1} = (x_i^{a_i - b_i}) + K. Throws std::invalid_argument
/// unless the ideal is proper and Artinian.
HuStep hu_step(const MonomialIdeal& ideal);

/// Iterates hu_step until the ring or a fixpoint is reached.
LicciVerdict hu_decide(const MonomialIdeal& ideal);

/// reg(S/I) <= (alpha - 1) pd(S/I) - alpha. Throws std::invalid_argument if
/// `inv` says the ideal is not Cohen-Macaulay.
bool obstruction_not_licci(const MonomialIdeal& ideal, const Invariants& inv);

/// Rule cascade R1..R7; the first rule that applies decides.
LicciVerdict classify(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec::rationals());

/// Every rule that applies to the ideal, each with its own conclusion.
/// Distinct decisive conclusions indicate an inconsistency.
std::vector<RuleFiring> audit(const MonomialIdeal& ideal,
                              const FieldSpec& field = FieldSpec::rationals());
bool audit_consistent(const std::vector<RuleFiring>& firings);

/// For a Licci verdict on a squarefree ideal in n variables:
/// height <= floor(n / alpha) + 1. Other verdicts pass trivially.
bool licci_bound_check(const MonomialIdeal& ideal, const LicciVerdict& verdict);

}  // namespace monlink
