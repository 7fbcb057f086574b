#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "amalgam/conjugacy.hpp"

namespace amalgam {

// First delocalized L2-Betti number of the class of g, evaluated two ways
// that must agree:
//   - trace pairing:  tau_<g>(h) - tau_<g>(p) - tau_<g>(q), and
//   - counting:       |<g> ∩ Z_d|/d - |<g> ∩ Z_m|/m - |<g> ∩ Z_n|/n.
// Throws std::logic_error if the two routes ever disagree.
Rational betti_number(const NormalWord& g, const AmalgamParams& params);

struct BettiRow {
  std::string label;  // "1", "<r>", "<s^3>", ...
  std::optional<NormalWord> representative;
  Rational value;
};

struct BettiReport {
  AmalgamParams params;
  std::vector<BettiRow> rows;  // one per torsion class, then "otherwise"
  std::optional<std::string> degenerate_note;  // set when d = 1
  std::string degrees_note;  // harmonic degree 1 carries everything
};

// One row per conjugacy class of torsion elements in <s> ∪ <t> (identity
// first, then r-powers, then s- and t-classes), deduplicated with
// are_conjugate, plus the catch-all zero row.
BettiReport betti_table(const AmalgamParams& params);

std::string render_table(const BettiReport& report);
std::string render_csv(const BettiReport& report);
nlohmann::ordered_json to_json(const BettiReport& report);

}  // namespace amalgam
