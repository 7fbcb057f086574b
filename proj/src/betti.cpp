#include "amalgam/betti.hpp"

#include <sstream>
#include <stdexcept>

namespace amalgam {

Rational betti_number(const NormalWord& g, const AmalgamParams& params) {
  // Trace pairing of the class [h] - [p] - [q].
  Rational via_traces = delocalized_trace(make_h(params), g) -
                        delocalized_trace(make_p(params), g) -
                        delocalized_trace(make_q(params), g);
  // Counting formula over the three finite cyclic subgroups.
  Rational via_counts =
      Rational(class_intersection_count(g, CyclicSubgroup::zd)) / params.d -
      Rational(class_intersection_count(g, CyclicSubgroup::zm)) / params.m -
      Rational(class_intersection_count(g, CyclicSubgroup::zn)) / params.n;
  via_counts.canonicalize();
  if (via_traces != via_counts)
    throw std::logic_error("trace pairing and intersection counts disagree");
  return via_traces;
}

namespace {

std::string power_label(char gen, int e) {
  std::string out = "<";
  out += gen;
  if (e != 1) out += "^" + std::to_string(e);
  out += ">";
  return out;
}

}  // namespace

BettiReport betti_table(const AmalgamParams& params) {
  BettiReport report;
  report.params = params;
  report.degrees_note =
      "values vanish in every degree other than 1; only degree 1 is listed";
  if (params.d == 1) {
    report.degenerate_note =
        "d = 1: free product of Z_" + std::to_string(params.m) + " and Z_" +
        std::to_string(params.n) + " (r = 1, so h = 1)";
  }

  // Candidate torsion representatives: identity, r-powers, then the s- and
  // t-powers outside <r>. Deduplicate against everything already kept.
  struct Candidate {
    std::string label;
    NormalWord word;
  };
  std::vector<Candidate> candidates;
  candidates.push_back({"1", NormalWord(params)});
  for (int j = 1; j < params.d; ++j) {
    candidates.push_back({power_label('r', j),
                          NormalWord::central_power(params, j)});
  }
  for (int i = 1; i < params.m; ++i) {
    if (i % params.coset_width(Factor::s) == 0) continue;  // lies in <r>
    candidates.push_back({power_label('s', i),
                          NormalWord::generator_power(params, Factor::s, i)});
  }
  for (int i = 1; i < params.n; ++i) {
    if (i % params.coset_width(Factor::t) == 0) continue;
    candidates.push_back({power_label('t', i),
                          NormalWord::generator_power(params, Factor::t, i)});
  }

  std::vector<NormalWord> kept;
  for (const Candidate& candidate : candidates) {
    bool duplicate = false;
    for (const NormalWord& w : kept) {
      if (are_conjugate(w, candidate.word)) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    kept.push_back(candidate.word);
    report.rows.push_back(
        {candidate.label, candidate.word, betti_number(candidate.word, params)});
  }

  report.rows.push_back({"otherwise", std::nullopt, Rational(0)});
  return report;
}

std::string render_table(const BettiReport& report) {
  std::ostringstream out;
  out << "first delocalized L2-Betti numbers for Z_" << report.params.m
      << " *_{Z_" << report.params.d << "} Z_" << report.params.n << "\n";
  if (report.degenerate_note) out << "note: " << *report.degenerate_note << "\n";
  for (const BettiRow& row : report.rows) {
    std::string value = to_fraction_string(row.value);
    std::string padding(value.size() < 8 ? 8 - value.size() : 1, ' ');
    if (row.label == "1") {
      out << "  " << value << padding << "g = 1\n";
    } else if (row.label == "otherwise") {
      out << "  " << value << padding << "otherwise\n";
    } else {
      out << "  " << value << padding << "g in " << row.label << "\n";
    }
  }
  out << "note: " << report.degrees_note << "\n";
  return out.str();
}

std::string render_csv(const BettiReport& report) {
  std::ostringstream out;
  out << "class,representative,value\n";
  for (const BettiRow& row : report.rows) {
    out << row.label << ","
        << (row.representative ? render(*row.representative) : "") << ","
        << to_fraction_string(row.value) << "\n";
  }
  return out.str();
}

nlohmann::ordered_json to_json(const BettiReport& report) {
  nlohmann::ordered_json out;
  out["schema"] = "amalgam.betti/1";
  out["params"] = {{"m", report.params.m},
                   {"n", report.params.n},
                   {"d", report.params.d}};
  out["rows"] = nlohmann::ordered_json::array();
  for (const BettiRow& row : report.rows) {
    nlohmann::ordered_json entry;
    entry["class"] = row.label;
    if (row.representative) {
      entry["representative"] = render(*row.representative);
    } else {
      entry["representative"] = nullptr;
    }
    entry["value"] = to_fraction_string(row.value);
    out["rows"].push_back(entry);
  }
  if (report.degenerate_note) {
    out["degenerate_note"] = *report.degenerate_note;
  }
  out["degrees_note"] = report.degrees_note;
  return out;
}

}  // namespace amalgam
