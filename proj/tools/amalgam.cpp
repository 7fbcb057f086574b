#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "amalgam/betti.hpp"
#include "amalgam/verify.hpp"

namespace {

using amalgam::AmalgamParams;
using json = nlohmann::ordered_json;

struct CommonOptions {
  long m = 0, n = 0, d = 0;
  std::string format = "table";
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_csv = false) {
  cmd->add_option("--m", opts.m, "order of the first factor Z_m")->required();
  cmd->add_option("--n", opts.n, "order of the second factor Z_n")->required();
  cmd->add_option("--d", opts.d, "order of the amalgamated subgroup Z_d")
      ->required();
  std::set<std::string> formats{"table", "json"};
  if (with_csv) formats.insert("csv");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
}

json params_json(const AmalgamParams& params) {
  return json{{"m", params.m}, {"n", params.n}, {"d", params.d}};
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json matrix_json(const amalgam::GRMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(render(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

void print_matrix(const std::string& name, const amalgam::GRMatrix& m) {
  std::cout << name << " (" << m.rows() << "x" << m.cols() << "):\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::cout << "  [ ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) std::cout << " | ";
      std::cout << render(m.at(i, j));
    }
    std::cout << " ]\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{
      "exact symbolic calculator for the amalgamated products "
      "Z_m *_{Z_d} Z_n = <s, t | s^m, t^n, s^(m/d) = t^(n/d)>"};
  app.require_subcommand(1);

  auto* reduce_cmd =
      app.add_subcommand("reduce", "canonical normal form of a word");
  CommonOptions reduce_opts;
  std::string reduce_word;
  add_common(reduce_cmd, reduce_opts);
  reduce_cmd->add_option("--word", reduce_word, "word over s, t, r")
      ->required();

  auto* conj_cmd =
      app.add_subcommand("conj", "decide whether two words are conjugate");
  CommonOptions conj_opts;
  conj_opts.format = "json";
  std::string conj_a, conj_b;
  add_common(conj_cmd, conj_opts);
  conj_cmd->add_option("word_a", conj_a, "first word")->required();
  conj_cmd->add_option("word_b", conj_b, "second word")->required();

  auto* trace_cmd = app.add_subcommand(
      "trace", "delocalized trace of a group ring element at a class");
  CommonOptions trace_opts;
  std::string trace_element, trace_element_file, trace_class;
  add_common(trace_cmd, trace_opts);
  auto* inline_opt = trace_cmd->add_option(
      "--element", trace_element,
      "element as JSON array of {word, num, den}");
  trace_cmd
      ->add_option("--element-file", trace_element_file,
                   "file containing the element JSON")
      ->excludes(inline_opt);
  trace_cmd->add_option("--class", trace_class, "class representative word")
      ->required();

  auto* fox_cmd = app.add_subcommand(
      "fox", "differentials of the presentation and the degree-1 Laplacian");
  CommonOptions fox_opts;
  std::string fox_matrix = "all";
  add_common(fox_cmd, fox_opts);
  fox_cmd->add_option("--matrix", fox_matrix, "which matrix to print")
      ->check(CLI::IsMember(
          {"delta0", "d0", "delta1", "d1", "laplacian", "all"}))
      ->capture_default_str();

  auto* betti_cmd = app.add_subcommand(
      "betti", "first delocalized L2-Betti numbers by conjugacy class");
  CommonOptions betti_opts;
  std::string betti_class;
  add_common(betti_cmd, betti_opts, /*with_csv=*/true);
  betti_cmd->add_option("--class", betti_class,
                        "single class representative word");

  auto* verify_cmd =
      app.add_subcommand("verify", "run every identity and property suite");
  CommonOptions verify_opts;
  std::string verify_level = "quick";
  std::uint64_t verify_seed = amalgam::kDefaultSeed;
  add_common(verify_cmd, verify_opts);
  verify_cmd->add_option("--level", verify_level, "sample sizes")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed, "seed for randomized checks")
      ->capture_default_str();

  auto* quotient_cmd = app.add_subcommand(
      "quotient", "finite-quotient checks with exact linear algebra");
  CommonOptions quotient_opts;
  quotient_opts.format = "json";
  std::string quotient_file, quotient_builtin, quotient_check = "all";
  add_common(quotient_cmd, quotient_opts);
  auto* rep_opt = quotient_cmd->add_option("--rep", quotient_file,
                                           "JSON file with degree, s, t");
  quotient_cmd
      ->add_option("--builtin", quotient_builtin,
                   "built-in representation name (see --list)")
      ->excludes(rep_opt);
  quotient_cmd->add_option("--check", quotient_check, "which checks to run")
      ->check(CLI::IsMember({"kernel", "injectivity", "decomp", "gap", "all"}))
      ->capture_default_str();
  bool quotient_list = false;
  quotient_cmd->add_flag("--list", quotient_list,
                         "list built-in representations and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    std::cerr << e.what() << "\n";
    std::cerr << "run '" << (argv && argv[0] ? argv[0] : "amalgam")
              << " --help' for the grammar\n";
    return 2;
  }

  auto parse_common = [](const CommonOptions& opts) {
    return amalgam::parse_params(opts.m, opts.n, opts.d);
  };

  if (*reduce_cmd) {
    AmalgamParams params = parse_common(reduce_opts);
    amalgam::NormalWord word =
        amalgam::reduce(amalgam::parse_word(reduce_word, params), params);
    if (reduce_opts.format == "json") {
      json out;
      out["schema"] = "amalgam.reduce/1";
      out["params"] = params_json(params);
      out["input"] = reduce_word;
      out["word"] = render(word);
      out["syllable_length"] = amalgam::syllable_length(word);
      emit(out);
    } else {
      std::cout << render(word) << "\n";
    }
  } else if (*conj_cmd) {
    AmalgamParams params = parse_common(conj_opts);
    amalgam::NormalWord a =
        amalgam::reduce(amalgam::parse_word(conj_a, params), params);
    amalgam::NormalWord b =
        amalgam::reduce(amalgam::parse_word(conj_b, params), params);
    bool verdict = amalgam::are_conjugate(a, b);
    if (conj_opts.format == "json") {
      json out;
      out["schema"] = "amalgam.conjugacy/1";
      out["params"] = params_json(params);
      out["a"] = render(a);
      out["b"] = render(b);
      out["conjugate"] = verdict;
      emit(out);
    } else {
      std::cout << (verdict ? "conjugate" : "not conjugate") << "\n";
    }
  } else if (*trace_cmd) {
    AmalgamParams params = parse_common(trace_opts);
    std::string element_text = trace_element;
    if (!trace_element_file.empty()) {
      std::ifstream in(trace_element_file);
      if (!in) throw std::invalid_argument("cannot open " + trace_element_file);
      std::ostringstream buffer;
      buffer << in.rdbuf();
      element_text = buffer.str();
    }
    if (element_text.empty())
      throw std::invalid_argument("need --element or --element-file");
    amalgam::GroupRingElement element = amalgam::group_ring_from_json(
        nlohmann::json::parse(element_text), params);
    amalgam::NormalWord g =
        amalgam::reduce(amalgam::parse_word(trace_class, params), params);
    amalgam::Rational value = amalgam::delocalized_trace(element, g);
    if (trace_opts.format == "json") {
      json out;
      out["schema"] = "amalgam.trace/1";
      out["params"] = params_json(params);
      out["class"] = render(g);
      out["value"] = amalgam::to_fraction_string(value);
      emit(out);
    } else {
      std::cout << amalgam::to_fraction_string(value) << "\n";
    }
  } else if (*fox_cmd) {
    AmalgamParams params = parse_common(fox_opts);
    std::vector<std::pair<std::string, amalgam::GRMatrix>> matrices;
    auto want = [&](const std::string& name) {
      return fox_matrix == "all" || fox_matrix == name;
    };
    if (want("delta0")) matrices.emplace_back("delta0", build_delta0(params));
    if (want("d0")) matrices.emplace_back("d0", build_d0(params));
    if (want("delta1")) matrices.emplace_back("delta1", build_delta1(params));
    if (want("d1")) matrices.emplace_back("d1", build_d1(params));
    if (want("laplacian"))
      matrices.emplace_back("laplacian", build_laplacian(params));
    if (fox_opts.format == "json") {
      json out;
      out["schema"] = "amalgam.fox/1";
      out["params"] = params_json(params);
      for (const auto& [name, matrix] : matrices)
        out[name] = matrix_json(matrix);
      emit(out);
    } else {
      for (const auto& [name, matrix] : matrices) print_matrix(name, matrix);
    }
  } else if (*betti_cmd) {
    AmalgamParams params = parse_common(betti_opts);
    if (!betti_class.empty()) {
      amalgam::NormalWord g =
          amalgam::reduce(amalgam::parse_word(betti_class, params), params);
      amalgam::Rational value = amalgam::betti_number(g, params);
      if (betti_opts.format == "json") {
        json out;
        out["schema"] = "amalgam.betti-class/1";
        out["params"] = params_json(params);
        out["class"] = render(g);
        out["value"] = amalgam::to_fraction_string(value);
        emit(out);
      } else if (betti_opts.format == "csv") {
        std::cout << "class,value\n" << render(g) << ","
                  << amalgam::to_fraction_string(value) << "\n";
      } else {
        std::cout << amalgam::to_fraction_string(value) << "\n";
      }
    } else {
      amalgam::BettiReport report = amalgam::betti_table(params);
      if (betti_opts.format == "json") {
        emit(amalgam::to_json(report));
      } else if (betti_opts.format == "csv") {
        std::cout << amalgam::render_csv(report);
      } else {
        std::cout << amalgam::render_table(report);
      }
    }
  } else if (*verify_cmd) {
    AmalgamParams params = parse_common(verify_opts);
    amalgam::VerifyReport report = amalgam::verify_all(
        params,
        verify_level == "full" ? amalgam::VerifyLevel::full
                               : amalgam::VerifyLevel::quick,
        verify_seed);
    if (verify_opts.format == "json") {
      emit(amalgam::to_json(report));
    } else {
      std::cout << amalgam::render_table(report);
    }
    return report.all_pass() ? 0 : 1;
  } else if (*quotient_cmd) {
    AmalgamParams params = parse_common(quotient_opts);
    if (quotient_list) {
      for (const std::string& name : amalgam::builtin_rep_names(params))
        std::cout << name << "\n";
      return 0;
    }
    amalgam::QuotientRep rep;
    json source;
    if (!quotient_file.empty()) {
      std::ifstream in(quotient_file);
      if (!in) throw std::invalid_argument("cannot open " + quotient_file);
      rep = amalgam::load_rep(nlohmann::json::parse(in), params);
      source["file"] = quotient_file;
    } else if (!quotient_builtin.empty()) {
      rep = amalgam::builtin_rep(quotient_builtin, params);
      source["builtin"] = quotient_builtin;
    } else {
      throw std::invalid_argument("need --rep or --builtin");
    }

    json checks;
    bool all_pass = true;
    auto want = [&](const std::string& name) {
      return quotient_check == "all" || quotient_check == name;
    };
    if (want("kernel")) {
      auto report = verify_kernel_identity(rep);
      checks["kernel"] = to_json(report);
      all_pass = all_pass && report.match;
    }
    if (want("injectivity")) {
      auto report = verify_injectivity(rep);
      checks["injectivity"] = to_json(report);
      all_pass = all_pass && report.kernel_equals_joint_fixed &&
                 report.restricted_kernel_trivial;
    }
    if (want("decomp")) {
      auto report = verify_decompositions(rep);
      checks["decomp"] = to_json(report);
      all_pass = all_pass && report.pass();
    }
    if (want("gap")) {
      double gap = spectral_gap_estimate(rep);
      json gap_json;
      gap_json["smallest_nonzero_eigenvalue"] = gap;
      gap_json["pass"] = gap > 0.0;
      checks["gap"] = gap_json;
      all_pass = all_pass && gap > 0.0;
    }

    if (quotient_opts.format == "table") {
      std::cout << "degree " << rep.degree << "\n";
      for (const auto& [name, body] : checks.items()) {
        std::cout << name << ": "
                  << (body.at("pass").get<bool>() ? "PASS" : "FAIL") << "\n";
      }
    } else {
      json out;
      out["schema"] = "amalgam.quotient/1";
      out["params"] = params_json(params);
      out["source"] = source;
      out["degree"] = rep.degree;
      out["checks"] = checks;
      out["all_pass"] = all_pass;
      emit(out);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const amalgam::Error& e) {
    json err;
    err["schema"] = "amalgam.error/1";
    err["error"] = e.name();
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    json err;
    err["schema"] = "amalgam.error/1";
    err["error"] = "JsonError";
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    json err;
    err["schema"] = "amalgam.error/1";
    err["error"] = "InvalidArgument";
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    json err;
    err["schema"] = "amalgam.error/1";
    err["error"] = "InternalError";
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
}
