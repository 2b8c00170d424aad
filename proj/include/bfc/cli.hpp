#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bfc/anf.hpp"
#include "bfc/boolean_function.hpp"
#include "bfc/census.hpp"
#include "bfc/constructions.hpp"
#include "bfc/io.hpp"
#include "bfc/measures.hpp"
#include "bfc/spectral.hpp"
#include "bfc/vc.hpp"

namespace bfc::cli {

// Exit codes: 0 = success / all checks passed, 1 = a verification found a
// violation (counterexample printed), 2 = usage or input error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

using json = nlohmann::ordered_json;

namespace detail {

inline BooleanFunction read_function(const std::string& path) {
  if (path == "-") return parse_function_auto(std::cin, "<stdin>");
  return load_function(path);
}

inline SetFamily read_family(const std::string& path) {
  if (path == "-") {
    if (std::cin.peek() == 's') return parse_support(std::cin, "<stdin>");
    return support(parse_bft(std::cin, "<stdin>"));
  }
  return load_family(path);
}

inline void write_output(const std::string& path, const std::string& content,
                         std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path);
  if (!file) throw parse_error(path + ": cannot open for writing");
  file << content;
}

inline json witness_json(const ShatterWitness& witness) {
  json realizers = json::array();
  for (const auto& [trace, member] : witness.realizers)
    realizers.push_back(json{{"trace", trace}, {"member", member}});
  return json{{"t_mask", witness.t_mask}, {"realizers", realizers}};
}

inline void print_witness_text(const ShatterWitness& witness,
                               std::ostream& out) {
  out << "t_mask " << witness.t_mask << "\n";
  for (const auto& [trace, member] : witness.realizers)
    out << "realizer " << trace << " " << member << "\n";
}

inline json report_json(const SuiteReport& report) {
  json checks = json::array();
  for (const auto& [name, passed] : report.pass_counts)
    checks.push_back(json{
        {"name", name}, {"passed", passed}, {"trials", report.trials}});
  json counterexample = nullptr;
  if (report.first_counterexample)
    counterexample = json{{"check", report.first_counterexample->check},
                          {"index", report.first_counterexample->index},
                          {"function", report.first_counterexample->function_bft}};
  return json{
      {"n", report.n},
      {"mode",
       report.mode == SuiteReport::Mode::exhaustive ? "exhaustive" : "sampled"},
      {"trials", report.trials},
      {"checks", checks},
      {"notes", report.notes},
      {"all_passed", report.all_passed()},
      {"first_counterexample", counterexample},
  };
}

inline void print_report_text(const SuiteReport& report, std::ostream& out) {
  out << "n " << report.n << " mode "
      << (report.mode == SuiteReport::Mode::exhaustive ? "exhaustive"
                                                       : "sampled")
      << " trials " << report.trials << "\n";
  for (const auto& [name, passed] : report.pass_counts)
    out << "pass " << name << " " << passed << "/" << report.trials << "\n";
  for (const std::string& note : report.notes) out << "note " << note << "\n";
  if (report.first_counterexample) {
    out << "FAIL " << report.first_counterexample->check << " at index "
        << report.first_counterexample->index << "\n"
        << report.first_counterexample->function_bft;
  } else if (report.all_passed()) {
    out << "all passed\n";
  }
}

inline std::vector<std::pair<int, int>> parse_fixes(const std::string& text) {
  std::vector<std::pair<int, int>> fixes;
  if (text.empty()) return fixes;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos)
      throw precondition_error("fix \"" + token + "\" is not of the form j=v");
    try {
      fixes.emplace_back(std::stoi(token.substr(0, eq)),
                         std::stoi(token.substr(eq + 1)));
    } catch (const std::exception&) {
      throw precondition_error("fix \"" + token + "\" is not of the form j=v");
    }
  }
  return fixes;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"exact complexity measures of Boolean functions"};
  app.require_subcommand(1);

  bool json_out = false;
  int threads = 1;
  int cert_cap = 10;
  int depth_cap = 12;
  app.add_flag("--json", json_out, "emit machine-readable JSON");
  app.add_option("--threads", threads, "worker threads")
      ->envname("BFC_THREADS")
      ->check(CLI::PositiveNumber);
  auto* cert_cap_opt =
      app.add_option("--cert-cap", cert_cap,
                     "largest n for certificate complexity (default 10)")
          ->check(CLI::PositiveNumber);
  auto* depth_cap_opt =
      app.add_option("--depth-cap", depth_cap,
                     "largest n for decision-tree depth (default 12)")
          ->check(CLI::PositiveNumber);

  std::string input = "-";
  std::string output = "-";

  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "Walsh-Hadamard coefficients (2^n scale)");
  spectrum_cmd->add_option("--input", input, "truth table (.bft) or support file")
      ->required();

  auto* anf_cmd = app.add_subcommand("anf", "algebraic normal form over F2");
  anf_cmd->add_option("--input", input)->required();
  bool degree_only = false;
  anf_cmd->add_flag("--degree-only", degree_only, "print only the F2-degree");

  auto* vc_cmd = app.add_subcommand("vc", "VC-dimension of the support");
  vc_cmd->add_option("--input", input)->required();
  bool with_witness = false;
  vc_cmd->add_flag("--witness", with_witness, "print a shattered-set witness");

  auto* design_cmd = app.add_subcommand(
      "design-check", "parity conditions on the support, up to order d");
  design_cmd->add_option("--input", input)->required();
  int order = 0;
  design_cmd->add_option("--d", order, "order to check")->required();
  std::string condition = "i";
  design_cmd
      ->add_option("--condition", condition,
                   "i: containment counts, ii: intersection counts, "
                   "disjoint: disjointness counts")
      ->check(CLI::IsMember({"i", "ii", "disjoint"}));

  auto* extract_cmd = app.add_subcommand(
      "extract-shattered",
      "build a shattered (d+1)-set from an order-d parity condition");
  extract_cmd->add_option("--input", input)->required();
  extract_cmd->add_option("--d", order, "design order")->required();

  auto* measures_cmd =
      app.add_subcommand("measures", "complexity measures and trade-offs");
  measures_cmd->add_option("--input", input)->required();
  std::string set_spec = "vc,deg,degf2,s,c,d";
  measures_cmd->add_option("--set", set_spec,
                           "comma list from vc,deg,degf2,s,c,d");

  auto* construct_cmd =
      app.add_subcommand("construct", "emit named functions as .bft");
  construct_cmd->require_subcommand(1);
  int con_n = 0;
  double density = 0.5;
  std::uint64_t seed = 1;
  std::string fixes_text;
  auto* subcube_cmd = construct_cmd->add_subcommand(
      "subcube", "indicator of a subcube given by fixed coordinates");
  subcube_cmd->add_option("--n", con_n, "dimension")->required();
  subcube_cmd->add_option("--fix", fixes_text, "comma list j=v, e.g. 2=1,5=0");
  subcube_cmd->add_option("--output", output, "output path, - for stdout");
  auto* example_cmd = construct_cmd->add_subcommand(
      "example-n4", "4-variable equality case whose support is no subcube");
  example_cmd->add_option("--output", output);
  auto* counter_cmd = construct_cmd->add_subcommand(
      "counterexample15", "15-variable function with VC + s = 14 < 15");
  counter_cmd->add_option("--output", output);
  auto* random_cmd = construct_cmd->add_subcommand(
      "random", "seeded random table, each bit 1 with probability p");
  random_cmd->add_option("--n", con_n, "dimension")->required();
  random_cmd->add_option("--p", density, "bit density in [0,1]");
  random_cmd->add_option("--seed", seed, "generator seed");
  random_cmd->add_option("--output", output);

  auto* census_cmd = app.add_subcommand(
      "census", "count equality cases over all functions at small n");
  int census_n = 0;
  bool census_list = false;
  census_cmd->add_option("--n", census_n, "dimension in [1,4]")->required();
  census_cmd->add_flag("--list", census_list,
                       "also emit the equality cases as packed tables");

  auto* verify_cmd = app.add_subcommand(
      "verify", "run the inequality suite exhaustively or on samples");
  int verify_n = 0;
  std::string mode = "exhaustive";
  std::uint64_t trials = 500;
  verify_cmd->add_option("--n", verify_n, "dimension")->required();
  verify_cmd->add_option("--mode", mode)
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  verify_cmd->add_option("--trials", trials, "samples per generator (sampled)");
  verify_cmd->add_option("--seed", seed, "generator seed (sampled)");

  // Let global flags appear after the subcommand as well.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();
  for (CLI::App* sub :
       construct_cmd->get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (app.got_subcommand(spectrum_cmd)) {
      const BooleanFunction f = detail::read_function(input);
      const FourierSpectrum spectrum = wht(f);
      if (json_out) {
        out << json{{"n", f.n()},
                    {"scale", f.table_size()},
                    {"coeffs", spectrum.coeffs}}
                   .dump(2)
            << "\n";
      } else {
        out << "n " << f.n() << " scale " << f.table_size() << "\n";
        for (std::size_t s = 0; s < spectrum.coeffs.size(); ++s)
          out << s << " " << spectrum.coeffs[s] << "\n";
      }
      return exit_ok;
    }

    if (app.got_subcommand(anf_cmd)) {
      const BooleanFunction f = detail::read_function(input);
      const F2Polynomial poly = anf(f);
      if (degree_only) {
        const int deg = f2_degree(poly);
        if (json_out)
          out << json{{"n", f.n()}, {"degf2", deg}}.dump(2) << "\n";
        else
          out << deg << "\n";
        return exit_ok;
      }
      std::vector<std::uint32_t> monomials;
      const std::uint64_t size = f.table_size();
      for (std::uint64_t s = 0; s < size; ++s)
        if (get_bit(poly.coeffs, s))
          monomials.push_back(static_cast<std::uint32_t>(s));
      if (json_out) {
        out << json{{"n", f.n()}, {"monomials", monomials}}.dump(2) << "\n";
      } else {
        for (std::uint32_t m : monomials) out << m << "\n";
      }
      return exit_ok;
    }

    if (app.got_subcommand(vc_cmd)) {
      const SetFamily family = detail::read_family(input);
      const VcResult result = vc_dimension(family);
      if (json_out) {
        json payload{{"n", family.n()}, {"vc", result.dimension}};
        payload["witness"] =
            with_witness ? detail::witness_json(result.witness) : json(nullptr);
        out << payload.dump(2) << "\n";
      } else {
        out << "vc " << result.dimension << "\n";
        if (with_witness) detail::print_witness_text(result.witness, out);
      }
      return exit_ok;
    }

    if (app.got_subcommand(design_cmd)) {
      const SetFamily family = detail::read_family(input);
      DesignCheckReport report;
      if (condition == "i")
        report = null_design_check_containment(family, order);
      else if (condition == "ii")
        report = null_design_check_trace(family, order);
      else
        report = null_design_check_disjoint(family, order);
      if (json_out) {
        json violation = nullptr;
        if (report.violation) {
          violation = json{{"set", report.violation->set_mask}};
          violation["trace"] = report.violation->trace_mask
                                   ? json(*report.violation->trace_mask)
                                   : json(nullptr);
        }
        out << json{{"n", family.n()},
                    {"condition", condition},
                    {"d", report.d},
                    {"holds", report.holds},
                    {"violation", violation}}
                   .dump(2)
            << "\n";
      } else {
        out << "condition " << condition << " d " << report.d << " "
            << (report.holds ? "holds" : "violated");
        if (report.violation) {
          out << " set " << report.violation->set_mask;
          if (report.violation->trace_mask)
            out << " trace " << *report.violation->trace_mask;
        }
        out << "\n";
      }
      return report.holds ? exit_ok : exit_violation;
    }

    if (app.got_subcommand(extract_cmd)) {
      const BooleanFunction f = detail::read_function(input);
      const ShatterWitness witness = extract_shattered_from_design(f, order);
      if (json_out)
        out << json{{"n", f.n()},
                    {"d", order},
                    {"witness", detail::witness_json(witness)}}
                   .dump(2)
            << "\n";
      else
        detail::print_witness_text(witness, out);
      return exit_ok;
    }

    if (app.got_subcommand(measures_cmd)) {
      const BooleanFunction f = detail::read_function(input);
      const MeasureCaps caps{cert_cap, depth_cap};
      std::vector<std::string> tokens;
      std::stringstream stream(set_spec);
      std::string token;
      while (std::getline(stream, token, ',')) tokens.push_back(token);
      std::map<std::string, std::optional<long long>> values{
          {"vc", std::nullopt}, {"deg", std::nullopt}, {"degf2", std::nullopt},
          {"s", std::nullopt},  {"c", std::nullopt},   {"d", std::nullopt}};
      std::vector<std::string> skipped;
      for (const std::string& name : tokens) {
        if (!values.count(name))
          throw precondition_error("unknown measure \"" + name +
                                   "\"; expected vc,deg,degf2,s,c,d");
        if (name == "vc") {
          if (f.is_zero())
            throw zero_function_error(
                "ZeroFunction: VC-dimension needs a non-zero function");
          values["vc"] = vc_dimension(support(f)).dimension;
        } else if (name == "deg") {
          values["deg"] = fourier_degree(f);
        } else if (name == "degf2") {
          values["degf2"] = f2_degree(f);
        } else if (name == "s") {
          values["s"] = sensitivity(f);
        } else if (name == "c") {
          if (f.n() <= caps.certificate)
            values["c"] = certificate_complexity(f, caps);
          else
            skipped.push_back("c");
        } else if (name == "d") {
          if (f.n() <= caps.decision_tree)
            values["d"] = decision_tree_depth(f, caps);
          else
            skipped.push_back("d");
        }
      }
      std::vector<InequalityVerdict> verdicts;
      auto have = [&](const char* name) { return values[name].has_value(); };
      auto verdict = [&](const char* name, long long lhs, long long rhs) {
        verdicts.push_back(InequalityVerdict{name, lhs, rhs, lhs >= rhs,
                                             lhs - rhs});
      };
      const long long n = f.n();
      if (have("vc") && have("deg"))
        verdict("vc_plus_deg", *values["vc"] + *values["deg"], n);
      if (have("vc") && have("degf2"))
        verdict("vc_plus_degf2", *values["vc"] + *values["degf2"], n);
      if (have("vc") && have("d"))
        verdict("vc_plus_depth", *values["vc"] + *values["d"], n);
      if (have("vc") && have("c"))
        verdict("vc_plus_cert", *values["vc"] + *values["c"], n);
      if (have("vc") && have("s")) {
        verdict("two_vc_plus_s", 2 * *values["vc"] + *values["s"], n);
        verdict("vc_plus_s", *values["vc"] + *values["s"], n);
      }
      if (have("s") && have("deg"))
        verdict("s_squared_vs_deg", *values["s"] * *values["s"],
                *values["deg"]);
      if (json_out) {
        json measures = json::object();
        for (const std::string& name :
             {std::string("vc"), std::string("deg"), std::string("degf2"),
              std::string("s"), std::string("c"), std::string("d")})
          if (values[name]) measures[name] = *values[name];
        json inequalities = json::array();
        for (const InequalityVerdict& v : verdicts)
          inequalities.push_back(json{{"name", v.name},
                                      {"lhs", v.lhs},
                                      {"rhs", v.rhs},
                                      {"holds", v.holds},
                                      {"slack", v.slack}});
        out << json{{"n", f.n()},
                    {"measures", measures},
                    {"inequalities", inequalities},
                    {"skipped", skipped}}
                   .dump(2)
            << "\n";
      } else {
        out << "n " << f.n() << "\n";
        for (const std::string& name :
             {std::string("vc"), std::string("deg"), std::string("degf2"),
              std::string("s"), std::string("c"), std::string("d")})
          if (values[name]) out << name << " " << *values[name] << "\n";
        for (const InequalityVerdict& v : verdicts)
          out << v.name << " " << v.lhs << " >= " << v.rhs << " "
              << (v.holds ? "holds" : "violated") << "\n";
        for (const std::string& name : skipped)
          out << "skipped " << name << " (over cap)\n";
      }
      return exit_ok;
    }

    if (app.got_subcommand(construct_cmd)) {
      BooleanFunction f(1);
      if (construct_cmd->got_subcommand(subcube_cmd)) {
        SubcubeSpec spec;
        spec.n = con_n;
        spec.fixes = detail::parse_fixes(fixes_text);
        f = subcube(spec);
      } else if (construct_cmd->got_subcommand(example_cmd)) {
        f = equality_example_n4();
      } else if (construct_cmd->got_subcommand(counter_cmd)) {
        f = counterexample_n15();
      } else {
        f = random_function(con_n, density, seed);
      }
      detail::write_output(output, format_bft(f), out);
      return exit_ok;
    }

    if (app.got_subcommand(census_cmd)) {
      CensusLists lists;
      const CensusRow row =
          equality_census(census_n, threads, census_list ? &lists : nullptr);
      if (json_out) {
        json payload{{"n", row.n},
                     {"total_functions", row.total_functions},
                     {"deg_equality_count", row.deg_equality_count},
                     {"f2_equality_count", row.f2_equality_count}};
        if (census_list) {
          payload["deg_equality_tables"] = lists.deg_equality;
          payload["f2_equality_tables"] = lists.f2_equality;
        }
        out << payload.dump(2) << "\n";
      } else {
        out << "n " << row.n << " total " << row.total_functions
            << " deg_equality " << row.deg_equality_count << " f2_equality "
            << row.f2_equality_count << "\n";
        if (census_list) {
          for (std::uint64_t table : lists.deg_equality)
            out << "deg_equal " << table << "\n";
          for (std::uint64_t table : lists.f2_equality)
            out << "f2_equal " << table << "\n";
        }
      }
      return exit_ok;
    }

    if (app.got_subcommand(verify_cmd)) {
      SuiteReport report;
      if (mode == "exhaustive") {
        report = verify_exhaustive(verify_n, threads);
      } else {
        SuiteCaps caps;
        if (cert_cap_opt->count() > 0) caps.certificate = cert_cap;
        if (depth_cap_opt->count() > 0) caps.decision_tree = depth_cap;
        report = verify_sampled(verify_n, trials, seed, threads, caps);
      }
      if (json_out)
        out << detail::report_json(report).dump(2) << "\n";
      else
        detail::print_report_text(report, out);
      return report.all_passed() ? exit_ok : exit_violation;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  err << "error: no subcommand\n";
  return exit_usage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("bfc");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace bfc::cli
