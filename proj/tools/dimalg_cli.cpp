// Command-line driver for the named computations.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dimalg/workflows.hpp"

using nlohmann::json;

namespace {

struct CliOptions {
  std::uint32_t prime = 101;
  std::uint32_t second_prime = 103;
  bool rational = false;
  bool force = false;
  bool json_out = false;
  int jobs = 1;
  std::string export_path;
};

void add_common(CLI::App* cmd, CliOptions& o, bool has_field = true) {
  if (has_field) {
    cmd->add_option("--prime", o.prime, "Modulus for modular runs")->check(CLI::PositiveNumber);
    cmd->add_flag("--rational", o.rational, "Use exact rational arithmetic");
  }
  cmd->add_flag("--force", o.force, "Override cost refusals");
  cmd->add_flag("--json", o.json_out, "Emit a JSON report on stdout");
  cmd->add_option("--jobs", o.jobs, "Worker threads (reductions are sequential; accepted for compatibility)");
  cmd->add_option("--export-matrix", o.export_path,
                  "Write the run's main matrix to PATH (triples; .csv extension selects CSV)");
}

dimalg::RunOptions run_options(const CliOptions& o) {
  dimalg::RunOptions r;
  r.prime = o.prime;
  r.check_prime = o.second_prime;
  r.rational = o.rational;
  r.force = o.force;
  r.progress = [](std::size_t done, std::size_t total) {
    std::fprintf(stderr, "\r  %zu/%zu rows", done, total);
    if (done >= total) std::fprintf(stderr, "\n");
    std::fflush(stderr);
  };
  r.log = [](const std::string& line) { std::fprintf(stderr, "  %s\n", line.c_str()); };
  return r;
}

void print_text(const dimalg::RunReport& rep) {
  std::cout << "run: " << rep.name << "\n";
  std::cout << rep.summary << "\n";
  for (const auto& [k, v] : rep.values) std::cout << "  " << k << ": " << v << "\n";
  for (const auto& c : rep.checks) {
    if (c.pass)
      std::cout << "  check " << c.label << ": PASS (" << c.actual << ")\n";
    else
      std::cout << "  check " << c.label << ": FAIL (expected " << c.expected << ", got "
                << c.actual << ")\n";
  }
  if (!rep.rendered.empty()) {
    std::cout << "identities:\n";
    for (const auto& s : rep.rendered) std::cout << "  " << s << "\n";
  }
  std::cout << "result: " << (rep.pass() ? "PASS" : "FAIL") << "\n";
}

void print_json(const dimalg::RunReport& rep) {
  json j;
  j["run"] = rep.name;
  j["summary"] = rep.summary;
  j["values"] = json::object();
  for (const auto& [k, v] : rep.values) j["values"][k] = v;
  j["checks"] = json::array();
  for (const auto& c : rep.checks)
    j["checks"].push_back({{"label", c.label},
                           {"expected", c.expected},
                           {"actual", c.actual},
                           {"pass", c.pass}});
  j["identities"] = rep.rendered;
  j["pass"] = rep.pass();
  std::cout << j.dump(2) << "\n";
}

int finish(const dimalg::RunReport& rep, const CliOptions& o) {
  if (o.json_out)
    print_json(rep);
  else
    print_text(rep);
  return rep.pass() ? 0 : 1;
}

template <class F>
int export_matrix(const dimalg::ExactMatrix<F>& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return 2;
  }
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
    dimalg::export_csv(out, m);
  else
    dimalg::export_triples(out, m);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Malcev dialgebra computations: Kolesnikov's algorithm, dicommutator "
               "expansions, module multiplicities, and Leibniz triple systems"};
  app.require_subcommand(1);

  CliOptions o;
  int degree = 0, gens = 0;
  std::string input_path;

  auto* kpa = app.add_subcommand("kp-associative", "KP algorithm on associativity");
  add_common(kpa, o, false);
  auto* kpl = app.add_subcommand("kp-alternative", "KP algorithm on the alternative laws");
  add_common(kpl, o, false);
  auto* kpm = app.add_subcommand("kp-malcev", "KP algorithm on the Malcev identity");
  add_common(kpm, o, false);
  auto* d3 = app.add_subcommand("degree3", "Degree-3 monomial computation (30 x 48)");
  add_common(d3, o);
  auto* d4 = app.add_subcommand("degree4", "Degree-4 monomial computation (780 x 540)");
  add_common(d4, o);
  auto* mult = app.add_subcommand("multiplicities", "Multiplicity table row for one degree");
  mult->add_option("degree", degree, "Degree 3..6")->required();
  add_common(mult, o);
  mult->add_option("--second-prime", o.second_prime,
                   "Cross-check modulus for degree 6 (0 disables)");
  auto* ss = app.add_subcommand("special-search", "Malcev-consequence ranks vs multiplicities");
  ss->add_option("degree", degree, "Degree 3..6")->required();
  add_common(ss, o);
  auto* t3 = app.add_subcommand("triple3", "Degree-3 Leibniz-triple-system check (12 x 18)");
  add_common(t3, o);
  auto* t5 = app.add_subcommand("triple5", "Degree-5 Leibniz-triple-system check (4680 x 2040)");
  add_common(t5, o);
  auto* fd = app.add_subcommand("freedim", "Free RAC vs Leibniz dimensions");
  fd->add_option("generators", gens, "Number of generators")->required();
  fd->add_option("degree", degree, "Degree")->required();
  add_common(fd, o, false);
  auto* pr = app.add_subcommand("parse", "Parse an identity file and echo its normal form");
  pr->add_option("--input", input_path, "Identity file (- for stdin)")->required();
  pr->add_flag("--json", o.json_out, "Emit a JSON report on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (kpa->parsed()) return finish(dimalg::run_kp_associative(), o);
    if (kpl->parsed()) return finish(dimalg::run_kp_alternative(), o);
    if (kpm->parsed()) return finish(dimalg::run_kp_malcev(), o);
    if (d3->parsed()) {
      auto rep = dimalg::run_degree3();
      if (!o.export_path.empty()) {
        auto comp = dimalg::monomial_computation_rational(3);
        if (int rc = export_matrix(comp.M, o.export_path)) return rc;
      }
      return finish(rep, o);
    }
    if (d4->parsed()) {
      auto rep = dimalg::run_degree4(run_options(o));
      if (!o.export_path.empty()) {
        if (o.rational) {
          auto comp = dimalg::monomial_computation_rational(4);
          if (int rc = export_matrix(comp.M, o.export_path)) return rc;
        } else {
          auto comp = dimalg::monomial_computation_mod(4, o.prime);
          if (int rc = export_matrix(comp.M, o.export_path)) return rc;
        }
      }
      return finish(rep, o);
    }
    if (mult->parsed()) return finish(dimalg::run_multiplicities(degree, run_options(o)), o);
    if (ss->parsed()) return finish(dimalg::run_special_search(degree, run_options(o)), o);
    if (t3->parsed()) {
      auto rep = dimalg::run_triple3();
      if (!o.export_path.empty()) {
        auto r = dimalg::check_degree3();
        if (int rc = export_matrix(r.matrix, o.export_path)) return rc;
      }
      return finish(rep, o);
    }
    if (t5->parsed()) return finish(dimalg::run_triple5(run_options(o)), o);
    if (fd->parsed()) return finish(dimalg::run_freedim(gens, degree), o);
    if (pr->parsed()) {
      std::string text;
      if (input_path == "-") {
        std::ostringstream ss2;
        ss2 << std::cin.rdbuf();
        text = ss2.str();
      } else {
        std::ifstream in(input_path);
        if (!in) {
          std::cerr << "error: cannot open " << input_path << "\n";
          return 2;
        }
        std::ostringstream ss2;
        ss2 << in.rdbuf();
        text = ss2.str();
      }
      try {
        auto doc = dimalg::parse_identities(text);
        if (o.json_out) {
          json j;
          j["signature"] = dimalg::signature_name(doc.signature);
          j["identities"] = json::array();
          for (const auto& id : doc.identities)
            j["identities"].push_back({{"name", id.name},
                                       {"degree", id.degree},
                                       {"poly", dimalg::render_dsl(id.poly)}});
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "signature: " << dimalg::signature_name(doc.signature) << "\n";
          std::cout << dimalg::render_dsl(doc);
        }
        return 0;
      } catch (const dimalg::DslError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
