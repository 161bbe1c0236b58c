#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bredonk/dataset.hpp"
#include "bredonk/report.hpp"

using namespace bredonk;

namespace {

struct Args {
  std::vector<std::string> builtins;
  std::vector<std::string> paths;
  std::vector<std::string> gens;
  std::string cell;
  std::string dump_dir;
  std::size_t expect_h0 = 0;
  bool json = false;
};

// Sources in command-line order, mixing --builtin NAME and positional paths.
std::vector<Source> collect_sources(const CLI::App& sub, const Args& a) {
  std::vector<Source> out;
  std::size_t bi = 0, pi = 0;
  for (const CLI::Option* opt : sub.parse_order()) {
    if (opt->get_name() == "--builtin") out.push_back(builtin_source(a.builtins.at(bi++)));
    if (opt->get_name() == "paths") out.push_back(file_source(a.paths.at(pi++)));
  }
  return out;
}

std::vector<GroupElement> collect_generators(const Args& a) {
  if (!a.cell.empty()) {
    if (a.builtins.size() != 1) throw ParseError("--cell needs exactly one --builtin");
    const Source s = builtin_source(a.builtins.front());
    for (const auto& X : s.factors)
      if (const Cell* c = X.find(a.cell)) {
        if (c->stabilizer_gens.empty()) return {GroupElement::identity(X.matrix_dim)};
        return c->stabilizer_gens;
      }
    throw ParseError("no cell \"" + a.cell + "\" in builtin " + a.builtins.front());
  }
  std::vector<GroupElement> gens;
  for (const auto& g : a.gens) {
    if (auto named = named_element(g)) {
      gens.push_back(*named);
    } else {
      gens.push_back(parse_flat_element(g));
    }
  }
  for (const auto& p : a.paths) {
    std::ifstream in(p);
    if (!in) throw ParseError("cannot open " + p);
    std::ostringstream buf;
    buf << in.rdbuf();
    auto more = parse_generators(buf.str());
    gens.insert(gens.end(), more.begin(), more.end());
  }
  if (gens.empty()) throw ParseError("char-table needs --gen, a generator file, or --builtin NAME --cell ID");
  return gens;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bredon homology and equivariant K-homology of finite proper G-CW-complexes"};
  app.require_subcommand(1);
  Args a;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--builtin", a.builtins, "Builtin model: sl3z, gl3z, c2point, trivialpoint");
    sub->add_option("paths", a.paths, "Dataset JSON file(s)");
    sub->add_flag("--json", a.json, "Emit the report as JSON");
  };
  auto add_compute = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--dump-matrices", a.dump_dir, "Write psi_d integer grids into DIR");
    sub->add_option("--expect-h0-rank", a.expect_h0, "Fail with exit 1 unless rank H0 equals N");
  };

  CLI::App* validate = app.add_subcommand("validate", "Check a dataset and audit its stabilizers");
  add_common(validate);
  CLI::App* homology = app.add_subcommand("homology", "Bredon homology with representation-ring coefficients");
  add_compute(homology);
  CLI::App* khom = app.add_subcommand("k-homology", "Equivariant K-homology via the collapsing spectral sequence");
  add_compute(khom);
  CLI::App* kunneth = app.add_subcommand("kunneth", "Homology and K-homology of a product of two models");
  add_compute(kunneth);
  CLI::App* chartable = app.add_subcommand("char-table", "Character table of a finite matrix group");
  add_common(chartable);
  chartable->add_option("--gen", a.gens, "Generator: named element (g1..g14, q1, q2) or comma-separated entries");
  chartable->add_option("--cell", a.cell, "Use the stabilizer of this cell of --builtin");

  // Builtin options are repeatable; keep every occurrence.
  for (CLI::App* sub : {validate, homology, khom, kunneth, chartable})
    sub->get_option("--builtin")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  CommandOptions opts;
  opts.json = a.json;
  if (!a.dump_dir.empty()) opts.dump_dir = a.dump_dir;
  CLI::App* sub = app.get_subcommands().front();
  if (const CLI::Option* o = sub->get_option_no_throw("--expect-h0-rank"); o && o->count()) opts.expect_h0_rank = a.expect_h0;

  Report report;
  try {
    if (sub == chartable) {
      report = cmd_chartable(collect_generators(a), opts);
    } else {
      const std::vector<Source> sources = collect_sources(*sub, a);
      const std::size_t want = sub == kunneth ? 2 : 1;
      if (sources.size() != want) {
        throw ParseError(sub->get_name() + " expects " + std::to_string(want) + " source(s), got " +
                         std::to_string(sources.size()));
      }
      if (sub == validate) report = cmd_validate(sources[0], opts);
      if (sub == homology) report = cmd_homology(sources[0], opts);
      if (sub == khom) report = cmd_khomology(sources[0], opts);
      if (sub == kunneth) report = cmd_kunneth(sources[0], sources[1], opts);
    }
  } catch (const Error& e) {
    report.command = sub->get_name();
    report.exit_code = e.code() == ErrorCode::ParseError ? kExitParse : kExitValidation;
    report.errors.push_back(e.what());
  }

  std::cout << (opts.json ? report.to_json() : report.to_text());
  return report.exit_code;
}
