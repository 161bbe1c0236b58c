#include <fstream>

#include "bredonk/dataset.hpp"
#include "bredonk/report.hpp"

namespace bredonk {

namespace {

struct Computed {
  std::vector<std::size_t> chain_ranks;
  std::vector<std::vector<mpz_class>> psi_divisors;
  std::vector<FgAbelianGroup> homology;
  long euler = 0;
};

void dump_matrices(const BredonComplex& C, const std::string& name, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (std::size_t d = 1; d < C.psi.size(); ++d) {
    const auto path = dir / (name + ".psi" + std::to_string(d) + ".txt");
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path.string());
    out << C.psi[d].to_grid();
  }
}

Computed compute_single(const GCWComplex& X, const CommandOptions& opts) {
  const BredonComplex C = assemble(X);
  if (opts.dump_dir) dump_matrices(C, X.name.empty() ? "complex" : X.name, *opts.dump_dir);
  Computed out;
  for (int d = 0; d <= C.top_degree(); ++d) out.chain_ranks.push_back(C.chain_rank(d));
  for (std::size_t d = 1; d < C.psi.size(); ++d) out.psi_divisors.push_back(snf(C.psi[d]).divisors);
  out.homology = bredon_homology(C);
  out.euler = euler_characteristic(C);
  return out;
}

Computed compute(const Source& src, const CommandOptions& opts) {
  if (src.factors.size() == 1) return compute_single(src.factors.front(), opts);

  Computed acc;
  acc.chain_ranks = {1};
  acc.euler = 1;
  GradedHomology h(std::vector<FgAbelianGroup>{FgAbelianGroup(1)});
  std::size_t top = 0;
  for (const auto& X : src.factors) {
    const Computed f = compute_single(X, opts);
    std::vector<std::size_t> ranks(acc.chain_ranks.size() + f.chain_ranks.size() - 1, 0);
    for (std::size_t i = 0; i < acc.chain_ranks.size(); ++i)
      for (std::size_t j = 0; j < f.chain_ranks.size(); ++j) ranks[i + j] += acc.chain_ranks[i] * f.chain_ranks[j];
    acc.chain_ranks = std::move(ranks);
    acc.euler *= f.euler;
    h = kunneth(h, GradedHomology(f.homology));
    top += f.homology.size() - 1;
  }
  acc.homology = h.groups();
  if (acc.homology.size() < top + 1) acc.homology.resize(top + 1);
  return acc;
}

int exit_code_for(const Error& e) { return e.code() == ErrorCode::ParseError ? kExitParse : kExitValidation; }

std::vector<std::string> labels(const Source& s) { return {s.label}; }

template <class Body>
Report run(std::string command, std::vector<std::string> sources, Body&& body) {
  Report r;
  r.command = std::move(command);
  r.sources = std::move(sources);
  try {
    body(r);
  } catch (const Error& e) {
    r.exit_code = exit_code_for(e);
    r.errors.push_back(e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    r.exit_code = kExitParse;
    r.errors.push_back(e.what());
  }
  return r;
}

void fill_homology(Report& r, const Computed& c, const CommandOptions& opts) {
  r.chain_ranks = c.chain_ranks;
  r.psi_divisors = c.psi_divisors;
  r.homology = c.homology;
  r.euler_characteristic = c.euler;
  if (opts.expect_h0_rank) {
    r.expected_h0_rank = opts.expect_h0_rank;
    r.h0_check = expected_h0_check(c.homology, *opts.expect_h0_rank);
    if (!*r.h0_check) r.exit_code = kExitMismatch;
  }
}

}  // namespace

Source builtin_source(const std::string& name) {
  if (name == "gl3z") return {name, {builtin_sl3z(), builtin_c2point()}};
  if (auto X = builtin_complex(name)) return {name, {std::move(*X)}};
  throw ParseError("unknown builtin \"" + name + "\" (known: sl3z, gl3z, c2point, trivialpoint)");
}

Source file_source(const std::filesystem::path& path) {
  GCWComplex X = load_dataset(path);
  if (X.name.empty()) X.name = path.stem().string();
  return {path.string(), {std::move(X)}};
}

Report cmd_validate(const Source& src, const CommandOptions&) {
  return run("validate", labels(src), [&](Report& r) {
    ValidationReport all;
    for (const auto& X : src.factors) {
      ValidationReport v = validate(X);
      all.cells.insert(all.cells.end(), v.cells.begin(), v.cells.end());
      all.diagnostics.insert(all.diagnostics.end(), v.diagnostics.begin(), v.diagnostics.end());
    }
    if (!all.ok()) r.exit_code = exit_code_for(Error(all.diagnostics.front().code, ""));
    r.validation = std::move(all);
  });
}

Report cmd_homology(const Source& src, const CommandOptions& opts) {
  return run("homology", labels(src), [&](Report& r) { fill_homology(r, compute(src, opts), opts); });
}

Report cmd_khomology(const Source& src, const CommandOptions& opts) {
  return run("k-homology", labels(src), [&](Report& r) {
    const Computed c = compute(src, opts);
    fill_homology(r, c, opts);
    r.k_theory = ahss_collapse(GradedHomology(c.homology));
  });
}

Report cmd_kunneth(const Source& a, const Source& b, const CommandOptions& opts) {
  return run("kunneth", {a.label, b.label}, [&](Report& r) {
    Source product{a.label + " x " + b.label, a.factors};
    product.factors.insert(product.factors.end(), b.factors.begin(), b.factors.end());
    const Computed c = compute(product, opts);
    fill_homology(r, c, opts);
    r.k_theory = ahss_collapse(GradedHomology(c.homology));
  });
}

Report cmd_chartable(const std::vector<GroupElement>& gens, const CommandOptions&) {
  return run("char-table", {}, [&](Report& r) {
    const GroupPtr G = make_group(gens);
    const CharacterTable table = character_table(G);
    CharTableReport ct;
    ct.order = G->order();
    for (const auto& c : G->classes()) ct.classes.push_back({c.size(), c.representative_order, c.representative.to_string()});
    for (const auto& chi : table.irreducibles) {
      std::vector<std::string> row;
      for (const auto& v : chi.values()) row.push_back(v.to_string());
      ct.degrees.push_back(chi.degree().to_string());
      ct.rows.push_back(std::move(row));
    }
    r.char_table = std::move(ct);
  });
}

}  // namespace bredonk
