#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bredonk/bredon.hpp"
#include "bredonk/character.hpp"
#include "bredonk/khomology.hpp"

namespace bredonk {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitValidation = 2,
  kExitParse = 3,
};

struct CharTableReport {
  std::size_t order = 0;
  struct ClassInfo {
    std::size_t size;
    std::size_t element_order;
    std::string representative;
  };
  std::vector<ClassInfo> classes;
  std::vector<std::vector<std::string>> rows;  // rendered values per irreducible
  std::vector<std::string> degrees;
};

/// Structured result of a CLI command. Renders deterministically to text or
/// JSON (sorted keys, canonical group notation).
struct Report {
  std::string command;
  std::vector<std::string> sources;
  int exit_code = kExitOk;
  std::vector<std::string> errors;

  std::optional<ValidationReport> validation;
  std::vector<std::size_t> chain_ranks;
  /// Divisor lists of psi_1, psi_2, ... (empty for product sources).
  std::vector<std::vector<mpz_class>> psi_divisors;
  std::vector<FgAbelianGroup> homology;
  std::optional<long> euler_characteristic;
  std::optional<KTheoryResult> k_theory;
  std::optional<std::size_t> expected_h0_rank;
  std::optional<bool> h0_check;
  std::optional<CharTableReport> char_table;

  std::string to_text() const;
  std::string to_json() const;
};

/// "H0 = Z^8; H1 = 0; ..."
std::string format_homology(const std::vector<FgAbelianGroup>& groups, char letter = 'H');
/// "K0 = Z^8; K1 = 0" or "indeterminate (H2 nonzero)".
std::string format_k_theory(const KTheoryResult& k);

/// A model to compute with: a single complex, or a product of complexes
/// whose homology is combined by the Künneth formula.
struct Source {
  std::string label;
  std::vector<GCWComplex> factors;
};

/// Builtin names: sl3z, c2point, trivialpoint, and gl3z (= sl3z x c2point).
/// Throws ParseError for unknown names.
Source builtin_source(const std::string& name);
/// Throws ParseError on IO or format problems.
Source file_source(const std::filesystem::path& path);

struct CommandOptions {
  bool json = false;
  std::optional<std::filesystem::path> dump_dir;
  std::optional<std::size_t> expect_h0_rank;
};

Report cmd_validate(const Source& src, const CommandOptions& opts = {});
Report cmd_homology(const Source& src, const CommandOptions& opts = {});
Report cmd_khomology(const Source& src, const CommandOptions& opts = {});
Report cmd_kunneth(const Source& a, const Source& b, const CommandOptions& opts = {});
Report cmd_chartable(const std::vector<GroupElement>& gens, const CommandOptions& opts = {});

}  // namespace bredonk
