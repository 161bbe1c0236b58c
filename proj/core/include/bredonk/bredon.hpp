#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bredonk/character.hpp"
#include "bredonk/errors.hpp"
#include "bredonk/group.hpp"
#include "bredonk/zmodule.hpp"

namespace bredonk {

/// Orbit representative of a cell with its stabilizer.
struct Cell {
  std::string id;
  int dim = 0;
  std::vector<GroupElement> stabilizer_gens;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// One summand sign * (target . g) of a cell boundary. The stabilizer of the
/// source cell embeds into stab(target) by s -> g^-1 s g; an absent witness
/// means the identity.
struct BoundaryTerm {
  int sign = 1;
  std::string target;
  std::optional<GroupElement> witness;

  GroupElement witness_or_identity(std::size_t dim) const {
    return witness ? *witness : GroupElement::identity(dim);
  }

  friend bool operator==(const BoundaryTerm&, const BoundaryTerm&) = default;
};

/// Finite proper G-CW-complex given by orbit representatives.
struct GCWComplex {
  std::string name;
  std::size_t matrix_dim = 0;
  std::vector<Cell> cells;
  std::map<std::string, std::vector<BoundaryTerm>> boundaries;

  const Cell* find(const std::string& id) const;
  int top_dimension() const;

  friend bool operator==(const GCWComplex&, const GCWComplex&) = default;
};

/// One-cell complex whose stabilizer is generated by `gens`.
GCWComplex point_model(std::string name, std::vector<GroupElement> gens);

struct CellAudit {
  std::string id;
  int dim = 0;
  std::size_t order = 0;
  std::size_t class_count = 0;
  std::vector<long> degrees;  // ascending
};

struct Diagnostic {
  ErrorCode code;
  std::string cell;
  std::optional<std::size_t> term;
  std::optional<int> degree;
  std::string message;
};

struct ValidationReport {
  std::vector<CellAudit> cells;
  std::vector<Diagnostic> diagnostics;

  bool ok() const noexcept { return diagnostics.empty(); }
  /// Throws the typed error matching the first diagnostic, if any.
  void throw_if_failed() const;
};

/// Checks ids and dimensions, enumerates every stabilizer, confirms each
/// boundary term's subconjugation and, when those pass, that consecutive
/// assembled differentials compose to zero. Never throws for invalid input;
/// failures are reported as located diagnostics.
ValidationReport validate(const GCWComplex& X);

struct BasisLabel {
  std::string cell;
  std::size_t irreducible = 0;
};

/// Bredon chain complex with representation-ring coefficients.
/// psi[d] maps degree-d coordinates to degree-(d-1) coordinates, so it is a
/// rank(C_{d-1}) x rank(C_d) matrix; psi[0] is the 0 x rank(C_0) zero map.
struct BredonComplex {
  std::vector<std::vector<BasisLabel>> basis;
  std::vector<IntegerMatrix> psi;
  std::map<std::string, TablePtr> tables;

  int top_degree() const noexcept { return static_cast<int>(basis.size()) - 1; }
  std::size_t chain_rank(int d) const { return basis.at(static_cast<std::size_t>(d)).size(); }
};

/// Validates, then builds the differentials from induction matrices:
/// the block at (target e', source e) is the signed sum over boundary terms
/// of e hitting e' of the transposed induction matrix.
BredonComplex assemble(const GCWComplex& X);

/// H_d = ker psi[d] / im psi[d+1], for d = 0 .. top dimension.
std::vector<FgAbelianGroup> bredon_homology(const BredonComplex& C);
std::vector<FgAbelianGroup> bredon_homology(const GCWComplex& X);

/// Alternating sum of chain ranks.
long euler_characteristic(const BredonComplex& C);
long euler_characteristic(const GCWComplex& X);

/// rank(H_0) == fc_count, where fc_count is the user-supplied number of
/// conjugacy classes of finite-order elements of the ambient group.
bool expected_h0_check(const std::vector<FgAbelianGroup>& homology, std::size_t fc_count);

}  // namespace bredonk
