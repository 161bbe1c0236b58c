#include "bredonk/bredon.hpp"

#include <algorithm>
#include <set>

namespace bredonk {

const Cell* GCWComplex::find(const std::string& id) const {
  for (const auto& c : cells)
    if (c.id == id) return &c;
  return nullptr;
}

int GCWComplex::top_dimension() const {
  int top = -1;
  for (const auto& c : cells) top = std::max(top, c.dim);
  return top;
}

GCWComplex point_model(std::string name, std::vector<GroupElement> gens) {
  GCWComplex X;
  X.name = std::move(name);
  X.matrix_dim = gens.empty() ? 1 : gens.front().dim();
  X.cells.push_back(Cell{"p", 0, std::move(gens)});
  return X;
}

namespace {

[[noreturn]] void throw_typed(ErrorCode code, const std::string& msg) {
  switch (code) {
    case ErrorCode::DimensionMismatch: throw DimensionMismatch(msg);
    case ErrorCode::NotUnimodular: throw NotUnimodular(msg);
    case ErrorCode::GroupTooLargeOrInfinite: throw GroupTooLargeOrInfinite(msg);
    case ErrorCode::InfiniteOrder: throw InfiniteOrder(msg);
    case ErrorCode::NotSubconjugate: throw NotSubconjugate(msg);
    case ErrorCode::GroupMismatch: throw GroupMismatch(msg);
    case ErrorCode::NonIntegralMultiplicity: throw NonIntegralMultiplicity(msg);
    case ErrorCode::NonRationalProduct: throw NonRationalProduct(msg);
    case ErrorCode::PrimeSearchFailed: throw PrimeSearchFailed(msg);
    case ErrorCode::ChainConditionViolated: throw ChainConditionViolated(msg);
    case ErrorCode::BoundarySquareNonzero: throw BoundarySquareNonzero(msg);
    case ErrorCode::MalformedComplex: throw MalformedComplex(msg);
    case ErrorCode::ParseError: throw ParseError(msg);
  }
  throw Error(code, msg);
}

struct Prepared {
  std::map<std::string, GroupPtr> groups;
  std::map<std::string, TablePtr> tables;
};

BredonComplex assemble_prepared(const GCWComplex& X, const Prepared& prep) {
  BredonComplex C;
  C.tables = prep.tables;
  const int top = X.top_dimension();
  C.basis.resize(static_cast<std::size_t>(top + 1));
  std::map<std::string, std::size_t> offset;
  for (const auto& cell : X.cells) {
    auto& labels = C.basis[static_cast<std::size_t>(cell.dim)];
    offset[cell.id] = labels.size();
    for (std::size_t i = 0; i < prep.tables.at(cell.id)->size(); ++i) labels.push_back({cell.id, i});
  }

  C.psi.reserve(C.basis.size());
  if (top >= 0) C.psi.emplace_back(0, C.basis[0].size());
  for (int d = 1; d <= top; ++d) {
    IntegerMatrix psi(C.chain_rank(d - 1), C.chain_rank(d));
    for (const auto& cell : X.cells) {
      if (cell.dim != d) continue;
      auto it = X.boundaries.find(cell.id);
      if (it == X.boundaries.end()) continue;
      const std::size_t col0 = offset.at(cell.id);
      for (const auto& term : it->second) {
        const InductionMatrix im = induction_matrix(prep.tables.at(cell.id), term.witness_or_identity(X.matrix_dim),
                                                    prep.tables.at(term.target));
        const std::size_t row0 = offset.at(term.target);
        for (std::size_t i = 0; i < im.entries.rows(); ++i)
          for (std::size_t j = 0; j < im.entries.cols(); ++j)
            psi(row0 + j, col0 + i) += term.sign * im.entries(i, j);
      }
    }
    C.psi.push_back(std::move(psi));
  }
  return C;
}

// Structural checks and stabilizer enumeration. Returns the prepared groups
// and tables for every cell whose stabilizer enumerated.
Prepared prepare(const GCWComplex& X, ValidationReport& report) {
  auto fail = [&](ErrorCode code, const std::string& cell, std::optional<std::size_t> term, std::string msg) {
    report.diagnostics.push_back({code, cell, term, std::nullopt, std::move(msg)});
  };

  Prepared prep;
  if (X.matrix_dim == 0) fail(ErrorCode::MalformedComplex, "", std::nullopt, "matrix_dim must be positive");

  std::set<std::string> ids;
  for (const auto& cell : X.cells) {
    if (!ids.insert(cell.id).second) fail(ErrorCode::MalformedComplex, cell.id, std::nullopt, "duplicate cell id");
    if (cell.dim < 0) fail(ErrorCode::MalformedComplex, cell.id, std::nullopt, "negative dimension");
  }

  for (const auto& cell : X.cells) {
    CellAudit audit{cell.id, cell.dim, 0, 0, {}};
    try {
      std::vector<GroupElement> gens = cell.stabilizer_gens;
      if (gens.empty()) gens.push_back(GroupElement::identity(X.matrix_dim));
      for (const auto& g : gens)
        if (g.dim() != X.matrix_dim)
          throw DimensionMismatch("stabilizer generator " + g.to_string() + " is not " +
                                  std::to_string(X.matrix_dim) + "x" + std::to_string(X.matrix_dim));
      GroupPtr G = make_group(gens);
      auto table = std::make_shared<const CharacterTable>(character_table(G));
      audit.order = G->order();
      audit.class_count = G->class_count();
      for (const auto& irr : table->irreducibles) audit.degrees.push_back(irr.degree().to_rational().get_num().get_si());
      std::sort(audit.degrees.begin(), audit.degrees.end());
      prep.groups[cell.id] = G;
      prep.tables[cell.id] = std::move(table);
    } catch (const Error& e) {
      fail(e.code(), cell.id, std::nullopt, e.what());
    }
    report.cells.push_back(std::move(audit));
  }

  for (const auto& [id, terms] : X.boundaries) {
    const Cell* src = X.find(id);
    if (!src) {
      fail(ErrorCode::MalformedComplex, id, std::nullopt, "boundary given for unknown cell");
      continue;
    }
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const auto& term = terms[t];
      const Cell* dst = X.find(term.target);
      if (term.sign != 1 && term.sign != -1) {
        fail(ErrorCode::MalformedComplex, id, t, "sign must be +1 or -1");
        continue;
      }
      if (!dst) {
        fail(ErrorCode::MalformedComplex, id, t, "unknown target cell '" + term.target + "'");
        continue;
      }
      if (dst->dim != src->dim - 1) {
        fail(ErrorCode::MalformedComplex, id, t,
             "target '" + term.target + "' has dimension " + std::to_string(dst->dim) + ", expected " +
                 std::to_string(src->dim - 1));
        continue;
      }
      if (term.witness && term.witness->dim() != X.matrix_dim) {
        fail(ErrorCode::DimensionMismatch, id, t, "witness has the wrong matrix dimension");
        continue;
      }
      if (!prep.groups.count(id) || !prep.groups.count(term.target)) continue;
      try {
        const GroupElement g = term.witness_or_identity(X.matrix_dim);
        if (!subconjugation_embeds(*prep.groups.at(id), g, *prep.groups.at(term.target))) {
          fail(ErrorCode::NotSubconjugate, id, t,
               "stab(" + id + ") is not conjugated into stab(" + term.target + ") by " + g.to_string());
        }
      } catch (const Error& e) {
        fail(e.code(), id, t, e.what());
      }
    }
  }
  return prep;
}

}  // namespace

void ValidationReport::throw_if_failed() const {
  if (diagnostics.empty()) return;
  const Diagnostic& d = diagnostics.front();
  std::string where = d.cell.empty() ? std::string() : "cell " + d.cell;
  if (d.term) where += ", term " + std::to_string(*d.term);
  if (d.degree) where += (where.empty() ? "" : ", ") + std::string("degree ") + std::to_string(*d.degree);
  throw_typed(d.code, (where.empty() ? "" : where + ": ") + d.message);
}

ValidationReport validate(const GCWComplex& X) {
  ValidationReport report;
  const Prepared prep = prepare(X, report);
  if (!report.ok()) return report;

  const BredonComplex C = assemble_prepared(X, prep);
  for (int d = 1; d < C.top_degree(); ++d) {
    if (!(C.psi[d] * C.psi[d + 1]).is_zero()) {
      report.diagnostics.push_back({ErrorCode::BoundarySquareNonzero, "", std::nullopt, d + 1,
                                    "psi_" + std::to_string(d) + " * psi_" + std::to_string(d + 1) + " != 0"});
    }
  }
  return report;
}

BredonComplex assemble(const GCWComplex& X) {
  ValidationReport report;
  const Prepared prep = prepare(X, report);
  report.throw_if_failed();
  BredonComplex C = assemble_prepared(X, prep);
  for (int d = 1; d < C.top_degree(); ++d) {
    if (!(C.psi[d] * C.psi[d + 1]).is_zero()) {
      throw BoundarySquareNonzero("degree " + std::to_string(d + 1) + ": psi_" + std::to_string(d) + " * psi_" +
                                  std::to_string(d + 1) + " != 0");
    }
  }
  return C;
}

std::vector<FgAbelianGroup> bredon_homology(const BredonComplex& C) {
  std::vector<FgAbelianGroup> out;
  const int top = C.top_degree();
  for (int d = 0; d <= top; ++d) {
    std::optional<IntegerMatrix> incoming, outgoing;
    if (d < top) incoming = C.psi[d + 1];
    if (d > 0) outgoing = C.psi[d];
    out.push_back(homology_at(incoming, outgoing, C.chain_rank(d)));
  }
  return out;
}

std::vector<FgAbelianGroup> bredon_homology(const GCWComplex& X) { return bredon_homology(assemble(X)); }

long euler_characteristic(const BredonComplex& C) {
  long chi = 0;
  for (int d = 0; d <= C.top_degree(); ++d) chi += (d % 2 ? -1L : 1L) * static_cast<long>(C.chain_rank(d));
  return chi;
}

long euler_characteristic(const GCWComplex& X) { return euler_characteristic(assemble(X)); }

bool expected_h0_check(const std::vector<FgAbelianGroup>& homology, std::size_t fc_count) {
  return !homology.empty() && homology.front().rank() == fc_count;
}

}  // namespace bredonk
