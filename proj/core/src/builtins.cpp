#include <array>
#include <map>

#include "bredonk/dataset.hpp"

namespace bredonk {

namespace {

using Rows = std::initializer_list<std::initializer_list<long>>;

const std::map<std::string, GroupElement, std::less<>>& sl3z_elements() {
  static const std::map<std::string, GroupElement, std::less<>> table = [] {
    std::map<std::string, GroupElement, std::less<>> m;
    auto put = [&](const char* name, Rows rows) { m.emplace(name, GroupElement::from_rows(rows)); };
    put("g1", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    put("g2", {{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}});
    put("g3", {{0, 0, 1}, {0, 1, 0}, {-1, 0, 0}});
    put("g4", {{-1, 0, 0}, {0, 1, 1}, {0, 0, -1}});
    put("g5", {{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
    put("g6", {{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}});
    put("g7", {{0, 0, -1}, {-1, 0, 0}, {1, 1, 1}});
    put("g8", {{-1, 0, 0}, {0, 1, 0}, {0, -1, -1}});
    put("g9", {{0, 0, -1}, {-1, 0, -1}, {0, 1, 1}});
    put("g10", {{0, 0, -1}, {0, -1, 0}, {-1, 0, 0}});
    put("g11", {{-1, 0, 0}, {0, -1, 0}, {1, 1, 1}});
    put("g12", {{0, -1, -1}, {0, -1, 0}, {-1, 1, 0}});
    put("g13", {{0, 1, 1}, {1, 0, 1}, {0, 0, -1}});
    put("g14", {{-1, 0, 0}, {-1, 0, -1}, {1, -1, 0}});
    // Folding elements: q1 sends M, N, Q to M', N', Q and q2 swaps N, N'
    // fixing M', Q, under the action A.g = g^t A g.
    put("q1", {{1, 0, 0}, {0, 1, 1}, {0, -1, 0}});
    put("q2", {{-1, 0, 0}, {0, 1, 1}, {0, 0, -1}});
    return m;
  }();
  return table;
}

const GroupElement& el(std::string_view name) { return sl3z_elements().find(name)->second; }

}  // namespace

std::optional<GroupElement> named_element(std::string_view name) {
  auto it = sl3z_elements().find(name);
  if (it == sl3z_elements().end()) return std::nullopt;
  return it->second;
}

GCWComplex builtin_sl3z() {
  GCWComplex X;
  X.name = "sl3z";
  X.matrix_dim = 3;

  auto cell = [&](const char* id, int dim, std::initializer_list<const char*> gens) {
    Cell c{id, dim, {}};
    for (const char* g : gens) c.stabilizer_gens.push_back(el(g));
    X.cells.push_back(std::move(c));
  };
  cell("v1", 0, {"g2", "g3"});
  cell("v2", 0, {"g4", "g5"});
  cell("v3", 0, {"g6", "g7"});
  cell("v4", 0, {"g6", "g8"});
  cell("v5", 0, {"g5", "g9"});
  cell("e1", 1, {"g2", "g5"});
  cell("e2", 1, {"g6", "g10"});
  cell("e3", 1, {"g6", "g5"});
  cell("e4", 1, {"g2"});
  cell("e5", 1, {"g5"});
  cell("e6", 1, {"g6", "g11"});
  cell("e7", 1, {"g6", "g12"});
  cell("e8", 1, {"g5", "g13"});
  cell("t1", 2, {"g2"});
  cell("t2", 2, {"g1"});
  cell("t3", 2, {"g12", "g14"});
  cell("t4", 2, {"g5"});
  cell("t5", 2, {"g6"});
  cell("T1", 3, {"g1"});

  // A term "e'.q" is stored with witness q^-1, so that s -> g^-1 s g embeds
  // stab(e) into stab(e').
  const GroupElement q1_inv = inverse(el("q1"));
  const GroupElement q2_inv = inverse(el("q2"));
  const GroupElement q1q2_inv = inverse(multiply(el("q1"), el("q2")));
  auto plain = [](int sign, const char* target) { return BoundaryTerm{sign, target, std::nullopt}; };
  auto moved = [](int sign, const char* target, const GroupElement& g) { return BoundaryTerm{sign, target, g}; };

  X.boundaries["e1"] = {plain(1, "v2"), plain(-1, "v1")};
  X.boundaries["e2"] = {plain(1, "v3"), plain(-1, "v1")};
  X.boundaries["e3"] = {plain(1, "v5"), plain(-1, "v1")};
  X.boundaries["e4"] = {plain(1, "v3"), plain(-1, "v2")};
  X.boundaries["e5"] = {moved(1, "v4", q2_inv), plain(-1, "v2")};
  X.boundaries["e6"] = {plain(1, "v4"), plain(-1, "v3")};
  X.boundaries["e7"] = {plain(1, "v5"), moved(-1, "v3", q1_inv)};
  X.boundaries["e8"] = {plain(1, "v5"), moved(-1, "v4", q2_inv)};

  X.boundaries["t1"] = {plain(1, "e1"), plain(-1, "e2"), plain(1, "e4")};
  X.boundaries["t2"] = {moved(1, "e4", q1_inv), moved(-1, "e5", q2_inv), moved(1, "e6", q1q2_inv)};
  X.boundaries["t3"] = {moved(1, "e6", q1_inv), plain(-1, "e7"), plain(1, "e8")};
  X.boundaries["t4"] = {plain(1, "e1"), plain(-1, "e3"), plain(1, "e5"), plain(1, "e8")};
  X.boundaries["t5"] = {plain(1, "e2"), plain(-1, "e3"), plain(1, "e6"), moved(-1, "e6", q1q2_inv), plain(1, "e7")};

  X.boundaries["T1"] = {plain(-1, "t1"), plain(1, "t2"), plain(-1, "t3"), plain(1, "t4"), plain(-1, "t5")};
  return X;
}

GCWComplex builtin_c2point() {
  return point_model("c2point", {GroupElement::from_rows({{-1}})});
}

GCWComplex builtin_trivialpoint() {
  return point_model("trivialpoint", {GroupElement::from_rows({{1}})});
}

std::optional<GCWComplex> builtin_complex(std::string_view name) {
  if (name == "sl3z") return builtin_sl3z();
  if (name == "c2point") return builtin_c2point();
  if (name == "trivialpoint") return builtin_trivialpoint();
  return std::nullopt;
}

}  // namespace bredonk
