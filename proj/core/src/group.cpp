#include "bredonk/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "bredonk/errors.hpp"

namespace bredonk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::GroupTooLargeOrInfinite: return "GroupTooLargeOrInfinite";
    case ErrorCode::InfiniteOrder: return "InfiniteOrder";
    case ErrorCode::NotSubconjugate: return "NotSubconjugate";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case ErrorCode::NonRationalProduct: return "NonRationalProduct";
    case ErrorCode::PrimeSearchFailed: return "PrimeSearchFailed";
    case ErrorCode::ChainConditionViolated: return "ChainConditionViolated";
    case ErrorCode::BoundarySquareNonzero: return "BoundarySquareNonzero";
    case ErrorCode::MalformedComplex: return "MalformedComplex";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(std::size_t dim, std::vector<mpz_class> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0 || entries_.size() != dim * dim) {
    throw DimensionMismatch("expected " + std::to_string(dim * dim) +
                            " entries for a " + std::to_string(dim) + "x" +
                            std::to_string(dim) + " matrix, got " +
                            std::to_string(entries_.size()));
  }
}

GroupElement GroupElement::identity(std::size_t dim) {
  std::vector<mpz_class> e(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1;
  return GroupElement(dim, std::move(e));
}

GroupElement GroupElement::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t n = rows.size();
  std::vector<mpz_class> e;
  e.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw DimensionMismatch("matrix rows must have length " + std::to_string(n));
    for (long v : row) e.emplace_back(v);
  }
  return GroupElement(n, std::move(e));
}

GroupElement GroupElement::from_flat(std::size_t dim, std::span<const long> flat) {
  std::vector<mpz_class> e;
  e.reserve(flat.size());
  for (long v : flat) e.emplace_back(v);
  return GroupElement(dim, std::move(e));
}

mpz_class GroupElement::determinant() const {
  // Bareiss fraction-free elimination.
  const std::size_t n = dim_;
  std::vector<mpz_class> m = entries_;
  auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return m[r * n + c]; };
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = v;
      }
    }
    prev = at(k, k);
  }
  mpz_class det = at(n - 1, n - 1);
  return sign < 0 ? mpz_class(-det) : det;
}

bool GroupElement::is_identity() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (entries_[i * dim_ + j] != (i == j ? 1 : 0)) return false;
  return true;
}

int GroupElement::compare(const GroupElement& other) const {
  if (dim_ != other.dim_) return dim_ < other.dim_ ? -1 : 1;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    int c = cmp(entries_[i], other.entries_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < dim_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < dim_; ++j) os << (j ? "," : "") << entries_[i * dim_ + j];
    os << ']';
  }
  os << ']';
  return os.str();
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  std::size_t h = g.dim();
  for (const auto& v : g.entries()) {
    h ^= static_cast<std::size_t>(mpz_get_si(v.get_mpz_t())) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("cannot multiply " + std::to_string(a.dim()) + "x" +
                            std::to_string(a.dim()) + " by " + std::to_string(b.dim()) +
                            "x" + std::to_string(b.dim()));
  }
  const std::size_t n = a.dim();
  std::vector<mpz_class> out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const mpz_class& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += aik * b(k, j);
    }
  return GroupElement(n, std::move(out));
}

GroupElement inverse(const GroupElement& a) {
  const mpz_class det = a.determinant();
  if (det != 1 && det != -1) {
    throw NotUnimodular("determinant of " + a.to_string() + " is " + det.get_str());
  }
  // Gauss-Jordan over Q; the result is integral since det = +-1.
  const std::size_t n = a.dim();
  std::vector<mpq_class> m(n * 2 * n);
  auto at = [&](std::size_t r, std::size_t c) -> mpq_class& { return m[r * 2 * n + c]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = a(i, j);
    at(i, n + i) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (at(piv, col) == 0) ++piv;
    if (piv != col)
      for (std::size_t c = 0; c < 2 * n; ++c) std::swap(at(piv, c), at(col, c));
    const mpq_class p = at(col, col);
    for (std::size_t c = 0; c < 2 * n; ++c) at(col, c) /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || at(r, col) == 0) continue;
      const mpq_class f = at(r, col);
      for (std::size_t c = 0; c < 2 * n; ++c) at(r, c) -= f * at(col, c);
    }
  }
  std::vector<mpz_class> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = at(i, n + j).get_num();
  return GroupElement(n, std::move(out));
}

GroupElement conjugate(const GroupElement& s, const GroupElement& g) {
  return multiply(multiply(inverse(g), s), g);
}

std::size_t element_order(const GroupElement& a, std::size_t cap) {
  const mpz_class det = a.determinant();
  if (det != 1 && det != -1) throw NotUnimodular("determinant of " + a.to_string() + " is " + det.get_str());
  GroupElement power = a;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (power.is_identity()) return k;
    power = multiply(power, a);
  }
  throw InfiniteOrder(a.to_string() + " has no finite order up to " + std::to_string(cap));
}

// ---------------------------------------------------------------------------
// FiniteGroup

namespace {

constexpr std::size_t kTableLimit = 2048;

}  // namespace

FiniteGroup FiniteGroup::enumerate(std::span<const GroupElement> gens, std::size_t cap) {
  if (gens.empty()) throw DimensionMismatch("at least one generator is required to fix the matrix dimension");
  const std::size_t dim = gens.front().dim();
  for (const auto& g : gens) {
    if (g.dim() != dim) throw DimensionMismatch("generators have mixed dimensions");
    const mpz_class det = g.determinant();
    if (det != 1 && det != -1) throw NotUnimodular("generator " + g.to_string() + " has determinant " + det.get_str());
  }

  FiniteGroup G;
  G.dim_ = dim;
  G.generators_.assign(gens.begin(), gens.end());

  const GroupElement one = GroupElement::identity(dim);
  std::unordered_set<GroupElement, GroupElementHash> seen{one};
  std::vector<GroupElement> found{one};
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const GroupElement x = found[frontier.front()];
    frontier.pop_front();
    for (const auto& g : gens) {
      GroupElement y = multiply(x, g);
      if (seen.insert(y).second) {
        if (found.size() >= cap) {
          throw GroupTooLargeOrInfinite("closure exceeds " + std::to_string(cap) + " elements");
        }
        found.push_back(std::move(y));
        frontier.push_back(found.size() - 1);
      }
    }
  }

  std::sort(found.begin() + 1, found.end());
  G.elements_ = std::move(found);
  G.build_tables();
  G.build_classes();
  return G;
}

FiniteGroup FiniteGroup::trivial(std::size_t dim) {
  const GroupElement one = GroupElement::identity(dim);
  return enumerate(std::span<const GroupElement>(&one, 1));
}

std::optional<std::size_t> FiniteGroup::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::mult(std::size_t i, std::size_t j) const {
  const std::size_t n = order();
  if (!table_.empty()) return table_[i * n + j];
  return index_.at(multiply(elements_.at(i), elements_.at(j)));
}

std::size_t FiniteGroup::power_class(std::size_t c, std::size_t k) const {
  const std::size_t rep = classes_.at(c).representative_index;
  std::size_t acc = 0;
  for (std::size_t i = 0; i < k % orders_[rep]; ++i) acc = mult(acc, rep);
  return class_of_[acc];
}

void FiniteGroup::build_tables() {
  const std::size_t n = order();
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i], i);

  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) table_[i * n + j] = index_.at(multiply(elements_[i], elements_[j]));
  }

  inverses_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!table_.empty()) {
      for (std::size_t j = 0; j < n; ++j)
        if (table_[i * n + j] == 0) { inverses_[i] = j; break; }
    } else {
      inverses_[i] = index_.at(inverse(elements_[i]));
    }
  }

  orders_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = 1;
    std::size_t p = i;
    while (p != 0) {
      p = mult(p, i);
      ++k;
    }
    orders_[i] = k;
  }
}

void FiniteGroup::build_classes() {
  const std::size_t n = order();
  std::vector<std::size_t> gen_idx;
  for (const auto& g : generators_) gen_idx.push_back(index_.at(g));

  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> orbit_of(n, kUnassigned);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t start = 0; start < n; ++start) {
    if (orbit_of[start] != kUnassigned) continue;
    const std::size_t id = orbits.size();
    std::vector<std::size_t> orbit{start};
    orbit_of[start] = id;
    for (std::size_t pos = 0; pos < orbit.size(); ++pos) {
      for (std::size_t g : gen_idx) {
        // g^-1 x g
        const std::size_t y = mult(mult(inverses_[g], orbit[pos]), g);
        if (orbit_of[y] == kUnassigned) {
          orbit_of[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  classes_.clear();
  for (auto& members : orbits) {
    ConjugacyClass cls;
    // Elements 1.. are in canonical order, but the identity sits at 0 out of
    // order, so pick the minimum explicitly.
    std::size_t rep = members.front();
    for (std::size_t m : members)
      if (elements_[m] < elements_[rep]) rep = m;
    cls.representative_index = rep;
    cls.representative = elements_[rep];
    cls.representative_order = orders_[rep];
    cls.member_indices = std::move(members);
    classes_.push_back(std::move(cls));
  }
  std::sort(classes_.begin(), classes_.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    if (a.representative_order != b.representative_order) return a.representative_order < b.representative_order;
    return a.representative < b.representative;
  });

  class_of_.assign(n, 0);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (std::size_t m : classes_[c].member_indices) class_of_[m] = c;
  inverse_class_.assign(classes_.size(), 0);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    inverse_class_[c] = class_of_[inverses_[classes_[c].representative_index]];
}

GroupPtr make_group(std::span<const GroupElement> gens, std::size_t cap) {
  return std::make_shared<const FiniteGroup>(FiniteGroup::enumerate(gens, cap));
}

bool subconjugation_embeds(const FiniteGroup& S, const GroupElement& g, const FiniteGroup& T) {
  if (S.dim() != g.dim() || T.dim() != g.dim()) {
    throw DimensionMismatch("subconjugation check mixes matrix dimensions");
  }
  const GroupElement g_inv = inverse(g);
  for (const auto& s : S.elements()) {
    if (!T.contains(multiply(multiply(g_inv, s), g))) return false;
  }
  return true;
}

}  // namespace bredonk
