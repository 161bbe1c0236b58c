#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace bredonk {

/// Square integer matrix with determinant +1 or -1. All finite groups in
/// this library are groups of such matrices under the ordinary product.
///
/// Elements are totally ordered by (dimension, row-major entries
/// lexicographically); this "canonical element order" drives every
/// reproducible ordering downstream (element lists, class representatives,
/// class order, irreducible order).
class GroupElement {
 public:
  GroupElement() = default;

  /// Throws DimensionMismatch unless `entries.size() == dim * dim`.
  GroupElement(std::size_t dim, std::vector<mpz_class> entries);

  static GroupElement identity(std::size_t dim);
  static GroupElement from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static GroupElement from_flat(std::size_t dim, std::span<const long> flat);

  std::size_t dim() const noexcept { return dim_; }
  const mpz_class& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  const std::vector<mpz_class>& entries() const noexcept { return entries_; }

  mpz_class determinant() const;
  bool is_identity() const;

  /// Three-way comparison in canonical element order.
  int compare(const GroupElement& other) const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    return a.compare(b) < 0;
  }

  /// "[[a,b],[c,d]]"
  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  std::vector<mpz_class> entries_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
/// g^-1 * s * g
GroupElement conjugate(const GroupElement& s, const GroupElement& g);

/// Least k >= 1 with a^k = 1. Throws InfiniteOrder once k exceeds `cap`.
std::size_t element_order(const GroupElement& a, std::size_t cap = 20000);

struct ConjugacyClass {
  GroupElement representative;
  std::size_t representative_index = 0;
  std::size_t representative_order = 1;
  std::vector<std::size_t> member_indices;  // sorted
  std::size_t size() const noexcept { return member_indices.size(); }
};

inline constexpr std::size_t kDefaultGroupCap = 20000;

/// Fully enumerated finite matrix group.
///
/// Element 0 is the identity; the remaining elements follow in canonical
/// element order. Classes are sorted by (size, order of representative,
/// representative), so the identity class is always class 0. The element
/// list depends only on the generated group, not on the generating set.
class FiniteGroup {
 public:
  /// Breadth-first closure of `gens` under right multiplication. Throws
  /// GroupTooLargeOrInfinite if more than `cap` elements appear.
  static FiniteGroup enumerate(std::span<const GroupElement> gens,
                               std::size_t cap = kDefaultGroupCap);

  /// Trivial group of the given matrix dimension.
  static FiniteGroup trivial(std::size_t dim);

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  const GroupElement& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<GroupElement>& generators() const noexcept { return generators_; }

  std::optional<std::size_t> index_of(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return index_of(g).has_value(); }

  /// Index of elements[i] * elements[j].
  std::size_t mult(std::size_t i, std::size_t j) const;
  std::size_t inverse_index(std::size_t i) const { return inverses_.at(i); }
  std::size_t element_order(std::size_t i) const { return orders_.at(i); }

  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  std::size_t class_count() const noexcept { return classes_.size(); }
  std::size_t class_of(std::size_t element_index) const { return class_of_.at(element_index); }
  /// Class containing the inverses of class c's members.
  std::size_t inverse_class(std::size_t c) const { return inverse_class_.at(c); }
  /// Class of rep(c)^k.
  std::size_t power_class(std::size_t c, std::size_t k) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.elements_ == b.elements_;
  }

 private:
  FiniteGroup() = default;
  void build_tables();
  void build_classes();

  std::size_t dim_ = 0;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index_;
  std::vector<std::size_t> table_;  // order*order, empty for large groups
  std::vector<std::size_t> inverses_;
  std::vector<std::size_t> orders_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> inverse_class_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(std::span<const GroupElement> gens, std::size_t cap = kDefaultGroupCap);

/// True iff g^-1 * s * g lies in T for every s in S.
bool subconjugation_embeds(const FiniteGroup& S, const GroupElement& g, const FiniteGroup& T);

}  // namespace bredonk
