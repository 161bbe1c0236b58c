#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <vector>

#include "bredonk/cyclotomic.hpp"
#include "bredonk/group.hpp"
#include "bredonk/zmodule.hpp"

namespace bredonk {

/// Class function on a finite group: one value per conjugacy class, in the
/// group's canonical class order.
class Character {
 public:
  /// Throws DimensionMismatch unless there is one value per class.
  Character(GroupPtr group, std::vector<Cyclotomic> values);

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<Cyclotomic>& values() const noexcept { return values_; }
  const Cyclotomic& value(std::size_t cls) const { return values_.at(cls); }
  const Cyclotomic& degree() const { return values_.front(); }
  /// Value at an arbitrary element of the group.
  const Cyclotomic& at_element(std::size_t element_index) const;

  friend bool operator==(const Character& a, const Character& b) { return a.values_ == b.values_; }

 private:
  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

Character trivial_character(GroupPtr group);
Character regular_character(GroupPtr group);

struct CharacterTable {
  GroupPtr group;
  std::vector<Character> irreducibles;
  /// Group exponent; every value lives in Q(zeta_conductor).
  unsigned conductor = 1;
  /// Prime used for the modular eigenvector computation.
  std::uint64_t prime = 0;

  std::size_t size() const noexcept { return irreducibles.size(); }
};

using TablePtr = std::shared_ptr<const CharacterTable>;

/// lcm of element orders.
unsigned exponent(const FiniteGroup& G);

/// Smallest prime p = 1 (mod e) with p > 2*sqrt(n) and p > 2*n. Throws
/// PrimeSearchFailed when none exists below `bound`.
std::uint64_t dixon_prime(unsigned e, std::size_t n, std::uint64_t bound = 1'000'000'007ULL);

/// Irreducible characters of G, by Dixon's method: common eigenvectors of the
/// class-multiplication matrices over F_p, lifted to cyclotomic values via the
/// discrete Fourier sum over powers of an element. Irreducibles are sorted by
/// degree, then lexicographically on their value vectors.
CharacterTable character_table(GroupPtr G);

/// (1/|G|) sum_g a(g) b(g^-1). Throws GroupMismatch for different groups and
/// NonRationalProduct if the result is irrational.
mpq_class scalar_product(const Character& a, const Character& b);

/// The class function s -> chi(g^-1 s g) on S. Throws NotSubconjugate unless
/// g^-1 S g lies in chi's group.
Character restrict_character(const Character& chi, GroupPtr S, const GroupElement& g);

/// Multiplicities of the irreducibles of `table` in `chi`.
std::vector<mpz_class> decompose(const Character& chi, const CharacterTable& table);

/// Induction from S into T along s -> g^-1 s g, computed by Frobenius
/// reciprocity: entries(i, j) = <tau_i, rho_j restricted>_S.
struct InductionMatrix {
  TablePtr source;
  TablePtr target;
  GroupElement witness;
  IntegerMatrix entries;  // |Irr(S)| x |Irr(T)|
};

InductionMatrix induction_matrix(TablePtr source, const GroupElement& g, TablePtr target);

/// Classical induced-character formula, independent of reciprocity:
/// value at t is (1/|S'|) sum over x in T with x^-1 t x in S' of
/// tau'(x^-1 t x), where S' = g^-1 S g and tau'(s') = tau(g s' g^-1).
Character induced_character_direct(const Character& tau, const GroupElement& g, GroupPtr T);

}  // namespace bredonk
