#include <gtest/gtest.h>

#include <map>
#include <set>

#include "bredonk/character.hpp"
#include "oracles.hpp"

using namespace bredonk;
using oracle::el;

namespace {

GroupPtr group_of(std::initializer_list<const char*> names) {
  std::vector<GroupElement> gens;
  for (const char* n : names) gens.push_back(el(n));
  return make_group(gens);
}

TablePtr table_of(std::initializer_list<const char*> names) {
  return std::make_shared<const CharacterTable>(character_table(group_of(names)));
}

std::vector<long> degrees(const CharacterTable& t) {
  std::vector<long> out;
  for (const auto& chi : t.irreducibles) out.push_back(chi.degree().to_rational().get_num().get_si());
  return out;
}

// Value vector of chi on the elements of its group.
std::vector<Cyclotomic> on_elements(const Character& chi) {
  std::vector<Cyclotomic> out;
  for (std::size_t i = 0; i < chi.group()->order(); ++i) out.push_back(chi.at_element(i));
  return out;
}

void expect_orthonormal(const CharacterTable& t) {
  const auto& G = *t.group;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      EXPECT_EQ(scalar_product(t.irreducibles[i], t.irreducibles[j]), i == j ? 1 : 0);
  // Column orthogonality: sum_chi chi(a) conj(chi(b)) = |C_G(a)| [a ~ b].
  for (std::size_t a = 0; a < G.class_count(); ++a)
    for (std::size_t b = 0; b < G.class_count(); ++b) {
      Cyclotomic s = 0;
      for (const auto& chi : t.irreducibles) s += chi.value(a) * chi.value(b).conjugate();
      const long expect = a == b ? static_cast<long>(G.order() / G.classes()[a].size()) : 0;
      EXPECT_EQ(s, Cyclotomic(expect));
    }
}

}  // namespace

TEST(Exponent, Examples) {
  EXPECT_EQ(exponent(FiniteGroup::trivial(3)), 1u);
  EXPECT_EQ(exponent(*group_of({"g2"})), 2u);
  const auto D6 = group_of({"g4", "g5"});
  EXPECT_EQ(exponent(*D6), 6u);
  EXPECT_EQ(exponent(*D6), oracle::exponent(oracle::closure({oracle::to_mat(el("g4")), oracle::to_mat(el("g5"))})));
}

TEST(DixonPrime, Properties) {
  const auto p = dixon_prime(12, 24);
  EXPECT_EQ(p % 12, 1u);
  EXPECT_GT(p, 48u);
  EXPECT_THROW(dixon_prime(12, 1000, 100), PrimeSearchFailed);
}

TEST(CharacterTable, CyclicOfOrderTwo) {
  const auto t = table_of({"g2"});
  ASSERT_EQ(t->size(), 2u);
  std::set<std::vector<Cyclotomic>> rows;
  for (const auto& chi : t->irreducibles) rows.insert(chi.values());
  EXPECT_EQ(rows, (std::set<std::vector<Cyclotomic>>{{1, 1}, {1, -1}}));
}

TEST(CharacterTable, SymmetricGroupDegrees) {
  const auto t = table_of({"g2", "g3"});
  EXPECT_EQ(t->group->order(), 24u);
  EXPECT_EQ(degrees(*t), (std::vector<long>{1, 1, 2, 3, 3}));
  expect_orthonormal(*t);
}

TEST(CharacterTable, DihedralOfOrderEight) {
  const auto t = table_of({"g6", "g8"});
  EXPECT_EQ(degrees(*t), (std::vector<long>{1, 1, 1, 1, 2}));
  const auto& G = *t->group;
  const Character& phi = t->irreducibles.back();
  // Reflections: order-2 elements outside the centre; the degree-2 character vanishes there.
  std::size_t reflection_classes = 0;
  for (std::size_t c = 0; c < G.class_count(); ++c) {
    if (G.classes()[c].representative_order == 2 && G.classes()[c].size() == 2) {
      ++reflection_classes;
      EXPECT_TRUE(phi.value(c).is_zero());
    }
  }
  EXPECT_EQ(reflection_classes, 2u);
}

TEST(CharacterTable, NonRationalValues) {
  // Cyclic group of order 3 generated by a permutation matrix.
  const GroupElement c3 = GroupElement::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  const auto t = character_table(make_group(std::vector<GroupElement>{c3}));
  ASSERT_EQ(t.size(), 3u);
  std::size_t irrational = 0;
  for (const auto& chi : t.irreducibles)
    for (const auto& v : chi.values()) irrational += v.is_rational() ? 0 : 1;
  EXPECT_EQ(irrational, 4u);
  expect_orthonormal(t);
}

TEST(CharacterTable, AllStabilizersSatisfyTheoryChecks) {
  const GCWComplex X = builtin_sl3z();
  for (const auto& cell : X.cells) {
    const auto G = make_group(cell.stabilizer_gens);
    const auto t = character_table(G);
    SCOPED_TRACE(cell.id);
    EXPECT_EQ(t.size(), G->class_count());
    long sum = 0;
    for (long d : degrees(t)) sum += d * d;
    EXPECT_EQ(sum, static_cast<long>(G->order()));
    expect_orthonormal(t);
    for (const auto& chi : t.irreducibles)
      for (const auto& v : chi.values())
        for (const auto& c : v.coeffs()) EXPECT_EQ(c.get_den(), 1);
  }
}

TEST(CharacterTable, Deterministic) {
  const auto a = table_of({"g2", "g3"});
  const auto b = table_of({"g3", "g2"});
  ASSERT_EQ(a->size(), b->size());
  for (std::size_t i = 0; i < a->size(); ++i) EXPECT_EQ(on_elements(a->irreducibles[i]), on_elements(b->irreducibles[i]));
}

TEST(ScalarProduct, RestrictedDegreeTwoAgainstTrivial) {
  const auto D3 = table_of({"g6", "g10"});
  const auto C2 = group_of({"g2"});
  const Character& phi = D3->irreducibles.back();
  ASSERT_EQ(phi.degree(), Cyclotomic(2));
  const Character res = restrict_character(phi, C2, GroupElement::identity(3));
  EXPECT_EQ(res.values(), (std::vector<Cyclotomic>{2, 0}));
  EXPECT_EQ(scalar_product(res, trivial_character(C2)), 1);
}

TEST(ScalarProduct, GroupMismatch) {
  EXPECT_THROW(scalar_product(trivial_character(group_of({"g2"})), trivial_character(group_of({"g5"}))), GroupMismatch);
}

TEST(Restriction, Examples) {
  const auto D2 = table_of({"g2", "g5"});
  const auto C2 = group_of({"g2"});
  std::size_t trivial_on_c2 = 0;
  for (const auto& chi : D2->irreducibles)
    if (restrict_character(chi, C2, GroupElement::identity(3)).values() == std::vector<Cyclotomic>{1, 1}) ++trivial_on_c2;
  EXPECT_EQ(trivial_on_c2, 2u);
  for (const auto& chi : D2->irreducibles)
    EXPECT_EQ(restrict_character(chi, D2->group, GroupElement::identity(3)), chi);
  EXPECT_THROW(restrict_character(D2->irreducibles[0], group_of({"g6"}), GroupElement::identity(3)), NotSubconjugate);
}

TEST(Decompose, RegularCharacter) {
  const auto t = table_of({"g2", "g3"});
  const auto mult = decompose(regular_character(t->group), *t);
  for (std::size_t i = 0; i < t->size(); ++i) EXPECT_EQ(mult[i], t->irreducibles[i].degree().to_rational());
  const Character half(t->group, std::vector<Cyclotomic>(t->group->class_count(), mpq_class(1, 2)));
  EXPECT_THROW(decompose(half, *t), NonIntegralMultiplicity);
}

TEST(Induction, ExamplesUpToOrdering) {
  const auto C2 = table_of({"g2"});
  const auto D2 = table_of({"g2", "g5"});
  const auto D3 = table_of({"g6", "g10"});
  const auto one = std::make_shared<const CharacterTable>(character_table(make_group(std::vector<GroupElement>{GroupElement::identity(3)})));
  const GroupElement e = GroupElement::identity(3);

  const auto self = induction_matrix(D2, e, D2).entries;
  EXPECT_EQ(self, IntegerMatrix::identity(4));
  EXPECT_EQ(induction_matrix(one, e, C2).entries, (IntegerMatrix{{1, 1}}));
  for (const auto& target : {D2, D3}) {
    const auto M = induction_matrix(C2, e, target).entries;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      mpz_class dim = 0;
      for (std::size_t j = 0; j < M.cols(); ++j) dim += M(i, j) * target->irreducibles[j].degree().to_rational().get_num();
      EXPECT_EQ(dim, target->group->order() / 2);
    }
  }
}

TEST(Induction, DirectFormulaExamples) {
  const auto one = make_group(std::vector<GroupElement>{GroupElement::identity(3)});
  const auto C2 = group_of({"g2"});
  const Character reg = induced_character_direct(trivial_character(one), GroupElement::identity(3), C2);
  EXPECT_EQ(reg.values(), (std::vector<Cyclotomic>{2, 0}));
  const auto D2 = table_of({"g2", "g5"});
  for (const auto& chi : D2->irreducibles) EXPECT_EQ(induced_character_direct(chi, GroupElement::identity(3), D2->group), chi);
}

TEST(Induction, ReciprocityAgreesWithDirectFormulaOnDataset) {
  const GCWComplex X = builtin_sl3z();
  std::map<std::string, TablePtr> tables;
  for (const auto& c : X.cells) tables[c.id] = std::make_shared<const CharacterTable>(character_table(make_group(c.stabilizer_gens)));
  std::size_t checked = 0;
  for (const auto& [cell, terms] : X.boundaries) {
    for (const auto& term : terms) {
      const GroupElement g = term.witness_or_identity(3);
      const auto& S = tables.at(cell);
      const auto& T = tables.at(term.target);
      const auto M = induction_matrix(S, g, T).entries;
      for (std::size_t i = 0; i < S->size(); ++i) {
        const auto direct = decompose(induced_character_direct(S->irreducibles[i], g, T->group), *T);
        for (std::size_t j = 0; j < T->size(); ++j) EXPECT_EQ(M(i, j), direct[j]) << cell << " -> " << term.target;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 50u);
}
