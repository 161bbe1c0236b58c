#include <gtest/gtest.h>

#include "bredonk/khomology.hpp"
#include "oracles.hpp"

using namespace bredonk;

namespace {

FgAbelianGroup Z(std::size_t r) { return FgAbelianGroup(r); }
FgAbelianGroup Zmod(long n) { return FgAbelianGroup::from_cyclic(0, {n}); }

// Block-diagonal matrix diag(a, b).
GroupElement block(const GroupElement& a, const GroupElement& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<mpz_class> e(n * n, 0);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) e[i * n + j] = a(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) e[(a.dim() + i) * n + a.dim() + j] = b(i, j);
  return GroupElement(n, std::move(e));
}

}  // namespace

TEST(GradedHomology, TrimsTrailingZeros) {
  const GradedHomology h({Z(8), {}, {}, {}});
  EXPECT_EQ(h.length(), 1u);
  EXPECT_TRUE(h.at(5).is_trivial());
}

TEST(AhssCollapse, Examples) {
  const auto k = ahss_collapse(GradedHomology({Z(8), {}, {}, {}}));
  EXPECT_EQ(k.status, KStatus::Determined);
  EXPECT_EQ(k.k0, Z(8));
  EXPECT_EQ(k.k1, FgAbelianGroup());

  const auto two = ahss_collapse(GradedHomology({Zmod(3), Z(2)}));
  EXPECT_EQ(two.status, KStatus::Determined);
  EXPECT_EQ(two.k0, Zmod(3));
  EXPECT_EQ(two.k1, Z(2));

  const auto bad = ahss_collapse(GradedHomology({Z(1), {}, Z(1)}));
  EXPECT_EQ(bad.status, KStatus::Indeterminate);
  EXPECT_FALSE(bad.k0.has_value());
  EXPECT_EQ(bad.obstructions, std::vector<std::size_t>{2});
}

TEST(Kunneth, Examples) {
  EXPECT_EQ(kunneth(GradedHomology({Z(8)}), GradedHomology({Z(2)})), GradedHomology({Z(16)}));
  const GradedHomology any({Z(2), Zmod(4), {}, Z(1)});
  EXPECT_EQ(kunneth(any, GradedHomology({Z(1)})), any);
  EXPECT_EQ(kunneth(GradedHomology({Zmod(2)}), GradedHomology({Zmod(2)})), GradedHomology({Zmod(2), Zmod(2)}));
}

TEST(Kunneth, SymmetricRanks) {
  const GradedHomology a({Z(2), Zmod(6), Z(1)});
  const GradedHomology b({Zmod(4), Z(3)});
  const auto ab = kunneth(a, b), ba = kunneth(b, a);
  ASSERT_EQ(ab.length(), ba.length());
  for (std::size_t d = 0; d < ab.length(); ++d) EXPECT_EQ(ab.at(d), ba.at(d));
}

TEST(FiniteGroupHomology, Examples) {
  EXPECT_EQ(finite_group_homology(FiniteGroup::trivial(3)), GradedHomology({Z(1)}));
  const GroupElement m = GroupElement::from_rows({{-1}});
  EXPECT_EQ(finite_group_homology(FiniteGroup::enumerate(std::vector<GroupElement>{m})), GradedHomology({Z(2)}));
  const auto S4 = FiniteGroup::enumerate(std::vector<GroupElement>{oracle::el("g2"), oracle::el("g3")});
  const auto ref = oracle::closure({oracle::to_mat(oracle::el("g2")), oracle::to_mat(oracle::el("g3"))});
  EXPECT_EQ(finite_group_homology(S4), GradedHomology({Z(oracle::class_count(ref))}));
}

TEST(FiniteGroupHomology, ProductAgreesWithKunneth) {
  const GroupElement m = GroupElement::from_rows({{-1}});
  const GroupElement i1 = GroupElement::identity(1), i3 = GroupElement::identity(3);
  const std::vector<std::vector<GroupElement>> left = {{oracle::el("g2"), oracle::el("g3")}, {oracle::el("g4"), oracle::el("g5")}};
  for (const auto& gens : left) {
    const auto G = FiniteGroup::enumerate(gens);
    const auto H = FiniteGroup::enumerate(std::vector<GroupElement>{m});
    std::vector<GroupElement> prod;
    for (const auto& g : gens) prod.push_back(block(g, i1));
    prod.push_back(block(i3, m));
    const auto GH = FiniteGroup::enumerate(prod);
    EXPECT_EQ(GH.order(), G.order() * 2);
    EXPECT_EQ(finite_group_homology(GH), kunneth(finite_group_homology(G), finite_group_homology(H)));
  }
}
