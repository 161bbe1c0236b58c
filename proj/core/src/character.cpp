#include "bredonk/character.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "bredonk/errors.hpp"

namespace bredonk {

// ---------------------------------------------------------------------------
// Character

Character::Character(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_) throw GroupMismatch("character without a group");
  if (values_.size() != group_->class_count()) {
    throw DimensionMismatch("character has " + std::to_string(values_.size()) + " values for " +
                            std::to_string(group_->class_count()) + " classes");
  }
}

const Cyclotomic& Character::at_element(std::size_t element_index) const {
  return values_.at(group_->class_of(element_index));
}

Character trivial_character(GroupPtr group) {
  std::vector<Cyclotomic> v(group->class_count(), Cyclotomic(1));
  return Character(std::move(group), std::move(v));
}

Character regular_character(GroupPtr group) {
  std::vector<Cyclotomic> v(group->class_count(), Cyclotomic(0));
  v[0] = Cyclotomic(static_cast<long>(group->order()));
  return Character(std::move(group), std::move(v));
}

unsigned exponent(const FiniteGroup& G) {
  unsigned e = 1;
  for (const auto& cls : G.classes()) e = std::lcm(e, static_cast<unsigned>(cls.representative_order));
  return e;
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p, p < 2^32.

namespace {

using u64 = std::uint64_t;

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 n) const {
    u64 r = 1;
    a %= p;
    while (n) {
      if (n & 1) r = mul(r, a);
      a = mul(a, a);
      n >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 primitive_root(const Fp& f) {
  std::vector<u64> factors;
  u64 m = f.p - 1;
  for (u64 q = 2; q * q <= m; ++q) {
    if (m % q) continue;
    factors.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < f.p; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(), [&](u64 q) { return f.pow(g, (f.p - 1) / q) != 1; });
    if (ok) return g;
  }
  return 1;  // p = 2
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& rows, const Fp& f) {
  std::vector<std::size_t> pivots;
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const u64 inv = f.inv(rows[r][c]);
    for (auto& v : rows[r]) v = f.mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 factor = rows[i][c];
      for (std::size_t j = 0; j < ncols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of {x : A x = 0} for square A.
Mat nullspace(Mat A, const Fp& f) {
  const std::size_t n = A.size();
  const std::vector<std::size_t> pivots = rref(A, f);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec x(n, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = f.sub(0, A[i][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

// A common invariant subspace, stored as RREF row vectors.
struct Subspace {
  Mat basis;
  std::vector<std::size_t> pivots;
};

// Splits `space` into eigenspaces of `X` (which leaves it invariant).
std::vector<Subspace> split(const Subspace& space, const Mat& X, const Fp& f) {
  const std::size_t m = space.basis.size();
  const std::size_t k = X.size();
  if (m == 1) return {space};

  // Restriction of X to the subspace in its own basis.
  Mat A(m, Vec(m, 0));
  for (std::size_t j = 0; j < m; ++j) {
    Vec image(k, 0);
    for (std::size_t s = 0; s < k; ++s) {
      u64 acc = 0;
      for (std::size_t t = 0; t < k; ++t) acc = f.add(acc, f.mul(X[s][t], space.basis[j][t]));
      image[s] = acc;
    }
    for (std::size_t i = 0; i < m; ++i) A[i][j] = image[space.pivots[i]];
  }

  std::vector<Subspace> out;
  std::size_t found = 0;
  for (u64 lambda = 0; lambda < f.p && found < m; ++lambda) {
    Mat shifted = A;
    for (std::size_t i = 0; i < m; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
    Mat null = nullspace(std::move(shifted), f);
    if (null.empty()) continue;
    Subspace sub;
    for (const auto& coeffs : null) {
      Vec v(k, 0);
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t t = 0; t < k; ++t) v[t] = f.add(v[t], f.mul(coeffs[j], space.basis[j][t]));
      sub.basis.push_back(std::move(v));
    }
    sub.pivots = rref(sub.basis, f);
    found += sub.basis.size();
    out.push_back(std::move(sub));
  }
  if (found != m) throw std::logic_error("class matrix is not diagonalizable over F_p");
  return out;
}

}  // namespace

std::uint64_t dixon_prime(unsigned e, std::size_t n, std::uint64_t bound) {
  // p > 2n already implies p > 2 sqrt(n) for n >= 1.
  for (u64 p = static_cast<u64>(e) + 1; p < bound; p += e) {
    if (p <= 2 * static_cast<u64>(n)) continue;
    if (is_prime(p)) return p;
  }
  throw PrimeSearchFailed("no prime = 1 mod " + std::to_string(e) + " above " + std::to_string(2 * n) +
                          " below " + std::to_string(bound));
}

CharacterTable character_table(GroupPtr G) {
  const FiniteGroup& grp = *G;
  const std::size_t k = grp.class_count();
  const std::size_t n = grp.order();
  const unsigned e = exponent(grp);
  const Fp f{dixon_prime(e, n)};

  // coeff[r][s][t] = #{x in C_r : x^-1 z in C_s} for a fixed z in C_t.
  std::vector<Mat> X(k, Mat(k, Vec(k, 0)));
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t z = grp.classes()[t].representative_index;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t x : grp.classes()[r].member_indices) {
        const std::size_t s = grp.class_of(grp.mult(grp.inverse_index(x), z));
        X[r][s][t] = f.add(X[r][s][t], 1);
      }
  }

  std::vector<Subspace> spaces(1);
  for (std::size_t i = 0; i < k; ++i) {
    Vec v(k, 0);
    v[i] = 1;
    spaces[0].basis.push_back(std::move(v));
    spaces[0].pivots.push_back(i);
  }
  for (std::size_t r = 1; r < k; ++r) {
    std::vector<Subspace> next;
    for (const auto& sp : spaces) {
      auto parts = split(sp, X[r], f);
      next.insert(next.end(), std::make_move_iterator(parts.begin()), std::make_move_iterator(parts.end()));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) throw std::logic_error("class sums failed to separate the irreducibles");

  const u64 z = f.pow(primitive_root(f), (f.p - 1) / e);
  const u64 inv_e = f.inv(e);
  std::vector<u64> class_size(k);
  for (std::size_t t = 0; t < k; ++t) class_size[t] = grp.classes()[t].size() % f.p;

  std::vector<std::vector<std::size_t>> power_classes(k, std::vector<std::size_t>(e));
  for (std::size_t t = 0; t < k; ++t)
    for (unsigned l = 0; l < e; ++l) power_classes[t][l] = grp.power_class(t, l);

  CharacterTable table;
  table.group = G;
  table.conductor = e;
  table.prime = f.p;
  for (const auto& sp : spaces) {
    Vec w = sp.basis.front();
    if (w[0] == 0) throw std::logic_error("central character vanishes at the identity class");
    const u64 w0inv = f.inv(w[0]);
    for (auto& v : w) v = f.mul(v, w0inv);

    u64 norm = 0;
    for (std::size_t t = 0; t < k; ++t)
      norm = f.add(norm, f.mul(f.mul(w[t], w[grp.inverse_class(t)]), f.inv(class_size[t])));
    const u64 deg_sq = f.mul(n % f.p, f.inv(norm));
    u64 degree = 0;
    for (u64 d = 1; d * d <= n; ++d)
      if (f.mul(d, d) == deg_sq) { degree = d; break; }
    if (degree == 0) throw std::logic_error("no integral degree matches the modular norm");

    Vec chi_mod(k);
    for (std::size_t t = 0; t < k; ++t) chi_mod[t] = f.mul(f.mul(w[t], degree), f.inv(class_size[t]));

    std::vector<Cyclotomic> values;
    values.reserve(k);
    for (std::size_t t = 0; t < k; ++t) {
      std::vector<mpq_class> coeffs(e);
      u64 total = 0;
      for (unsigned j = 0; j < e; ++j) {
        u64 acc = 0;
        for (unsigned l = 0; l < e; ++l) {
          const u64 root = f.pow(z, (static_cast<u64>(e - j) % e) * l % e);
          acc = f.add(acc, f.mul(chi_mod[power_classes[t][l]], root));
        }
        const u64 mult = f.mul(acc, inv_e);
        if (mult > degree) throw std::logic_error("eigenvalue multiplicity exceeds the degree");
        coeffs[j] = mult;
        total += mult;
      }
      if (total != degree) throw std::logic_error("eigenvalue multiplicities do not sum to the degree");
      values.emplace_back(e, std::move(coeffs));
    }
    table.irreducibles.emplace_back(G, std::move(values));
  }

  std::sort(table.irreducibles.begin(), table.irreducibles.end(), [](const Character& a, const Character& b) {
    const int c = a.degree().compare(b.degree());
    if (c != 0) return c < 0;
    return std::lexicographical_compare(a.values().begin(), a.values().end(), b.values().begin(), b.values().end());
  });

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j)
      if (scalar_product(table.irreducibles[i], table.irreducibles[j]) != (i == j ? 1 : 0))
        throw std::logic_error("computed irreducibles are not orthonormal");
  return table;
}

// ---------------------------------------------------------------------------
// Products, restriction, induction

namespace {

void require_same_group(const Character& a, const Character& b) {
  if (a.group() == b.group()) return;
  if (*a.group() == *b.group()) return;
  throw GroupMismatch("characters live on different groups");
}

}  // namespace

mpq_class scalar_product(const Character& a, const Character& b) {
  require_same_group(a, b);
  const FiniteGroup& G = *a.group();
  Cyclotomic sum;
  for (std::size_t c = 0; c < G.class_count(); ++c) {
    sum += Cyclotomic(static_cast<long>(G.classes()[c].size())) * a.value(c) * b.value(G.inverse_class(c));
  }
  return sum.to_rational() / static_cast<long>(G.order());
}

Character restrict_character(const Character& chi, GroupPtr S, const GroupElement& g) {
  const FiniteGroup& T = *chi.group();
  if (!subconjugation_embeds(*S, g, T)) {
    throw NotSubconjugate("g^-1 S g is not contained in the character's group (g = " + g.to_string() + ")");
  }
  const GroupElement g_inv = inverse(g);
  std::vector<Cyclotomic> values;
  values.reserve(S->class_count());
  for (const auto& cls : S->classes()) {
    const auto idx = T.index_of(multiply(multiply(g_inv, cls.representative), g));
    values.push_back(chi.at_element(*idx));
  }
  return Character(std::move(S), std::move(values));
}

std::vector<mpz_class> decompose(const Character& chi, const CharacterTable& table) {
  std::vector<mpz_class> out;
  out.reserve(table.size());
  for (const auto& irr : table.irreducibles) {
    const mpq_class m = scalar_product(chi, irr);
    if (m.get_den() != 1) throw NonIntegralMultiplicity("multiplicity " + m.get_str() + " is not an integer");
    out.push_back(m.get_num());
  }
  return out;
}

InductionMatrix induction_matrix(TablePtr source, const GroupElement& g, TablePtr target) {
  InductionMatrix im{source, target, g, IntegerMatrix(source->size(), target->size())};
  for (std::size_t j = 0; j < target->size(); ++j) {
    const Character down = restrict_character(target->irreducibles[j], source->group, g);
    for (std::size_t i = 0; i < source->size(); ++i) {
      const mpq_class m = scalar_product(source->irreducibles[i], down);
      if (m.get_den() != 1 || m < 0) {
        throw NonIntegralMultiplicity("induced multiplicity " + m.get_str() + " at (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ")");
      }
      im.entries(i, j) = m.get_num();
    }
  }
  return im;
}

Character induced_character_direct(const Character& tau, const GroupElement& g, GroupPtr T) {
  const FiniteGroup& S = *tau.group();
  if (!subconjugation_embeds(S, g, *T)) {
    throw NotSubconjugate("g^-1 S g is not contained in the target group (g = " + g.to_string() + ")");
  }
  const GroupElement g_inv = inverse(g);
  // tau transported to S' = g^-1 S g.
  std::unordered_map<GroupElement, const Cyclotomic*, GroupElementHash> transported;
  for (std::size_t i = 0; i < S.order(); ++i) {
    transported.emplace(multiply(multiply(g_inv, S.element(i)), g), &tau.at_element(i));
  }
  std::vector<Cyclotomic> values;
  values.reserve(T->class_count());
  for (const auto& cls : T->classes()) {
    Cyclotomic sum;
    for (std::size_t x = 0; x < T->order(); ++x) {
      const std::size_t y = T->mult(T->mult(T->inverse_index(x), cls.representative_index), x);
      if (auto it = transported.find(T->element(y)); it != transported.end()) sum += *it->second;
    }
    values.push_back(sum * Cyclotomic(mpq_class(1, static_cast<unsigned long>(S.order()))));
  }
  return Character(std::move(T), std::move(values));
}

}  // namespace bredonk
