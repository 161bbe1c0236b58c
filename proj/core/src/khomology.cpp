#include "bredonk/khomology.hpp"

namespace bredonk {

GradedHomology::GradedHomology(std::vector<FgAbelianGroup> groups) : groups_(std::move(groups)) {
  while (!groups_.empty() && groups_.back().is_trivial()) groups_.pop_back();
}

FgAbelianGroup GradedHomology::at(std::size_t degree) const {
  return degree < groups_.size() ? groups_[degree] : FgAbelianGroup();
}

KTheoryResult ahss_collapse(const GradedHomology& H) {
  KTheoryResult r;
  for (std::size_t d = 2; d < H.length(); ++d)
    if (!H.at(d).is_trivial()) r.obstructions.push_back(d);
  if (r.obstructions.empty()) {
    r.status = KStatus::Determined;
    r.k0 = H.at(0);
    r.k1 = H.at(1);
  }
  return r;
}

GradedHomology kunneth(const GradedHomology& a, const GradedHomology& b) {
  if (a.length() == 0 || b.length() == 0) return GradedHomology();
  // Tor terms reach one degree past the top tensor degree.
  std::vector<FgAbelianGroup> out(a.length() + b.length());
  for (std::size_t i = 0; i < a.length(); ++i)
    for (std::size_t j = 0; j < b.length(); ++j) {
      out[i + j] = direct_sum(out[i + j], tensor(a.at(i), b.at(j)));
      out[i + j + 1] = direct_sum(out[i + j + 1], tor(a.at(i), b.at(j)));
    }
  return GradedHomology(std::move(out));
}

GradedHomology finite_group_homology(const FiniteGroup& G) {
  return GradedHomology({FgAbelianGroup(G.class_count())});
}

}  // namespace bredonk
