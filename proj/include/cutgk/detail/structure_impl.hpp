#pragma once

#include <algorithm>
#include <map>

namespace cutgk {

template <typename Pred>
std::vector<Subgroup> class_generated_normal_subgroups(const Subgroup& H,
                                                       std::size_t max_classes, Pred keep) {
  std::vector<ElemId> reps;
  for (const auto& cls : classes_within(H))
    if (cls.front() != FiniteGroup::kIdentity && keep(cls.front())) reps.push_back(cls.front());

  std::map<std::vector<ElemId>, Subgroup> found;
  std::vector<Subgroup> frontier;
  auto record = [&](const Subgroup& N) {
    if (found.emplace(N.elements(), N).second) return true;
    return false;
  };
  // Level 1: normal closures of single classes.
  std::vector<std::pair<Subgroup, std::size_t>> level;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    ElemId r = reps[i];
    Subgroup N = normal_closure(H, std::span<const ElemId>(&r, 1));
    record(N);
    level.emplace_back(N, i);
  }
  for (std::size_t depth = 2; depth <= max_classes; ++depth) {
    std::vector<std::pair<Subgroup, std::size_t>> next;
    for (const auto& [N, last] : level) {
      for (std::size_t j = last + 1; j < reps.size(); ++j) {
        if (N.contains(reps[j])) continue;
        std::vector<ElemId> gens = N.generators();
        gens.push_back(reps[j]);
        Subgroup M = normal_closure(H, gens);
        if (record(M)) next.emplace_back(M, j);
      }
    }
    level = std::move(next);
  }
  std::vector<Subgroup> out;
  for (auto& [key, N] : found) out.push_back(N);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

}  // namespace cutgk
