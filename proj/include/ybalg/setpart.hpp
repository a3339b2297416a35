#pragma once

#include <functional>
#include <vector>

namespace ybalg {

/// Calls `visit` with every set partition of `elements`. Blocks keep the
/// relative order of `elements` and are listed by their first element.
template <class T>
void for_each_set_partition(const std::vector<T>& elements,
                            const std::function<void(const std::vector<std::vector<T>>&)>& visit) {
  std::vector<std::vector<T>> blocks;
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == elements.size()) {
      visit(blocks);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(elements[k]);
      place(k + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({elements[k]});
    place(k + 1);
    blocks.pop_back();
  };
  place(0);
}

template <class T>
std::vector<std::vector<std::vector<T>>> set_partitions(const std::vector<T>& elements) {
  std::vector<std::vector<std::vector<T>>> out;
  for_each_set_partition<T>(elements, [&](const std::vector<std::vector<T>>& p) { out.push_back(p); });
  return out;
}

/// {1, ..., n}
inline std::vector<int> site_range(int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) out.push_back(i);
  return out;
}

}  // namespace ybalg
