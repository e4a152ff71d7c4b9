#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace germlab::par {

/// One element of a word ball together with a shortest word reaching it.
template <class E>
struct Entry {
  E element;
  std::string word;
};

/// Left-multiplies every frontier element by every generator and keeps the
/// products not yet in `seen`, in (frontier index, generator index) order.
/// Serial reference for expand_layer.
template <class E>
std::vector<Entry<E>> expand_layer_serial(const std::vector<Entry<E>>& frontier,
                                          const std::vector<Entry<E>>& gens, std::set<E>& seen) {
  std::vector<Entry<E>> next;
  for (const auto& x : frontier)
    for (const auto& g : gens) {
      E y = g.element * x.element;
      if (seen.insert(y).second) next.push_back({std::move(y), g.word + x.word});
    }
  return next;
}

/// Same result as expand_layer_serial: the products are computed in
/// parallel, then merged serially in the same order.
template <class E>
std::vector<Entry<E>> expand_layer(const std::vector<Entry<E>>& frontier, const std::vector<Entry<E>>& gens,
                                   std::set<E>& seen) {
  const std::size_t ng = gens.size();
  const long long total = static_cast<long long>(frontier.size() * ng);
  std::vector<E> products(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 16)
  for (long long k = 0; k < total; ++k) {
    const auto i = static_cast<std::size_t>(k) / ng;
    const auto j = static_cast<std::size_t>(k) % ng;
    products[static_cast<std::size_t>(k)] = gens[j].element * frontier[i].element;
  }
  std::vector<Entry<E>> next;
  for (std::size_t k = 0; k < products.size(); ++k)
    if (seen.insert(products[k]).second) next.push_back({std::move(products[k]), gens[k % ng].word + frontier[k / ng].word});
  return next;
}

}  // namespace germlab::par
