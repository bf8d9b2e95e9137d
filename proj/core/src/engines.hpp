#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "tripsys/hypergraph.hpp"
#include "tripsys/patterns.hpp"

namespace tripsys::detail {

// Receives (worker index, labeled edge set). With threads == 1 the worker is always 0 and
// families arrive in search order.
using EdgeSetSink = std::function<void(std::size_t, const EdgeSet&)>;

void run_clique_engine(int n, int threads, const EdgeSetSink& sink);
void run_mis_engine(int n, std::span<const Constraint> constraints, int threads,
                    const EdgeSetSink& sink);

// Calls f.template operator()<W>() with the smallest supported word count holding `bits`.
template <typename F>
decltype(auto) with_words(int bits, F&& f) {
  if (bits <= 64) return f.template operator()<1>();
  if (bits <= 128) return f.template operator()<2>();
  if (bits <= 256) return f.template operator()<4>();
  return f.template operator()<EdgeSet::kWords>();
}

}  // namespace tripsys::detail
