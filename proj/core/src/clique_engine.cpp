// Maximal intersecting families are exactly the maximal cliques of the graph on C(n,3)
// triples in which two triples are adjacent iff they share a vertex. Enumerated with
// Bron-Kerbosch, pivoting on the vertex with the most candidate neighbours.

#include <vector>

#include "engines.hpp"
#include "parallel.hpp"

namespace tripsys::detail {
namespace {

template <std::size_t W>
class CliqueSearch {
 public:
  using Bits = BitArray<W>;

  struct Frame {
    Bits r, p, x;
  };

  explicit CliqueSearch(int n) : m_(triple_count(n)), adj_(static_cast<std::size_t>(m_)) {
    Bits all;
    all.set_prefix(static_cast<std::size_t>(m_));
    for (int t = 0; t < m_; ++t) {
      adj_[t] = all - Bits::from(disjoint_triples(t));
      adj_[t].reset(static_cast<std::size_t>(t));
    }
    root_.p = all;
  }

  // Expands the tree breadth-first until there are enough independent subproblems.
  std::vector<Frame> split(std::size_t target) const {
    std::vector<Frame> frames{root_};
    for (int round = 0; round < 3 && frames.size() < target; ++round) {
      std::vector<Frame> next;
      for (const Frame& f : frames) {
        if (f.p.none()) {
          next.push_back(f);
          continue;
        }
        expand(f, [&](Frame child) { next.push_back(std::move(child)); });
      }
      frames = std::move(next);
    }
    return frames;
  }

  template <typename Report>
  void run(const Frame& f, Report&& report) const {
    if (f.p.none()) {
      if (f.x.none()) report(f.r);
      return;
    }
    expand(f, [&](const Frame& child) { run(child, report); });
  }

 private:
  template <typename Emit>
  void expand(const Frame& f, Emit&& emit) const {
    const int u = pivot(f);
    Bits p = f.p;
    Bits x = f.x;
    Bits branch = p - adj_[u];
    branch.for_each([&](std::size_t v) {
      Frame child;
      child.r = f.r;
      child.r.set(v);
      child.p = p & adj_[v];
      child.x = x & adj_[v];
      emit(std::move(child));
      p.reset(v);
      x.set(v);
    });
  }

  int pivot(const Frame& f) const {
    int best = -1, best_deg = -1;
    (f.p | f.x).for_each([&](std::size_t u) {
      int d = f.p.intersection_count(adj_[u]);
      if (d > best_deg) {
        best_deg = d;
        best = static_cast<int>(u);
      }
    });
    return best;
  }

  int m_;
  std::vector<Bits> adj_;
  Frame root_;
};

}  // namespace

void run_clique_engine(int n, int threads, const EdgeSetSink& sink) {
  with_words(triple_count(n), [&]<std::size_t W>() {
    CliqueSearch<W> search(n);
    auto report = [&](std::size_t worker, const BitArray<W>& r) { sink(worker, EdgeSet::from(r)); };
    if (threads <= 1) {
      search.run(search.split(1).front(),
                 [&](const BitArray<W>& r) { report(0, r); });
      return;
    }
    auto frames = search.split(static_cast<std::size_t>(threads) * 8);
    parallel_for(frames.size(), threads, [&](std::size_t worker, std::size_t i) {
      search.run(frames[i], [&](const BitArray<W>& r) { report(worker, r); });
    });
  });
}

}  // namespace tripsys::detail
