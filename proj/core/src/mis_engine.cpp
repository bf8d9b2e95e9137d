// Maximal F-free families as maximal independent sets of the constraint hypergraph whose
// hyperedges are the labeled forbidden copies. Each node fixes some triples in (chosen) or out
// (rejected); branching takes a live constraint with the fewest undecided triples and splits on
// which of them is the first to be rejected. A rejected triple must end up completing a
// forbidden copy with chosen triples, so branches where that became impossible are cut.

#include <array>
#include <vector>

#include "engines.hpp"
#include "parallel.hpp"
#include "tripsys/errors.hpp"

namespace tripsys::detail {
namespace {

template <std::size_t W>
class MisSearch {
 public:
  using Bits = BitArray<W>;

  struct Frame {
    Bits in, out;
  };

  MisSearch(int n, std::span<const Constraint> constraints)
      : m_(triple_count(n)),
        conflict_(static_cast<std::size_t>(m_)),
        incident_(static_cast<std::size_t>(m_)) {
    all_.set_prefix(static_cast<std::size_t>(m_));
    for (const Constraint& c : constraints) {
      for (int e : c)
        if (e < 0 || e >= m_) throw InvalidArgument("constraint element out of range");
      switch (c.size()) {
        case 1:
          singles_.set(static_cast<std::size_t>(c[0]));
          break;
        case 2:
          conflict_[c[0]].set(static_cast<std::size_t>(c[1]));
          conflict_[c[1]].set(static_cast<std::size_t>(c[0]));
          break;
        case 3: {
          const int id = static_cast<int>(triples_.size());
          triples_.push_back({c[0], c[1], c[2]});
          for (int e : c) incident_[e].push_back(id);
          break;
        }
        default:
          throw InvalidArgument("constraints must have 1 to 3 elements");
      }
    }
    root_.out = singles_;
  }

  std::vector<Frame> split(std::size_t target) const {
    std::vector<Frame> frames{root_};
    for (int round = 0; round < 4 && frames.size() < target; ++round) {
      std::vector<Frame> next;
      for (const Frame& f : frames) {
        if (!expand(f, [&](Frame child) { next.push_back(std::move(child)); })) next.push_back(f);
      }
      frames = std::move(next);
    }
    return frames;
  }

  template <typename Report>
  void run(const Frame& f, Report&& report) const {
    if (!expand(f, [&](const Frame& child) { run(child, report); })) {
      // Nothing left to branch on: every undecided triple can be chosen together.
      if (has_all_witnesses(f)) report(f.in | (all_ - f.in - f.out));
    }
  }

 private:
  // Emits the children of f (already pruned); returns false when f is a leaf.
  template <typename Emit>
  bool expand(const Frame& f, Emit&& emit) const {
    const Bits free = all_ - f.in - f.out;
    std::array<int, 3> pick{};
    int k = choose(f, free, pick);
    if (k == 0) return false;
    for (int i = 0; i < k; ++i) {
      Frame child = f;
      Bits added;
      for (int j = 0; j < i; ++j) {
        child.in.set(static_cast<std::size_t>(pick[j]));
        added.set(static_cast<std::size_t>(pick[j]));
      }
      child.out.set(static_cast<std::size_t>(pick[i]));
      if (!propagate(child, added)) continue;
      if (!has_all_witnesses(child)) continue;
      emit(std::move(child));
    }
    return true;
  }

  // Live constraint inside chosen+undecided with the fewest (>= 2) undecided triples.
  int choose(const Frame& f, const Bits& free, std::array<int, 3>& pick) const {
    int found = 0;
    free.for_each([&](std::size_t a) {
      if (found) return;
      Bits partners = conflict_[a] & free;
      if (partners.any()) {
        pick = {static_cast<int>(a), static_cast<int>(partners.first()), 0};
        found = 2;
      }
    });
    if (found) return found;
    int best = 0;
    for (const auto& t : triples_) {
      int nfree = 0;
      bool dead = false;
      std::array<int, 3> fr{};
      for (int e : t) {
        if (f.out.test(static_cast<std::size_t>(e))) dead = true;
        else if (free.test(static_cast<std::size_t>(e))) fr[nfree++] = e;
      }
      if (dead || nfree < 2) continue;
      if (best == 0 || nfree < best) {
        best = nfree;
        pick = fr;
        if (best == 2) break;
      }
    }
    return best;
  }

  // Applies the consequences of newly chosen triples. False on a completed forbidden copy.
  bool propagate(Frame& f, const Bits& added) const {
    bool ok = true;
    added.for_each([&](std::size_t e) {
      if (!ok) return;
      if (conflict_[e].intersects(f.in)) {
        ok = false;
        return;
      }
      Bits forced = conflict_[e] - f.in;
      f.out |= forced;
      for (int id : incident_[e]) {
        const auto& t = triples_[id];
        int nin = 0, pending = -1;
        bool dead = false;
        for (int x : t) {
          if (f.out.test(static_cast<std::size_t>(x))) dead = true;
          else if (f.in.test(static_cast<std::size_t>(x))) ++nin;
          else pending = x;
        }
        if (dead) continue;
        if (nin == 3) {
          ok = false;
          return;
        }
        if (nin == 2) f.out.set(static_cast<std::size_t>(pending));
      }
    });
    return ok;
  }

  // Every rejected triple still has a forbidden copy it could complete.
  bool has_all_witnesses(const Frame& f) const {
    const Bits avail = all_ - f.out;
    bool ok = true;
    (f.out - singles_).for_each([&](std::size_t e) {
      if (!ok || conflict_[e].intersects(avail)) return;
      bool any = false;
      for (int id : incident_[e]) {
        int others = 0;
        for (int x : triples_[id])
          if (x != static_cast<int>(e) && avail.test(static_cast<std::size_t>(x))) ++others;
        if (others == 2) {
          any = true;
          break;
        }
      }
      if (!any) ok = false;
    });
    return ok;
  }

  int m_;
  Bits all_, singles_;
  std::vector<Bits> conflict_;
  std::vector<std::array<int, 3>> triples_;
  std::vector<std::vector<int>> incident_;
  Frame root_;
};

}  // namespace

void run_mis_engine(int n, std::span<const Constraint> constraints, int threads,
                    const EdgeSetSink& sink) {
  with_words(triple_count(n), [&]<std::size_t W>() {
    MisSearch<W> search(n, constraints);
    auto frames = search.split(threads <= 1 ? 1 : static_cast<std::size_t>(threads) * 8);
    parallel_for(frames.size(), threads, [&](std::size_t worker, std::size_t i) {
      search.run(frames[i], [&](const BitArray<W>& r) { sink(worker, EdgeSet::from(r)); });
    });
  });
}

}  // namespace tripsys::detail
