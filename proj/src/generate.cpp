#include "nsd/generate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "nsd/error.hpp"
#include "nsd/graph6.hpp"
#include "nsd/isomorphism.hpp"

namespace nsd {
namespace {

void require_even_cubic_order(int n) {
  if (n % 2 != 0) throw Error(ErrorCode::OddN, "cubic graphs need an even vertex count, got " + std::to_string(n));
  if (n < 4) throw Error(ErrorCode::Unsupported, "cubic graphs need n >= 4, got " + std::to_string(n));
}

// Grows connected cubic graphs one stub pairing at a time. New vertices are
// only ever attached to reached ones, so every leaf is connected. Each active
// vertex takes partners in increasing label order, which removes most
// labelled duplicates without losing any isomorphism class.
class StubMatcher {
 public:
  StubMatcher(int n, StubOrder order) : n_(n), order_(order), adj_(n, 0), degree_(n, 0), last_(n, -1) {}

  template <typename Visit>
  void run(Visit&& visit, EnumerationStats& stats) {
    reached_ = 1;
    extend(visit, stats);
  }

 private:
  int pick_active() const {
    if (order_ == StubOrder::LowestFirst) {
      for (int v = 0; v < reached_; ++v)
        if (degree_[v] < 3) return v;
    } else {
      for (int v = reached_ - 1; v >= 0; --v)
        if (degree_[v] < 3) return v;
    }
    return -1;
  }

  void link(int a, int b) {
    adj_[a] |= 1ULL << b;
    adj_[b] |= 1ULL << a;
    ++degree_[a];
    ++degree_[b];
  }

  void unlink(int a, int b) {
    adj_[a] &= ~(1ULL << b);
    adj_[b] &= ~(1ULL << a);
    --degree_[a];
    --degree_[b];
  }

  template <typename Visit>
  void extend(Visit& visit, EnumerationStats& stats) {
    const int u = pick_active();
    if (u < 0) {
      if (reached_ == n_) {
        ++stats.labeled_graphs;
        visit(snapshot());
      } else {
        ++stats.dead_ends;
      }
      return;
    }
    const int saved_last = last_[u];
    for (int w = std::max(saved_last + 1, 0); w < reached_; ++w) {
      if (w == u || degree_[w] == 3 || ((adj_[u] >> w) & 1ULL)) continue;
      link(u, w);
      last_[u] = w;
      extend(visit, stats);
      last_[u] = saved_last;
      unlink(u, w);
    }
    if (reached_ < n_) {
      const int w = reached_++;
      link(u, w);
      last_[u] = w;
      extend(visit, stats);
      last_[u] = saved_last;
      unlink(u, w);
      --reached_;
    }
  }

  Graph snapshot() const {
    std::vector<Edge> edges;
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if ((adj_[a] >> b) & 1ULL) edges.push_back({a, b});
    return Graph(n_, std::move(edges));
  }

  int n_;
  StubOrder order_;
  std::vector<unsigned long long> adj_;
  std::vector<int> degree_;
  std::vector<int> last_;
  int reached_ = 0;
};

}  // namespace

Graph random_cubic(int n, std::uint64_t seed) {
  require_even_cubic_order(n);
  std::mt19937_64 rng(seed);
  std::vector<int> stubs(3 * static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < kConfigurationRetryBudget; ++attempt) {
    for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<int>(i / 3);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      if (stubs[i] == stubs[i + 1]) {
        simple = false;
        break;
      }
      edges.push_back(Edge::make(stubs[i], stubs[i + 1]));
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return Graph(n, std::move(edges));
  }
  throw Error(ErrorCode::GenerationExhausted,
              std::to_string(kConfigurationRetryBudget) + " rejected pairings for n = " + std::to_string(n));
}

std::vector<Graph> enumerate_cubic(int n, StubOrder order) {
  EnumerationStats stats;
  return enumerate_cubic(n, order, stats);
}

std::vector<Graph> enumerate_cubic(int n, StubOrder order, EnumerationStats& stats) {
  if (n < 4 || n > 12 || n % 2 != 0) {
    throw Error(ErrorCode::Unsupported, "enumeration covers n in {4,6,8,10,12}, got " + std::to_string(n));
  }
  std::map<std::string, int> classes;
  StubMatcher matcher(n, order);
  matcher.run(
      [&](const Graph& g) { ++classes[canonical_certificate(g)]; },
      stats);
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (const auto& entry : classes) out.push_back(parse_graph6(entry.first));
  return out;
}

}  // namespace nsd
