#include "nsd/labeling_search.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_set>

namespace nsd {

std::vector<int> LabelingSpace::sums(std::span<const int> labels) const {
  const Graph& g = *graph;
  std::vector<int> s(g.order(), 0);
  for (int id = 0; id < g.size(); ++id) {
    s[g.edge(id).u] += labels[id];
    s[g.edge(id).v] += labels[id];
  }
  if (with_vertices) {
    for (int v = 0; v < g.order(); ++v) s[v] += labels[vertex_element(v)];
  }
  return s;
}

int LabelingSpace::conflict_count(std::span<const int> labels) const {
  const std::vector<int> s = sums(labels);
  int c = 0;
  for (const Edge& e : graph->edges()) c += s[e.u] == s[e.v];
  return c;
}

namespace {

std::string encode(const std::vector<int>& labels) { return std::string(labels.begin(), labels.end()); }

std::vector<int> decode(const std::string& key) { return std::vector<int>(key.begin(), key.end()); }

struct QueueEntry {
  int conflicts;
  long long seq;
  std::string labels;

  bool operator>(const QueueEntry& o) const {
    return conflicts != o.conflicts ? conflicts > o.conflicts : seq > o.seq;
  }
};

// Conflict edges touching any of `affected`, each counted once.
int local_conflicts(const Graph& g, const std::vector<int>& sums, std::span<const int> affected) {
  int c = 0;
  for (std::size_t i = 0; i < affected.size(); ++i) {
    const int a = affected[i];
    for (int id : g.incident_edges(a)) {
      const int b = g.edge(id).other(a);
      // An edge between two affected vertices is seen twice; keep the first.
      bool seen_before = false;
      for (std::size_t j = 0; j < i; ++j) seen_before |= affected[j] == b;
      if (!seen_before && sums[a] == sums[b]) ++c;
    }
  }
  return c;
}

}  // namespace

RepairResult best_first_repair(const LabelingSpace& space, std::vector<int> start,
                               std::span<const int> edge_palette, std::span<const int> vertex_palette,
                               long long budget) {
  const Graph& g = *space.graph;
  RepairResult result;
  const int start_conflicts = space.conflict_count(start);
  if (start_conflicts == 0) {
    result.solved = true;
    result.labels = std::move(start);
    return result;
  }

  std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> open;
  std::unordered_set<std::string> visited;
  long long seq = 0;
  visited.insert(encode(start));
  open.push({start_conflicts, seq++, encode(start)});

  std::vector<char> candidate(space.elements());
  while (!open.empty() && result.expanded < budget) {
    QueueEntry node = open.top();
    open.pop();
    ++result.expanded;

    std::vector<int> labels = decode(node.labels);
    std::vector<int> sums = space.sums(labels);

    std::fill(candidate.begin(), candidate.end(), 0);
    for (const Edge& e : g.edges()) {
      if (sums[e.u] != sums[e.v]) continue;
      for (int end : {e.u, e.v}) {
        std::vector<int> ball{end};
        for (int w : g.neighbors(end)) ball.push_back(w);
        for (int s : ball) {
          for (int id : g.incident_edges(s)) candidate[id] = 1;
          if (space.with_vertices) candidate[space.vertex_element(s)] = 1;
        }
      }
    }

    for (int el = 0; el < space.elements(); ++el) {
      if (!candidate[el]) continue;
      std::vector<int> affected;
      if (space.is_vertex(el)) {
        affected = {space.vertex_of(el)};
      } else {
        affected = {g.edge(el).u, g.edge(el).v};
      }
      const int before = local_conflicts(g, sums, affected);
      const int old = labels[el];
      const auto palette = space.is_vertex(el) ? vertex_palette : edge_palette;
      for (int c : palette) {
        if (c == old) continue;
        for (int a : affected) sums[a] += c - old;
        const int after = local_conflicts(g, sums, affected);
        for (int a : affected) sums[a] -= c - old;

        labels[el] = c;
        std::string key = encode(labels);
        labels[el] = old;
        if (!visited.insert(key).second) continue;
        const int child_conflicts = node.conflicts - before + after;
        if (child_conflicts == 0) {
          result.solved = true;
          result.labels = decode(key);
          return result;
        }
        open.push({child_conflicts, seq++, std::move(key)});
      }
    }
  }
  return result;
}

namespace {

class Exhaustive {
 public:
  Exhaustive(const LabelingSpace& space, int k, long long cap)
      : space_(space), g_(*space.graph), k_(k), cap_(cap) {
    const int n = g_.order();
    labels_.assign(space.elements(), 0);
    need_.resize(n);
    assigned_.assign(n, 0);
    sum_.assign(n, 0);
    for (int v = 0; v < n; ++v) need_[v] = g_.degree(v) + (space.with_vertices ? 1 : 0);

    const std::vector<int> bfs = bfs_order(g_);
    if (space.with_vertices) {
      for (int v : bfs) order_.push_back(space.vertex_element(v));
    }
    std::vector<char> placed(g_.size(), 0);
    for (int v : bfs) {
      for (int id : g_.incident_edges(v)) {
        if (!placed[id]) {
          placed[id] = 1;
          order_.push_back(id);
        }
      }
    }
  }

  ExactSearchResult run() {
    ExactSearchResult r;
    const bool found = descend(0);
    r.nodes = nodes_;
    if (found) {
      r.status = SearchStatus::Found;
      r.labels = labels_;
    } else {
      r.status = capped_ ? SearchStatus::BudgetExceeded : SearchStatus::Infeasible;
    }
    return r;
  }

 private:
  int touched(int el, int out[2]) const {
    if (space_.is_vertex(el)) {
      out[0] = space_.vertex_of(el);
      return 1;
    }
    out[0] = g_.edge(el).u;
    out[1] = g_.edge(el).v;
    return 2;
  }

  bool clashes(int a) const {
    if (assigned_[a] != need_[a]) return false;
    for (int z : g_.neighbors(a)) {
      if (assigned_[z] == need_[z] && sum_[z] == sum_[a]) return true;
    }
    return false;
  }

  bool descend(std::size_t pos) {
    if (pos == order_.size()) return true;
    const int el = order_[pos];
    int aff[2];
    const int count = touched(el, aff);
    for (int c = 1; c <= k_; ++c) {
      if (cap_ > 0 && nodes_ >= cap_) {
        capped_ = true;
        return false;
      }
      ++nodes_;
      labels_[el] = c;
      for (int i = 0; i < count; ++i) {
        sum_[aff[i]] += c;
        ++assigned_[aff[i]];
      }
      bool ok = true;
      for (int i = 0; i < count && ok; ++i) ok = !clashes(aff[i]);
      if (ok && descend(pos + 1)) return true;
      for (int i = 0; i < count; ++i) {
        sum_[aff[i]] -= c;
        --assigned_[aff[i]];
      }
      labels_[el] = 0;
      if (capped_) return false;
    }
    return false;
  }

  const LabelingSpace& space_;
  const Graph& g_;
  int k_;
  long long cap_;
  long long nodes_ = 0;
  bool capped_ = false;
  std::vector<int> order_;
  std::vector<int> labels_;
  std::vector<int> need_, assigned_, sum_;
};

}  // namespace

ExactSearchResult exhaustive_labeling(const LabelingSpace& space, int k, long long node_cap) {
  return Exhaustive(space, k, node_cap).run();
}

}  // namespace nsd
