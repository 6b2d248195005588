#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include "nsd/graph.hpp"

namespace nsd {

/// Colour per edge id. 0 marks an uncoloured edge.
struct EdgeColoring {
  std::vector<int> colors;
};

/// Colour per edge id and per vertex. 0 marks an uncoloured element.
struct TotalColoring {
  std::vector<int> edge_colors;
  std::vector<int> vertex_colors;
};

/// sigma(v) for edge colourings, t(v) for total colourings.
using VertexSums = std::vector<int>;
using TotalSums = std::vector<int>;

struct VerificationReport {
  bool ok = true;
  std::vector<Edge> conflicts;  // edges whose endpoints carry equal sums
};

/// How a colouring was obtained. The four case tags mean the construction
/// for that case verified on its own.
enum class Method { Case1, Case2, Case3, Case4, Repaired, Fallback };

std::string_view to_string(Method m);

struct SolveStats {
  bool swapped_sides = false;     // X and Y exchanged before dispatch
  bool pairing_deadlock = false;  // some leftover pair found no usable e_z
  int pair_operations = 0;
  int rule_applications = 0;      // subcase rewrites applied
  int conflicts_before_repair = 0;
  long long repair_steps = 0;
  long long fallback_nodes = 0;
};

template <typename Coloring>
struct SolveOutcome {
  Coloring coloring;
  Method method = Method::Fallback;
  Method dispatched = Method::Case4;  // case chosen from (a1, b1, a2, b2)
  std::vector<int> colors_used;       // ascending, distinct
  SolveStats stats;

  int max_color() const { return colors_used.empty() ? 0 : colors_used.back(); }
};

/// Distinct values of the given colour lists, ascending.
std::vector<int> distinct_colors(std::initializer_list<const std::vector<int>*> lists);

/// Throws Error(MissingColor) unless every edge has a positive colour.
void require_complete(const Graph& g, const EdgeColoring& c);
/// Throws Error(MissingColor) unless every edge and vertex has a positive colour.
void require_complete(const Graph& g, const TotalColoring& c);

}  // namespace nsd
