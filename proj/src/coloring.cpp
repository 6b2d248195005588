#include "nsd/coloring.hpp"

#include <algorithm>
#include <string>

#include "nsd/error.hpp"

namespace nsd {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Case1: return "case1";
    case Method::Case2: return "case2";
    case Method::Case3: return "case3";
    case Method::Case4: return "case4";
    case Method::Repaired: return "repaired";
    case Method::Fallback: return "fallback";
  }
  return "unknown";
}

std::vector<int> distinct_colors(std::initializer_list<const std::vector<int>*> lists) {
  std::vector<int> out;
  for (const auto* list : lists) out.insert(out.end(), list->begin(), list->end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void require_positive(const std::vector<int>& colors, std::size_t expected, std::string_view what) {
  if (colors.size() != expected) {
    throw Error(ErrorCode::MissingColor, std::string(what) + " colouring has " + std::to_string(colors.size()) +
                                             " entries, graph has " + std::to_string(expected));
  }
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] < 1) {
      throw Error(ErrorCode::MissingColor, std::string(what) + " " + std::to_string(i) + " is uncoloured");
    }
  }
}

}  // namespace

void require_complete(const Graph& g, const EdgeColoring& c) {
  require_positive(c.colors, g.size(), "edge");
}

void require_complete(const Graph& g, const TotalColoring& c) {
  require_positive(c.edge_colors, g.size(), "edge");
  require_positive(c.vertex_colors, g.order(), "vertex");
}

}  // namespace nsd
