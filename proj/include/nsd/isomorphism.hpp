#pragma once

#include <string>

#include "nsd/graph.hpp"

namespace nsd {

/// Exhaustive search over all n! vertex maps. Intended for n <= 8.
bool isomorphic_by_permutation(const Graph& a, const Graph& b);

/// Isomorphism-invariant certificate: the lexicographically smallest graph6
/// string over every leaf of an individualization-refinement tree seeded with
/// (degree, triangle count) vertex classes. Equal certificates iff isomorphic.
std::string canonical_certificate(const Graph& g);

/// Permutation search for n <= 8, certificate comparison above.
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace nsd
