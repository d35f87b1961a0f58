#pragma once

#include <cstddef>
#include <string>

#include "gemforge/rdf/graph.hpp"

namespace gemforge::testing {

inline constexpr std::size_t kMaxIsomorphismBlanks = 12;

/// True when a bijection between the blank nodes of `a` and `b` maps one
/// triple set onto the other. Exhaustive search; throws std::length_error
/// past kMaxIsomorphismBlanks blank nodes per graph.
bool isomorphic(const rdf::Graph& a, const rdf::Graph& b);

/// Human-readable difference for failure messages (ground triples only).
std::string describe_difference(const rdf::Graph& a, const rdf::Graph& b);

}  // namespace gemforge::testing
