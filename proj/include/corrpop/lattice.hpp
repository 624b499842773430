#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "corrpop/sets.hpp"

namespace corrpop {

/// Transitive reduction of (members, subset-of). Edges point upward
/// (from covered to covering node).
struct HasseDiagram {
  std::vector<Correlation> nodes;  // sorted lexicographically
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<bool> is_gamma;      // bit 0 set (autocorrelation)
  std::vector<std::vector<std::size_t>> up;  // covers above each node
};

HasseDiagram hasse(const std::vector<Correlation>& members);

// Meet = bitwise AND (Delta_n is closed under intersection); join = least
// member containing the union, found over the enumerated Delta_n.
Correlation meet(const Correlation& t, const Correlation& u);
Correlation join(const Correlation& t, const Correlation& u);

struct JordanDedekindResult {
  bool satisfied = true;
  // Two maximal chains with the same endpoints but different lengths,
  // present when the condition fails.
  std::vector<Correlation> chain_short;
  std::vector<Correlation> chain_long;
};
JordanDedekindResult check_jordan_dedekind(const std::vector<Correlation>& members);

std::string export_dot(const HasseDiagram& diagram);

}  // namespace corrpop
