#pragma once

#include <vector>

#include "eon/model.hpp"

namespace eon {

// A chained sequence of directed links. Node sequence and per-link lengths
// are stored so span arithmetic never needs the NetworkModel again.
struct Path {
  std::vector<LinkId> links;
  std::vector<NodeId> nodes;  // size links+1, begin of first .. end of last
  std::vector<double> link_lengths_km;
  double length_km = 0.0;

  bool empty() const { return links.empty(); }
};

// Minimal-length path from s to d. Equal-length candidates are broken by the
// lexicographically smallest node-id sequence so results are reproducible.
Path shortest_path(const NetworkModel& net, NodeId s, NodeId d);

// Amplified spans traversed by a path: per link, ceil(length / span length).
int span_count(const Path& path, const PhysParams& phys);

// Spans on links common to both paths (directed link identity).
int shared_spans(const Path& a, const Path& b, const PhysParams& phys);

// Pairwise shared-span table over a set of routes; diagonal holds each
// route's own span count.
struct SharedSpanMatrix {
  std::vector<std::vector<int>> counts;

  int at(int i, int j) const { return counts[i][j]; }
  int size() const { return static_cast<int>(counts.size()); }
};

SharedSpanMatrix build_shared_span_matrix(const std::vector<Path>& routes,
                                          const PhysParams& phys);

}  // namespace eon
