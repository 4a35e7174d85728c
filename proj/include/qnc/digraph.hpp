#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qnc/errors.hpp"

namespace qnc {

// Simple directed graph: no self-loops, at most one arc per ordered pair.
// Nodes are referred to by index; each carries an opaque string label.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::vector<std::string> labels);

  int node_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const;

  // Inserting an existing arc is a no-op; self-loops are rejected.
  void add_arc(int from, int to);
  bool has_arc(int from, int to) const;
  std::size_t arc_count() const { return arcs_.size(); }
  const std::set<std::pair<int, int>>& arcs() const { return arcs_; }

  std::vector<std::vector<int>> out_neighbors() const;
  std::vector<std::vector<int>> in_neighbors() const;
  std::pair<std::vector<int>, std::vector<int>> degrees() const;  // (out, in)

  std::string to_dot(const std::string& name = "G") const;

 private:
  void check_node(int v) const;

  std::vector<std::string> labels_;
  std::set<std::pair<int, int>> arcs_;
};

// Partition of the node set, with per-component structure flags.
struct ComponentReport {
  struct Component {
    std::vector<int> nodes;     // ascending
    std::size_t arc_count = 0;  // arcs with both endpoints inside
    bool strongly_connected = false;
    bool directed_cycle = false;  // size >= 2, one cycle through all nodes
  };

  std::vector<Component> components;  // ordered by smallest contained node
  std::vector<int> component_of;      // node index -> component index

  std::size_t size() const { return components.size(); }
  const Component& of_node(int v) const { return components[component_of[v]]; }
  std::map<std::size_t, std::size_t> size_histogram() const;
  bool same_partition(const ComponentReport& other) const;
};

ComponentReport scc(const Digraph& g);
ComponentReport weak_components(const Digraph& g);

// True iff every node has equal in- and out-degree.
bool is_balanced(const Digraph& g);

// All graphs must carry identical label vectors.
Digraph graph_union(const std::vector<Digraph>& gs);

enum class Connectivity { Disconnected, Weak, QuasiStrong, Strong, Full };

// Strongest class that applies. A single-node graph is fully connected.
Connectivity classify_connectivity(const Digraph& g);
std::string to_string(Connectivity c);

}  // namespace qnc
