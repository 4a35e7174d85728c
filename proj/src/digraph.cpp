#include "qnc/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qnc {

Digraph::Digraph(std::vector<std::string> labels) : labels_(std::move(labels)) {}

const std::string& Digraph::label(int v) const {
  check_node(v);
  return labels_[v];
}

void Digraph::check_node(int v) const {
  if (v < 0 || v >= node_count()) {
    throw ArgumentError("digraph: node index " + std::to_string(v) +
                        " out of range [0, " + std::to_string(node_count()) + ")");
  }
}

void Digraph::add_arc(int from, int to) {
  check_node(from);
  check_node(to);
  if (from == to) {
    throw ArgumentError("digraph: self-loop at node " + std::to_string(from));
  }
  arcs_.emplace(from, to);
}

bool Digraph::has_arc(int from, int to) const {
  return arcs_.count({from, to}) > 0;
}

std::vector<std::vector<int>> Digraph::out_neighbors() const {
  std::vector<std::vector<int>> adj(node_count());
  for (const auto& [u, v] : arcs_) adj[u].push_back(v);
  return adj;
}

std::vector<std::vector<int>> Digraph::in_neighbors() const {
  std::vector<std::vector<int>> adj(node_count());
  for (const auto& [u, v] : arcs_) adj[v].push_back(u);
  return adj;
}

std::pair<std::vector<int>, std::vector<int>> Digraph::degrees() const {
  std::vector<int> out(node_count(), 0), in(node_count(), 0);
  for (const auto& [u, v] : arcs_) {
    ++out[u];
    ++in[v];
  }
  return {out, in};
}

std::string Digraph::to_dot(const std::string& name) const {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  for (const auto& l : labels_) os << "  \"" << l << "\";\n";
  for (const auto& [u, v] : arcs_) {
    os << "  \"" << labels_[u] << "\" -> \"" << labels_[v] << "\";\n";
  }
  os << "}\n";
  return os.str();
}

std::map<std::size_t, std::size_t> ComponentReport::size_histogram() const {
  std::map<std::size_t, std::size_t> hist;
  for (const auto& c : components) ++hist[c.nodes.size()];
  return hist;
}

bool ComponentReport::same_partition(const ComponentReport& other) const {
  if (component_of.size() != other.component_of.size()) return false;
  if (components.size() != other.components.size()) return false;
  // Components are canonically ordered by smallest node, so equal partitions
  // have identical node lists in identical order.
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].nodes != other.components[i].nodes) return false;
  }
  return true;
}

namespace {

// Shared canonicalization: raw component id per node -> ordered report with
// per-component arc counts and structure flags.
ComponentReport finalize_report(const Digraph& g, const std::vector<int>& raw,
                                int raw_count) {
  const int n = g.node_count();
  std::vector<std::vector<int>> raw_nodes(raw_count);
  for (int v = 0; v < n; ++v) raw_nodes[raw[v]].push_back(v);

  std::vector<int> order(raw_count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return raw_nodes[a].front() < raw_nodes[b].front();
  });

  ComponentReport report;
  report.component_of.assign(n, -1);
  report.components.resize(raw_count);
  for (int rank = 0; rank < raw_count; ++rank) {
    auto& comp = report.components[rank];
    comp.nodes = std::move(raw_nodes[order[rank]]);
    for (int v : comp.nodes) report.component_of[v] = rank;
  }

  // Internal arc counts and in/out degrees restricted to each component.
  std::vector<int> internal_out(n, 0), internal_in(n, 0);
  for (const auto& [u, v] : g.arcs()) {
    if (report.component_of[u] == report.component_of[v]) {
      ++report.components[report.component_of[u]].arc_count;
      ++internal_out[u];
      ++internal_in[v];
    }
  }
  for (auto& comp : report.components) {
    const std::size_t m = comp.nodes.size();
    bool cycle = m >= 2 && comp.arc_count == m;
    if (cycle) {
      for (int v : comp.nodes) {
        if (internal_out[v] != 1 || internal_in[v] != 1) {
          cycle = false;
          break;
        }
      }
    }
    comp.directed_cycle = cycle;
  }
  return report;
}

}  // namespace

ComponentReport scc(const Digraph& g) {
  const int n = g.node_count();
  const auto adj = g.out_neighbors();

  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> call;  // (node, next child slot)
  int next_index = 0;
  int comp_count = 0;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      const int v = call.back().first;
      if (call.back().second == 0) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      bool descended = false;
      while (call.back().second < adj[v].size()) {
        const int w = adj[v][call.back().second++];
        if (index[w] == -1) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        while (true) {
          const int w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = comp_count;
          if (w == v) break;
        }
        ++comp_count;
      }
      call.pop_back();
      if (!call.empty()) {
        const int parent = call.back().first;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }

  ComponentReport report = finalize_report(g, comp, comp_count);
  for (auto& c : report.components) c.strongly_connected = true;
  return report;
}

ComponentReport weak_components(const Digraph& g) {
  const int n = g.node_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const auto& [u, v] : g.arcs()) parent[find(u)] = find(v);

  std::vector<int> raw(n, -1);
  int count = 0;
  for (int v = 0; v < n; ++v) {
    const int r = find(v);
    if (raw[r] == -1) raw[r] = count++;
    raw[v] = raw[r];
  }

  ComponentReport report = finalize_report(g, raw, count);
  const ComponentReport strong = scc(g);
  for (auto& comp : report.components) {
    bool one_scc = true;
    for (int v : comp.nodes) {
      if (strong.component_of[v] != strong.component_of[comp.nodes.front()]) {
        one_scc = false;
        break;
      }
    }
    comp.strongly_connected = one_scc;
  }
  return report;
}

bool is_balanced(const Digraph& g) {
  const auto [out, in] = g.degrees();
  return out == in;
}

Digraph graph_union(const std::vector<Digraph>& gs) {
  if (gs.empty()) throw ArgumentError("graph_union: empty graph list");
  Digraph result = gs.front();
  for (std::size_t i = 1; i < gs.size(); ++i) {
    if (gs[i].labels() != result.labels()) {
      throw ArgumentError("graph_union: node sets differ");
    }
    for (const auto& [u, v] : gs[i].arcs()) result.add_arc(u, v);
  }
  return result;
}

Connectivity classify_connectivity(const Digraph& g) {
  const int n = g.node_count();
  if (n <= 1) return Connectivity::Full;
  if (g.arc_count() == static_cast<std::size_t>(n) * (n - 1)) {
    return Connectivity::Full;
  }

  const ComponentReport strong = scc(g);
  if (strong.size() == 1) return Connectivity::Strong;

  // Quasi-strong: some node reaches every other. A root can only live in the
  // unique source component of the condensation.
  std::vector<char> has_incoming(strong.size(), 0);
  for (const auto& [u, v] : g.arcs()) {
    if (strong.component_of[u] != strong.component_of[v]) {
      has_incoming[strong.component_of[v]] = 1;
    }
  }
  int source = -1;
  int source_count = 0;
  for (std::size_t c = 0; c < strong.size(); ++c) {
    if (!has_incoming[c]) {
      source = static_cast<int>(c);
      ++source_count;
    }
  }
  if (source_count == 1) {
    const auto adj = g.out_neighbors();
    std::vector<char> seen(n, 0);
    std::vector<int> queue{strong.components[source].nodes.front()};
    seen[queue.front()] = 1;
    int reached = 1;
    while (!queue.empty()) {
      const int v = queue.back();
      queue.pop_back();
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          queue.push_back(w);
        }
      }
    }
    if (reached == n) return Connectivity::QuasiStrong;
  }

  if (weak_components(g).size() == 1) return Connectivity::Weak;
  return Connectivity::Disconnected;
}

std::string to_string(Connectivity c) {
  switch (c) {
    case Connectivity::Disconnected: return "disconnected";
    case Connectivity::Weak: return "weakly connected";
    case Connectivity::QuasiStrong: return "quasi-strongly connected";
    case Connectivity::Strong: return "strongly connected";
    case Connectivity::Full: return "fully connected";
  }
  return "unknown";
}

}  // namespace qnc
