// Directed acyclic network instances: node/edge model, the random growth
// family used in the experiments, and the five-node two-description fixture.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rnf {

struct Edge {
    int from = 0;
    int to = 0;
    double capacity = 0.0;  // bits per source symbol
};

// A capacitated DAG with designated source and sink node sets. Instances are
// immutable after construction; all operations treat them as read-only.
struct Network {
    std::vector<int> node_ids;
    std::vector<Edge> edges;
    std::vector<int> sources;
    std::vector<int> sinks;
    std::map<int, double> sink_weights;  // defaults to 1.0 per sink

    bool has_node(int id) const;
    bool has_edge(int from, int to) const;
    double sink_weight(int t) const;
};

// Throws std::invalid_argument describing the first violated invariant:
// duplicate nodes, self loops, parallel edges, edges to unknown nodes,
// negative capacities, cycles, non-positive sink weights, unreachable sinks.
void validate_network(const Network& net);

// Topological order of node ids; throws if the graph has a cycle.
std::vector<int> topological_order(const Network& net);

// Dense-index view used by the solver and flow machinery. Node ids are
// mapped to 0..n-1 in node_ids order.
struct NetworkIndex {
    explicit NetworkIndex(const Network& net);

    const Network& net;
    std::map<int, int> id_to_index;
    std::vector<std::vector<int>> in_edges;   // node index -> edge indices
    std::vector<std::vector<int>> out_edges;  // node index -> edge indices
    std::vector<int> topo_indices;            // node indices in topological order
    std::vector<bool> is_source;
    std::vector<bool> is_sink;

    int node_count() const { return static_cast<int>(net.node_ids.size()); }
    int edge_count() const { return static_cast<int>(net.edges.size()); }
    int index_of(int node_id) const;
};

struct GrowthParams {
    int n_nodes = 1;         // N
    int in_degree_draws = 1; // m, parent draws per new node (with replacement)
    int c_max = 1;           // capacities drawn uniformly from {1..c_max}
    std::uint64_t seed = 0;

    void validate() const;  // throws std::invalid_argument
};

// Random growth DAG. Starts from node 0; each new node i draws m parents
// uniformly with replacement from {0..i-1}; duplicate draws collapse to a
// single edge. Each distinct edge gets an integer capacity in {1..c_max}.
// Node 0 is the only source; all other nodes are sinks with weight 1.
//
// RNG is std::mt19937_64 seeded with params.seed; parent draws and capacity
// draws use modular reduction (gen() % n), so instances are bit-reproducible
// across platforms. Parents of a node are deduplicated and sorted ascending
// before their capacities are drawn.
Network grow_dag(const GrowthParams& params);

// The five-node fixture: source 1, sinks {2,3,4,5}, edges
// (1,2),(1,3),(2,4),(2,5),(3,4),(3,5), all with the given capacity.
Network fig1_network(double capacity);

bool operator==(const Edge& a, const Edge& b);
bool operator==(const Network& a, const Network& b);

}  // namespace rnf
