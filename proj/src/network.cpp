#include "rnf/network.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace rnf {

bool Network::has_node(int id) const {
    return std::find(node_ids.begin(), node_ids.end(), id) != node_ids.end();
}

bool Network::has_edge(int from, int to) const {
    for (const Edge& e : edges)
        if (e.from == from && e.to == to) return true;
    return false;
}

double Network::sink_weight(int t) const {
    auto it = sink_weights.find(t);
    return it == sink_weights.end() ? 1.0 : it->second;
}

bool operator==(const Edge& a, const Edge& b) {
    return a.from == b.from && a.to == b.to && a.capacity == b.capacity;
}

bool operator==(const Network& a, const Network& b) {
    return a.node_ids == b.node_ids && a.edges == b.edges && a.sources == b.sources &&
           a.sinks == b.sinks && a.sink_weights == b.sink_weights;
}

std::vector<int> topological_order(const Network& net) {
    NetworkIndex idx(net);
    std::vector<int> order;
    order.reserve(idx.topo_indices.size());
    for (int v : idx.topo_indices) order.push_back(net.node_ids[v]);
    return order;
}

NetworkIndex::NetworkIndex(const Network& n) : net(n) {
    for (size_t i = 0; i < net.node_ids.size(); ++i) {
        auto [it, fresh] = id_to_index.emplace(net.node_ids[i], static_cast<int>(i));
        if (!fresh) throw std::invalid_argument("duplicate node id " + std::to_string(net.node_ids[i]));
    }
    const int n_nodes = node_count();
    in_edges.assign(n_nodes, {});
    out_edges.assign(n_nodes, {});
    for (size_t ei = 0; ei < net.edges.size(); ++ei) {
        const Edge& e = net.edges[ei];
        int u = index_of(e.from);
        int v = index_of(e.to);
        out_edges[u].push_back(static_cast<int>(ei));
        in_edges[v].push_back(static_cast<int>(ei));
    }
    is_source.assign(n_nodes, false);
    is_sink.assign(n_nodes, false);
    for (int s : net.sources) is_source[index_of(s)] = true;
    for (int t : net.sinks) is_sink[index_of(t)] = true;

    // Kahn's algorithm; smallest-index tie break keeps the order deterministic.
    std::vector<int> indeg(n_nodes, 0);
    for (const Edge& e : net.edges) indeg[index_of(e.to)]++;
    std::set<int> ready;
    for (int v = 0; v < n_nodes; ++v)
        if (indeg[v] == 0) ready.insert(v);
    while (!ready.empty()) {
        int v = *ready.begin();
        ready.erase(ready.begin());
        topo_indices.push_back(v);
        for (int ei : out_edges[v]) {
            int w = index_of(net.edges[ei].to);
            if (--indeg[w] == 0) ready.insert(w);
        }
    }
    if (static_cast<int>(topo_indices.size()) != n_nodes)
        throw std::invalid_argument("graph has a cycle");
}

int NetworkIndex::index_of(int node_id) const {
    auto it = id_to_index.find(node_id);
    if (it == id_to_index.end())
        throw std::out_of_range("unknown node id " + std::to_string(node_id));
    return it->second;
}

void validate_network(const Network& net) {
    NetworkIndex idx(net);  // checks duplicate ids and acyclicity

    std::set<std::pair<int, int>> seen;
    for (const Edge& e : net.edges) {
        if (!net.has_node(e.from) || !net.has_node(e.to))
            throw std::invalid_argument("edge (" + std::to_string(e.from) + "," +
                                        std::to_string(e.to) + ") references an unknown node");
        if (e.from == e.to)
            throw std::invalid_argument("self loop at node " + std::to_string(e.from));
        if (!seen.insert({e.from, e.to}).second)
            throw std::invalid_argument("parallel edge (" + std::to_string(e.from) + "," +
                                        std::to_string(e.to) + ")");
        if (e.capacity < 0.0)
            throw std::invalid_argument("negative capacity on edge (" + std::to_string(e.from) +
                                        "," + std::to_string(e.to) + ")");
    }
    for (int s : net.sources)
        if (!net.has_node(s)) throw std::invalid_argument("unknown source node " + std::to_string(s));
    for (int t : net.sinks)
        if (!net.has_node(t)) throw std::invalid_argument("unknown sink node " + std::to_string(t));
    for (const auto& [t, w] : net.sink_weights) {
        if (std::find(net.sinks.begin(), net.sinks.end(), t) == net.sinks.end())
            throw std::invalid_argument("sink weight for non-sink node " + std::to_string(t));
        if (w <= 0.0)
            throw std::invalid_argument("non-positive weight for sink " + std::to_string(t));
    }

    // Every sink must be reachable from at least one source.
    std::vector<bool> reach(idx.node_count(), false);
    for (int s : net.sources) reach[idx.index_of(s)] = true;
    for (int v : idx.topo_indices) {
        if (reach[v]) continue;
        for (int ei : idx.in_edges[v])
            if (reach[idx.index_of(net.edges[ei].from)]) { reach[v] = true; break; }
    }
    for (int t : net.sinks) {
        bool self_source = std::find(net.sources.begin(), net.sources.end(), t) != net.sources.end();
        if (!reach[idx.index_of(t)] && !self_source)
            throw std::invalid_argument("sink " + std::to_string(t) + " unreachable from all sources");
    }
}

void GrowthParams::validate() const {
    if (n_nodes < 1) throw std::invalid_argument("n_nodes must be >= 1");
    if (in_degree_draws < 1) throw std::invalid_argument("in_degree_draws must be >= 1");
    if (c_max < 1) throw std::invalid_argument("c_max must be >= 1");
}

Network grow_dag(const GrowthParams& params) {
    params.validate();
    std::mt19937_64 gen(params.seed);

    Network net;
    net.node_ids.push_back(0);
    for (int i = 1; i < params.n_nodes; ++i) {
        net.node_ids.push_back(i);
        std::set<int> parents;
        for (int d = 0; d < params.in_degree_draws; ++d)
            parents.insert(static_cast<int>(gen() % static_cast<std::uint64_t>(i)));
        for (int p : parents) {
            double cap = 1.0 + static_cast<double>(gen() % static_cast<std::uint64_t>(params.c_max));
            net.edges.push_back({p, i, cap});
        }
    }
    net.sources.push_back(0);
    for (int i = 1; i < params.n_nodes; ++i) {
        net.sinks.push_back(i);
        net.sink_weights[i] = 1.0;
    }
    return net;
}

Network fig1_network(double capacity) {
    if (capacity <= 0.0) throw std::invalid_argument("capacity must be positive");
    Network net;
    net.node_ids = {1, 2, 3, 4, 5};
    for (auto [u, v] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}})
        net.edges.push_back({u, v, capacity});
    net.sources = {1};
    net.sinks = {2, 3, 4, 5};
    for (int t : net.sinks) net.sink_weights[t] = 1.0;
    return net;
}

}  // namespace rnf
