#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fstrand {

enum class NodeKind : std::uint8_t { Source, Sink, Split, Merge };

// Position of a crossing along the tracked ray, compared lexicographically.
// Smaller positions are further out (closer to the left edge of the square
// picture).  Splitting a strand refines [p] into [p,0] (left) and [p,1] (right).
using RayPos = std::vector<int>;

// Port conventions: a split has in[0] and out[0] (left), out[1] (right); a merge
// has in[0] (left), in[1] (right) and out[0].  Sources use out[0], sinks in[0].
struct Node {
    NodeKind kind = NodeKind::Split;
    std::array<int, 2> in{-1, -1};
    std::array<int, 2> out{-1, -1};
    bool alive = true;
};

// Every crossing is traversed in the positive direction, so the winding of an
// edge is the number of its crossings.  Crossings are listed in traversal order.
struct Edge {
    int from = -1;
    int from_port = 0;
    int to = -1;
    int to_port = 0;
    std::vector<RayPos> crossings;
    bool alive = true;

    int winding() const { return static_cast<int>(crossings.size()); }
};

struct Passage {
    int node = -1;
    int out_port = 0;
    std::vector<RayPos> extra;
};

// Shared storage for square, annular and cylindrical diagrams.  Nodes and edges
// are addressed by slot; deleted slots stay behind with alive == false until
// compact() is called.
class Graph {
public:
    int add_node(NodeKind kind);
    int add_edge(int from, int from_port, int to, int to_port, std::vector<RayPos> crossings = {});

    const Node& node(int v) const { return nodes_[static_cast<std::size_t>(v)]; }
    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    int node_slots() const { return static_cast<int>(nodes_.size()); }
    int edge_slots() const { return static_cast<int>(edges_.size()); }
    int live_nodes(NodeKind kind) const;

    const std::vector<std::vector<RayPos>>& free_loops() const { return free_loops_; }
    void add_free_loop(std::vector<RayPos> crossings) { free_loops_.push_back(std::move(crossings)); }
    void set_free_loops(std::vector<std::vector<RayPos>> loops) { free_loops_ = std::move(loops); }

    void kill_node(int v) { nodes_[static_cast<std::size_t>(v)].alive = false; }
    void set_kind(int v, NodeKind kind) { nodes_[static_cast<std::size_t>(v)].kind = kind; }

    // Deletes dead_nodes and consumed edges.  Every strand entering a dead node
    // through (node, in_port) continues at passages[(node, in_port)] and picks up
    // its extra crossings.  Chains that start at a live node become single edges
    // reusing the slot of their first edge; chains that close up become free loops.
    // Returns the slots of the rebuilt edges.
    using PassageMap = std::map<std::pair<int, int>, Passage>;
    std::vector<int> rewire(std::span<const int> dead_nodes, std::span<const int> consumed_edges,
                            const PassageMap& passages);

    // Copies other into this graph; returns the node offset.  Edge slots shift too.
    int append(const Graph& other);

    // Renumbers live nodes and edges densely.  node_map[old] is the new index or -1.
    Graph compact(std::vector<int>* node_map = nullptr) const;

private:
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::vector<RayPos>> free_loops_;
};

enum class RedexKind { TypeI, TypeII };

struct Redex {
    RedexKind kind;
    int node;  // the split for Type I, the merge for Type II
};

// Type I: a split whose left and right outputs enter the left and right inputs
// of one merge with equal winding.  Type II: a merge feeding a split directly.
bool find_redex(const Graph& g, int v, Redex& out);
bool has_redex(const Graph& g);

// Applies redexes until none is left.  With rng the next candidate is drawn at
// random, otherwise the worklist is processed first-in first-out.  Returns the
// number of moves.
std::size_t reduce_graph(Graph& g, std::mt19937_64* rng = nullptr);

std::string format_raypos(const RayPos& p);

}  // namespace fstrand
