#pragma once

#include "fstrand/binary.hpp"
#include "fstrand/graph.hpp"
#include "fstrand/plmap.hpp"

#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fstrand {

// (m,n)-strand diagram: splits and merges between m ordered sources and n
// ordered sinks.  Disconnected diagrams (for instance several parallel strands)
// are allowed.
class StrandDiagram {
public:
    StrandDiagram(Graph g, std::vector<int> sources, std::vector<int> sinks);

    // n parallel strands.
    static StrandDiagram trivial(int strands = 1);

    const Graph& graph() const noexcept { return graph_; }
    std::span<const int> sources() const noexcept { return sources_; }
    std::span<const int> sinks() const noexcept { return sinks_; }
    int source_count() const noexcept { return static_cast<int>(sources_.size()); }
    int sink_count() const noexcept { return static_cast<int>(sinks_.size()); }
    int split_count() const { return graph_.live_nodes(NodeKind::Split); }
    int merge_count() const { return graph_.live_nodes(NodeKind::Merge); }

    // Drops dead slots; source and sink order is kept.
    StrandDiagram compacted() const;

private:
    Graph graph_;
    std::vector<int> sources_;
    std::vector<int> sinks_;
};

// Binary tree given by its leaf addresses from left to right: ((**)*) has the
// leaves 00, 01, 1.
struct Tree {
    std::vector<BinaryWord> leaves;
};

Tree parse_tree(std::string_view text);  // '*' is a leaf, "(LR)" a caret
std::string format_tree(const Tree& t);

// Split trees hang from the sources, merge trees from the sinks; domain leaf i
// is joined to range leaf (i + shift) mod L.  Joins that wrap around get a
// crossing at RayPos{i}, which is how cylindrical diagrams record their seam.
StrandDiagram forest_diagram(const std::vector<std::vector<BinaryWord>>& top,
                             const std::vector<std::vector<BinaryWord>>& bottom, std::size_t shift = 0);

StrandDiagram from_tree_pair(const Tree& domain, const Tree& range);

// Runs the stack machine on the value k + .w entering source k.
std::pair<int, TailWord> evaluate(const StrandDiagram& d, int source, const TailWord& w);

StrandDiagram concatenate(const StrandDiagram& d1, const StrandDiagram& d2);

StrandDiagram reduce(const StrandDiagram& d, std::mt19937_64* rng = nullptr);
bool is_reduced(const StrandDiagram& d);

// One linear piece of a diagram: k + .w a  ->  j + .u a.
struct Piece {
    int source;
    BinaryWord w;
    int sink;
    BinaryWord u;
};

// Every maximal path of the symbolic stack machine, in source order and then
// left to right.
std::vector<Piece> trace_pieces(const StrandDiagram& d);

PLMap to_pl_map(const StrandDiagram& d);
StrandDiagram from_pl_map(const PLMap& f);

StrandDiagram invert_diagram(const StrandDiagram& d);

// Ordered-port isomorphism respecting source and sink order.  Throws
// DomainError unless both diagrams are reduced.
bool equal_reduced(const StrandDiagram& d1, const StrandDiagram& d2);

// Traversal code behind equal_reduced; identical strings mean isomorphic diagrams.
std::string diagram_code(const StrandDiagram& d);

std::string to_dot(const StrandDiagram& d);
std::string to_text(const StrandDiagram& d);

}  // namespace fstrand
