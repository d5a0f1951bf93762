#pragma once

#include "fstrand/binary.hpp"
#include "fstrand/graph.hpp"
#include "fstrand/plmap.hpp"
#include "fstrand/strand.hpp"

#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace fstrand {

// Strand diagram drawn in an annulus.  Positions along the tracked ray grow
// from the outer boundary inwards; edges record where they cross it.
class AnnularDiagram {
public:
    AnnularDiagram() = default;
    explicit AnnularDiagram(Graph g);

    const Graph& graph() const noexcept { return graph_; }
    int vertex_count() const;
    std::size_t free_loop_count() const { return graph_.free_loops().size(); }

private:
    Graph graph_;
};

// Glues sink k to source k; the glued strand crosses the ray at position [k].
AnnularDiagram close(const StrandDiagram& d);

// Type I/II moves until none applies, then adjacent concentric free loops are
// merged into one.
AnnularDiagram reduce_annular(const AnnularDiagram& a, std::mt19937_64* rng = nullptr);
bool is_reduced(const AnnularDiagram& a);

// Conjugacy invariant: components outside-in, each encoded by its least
// traversal code over all start vertices with windings normalised along the
// traversal tree; "F" stands for a free loop.  Throws on unreduced input.
std::string canonical_key(const AnnularDiagram& a);
std::string to_hex(std::string_view bytes);

// Reduced annular diagram of a square Thompson-like element.
AnnularDiagram annular_diagram(const PLMap& f);

bool are_conjugate(const PLMap& f, const PLMap& g);

enum class LoopKind { Merge, Split, Free };

struct LoopInfo {
    LoopKind kind = LoopKind::Free;
    int size = 0;               // vertices on the loop
    BinaryWord pattern;         // 1 = outward connection, 0 = inward, in traversal order
    BinaryWord tail;            // primitive period read off the pattern
    int radial_index = 0;       // 0 is outermost
    int component = 0;          // index into components()
    RayPos position;            // where the loop crosses the ray
    std::vector<int> vertices;  // traversal order, starting after the crossing
};

std::vector<LoopInfo> classify_loops(const AnnularDiagram& a);

// Loops outside-in matched with fixed_intervals(element) from 0 upwards.  Kind,
// slope and tail come from the loops; locations and interval endpoints from the
// analytic list.  Throws DomainError if the two lists cannot be matched.
std::vector<FixedInterval> fixed_intervals_from_loops(const AnnularDiagram& a, const PLMap& element);

// Connected components outside-in; each free loop is its own component.
std::vector<AnnularDiagram> components(const AnnularDiagram& a);

// Cuts along the tracked ray.  Every crossing becomes a sink/source pair with
// the same index, so close(cut(a)) gives back a.  Throws DomainError if a
// directed cycle survives the cut.
StrandDiagram cut(const AnnularDiagram& a);

std::string to_dot(const AnnularDiagram& a);
std::string to_text(const AnnularDiagram& a);

}  // namespace fstrand
