#include "fstrand/annular.hpp"

#include "fstrand/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <sstream>

namespace fstrand {

AnnularDiagram::AnnularDiagram(Graph g) : graph_(std::move(g))
{
    for (int v = 0; v < graph_.node_slots(); ++v) {
        const Node& n = graph_.node(v);
        if (n.alive && n.kind != NodeKind::Split && n.kind != NodeKind::Merge)
            throw std::logic_error("annular diagrams have only splits and merges");
    }
}

int AnnularDiagram::vertex_count() const
{
    return graph_.live_nodes(NodeKind::Split) + graph_.live_nodes(NodeKind::Merge);
}

AnnularDiagram close(const StrandDiagram& d)
{
    if (d.source_count() != d.sink_count())
        throw DomainError("close: " + std::to_string(d.source_count()) + " sources against " +
                          std::to_string(d.sink_count()) + " sinks");
    Graph g = d.graph();
    std::vector<int> dead;
    Graph::PassageMap pass;
    for (int k = 0; k < d.source_count(); ++k) {
        const int t = d.sinks()[static_cast<std::size_t>(k)];
        const int s = d.sources()[static_cast<std::size_t>(k)];
        dead.push_back(t);
        dead.push_back(s);
        pass[{t, 0}] = Passage{s, 0, {RayPos{k}}};
    }
    g.rewire(dead, {}, pass);
    return AnnularDiagram(g.compact());
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// One ring of the annulus: a connected component or a free loop.
struct RadialItem {
    RayPos pos;
    std::vector<int> nodes;  // empty for a free loop
    int free_loop = -1;
};

std::vector<RadialItem> radial_items(const Graph& g, std::vector<int>* item_of_node = nullptr)
{
    UnionFind uf(g.node_slots());
    for (int e = 0; e < g.edge_slots(); ++e)
        if (g.edge(e).alive)
            uf.unite(g.edge(e).from, g.edge(e).to);
    std::vector<int> root_item(static_cast<std::size_t>(g.node_slots()), -1);
    std::vector<RadialItem> items;
    for (int v = 0; v < g.node_slots(); ++v) {
        if (!g.node(v).alive)
            continue;
        const int r = uf.find(v);
        if (root_item[static_cast<std::size_t>(r)] == -1) {
            root_item[static_cast<std::size_t>(r)] = static_cast<int>(items.size());
            items.emplace_back();
        }
        items[static_cast<std::size_t>(root_item[static_cast<std::size_t>(r)])].nodes.push_back(v);
    }
    std::vector<std::optional<RayPos>> least(items.size());
    for (int e = 0; e < g.edge_slots(); ++e) {
        const Edge& ed = g.edge(e);
        if (!ed.alive)
            continue;
        auto& slot = least[static_cast<std::size_t>(root_item[static_cast<std::size_t>(uf.find(ed.from))])];
        for (const auto& p : ed.crossings)
            if (!slot || p < *slot)
                slot = p;
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (!least[i])
            throw std::logic_error("component does not wind around the annulus");
        items[i].pos = *least[i];
    }
    for (std::size_t f = 0; f < g.free_loops().size(); ++f) {
        const auto& cs = g.free_loops()[f];
        if (cs.empty())
            throw std::logic_error("free loop does not wind around the annulus");
        RadialItem it;
        it.pos = *std::min_element(cs.begin(), cs.end());
        it.free_loop = static_cast<int>(f);
        items.push_back(std::move(it));
    }
    std::sort(items.begin(), items.end(), [](const RadialItem& a, const RadialItem& b) { return a.pos < b.pos; });
    if (item_of_node) {
        item_of_node->assign(static_cast<std::size_t>(g.node_slots()), -1);
        for (std::size_t i = 0; i < items.size(); ++i)
            for (int v : items[i].nodes)
                (*item_of_node)[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    return items;
}

bool adjacent_free_loops(const std::vector<RadialItem>& items)
{
    for (std::size_t i = 1; i < items.size(); ++i)
        if (items[i].free_loop != -1 && items[i - 1].free_loop != -1)
            return true;
    return false;
}

}  // namespace

AnnularDiagram reduce_annular(const AnnularDiagram& a, std::mt19937_64* rng)
{
    Graph g = a.graph();
    reduce_graph(g, rng);
    const auto items = radial_items(g);
    std::vector<std::vector<RayPos>> kept;
    bool previous_free = false;
    for (const auto& it : items) {
        const bool free = it.free_loop != -1;
        if (free && !previous_free)
            kept.push_back(g.free_loops()[static_cast<std::size_t>(it.free_loop)]);
        previous_free = free;
    }
    g.set_free_loops(std::move(kept));
    return AnnularDiagram(g.compact());
}

bool is_reduced(const AnnularDiagram& a)
{
    return !has_redex(a.graph()) && !adjacent_free_loops(radial_items(a.graph()));
}

namespace {

std::string component_code(const Graph& g, int start)
{
    std::vector<int> id(static_cast<std::size_t>(g.node_slots()), -1);
    std::vector<long> phi(static_cast<std::size_t>(g.node_slots()), 0);
    std::deque<int> queue{start};
    id[static_cast<std::size_t>(start)] = 0;
    int next = 1;
    std::ostringstream os;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        const Node& n = g.node(v);
        os << (n.kind == NodeKind::Split ? 'S' : 'M');
        auto visit = [&](int e, bool outgoing) {
            const Edge& ed = g.edge(e);
            const int u = outgoing ? ed.to : ed.from;
            const long w = ed.winding();
            if (id[static_cast<std::size_t>(u)] == -1) {
                id[static_cast<std::size_t>(u)] = next++;
                phi[static_cast<std::size_t>(u)] = outgoing ? phi[static_cast<std::size_t>(v)] + w
                                                            : phi[static_cast<std::size_t>(v)] - w;
                queue.push_back(u);
            }
            const long norm = w + phi[static_cast<std::size_t>(ed.from)] - phi[static_cast<std::size_t>(ed.to)];
            os << ' ' << id[static_cast<std::size_t>(u)] << ':' << (outgoing ? ed.to_port : ed.from_port) << ':'
               << norm;
        };
        for (int e : n.in)
            if (e != -1)
                visit(e, false);
        for (int e : n.out)
            if (e != -1)
                visit(e, true);
        os << ';';
    }
    return os.str();
}

}  // namespace

std::string canonical_key(const AnnularDiagram& a)
{
    if (!is_reduced(a))
        throw DomainError("canonical_key needs a reduced annular diagram");
    const Graph& g = a.graph();
    std::string key;
    for (const auto& it : radial_items(g)) {
        if (it.free_loop != -1) {
            key += "F|";
            continue;
        }
        std::string best;
        for (int v : it.nodes) {
            std::string code = component_code(g, v);
            if (best.empty() || code < best)
                best = std::move(code);
        }
        key += "C" + best + "|";
    }
    return key;
}

std::string to_hex(std::string_view bytes)
{
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

AnnularDiagram annular_diagram(const PLMap& f)
{
    if (!f.is_square())
        throw DomainError("annular diagrams need a square element");
    return reduce_annular(close(from_pl_map(f)));
}

bool are_conjugate(const PLMap& f, const PLMap& g)
{
    return canonical_key(annular_diagram(f)) == canonical_key(annular_diagram(g));
}

namespace {

// Cycles of a functional graph given by next[v] (-1 where undefined), each in
// the order v, next[v], next[next[v]], ...
std::vector<std::vector<int>> functional_cycles(const std::vector<int>& next)
{
    std::vector<int> stamp(next.size(), -1);
    std::vector<std::vector<int>> cycles;
    for (std::size_t s = 0; s < next.size(); ++s) {
        if (next[s] == -1 || stamp[s] != -1)
            continue;
        int v = static_cast<int>(s);
        while (v != -1 && stamp[static_cast<std::size_t>(v)] == -1) {
            stamp[static_cast<std::size_t>(v)] = static_cast<int>(s);
            v = next[static_cast<std::size_t>(v)];
        }
        if (v == -1 || stamp[static_cast<std::size_t>(v)] != static_cast<int>(s))
            continue;
        std::vector<int> cyc{v};
        for (int u = next[static_cast<std::size_t>(v)]; u != v; u = next[static_cast<std::size_t>(u)])
            cyc.push_back(u);
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

// Edge from a to b along a loop.
int loop_edge(const Graph& g, int a, int b)
{
    for (int e : g.node(a).out)
        if (e != -1 && g.edge(e).to == b)
            return e;
    throw std::logic_error("loop_edge: vertices not adjacent");
}

LoopInfo describe_loop(const Graph& g, std::vector<int> cyc, LoopKind kind)
{
    const std::size_t n = cyc.size();
    // Start right after the crossing.
    std::size_t start = 0;
    int crossings = 0;
    RayPos pos;
    for (std::size_t i = 0; i < n; ++i) {
        const Edge& e = g.edge(loop_edge(g, cyc[i], cyc[(i + 1) % n]));
        crossings += e.winding();
        if (e.winding() > 0) {
            start = (i + 1) % n;
            pos = e.crossings.front();
        }
    }
    if (crossings != 1)
        throw std::logic_error("directed loop crosses the ray " + std::to_string(crossings) + " times");
    std::rotate(cyc.begin(), cyc.begin() + static_cast<long>(start), cyc.end());
    LoopInfo info;
    info.kind = kind;
    info.size = static_cast<int>(n);
    info.position = pos;
    for (std::size_t i = 0; i < n; ++i) {
        const int v = cyc[i];
        if (kind == LoopKind::Merge) {
            // The strand arriving on the other input comes from outside when the
            // loop itself arrives on the right.
            const Edge& e = g.edge(loop_edge(g, cyc[(i + n - 1) % n], v));
            info.pattern.push_back(e.to_port);
        } else {
            const Edge& e = g.edge(loop_edge(g, v, cyc[(i + 1) % n]));
            info.pattern.push_back(e.from_port);
        }
    }
    info.tail = primitive_root(kind == LoopKind::Merge ? info.pattern.reversed() : info.pattern);
    info.vertices = std::move(cyc);
    return info;
}

}  // namespace

std::vector<LoopInfo> classify_loops(const AnnularDiagram& a)
{
    const Graph& g = a.graph();
    const std::size_t slots = static_cast<std::size_t>(g.node_slots());
    std::vector<int> merge_next(slots, -1);
    std::vector<int> split_prev(slots, -1);
    for (int v = 0; v < g.node_slots(); ++v) {
        const Node& n = g.node(v);
        if (!n.alive)
            continue;
        if (n.kind == NodeKind::Merge) {
            const int t = g.edge(n.out[0]).to;
            if (g.node(t).kind == NodeKind::Merge)
                merge_next[static_cast<std::size_t>(v)] = t;
        } else if (n.kind == NodeKind::Split) {
            const int s = g.edge(n.in[0]).from;
            if (g.node(s).kind == NodeKind::Split)
                split_prev[static_cast<std::size_t>(v)] = s;
        }
    }
    std::vector<LoopInfo> loops;
    for (auto& cyc : functional_cycles(merge_next))
        loops.push_back(describe_loop(g, std::move(cyc), LoopKind::Merge));
    for (auto cyc : functional_cycles(split_prev)) {
        std::reverse(cyc.begin(), cyc.end());
        loops.push_back(describe_loop(g, std::move(cyc), LoopKind::Split));
    }
    for (const auto& cs : g.free_loops()) {
        if (cs.size() != 1)
            throw std::logic_error("free loop crosses the ray " + std::to_string(cs.size()) + " times");
        LoopInfo info;
        info.kind = LoopKind::Free;
        info.position = cs.front();
        loops.push_back(std::move(info));
    }
    std::sort(loops.begin(), loops.end(), [](const LoopInfo& x, const LoopInfo& y) { return x.position < y.position; });

    std::vector<int> item_of;
    const auto items = radial_items(g, &item_of);
    for (std::size_t i = 0; i < loops.size(); ++i) {
        auto& l = loops[i];
        l.radial_index = static_cast<int>(i);
        if (l.kind == LoopKind::Free) {
            for (std::size_t k = 0; k < items.size(); ++k)
                if (items[k].free_loop != -1 && items[k].pos == l.position)
                    l.component = static_cast<int>(k);
        } else {
            l.component = item_of[static_cast<std::size_t>(l.vertices.front())];
        }
    }
    return loops;
}

std::vector<FixedInterval> fixed_intervals_from_loops(const AnnularDiagram& a, const PLMap& element)
{
    const auto loops = classify_loops(a);
    const auto analytic = fixed_intervals(element);
    if (loops.size() != analytic.size())
        throw DomainError("diagram has " + std::to_string(loops.size()) + " loops but the element has " +
                          std::to_string(analytic.size()) + " fixed intervals");
    std::vector<FixedInterval> out;
    for (std::size_t i = 0; i < loops.size(); ++i) {
        const auto& l = loops[i];
        if (l.kind == LoopKind::Free) {
            const auto* iv = std::get_if<PointwiseInterval>(&analytic[i]);
            if (!iv)
                throw DomainError("free loop " + std::to_string(i) + " faces an isolated fixed point");
            out.emplace_back(*iv);
            continue;
        }
        const auto* cp = std::get_if<CantorPoint>(&analytic[i]);
        if (!cp)
            throw DomainError("loop " + std::to_string(i) + " faces a pointwise interval");
        CantorPoint p = *cp;
        p.slope_exp = l.kind == LoopKind::Split ? l.size : -l.size;
        p.tail = l.tail;
        out.emplace_back(std::move(p));
    }
    return out;
}

std::vector<AnnularDiagram> components(const AnnularDiagram& a)
{
    if (!is_reduced(a))
        throw DomainError("components needs a reduced annular diagram");
    const Graph& g = a.graph();
    std::vector<AnnularDiagram> out;
    for (const auto& it : radial_items(g)) {
        Graph part;
        if (it.free_loop != -1) {
            part.add_free_loop(g.free_loops()[static_cast<std::size_t>(it.free_loop)]);
            out.emplace_back(std::move(part));
            continue;
        }
        std::vector<int> map(static_cast<std::size_t>(g.node_slots()), -1);
        for (int v : it.nodes)
            map[static_cast<std::size_t>(v)] = part.add_node(g.node(v).kind);
        for (int e = 0; e < g.edge_slots(); ++e) {
            const Edge& ed = g.edge(e);
            if (ed.alive && map[static_cast<std::size_t>(ed.from)] != -1)
                part.add_edge(map[static_cast<std::size_t>(ed.from)], ed.from_port,
                              map[static_cast<std::size_t>(ed.to)], ed.to_port, ed.crossings);
        }
        out.emplace_back(std::move(part));
    }
    return out;
}

StrandDiagram cut(const AnnularDiagram& a)
{
    const Graph& g = a.graph();
    std::vector<RayPos> all;
    for (int e = 0; e < g.edge_slots(); ++e)
        if (g.edge(e).alive)
            all.insert(all.end(), g.edge(e).crossings.begin(), g.edge(e).crossings.end());
    for (const auto& cs : g.free_loops())
        all.insert(all.end(), cs.begin(), cs.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::logic_error("cut: two crossings share a ray position");
    auto rank = [&](const RayPos& p) {
        return static_cast<int>(std::lower_bound(all.begin(), all.end(), p) - all.begin());
    };

    Graph out;
    std::vector<int> map(static_cast<std::size_t>(g.node_slots()), -1);
    for (int v = 0; v < g.node_slots(); ++v)
        if (g.node(v).alive)
            map[static_cast<std::size_t>(v)] = out.add_node(g.node(v).kind);
    std::vector<int> sources;
    std::vector<int> sinks;
    for (std::size_t k = 0; k < all.size(); ++k) {
        sources.push_back(out.add_node(NodeKind::Source));
        sinks.push_back(out.add_node(NodeKind::Sink));
    }
    for (int e = 0; e < g.edge_slots(); ++e) {
        const Edge& ed = g.edge(e);
        if (!ed.alive)
            continue;
        int from = map[static_cast<std::size_t>(ed.from)];
        int port = ed.from_port;
        for (const auto& p : ed.crossings) {
            const int k = rank(p);
            out.add_edge(from, port, sinks[static_cast<std::size_t>(k)], 0);
            from = sources[static_cast<std::size_t>(k)];
            port = 0;
        }
        out.add_edge(from, port, map[static_cast<std::size_t>(ed.to)], ed.to_port);
    }
    for (const auto& cs : g.free_loops())
        for (std::size_t i = 0; i < cs.size(); ++i)
            out.add_edge(sources[static_cast<std::size_t>(rank(cs[i]))], 0,
                         sinks[static_cast<std::size_t>(rank(cs[(i + 1) % cs.size()]))], 0);

    // Kahn's algorithm: the cut must leave an acyclic diagram.
    std::vector<int> indeg(static_cast<std::size_t>(out.node_slots()), 0);
    for (int e = 0; e < out.edge_slots(); ++e)
        ++indeg[static_cast<std::size_t>(out.edge(e).to)];
    std::vector<int> ready;
    for (int v = 0; v < out.node_slots(); ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0)
            ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
        const int v = ready.back();
        ready.pop_back();
        ++seen;
        for (int e : out.node(v).out)
            if (e != -1 && --indeg[static_cast<std::size_t>(out.edge(e).to)] == 0)
                ready.push_back(out.edge(e).to);
    }
    if (seen != out.node_slots())
        throw DomainError("cut leaves a directed cycle");
    return StrandDiagram(std::move(out), std::move(sources), std::move(sinks));
}

std::string to_dot(const AnnularDiagram& a)
{
    const Graph& g = a.graph();
    const auto items = radial_items(g);
    std::ostringstream os;
    os << "digraph annulus {\n  layout=twopi;\n  root=hole;\n  node [label=\"\"];\n";
    os << "  hole [shape=circle, style=dashed, label=\"\"];\n";
    const int rings = static_cast<int>(items.size());
    for (int r = 0; r < rings; ++r) {
        const auto& it = items[static_cast<std::size_t>(r)];
        // Outer rings sit further from the hole.
        const int depth = rings - r;
        if (it.free_loop != -1) {
            os << "  f" << r << " [shape=point];\n";
            os << "  f" << r << " -> f" << r << " [label=\"free\"];\n";
            os << "  hole -> f" << r << " [style=invis, minlen=" << depth << "];\n";
            continue;
        }
        for (int v : it.nodes)
            os << "  n" << v << " [shape=" << (g.node(v).kind == NodeKind::Split ? "invtriangle" : "triangle")
               << "];\n";
        os << "  hole -> n" << it.nodes.front() << " [style=invis, minlen=" << depth << "];\n";
    }
    for (int e = 0; e < g.edge_slots(); ++e) {
        const Edge& ed = g.edge(e);
        if (!ed.alive)
            continue;
        os << "  n" << ed.from << " -> n" << ed.to;
        if (ed.winding())
            os << " [label=\"w" << ed.winding() << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_text(const AnnularDiagram& a)
{
    const Graph& g = a.graph();
    std::ostringstream os;
    os << "annulus " << a.vertex_count() << " vertices, " << a.free_loop_count() << " free loops\n";
    for (int v = 0; v < g.node_slots(); ++v)
        if (g.node(v).alive)
            os << "node " << v << ' ' << (g.node(v).kind == NodeKind::Split ? "split" : "merge") << '\n';
    for (int e = 0; e < g.edge_slots(); ++e) {
        const Edge& ed = g.edge(e);
        if (!ed.alive)
            continue;
        os << "edge " << ed.from << ':' << ed.from_port << " -> " << ed.to << ':' << ed.to_port;
        for (const auto& p : ed.crossings)
            os << ' ' << format_raypos(p);
        os << '\n';
    }
    for (const auto& cs : g.free_loops()) {
        os << "free";
        for (const auto& p : cs)
            os << ' ' << format_raypos(p);
        os << '\n';
    }
    return os.str();
}

}  // namespace fstrand
