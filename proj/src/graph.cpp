#include "fstrand/graph.hpp"

#include "fstrand/error.hpp"

#include <deque>

namespace fstrand {

int Graph::add_node(NodeKind kind)
{
    nodes_.push_back(Node{kind, {-1, -1}, {-1, -1}, true});
    return static_cast<int>(nodes_.size()) - 1;
}

int Graph::add_edge(int from, int from_port, int to, int to_port, std::vector<RayPos> crossings)
{
    const int e = static_cast<int>(edges_.size());
    edges_.push_back(Edge{from, from_port, to, to_port, std::move(crossings), true});
    auto& a = nodes_[static_cast<std::size_t>(from)].out[static_cast<std::size_t>(from_port)];
    auto& b = nodes_[static_cast<std::size_t>(to)].in[static_cast<std::size_t>(to_port)];
    if (a != -1 || b != -1)
        throw std::logic_error("add_edge: port already connected");
    a = e;
    b = e;
    return e;
}

int Graph::live_nodes(NodeKind kind) const
{
    int n = 0;
    for (const auto& v : nodes_)
        n += v.alive && v.kind == kind;
    return n;
}

std::vector<int> Graph::rewire(std::span<const int> dead_nodes, std::span<const int> consumed_edges,
                               const PassageMap& passages)
{
    std::vector<char> dead(nodes_.size(), 0);
    std::vector<char> used(edges_.size(), 0);
    for (int v : dead_nodes)
        dead[static_cast<std::size_t>(v)] = 1;
    for (int e : consumed_edges)
        used[static_cast<std::size_t>(e)] = 1;

    std::vector<int> entering;
    for (int v : dead_nodes)
        for (int e : nodes_[static_cast<std::size_t>(v)].in)
            if (e != -1 && !used[static_cast<std::size_t>(e)])
                entering.push_back(e);

    auto step = [&](int e, std::vector<RayPos>& acc) {
        const Edge& cur = edges_[static_cast<std::size_t>(e)];
        auto it = passages.find({cur.to, cur.to_port});
        if (it == passages.end())
            throw std::logic_error("rewire: strand enters a dead node without a passage");
        acc.insert(acc.end(), it->second.extra.begin(), it->second.extra.end());
        return nodes_[static_cast<std::size_t>(it->second.node)].out[static_cast<std::size_t>(it->second.out_port)];
    };

    std::vector<int> rebuilt;
    for (int e : entering) {
        if (dead[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].from)])
            continue;
        std::vector<RayPos> acc = edges_[static_cast<std::size_t>(e)].crossings;
        int f = e;
        for (;;) {
            f = step(f, acc);
            Edge& nxt = edges_[static_cast<std::size_t>(f)];
            used[static_cast<std::size_t>(f)] = 1;
            nxt.alive = false;
            acc.insert(acc.end(), nxt.crossings.begin(), nxt.crossings.end());
            if (!dead[static_cast<std::size_t>(nxt.to)])
                break;
        }
        const Edge& last = edges_[static_cast<std::size_t>(f)];
        Edge& head = edges_[static_cast<std::size_t>(e)];
        head.to = last.to;
        head.to_port = last.to_port;
        head.crossings = std::move(acc);
        nodes_[static_cast<std::size_t>(head.to)].in[static_cast<std::size_t>(head.to_port)] = e;
        used[static_cast<std::size_t>(e)] = 1;
        rebuilt.push_back(e);
    }

    for (int e : entering) {
        if (used[static_cast<std::size_t>(e)])
            continue;
        std::vector<RayPos> acc;
        int f = e;
        do {
            Edge& cur = edges_[static_cast<std::size_t>(f)];
            used[static_cast<std::size_t>(f)] = 1;
            cur.alive = false;
            acc.insert(acc.end(), cur.crossings.begin(), cur.crossings.end());
            f = step(f, acc);
        } while (f != e);
        free_loops_.push_back(std::move(acc));
    }

    for (int e : consumed_edges)
        edges_[static_cast<std::size_t>(e)].alive = false;
    for (int v : dead_nodes)
        nodes_[static_cast<std::size_t>(v)].alive = false;
    return rebuilt;
}

int Graph::append(const Graph& other)
{
    const int noff = static_cast<int>(nodes_.size());
    const int eoff = static_cast<int>(edges_.size());
    for (Node v : other.nodes_) {
        for (auto& e : v.in)
            if (e != -1)
                e += eoff;
        for (auto& e : v.out)
            if (e != -1)
                e += eoff;
        nodes_.push_back(v);
    }
    for (Edge e : other.edges_) {
        e.from += noff;
        e.to += noff;
        edges_.push_back(std::move(e));
    }
    free_loops_.insert(free_loops_.end(), other.free_loops_.begin(), other.free_loops_.end());
    return noff;
}

Graph Graph::compact(std::vector<int>* node_map) const
{
    Graph g;
    std::vector<int> nmap(nodes_.size(), -1);
    for (std::size_t v = 0; v < nodes_.size(); ++v)
        if (nodes_[v].alive)
            nmap[v] = g.add_node(nodes_[v].kind);
    // Keep edge order stable so compaction does not perturb traversals.
    for (const auto& e : edges_)
        if (e.alive)
            g.add_edge(nmap[static_cast<std::size_t>(e.from)], e.from_port, nmap[static_cast<std::size_t>(e.to)],
                       e.to_port, e.crossings);
    g.free_loops_ = free_loops_;
    if (node_map)
        *node_map = std::move(nmap);
    return g;
}

bool find_redex(const Graph& g, int v, Redex& out)
{
    const Node& n = g.node(v);
    if (!n.alive)
        return false;
    if (n.kind == NodeKind::Split) {
        if (n.out[0] == -1 || n.out[1] == -1)
            return false;
        const Edge& a = g.edge(n.out[0]);
        const Edge& b = g.edge(n.out[1]);
        if (a.to == b.to && g.node(a.to).kind == NodeKind::Merge && a.to_port == 0 && b.to_port == 1 &&
            a.winding() == b.winding()) {
            out = {RedexKind::TypeI, v};
            return true;
        }
    } else if (n.kind == NodeKind::Merge) {
        if (n.out[0] == -1)
            return false;
        const Edge& c = g.edge(n.out[0]);
        if (g.node(c.to).kind == NodeKind::Split) {
            out = {RedexKind::TypeII, v};
            return true;
        }
    }
    return false;
}

bool has_redex(const Graph& g)
{
    Redex r{};
    for (int v = 0; v < g.node_slots(); ++v)
        if (find_redex(g, v, r))
            return true;
    return false;
}

namespace {

std::vector<RayPos> refined(const std::vector<RayPos>& cs, int bit)
{
    std::vector<RayPos> out = cs;
    for (auto& p : out)
        p.push_back(bit);
    return out;
}

std::vector<int> apply_redex(Graph& g, const Redex& r)
{
    std::vector<int> rebuilt;
    if (r.kind == RedexKind::TypeI) {
        const int s = r.node;
        const int a = g.node(s).out[0];
        const int b = g.node(s).out[1];
        const int m = g.edge(a).to;
        Graph::PassageMap pass;
        pass[{s, 0}] = Passage{m, 0, g.edge(a).crossings};
        const std::array<int, 2> dead{s, m};
        const std::array<int, 2> consumed{a, b};
        rebuilt = g.rewire(dead, consumed, pass);
    } else {
        const int m = r.node;
        const int c = g.node(m).out[0];
        const int s = g.edge(c).to;
        Graph::PassageMap pass;
        pass[{m, 0}] = Passage{s, 0, refined(g.edge(c).crossings, 0)};
        pass[{m, 1}] = Passage{s, 1, refined(g.edge(c).crossings, 1)};
        const std::array<int, 2> dead{m, s};
        const std::array<int, 1> consumed{c};
        rebuilt = g.rewire(dead, consumed, pass);
    }
    std::vector<int> touched;
    for (int e : rebuilt) {
        touched.push_back(g.edge(e).from);
        touched.push_back(g.edge(e).to);
    }
    return touched;
}

bool reducible_kind(NodeKind k)
{
    return k == NodeKind::Split || k == NodeKind::Merge;
}

}  // namespace

std::size_t reduce_graph(Graph& g, std::mt19937_64* rng)
{
    std::deque<int> work;
    std::vector<char> queued(static_cast<std::size_t>(g.node_slots()), 0);
    for (int v = 0; v < g.node_slots(); ++v)
        if (g.node(v).alive && reducible_kind(g.node(v).kind)) {
            work.push_back(v);
            queued[static_cast<std::size_t>(v)] = 1;
        }
    std::size_t moves = 0;
    while (!work.empty()) {
        int v;
        if (rng) {
            std::uniform_int_distribution<std::size_t> pick(0, work.size() - 1);
            const std::size_t i = pick(*rng);
            v = work[i];
            work[i] = work.back();
            work.pop_back();
        } else {
            v = work.front();
            work.pop_front();
        }
        queued[static_cast<std::size_t>(v)] = 0;
        Redex r{};
        if (!find_redex(g, v, r))
            continue;
        ++moves;
        for (int t : apply_redex(g, r)) {
            if (g.node(t).alive && reducible_kind(g.node(t).kind) && !queued[static_cast<std::size_t>(t)]) {
                work.push_back(t);
                queued[static_cast<std::size_t>(t)] = 1;
            }
        }
    }
    return moves;
}

std::string format_raypos(const RayPos& p)
{
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(p[i]);
    }
    return s + "]";
}

}  // namespace fstrand
