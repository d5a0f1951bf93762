#include "fstrand/strand.hpp"

#include "fstrand/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace fstrand {

StrandDiagram::StrandDiagram(Graph g, std::vector<int> sources, std::vector<int> sinks)
    : graph_(std::move(g)), sources_(std::move(sources)), sinks_(std::move(sinks))
{
    if (sources_.empty() || sinks_.empty())
        throw DomainError("a strand diagram needs at least one source and one sink");
    for (int v : sources_)
        if (graph_.node(v).kind != NodeKind::Source)
            throw std::logic_error("StrandDiagram: source list names a non-source");
    for (int v : sinks_)
        if (graph_.node(v).kind != NodeKind::Sink)
            throw std::logic_error("StrandDiagram: sink list names a non-sink");
}

StrandDiagram StrandDiagram::trivial(int strands)
{
    Graph g;
    std::vector<int> src;
    std::vector<int> snk;
    for (int i = 0; i < strands; ++i) {
        src.push_back(g.add_node(NodeKind::Source));
        snk.push_back(g.add_node(NodeKind::Sink));
        g.add_edge(src.back(), 0, snk.back(), 0);
    }
    return StrandDiagram(std::move(g), std::move(src), std::move(snk));
}

StrandDiagram StrandDiagram::compacted() const
{
    std::vector<int> map;
    Graph g = graph_.compact(&map);
    std::vector<int> src;
    std::vector<int> snk;
    for (int v : sources_)
        src.push_back(map[static_cast<std::size_t>(v)]);
    for (int v : sinks_)
        snk.push_back(map[static_cast<std::size_t>(v)]);
    return StrandDiagram(std::move(g), std::move(src), std::move(snk));
}

namespace {

void skip_space(std::string_view s, std::size_t& i)
{
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
        ++i;
}

void parse_subtree(std::string_view s, std::size_t& i, std::string& prefix, std::vector<BinaryWord>& leaves)
{
    skip_space(s, i);
    if (i >= s.size())
        throw ParseError("unexpected end of tree", i);
    if (s[i] == '*') {
        leaves.emplace_back(prefix);
        ++i;
        return;
    }
    if (s[i] != '(')
        throw ParseError(std::string("expected '*' or '(' but found '") + s[i] + "'", i);
    ++i;
    prefix.push_back('0');
    parse_subtree(s, i, prefix, leaves);
    prefix.back() = '1';
    parse_subtree(s, i, prefix, leaves);
    prefix.pop_back();
    skip_space(s, i);
    if (i >= s.size() || s[i] != ')')
        throw ParseError("expected ')'", i);
    ++i;
}

std::string format_subtree(const std::set<std::string>& leaves, const std::string& prefix)
{
    if (leaves.count(prefix))
        return "*";
    return "(" + format_subtree(leaves, prefix + "0") + format_subtree(leaves, prefix + "1") + ")";
}

using Port = std::pair<int, int>;

struct LeafSet {
    std::set<std::string> words;
    std::size_t max_len = 0;
};

LeafSet leaf_set(const std::vector<BinaryWord>& leaves)
{
    LeafSet ls;
    for (const auto& w : leaves) {
        ls.words.insert(w.str());
        ls.max_len = std::max(ls.max_len, w.size());
    }
    if (ls.words.size() != leaves.size())
        throw DomainError("repeated leaf address");
    return ls;
}

void grow_split(Graph& g, const LeafSet& ls, std::string& prefix, Port at, std::vector<Port>& out)
{
    if (ls.words.count(prefix)) {
        out.push_back(at);
        return;
    }
    if (prefix.size() >= ls.max_len)
        throw DomainError("leaf addresses do not form a complete binary tree");
    const int s = g.add_node(NodeKind::Split);
    g.add_edge(at.first, at.second, s, 0);
    prefix.push_back('0');
    grow_split(g, ls, prefix, {s, 0}, out);
    prefix.back() = '1';
    grow_split(g, ls, prefix, {s, 1}, out);
    prefix.pop_back();
}

void grow_merge(Graph& g, const LeafSet& ls, std::string& prefix, Port at, std::vector<Port>& out)
{
    if (ls.words.count(prefix)) {
        out.push_back(at);
        return;
    }
    if (prefix.size() >= ls.max_len)
        throw DomainError("leaf addresses do not form a complete binary tree");
    const int m = g.add_node(NodeKind::Merge);
    g.add_edge(m, 0, at.first, at.second);
    prefix.push_back('0');
    grow_merge(g, ls, prefix, {m, 0}, out);
    prefix.back() = '1';
    grow_merge(g, ls, prefix, {m, 1}, out);
    prefix.pop_back();
}

Rational word_value(const BinaryWord& w)
{
    return Rational(w.to_integer()) / pow2(static_cast<int>(w.size()));
}

std::vector<int> sink_index(const StrandDiagram& d)
{
    std::vector<int> idx(static_cast<std::size_t>(d.graph().node_slots()), -1);
    for (int j = 0; j < d.sink_count(); ++j)
        idx[static_cast<std::size_t>(d.sinks()[static_cast<std::size_t>(j)])] = j;
    return idx;
}

}  // namespace

Tree parse_tree(std::string_view text)
{
    Tree t;
    std::size_t i = 0;
    std::string prefix;
    parse_subtree(text, i, prefix, t.leaves);
    skip_space(text, i);
    if (i != text.size())
        throw ParseError("trailing characters after tree", i);
    return t;
}

std::string format_tree(const Tree& t)
{
    std::set<std::string> leaves;
    for (const auto& w : t.leaves)
        leaves.insert(w.str());
    return format_subtree(leaves, "");
}

StrandDiagram forest_diagram(const std::vector<std::vector<BinaryWord>>& top,
                             const std::vector<std::vector<BinaryWord>>& bottom, std::size_t shift)
{
    Graph g;
    std::vector<int> sources;
    std::vector<int> sinks;
    std::vector<Port> outs;
    std::vector<Port> ins;
    for (const auto& leaves : top) {
        const int v = g.add_node(NodeKind::Source);
        sources.push_back(v);
        std::string prefix;
        const std::size_t before = outs.size();
        grow_split(g, leaf_set(leaves), prefix, {v, 0}, outs);
        if (outs.size() - before != leaves.size())
            throw DomainError("leaf addresses do not form a complete binary tree");
    }
    for (const auto& leaves : bottom) {
        const int v = g.add_node(NodeKind::Sink);
        sinks.push_back(v);
        std::string prefix;
        const std::size_t before = ins.size();
        grow_merge(g, leaf_set(leaves), prefix, {v, 0}, ins);
        if (ins.size() - before != leaves.size())
            throw DomainError("leaf addresses do not form a complete binary tree");
    }
    if (outs.size() != ins.size())
        throw DomainError("forests have " + std::to_string(outs.size()) + " and " + std::to_string(ins.size()) +
                          " leaves");
    const std::size_t n = outs.size();
    const std::size_t rot = n ? shift % n : 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + rot) % n;
        std::vector<RayPos> cross;
        if (i + rot >= n)
            cross.push_back(RayPos{static_cast<int>(i)});
        g.add_edge(outs[i].first, outs[i].second, ins[j].first, ins[j].second, std::move(cross));
    }
    return StrandDiagram(std::move(g), std::move(sources), std::move(sinks));
}

StrandDiagram from_tree_pair(const Tree& domain, const Tree& range)
{
    if (domain.leaves.size() != range.leaves.size())
        throw DomainError("tree pair has " + std::to_string(domain.leaves.size()) + " and " +
                          std::to_string(range.leaves.size()) + " leaves");
    return forest_diagram({domain.leaves}, {range.leaves});
}

std::pair<int, TailWord> evaluate(const StrandDiagram& d, int source, const TailWord& w)
{
    if (source < 0 || source >= d.source_count())
        throw DomainError("no source " + std::to_string(source));
    const Graph& g = d.graph();
    const auto sinks = sink_index(d);
    int e = g.node(d.sources()[static_cast<std::size_t>(source)]).out[0];
    std::string stack;
    std::size_t pos = 0;
    for (int steps = 0; steps <= g.node_slots(); ++steps) {
        const Edge& cur = g.edge(e);
        const Node& v = g.node(cur.to);
        switch (v.kind) {
        case NodeKind::Split: {
            int bit;
            if (stack.empty()) {
                bit = w.digit(pos++);
            } else {
                bit = stack.front() - '0';
                stack.erase(stack.begin());
            }
            e = v.out[static_cast<std::size_t>(bit)];
            break;
        }
        case NodeKind::Merge:
            stack.insert(stack.begin(), static_cast<char>('0' + cur.to_port));
            e = v.out[0];
            break;
        case NodeKind::Sink:
            return {sinks[static_cast<std::size_t>(cur.to)], w.drop(pos).prepend(BinaryWord(stack))};
        case NodeKind::Source:
            throw std::logic_error("evaluate: edge into a source");
        }
    }
    throw DomainError("evaluate: diagram has a directed cycle");
}

StrandDiagram concatenate(const StrandDiagram& d1, const StrandDiagram& d2)
{
    if (d1.sink_count() != d2.source_count())
        throw DomainError("concatenate: " + std::to_string(d1.sink_count()) + " sinks against " +
                          std::to_string(d2.source_count()) + " sources");
    Graph g = d1.graph();
    const int off = g.append(d2.graph());
    std::vector<int> dead;
    Graph::PassageMap pass;
    for (int k = 0; k < d1.sink_count(); ++k) {
        const int t = d1.sinks()[static_cast<std::size_t>(k)];
        const int s = d2.sources()[static_cast<std::size_t>(k)] + off;
        dead.push_back(t);
        dead.push_back(s);
        pass[{t, 0}] = Passage{s, 0, {}};
    }
    g.rewire(dead, {}, pass);
    std::vector<int> sinks;
    for (int v : d2.sinks())
        sinks.push_back(v + off);
    std::vector<int> sources(d1.sources().begin(), d1.sources().end());
    return StrandDiagram(std::move(g), std::move(sources), std::move(sinks)).compacted();
}

StrandDiagram reduce(const StrandDiagram& d, std::mt19937_64* rng)
{
    Graph g = d.graph();
    reduce_graph(g, rng);
    std::vector<int> sources(d.sources().begin(), d.sources().end());
    std::vector<int> sinks(d.sinks().begin(), d.sinks().end());
    return StrandDiagram(std::move(g), std::move(sources), std::move(sinks)).compacted();
}

bool is_reduced(const StrandDiagram& d)
{
    return !has_redex(d.graph());
}

namespace {

void trace_from(const Graph& g, const std::vector<int>& sinks, int source, int e, std::string u, std::string w,
                int budget, std::vector<Piece>& out)
{
    for (;; --budget) {
        if (budget < 0)
            throw DomainError("diagram has a directed cycle");
        const Edge& cur = g.edge(e);
        const Node& v = g.node(cur.to);
        switch (v.kind) {
        case NodeKind::Split:
            if (u.empty()) {
                trace_from(g, sinks, source, v.out[0], u, w + '0', budget - 1, out);
                trace_from(g, sinks, source, v.out[1], u, w + '1', budget - 1, out);
                return;
            }
            e = v.out[static_cast<std::size_t>(u.front() - '0')];
            u.erase(u.begin());
            break;
        case NodeKind::Merge:
            u.insert(u.begin(), static_cast<char>('0' + cur.to_port));
            e = v.out[0];
            break;
        case NodeKind::Sink:
            out.push_back({source, BinaryWord(w), sinks[static_cast<std::size_t>(cur.to)], BinaryWord(u)});
            return;
        case NodeKind::Source:
            throw std::logic_error("trace: edge into a source");
        }
    }
}

}  // namespace

std::vector<Piece> trace_pieces(const StrandDiagram& d)
{
    const auto sinks = sink_index(d);
    std::vector<Piece> out;
    for (int k = 0; k < d.source_count(); ++k) {
        const int e = d.graph().node(d.sources()[static_cast<std::size_t>(k)]).out[0];
        trace_from(d.graph(), sinks, k, e, "", "", d.graph().node_slots(), out);
    }
    return out;
}

PLMap to_pl_map(const StrandDiagram& d)
{
    std::vector<Breakpoint> pts;
    Rational x_end;
    Rational y_end;
    for (const auto& p : trace_pieces(d)) {
        Rational x = Rational(p.source) + word_value(p.w);
        Rational y = Rational(p.sink) + word_value(p.u);
        if (!pts.empty() && (x != x_end || y != y_end))
            throw DomainError("diagram pieces do not join into a homeomorphism");
        x_end = x + pow2(-static_cast<int>(p.w.size()));
        y_end = y + pow2(-static_cast<int>(p.u.size()));
        pts.push_back({std::move(x), std::move(y)});
    }
    if (pts.front().y != 0 || y_end != d.sink_count())
        throw DomainError("diagram pieces do not cover the range");
    pts.push_back({x_end, y_end});
    return PLMap(std::move(pts));
}

namespace {

void carve(const PLMap& f, int k, BinaryWord& w, std::vector<std::vector<BinaryWord>>& top,
           std::vector<std::vector<BinaryWord>>& bottom)
{
    if (w.size() > 4096)
        throw DomainError("from_pl_map: no dyadic subdivision found");
    const Rational lo = Rational(k) + word_value(w);
    const Rational hi = lo + pow2(-static_cast<int>(w.size()));
    bool linear = true;
    for (const auto& p : f.breakpoints())
        if (p.x > lo && p.x < hi) {
            linear = false;
            break;
        }
    if (linear) {
        const Rational flo = f(lo);
        const auto e = log2_exact(Rational(f(hi) - flo));
        if (e && *e <= 0) {
            const Rational scaled = flo * pow2(-*e);
            if (scaled.get_den() == 1) {
                const Integer j = floor(flo);
                Integer digits = scaled.get_num() - j * pow2(-*e).get_num();
                std::string bits = -*e == 0 ? std::string() : digits.get_str(2);
                bits.insert(0, static_cast<std::size_t>(-*e) - bits.size(), '0');
                top[static_cast<std::size_t>(k)].push_back(w);
                bottom[j.get_ui()].emplace_back(bits);
                return;
            }
        }
    }
    w.push_back(0);
    carve(f, k, w, top, bottom);
    w.pop_back();
    w.push_back(1);
    carve(f, k, w, top, bottom);
    w.pop_back();
}

}  // namespace

StrandDiagram from_pl_map(const PLMap& f)
{
    if (!is_thompson_like(f))
        throw DomainError("from_pl_map needs a Thompson-like map");
    const int m = f.domain_len();
    const int n = f.range_len();
    std::vector<std::vector<BinaryWord>> top(static_cast<std::size_t>(m));
    std::vector<std::vector<BinaryWord>> bottom(static_cast<std::size_t>(n));
    for (int k = 0; k < m; ++k) {
        BinaryWord w;
        carve(f, k, w, top, bottom);
    }
    return reduce(forest_diagram(top, bottom));
}

StrandDiagram invert_diagram(const StrandDiagram& d)
{
    const StrandDiagram c = d.compacted();
    const Graph& src = c.graph();
    Graph g;
    for (int v = 0; v < src.node_slots(); ++v) {
        NodeKind k = src.node(v).kind;
        switch (k) {
        case NodeKind::Split: k = NodeKind::Merge; break;
        case NodeKind::Merge: k = NodeKind::Split; break;
        case NodeKind::Source: k = NodeKind::Sink; break;
        case NodeKind::Sink: k = NodeKind::Source; break;
        }
        g.add_node(k);
    }
    for (int e = 0; e < src.edge_slots(); ++e) {
        const Edge& ed = src.edge(e);
        std::vector<RayPos> cross(ed.crossings.rbegin(), ed.crossings.rend());
        g.add_edge(ed.to, ed.to_port, ed.from, ed.from_port, std::move(cross));
    }
    std::vector<int> sources(c.sinks().begin(), c.sinks().end());
    std::vector<int> sinks(c.sources().begin(), c.sources().end());
    return StrandDiagram(std::move(g), std::move(sources), std::move(sinks));
}

std::string diagram_code(const StrandDiagram& d)
{
    const Graph& g = d.graph();
    const auto sinks = sink_index(d);
    std::vector<int> id(static_cast<std::size_t>(g.node_slots()), -1);
    std::deque<int> queue;
    int next = 0;
    for (int v : d.sources()) {
        id[static_cast<std::size_t>(v)] = next++;
        queue.push_back(v);
    }
    std::ostringstream os;
    os << d.source_count() << ' ' << d.sink_count() << ';';
    auto visit = [&](int e, bool outgoing) {
        const Edge& ed = g.edge(e);
        const int u = outgoing ? ed.to : ed.from;
        if (id[static_cast<std::size_t>(u)] == -1) {
            id[static_cast<std::size_t>(u)] = next++;
            queue.push_back(u);
        }
        os << ' ' << id[static_cast<std::size_t>(u)] << ':' << (outgoing ? ed.to_port : ed.from_port) << ':'
           << ed.winding();
    };
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        const Node& n = g.node(v);
        os << static_cast<int>(n.kind);
        if (n.kind == NodeKind::Sink)
            os << '#' << sinks[static_cast<std::size_t>(v)];
        for (int e : n.in)
            if (e != -1)
                visit(e, false);
        for (int e : n.out)
            if (e != -1)
                visit(e, true);
        os << ';';
    }
    int live = 0;
    for (int v = 0; v < g.node_slots(); ++v)
        live += g.node(v).alive;
    if (live != next)
        os << "unreached" << live - next;
    return os.str();
}

bool equal_reduced(const StrandDiagram& d1, const StrandDiagram& d2)
{
    if (!is_reduced(d1) || !is_reduced(d2))
        throw DomainError("equal_reduced needs reduced diagrams");
    return diagram_code(d1.compacted()) == diagram_code(d2.compacted());
}

namespace {

const char* kind_name(NodeKind k)
{
    switch (k) {
    case NodeKind::Source: return "source";
    case NodeKind::Sink: return "sink";
    case NodeKind::Split: return "split";
    case NodeKind::Merge: return "merge";
    }
    return "?";
}

}  // namespace

std::string to_dot(const StrandDiagram& d)
{
    const StrandDiagram c = d.compacted();
    const Graph& g = c.graph();
    std::ostringstream os;
    os << "digraph strand {\n  node [label=\"\"];\n";
    os << "  { rank=source;";
    for (int i = 0; i < c.source_count(); ++i)
        os << " n" << c.sources()[static_cast<std::size_t>(i)];
    os << " }\n  { rank=sink;";
    for (int i = 0; i < c.sink_count(); ++i)
        os << " n" << c.sinks()[static_cast<std::size_t>(i)];
    os << " }\n";
    for (int i = 0; i < c.source_count(); ++i)
        os << "  n" << c.sources()[static_cast<std::size_t>(i)] << " [shape=box, label=\"s" << i << "\"];\n";
    for (int j = 0; j < c.sink_count(); ++j)
        os << "  n" << c.sinks()[static_cast<std::size_t>(j)] << " [shape=box, label=\"t" << j << "\"];\n";
    for (int v = 0; v < g.node_slots(); ++v) {
        if (g.node(v).kind == NodeKind::Split)
            os << "  n" << v << " [shape=invtriangle];\n";
        else if (g.node(v).kind == NodeKind::Merge)
            os << "  n" << v << " [shape=triangle];\n";
    }
    for (int e = 0; e < g.edge_slots(); ++e) {
        const Edge& ed = g.edge(e);
        os << "  n" << ed.from << " -> n" << ed.to;
        std::string attrs;
        if (g.node(ed.from).kind == NodeKind::Split)
            attrs += std::string("tailport=") + (ed.from_port ? "se" : "sw");
        if (g.node(ed.to).kind == NodeKind::Merge) {
            if (!attrs.empty())
                attrs += ", ";
            attrs += std::string("headport=") + (ed.to_port ? "ne" : "nw");
        }
        if (!attrs.empty())
            os << " [" << attrs << "]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_text(const StrandDiagram& d)
{
    const StrandDiagram c = d.compacted();
    const Graph& g = c.graph();
    std::ostringstream os;
    os << "diagram " << c.source_count() << ' ' << c.sink_count() << '\n';
    for (int v = 0; v < g.node_slots(); ++v)
        os << "node " << v << ' ' << kind_name(g.node(v).kind) << '\n';
    for (int e = 0; e < g.edge_slots(); ++e) {
        const Edge& ed = g.edge(e);
        os << "edge " << ed.from << ':' << ed.from_port << " -> " << ed.to << ':' << ed.to_port;
        for (const auto& p : ed.crossings)
            os << ' ' << format_raypos(p);
        os << '\n';
    }
    os << "sources";
    for (int v : c.sources())
        os << ' ' << v;
    os << "\nsinks";
    for (int v : c.sinks())
        os << ' ' << v;
    os << '\n';
    return os.str();
}

}  // namespace fstrand
