#include <rado/graph.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace rado
{
    auto to_string(PairKind kind) -> std::string
    {
        switch (kind) {
        case PairKind::Equal: return "Equal";
        case PairKind::Edge: return "Edge";
        case PairKind::NonEdge: return "NonEdge";
        }
        return "?";
    }

    ParseError::ParseError(std::size_t line, const std::string & what) :
        std::runtime_error("line " + std::to_string(line) + ": " + what),
        _line(line)
    {
    }

    Graph::Graph(std::size_t n) :
        _rows(n, VertexSet(n))
    {
    }

    auto Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) -> Graph
    {
        Graph g(n);
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
            if (u == v)
                throw std::invalid_argument("loop at vertex " + std::to_string(u));
            if (g.adjacent(u, v))
                throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
            g.add_edge(u, v);
        }
        return g;
    }

    void Graph::check_pair(Vertex u, Vertex v) const
    {
        if (u >= size() || v >= size())
            throw std::out_of_range("vertex out of range");
        if (u == v)
            throw std::invalid_argument("self-loop requested at vertex " + std::to_string(u));
    }

    auto Graph::kind(Vertex u, Vertex v) const -> PairKind
    {
        if (u == v)
            return PairKind::Equal;
        return adjacent(u, v) ? PairKind::Edge : PairKind::NonEdge;
    }

    void Graph::add_edge(Vertex u, Vertex v) { set_adjacent(u, v, true); }

    void Graph::remove_edge(Vertex u, Vertex v) { set_adjacent(u, v, false); }

    void Graph::set_adjacent(Vertex u, Vertex v, bool value)
    {
        check_pair(u, v);
        _rows[u].set(v, value);
        _rows[v].set(u, value);
    }

    auto Graph::add_vertex() -> Vertex
    {
        for (auto & r : _rows)
            r.push_back(false);
        _rows.emplace_back(_rows.size() + 1);
        return static_cast<Vertex>(_rows.size() - 1);
    }

    auto Graph::edge_count() const -> std::size_t
    {
        std::size_t total = 0;
        for (const auto & r : _rows)
            total += r.count();
        return total / 2;
    }

    auto Graph::edges() const -> std::vector<std::pair<Vertex, Vertex>>
    {
        std::vector<std::pair<Vertex, Vertex>> result;
        for (Vertex u = 0; u < size(); ++u)
            for (auto v = _rows[u].find_next(u); v != VertexSet::npos; v = _rows[u].find_next(v))
                result.emplace_back(u, static_cast<Vertex>(v));
        return result;
    }

    auto Graph::induced(std::span<const Vertex> vertices) const -> Graph
    {
        Graph g(vertices.size());
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                if (adjacent(vertices[i], vertices[j]))
                    g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        return g;
    }

    auto Graph::full_set() const -> VertexSet
    {
        VertexSet s(size());
        s.set();
        return s;
    }

    auto Graph::empty_set() const -> VertexSet { return VertexSet(size()); }

    auto all_vertices(const Graph & g) -> std::vector<Vertex>
    {
        std::vector<Vertex> d(g.size());
        for (Vertex v = 0; v < g.size(); ++v)
            d[v] = v;
        return d;
    }

    auto complete_graph(std::size_t n) -> Graph
    {
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                g.add_edge(u, v);
        return g;
    }

    auto empty_graph(std::size_t n) -> Graph { return Graph(n); }

    auto cycle_graph(std::size_t n) -> Graph
    {
        Graph g(n);
        if (n < 3)
            throw std::invalid_argument("cycle needs at least 3 vertices");
        for (Vertex u = 0; u < n; ++u)
            g.add_edge(u, static_cast<Vertex>((u + 1) % n));
        return g;
    }

    auto path_graph(std::size_t n) -> Graph
    {
        Graph g(n);
        for (Vertex u = 0; u + 1 < n; ++u)
            g.add_edge(u, u + 1);
        return g;
    }

    auto switch_graph(const Graph & g, std::span<const Vertex> s) -> Graph
    {
        VertexSet in_s = g.empty_set();
        for (auto v : s) {
            if (v >= g.size())
                throw std::out_of_range("switch set vertex out of range");
            in_s.set(v);
        }

        Graph result = g;
        for (Vertex u = 0; u < g.size(); ++u)
            for (Vertex v = u + 1; v < g.size(); ++v)
                if (in_s.test(u) != in_s.test(v))
                    result.set_adjacent(u, v, ! g.adjacent(u, v));
        return result;
    }

    auto complement_graph(const Graph & g) -> Graph
    {
        Graph result(g.size());
        for (Vertex u = 0; u < g.size(); ++u)
            for (Vertex v = u + 1; v < g.size(); ++v)
                if (! g.adjacent(u, v))
                    result.add_edge(u, v);
        return result;
    }

    auto is_prime(std::uint64_t q) -> bool
    {
        if (q < 2)
            return false;
        for (std::uint64_t d = 2; d * d <= q; ++d)
            if (q % d == 0)
                return false;
        return true;
    }

    auto build_paley(std::uint32_t q) -> PaleyGraph
    {
        if (! is_prime(q))
            throw std::invalid_argument("Paley order " + std::to_string(q) + " is not prime");
        if (q % 4 != 1)
            throw std::invalid_argument("Paley order " + std::to_string(q) + " is not 1 mod 4");

        std::vector<bool> residue(q, false);
        for (std::uint64_t x = 1; x < q; ++x)
            residue[(x * x) % q] = true;

        PaleyGraph result{Graph(q), 0, {}};
        for (Vertex a = 0; a < q; ++a)
            for (Vertex b = a + 1; b < q; ++b)
                if (residue[b - a])
                    result.graph.add_edge(a, b);

        for (std::uint32_t g = 2; g < q; ++g)
            if (! residue[g]) {
                result.multiplier = g;
                break;
            }

        result.complement_isomorphism.resize(q);
        for (std::uint64_t x = 0; x < q; ++x)
            result.complement_isomorphism[x] = static_cast<Vertex>((result.multiplier * x) % q);
        return result;
    }

    auto is_embedding(const Graph & pattern, const Graph & host, const Embedding & e) -> bool
    {
        if (e.size() != pattern.size())
            return false;
        std::set<Vertex> seen;
        for (auto v : e.image) {
            if (v >= host.size() || ! seen.insert(v).second)
                return false;
        }
        for (Vertex u = 0; u < pattern.size(); ++u)
            for (Vertex v = u + 1; v < pattern.size(); ++v)
                if (pattern.adjacent(u, v) != host.adjacent(e[u], e[v]))
                    return false;
        return true;
    }

    void write_graph(std::ostream & out, const Graph & g)
    {
        out << "n " << g.size() << '\n';
        for (auto [u, v] : g.edges())
            out << u << ' ' << v << '\n';
    }

    auto graph_to_string(const Graph & g) -> std::string
    {
        std::ostringstream out;
        write_graph(out, g);
        return out.str();
    }

    auto read_graph(std::istream & in) -> Graph
    {
        std::string line;
        std::size_t line_no = 0;
        std::optional<Graph> g;

        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#')
                continue;
            std::istringstream fields(line);
            if (! g) {
                std::string tag;
                long long n = -1;
                fields >> tag >> n;
                if (tag != "n" || fields.fail() || n < 0)
                    throw ParseError(line_no, "expected header 'n <count>'");
                g.emplace(static_cast<std::size_t>(n));
                continue;
            }
            long long u = -1, v = -1;
            fields >> u >> v;
            std::string rest;
            if (fields.fail() || (fields >> rest))
                throw ParseError(line_no, "expected edge line 'u v'");
            if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= g->size() || static_cast<std::size_t>(v) >= g->size())
                throw ParseError(line_no, "vertex id out of range");
            if (u == v)
                throw ParseError(line_no, "loop at vertex " + std::to_string(u));
            if (g->adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
                throw ParseError(line_no, "duplicate edge");
            g->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        if (! g)
            throw ParseError(line_no, "missing header 'n <count>'");
        return std::move(*g);
    }

    auto load_graph(const std::string & path) -> Graph
    {
        std::ifstream in(path);
        if (! in)
            throw std::runtime_error("cannot open " + path);
        return read_graph(in);
    }

    void save_graph(const std::string & path, const Graph & g)
    {
        std::ofstream out(path);
        if (! out)
            throw std::runtime_error("cannot write " + path);
        write_graph(out, g);
    }

    auto fnv1a(std::string_view bytes) -> std::uint64_t
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : bytes) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    auto fingerprint(const Graph & g) -> std::uint64_t { return fnv1a(graph_to_string(g)); }

    auto hex64(std::uint64_t value) -> std::string
    {
        std::ostringstream out;
        out << std::hex << std::setw(16) << std::setfill('0') << value;
        return out.str();
    }
}
