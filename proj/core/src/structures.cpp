#include <rado/structures.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace rado
{
    PartitionedGraph::PartitionedGraph(Graph g, std::vector<std::vector<Vertex>> p) :
        graph(std::move(g)),
        parts(std::move(p))
    {
        VertexSet seen = graph.empty_set();
        for (const auto & part : parts)
            for (auto v : part) {
                if (v >= graph.size())
                    throw std::invalid_argument("part vertex " + std::to_string(v) + " out of range");
                if (seen.test(v))
                    throw std::invalid_argument("vertex " + std::to_string(v) + " appears in two parts");
                seen.set(v);
            }
        if (seen.count() != graph.size())
            throw std::invalid_argument("parts do not cover every vertex");
    }

    auto PartitionedGraph::single_part(Graph g) -> PartitionedGraph
    {
        std::vector<Vertex> all(g.size());
        for (Vertex v = 0; v < g.size(); ++v)
            all[v] = v;
        return PartitionedGraph(std::move(g), {std::move(all)});
    }

    auto PartitionedGraph::part_of(Vertex v) const -> std::size_t
    {
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (auto w : parts[i])
                if (w == v)
                    return i;
        throw std::out_of_range("vertex not in any part");
    }

    auto PartitionedGraph::part_set(std::size_t i) const -> VertexSet
    {
        VertexSet s = graph.empty_set();
        for (auto v : parts.at(i))
            s.set(v);
        return s;
    }

    ConstantGraph::ConstantGraph(Graph g, std::vector<Vertex> c) :
        graph(std::move(g)),
        constants(std::move(c))
    {
        std::set<Vertex> seen;
        for (auto v : constants) {
            if (v >= graph.size())
                throw std::invalid_argument("constant " + std::to_string(v) + " out of range");
            if (! seen.insert(v).second)
                throw std::invalid_argument("constant " + std::to_string(v) + " repeated");
        }
    }

    auto pattern_index(const ConstantGraph & cg, Vertex v) -> std::size_t
    {
        std::size_t pattern = 0;
        for (std::size_t i = 0; i < cg.constants.size(); ++i)
            if (cg.graph.adjacent(v, cg.constants[i]))
                pattern |= std::size_t{1} << i;
        return pattern;
    }

    auto associate_partitioned(const ConstantGraph & cg) -> PartitionedGraph
    {
        const auto n = cg.constants.size();
        if (n >= 20)
            throw std::invalid_argument("too many constants for a 2^n-part partition");

        std::vector<std::vector<Vertex>> parts(n + (std::size_t{1} << n));
        VertexSet is_constant = cg.graph.empty_set();
        for (std::size_t i = 0; i < n; ++i) {
            parts[i].push_back(cg.constants[i]);
            is_constant.set(cg.constants[i]);
        }
        for (Vertex v = 0; v < cg.graph.size(); ++v)
            if (! is_constant.test(v))
                parts[n + pattern_index(cg, v)].push_back(v);
        return PartitionedGraph(cg.graph, std::move(parts));
    }

    auto part_constraints(const PartitionedGraph & pattern, const PartitionedGraph & host, bool order_preserving)
        -> EmbeddingConstraints
    {
        if (pattern.parts.size() != host.parts.size())
            throw std::invalid_argument("part count mismatch: " + std::to_string(pattern.parts.size()) + " vs " +
                std::to_string(host.parts.size()));

        EmbeddingConstraints c;
        c.order_preserving = order_preserving;
        c.domains.assign(pattern.graph.size(), host.graph.empty_set());
        for (std::size_t i = 0; i < pattern.parts.size(); ++i) {
            const auto target = host.part_set(i);
            for (auto v : pattern.parts[i])
                c.domains[v] = target;
        }
        return c;
    }

    auto constant_constraints(const ConstantGraph & pattern, const ConstantGraph & host) -> EmbeddingConstraints
    {
        if (pattern.constants.size() != host.constants.size())
            throw std::invalid_argument("constant count mismatch: " + std::to_string(pattern.constants.size()) + " vs " +
                std::to_string(host.constants.size()));

        EmbeddingConstraints c;
        c.domains.assign(pattern.graph.size(), host.graph.full_set());
        for (std::size_t i = 0; i < pattern.constants.size(); ++i) {
            auto & d = c.domains[pattern.constants[i]];
            d.reset();
            d.set(host.constants[i]);
        }
        return c;
    }

    auto find_part_embeddings(const PartitionedGraph & pattern, const PartitionedGraph & host, std::size_t limit,
        bool order_preserving) -> std::vector<Embedding>
    {
        return find_embeddings(pattern.graph, host.graph, limit, part_constraints(pattern, host, order_preserving));
    }

    auto find_const_embeddings(const ConstantGraph & pattern, const ConstantGraph & host, std::size_t limit)
        -> std::vector<Embedding>
    {
        return find_embeddings(pattern.graph, host.graph, limit, constant_constraints(pattern, host));
    }

    auto is_part_embedding(const PartitionedGraph & pattern, const PartitionedGraph & host, const Embedding & e) -> bool
    {
        if (pattern.parts.size() != host.parts.size() || ! is_embedding(pattern.graph, host.graph, e))
            return false;
        for (std::size_t i = 0; i < pattern.parts.size(); ++i) {
            const auto target = host.part_set(i);
            for (auto v : pattern.parts[i])
                if (! target.test(e[v]))
                    return false;
        }
        return true;
    }

    auto is_const_embedding(const ConstantGraph & pattern, const ConstantGraph & host, const Embedding & e) -> bool
    {
        if (pattern.constants.size() != host.constants.size() || ! is_embedding(pattern.graph, host.graph, e))
            return false;
        for (std::size_t i = 0; i < pattern.constants.size(); ++i)
            if (e[pattern.constants[i]] != host.constants[i])
                return false;
        return true;
    }

    namespace
    {
        struct SplitInput
        {
            std::string graph_text;
            std::vector<std::pair<std::size_t, std::string>> extra;  // (line, text) of tagged lines
        };

        auto split_tagged(std::istream & in, const std::string & tag) -> SplitInput
        {
            SplitInput result;
            std::string line;
            std::size_t line_no = 0;
            while (std::getline(in, line)) {
                ++line_no;
                if (line.rfind(tag, 0) == 0) {
                    result.extra.emplace_back(line_no, line);
                    result.graph_text += '\n';
                }
                else
                    result.graph_text += line + '\n';
            }
            return result;
        }

        auto parse_vertices(std::size_t line_no, const std::string & text) -> std::vector<Vertex>
        {
            std::istringstream fields(text);
            std::vector<Vertex> result;
            std::string token;
            while (fields >> token) {
                try {
                    std::size_t used = 0;
                    const auto v = std::stoll(token, &used);
                    if (used != token.size() || v < 0)
                        throw std::invalid_argument(token);
                    result.push_back(static_cast<Vertex>(v));
                }
                catch (const std::exception &) {
                    throw ParseError(line_no, "bad vertex id '" + token + "'");
                }
            }
            return result;
        }
    }

    void write_partitioned(std::ostream & out, const PartitionedGraph & pg)
    {
        write_graph(out, pg.graph);
        for (std::size_t i = 0; i < pg.parts.size(); ++i) {
            out << "part " << i << ":";
            for (auto v : pg.parts[i])
                out << ' ' << v;
            out << '\n';
        }
    }

    auto read_partitioned(std::istream & in) -> PartitionedGraph
    {
        auto split = split_tagged(in, "part");
        std::istringstream graph_in(split.graph_text);
        auto g = read_graph(graph_in);
        if (split.extra.empty())
            return PartitionedGraph::single_part(std::move(g));

        std::map<std::size_t, std::vector<Vertex>> by_index;
        for (const auto & [line_no, text] : split.extra) {
            const auto colon = text.find(':');
            if (colon == std::string::npos)
                throw ParseError(line_no, "expected 'part <i>: ...'");
            std::size_t index = 0;
            try {
                index = std::stoul(text.substr(4, colon - 4));
            }
            catch (const std::exception &) {
                throw ParseError(line_no, "bad part index");
            }
            if (by_index.contains(index))
                throw ParseError(line_no, "part " + std::to_string(index) + " given twice");
            by_index[index] = parse_vertices(line_no, text.substr(colon + 1));
        }
        std::vector<std::vector<Vertex>> parts(by_index.rbegin()->first + 1);
        for (auto & [i, vs] : by_index)
            parts[i] = std::move(vs);
        try {
            return PartitionedGraph(std::move(g), std::move(parts));
        }
        catch (const std::invalid_argument & e) {
            throw ParseError(split.extra.back().first, e.what());
        }
    }

    auto load_partitioned(const std::string & path) -> PartitionedGraph
    {
        std::ifstream in(path);
        if (! in)
            throw std::runtime_error("cannot open " + path);
        return read_partitioned(in);
    }

    void write_constant(std::ostream & out, const ConstantGraph & cg)
    {
        write_graph(out, cg.graph);
        out << "const:";
        for (auto v : cg.constants)
            out << ' ' << v;
        out << '\n';
    }

    auto read_constant(std::istream & in) -> ConstantGraph
    {
        auto split = split_tagged(in, "const");
        std::istringstream graph_in(split.graph_text);
        auto g = read_graph(graph_in);
        if (split.extra.size() > 1)
            throw ParseError(split.extra[1].first, "more than one const line");
        std::vector<Vertex> constants;
        if (! split.extra.empty()) {
            const auto & [line_no, text] = split.extra.front();
            const auto colon = text.find(':');
            if (colon == std::string::npos)
                throw ParseError(line_no, "expected 'const: ...'");
            constants = parse_vertices(line_no, text.substr(colon + 1));
        }
        try {
            return ConstantGraph(std::move(g), std::move(constants));
        }
        catch (const std::invalid_argument & e) {
            throw ParseError(split.extra.empty() ? 0 : split.extra.front().first, e.what());
        }
    }
}
