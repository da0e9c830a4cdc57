#include <rado/graph.hpp>

#include <algorithm>
#include <set>

namespace rado
{
    namespace
    {
        struct EmbeddingSearch
        {
            const Graph & pattern;
            const Graph & host;
            const EmbeddingConstraints & constraints;
            const std::function<bool(const Embedding &)> & visitor;

            Embedding current;
            VertexSet used;
            std::vector<VertexSet> candidates;

            auto run(std::size_t depth) -> bool
            {
                if (depth == pattern.size())
                    return visitor(current);

                auto & cand = candidates[depth];
                if (constraints.domains.empty())
                    cand.set();
                else
                    cand = constraints.domains[depth];
                cand -= used;

                for (std::size_t j = 0; j < depth && cand.any(); ++j) {
                    if (pattern.adjacent(static_cast<Vertex>(depth), static_cast<Vertex>(j)))
                        cand &= host.row(current.image[j]);
                    else
                        cand -= host.row(current.image[j]);
                }

                auto v = (constraints.order_preserving && depth > 0) ? cand.find_next(current.image[depth - 1]) : cand.find_first();
                for (; v != VertexSet::npos; v = cand.find_next(v)) {
                    current.image[depth] = static_cast<Vertex>(v);
                    used.set(v);
                    const bool keep_going = run(depth + 1);
                    used.reset(v);
                    if (! keep_going)
                        return false;
                }
                return true;
            }
        };
    }

    void visit_embeddings(const Graph & pattern, const Graph & host, const EmbeddingConstraints & constraints,
        const std::function<bool(const Embedding &)> & visitor)
    {
        if (! constraints.domains.empty()) {
            if (constraints.domains.size() != pattern.size())
                throw std::invalid_argument("one domain per pattern vertex required");
            for (const auto & d : constraints.domains)
                if (d.size() != host.size())
                    throw std::invalid_argument("domain size differs from host size");
        }
        if (pattern.size() > host.size())
            return;

        EmbeddingSearch search{pattern, host, constraints, visitor, Embedding{std::vector<Vertex>(pattern.size())},
            host.empty_set(), std::vector<VertexSet>(pattern.size(), host.empty_set())};
        search.run(0);
    }

    auto find_embeddings(const Graph & pattern, const Graph & host, std::size_t limit,
        const EmbeddingConstraints & constraints) -> std::vector<Embedding>
    {
        if (limit < 1)
            throw std::invalid_argument("find_embeddings needs limit >= 1");
        std::vector<Embedding> result;
        visit_embeddings(pattern, host, constraints, [&](const Embedding & e) {
            result.push_back(e);
            return result.size() < limit;
        });
        return result;
    }

    auto find_first_embedding(const Graph & pattern, const Graph & host,
        const EmbeddingConstraints & constraints) -> std::optional<Embedding>
    {
        std::optional<Embedding> result;
        visit_embeddings(pattern, host, constraints, [&](const Embedding & e) {
            result = e;
            return false;
        });
        return result;
    }

    auto PartialIso::contains(Vertex v) const -> bool
    {
        return std::any_of(pairs.begin(), pairs.end(), [&](const auto & p) { return p.first == v; });
    }

    auto PartialIso::image_of(Vertex v) const -> std::optional<Vertex>
    {
        for (auto [from, to] : pairs)
            if (from == v)
                return to;
        return std::nullopt;
    }

    auto is_partial_iso(const Graph & host, const PartialIso & p) -> bool
    {
        std::set<Vertex> dom, img;
        for (auto [from, to] : p.pairs) {
            if (from >= host.size() || to >= host.size())
                return false;
            if (! dom.insert(from).second || ! img.insert(to).second)
                return false;
        }
        for (std::size_t i = 0; i < p.pairs.size(); ++i)
            for (std::size_t j = i + 1; j < p.pairs.size(); ++j)
                if (host.adjacent(p.pairs[i].first, p.pairs[j].first) != host.adjacent(p.pairs[i].second, p.pairs[j].second))
                    return false;
        return true;
    }

    auto extend_partial_iso(const Graph & host, const PartialIso & p, Vertex v) -> std::optional<PartialIso>
    {
        return extend_partial_iso(host, p, v, host.full_set());
    }

    auto extend_partial_iso(const Graph & host, const PartialIso & p, Vertex v, const VertexSet & allowed)
        -> std::optional<PartialIso>
    {
        if (v >= host.size())
            throw std::out_of_range("vertex out of range");
        if (p.contains(v))
            throw std::invalid_argument("vertex " + std::to_string(v) + " already in the domain");

        VertexSet cand = allowed;
        for (auto [from, to] : p.pairs) {
            cand.reset(to);
            if (host.adjacent(v, from))
                cand &= host.row(to);
            else
                cand -= host.row(to);
        }
        const auto w = cand.find_first();
        if (w == VertexSet::npos)
            return std::nullopt;

        PartialIso extended = p;
        extended.pairs.emplace_back(v, static_cast<Vertex>(w));
        return extended;
    }
}
