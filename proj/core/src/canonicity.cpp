#include <rado/canonicity.hpp>

#include <algorithm>

namespace rado
{
    auto to_string(BehaviorClass c) -> std::string
    {
        switch (c) {
        case BehaviorClass::Identity: return "Identity";
        case BehaviorClass::Minus: return "Minus";
        case BehaviorClass::EE: return "EE";
        case BehaviorClass::EN: return "EN";
        case BehaviorClass::Constant: return "Constant";
        }
        return "?";
    }

    auto expected_color(BehaviorClass c, PairKind kind) -> PairColor
    {
        if (kind == PairKind::Equal)
            throw std::invalid_argument("behaviour classes act on pairs of distinct vertices");
        const bool edge = kind == PairKind::Edge;
        switch (c) {
        case BehaviorClass::Identity: return edge ? PairColor::Edge : PairColor::NonEdge;
        case BehaviorClass::Minus: return edge ? PairColor::NonEdge : PairColor::Edge;
        case BehaviorClass::EE: return PairColor::Edge;
        case BehaviorClass::EN: return PairColor::NonEdge;
        case BehaviorClass::Constant: return PairColor::Collapsed;
        }
        return PairColor::Collapsed;
    }

    auto behavior_of(GadgetKind kind) -> std::optional<BehaviorClass>
    {
        switch (kind) {
        case GadgetKind::Identity: return BehaviorClass::Identity;
        case GadgetKind::Minus: return BehaviorClass::Minus;
        case GadgetKind::EE: return BehaviorClass::EE;
        case GadgetKind::EN: return BehaviorClass::EN;
        case GadgetKind::Constant: return BehaviorClass::Constant;
        default: return std::nullopt;
        }
    }

    auto ClassSet::single() const -> std::optional<BehaviorClass>
    {
        if (size() != 1)
            return std::nullopt;
        for (auto c : all_behavior_classes)
            if (contains(c))
                return c;
        return std::nullopt;
    }

    auto ClassSet::classes() const -> std::vector<BehaviorClass>
    {
        std::vector<BehaviorClass> result;
        for (auto c : all_behavior_classes)
            if (contains(c))
                result.push_back(c);
        return result;
    }

    void ClassSet::restrict_to(PairKind kind, PairColor color)
    {
        for (auto c : all_behavior_classes)
            if (expected_color(c, kind) != color)
                _bits &= static_cast<std::uint8_t>(~of(c)._bits);
    }

    auto to_string(ClassSet s) -> std::string
    {
        std::string result = "{";
        for (auto c : s.classes())
            result += (result.size() > 1 ? "," : "") + to_string(c);
        return result + "}";
    }

    namespace
    {
        void check_in_domain(const FunctionGadget & f, std::span<const Vertex> s)
        {
            for (auto v : s)
                if (! f.in_dom(v))
                    throw std::invalid_argument("vertex " + std::to_string(v) + " is outside the gadget domain");
        }

        void check_distinct(std::span<const Vertex> s)
        {
            std::vector<Vertex> sorted(s.begin(), s.end());
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw std::invalid_argument("vertex set has repeated entries");
        }

        void observe(const FunctionGadget & f, Vertex x, Vertex y, ClassSet & set)
        {
            set.restrict_to(f.src().kind(x, y), pair_color(f, x, y));
        }
    }

    auto classify_on_set(const FunctionGadget & f, std::span<const Vertex> s) -> ClassSet
    {
        if (s.size() < 2)
            throw std::invalid_argument("classify_on_set needs at least two vertices");
        check_in_domain(f, s);
        check_distinct(s);

        ClassSet result = ClassSet::all();
        for (std::size_t i = 0; i < s.size() && ! result.empty(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                observe(f, s[i], s[j], result);
        return result;
    }

    auto is_canonical_between(const FunctionGadget & f, std::span<const Vertex> s1, std::span<const Vertex> s2) -> ClassSet
    {
        if (s1.empty() || s2.empty())
            throw std::invalid_argument("is_canonical_between needs two nonempty sets");
        check_in_domain(f, s1);
        check_in_domain(f, s2);
        for (auto v : s1)
            if (std::find(s2.begin(), s2.end(), v) != s2.end())
                throw std::invalid_argument("sets overlap at vertex " + std::to_string(v));

        ClassSet result = ClassSet::all();
        for (auto x : s1)
            for (auto y : s2)
                observe(f, x, y, result);
        return result;
    }

    auto find_conflicts(const FunctionGadget & f, std::span<const Vertex> s) -> std::vector<Conflict>
    {
        check_in_domain(f, s);
        std::vector<Conflict> result;
        for (auto kind : {PairKind::Edge, PairKind::NonEdge}) {
            std::optional<std::pair<Vertex, Vertex>> first;
            PairColor first_color = PairColor::Collapsed;
            bool reported = false;
            for (std::size_t i = 0; i < s.size() && ! reported; ++i)
                for (std::size_t j = i + 1; j < s.size() && ! reported; ++j) {
                    if (f.src().kind(s[i], s[j]) != kind)
                        continue;
                    const auto color = pair_color(f, s[i], s[j]);
                    if (! first) {
                        first.emplace(s[i], s[j]);
                        first_color = color;
                    }
                    else if (color != first_color) {
                        result.push_back(Conflict{*first, {s[i], s[j]}, kind});
                        reported = true;
                    }
                }
        }
        // consistent colours per kind can still contradict every class jointly
        // (an edge collapsed while a non-edge is kept apart)
        if (result.empty() && s.size() >= 2 && classify_on_set(f, s).empty()) {
            std::optional<std::pair<Vertex, Vertex>> edge, non_edge;
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j) {
                    auto & slot = f.src().adjacent(s[i], s[j]) ? edge : non_edge;
                    if (! slot)
                        slot.emplace(s[i], s[j]);
                }
            if (edge && non_edge)
                result.push_back(Conflict{*edge, *non_edge, PairKind::Equal});
        }
        return result;
    }

    auto ProfileEntry::status() const -> EntryStatus
    {
        if (consistent.empty())
            return EntryStatus::NonCanonical;
        return consistent.size() == 1 ? EntryStatus::Determined : EntryStatus::Undetermined;
    }

    auto ProfileEntry::label() const -> std::string
    {
        switch (status()) {
        case EntryStatus::Determined: return to_string(*consistent.single());
        case EntryStatus::Undetermined: return "Undetermined";
        case EntryStatus::NonCanonical: return "NonCanonical";
        }
        return "?";
    }

    auto BehaviorProfile::canonical() const -> bool
    {
        for (const auto & row : entries)
            for (const auto & e : row)
                if (e.status() == EntryStatus::NonCanonical)
                    return false;
        return true;
    }

    auto profile_parts(const FunctionGadget & f, const std::vector<std::vector<Vertex>> & parts) -> BehaviorProfile
    {
        for (const auto & p : parts)
            check_in_domain(f, p);

        BehaviorProfile profile{parts, std::vector<std::vector<ProfileEntry>>(parts.size(), std::vector<ProfileEntry>(parts.size()))};
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i].size() >= 2)
                profile.entries[i][i].consistent = classify_on_set(f, parts[i]);
            for (std::size_t j = i + 1; j < parts.size(); ++j) {
                if (! parts[i].empty() && ! parts[j].empty())
                    profile.entries[i][j].consistent = is_canonical_between(f, parts[i], parts[j]);
                profile.entries[j][i] = profile.entries[i][j];
            }
        }
        return profile;
    }

    auto profile_partitioned(const FunctionGadget & f, const PartitionedGraph & pg) -> BehaviorProfile
    {
        if (! (pg.graph == f.src()))
            throw std::invalid_argument("partitioned graph does not live on the gadget's source graph");
        return profile_parts(f, pg.parts);
    }

    auto is_canonical_constant_graph(const FunctionGadget & f, const ConstantGraph & cg) -> BehaviorProfile
    {
        return profile_partitioned(f, associate_partitioned(cg));
    }

    namespace
    {
        auto map_parts(const std::vector<std::vector<Vertex>> & parts, const Embedding & e) -> std::vector<std::vector<Vertex>>
        {
            std::vector<std::vector<Vertex>> result;
            result.reserve(parts.size());
            for (const auto & p : parts) {
                auto & mapped = result.emplace_back();
                for (auto v : p)
                    mapped.push_back(e[v]);
            }
            return result;
        }

        auto pattern_parts(const CanonicalPattern & pattern) -> std::vector<std::vector<Vertex>>
        {
            return std::visit(
                [](const auto & p) -> std::vector<std::vector<Vertex>> {
                    using P = std::decay_t<decltype(p)>;
                    if constexpr (std::is_same_v<P, Graph>)
                        return {all_vertices(p)};
                    else if constexpr (std::is_same_v<P, PartitionedGraph>)
                        return p.parts;
                    else
                        return associate_partitioned(p).parts;
                },
                pattern);
        }
    }

    auto profile_on_copy(const FunctionGadget & f, const CanonicalPattern & pattern, const Embedding & e) -> BehaviorProfile
    {
        return profile_parts(f, map_parts(pattern_parts(pattern), e));
    }

    auto find_canonical_copy(const FunctionGadget & f, const CanonicalPattern & pattern, const CanonicalHost & host,
        std::size_t limit) -> std::optional<Embedding>
    {
        const Graph * pattern_graph = nullptr;
        EmbeddingConstraints constraints;

        if (auto * g = std::get_if<Graph>(&pattern)) {
            if (! std::holds_alternative<std::monostate>(host))
                throw std::invalid_argument("plain graph pattern takes no host structure");
            pattern_graph = g;
        }
        else if (auto * pg = std::get_if<PartitionedGraph>(&pattern)) {
            auto * h = std::get_if<PartitionedGraph>(&host);
            if (! h)
                throw std::invalid_argument("partitioned pattern needs a partitioned host");
            if (! (h->graph == f.src()))
                throw std::invalid_argument("host does not live on the gadget's source graph");
            pattern_graph = &pg->graph;
            constraints = part_constraints(*pg, *h);
        }
        else {
            const auto & cg = std::get<ConstantGraph>(pattern);
            auto * h = std::get_if<ConstantGraph>(&host);
            if (! h)
                throw std::invalid_argument("constant-graph pattern needs a constant-graph host");
            if (! (h->graph == f.src()))
                throw std::invalid_argument("host does not live on the gadget's source graph");
            pattern_graph = &cg.graph;
            constraints = constant_constraints(cg, *h);
        }

        VertexSet dom = f.src().empty_set();
        for (auto v : f.dom())
            dom.set(v);
        if (constraints.domains.empty())
            constraints.domains.assign(pattern_graph->size(), dom);
        else
            for (auto & d : constraints.domains)
                d &= dom;

        const auto parts = pattern_parts(pattern);
        std::optional<Embedding> found;
        std::size_t examined = 0;
        visit_embeddings(*pattern_graph, f.src(), constraints, [&](const Embedding & e) {
            if (examined++ >= limit)
                return false;
            if (profile_parts(f, map_parts(parts, e)).canonical()) {
                found = e;
                return false;
            }
            return true;
        });
        return found;
    }
}
