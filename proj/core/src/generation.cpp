#include <rado/generation.hpp>

#include <algorithm>
#include <deque>
#include <set>

namespace rado
{
    namespace
    {
        auto kind_or_equal(const Graph & g, Vertex u, Vertex v) -> PairKind
        {
            return u == v ? PairKind::Equal : g.kind(u, v);
        }

        auto describe(const Graph & g) -> std::string
        {
            std::string s = std::to_string(g.size()) + " vertices, edges {";
            bool first = true;
            for (auto [u, v] : g.edges()) {
                s += (first ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
                first = false;
            }
            return s + "}";
        }

        auto distinct_points(const std::vector<Vertex> & points) -> std::vector<Vertex>
        {
            auto d = points;
            std::sort(d.begin(), d.end());
            d.erase(std::unique(d.begin(), d.end()), d.end());
            return d;
        }
    }

    auto replay_witness(const InterpolationWitness & w) -> WitnessCheck
    {
        WitnessCheck check;
        if (! w.source) {
            check.reason = "witness has no source graph";
            return check;
        }
        GraphPtr graph = w.source;
        std::vector<Vertex> points = w.window;
        for (auto v : points)
            if (v >= graph->size()) {
                check.reason = "window vertex " + std::to_string(v) + " is outside the source graph";
                return check;
            }

        for (std::size_t s = 0; s < w.steps.size(); ++s) {
            const auto & step = w.steps[s];
            const auto & gadget = step.gadget;
            const auto where = "step " + std::to_string(s + 1) + ": ";
            const auto current = distinct_points(points);

            std::set<Vertex> used;
            for (auto p : current) {
                auto it = step.reposition.find(p);
                if (it == step.reposition.end()) {
                    check.reason = where + "reposition misses point " + std::to_string(p);
                    return check;
                }
                if (it->second >= gadget.src().size() || ! gadget.in_dom(it->second)) {
                    check.reason = where + "point " + std::to_string(p) + " lands outside the gadget domain";
                    return check;
                }
                if (! used.insert(it->second).second) {
                    check.reason = where + "reposition is not injective";
                    return check;
                }
            }
            for (std::size_t i = 0; i < current.size(); ++i)
                for (std::size_t j = i + 1; j < current.size(); ++j) {
                    const auto a = step.reposition.at(current[i]);
                    const auto b = step.reposition.at(current[j]);
                    if (graph->kind(current[i], current[j]) != gadget.src().kind(a, b)) {
                        check.reason = where + "reposition changes the pair " + std::to_string(current[i]) + "," +
                            std::to_string(current[j]);
                        return check;
                    }
                }

            for (auto & p : points)
                p = gadget(step.reposition.at(p));
            graph = gadget.dst_ptr();
        }

        check.ok = true;
        check.images = std::move(points);
        check.final_graph = std::move(graph);
        return check;
    }

    auto verify_witness(const InterpolationWitness & w, const FunctionGadget & target) -> WitnessCheck
    {
        auto check = replay_witness(w);
        if (! check.ok)
            return check;
        check.ok = false;

        if (! w.finish) {
            check.reason = "witness has no finishing map";
            return check;
        }
        if (distinct_points(w.window) != target.dom()) {
            check.reason = "window differs from the target domain";
            return check;
        }

        const auto & finish = *w.finish;
        for (std::size_t i = 0; i < w.window.size(); ++i) {
            auto it = finish.find(check.images[i]);
            if (it == finish.end() || it->second != target(w.window[i])) {
                check.reason = "composite disagrees with the target at " + std::to_string(w.window[i]);
                return check;
            }
        }
        for (auto a = finish.begin(); a != finish.end(); ++a)
            for (auto b = std::next(a); b != finish.end(); ++b)
                if (kind_or_equal(*check.final_graph, a->first, b->first) != kind_or_equal(target.dst(), a->second, b->second)) {
                    check.reason = "finishing map is not a partial isomorphism";
                    return check;
                }

        check.ok = true;
        return check;
    }

    namespace
    {
        struct Config
        {
            GraphPtr graph;
            std::vector<Vertex> points;
            std::size_t parent = 0;
            std::optional<InterpolationStep> step;
            std::string note;
            unsigned depth = 0;
        };

        // local type of a configuration: equality pattern and pair kinds over the window
        auto type_key(const Config & c, bool with_position) -> std::vector<std::uint64_t>
        {
            std::vector<std::uint64_t> key;
            const auto & pts = c.points;
            for (std::size_t i = 0; i < pts.size(); ++i)
                for (std::size_t j = i + 1; j < pts.size(); ++j)
                    key.push_back(static_cast<std::uint64_t>(kind_or_equal(*c.graph, pts[i], pts[j])));
            if (with_position) {
                key.push_back(reinterpret_cast<std::uintptr_t>(c.graph.get()));
                key.insert(key.end(), pts.begin(), pts.end());
            }
            return key;
        }

        auto finishing_map(const Config & c, const FunctionGadget & target) -> std::optional<std::map<Vertex, Vertex>>
        {
            const auto & dom = target.dom();
            for (std::size_t i = 0; i < dom.size(); ++i)
                for (std::size_t j = i + 1; j < dom.size(); ++j)
                    if (kind_or_equal(*c.graph, c.points[i], c.points[j]) != kind_or_equal(target.dst(), target(dom[i]), target(dom[j])))
                        return std::nullopt;
            std::map<Vertex, Vertex> alpha;
            for (std::size_t i = 0; i < dom.size(); ++i)
                alpha.emplace(c.points[i], target(dom[i]));
            return alpha;
        }

        struct Move
        {
            std::map<Vertex, Vertex> reposition;
            FunctionGadget gadget;
            std::string note;
        };

        auto instantiate(GadgetKind kind, const GraphPtr & host, const std::vector<Vertex> & image)
            -> std::vector<std::pair<FunctionGadget, std::string>>
        {
            std::vector<std::pair<FunctionGadget, std::string>> result;
            try {
                switch (kind) {
                case GadgetKind::Identity: result.emplace_back(make_identity(host, image), "identity"); break;
                case GadgetKind::Minus: result.emplace_back(make_minus(host, image), "minus"); break;
                case GadgetKind::EE: result.emplace_back(make_ee(host, host, image), "eE"); break;
                case GadgetKind::EN: result.emplace_back(make_en(host, host, image), "eN"); break;
                case GadgetKind::Constant: result.emplace_back(make_constant(host, host, 0, image), "const"); break;
                case GadgetKind::Switch:
                    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << image.size()); ++mask) {
                        std::vector<Vertex> s;
                        for (std::size_t i = 0; i < image.size(); ++i)
                            if (mask >> i & 1)
                                s.push_back(image[i]);
                        result.emplace_back(make_switch(host, s, image), "switch");
                    }
                    break;
                case GadgetKind::Custom: break;
                }
            }
            catch (const GadgetError &) {
            }
            return result;
        }

        auto moves_from(const Config & c, const GeneratorSet & gens, const std::vector<GraphPtr> & hosts,
            const InterpolateOptions & options) -> std::vector<Move>
        {
            const auto current = distinct_points(c.points);
            const auto pattern = c.graph->induced(current);
            std::vector<Move> moves;

            auto reposition_of = [&](const Embedding & e) {
                std::map<Vertex, Vertex> r;
                for (std::size_t i = 0; i < current.size(); ++i)
                    r.emplace(current[i], e[i]);
                return r;
            };

            for (auto kind : gens.named) {
                const auto & targets = gens.automorphism_free && ! hosts.empty() ? hosts : std::vector<GraphPtr>{c.graph};
                for (std::size_t h = 0; h < targets.size(); ++h) {
                    std::optional<Embedding> e;
                    if (gens.automorphism_free)
                        e = find_first_embedding(pattern, *targets[h]);
                    else
                        e = Embedding{current};
                    if (! e)
                        continue;
                    auto image = e->image;
                    for (auto & [gadget, name] : instantiate(kind, targets[h], image))
                        moves.push_back(Move{reposition_of(*e), std::move(gadget), name + " on host " + std::to_string(h)});
                }
            }

            for (std::size_t g = 0; g < gens.custom.size(); ++g) {
                const auto & gadget = gens.custom[g];
                std::vector<Embedding> embeddings;
                if (gens.automorphism_free) {
                    VertexSet dom = gadget.src().empty_set();
                    for (auto v : gadget.dom())
                        dom.set(v);
                    EmbeddingConstraints constraints;
                    constraints.domains.assign(pattern.size(), dom);
                    embeddings = find_embeddings(pattern, gadget.src(), options.max_embeddings_per_step, constraints);
                }
                else if (gadget.src_ptr() == c.graph &&
                    std::all_of(current.begin(), current.end(), [&](Vertex v) { return gadget.in_dom(v); }))
                    embeddings.push_back(Embedding{current});

                for (const auto & e : embeddings)
                    moves.push_back(Move{reposition_of(e), gadget, "custom gadget " + std::to_string(g)});
            }
            return moves;
        }

        auto assemble(const std::vector<Config> & configs, std::size_t last, const FunctionGadget & target,
            std::map<Vertex, Vertex> alpha) -> InterpolationWitness
        {
            InterpolationWitness w;
            w.source = target.src_ptr();
            w.window = target.dom();
            for (auto i = last; i != 0; i = configs[i].parent) {
                w.steps.push_back(*configs[i].step);
                w.transcript.push_back(configs[i].note);
            }
            std::reverse(w.steps.begin(), w.steps.end());
            std::reverse(w.transcript.begin(), w.transcript.end());
            for (std::size_t i = 0; i < w.transcript.size(); ++i)
                w.transcript[i] = "step " + std::to_string(i + 1) + ": " + w.transcript[i];
            w.finish = std::move(alpha);
            return w;
        }
    }

    auto interpolate(const FunctionGadget & target, const GeneratorSet & gens, unsigned depth,
        const std::vector<GraphPtr> & hosts, const InterpolateOptions & options) -> std::optional<InterpolationWitness>
    {
        if (depth < 1)
            throw std::invalid_argument("interpolation depth must be at least 1");
        if (gens.named.empty() && gens.custom.empty())
            throw std::invalid_argument("generator set is empty");

        std::vector<Config> configs;
        configs.push_back(Config{target.src_ptr(), target.dom(), 0, std::nullopt, "", 0});
        std::set<std::vector<std::uint64_t>> seen{type_key(configs[0], ! gens.automorphism_free)};
        std::deque<std::size_t> queue{0};

        while (! queue.empty()) {
            const auto index = queue.front();
            queue.pop_front();
            const auto here = configs[index];
            if (here.depth >= depth)
                continue;

            for (auto & move : moves_from(here, gens, hosts, options)) {
                Config next{move.gadget.dst_ptr(), here.points, index, std::nullopt, move.note, here.depth + 1};
                for (auto & p : next.points)
                    p = move.gadget(move.reposition.at(p));
                next.step = InterpolationStep{std::move(move.reposition), std::move(move.gadget)};

                const bool finished = static_cast<bool>(finishing_map(next, target));
                auto key = type_key(next, ! gens.automorphism_free);
                if (! finished && seen.contains(key))
                    continue;

                configs.push_back(std::move(next));
                const auto child = configs.size() - 1;
                if (auto alpha = finishing_map(configs[child], target)) {
                    auto w = assemble(configs, child, target, std::move(*alpha));
                    if (verify_witness(w, target).ok)
                        return w;
                }
                seen.insert(std::move(key));
                queue.push_back(child);
                if (configs.size() > options.max_states)
                    return std::nullopt;
            }
        }
        return std::nullopt;
    }

    auto delete_edge_step(const ConstantGraph & F, const GraphPtr & host) -> FunctionGadget
    {
        if (F.constants.size() != 2 || ! F.graph.adjacent(F.constants[0], F.constants[1]))
            throw std::invalid_argument("edge deletion needs two adjacent constants");

        auto with_edge = find_first_embedding(F.graph, *host);
        if (! with_edge)
            throw GenerationError("host has no copy of " + describe(F.graph));

        auto without = F.graph;
        without.remove_edge(F.constants[0], F.constants[1]);
        auto target = find_first_embedding(without, *host);
        if (! target)
            throw GenerationError("host has no copy of " + describe(without));

        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex v = 0; v < F.graph.size(); ++v)
            pairs.emplace_back((*with_edge)[v], (*target)[v]);
        return make_custom(host, host, std::move(pairs));
    }

    namespace
    {
        void check_window(const Graph & host, const std::vector<Vertex> & window)
        {
            for (auto v : window)
                if (v >= host.size())
                    throw std::invalid_argument("window vertex " + std::to_string(v) + " is outside the host");
            if (distinct_points(window).size() != window.size())
                throw std::invalid_argument("window has repeated vertices");
        }
    }

    auto delete_all_edges(const GraphPtr & host, std::vector<Vertex> window) -> InterpolationWitness
    {
        check_window(*host, window);

        InterpolationWitness w;
        w.source = host;
        w.window = window;
        auto points = window;

        while (true) {
            const auto current = host->induced(points);
            const auto edges = current.edges();
            if (edges.empty())
                break;
            const auto [a, b] = edges.front();

            auto gadget = delete_edge_step(ConstantGraph(current, {a, b}), host);
            const auto copy = *find_first_embedding(current, *host);
            std::map<Vertex, Vertex> reposition;
            for (std::size_t i = 0; i < points.size(); ++i)
                reposition.emplace(points[i], copy[i]);
            for (std::size_t i = 0; i < points.size(); ++i)
                points[i] = gadget(copy[i]);

            w.transcript.push_back("step " + std::to_string(w.steps.size() + 1) + ": delete the edge between window entries " +
                std::to_string(a) + " and " + std::to_string(b));
            w.steps.push_back(InterpolationStep{std::move(reposition), std::move(gadget)});
        }
        return w;
    }

    namespace
    {
        auto least_collapsed_pair(const FunctionGadget & f, PairKind kind) -> std::optional<std::pair<Vertex, Vertex>>
        {
            const auto & dom = f.dom();
            for (std::size_t i = 0; i < dom.size(); ++i)
                for (std::size_t j = i + 1; j < dom.size(); ++j)
                    if (f.src().kind(dom[i], dom[j]) == kind && f(dom[i]) == f(dom[j]))
                        return std::pair{dom[i], dom[j]};
            return std::nullopt;
        }

        auto acts_on(const FunctionGadget & f, const GraphPtr & host) -> bool
        {
            auto same = [&](const GraphPtr & g) { return g == host || *g == *host; };
            return same(f.src_ptr()) && same(f.dst_ptr());
        }
    }

    auto collapse_all(std::vector<Vertex> F, const GraphPtr & host, const FunctionGadget & g, const FunctionGadget & h)
        -> InterpolationWitness
    {
        check_window(*host, F);
        if (! acts_on(g, host) || ! acts_on(h, host))
            throw std::invalid_argument("collapsing gadgets must map the host into itself");
        const auto g_pair = least_collapsed_pair(g, PairKind::Edge);
        if (! g_pair)
            throw std::invalid_argument("g collapses no edge");
        const auto h_pair = least_collapsed_pair(h, PairKind::NonEdge);
        if (! h_pair)
            throw std::invalid_argument("h collapses no non-edge");

        InterpolationWitness w;
        w.source = host;
        w.window = F;
        auto points = F;

        while (true) {
            std::optional<std::pair<Vertex, Vertex>> pair;
            for (std::size_t i = 0; i < points.size() && ! pair; ++i)
                for (std::size_t j = i + 1; j < points.size() && ! pair; ++j)
                    if (points[i] != points[j])
                        pair.emplace(points[i], points[j]);
            if (! pair)
                break;

            const bool edge = host->adjacent(pair->first, pair->second);
            const auto & gadget = edge ? g : h;
            const auto [a, b] = edge ? *g_pair : *h_pair;

            VertexSet allowed = host->empty_set();
            for (auto v : gadget.dom())
                allowed.set(v);

            PartialIso p{{{pair->first, a}, {pair->second, b}}};
            for (auto v : distinct_points(points)) {
                if (p.contains(v))
                    continue;
                auto extended = extend_partial_iso(*host, p, v, allowed);
                if (! extended)
                    throw GenerationError("no repositioning of point " + std::to_string(v) + " into the gadget domain");
                p = std::move(*extended);
            }

            std::map<Vertex, Vertex> reposition(p.pairs.begin(), p.pairs.end());
            for (auto & v : points)
                v = gadget(reposition.at(v));
            w.transcript.push_back("step " + std::to_string(w.steps.size() + 1) + ": collapse " + (edge ? "edge " : "non-edge ") +
                std::to_string(pair->first) + "," + std::to_string(pair->second) + " via " + (edge ? "g" : "h"));
            w.steps.push_back(InterpolationStep{std::move(reposition), gadget});
        }
        return w;
    }

    auto to_string(ReductClass c) -> std::string
    {
        switch (c) {
        case ReductClass::GraphClass: return "GraphClass";
        case ReductClass::MinusClass: return "MinusClass";
        case ReductClass::SwitchClass: return "SwitchClass";
        case ReductClass::MinusSwitchClass: return "MinusSwitchClass";
        case ReductClass::EqualityClass: return "EqualityClass";
        }
        return "?";
    }

    auto classify_reduct(std::span<const Relation> relations, const Graph & host, unsigned k) -> ReductVerdict
    {
        if (relations.empty())
            throw std::invalid_argument("no relations to classify");
        for (const auto & r : relations)
            if (r.arity() > host.size())
                throw std::invalid_argument("host has " + std::to_string(host.size()) + " vertices, fewer than the arity " +
                    std::to_string(r.arity()) + " of " + r.name());
        if (auto failure = check_extension(host, k))
            throw std::invalid_argument("host fails the " + std::to_string(k) + "-extension property");

        ReductVerdict verdict;
        verdict.equality_definable = verdict.complement_invariant = verdict.switch_invariant = true;
        for (const auto & r : relations) {
            auto & cert = verdict.certificates.emplace_back();
            cert.name = r.name();
            cert.equality = definable_from_equality(r, host);
            cert.complement = invariant_under_complement(r, host);
            for (Vertex v = 0; v < host.size(); ++v) {
                ++cert.switching.vertices_checked;
                auto result = invariant_under_switch(r, host, v);
                if (! result.preserved()) {
                    cert.switching.vertex = v;
                    cert.switching.result = std::move(result);
                    break;
                }
            }
            verdict.equality_definable = verdict.equality_definable && ! cert.equality;
            verdict.complement_invariant = verdict.complement_invariant && cert.complement.preserved();
            verdict.switch_invariant = verdict.switch_invariant && ! cert.switching.vertex;
        }

        if (verdict.equality_definable)
            verdict.cls = ReductClass::EqualityClass;
        else if (verdict.complement_invariant && verdict.switch_invariant)
            verdict.cls = ReductClass::MinusSwitchClass;
        else if (verdict.complement_invariant)
            verdict.cls = ReductClass::MinusClass;
        else if (verdict.switch_invariant)
            verdict.cls = ReductClass::SwitchClass;
        else
            verdict.cls = ReductClass::GraphClass;
        return verdict;
    }

    auto classify_reduct(const Relation & relation, const Graph & host, unsigned k) -> ReductVerdict
    {
        return classify_reduct(std::span<const Relation>(&relation, 1), host, k);
    }
}
