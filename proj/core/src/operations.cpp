#include <rado/operations.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace rado
{
    auto to_string(GadgetKind kind) -> std::string
    {
        switch (kind) {
        case GadgetKind::Identity: return "identity";
        case GadgetKind::Minus: return "minus";
        case GadgetKind::EE: return "eE";
        case GadgetKind::EN: return "eN";
        case GadgetKind::Constant: return "const";
        case GadgetKind::Switch: return "switch";
        case GadgetKind::Custom: return "custom";
        }
        return "?";
    }

    auto parse_gadget_kind(std::string_view name) -> GadgetKind
    {
        for (auto k : {GadgetKind::Identity, GadgetKind::Minus, GadgetKind::EE, GadgetKind::EN, GadgetKind::Constant,
                 GadgetKind::Switch, GadgetKind::Custom})
            if (to_string(k) == name)
                return k;
        throw std::invalid_argument("unknown gadget kind '" + std::string(name) + "'");
    }

    auto to_string(PairColor color) -> std::string
    {
        switch (color) {
        case PairColor::Collapsed: return "Collapsed";
        case PairColor::Edge: return "Edge";
        case PairColor::NonEdge: return "NonEdge";
        }
        return "?";
    }

    FunctionGadget::FunctionGadget(GraphPtr src, GraphPtr dst, std::vector<Vertex> dom, std::vector<Vertex> map,
        GadgetKind label, std::vector<Vertex> switch_set) :
        _src(std::move(src)),
        _dst(std::move(dst)),
        _dom(std::move(dom)),
        _map(std::move(map)),
        _label(label),
        _switch_set(std::move(switch_set))
    {
        if (! _src || ! _dst)
            throw GadgetError("gadget needs both a source and a target graph");
        std::sort(_dom.begin(), _dom.end());
        _in_dom = _src->empty_set();
        for (auto v : _dom) {
            if (v >= _src->size())
                throw GadgetError("domain vertex " + std::to_string(v) + " is not in the source graph");
            if (_in_dom.test(v))
                throw GadgetError("domain vertex " + std::to_string(v) + " repeated");
            _in_dom.set(v);
            if (v >= _map.size())
                throw GadgetError("map undefined at domain vertex " + std::to_string(v));
            if (_map[v] >= _dst->size())
                throw GadgetError("image of " + std::to_string(v) + " is not in the target graph");
        }
        _map.resize(_src->size(), 0);
        verify();
    }

    auto FunctionGadget::operator()(Vertex v) const -> Vertex
    {
        if (! in_dom(v))
            throw std::out_of_range("vertex " + std::to_string(v) + " outside the gadget domain");
        return _map[v];
    }

    auto FunctionGadget::relabelled(GadgetKind label) const -> FunctionGadget
    {
        return FunctionGadget(_src, _dst, _dom, _map, label, _switch_set);
    }

    void FunctionGadget::verify() const
    {
        auto each_pair = [&](auto && check) {
            for (std::size_t i = 0; i < _dom.size(); ++i)
                for (std::size_t j = i + 1; j < _dom.size(); ++j)
                    check(_dom[i], _dom[j]);
        };

        switch (_label) {
        case GadgetKind::Custom:
            return;

        case GadgetKind::Identity:
            if (! (*_src == *_dst))
                throw GadgetError("identity gadget needs the target graph to equal the source graph");
            for (auto v : _dom)
                if (_map[v] != v)
                    throw GadgetError("identity gadget moves vertex " + std::to_string(v));
            return;

        case GadgetKind::EE:
            each_pair([&](Vertex x, Vertex y) {
                if (_map[x] == _map[y] || ! _dst->adjacent(_map[x], _map[y]))
                    throw GadgetError("eE images of " + std::to_string(x) + "," + std::to_string(y) + " are not adjacent");
            });
            return;

        case GadgetKind::EN:
            each_pair([&](Vertex x, Vertex y) {
                if (_map[x] == _map[y] || _dst->adjacent(_map[x], _map[y]))
                    throw GadgetError("eN images of " + std::to_string(x) + "," + std::to_string(y) + " are not a non-edge");
            });
            return;

        case GadgetKind::Minus:
            each_pair([&](Vertex x, Vertex y) {
                const auto before = _src->kind(x, y);
                const auto after = _dst->kind(_map[x], _map[y]);
                if (after == PairKind::Equal || before == after)
                    throw GadgetError("minus does not flip the pair " + std::to_string(x) + "," + std::to_string(y));
            });
            return;

        case GadgetKind::Constant:
            each_pair([&](Vertex x, Vertex y) {
                if (_map[x] != _map[y])
                    throw GadgetError("constant gadget separates " + std::to_string(x) + " and " + std::to_string(y));
            });
            return;

        case GadgetKind::Switch: {
            if (_switch_set.empty())
                throw GadgetError("switch gadget needs a nonempty switch set");
            if (! (switch_graph(*_src, _switch_set) == *_dst))
                throw GadgetError("switch gadget target is not the switched source graph");
            for (auto v : _dom)
                if (_map[v] != v)
                    throw GadgetError("switch gadget moves vertex " + std::to_string(v));
            return;
        }
        }
    }

    namespace
    {
        auto domain_or_all(const Graph & src, std::optional<std::vector<Vertex>> dom) -> std::vector<Vertex>
        {
            return dom ? std::move(*dom) : all_vertices(src);
        }

        auto injective_onto_pattern(GraphPtr src, GraphPtr dst, std::vector<Vertex> dom, bool clique, GadgetKind label)
            -> FunctionGadget
        {
            std::sort(dom.begin(), dom.end());
            const auto pattern = clique ? complete_graph(dom.size()) : empty_graph(dom.size());
            auto e = find_first_embedding(pattern, *dst);
            if (! e)
                throw GadgetError(std::string("target graph has no ") + (clique ? "clique" : "independent set") + " of size " +
                    std::to_string(dom.size()));
            std::vector<Vertex> map(src->size(), 0);
            for (std::size_t i = 0; i < dom.size(); ++i)
                map[dom[i]] = e->image[i];
            return FunctionGadget(std::move(src), std::move(dst), std::move(dom), std::move(map), label);
        }
    }

    auto make_identity(GraphPtr src, std::optional<std::vector<Vertex>> dom) -> FunctionGadget
    {
        auto d = domain_or_all(*src, std::move(dom));
        auto map = all_vertices(*src);
        return FunctionGadget(src, src, std::move(d), std::move(map), GadgetKind::Identity);
    }

    auto make_ee(GraphPtr src, GraphPtr dst, std::optional<std::vector<Vertex>> dom) -> FunctionGadget
    {
        auto d = domain_or_all(*src, std::move(dom));
        return injective_onto_pattern(std::move(src), std::move(dst), std::move(d), true, GadgetKind::EE);
    }

    auto make_en(GraphPtr src, GraphPtr dst, std::optional<std::vector<Vertex>> dom) -> FunctionGadget
    {
        auto d = domain_or_all(*src, std::move(dom));
        return injective_onto_pattern(std::move(src), std::move(dst), std::move(d), false, GadgetKind::EN);
    }

    auto make_minus(GraphPtr src, std::optional<std::vector<Vertex>> dom) -> FunctionGadget
    {
        auto d = domain_or_all(*src, std::move(dom));
        auto dst = std::make_shared<const Graph>(complement_graph(*src));
        return FunctionGadget(src, std::move(dst), std::move(d), all_vertices(*src), GadgetKind::Minus);
    }

    auto make_minus_by_witness(GraphPtr src, std::vector<Vertex> witness) -> FunctionGadget
    {
        if (witness.size() != src->size())
            throw GadgetError("minus witness must be a permutation of all source vertices");
        auto d = all_vertices(*src);
        return FunctionGadget(src, src, std::move(d), std::move(witness), GadgetKind::Minus);
    }

    auto make_constant(GraphPtr src, GraphPtr dst, Vertex target, std::optional<std::vector<Vertex>> dom) -> FunctionGadget
    {
        if (target >= dst->size())
            throw GadgetError("constant target " + std::to_string(target) + " is not in the target graph");
        auto d = domain_or_all(*src, std::move(dom));
        std::vector<Vertex> map(src->size(), target);
        return FunctionGadget(std::move(src), std::move(dst), std::move(d), std::move(map), GadgetKind::Constant);
    }

    auto make_switch(GraphPtr src, std::vector<Vertex> s, std::optional<std::vector<Vertex>> dom) -> FunctionGadget
    {
        if (s.empty())
            throw GadgetError("switch gadget needs a nonempty switch set");
        auto d = domain_or_all(*src, std::move(dom));
        auto dst = std::make_shared<const Graph>(switch_graph(*src, s));
        return FunctionGadget(src, std::move(dst), std::move(d), all_vertices(*src), GadgetKind::Switch, std::move(s));
    }

    auto make_custom(GraphPtr src, GraphPtr dst, std::vector<std::pair<Vertex, Vertex>> pairs) -> FunctionGadget
    {
        std::vector<Vertex> dom;
        std::vector<Vertex> map(src->size(), 0);
        for (auto [from, to] : pairs) {
            if (from >= src->size())
                throw GadgetError("domain vertex " + std::to_string(from) + " is not in the source graph");
            dom.push_back(from);
            map[from] = to;
        }
        return FunctionGadget(std::move(src), std::move(dst), std::move(dom), std::move(map), GadgetKind::Custom);
    }

    auto make_named(GadgetKind kind, GraphPtr src, const NamedParams & params) -> FunctionGadget
    {
        auto need_dst = [&]() -> GraphPtr {
            if (! params.dst)
                throw GadgetError(to_string(kind) + " gadget needs a target graph");
            return params.dst;
        };

        switch (kind) {
        case GadgetKind::Identity: return make_identity(std::move(src), params.dom);
        case GadgetKind::EE: return make_ee(std::move(src), need_dst(), params.dom);
        case GadgetKind::EN: return make_en(std::move(src), need_dst(), params.dom);
        case GadgetKind::Minus:
            if (params.witness)
                return make_minus_by_witness(std::move(src), *params.witness);
            return make_minus(std::move(src), params.dom);
        case GadgetKind::Constant:
            if (! params.target)
                throw GadgetError("const gadget needs a target vertex");
            return make_constant(std::move(src), params.dst ? params.dst : src, *params.target, params.dom);
        case GadgetKind::Switch: return make_switch(std::move(src), params.switch_set, params.dom);
        case GadgetKind::Custom: throw GadgetError("custom gadgets are built from explicit pairs");
        }
        throw GadgetError("unknown gadget kind");
    }

    auto compose(const FunctionGadget & outer, const FunctionGadget & inner) -> FunctionGadget
    {
        if (outer.src_ptr() != inner.dst_ptr() && ! (outer.src() == inner.dst()))
            throw GadgetError("composition mismatch: inner target graph differs from outer source graph");

        std::vector<Vertex> map(inner.src().size(), 0);
        for (auto v : inner.dom()) {
            const auto mid = inner(v);
            if (! outer.in_dom(mid))
                throw GadgetError("image " + std::to_string(mid) + " of " + std::to_string(v) + " is outside the outer domain");
            map[v] = outer(mid);
        }
        return FunctionGadget(inner.src_ptr(), outer.dst_ptr(), inner.dom(), std::move(map), GadgetKind::Custom);
    }

    auto pair_color(const FunctionGadget & f, Vertex x, Vertex y) -> PairColor
    {
        if (x == y)
            throw std::invalid_argument("pair_color needs distinct vertices");
        const auto fx = f(x), fy = f(y);
        if (fx == fy)
            return PairColor::Collapsed;
        return f.dst().adjacent(fx, fy) ? PairColor::Edge : PairColor::NonEdge;
    }

    auto violates(const FunctionGadget & f, const Relation & r) -> PreservationResult
    {
        return preserved_by_map(r, f.raw_map(), f.src(), f.dst(), f.dom());
    }

    auto read_gadget(std::istream & in, const std::string & base_dir) -> FunctionGadget
    {
        namespace fs = std::filesystem;
        auto resolve = [&](const std::string & p) {
            const fs::path path(p);
            return path.is_absolute() ? path.string() : (fs::path(base_dir) / path).string();
        };

        std::optional<std::string> src_path, dst_path;
        GadgetKind label = GadgetKind::Custom;
        std::vector<Vertex> switch_set;
        std::vector<std::pair<Vertex, Vertex>> pairs;
        std::size_t line_no = 0;
        std::string line;

        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#')
                continue;
            std::istringstream fields(line);
            std::string first;
            fields >> first;
            if (first == "src" || first == "dst") {
                std::string p;
                if (! (fields >> p))
                    throw ParseError(line_no, "expected a graph file after '" + first + "'");
                (first == "src" ? src_path : dst_path) = p;
            }
            else if (first == "label") {
                std::string name;
                fields >> name;
                try {
                    label = parse_gadget_kind(name);
                }
                catch (const std::invalid_argument & e) {
                    throw ParseError(line_no, e.what());
                }
            }
            else if (first == "switch:") {
                long long v;
                while (fields >> v) {
                    if (v < 0)
                        throw ParseError(line_no, "negative vertex id");
                    switch_set.push_back(static_cast<Vertex>(v));
                }
            }
            else {
                std::string arrow;
                long long to = -1;
                long long from = -1;
                try {
                    std::size_t used = 0;
                    from = std::stoll(first, &used);
                    if (used != first.size())
                        throw std::invalid_argument(first);
                }
                catch (const std::exception &) {
                    throw ParseError(line_no, "expected 'u -> v'");
                }
                fields >> arrow >> to;
                std::string rest;
                if (arrow != "->" || fields.fail() || from < 0 || to < 0 || (fields >> rest))
                    throw ParseError(line_no, "expected 'u -> v'");
                pairs.emplace_back(static_cast<Vertex>(from), static_cast<Vertex>(to));
            }
        }
        if (! src_path || ! dst_path)
            throw ParseError(line_no, "gadget file must name both src and dst graphs");

        auto src = std::make_shared<const Graph>(load_graph(resolve(*src_path)));
        auto dst = (*dst_path == *src_path) ? src : std::make_shared<const Graph>(load_graph(resolve(*dst_path)));

        std::vector<Vertex> dom;
        std::vector<Vertex> map(src->size(), 0);
        for (auto [from, to] : pairs) {
            if (from >= src->size())
                throw ParseError(line_no, "domain vertex " + std::to_string(from) + " is not in the source graph");
            dom.push_back(from);
            map[from] = to;
        }
        try {
            return FunctionGadget(src, dst, std::move(dom), std::move(map), label, std::move(switch_set));
        }
        catch (const GadgetError & e) {
            throw ParseError(line_no, e.what());
        }
    }

    auto load_gadget(const std::string & path) -> FunctionGadget
    {
        std::ifstream in(path);
        if (! in)
            throw std::runtime_error("cannot open " + path);
        return read_gadget(in, std::filesystem::path(path).parent_path().string());
    }

    void write_gadget(std::ostream & out, const FunctionGadget & f, const std::string & src_path, const std::string & dst_path)
    {
        out << "src " << src_path << '\n' << "dst " << dst_path << '\n' << "label " << to_string(f.label()) << '\n';
        if (f.label() == GadgetKind::Switch) {
            out << "switch:";
            for (auto v : f.switch_set())
                out << ' ' << v;
            out << '\n';
        }
        for (auto v : f.dom())
            out << v << " -> " << f(v) << '\n';
    }
}
