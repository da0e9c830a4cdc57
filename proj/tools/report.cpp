#include "report.hpp"

#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace rado::cli
{
    auto RunReport::to_json() const -> json
    {
        json inputs_json = json::array();
        for (const auto & in : inputs)
            inputs_json.push_back({{"path", in.path}, {"fingerprint", in.fingerprint}});
        return json{{"command", command}, {"inputs", inputs_json}, {"seed", seed}, {"verdict", verdict},
            {"certificates", certificates}};
    }

    auto RunReport::dump() const -> std::string
    {
        return to_json().dump(2);
    }

    auto file_record(const std::string & path) -> InputRecord
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw std::runtime_error("cannot read " + path);
        std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
        return InputRecord{path, hex64(fnv1a(bytes))};
    }

    auto graph_json(const Graph & g) -> json
    {
        return json{{"vertices", g.size()}, {"edges", g.edge_count()}, {"fingerprint", hex64(fingerprint(g))}};
    }

    auto tuple_json(const Tuple & t) -> json
    {
        return json(t);
    }

    auto extension_json(const ExtensionResult & r, unsigned k) -> json
    {
        json j{{"k", k}, {"pass", ! r}};
        if (r)
            j["failure"] = {{"adjacent_to", r->adjacent_to}, {"non_adjacent_to", r->non_adjacent_to}};
        return j;
    }

    auto class_set_json(ClassSet s) -> json
    {
        json names = json::array();
        for (auto c : s.classes())
            names.push_back(to_string(c));
        return names;
    }

    namespace
    {
        auto pair_json(std::pair<Vertex, Vertex> p) -> json
        {
            return json::array({p.first, p.second});
        }
    }

    auto conflicts_json(const std::vector<Conflict> & conflicts) -> json
    {
        json out = json::array();
        for (const auto & c : conflicts)
            out.push_back({{"first", pair_json(c.first)}, {"second", pair_json(c.second)},
                {"kind", c.kind == PairKind::Equal ? std::string("mixed") : to_string(c.kind)}});
        return out;
    }

    auto profile_json(const BehaviorProfile & p) -> json
    {
        json diag = json::array();
        json off = json::array();
        for (std::size_t i = 0; i < p.parts.size(); ++i) {
            diag.push_back(p.diag(i).label());
            for (std::size_t j = i + 1; j < p.parts.size(); ++j)
                off.push_back(json::array({i, j, p.between(i, j).label()}));
        }
        return json{{"parts", p.parts}, {"diag", diag}, {"off", off}, {"canonical", p.canonical()}};
    }

    namespace
    {
        auto invariance_json(const InvarianceResult & r) -> json
        {
            json j{{"preserved", r.preserved()}};
            if (r.violation) {
                j["violation"] = tuple_json(*r.violation);
                j["direction"] = r.forward ? "forward" : "reverse";
            }
            return j;
        }
    }

    auto reduct_json(const ReductVerdict & v) -> json
    {
        json certs = json::array();
        for (const auto & c : v.certificates) {
            json eq{{"definable", ! c.equality}};
            if (c.equality)
                eq["witness"] = json::array({tuple_json(c.equality->first), tuple_json(c.equality->second)});
            json sw = invariance_json(c.switching.result);
            sw["vertices_checked"] = c.switching.vertices_checked;
            if (c.switching.vertex)
                sw["vertex"] = *c.switching.vertex;
            certs.push_back({{"relation", c.name}, {"equality", eq}, {"complement", invariance_json(c.complement)},
                {"switch", sw}});
        }
        return json{{"class", to_string(v.cls)}, {"equality_definable", v.equality_definable},
            {"complement_invariant", v.complement_invariant}, {"switch_invariant", v.switch_invariant},
            {"relations", certs}};
    }

    auto arrow_json(const ArrowVerdict & v) -> json
    {
        json stats{{"p_copies", v.stats.p_copies}, {"h_copies", v.stats.h_copies},
            {"colorings_examined", v.stats.colorings_examined}, {"vacuous", v.stats.vacuous},
            {"copy_budget_hit", v.stats.copy_budget_hit}};
        stats["colorings_total"] = v.stats.colorings_total ? json(*v.stats.colorings_total) : json(nullptr);
        json j{{"outcome", to_string(v.outcome)}, {"stats", stats}};
        if (v.witness) {
            j["witness"] = *v.witness;
            j["copies"] = v.table.p_sets;
        }
        return j;
    }

    auto witness_text(const ArrowVerdict & v) -> std::string
    {
        std::ostringstream out;
        if (! v.witness)
            return {};
        for (std::size_t i = 0; i < v.witness->size(); ++i)
            out << i << ' ' << (*v.witness)[i] << '\n';
        out << "# copies\n";
        for (std::size_t i = 0; i < v.table.p_sets.size(); ++i) {
            out << "# " << i << ':';
            for (auto x : v.table.p_sets[i])
                out << ' ' << x;
            out << '\n';
        }
        return out.str();
    }

    auto witness_json(const InterpolationWitness & w, const WitnessCheck & check) -> json
    {
        json steps = json::array();
        for (std::size_t i = 0; i < w.steps.size(); ++i) {
            const auto & s = w.steps[i];
            json reposition = json::array();
            for (auto [from, to] : s.reposition)
                reposition.push_back(json::array({from, to}));
            json map = json::array();
            for (auto v : s.gadget.dom())
                map.push_back(json::array({v, s.gadget(v)}));
            steps.push_back({{"reposition", reposition}, {"gadget", to_string(s.gadget.label())}, {"map", map},
                {"note", i < w.transcript.size() ? w.transcript[i] : std::string()}});
        }
        json j{{"window", w.window}, {"steps", steps}, {"verified", check.ok}, {"images", check.images}};
        if (! check.ok)
            j["reason"] = check.reason;
        if (w.finish) {
            json finish = json::array();
            for (auto [from, to] : *w.finish)
                finish.push_back(json::array({from, to}));
            j["finish"] = finish;
        }
        return j;
    }

    auto types_json(const std::vector<Graph> & types) -> json
    {
        json out = json::array();
        for (const auto & g : types)
            out.push_back({{"vertices", g.size()}, {"edges", g.edges()}});
        return out;
    }
}
