// Copyright 2026 The Spectra Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON, DOT and CSV renderings of reports. All output is a pure function of its input.

#include <sstream>
#include <string>

#include "spectra/radical.hpp"
#include "spectra/spec_json.hpp"
#include "spectra/spectrum.hpp"
#include "spectra/topology.hpp"

namespace spectra {

inline json horizon_json(const Horizon& h) {
    return {{"n_max", h.n_max}, {"guarantee", std::string(to_string(h.guarantee))}, {"prefix_len", h.prefix_len}};
}

inline std::string complexity_csv(const FactorIndex& index, std::size_t n_max) {
    auto profile = index.complexity_profile(n_max);
    std::ostringstream out;
    const auto& h = index.horizon();
    out << "# n_max=" << n_max << " prefix_len=" << h.prefix_len << " guarantee=" << to_string(h.guarantee) << "\n";
    out << "n,p,diff\n";
    for (std::size_t i = 0; i < profile.counts.size(); ++i) {
        out << i + 1 << "," << profile.counts[i] << ",";
        if (i < profile.differences.size()) out << profile.differences[i];
        out << "\n";
    }
    return out.str();
}

inline json complexity_json(const FactorIndex& index, std::size_t n_max) {
    auto profile = index.complexity_profile(n_max);
    return {{"horizon", horizon_json(index.horizon())}, {"p", profile.counts}, {"diff", profile.differences}};
}

inline json flags_json(const RecurrenceFlags& f) {
    auto one = [](const Flag& x) { return json{{"value", x.value}, {"guarantee", std::string(to_string(x.guarantee))}}; };
    json j{{"recurrent", one(f.recurrent)}, {"uniformly_recurrent", one(f.uniformly_recurrent)}, {"periodic", one(f.periodic)}};
    if (f.periodic.value) j["period"] = f.period;
    return j;
}

inline json periodic_json(const std::vector<PeriodicClass>& classes, std::size_t P, std::size_t K) {
    json list = json::array();
    for (const auto& c : classes) list.push_back({{"word", c.word}, {"period", c.period()}, {"evidence", c.evidence}});
    return {{"P", P}, {"K", K}, {"classes", list}};
}

inline json verdict_json(const RadicalVerdict& v) {
    json j{{"z", v.z}, {"verdict", std::string(to_string(v.kind))}, {"method", v.method}};
    if (v.kind == RadicalKind::InRadical && !v.table.empty()) {
        json t = json::array();
        for (const auto& w : v.table) t.push_back({{"n", w.n}, {"N", w.N}});
        j["witness"] = t;
    }
    if (v.kind == RadicalKind::NotInRadical) {
        if (v.method == "window") j["failing_n"] = v.failing_n;
        j["evidence"] = v.evidence;
        if (!v.generators.empty()) j["generators"] = v.generators;
    }
    j["budgets"] = {{"N_max", v.max_N_tried}, {"assembly_length", v.max_assembly_tried}};
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

inline json limsup_json(const LimsupProxy& p) {
    return {{"window", {p.window_lo, p.window_hi}}, {"C_star", p.c_star}, {"D_star", p.d_star}};
}

inline json bounds_json(const BoundsReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json x{{"check", c.id}, {"inequality", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"applicable", c.applicable},
               {"pass", c.pass}};
        if (!c.note.empty()) x["note"] = c.note;
        checks.push_back(x);
    }
    return {{"root", limsup_json(r.root)},
            {"counts", {{"rec", r.rec}, {"urec", r.urec}, {"per", r.per}}},
            {"longest_chain", {{"nodes", r.chain_nodes}, {"edges", r.chain_nodes == 0 ? 0 : r.chain_nodes - 1}}},
            {"nonperiodic_minimal", r.nonperiodic_minimal},
            {"urec_reading", "uniformly recurrent classes"},
            {"checks", checks},
            {"pass", r.all_pass()}};
}

inline json poset_json(const SpectrumPoset& poset) {
    json nodes = json::array();
    for (const auto& node : poset.nodes) {
        nodes.push_back({{"name", node.cls.name},
                         {"merged", node.merged},
                         {"spec", spec_to_json(node.cls.spec)},
                         {"horizon", horizon_json(node.cls.index->horizon())},
                         {"flags", flags_json(node.cls.flags)}});
    }
    json edges = json::array();
    for (auto [lo, hi] : poset.hasse) edges.push_back({poset.nodes[lo].cls.name, poset.nodes[hi].cls.name});
    json relation = json::array();
    for (const auto& row : poset.leq) {
        json r = json::array();
        for (bool b : row) r.push_back(b ? 1 : 0);
        relation.push_back(r);
    }
    json j{{"root", {{"name", poset.root.name},
                     {"horizon", horizon_json(poset.root.index->horizon())},
                     {"flags", flags_json(poset.root.flags)}}},
           {"horizon", poset.horizon},
           {"nodes", nodes},
           {"leq", relation},
           {"hasse", edges},
           {"excluded", poset.excluded}};
    j["root_node"] = poset.root_node ? json(poset.nodes[*poset.root_node].cls.name) : json(nullptr);
    return j;
}

namespace detail {
inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}
} // namespace detail

/// Hasse diagram, larger classes drawn above. `highlight` marks a node set (e.g. an
/// open or closed set overlay).
inline std::string poset_dot(const SpectrumPoset& poset, const NodeSet* highlight = nullptr,
                             const std::string& overlay_label = {}) {
    std::ostringstream out;
    out << "digraph spectrum {\n  rankdir=BT;\n  node [shape=box];\n";
    if (!overlay_label.empty()) out << "  label=\"" << detail::dot_escape(overlay_label) << "\";\n";
    for (std::size_t i = 0; i < poset.size(); ++i) {
        const auto& c = poset.nodes[i].cls;
        std::string flags;
        if (c.recurrent()) flags += "R";
        if (c.uniformly_recurrent()) flags += "U";
        if (c.periodic()) flags += "P";
        out << "  n" << i << " [label=\"" << detail::dot_escape(c.name) << "\\n" << flags << "\"";
        if (highlight && (*highlight)[i]) out << ", style=filled, fillcolor=lightblue";
        out << "];\n";
    }
    for (auto [lo, hi] : poset.hasse) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

inline json node_set_json(const SpectrumPoset& poset, const NodeSet& s) { return detail::node_names(poset, s); }

inline json topology_check_json(const TopologyCheck& c) {
    json j{{"check", c.name}, {"cases", c.cases}, {"violations", c.violations}, {"pass", c.pass()}};
    if (c.approximate) j["approximate"] = true;
    return j;
}

inline json points_json(const SpectrumPoset& poset, const PointReport& r) {
    json closures = json::object();
    for (std::size_t i = 0; i < poset.size(); ++i) closures[poset.nodes[i].cls.name] = node_set_json(poset, r.closure[i]);
    json dense = json::array(), closed = json::array();
    for (auto i : r.dense) dense.push_back(poset.nodes[i].cls.name);
    for (auto i : r.closed) closed.push_back(poset.nodes[i].cls.name);
    return {{"closure", closures}, {"dense", dense}, {"closed", closed}, {"violations", r.violations}, {"pass", r.pass()}};
}

} // namespace spectra
