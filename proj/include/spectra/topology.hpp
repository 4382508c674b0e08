// Copyright 2026 The Spectra Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// The topology on a finite recurrent spectrum: closed sets C(S) for factor-closed S,
// principal opens U(z), closures and special points, and the continuity and density
// checks. On a finite poset every closed set is an up-set of the order and every open
// set a down-set; the checks below compute C(S) from factor sets and compare.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spectra/radical.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

using NodeSet = std::vector<bool>;

inline constexpr std::size_t kTopologyHorizon = 16;
inline constexpr std::size_t kMaxGeneratorLength = 4;
inline constexpr std::size_t kDefaultTopologySamples = 100;

/// A factor-closed set S, given by its members up to `horizon` or by forbidden factors.
struct ClosedSpec {
    enum class Form { Extensional, Forbidden };
    Form form = Form::Extensional;
    std::vector<std::string> words;  // sorted members, or forbidden generators
    std::size_t horizon = 0;         // Extensional: S lists every member of length <= horizon

    static ClosedSpec extensional(std::vector<std::string> members, std::size_t horizon) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (const auto& m : members)
            if (m.empty() || m.size() > horizon)
                throw SpecError("closed set: member '" + m + "' outside lengths [1, " + std::to_string(horizon) + "]");
        return {Form::Extensional, std::move(members), horizon};
    }
    static ClosedSpec forbidden(std::vector<std::string> generators) {
        std::sort(generators.begin(), generators.end());
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        std::size_t h = 0;
        for (const auto& g : generators) {
            if (g.empty()) throw SpecError("closed set: empty forbidden factor");
            h = std::max(h, g.size());
        }
        return {Form::Forbidden, std::move(generators), h};
    }

    bool admits(std::string_view u) const {
        if (form == Form::Forbidden)
            return std::none_of(words.begin(), words.end(), [&](const std::string& g) { return contains(u, g); });
        return std::binary_search(words.begin(), words.end(), u);
    }
};

/// A member whose one-letter-shorter prefix or suffix is missing, as (member, missing).
inline std::optional<std::pair<std::string, std::string>> factor_closure_violation(const ClosedSpec& s) {
    if (s.form == ClosedSpec::Form::Forbidden) return std::nullopt;
    for (const auto& m : s.words) {
        if (m.size() < 2) continue;
        for (auto part : {std::string_view(m).substr(1), std::string_view(m).substr(0, m.size() - 1)})
            if (!s.admits(part)) return std::make_pair(m, std::string(part));
    }
    return std::nullopt;
}

namespace detail {

inline std::vector<std::string> node_names(const SpectrumPoset& poset, const NodeSet& set) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < set.size(); ++i)
        if (set[i]) out.push_back(poset.nodes[i].cls.name);
    return out;
}

/// True iff every factor of `index` of length <= h is admitted by s.
inline bool factors_within(const FactorIndex& index, const ClosedSpec& s, std::size_t h) {
    if (s.form == ClosedSpec::Form::Forbidden)
        return std::none_of(s.words.begin(), s.words.end(), [&](const std::string& g) { return index.is_factor(g); });
    for (std::size_t m = 1; m <= h; ++m) {
        bool ok = true;
        index.for_each_factor(m, [&](std::string_view u) { ok = ok && s.admits(u); });
        if (!ok) return false;
    }
    return true;
}

/// First factor of `index` of length <= h outside s.
inline std::optional<std::string> first_outside(const FactorIndex& index, const ClosedSpec& s, std::size_t h) {
    std::optional<std::string> out;
    for (std::size_t m = 1; m <= h && !out; ++m)
        index.for_each_factor(m, [&](std::string_view u) {
            if (!out && !s.admits(u)) out = std::string(u);
        });
    return out;
}

} // namespace detail

inline std::string join_names(const std::vector<std::string>& names) {
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
    return out + "}";
}

/// C(S): nodes all of whose factors up to S's horizon lie in S.
inline NodeSet closed_set(const SpectrumPoset& poset, const ClosedSpec& s) {
    if (auto bad = factor_closure_violation(s))
        throw SpecError("closed set: '" + bad->first + "' is a member but its factor '" + bad->second + "' is not");
    if (s.horizon > poset.horizon)
        throw RangeError("closed set: description length " + std::to_string(s.horizon) + " exceeds poset horizon " +
                         std::to_string(poset.horizon));
    NodeSet out(poset.size(), false);
    for (std::size_t i = 0; i < poset.size(); ++i) out[i] = detail::factors_within(*poset.nodes[i].cls.index, s, s.horizon);
    return out;
}

struct OpenResult {
    NodeSet nodes;
    std::optional<std::string> warning;
};

/// U(z): nodes having z as a factor.
inline OpenResult principal_open(const SpectrumPoset& poset, std::string_view z) {
    OpenResult r{NodeSet(poset.size(), false), std::nullopt};
    if (z.empty() || z.size() > poset.horizon) throw RangeError("principal_open: |z| must be in [1, horizon]");
    if (!poset.root.index->is_factor(z)) {
        r.warning = "'" + std::string(z) + "' is not a factor of the root; U(z) is empty";
        return r;
    }
    for (std::size_t i = 0; i < poset.size(); ++i) r.nodes[i] = poset.nodes[i].cls.index->is_factor(z);
    return r;
}

inline NodeSet up_set(const SpectrumPoset& poset, std::size_t i) {
    NodeSet out(poset.size(), false);
    for (std::size_t j = 0; j < poset.size(); ++j) out[j] = poset.leq[i][j];
    return out;
}

inline bool is_up_closed(const SpectrumPoset& poset, const NodeSet& s) {
    for (std::size_t i = 0; i < poset.size(); ++i)
        for (std::size_t j = 0; j < poset.size(); ++j)
            if (s[i] && poset.leq[i][j] && !s[j]) return false;
    return true;
}

inline bool is_down_closed(const SpectrumPoset& poset, const NodeSet& s) {
    for (std::size_t i = 0; i < poset.size(); ++i)
        for (std::size_t j = 0; j < poset.size(); ++j)
            if (s[j] && poset.leq[i][j] && !s[i]) return false;
    return true;
}

inline NodeSet complement(NodeSet s) {
    s.flip();
    return s;
}

// ---------------------------------------------------------------------------
// Closures and points

struct PointReport {
    std::vector<NodeSet> closure;  // closure[i] = C(Fac(node i))
    std::vector<std::size_t> dense;
    std::vector<std::size_t> closed;
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

/// The closure of a node is C(factors of the node); it must equal the up-set of the node.
inline PointReport closure_and_points(const SpectrumPoset& poset) {
    PointReport r;
    const std::size_t h = poset.horizon;
    for (std::size_t i = 0; i < poset.size(); ++i) {
        std::vector<std::string> fac;
        for (std::size_t m = 1; m <= h; ++m)
            poset.nodes[i].cls.index->for_each_factor(m, [&](std::string_view u) { fac.emplace_back(u); });
        auto cl = closed_set(poset, ClosedSpec::extensional(std::move(fac), h));
        const auto& name = poset.nodes[i].cls.name;
        if (cl != up_set(poset, i)) r.violations.push_back("closure of '" + name + "' is not its up-set");
        bool dense = std::all_of(cl.begin(), cl.end(), [](bool b) { return b; });
        bool closed = std::count(cl.begin(), cl.end(), true) == 1;
        if (dense) r.dense.push_back(i);
        if (closed) r.closed.push_back(i);
        bool maximal = true;
        for (std::size_t j = 0; j < poset.size(); ++j) maximal = maximal && !poset.strictly_below(i, j);
        if (closed != maximal) r.violations.push_back("'" + name + "': closed point and maximality disagree");
        if (closed != poset.nodes[i].cls.uniformly_recurrent())
            r.violations.push_back("'" + name + "': closed point and uniform recurrence flag disagree");
        r.closure.push_back(std::move(cl));
    }
    if (poset.root.recurrent() && poset.root_node &&
        std::find(r.dense.begin(), r.dense.end(), *poset.root_node) == r.dense.end())
        r.violations.push_back("recurrent root '" + poset.root.name + "' is not a dense point");
    return r;
}

// ---------------------------------------------------------------------------
// Axioms on sampled closed sets

/// Universe for set algebra: root factors of length <= h, sorted.
inline std::vector<std::string> root_factors_upto(const SpectrumPoset& poset, std::size_t h) {
    std::vector<std::string> out;
    for (std::size_t m = 1; m <= h; ++m) poset.root.index->for_each_factor(m, [&](std::string_view u) { out.emplace_back(u); });
    std::sort(out.begin(), out.end());
    return out;
}

/// Extensional form of S over the root's factors of length <= h.
inline ClosedSpec materialize(const ClosedSpec& s, const std::vector<std::string>& universe, std::size_t h) {
    std::vector<std::string> members;
    for (const auto& u : universe)
        if (u.size() <= h && (s.form == ClosedSpec::Form::Forbidden || u.size() <= s.horizon) && s.admits(u))
            members.push_back(u);
    if (s.form == ClosedSpec::Form::Extensional && s.horizon < h)
        throw RangeError("materialize: extensional set described only up to " + std::to_string(s.horizon));
    return ClosedSpec::extensional(std::move(members), h);
}

inline ClosedSpec intersect(const ClosedSpec& a, const ClosedSpec& b) {
    std::vector<std::string> out;
    std::set_intersection(a.words.begin(), a.words.end(), b.words.begin(), b.words.end(), std::back_inserter(out));
    return ClosedSpec::extensional(std::move(out), std::min(a.horizon, b.horizon));
}

inline ClosedSpec unite(const ClosedSpec& a, const ClosedSpec& b) {
    std::vector<std::string> out;
    std::set_union(a.words.begin(), a.words.end(), b.words.begin(), b.words.end(), std::back_inserter(out));
    return ClosedSpec::extensional(std::move(out), std::min(a.horizon, b.horizon));
}

/// ∅, the full set, then random forbidden-generator specs drawn from the root's factors.
inline std::vector<ClosedSpec> sample_closed_specs(const SpectrumPoset& poset, std::uint64_t seed, std::size_t count,
                                                   std::size_t h) {
    std::mt19937_64 rng(seed);
    std::vector<ClosedSpec> out;
    out.push_back(ClosedSpec::extensional({}, h));
    out.push_back(ClosedSpec::forbidden({}));
    std::vector<std::vector<std::string>> by_length;
    for (std::size_t m = 1; m <= std::min(kMaxGeneratorLength, h); ++m) by_length.push_back(poset.root.index->factors_of_length(m));
    while (out.size() < count) {
        std::size_t k = 1 + rng() % 3;
        std::vector<std::string> gens;
        for (std::size_t i = 0; i < k; ++i) {
            const auto& pool = by_length[rng() % by_length.size()];
            gens.push_back(pool[rng() % pool.size()]);
        }
        out.push_back(ClosedSpec::forbidden(std::move(gens)));
    }
    return out;
}

struct TopologyCheck {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> violations{};
    bool approximate = false;
    bool pass() const { return violations.empty(); }
};

namespace detail {

inline std::string first_node_diff(const SpectrumPoset& poset, const NodeSet& a, const NodeSet& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return poset.nodes[i].cls.name;
    return "";
}

inline std::string describe_spec(const ClosedSpec& s) {
    if (s.form == ClosedSpec::Form::Forbidden) {
        std::string out = "avoid";
        for (const auto& g : s.words) out += " " + g;
        return s.words.empty() ? "full set" : out;
    }
    return s.words.empty() ? "empty set" : std::to_string(s.words.size()) + " listed factors";
}

} // namespace detail

/// Intersections and finite unions of sampled C(S) against C of the intersected or
/// united S; every C(S) up-closed; every open a union of principal opens; De Morgan
/// between U(z) and C(factors avoiding z).
inline TopologyCheck axiom_check(const SpectrumPoset& poset, std::uint64_t seed, std::size_t samples = kDefaultTopologySamples,
                                 std::size_t h = kTopologyHorizon) {
    TopologyCheck r{"topology axioms"};
    h = std::min(h, poset.horizon);
    auto universe = root_factors_upto(poset, h);
    auto specs = sample_closed_specs(poset, seed, samples, h);
    std::vector<ClosedSpec> ext;
    std::vector<NodeSet> sets;
    for (const auto& s : specs) {
        ext.push_back(materialize(s, universe, h));
        sets.push_back(closed_set(poset, ext.back()));
        auto direct = closed_set(poset, s);
        if (direct != sets.back())
            r.violations.push_back(detail::describe_spec(s) + ": generator and listed forms disagree at node " +
                                   detail::first_node_diff(poset, direct, sets.back()));
        if (!is_up_closed(poset, sets.back())) r.violations.push_back(detail::describe_spec(s) + ": C(S) is not up-closed");
        ++r.cases;
    }
    auto compare = [&](const NodeSet& lhs, const NodeSet& rhs, const std::string& what) {
        if (lhs != rhs) r.violations.push_back(what + " fails at node " + detail::first_node_diff(poset, lhs, rhs));
    };
    // pairs and triples of consecutive samples, then the whole family
    for (std::size_t i = 0; i < specs.size(); ++i) {
        for (std::size_t k : {std::size_t{2}, std::size_t{3}}) {
            NodeSet inter = sets[i], uni = sets[i];
            ClosedSpec si = ext[i], su = ext[i];
            std::string label = "{" + std::to_string(i);
            for (std::size_t t = 1; t < k; ++t) {
                std::size_t j = (i + t) % specs.size();
                for (std::size_t x = 0; x < poset.size(); ++x) {
                    inter[x] = inter[x] && sets[j][x];
                    uni[x] = uni[x] || sets[j][x];
                }
                si = intersect(si, ext[j]);
                su = unite(su, ext[j]);
                label += "," + std::to_string(j);
            }
            label += "}";
            compare(inter, closed_set(poset, si), "intersection over samples " + label);
            compare(uni, closed_set(poset, su), "union over samples " + label);
            ++r.cases;
        }
    }
    NodeSet all_inter(poset.size(), true);
    ClosedSpec all_spec = ext.front();
    for (std::size_t i = 0; i < specs.size(); ++i) {
        for (std::size_t x = 0; x < poset.size(); ++x) all_inter[x] = all_inter[x] && sets[i][x];
        all_spec = intersect(all_spec, ext[i]);
    }
    compare(all_inter, closed_set(poset, all_spec), "intersection over all samples");

    // every open is a union of principal opens
    for (std::size_t i = 0; i < specs.size(); ++i) {
        NodeSet open = complement(sets[i]);
        if (!is_down_closed(poset, open)) r.violations.push_back(detail::describe_spec(specs[i]) + ": open set not down-closed");
        NodeSet covered(poset.size(), false);
        for (std::size_t v = 0; v < poset.size(); ++v) {
            if (!open[v]) continue;
            auto z = detail::first_outside(*poset.nodes[v].cls.index, ext[i], h);
            if (!z) {
                r.violations.push_back("node " + poset.nodes[v].cls.name + " lies outside C(S) without a witness factor");
                continue;
            }
            auto u = principal_open(poset, *z).nodes;
            for (std::size_t x = 0; x < poset.size(); ++x) {
                if (u[x] && !open[x]) r.violations.push_back("U(" + *z + ") is not inside the open set");
                covered[x] = covered[x] || u[x];
            }
        }
        compare(covered, open, "principal-open cover of sample " + std::to_string(i));
    }
    // De Morgan: U(z) is the complement of C(factors avoiding z)
    for (const auto& z : universe) {
        if (z.size() > kMaxGeneratorLength) continue;
        compare(principal_open(poset, z).nodes, complement(closed_set(poset, ClosedSpec::forbidden({z}))),
                "U(" + z + ") versus complement of C(avoid " + z + ")");
        ++r.cases;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Continuity of the complexity map

/// p_v(n) <= p_u(n) whenever u <= v, and {node : p(a) >= b} down-closed, for n, a <= H.
inline TopologyCheck order_reversing_check(const SpectrumPoset& poset, std::size_t H) {
    TopologyCheck r{"order reversing"};
    if (H > poset.horizon) throw RangeError("order_reversing_check: horizon exceeds poset horizon");
    auto p = [&](std::size_t i, std::size_t n) { return poset.nodes[i].cls.index->complexity(n); };
    for (std::size_t i = 0; i < poset.size(); ++i)
        for (std::size_t j = 0; j < poset.size(); ++j) {
            if (!poset.leq[i][j]) continue;
            for (std::size_t n = 1; n <= H; ++n) {
                ++r.cases;
                if (p(j, n) > p(i, n))
                    r.violations.push_back("p_" + poset.nodes[j].cls.name + "(" + std::to_string(n) + ") > p_" +
                                           poset.nodes[i].cls.name + "(" + std::to_string(n) + ")");
            }
        }
    for (std::size_t a = 1; a <= H; ++a) {
        std::vector<std::uint64_t> values;
        for (std::size_t i = 0; i < poset.size(); ++i) values.push_back(p(i, a));
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (auto b : values) {
            NodeSet pre(poset.size(), false);
            for (std::size_t i = 0; i < poset.size(); ++i) pre[i] = p(i, a) >= b;
            ++r.cases;
            if (!is_down_closed(poset, pre))
                r.violations.push_back("preimage of p(" + std::to_string(a) + ") >= " + std::to_string(b) + " is not open");
        }
    }
    return r;
}

/// {node : p(n) < bound[n-1] for all n <= bound.size()} is up-closed.
inline TopologyCheck sublevel_closed_check(const SpectrumPoset& poset, const std::vector<std::uint64_t>& bound,
                                           NodeSet* level = nullptr) {
    TopologyCheck r{"sublevel closed"};
    if (bound.size() > poset.horizon) throw RangeError("sublevel_closed_check: table exceeds poset horizon");
    NodeSet set(poset.size(), true);
    for (std::size_t i = 0; i < poset.size(); ++i)
        for (std::size_t n = 1; n <= bound.size(); ++n)
            set[i] = set[i] && poset.nodes[i].cls.index->complexity(n) < bound[n - 1];
    ++r.cases;
    if (!is_up_closed(poset, set)) r.violations.push_back("sublevel set " + join_names(detail::node_names(poset, set)) + " is not closed");
    if (level) *level = set;
    return r;
}

/// Sublevel checks over a family of seeded tables plus the constant 0, 2 and huge tables.
inline TopologyCheck sublevel_suite(const SpectrumPoset& poset, std::size_t H, std::uint64_t seed, std::size_t samples) {
    TopologyCheck r{"sublevel closed"};
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::uint64_t>> tables{std::vector<std::uint64_t>(H, 0), std::vector<std::uint64_t>(H, 2),
                                                   std::vector<std::uint64_t>(H, ~std::uint64_t{0})};
    while (tables.size() < samples) {
        std::vector<std::uint64_t> t(H);
        std::size_t pick = rng() % poset.size();
        std::uint64_t slack = rng() % 3;
        for (std::size_t n = 1; n <= H; ++n) t[n - 1] = poset.nodes[pick].cls.index->complexity(n) + slack;
        tables.push_back(std::move(t));
    }
    for (const auto& t : tables) {
        auto c = sublevel_closed_check(poset, t);
        r.cases += c.cases;
        r.violations.insert(r.violations.end(), c.violations.begin(), c.violations.end());
    }
    return r;
}

// ---------------------------------------------------------------------------
// Density of the uniformly recurrent classes in C(S)

inline constexpr std::size_t kExhaustiveDownSets = 12;

/// Uniformly recurrent nodes lie in C(S), and every open set meeting C(S) meets the
/// uniformly recurrent nodes of C(S). Opens: all principal opens, complements of the
/// sampled closed sets, and every down-set when the poset is small.
inline TopologyCheck urec_density_check(const SpectrumPoset& poset, const RadicalComplement& s, std::uint64_t seed,
                                        std::size_t samples = kDefaultTopologySamples) {
    TopologyCheck r{"uniformly recurrent density"};
    r.approximate = s.approximate;
    if (!s.factor_closed) r.violations.push_back("complement of the radical is not factor-closed");
    const auto cs = closed_set(poset, ClosedSpec::extensional(s.members, s.n));
    NodeSet urec(poset.size(), false);
    for (std::size_t i = 0; i < poset.size(); ++i) {
        urec[i] = poset.nodes[i].cls.uniformly_recurrent();
        if (urec[i] && !cs[i]) r.violations.push_back("uniformly recurrent node '" + poset.nodes[i].cls.name + "' outside C(S)");
    }
    auto check_open = [&](const NodeSet& open, const std::string& label) {
        ++r.cases;
        bool meets = false, meets_urec = false;
        for (std::size_t i = 0; i < poset.size(); ++i) {
            meets = meets || (open[i] && cs[i]);
            meets_urec = meets_urec || (open[i] && cs[i] && urec[i]);
        }
        if (meets && !meets_urec) r.violations.push_back(label + " meets C(S) but no uniformly recurrent node");
    };
    const std::size_t h = std::min(poset.horizon, kTopologyHorizon);
    for (const auto& z : root_factors_upto(poset, std::min(h, std::size_t{6}))) check_open(principal_open(poset, z).nodes, "U(" + z + ")");
    for (const auto& spec : sample_closed_specs(poset, seed, samples, h))
        check_open(complement(closed_set(poset, spec)), "complement of C(" + detail::describe_spec(spec) + ")");
    if (poset.size() <= kExhaustiveDownSets)
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << poset.size()); ++mask) {
            NodeSet open(poset.size(), false);
            for (std::size_t i = 0; i < poset.size(); ++i) open[i] = (mask >> i) & 1;
            if (is_down_closed(poset, open)) check_open(open, "down-set " + join_names(detail::node_names(poset, open)));
        }
    return r;
}

} // namespace spectra
