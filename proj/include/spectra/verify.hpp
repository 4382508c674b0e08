// Copyright 2026 The Spectra Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Corpus verification: the twelve acceptance criteria over the shipped corpus.
//
// Corpus layout (directory given by SPECTRA_CORPUS or an explicit path):
//   words/<name>.json    word specs
//   posets/<name>.json   {"root": {"name", "spec"}, "candidates": [{"name", "spec"}, ...]}
//   expected.json        budgets and expected values per criterion
// Spec references are paths relative to the referencing file, or inline objects.

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "spectra/export.hpp"
#include "spectra/radical.hpp"
#include "spectra/spec_json.hpp"
#include "spectra/spectrum.hpp"
#include "spectra/topology.hpp"

namespace spectra {

namespace fs = std::filesystem;

/// Corpus directory: SPECTRA_CORPUS if set, else `fallback`.
inline fs::path corpus_dir(const fs::path& fallback) {
    if (const char* env = std::getenv("SPECTRA_CORPUS"); env && *env) return env;
    return fallback;
}

struct NamedSpec {
    std::string name;
    WordSpec spec;
};

struct PosetFile {
    std::string name;
    NamedSpec root;
    std::vector<NamedSpec> candidates;
};

inline NamedSpec named_spec_from(const json& j, const fs::path& base) {
    if (!j.is_object() || !j.contains("name") || !j.contains("spec") || !j.at("name").is_string())
        throw SpecError("candidate entries need \"name\" and \"spec\"");
    return {j.at("name").get<std::string>(), spec_from_ref(j.at("spec"), base)};
}

inline std::vector<NamedSpec> load_candidates(const fs::path& path) {
    auto j = read_json_file(path);
    if (!j.contains("candidates") || !j.at("candidates").is_array())
        throw SpecError(path.string() + ": expected {\"candidates\": [...]}");
    std::vector<NamedSpec> out;
    for (const auto& c : j.at("candidates")) out.push_back(named_spec_from(c, path.parent_path()));
    return out;
}

inline PosetFile load_poset_file(const fs::path& path) {
    auto j = read_json_file(path);
    if (!j.contains("root")) throw SpecError(path.string() + ": missing \"root\"");
    PosetFile p;
    p.name = path.stem().string();
    p.root = named_spec_from(j.at("root"), path.parent_path());
    p.candidates = load_candidates(path);
    return p;
}

inline SpectrumPoset build_poset_from(const NamedSpec& root, const std::vector<NamedSpec>& candidates, std::size_t h) {
    std::vector<SpectrumClass> cls;
    for (const auto& c : candidates) cls.push_back(make_class(c.name, c.spec, h));
    return build_poset(make_class(root.name, root.spec, h), std::move(cls), h);
}

struct Corpus {
    fs::path dir;
    std::map<std::string, WordSpec> words;
    std::vector<PosetFile> posets;
    json expected;
};

inline std::vector<fs::path> sorted_json_files(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw FileError("missing corpus directory '" + dir.string() + "'");
    std::vector<fs::path> out;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

inline Corpus load_corpus(const fs::path& dir) {
    Corpus c;
    c.dir = dir;
    for (const auto& p : sorted_json_files(dir / "words")) c.words.emplace(p.stem().string(), load_spec(p));
    for (const auto& p : sorted_json_files(dir / "posets")) c.posets.push_back(load_poset_file(p));
    c.expected = read_json_file(dir / "expected.json");
    return c;
}

inline constexpr double kExpectedTolerance = 1e-9;  // numeric fields of expected.json

struct CriterionResult {
    int index = 0;
    std::string id;
    std::string summary;
    std::vector<std::string> failures;
    json details = json::object();
    bool pass() const { return failures.empty(); }
};

struct VerifyReport {
    std::vector<CriterionResult> criteria;

    bool pass() const {
        return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.pass(); });
    }

    json to_json() const {
        json list = json::array();
        for (const auto& c : criteria)
            list.push_back({{"criterion", c.index}, {"id", c.id}, {"pass", c.pass()}, {"summary", c.summary},
                            {"failures", c.failures}, {"details", c.details}});
        return {{"criteria", list}, {"pass", pass()}};
    }

    std::string text() const {
        std::string out;
        for (const auto& c : criteria) {
            out += std::string(c.pass() ? "PASS" : "FAIL") + "  " + std::to_string(c.index) + " " + c.id + ": " + c.summary + "\n";
            for (const auto& f : c.failures) out += "      " + f + "\n";
        }
        return out;
    }
};

namespace detail {

class Verifier {
public:
    explicit Verifier(const Corpus& corpus) : c_(corpus), e_(corpus.expected) {}

    VerifyReport run() {
        VerifyReport r;
        r.criteria.push_back(guarded(1, "oracle-equivalence", [&](CriterionResult& x) { oracle(x); }));
        r.criteria.push_back(guarded(2, "sturmian-identity", [&](CriterionResult& x) { sturmian(x); }));
        r.criteria.push_back(guarded(3, "complexity-dichotomy", [&](CriterionResult& x) { dichotomy(x); }));
        r.criteria.push_back(guarded(4, "radical-example", [&](CriterionResult& x) { radical_example(x); }));
        r.criteria.push_back(guarded(5, "containing-count-bound", [&](CriterionResult& x) { containing(x); }));
        r.criteria.push_back(guarded(6, "periodic-spectra", [&](CriterionResult& x) { periodic(x); }));
        r.criteria.push_back(guarded(7, "bound-suite", [&](CriterionResult& x) { bounds(x); }));
        r.criteria.push_back(guarded(8, "topology-axioms", [&](CriterionResult& x) { topology(x); }));
        r.criteria.push_back(guarded(9, "continuity", [&](CriterionResult& x) { continuity(x); }));
        r.criteria.push_back(guarded(10, "urec-density", [&](CriterionResult& x) { density(x); }));
        r.criteria.push_back(guarded(11, "proper-union", [&](CriterionResult& x) { proper_union(x); }));
        return r;
    }

private:
    template <class F> CriterionResult guarded(int index, std::string id, F&& body) {
        CriterionResult r;
        r.index = index;
        r.id = std::move(id);
        try {
            body(r);
        } catch (const FileError&) {
            throw;
        } catch (const std::exception& ex) {
            r.failures.push_back(std::string("error: ") + ex.what());
        }
        return r;
    }

    const json& expect(const char* key) const {
        if (!e_.contains(key)) throw SpecError(std::string("expected.json: missing section '") + key + "'");
        return e_.at(key);
    }

    const WordSpec& word(const std::string& name) const {
        auto it = c_.words.find(name);
        if (it == c_.words.end()) throw SpecError("corpus: no word named '" + name + "'");
        return it->second;
    }

    std::size_t horizon() const { return expect("horizon").get<std::size_t>(); }
    std::uint64_t seed() const { return expect("seed").get<std::uint64_t>(); }

    const SpectrumPoset& poset(const std::string& name) {
        auto it = posets_.find(name);
        if (it != posets_.end()) return it->second;
        for (const auto& p : c_.posets)
            if (p.name == name) return posets_.emplace(name, build_poset_from(p.root, p.candidates, horizon())).first->second;
        throw SpecError("corpus: no poset named '" + name + "'");
    }

    /// Up to `want` symbols; Sturmian terms and explicit prefixes may give fewer.
    static std::string available_prefix(const WordSpec& spec, std::size_t want) {
        if (auto p = spec.as<PrefixSpec>()) return p->symbols.substr(0, std::min(want, p->symbols.size()));
        if (auto s = spec.as<SturmianSpec>()) want = std::min(want, longest_sturmian_prefix(*s, want));
        return generate_prefix(spec, want);
    }

    // 1 ------------------------------------------------------------------
    void oracle(CriterionResult& r) {
        const auto& cfg = expect("oracle");
        const auto lengths = cfg.at("prefix_lengths").get<std::vector<std::size_t>>();
        const auto n_max = cfg.at("n_max").get<std::size_t>();
        std::size_t compared = 0;
        for (const auto& [name, spec] : c_.words)
            for (auto len : lengths) {
                auto prefix = available_prefix(spec, len);
                FactorIndex index(prefix);
                if (!index.check_consistency()) r.failures.push_back(name + ": index interval sum inconsistent");
                for (std::size_t n = 1; n <= std::min(n_max, prefix.size()); ++n) {
                    ++compared;
                    auto want = naive::complexity(prefix, n);
                    if (index.complexity(n) != want)
                        r.failures.push_back(name + " L=" + std::to_string(prefix.size()) + " n=" + std::to_string(n) +
                                             ": index " + std::to_string(index.complexity(n)) + " != naive " +
                                             std::to_string(want));
                }
            }
        r.details = {{"words", c_.words.size()}, {"comparisons", compared}, {"prefix_lengths", lengths}, {"n_max", n_max}};
        r.summary = std::to_string(compared) + " (word, L, n) counts match the sliding-window oracle";
    }

    // 2 ------------------------------------------------------------------
    void sturmian(CriterionResult& r) {
        const auto& cfg = expect("sturmian");
        const auto names = cfg.at("words").get<std::vector<std::string>>();
        const auto n_max = cfg.at("n_max").get<std::size_t>();
        const auto want_guarantee = cfg.at("guarantee").get<std::string>();
        json per_word = json::object();
        for (const auto& name : names) {
            auto index = index_for(word(name), n_max);
            auto g = std::string(to_string(index->horizon().guarantee));
            if (g != want_guarantee) r.failures.push_back(name + ": horizon guarantee " + g + ", expected " + want_guarantee);
            std::size_t bad = 0;
            for (std::size_t n = 1; n <= n_max; ++n)
                if (index->complexity(n) != n + 1) {
                    if (++bad <= 3)
                        r.failures.push_back(name + ": p(" + std::to_string(n) + ") = " + std::to_string(index->complexity(n)));
                }
            per_word[name] = {{"guarantee", g}, {"prefix_len", index->horizon().prefix_len}, {"violations", bad}};
        }
        r.details = {{"n_max", n_max}, {"words", per_word}};
        r.summary = "p(n) = n + 1 for n <= " + std::to_string(n_max);
    }

    // 3 ------------------------------------------------------------------
    void dichotomy(CriterionResult& r) {
        const auto n_max = expect("dichotomy").at("n_max").get<std::size_t>();
        json per_word = json::object();
        std::size_t violations = 0;
        for (const auto& [name, spec] : c_.words) {
            auto index = index_for(spec, n_max);
            const std::size_t h = std::min(n_max, index->horizon().n_max);
            std::string kind = "linear";
            for (std::size_t n = 1; n <= h; ++n) {
                if (index->complexity(n) >= n + 1) continue;
                kind = "bounded";
                // p(n) <= n forces p constant from n on
                for (std::size_t m = n; m <= h; ++m)
                    if (index->complexity(m) != index->complexity(n)) {
                        ++violations;
                        r.failures.push_back(name + ": p(" + std::to_string(n) + ") <= n but p(" + std::to_string(m) +
                                             ") = " + std::to_string(index->complexity(m)));
                        break;
                    }
                break;
            }
            per_word[name] = {{"kind", kind}, {"horizon", horizon_json(index->horizon())}};
        }
        r.details = {{"n_max", n_max}, {"words", per_word}, {"violations", violations}};
        r.summary = "every word has p(n) >= n + 1 throughout or p eventually constant (" + std::to_string(violations) + " violations)";
    }

    // 4 ------------------------------------------------------------------
    void radical_example(CriterionResult& r) {
        const auto& cfg = expect("radical_example");
        const auto& spec = word(cfg.at("word").get<std::string>());
        const auto max_len = cfg.at("max_length").get<std::size_t>();
        const auto marker = cfg.at("marker").get<std::string>();
        const auto index = long_index(spec, max_len);
        std::size_t in = 0;
        for (std::size_t m = 1; m <= max_len; ++m)
            for (const auto& f : index->factors_of_length(m)) {
                if (!contains(f, marker)) continue;
                auto v = classify_radical(*index, f);
                if (v.kind != RadicalKind::InRadical) {
                    r.failures.push_back("'" + f + "' classified " + std::string(to_string(v.kind)));
                    continue;
                }
                for (const auto& w : v.table)
                    if (!verify_window_witness(index->prefix(), f, w.n, w.N))
                        r.failures.push_back("'" + f + "': witness N(" + std::to_string(w.n) + ") = " + std::to_string(w.N) +
                                             " fails the direct scan");
                ++in;
            }
        if (in != cfg.at("in_radical_count").get<std::size_t>())
            r.failures.push_back("classified " + std::to_string(in) + " marker-containing factors in the radical, expected " +
                                 std::to_string(cfg.at("in_radical_count").get<std::size_t>()));
        json outside = json::array();
        for (const auto& z : cfg.at("not_in_radical").get<std::vector<std::string>>()) {
            auto v = classify_radical(*index, z);
            if (v.kind != RadicalKind::NotInRadical) {
                r.failures.push_back("'" + z + "' classified " + std::string(to_string(v.kind)));
            } else if (!index->is_factor(v.evidence)) {
                r.failures.push_back("'" + z + "': evidence is not a factor");
            }
            outside.push_back({{"z", z}, {"verdict", std::string(to_string(v.kind))}, {"failing_n", v.failing_n}});
        }
        r.details = {{"prefix_len", index->size()}, {"in_radical", in}, {"not_in_radical", outside}};
        r.summary = std::to_string(in) + " factors containing '" + marker + "' in the radical with verified witnesses; " +
                    std::to_string(outside.size()) + " powers outside";
    }

    // 5 ------------------------------------------------------------------
    void containing(CriterionResult& r) {
        const auto& cfg = expect("containing_count");
        const auto max_u = cfg.at("max_u").get<std::size_t>();
        const auto n_max = cfg.at("n_max").get<std::size_t>();
        std::size_t checked = 0, violations = 0;
        for (const auto& name : cfg.at("words").get<std::vector<std::string>>()) {
            auto index = index_for(word(name), n_max);
            for (std::size_t m = 1; m <= max_u; ++m)
                for (const auto& u : index->factors_of_length(m))
                    for (std::size_t n = m + 1; n <= n_max; ++n) {
                        ++checked;
                        auto c = index->count_containing(n, u);
                        if (c + m < n + 1) {
                            if (++violations <= 5)
                                r.failures.push_back(name + ": p(" + std::to_string(n) + "; " + u + ") = " + std::to_string(c) +
                                                     " < " + std::to_string(n + 1 - m));
                        }
                    }
        }
        r.details = {{"checked", checked}, {"violations", violations}, {"max_u", max_u}, {"n_max", n_max}};
        r.summary = std::to_string(checked) + " pairs (u, n) satisfy p(n; u) >= n + 1 - |u|";
    }

    // 6 ------------------------------------------------------------------
    void periodic(CriterionResult& r) {
        const auto& cfg = expect("periodic_spectra");
        const auto P = cfg.at("P").get<std::size_t>(), K = cfg.at("K").get<std::size_t>();
        const auto len = cfg.at("prefix_len").get<std::size_t>();
        json got = json::object();
        for (const auto& [name, want] : cfg.at("words").items()) {
            FactorIndex index(generate_prefix(word(name), len));
            std::vector<std::string> words;
            for (const auto& c : periodic_spectrum(index, P, K)) words.push_back(c.word);
            if (words != want.get<std::vector<std::string>>())
                r.failures.push_back(name + ": " + json(words).dump() + ", expected " + want.dump());
            got[name] = words;
        }
        r.details = {{"P", P}, {"K", K}, {"prefix_len", len}, {"spectra", got}};
        r.summary = std::to_string(got.size()) + " periodic spectra match at P=" + std::to_string(P) + ", K=" + std::to_string(K);
    }

    // 7 ------------------------------------------------------------------
    void bounds(CriterionResult& r) {
        const auto& cfg = expect("bounds");
        json per = json::object();
        for (const auto& pf : c_.posets) {
            const auto& p = poset(pf.name);
            auto rep = bounds_report(p, horizon());
            for (const auto& c : rep.checks)
                if (c.applicable && !c.pass)
                    r.failures.push_back(pf.name + ": check " + c.id + " (" + c.name + ") fails: " + fmt_num(c.lhs) + " > " +
                                         fmt_num(c.rhs));
            if (auto ax = check_poset_axioms(p); !ax.empty())
                for (const auto& a : ax) r.failures.push_back(pf.name + ": " + a);
            for (const auto& v : minimal_and_maximal(p).violations) r.failures.push_back(pf.name + ": " + v);
            per[pf.name] = bounds_json(rep);
            if (cfg.contains(pf.name)) {
                const auto& want = cfg.at(pf.name);
                auto cmp = [&](const char* key, double got) {
                    if (want.contains(key) && std::abs(want.at(key).get<double>() - got) > kExpectedTolerance)
                        r.failures.push_back(pf.name + ": " + key + " = " + fmt_num(got) + ", expected " + want.at(key).dump());
                };
                cmp("nodes", double(p.size()));
                cmp("rec", double(rep.rec));
                cmp("per", double(rep.per));
                cmp("longest_chain", double(rep.chain_nodes));
                cmp("rec_bound", rep.checks.front().rhs);
            }
        }
        r.details = per;
        r.summary = "all inequalities hold on " + std::to_string(c_.posets.size()) + " curated posets at horizon " +
                    std::to_string(horizon());
    }

    static std::string fmt_num(double x) {
        std::ostringstream o;
        o << x;
        return o.str();
    }

    // 8 ------------------------------------------------------------------
    void topology(CriterionResult& r) {
        const auto samples = expect("topology").at("samples").get<std::size_t>();
        json per = json::object();
        std::size_t cases = 0;
        for (const auto& pf : c_.posets) {
            const auto& p = poset(pf.name);
            auto ax = axiom_check(p, seed(), samples);
            auto pts = closure_and_points(p);
            for (const auto& v : ax.violations) r.failures.push_back(pf.name + ": " + v);
            for (const auto& v : pts.violations) r.failures.push_back(pf.name + ": " + v);
            cases += ax.cases;
            per[pf.name] = {{"axioms", topology_check_json(ax)}, {"points", points_json(p, pts)}};
        }
        r.details = per;
        r.summary = std::to_string(cases) + " closed-set cases with " + std::to_string(samples) + " seeded samples per poset";
    }

    // 9 ------------------------------------------------------------------
    void continuity(CriterionResult& r) {
        const auto& cfg = expect("continuity");
        const auto n_max = cfg.at("n_max").get<std::size_t>();
        const auto tables = cfg.at("sublevel_tables").get<std::size_t>();
        json per = json::object();
        for (const auto& pf : c_.posets) {
            const auto& p = poset(pf.name);
            auto ord = order_reversing_check(p, n_max);
            auto sub = sublevel_suite(p, n_max, seed(), tables);
            for (const auto& v : ord.violations) r.failures.push_back(pf.name + ": " + v);
            for (const auto& v : sub.violations) r.failures.push_back(pf.name + ": " + v);
            per[pf.name] = {{"order_reversing", topology_check_json(ord)}, {"sublevel", topology_check_json(sub)}};
        }
        r.details = per;
        r.summary = "complexity map order-reversing with open subbasic preimages for n <= " + std::to_string(n_max) +
                    "; sublevel sets closed";
    }

    // 10 -----------------------------------------------------------------
    void density(CriterionResult& r) {
        const auto& cfg = expect("density");
        const auto len = cfg.at("complement_length").get<std::size_t>();
        json per = json::object();
        for (const auto& name : cfg.at("posets").get<std::vector<std::string>>()) {
            const auto& p = poset(name);
            auto index = long_index(p.root.spec, len);
            auto s = radical_complement(*index, len);
            auto d = urec_density_check(p, s, seed());
            for (const auto& v : d.violations) r.failures.push_back(name + ": " + v);
            if (d.approximate) r.failures.push_back(name + ": radical complement has unresolved factors");
            per[name] = {{"complement", s.members}, {"radical", s.radical}, {"check", topology_check_json(d)}};
        }
        r.details = per;
        r.summary = "uniformly recurrent nodes dense in C(S) with S the computed radical complement";
    }

    // 11 -----------------------------------------------------------------
    void proper_union(CriterionResult& r) {
        const auto want = expect("proper_union").at("recurrent_roots").get<std::vector<std::string>>();
        std::vector<std::string> roots;
        json per = json::object();
        for (const auto& pf : c_.posets) {
            const auto& p = poset(pf.name);
            if (!p.root.recurrent()) continue;
            roots.push_back(pf.name);
            auto u = proper_union_check(p, horizon());
            if (!u.witness || !u.verified)
                r.failures.push_back(pf.name + ": no verified witness (lengths exhausted: " + std::to_string(u.lengths_exhausted) + ")");
            per[pf.name] = u.witness ? json(*u.witness) : json(nullptr);
        }
        if (roots != want) r.failures.push_back("recurrent roots " + json(roots).dump() + ", expected " + json(want).dump());
        r.details = {{"witnesses", per}};
        r.summary = std::to_string(roots.size()) + " recurrent roots with verified witnesses";
    }

    const Corpus& c_;
    const json& e_;
    std::map<std::string, SpectrumPoset> posets_;
};

} // namespace detail

struct VerifyOptions {
    bool determinism = true;
};

/// Runs every criterion; criterion 12 repeats 1-11 and compares the serialized reports.
inline VerifyReport corpus_verify(const fs::path& dir, const VerifyOptions& opts = {}) {
    auto corpus = load_corpus(dir);
    auto report = detail::Verifier(corpus).run();
    if (opts.determinism) {
        auto again = detail::Verifier(load_corpus(dir)).run();
        CriterionResult d;
        d.index = 12;
        d.id = "determinism";
        const auto a = report.to_json().dump(), b = again.to_json().dump();
        if (a != b) d.failures.push_back("two runs produced different reports");
        d.summary = std::string(a == b ? "two runs byte-identical" : "runs differ") + " (" + std::to_string(a.size()) + " bytes)";
        d.details = {{"bytes", a.size()}};
        report.criteria.push_back(std::move(d));
    }
    return report;
}

} // namespace spectra
