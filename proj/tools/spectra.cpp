// Copyright 2026 The Spectra Authors.
// SPDX-License-Identifier: Apache-2.0

// spectra: factor complexity, spectra, radical and topology of generated words.
//
// Exit status: 0 all checks pass, 1 a bound or invariant check failed, 2 usage or spec error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "spectra/spectra.hpp"

namespace {

using namespace spectra;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Budgets {
    std::size_t horizon = 100;
    std::size_t P = kDefaultMaxPeriod;
    std::size_t K = kDefaultPowerThreshold;
    std::optional<std::size_t> N_max;
    std::optional<std::size_t> window_n;
    std::uint64_t cap = FactorIndex::kDefaultEnumerationCap;
    std::uint64_t seed = 1;
    std::size_t samples = kDefaultTopologySamples;
    std::size_t complement_length = 4;
    std::string z;

    json to_json() const {
        json j{{"horizon", horizon}, {"P", P}, {"K", K}, {"enumeration_cap", cap}, {"seed", seed}, {"samples", samples}};
        j["N_max"] = N_max ? json(*N_max) : json("prefix/4");
        return j;
    }
};

struct Options {
    std::string spec, candidates, corpus, out, dot, job;
    std::string format = "json";
    bool concat = false;
    Budgets b;
};

struct Output {
    std::string text;
    int status = kOk;
    std::vector<std::string> failures{};  // "check-id: message"
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw FileError("cannot write '" + path + "'");
    out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
    for (auto a : allowed)
        if (f == a) return;
    throw CLI::ValidationError("--format", "unsupported format '" + f + "' for this command");
}

WordSpec require_spec(const Options& o) {
    if (o.spec.empty()) throw CLI::RequiredError("--spec");
    return load_spec(o.spec);
}

// -- commands ---------------------------------------------------------------

Output cmd_spec(const Options& o) { return {canonical_spec_text(require_spec(o))}; }

Output cmd_complexity(const Options& o) {
    require_format(o.format, {"json", "csv"});
    auto spec = require_spec(o);
    auto index = index_for(spec, o.b.horizon, o.b.cap);
    if (o.format == "csv") return {complexity_csv(*index, o.b.horizon)};
    json j = complexity_json(*index, o.b.horizon);
    j["spec"] = spec_to_json(spec);
    j["budgets"] = o.b.to_json();
    return {dump(j)};
}

Output cmd_per(const Options& o) {
    require_format(o.format, {"json"});
    auto spec = require_spec(o);
    auto index = long_index(spec, 1, std::max(kDefaultLongPrefix, o.b.P * o.b.K));
    json j = periodic_json(periodic_spectrum(*index, o.b.P, o.b.K), o.b.P, o.b.K);
    j["prefix_len"] = index->size();
    j["spec"] = spec_to_json(spec);
    return {dump(j)};
}

Output cmd_radical(const Options& o) {
    require_format(o.format, {"json"});
    if (o.b.z.empty()) throw CLI::RequiredError("--z");
    auto spec = require_spec(o);
    auto index = long_index(spec, std::max<std::size_t>(o.b.z.size(), 1));
    RadicalBudgets rb;
    rb.N_max = o.b.N_max;
    RadicalVerdict v = o.b.window_n ? radical_window_test(*index, o.b.z, *o.b.window_n, rb.N_max_for(*index))
                                    : classify_radical(*index, o.b.z, rb);
    json j{{"spec", spec_to_json(spec)}, {"prefix_len", index->size()}, {"window", verdict_json(v)}};
    j["budgets"] = {{"n_span", rb.n_span}, {"N_max", rb.N_max_for(*index)}};
    Output out;
    if (o.concat) {
        auto c = radical_concat_test(*index, o.b.z);
        j["concatenation"] = verdict_json(c);
        if (v.kind == RadicalKind::InRadical && c.kind == RadicalKind::NotInRadical) {
            out.status = kCheckFailed;
            out.failures.push_back("radical-consistency: window test says in-radical, concatenation test says not");
        }
    }
    out.text = dump(j);
    return out;
}

SpectrumPoset poset_from(const Options& o) {
    if (o.candidates.empty()) throw CLI::RequiredError("--candidates");
    auto root_spec = require_spec(o);
    auto candidates = load_candidates(o.candidates);
    std::string root_name = std::filesystem::path(o.spec).stem().string();
    return build_poset_from({root_name, root_spec}, candidates, o.b.horizon);
}

Output cmd_poset(const Options& o) {
    require_format(o.format, {"json", "dot"});
    auto poset = poset_from(o);
    Output out;
    for (const auto& v : check_poset_axioms(poset)) out.failures.push_back("poset-axioms: " + v);
    for (const auto& v : minimal_and_maximal(poset).violations) out.failures.push_back("maximal-uniformly-recurrent: " + v);
    if (!o.dot.empty()) emit(poset_dot(poset), o.dot);
    if (o.format == "dot") {
        out.text = poset_dot(poset);
    } else {
        json j = poset_json(poset);
        auto ext = minimal_and_maximal(poset);
        json mins = json::array(), maxs = json::array();
        for (auto i : ext.minimal) mins.push_back(poset.nodes[i].cls.name);
        for (auto i : ext.maximal) maxs.push_back(poset.nodes[i].cls.name);
        j["minimal"] = mins;
        j["maximal"] = maxs;
        j["longest_chain"] = {{"nodes", longest_chain(poset)}, {"edges", longest_chain(poset) - (poset.size() ? 1 : 0)}};
        j["budgets"] = o.b.to_json();
        out.text = dump(j);
    }
    if (!out.failures.empty()) out.status = kCheckFailed;
    return out;
}

Output cmd_bounds(const Options& o) {
    require_format(o.format, {"json"});
    auto poset = poset_from(o);
    auto rep = bounds_report(poset, o.b.horizon);
    Output out;
    for (const auto& c : rep.checks)
        if (c.applicable && !c.pass) out.failures.push_back(c.id + ": " + c.name + " fails");
    json j = bounds_json(rep);
    j["budgets"] = o.b.to_json();
    out.text = dump(j);
    out.status = out.failures.empty() ? kOk : kCheckFailed;
    return out;
}

Output cmd_topology(const Options& o) {
    require_format(o.format, {"json", "dot"});
    auto poset = poset_from(o);
    auto ax = axiom_check(poset, o.b.seed, o.b.samples);
    auto pts = closure_and_points(poset);
    auto ord = order_reversing_check(poset, o.b.horizon);
    auto sub = sublevel_suite(poset, o.b.horizon, o.b.seed, 20);
    Output out;
    auto collect = [&](const std::string& id, const std::vector<std::string>& vs) {
        for (const auto& v : vs) out.failures.push_back(id + ": " + v);
    };
    collect("topology-axioms", ax.violations);
    collect("closed-points", pts.violations);
    collect("order-reversing", ord.violations);
    collect("sublevel-closed", sub.violations);
    json j{{"axioms", topology_check_json(ax)},
           {"points", points_json(poset, pts)},
           {"order_reversing", topology_check_json(ord)},
           {"sublevel", topology_check_json(sub)}};
    auto index = long_index(poset.root.spec, o.b.complement_length);
    auto s = radical_complement(*index, o.b.complement_length);
    auto d = urec_density_check(poset, s, o.b.seed, o.b.samples);
    collect("urec-density", d.violations);
    j["density"] = topology_check_json(d);
    j["density"]["complement"] = s.members;
    j["budgets"] = o.b.to_json();
    NodeSet closed_points(poset.size(), false);
    for (auto i : pts.closed) closed_points[i] = true;
    if (!o.dot.empty()) emit(poset_dot(poset, &closed_points, "closed points"), o.dot);
    out.text = o.format == "dot" ? poset_dot(poset, &closed_points, "closed points") : dump(j);
    out.status = out.failures.empty() ? kOk : kCheckFailed;
    return out;
}

Output cmd_verify(const Options& o) {
    require_format(o.format, {"json", "text"});
    auto dir = corpus_dir(o.corpus.empty() ? std::filesystem::path("corpus") : std::filesystem::path(o.corpus));
    auto report = corpus_verify(dir);
    Output out;
    out.text = o.format == "text" ? report.text() : dump(report.to_json());
    for (const auto& c : report.criteria)
        if (!c.pass()) out.failures.push_back("criterion " + std::to_string(c.index) + " " + c.id + " failed");
    out.status = report.pass() ? kOk : kCheckFailed;
    return out;
}

Output dispatch(const std::string& command, const Options& o);

/// AnalysisJob: {"spec", "candidates"?, "commands": [...], "budgets": {...}, "format"?, "out"}.
Output cmd_run(const Options& o) {
    auto job = read_json_file(o.job);
    auto base = std::filesystem::path(o.job).parent_path();
    Options j = o;
    j.job.clear();
    auto path_field = [&](const char* key) -> std::string {
        if (!job.contains(key)) return {};
        return (base / job.at(key).get<std::string>()).string();
    };
    j.spec = path_field("spec");
    j.candidates = path_field("candidates");
    if (j.spec.empty() || !std::filesystem::exists(j.spec)) throw SpecError("job: spec file missing");
    if (!j.candidates.empty() && !std::filesystem::exists(j.candidates)) throw SpecError("job: candidates file missing");
    if (job.contains("budgets")) {
        const auto& b = job.at("budgets");
        auto positive = [&](const char* key, auto& slot) {
            if (!b.contains(key)) return;
            auto v = b.at(key).get<std::int64_t>();
            if (v <= 0) throw SpecError(std::string("job: budget '") + key + "' must be positive");
            slot = static_cast<std::remove_reference_t<decltype(slot)>>(v);
        };
        positive("horizon", j.b.horizon);
        positive("P", j.b.P);
        positive("K", j.b.K);
        positive("cap", j.b.cap);
        positive("seed", j.b.seed);
        if (b.contains("N_max")) {
            std::size_t n = 0;
            positive("N_max", n);
            j.b.N_max = n;
        }
        if (b.contains("z")) j.b.z = b.at("z").get<std::string>();
    }
    j.format = job.value("format", std::string("json"));
    auto out_dir = path_field("out");
    if (out_dir.empty()) throw SpecError("job: missing \"out\" directory");
    std::filesystem::create_directories(out_dir);
    Output total;
    for (const auto& c : job.at("commands")) {
        auto name = c.get<std::string>();
        Options per = j;
        if (name == "complexity" && j.format == "text") per.format = "csv";
        auto r = dispatch(name, per);
        std::string ext = per.format == "csv" ? ".csv" : per.format == "dot" ? ".dot" : ".json";
        emit(r.text, (std::filesystem::path(out_dir) / (name + ext)).string());
        total.failures.insert(total.failures.end(), r.failures.begin(), r.failures.end());
        total.status = std::max(total.status, r.status);
    }
    return total;
}

Output dispatch(const std::string& command, const Options& o) {
    if (command == "spec") return cmd_spec(o);
    if (command == "complexity") return cmd_complexity(o);
    if (command == "per") return cmd_per(o);
    if (command == "radical") return cmd_radical(o);
    if (command == "poset") return cmd_poset(o);
    if (command == "bounds") return cmd_bounds(o);
    if (command == "topology") return cmd_topology(o);
    if (command == "verify") return cmd_verify(o);
    if (command == "run") return cmd_run(o);
    throw SpecError("unknown command '" + command + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectra: factor complexity, spectra, radical and topology of infinite words"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_spec = [&](CLI::App* s) { s->add_option("--spec", o.spec, "word spec JSON file"); };
    auto add_poset = [&](CLI::App* s) {
        s->add_option("--spec,--root", o.spec, "root word spec JSON file");
        s->add_option("--candidates", o.candidates, "candidate list JSON file");
    };
    auto add_common = [&](CLI::App* s) {
        s->add_option("--n,--horizon", o.b.horizon, "horizon (length bound)")->check(CLI::PositiveNumber);
        s->add_option("--format", o.format, "output format");
        s->add_option("--out", o.out, "output file (default stdout)");
    };

    auto* spec = app.add_subcommand("spec", "print the canonical form of a spec");
    add_spec(spec);
    auto* complexity = app.add_subcommand("complexity", "p(n) and first differences");
    add_spec(complexity);
    add_common(complexity);
    complexity->add_option("--cap", o.b.cap, "enumeration cap")->check(CLI::PositiveNumber);
    auto* per = app.add_subcommand("per", "periodic spectrum");
    add_spec(per);
    add_common(per);
    per->add_option("--P", o.b.P, "largest period")->check(CLI::PositiveNumber);
    per->add_option("--K", o.b.K, "power threshold")->check(CLI::PositiveNumber);
    auto* radical = app.add_subcommand("radical", "radical membership of a factor");
    add_spec(radical);
    add_common(radical);
    radical->add_option("--z", o.b.z, "factor to classify");
    radical->add_option("--N-max", o.b.N_max, "largest N tried")->check(CLI::PositiveNumber);
    radical->add_option("--window", o.b.window_n, "single window length n (default: all n in [|z|, |z|+16])");
    radical->add_flag("--concat", o.concat, "also run the concatenation cross-check");
    auto* poset = app.add_subcommand("poset", "recurrent spectrum poset from candidates");
    add_poset(poset);
    add_common(poset);
    poset->add_option("--dot", o.dot, "also write the Hasse diagram as DOT");
    auto* bounds = app.add_subcommand("bounds", "bound report over a poset");
    add_poset(bounds);
    add_common(bounds);
    auto* topology = app.add_subcommand("topology", "topology checks over a poset");
    add_poset(topology);
    add_common(topology);
    topology->add_option("--seed", o.b.seed, "seed for sampled closed sets");
    topology->add_option("--samples", o.b.samples, "sampled closed sets")->check(CLI::PositiveNumber);
    topology->add_option("--dot", o.dot, "also write the Hasse diagram with closed points marked");
    auto* verify = app.add_subcommand("verify", "run the acceptance criteria over the corpus");
    verify->add_option("--corpus", o.corpus, "corpus directory (SPECTRA_CORPUS overrides)");
    verify->add_option("--format", o.format, "json or text");
    verify->add_option("--out", o.out, "report file (default stdout)");
    auto* run = app.add_subcommand("run", "run an analysis job file");
    run->add_option("--job", o.job, "job JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        auto* sub = app.get_subcommands().front();
        auto out = dispatch(sub->get_name(), o);
        emit(out.text, o.out);
        for (const auto& f : out.failures) std::cerr << "check failed: " << f << "\n";
        return out.status;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SpecError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return kUsage;
    } catch (const RangeError& e) {
        std::cerr << "range error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return kUsage;
    }
}
