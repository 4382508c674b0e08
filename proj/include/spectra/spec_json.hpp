// Copyright 2026 The Spectra Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// WordSpec <-> JSON.
//
//   {"type": "periodic", "period": "01"}
//   {"type": "morphic",  "rules": {"0": "01", "1": "0"}, "seed": "0", "coding": {...}}
//   {"type": "sturmian", "cf_terms": [1, 1, ...], "intercept": "characteristic" | {"num": 1, "den": 3}}
//   {"type": "blocks",   "builder": "radical-example", "params": [2]}
//   {"type": "prefix",   "symbols": "0110..."}
//
// Emission always writes every field, with sorted keys, so parse -> emit is canonical.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "spectra/wordgen.hpp"

namespace spectra {

using json = nlohmann::json;

namespace detail {

inline char single_char(const json& j, const char* what) {
    if (!j.is_string() || j.get<std::string>().size() != 1)
        throw SpecError(std::string(what) + " must be a one-character string");
    return j.get<std::string>()[0];
}

inline const json& field(const json& j, const char* key) {
    if (!j.contains(key)) throw SpecError(std::string("spec: missing field '") + key + "'");
    return j.at(key);
}

inline std::string string_field(const json& j, const char* key) {
    const auto& v = field(j, key);
    if (!v.is_string()) throw SpecError(std::string("spec: field '") + key + "' must be a string");
    return v.get<std::string>();
}

inline std::vector<std::uint64_t> uint_list(const json& v, const char* key) {
    if (!v.is_array()) throw SpecError(std::string("spec: field '") + key + "' must be an array");
    std::vector<std::uint64_t> out;
    for (const auto& x : v) {
        if (!x.is_number_unsigned()) throw SpecError(std::string("spec: '") + key + "' entries must be non-negative integers");
        out.push_back(x.get<std::uint64_t>());
    }
    return out;
}

inline void only_fields(const json& j, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : j.items())
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
            throw SpecError("spec: unknown field '" + key + "'");
}

} // namespace detail

/// Parses and validates a spec object.
inline WordSpec spec_from_json(const json& j) {
    if (!j.is_object()) throw SpecError("spec: expected a JSON object");
    const std::string type = detail::string_field(j, "type");
    WordSpec spec;
    if (type == "periodic") {
        detail::only_fields(j, {"type", "period"});
        spec.kind = PeriodicSpec{detail::string_field(j, "period")};
    } else if (type == "morphic") {
        detail::only_fields(j, {"type", "rules", "seed", "coding"});
        MorphicSpec m;
        const auto& rules = detail::field(j, "rules");
        if (!rules.is_object()) throw SpecError("spec: 'rules' must be an object");
        for (const auto& [from, image] : rules.items()) {
            if (from.size() != 1) throw SpecError("spec: rule keys must be single letters");
            if (!image.is_string()) throw SpecError("spec: rule images must be strings");
            m.rules[from[0]] = image.get<std::string>();
        }
        m.seed = detail::single_char(detail::field(j, "seed"), "spec: 'seed'");
        if (j.contains("coding")) {
            const auto& coding = j.at("coding");
            if (!coding.is_object()) throw SpecError("spec: 'coding' must be an object");
            for (const auto& [from, to] : coding.items()) {
                if (from.size() != 1) throw SpecError("spec: coding keys must be single letters");
                m.coding[from[0]] = detail::single_char(to, "spec: coding values");
            }
        }
        spec.kind = std::move(m);
    } else if (type == "sturmian") {
        detail::only_fields(j, {"type", "cf_terms", "intercept"});
        SturmianSpec s;
        s.cf_terms = detail::uint_list(detail::field(j, "cf_terms"), "cf_terms");
        if (j.contains("intercept")) {
            const auto& ic = j.at("intercept");
            if (ic.is_string()) {
                if (ic.get<std::string>() != "characteristic")
                    throw SpecError("spec: 'intercept' must be \"characteristic\" or {\"num\", \"den\"}");
            } else if (ic.is_object() && ic.contains("num") && ic.contains("den") && ic.size() == 2 &&
                       ic.at("num").is_number_integer() && ic.at("den").is_number_integer()) {
                s.intercept = Rational{ic.at("num").get<std::int64_t>(), ic.at("den").get<std::int64_t>()};
            } else {
                throw SpecError("spec: 'intercept' must be \"characteristic\" or {\"num\", \"den\"}");
            }
        }
        spec.kind = std::move(s);
    } else if (type == "blocks") {
        detail::only_fields(j, {"type", "builder", "params"});
        BlocksSpec b;
        auto name = detail::string_field(j, "builder");
        auto builder = block_builder_from_string(name);
        if (!builder) throw SpecError("spec: unknown block builder '" + name + "'");
        b.builder = *builder;
        if (j.contains("params")) b.params = detail::uint_list(j.at("params"), "params");
        spec.kind = std::move(b);
    } else if (type == "prefix") {
        detail::only_fields(j, {"type", "symbols"});
        spec.kind = PrefixSpec{detail::string_field(j, "symbols")};
    } else {
        throw SpecError("spec: unknown type '" + type + "'");
    }
    validate(spec);
    return spec;
}

inline json spec_to_json(const WordSpec& spec) {
    return std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            json j;
            if constexpr (std::is_same_v<T, PeriodicSpec>) {
                j = {{"type", "periodic"}, {"period", s.period}};
            } else if constexpr (std::is_same_v<T, MorphicSpec>) {
                json rules = json::object(), coding = json::object();
                for (const auto& [from, image] : s.rules) rules[std::string(1, from)] = image;
                for (const auto& [from, to] : s.coding) coding[std::string(1, from)] = std::string(1, to);
                j = {{"type", "morphic"}, {"rules", rules}, {"seed", std::string(1, s.seed)}, {"coding", coding}};
            } else if constexpr (std::is_same_v<T, SturmianSpec>) {
                j = {{"type", "sturmian"}, {"cf_terms", s.cf_terms}};
                if (s.intercept)
                    j["intercept"] = {{"num", s.intercept->num}, {"den", s.intercept->den}};
                else
                    j["intercept"] = "characteristic";
            } else if constexpr (std::is_same_v<T, BlocksSpec>) {
                j = {{"type", "blocks"}, {"builder", std::string(to_string(s.builder))}, {"params", s.params}};
            } else {
                j = {{"type", "prefix"}, {"symbols", s.symbols}};
            }
            return j;
        },
        spec.kind);
}

/// Canonical text form: sorted keys, two-space indent, trailing newline.
inline std::string canonical_spec_text(const WordSpec& spec) { return spec_to_json(spec).dump(2) + "\n"; }

/// I/O failure on a corpus or spec file (distinct from an invalid spec).
struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SpecError("'" + path.string() + "': " + e.what());
    }
}

inline WordSpec load_spec(const std::filesystem::path& path) {
    try {
        return spec_from_json(read_json_file(path));
    } catch (const SpecError& e) {
        throw SpecError(path.string() + ": " + e.what());
    }
}

/// A spec given as a path (relative to `base`) or inline.
inline WordSpec spec_from_ref(const json& ref, const std::filesystem::path& base) {
    if (ref.is_string()) return load_spec(base / ref.get<std::string>());
    return spec_from_json(ref);
}

} // namespace spectra
