// Copyright 2026 The Spectra Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "spectra/spectrum.hpp"

namespace fixtures {

using namespace spectra;

inline WordSpec periodic(std::string u) { return {PeriodicSpec{std::move(u)}}; }
inline WordSpec fibonacci() { return {MorphicSpec{{{'0', "01"}, {'1', "0"}}, {}, '0'}}; }
inline WordSpec fibonacci_sturmian() { return {SturmianSpec{std::vector<std::uint64_t>(40, 1), std::nullopt}}; }
inline WordSpec thue_morse() { return {MorphicSpec{{{'0', "01"}, {'1', "10"}}, {}, '0'}}; }
inline WordSpec chain() { return {MorphicSpec{{{'0', "00"}, {'1', "101"}}, {}, '1'}}; }
inline WordSpec radical_example() { return {BlocksSpec{BlockBuilder::RadicalExample, {}}}; }
inline WordSpec run_doubling() { return {BlocksSpec{BlockBuilder::RunDoubling, {}}}; }

inline SpectrumPoset chain_poset(std::size_t h = 40) {
    return build_poset(make_class("chain", chain(), h), {make_class("chain", chain(), h), make_class("zero", periodic("0"), h)}, h);
}
inline SpectrumPoset antichain_poset(std::size_t h = 40) {
    return build_poset(make_class("run-doubling", run_doubling(), h),
                       {make_class("zero", periodic("0"), h), make_class("one", periodic("1"), h)}, h);
}
inline SpectrumPoset fibonacci_poset(std::size_t h = 40) {
    return build_poset(make_class("fibonacci", fibonacci(), h), {make_class("fibonacci", fibonacci(), h)}, h);
}
inline SpectrumPoset radical_example_poset(std::size_t h = 40) {
    return build_poset(make_class("radical-example", radical_example(), h), {make_class("x", periodic("x"), h)}, h);
}

} // namespace fixtures
