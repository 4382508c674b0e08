// Copyright 2026 The Spectra Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "spectra/common.hpp"
#include "spectra/export.hpp"
#include "spectra/factor_index.hpp"
#include "spectra/horizon.hpp"
#include "spectra/radical.hpp"
#include "spectra/spec_json.hpp"
#include "spectra/spectrum.hpp"
#include "spectra/sturmian.hpp"
#include "spectra/topology.hpp"
#include "spectra/verify.hpp"
#include "spectra/wordgen.hpp"
#include "spectra/words.hpp"
