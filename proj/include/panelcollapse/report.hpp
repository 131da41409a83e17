// Copyright 2026 The panelcollapse Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PANELCOLLAPSE_REPORT_HPP_
#define PANELCOLLAPSE_REPORT_HPP_

// Human-readable and JSON reports. Every function is deterministic: equal
// inputs give byte-identical text.

#include <cstdint>
#include <string>

#include "panelcollapse/complex.hpp"
#include "panelcollapse/pocset.hpp"
#include "panelcollapse/random.hpp"
#include "panelcollapse/symmetry.hpp"
#include "panelcollapse/text_format.hpp"

namespace panelcollapse {

// "valid; V=8 E=12 F=6 C=1; Euler=1", or "invalid; <reason>".
std::string validation_summary(const ValidationReport& report);
std::string validation_report(const GraphText& graph, bool json);

std::string hyperplanes_report(const CubeComplex& complex, bool json);
std::string panels_report(const CubeComplex& complex, bool json);
std::string stats_report(const CubeComplex& complex, const GroupAction& action, bool json);

std::string collapse_report(const CollapseResult& result, bool json);

// One line per step, then "tree: V=.. E=..". Complexity vectors are aligned to
// the input dimension.
std::string trace_report(const CubeComplex& input, const RunResult& run, bool json);

// The dual complex in the text format, with wall metadata as comments.
std::string dual_text(const Wallspace& space, const DualComplex& dual);
std::string stallings_report(const Wallspace& space, const StallingsResult& result, bool json);

std::string fuzz_report(std::uint64_t seed, int count, const FuzzSummary& summary, bool json);

}  // namespace panelcollapse

#endif  // PANELCOLLAPSE_REPORT_HPP_
