/*
 * Copyright 2026 The rv32sim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rv32/testbench.hpp"
#include "rv32/vcd.hpp"

namespace rv32 {

/// One core cycle of virtual time. Rising edges fall on multiples of the
/// period, falling edges half a period later.
inline constexpr std::uint64_t kClockPeriodNs = 10;

struct Assignment {
    std::string signal;
    std::uint64_t value = 0;
};

struct Stimulus {
    std::uint64_t time = 0;
    std::vector<Assignment> assignments;
};

struct Expectation {
    std::uint64_t time = 0;
    std::string signal;
    std::uint64_t value = 0;
    std::string label;  // optional human-readable test name
};

struct Scenario {
    std::string name;
    std::string description;
    ComponentKind component = ComponentKind::processor;
    ComponentSetup setup;
    std::vector<Stimulus> stimuli;  // strictly increasing times
    std::vector<Expectation> expectations;
};

struct ExpectationResult {
    Expectation expected;
    std::uint64_t observed = 0;
    bool passed = false;
};

struct ScenarioResult {
    std::string name;
    ComponentKind component = ComponentKind::processor;
    std::vector<ExpectationResult> checks;
    Trace trace;

    bool passed() const noexcept;
    std::size_t failures() const noexcept;
};

/// Parses the testbench text format:
///
///     scenario <name>
///     component <pc|regfile|alu|control|imem|dmem|processor>
///     description <text>
///     pc_reset|imem_base|imem_size|dmem_base|dmem_size <hex>
///     preload <hexaddr> <hexword>
///     reg <index> <hexvalue>
///     asm <assembly statement>
///     at <ns> <signal>=<hex> [<signal>=<hex> ...]
///     expect <ns> <signal> <hex> [label...]
///
/// `#` starts a comment except inside `asm` lines, where the assembler
/// handles it. Throws ScenarioFormatError.
Scenario parse_scenario(std::string_view text);

/// Applies the stimulus schedule clock by clock and checks every
/// expectation against the recorded trace. Stimuli at a rising-edge time
/// are applied before that edge samples its inputs. Throws UnknownSignal
/// for names the component does not declare.
ScenarioResult run_scenario(const Scenario& scenario);

/// Runs scenarios concurrently, one testbench each; results keep input order.
std::vector<ScenarioResult> run_scenarios(std::span<const Scenario> scenarios);

struct ScenarioSource {
    const char* file;
    const char* text;
};

/// Scenario files compiled in from data/scenarios.
std::span<const ScenarioSource> builtin_scenario_sources() noexcept;
const std::vector<Scenario>& builtin_scenarios();

/// "all", a component name, or a scenario name. Throws UnknownScenario.
std::vector<Scenario> select_scenarios(std::span<const Scenario> pool, std::string_view selector);
std::vector<Scenario> select_scenarios(std::string_view selector);
const Scenario& find_scenario(std::string_view name);

/// "PASS name (n/n)" plus one indented line per failed expectation.
std::string format_result(const ScenarioResult& result);

}  // namespace rv32
