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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rv32/core.hpp"
#include "rv32/vcd.hpp"

namespace rv32 {

enum class ComponentKind : std::uint8_t { pc, regfile, alu, control, imem, dmem, processor };

std::string_view to_string(ComponentKind c) noexcept;
std::optional<ComponentKind> component_from_name(std::string_view name) noexcept;

/// Static configuration a testbench is built from.
struct ComponentSetup {
    std::uint32_t pc_reset = kDefaultResetVector;
    MemoryMap map{};
    std::vector<std::pair<std::uint32_t, std::uint32_t>> preload;  // (address, word)
    std::vector<std::pair<unsigned, std::uint32_t>> registers;     // (index, value)
    std::string program;  // processor only, assembled at map.imem_base
};

/// Signal-level wrapper around one component, clocked by the scenario
/// runner. Inputs are driven between edges; sequential state updates on
/// clock_edge(); settle() recomputes outputs from state and inputs.
class Testbench {
public:
    virtual ~Testbench() = default;

    const std::vector<SignalDecl>& signals() const noexcept { return decls_; }
    std::optional<std::size_t> find(std::string_view name) const noexcept;
    bool is_input(std::size_t index) const { return input_.at(index); }

    /// Throws UnknownSignal for outputs, WidthMismatch for over-wide values.
    void drive(std::size_t index, std::uint64_t value);
    std::uint64_t value(std::size_t index) const { return values_.at(index); }

    virtual void clock_edge() = 0;
    virtual void settle() = 0;

protected:
    std::size_t add_input(std::string name, unsigned width);
    std::size_t add_output(std::string name, unsigned width);
    std::uint64_t in(std::size_t index) const { return values_[index]; }
    void out(std::size_t index, std::uint64_t value);

private:
    std::vector<SignalDecl> decls_;
    std::vector<bool> input_;
    std::vector<std::uint64_t> values_;
};

/// Throws SyntaxError & co. when a processor program fails to assemble.
std::unique_ptr<Testbench> make_testbench(ComponentKind kind, const ComponentSetup& setup);

/// Processor testbench around an already-loaded machine.
std::unique_ptr<Testbench> make_processor_testbench(Machine machine);

/// Runs `machine` clock by clock (period 10 ns) up to `max_cycles`,
/// recording the processor testbench signals. The machine is left in its
/// final state; `report` receives the aggregate counts.
Trace trace_machine_run(Machine& machine, std::uint64_t max_cycles, RunReport& report);

}  // namespace rv32
