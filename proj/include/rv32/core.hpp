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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "rv32/alu.hpp"
#include "rv32/control_unit.hpp"
#include "rv32/isa.hpp"
#include "rv32/memory.hpp"
#include "rv32/program_counter.hpp"
#include "rv32/register_file.hpp"

namespace rv32 {

enum class RunStatus : std::uint8_t {
    running,
    halted_ecall,
    halted_ebreak,
    halted_illegal,
    halted_limit,
    halted_misaligned,
};

std::string_view to_string(RunStatus s) noexcept;
bool is_error_status(RunStatus s) noexcept;

struct MachineConfig {
    std::uint32_t pc_reset = kDefaultResetVector;
    MemoryMap map{};

    bool operator==(const MachineConfig&) const noexcept = default;
};

struct RegisterWrite {
    std::uint8_t index = 0;
    std::uint32_t value = 0;

    bool operator==(const RegisterWrite&) const noexcept = default;
};

enum class MemAccessKind : std::uint8_t { load, store };

struct MemAccess {
    MemAccessKind kind = MemAccessKind::load;
    std::uint32_t addr = 0;
    /// Loaded value after extension, or the stored bytes (already truncated).
    std::uint32_t value = 0;
    MemWidth width = MemWidth::word;

    bool operator==(const MemAccess&) const noexcept = default;
};

/// Everything one cycle computes. Produced by Machine::evaluate() before
/// any state changes, then applied by Machine::step().
struct StepReport {
    std::uint64_t cycle = 0;  // 1-based number of the cycle this step occupies
    std::uint32_t pc_before = 0;
    std::uint32_t pc_after = 0;
    InstructionWord instruction{};
    std::optional<DecodedInstruction> decoded;
    ControlSignals signals{};
    AluOutput alu{};
    bool branch_taken = false;
    std::optional<RegisterWrite> rd_written;
    std::optional<MemAccess> mem_access;
    RunStatus status_after = RunStatus::running;
};

struct RunReport {
    std::uint64_t cycles = 0;
    RunStatus status = RunStatus::running;
    std::uint64_t retired = 0;
    std::uint64_t branches_taken = 0;
    std::uint64_t loads = 0;
    std::uint64_t stores = 0;
    std::uint64_t register_writes = 0;
};

/// Single-cycle RV32I machine: fetch, decode, control, execute, memory,
/// writeback and PC update all happen in one step.
class Machine {
public:
    explicit Machine(MachineConfig config = {});

    /// PC to its reset value, registers cleared, cycle 0, running.
    /// Memory contents survive.
    void reset();

    /// Combinational phase of the next cycle over the committed state.
    /// Throws HaltedMachine when not running.
    StepReport evaluate() const;

    /// Executes one instruction. Throws HaltedMachine when not running.
    StepReport step();

    /// Steps until the machine halts or `max_cycles` steps have run, in
    /// which case the status becomes halted_limit. `max_cycles` must be > 0.
    RunReport run(std::uint64_t max_cycles,
                  const std::function<void(const StepReport&)>& observer = {});

    void load_program(std::span<const ImageSegment> segments) { load_segments(memory_, segments); }

    /// Harness preload hook; x0 stays zero.
    void set_register(unsigned index, std::uint32_t value) { regs_.write(index, value, true); }

    const MachineConfig& config() const noexcept { return config_; }
    const ProgramCounter& pc() const noexcept { return pc_; }
    const RegisterFile& registers() const noexcept { return regs_; }
    const Memory& memory() const noexcept { return memory_; }
    Memory& memory() noexcept { return memory_; }
    std::uint64_t cycle() const noexcept { return cycle_; }
    RunStatus status() const noexcept { return status_; }

private:
    void commit(const StepReport& r);

    MachineConfig config_;
    ProgramCounter pc_;
    RegisterFile regs_;
    Memory memory_;
    std::uint64_t cycle_ = 0;
    RunStatus status_ = RunStatus::running;
};

/// `pc=<hex>`, `x<i>=<hex>` for i in 0..31, `cycle=<dec>`, `status=<word>`,
/// one per line. Hex values are 8 lower-case digits.
std::string dump_state(const Machine& m);

}  // namespace rv32
