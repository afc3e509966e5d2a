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
#include <string_view>

#include "rv32/alu.hpp"
#include "rv32/isa.hpp"

namespace rv32 {

enum class MemWidth : std::uint8_t { byte = 0, half = 1, word = 2 };
enum class BranchKind : std::uint8_t { none = 0, eq, ne, lt, ge, ltu, geu };
enum class JumpKind : std::uint8_t { none = 0, jal, jalr };
enum class WritebackSource : std::uint8_t { alu = 0, memory, pc_plus_4, imm_upper, pc_plus_imm_upper };

/// Datapath steering for one instruction.
///
/// Operand `a` of the ALU is rs1, except for AUIPC (wb_source ==
/// pc_plus_imm_upper) where it is the PC. Operand `b` is the immediate when
/// alu_src_imm is set, otherwise rs2.
struct ControlSignals {
    bool reg_write = false;
    bool alu_src_imm = false;
    bool mem_read = false;
    bool mem_write = false;
    MemWidth mem_width = MemWidth::word;
    bool mem_unsigned = false;
    BranchKind branch_kind = BranchKind::none;
    JumpKind jump_kind = JumpKind::none;
    WritebackSource wb_source = WritebackSource::alu;
    AluControl alu_control{};
    bool halt = false;

    bool operator==(const ControlSignals&) const noexcept = default;
};

ControlSignals generate_signals(const DecodedInstruction& d) noexcept;

/// True when the bundle satisfies the mutual-exclusion rules
/// (no read+write, no jump+branch, memory writeback only with a read).
bool signals_consistent(const ControlSignals& s) noexcept;

std::string_view to_string(MemWidth w) noexcept;
std::string_view to_string(BranchKind b) noexcept;
std::string_view to_string(JumpKind j) noexcept;
std::string_view to_string(WritebackSource w) noexcept;

}  // namespace rv32
