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

#include "rv32/control_unit.hpp"

#include <array>

namespace rv32 {

namespace {

MemWidth width_of(std::uint8_t funct3) noexcept {
    switch (funct3 & 0x3) {
        case 0: return MemWidth::byte;
        case 1: return MemWidth::half;
        default: return MemWidth::word;
    }
}

}  // namespace

ControlSignals generate_signals(const DecodedInstruction& d) noexcept {
    using M = Mnemonic;
    ControlSignals s;
    switch (d.opcode) {
        case opcode::kLui:
            s.reg_write = true;
            s.alu_src_imm = true;
            s.wb_source = WritebackSource::imm_upper;
            break;
        case opcode::kAuipc:
            s.reg_write = true;
            s.alu_src_imm = true;
            s.wb_source = WritebackSource::pc_plus_imm_upper;
            break;
        case opcode::kJal:
            s.reg_write = true;
            s.jump_kind = JumpKind::jal;
            s.wb_source = WritebackSource::pc_plus_4;
            break;
        case opcode::kJalr:
            s.reg_write = true;
            s.alu_src_imm = true;
            s.jump_kind = JumpKind::jalr;
            s.wb_source = WritebackSource::pc_plus_4;
            break;
        case opcode::kBranch:
            switch (d.mnemonic) {
                case M::BEQ: s.branch_kind = BranchKind::eq; break;
                case M::BNE: s.branch_kind = BranchKind::ne; break;
                case M::BLT: s.branch_kind = BranchKind::lt; break;
                case M::BGE: s.branch_kind = BranchKind::ge; break;
                case M::BLTU: s.branch_kind = BranchKind::ltu; break;
                default: s.branch_kind = BranchKind::geu; break;
            }
            // eq/ne test the zero flag of rs1 - rs2; the others use SLT/SLTU.
            if (s.branch_kind == BranchKind::eq || s.branch_kind == BranchKind::ne) {
                s.alu_control = {alu_op::kAdd, true};
            } else if (s.branch_kind == BranchKind::lt || s.branch_kind == BranchKind::ge) {
                s.alu_control = {alu_op::kSlt, false};
            } else {
                s.alu_control = {alu_op::kSltu, false};
            }
            break;
        case opcode::kLoad:
            s.reg_write = true;
            s.alu_src_imm = true;
            s.mem_read = true;
            s.mem_width = width_of(d.funct3);
            s.mem_unsigned = (d.funct3 & 0x4) != 0;
            s.wb_source = WritebackSource::memory;
            break;
        case opcode::kStore:
            s.alu_src_imm = true;
            s.mem_write = true;
            s.mem_width = width_of(d.funct3);
            break;
        case opcode::kOpImm:
            s.reg_write = true;
            s.alu_src_imm = true;
            s.alu_control = {d.funct3, d.mnemonic == M::SRAI};
            break;
        case opcode::kOp:
            s.reg_write = true;
            s.alu_control = {d.funct3, (d.funct7 & 0b0100000) != 0};
            break;
        case opcode::kSystem:
            s.halt = true;
            break;
        default:
            // FENCE: no architectural effect on a single in-order hart.
            break;
    }
    return s;
}

bool signals_consistent(const ControlSignals& s) noexcept {
    if (s.mem_read && s.mem_write) return false;
    if (s.jump_kind != JumpKind::none && s.branch_kind != BranchKind::none) return false;
    if (s.wb_source == WritebackSource::memory && !s.mem_read) return false;
    return true;
}

std::string_view to_string(MemWidth w) noexcept {
    constexpr std::array<std::string_view, 3> n{"byte", "half", "word"};
    return n[static_cast<std::size_t>(w)];
}

std::string_view to_string(BranchKind b) noexcept {
    constexpr std::array<std::string_view, 7> n{"none", "eq", "ne", "lt", "ge", "ltu", "geu"};
    return n[static_cast<std::size_t>(b)];
}

std::string_view to_string(JumpKind j) noexcept {
    constexpr std::array<std::string_view, 3> n{"none", "jal", "jalr"};
    return n[static_cast<std::size_t>(j)];
}

std::string_view to_string(WritebackSource w) noexcept {
    constexpr std::array<std::string_view, 5> n{"alu", "memory", "pc_plus_4", "imm_upper",
                                                "pc_plus_imm_upper"};
    return n[static_cast<std::size_t>(w)];
}

}  // namespace rv32
