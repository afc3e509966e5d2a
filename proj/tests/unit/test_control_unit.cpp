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

#include <gtest/gtest.h>

#include "rv32/control_unit.hpp"
#include "rv32/isa.hpp"

namespace {

using namespace rv32;

ControlSignals signals_for(std::uint32_t word) { return generate_signals(decode(InstructionWord(word))); }

TEST(ControlUnit, TotalAndConsistentOverAllMnemonics) {
    int memory_ops = 0, branches = 0, halts = 0;
    for (const auto& e : encoding_table()) {
        const auto s = generate_signals(make_instruction(e.mnemonic, 1, 2, 3, 0));
        EXPECT_TRUE(signals_consistent(s)) << mnemonic_name(e.mnemonic);
        EXPECT_FALSE(s.mem_read && s.mem_write);
        if (s.jump_kind != JumpKind::none) {
            EXPECT_EQ(s.branch_kind, BranchKind::none);
        }
        if (s.wb_source == WritebackSource::memory) {
            EXPECT_TRUE(s.mem_read);
        }
        memory_ops += s.mem_read || s.mem_write;
        branches += s.branch_kind != BranchKind::none;
        halts += s.halt;
        EXPECT_EQ(s.mem_read, is_load(e.mnemonic));
        EXPECT_EQ(s.mem_write, is_store(e.mnemonic));
        EXPECT_EQ(s.branch_kind != BranchKind::none, is_branch(e.mnemonic));
    }
    EXPECT_EQ(memory_ops, 8);
    EXPECT_EQ(branches, 6);
    EXPECT_EQ(halts, 2);
}

TEST(ControlUnit, ConsistencyCheckRejectsBadBundles) {
    ControlSignals s;
    s.mem_read = s.mem_write = true;
    EXPECT_FALSE(signals_consistent(s));
    s = {};
    s.jump_kind = JumpKind::jal;
    s.branch_kind = BranchKind::eq;
    EXPECT_FALSE(signals_consistent(s));
    s = {};
    s.wb_source = WritebackSource::memory;
    EXPECT_FALSE(signals_consistent(s));
}

// The ten instruction tests, words from an independent encoder.
TEST(ControlUnit, And) {
    const auto s = signals_for(0x0020f1b3);  // and x3, x1, x2
    EXPECT_TRUE(s.reg_write);
    EXPECT_FALSE(s.alu_src_imm);
    EXPECT_EQ(s.alu_control, (AluControl{0b111, false}));
    EXPECT_EQ(s.wb_source, WritebackSource::alu);
}

TEST(ControlUnit, LoadWord) {
    const auto s = signals_for(0x0080a283);  // lw x5, 8(x1)
    EXPECT_TRUE(s.mem_read);
    EXPECT_FALSE(s.mem_write);
    EXPECT_EQ(s.mem_width, MemWidth::word);
    EXPECT_EQ(s.wb_source, WritebackSource::memory);
    EXPECT_TRUE(s.alu_src_imm);
    EXPECT_TRUE(s.reg_write);
    EXPECT_EQ(s.alu_control, (AluControl{0, false}));
}

TEST(ControlUnit, StoreWord) {
    const auto s = signals_for(0x0050a623);  // sw x5, 12(x1)
    EXPECT_TRUE(s.mem_write);
    EXPECT_FALSE(s.mem_read);
    EXPECT_TRUE(s.alu_src_imm);
    EXPECT_FALSE(s.reg_write);
    EXPECT_EQ(s.mem_width, MemWidth::word);
}

TEST(ControlUnit, Beq) {
    const auto s = signals_for(0x00208463);  // beq x1, x2, 8
    EXPECT_EQ(s.branch_kind, BranchKind::eq);
    EXPECT_FALSE(s.reg_write);
    EXPECT_FALSE(s.alu_src_imm);
    EXPECT_EQ(s.alu_control, (AluControl{0, true}));
}

TEST(ControlUnit, Jalr) {
    const auto s = signals_for(0x000280e7);  // jalr x1, 0(x5)
    EXPECT_EQ(s.jump_kind, JumpKind::jalr);
    EXPECT_EQ(s.branch_kind, BranchKind::none);
    EXPECT_TRUE(s.reg_write);
    EXPECT_EQ(s.wb_source, WritebackSource::pc_plus_4);
}

TEST(ControlUnit, ImmediateAluFamily) {
    struct Case {
        std::uint32_t word;
        std::uint8_t funct3;
    };
    for (const auto c : {Case{0xfff0a313, 0b010},   // slti x6, x1, -1
                         Case{0x0640b393, 0b011},   // sltiu x7, x1, 100
                         Case{0x0550c413, 0b100},   // xori x8, x1, 0x55
                         Case{0x0f00e493, 0b110},   // ori x9, x1, 0xf0
                         Case{0x0ff0f513, 0b111}}) {  // andi x10, x1, 0xff
        const auto s = signals_for(c.word);
        EXPECT_TRUE(s.alu_src_imm);
        EXPECT_TRUE(s.reg_write);
        EXPECT_EQ(s.alu_control.funct3, c.funct3);
        EXPECT_FALSE(s.alu_control.alt);
        EXPECT_EQ(s.wb_source, WritebackSource::alu);
        EXPECT_FALSE(s.mem_read || s.mem_write);
    }
}

TEST(ControlUnit, OtherBindings) {
    auto s = generate_signals(make_instruction(Mnemonic::LUI, 1, 0, 0, 0x1000));
    EXPECT_TRUE(s.reg_write);
    EXPECT_EQ(s.wb_source, WritebackSource::imm_upper);
    s = generate_signals(make_instruction(Mnemonic::AUIPC, 1, 0, 0, 0x1000));
    EXPECT_EQ(s.wb_source, WritebackSource::pc_plus_imm_upper);
    s = generate_signals(make_instruction(Mnemonic::LHU, 1, 2, 0, 0));
    EXPECT_TRUE(s.mem_read);
    EXPECT_EQ(s.mem_width, MemWidth::half);
    EXPECT_TRUE(s.mem_unsigned);
    s = generate_signals(make_instruction(Mnemonic::SB, 0, 1, 2, 0));
    EXPECT_TRUE(s.mem_write);
    EXPECT_EQ(s.mem_width, MemWidth::byte);
    s = generate_signals(make_instruction(Mnemonic::JAL, 1, 0, 0, 8));
    EXPECT_EQ(s.jump_kind, JumpKind::jal);
    EXPECT_EQ(s.wb_source, WritebackSource::pc_plus_4);
    s = generate_signals(make_instruction(Mnemonic::SRA, 1, 2, 3, 0));
    EXPECT_EQ(s.alu_control, (AluControl{0b101, true}));
    s = generate_signals(make_instruction(Mnemonic::SRAI, 1, 2, 0, 3));
    EXPECT_EQ(s.alu_control, (AluControl{0b101, true}));
    EXPECT_EQ(generate_signals(make_instruction(Mnemonic::BLT, 0, 1, 2, 8)).alu_control.funct3, 0b010);
    EXPECT_EQ(generate_signals(make_instruction(Mnemonic::BGEU, 0, 1, 2, 8)).alu_control.funct3, 0b011);
    EXPECT_TRUE(generate_signals(make_instruction(Mnemonic::ECALL, 0, 0, 0, 0)).halt);
    EXPECT_TRUE(generate_signals(make_instruction(Mnemonic::EBREAK, 0, 0, 0, 1)).halt);
}

TEST(ControlUnit, FenceIsInactive) {
    const auto s = generate_signals(make_instruction(Mnemonic::FENCE, 0, 0, 0, 0x0ff));
    EXPECT_FALSE(s.reg_write || s.mem_read || s.mem_write || s.halt);
    EXPECT_EQ(s.branch_kind, BranchKind::none);
    EXPECT_EQ(s.jump_kind, JumpKind::none);
}

TEST(ControlUnit, Names) {
    EXPECT_EQ(to_string(MemWidth::half), "half");
    EXPECT_EQ(to_string(BranchKind::geu), "geu");
    EXPECT_EQ(to_string(JumpKind::jalr), "jalr");
    EXPECT_EQ(to_string(WritebackSource::pc_plus_4), "pc_plus_4");
}

}  // namespace
