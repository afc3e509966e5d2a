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

#include <random>
#include <set>
#include <string>

#include "../oracle/program_gen.hpp"
#include "../oracle/reference_decoder.hpp"
#include "rv32/errors.hpp"
#include "rv32/isa.hpp"

namespace {

using namespace rv32;

constexpr std::array<std::uint8_t, 11> kOpcodes{0x03, 0x0f, 0x13, 0x17, 0x23, 0x33, 0x37, 0x63, 0x67, 0x6f, 0x73};

// Half the words get a real opcode so the legal space is well sampled.
std::uint32_t random_word(std::mt19937& rng) {
    std::uint32_t w = rng();
    if (rng() & 1) w = (w & ~0x7fu) | kOpcodes[rng() % kOpcodes.size()];
    return w;
}

TEST(IsaDecode, LoadWordFromInstructionMemoryExample) {
    const auto d = decode(InstructionWord(0x00048403));
    EXPECT_EQ(d.opcode, 0b0000011);
    EXPECT_EQ(d.rd, 8);
    EXPECT_EQ(d.rs1, 9);
    EXPECT_EQ(d.imm, 0);
    // funct3 is bits 14..12 of the word.
    EXPECT_EQ(d.funct3, (0x00048403u >> 12) & 7u);
    EXPECT_EQ(d.funct3, 0b000);
    EXPECT_EQ(d.mnemonic, Mnemonic::LB);
    EXPECT_EQ(oracle::reference_decode(0x00048403)->name, "LB");
}

TEST(IsaDecode, ZeroWordIsIllegal) {
    EXPECT_THROW(decode(InstructionWord(0)), IllegalInstruction);
    EXPECT_FALSE(try_decode(InstructionWord(0)).has_value());
}

TEST(IsaDecode, Sub) {
    const auto d = decode(InstructionWord(0x40000033));
    EXPECT_EQ(d.mnemonic, Mnemonic::SUB);
    EXPECT_EQ(d.format, Format::R);
    EXPECT_EQ(d.rd, 0);
    EXPECT_EQ(d.rs1, 0);
    EXPECT_EQ(d.rs2, 0);
    EXPECT_EQ(d.funct7, 0b0100000);
}

TEST(IsaDecode, SystemWordsMustBeExact) {
    EXPECT_EQ(decode(InstructionWord(0x00000073)).mnemonic, Mnemonic::ECALL);
    EXPECT_EQ(decode(InstructionWord(0x00100073)).mnemonic, Mnemonic::EBREAK);
    EXPECT_FALSE(try_decode(InstructionWord(0x00000173)).has_value());
    EXPECT_FALSE(try_decode(InstructionWord(0x00200073)).has_value());
}

TEST(IsaDecode, FieldsMatchBitSlicesOnRandomWords) {
    std::mt19937 rng(0x15a001);
    for (int i = 0; i < 10000; ++i) {
        const std::uint32_t w = random_word(rng);
        const InstructionWord iw(w);
        ASSERT_EQ(iw.opcode(), oracle::bits(w, 6, 0));
        ASSERT_EQ(iw.rd(), oracle::bits(w, 11, 7));
        ASSERT_EQ(iw.funct3(), oracle::bits(w, 14, 12));
        ASSERT_EQ(iw.rs1(), oracle::bits(w, 19, 15));
        ASSERT_EQ(iw.rs2(), oracle::bits(w, 24, 20));
        ASSERT_EQ(iw.funct7(), oracle::bits(w, 31, 25));
    }
}

TEST(IsaDecode, AgreesWithReferenceDecoderOnRandomWords) {
    std::mt19937 rng(0x15a002);
    int legal = 0;
    for (int i = 0; i < 10000; ++i) {
        const std::uint32_t w = random_word(rng);
        const auto ref = oracle::reference_decode(w);
        const auto got = try_decode(InstructionWord(w));
        ASSERT_EQ(ref.has_value(), got.has_value()) << std::hex << w;
        if (!ref) continue;
        ++legal;
        ASSERT_EQ(mnemonic_name(got->mnemonic), ref->name) << std::hex << w;
        ASSERT_EQ(got->opcode, ref->opcode);
        if (is_shift_immediate(got->mnemonic)) {
            ASSERT_EQ(got->imm, static_cast<std::int32_t>(ref->rs2));
        } else if (ref->format != 'R') {
            ASSERT_EQ(got->imm, ref->imm) << std::hex << w << " " << ref->name;
        }
    }
    EXPECT_GT(legal, 1000);
}

TEST(IsaDecode, ExactlyFortyMnemonicsOverOpcodeFunctSpace) {
    std::set<std::string> seen;
    std::size_t mismatches = 0;
    // Every (opcode, funct3, funct7) with the other fields zero, plus the
    // same combinations with random register and immediate bits.
    std::mt19937 rng(0x15a003);
    for (std::uint32_t op = 0; op < 128; ++op) {
        for (std::uint32_t f3 = 0; f3 < 8; ++f3) {
            for (std::uint32_t f7 = 0; f7 < 128; ++f7) {
                const std::uint32_t base = op | (f3 << 12) | (f7 << 25);
                for (const std::uint32_t w : {base, base | (static_cast<std::uint32_t>(rng()) & 0x01ff8f80u)}) {
                    const auto ref = oracle::reference_decode(w);
                    const auto got = try_decode(InstructionWord(w));
                    if (ref.has_value() != got.has_value()) ++mismatches;
                    if (got) seen.insert(std::string(mnemonic_name(got->mnemonic)));
                }
            }
        }
    }
    EXPECT_EQ(mismatches, 0u);
    // The SYSTEM words need every other field fixed.
    for (const std::uint32_t w : {0x00000073u, 0x00100073u}) {
        if (const auto got = try_decode(InstructionWord(w))) seen.insert(std::string(mnemonic_name(got->mnemonic)));
    }
    EXPECT_EQ(seen.size(), 40u);
    EXPECT_EQ(encoding_table().size(), kMnemonicCount);
    std::set<Mnemonic> table;
    for (const auto& e : encoding_table()) table.insert(e.mnemonic);
    EXPECT_EQ(table.size(), 40u);
}

TEST(IsaImmediate, SignExtension) {
    EXPECT_EQ(extract_immediate(InstructionWord(0xfff00013), Format::I), -1);
    EXPECT_EQ(extract_immediate(InstructionWord(0x00000013), Format::I), 0);
    EXPECT_THROW(extract_immediate(InstructionWord(0x33), Format::R), std::invalid_argument);
}

TEST(IsaImmediate, MatchesOracleAndStaysInRange) {
    std::mt19937 rng(0x15a004);
    for (int i = 0; i < 10000; ++i) {
        const std::uint32_t w = rng();
        const InstructionWord iw(w);
        const auto i_imm = extract_immediate(iw, Format::I);
        const auto s_imm = extract_immediate(iw, Format::S);
        const auto b_imm = extract_immediate(iw, Format::B);
        const auto u_imm = extract_immediate(iw, Format::U);
        const auto j_imm = extract_immediate(iw, Format::J);
        ASSERT_EQ(i_imm, oracle::imm_i(w));
        ASSERT_EQ(s_imm, oracle::imm_s(w));
        ASSERT_EQ(b_imm, oracle::imm_b(w));
        ASSERT_EQ(u_imm, oracle::imm_u(w));
        ASSERT_EQ(j_imm, oracle::imm_j(w));
        ASSERT_EQ(b_imm & 1, 0);
        ASSERT_EQ(j_imm & 1, 0);
        ASSERT_EQ(u_imm & 0xfff, 0);
        ASSERT_TRUE(i_imm >= -2048 && i_imm <= 2047);
        ASSERT_TRUE(s_imm >= -2048 && s_imm <= 2047);
        ASSERT_TRUE(b_imm >= -4096 && b_imm <= 4094);
        ASSERT_TRUE(j_imm >= -(1 << 20) && j_imm <= (1 << 20) - 2);
    }
}

TEST(IsaEncode, Examples) {
    EXPECT_EQ(encode(make_instruction(Mnemonic::SUB, 0, 0, 0, 0)).raw(), 0x40000033u);
    EXPECT_THROW(encode(make_instruction(Mnemonic::ADDI, 1, 0, 0, 2048)), ImmediateOutOfRange);
    EXPECT_THROW(encode(make_instruction(Mnemonic::ADDI, 1, 0, 0, -2049)), ImmediateOutOfRange);
    EXPECT_NO_THROW(encode(make_instruction(Mnemonic::ADDI, 1, 0, 0, 2047)));
    const auto lui = encode(make_instruction(Mnemonic::LUI, 1, 0, 0, 0x40000000));
    EXPECT_EQ(lui.opcode(), 0b0110111);
    EXPECT_EQ(lui.raw(), 0x400000b7u);
    EXPECT_THROW(encode(make_instruction(Mnemonic::BEQ, 0, 1, 2, 3)), ImmediateOutOfRange);
    EXPECT_THROW(encode(make_instruction(Mnemonic::BEQ, 0, 1, 2, 4096)), ImmediateOutOfRange);
    EXPECT_THROW(encode(make_instruction(Mnemonic::JAL, 1, 0, 0, 1 << 20)), ImmediateOutOfRange);
    EXPECT_THROW(encode(make_instruction(Mnemonic::LUI, 1, 0, 0, 0x123)), ImmediateOutOfRange);
    EXPECT_THROW(encode(make_instruction(Mnemonic::SLLI, 1, 0, 0, 32)), ImmediateOutOfRange);
    EXPECT_THROW(make_instruction(Mnemonic::ADD, 32, 0, 0, 0), IndexOutOfRange);
}

// Random legal immediate drawn independently for each format.
std::int32_t random_imm(Mnemonic m, std::mt19937& rng) {
    const auto& e = encoding_of(m);
    if (is_shift_immediate(m)) return static_cast<std::int32_t>(rng() % 32);
    switch (e.format) {
        case Format::I:
        case Format::S: return static_cast<std::int32_t>(rng() % 4096) - 2048;
        case Format::B: return (static_cast<std::int32_t>(rng() % 4096) - 2048) * 2;
        case Format::U: return static_cast<std::int32_t>(rng() & 0xfffff000u);
        case Format::J: return (static_cast<std::int32_t>(rng() % (1u << 20)) - (1 << 19)) * 2;
        case Format::R: return 0;
    }
    return 0;
}

TEST(IsaEncode, RoundTripAllMnemonics) {
    std::mt19937 rng(0x15a005);
    for (const auto& e : encoding_table()) {
        for (int i = 0; i < 250; ++i) {
            auto d = make_instruction(e.mnemonic, rng() % 32, rng() % 32, rng() % 32, random_imm(e.mnemonic, rng));
            if (e.mnemonic == Mnemonic::ECALL || e.mnemonic == Mnemonic::EBREAK) {
                d = make_instruction(e.mnemonic, 0, 0, 0, 0);
            }
            const auto w = encode(d);
            const auto back = decode(w);
            ASSERT_EQ(back, d) << mnemonic_name(e.mnemonic) << " " << std::hex << w.raw();
            const auto ref = oracle::reference_decode(w.raw());
            ASSERT_TRUE(ref.has_value());
            ASSERT_EQ(ref->name, mnemonic_name(e.mnemonic));
        }
    }
}

TEST(IsaEncode, MatchesIndependentEncoder) {
    EXPECT_EQ(encode(make_instruction(Mnemonic::BEQ, 0, 1, 2, 8)).raw(), oracle::enc_b(8, 2, 1, 0, 0x63));
    EXPECT_EQ(encode(make_instruction(Mnemonic::SW, 0, 1, 5, 12)).raw(), oracle::enc_s(12, 5, 1, 2, 0x23));
    EXPECT_EQ(encode(make_instruction(Mnemonic::JAL, 1, 0, 0, -4)).raw(), oracle::enc_j(-4, 1, 0x6f));
    EXPECT_EQ(encode(make_instruction(Mnemonic::SRAI, 3, 4, 0, 7)).raw(), oracle::enc_r(0x20, 7, 4, 5, 3, 0x13));
}

TEST(IsaNames, LookupAndDisassembly) {
    EXPECT_EQ(mnemonic_from_name("addi"), Mnemonic::ADDI);
    EXPECT_EQ(mnemonic_from_name("SrAi"), Mnemonic::SRAI);
    EXPECT_FALSE(mnemonic_from_name("mul").has_value());
    EXPECT_EQ(disassemble(make_instruction(Mnemonic::ADDI, 1, 0, 0, 5)), "addi x1, x0, 5");
    EXPECT_EQ(disassemble(make_instruction(Mnemonic::LW, 5, 11, 0, -8)), "lw x5, -8(x11)");
    for (const auto& e : encoding_table()) EXPECT_EQ(mnemonic_from_name(mnemonic_name(e.mnemonic)), e.mnemonic);
}

TEST(IsaNames, Classification) {
    int loads = 0, stores = 0, branches = 0, shifts = 0;
    for (const auto& e : encoding_table()) {
        loads += is_load(e.mnemonic);
        stores += is_store(e.mnemonic);
        branches += is_branch(e.mnemonic);
        shifts += is_shift_immediate(e.mnemonic);
    }
    EXPECT_EQ(loads, 5);
    EXPECT_EQ(stores, 3);
    EXPECT_EQ(branches, 6);
    EXPECT_EQ(shifts, 3);
}

}  // namespace
