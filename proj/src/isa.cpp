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

#include "rv32/isa.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <stdexcept>

#include "rv32/errors.hpp"

namespace rv32 {

namespace {

using M = Mnemonic;
using F = Format;

constexpr std::array<EncodingInfo, kMnemonicCount> kTable{{
    {M::LUI, F::U, opcode::kLui, 0, 0},
    {M::AUIPC, F::U, opcode::kAuipc, 0, 0},
    {M::JAL, F::J, opcode::kJal, 0, 0},
    {M::JALR, F::I, opcode::kJalr, 0b000, 0},
    {M::BEQ, F::B, opcode::kBranch, 0b000, 0},
    {M::BNE, F::B, opcode::kBranch, 0b001, 0},
    {M::BLT, F::B, opcode::kBranch, 0b100, 0},
    {M::BGE, F::B, opcode::kBranch, 0b101, 0},
    {M::BLTU, F::B, opcode::kBranch, 0b110, 0},
    {M::BGEU, F::B, opcode::kBranch, 0b111, 0},
    {M::LB, F::I, opcode::kLoad, 0b000, 0},
    {M::LH, F::I, opcode::kLoad, 0b001, 0},
    {M::LW, F::I, opcode::kLoad, 0b010, 0},
    {M::LBU, F::I, opcode::kLoad, 0b100, 0},
    {M::LHU, F::I, opcode::kLoad, 0b101, 0},
    {M::SB, F::S, opcode::kStore, 0b000, 0},
    {M::SH, F::S, opcode::kStore, 0b001, 0},
    {M::SW, F::S, opcode::kStore, 0b010, 0},
    {M::ADDI, F::I, opcode::kOpImm, 0b000, 0},
    {M::SLTI, F::I, opcode::kOpImm, 0b010, 0},
    {M::SLTIU, F::I, opcode::kOpImm, 0b011, 0},
    {M::XORI, F::I, opcode::kOpImm, 0b100, 0},
    {M::ORI, F::I, opcode::kOpImm, 0b110, 0},
    {M::ANDI, F::I, opcode::kOpImm, 0b111, 0},
    {M::SLLI, F::I, opcode::kOpImm, 0b001, 0b0000000},
    {M::SRLI, F::I, opcode::kOpImm, 0b101, 0b0000000},
    {M::SRAI, F::I, opcode::kOpImm, 0b101, 0b0100000},
    {M::ADD, F::R, opcode::kOp, 0b000, 0b0000000},
    {M::SUB, F::R, opcode::kOp, 0b000, 0b0100000},
    {M::SLL, F::R, opcode::kOp, 0b001, 0b0000000},
    {M::SLT, F::R, opcode::kOp, 0b010, 0b0000000},
    {M::SLTU, F::R, opcode::kOp, 0b011, 0b0000000},
    {M::XOR, F::R, opcode::kOp, 0b100, 0b0000000},
    {M::SRL, F::R, opcode::kOp, 0b101, 0b0000000},
    {M::SRA, F::R, opcode::kOp, 0b101, 0b0100000},
    {M::OR, F::R, opcode::kOp, 0b110, 0b0000000},
    {M::AND, F::R, opcode::kOp, 0b111, 0b0000000},
    {M::FENCE, F::I, opcode::kMiscMem, 0b000, 0},
    {M::ECALL, F::I, opcode::kSystem, 0b000, 0},
    {M::EBREAK, F::I, opcode::kSystem, 0b000, 0},
}};

constexpr std::array<std::string_view, kMnemonicCount> kNames{
    "LUI",  "AUIPC", "JAL",  "JALR", "BEQ",   "BNE",  "BLT",  "BGE",  "BLTU", "BGEU",
    "LB",   "LH",    "LW",   "LBU",  "LHU",   "SB",   "SH",   "SW",   "ADDI", "SLTI",
    "SLTIU", "XORI", "ORI",  "ANDI", "SLLI",  "SRLI", "SRAI", "ADD",  "SUB",  "SLL",
    "SLT",  "SLTU",  "XOR",  "SRL",  "SRA",   "OR",   "AND",  "FENCE", "ECALL", "EBREAK",
};

constexpr std::uint32_t kEcallWord = 0x00000073;
constexpr std::uint32_t kEbreakWord = 0x00100073;

constexpr std::int32_t sign_extend(std::uint32_t value, unsigned bits) noexcept {
    const std::uint32_t sign = 1u << (bits - 1);
    value &= (bits == 32) ? 0xffffffffu : ((1u << bits) - 1);
    return static_cast<std::int32_t>((value ^ sign) - sign);
}

constexpr bool fits_signed(std::int64_t value, unsigned bits) noexcept {
    const std::int64_t lo = -(std::int64_t{1} << (bits - 1));
    const std::int64_t hi = (std::int64_t{1} << (bits - 1)) - 1;
    return value >= lo && value <= hi;
}

std::optional<Mnemonic> resolve(InstructionWord w) noexcept {
    const auto f3 = w.funct3();
    const auto f7 = w.funct7();
    switch (w.opcode()) {
        case opcode::kLui: return M::LUI;
        case opcode::kAuipc: return M::AUIPC;
        case opcode::kJal: return M::JAL;
        case opcode::kJalr:
            if (f3 == 0) return M::JALR;
            return std::nullopt;
        case opcode::kBranch:
            switch (f3) {
                case 0b000: return M::BEQ;
                case 0b001: return M::BNE;
                case 0b100: return M::BLT;
                case 0b101: return M::BGE;
                case 0b110: return M::BLTU;
                case 0b111: return M::BGEU;
                default: return std::nullopt;
            }
        case opcode::kLoad:
            switch (f3) {
                case 0b000: return M::LB;
                case 0b001: return M::LH;
                case 0b010: return M::LW;
                case 0b100: return M::LBU;
                case 0b101: return M::LHU;
                default: return std::nullopt;
            }
        case opcode::kStore:
            switch (f3) {
                case 0b000: return M::SB;
                case 0b001: return M::SH;
                case 0b010: return M::SW;
                default: return std::nullopt;
            }
        case opcode::kOpImm:
            switch (f3) {
                case 0b000: return M::ADDI;
                case 0b010: return M::SLTI;
                case 0b011: return M::SLTIU;
                case 0b100: return M::XORI;
                case 0b110: return M::ORI;
                case 0b111: return M::ANDI;
                case 0b001:
                    if (f7 == 0) return M::SLLI;
                    return std::nullopt;
                case 0b101:
                    if (f7 == 0) return M::SRLI;
                    if (f7 == 0b0100000) return M::SRAI;
                    return std::nullopt;
                default: return std::nullopt;
            }
        case opcode::kOp:
            if (f7 == 0) {
                constexpr std::array<M, 8> plain{M::ADD, M::SLL, M::SLT, M::SLTU,
                                                 M::XOR, M::SRL, M::OR, M::AND};
                return plain[f3];
            }
            if (f7 == 0b0100000) {
                if (f3 == 0b000) return M::SUB;
                if (f3 == 0b101) return M::SRA;
            }
            return std::nullopt;
        case opcode::kMiscMem:
            if (f3 == 0) return M::FENCE;
            return std::nullopt;
        case opcode::kSystem:
            if (w.raw() == kEcallWord) return M::ECALL;
            if (w.raw() == kEbreakWord) return M::EBREAK;
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

std::uint8_t checked_reg(unsigned index) {
    if (index > 31) {
        throw IndexOutOfRange("register index " + std::to_string(index) + " out of range 0..31");
    }
    return static_cast<std::uint8_t>(index);
}

[[noreturn]] void out_of_range(const DecodedInstruction& d, const char* what) {
    throw ImmediateOutOfRange(std::string(mnemonic_name(d.mnemonic)) + ": immediate " +
                              std::to_string(d.imm) + " " + what);
}

}  // namespace

std::span<const EncodingInfo, kMnemonicCount> encoding_table() noexcept { return kTable; }

const EncodingInfo& encoding_of(Mnemonic m) noexcept { return kTable[static_cast<std::size_t>(m)]; }

std::string_view mnemonic_name(Mnemonic m) noexcept { return kNames[static_cast<std::size_t>(m)]; }

std::optional<Mnemonic> mnemonic_from_name(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        const auto& candidate = kNames[i];
        if (candidate.size() == name.size() &&
            std::equal(name.begin(), name.end(), candidate.begin(), [](char a, char b) {
                return std::toupper(static_cast<unsigned char>(a)) == b;
            })) {
            return static_cast<Mnemonic>(i);
        }
    }
    return std::nullopt;
}

std::string_view format_name(Format f) noexcept {
    constexpr std::array<std::string_view, 6> names{"R", "I", "S", "B", "U", "J"};
    return names[static_cast<std::size_t>(f)];
}

bool is_load(Mnemonic m) noexcept { return encoding_of(m).opcode == opcode::kLoad; }
bool is_store(Mnemonic m) noexcept { return encoding_of(m).opcode == opcode::kStore; }
bool is_branch(Mnemonic m) noexcept { return encoding_of(m).opcode == opcode::kBranch; }
bool is_shift_immediate(Mnemonic m) noexcept {
    return m == M::SLLI || m == M::SRLI || m == M::SRAI;
}

DecodedInstruction make_instruction(Mnemonic m, unsigned rd, unsigned rs1, unsigned rs2,
                                    std::int32_t imm) {
    const auto& info = encoding_of(m);
    DecodedInstruction d;
    d.mnemonic = m;
    d.format = info.format;
    d.opcode = info.opcode;
    const auto rd_ = checked_reg(rd);
    const auto rs1_ = checked_reg(rs1);
    const auto rs2_ = checked_reg(rs2);
    switch (info.format) {
        case F::R:
            d.rd = rd_;
            d.rs1 = rs1_;
            d.rs2 = rs2_;
            d.funct3 = info.funct3;
            d.funct7 = info.funct7;
            break;
        case F::I:
            if (m == M::ECALL || m == M::EBREAK) {
                d.imm = (m == M::EBREAK) ? 1 : 0;
                break;
            }
            d.rd = rd_;
            d.rs1 = rs1_;
            d.funct3 = info.funct3;
            d.imm = imm;
            if (is_shift_immediate(m)) d.funct7 = info.funct7;
            break;
        case F::S:
        case F::B:
            d.rs1 = rs1_;
            d.rs2 = rs2_;
            d.funct3 = info.funct3;
            d.imm = imm;
            break;
        case F::U:
        case F::J:
            d.rd = rd_;
            d.imm = imm;
            break;
    }
    return d;
}

std::int32_t extract_immediate(InstructionWord word, Format format) {
    const std::uint32_t raw = word.raw();
    switch (format) {
        case F::I:
            return sign_extend(raw >> 20, 12);
        case F::S:
            return sign_extend(((raw >> 25) << 5) | ((raw >> 7) & 0x1f), 12);
        case F::B:
            return sign_extend(((raw >> 31) & 0x1) << 12 | ((raw >> 7) & 0x1) << 11 |
                                   ((raw >> 25) & 0x3f) << 5 | ((raw >> 8) & 0xf) << 1,
                               13);
        case F::U:
            return static_cast<std::int32_t>(raw & 0xfffff000u);
        case F::J:
            return sign_extend(((raw >> 31) & 0x1) << 20 | ((raw >> 12) & 0xff) << 12 |
                                   ((raw >> 20) & 0x1) << 11 | ((raw >> 21) & 0x3ff) << 1,
                               21);
        case F::R:
            break;
    }
    throw std::invalid_argument("R-format instructions carry no immediate");
}

std::optional<DecodedInstruction> try_decode(InstructionWord word) noexcept {
    const auto m = resolve(word);
    if (!m) return std::nullopt;
    const auto& info = encoding_of(*m);
    std::int32_t imm = 0;
    if (info.format != F::R) imm = extract_immediate(word, info.format);
    if (is_shift_immediate(*m)) imm = word.rs2();
    // Fields come from fixed 5-bit slices, so make_instruction cannot throw.
    auto d = make_instruction(*m, word.rd(), word.rs1(), word.rs2(), imm);
    return d;
}

DecodedInstruction decode(InstructionWord word) {
    if (auto d = try_decode(word)) return *d;
    char buf[11];
    std::snprintf(buf, sizeof buf, "0x%08x", word.raw());
    throw IllegalInstruction(std::string("illegal instruction word ") + buf);
}

InstructionWord encode(const DecodedInstruction& d) {
    const auto& info = encoding_of(d.mnemonic);
    const std::uint32_t rd = checked_reg(d.rd);
    const std::uint32_t rs1 = checked_reg(d.rs1);
    const std::uint32_t rs2 = checked_reg(d.rs2);
    const std::uint32_t op = info.opcode;
    const std::uint32_t f3 = info.funct3;
    const std::uint32_t f7 = info.funct7;
    const auto imm = static_cast<std::uint32_t>(d.imm);

    switch (info.format) {
        case F::R:
            return InstructionWord(f7 << 25 | rs2 << 20 | rs1 << 15 | f3 << 12 | rd << 7 | op);
        case F::I:
            if (d.mnemonic == M::ECALL) {
                if (d.imm != 0) out_of_range(d, "must be 0");
                return InstructionWord(kEcallWord);
            }
            if (d.mnemonic == M::EBREAK) {
                if (d.imm != 1) out_of_range(d, "must be 1");
                return InstructionWord(kEbreakWord);
            }
            if (is_shift_immediate(d.mnemonic)) {
                if (d.imm < 0 || d.imm > 31) out_of_range(d, "is not a shift amount 0..31");
                return InstructionWord(f7 << 25 | imm << 20 | rs1 << 15 | f3 << 12 | rd << 7 | op);
            }
            if (!fits_signed(d.imm, 12)) out_of_range(d, "does not fit 12 signed bits");
            return InstructionWord((imm & 0xfff) << 20 | rs1 << 15 | f3 << 12 | rd << 7 | op);
        case F::S:
            if (!fits_signed(d.imm, 12)) out_of_range(d, "does not fit 12 signed bits");
            return InstructionWord(((imm >> 5) & 0x7f) << 25 | rs2 << 20 | rs1 << 15 | f3 << 12 |
                                   (imm & 0x1f) << 7 | op);
        case F::B:
            if (!fits_signed(d.imm, 13)) out_of_range(d, "does not fit 13 signed bits");
            if (d.imm & 1) out_of_range(d, "is odd");
            return InstructionWord(((imm >> 12) & 0x1) << 31 | ((imm >> 5) & 0x3f) << 25 |
                                   rs2 << 20 | rs1 << 15 | f3 << 12 | ((imm >> 1) & 0xf) << 8 |
                                   ((imm >> 11) & 0x1) << 7 | op);
        case F::U:
            if (imm & 0xfff) out_of_range(d, "has nonzero low 12 bits");
            return InstructionWord((imm & 0xfffff000u) | rd << 7 | op);
        case F::J:
            if (!fits_signed(d.imm, 21)) out_of_range(d, "does not fit 21 signed bits");
            if (d.imm & 1) out_of_range(d, "is odd");
            return InstructionWord(((imm >> 20) & 0x1) << 31 | ((imm >> 1) & 0x3ff) << 21 |
                                   ((imm >> 11) & 0x1) << 20 | ((imm >> 12) & 0xff) << 12 |
                                   rd << 7 | op);
    }
    throw std::logic_error("unreachable format");
}

std::string disassemble(const DecodedInstruction& d) {
    std::string name(mnemonic_name(d.mnemonic));
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    auto x = [](unsigned r) { return "x" + std::to_string(r); };
    const auto imm = std::to_string(d.imm);

    switch (d.mnemonic) {
        case M::ECALL:
        case M::EBREAK:
        case M::FENCE:
            return name;
        default:
            break;
    }
    switch (d.format) {
        case F::R:
            return name + " " + x(d.rd) + ", " + x(d.rs1) + ", " + x(d.rs2);
        case F::I:
            if (is_load(d.mnemonic) || d.mnemonic == M::JALR) {
                return name + " " + x(d.rd) + ", " + imm + "(" + x(d.rs1) + ")";
            }
            return name + " " + x(d.rd) + ", " + x(d.rs1) + ", " + imm;
        case F::S:
            return name + " " + x(d.rs2) + ", " + imm + "(" + x(d.rs1) + ")";
        case F::B:
            return name + " " + x(d.rs1) + ", " + x(d.rs2) + ", " + imm;
        case F::U: {
            char buf[16];
            std::snprintf(buf, sizeof buf, "0x%x", static_cast<std::uint32_t>(d.imm) >> 12);
            return name + " " + x(d.rd) + ", " + buf;
        }
        case F::J:
            return name + " " + x(d.rd) + ", " + imm;
    }
    return name;
}

}  // namespace rv32
