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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace rv32 {

enum class Format : std::uint8_t { R, I, S, B, U, J };

// Order follows the base-ISA listing: upper-immediate and jumps, branches,
// loads, stores, register-immediate, register-register, then misc/system.
enum class Mnemonic : std::uint8_t {
    LUI, AUIPC, JAL, JALR,
    BEQ, BNE, BLT, BGE, BLTU, BGEU,
    LB, LH, LW, LBU, LHU,
    SB, SH, SW,
    ADDI, SLTI, SLTIU, XORI, ORI, ANDI, SLLI, SRLI, SRAI,
    ADD, SUB, SLL, SLT, SLTU, XOR, SRL, SRA, OR, AND,
    FENCE, ECALL, EBREAK,
};

inline constexpr std::size_t kMnemonicCount = 40;

namespace opcode {
inline constexpr std::uint8_t kLoad = 0b0000011;
inline constexpr std::uint8_t kMiscMem = 0b0001111;
inline constexpr std::uint8_t kOpImm = 0b0010011;
inline constexpr std::uint8_t kAuipc = 0b0010111;
inline constexpr std::uint8_t kStore = 0b0100011;
inline constexpr std::uint8_t kOp = 0b0110011;
inline constexpr std::uint8_t kLui = 0b0110111;
inline constexpr std::uint8_t kBranch = 0b1100011;
inline constexpr std::uint8_t kJalr = 0b1100111;
inline constexpr std::uint8_t kJal = 0b1101111;
inline constexpr std::uint8_t kSystem = 0b1110011;
}  // namespace opcode

/// One row of the base encoding table.
struct EncodingInfo {
    Mnemonic mnemonic;
    Format format;
    std::uint8_t opcode;
    std::uint8_t funct3;
    std::uint8_t funct7;
};

std::span<const EncodingInfo, kMnemonicCount> encoding_table() noexcept;
const EncodingInfo& encoding_of(Mnemonic m) noexcept;

/// Upper-case canonical name, e.g. "ADDI".
std::string_view mnemonic_name(Mnemonic m) noexcept;
/// Case-insensitive lookup.
std::optional<Mnemonic> mnemonic_from_name(std::string_view name) noexcept;
std::string_view format_name(Format f) noexcept;

bool is_load(Mnemonic m) noexcept;
bool is_store(Mnemonic m) noexcept;
bool is_branch(Mnemonic m) noexcept;
bool is_shift_immediate(Mnemonic m) noexcept;

/// A raw 32-bit instruction word with fixed-position field accessors.
class InstructionWord {
public:
    constexpr InstructionWord() noexcept = default;
    constexpr explicit InstructionWord(std::uint32_t raw) noexcept : raw_(raw) {}

    constexpr std::uint32_t raw() const noexcept { return raw_; }
    constexpr std::uint8_t opcode() const noexcept { return raw_ & 0x7f; }
    constexpr std::uint8_t rd() const noexcept { return (raw_ >> 7) & 0x1f; }
    constexpr std::uint8_t funct3() const noexcept { return (raw_ >> 12) & 0x7; }
    constexpr std::uint8_t rs1() const noexcept { return (raw_ >> 15) & 0x1f; }
    constexpr std::uint8_t rs2() const noexcept { return (raw_ >> 20) & 0x1f; }
    constexpr std::uint8_t funct7() const noexcept { return (raw_ >> 25) & 0x7f; }

    constexpr bool operator==(const InstructionWord&) const noexcept = default;

private:
    std::uint32_t raw_ = 0;
};

/// Decoded instruction in canonical form: fields the format does not
/// carry are zero. For SLLI/SRLI/SRAI `imm` is the 5-bit shift amount and
/// `funct7` holds bits 31..25. For FENCE `imm` keeps the raw fm/pred/succ bits.
struct DecodedInstruction {
    Mnemonic mnemonic = Mnemonic::ADDI;
    Format format = Format::I;
    std::uint8_t opcode = 0;
    std::uint8_t rd = 0;
    std::uint8_t funct3 = 0;
    std::uint8_t rs1 = 0;
    std::uint8_t rs2 = 0;
    std::uint8_t funct7 = 0;
    std::int32_t imm = 0;

    bool operator==(const DecodedInstruction&) const noexcept = default;
};

/// Builds the canonical DecodedInstruction for `m`; operands the format
/// does not use are dropped. Throws IndexOutOfRange for register indices
/// above 31. The immediate is not range-checked here (encode does that).
DecodedInstruction make_instruction(Mnemonic m, unsigned rd, unsigned rs1, unsigned rs2,
                                    std::int32_t imm);

std::optional<DecodedInstruction> try_decode(InstructionWord word) noexcept;
/// Throws IllegalInstruction when the word matches no base encoding.
DecodedInstruction decode(InstructionWord word);

/// Assembles and sign-extends the immediate of `format`. R has no
/// immediate and raises std::invalid_argument.
std::int32_t extract_immediate(InstructionWord word, Format format);

/// Inverse of decode. Throws ImmediateOutOfRange when `imm` does not fit.
InstructionWord encode(const DecodedInstruction& d);

/// Assembler-syntax rendering, e.g. "addi x1, x0, 5" or "lw x5, -8(x11)".
std::string disassemble(const DecodedInstruction& d);

}  // namespace rv32
