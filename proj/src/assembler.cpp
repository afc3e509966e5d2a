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

#include "rv32/assembler.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

#include "rv32/errors.hpp"
#include "rv32/register_file.hpp"

namespace rv32 {

namespace {

struct Statement {
    std::size_t line = 0;
    std::uint32_t address = 0;
    std::string op;  // lower-case mnemonic, pseudo or ".word"
    std::vector<std::string> operands;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    auto head = static_cast<unsigned char>(s.front());
    if (!(std::isalpha(head) || head == '_')) return false;
    return std::all_of(s.begin() + 1, s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

/// Decimal, 0x hex or 0b binary, optionally negative.
std::optional<std::int64_t> parse_number(std::string_view s) {
    s = trim(s);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    int base = 10;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        base = 16;
        s.remove_prefix(2);
    } else if (s.size() > 2 && s[0] == '0' && (s[1] == 'b' || s[1] == 'B')) {
        base = 2;
        s.remove_prefix(2);
    }
    if (s.empty()) return std::nullopt;
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v > 0xffffffffull) return std::nullopt;
    const auto sv = static_cast<std::int64_t>(v);
    return negative ? -sv : sv;
}

std::optional<unsigned> parse_register(std::string_view s) {
    const auto name = lower(trim(s));
    if (name.size() >= 2 && name[0] == 'x' &&
        std::all_of(name.begin() + 1, name.end(), [](unsigned char c) { return std::isdigit(c); })) {
        if (name.size() > 3 || (name.size() == 3 && name[1] == '0')) return std::nullopt;
        const unsigned idx = static_cast<unsigned>(std::stoul(name.substr(1)));
        if (idx < kRegisterCount) return idx;
        return std::nullopt;
    }
    if (name == "fp") return 8u;
    for (unsigned i = 0; i < kRegisterCount; ++i) {
        if (name == abi_register_name(i)) return i;
    }
    return std::nullopt;
}

std::vector<std::string> split_operands(std::string_view s) {
    std::vector<std::string> out;
    s = trim(s);
    if (s.empty()) return out;
    while (true) {
        const auto comma = s.find(',');
        out.emplace_back(trim(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

std::int32_t hi20(std::uint32_t value) {
    return static_cast<std::int32_t>(((value + 0x800u) >> 12) << 12);
}

std::int32_t lo12(std::uint32_t value) {
    const std::uint32_t low = value & 0xfff;
    return static_cast<std::int32_t>((low ^ 0x800u) - 0x800u);
}

class Encoder {
public:
    Encoder(const SymbolTable& symbols) : symbols_(symbols) {}

    InstructionWord encode_statement(const Statement& st);

private:
    [[noreturn]] void syntax(const std::string& what) const { throw SyntaxError(st_->line, what); }

    void expect_operands(std::size_t n) const {
        if (st_->operands.size() != n) {
            syntax("'" + st_->op + "' expects " + std::to_string(n) + " operand(s), got " +
                   std::to_string(st_->operands.size()));
        }
        for (const auto& o : st_->operands) {
            if (o.empty()) syntax("empty operand");
        }
    }

    unsigned reg(std::size_t i) const {
        const auto r = parse_register(st_->operands.at(i));
        if (!r) syntax("expected a register, got '" + st_->operands.at(i) + "'");
        return *r;
    }

    std::uint32_t label(std::string_view name) const {
        const auto it = symbols_.find(name);
        if (it == symbols_.end()) {
            throw UndefinedLabel(st_->line, "undefined label '" + std::string(name) + "'");
        }
        return it->second;
    }

    /// `%hi(x)`/`%lo(x)` over a label or a number, or nothing.
    std::optional<std::int64_t> relocation(std::string_view text) const {
        text = trim(text);
        for (const std::string_view fn : {"%hi(", "%lo("}) {
            if (text.starts_with(fn)) {
                if (!text.ends_with(")")) syntax("unterminated " + std::string(fn));
                const auto sym = trim(text.substr(fn.size(), text.size() - fn.size() - 1));
                const auto n = parse_number(sym);
                const auto addr = n ? static_cast<std::uint32_t>(*n) : label(sym);
                return fn == "%hi(" ? (static_cast<std::uint32_t>(hi20(addr)) >> 12) : lo12(addr);
            }
        }
        return std::nullopt;
    }

    std::int64_t immediate(std::string_view text) const {
        if (auto r = relocation(text)) return *r;
        if (auto n = parse_number(text)) return *n;
        syntax("expected an immediate, got '" + std::string(text) + "'");
    }

    /// Branch/jump operand: label name or literal byte offset.
    std::int64_t pc_relative(std::string_view text) const {
        if (auto n = parse_number(text)) return *n;
        if (!is_identifier(text)) syntax("expected a label or offset, got '" + std::string(text) + "'");
        return static_cast<std::int64_t>(label(text)) - static_cast<std::int64_t>(st_->address);
    }

    /// `imm(reg)`; an empty imm means 0.
    std::pair<std::int64_t, unsigned> memory_operand(std::size_t i) const {
        const std::string_view text = st_->operands.at(i);
        const auto open = text.rfind('(');
        if (open == std::string_view::npos || !text.ends_with(")")) {
            syntax("expected imm(reg), got '" + std::string(text) + "'");
        }
        const auto reg_text = text.substr(open + 1, text.size() - open - 2);
        const auto r = parse_register(reg_text);
        if (!r) syntax("expected a base register, got '" + std::string(reg_text) + "'");
        const auto imm_text = trim(text.substr(0, open));
        return {imm_text.empty() ? 0 : immediate(imm_text), *r};
    }

    InstructionWord emit(Mnemonic m, unsigned rd, unsigned rs1, unsigned rs2, std::int64_t imm) const {
        if (imm < INT32_MIN || imm > UINT32_MAX) {
            throw OperandOutOfRange(st_->line, "immediate " + std::to_string(imm) + " out of range");
        }
        const auto d = make_instruction(m, rd, rs1, rs2,
                                        static_cast<std::int32_t>(static_cast<std::uint32_t>(imm)));
        try {
            return encode(d);
        } catch (const ImmediateOutOfRange& e) {
            throw OperandOutOfRange(st_->line, e.what());
        }
    }

    std::int64_t upper_immediate(std::string_view text, bool pc_relative_label) const {
        std::int64_t value;
        if (auto r = relocation(text)) {
            value = *r;
        } else if (auto n = parse_number(text)) {
            value = *n;
        } else if (is_identifier(text)) {
            std::uint32_t target = label(text);
            if (pc_relative_label) target -= st_->address;
            return static_cast<std::uint32_t>(hi20(target));
        } else {
            syntax("expected an upper immediate, got '" + std::string(text) + "'");
        }
        if (value < -0x80000 || value > 0xfffff) {
            throw OperandOutOfRange(st_->line, "upper immediate " + std::to_string(value) +
                                                   " does not fit 20 bits");
        }
        return static_cast<std::int64_t>((static_cast<std::uint32_t>(value) & 0xfffff) << 12);
    }

    unsigned fence_set(std::string_view text) const {
        unsigned bits = 0;
        for (const char c : lower(text)) {
            switch (c) {
                case 'i': bits |= 8; break;
                case 'o': bits |= 4; break;
                case 'r': bits |= 2; break;
                case 'w': bits |= 1; break;
                default: syntax("bad fence set '" + std::string(text) + "'");
            }
        }
        return bits;
    }

    const SymbolTable& symbols_;
    const Statement* st_ = nullptr;
};

InstructionWord Encoder::encode_statement(const Statement& st) {
    st_ = &st;
    const auto& ops = st.operands;

    if (st.op == ".word") {
        expect_operands(1);
        std::int64_t v;
        if (auto n = parse_number(ops[0])) {
            v = *n;
        } else if (is_identifier(ops[0])) {
            v = label(ops[0]);
        } else {
            syntax("bad .word value '" + ops[0] + "'");
        }
        if (v < INT32_MIN || v > UINT32_MAX) {
            throw OperandOutOfRange(st.line, ".word value out of 32-bit range");
        }
        return InstructionWord(static_cast<std::uint32_t>(v));
    }
    if (st.op == "nop") {
        expect_operands(0);
        return emit(Mnemonic::ADDI, 0, 0, 0, 0);
    }
    if (st.op == "li") {
        expect_operands(2);
        return emit(Mnemonic::ADDI, reg(0), 0, 0, immediate(ops[1]));
    }

    const auto m = mnemonic_from_name(st.op);
    if (!m) syntax("unknown mnemonic '" + st.op + "'");

    switch (*m) {
        case Mnemonic::LUI:
        case Mnemonic::AUIPC:
            expect_operands(2);
            return emit(*m, reg(0), 0, 0, upper_immediate(ops[1], *m == Mnemonic::AUIPC));
        case Mnemonic::JAL:
            if (ops.size() == 1) {
                expect_operands(1);
                return emit(*m, 1, 0, 0, pc_relative(ops[0]));
            }
            expect_operands(2);
            return emit(*m, reg(0), 0, 0, pc_relative(ops[1]));
        case Mnemonic::JALR:
            if (ops.size() == 3) {
                expect_operands(3);
                return emit(*m, reg(0), reg(1), 0, immediate(ops[2]));
            } else {
                expect_operands(2);
                const auto [imm, base] = memory_operand(1);
                return emit(*m, reg(0), base, 0, imm);
            }
        case Mnemonic::FENCE:
            if (ops.empty()) return emit(*m, 0, 0, 0, 0x0ff);
            expect_operands(2);
            return emit(*m, 0, 0, 0, (fence_set(ops[0]) << 4) | fence_set(ops[1]));
        case Mnemonic::ECALL:
        case Mnemonic::EBREAK:
            expect_operands(0);
            return emit(*m, 0, 0, 0, *m == Mnemonic::EBREAK ? 1 : 0);
        default:
            break;
    }

    switch (encoding_of(*m).format) {
        case Format::R:
            expect_operands(3);
            return emit(*m, reg(0), reg(1), reg(2), 0);
        case Format::I:
            expect_operands(is_load(*m) ? 2 : 3);
            if (is_load(*m)) {
                const auto [imm, base] = memory_operand(1);
                return emit(*m, reg(0), base, 0, imm);
            }
            return emit(*m, reg(0), reg(1), 0, immediate(ops[2]));
        case Format::S: {
            expect_operands(2);
            const auto [imm, base] = memory_operand(1);
            return emit(*m, 0, base, reg(0), imm);
        }
        case Format::B: {
            expect_operands(3);
            const auto offset = pc_relative(ops[2]);
            if (offset < -4096 || offset > 4094) {
                throw OperandOutOfRange(st.line, "branch target " + std::to_string(offset) +
                                                     " bytes away is out of reach");
            }
            return emit(*m, 0, reg(0), reg(1), offset);
        }
        default:
            break;
    }
    syntax("unsupported statement");
}

}  // namespace

ImageSegment AssembledProgram::segment() const {
    ImageSegment seg{origin, {}};
    seg.words.reserve(words.size());
    for (const auto w : words) seg.words.push_back(w.raw());
    return seg;
}

AssembledProgram assemble(std::string_view source, std::uint32_t origin) {
    if (origin & 0x3) throw SyntaxError(0, "origin is not word-aligned");

    AssembledProgram program;
    program.origin = origin;
    std::vector<Statement> statements;

    // Pass 1: addresses and labels.
    std::uint64_t location = origin;
    std::size_t line_no = 0;
    std::string_view rest = source;
    while (!rest.empty()) {
        ++line_no;
        const auto nl = rest.find('\n');
        std::string_view line = rest.substr(0, nl);
        rest.remove_prefix(nl == std::string_view::npos ? rest.size() : nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);

        while (true) {
            const auto colon = line.find(':');
            if (colon == std::string_view::npos) break;
            const auto name = trim(line.substr(0, colon));
            if (!is_identifier(name)) throw SyntaxError(line_no, "bad label '" + std::string(name) + "'");
            if (location > 0xffffffffull) throw SyntaxError(line_no, "label beyond the address space");
            if (!program.symbols.emplace(std::string(name), static_cast<std::uint32_t>(location)).second) {
                throw DuplicateLabel(line_no, "label '" + std::string(name) + "' already defined");
            }
            line = trim(line.substr(colon + 1));
        }
        if (line.empty()) continue;

        const auto space = line.find_first_of(" \t");
        const std::string op = lower(line.substr(0, space));
        const auto operand_text = space == std::string_view::npos ? std::string_view{} : line.substr(space);

        if (op == ".org") {
            auto text = trim(operand_text);
            if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
            std::uint32_t addr = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), addr, 16);
            if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
                throw SyntaxError(line_no, "bad .org address");
            }
            if (addr & 0x3) throw SyntaxError(line_no, ".org address is not word-aligned");
            if (addr < location) throw SyntaxError(line_no, ".org moves the location counter backwards");
            location = addr;
            continue;
        }
        if (op.starts_with(".") && op != ".word") throw SyntaxError(line_no, "unknown directive '" + op + "'");

        if (location + 4 > 0x100000000ull) throw SyntaxError(line_no, "program runs past the address space");
        statements.push_back({line_no, static_cast<std::uint32_t>(location), op, split_operands(operand_text)});
        location += 4;
    }

    // Pass 2: encoding.
    Encoder encoder(program.symbols);
    for (const auto& st : statements) {
        const auto index = (st.address - origin) / 4;
        program.words.resize(index, InstructionWord(0));
        program.source_lines.resize(index, 0);
        program.words.push_back(encoder.encode_statement(st));
        program.source_lines.push_back(st.line);
    }
    return program;
}

}  // namespace rv32
