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

// Instruction-at-a-time interpreter written from the base-ISA semantics,
// driven by the reference decoder. Data memory is a sparse byte map over
// the default data window; everything else reads as zero.

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "reference_decoder.hpp"

namespace oracle {

enum class RefStop { ecall, ebreak, illegal, misaligned, limit };

struct RefMachine {
    std::uint32_t imem_base = 0x40000000;
    std::uint32_t dmem_base = 0x80000000;
    std::uint32_t dmem_size = 0x10000;
    std::vector<std::uint32_t> program;
    std::uint32_t pc = 0x40000000;
    std::array<std::uint32_t, 32> x{};
    std::map<std::uint32_t, std::uint8_t> dmem;
    std::uint64_t cycles = 0;

    std::uint32_t fetch(std::uint32_t addr) const {
        const std::uint64_t off = static_cast<std::uint64_t>(addr) - imem_base;
        if (addr < imem_base || off / 4 >= program.size()) return 0;
        return program[off / 4];
    }

    bool in_dmem(std::uint32_t addr, unsigned n) const {
        return addr >= dmem_base && static_cast<std::uint64_t>(addr) + n <= std::uint64_t{dmem_base} + dmem_size;
    }

    std::uint32_t load_bytes(std::uint32_t addr, unsigned n) const {
        if (!in_dmem(addr, n)) return 0;
        std::uint32_t v = 0;
        for (unsigned i = 0; i < n; ++i) {
            const auto it = dmem.find(addr + i);
            const std::uint32_t byte = it == dmem.end() ? 0 : it->second;
            v |= byte << (8 * i);
        }
        return v;
    }

    void store_bytes(std::uint32_t addr, unsigned n, std::uint32_t v) {
        if (!in_dmem(addr, n)) return;
        for (unsigned i = 0; i < n; ++i) dmem[addr + i] = static_cast<std::uint8_t>(v >> (8 * i));
    }

    void set(unsigned rd, std::uint32_t v) {
        if (rd != 0) x[rd] = v;
    }

    RefStop run(std::uint64_t max_steps) {
        while (cycles < max_steps) {
            ++cycles;
            const std::uint32_t w = fetch(pc);
            const auto d = reference_decode(w);
            if (!d) return RefStop::illegal;
            const std::string_view n = d->name;
            const std::uint32_t a = x[d->rs1], b = x[d->rs2];
            const std::int32_t sa = static_cast<std::int32_t>(a), sb = static_cast<std::int32_t>(b);
            const std::uint32_t imm = static_cast<std::uint32_t>(d->imm);
            std::uint32_t next = pc + 4;

            auto branch = [&](bool taken) {
                if (taken) next = pc + imm;
            };
            auto load = [&](unsigned size, bool sign) {
                const std::uint32_t addr = a + imm;
                if (addr % size != 0) return false;
                std::uint32_t v = load_bytes(addr, size);
                if (sign && size < 4) v = static_cast<std::uint32_t>(sign_extend(v, size * 8));
                set(d->rd, v);
                return true;
            };
            auto store = [&](unsigned size) {
                const std::uint32_t addr = a + imm;
                if (addr % size != 0) return false;
                store_bytes(addr, size, b);
                return true;
            };

            bool ok = true;
            if (n == "LUI") set(d->rd, imm);
            else if (n == "AUIPC") set(d->rd, pc + imm);
            else if (n == "JAL") { set(d->rd, pc + 4); next = pc + imm; }
            else if (n == "JALR") { next = (a + imm) & ~1u; set(d->rd, pc + 4); }
            else if (n == "BEQ") branch(a == b);
            else if (n == "BNE") branch(a != b);
            else if (n == "BLT") branch(sa < sb);
            else if (n == "BGE") branch(sa >= sb);
            else if (n == "BLTU") branch(a < b);
            else if (n == "BGEU") branch(a >= b);
            else if (n == "LB") ok = load(1, true);
            else if (n == "LH") ok = load(2, true);
            else if (n == "LW") ok = load(4, false);
            else if (n == "LBU") ok = load(1, false);
            else if (n == "LHU") ok = load(2, false);
            else if (n == "SB") ok = store(1);
            else if (n == "SH") ok = store(2);
            else if (n == "SW") ok = store(4);
            else if (n == "ADDI") set(d->rd, a + imm);
            else if (n == "SLTI") set(d->rd, sa < d->imm ? 1 : 0);
            else if (n == "SLTIU") set(d->rd, a < imm ? 1 : 0);
            else if (n == "XORI") set(d->rd, a ^ imm);
            else if (n == "ORI") set(d->rd, a | imm);
            else if (n == "ANDI") set(d->rd, a & imm);
            else if (n == "SLLI") set(d->rd, a << d->rs2);
            else if (n == "SRLI") set(d->rd, a >> d->rs2);
            else if (n == "SRAI") set(d->rd, static_cast<std::uint32_t>(sa >> d->rs2));
            else if (n == "ADD") set(d->rd, a + b);
            else if (n == "SUB") set(d->rd, a - b);
            else if (n == "SLL") set(d->rd, a << (b & 31));
            else if (n == "SLT") set(d->rd, sa < sb ? 1 : 0);
            else if (n == "SLTU") set(d->rd, a < b ? 1 : 0);
            else if (n == "XOR") set(d->rd, a ^ b);
            else if (n == "SRL") set(d->rd, a >> (b & 31));
            else if (n == "SRA") set(d->rd, static_cast<std::uint32_t>(sa >> (b & 31)));
            else if (n == "OR") set(d->rd, a | b);
            else if (n == "AND") set(d->rd, a & b);
            else if (n == "FENCE") {}
            else if (n == "ECALL") return RefStop::ecall;
            else if (n == "EBREAK") return RefStop::ebreak;

            if (!ok || next % 4 != 0) return RefStop::misaligned;
            pc = next;
        }
        return RefStop::limit;
    }
};

}  // namespace oracle
