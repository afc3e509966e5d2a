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

#include "rv32/core.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>

#include "rv32/errors.hpp"

namespace rv32 {

namespace {

bool branch_taken(BranchKind kind, const AluOutput& alu) noexcept {
    switch (kind) {
        case BranchKind::none: return false;
        case BranchKind::eq: return alu.zero;
        case BranchKind::ne: return !alu.zero;
        case BranchKind::lt:
        case BranchKind::ltu: return alu.result == 1;
        case BranchKind::ge:
        case BranchKind::geu: return alu.result == 0;
    }
    return false;
}

std::uint32_t truncate(std::uint32_t value, MemWidth w) noexcept {
    switch (w) {
        case MemWidth::byte: return value & 0xff;
        case MemWidth::half: return value & 0xffff;
        case MemWidth::word: return value;
    }
    return value;
}

}  // namespace

std::string_view to_string(RunStatus s) noexcept {
    constexpr std::array<std::string_view, 6> names{
        "running",        "halted_ecall", "halted_ebreak",
        "halted_illegal", "halted_limit", "halted_misaligned",
    };
    return names[static_cast<std::size_t>(s)];
}

bool is_error_status(RunStatus s) noexcept {
    return s == RunStatus::halted_illegal || s == RunStatus::halted_misaligned;
}

Machine::Machine(MachineConfig config)
    : config_(config), pc_(config.pc_reset), memory_(config.map) {}

void Machine::reset() {
    pc_.reset();
    regs_.reset();
    cycle_ = 0;
    status_ = RunStatus::running;
}

StepReport Machine::evaluate() const {
    if (status_ != RunStatus::running) {
        throw HaltedMachine("machine is " + std::string(to_string(status_)));
    }
    StepReport r;
    r.cycle = cycle_ + 1;
    r.pc_before = pc_.value();
    r.pc_after = r.pc_before;

    // Fetch. The PC register only ever holds aligned values.
    r.instruction = InstructionWord(memory_.fetch(r.pc_before));
    r.decoded = try_decode(r.instruction);
    if (!r.decoded) {
        r.status_after = RunStatus::halted_illegal;
        return r;
    }
    const auto& d = *r.decoded;
    r.signals = generate_signals(d);
    const auto& s = r.signals;

    if (s.halt) {
        r.status_after = d.mnemonic == Mnemonic::EBREAK ? RunStatus::halted_ebreak
                                                        : RunStatus::halted_ecall;
        return r;
    }

    // Execute.
    const std::uint32_t rs1 = regs_.read(d.rs1);
    const std::uint32_t rs2 = regs_.read(d.rs2);
    const auto imm = static_cast<std::uint32_t>(d.imm);
    const std::uint32_t a = s.wb_source == WritebackSource::pc_plus_imm_upper ? r.pc_before : rs1;
    const std::uint32_t b = s.alu_src_imm ? imm : rs2;
    r.alu = alu_execute(a, b, s.alu_control);

    // Memory.
    std::uint32_t loaded = 0;
    try {
        if (s.mem_read) {
            loaded = memory_.read(r.alu.result, s.mem_width, s.mem_unsigned);
            r.mem_access = MemAccess{MemAccessKind::load, r.alu.result, loaded, s.mem_width};
        } else if (s.mem_write) {
            // Validate alignment now so commit cannot fail half-way.
            (void)memory_.read(r.alu.result, s.mem_width, true);
            r.mem_access = MemAccess{MemAccessKind::store, r.alu.result,
                                     truncate(rs2, s.mem_width), s.mem_width};
        }
    } catch (const MisalignedAccess&) {
        r.mem_access.reset();
        r.status_after = RunStatus::halted_misaligned;
        return r;
    }

    // Next PC.
    std::uint32_t next = pc_.sequential();
    switch (s.jump_kind) {
        case JumpKind::jal: next = r.pc_before + imm; break;
        case JumpKind::jalr: next = (rs1 + imm) & ~std::uint32_t{1}; break;
        case JumpKind::none:
            r.branch_taken = branch_taken(s.branch_kind, r.alu);
            if (r.branch_taken) next = r.pc_before + imm;
            break;
    }
    if (next & 0x3) {
        r.mem_access.reset();
        r.status_after = RunStatus::halted_misaligned;
        return r;
    }
    r.pc_after = next;

    // Writeback.
    if (s.reg_write && d.rd != 0) {
        std::uint32_t value = 0;
        switch (s.wb_source) {
            case WritebackSource::alu:
            case WritebackSource::pc_plus_imm_upper: value = r.alu.result; break;
            case WritebackSource::memory: value = loaded; break;
            case WritebackSource::pc_plus_4: value = r.pc_before + 4; break;
            case WritebackSource::imm_upper: value = imm; break;
        }
        r.rd_written = RegisterWrite{d.rd, value};
    }
    return r;
}

StepReport Machine::step() {
    auto r = evaluate();
    commit(r);
    return r;
}

void Machine::commit(const StepReport& r) {
    ++cycle_;
    status_ = r.status_after;
    if (status_ != RunStatus::running) return;
    if (r.rd_written) regs_.write(r.rd_written->index, r.rd_written->value, true);
    if (r.mem_access && r.mem_access->kind == MemAccessKind::store) {
        memory_.write(r.mem_access->addr, r.mem_access->width, r.mem_access->value);
    }
    pc_.advance(r.pc_after);
}

RunReport Machine::run(std::uint64_t max_cycles,
                       const std::function<void(const StepReport&)>& observer) {
    if (max_cycles == 0) throw std::invalid_argument("max_cycles must be positive");
    RunReport report;
    while (status_ == RunStatus::running && report.cycles < max_cycles) {
        const auto r = step();
        ++report.cycles;
        if (r.status_after == RunStatus::running) {
            ++report.retired;
            if (r.branch_taken) ++report.branches_taken;
            if (r.rd_written) ++report.register_writes;
            if (r.mem_access) {
                ++(r.mem_access->kind == MemAccessKind::load ? report.loads : report.stores);
            }
        }
        if (observer) observer(r);
    }
    if (status_ == RunStatus::running) status_ = RunStatus::halted_limit;
    report.status = status_;
    return report;
}

std::string dump_state(const Machine& m) {
    std::string out;
    char buf[48];
    std::snprintf(buf, sizeof buf, "pc=%08x\n", m.pc().value());
    out += buf;
    for (unsigned i = 0; i < kRegisterCount; ++i) {
        std::snprintf(buf, sizeof buf, "x%u=%08x\n", i, m.registers().read(i));
        out += buf;
    }
    out += "cycle=" + std::to_string(m.cycle()) + "\n";
    out += "status=" + std::string(to_string(m.status())) + "\n";
    return out;
}

}  // namespace rv32
