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

#include "rv32/testbench.hpp"

#include <array>
#include <stdexcept>

#include "rv32/alu.hpp"
#include "rv32/assembler.hpp"
#include "rv32/control_unit.hpp"
#include "rv32/errors.hpp"

namespace rv32 {

namespace {

constexpr std::array<std::string_view, 7> kComponentNames{"pc",   "regfile", "alu",      "control",
                                                          "imem", "dmem",    "processor"};

class PcBench final : public Testbench {
public:
    explicit PcBench(const ComponentSetup& setup) : pc_(setup.pc_reset) {
        reset_ = add_input("reset", 1);
        load_ = add_input("load", 1);
        target_ = add_input("target", 32);
        pc_out_ = add_output("pc_out", 32);
        fault_ = add_output("fault", 1);
    }

    void clock_edge() override {
        fault_latch_ = false;
        if (in(reset_)) {
            pc_.reset();
        } else if (in(load_)) {
            try {
                pc_.advance(static_cast<std::uint32_t>(in(target_)));
            } catch (const MisalignedTarget&) {
                fault_latch_ = true;
            }
        } else {
            pc_.advance(pc_.sequential());
        }
    }

    void settle() override {
        out(pc_out_, pc_.value());
        out(fault_, fault_latch_);
    }

private:
    ProgramCounter pc_;
    bool fault_latch_ = false;
    std::size_t reset_, load_, target_, pc_out_, fault_;
};

class RegfileBench final : public Testbench {
public:
    explicit RegfileBench(const ComponentSetup& setup) {
        for (const auto& [index, value] : setup.registers) rf_.write(index, value, true);
        reset_ = add_input("reset", 1);
        we_ = add_input("write_enable", 1);
        waddr_ = add_input("write_addr", 5);
        wdata_ = add_input("write_data", 32);
        raddr1_ = add_input("read_addr_1", 5);
        raddr2_ = add_input("read_addr_2", 5);
        rdata1_ = add_output("read_data_1", 32);
        rdata2_ = add_output("read_data_2", 32);
    }

    void clock_edge() override {
        if (in(reset_)) {
            rf_.reset();
            return;
        }
        rf_.write(static_cast<unsigned>(in(waddr_)), static_cast<std::uint32_t>(in(wdata_)),
                  in(we_) != 0);
    }

    void settle() override {
        out(rdata1_, rf_.read(static_cast<unsigned>(in(raddr1_))));
        out(rdata2_, rf_.read(static_cast<unsigned>(in(raddr2_))));
    }

private:
    RegisterFile rf_;
    std::size_t reset_, we_, waddr_, wdata_, raddr1_, raddr2_, rdata1_, rdata2_;
};

class AluBench final : public Testbench {
public:
    AluBench() {
        a_ = add_input("a", 32);
        b_ = add_input("b", 32);
        funct3_ = add_input("funct3", 3);
        alt_ = add_input("alt", 1);
        result_ = add_output("result", 32);
        zero_ = add_output("zero", 1);
    }

    void clock_edge() override {}

    void settle() override {
        const auto r = alu_execute(static_cast<std::uint32_t>(in(a_)), static_cast<std::uint32_t>(in(b_)),
                                   {static_cast<std::uint8_t>(in(funct3_)), in(alt_) != 0});
        out(result_, r.result);
        out(zero_, r.zero);
    }

private:
    std::size_t a_, b_, funct3_, alt_, result_, zero_;
};

class ControlBench final : public Testbench {
public:
    ControlBench() {
        instr_ = add_input("instr", 32);
        illegal_ = add_output("illegal", 1);
        reg_write_ = add_output("reg_write", 1);
        alu_src_imm_ = add_output("alu_src_imm", 1);
        mem_read_ = add_output("mem_read", 1);
        mem_write_ = add_output("mem_write", 1);
        mem_width_ = add_output("mem_width", 2);
        mem_unsigned_ = add_output("mem_unsigned", 1);
        branch_kind_ = add_output("branch_kind", 3);
        jump_kind_ = add_output("jump_kind", 2);
        wb_source_ = add_output("wb_source", 3);
        alu_funct3_ = add_output("alu_funct3", 3);
        alu_alt_ = add_output("alu_alt", 1);
        halt_ = add_output("halt", 1);
    }

    void clock_edge() override {}

    void settle() override {
        const auto d = try_decode(InstructionWord(static_cast<std::uint32_t>(in(instr_))));
        const ControlSignals s = d ? generate_signals(*d) : ControlSignals{};
        out(illegal_, !d.has_value());
        out(reg_write_, s.reg_write);
        out(alu_src_imm_, s.alu_src_imm);
        out(mem_read_, s.mem_read);
        out(mem_write_, s.mem_write);
        out(mem_width_, static_cast<std::uint64_t>(s.mem_width));
        out(mem_unsigned_, s.mem_unsigned);
        out(branch_kind_, static_cast<std::uint64_t>(s.branch_kind));
        out(jump_kind_, static_cast<std::uint64_t>(s.jump_kind));
        out(wb_source_, static_cast<std::uint64_t>(s.wb_source));
        out(alu_funct3_, s.alu_control.funct3);
        out(alu_alt_, s.alu_control.alt);
        out(halt_, s.halt);
    }

private:
    std::size_t instr_, illegal_, reg_write_, alu_src_imm_, mem_read_, mem_write_, mem_width_,
        mem_unsigned_, branch_kind_, jump_kind_, wb_source_, alu_funct3_, alu_alt_, halt_;
};

void preload(Memory& mem, const ComponentSetup& setup) {
    for (const auto& [addr, word] : setup.preload) {
        const std::uint32_t w[] = {word};
        mem.load_image(addr, w);
    }
}

class ImemBench final : public Testbench {
public:
    explicit ImemBench(const ComponentSetup& setup) : mem_(setup.map) {
        preload(mem_, setup);
        addr_ = add_input("addr", 32);
        instr_ = add_output("instr", 32);
        fault_ = add_output("fault", 1);
    }

    void clock_edge() override {}

    void settle() override {
        try {
            out(instr_, mem_.fetch(static_cast<std::uint32_t>(in(addr_))));
            out(fault_, 0);
        } catch (const MisalignedFetch&) {
            out(instr_, 0);
            out(fault_, 1);
        }
    }

private:
    Memory mem_;
    std::size_t addr_, instr_, fault_;
};

class DmemBench final : public Testbench {
public:
    explicit DmemBench(const ComponentSetup& setup) : mem_(setup.map) {
        preload(mem_, setup);
        addr_ = add_input("addr", 32);
        data_in_ = add_input("data_in", 32);
        mem_write_ = add_input("mem_write", 1);
        mem_read_ = add_input("mem_read", 1);
        width_ = add_input("width", 2);
        unsigned_ = add_input("unsigned_ext", 1);
        data_out_ = add_output("data_out", 32);
        fault_ = add_output("fault", 1);
    }

    void clock_edge() override {
        if (!in(mem_write_) || misaligned()) return;
        mem_.write(addr(), width(), static_cast<std::uint32_t>(in(data_in_)));
    }

    void settle() override {
        const bool active = in(mem_read_) || in(mem_write_);
        out(fault_, active && misaligned());
        if (!in(mem_read_) || misaligned()) {
            out(data_out_, 0);
            return;
        }
        out(data_out_, mem_.read(addr(), width(), in(unsigned_) != 0));
    }

private:
    std::uint32_t addr() const { return static_cast<std::uint32_t>(in(addr_)); }
    MemWidth width() const {
        const auto w = in(width_);
        return w == 0 ? MemWidth::byte : w == 1 ? MemWidth::half : MemWidth::word;
    }
    bool misaligned() const { return addr() % width_bytes(width()) != 0; }

    Memory mem_;
    std::size_t addr_, data_in_, mem_write_, mem_read_, width_, unsigned_, data_out_, fault_;
};

class ProcessorBench final : public Testbench {
public:
    explicit ProcessorBench(Machine machine) : owned_(std::move(machine)), m_(&*owned_) { declare(); }
    // Observes an externally owned machine.
    explicit ProcessorBench(Machine* machine) : m_(machine) { declare(); }

    void clock_edge() override {
        if (in(reset_)) {
            m_->reset();
        } else if (m_->status() == RunStatus::running) {
            m_->step();
        }
    }

    void settle() override {
        const std::uint32_t pc = m_->pc().value();
        out(pc_, pc);
        out(instr_, m_->memory().fetch(pc));
        out(halted_, m_->status() != RunStatus::running);
        out(status_, static_cast<std::uint64_t>(m_->status()));
        for (unsigned i = 1; i < kRegisterCount; ++i) out(x_[i], m_->registers().read(i));

        StepReport r;
        if (m_->status() == RunStatus::running) r = m_->evaluate();
        out(opcode_, r.instruction.opcode());
        out(alu_result_, r.alu.result);
        out(zero_, r.alu.zero);
        out(reg_write_, r.rd_written.has_value());
        out(rd_, r.rd_written ? r.rd_written->index : 0);
        out(rd_data_, r.rd_written ? r.rd_written->value : 0);
        const bool load = r.mem_access && r.mem_access->kind == MemAccessKind::load;
        const bool store = r.mem_access && r.mem_access->kind == MemAccessKind::store;
        out(mem_read_, load);
        out(mem_write_, store);
        out(mem_addr_, r.mem_access ? r.mem_access->addr : 0);
        out(mem_data_, r.mem_access ? r.mem_access->value : 0);
    }

private:
    void declare() {
        reset_ = add_input("reset", 1);
        pc_ = add_output("pc", 32);
        instr_ = add_output("instr", 32);
        opcode_ = add_output("opcode", 7);
        alu_result_ = add_output("alu_result", 32);
        zero_ = add_output("zero", 1);
        reg_write_ = add_output("reg_write", 1);
        rd_ = add_output("rd", 5);
        rd_data_ = add_output("rd_data", 32);
        mem_read_ = add_output("mem_read", 1);
        mem_write_ = add_output("mem_write", 1);
        mem_addr_ = add_output("mem_addr", 32);
        mem_data_ = add_output("mem_data", 32);
        halted_ = add_output("halted", 1);
        status_ = add_output("status", 3);
        for (unsigned i = 1; i < kRegisterCount; ++i) x_[i] = add_output("x" + std::to_string(i), 32);
    }

    std::optional<Machine> owned_;
    Machine* m_;
    std::size_t reset_, pc_, instr_, opcode_, alu_result_, zero_, reg_write_, rd_, rd_data_,
        mem_read_, mem_write_, mem_addr_, mem_data_, halted_, status_;
    std::array<std::size_t, kRegisterCount> x_{};
};

}  // namespace

std::string_view to_string(ComponentKind c) noexcept { return kComponentNames[static_cast<std::size_t>(c)]; }

std::optional<ComponentKind> component_from_name(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kComponentNames.size(); ++i) {
        if (kComponentNames[i] == name) return static_cast<ComponentKind>(i);
    }
    return std::nullopt;
}

std::optional<std::size_t> Testbench::find(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < decls_.size(); ++i) {
        if (decls_[i].name == name) return i;
    }
    return std::nullopt;
}

void Testbench::drive(std::size_t index, std::uint64_t value) {
    const auto& decl = decls_.at(index);
    if (!input_[index]) throw UnknownSignal("'" + decl.name + "' is an output and cannot be driven");
    if (decl.width < 64 && (value >> decl.width) != 0) {
        throw WidthMismatch("value does not fit " + std::to_string(decl.width) + "-bit input '" +
                            decl.name + "'");
    }
    values_[index] = value;
}

std::size_t Testbench::add_input(std::string name, unsigned width) {
    decls_.push_back({std::move(name), width});
    input_.push_back(true);
    values_.push_back(0);
    return decls_.size() - 1;
}

std::size_t Testbench::add_output(std::string name, unsigned width) {
    decls_.push_back({std::move(name), width});
    input_.push_back(false);
    values_.push_back(0);
    return decls_.size() - 1;
}

void Testbench::out(std::size_t index, std::uint64_t value) {
    const auto w = decls_[index].width;
    values_[index] = w < 64 ? value & ((std::uint64_t{1} << w) - 1) : value;
}

std::unique_ptr<Testbench> make_processor_testbench(Machine machine) {
    return std::make_unique<ProcessorBench>(std::move(machine));
}

std::unique_ptr<Testbench> make_testbench(ComponentKind kind, const ComponentSetup& setup) {
    switch (kind) {
        case ComponentKind::pc: return std::make_unique<PcBench>(setup);
        case ComponentKind::regfile: return std::make_unique<RegfileBench>(setup);
        case ComponentKind::alu: return std::make_unique<AluBench>();
        case ComponentKind::control: return std::make_unique<ControlBench>();
        case ComponentKind::imem: return std::make_unique<ImemBench>(setup);
        case ComponentKind::dmem: return std::make_unique<DmemBench>(setup);
        case ComponentKind::processor: {
            Machine machine({setup.pc_reset, setup.map});
            if (!setup.program.empty()) {
                const auto program = assemble(setup.program, setup.map.imem_base);
                const ImageSegment seg = program.segment();
                machine.load_program(std::span(&seg, 1));
            }
            preload(machine.memory(), setup);
            for (const auto& [index, value] : setup.registers) machine.set_register(index, value);
            return make_processor_testbench(std::move(machine));
        }
    }
    throw std::invalid_argument("unknown component kind");
}

Trace trace_machine_run(Machine& machine, std::uint64_t max_cycles, RunReport& report) {
    ProcessorBench bench(&machine);
    std::vector<SignalDecl> decls{{"clk", 1}};
    decls.insert(decls.end(), bench.signals().begin(), bench.signals().end());
    TraceRecorder rec(std::move(decls));
    auto record = [&](std::uint64_t t, std::uint64_t clk) {
        bench.settle();
        rec.sample(t, 0, clk);
        for (std::size_t i = 0; i < bench.signals().size(); ++i) rec.sample(t, i + 1, bench.value(i));
    };

    record(0, 0);
    std::uint64_t t = 0;
    report = machine.run(max_cycles, [&](const StepReport&) {
        t += 10;
        record(t, 1);
        rec.sample(t + 5, 0, 0);
    });
    // Picks up the final status, including halted_limit set by run().
    record(t + 5, 0);
    return std::move(rec).take();
}

}  // namespace rv32
