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

#include "rv32/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "rv32/assembler.hpp"
#include "rv32/core.hpp"
#include "rv32/scenario.hpp"
#include "rv32/testbench.hpp"
#include "rv32/vcd.hpp"

namespace rv32 {

namespace {

std::string hex_arg(std::uint32_t v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%08x", v);
    return buf;
}

std::uint32_t parse_hex_arg(const std::string& text, const std::string& option) {
    std::string_view s = text;
    if (s.starts_with("0x") || s.starts_with("0X")) s.remove_prefix(2);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
    if (s.empty() || s.size() > 8 || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw CLI::ValidationError(option, "expected a 32-bit hex value, got '" + text + "'");
    }
    return v;
}

/// Raw string values bound to the CLI11 app; converted after parsing.
struct RawOptions {
    std::string input;
    std::string output;
    std::string origin = hex_arg(kDefaultResetVector);
    std::string pc_reset = hex_arg(kDefaultResetVector);
    std::string imem_base = hex_arg(MemoryMap{}.imem_base);
    std::string imem_size = hex_arg(MemoryMap{}.imem_size);
    std::string dmem_base = hex_arg(MemoryMap{}.dmem_base);
    std::string dmem_size = hex_arg(MemoryMap{}.dmem_size);
    std::uint64_t max_cycles = kDefaultMaxCycles;
    std::string trace;
    bool dump = false;
    std::string image_format = "auto";
    std::string trace_dir;
    std::vector<std::string> scenario_files;
    std::string metric_format = "table";
};

struct AppBundle {
    CLI::App app{"Single-cycle RV32I simulator, assembler and testbench runner", "rv32sim"};
    CLI::App* assemble = nullptr;
    CLI::App* run = nullptr;
    CLI::App* bench = nullptr;
    CLI::App* metrics = nullptr;
};

void build_app(AppBundle& b, RawOptions& o) {
    auto& app = b.app;
    app.require_subcommand(1);

    b.assemble = app.add_subcommand("assemble", "Assemble a source file into a hex image");
    b.assemble->add_option("source", o.input, "Assembly source")->required();
    b.assemble->add_option("-o,--output", o.output, "Output hex image (stdout if omitted)");
    b.assemble->add_option("--origin", o.origin, "Load address of the first word (hex)");

    b.run = app.add_subcommand("run", "Execute a memory image");
    b.run->add_option("image", o.input, "Hex or raw binary image")->required();
    b.run->add_option("--pc-reset", o.pc_reset, "PC reset vector (hex)");
    b.run->add_option("--imem-base", o.imem_base, "Instruction memory base (hex)");
    b.run->add_option("--imem-size", o.imem_size, "Instruction memory size in bytes (hex)");
    b.run->add_option("--dmem-base", o.dmem_base, "Data memory base (hex)");
    b.run->add_option("--dmem-size", o.dmem_size, "Data memory size in bytes (hex)");
    b.run->add_option("--max-cycles", o.max_cycles, "Cycle budget")->check(CLI::PositiveNumber);
    b.run->add_option("--trace", o.trace, "Write a VCD waveform of the run");
    b.run->add_flag("--dump", o.dump, "Print the final machine state");
    b.run->add_option("--format", o.image_format, "Image format")
        ->check(CLI::IsMember({"auto", "hex", "bin"}));

    b.bench = app.add_subcommand("bench", "Run testbench scenarios");
    b.bench->add_option("selector", o.input, "'all', a component name or a scenario name")->required();
    b.bench->add_option("--trace-dir", o.trace_dir, "Write one VCD per scenario into this directory");
    b.bench->add_option("--file", o.scenario_files, "Scenario file to use instead of the builtin set");

    b.metrics = app.add_subcommand("metrics", "Summarize a code-generation trial log");
    b.metrics->add_option("log", o.input, "Trial log")->required();
    b.metrics->add_option("--format", o.metric_format, "Output format")
        ->check(CLI::IsMember({"table", "csv"}));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

int cmd_assemble(const CliConfig& c, std::ostream& out) {
    const auto program = assemble(read_file(c.input), c.origin);
    const ImageSegment seg = program.segment();
    const auto text = format_hex_image(std::span(&seg, 1));
    if (c.output) {
        write_file(*c.output, text);
    } else {
        out << text;
    }
    return 0;
}

int cmd_run(const CliConfig& c, std::ostream& out, std::ostream& err) {
    Machine machine({c.pc_reset, c.map});
    const auto data = read_file(c.input);
    bool binary = c.image_format == ImageFormat::bin;
    if (c.image_format == ImageFormat::automatic) {
        const auto ext = std::filesystem::path(c.input).extension().string();
        binary = ext == ".bin";
    }
    const auto segments =
        binary ? parse_raw_image({reinterpret_cast<const std::uint8_t*>(data.data()), data.size()}, c.map.imem_base)
               : parse_hex_image(data, c.map.imem_base);
    machine.load_program(segments);

    RunReport report;
    if (c.trace) {
        const auto trace = trace_machine_run(machine, c.max_cycles, report);
        write_file(*c.trace, to_vcd(trace, "processor"));
    } else {
        report = machine.run(c.max_cycles);
    }
    if (c.dump) out << dump_state(machine);
    err << to_string(report.status) << " after " << report.cycles << " cycle(s), " << report.retired
        << " retired\n";
    return is_error_status(report.status) ? 1 : 0;
}

int cmd_bench(const CliConfig& c, std::ostream& out) {
    std::vector<Scenario> pool;
    for (const auto& file : c.scenario_files) pool.push_back(parse_scenario(read_file(file)));
    const auto selected = c.scenario_files.empty() ? select_scenarios(c.input) : select_scenarios(pool, c.input);

    const auto results = run_scenarios(selected);
    if (c.trace_dir) std::filesystem::create_directories(*c.trace_dir);
    std::size_t passed = 0;
    for (const auto& r : results) {
        out << format_result(r);
        if (r.passed()) ++passed;
        if (c.trace_dir) {
            write_file((std::filesystem::path(*c.trace_dir) / (r.name + ".vcd")).string(), to_vcd(r.trace, r.name));
        }
    }
    out << passed << "/" << results.size() << " scenarios passed\n";
    return passed == results.size() ? 0 : 1;
}

int cmd_metrics(const CliConfig& c, std::ostream& out) {
    const auto records = parse_trial_log(read_file(c.input));
    out << render(summarize(records), c.metric_format);
    return 0;
}

}  // namespace

CliConfig parse_cli(const std::vector<std::string>& args) {
    AppBundle b;
    RawOptions o;
    build_app(b, o);
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        b.app.parse(reversed);

        CliConfig c;
        if (b.assemble->parsed()) c.subcommand = Subcommand::assemble;
        if (b.run->parsed()) c.subcommand = Subcommand::run;
        if (b.bench->parsed()) c.subcommand = Subcommand::bench;
        if (b.metrics->parsed()) c.subcommand = Subcommand::metrics;
        c.input = o.input;
        if (!o.output.empty()) c.output = o.output;
        c.origin = parse_hex_arg(o.origin, "--origin");
        c.pc_reset = parse_hex_arg(o.pc_reset, "--pc-reset");
        c.map.imem_base = parse_hex_arg(o.imem_base, "--imem-base");
        c.map.imem_size = parse_hex_arg(o.imem_size, "--imem-size");
        c.map.dmem_base = parse_hex_arg(o.dmem_base, "--dmem-base");
        c.map.dmem_size = parse_hex_arg(o.dmem_size, "--dmem-size");
        c.max_cycles = o.max_cycles;
        if (!o.trace.empty()) c.trace = o.trace;
        c.dump = o.dump;
        c.image_format = o.image_format == "hex"   ? ImageFormat::hex
                         : o.image_format == "bin" ? ImageFormat::bin
                                                   : ImageFormat::automatic;
        if (!o.trace_dir.empty()) c.trace_dir = o.trace_dir;
        c.scenario_files = o.scenario_files;
        c.metric_format = o.metric_format == "csv" ? MetricFormat::csv : MetricFormat::table;
        return c;
    } catch (const CLI::CallForHelp&) {
        const auto* sub = b.app.get_subcommands().empty() ? &b.app : b.app.get_subcommands().front();
        throw UsageError("help requested", sub->help(), true);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what(), b.app.help());
    }
}

std::vector<std::string> to_args(const CliConfig& c) {
    std::vector<std::string> a;
    switch (c.subcommand) {
        case Subcommand::assemble:
            a = {"assemble", c.input, "--origin", hex_arg(c.origin)};
            if (c.output) a.insert(a.end(), {"-o", *c.output});
            return a;
        case Subcommand::run:
            a = {"run",         c.input,
                 "--pc-reset",  hex_arg(c.pc_reset),
                 "--imem-base", hex_arg(c.map.imem_base),
                 "--imem-size", hex_arg(c.map.imem_size),
                 "--dmem-base", hex_arg(c.map.dmem_base),
                 "--dmem-size", hex_arg(c.map.dmem_size),
                 "--max-cycles", std::to_string(c.max_cycles),
                 "--format",
                 c.image_format == ImageFormat::hex ? "hex" : c.image_format == ImageFormat::bin ? "bin" : "auto"};
            if (c.trace) a.insert(a.end(), {"--trace", *c.trace});
            if (c.dump) a.push_back("--dump");
            return a;
        case Subcommand::bench:
            a = {"bench", c.input};
            if (c.trace_dir) a.insert(a.end(), {"--trace-dir", *c.trace_dir});
            for (const auto& f : c.scenario_files) a.insert(a.end(), {"--file", f});
            return a;
        case Subcommand::metrics:
            return {"metrics", c.input, "--format", c.metric_format == MetricFormat::csv ? "csv" : "table"};
    }
    return a;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig config;
    try {
        config = parse_cli(args);
    } catch (const UsageError& e) {
        if (e.help_requested()) {
            out << e.help();
            return 0;
        }
        err << "error: " << e.what() << "\n" << e.help();
        return 2;
    }
    try {
        switch (config.subcommand) {
            case Subcommand::assemble: return cmd_assemble(config, out);
            case Subcommand::run: return cmd_run(config, out, err);
            case Subcommand::bench: return cmd_bench(config, out);
            case Subcommand::metrics: return cmd_metrics(config, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace rv32
