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

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "rv32/errors.hpp"
#include "rv32/memory.hpp"
#include "rv32/metrics.hpp"
#include "rv32/program_counter.hpp"

namespace rv32 {

class UsageError : public Error {
public:
    UsageError(const std::string& message, std::string help, bool help_requested = false)
        : Error(message), help_(std::move(help)), help_requested_(help_requested) {}
    const std::string& help() const noexcept { return help_; }
    /// --help was given; not an error for the caller.
    bool help_requested() const noexcept { return help_requested_; }

private:
    std::string help_;
    bool help_requested_;
};

enum class Subcommand { assemble, run, bench, metrics };
enum class ImageFormat { automatic, hex, bin };

inline constexpr std::uint64_t kDefaultMaxCycles = 1'000'000;

struct CliConfig {
    Subcommand subcommand = Subcommand::run;
    std::string input;  // source, image, scenario selector or trial log
    std::optional<std::string> output;
    std::uint32_t origin = kDefaultResetVector;
    std::uint32_t pc_reset = kDefaultResetVector;
    MemoryMap map{};
    std::uint64_t max_cycles = kDefaultMaxCycles;
    std::optional<std::string> trace;
    bool dump = false;
    ImageFormat image_format = ImageFormat::automatic;
    std::optional<std::string> trace_dir;
    std::vector<std::string> scenario_files;
    MetricFormat metric_format = MetricFormat::table;

    bool operator==(const CliConfig&) const = default;
};

/// `args` excludes the program name. Throws UsageError.
CliConfig parse_cli(const std::vector<std::string>& args);

/// Canonical argument vector; parse_cli(to_args(c)) == c.
std::vector<std::string> to_args(const CliConfig& config);

/// Runs a command line. Returns 0 on success, 1 for failed scenarios or a
/// machine that halted on an error, 2 for usage and input errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rv32
