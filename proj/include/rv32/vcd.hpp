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
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rv32 {

struct SignalDecl {
    std::string name;
    unsigned width = 1;  // 1..64

    bool operator==(const SignalDecl&) const noexcept = default;
};

/// A signal taking a new value at a virtual time in ns.
struct TraceEvent {
    std::uint64_t time = 0;
    std::string signal;
    std::uint64_t value = 0;
    unsigned width = 1;

    bool operator==(const TraceEvent&) const noexcept = default;
};

struct Trace {
    std::vector<SignalDecl> signals;
    std::vector<TraceEvent> events;
};

/// Records value changes only; events come out time-ordered with at most
/// one value per signal per timestamp.
class TraceRecorder {
public:
    explicit TraceRecorder(std::vector<SignalDecl> signals);

    /// Records `value` for signal `index` at `time` unless it is unchanged.
    /// Times must be non-decreasing. Re-sampling a signal at the same time
    /// overwrites that timestamp's event.
    void sample(std::uint64_t time, std::size_t index, std::uint64_t value);

    const Trace& trace() const noexcept { return trace_; }
    Trace take() && { return std::move(trace_); }

private:
    Trace trace_;
    std::vector<bool> seen_;
    std::vector<bool> had_prior_;
    std::vector<std::uint64_t> last_;
    std::vector<std::uint64_t> prior_;
    std::vector<std::size_t> last_event_;
    std::vector<std::size_t> prior_event_;
    std::uint64_t now_ = 0;
};

/// Short printable identifier for the index-th declared signal ("!", "\"", ...).
std::string vcd_identifier(std::size_t index);

/// Binary digits of `value` without leading zeros ("0" for zero).
std::string vcd_binary(std::uint64_t value);

/// Writes a Value Change Dump. Events at time 0 form the `$dumpvars`
/// block (signals without one dump as `x`); later events are grouped under
/// `#<time>`. Throws UndeclaredSignal or WidthMismatch.
void write_vcd(std::ostream& os, std::span<const TraceEvent> events,
               std::span<const SignalDecl> signals, std::string_view scope = "top");

std::string to_vcd(const Trace& trace, std::string_view scope = "top");

}  // namespace rv32
