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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rv32 {

/// One code-generation attempt for a component.
struct TrialRecord {
    std::string component;
    unsigned trial_index = 1;  // 1-based iteration
    unsigned error_count = 0;
    bool passed = false;

    bool operator==(const TrialRecord&) const noexcept = default;
};

/// Four-parameter score for one component.
struct MetricRow {
    std::string component;
    unsigned correct_first_iteration = 0;  // 1 iff the first trial passed
    unsigned total_errors = 0;             // summed over all trials
    std::optional<unsigned> trials_to_correct;
    unsigned failed_after_three = 0;  // 1 iff no pass among trials 1..3

    bool operator==(const MetricRow&) const noexcept = default;
};

/// Line format: `<component> <trial_index> <error_count> <passed>` where
/// passed is 1/0, true/false or pass/fail. `#` starts a comment.
/// Throws LogFormatError naming the line.
std::vector<TrialRecord> parse_trial_log(std::string_view text);

/// One row per component, sorted by name. Throws InconsistentLog for a
/// trial index of 0, a repeated index, or any trial after a passing one.
std::vector<MetricRow> summarize(std::span<const TrialRecord> records);

enum class MetricFormat { table, csv };

/// Rows are emitted sorted by component; a missing trials_to_correct is `-`.
std::string render(std::span<const MetricRow> rows, MetricFormat format);

}  // namespace rv32
