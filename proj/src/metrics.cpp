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

#include "rv32/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "rv32/errors.hpp"

namespace rv32 {

namespace {

std::vector<std::string_view> fields(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        const auto start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

bool parse_unsigned(std::string_view s, unsigned& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return !s.empty() && ec == std::errc{} && ptr == s.data() + s.size();
}

std::string cell(const MetricRow& r, std::size_t column) {
    switch (column) {
        case 0: return r.component;
        case 1: return std::to_string(r.correct_first_iteration);
        case 2: return std::to_string(r.total_errors);
        case 3: return r.trials_to_correct ? std::to_string(*r.trials_to_correct) : "-";
        default: return std::to_string(r.failed_after_three);
    }
}

constexpr std::string_view kColumns[] = {"component", "correct_first", "total_errors",
                                         "trials_to_correct", "failed_after_three"};

}  // namespace

std::vector<TrialRecord> parse_trial_log(std::string_view text) {
    std::vector<TrialRecord> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto f = fields(line);
        if (f.empty()) continue;
        auto fail = [&](const std::string& what) {
            throw LogFormatError("trial log line " + std::to_string(line_no) + ": " + what);
        };
        if (f.size() != 4) fail("expected '<component> <trial_index> <error_count> <passed>'");
        TrialRecord r;
        r.component = f[0];
        if (!parse_unsigned(f[1], r.trial_index) || r.trial_index == 0) fail("trial index must be a positive integer");
        if (!parse_unsigned(f[2], r.error_count)) fail("error count must be a non-negative integer");
        if (f[3] == "1" || f[3] == "true" || f[3] == "pass") {
            r.passed = true;
        } else if (f[3] == "0" || f[3] == "false" || f[3] == "fail") {
            r.passed = false;
        } else {
            fail("passed must be 1/0, true/false or pass/fail");
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<MetricRow> summarize(std::span<const TrialRecord> records) {
    std::map<std::string, std::vector<const TrialRecord*>> by_component;
    for (const auto& r : records) {
        if (r.trial_index == 0) throw InconsistentLog(r.component + ": trial index 0 (indices are 1-based)");
        by_component[r.component].push_back(&r);
    }

    std::vector<MetricRow> rows;
    rows.reserve(by_component.size());
    for (auto& [component, trials] : by_component) {
        std::sort(trials.begin(), trials.end(),
                  [](const TrialRecord* a, const TrialRecord* b) { return a->trial_index < b->trial_index; });
        MetricRow row;
        row.component = component;
        for (std::size_t i = 0; i < trials.size(); ++i) {
            const auto& t = *trials[i];
            if (i > 0 && trials[i - 1]->trial_index == t.trial_index) {
                throw InconsistentLog(component + ": duplicate trial index " + std::to_string(t.trial_index));
            }
            if (row.trials_to_correct) {
                throw InconsistentLog(component + ": trial " + std::to_string(t.trial_index) +
                                      " follows passing trial " + std::to_string(*row.trials_to_correct));
            }
            row.total_errors += t.error_count;
            if (t.passed) row.trials_to_correct = t.trial_index;
        }
        row.correct_first_iteration = row.trials_to_correct == 1u ? 1 : 0;
        row.failed_after_three = (row.trials_to_correct && *row.trials_to_correct <= 3) ? 0 : 1;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render(std::span<const MetricRow> input, MetricFormat format) {
    std::vector<MetricRow> rows(input.begin(), input.end());
    std::stable_sort(rows.begin(), rows.end(),
                     [](const MetricRow& a, const MetricRow& b) { return a.component < b.component; });

    std::string out;
    if (format == MetricFormat::csv) {
        for (std::size_t c = 0; c < 5; ++c) {
            if (c) out += ',';
            out += kColumns[c];
        }
        out += '\n';
        for (const auto& r : rows) {
            for (std::size_t c = 0; c < 5; ++c) {
                if (c) out += ',';
                out += cell(r, c);
            }
            out += '\n';
        }
        return out;
    }

    std::size_t widths[5];
    for (std::size_t c = 0; c < 5; ++c) {
        widths[c] = kColumns[c].size();
        for (const auto& r : rows) widths[c] = std::max(widths[c], cell(r, c).size());
    }
    auto emit_row = [&](auto&& get) {
        for (std::size_t c = 0; c < 5; ++c) {
            const std::string v = get(c);
            if (c == 0) {
                out += v + std::string(widths[c] - v.size(), ' ');
            } else {
                out += "  " + std::string(widths[c] - v.size(), ' ') + v;
            }
        }
        out += '\n';
    };
    emit_row([&](std::size_t c) { return std::string(kColumns[c]); });
    std::size_t total = 0;
    for (const auto w : widths) total += w;
    out += std::string(total + 2 * 4, '-') + '\n';
    for (const auto& r : rows) emit_row([&](std::size_t c) { return cell(r, c); });
    return out;
}

}  // namespace rv32
