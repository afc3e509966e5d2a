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

#include "rv32/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <future>
#include <set>

#include "rv32/errors.hpp"

namespace rv32 {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> words(std::string_view s) {
    std::vector<std::string_view> out;
    while (true) {
        s = trim(s);
        if (s.empty()) break;
        const auto end = s.find_first_of(" \t");
        out.push_back(s.substr(0, end));
        if (end == std::string_view::npos) break;
        s.remove_prefix(end);
    }
    return out;
}

template <typename T>
bool parse_int(std::string_view s, T& out, int base) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out, base);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

class Parser {
public:
    Scenario parse(std::string_view text) {
        bool have_name = false;
        bool have_component = false;
        while (!text.empty()) {
            ++line_;
            const auto nl = text.find('\n');
            std::string_view line = text.substr(0, nl);
            text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

            line = trim(line);
            const auto head_end = line.find_first_of(" \t");
            const auto keyword = line.substr(0, head_end);
            std::string_view rest =
                head_end == std::string_view::npos ? std::string_view{} : trim(line.substr(head_end));

            if (keyword == "asm") {
                s_.setup.program.append(rest).push_back('\n');
                continue;
            }
            if (const auto hash = rest.find('#'); hash != std::string_view::npos) rest = trim(rest.substr(0, hash));
            if (keyword.empty() || keyword.front() == '#') continue;

            const auto args = words(rest);
            if (keyword == "scenario") {
                need(args, 1);
                s_.name = args[0];
                have_name = true;
            } else if (keyword == "component") {
                need(args, 1);
                const auto c = component_from_name(args[0]);
                if (!c) fail("unknown component '" + std::string(args[0]) + "'");
                s_.component = *c;
                have_component = true;
            } else if (keyword == "description") {
                s_.description = rest;
            } else if (keyword == "pc_reset") {
                need(args, 1);
                s_.setup.pc_reset = hex32(args[0]);
            } else if (keyword == "imem_base") {
                need(args, 1);
                s_.setup.map.imem_base = hex32(args[0]);
            } else if (keyword == "imem_size") {
                need(args, 1);
                s_.setup.map.imem_size = hex32(args[0]);
            } else if (keyword == "dmem_base") {
                need(args, 1);
                s_.setup.map.dmem_base = hex32(args[0]);
            } else if (keyword == "dmem_size") {
                need(args, 1);
                s_.setup.map.dmem_size = hex32(args[0]);
            } else if (keyword == "preload") {
                need(args, 2);
                s_.setup.preload.emplace_back(hex32(args[0]), hex32(args[1]));
            } else if (keyword == "reg") {
                need(args, 2);
                unsigned index = 0;
                if (!parse_int(args[0], index, 10) || index > 31) fail("bad register index");
                s_.setup.registers.emplace_back(index, hex32(args[1]));
            } else if (keyword == "at") {
                if (args.size() < 2) fail("'at' needs a time and at least one assignment");
                Stimulus st{time(args[0]), {}};
                if (!s_.stimuli.empty() && st.time <= s_.stimuli.back().time) {
                    fail("stimulus times must be strictly increasing");
                }
                for (std::size_t i = 1; i < args.size(); ++i) {
                    const auto eq = args[i].find('=');
                    if (eq == std::string_view::npos || eq == 0) fail("expected signal=value");
                    st.assignments.push_back({std::string(args[i].substr(0, eq)), hex64(args[i].substr(eq + 1))});
                }
                s_.stimuli.push_back(std::move(st));
            } else if (keyword == "expect") {
                if (args.size() < 3) fail("'expect' needs time, signal and value");
                Expectation e{time(args[0]), std::string(args[1]), hex64(args[2]), {}};
                for (std::size_t i = 3; i < args.size(); ++i) {
                    if (!e.label.empty()) e.label.push_back(' ');
                    e.label.append(args[i]);
                }
                s_.expectations.push_back(std::move(e));
            } else {
                fail("unknown keyword '" + std::string(keyword) + "'");
            }
        }
        if (!have_name) fail("missing 'scenario <name>'");
        if (!have_component) fail("missing 'component <kind>'");
        return std::move(s_);
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ScenarioFormatError("scenario line " + std::to_string(line_) + ": " + what);
    }

    void need(const std::vector<std::string_view>& args, std::size_t n) const {
        if (args.size() != n) fail("expected " + std::to_string(n) + " argument(s)");
    }

    std::uint32_t hex32(std::string_view s) const {
        std::uint32_t v = 0;
        if (s.size() > 8 || !parse_int(s, v, 16)) fail("bad 32-bit hex value '" + std::string(s) + "'");
        return v;
    }

    std::uint64_t hex64(std::string_view s) const {
        std::uint64_t v = 0;
        if (s.size() > 16 || !parse_int(s, v, 16)) fail("bad hex value '" + std::string(s) + "'");
        return v;
    }

    std::uint64_t time(std::string_view s) const {
        std::uint64_t v = 0;
        if (!parse_int(s, v, 10)) fail("bad time '" + std::string(s) + "'");
        return v;
    }

    Scenario s_;
    std::size_t line_ = 0;
};

std::string hex_for_width(std::uint64_t value, unsigned width) {
    char buf[24];
    const int digits = static_cast<int>((width + 3) / 4);
    std::snprintf(buf, sizeof buf, "%0*llx", digits, static_cast<unsigned long long>(value));
    return buf;
}

}  // namespace

bool ScenarioResult::passed() const noexcept { return failures() == 0; }

std::size_t ScenarioResult::failures() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const ExpectationResult& c) { return !c.passed; }));
}

Scenario parse_scenario(std::string_view text) { return Parser{}.parse(text); }

ScenarioResult run_scenario(const Scenario& scenario) {
    auto bench = make_testbench(scenario.component, scenario.setup);
    const auto& decls = bench->signals();

    auto resolve = [&](const std::string& name) {
        const auto idx = bench->find(name);
        if (!idx) {
            throw UnknownSignal("scenario '" + scenario.name + "': component " +
                                std::string(to_string(scenario.component)) + " has no signal '" + name + "'");
        }
        return *idx;
    };

    struct ResolvedStimulus {
        std::uint64_t time;
        std::vector<std::pair<std::size_t, std::uint64_t>> drives;
    };
    std::vector<ResolvedStimulus> schedule;
    std::uint64_t end = 0;
    for (const auto& st : scenario.stimuli) {
        if (!schedule.empty() && st.time <= schedule.back().time) {
            throw ScenarioFormatError("scenario '" + scenario.name + "': stimulus times must be strictly increasing");
        }
        ResolvedStimulus rs{st.time, {}};
        for (const auto& a : st.assignments) {
            const auto idx = resolve(a.signal);
            if (!bench->is_input(idx)) {
                throw UnknownSignal("scenario '" + scenario.name + "': '" + a.signal + "' is not an input");
            }
            rs.drives.emplace_back(idx, a.value);
        }
        schedule.push_back(std::move(rs));
        end = std::max(end, st.time);
    }
    for (const auto& e : scenario.expectations) {
        resolve(e.signal);
        end = std::max(end, e.time);
    }

    std::set<std::uint64_t> times{0};
    for (const auto& st : schedule) times.insert(st.time);
    for (std::uint64_t t = kClockPeriodNs / 2; t <= end; t += kClockPeriodNs / 2) times.insert(t);

    std::vector<SignalDecl> trace_decls{{"clk", 1}};
    trace_decls.insert(trace_decls.end(), decls.begin(), decls.end());
    TraceRecorder rec(std::move(trace_decls));

    auto next_stimulus = schedule.begin();
    for (const auto t : times) {
        if (next_stimulus != schedule.end() && next_stimulus->time == t) {
            for (const auto& [idx, value] : next_stimulus->drives) bench->drive(idx, value);
            ++next_stimulus;
        }
        std::uint64_t clk = 0;
        if (t > 0 && t % kClockPeriodNs == 0) {
            clk = 1;
            bench->clock_edge();
        } else if (t % kClockPeriodNs != 0 && t % (kClockPeriodNs / 2) == 0) {
            clk = 0;
        } else if (t > 0) {
            // Off-grid stimulus: clock level is unchanged.
            clk = (t % kClockPeriodNs) < kClockPeriodNs / 2 ? 1 : 0;
        }
        bench->settle();
        rec.sample(t, 0, clk);
        for (std::size_t i = 0; i < decls.size(); ++i) rec.sample(t, i + 1, bench->value(i));
    }

    ScenarioResult result;
    result.name = scenario.name;
    result.component = scenario.component;
    result.trace = std::move(rec).take();

    const auto& events = result.trace.events;
    for (const auto& e : scenario.expectations) {
        // Last recorded value at or before the expectation time.
        std::uint64_t observed = 0;
        for (const auto& ev : events) {
            if (ev.time > e.time) break;
            if (ev.signal == e.signal) observed = ev.value;
        }
        result.checks.push_back({e, observed, observed == e.value});
    }
    return result;
}

std::vector<ScenarioResult> run_scenarios(std::span<const Scenario> scenarios) {
    std::vector<std::future<ScenarioResult>> futures;
    futures.reserve(scenarios.size());
    for (const auto& s : scenarios) {
        futures.push_back(std::async(std::launch::async, [&s] { return run_scenario(s); }));
    }
    std::vector<ScenarioResult> results;
    results.reserve(futures.size());
    for (auto& f : futures) results.push_back(f.get());
    return results;
}

const std::vector<Scenario>& builtin_scenarios() {
    static const std::vector<Scenario> scenarios = [] {
        std::vector<Scenario> out;
        for (const auto& src : builtin_scenario_sources()) {
            try {
                out.push_back(parse_scenario(src.text));
            } catch (const ScenarioFormatError& e) {
                throw ScenarioFormatError(std::string(src.file) + ": " + e.what());
            }
        }
        return out;
    }();
    return scenarios;
}

const Scenario& find_scenario(std::string_view name) {
    for (const auto& s : builtin_scenarios()) {
        if (s.name == name) return s;
    }
    throw UnknownScenario("no builtin scenario named '" + std::string(name) + "'");
}

std::vector<Scenario> select_scenarios(std::span<const Scenario> pool, std::string_view selector) {
    if (selector == "all") return {pool.begin(), pool.end()};
    std::vector<Scenario> out;
    if (const auto kind = component_from_name(selector)) {
        std::copy_if(pool.begin(), pool.end(), std::back_inserter(out),
                     [&](const Scenario& s) { return s.component == *kind; });
        if (!out.empty()) return out;
    }
    for (const auto& s : pool) {
        if (s.name == selector) return {s};
    }
    throw UnknownScenario("no scenario or component named '" + std::string(selector) + "'");
}

std::vector<Scenario> select_scenarios(std::string_view selector) {
    return select_scenarios(builtin_scenarios(), selector);
}

std::string format_result(const ScenarioResult& result) {
    std::string out = result.passed() ? "PASS " : "FAIL ";
    out += result.name + " [" + std::string(to_string(result.component)) + "] (" +
           std::to_string(result.checks.size() - result.failures()) + "/" +
           std::to_string(result.checks.size()) + ")\n";
    for (const auto& c : result.checks) {
        if (c.passed) continue;
        unsigned width = 32;
        for (const auto& d : result.trace.signals) {
            if (d.name == c.expected.signal) width = d.width;
        }
        out += "  expected " + c.expected.signal + " @" + std::to_string(c.expected.time) +
               "ns = " + hex_for_width(c.expected.value, width) + ", observed " +
               hex_for_width(c.observed, width);
        if (!c.expected.label.empty()) out += "  (" + c.expected.label + ")";
        out += "\n";
    }
    return out;
}

}  // namespace rv32
