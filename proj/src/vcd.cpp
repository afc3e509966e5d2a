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

#include "rv32/vcd.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "rv32/errors.hpp"

namespace rv32 {

TraceRecorder::TraceRecorder(std::vector<SignalDecl> signals)
    : seen_(signals.size(), false),
      had_prior_(signals.size(), false),
      last_(signals.size(), 0),
      prior_(signals.size(), 0),
      last_event_(signals.size(), 0),
      prior_event_(signals.size(), 0) {
    trace_.signals = std::move(signals);
}

void TraceRecorder::sample(std::uint64_t time, std::size_t index, std::uint64_t value) {
    if (time < now_) throw std::invalid_argument("trace samples must be time-ordered");
    now_ = time;
    const auto& decl = trace_.signals.at(index);
    if (seen_[index] && trace_.events[last_event_[index]].time == time) {
        const auto at = last_event_[index];
        if (had_prior_[index] && prior_[index] == value) {
            // Reverted within the timestamp: the change never happened.
            trace_.events.erase(trace_.events.begin() + static_cast<std::ptrdiff_t>(at));
            for (auto* v : {&last_event_, &prior_event_}) {
                for (auto& e : *v) {
                    if (e > at) --e;
                }
            }
            last_event_[index] = prior_event_[index];
            last_[index] = value;
            had_prior_[index] = false;
            return;
        }
        trace_.events[at].value = value;
        last_[index] = value;
        return;
    }
    if (seen_[index] && last_[index] == value) return;
    had_prior_[index] = seen_[index];
    prior_[index] = last_[index];
    prior_event_[index] = last_event_[index];
    seen_[index] = true;
    last_[index] = value;
    last_event_[index] = trace_.events.size();
    trace_.events.push_back({time, decl.name, value, decl.width});
}

std::string vcd_identifier(std::size_t index) {
    // Printable ASCII '!'..'~', little-endian base 94.
    std::string id;
    do {
        id.push_back(static_cast<char>('!' + index % 94));
        index /= 94;
    } while (index-- > 0);
    return id;
}

std::string vcd_binary(std::uint64_t value) {
    if (value == 0) return "0";
    std::string bits;
    while (value) {
        bits.insert(bits.begin(), static_cast<char>('0' + (value & 1)));
        value >>= 1;
    }
    return bits;
}

void write_vcd(std::ostream& os, std::span<const TraceEvent> events,
               std::span<const SignalDecl> signals, std::string_view scope) {
    std::map<std::string, std::size_t, std::less<>> index;
    for (std::size_t i = 0; i < signals.size(); ++i) {
        const auto w = signals[i].width;
        if (w == 0 || w > 64) {
            throw WidthMismatch("signal '" + signals[i].name + "' has unsupported width " +
                                std::to_string(w));
        }
        index.emplace(signals[i].name, i);
    }

    std::vector<std::size_t> resolved;
    resolved.reserve(events.size());
    for (const auto& ev : events) {
        const auto it = index.find(ev.signal);
        if (it == index.end()) throw UndeclaredSignal("signal '" + ev.signal + "' is not declared");
        const auto& decl = signals[it->second];
        if (ev.width != decl.width || (decl.width < 64 && (ev.value >> decl.width) != 0)) {
            throw WidthMismatch("value for '" + ev.signal + "' does not match declared width " +
                                std::to_string(decl.width));
        }
        resolved.push_back(it->second);
    }

    auto emit = [&](std::size_t sig, std::uint64_t value) {
        if (signals[sig].width == 1) {
            os << (value ? '1' : '0') << vcd_identifier(sig) << '\n';
        } else {
            os << 'b' << vcd_binary(value) << ' ' << vcd_identifier(sig) << '\n';
        }
    };

    os << "$version rv32sim $end\n";
    os << "$timescale 1ns $end\n";
    os << "$scope module " << scope << " $end\n";
    for (std::size_t i = 0; i < signals.size(); ++i) {
        os << "$var wire " << signals[i].width << ' ' << vcd_identifier(i) << ' ' << signals[i].name
           << " $end\n";
    }
    os << "$upscope $end\n";
    os << "$enddefinitions $end\n";

    std::size_t k = 0;
    std::vector<bool> initial(signals.size(), false);
    if (!events.empty()) os << "#0\n";
    os << "$dumpvars\n";
    for (; k < events.size() && events[k].time == 0; ++k) {
        emit(resolved[k], events[k].value);
        initial[resolved[k]] = true;
    }
    for (std::size_t i = 0; i < signals.size(); ++i) {
        if (initial[i]) continue;
        if (signals[i].width == 1) {
            os << 'x' << vcd_identifier(i) << '\n';
        } else {
            os << "bx " << vcd_identifier(i) << '\n';
        }
    }
    os << "$end\n";

    std::uint64_t current = 0;
    for (; k < events.size(); ++k) {
        if (events[k].time < current) throw std::invalid_argument("trace events are not time-ordered");
        if (events[k].time != current) {
            current = events[k].time;
            os << '#' << current << '\n';
        }
        emit(resolved[k], events[k].value);
    }
}

std::string to_vcd(const Trace& trace, std::string_view scope) {
    std::ostringstream os;
    write_vcd(os, trace.events, trace.signals, scope);
    return os.str();
}

}  // namespace rv32
