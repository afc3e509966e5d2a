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

namespace rv32 {

inline constexpr std::uint32_t kDefaultResetVector = 0x40000000;

/// 32-bit program counter with a synchronous reset to a configurable vector.
class ProgramCounter {
public:
    explicit ProgramCounter(std::uint32_t reset_value = kDefaultResetVector) noexcept
        : value_(reset_value), reset_value_(reset_value) {}

    std::uint32_t value() const noexcept { return value_; }
    std::uint32_t reset_value() const noexcept { return reset_value_; }

    void reset() noexcept { value_ = reset_value_; }

    /// Loads `next`; throws MisalignedTarget if bits 1..0 are not zero.
    void advance(std::uint32_t next);

    /// Sequential successor, wrapping at 2^32.
    std::uint32_t sequential() const noexcept { return value_ + 4; }

    bool operator==(const ProgramCounter&) const noexcept = default;

private:
    std::uint32_t value_;
    std::uint32_t reset_value_;
};

}  // namespace rv32
