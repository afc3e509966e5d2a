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

/// ALU operation selector: funct3 plus instruction bit 30, which picks
/// SUB over ADD and SRA over SRL. `alt` is ignored for other funct3 values.
struct AluControl {
    std::uint8_t funct3 = 0;
    bool alt = false;

    bool operator==(const AluControl&) const noexcept = default;
};

namespace alu_op {
inline constexpr std::uint8_t kAdd = 0b000;
inline constexpr std::uint8_t kSll = 0b001;
inline constexpr std::uint8_t kSlt = 0b010;
inline constexpr std::uint8_t kSltu = 0b011;
inline constexpr std::uint8_t kXor = 0b100;
inline constexpr std::uint8_t kSrl = 0b101;
inline constexpr std::uint8_t kOr = 0b110;
inline constexpr std::uint8_t kAnd = 0b111;
}  // namespace alu_op

struct AluOutput {
    std::uint32_t result = 0;
    bool zero = true;

    bool operator==(const AluOutput&) const noexcept = default;
};

AluOutput alu_execute(std::uint32_t a, std::uint32_t b, AluControl ctl) noexcept;

}  // namespace rv32
