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

#include "rv32/alu.hpp"

namespace rv32 {

AluOutput alu_execute(std::uint32_t a, std::uint32_t b, AluControl ctl) noexcept {
    const unsigned shamt = b & 0x1f;
    std::uint32_t result = 0;
    switch (ctl.funct3 & 0x7) {
        case alu_op::kAdd: result = ctl.alt ? a - b : a + b; break;
        case alu_op::kSll: result = a << shamt; break;
        case alu_op::kSlt:
            result = static_cast<std::int32_t>(a) < static_cast<std::int32_t>(b) ? 1 : 0;
            break;
        case alu_op::kSltu: result = a < b ? 1 : 0; break;
        case alu_op::kXor: result = a ^ b; break;
        case alu_op::kSrl:
            // >> on a negative int32 is arithmetic since C++20.
            result = ctl.alt ? static_cast<std::uint32_t>(static_cast<std::int32_t>(a) >> shamt)
                             : a >> shamt;
            break;
        case alu_op::kOr: result = a | b; break;
        case alu_op::kAnd: result = a & b; break;
    }
    return {result, result == 0};
}

}  // namespace rv32
