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

#include "rv32/program_counter.hpp"

#include <cstdio>
#include <string>

#include "rv32/errors.hpp"

namespace rv32 {

void ProgramCounter::advance(std::uint32_t next) {
    if (next & 0x3) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "pc target 0x%08x is not word-aligned", next);
        throw MisalignedTarget(buf);
    }
    value_ = next;
}

}  // namespace rv32
