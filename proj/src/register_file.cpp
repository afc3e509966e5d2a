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

#include "rv32/register_file.hpp"

#include <string>

#include "rv32/errors.hpp"

namespace rv32 {

namespace {

void check_index(unsigned index) {
    if (index >= kRegisterCount) {
        throw IndexOutOfRange("register index " + std::to_string(index) + " out of range 0..31");
    }
}

}  // namespace

std::uint32_t RegisterFile::read(unsigned index) const {
    check_index(index);
    return regs_[index];
}

void RegisterFile::write(unsigned index, std::uint32_t data, bool write_enable) {
    check_index(index);
    if (!write_enable || index == 0) return;
    regs_[index] = data;
}

const char* abi_register_name(unsigned index) {
    static constexpr std::array<const char*, kRegisterCount> names{
        "zero", "ra", "sp", "gp", "tp",  "t0",  "t1", "t2", "s0", "s1", "a0",
        "a1",   "a2", "a3", "a4", "a5",  "a6",  "a7", "s2", "s3", "s4", "s5",
        "s6",   "s7", "s8", "s9", "s10", "s11", "t3", "t4", "t5", "t6",
    };
    check_index(index);
    return names[index];
}

}  // namespace rv32
