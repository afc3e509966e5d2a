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

#include <array>
#include <cstdint>

namespace rv32 {

inline constexpr unsigned kRegisterCount = 32;

/// 32 x 32-bit integer registers. x0 reads as zero and discards writes.
class RegisterFile {
public:
    RegisterFile() noexcept = default;

    /// Throws IndexOutOfRange for index > 31.
    std::uint32_t read(unsigned index) const;

    /// Commits `data` when `write_enable` is set and `index` is not 0.
    void write(unsigned index, std::uint32_t data, bool write_enable);

    void reset() noexcept { regs_.fill(0); }

    const std::array<std::uint32_t, kRegisterCount>& values() const noexcept { return regs_; }

    bool operator==(const RegisterFile&) const noexcept = default;

private:
    std::array<std::uint32_t, kRegisterCount> regs_{};
};

/// ABI name of register `index` ("zero", "ra", ..., "t6").
const char* abi_register_name(unsigned index);

}  // namespace rv32
