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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rv32/control_unit.hpp"

namespace rv32 {

/// Instruction and data memory windows. Sizes are in bytes.
struct MemoryMap {
    std::uint32_t imem_base = 0x40000000;
    std::uint32_t imem_size = 64 * 1024;
    std::uint32_t dmem_base = 0x80000000;
    std::uint32_t dmem_size = 64 * 1024;

    /// Throws InvalidMemoryMap on misaligned bases or sizes, empty or
    /// wrapping windows, or overlap.
    void validate() const;

    bool in_imem(std::uint32_t addr, std::uint32_t bytes = 1) const noexcept;
    bool in_dmem(std::uint32_t addr, std::uint32_t bytes = 1) const noexcept;

    bool operator==(const MemoryMap&) const noexcept = default;
};

/// Harvard memory: a read-only instruction window and a writable data
/// window, both little-endian and zero-initialised. Every address outside
/// the data window behaves as read-only zero for data accesses.
class Memory {
public:
    explicit Memory(MemoryMap map = {});

    const MemoryMap& map() const noexcept { return map_; }

    /// Throws MisalignedFetch unless addr is word-aligned. Addresses
    /// outside the instruction window read as 0.
    std::uint32_t fetch(std::uint32_t addr) const;

    /// Throws MisalignedAccess unless addr is aligned to `width`.
    std::uint32_t read(std::uint32_t addr, MemWidth width, bool unsigned_ext) const;

    /// Stores the low `width` bytes of value. Out-of-window writes are
    /// dropped. Throws MisalignedAccess.
    void write(std::uint32_t addr, MemWidth width, std::uint32_t value);

    /// Stores consecutive words at base, base+4, ... in whichever window
    /// contains base. Throws ImageOverflow when the words do not fit.
    void load_image(std::uint32_t base, std::span<const std::uint32_t> words);

    void clear() noexcept;

    bool operator==(const Memory&) const noexcept = default;

private:
    MemoryMap map_;
    std::vector<std::uint8_t> imem_;
    std::vector<std::uint8_t> dmem_;
};

std::uint32_t width_bytes(MemWidth w) noexcept;

/// A contiguous run of words starting at `base`.
struct ImageSegment {
    std::uint32_t base = 0;
    std::vector<std::uint32_t> words;

    bool operator==(const ImageSegment&) const noexcept = default;
};

/// Text image: one 8-hex-digit word per line, `@<hexaddr>` moves the load
/// cursor, `#` starts a comment. Throws ImageFormatError naming the line.
std::vector<ImageSegment> parse_hex_image(std::string_view text, std::uint32_t default_base);
std::string format_hex_image(std::span<const ImageSegment> segments);

/// Flat little-endian words. Throws ImageFormatError if the size is not a
/// multiple of 4.
std::vector<ImageSegment> parse_raw_image(std::span<const std::uint8_t> bytes, std::uint32_t base);

void load_segments(Memory& mem, std::span<const ImageSegment> segments);

}  // namespace rv32
