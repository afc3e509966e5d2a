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

#include "rv32/memory.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>

#include "rv32/errors.hpp"

namespace rv32 {

namespace {

std::string hex32(std::uint32_t v) {
    char buf[11];
    std::snprintf(buf, sizeof buf, "0x%08x", v);
    return buf;
}

bool window_contains(std::uint32_t base, std::uint32_t size, std::uint32_t addr,
                     std::uint32_t bytes) noexcept {
    const std::uint64_t lo = base;
    const std::uint64_t hi = lo + size;
    const std::uint64_t a = addr;
    return a >= lo && a + bytes <= hi;
}

void check_alignment(std::uint32_t addr, MemWidth width) {
    if (addr % width_bytes(width) != 0) {
        throw MisalignedAccess(std::string(to_string(width)) + " access at " + hex32(addr) +
                               " is misaligned");
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool parse_hex_u32(std::string_view s, std::uint32_t& out) {
    if (s.empty() || s.size() > 8) return false;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out, 16);
    return ec == std::errc{} && ptr == end;
}

}  // namespace

std::uint32_t width_bytes(MemWidth w) noexcept {
    switch (w) {
        case MemWidth::byte: return 1;
        case MemWidth::half: return 2;
        case MemWidth::word: return 4;
    }
    return 4;
}

void MemoryMap::validate() const {
    auto check_window = [](const char* name, std::uint32_t base, std::uint32_t size) {
        if (base % 4 != 0) throw InvalidMemoryMap(std::string(name) + " base is not word-aligned");
        if (size == 0 || size % 4 != 0) {
            throw InvalidMemoryMap(std::string(name) + " size must be a nonzero multiple of 4");
        }
        if (std::uint64_t{base} + size > (std::uint64_t{1} << 32)) {
            throw InvalidMemoryMap(std::string(name) + " window wraps past 2^32");
        }
    };
    check_window("imem", imem_base, imem_size);
    check_window("dmem", dmem_base, dmem_size);
    const std::uint64_t i0 = imem_base, i1 = i0 + imem_size;
    const std::uint64_t d0 = dmem_base, d1 = d0 + dmem_size;
    if (i0 < d1 && d0 < i1) throw InvalidMemoryMap("imem and dmem windows overlap");
}

bool MemoryMap::in_imem(std::uint32_t addr, std::uint32_t bytes) const noexcept {
    return window_contains(imem_base, imem_size, addr, bytes);
}

bool MemoryMap::in_dmem(std::uint32_t addr, std::uint32_t bytes) const noexcept {
    return window_contains(dmem_base, dmem_size, addr, bytes);
}

Memory::Memory(MemoryMap map) : map_(map) {
    map_.validate();
    imem_.assign(map_.imem_size, 0);
    dmem_.assign(map_.dmem_size, 0);
}

std::uint32_t Memory::fetch(std::uint32_t addr) const {
    if (addr & 0x3) throw MisalignedFetch("instruction fetch at " + hex32(addr) + " is misaligned");
    if (!map_.in_imem(addr, 4)) return 0;
    const auto* p = imem_.data() + (addr - map_.imem_base);
    return std::uint32_t{p[0]} | std::uint32_t{p[1]} << 8 | std::uint32_t{p[2]} << 16 |
           std::uint32_t{p[3]} << 24;
}

std::uint32_t Memory::read(std::uint32_t addr, MemWidth width, bool unsigned_ext) const {
    check_alignment(addr, width);
    const auto n = width_bytes(width);
    if (!map_.in_dmem(addr, n)) return 0;
    const auto* p = dmem_.data() + (addr - map_.dmem_base);
    std::uint32_t v = 0;
    for (std::uint32_t i = 0; i < n; ++i) v |= std::uint32_t{p[i]} << (8 * i);
    if (!unsigned_ext && n < 4) {
        const std::uint32_t sign = 1u << (8 * n - 1);
        v = (v ^ sign) - sign;
    }
    return v;
}

void Memory::write(std::uint32_t addr, MemWidth width, std::uint32_t value) {
    check_alignment(addr, width);
    const auto n = width_bytes(width);
    if (!map_.in_dmem(addr, n)) return;
    auto* p = dmem_.data() + (addr - map_.dmem_base);
    for (std::uint32_t i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(value >> (8 * i));
}

void Memory::load_image(std::uint32_t base, std::span<const std::uint32_t> words) {
    if (words.empty()) return;
    if (base & 0x3) throw ImageOverflow("image base " + hex32(base) + " is not word-aligned");
    std::vector<std::uint8_t>* target = nullptr;
    std::uint32_t offset = 0;
    const std::uint64_t bytes = std::uint64_t{words.size()} * 4;
    if (map_.in_imem(base)) {
        target = &imem_;
        offset = base - map_.imem_base;
    } else if (map_.in_dmem(base)) {
        target = &dmem_;
        offset = base - map_.dmem_base;
    } else {
        throw ImageOverflow("image base " + hex32(base) + " lies outside both memory windows");
    }
    if (offset + bytes > target->size()) {
        throw ImageOverflow(std::to_string(words.size()) + " words at " + hex32(base) +
                            " overflow the memory window");
    }
    auto* p = target->data() + offset;
    for (const auto w : words) {
        for (int i = 0; i < 4; ++i) *p++ = static_cast<std::uint8_t>(w >> (8 * i));
    }
}

void Memory::clear() noexcept {
    std::fill(imem_.begin(), imem_.end(), 0);
    std::fill(dmem_.begin(), dmem_.end(), 0);
}

std::vector<ImageSegment> parse_hex_image(std::string_view text, std::uint32_t default_base) {
    std::vector<ImageSegment> segments;
    std::uint32_t cursor = default_base;
    bool open = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        auto fail = [&](const std::string& what) {
            throw ImageFormatError("hex image line " + std::to_string(line_no) + ": " + what);
        };
        if (line.front() == '@') {
            std::uint32_t addr = 0;
            if (!parse_hex_u32(trim(line.substr(1)), addr)) fail("bad load address");
            if (addr & 0x3) fail("load address is not word-aligned");
            cursor = addr;
            open = false;
            continue;
        }
        std::uint32_t word = 0;
        if (line.size() != 8 || !parse_hex_u32(line, word)) fail("expected 8 hex digits");
        if (!open) {
            segments.push_back({cursor, {}});
            open = true;
        }
        segments.back().words.push_back(word);
        cursor += 4;
    }
    std::erase_if(segments, [](const ImageSegment& s) { return s.words.empty(); });
    return segments;
}

std::string format_hex_image(std::span<const ImageSegment> segments) {
    std::string out;
    char buf[16];
    for (const auto& seg : segments) {
        std::snprintf(buf, sizeof buf, "@%08x\n", seg.base);
        out += buf;
        for (const auto w : seg.words) {
            std::snprintf(buf, sizeof buf, "%08x\n", w);
            out += buf;
        }
    }
    return out;
}

std::vector<ImageSegment> parse_raw_image(std::span<const std::uint8_t> bytes, std::uint32_t base) {
    if (bytes.size() % 4 != 0) {
        throw ImageFormatError("raw image size " + std::to_string(bytes.size()) +
                               " is not a multiple of 4");
    }
    ImageSegment seg{base, {}};
    seg.words.reserve(bytes.size() / 4);
    for (std::size_t i = 0; i < bytes.size(); i += 4) {
        seg.words.push_back(std::uint32_t{bytes[i]} | std::uint32_t{bytes[i + 1]} << 8 |
                            std::uint32_t{bytes[i + 2]} << 16 | std::uint32_t{bytes[i + 3]} << 24);
    }
    std::vector<ImageSegment> out;
    if (!seg.words.empty()) out.push_back(std::move(seg));
    return out;
}

void load_segments(Memory& mem, std::span<const ImageSegment> segments) {
    for (const auto& seg : segments) mem.load_image(seg.base, seg.words);
}

}  // namespace rv32
