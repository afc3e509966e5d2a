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

#include <gtest/gtest.h>

#include <random>

#include "rv32/errors.hpp"
#include "rv32/memory.hpp"

namespace {

using namespace rv32;

constexpr std::uint32_t kImem = 0x40000000;
constexpr std::uint32_t kDmem = 0x80000000;

TEST(Memory, FetchPreloadedAndUninitialised) {
    Memory m;
    const std::uint32_t w[] = {0x00048403};
    m.load_image(kImem + 0x14, w);
    EXPECT_EQ(m.fetch(kImem + 0x14), 0x00048403u);
    EXPECT_EQ(m.fetch(kImem + 0x18), 0u);
    EXPECT_EQ(m.fetch(kImem), 0u);
    EXPECT_EQ(m.fetch(0x00001000), 0u);
    EXPECT_THROW(m.fetch(kImem + 0x15), MisalignedFetch);
}

TEST(Memory, ReadOnlyRegionOutsideDataWindow) {
    Memory m;
    m.write(0x00100000, MemWidth::word, 0xbbbbbbbb);
    EXPECT_EQ(m.read(0x00100000, MemWidth::word, false), 0u);
    EXPECT_EQ(m, Memory{});
    // Instruction memory is not writable through the data port.
    m.write(kImem, MemWidth::word, 0x12345678);
    EXPECT_EQ(m.fetch(kImem), 0u);
}

TEST(Memory, WidthsAndExtension) {
    Memory m;
    m.write(kDmem, MemWidth::word, 0x00000004);
    EXPECT_EQ(m.read(kDmem, MemWidth::half, true), 0x00000004u);
    m.write(kDmem + 4, MemWidth::word, 0xffff8000);
    EXPECT_EQ(m.read(kDmem + 4, MemWidth::half, false), 0xffff8000u);
    EXPECT_EQ(m.read(kDmem + 4, MemWidth::half, true), 0x00008000u);
    m.write(kDmem + 8, MemWidth::byte, 0x123456ab);
    EXPECT_EQ(m.read(kDmem + 8, MemWidth::word, false), 0x000000abu);
    EXPECT_EQ(m.read(kDmem + 8, MemWidth::byte, false), 0xffffffabu);
    EXPECT_THROW(m.read(kDmem + 1, MemWidth::half, false), MisalignedAccess);
    EXPECT_THROW(m.write(kDmem + 2, MemWidth::word, 0), MisalignedAccess);
    EXPECT_NO_THROW(m.read(kDmem + 3, MemWidth::byte, false));
}

TEST(Memory, ReadYourWrite) {
    std::mt19937 rng(0x3e0001);
    Memory m;
    for (int i = 0; i < 10000; ++i) {
        const MemWidth w = static_cast<MemWidth>(rng() % 3);
        const std::uint32_t n = width_bytes(w);
        const std::uint32_t addr = kDmem + (rng() % (0x10000 / n)) * n;
        const std::uint32_t v = rng();
        m.write(addr, w, v);
        const std::uint32_t mask = n == 4 ? 0xffffffffu : (1u << (8 * n)) - 1;
        ASSERT_EQ(m.read(addr, w, true), v & mask);
    }
}

TEST(Memory, OutOfWindowWritesNeverChangeState) {
    std::mt19937 rng(0x3e0002);
    Memory m;
    for (int i = 0; i < 200; ++i) m.write(kDmem + 4 * (rng() % 100), MemWidth::word, rng());
    const Memory before = m;
    for (int i = 0; i < 10000; ++i) {
        std::uint32_t addr = rng() & ~3u;
        if (addr >= kDmem && addr < kDmem + 0x10000) continue;
        m.write(addr, MemWidth::word, rng());
    }
    EXPECT_EQ(m, before);
}

TEST(Memory, LittleEndianDecomposition) {
    std::mt19937 rng(0x3e0003);
    Memory m;
    for (int i = 0; i < 5000; ++i) {
        const std::uint32_t v = rng();
        const std::uint32_t addr = kDmem + 4 * (rng() % 0x4000);
        m.write(addr, MemWidth::word, v);
        for (unsigned b = 0; b < 4; ++b) ASSERT_EQ(m.read(addr + b, MemWidth::byte, true), (v >> (8 * b)) & 0xff);
        ASSERT_EQ(m.read(addr, MemWidth::half, true), v & 0xffff);
        ASSERT_EQ(m.read(addr + 2, MemWidth::half, true), v >> 16);
    }
}

TEST(Memory, WindowEdges) {
    Memory m;
    m.write(kDmem + 0xfffc, MemWidth::word, 0xcafef00d);
    EXPECT_EQ(m.read(kDmem + 0xfffc, MemWidth::word, false), 0xcafef00du);
    m.write(kDmem + 0x10000, MemWidth::word, 1);
    EXPECT_EQ(m.read(kDmem + 0x10000, MemWidth::word, false), 0u);
    m.write(kDmem - 4, MemWidth::word, 1);
    EXPECT_EQ(m.read(kDmem - 4, MemWidth::word, false), 0u);
}

TEST(Memory, LoadImage) {
    Memory m;
    const std::vector<std::uint32_t> words{1, 2, 3, 4, 5, 6};
    m.load_image(kImem, words);
    for (std::uint32_t k = 0; k < 6; ++k) EXPECT_EQ(m.fetch(kImem + 4 * k), words[k]);
    const Memory before = m;
    m.load_image(kImem, {});
    EXPECT_EQ(m, before);
    const std::vector<std::uint32_t> big(0x10000 / 4 + 1, 7);
    EXPECT_THROW(m.load_image(kImem, big), ImageOverflow);
    EXPECT_THROW(m.load_image(kImem + 0xfffc, std::vector<std::uint32_t>{1, 2}), ImageOverflow);
    EXPECT_THROW(m.load_image(0x00100000, words), ImageOverflow);
    m.load_image(kDmem, words);
    EXPECT_EQ(m.read(kDmem + 20, MemWidth::word, false), 6u);
    m.clear();
    EXPECT_EQ(m, Memory{});
}

TEST(MemoryMap, Validation) {
    EXPECT_NO_THROW(MemoryMap{}.validate());
    EXPECT_THROW((MemoryMap{0x40000002, 0x1000, 0x80000000, 0x1000}.validate()), InvalidMemoryMap);
    EXPECT_THROW((MemoryMap{0x40000000, 0x1000, 0x40000800, 0x1000}.validate()), InvalidMemoryMap);
    EXPECT_THROW((MemoryMap{0x40000000, 0, 0x80000000, 0x1000}.validate()), InvalidMemoryMap);
    EXPECT_THROW((MemoryMap{0xfffff000, 0x2000, 0x80000000, 0x1000}.validate()), InvalidMemoryMap);
    EXPECT_THROW(Memory(MemoryMap{0x40000000, 0x1000, 0x40000000, 0x1000}), InvalidMemoryMap);
    const MemoryMap alt{0x01000000, 0x1000, 0x80000000, 0x1000};
    EXPECT_TRUE(alt.in_imem(0x01000ffc, 4));
    EXPECT_FALSE(alt.in_imem(0x01000ffe, 4));
    EXPECT_TRUE(alt.in_dmem(0x80000000));
}

TEST(HexImage, ParseAndFormat) {
    const auto segs = parse_hex_image("# comment\n00a00093\n@40000010\n00000073 # trailing\n\n", kImem);
    ASSERT_EQ(segs.size(), 2u);
    EXPECT_EQ(segs[0], (ImageSegment{kImem, {0x00a00093}}));
    EXPECT_EQ(segs[1], (ImageSegment{kImem + 0x10, {0x00000073}}));
    EXPECT_EQ(format_hex_image(segs), "@40000000\n00a00093\n@40000010\n00000073\n");
    EXPECT_EQ(parse_hex_image(format_hex_image(segs), 0), segs);
}

TEST(HexImage, Errors) {
    try {
        parse_hex_image("00000013\nxyz\n", kImem);
        FAIL();
    } catch (const ImageFormatError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    EXPECT_THROW(parse_hex_image("123\n", kImem), ImageFormatError);
    EXPECT_THROW(parse_hex_image("@4000000g\n", kImem), ImageFormatError);
}

TEST(RawImage, LittleEndianWords) {
    const std::vector<std::uint8_t> bytes{0x13, 0x00, 0xa0, 0x00, 0x73, 0x00, 0x00, 0x00};
    const auto segs = parse_raw_image(bytes, kImem);
    ASSERT_EQ(segs.size(), 1u);
    EXPECT_EQ(segs[0].words, (std::vector<std::uint32_t>{0x00a00013, 0x00000073}));
    const std::vector<std::uint8_t> odd{1, 2, 3};
    EXPECT_THROW(parse_raw_image(odd, kImem), ImageFormatError);
}

}  // namespace
