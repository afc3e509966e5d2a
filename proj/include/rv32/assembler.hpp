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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rv32/isa.hpp"
#include "rv32/memory.hpp"
#include "rv32/program_counter.hpp"

namespace rv32 {

using SymbolTable = std::map<std::string, std::uint32_t, std::less<>>;

struct AssembledProgram {
    std::uint32_t origin = 0;
    /// Contiguous from `origin`; gaps opened by `.org` are zero-filled.
    std::vector<InstructionWord> words;
    SymbolTable symbols;
    /// 1-based source line of each word (0 for `.org` padding).
    std::vector<std::size_t> source_lines;

    ImageSegment segment() const;
};

/// Two-pass assembler for the RV32I base set.
///
/// Syntax per line: `[label:] [statement] [# comment]`. Statements are a
/// mnemonic with comma-separated operands, `.word <value|label>` or
/// `.org <hexaddr>`. Registers may be written x0..x31 or by ABI name. Loads,
/// stores and jalr take `imm(reg)`. Branch and jal targets may be labels
/// (resolved PC-relative) or literal byte offsets. `lui`/`auipc` accept a
/// label, which yields the upper part of its absolute (lui) or PC-relative
/// (auipc) address; `%hi(x)` and `%lo(x)` split an absolute label or number
/// for `lui`+`addi` pairs. Pseudo-instructions: `nop`, and `li rd, imm` for
/// 12-bit immediates.
///
/// Throws SyntaxError, UndefinedLabel, DuplicateLabel or OperandOutOfRange,
/// each carrying the offending line.
AssembledProgram assemble(std::string_view source, std::uint32_t origin = kDefaultResetVector);

}  // namespace rv32
