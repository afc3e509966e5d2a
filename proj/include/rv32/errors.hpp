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

#include <stdexcept>
#include <string>

namespace rv32 {

/// Root of every error raised by the simulator libraries.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define RV32_DEFINE_ERROR(Name)                  \
    class Name : public Error {                  \
    public:                                      \
        using Error::Error;                      \
    }

// isa
RV32_DEFINE_ERROR(IllegalInstruction);
RV32_DEFINE_ERROR(ImmediateOutOfRange);

// program_counter / register_file
RV32_DEFINE_ERROR(MisalignedTarget);
RV32_DEFINE_ERROR(IndexOutOfRange);

// memory
RV32_DEFINE_ERROR(MisalignedFetch);
RV32_DEFINE_ERROR(MisalignedAccess);
RV32_DEFINE_ERROR(ImageOverflow);
RV32_DEFINE_ERROR(InvalidMemoryMap);
RV32_DEFINE_ERROR(ImageFormatError);

// core
RV32_DEFINE_ERROR(HaltedMachine);

// harness
RV32_DEFINE_ERROR(UnknownScenario);
RV32_DEFINE_ERROR(UnknownSignal);
RV32_DEFINE_ERROR(UndeclaredSignal);
RV32_DEFINE_ERROR(WidthMismatch);
RV32_DEFINE_ERROR(ScenarioFormatError);

// metrics
RV32_DEFINE_ERROR(InconsistentLog);
RV32_DEFINE_ERROR(LogFormatError);

#undef RV32_DEFINE_ERROR

/// Mixin for assembler diagnostics; line() is 1-based.
class SourceLocated {
public:
    explicit SourceLocated(std::size_t line) noexcept : line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

#define RV32_DEFINE_LOCATED_ERROR(Name, Base)                                       \
    class Name : public Base, public SourceLocated {                                \
    public:                                                                         \
        Name(std::size_t line, const std::string& message)                          \
            : Base("line " + std::to_string(line) + ": " + message), SourceLocated(line) {} \
    }

RV32_DEFINE_LOCATED_ERROR(SyntaxError, Error);
RV32_DEFINE_LOCATED_ERROR(UndefinedLabel, Error);
RV32_DEFINE_LOCATED_ERROR(DuplicateLabel, Error);
// Branch/jump target too far, or an operand the encoder rejected.
RV32_DEFINE_LOCATED_ERROR(OperandOutOfRange, ImmediateOutOfRange);

#undef RV32_DEFINE_LOCATED_ERROR

}  // namespace rv32
