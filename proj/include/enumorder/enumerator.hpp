#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "enumorder/listing.hpp"

namespace eo {

/// Four-register counter machine with immediate operands.
/// SUBI floors at zero; OUT emits a register's value.
enum class Opcode { LoadI, AddI, SubI, Jmp, Jz, Out, Halt };

struct Instruction {
    Opcode op;
    unsigned reg = 0;      // R0..R3 for LOADI/ADDI/SUBI/JZ/OUT
    std::uint64_t arg = 0; // constant for LOADI/ADDI/SUBI, address for JMP/JZ
};

class EnumProgram {
public:
    EnumProgram(std::string name, std::vector<Instruction> instructions);

    /// Text format: one instruction per line, ';' comments, case-insensitive
    /// mnemonics, registers R0..R3, absolute addresses.
    /// Throws InvalidProgram on bad registers or out-of-bounds jumps.
    static EnumProgram parse(std::string_view text, std::string name);
    static EnumProgram load(const std::filesystem::path& path);

    const std::string& name() const { return name_; }
    const std::vector<Instruction>& instructions() const { return instructions_; }

private:
    std::string name_;
    std::vector<Instruction> instructions_;
};

/// One budget-bounded execution: the listing it emitted plus accounting.
struct EnumRun {
    std::string program;
    std::uint64_t step_budget = 0;
    std::uint64_t output_cap = 0;
    Listing listing;
    std::uint64_t steps_used = 0;
    bool halted = false;
};

/// Deterministic execution from all-zero registers at instruction 0.
/// Each instruction costs one step. OUT appends iff the value is >= 1 and
/// new; zeros and repeats are skipped silently. Stops at HALT (or running
/// off the end), budget exhaustion, or the output cap.
EnumRun run_budgeted(const EnumProgram& p, std::uint64_t step_budget,
                     std::uint64_t output_cap);

/// Round-robin dovetailing: each live program runs `slice` steps per turn in
/// sequence order; emissions interleave with global dedup; halted programs
/// drop out. step_budget bounds the total steps across all programs.
EnumRun dovetail_union(std::span<const EnumProgram> programs, std::uint64_t slice,
                       std::uint64_t step_budget, std::uint64_t output_cap);

}  // namespace eo
