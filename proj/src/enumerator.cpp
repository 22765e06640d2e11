#include "enumorder/enumerator.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_set>

namespace eo {

namespace {

constexpr unsigned kRegisterCount = 4;

struct Mnemonic {
    std::string_view text;
    Opcode op;
    bool has_reg;
    bool has_arg;
    bool arg_is_address;
};

constexpr std::array<Mnemonic, 7> kMnemonics{{
    {"LOADI", Opcode::LoadI, true, true, false},
    {"ADDI", Opcode::AddI, true, true, false},
    {"SUBI", Opcode::SubI, true, true, false},
    {"JMP", Opcode::Jmp, false, true, true},
    {"JZ", Opcode::Jz, true, true, true},
    {"OUT", Opcode::Out, true, false, false},
    {"HALT", Opcode::Halt, false, false, false},
}};

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    return out;
}

std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> toks;
    std::istringstream ss{std::string(line)};
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

}  // namespace

EnumProgram::EnumProgram(std::string name, std::vector<Instruction> instructions)
    : name_(std::move(name)), instructions_(std::move(instructions)) {
    for (std::size_t addr = 0; addr < instructions_.size(); ++addr) {
        const Instruction& ins = instructions_[addr];
        if (ins.reg >= kRegisterCount)
            throw InvalidProgram(addr, "register index " + std::to_string(ins.reg) +
                                           " out of range");
        if ((ins.op == Opcode::Jmp || ins.op == Opcode::Jz) &&
            ins.arg >= instructions_.size())
            throw InvalidProgram(addr, "jump target " + std::to_string(ins.arg) +
                                           " out of bounds");
    }
}

EnumProgram EnumProgram::parse(std::string_view text, std::string name) {
    std::vector<Instruction> instrs;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        if (auto sc = line.find(';'); sc != std::string_view::npos)
            line = line.substr(0, sc);
        auto toks = split_tokens(line);
        if (toks.empty()) continue;

        const std::size_t addr = instrs.size();
        const std::string mn = upper(toks[0]);
        auto it = std::find_if(kMnemonics.begin(), kMnemonics.end(),
                               [&](const Mnemonic& m) { return m.text == mn; });
        if (it == kMnemonics.end())
            throw InvalidProgram(addr, "unknown mnemonic '" + toks[0] + "'");

        Instruction ins{it->op};
        std::size_t want = 1 + (it->has_reg ? 1 : 0) + (it->has_arg ? 1 : 0);
        if (toks.size() != want)
            throw InvalidProgram(addr, "wrong operand count for " + mn);
        std::size_t next = 1;
        if (it->has_reg) {
            std::string r = upper(toks[next++]);
            if (r.size() != 2 || r[0] != 'R' || r[1] < '0' || r[1] > '3')
                throw InvalidProgram(addr, "bad register '" + toks[next - 1] + "'");
            ins.reg = static_cast<unsigned>(r[1] - '0');
        }
        if (it->has_arg) {
            const std::string& a = toks[next];
            auto [p, ec] = std::from_chars(a.data(), a.data() + a.size(), ins.arg);
            if (ec != std::errc{} || p != a.data() + a.size())
                throw InvalidProgram(addr, "bad operand '" + a + "'");
        }
        instrs.push_back(ins);
    }
    return EnumProgram(std::move(name), std::move(instrs));
}

EnumProgram EnumProgram::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open program file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path.filename().string());
}

namespace {

// One program's execution state.
struct Machine {
    const EnumProgram* program;
    std::array<std::uint64_t, kRegisterCount> regs{};
    std::size_t pc = 0;
    bool halted = false;

    // Runs one instruction; reports an emission (if any) through out.
    void step(std::optional<Value>& out) {
        const auto& instrs = program->instructions();
        if (pc >= instrs.size()) {
            halted = true;
            return;
        }
        const Instruction& ins = instrs[pc];
        switch (ins.op) {
            case Opcode::LoadI:
                regs[ins.reg] = ins.arg;
                ++pc;
                break;
            case Opcode::AddI:
                regs[ins.reg] += ins.arg;
                ++pc;
                break;
            case Opcode::SubI:
                regs[ins.reg] = regs[ins.reg] >= ins.arg ? regs[ins.reg] - ins.arg : 0;
                ++pc;
                break;
            case Opcode::Jmp:
                pc = static_cast<std::size_t>(ins.arg);
                break;
            case Opcode::Jz:
                pc = (regs[ins.reg] == 0) ? static_cast<std::size_t>(ins.arg) : pc + 1;
                break;
            case Opcode::Out:
                out = regs[ins.reg];
                ++pc;
                break;
            case Opcode::Halt:
                halted = true;
                break;
        }
        if (!halted && pc >= instrs.size())
            halted = true;
    }
};

}  // namespace

EnumRun dovetail_union(std::span<const EnumProgram> programs, std::uint64_t slice,
                       std::uint64_t step_budget, std::uint64_t output_cap) {
    if (programs.empty())
        throw Error("dovetail requires at least one program");
    if (slice < 1)
        throw Error("slice must be >= 1");

    std::vector<Machine> machines;
    machines.reserve(programs.size());
    std::string joined;
    for (const EnumProgram& p : programs) {
        machines.push_back(Machine{&p, {}, 0, p.instructions().empty()});
        if (!joined.empty()) joined += '+';
        joined += p.name();
    }

    std::vector<Value> emitted;
    std::unordered_set<Value> seen;
    std::uint64_t steps_used = 0;
    bool progress = true;

    while (progress && steps_used < step_budget && emitted.size() < output_cap) {
        progress = false;
        for (Machine& mach : machines) {
            if (mach.halted) continue;
            progress = true;
            for (std::uint64_t s = 0; s < slice; ++s) {
                if (mach.halted || steps_used >= step_budget ||
                    emitted.size() >= output_cap)
                    break;
                std::optional<Value> out;
                mach.step(out);
                ++steps_used;
                if (out && *out >= 1 && seen.insert(*out).second)
                    emitted.push_back(*out);
            }
            if (steps_used >= step_budget || emitted.size() >= output_cap)
                break;
        }
    }

    bool all_halted = std::all_of(machines.begin(), machines.end(),
                                  [](const Machine& m) { return m.halted; });
    return EnumRun{joined, step_budget, output_cap,
                   Listing(std::move(emitted), joined), steps_used, all_halted};
}

EnumRun run_budgeted(const EnumProgram& p, std::uint64_t step_budget,
                     std::uint64_t output_cap) {
    return dovetail_union({&p, 1}, std::max<std::uint64_t>(step_budget, 1),
                          step_budget, output_cap);
}

}  // namespace eo
