// Command-line front end: uniformity checks, TOBST construction and
// rendering, corpus classification, and program enumeration.
//
// Exit codes: 0 = affirmative result, 1 = negative result, 2 = usage or
// input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "enumorder/enumerator.hpp"
#include "enumorder/listing.hpp"
#include "enumorder/tobst.hpp"
#include "enumorder/uniformity.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct CommonOpts {
    std::string output;
    bool verbose = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--output", opts.output, "Write the result to PATH instead of stdout");
    cmd->add_flag("--verbose", opts.verbose, "Print a human-readable summary to stderr");
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opts.output, std::ios::binary);
        if (!out)
            throw eo::Error("cannot open output file: " + opts.output);
        out << text;
    }
}

json verdict_to_json(const eo::UniformityVerdict& v) {
    json j;
    j["kind"] = std::string(eo::to_string(v.kind));
    j["compared_length"] = v.compared_length;
    if (v.witness)
        j["witness"] = {v.witness->first, v.witness->second};
    return j;
}

json run_to_json(const eo::EnumRun& run) {
    json j;
    j["program"] = run.program;
    j["step_budget"] = run.step_budget;
    j["output_cap"] = run.output_cap;
    j["listing"] = run.listing.values();
    j["steps_used"] = run.steps_used;
    j["halted"] = run.halted;
    return j;
}

std::string listing_to_text(const eo::Listing& h) {
    std::string out;
    for (eo::Value v : h.values()) {
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

eo::Listing load_required(const std::string& path) {
    if (!fs::exists(path))
        throw eo::Error("no such file: " + path);
    return eo::load_listing(path);
}

int cmd_uniform(const std::string& file_a, const std::string& file_b,
                bool type2, std::size_t max_m, std::size_t max_n,
                std::size_t min_overlap, const CommonOpts& opts) {
    eo::Listing h = load_required(file_a);
    eo::Listing g = load_required(file_b);
    eo::UniformityVerdict verdict = eo::uniform_prefix(h, g);
    json report = verdict_to_json(verdict);
    int code = verdict.uniform() ? kExitYes : kExitNo;

    if (type2) {
        auto witness = eo::type2_search(h, g, max_m, max_n, min_overlap);
        if (witness) {
            report["type2"] = {{"found", true},
                               {"m", witness->m},
                               {"n", witness->n},
                               {"overlap", witness->overlap}};
            code = kExitYes;
        } else {
            report["type2"] = {{"found", false}};
            code = kExitNo;
        }
    }

    emit(opts, report.dump(2) + "\n");
    if (opts.verbose)
        std::cerr << h.name() << " vs " << g.name() << ": "
                  << eo::to_string(verdict.kind) << " on " << verdict.compared_length
                  << " positions\n";
    return code;
}

int cmd_tobst(const std::string& file, std::optional<std::size_t> step,
              const std::string& format, const CommonOpts& opts) {
    eo::Listing h = load_required(file);
    std::size_t wanted = step.value_or(h.size());
    if (wanted > h.size())
        throw eo::OutOfRange("step " + std::to_string(wanted) +
                             " exceeds listing length " + std::to_string(h.size()));
    auto snapshots = eo::tobst_build(h);
    eo::Tobst t = (wanted == 0) ? eo::Tobst{} : snapshots[wanted - 1];

    if (format == "dot") {
        emit(opts, eo::export_dot(t));
    } else if (format == "shape") {
        emit(opts, eo::shape_encode(t).encoding + "\n");
    } else {
        json report;
        report["size"] = t.size();
        report["spine_kind"] = std::string(eo::to_string(eo::spine_kind(t)));
        report["shape"] = eo::shape_encode(t).encoding;
        emit(opts, report.dump(2) + "\n");
    }
    if (opts.verbose)
        std::cerr << h.name() << ": snapshot " << wanted << ", size " << t.size()
                  << ", " << eo::to_string(eo::spine_kind(t)) << "\n";
    return kExitYes;
}

int cmd_classify(const std::string& dir, std::size_t prefix_len,
                 const CommonOpts& opts) {
    if (!fs::is_directory(dir))
        throw eo::Error("no such directory: " + dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file())
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw eo::Error("directory contains no listing files: " + dir);

    std::vector<eo::Listing> corpus;
    corpus.reserve(files.size());
    for (const auto& f : files)
        corpus.push_back(eo::load_listing(f));

    auto groups = eo::classify_corpus(corpus, prefix_len);
    json report(json::value_t::object);
    for (const auto& [key, names] : groups)
        report[key] = names;
    emit(opts, report.dump(2) + "\n");
    if (opts.verbose)
        std::cerr << corpus.size() << " listings in " << groups.size()
                  << " uniformity groups at prefix " << prefix_len << "\n";
    return kExitYes;
}

int cmd_enumerate(const std::string& program_path, std::uint64_t steps,
                  std::uint64_t cap, const std::vector<std::string>& dovetail,
                  std::uint64_t slice, const CommonOpts& opts) {
    std::vector<eo::EnumProgram> programs;
    programs.push_back(eo::EnumProgram::load(program_path));
    for (const auto& p : dovetail)
        programs.push_back(eo::EnumProgram::load(p));

    eo::EnumRun run = (programs.size() == 1)
                          ? eo::run_budgeted(programs[0], steps, cap)
                          : eo::dovetail_union(programs, slice, steps, cap);

    emit(opts, listing_to_text(run.listing));
    if (opts.verbose)
        std::cerr << run_to_json(run).dump(2) << "\n";
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumeration-order analysis toolkit"};
    app.require_subcommand(1);

    // uniform
    std::string uni_a, uni_b;
    bool type2 = false;
    std::size_t max_m = 0, max_n = 0, min_overlap = 0;
    CommonOpts uni_opts;
    CLI::App* uniform = app.add_subcommand("uniform", "Decide uniformity of two listings");
    uniform->add_option("file_a", uni_a, "First listing file")->required();
    uniform->add_option("file_b", uni_b, "Second listing file")->required();
    CLI::Option* t2 = uniform->add_flag("--type2", type2, "Search for a type-2 shift witness");
    CLI::Option* omm = uniform->add_option("--max-m", max_m, "Maximum prefix shift on the first listing");
    CLI::Option* omn = uniform->add_option("--max-n", max_n, "Maximum prefix shift on the second listing");
    CLI::Option* omo = uniform->add_option("--min-overlap", min_overlap, "Minimum overlap a witness must certify");
    t2->needs(omm)->needs(omn)->needs(omo);
    omm->needs(t2);
    omn->needs(t2);
    omo->needs(t2);
    add_common(uniform, uni_opts);

    // tobst
    std::string tobst_file;
    std::optional<std::size_t> tobst_step;
    std::string tobst_emit = "report";
    CommonOpts tobst_opts;
    CLI::App* tobst = app.add_subcommand("tobst", "Build and render the TOBST of a listing");
    tobst->add_option("file", tobst_file, "Listing file")->required();
    tobst->add_option("--step", tobst_step, "Snapshot index (default: final)");
    tobst->add_option("--emit", tobst_emit, "Output form")
        ->check(CLI::IsMember({"dot", "shape", "report"}));
    add_common(tobst, tobst_opts);

    // classify
    std::string classify_dir;
    std::size_t prefix_len = 0;
    CommonOpts classify_opts;
    CLI::App* classify = app.add_subcommand("classify", "Group listing files by uniformity class");
    classify->add_option("dir", classify_dir, "Directory of listing files")->required();
    classify->add_option("--prefix-len", prefix_len, "Prefix length to compare on")->required();
    add_common(classify, classify_opts);

    // enumerate
    std::string program_path;
    std::uint64_t steps = 100000, cap = 1000, slice = 1;
    std::vector<std::string> dovetail_paths;
    CommonOpts enum_opts;
    CLI::App* enumerate = app.add_subcommand("enumerate", "Run a machine program and emit its listing");
    enumerate->add_option("program", program_path, "Program file")->required();
    enumerate->add_option("--steps", steps, "Step budget (total across programs)");
    enumerate->add_option("--cap", cap, "Output cap");
    enumerate->add_option("--dovetail", dovetail_paths, "Additional programs to interleave");
    enumerate->add_option("--slice", slice, "Steps per program per dovetail turn");
    add_common(enumerate, enum_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (uniform->parsed())
            return cmd_uniform(uni_a, uni_b, type2, max_m, max_n, min_overlap, uni_opts);
        if (tobst->parsed())
            return cmd_tobst(tobst_file, tobst_step, tobst_emit, tobst_opts);
        if (classify->parsed())
            return cmd_classify(classify_dir, prefix_len, classify_opts);
        if (enumerate->parsed())
            return cmd_enumerate(program_path, steps, cap, dovetail_paths, slice, enum_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
