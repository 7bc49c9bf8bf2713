// Command-line front end for the cdma2000 / W-CDMA turbo interleavers:
// parameter resolution, permutation dumps, file (de)interleaving, matrix
// dumps, dispersion analysis, and the conformance self-test.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "tci/analysis.hpp"
#include "tci/cdma2000.hpp"
#include "tci/conformance.hpp"
#include "tci/errors.hpp"
#include "tci/io.hpp"
#include "tci/permutation.hpp"
#include "tci/wcdma.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitSelfTest = 3;

struct Options {
    std::string standard;
    std::uint32_t size = 0;
    std::string input;
    std::string output;
    std::string mode = "tokens";
    std::uint32_t bin_width = 10;
    std::uint32_t label_base = 1;
};

tci::Permutation build_permutation(const Options& opt) {
    if (opt.standard == "cdma2000") {
        return tci::cdma2000::build_permutation(opt.size);
    }
    return tci::wcdma::build_permutation(opt.size);
}

tci::io::json base_report(const Options& opt) {
    if (opt.standard == "cdma2000") {
        const auto params = tci::cdma2000::resolve_params(opt.size);
        return tci::io::make_report("cdma2000", opt.size, tci::io::params_json(params));
    }
    const auto plan = tci::wcdma::build_plan(opt.size);
    return tci::io::make_report("wcdma", opt.size, tci::io::params_json(plan));
}

void emit(const tci::io::json& report, const Options& opt) {
    if (opt.output.empty()) {
        tci::io::write_report(report, std::cout);
    } else {
        tci::io::write_report(report, std::filesystem::path(opt.output));
    }
}

void emit_text(const std::string& text, const Options& opt) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) {
        throw tci::IoError("cannot write " + opt.output);
    }
    out << text;
    if (!out) {
        throw tci::IoError("write failed: " + opt.output);
    }
}

void run_codec(const Options& opt, bool inverse) {
    tci::Permutation perm = build_permutation(opt);
    if (inverse) {
        perm = perm.inverted();
    }
    const tci::io::SymbolFileFormat format{
        opt.mode == "tokens" ? tci::io::SymbolMode::kTokens : tci::io::SymbolMode::kBits,
        perm.size()};
    const auto block = tci::io::read_symbols(opt.input, format);
    const auto permuted = std::visit(
        [&perm](const auto& symbols) -> tci::io::Symbols { return perm.apply(symbols); }, block);
    tci::io::write_symbols(permuted, opt.output, format);
}

int run_selftest(const Options& opt) {
    const auto suite = tci::conformance::run_all();
    std::size_t passed = 0;
    for (const auto& v : suite.results) {
        std::cout << (v.passed ? "PASS" : "FAIL") << "  " << v.id << "  (" << v.source << ")\n";
        if (!v.detail.empty()) {
            std::cout << "      " << v.detail << "\n";
        }
        for (const auto& e : v.errata_applied) {
            std::cout << "      erratum @ " << e.position << ": published " << e.printed
                      << ", recomputed " << e.recomputed << " -- " << e.justification << "\n";
        }
        passed += v.passed ? 1 : 0;
    }
    std::cout << passed << "/" << suite.results.size() << " vectors passed\n";
    if (!opt.output.empty()) {
        tci::io::write_report(tci::conformance::suite_report(suite), std::filesystem::path(opt.output));
    }
    return suite.all_passed() ? kExitOk : kExitSelfTest;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cdma2000 / W-CDMA turbo interleaver toolkit"};
    app.require_subcommand(1);

    Options opt;
    const auto standards = CLI::IsMember({"cdma2000", "wcdma"});
    const auto modes = CLI::IsMember({"tokens", "bits"});
    const auto bases = CLI::IsMember({0u, 1u});

    auto add_standard_size = [&](CLI::App* cmd) {
        cmd->add_option("--standard", opt.standard, "cdma2000 or wcdma")
            ->required()
            ->check(standards);
        cmd->add_option("--size", opt.size,
                        "packet_size for cdma2000 (256/512/1024/2048/4096), "
                        "input length K for wcdma (40..5114)")
            ->required();
    };

    CLI::App* params = app.add_subcommand("params", "Resolve and emit interleaver parameters");
    add_standard_size(params);
    params->add_option("--output", opt.output, "report path (default: stdout)");

    CLI::App* perm = app.add_subcommand("perm", "Emit the permutation map (0-based gather map)");
    add_standard_size(perm);
    perm->add_option("--output", opt.output, "report path (default: stdout)");

    CLI::App* interleave = app.add_subcommand("interleave", "Permute a symbol file");
    add_standard_size(interleave);
    interleave->add_option("--input", opt.input, "input symbol file")->required();
    interleave->add_option("--output", opt.output, "output symbol file")->required();
    interleave->add_option("--mode", opt.mode, "tokens or bits")->check(modes);

    CLI::App* deinterleave =
        app.add_subcommand("deinterleave", "Apply the inverse permutation to a symbol file");
    add_standard_size(deinterleave);
    deinterleave->add_option("--input", opt.input, "input symbol file")->required();
    deinterleave->add_option("--output", opt.output, "output symbol file")->required();
    deinterleave->add_option("--mode", opt.mode, "tokens or bits")->check(modes);

    CLI::App* matrix =
        app.add_subcommand("matrix", "Dump the permuted index matrix (wcdma only; "
                                     "1-based values, padding as 0)");
    matrix->add_option("--standard", opt.standard, "must be wcdma")->check(standards);
    matrix->add_option("--size", opt.size, "input length K (40..5114)")->required();
    matrix->add_option("--output", opt.output, "output path (default: stdout)");

    CLI::App* analyze = app.add_subcommand("analyze", "Emit a dispersion report");
    add_standard_size(analyze);
    analyze->add_option("--bin-width", opt.bin_width, "histogram bin width (default 10)")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--label-base", opt.label_base,
                        "fixed-point label base, 0 or 1 (default 1)")
        ->check(bases);
    analyze->add_option("--output", opt.output, "report path (default: stdout)");

    CLI::App* selftest =
        app.add_subcommand("selftest", "Run the embedded conformance vectors");
    selftest->add_option("--output", opt.output, "suite report path (optional)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*params) {
            emit(base_report(opt), opt);
        } else if (*perm) {
            auto report = base_report(opt);
            tci::io::attach_permutation(report, build_permutation(opt));
            emit(report, opt);
        } else if (*interleave) {
            run_codec(opt, false);
        } else if (*deinterleave) {
            run_codec(opt, true);
        } else if (*matrix) {
            if (!opt.standard.empty() && opt.standard != "wcdma") {
                std::cerr << "error: matrix dump exists only for wcdma\n";
                return kExitValidation;
            }
            const auto plan = tci::wcdma::build_plan(opt.size);
            emit_text(tci::io::format_matrix(tci::wcdma::permuted_matrix(plan)), opt);
        } else if (*analyze) {
            auto report = base_report(opt);
            const auto rep = tci::analysis::report(
                build_permutation(opt), opt.bin_width,
                opt.label_base == 0 ? tci::analysis::LabelBase::kZero
                                    : tci::analysis::LabelBase::kOne);
            tci::io::attach_analysis(report, rep);
            emit(report, opt);
        } else if (*selftest) {
            return run_selftest(opt);
        }
    } catch (const tci::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const tci::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const tci::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
