#pragma once

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tci/analysis.hpp"
#include "tci/cdma2000.hpp"
#include "tci/errors.hpp"
#include "tci/permutation.hpp"
#include "tci/wcdma.hpp"

namespace tci::io {

using json = nlohmann::ordered_json;

enum class SymbolMode {
    kTokens, // text, whitespace-separated tokens
    kBits,   // raw bytes, MSB-first bit packing
};

struct SymbolFileFormat {
    SymbolMode mode;
    std::uint32_t length; // declared symbol count
};

/// A decoded symbol block: opaque text tokens or single bits.
using Symbols = std::variant<std::vector<std::string>, std::vector<std::uint8_t>>;

/// Reads a tokens-mode symbol file: whitespace-separated tokens whose
/// count must equal the declared length.
inline std::vector<std::string> read_tokens(const std::filesystem::path& path,
                                            std::uint32_t length) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) {
        tokens.push_back(tok);
    }
    if (tokens.size() != length) {
        throw FormatError(path.string() + ": found " + std::to_string(tokens.size()) +
                          " tokens, declared length is " + std::to_string(length));
    }
    return tokens;
}

/// Writes tokens separated by single spaces with a trailing newline.
/// Tokens must be non-empty and whitespace-free so the file reads back
/// to the identical block.
inline void write_tokens(std::span<const std::string> tokens,
                         const std::filesystem::path& path) {
    for (const std::string& tok : tokens) {
        if (tok.empty()) {
            throw FormatError("empty token cannot round-trip");
        }
        for (unsigned char c : tok) {
            if (std::isspace(c)) {
                throw FormatError("token containing whitespace cannot round-trip: '" + tok + "'");
            }
        }
    }
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i != 0) {
            out << ' ';
        }
        out << tokens[i];
    }
    out << '\n';
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

/// Reads a bits-mode symbol file: bit b of the stream is bit 7-(b mod 8)
/// of byte b/8 (MSB first). The file must hold exactly ceil(length/8)
/// bytes; trailing pad bits are ignored.
inline std::vector<std::uint8_t> read_bits(const std::filesystem::path& path,
                                           std::uint32_t length) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::vector<char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const std::size_t expected = (static_cast<std::size_t>(length) + 7) / 8;
    if (bytes.size() != expected) {
        throw FormatError(path.string() + ": " + std::to_string(bytes.size()) +
                          " bytes, declared length " + std::to_string(length) + " needs " +
                          std::to_string(expected));
    }
    std::vector<std::uint8_t> bits;
    bits.reserve(length);
    for (std::uint32_t b = 0; b < length; ++b) {
        const auto byte = static_cast<std::uint8_t>(bytes[b / 8]);
        bits.push_back((byte >> (7 - (b % 8))) & 1u);
    }
    return bits;
}

/// Writes bits MSB-first; pad bits in the final byte are zero.
inline void write_bits(std::span<const std::uint8_t> bits, const std::filesystem::path& path) {
    std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
    for (std::size_t b = 0; b < bits.size(); ++b) {
        if (bits[b] > 1) {
            throw FormatError("bit value " + std::to_string(bits[b]) + " is not 0 or 1");
        }
        bytes[b / 8] |= static_cast<std::uint8_t>(bits[b] << (7 - (b % 8)));
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

/// Mode-dispatching reader: tokens mode yields strings, bits mode 0/1 bytes.
inline Symbols read_symbols(const std::filesystem::path& path, const SymbolFileFormat& format) {
    if (format.mode == SymbolMode::kTokens) {
        return read_tokens(path, format.length);
    }
    return read_bits(path, format.length);
}

/// Mode-dispatching writer; read_symbols(write_symbols(x)) == x.
/// Throws FormatError if the block's symbol type does not match the mode.
inline void write_symbols(const Symbols& block, const std::filesystem::path& path,
                          const SymbolFileFormat& format) {
    if (format.mode == SymbolMode::kTokens) {
        const auto* tokens = std::get_if<std::vector<std::string>>(&block);
        if (tokens == nullptr) {
            throw FormatError("tokens mode needs a token block");
        }
        write_tokens(*tokens, path);
        return;
    }
    const auto* bits = std::get_if<std::vector<std::uint8_t>>(&block);
    if (bits == nullptr) {
        throw FormatError("bits mode needs a bit block");
    }
    write_bits(*bits, path);
}

// --------------------------------------------------------------------------
// Structured reports. One schema for every emitted document, with
// deterministic key order: standard, size, params, errata, then any
// payload sections (permutation, stats, fixed_points, histogram).

inline json params_json(const cdma2000::Params& params) {
    return json{{"packet_size", params.packet_size}, {"n", params.n}, {"n_turbo", params.n_turbo}};
}

inline json params_json(const wcdma::Plan& plan) {
    return json{{"k", plan.k},
                {"rows", plan.rows},
                {"cols", plan.cols},
                {"prime", plan.prime},
                {"root", plan.root}};
}

inline json make_report(const std::string& standard, std::uint32_t size, json params) {
    json rep;
    rep["standard"] = standard;
    rep["size"] = size;
    rep["params"] = std::move(params);
    rep["errata"] = json::array();
    return rep;
}

inline void attach_permutation(json& rep, const Permutation& perm) {
    // 0-based machine representation of the gather map.
    rep["permutation"] = perm.map();
}

inline void attach_analysis(json& rep, const analysis::DispersionReport& a) {
    json stats;
    stats["distance_definition"] = analysis::kDistanceDefinition;
    stats["displacement_mean"] = a.displacement.mean;
    stats["displacement_stddev"] = a.displacement.stddev;
    stats["adjacency_spread_mean"] = a.adjacency_spread.mean;
    stats["adjacency_spread_stddev"] = a.adjacency_spread.stddev;
    rep["stats"] = std::move(stats);
    json fixed;
    fixed["label_base"] = static_cast<std::uint32_t>(a.label_base);
    fixed["labels"] = a.fixed_point_labels;
    rep["fixed_points"] = std::move(fixed);
    json hist;
    hist["bin_width"] = a.bin_width;
    json bins = json::array();
    for (const analysis::HistogramBin& b : a.histogram) {
        bins.push_back(json::array({b.lower_bound, b.count}));
    }
    hist["bins"] = std::move(bins);
    rep["histogram"] = std::move(hist);
}

inline void write_report(const json& rep, std::ostream& out) {
    out << rep.dump(2) << '\n';
}

inline void write_report(const json& rep, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    write_report(rep, out);
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

/// Renders the permuted index matrix the way the reference material
/// prints it: 1-based source values, padding cells as 0.
inline std::string format_matrix(const wcdma::IndexMatrix& m) {
    std::ostringstream out;
    for (std::uint32_t i = 0; i < m.rows; ++i) {
        for (std::uint32_t j = 0; j < m.cols; ++j) {
            if (j != 0) {
                out << ' ';
            }
            out << (m.is_padding(i, j) ? 0 : m.at(i, j) + 1);
        }
        out << '\n';
    }
    return out.str();
}

} // namespace tci::io
