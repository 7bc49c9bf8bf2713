#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "tci/errors.hpp"
#include "tci/permutation.hpp"

namespace tci::analysis {

struct Stats {
    double mean = 0.0;
    double stddev = 0.0; // population (divide by N)
};

namespace detail {

inline Stats population_stats(const std::vector<std::uint32_t>& values) {
    const double n = static_cast<double>(values.size());
    double sum = 0.0;
    for (std::uint32_t v : values) {
        sum += v;
    }
    const double mean = sum / n;
    double sq = 0.0;
    for (std::uint32_t v : values) {
        const double d = v - mean;
        sq += d * d;
    }
    return {mean, std::sqrt(sq / n)};
}

inline std::vector<std::uint32_t> displacements(const Permutation& perm) {
    std::vector<std::uint32_t> d;
    d.reserve(perm.size());
    for (Permutation::index_type k = 0; k < perm.size(); ++k) {
        const std::int64_t diff = static_cast<std::int64_t>(perm[k]) - k;
        d.push_back(static_cast<std::uint32_t>(std::llabs(diff)));
    }
    return d;
}

} // namespace detail

/// Mean and population standard deviation of |map[k] - k|.
/// This is the distance definition used for the published dispersion
/// figures; the multiset of displacements is invariant under inversion,
/// so the gather/scatter orientation cannot change these statistics.
inline Stats displacement_stats(const Permutation& perm) {
    return detail::population_stats(detail::displacements(perm));
}

/// Output separation of input-adjacent symbols: with inv = perm.inverted(),
/// the statistics of |inv.map[k+1] - inv.map[k]| over k = 0..size-2.
/// Computed alongside displacement as the alternative "distance" reading;
/// it does not reproduce the published tables (see the analysis report).
/// Throws SizeTooSmallError if perm.size() < 2.
inline Stats adjacency_spread_stats(const Permutation& perm) {
    if (perm.size() < 2) {
        throw SizeTooSmallError("adjacency spread needs size >= 2");
    }
    const Permutation inv = perm.inverted();
    std::vector<std::uint32_t> spreads;
    spreads.reserve(perm.size() - 1);
    for (Permutation::index_type k = 0; k + 1 < perm.size(); ++k) {
        const std::int64_t diff = static_cast<std::int64_t>(inv[k + 1]) - inv[k];
        spreads.push_back(static_cast<std::uint32_t>(std::llabs(diff)));
    }
    return detail::population_stats(spreads);
}

struct HistogramBin {
    std::uint32_t lower_bound;
    std::uint32_t count;

    friend bool operator==(const HistogramBin&, const HistogramBin&) = default;
};

/// Bins displacements into [m*bin_width, (m+1)*bin_width), emitting every
/// bin from 0 through the last nonempty one (empty interior bins included).
/// Counts always sum to perm.size(). Throws OutOfRangeError if bin_width is 0.
inline std::vector<HistogramBin> histogram(const Permutation& perm, std::uint32_t bin_width) {
    if (bin_width == 0) {
        throw OutOfRangeError("bin_width must be >= 1");
    }
    const auto d = detail::displacements(perm);
    std::uint32_t max_bin = 0;
    for (std::uint32_t v : d) {
        max_bin = std::max(max_bin, v / bin_width);
    }
    std::vector<HistogramBin> bins;
    bins.reserve(max_bin + 1);
    for (std::uint32_t m = 0; m <= max_bin; ++m) {
        bins.push_back({m * bin_width, 0});
    }
    for (std::uint32_t v : d) {
        ++bins[v / bin_width].count;
    }
    return bins;
}

/// Position labeling for reported fixed points. The published figures
/// label positions 1-based, so that is the default.
enum class LabelBase : std::uint32_t {
    kZero = 0,
    kOne = 1,
};

inline constexpr LabelBase kDefaultLabelBase = LabelBase::kOne;

/// Distance definition reproduced in reports; pinned to displacement
/// after comparing both candidates against the published statistics.
inline constexpr const char* kDistanceDefinition = "displacement";

struct DispersionReport {
    std::uint32_t size = 0;
    Stats displacement;
    Stats adjacency_spread;
    std::vector<std::uint32_t> fixed_point_labels;
    LabelBase label_base = kDefaultLabelBase;
    std::uint32_t bin_width = 10;
    std::vector<HistogramBin> histogram;
};

/// Full dispersion report. Fixed points are labeled under `label_base`;
/// membership itself is convention-independent.
inline DispersionReport report(const Permutation& perm, std::uint32_t bin_width = 10,
                               LabelBase label_base = kDefaultLabelBase) {
    DispersionReport rep;
    rep.size = perm.size();
    rep.displacement = displacement_stats(perm);
    rep.adjacency_spread = perm.size() >= 2 ? adjacency_spread_stats(perm) : Stats{};
    for (Permutation::index_type fp : perm.fixed_points()) {
        rep.fixed_point_labels.push_back(fp + static_cast<std::uint32_t>(label_base));
    }
    rep.label_base = label_base;
    rep.bin_width = bin_width;
    rep.histogram = histogram(perm, bin_width);
    return rep;
}

} // namespace tci::analysis
