#include "tci/analysis.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "tci/cdma2000.hpp"
#include "tci/errors.hpp"
#include "tci/permutation.hpp"
#include "tci/wcdma.hpp"

namespace an = tci::analysis;
using tci::Permutation;

namespace {

TEST(DisplacementStats, IdentityIsZero) {
    const auto s = an::displacement_stats(Permutation::identity(17));
    EXPECT_DOUBLE_EQ(s.mean, 0.0);
    EXPECT_DOUBLE_EQ(s.stddev, 0.0);
}

TEST(DisplacementStats, Reversal) {
    // Displacements 3, 1, 1, 3.
    const auto s = an::displacement_stats(Permutation({3, 2, 1, 0}));
    EXPECT_DOUBLE_EQ(s.mean, 2.0);
    EXPECT_DOUBLE_EQ(s.stddev, 1.0);
}

TEST(DisplacementStats, Cdma2000Block250) {
    // Exact values; the published table rounds the mean to 82.19.
    const auto s = an::displacement_stats(tci::cdma2000::build_permutation(256));
    EXPECT_NEAR(s.mean, 82.192, 1e-9);
    EXPECT_NEAR(s.stddev, 58.609036, 1e-6);
    EXPECT_NEAR(s.mean, 82.19, 0.005);
}

TEST(DisplacementStats, InvariantUnderInversion) {
    const auto perm = tci::wcdma::build_permutation(250);
    const auto a = an::displacement_stats(perm);
    const auto b = an::displacement_stats(perm.inverted());
    EXPECT_NEAR(a.mean, b.mean, 1e-9);
    EXPECT_NEAR(a.stddev, b.stddev, 1e-9);
}

TEST(AdjacencySpread, IdentityNeighborsStayAdjacent) {
    const auto s = an::adjacency_spread_stats(Permutation::identity(5));
    EXPECT_DOUBLE_EQ(s.mean, 1.0);
    EXPECT_DOUBLE_EQ(s.stddev, 0.0);
}

TEST(AdjacencySpread, BruteForceFivePositions) {
    // map [0,2,4,1,3] has inverse [0,3,1,4,2]; spreads 3,2,3,2.
    const auto s = an::adjacency_spread_stats(Permutation({0, 2, 4, 1, 3}));
    EXPECT_DOUBLE_EQ(s.mean, 2.5);
    EXPECT_DOUBLE_EQ(s.stddev, 0.5);
}

TEST(AdjacencySpread, RejectsTinyPermutation) {
    EXPECT_THROW(an::adjacency_spread_stats(Permutation::identity(1)), tci::SizeTooSmallError);
}

TEST(AdjacencySpread, DoesNotMatchPublishedDistanceTable) {
    // The disambiguation evidence: at size 250 the published W-CDMA cell
    // is 81.54 / 59.23 and displacement lands within 1.31 / 0.04 of it,
    // while adjacency spread is ~14 positions away on the mean.
    const auto s = an::adjacency_spread_stats(tci::wcdma::build_permutation(250));
    EXPECT_NEAR(s.mean, 96.064257, 1e-6);
    EXPECT_NEAR(s.stddev, 61.903376, 1e-6);
    EXPECT_GT(std::abs(s.mean - 81.54), 10.0);
}

TEST(Histogram, IdentitySingleBin) {
    const auto bins = an::histogram(Permutation::identity(40), 10);
    ASSERT_EQ(bins.size(), 1u);
    EXPECT_EQ(bins[0], (an::HistogramBin{0, 40}));
}

TEST(Histogram, ReversalWidthTwo) {
    const auto bins = an::histogram(Permutation({3, 2, 1, 0}), 2);
    const std::vector<an::HistogramBin> want{{0, 2}, {2, 2}};
    EXPECT_EQ(bins, want);
}

TEST(Histogram, EmptyInteriorBinsEmitted) {
    // Displacements 4, 0, 0, 0, 4, 0: bins [1,2) .. [3,4) are empty but listed.
    const auto bins = an::histogram(Permutation({4, 1, 2, 3, 0, 5}), 1);
    ASSERT_EQ(bins.size(), 5u);
    EXPECT_EQ(bins[0].count, 4u);
    EXPECT_EQ(bins[1].count, 0u);
    EXPECT_EQ(bins[2].count, 0u);
    EXPECT_EQ(bins[3].count, 0u);
    EXPECT_EQ(bins[4].count, 2u);
}

TEST(Histogram, CountsConserveSize) {
    const auto perm = tci::cdma2000::build_permutation(256);
    for (std::uint32_t width : {1u, 3u, 10u, 250u}) {
        std::uint32_t total = 0;
        for (const auto& bin : an::histogram(perm, width)) {
            total += bin.count;
        }
        EXPECT_EQ(total, perm.size()) << "width " << width;
    }
}

TEST(Histogram, RejectsZeroWidth) {
    EXPECT_THROW(an::histogram(Permutation::identity(4), 0), tci::OutOfRangeError);
}

TEST(Report, FixedPointLabels506) {
    const auto cdma = an::report(tci::cdma2000::build_permutation(512));
    const std::vector<std::uint32_t> want_cdma{68, 84, 338};
    EXPECT_EQ(cdma.fixed_point_labels, want_cdma);

    const auto wcdma = an::report(tci::wcdma::build_permutation(506));
    const std::vector<std::uint32_t> want_wcdma{385};
    EXPECT_EQ(wcdma.fixed_point_labels, want_wcdma);
}

TEST(Report, ZeroBasedLabelsOnRequest) {
    const auto rep = an::report(tci::cdma2000::build_permutation(512), 10,
                                an::LabelBase::kZero);
    const std::vector<std::uint32_t> want{67, 83, 337};
    EXPECT_EQ(rep.fixed_point_labels, want);
}

TEST(Report, IdentityBlock) {
    const auto rep = an::report(Permutation::identity(40));
    EXPECT_EQ(rep.fixed_point_labels.size(), 40u);
    EXPECT_DOUBLE_EQ(rep.displacement.mean, 0.0);
    EXPECT_EQ(rep.size, 40u);
}

TEST(Report, FixedPointSetInvariantUnderInversion) {
    const auto perm = tci::cdma2000::build_permutation(512);
    EXPECT_EQ(perm.fixed_points(), perm.inverted().fixed_points());
}

} // namespace
