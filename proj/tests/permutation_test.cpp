#include "tci/permutation.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "tci/errors.hpp"

using tci::Permutation;

namespace {

TEST(Permutation, AcceptsIdentityMap) {
    const Permutation p({0, 1, 2});
    EXPECT_EQ(p.size(), 3u);
    EXPECT_EQ(p, Permutation::identity(3));
}

TEST(Permutation, AcceptsThreeCycle) {
    const Permutation p({2, 0, 1});
    EXPECT_EQ(p.size(), 3u);
    EXPECT_EQ(p[0], 2u);
}

TEST(Permutation, RejectsDuplicateSource) {
    EXPECT_THROW(Permutation({0, 0, 1}), tci::DuplicateError);
}

TEST(Permutation, RejectsOutOfRangeEntry) {
    EXPECT_THROW(Permutation({0, 3, 1}), tci::OutOfRangeError);
    EXPECT_THROW(Permutation({}), tci::OutOfRangeError);
}

TEST(Permutation, ApplyIdentityKeepsBlock) {
    const std::vector<std::string> block{"a", "b", "c"};
    EXPECT_EQ(Permutation::identity(3).apply(block), block);
}

TEST(Permutation, ApplyGathersSources) {
    const Permutation p({2, 0, 1});
    const std::vector<std::string> block{"a", "b", "c"};
    const std::vector<std::string> want{"c", "a", "b"};
    EXPECT_EQ(p.apply(block), want);
}

TEST(Permutation, ApplyRejectsLengthMismatch) {
    const std::vector<int> block{1, 2};
    EXPECT_THROW(Permutation::identity(3).apply(block), tci::LengthMismatchError);
}

TEST(Permutation, InvertIdentity) {
    EXPECT_EQ(Permutation::identity(4).inverted(), Permutation::identity(4));
}

TEST(Permutation, InvertThreeCycle) {
    const Permutation p({2, 0, 1});
    const Permutation want({1, 2, 0});
    EXPECT_EQ(p.inverted(), want);
}

TEST(Permutation, InverseCancelsApply) {
    const Permutation p({3, 0, 2, 1, 4});
    const std::vector<int> block{10, 20, 30, 40, 50};
    EXPECT_EQ(p.inverted().apply(p.apply(block)), block);
}

TEST(Permutation, FixedPointsOfIdentity) {
    const std::vector<Permutation::index_type> want{0, 1, 2, 3};
    EXPECT_EQ(Permutation::identity(4).fixed_points(), want);
}

TEST(Permutation, FixedPointsOfDerangement) {
    EXPECT_TRUE(Permutation({1, 0}).fixed_points().empty());
}

TEST(Permutation, ComposeMatchesSequentialApplication) {
    const Permutation outer({3, 0, 2, 1, 4});
    const Permutation inner({1, 4, 0, 2, 3});
    const std::vector<int> block{10, 20, 30, 40, 50};
    EXPECT_EQ(tci::compose(outer, inner).apply(block), outer.apply(inner.apply(block)));
}

TEST(Permutation, ComposeWithInverseIsIdentity) {
    const Permutation p({2, 4, 1, 0, 3});
    EXPECT_EQ(tci::compose(p, p.inverted()), Permutation::identity(5));
    EXPECT_EQ(tci::compose(p.inverted(), p), Permutation::identity(5));
}

TEST(Permutation, ComposeRejectsSizeMismatch) {
    EXPECT_THROW(tci::compose(Permutation::identity(3), Permutation::identity(4)),
                 tci::LengthMismatchError);
}

TEST(Permutation, ApplyPreservesSymbolMultiset) {
    const Permutation p({4, 2, 0, 3, 1});
    std::vector<int> block{7, 7, 1, 9, 1};
    auto out = p.apply(block);
    std::sort(block.begin(), block.end());
    std::sort(out.begin(), out.end());
    EXPECT_EQ(out, block);
}

} // namespace
