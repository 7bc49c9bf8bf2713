#include "tci/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "tci/errors.hpp"
#include "tci/wcdma.hpp"

namespace io = tci::io;
namespace fs = std::filesystem;

namespace {

class IoTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("tci_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                "_" + std::to_string(counter_++));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path path(const std::string& name) const { return dir_ / name; }

    static int counter_;
    fs::path dir_;
};

int IoTest::counter_ = 0;

TEST_F(IoTest, ReadTokens) {
    std::ofstream(path("t.txt")) << "1 2 3\n";
    const std::vector<std::string> want{"1", "2", "3"};
    EXPECT_EQ(io::read_tokens(path("t.txt"), 3), want);
}

TEST_F(IoTest, ReadTokensRejectsCountMismatch) {
    std::ofstream(path("t.txt")) << "1 2\n";
    EXPECT_THROW(io::read_tokens(path("t.txt"), 3), tci::FormatError);
}

TEST_F(IoTest, ReadTokensMissingFile) {
    EXPECT_THROW(io::read_tokens(path("absent.txt"), 3), tci::IoError);
}

TEST_F(IoTest, TokensRoundTrip) {
    std::vector<std::string> tokens;
    for (int i = 1; i <= 250; ++i) {
        tokens.push_back(std::to_string(i));
    }
    io::write_tokens(tokens, path("t.txt"));
    EXPECT_EQ(io::read_tokens(path("t.txt"), 250), tokens);
}

TEST_F(IoTest, WriteTokensRejectsWhitespace) {
    const std::vector<std::string> tokens{"a b"};
    EXPECT_THROW(io::write_tokens(tokens, path("t.txt")), tci::FormatError);
}

TEST_F(IoTest, ReadBitsMsbFirst) {
    std::ofstream(path("b.bin"), std::ios::binary).put(static_cast<char>(0b10100000));
    const std::vector<std::uint8_t> want{1, 0, 1};
    EXPECT_EQ(io::read_bits(path("b.bin"), 3), want);
}

TEST_F(IoTest, ReadBitsRejectsWrongByteCount) {
    std::ofstream(path("b.bin"), std::ios::binary) << "\x01\x02";
    EXPECT_THROW(io::read_bits(path("b.bin"), 3), tci::FormatError);
}

TEST_F(IoTest, BitsRoundTrip) {
    const std::vector<std::uint8_t> bits{1, 0, 1, 1, 0, 0, 1, 0, 1, 1, 1};
    io::write_bits(bits, path("b.bin"));
    EXPECT_EQ(io::read_bits(path("b.bin"), 11), bits);
}

TEST_F(IoTest, WriteBitsPadsWithZeros) {
    io::write_bits(std::vector<std::uint8_t>{1, 0, 1}, path("b.bin"));
    std::ifstream in(path("b.bin"), std::ios::binary);
    std::vector<char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    ASSERT_EQ(bytes.size(), 1u);
    EXPECT_EQ(static_cast<std::uint8_t>(bytes[0]), 0b10100000);
}

TEST_F(IoTest, WriteBitsRejectsNonBits) {
    const std::vector<std::uint8_t> bad{0, 2};
    EXPECT_THROW(io::write_bits(bad, path("b.bin")), tci::FormatError);
}

TEST_F(IoTest, SymbolDispatchRoundTripsBothModes) {
    const io::SymbolFileFormat tokens_fmt{io::SymbolMode::kTokens, 3};
    const io::Symbols tokens = std::vector<std::string>{"x", "y", "z"};
    io::write_symbols(tokens, path("t.txt"), tokens_fmt);
    EXPECT_EQ(io::read_symbols(path("t.txt"), tokens_fmt), tokens);

    const io::SymbolFileFormat bits_fmt{io::SymbolMode::kBits, 5};
    const io::Symbols bits = std::vector<std::uint8_t>{1, 1, 0, 1, 0};
    io::write_symbols(bits, path("b.bin"), bits_fmt);
    EXPECT_EQ(io::read_symbols(path("b.bin"), bits_fmt), bits);

    EXPECT_THROW(io::write_symbols(tokens, path("b.bin"), bits_fmt), tci::FormatError);
}

TEST_F(IoTest, ReportRoundTripsLosslessly) {
    auto rep = io::make_report("cdma2000", 256,
                               io::params_json(tci::cdma2000::resolve_params(256)));
    io::attach_permutation(rep, tci::Permutation({2, 0, 1}));
    io::write_report(rep, path("r.json"));

    std::ifstream in(path("r.json"));
    const auto parsed = io::json::parse(in);
    EXPECT_EQ(parsed, rep);
    EXPECT_EQ(parsed["params"]["n"], 3);
    EXPECT_EQ(parsed["params"]["n_turbo"], 250);
    EXPECT_EQ(parsed["permutation"].size(), 3u);
}

TEST_F(IoTest, ReportKeysKeepDeclaredOrder) {
    const auto rep = io::make_report("wcdma", 250, io::params_json(tci::wcdma::build_plan(250)));
    std::vector<std::string> keys;
    for (auto it = rep.begin(); it != rep.end(); ++it) {
        keys.push_back(it.key());
    }
    const std::vector<std::string> want{"standard", "size", "params", "errata"};
    EXPECT_EQ(keys, want);
}

TEST_F(IoTest, WritersAreDeterministic) {
    const auto rep = io::make_report("wcdma", 250, io::params_json(tci::wcdma::build_plan(250)));
    io::write_report(rep, path("a.json"));
    io::write_report(rep, path("b.json"));
    std::ifstream a(path("a.json")), b(path("b.json"));
    const std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    const std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    EXPECT_EQ(sa, sb);
    EXPECT_FALSE(sa.empty());
}

TEST_F(IoTest, FormatMatrixMatchesReferenceRendering) {
    const auto m = tci::wcdma::permuted_matrix(tci::wcdma::build_plan(250));
    const std::string text = io::format_matrix(m);
    EXPECT_EQ(text.substr(0, text.find('\n')), "249 250 0 0 0 0 0 0 0 0 0 0 248");
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 20);
}

} // namespace
