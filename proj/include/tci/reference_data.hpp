#pragma once

#include <array>
#include <cstdint>

#include "tci/cdma2000.hpp"
#include "tci/wcdma.hpp"

// Reference vectors for the conformance suite, transcribed from the
// standards' published worked examples (cdma2000 reverse link,
// packet_size = 256; W-CDMA, K = 250; both driven with input symbols
// 1..250). Values are kept exactly as published; known misprints are
// declared as errata in the conformance module rather than silently
// corrected here.

namespace tci::ref {

// Golden copy of the reverse-link parameter table.
inline constexpr std::array<cdma2000::Params, 5> kCdma2000Params = {{
    {256, 3, 250},
    {512, 4, 506},
    {1024, 5, 1018},
    {2048, 6, 2042},
    {4096, 7, 4090},
}};

// Golden copy of the 32x5 multiplier table (regression pin for the
// production constant).
inline constexpr cdma2000::LookupTable kCdma2000LookupTable = {{{
    {{1, 5, 27, 3, 15}},
    {{1, 15, 3, 27, 127}},
    {{3, 5, 1, 15, 89}},
    {{5, 15, 15, 13, 1}},
    {{1, 1, 13, 29, 31}},
    {{5, 9, 17, 5, 15}},
    {{1, 9, 23, 1, 61}},
    {{5, 15, 13, 31, 47}},
    {{3, 13, 9, 3, 127}},
    {{5, 15, 3, 9, 17}},
    {{3, 7, 15, 15, 119}},
    {{5, 11, 3, 31, 15}},
    {{3, 15, 13, 17, 57}},
    {{5, 3, 1, 5, 123}},
    {{5, 15, 13, 39, 95}},
    {{1, 5, 29, 1, 5}},
    {{3, 13, 21, 19, 85}},
    {{5, 15, 19, 27, 17}},
    {{3, 9, 1, 15, 55}},
    {{5, 3, 3, 13, 57}},
    {{3, 1, 29, 45, 15}},
    {{5, 3, 17, 5, 41}},
    {{5, 15, 25, 33, 93}},
    {{5, 1, 29, 15, 87}},
    {{1, 13, 9, 13, 63}},
    {{5, 1, 13, 9, 15}},
    {{1, 9, 23, 15, 13}},
    {{5, 15, 13, 31, 15}},
    {{3, 11, 13, 17, 81}},
    {{5, 3, 1, 5, 57}},
    {{5, 15, 13, 15, 31}},
    {{3, 5, 13, 33, 69}},
}}};

// Interleaved output for packet_size = 256 applied to symbols 1..250.
inline constexpr std::array<std::uint32_t, 250> kCdma2000Output256 = {{
    2, 130, 68, 198, 34, 166, 98, 230, 20, 150, 84, 214, 52, 182, 118, 242,
    12, 142, 76, 206, 44, 174, 110, 238, 26, 158, 90, 222, 60, 190, 126, 3,
    131, 71, 195, 35, 163, 99, 227, 23, 147, 87, 211, 55, 179, 115, 243, 15,
    139, 79, 203, 47, 171, 107, 235, 27, 155, 91, 219, 63, 187, 123, 4, 132,
    66, 200, 36, 168, 100, 232, 18, 152, 82, 216, 50, 184, 120, 244, 10, 144,
    74, 208, 42, 176, 112, 240, 28, 160, 92, 224, 58, 192, 128, 250, 5, 133,
    69, 197, 37, 165, 101, 229, 21, 149, 85, 213, 53, 181, 117, 245, 13, 141,
    77, 205, 45, 173, 109, 237, 29, 157, 93, 221, 61, 189, 125, 6, 134, 72,
    194, 38, 162, 102, 226, 24, 146, 88, 210, 56, 178, 114, 246, 16, 138, 80,
    202, 48, 170, 106, 234, 30, 154, 94, 218, 64, 186, 122, 7, 135, 67, 199,
    39, 167, 103, 231, 19, 151, 83, 215, 51, 183, 119, 247, 11, 143, 75, 207,
    43, 175, 111, 239, 31, 159, 95, 223, 59, 191, 127, 8, 136, 70, 196, 40,
    164, 104, 228, 22, 148, 86, 212, 54, 180, 116, 248, 14, 140, 78, 204, 46,
    172, 108, 236, 32, 156, 96, 220, 62, 188, 124, 1, 129, 65, 193, 33, 161,
    97, 225, 17, 145, 81, 209, 49, 177, 113, 241, 9, 137, 73, 201, 41, 169,
    105, 233, 25, 153, 89, 217, 57, 185, 121, 249,
}};

// The six counters whose generated address falls outside [0, 250),
// listed in published row order with the address each produces.
struct CounterAddress {
    std::uint32_t counter;
    std::uint32_t address;
};
inline constexpr std::array<CounterAddress, 6> kCdma2000Invalid256 = {{
    {0b00011111, 251},
    {0b00111111, 254},
    {0b01111111, 252},
    {0b10111111, 250},
    {0b11011111, 253},
    {0b10011111, 255},
}};

// Prime/root list as published. Entry index 19 prints 81, which is not
// prime; the production table uses 83 (declared erratum).
inline constexpr std::array<wcdma::PrimeRoot, 52> kWcdmaPrimeRootsPublished = {{
    {7, 3}, {11, 2}, {13, 2}, {17, 3}, {19, 2}, {23, 5},
    {29, 2}, {31, 3}, {37, 2}, {41, 6}, {43, 3}, {47, 5},
    {53, 2}, {59, 2}, {61, 2}, {67, 2}, {71, 7}, {73, 5},
    {79, 3}, {81, 2}, {89, 3}, {97, 5}, {101, 2}, {103, 5},
    {107, 2}, {109, 6}, {113, 3}, {127, 3}, {131, 2}, {137, 3},
    {139, 2}, {149, 2}, {151, 6}, {157, 5}, {163, 2}, {167, 5},
    {173, 2}, {179, 2}, {181, 2}, {191, 19}, {193, 5}, {197, 2},
    {199, 3}, {211, 2}, {223, 3}, {227, 2}, {229, 6}, {233, 3},
    {239, 7}, {241, 7}, {251, 6}, {257, 3},
}};
inline constexpr std::size_t kWcdmaPrimeRootErratumIndex = 19;

// The four inter-row patterns with their K ranges.
inline constexpr std::array<std::uint32_t, 5> kWcdmaInterRow5 = {4, 3, 2, 1, 0};
inline constexpr std::array<std::uint32_t, 10> kWcdmaInterRow10 = {9, 8, 7, 6, 5, 4, 3, 2, 1, 0};
inline constexpr std::array<std::uint32_t, 20> kWcdmaInterRow20Narrow = {
    19, 9, 14, 4, 0, 2, 5, 7, 12, 18, 16, 13, 17, 15, 3, 1, 6, 11, 8, 10};
inline constexpr std::array<std::uint32_t, 20> kWcdmaInterRow20 = {
    19, 9, 14, 4, 0, 2, 5, 7, 12, 18, 10, 8, 13, 17, 3, 1, 16, 6, 15, 11};

// Worked-example sequences for K = 250 (p = 13, v = 2).
inline constexpr std::array<std::uint32_t, 12> kWcdmaBaseSequence13 = {
    1, 2, 4, 8, 3, 6, 12, 11, 9, 5, 10, 7};
inline constexpr std::array<std::uint32_t, 20> kWcdmaPrimeSeq250 = {
    1, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79};
inline constexpr std::array<std::uint32_t, 20> kWcdmaPermutedPrimes250 = {
    17, 61, 19, 59, 13, 23, 71, 29, 43, 7, 41, 79, 31, 47, 11, 73, 67, 53, 37, 1};
inline constexpr std::array<std::uint32_t, 20> kWcdmaRowPattern250 = {
    19, 9, 14, 4, 0, 2, 5, 7, 12, 18, 10, 8, 13, 17, 3, 1, 16, 6, 15, 11};

// Permuted 20x13 matrix for K = 250, rendered 1-based with padding as 0.
inline constexpr std::array<std::uint32_t, 260> kWcdmaMatrix250 = {{
    249, 250, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 248,
    119, 129, 122, 123, 121, 125, 130, 120, 127, 126, 128, 124, 118,
    184, 190, 193, 188, 192, 194, 195, 189, 186, 191, 187, 185, 183,
    54, 55, 57, 61, 56, 59, 65, 64, 62, 58, 63, 60, 53,
    2, 7, 11, 9, 10, 3, 13, 8, 4, 6, 5, 12, 1,
    28, 38, 31, 32, 30, 34, 39, 29, 36, 35, 37, 33, 27,
    67, 73, 76, 71, 75, 77, 78, 72, 69, 74, 70, 68, 66,
    93, 98, 102, 100, 101, 94, 104, 99, 95, 97, 96, 103, 92,
    158, 168, 161, 162, 160, 164, 169, 159, 166, 165, 167, 163, 157,
    236, 237, 239, 243, 238, 241, 247, 246, 244, 240, 245, 242, 235,
    132, 137, 141, 139, 140, 133, 143, 138, 134, 136, 135, 142, 131,
    106, 116, 109, 110, 108, 112, 117, 107, 114, 113, 115, 111, 105,
    171, 177, 180, 175, 179, 181, 182, 176, 173, 178, 174, 172, 170,
    223, 228, 232, 230, 231, 224, 234, 229, 225, 227, 226, 233, 222,
    41, 47, 50, 45, 49, 51, 52, 46, 43, 48, 44, 42, 40,
    15, 16, 18, 22, 17, 20, 26, 25, 23, 19, 24, 21, 14,
    210, 220, 213, 214, 212, 216, 221, 211, 218, 217, 219, 215, 209,
    80, 86, 89, 84, 88, 90, 91, 85, 82, 87, 83, 81, 79,
    197, 198, 200, 204, 199, 202, 208, 207, 205, 201, 206, 203, 196,
    145, 155, 148, 149, 147, 151, 156, 146, 153, 152, 154, 150, 144,
}};

// Interleaved output for K = 250 applied to symbols 1..250, exactly as
// published. Position 86 prints 138; recomputation and the matrix
// read-out give 238 (declared erratum).
inline constexpr std::array<std::uint32_t, 250> kWcdmaOutput250Published = {{
    249, 119, 184, 54, 2, 28, 67, 93, 158, 236, 132, 106, 171, 223, 41,
    15, 210, 80, 197, 145, 250, 129, 190, 55, 7, 38, 73, 98, 168, 237,
    137, 116, 177, 228, 47, 16, 220, 86, 198, 155, 122, 193, 57, 11, 31,
    76, 102, 161, 239, 141, 109, 180, 232, 50, 18, 213, 89, 200, 148, 123,
    188, 61, 9, 32, 71, 100, 162, 243, 139, 110, 175, 230, 45, 22, 214,
    84, 204, 149, 121, 192, 56, 10, 30, 75, 101, 160, 138, 140, 108, 179,
    231, 49, 17, 212, 88, 199, 147, 125, 194, 59, 3, 34, 77, 94, 164,
    241, 133, 112, 181, 224, 51, 20, 216, 90, 202, 151, 130, 195, 65, 13,
    39, 78, 104, 169, 247, 143, 117, 182, 234, 52, 26, 221, 91, 208, 156,
    120, 189, 64, 8, 29, 72, 99, 159, 246, 138, 107, 176, 229, 46, 25,
    211, 85, 207, 146, 127, 186, 62, 4, 36, 69, 95, 166, 244, 134, 114,
    173, 225, 43, 23, 218, 82, 205, 153, 126, 191, 58, 6, 35, 74, 97,
    165, 240, 136, 113, 178, 227, 48, 19, 217, 87, 201, 152, 128, 187, 63,
    5, 37, 70, 96, 167, 245, 135, 115, 174, 226, 44, 24, 219, 83, 206,
    154, 124, 185, 60, 12, 33, 68, 103, 163, 242, 142, 111, 172, 233, 42,
    21, 215, 81, 203, 150, 248, 118, 183, 53, 1, 27, 66, 92, 157, 235,
    131, 105, 170, 222, 40, 14, 209, 79, 196, 144,
}};
inline constexpr std::uint32_t kWcdmaOutput250ErratumPos = 86;
inline constexpr std::uint32_t kWcdmaOutput250ErratumPrinted = 138;
inline constexpr std::uint32_t kWcdmaOutput250ErratumCorrected = 238;

// Published dispersion statistics (mean interleaving distance and its
// standard deviation) for both interleavers at the five block lengths.
struct DispersionRow {
    std::uint32_t size;
    double cdma2000_mean;
    double wcdma_mean;
    double cdma2000_stddev;
    double wcdma_stddev;
};
inline constexpr std::array<DispersionRow, 5> kDispersionPublished = {{
    {250, 82.19, 81.54, 58.36, 59.23},
    {506, 168.96, 170.78, 118.63, 121.65},
    {1018, 334.60, 333.27, 240.71, 240.58},
    {2042, 678.2, 679.68, 481.04, 483.78},
    {4090, 1369.9, 1358.8, 965.65, 964.15},
}};

// Published fixed-point labels at block length 506 (1-based labels).
inline constexpr std::array<std::uint32_t, 3> kCdma2000FixedPoints506 = {68, 84, 338};
inline constexpr std::array<std::uint32_t, 1> kWcdmaFixedPoints506 = {385};

} // namespace tci::ref
