#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tci/errors.hpp"
#include "tci/permutation.hpp"

namespace tci::cdma2000 {

/// Reverse-link turbo interleaver parameters (3GPP2 C.S0024-B).
/// packet_size is six bits longer than n_turbo (tail-bit overhead);
/// the address counter is n+5 bits wide.
struct Params {
    std::uint32_t packet_size;
    std::uint32_t n;       // interleaving parameter, 3..7
    std::uint32_t n_turbo; // block length in symbols

    friend bool operator==(const Params&, const Params&) = default;
};

inline constexpr std::array<Params, 5> kParamsTable = {{
    {256, 3, 250},
    {512, 4, 506},
    {1024, 5, 1018},
    {2048, 6, 2042},
    {4096, 7, 4090},
}};

/// The 32x5 multiplier table indexed by the counter's five LSBs (row)
/// and the interleaving parameter n (column n-3). Every entry is odd,
/// which makes x -> x*entry mod 2^n invertible, and fits in n bits.
struct LookupTable {
    std::array<std::array<std::uint8_t, 5>, 32> rows;

    constexpr std::uint32_t entry(std::uint32_t low5, std::uint32_t n) const {
        return rows[low5][n - 3];
    }
};

inline constexpr LookupTable kStandardLookupTable = {{{
    //  n=3  n=4  n=5  n=6  n=7
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

constexpr bool lookup_table_well_formed(const LookupTable& lut) {
    for (std::uint32_t row = 0; row < 32; ++row) {
        for (std::uint32_t n = 3; n <= 7; ++n) {
            const std::uint32_t e = lut.entry(row, n);
            if ((e & 1u) == 0 || e >= (1u << n)) {
                return false;
            }
        }
    }
    return true;
}

constexpr std::uint32_t lookup_table_checksum(const LookupTable& lut) {
    std::uint32_t sum = 0;
    for (std::uint32_t row = 0; row < 32; ++row) {
        for (std::uint32_t n = 3; n <= 7; ++n) {
            sum += lut.entry(row, n);
        }
    }
    return sum;
}

// Transcription guards; the interleaved-output golden vectors are the
// behavioral arbiter on top of these.
static_assert(lookup_table_well_formed(kStandardLookupTable));
static_assert(lookup_table_checksum(kStandardLookupTable) == 3136);

/// Table row for a supported reverse-link packet size.
/// Throws UnsupportedPacketSizeError otherwise (this includes all
/// forward-link sizes; forward-link parameters are a different table).
inline Params resolve_params(std::uint32_t packet_size) {
    for (const Params& p : kParamsTable) {
        if (p.packet_size == packet_size) {
            return p;
        }
    }
    throw UnsupportedPacketSizeError(
        "packet_size " + std::to_string(packet_size) +
        " is not a reverse-link turbo interleaver size "
        "(supported: 256, 512, 1024, 2048, 4096)");
}

/// Reverses the 5-bit representation of x. Pre: x < 32.
constexpr std::uint32_t bit_reverse5(std::uint32_t x) noexcept {
    std::uint32_t r = 0;
    for (int i = 0; i < 5; ++i) {
        r = (r << 1) | ((x >> i) & 1u);
    }
    return r;
}

static_assert(bit_reverse5(0) == 0);
static_assert(bit_reverse5(1) == 16);
static_assert(bit_reverse5(31) == 31);

/// One step of the counter-driven address generator.
struct AddressTrace {
    std::uint32_t counter;
    std::uint32_t address;
    bool valid; // address < n_turbo

    friend bool operator==(const AddressTrace&, const AddressTrace&) = default;
};

/// Generates the candidate address for one counter value:
///   high  = top n bits of the (n+5)-bit counter
///   low5  = bottom 5 bits
///   address = (bit_reverse5(low5) << n) | ((high + 1) * lut[low5][n] mod 2^n)
/// high+1 may occupy n+1 bits; only the product is reduced mod 2^n.
/// Throws CounterOutOfRangeError if counter >= 2^(n+5).
inline AddressTrace address_for_counter(std::uint32_t counter, const Params& params,
                                        const LookupTable& lut = kStandardLookupTable) {
    const std::uint32_t width = params.n + 5;
    if (counter >= (1u << width)) {
        throw CounterOutOfRangeError("counter " + std::to_string(counter) +
                                     " outside [0, 2^" + std::to_string(width) + ")");
    }
    const std::uint32_t high = counter >> 5;
    const std::uint32_t low5 = counter & 31u;
    const std::uint32_t low = ((high + 1) * lut.entry(low5, params.n)) & ((1u << params.n) - 1);
    const std::uint32_t address = (bit_reverse5(low5) << params.n) | low;
    return {counter, address, address < params.n_turbo};
}

/// All 2^(n+5) traces in counter order. Filtering valid == true and
/// projecting the address equals build_permutation's map.
inline std::vector<AddressTrace> trace_all(std::uint32_t packet_size,
                                           const LookupTable& lut = kStandardLookupTable) {
    const Params params = resolve_params(packet_size);
    const std::uint32_t span = 1u << (params.n + 5);
    std::vector<AddressTrace> traces;
    traces.reserve(span);
    for (std::uint32_t counter = 0; counter < span; ++counter) {
        traces.push_back(address_for_counter(counter, params, lut));
    }
    return traces;
}

/// Runs the full counter span, keeps valid addresses in encounter order,
/// and validates the result as a bijection on 0..n_turbo-1. Exactly
/// 2^(n+5) - n_turbo counters are discarded.
inline Permutation build_permutation(std::uint32_t packet_size,
                                     const LookupTable& lut = kStandardLookupTable) {
    const Params params = resolve_params(packet_size);
    const std::uint32_t span = 1u << (params.n + 5);
    std::vector<Permutation::index_type> map;
    map.reserve(params.n_turbo);
    for (std::uint32_t counter = 0; counter < span; ++counter) {
        const AddressTrace t = address_for_counter(counter, params, lut);
        if (t.valid) {
            map.push_back(t.address);
        }
    }
    return Permutation(std::move(map));
}

} // namespace tci::cdma2000
