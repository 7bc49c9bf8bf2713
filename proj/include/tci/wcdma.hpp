#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "tci/errors.hpp"
#include "tci/permutation.hpp"

namespace tci::wcdma {

inline constexpr std::uint32_t kMinK = 40;
inline constexpr std::uint32_t kMaxK = 5114;

struct PrimeRoot {
    std::uint32_t prime;
    std::uint32_t root;

    friend bool operator==(const PrimeRoot&, const PrimeRoot&) = default;
};

/// Primes p with a primitive root v (TS 25.212). 257 is the largest prime
/// any K in [40, 5114] needs. The entry 83 corrects a non-prime value in
/// one published copy of this table; see the conformance errata log.
inline constexpr std::array<PrimeRoot, 52> kPrimeTable = {{
    {7, 3},    {11, 2},   {13, 2},   {17, 3},   {19, 2},   {23, 5},
    {29, 2},   {31, 3},   {37, 2},   {41, 6},   {43, 3},   {47, 5},
    {53, 2},   {59, 2},   {61, 2},   {67, 2},   {71, 7},   {73, 5},
    {79, 3},   {83, 2},   {89, 3},   {97, 5},   {101, 2},  {103, 5},
    {107, 2},  {109, 6},  {113, 3},  {127, 3},  {131, 2},  {137, 3},
    {139, 2},  {149, 2},  {151, 6},  {157, 5},  {163, 2},  {167, 5},
    {173, 2},  {179, 2},  {181, 2},  {191, 19}, {193, 5},  {197, 2},
    {199, 3},  {211, 2},  {223, 3},  {227, 2},  {229, 6},  {233, 3},
    {239, 7},  {241, 7},  {251, 6},  {257, 3},
}};

namespace detail {

inline constexpr std::array<std::uint32_t, 5> kInterRow5 = {4, 3, 2, 1, 0};
inline constexpr std::array<std::uint32_t, 10> kInterRow10 = {9, 8, 7, 6, 5, 4, 3, 2, 1, 0};
// For K in the two narrow 20-row bands below:
inline constexpr std::array<std::uint32_t, 20> kInterRow20Narrow = {
    19, 9, 14, 4, 0, 2, 5, 7, 12, 18, 16, 13, 17, 15, 3, 1, 6, 11, 8, 10};
// For every other 20-row K:
inline constexpr std::array<std::uint32_t, 20> kInterRow20 = {
    19, 9, 14, 4, 0, 2, 5, 7, 12, 18, 10, 8, 13, 17, 3, 1, 16, 6, 15, 11};

struct KRange {
    std::uint32_t lo;
    std::uint32_t hi; // inclusive

    constexpr bool contains(std::uint32_t k) const { return lo <= k && k <= hi; }
};

inline constexpr KRange kRows5Band{40, 159};
inline constexpr KRange kRows10BandA{160, 200};
inline constexpr KRange kRows10BandB{481, 530};
inline constexpr KRange kNarrow20BandA{2281, 2480};
inline constexpr KRange kNarrow20BandB{3161, 3210};

constexpr bool disjoint(KRange a, KRange b) {
    return a.hi < b.lo || b.hi < a.lo;
}

// The explicit K bands never overlap, so band selection is unambiguous and
// the narrow inter-row patterns only ever apply where R = 20.
static_assert(disjoint(kRows5Band, kRows10BandA) && disjoint(kRows5Band, kRows10BandB) &&
              disjoint(kRows10BandA, kRows10BandB));
static_assert(disjoint(kNarrow20BandA, kNarrow20BandB));
static_assert(disjoint(kNarrow20BandA, kRows5Band) && disjoint(kNarrow20BandA, kRows10BandA) &&
              disjoint(kNarrow20BandA, kRows10BandB));
static_assert(disjoint(kNarrow20BandB, kRows5Band) && disjoint(kNarrow20BandB, kRows10BandA) &&
              disjoint(kNarrow20BandB, kRows10BandB));

constexpr bool is_prime(std::uint32_t x) {
    if (x < 2) {
        return false;
    }
    for (std::uint32_t d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            return false;
        }
    }
    return true;
}

inline void check_k(std::uint32_t k) {
    if (k < kMinK || k > kMaxK) {
        throw KOutOfRangeError("K = " + std::to_string(k) + " outside [" +
                               std::to_string(kMinK) + ", " + std::to_string(kMaxK) + "]");
    }
}

} // namespace detail

/// Row count R for input length K: 5, 10 or 20.
inline std::uint32_t determine_rows(std::uint32_t k) {
    detail::check_k(k);
    if (detail::kRows5Band.contains(k)) {
        return 5;
    }
    if (detail::kRows10BandA.contains(k) || detail::kRows10BandB.contains(k)) {
        return 10;
    }
    return 20;
}

struct Dimensions {
    std::uint32_t prime;
    std::uint32_t root;
    std::uint32_t cols;

    friend bool operator==(const Dimensions&, const Dimensions&) = default;
};

/// Prime p, primitive root v and column count C for (K, R).
/// 481 <= K <= 530 is special-cased to (53, 2, 53); otherwise p is the
/// smallest table prime with K <= R*(p+1), and C is p-1, p or p+1
/// depending on where K falls relative to R*(p-1) and R*p.
inline Dimensions determine_prime_and_columns(std::uint32_t k, std::uint32_t rows) {
    detail::check_k(k);
    if (detail::kRows10BandB.contains(k)) {
        return {53, 2, 53};
    }
    for (const PrimeRoot& pr : kPrimeTable) {
        const std::uint32_t p = pr.prime;
        if (k <= rows * (p + 1)) {
            if (k <= rows * (p - 1)) {
                return {p, pr.root, p - 1};
            }
            if (k <= rows * p) {
                return {p, pr.root, p};
            }
            return {p, pr.root, p + 1};
        }
    }
    // Unreachable for valid K: 20*(257+1) = 5160 >= 5114.
    throw KOutOfRangeError("no prime covers K = " + std::to_string(k));
}

/// Base sequence s: s(0) = 1, s(j) = v * s(j-1) mod p. Since v is a
/// primitive root, s enumerates 1..p-1 without repetition.
inline std::vector<std::uint32_t> base_sequence(std::uint32_t prime, std::uint32_t root) {
    std::vector<std::uint32_t> s;
    s.reserve(prime - 1);
    s.push_back(1);
    for (std::uint32_t j = 1; j + 1 < prime; ++j) {
        s.push_back((root * s.back()) % prime);
    }
    return s;
}

/// Least-prime sequence q: q(0) = 1, then the smallest primes > 6 that are
/// strictly increasing and coprime with p-1.
inline std::vector<std::uint32_t> prime_sequence(std::uint32_t prime, std::uint32_t count) {
    std::vector<std::uint32_t> q;
    q.reserve(count);
    q.push_back(1);
    std::uint32_t candidate = 7;
    while (q.size() < count) {
        if (detail::is_prime(candidate) && std::gcd(candidate, prime - 1) == 1) {
            q.push_back(candidate);
        }
        ++candidate;
    }
    return q;
}

/// Inter-row pattern T for input length K. One of four fixed patterns,
/// selected by K's range.
inline std::span<const std::uint32_t> inter_row_pattern(std::uint32_t k) {
    detail::check_k(k);
    if (detail::kRows5Band.contains(k)) {
        return detail::kInterRow5;
    }
    if (detail::kRows10BandA.contains(k) || detail::kRows10BandB.contains(k)) {
        return detail::kInterRow10;
    }
    if (detail::kNarrow20BandA.contains(k) || detail::kNarrow20BandB.contains(k)) {
        return detail::kInterRow20Narrow;
    }
    return detail::kInterRow20;
}

/// Scatters q through T: result[t[i]] = q[i].
inline std::vector<std::uint32_t> permuted_prime_sequence(std::span<const std::uint32_t> q,
                                                          std::span<const std::uint32_t> t) {
    if (q.size() != t.size()) {
        throw LengthMismatchError("prime sequence length " + std::to_string(q.size()) +
                                  " != pattern length " + std::to_string(t.size()));
    }
    std::vector<std::uint32_t> r(q.size(), 0);
    std::vector<bool> filled(q.size(), false);
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (t[i] >= t.size()) {
            throw OutOfRangeError("pattern entry " + std::to_string(t[i]) + " out of range");
        }
        if (filled[t[i]]) {
            throw DuplicateError("pattern entry " + std::to_string(t[i]) + " repeated");
        }
        filled[t[i]] = true;
        r[t[i]] = q[i];
    }
    return r;
}

/// Dimensioning and all derived sequences for one input length K.
/// row_pattern is T, permuted_primes is r (indexed by original row),
/// col_patterns[i] is U_i for original row i.
struct Plan {
    std::uint32_t k = 0;
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    std::uint32_t prime = 0;
    std::uint32_t root = 0;
    std::vector<std::uint32_t> base_seq;
    std::vector<std::uint32_t> prime_seq;
    std::vector<std::uint32_t> permuted_primes;
    std::vector<std::uint32_t> row_pattern;
    std::vector<std::vector<std::uint32_t>> col_patterns;
};

/// Intra-row pattern U_i for original row index `row`, derived from the
/// plan's base sequence and permuted prime r_i:
///   C = p:    U(j) = s(j*r_i mod p-1) for j < p-1, then U(p-1) = 0
///   C = p+1:  as above plus U(p) = p; when K = R*C the last row's
///             pattern additionally swaps positions 0 and p
///   C = p-1:  U(j) = s(j*r_i mod p-1) - 1   (shifts 1..p-1 onto 0..p-2)
/// Only the scalar fields, base_seq and permuted_primes of the plan are
/// consulted, so this can run before col_patterns is filled.
inline std::vector<std::uint32_t> column_pattern(const Plan& plan, std::uint32_t row) {
    const std::uint32_t p = plan.prime;
    const std::uint32_t ri = plan.permuted_primes[row];
    std::vector<std::uint32_t> u;
    u.reserve(plan.cols);
    if (plan.cols == p - 1) {
        for (std::uint32_t j = 0; j + 1 < p; ++j) {
            u.push_back(plan.base_seq[(static_cast<std::uint64_t>(j) * ri) % (p - 1)] - 1);
        }
        return u;
    }
    for (std::uint32_t j = 0; j + 1 < p; ++j) {
        u.push_back(plan.base_seq[(static_cast<std::uint64_t>(j) * ri) % (p - 1)]);
    }
    u.push_back(0);
    if (plan.cols == p + 1) {
        u.push_back(p);
        if (plan.k == plan.rows * plan.cols && row == plan.rows - 1) {
            std::swap(u[0], u[p]);
        }
    }
    return u;
}

/// Assembles the complete plan for one K. Throws KOutOfRangeError.
inline Plan build_plan(std::uint32_t k) {
    detail::check_k(k);
    Plan plan;
    plan.k = k;
    plan.rows = determine_rows(k);
    const Dimensions dims = determine_prime_and_columns(k, plan.rows);
    plan.prime = dims.prime;
    plan.root = dims.root;
    plan.cols = dims.cols;
    plan.base_seq = base_sequence(plan.prime, plan.root);
    plan.prime_seq = prime_sequence(plan.prime, plan.rows);
    const auto t = inter_row_pattern(k);
    plan.row_pattern.assign(t.begin(), t.end());
    plan.permuted_primes = permuted_prime_sequence(plan.prime_seq, plan.row_pattern);
    plan.col_patterns.reserve(plan.rows);
    for (std::uint32_t i = 0; i < plan.rows; ++i) {
        plan.col_patterns.push_back(column_pattern(plan, i));
    }
    return plan;
}

/// R x C matrix of source indices. Cells >= k mark padding; padding is
/// tracked by index, never by symbol value.
struct IndexMatrix {
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    std::uint32_t k = 0;
    std::vector<std::uint32_t> cells; // row-major, a permutation of 0..rows*cols-1

    std::uint32_t at(std::uint32_t i, std::uint32_t j) const { return cells[i * cols + j]; }
    bool is_padding(std::uint32_t i, std::uint32_t j) const { return at(i, j) >= k; }
};

/// Row-major fill, intra-row permutation M'[i][j] = M[i][U_i(j)], then
/// inter-row permutation M''[i][j] = M'[T(i)][j].
inline IndexMatrix permuted_matrix(const Plan& plan) {
    IndexMatrix m;
    m.rows = plan.rows;
    m.cols = plan.cols;
    m.k = plan.k;
    m.cells.resize(static_cast<std::size_t>(plan.rows) * plan.cols);
    for (std::uint32_t i = 0; i < plan.rows; ++i) {
        const std::uint32_t src_row = plan.row_pattern[i];
        const auto& u = plan.col_patterns[src_row];
        for (std::uint32_t j = 0; j < plan.cols; ++j) {
            m.cells[i * plan.cols + j] = src_row * plan.cols + u[j];
        }
    }
    return m;
}

/// Reads the permuted matrix column by column, top to bottom, left to
/// right, dropping the rows*cols - k padding cells, and validates the
/// result as a bijection on 0..k-1.
inline Permutation build_permutation(std::uint32_t k) {
    const Plan plan = build_plan(k);
    const IndexMatrix m = permuted_matrix(plan);
    std::vector<Permutation::index_type> map;
    map.reserve(k);
    for (std::uint32_t j = 0; j < m.cols; ++j) {
        for (std::uint32_t i = 0; i < m.rows; ++i) {
            const std::uint32_t cell = m.at(i, j);
            if (cell < k) {
                map.push_back(cell);
            }
        }
    }
    return Permutation(std::move(map));
}

} // namespace tci::wcdma
