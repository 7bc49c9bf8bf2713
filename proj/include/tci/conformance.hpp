#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tci/analysis.hpp"
#include "tci/cdma2000.hpp"
#include "tci/errors.hpp"
#include "tci/io.hpp"
#include "tci/permutation.hpp"
#include "tci/reference_data.hpp"
#include "tci/wcdma.hpp"

namespace tci::conformance {

/// A reconciliation between a published value and its recomputation.
/// Accepted only when the recomputed value is confirmed by at least one
/// independent cross-reference inside the published material itself.
struct Erratum {
    std::string vector_id;
    std::string position;
    std::string printed;
    std::string recomputed;
    std::string justification;
};

struct VectorResult {
    std::string id;
    std::string source; // reference locator
    bool passed = false;
    std::string detail; // empty on a clean pass
    std::vector<Erratum> errata_applied;
};

struct SuiteResult {
    std::vector<VectorResult> results;

    bool all_passed() const {
        return std::all_of(results.begin(), results.end(),
                           [](const VectorResult& r) { return r.passed; });
    }

    const VectorResult* find(const std::string& id) const {
        for (const VectorResult& r : results) {
            if (r.id == id) {
                return &r;
            }
        }
        return nullptr;
    }
};

/// Misprints in the published worked examples that are documented here
/// but not load-bearing for any embedded vector.
inline std::vector<Erratum> documented_errata() {
    return {
        {"wcdma-250-input-matrix", "row 15, col 6", "201", "202",
         "row-major fill of 1..250 is strictly increasing inside a row; the "
         "published input matrix prints 201 twice"},
        {"wcdma-250-readout-table", "col 5, row 2", "94", "194",
         "the permuted-matrix table and the interleaved output both carry 194 "
         "at the corresponding cell"},
    };
}

namespace detail {

inline std::vector<std::uint32_t> one_based_symbols(std::uint32_t n) {
    std::vector<std::uint32_t> v(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        v[i] = i + 1;
    }
    return v;
}

template <typename A, typename B>
std::string first_diff(const A& expected, const B& actual) {
    if (expected.size() != actual.size()) {
        return "length " + std::to_string(actual.size()) + " != " +
               std::to_string(expected.size());
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (expected[i] != actual[i]) {
            return "first mismatch at position " + std::to_string(i) + ": expected " +
                   std::to_string(expected[i]) + ", got " + std::to_string(actual[i]);
        }
    }
    return {};
}

inline std::string fmt(double v) {
    std::ostringstream out;
    out.precision(6);
    out << std::fixed << v;
    return out.str();
}

} // namespace detail

/// Runs every embedded conformance vector and returns per-vector results.
/// Failures are results, not errors. The lookup-table parameter is a
/// fault-injection seam for the cdma2000 checks; production callers use
/// the default.
inline SuiteResult run_all(const cdma2000::LookupTable& lut = cdma2000::kStandardLookupTable) {
    SuiteResult suite;

    // -- cdma2000 parameter table ------------------------------------------
    {
        VectorResult r{"cdma2000-parameter-table",
                       "3GPP2 C.S0024-B reverse-link turbo interleaver parameters",
                       true,
                       {},
                       {}};
        for (const cdma2000::Params& row : ref::kCdma2000Params) {
            const cdma2000::Params got = cdma2000::resolve_params(row.packet_size);
            if (!(got == row)) {
                r.passed = false;
                r.detail = "row for packet_size " + std::to_string(row.packet_size) + " differs";
            }
        }
        for (std::uint32_t bad : {0u, 100u, 255u, 300u, 512u * 2 + 1, 8192u}) {
            try {
                cdma2000::resolve_params(bad);
                r.passed = false;
                r.detail = "packet_size " + std::to_string(bad) + " not rejected";
            } catch (const UnsupportedPacketSizeError&) {
            }
        }
        suite.results.push_back(std::move(r));
    }

    // -- cdma2000 lookup table ---------------------------------------------
    {
        VectorResult r{"cdma2000-lookup-table",
                       "3GPP2 C.S0024-B interleaver multiplier table (32 x 5)",
                       true,
                       {},
                       {}};
        for (std::uint32_t row = 0; row < 32 && r.passed; ++row) {
            for (std::uint32_t n = 3; n <= 7; ++n) {
                const std::uint32_t got = lut.entry(row, n);
                const std::uint32_t want = ref::kCdma2000LookupTable.entry(row, n);
                if (got != want) {
                    r.passed = false;
                    r.detail = "entry [" + std::to_string(row) + "][n=" + std::to_string(n) +
                               "] = " + std::to_string(got) + ", published " +
                               std::to_string(want);
                    break;
                }
                if ((got & 1u) == 0 || got >= (1u << n)) {
                    r.passed = false;
                    r.detail = "entry [" + std::to_string(row) + "][n=" + std::to_string(n) +
                               "] violates oddness/width";
                    break;
                }
            }
        }
        suite.results.push_back(std::move(r));
    }

    // -- cdma2000 interleaved output, packet_size 256 ------------------------
    {
        VectorResult r{"cdma2000-256-interleaved-output",
                       "3GPP2 C.S0024-B worked example: packet_size 256, inputs 1..250",
                       true,
                       {},
                       {}};
        const Permutation perm = cdma2000::build_permutation(256, lut);
        const auto out = perm.apply(detail::one_based_symbols(250));
        r.detail = detail::first_diff(ref::kCdma2000Output256, out);
        r.passed = r.detail.empty();
        suite.results.push_back(std::move(r));
    }

    // -- cdma2000 invalid addresses, packet_size 256 --------------------------
    {
        VectorResult r{"cdma2000-256-invalid-addresses",
                       "3GPP2 C.S0024-B worked example: discarded addresses at packet_size 256",
                       true,
                       {},
                       {}};
        std::vector<cdma2000::AddressTrace> invalid;
        for (const auto& t : cdma2000::trace_all(256, lut)) {
            if (!t.valid) {
                invalid.push_back(t);
            }
        }
        if (invalid.size() != ref::kCdma2000Invalid256.size()) {
            r.passed = false;
            r.detail = std::to_string(invalid.size()) + " invalid counters, published 6";
        } else {
            for (const ref::CounterAddress& want : ref::kCdma2000Invalid256) {
                const auto it =
                    std::find_if(invalid.begin(), invalid.end(), [&](const auto& t) {
                        return t.counter == want.counter;
                    });
                if (it == invalid.end() || it->address != want.address) {
                    r.passed = false;
                    r.detail = "counter " + std::to_string(want.counter) +
                               " should produce invalid address " + std::to_string(want.address);
                    break;
                }
            }
        }
        suite.results.push_back(std::move(r));
    }

    // -- W-CDMA prime/root table ---------------------------------------------
    {
        VectorResult r{"wcdma-prime-root-table",
                       "TS 25.212 prime numbers p with primitive roots v",
                       true,
                       {},
                       {}};
        for (std::size_t i = 0; i < wcdma::kPrimeTable.size() && r.passed; ++i) {
            const wcdma::PrimeRoot prod = wcdma::kPrimeTable[i];
            const wcdma::PrimeRoot pub = ref::kWcdmaPrimeRootsPublished[i];
            if (i == ref::kWcdmaPrimeRootErratumIndex) {
                if (pub.prime != 81 || prod.prime != 83 || prod.root != pub.root) {
                    r.passed = false;
                    r.detail = "erratum entry drifted";
                    break;
                }
            } else if (!(prod == pub)) {
                r.passed = false;
                r.detail = "entry " + std::to_string(i) + " differs from published table";
                break;
            }
            if (!wcdma::detail::is_prime(prod.prime)) {
                r.passed = false;
                r.detail = std::to_string(prod.prime) + " is not prime";
                break;
            }
            // Primitive root <=> the base sequence covers 1..p-1.
            auto s = wcdma::base_sequence(prod.prime, prod.root);
            std::sort(s.begin(), s.end());
            for (std::uint32_t v = 1; v < prod.prime; ++v) {
                if (s[v - 1] != v) {
                    r.passed = false;
                    r.detail = std::to_string(prod.root) + " is not a primitive root mod " +
                               std::to_string(prod.prime);
                    break;
                }
            }
        }
        if (r.passed) {
            r.errata_applied.push_back(
                {r.id, "entry 19", "81", "83",
                 "81 = 3^4 is not prime; 83 is the prime between 79 and 89 and its "
                 "published root 2 generates the full multiplicative group mod 83"});
        }
        suite.results.push_back(std::move(r));
    }

    // -- W-CDMA inter-row patterns --------------------------------------------
    {
        VectorResult r{"wcdma-inter-row-patterns",
                       "TS 25.212 inter-row permutation patterns by K range",
                       true,
                       {},
                       {}};
        const struct {
            std::uint32_t k;
            std::span<const std::uint32_t> want;
        } cases[] = {
            {100, ref::kWcdmaInterRow5},
            {180, ref::kWcdmaInterRow10},
            {500, ref::kWcdmaInterRow10},
            {2300, ref::kWcdmaInterRow20Narrow},
            {3200, ref::kWcdmaInterRow20Narrow},
            {250, ref::kWcdmaInterRow20},
            {5114, ref::kWcdmaInterRow20},
        };
        for (const auto& c : cases) {
            const auto got = wcdma::inter_row_pattern(c.k);
            if (!std::equal(got.begin(), got.end(), c.want.begin(), c.want.end())) {
                r.passed = false;
                r.detail = "pattern for K = " + std::to_string(c.k) + " differs";
            }
        }
        suite.results.push_back(std::move(r));
    }

    // -- W-CDMA K = 250 derived sequences --------------------------------------
    {
        VectorResult r{"wcdma-250-base-sequence",
                       "TS 25.212 worked example: base sequence for p = 13, v = 2",
                       true,
                       {},
                       {}};
        r.detail = detail::first_diff(ref::kWcdmaBaseSequence13, wcdma::base_sequence(13, 2));
        r.passed = r.detail.empty();
        suite.results.push_back(std::move(r));
    }
    {
        VectorResult r{"wcdma-250-prime-sequence",
                       "TS 25.212 worked example: least-prime sequence q for p = 13, R = 20",
                       true,
                       {},
                       {}};
        r.detail = detail::first_diff(ref::kWcdmaPrimeSeq250, wcdma::prime_sequence(13, 20));
        r.passed = r.detail.empty();
        suite.results.push_back(std::move(r));
    }
    {
        VectorResult r{"wcdma-250-row-pattern",
                       "TS 25.212 worked example: inter-row pattern for K = 250",
                       true,
                       {},
                       {}};
        const auto got = wcdma::inter_row_pattern(250);
        std::vector<std::uint32_t> got_v(got.begin(), got.end());
        r.detail = detail::first_diff(ref::kWcdmaRowPattern250, got_v);
        r.passed = r.detail.empty();
        suite.results.push_back(std::move(r));
    }
    {
        VectorResult r{"wcdma-250-permuted-primes",
                       "TS 25.212 worked example: permuted prime sequence r for K = 250",
                       true,
                       {},
                       {}};
        const auto got = wcdma::permuted_prime_sequence(wcdma::prime_sequence(13, 20),
                                                        wcdma::inter_row_pattern(250));
        r.detail = detail::first_diff(ref::kWcdmaPermutedPrimes250, got);
        r.passed = r.detail.empty();
        suite.results.push_back(std::move(r));
    }

    // -- W-CDMA K = 250 permuted matrix -----------------------------------------
    {
        VectorResult r{"wcdma-250-permuted-matrix",
                       "TS 25.212 worked example: 20x13 matrix after both permutations",
                       true,
                       {},
                       {}};
        const wcdma::IndexMatrix m = wcdma::permuted_matrix(wcdma::build_plan(250));
        std::vector<std::uint32_t> rendered;
        rendered.reserve(260);
        for (std::uint32_t i = 0; i < m.rows; ++i) {
            for (std::uint32_t j = 0; j < m.cols; ++j) {
                rendered.push_back(m.is_padding(i, j) ? 0 : m.at(i, j) + 1);
            }
        }
        r.detail = detail::first_diff(ref::kWcdmaMatrix250, rendered);
        r.passed = r.detail.empty();
        suite.results.push_back(std::move(r));
    }

    // -- W-CDMA K = 250 interleaved output ---------------------------------------
    {
        VectorResult r{"wcdma-250-interleaved-output",
                       "TS 25.212 worked example: K = 250, inputs 1..250",
                       true,
                       {},
                       {}};
        const Permutation perm = wcdma::build_permutation(250);
        const auto out = perm.apply(detail::one_based_symbols(250));
        for (std::uint32_t i = 0; i < 250; ++i) {
            if (out[i] == ref::kWcdmaOutput250Published[i]) {
                continue;
            }
            if (i == ref::kWcdmaOutput250ErratumPos &&
                ref::kWcdmaOutput250Published[i] == ref::kWcdmaOutput250ErratumPrinted &&
                out[i] == ref::kWcdmaOutput250ErratumCorrected) {
                r.errata_applied.push_back(
                    {r.id, "position " + std::to_string(i),
                     std::to_string(ref::kWcdmaOutput250ErratumPrinted),
                     std::to_string(ref::kWcdmaOutput250ErratumCorrected),
                     "the permuted-matrix read-out (column 4, row 9) carries 238 at "
                     "this output position"});
                continue;
            }
            r.passed = false;
            r.detail = "unresolved mismatch at position " + std::to_string(i) + ": published " +
                       std::to_string(ref::kWcdmaOutput250Published[i]) + ", recomputed " +
                       std::to_string(out[i]);
            break;
        }
        suite.results.push_back(std::move(r));
    }

    // -- bijectivity and pruning sweep -------------------------------------------
    {
        VectorResult r{"bijectivity-and-pruning-sweep",
                       "determinism/bijectivity requirements, full parameter space",
                       true,
                       {},
                       {}};
        std::mt19937 rng(20260809u);
        const auto round_trips = [&](const Permutation& perm) {
            std::vector<std::uint32_t> payload(perm.size());
            for (auto& v : payload) {
                v = rng();
            }
            return perm.inverted().apply(perm.apply(payload)) == payload;
        };
        try {
            for (const cdma2000::Params& row : ref::kCdma2000Params) {
                const Permutation perm = cdma2000::build_permutation(row.packet_size, lut);
                const std::uint32_t span = 1u << (row.n + 5);
                if (perm.size() != row.n_turbo || !round_trips(perm)) {
                    r.passed = false;
                    r.detail = "cdma2000 packet_size " + std::to_string(row.packet_size);
                    break;
                }
                std::uint32_t discarded = 0;
                for (const auto& t : cdma2000::trace_all(row.packet_size, lut)) {
                    discarded += t.valid ? 0 : 1;
                }
                if (discarded != span - row.n_turbo) {
                    r.passed = false;
                    r.detail = "cdma2000 discard count at packet_size " +
                               std::to_string(row.packet_size);
                    break;
                }
            }
            for (std::uint32_t k = wcdma::kMinK; k <= wcdma::kMaxK && r.passed; ++k) {
                const wcdma::Plan plan = wcdma::build_plan(k);
                const Permutation perm = wcdma::build_permutation(k); // ctor validates bijection
                if (perm.size() != k || plan.rows * plan.cols < k) {
                    r.passed = false;
                    r.detail = "W-CDMA K = " + std::to_string(k);
                    break;
                }
                if (k % 101 == 0 && !round_trips(perm)) {
                    r.passed = false;
                    r.detail = "W-CDMA round trip at K = " + std::to_string(k);
                    break;
                }
            }
        } catch (const Error& e) {
            r.passed = false;
            r.detail = std::string("construction failed: ") + e.what();
        }
        suite.results.push_back(std::move(r));
    }

    // -- dispersion statistics ------------------------------------------------
    //
    // Known to fail: the published table is not an exact recomputation of
    // either candidate distance definition. Displacement statistics of the
    // very permutations pinned bit-exactly by the output vectors above
    // deviate from the published numbers by up to 1.8% (relative) in the
    // mean. Cells whose permutation is pinned by an independent published
    // cross-reference carry errata; the remaining cells are unresolved and
    // fail the vector.
    {
        VectorResult r{"dispersion-statistics",
                       "published mean interleaving distance and standard deviation",
                       true,
                       {},
                       {}};
        std::ostringstream unresolved;
        for (const ref::DispersionRow& row : ref::kDispersionPublished) {
            const std::uint32_t packet = row.size + 6;
            const struct {
                const char* standard;
                analysis::Stats got;
                double mean;
                double stddev;
                const char* cross_ref; // nullptr when no independent pin exists
            } cells[2] = {
                {"cdma2000", analysis::displacement_stats(cdma2000::build_permutation(packet, lut)),
                 row.cdma2000_mean, row.cdma2000_stddev,
                 row.size == 250   ? "interleaved-output and invalid-address vectors"
                 : row.size == 506 ? "published fixed points {68, 84, 338}"
                                   : nullptr},
                {"wcdma", analysis::displacement_stats(wcdma::build_permutation(row.size)),
                 row.wcdma_mean, row.wcdma_stddev,
                 row.size == 250   ? "permuted-matrix and interleaved-output vectors"
                 : row.size == 506 ? "published fixed point {385}"
                                   : nullptr},
            };
            for (const auto& cell : cells) {
                const bool ok = std::abs(cell.got.mean - cell.mean) <= 0.5 &&
                                std::abs(cell.got.stddev - cell.stddev) <= 1.0;
                if (ok) {
                    continue;
                }
                const std::string position =
                    std::string(cell.standard) + "/" + std::to_string(row.size);
                if (cell.cross_ref != nullptr) {
                    r.errata_applied.push_back(
                        {r.id, position,
                         detail::fmt(cell.mean) + " / " + detail::fmt(cell.stddev),
                         detail::fmt(cell.got.mean) + " / " + detail::fmt(cell.got.stddev),
                         std::string("the permutation is pinned bit-exactly by ") +
                             cell.cross_ref + "; its displacement statistics follow "
                             "deterministically"});
                } else {
                    r.passed = false;
                    unresolved << (unresolved.tellp() > 0 ? "; " : "") << position
                               << " published " << detail::fmt(cell.mean) << "/"
                               << detail::fmt(cell.stddev) << ", recomputed "
                               << detail::fmt(cell.got.mean) << "/"
                               << detail::fmt(cell.got.stddev);
                }
            }
        }
        if (!r.passed) {
            r.detail = "unresolved published-value mismatches (no independent "
                       "cross-reference): " +
                       unresolved.str();
        }
        suite.results.push_back(std::move(r));
    }

    // -- fixed points at block length 506 ----------------------------------------
    {
        VectorResult r{"fixed-points-506",
                       "published self-mapped positions at input length 506 (1-based labels)",
                       true,
                       {},
                       {}};
        const auto check = [&r](const Permutation& perm, std::span<const std::uint32_t> want) {
            const auto fp = perm.fixed_points();
            if (fp.size() != want.size()) {
                r.passed = false;
                r.detail = std::to_string(fp.size()) + " fixed points, published " +
                           std::to_string(want.size());
                return;
            }
            for (std::size_t i = 0; i < fp.size(); ++i) {
                if (fp[i] + 1 != want[i]) { // 1-based labeling convention
                    r.passed = false;
                    r.detail = "fixed point label " + std::to_string(fp[i] + 1) +
                               " != published " + std::to_string(want[i]);
                    return;
                }
            }
        };
        check(cdma2000::build_permutation(512, lut), ref::kCdma2000FixedPoints506);
        check(wcdma::build_permutation(506), ref::kWcdmaFixedPoints506);
        suite.results.push_back(std::move(r));
    }

    return suite;
}

/// Structured suite report (io-formats schema).
inline io::json suite_report(const SuiteResult& suite) {
    io::json rep;
    rep["suite"] = "conformance";
    rep["all_passed"] = suite.all_passed();
    io::json vectors = io::json::array();
    for (const VectorResult& v : suite.results) {
        io::json jv;
        jv["id"] = v.id;
        jv["source"] = v.source;
        jv["passed"] = v.passed;
        jv["detail"] = v.detail;
        io::json errata = io::json::array();
        for (const Erratum& e : v.errata_applied) {
            errata.push_back({{"position", e.position},
                              {"printed", e.printed},
                              {"recomputed", e.recomputed},
                              {"justification", e.justification}});
        }
        jv["errata"] = std::move(errata);
        vectors.push_back(std::move(jv));
    }
    rep["vectors"] = std::move(vectors);
    io::json documented = io::json::array();
    for (const Erratum& e : documented_errata()) {
        documented.push_back({{"vector_id", e.vector_id},
                              {"position", e.position},
                              {"printed", e.printed},
                              {"recomputed", e.recomputed},
                              {"justification", e.justification}});
    }
    rep["documented_errata"] = std::move(documented);
    return rep;
}

} // namespace tci::conformance
