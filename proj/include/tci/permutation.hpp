#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tci/errors.hpp"

namespace tci {

/// A block of opaque symbols; the payload interleaving operates on.
/// The library never inspects symbol values.
template <typename Symbol>
using SymbolBlock = std::vector<Symbol>;

/// A validated bijection on indices 0..size-1, stored in gather orientation:
/// map()[k] is the source index delivered to output position k.
///
/// Construction rejects maps that are not bijections; there is no silent
/// repair. Instances are immutable and safe to share across threads.
class Permutation {
public:
    using index_type = std::uint32_t;

    /// Validates and adopts the gather map.
    /// Throws OutOfRangeError if the map is empty or an entry is >= size,
    /// DuplicateError if two positions gather the same source index.
    explicit Permutation(std::vector<index_type> map) : map_(std::move(map)) {
        if (map_.empty()) {
            throw OutOfRangeError("permutation map must have positive size");
        }
        const auto n = static_cast<index_type>(map_.size());
        std::vector<bool> seen(n, false);
        for (index_type k = 0; k < n; ++k) {
            const index_type src = map_[k];
            if (src >= n) {
                throw OutOfRangeError("map entry " + std::to_string(src) +
                                      " at position " + std::to_string(k) +
                                      " outside [0, " + std::to_string(n) + ")");
            }
            if (seen[src]) {
                throw DuplicateError("source index " + std::to_string(src) +
                                     " gathered twice (second time at position " +
                                     std::to_string(k) + ")");
            }
            seen[src] = true;
        }
    }

    static Permutation identity(index_type size) {
        if (size == 0) {
            throw OutOfRangeError("identity permutation needs positive size");
        }
        std::vector<index_type> map(size);
        for (index_type k = 0; k < size; ++k) {
            map[k] = k;
        }
        return Permutation(std::move(map));
    }

    index_type size() const noexcept { return static_cast<index_type>(map_.size()); }

    const std::vector<index_type>& map() const noexcept { return map_; }

    /// Source index gathered into output position k.
    index_type operator[](index_type k) const { return map_[k]; }

    /// Inverse bijection: inverted().map()[map()[k]] == k for all k.
    /// Applying the inverse deinterleaves what apply() interleaved.
    Permutation inverted() const {
        std::vector<index_type> inv(map_.size());
        for (index_type k = 0; k < size(); ++k) {
            inv[map_[k]] = k;
        }
        return Permutation(std::move(inv));
    }

    /// All positions mapped to themselves, ascending.
    std::vector<index_type> fixed_points() const {
        std::vector<index_type> fp;
        for (index_type k = 0; k < size(); ++k) {
            if (map_[k] == k) {
                fp.push_back(k);
            }
        }
        return fp;
    }

    /// Gather: output[k] = input[map()[k]].
    /// Throws LengthMismatchError unless input.size() == size().
    template <typename Symbol>
    SymbolBlock<Symbol> apply(const SymbolBlock<Symbol>& input) const {
        if (input.size() != map_.size()) {
            throw LengthMismatchError("block length " + std::to_string(input.size()) +
                                      " != permutation size " + std::to_string(map_.size()));
        }
        SymbolBlock<Symbol> out;
        out.reserve(input.size());
        for (index_type k = 0; k < size(); ++k) {
            out.push_back(input[map_[k]]);
        }
        return out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<index_type> map_;
};

/// Composition in application order:
///   compose(outer, inner).apply(x) == outer.apply(inner.apply(x)).
/// Throws LengthMismatchError unless both permutations have the same size.
inline Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.size() != inner.size()) {
        throw LengthMismatchError("cannot compose sizes " + std::to_string(outer.size()) +
                                  " and " + std::to_string(inner.size()));
    }
    std::vector<Permutation::index_type> map(outer.size());
    for (Permutation::index_type k = 0; k < outer.size(); ++k) {
        map[k] = inner[outer[k]];
    }
    return Permutation(std::move(map));
}

} // namespace tci
