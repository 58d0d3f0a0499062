#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "rimhook/border_sequence.hpp"
#include "rimhook/partition.hpp"

namespace rimhook {

/// Residue class of a position, in 1..k: the i-th digit after the median
/// gap belongs to class i, and the class repeats with period k.
inline int position_class(int pos, int k) {
    int r = ((pos - 1) % k + k) % k;  // 0..k-1
    return r + 1;
}

/// Index of a position inside its class: position i + j*k has index j,
/// so the class-local gap inherited from the median sits between
/// indices -1 and 0.
inline int position_index(int pos, int k) {
    int i = position_class(pos, k);
    return (pos - i) / k;
}

namespace detail {

struct Subsequence {
    std::vector<std::uint8_t> digits;  // class digits inside the window range
    int first_index = 0;               // class index of digits[0]
    int inherited_gap = 0;             // digits at positions <= 0
    int zeros = 0;                     // intrinsic median offset
    int shift() const { return zeros - inherited_gap; }
};

inline Subsequence extract_class(const BorderSequence& s, int k, int cls) {
    Subsequence sub;
    if (s.empty_window()) {
        sub.first_index = 0;
        return sub;
    }
    // First class position >= window start.
    int pos = s.start() + ((cls - position_class(s.start(), k)) % k + k) % k;
    sub.first_index = position_index(pos, k);
    for (; pos <= s.end(); pos += k) {
        std::uint8_t d = static_cast<std::uint8_t>(s.digit(pos));
        sub.digits.push_back(d);
        if (pos <= 0) ++sub.inherited_gap;
        if (d == 0) ++sub.zeros;
    }
    return sub;
}

/// Component partition from a class subsequence, re-canonicalized around
/// its intrinsic median (index j maps to component position j - shift + 1).
inline BorderSequence component_sequence(const Subsequence& sub) {
    return BorderSequence::from_raw(sub.first_index - sub.shift() + 1, sub.digits);
}

}  // namespace detail

/// A partition split into its k-core and k-quotient. median_shifts[i]
/// records, in class-digit units, how far each subsequence's intrinsic
/// median sits to the right of the inherited one; the core is exactly
/// this shift vector and the shifts always sum to zero.
struct QuotientDecomposition {
    int k = 0;
    Partition core;
    std::vector<Partition> components;
    std::vector<int> median_shifts;
};

/// Shift of each mod-k subsequence's intrinsic median, classes 1..k.
inline std::vector<int> median_shifts(const Partition& p, int k) {
    if (k < 2) throw std::invalid_argument("quotient parameter k must be at least 2");
    BorderSequence s = encode(p);
    std::vector<int> shifts;
    shifts.reserve(static_cast<std::size_t>(k));
    for (int cls = 1; cls <= k; ++cls) shifts.push_back(detail::extract_class(s, k, cls).shift());
    return shifts;
}

/// Empty k-core criterion: every subsequence's intrinsic median coincides
/// with the inherited one. Independent of k_core below.
inline bool has_empty_core(const Partition& p, int k) {
    for (int sh : median_shifts(p, k))
        if (sh != 0) return false;
    return true;
}

inline std::vector<Partition> k_quotient(const Partition& p, int k) {
    if (k < 2) throw std::invalid_argument("quotient parameter k must be at least 2");
    BorderSequence s = encode(p);
    std::vector<Partition> comps;
    comps.reserve(static_cast<std::size_t>(k));
    for (int cls = 1; cls <= k; ++cls)
        comps.push_back(decode(detail::component_sequence(detail::extract_class(s, k, cls))));
    return comps;
}

namespace detail {

/// Assembles the sequence whose class-i subsequence is the digits of
/// comps[i-1] shifted so its median sits shifts[i-1] class-steps right of
/// the inherited gap. Empty components give the squeezed all-0s/all-1s
/// pattern, which is how the core is materialized.
inline BorderSequence assemble(const std::vector<BorderSequence>& comps,
                               const std::vector<int>& shifts, int k) {
    int radius = 2;
    for (int i = 0; i < k; ++i) {
        int extent = std::abs(shifts[static_cast<std::size_t>(i)]) + 2;
        if (!comps[static_cast<std::size_t>(i)].empty_window())
            extent += std::max(std::abs(comps[static_cast<std::size_t>(i)].start()),
                               std::abs(comps[static_cast<std::size_t>(i)].end()));
        radius = std::max(radius, extent);
    }
    int lo = -k * radius, hi = k * radius;
    std::vector<std::uint8_t> digits;
    digits.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int pos = lo; pos <= hi; ++pos) {
        int cls = position_class(pos, k);
        int j = position_index(pos, k);
        int q = j - shifts[static_cast<std::size_t>(cls - 1)] + 1;
        digits.push_back(static_cast<std::uint8_t>(comps[static_cast<std::size_t>(cls - 1)].digit(q)));
    }
    return BorderSequence::from_raw(lo, std::move(digits));
}

}  // namespace detail

/// k-core by per-subsequence squeeze: all 0s left, all 1s right in every
/// class, keeping the intrinsic medians where they are.
inline Partition k_core(const Partition& p, int k) {
    std::vector<int> shifts = median_shifts(p, k);
    std::vector<BorderSequence> empty_comps(static_cast<std::size_t>(k));
    return decode(detail::assemble(empty_comps, shifts, k));
}

inline QuotientDecomposition decompose(const Partition& p, int k) {
    QuotientDecomposition d;
    d.k = k;
    d.components = k_quotient(p, k);
    d.median_shifts = median_shifts(p, k);
    d.core = k_core(p, k);
    return d;
}

/// Inverse of (k_core, k_quotient). The core must have trivial k-quotient.
inline Partition reconstruct(const Partition& core, const std::vector<Partition>& components,
                             int k) {
    if (k < 2) throw std::invalid_argument("quotient parameter k must be at least 2");
    if (static_cast<int>(components.size()) != k)
        throw std::invalid_argument("reconstruct expects exactly k quotient components");
    for (const Partition& q : k_quotient(core, k))
        if (!q.empty()) throw std::invalid_argument("core argument has a nontrivial k-quotient");
    std::vector<int> shifts = median_shifts(core, k);
    std::vector<BorderSequence> seqs;
    seqs.reserve(components.size());
    for (const Partition& c : components) seqs.push_back(encode(c));
    return decode(detail::assemble(seqs, shifts, k));
}

}  // namespace rimhook
