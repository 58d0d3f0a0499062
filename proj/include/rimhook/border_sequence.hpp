#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rimhook/partition.hpp"

namespace rimhook {

/// Doubly infinite 0/1 boundary walk of a Young diagram: an implicit
/// all-0 prefix, a finite window, an implicit all-1 suffix.
///
/// Digit positions are integers. The median gap sits between positions 0
/// and 1: positions ..., -1, 0 lie before the gap and 1, 2, ... after it.
/// The median condition pins the gap: the number of 1s before it equals
/// the number of 0s after it. Canonically the window runs from the first
/// 1 to the last 0 (empty window = empty partition), so hook removals and
/// trims never move positions, only window bounds.
class BorderSequence {
  public:
    BorderSequence() = default;

    /// Builds from digits placed at consecutive positions starting at
    /// start_pos, trimming the implicit prefix/suffix and verifying the
    /// median condition. Throws if the claimed gap is not the median.
    static BorderSequence from_raw(int start_pos, std::vector<std::uint8_t> digits) {
        std::size_t lo = 0, hi = digits.size();
        while (lo < hi && digits[lo] == 0) ++lo;
        while (hi > lo && digits[hi - 1] == 1) --hi;
        BorderSequence s;
        s.window_.assign(digits.begin() + static_cast<std::ptrdiff_t>(lo),
                         digits.begin() + static_cast<std::ptrdiff_t>(hi));
        int first_pos = start_pos + static_cast<int>(lo);
        int before = 1 - first_pos;  // window digits at positions <= 0
        s.offset_ = std::clamp(before, 0, static_cast<int>(s.window_.size()));
        int ones_before = 0, zeros_after = 0;
        for (int i = 0; i < static_cast<int>(s.window_.size()); ++i) {
            if (i < s.offset_ && s.window_[static_cast<std::size_t>(i)] == 1) ++ones_before;
            if (i >= s.offset_ && s.window_[static_cast<std::size_t>(i)] == 0) ++zeros_after;
        }
        if (ones_before != zeros_after)
            throw std::invalid_argument("border sequence violates the median condition");
        return s;
    }

    /// Parses "…1101|0100…" (ellipses, ASCII "..." or none; the bar is
    /// the median gap). Throws when the bar is not at the median.
    static BorderSequence parse(std::string_view text) {
        auto strip = [](std::string_view& sv, std::string_view tok) {
            if (sv.substr(0, tok.size()) == tok) sv.remove_prefix(tok.size());
            if (sv.size() >= tok.size() && sv.substr(sv.size() - tok.size()) == tok)
                sv.remove_suffix(tok.size());
        };
        strip(text, "…");
        strip(text, "...");
        std::size_t bar = text.find('|');
        if (bar == std::string_view::npos)
            throw std::invalid_argument("border sequence is missing the median bar '|'");
        std::vector<std::uint8_t> digits;
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (i == bar || c == ' ') continue;
            if (c != '0' && c != '1')
                throw std::invalid_argument("border sequence contains a character other than 0, 1, |");
            digits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        int before_bar = 0;
        for (std::size_t i = 0; i < bar; ++i)
            if (text[i] == '0' || text[i] == '1') ++before_bar;
        return from_raw(1 - before_bar, std::move(digits));
    }

    const std::vector<std::uint8_t>& window() const { return window_; }
    int median_offset() const { return offset_; }
    bool empty_window() const { return window_.empty(); }

    /// Position of the first window digit (only meaningful when nonempty).
    int start() const { return 1 - offset_; }
    /// Position of the last window digit.
    int end() const { return static_cast<int>(window_.size()) - offset_; }

    int digit(int pos) const {
        if (window_.empty()) return pos >= 1 ? 1 : 0;
        if (pos < start()) return 0;
        if (pos > end()) return 1;
        return window_[static_cast<std::size_t>(pos - start())];
    }

    /// Positions of the window zeros, ascending. These are exactly the
    /// zeros following the first 1, one per nonempty row.
    std::vector<int> zero_positions() const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(window_.size()); ++i)
            if (window_[static_cast<std::size_t>(i)] == 0) out.push_back(start() + i);
        return out;
    }

    std::vector<int> one_positions() const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(window_.size()); ++i)
            if (window_[static_cast<std::size_t>(i)] == 1) out.push_back(start() + i);
        return out;
    }

    std::string to_string() const {
        if (window_.empty()) return "…00|11…";
        std::string s = "…";
        for (int i = 0; i < static_cast<int>(window_.size()); ++i) {
            if (i == offset_) s += '|';
            s += static_cast<char>('0' + window_[static_cast<std::size_t>(i)]);
        }
        s += "…";
        return s;
    }

    friend bool operator==(const BorderSequence&, const BorderSequence&) = default;

  private:
    std::vector<std::uint8_t> window_;
    int offset_ = 0;  // window digits strictly before the median gap
};

/// Boundary walk of the diagram, bottom row first: each row i contributes
/// lambda_i - lambda_{i+1} right steps (1s) and one up step (0).
inline BorderSequence encode(const Partition& p) {
    std::vector<std::uint8_t> digits;
    int len = p.length();
    for (int i = len; i >= 1; --i) {
        for (int j = 0; j < p.part(i) - p.part(i + 1); ++j) digits.push_back(1);
        digits.push_back(0);
    }
    // The median offset of a canonical sequence equals the number of
    // window zeros, i.e. the length of the partition.
    return BorderSequence::from_raw(1 - len, std::move(digits));
}

/// Row i is the number of 1s left of the i-th (from the right) 0.
inline Partition decode(const BorderSequence& s) {
    std::vector<int> rows;  // collected bottom-to-top
    int ones = 0;
    for (std::uint8_t d : s.window()) {
        if (d == 1)
            ++ones;
        else
            rows.push_back(ones);
    }
    std::reverse(rows.begin(), rows.end());
    return Partition(std::move(rows));
}

/// |lambda| as the inversion count of the sequence: pairs (i, j) with
/// i < j, digit 1 at i and digit 0 at j.
inline long long size_by_inversions(const BorderSequence& s) {
    long long inversions = 0, zeros_right = 0;
    const auto& w = s.window();
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i] == 0)
            ++zeros_right;
        else
            inversions += zeros_right;
    }
    return inversions;
}

/// Transpose: reverse the window, flip every bit, reflect positions about
/// the median gap (p -> 1 - p).
inline Partition conjugate(const Partition& p) {
    BorderSequence s = encode(p);
    if (s.empty_window()) return Partition();
    std::vector<std::uint8_t> digits(s.window().rbegin(), s.window().rend());
    for (auto& d : digits) d = static_cast<std::uint8_t>(1 - d);
    return decode(BorderSequence::from_raw(1 - s.end(), std::move(digits)));
}

/// Frobenius coordinates (alpha | beta): 0-based arm/leg lengths, so the
/// single box is (0 | 0).
struct FrobeniusCoordinates {
    std::vector<int> alphas;
    std::vector<int> betas;
    int durfee() const { return static_cast<int>(alphas.size()); }
};

inline FrobeniusCoordinates frobenius(const Partition& p) {
    BorderSequence s = encode(p);
    FrobeniusCoordinates fc;
    for (int pos : s.zero_positions())
        if (pos >= 1) fc.alphas.push_back(pos - 1);
    for (int pos : s.one_positions())
        if (pos <= 0) fc.betas.push_back(-pos);
    std::sort(fc.alphas.rbegin(), fc.alphas.rend());
    std::sort(fc.betas.rbegin(), fc.betas.rend());
    return fc;
}

}  // namespace rimhook
