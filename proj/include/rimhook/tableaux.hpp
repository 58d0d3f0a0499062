#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rimhook/bigint.hpp"
#include "rimhook/border_sequence.hpp"
#include "rimhook/partition.hpp"
#include "rimhook/quotient.hpp"

namespace rimhook {

/// One rim hook removal on a border sequence: the 1 at one_pos and the 0
/// at zero_pos swap places. zero_pos - one_pos is the hook length and the
/// height is the number of 0s strictly between the two digits.
struct HookRemoval {
    int one_pos = 0;
    int zero_pos = 0;
    int height = 0;
    int length() const { return zero_pos - one_pos; }
    friend bool operator==(const HookRemoval&, const HookRemoval&) = default;
};

struct RemovalResult {
    BorderSequence sequence;
    HookRemoval removal;
};

inline RemovalResult remove_hook(const BorderSequence& s, int one_pos, int zero_pos) {
    if (one_pos >= zero_pos)
        throw std::invalid_argument("hook removal needs the 1 strictly before the 0");
    if (s.digit(one_pos) != 1 || s.digit(zero_pos) != 0)
        throw std::invalid_argument("hook removal positions do not carry digits 1 and 0");
    // Both positions lie inside the window: 1s live in window+suffix and
    // 0s in prefix+window, and the combination rules the rays out.
    HookRemoval r;
    r.one_pos = one_pos;
    r.zero_pos = zero_pos;
    for (int pos = one_pos + 1; pos < zero_pos; ++pos)
        if (s.digit(pos) == 0) ++r.height;
    std::vector<std::uint8_t> digits = s.window();
    digits[static_cast<std::size_t>(one_pos - s.start())] = 0;
    digits[static_cast<std::size_t>(zero_pos - s.start())] = 1;
    return RemovalResult{BorderSequence::from_raw(s.start(), std::move(digits)), r};
}

/// A permutation in one-line notation, word[j] in 1..n.
struct Permutation {
    std::vector<int> word;

    int size() const { return static_cast<int>(word.size()); }

    long long inversions() const {
        long long inv = 0;
        for (std::size_t i = 0; i < word.size(); ++i)
            for (std::size_t j = i + 1; j < word.size(); ++j)
                if (word[i] > word[j]) ++inv;
        return inv;
    }

    int sign() const { return inversions() % 2 == 0 ? 1 : -1; }

    bool is_identity() const {
        for (std::size_t i = 0; i < word.size(); ++i)
            if (word[i] != static_cast<int>(i) + 1) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(word[i]);
        }
        return s;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// A rim hook tableau as a peeling chain: empty = chain[0] <= ... <=
/// chain[r] = shape, where step e removes a rim hook of length type[e-1]
/// (possibly empty). Removals are recorded with absolute positions, and
/// peeling executes from the largest entry down.
class RimHookTableau {
  public:
    RimHookTableau(Partition shape, std::vector<int> type, std::vector<Partition> chain,
                   std::vector<std::optional<HookRemoval>> removals)
        : shape_(std::move(shape)),
          type_(std::move(type)),
          chain_(std::move(chain)),
          removals_(std::move(removals)) {
        for (const auto& r : removals_)
            if (r) height_ += r->height;
    }

    const Partition& shape() const { return shape_; }
    const std::vector<int>& type() const { return type_; }
    const std::vector<Partition>& chain() const { return chain_; }
    const std::vector<std::optional<HookRemoval>>& removals() const { return removals_; }
    int entries() const { return static_cast<int>(type_.size()); }
    int height() const { return height_; }

    /// Row filling: rows()[i-1][j-1] is the entry occupying box (i, j).
    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(shape_.length()));
        for (int i = 1; i <= shape_.length(); ++i) {
            out[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(shape_.part(i)));
            for (int j = 1; j <= shape_.part(i); ++j) {
                for (int e = 1; e <= entries(); ++e) {
                    if (chain_[static_cast<std::size_t>(e)].part(i) >= j) {
                        out[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = e;
                        break;
                    }
                }
            }
        }
        return out;
    }

    friend bool operator==(const RimHookTableau& a, const RimHookTableau& b) {
        return a.type_ == b.type_ && a.chain_ == b.chain_;
    }

  private:
    Partition shape_;
    std::vector<int> type_;
    std::vector<Partition> chain_;
    std::vector<std::optional<HookRemoval>> removals_;
    int height_ = 0;
};

inline int tableau_height(const RimHookTableau& t) { return t.height(); }

/// All rim hook tableaux of the given shape and type (a weak composition,
/// zeros allowed). Deterministic order: peeling tries candidate removals
/// in increasing one_pos order at every step.
inline std::vector<RimHookTableau> enumerate_rht(const Partition& shape,
                                                 const std::vector<int>& type) {
    int total = 0;
    for (int t : type) {
        if (t < 0) throw std::invalid_argument("tableau type entries must be nonnegative");
        total += t;
    }
    if (total != shape.size())
        throw std::invalid_argument("tableau type does not sum to the shape size");

    int r = static_cast<int>(type.size());
    std::vector<RimHookTableau> out;
    std::vector<Partition> chain(static_cast<std::size_t>(r) + 1);
    std::vector<std::optional<HookRemoval>> removals(static_cast<std::size_t>(r));
    chain[static_cast<std::size_t>(r)] = shape;

    auto peel = [&](auto&& self, const BorderSequence& seq, int e) -> void {
        if (e == 0) {
            out.emplace_back(shape, type, chain, removals);
            return;
        }
        int t = type[static_cast<std::size_t>(e - 1)];
        if (t == 0) {
            removals[static_cast<std::size_t>(e - 1)] = std::nullopt;
            chain[static_cast<std::size_t>(e - 1)] = chain[static_cast<std::size_t>(e)];
            self(self, seq, e - 1);
            return;
        }
        for (int one_pos : seq.one_positions()) {
            if (seq.digit(one_pos + t) != 0) continue;
            RemovalResult res = remove_hook(seq, one_pos, one_pos + t);
            removals[static_cast<std::size_t>(e - 1)] = res.removal;
            chain[static_cast<std::size_t>(e - 1)] = decode(res.sequence);
            self(self, res.sequence, e - 1);
        }
    };
    peel(peel, encode(shape), r);
    return out;
}

/// Zero permutation of a tableau: label the window zeros of the shape's
/// sequence 1..l left to right, peel in order of decreasing entries (each
/// removal moves one labeled zero left), and read the labels left to
/// right at the end.
inline Permutation zero_permutation(const RimHookTableau& t) {
    BorderSequence s = encode(t.shape());
    std::vector<std::pair<int, int>> zeros;  // (position, label)
    {
        int label = 1;
        for (int pos : s.zero_positions()) zeros.emplace_back(pos, label++);
    }
    for (int e = t.entries(); e >= 1; --e) {
        const auto& r = t.removals()[static_cast<std::size_t>(e - 1)];
        if (!r) continue;
        for (auto& [pos, label] : zeros)
            if (pos == r->zero_pos) {
                pos = r->one_pos;
                break;
            }
    }
    std::sort(zeros.begin(), zeros.end());
    Permutation p;
    p.word.reserve(zeros.size());
    for (auto& [pos, label] : zeros) p.word.push_back(label);
    return p;
}

/// sign(pi_lambda) for a shape with empty k-core: squeeze the labeled
/// zeros left within each mod-k subsequence (their order inside a class
/// never changes) and count label inversions. No tableau needed.
inline int lambda_sign(const Partition& p, int k) {
    if (!has_empty_core(p, k))
        throw std::invalid_argument("lambda_sign requires an empty k-core");
    BorderSequence s = encode(p);
    std::vector<std::pair<int, int>> final_zeros;  // (squeezed position, label)
    std::vector<std::vector<int>> class_labels(static_cast<std::size_t>(k));
    {
        int label = 1;
        for (int pos : s.zero_positions())
            class_labels[static_cast<std::size_t>(position_class(pos, k) - 1)].push_back(label++);
    }
    for (int cls = 1; cls <= k; ++cls) {
        const auto& labels = class_labels[static_cast<std::size_t>(cls - 1)];
        int z = static_cast<int>(labels.size());
        for (int j = 0; j < z; ++j)
            final_zeros.emplace_back(cls + k * (j - z), labels[static_cast<std::size_t>(j)]);
    }
    std::sort(final_zeros.begin(), final_zeros.end());
    Permutation perm;
    for (auto& [pos, label] : final_zeros) perm.word.push_back(label);
    return perm.sign();
}

/// Splits a tableau with empty-k-core shape and type k*mu (mu a partition)
/// into the k induced tableaux on the quotient components.
inline std::vector<RimHookTableau> omega_decompose(const RimHookTableau& t, int k) {
    if (k < 2) throw std::invalid_argument("omega parameter k must be at least 2");
    const auto& type = t.type();
    for (std::size_t i = 0; i < type.size(); ++i) {
        if (type[i] <= 0 || type[i] % k != 0)
            throw std::invalid_argument("omega requires every hook length positive and divisible by k");
        if (i > 0 && type[i] > type[i - 1])
            throw std::invalid_argument("omega requires a partition type (weakly decreasing)");
    }
    if (!has_empty_core(t.shape(), k))
        throw std::invalid_argument("omega requires a shape with empty k-core");

    std::vector<Partition> comps = k_quotient(t.shape(), k);
    std::vector<std::vector<int>> entries_by_class(static_cast<std::size_t>(k));
    for (int e = 1; e <= t.entries(); ++e) {
        const auto& r = t.removals()[static_cast<std::size_t>(e - 1)];
        entries_by_class[static_cast<std::size_t>(position_class(r->one_pos, k) - 1)].push_back(e);
    }

    std::vector<RimHookTableau> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int cls = 1; cls <= k; ++cls) {
        const auto& entries = entries_by_class[static_cast<std::size_t>(cls - 1)];
        int r_i = static_cast<int>(entries.size());
        std::vector<int> sub_type;
        sub_type.reserve(entries.size());
        for (int e : entries) sub_type.push_back(type[static_cast<std::size_t>(e - 1)] / k);
        std::vector<Partition> chain(static_cast<std::size_t>(r_i) + 1);
        std::vector<std::optional<HookRemoval>> removals(static_cast<std::size_t>(r_i));
        const Partition& comp = comps[static_cast<std::size_t>(cls - 1)];
        chain[static_cast<std::size_t>(r_i)] = comp;
        BorderSequence seq = encode(comp);
        for (int j = r_i; j >= 1; --j) {
            const HookRemoval& global = *t.removals()[static_cast<std::size_t>(
                entries[static_cast<std::size_t>(j - 1)] - 1)];
            int q1 = position_index(global.one_pos, k) + 1;
            int q2 = position_index(global.zero_pos, k) + 1;
            RemovalResult res = remove_hook(seq, q1, q2);
            removals[static_cast<std::size_t>(j - 1)] = res.removal;
            chain[static_cast<std::size_t>(j - 1)] = decode(res.sequence);
            seq = res.sequence;
        }
        out.emplace_back(comp, std::move(sub_type), std::move(chain), std::move(removals));
    }
    return out;
}

/// Centralizer order of a permutation of cycle type mu:
/// z_mu = m1! 1^m1 * m2! 2^m2 * ..., with z of the empty type 1.
inline Int z_value(const Partition& mu) {
    Int z = 1;
    const auto& parts = mu.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        int mult = static_cast<int>(j - i);
        z *= factorial(mult) * int_pow(Int(parts[i]), mult);
        i = j;
    }
    return z;
}

/// Number of preimages of a tuple under omega: z_mu / (z_mu1 ... z_muk).
/// The division is always exact.
inline Int omega_fiber_size(const Partition& mu, const std::vector<Partition>& mus) {
    std::vector<int> merged;
    for (const Partition& m : mus)
        merged.insert(merged.end(), m.parts().begin(), m.parts().end());
    std::sort(merged.rbegin(), merged.rend());
    if (merged != mu.parts())
        throw std::invalid_argument("component types do not merge to the given type");
    Int denom = 1;
    for (const Partition& m : mus) denom *= z_value(m);
    Int num = z_value(mu);
    if (num % denom != 0) throw std::logic_error("omega fiber size is not integral");
    return num / denom;
}

/// Decomposes a removal of length k*t into t valid removals of length k
/// with the same final sequence: every 1 strictly between the endpoints,
/// processed right to left, advances class-step by class-step to the slot
/// of the next 1 (the rightmost advances to zero_pos).
inline std::vector<HookRemoval> split_long_hook(const BorderSequence& s, int one_pos,
                                                int zero_pos, int k) {
    if (k < 1) throw std::invalid_argument("split parameter k must be positive");
    if (s.digit(one_pos) != 1 || s.digit(zero_pos) != 0 || one_pos >= zero_pos)
        throw std::invalid_argument("invalid hook removal for split");
    if ((zero_pos - one_pos) % k != 0)
        throw std::invalid_argument("hook length is not divisible by k");

    std::vector<int> tokens{one_pos};
    for (int pos = one_pos + k; pos < zero_pos; pos += k)
        if (s.digit(pos) == 1) tokens.push_back(pos);

    std::vector<HookRemoval> removals;
    BorderSequence cur = s;
    for (std::size_t i = tokens.size(); i-- > 0;) {
        int target = (i + 1 < tokens.size()) ? tokens[i + 1] : zero_pos;
        for (int pos = tokens[i]; pos < target; pos += k) {
            RemovalResult res = remove_hook(cur, pos, pos + k);
            removals.push_back(res.removal);
            cur = res.sequence;
        }
    }
    return removals;
}

}  // namespace rimhook
