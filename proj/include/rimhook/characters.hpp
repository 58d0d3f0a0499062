#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rimhook/bigint.hpp"
#include "rimhook/border_sequence.hpp"
#include "rimhook/partition.hpp"
#include "rimhook/quotient.hpp"
#include "rimhook/tableaux.hpp"

namespace rimhook {

namespace detail {

struct PartitionPairHash {
    std::size_t operator()(const std::pair<Partition, Partition>& key) const {
        std::size_t h = PartitionHash{}(key.first);
        hash_combine(h, PartitionHash{}(key.second));
        return h;
    }
};

}  // namespace detail

/// Memo table for the Murnaghan-Nakayama recursion, keyed on the pair
/// (shape, remaining cycle type). Unbounded by default; with a cap set,
/// overflowing inserts clear the whole table. Lookups and inserts take a
/// lock, so the cache can be shared across threads; the recursion itself
/// runs unlocked and duplicate concurrent work is benign because the
/// function is deterministic.
class CharacterCache {
  public:
    CharacterCache() = default;
    explicit CharacterCache(std::size_t max_entries) : cap_(max_entries) {}

    void set_cap(std::size_t max_entries) {
        std::lock_guard lock(mutex_);
        cap_ = max_entries;
    }

    std::size_t size() const {
        std::lock_guard lock(mutex_);
        return table_.size();
    }

    void clear() {
        std::lock_guard lock(mutex_);
        table_.clear();
    }

    /// Exact chi^lambda_mu via rim hook recursion, removing the largest
    /// remaining cycle first.
    Int character(const Partition& lambda, const Partition& mu) {
        if (lambda.size() != mu.size())
            throw std::invalid_argument("character requires |lambda| = |mu|");
        return compute(lambda, mu);
    }

  private:
    std::optional<Int> lookup(const std::pair<Partition, Partition>& key) const {
        std::lock_guard lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }

    void store(std::pair<Partition, Partition> key, const Int& value) {
        std::lock_guard lock(mutex_);
        if (cap_ && table_.size() >= *cap_) table_.clear();
        table_.emplace(std::move(key), value);
    }

    Int compute(const Partition& lambda, const Partition& mu) {
        if (lambda.empty()) return 1;
        auto key = std::make_pair(lambda, mu);
        if (auto hit = lookup(key)) return *hit;

        int t = mu.parts().front();
        Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
        BorderSequence s = encode(lambda);
        Int total = 0;
        for (int one_pos : s.one_positions()) {
            if (s.digit(one_pos + t) != 0) continue;
            RemovalResult res = remove_hook(s, one_pos, one_pos + t);
            Int sub = compute(decode(res.sequence), rest);
            if (res.removal.height % 2 == 0)
                total += sub;
            else
                total -= sub;
        }
        store(std::move(key), total);
        return total;
    }

    mutable std::mutex mutex_;
    std::unordered_map<std::pair<Partition, Partition>, Int, detail::PartitionPairHash> table_;
    std::optional<std::size_t> cap_;
};

inline CharacterCache& default_character_cache() {
    static CharacterCache cache;
    return cache;
}

inline Int mn_character(const Partition& lambda, const Partition& mu, CharacterCache& cache) {
    return cache.character(lambda, mu);
}

inline Int mn_character(const Partition& lambda, const Partition& mu) {
    return default_character_cache().character(lambda, mu);
}

/// All k-tuples of partitions with |mu_i| = sizes[i] whose parts merge to
/// mu. Distributes the multiplicity of each distinct part value over the
/// components, largest value first, so every component comes out sorted.
inline std::vector<std::vector<Partition>> split_type_tuples(const Partition& mu,
                                                             const std::vector<int>& sizes) {
    int k = static_cast<int>(sizes.size());
    std::vector<std::pair<int, int>> value_mult;  // (part value, multiplicity), descending
    for (int p : mu.parts()) {
        if (!value_mult.empty() && value_mult.back().first == p)
            ++value_mult.back().second;
        else
            value_mult.emplace_back(p, 1);
    }

    std::vector<std::vector<Partition>> out;
    std::vector<std::vector<int>> comp_parts(static_cast<std::size_t>(k));
    std::vector<int> remaining(sizes);

    auto place_value = [&](auto&& self, std::size_t vi) -> void {
        if (vi == value_mult.size()) {
            for (int r : remaining)
                if (r != 0) return;
            std::vector<Partition> tuple;
            tuple.reserve(static_cast<std::size_t>(k));
            for (auto& parts : comp_parts) tuple.emplace_back(Partition(parts));
            out.push_back(std::move(tuple));
            return;
        }
        auto [value, mult] = value_mult[vi];
        // Distribute `mult` copies of `value` over the k components.
        auto distribute = [&](auto&& dself, int comp, int left) -> void {
            if (comp == k - 1) {
                if (static_cast<long long>(left) * value > remaining[static_cast<std::size_t>(comp)])
                    return;
                for (int c = 0; c < left; ++c)
                    comp_parts[static_cast<std::size_t>(comp)].push_back(value);
                remaining[static_cast<std::size_t>(comp)] -= left * value;
                self(self, vi + 1);
                remaining[static_cast<std::size_t>(comp)] += left * value;
                comp_parts[static_cast<std::size_t>(comp)].resize(
                    comp_parts[static_cast<std::size_t>(comp)].size() - static_cast<std::size_t>(left));
                return;
            }
            int max_here = std::min<long long>(left, remaining[static_cast<std::size_t>(comp)] / value);
            for (int c = 0; c <= max_here; ++c) {
                for (int x = 0; x < c; ++x)
                    comp_parts[static_cast<std::size_t>(comp)].push_back(value);
                remaining[static_cast<std::size_t>(comp)] -= c * value;
                dself(dself, comp + 1, left - c);
                remaining[static_cast<std::size_t>(comp)] += c * value;
                comp_parts[static_cast<std::size_t>(comp)].resize(
                    comp_parts[static_cast<std::size_t>(comp)].size() - static_cast<std::size_t>(c));
            }
        };
        distribute(distribute, 0, mult);
    };
    place_value(place_value, 0);
    return out;
}

/// chi^lambda_{k*mu} through the k-quotient: zero when the k-core is
/// nonempty, otherwise sign(pi_lambda) times the fiber-weighted product
/// of component characters. Falls back to plain MN for k = 1.
inline Int littlewood_reduce(const Partition& lambda, int k, const Partition& mu) {
    if (k < 1) throw std::invalid_argument("littlewood_reduce requires k >= 1");
    if (lambda.size() != k * mu.size())
        throw std::invalid_argument("littlewood_reduce requires |lambda| = k|mu|");
    if (k == 1) return mn_character(lambda, mu);
    if (!has_empty_core(lambda, k)) return 0;

    std::vector<Partition> comps = k_quotient(lambda, k);
    std::vector<int> sizes;
    sizes.reserve(comps.size());
    for (const Partition& c : comps) sizes.push_back(c.size());

    Int z_mu = z_value(mu);
    Int total = 0;
    for (const auto& tuple : split_type_tuples(mu, sizes)) {
        Int denom = 1;
        for (const Partition& m : tuple) denom *= z_value(m);
        Int term = z_mu / denom;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (term == 0) break;
            term *= mn_character(comps[i], tuple[i]);
        }
        total += term;
    }
    return lambda_sign(lambda, k) * total;
}

namespace detail {

struct PartitionIntHash {
    std::size_t operator()(const std::pair<Partition, int>& key) const {
        std::size_t h = PartitionHash{}(key.first);
        hash_combine(h, std::hash<int>{}(key.second));
        return h;
    }
};

inline Int count_k_hook_peelings(const Partition& shape, int k) {
    static std::unordered_map<std::pair<Partition, int>, Int, PartitionIntHash> memo;
    static std::mutex memo_mutex;
    if (shape.empty()) return 1;
    auto key = std::make_pair(shape, k);
    {
        std::lock_guard lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    BorderSequence s = encode(shape);
    Int total = 0;
    for (int one_pos : s.one_positions()) {
        if (s.digit(one_pos + k) != 0) continue;
        total += count_k_hook_peelings(decode(remove_hook(s, one_pos, one_pos + k).sequence), k);
    }
    std::lock_guard lock(memo_mutex);
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace detail

/// chi^lambda at the rectangular type (k^p): sign(pi_lambda) times the
/// number of rim hook tableaux of that type, counted by memoized
/// recursion rather than enumeration.
inline Int char_rectangular(const Partition& lambda, int k) {
    if (k < 1 || lambda.size() % k != 0)
        throw std::invalid_argument("char_rectangular requires k dividing |lambda|");
    if (!has_empty_core(lambda, k)) return 0;
    return lambda_sign(lambda, k) * detail::count_k_hook_peelings(lambda, k);
}

/// Number of standard Young tableaux of the shape, by the hook length
/// product. Cross-checked against mn_character(lambda, (1^n)) in tests.
inline Int dimension(const Partition& lambda) {
    Partition conj = conjugate(lambda);
    Int hooks = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            hooks *= (lambda.part(i) - j) + (conj.part(j) - i) + 1;
    Int num = factorial(lambda.size());
    if (num % hooks != 0) throw std::logic_error("hook length product does not divide n!");
    return num / hooks;
}

}  // namespace rimhook
