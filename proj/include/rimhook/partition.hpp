#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rimhook {

/// An integer partition: weakly decreasing positive parts, no stored zeros.
/// The empty partition is the default value.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition part at index " + std::to_string(i) +
                                            " is not positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition part at index " + std::to_string(i) +
                                            " breaks the weakly decreasing order");
        }
    }

    /// Parses "4,4,3,2"; the empty string is the empty partition.
    static Partition parse(std::string_view text) {
        std::vector<int> parts;
        std::size_t begin = 0;
        while (begin <= text.size() && !text.empty()) {
            std::size_t comma = text.find(',', begin);
            std::string_view tok = text.substr(begin, comma == std::string_view::npos
                                                          ? std::string_view::npos
                                                          : comma - begin);
            while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
            while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
            if (tok.empty())
                throw std::invalid_argument("empty partition entry at index " +
                                            std::to_string(parts.size()));
            int value = 0;
            for (char c : tok) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("non-numeric partition entry at index " +
                                                std::to_string(parts.size()));
                value = value * 10 + (c - '0');
                if (value > 1'000'000'000)
                    throw std::invalid_argument("partition entry at index " +
                                                std::to_string(parts.size()) + " is too large");
            }
            parts.push_back(value);
            if (comma == std::string_view::npos) break;
            begin = comma + 1;
            if (begin == text.size())
                throw std::invalid_argument("empty partition entry at index " +
                                            std::to_string(parts.size()));
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }

    /// |lambda|, the number of boxes.
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    /// Number of (positive) parts.
    int length() const { return static_cast<int>(parts_.size()); }

    bool empty() const { return parts_.empty(); }

    /// 1-based part access; rows past the end are 0.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

  private:
    std::vector<int> parts_;
};

/// All partitions of n with at most max_parts parts (no limit when
/// max_parts < 0), in lexicographically decreasing order of part lists.
inline std::vector<Partition> partitions_of(int n, int max_parts = -1) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(Partition(cur));
            return;
        }
        if (max_parts >= 0 && static_cast<int>(cur.size()) >= max_parts) return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline void hash_combine(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

struct PartitionHash {
    std::size_t operator()(const Partition& p) const {
        std::size_t h = 0;
        for (int x : p.parts()) hash_combine(h, std::hash<int>{}(x));
        return h;
    }
};

}  // namespace rimhook
