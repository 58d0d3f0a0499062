#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "rimhook/bigint.hpp"
#include "rimhook/characters.hpp"
#include "rimhook/partition.hpp"
#include "rimhook/quotient.hpp"
#include "rimhook/series.hpp"
#include "rimhook/tableaux.hpp"

namespace rimhook {

/// A dominant SU(k) weight, stored as the weakly decreasing tuple
/// coords[i] = lambda_{i+1} - lambda_k of its minimal partition
/// representative (lambda_k = 0 implicit).
struct DominantWeight {
    int k = 2;
    std::vector<int> coords;

    DominantWeight(int k_, std::vector<int> coords_) : k(k_), coords(std::move(coords_)) {
        if (k < 2) throw std::invalid_argument("weight rank k must be at least 2");
        if (static_cast<int>(coords.size()) != k - 1)
            throw std::invalid_argument("weight needs exactly k-1 coordinates");
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i] < 0)
                throw std::invalid_argument("weight coordinate at index " + std::to_string(i) +
                                            " is negative");
            if (i > 0 && coords[i] > coords[i - 1])
                throw std::invalid_argument("weight coordinate at index " + std::to_string(i) +
                                            " breaks the weakly decreasing order");
        }
    }

    /// The representative with lambda_k = 0.
    Partition minimal_partition() const {
        std::vector<int> parts;
        for (int c : coords)
            if (c > 0) parts.push_back(c);
        return Partition(std::move(parts));
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(coords[i]);
        }
        return s;
    }

    friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
    friend auto operator<=>(const DominantWeight& a, const DominantWeight& b) {
        return a.coords <=> b.coords;
    }
};

/// Weight of a partition with at most k parts: coords[i] = lambda_{i+1} - lambda_k.
inline DominantWeight weight_of(const Partition& lambda, int k) {
    if (lambda.length() > k)
        throw std::invalid_argument("partition has more parts than the weight rank k");
    std::vector<int> coords;
    coords.reserve(static_cast<std::size_t>(k) - 1);
    for (int i = 1; i <= k - 1; ++i) coords.push_back(lambda.part(i) - lambda.part(k));
    return DominantWeight(k, std::move(coords));
}

namespace detail {

/// Staircase values u_i = lambda_i + k - i for the minimal representative.
inline std::vector<long long> staircase(const DominantWeight& w) {
    std::vector<long long> u(static_cast<std::size_t>(w.k));
    for (int i = 1; i <= w.k; ++i) {
        int li = (i <= w.k - 1) ? w.coords[static_cast<std::size_t>(i - 1)] : 0;
        u[static_cast<std::size_t>(i - 1)] = li + w.k - i;
    }
    return u;
}

inline int word_sign(const std::vector<int>& word) {
    long long inv = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace detail

/// epsilon by residue arithmetic alone: 0 unless the staircase values
/// u_i = lambda_i + k - i take k distinct residues mod k; otherwise the
/// sign of the permutation carrying the residues of lambda_i - p + k - i
/// (p = sum lambda_i / k) to the sequence k - i.
inline int epsilon_closed(const DominantWeight& w) {
    int k = w.k;
    std::vector<long long> u = detail::staircase(w);
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (long long ui : u) {
        auto r = static_cast<std::size_t>(((ui % k) + k) % k);
        if (seen[r]) return 0;
        seen[r] = true;
    }
    long long total = 0;
    for (int c : w.coords) total += c;
    long long p = total / k;  // distinct residues force k | total
    std::vector<int> word(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        long long v = ((u[static_cast<std::size_t>(i)] - p) % k + k) % k;
        word[static_cast<std::size_t>(i)] = k - static_cast<int>(v);
    }
    return detail::word_sign(word);
}

/// epsilon through the quotient machinery: 0 unless the k-core is empty
/// and every quotient component is empty or a single row, otherwise
/// (-1)^{(k-1)p} sign(pi_lambda).
inline int epsilon_theorem(const Partition& lambda, int k) {
    if (lambda.length() > k)
        throw std::invalid_argument("epsilon requires at most k parts");
    if (lambda.size() % k != 0) return 0;  // the k-core cannot be empty
    if (!has_empty_core(lambda, k)) return 0;
    for (const Partition& comp : k_quotient(lambda, k))
        if (comp.length() >= 2) return 0;
    int p = lambda.size() / k;
    int rep_sign = ((k - 1) * p) % 2 == 0 ? 1 : -1;
    return rep_sign * lambda_sign(lambda, k);
}

/// epsilon as the raw character average (-1)^{(k-1)p} sum_{mu|-p}
/// chi^lambda_{k mu} / z_mu, evaluated in exact rationals with plain MN
/// characters only. The oracle route: slow, independent of the others.
inline Int epsilon_bruteforce(const Partition& lambda, int k) {
    if (k < 2) throw std::invalid_argument("epsilon requires k >= 2");
    if (lambda.length() > k)
        throw std::invalid_argument("epsilon requires at most k parts");
    if (lambda.size() % k != 0) return 0;  // nonempty k-core
    int p = lambda.size() / k;
    Rational sum = 0;
    for (const Partition& mu : partitions_of(p)) {
        std::vector<int> scaled;
        scaled.reserve(mu.parts().size());
        for (int part : mu.parts()) scaled.push_back(part * k);
        sum += Rational(mn_character(lambda, Partition(std::move(scaled))), z_value(mu));
    }
    if (denominator(sum) != 1)
        throw std::logic_error("epsilon character average is not an integer");
    Int eps1 = numerator(sum);
    return ((k - 1) * p) % 2 == 0 ? eps1 : Int(-eps1);
}

/// Weyl dimension, type A: prod_{i<j} (u_i - u_j) / (j - i).
inline Int weyl_dim(const DominantWeight& w) {
    std::vector<long long> u = detail::staircase(w);
    Int num = 1, den = 1;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            num *= Int(u[i] - u[j]);
            den *= Int(j - i);
        }
    if (num % den != 0) throw std::logic_error("Weyl dimension is not integral");
    return num / den;
}

/// Exponent of the weight in the phi-power series:
/// [sum u_i^2 - (sum u_i)^2/k - k(k^2-1)/12] / (2k), an integer whenever
/// epsilon is nonzero.
inline Rational c_exponent(const DominantWeight& w) {
    int k = w.k;
    std::vector<long long> u = detail::staircase(w);
    long long s1 = 0, s2 = 0;
    for (long long ui : u) {
        s1 += ui;
        s2 += ui * ui;
    }
    Rational c = Rational(s2) - Rational(s1 * s1, k) -
                 Rational(static_cast<long long>(k) * (static_cast<long long>(k) * k - 1), 12);
    return c / (2 * k);
}

inline long long c_exponent_int(const DominantWeight& w) {
    Rational c = c_exponent(w);
    if (denominator(c) != 1)
        throw std::logic_error("exponent c is not integral for this weight");
    return numerator(c).convert_to<long long>();
}

namespace detail {

inline long long ceil_isqrt(long long v) {
    long long r = 0;
    while (r * r < v) ++r;
    return r;
}

}  // namespace detail

/// Every dominant weight with epsilon_closed != 0 and c <= order, each
/// exactly once, sorted by exponent then lexicographically by coords.
/// The search iterates weakly decreasing minimal representatives with
/// lambda_1 <= ceil(sqrt(4kN + k^2(k^2-1)/6)) + k and prunes prefixes by
/// a monotone lower bound on c; completeness is certified by the exact
/// series match against the direct phi-power oracle.
inline std::vector<DominantWeight> enumerate_weights(int k, int order) {
    if (k < 2) throw std::invalid_argument("weight rank k must be at least 2");
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    long long kk = k;
    long long bound =
        detail::ceil_isqrt(4 * kk * order + kk * kk * (kk * kk - 1) / 6) + k;

    std::vector<std::pair<long long, DominantWeight>> found;
    std::vector<int> coords(static_cast<std::size_t>(k - 1));
    // Prefix lower bound: with P the chosen u_i plus the forced u_k = 0,
    // sum over all k of (u_i - mean)^2 is at least min_a sum_{x in P}(x-a)^2
    // = S2 - S1^2/|P|, and c grows monotonically with that sum.
    auto prefix_prunes = [&](int filled) {
        long long s1 = 0, s2 = 0, count = filled + 1;  // + the u_k = 0 slot
        for (int i = 0; i < filled; ++i) {
            long long ui = coords[static_cast<std::size_t>(i)] + k - (i + 1);
            s1 += ui;
            s2 += ui * ui;
        }
        // c > order  <=>  12(count*S2 - S1^2) > count*k*((k^2-1) + 24*order)
        return 12 * (count * s2 - s1 * s1) > count * kk * ((kk * kk - 1) + 24 * order);
    };
    auto search = [&](auto&& self, int i, int max_value) -> void {
        if (i == k - 1) {
            DominantWeight w(k, coords);
            if (epsilon_closed(w) == 0) return;
            long long c = c_exponent_int(w);
            if (c > order) return;
            found.emplace_back(c, std::move(w));
            return;
        }
        for (int v = 0; v <= max_value; ++v) {
            coords[static_cast<std::size_t>(i)] = v;
            if (prefix_prunes(i + 1)) break;  // c only grows with larger prefix values
            self(self, i + 1, v);
        }
    };
    search(search, 0, static_cast<int>(bound));

    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second.coords < b.second.coords;
    });
    std::vector<DominantWeight> out;
    out.reserve(found.size());
    for (auto& [c, w] : found) out.push_back(std::move(w));
    return out;
}

struct KostantTerm {
    DominantWeight weight;
    int epsilon = 0;
    Int dim;
    long long exponent = 0;
};

/// All nonzero terms epsilon * dim V * x^c with c <= order, sorted by
/// exponent then lexicographically by weight.
inline std::vector<KostantTerm> term_table(int k, int order) {
    std::vector<KostantTerm> out;
    for (DominantWeight& w : enumerate_weights(k, order)) {
        KostantTerm t{w, epsilon_closed(w), weyl_dim(w), c_exponent_int(w)};
        out.push_back(std::move(t));
    }
    return out;
}

/// The expansion of phi(x)^{k^2-1} assembled from the weight sum. Terms
/// are independent, so they are computed in parallel chunks and merged by
/// exact addition; the result is deterministic regardless of schedule.
inline PowerSeries kostant_series(int k, int order) {
    std::vector<DominantWeight> weights = enumerate_weights(k, order);
    PowerSeries out(order);

    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(), 8);
    if (workers < 2 || weights.size() < 64) {
        for (const DominantWeight& w : weights)
            out.add_coeff(static_cast<int>(c_exponent_int(w)), Int(epsilon_closed(w)) * weyl_dim(w));
        return out;
    }

    std::vector<std::vector<Int>> partial(workers, std::vector<Int>(static_cast<std::size_t>(order) + 1));
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        threads.emplace_back([&, t] {
            for (std::size_t i = t; i < weights.size(); i += workers) {
                const DominantWeight& w = weights[i];
                auto c = static_cast<std::size_t>(c_exponent_int(w));
                partial[t][c] += Int(epsilon_closed(w)) * weyl_dim(w);
            }
        });
    }
    for (auto& th : threads) th.join();
    for (const auto& local : partial)
        for (int e = 0; e <= order; ++e)
            if (local[static_cast<std::size_t>(e)] != 0)
                out.add_coeff(e, local[static_cast<std::size_t>(e)]);
    return out;
}

}  // namespace rimhook
