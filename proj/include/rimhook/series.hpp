#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rimhook/bigint.hpp"

namespace rimhook {

/// Truncated formal power series with exact integer coefficients, dense
/// storage for exponents 0..order. Arithmetic truncates past the order.
class PowerSeries {
  public:
    explicit PowerSeries(int order) : order_(order) {
        if (order < 0) throw std::invalid_argument("series order must be nonnegative");
        coeffs_.resize(static_cast<std::size_t>(order) + 1);
    }

    static PowerSeries one(int order) {
        PowerSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    int order() const { return order_; }

    const Int& coeff(int exponent) const {
        return coeffs_.at(static_cast<std::size_t>(exponent));
    }

    void set_coeff(int exponent, Int value) {
        coeffs_.at(static_cast<std::size_t>(exponent)) = std::move(value);
    }

    void add_coeff(int exponent, const Int& value) {
        coeffs_.at(static_cast<std::size_t>(exponent)) += value;
    }

    /// Nonzero terms as (exponent, coefficient) pairs.
    std::vector<std::pair<int, Int>> terms() const {
        std::vector<std::pair<int, Int>> out;
        for (int e = 0; e <= order_; ++e)
            if (coeffs_[static_cast<std::size_t>(e)] != 0)
                out.emplace_back(e, coeffs_[static_cast<std::size_t>(e)]);
        return out;
    }

    std::string to_string() const {
        std::string s;
        for (const auto& [e, c] : terms()) {
            bool negative = c < 0;
            Int mag = negative ? Int(-c) : c;
            if (s.empty())
                s += negative ? "-" : "";
            else
                s += negative ? " - " : " + ";
            if (mag != 1 || e == 0) s += mag.str();
            if (e >= 1) {
                if (mag != 1) s += "*";
                s += e == 1 ? "x" : "x^" + std::to_string(e);
            }
        }
        return s.empty() ? "0" : s;
    }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  private:
    int order_;
    std::vector<Int> coeffs_;
};

/// Euler phi(x) = prod (1 - x^n), truncated: sparse pentagonal-number
/// form, coefficient (-1)^m at exponent m(3m-1)/2 for every integer m.
inline PowerSeries phi(int order) {
    PowerSeries s(order);
    s.set_coeff(0, 1);
    for (int m = 1;; ++m) {
        long long g1 = static_cast<long long>(m) * (3LL * m - 1) / 2;
        long long g2 = static_cast<long long>(m) * (3LL * m + 1) / 2;
        if (g1 > order && g2 > order) break;
        int sign = (m % 2 == 0) ? 1 : -1;
        if (g1 <= order) s.add_coeff(static_cast<int>(g1), sign);
        if (g2 <= order) s.add_coeff(static_cast<int>(g2), sign);
    }
    return s;
}

/// Cauchy product truncated to the common order.
inline PowerSeries multiply(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series orders must match for multiplication");
    PowerSeries out(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j <= a.order(); ++j) {
            if (b.coeff(j) == 0) continue;
            out.add_coeff(i + j, a.coeff(i) * b.coeff(j));
        }
    }
    return out;
}

inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    return multiply(a, b);
}

/// a^d by binary exponentiation, d >= 1.
inline PowerSeries power(const PowerSeries& a, int d) {
    if (d < 1) throw std::invalid_argument("series power requires a positive exponent");
    PowerSeries result = PowerSeries::one(a.order());
    PowerSeries base = a;
    while (d > 0) {
        if (d & 1) result = multiply(result, base);
        d >>= 1;
        if (d > 0) base = multiply(base, base);
    }
    return result;
}

}  // namespace rimhook
