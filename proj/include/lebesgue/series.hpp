#pragma once

// Exact formal power series in q truncated at a fixed order, with sparse
// polynomial coefficients in the auxiliary symbols.

#include <optional>
#include <string>
#include <vector>

#include "lebesgue/polynomial.hpp"

namespace lebesgue {

/// A signed term coeff * monomial * q^q_power.
struct QTerm {
    Integer coeff = 1;
    Monomial monomial{};
    int q_power = 0;
};

class TruncatedSeries {
  public:
    /// The zero series truncated at q^order (inclusive).
    explicit TruncatedSeries(int order, DegreeCaps caps = {});

    static TruncatedSeries one(int order, DegreeCaps caps = {});
    static TruncatedSeries term(const QTerm& t, int order, DegreeCaps caps = {});

    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] const DegreeCaps& caps() const noexcept { return caps_; }

    /// Coefficient of q^e; zero for e outside [0, order].
    [[nodiscard]] const Polynomial& coefficient(int e) const;

    /// Adds p to the coefficient of q^e; ignored beyond the order.
    void add_to(int e, const Polynomial& p);

    [[nodiscard]] bool is_one() const;

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);
    friend TruncatedSeries operator+(TruncatedSeries x, const TruncatedSeries& y) { return x += y; }
    friend TruncatedSeries operator-(TruncatedSeries x, const TruncatedSeries& y) { return x -= y; }
    friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// Multiplies in place by (1 + t); O(order) polynomial operations.
    void mul_binomial(const QTerm& t);

    /// Divides in place by (1 + t); t must carry a positive q-power.
    void div_binomial(const QTerm& t);

    /// Multiplies every coefficient by coeff * monomial and shifts by q^q_power.
    [[nodiscard]] TruncatedSeries times(const QTerm& t) const;

    /// Terms sorted by q-exponent then monomial, e.g. "1 + q + a*q^2"; "0" if empty.
    [[nodiscard]] std::string to_string() const;

  private:
    void require_compatible(const TruncatedSeries& other) const;

    int order_;
    DegreeCaps caps_;
    std::vector<Polynomial> coeffs_;
};

[[nodiscard]] TruncatedSeries series_add(const TruncatedSeries& x, const TruncatedSeries& y);
[[nodiscard]] TruncatedSeries series_mul(const TruncatedSeries& x, const TruncatedSeries& y);

/// Multiplicative inverse; the constant coefficient must be the polynomial 1 or -1.
[[nodiscard]] TruncatedSeries series_inverse(const TruncatedSeries& x);

/**
 * Truncated q-shifted factorial (c; q^step)_count = prod_{k<count} (1 - c q^{k*step}),
 * where c = coeff * monomial * q^s. An empty @p count means the infinite product,
 * which requires s >= 1 and stops once the q-power exceeds the order.
 */
[[nodiscard]] TruncatedSeries pochhammer(const QTerm& c, int step, std::optional<int> count, int order,
                                         DegreeCaps caps = {});

/**
 * Gaussian binomial [L over n] in base q^step, as a truncated series.
 * Computed as (q^t;q^t)_L times the inverse of (q^t;q^t)_n (q^t;q^t)_{L-n}.
 * When n(L-n)step <= order the result is checked to be a polynomial of that degree.
 */
[[nodiscard]] TruncatedSeries gaussian_binomial(int L, int n, int step, int order);

}  // namespace lebesgue
