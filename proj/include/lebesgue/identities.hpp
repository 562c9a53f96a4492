#pragma once

// Both sides of the Lebesgue identity and of three related q-series
// identities, built as truncated series, plus coefficientwise comparison.
//
//   lebesgue: sum_k (-aq;q)_k / (q;q)_k q^{k(k+1)/2}  =  (-aq^2;q^2)_inf (-q;q)_inf
//   rv:       sum_m q^{m(m+1)/2} (z;q)_m / (q;q)_m alpha^m
//               = (z;q)_inf (-alpha q;q)_inf sum_n z^n / ((q;q)_n (-alpha q;q)_n)
//   fu:       sum_n (-aq;q)_n / (q;q)_n b^n q^{n(n+1)/2}
//               = (-bq;q)_inf sum_k (ab)^k q^{k(k+1)} / ((q;q)_k (-bq;q)_k)
//   rowell:   sum_{n<=L} [L,n]_q (-aq;q)_n q^{n(n+1)/2}
//               = sum_{k<=L} [L,k]_{q^2} (-q;q)_{L-k} a^k q^{k(k+1)}

#include <optional>
#include <string>

#include "lebesgue/series.hpp"

namespace lebesgue {

inline constexpr int kDefaultSeriesCap = 40;

enum class Identity { Lebesgue, RV, Fu, Rowell };

[[nodiscard]] Identity parse_identity(const std::string& name);
[[nodiscard]] std::string to_string(Identity id);

[[nodiscard]] TruncatedSeries lebesgue_lhs(int order);
[[nodiscard]] TruncatedSeries lebesgue_rhs(int order);

/**
 * The rv right side has an unbounded power of z at every fixed power of q,
 * so both rv sides are computed modulo z^{z_cap+1}. The default cap is two
 * above the largest z-degree the left side can reach at this order.
 */
[[nodiscard]] int rv_default_z_cap(int order);
[[nodiscard]] TruncatedSeries rv_lhs(int order, int z_cap);
[[nodiscard]] TruncatedSeries rv_rhs(int order, int z_cap);

[[nodiscard]] TruncatedSeries fu_lhs(int order);
[[nodiscard]] TruncatedSeries fu_rhs(int order);

[[nodiscard]] TruncatedSeries rowell_lhs(int L, int order);
[[nodiscard]] TruncatedSeries rowell_rhs(int L, int order);

struct Discrepancy {
    int q_exponent = 0;
    Monomial monomial;
    Integer lhs;
    Integer rhs;
};

struct IdentityReport {
    Identity identity = Identity::Lebesgue;
    int order = 0;
    std::optional<int> L;
    std::optional<int> z_cap;
    bool equal = false;
    std::optional<Discrepancy> first_difference;
    TruncatedSeries lhs{0};
    TruncatedSeries rhs{0};
};

/// First differing (q-exponent, monomial) in ascending order, if any.
[[nodiscard]] std::optional<Discrepancy> first_difference(const TruncatedSeries& x, const TruncatedSeries& y);

/// Builds both sides and compares them. @p L is required for rowell and rejected otherwise.
[[nodiscard]] IdentityReport verify_identity(Identity id, int order, std::optional<int> L = std::nullopt,
                                             int cap = kDefaultSeriesCap);

}  // namespace lebesgue
