#pragma once

// Brute-force generation of partitions and of the pair sets P_n and Q_n.
// This module is the independent oracle for both the bijection and the
// q-series engine, so it never uses generating functions.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lebesgue/bijection.hpp"
#include "lebesgue/partition.hpp"

namespace lebesgue {

inline constexpr int kDefaultPartitionCap = 60;
inline constexpr int kDefaultPairCap = 25;

enum class PartConstraint { All, Distinct, DistinctEven, Even };

/// Parses "all", "distinct", "distinct-even", "even".
[[nodiscard]] PartConstraint parse_constraint(const std::string& name);

/// Partitions of n satisfying the constraint, in lexicographically descending order.
[[nodiscard]] std::vector<Partition> gen_partitions(int n, PartConstraint constraint,
                                                    int cap = kDefaultPartitionCap);

/// Ordered by |beta| ascending, then alpha descending, then beta descending.
[[nodiscard]] std::vector<PairP> enumerate_P(int n, int cap = kDefaultPairCap);

/// Ordered by |nu| ascending, then mu descending, then nu descending.
[[nodiscard]] std::vector<PairQ> enumerate_Q(int n, int cap = kDefaultPairCap);

enum class Side { P, Q };

/// Counts keyed by (k, j): k the refinement statistic, j the a-degree.
class Histogram {
  public:
    using Key = std::pair<std::int64_t, int>;

    void add(std::int64_t k, int j, std::uint64_t count = 1);

    [[nodiscard]] const std::map<Key, std::uint64_t>& entries() const noexcept { return entries_; }
    [[nodiscard]] std::uint64_t total() const noexcept { return total_; }
    [[nodiscard]] std::uint64_t at(std::int64_t k, int j) const;

    /// Counts by k alone.
    [[nodiscard]] std::map<std::int64_t, std::uint64_t> k_marginal() const;

    friend bool operator==(const Histogram&, const Histogram&) = default;

  private:
    std::map<Key, std::uint64_t> entries_;
    std::uint64_t total_ = 0;
};

/// P side: k = alt_sum(alpha) - n_o(beta), j = len(beta).
/// Q side: k = alt_sum(mu), j = len(nu).
[[nodiscard]] Histogram refinement_histogram(Side side, int n, int cap = kDefaultPairCap);

struct BijectionFailure {
    PairP pair;
    std::string reason;
    std::vector<StepTrace> trace;
};

struct BijectionReport {
    int max_n = 0;
    std::uint64_t checked = 0;
    std::vector<std::uint64_t> p_counts;  // |P_n| for n = 0..max_n
    std::vector<std::uint64_t> q_counts;  // |Q_n|
    std::uint64_t steps = 0;
    std::vector<BijectionFailure> failures;

    [[nodiscard]] bool passed() const noexcept { return failures.empty(); }
};

/**
 * Runs the forward map over every pair of P_n for n <= max_n and checks:
 * image inside Q_n, injectivity, surjectivity, |P_n| = |Q_n|, the inverse
 * round-trip, and the per-pair conserved quantities (weight, a-degree, and
 * alt_sum(mu) = alt_sum(alpha) - n_o(beta)). Violations are collected, not thrown.
 */
[[nodiscard]] BijectionReport verify_bijection_up_to(int max_n, int cap = kDefaultPairCap);

}  // namespace lebesgue
