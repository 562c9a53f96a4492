#pragma once

// The iterated map on triples (alpha, beta, gamma) and the resulting
// weight- and statistic-preserving bijection between the pair sets P and Q.
//
//   P: (alpha, beta), both distinct parts, largest part of beta <= length(alpha)
//   Q: (mu, nu), both distinct parts, nu has only even parts
//
// Both sets are generated by a^{len(beta)} q^{|alpha|+|beta|} and
// a^{len(nu)} q^{|mu|+|nu|} respectively.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lebesgue/partition.hpp"

namespace lebesgue {

struct PairP {
    Partition alpha;
    Partition beta;

    /// Validates the P constraints, throwing InvalidInput naming the first violated one.
    static PairP make(Partition alpha, Partition beta);
    friend bool operator==(const PairP&, const PairP&) = default;
    friend auto operator<=>(const PairP&, const PairP&) = default;
};

struct PairQ {
    Partition mu;
    Partition nu;

    static PairQ make(Partition mu, Partition nu);
    friend bool operator==(const PairQ&, const PairQ&) = default;
    friend auto operator<=>(const PairQ&, const PairQ&) = default;
};

/// Returns an empty string when (alpha, beta) is in P, else the violated constraint.
[[nodiscard]] std::string check_pair_p(const Partition& alpha, const Partition& beta);
[[nodiscard]] std::string check_pair_q(const Partition& mu, const Partition& nu);

/**
 * Working state of the iteration.
 *
 * Valid triples satisfy: (alpha, beta) in P; gamma has only even parts; and
 * either gamma is empty or its first len(beta) parts all equal gamma_1.
 * The last condition says every part of conj(gamma) is at least len(beta);
 * it implies len(gamma) >= len(beta) and is exactly what makes one step
 * invertible. Every triple reachable from (alpha, beta, ∅) satisfies it.
 */
struct BijectionTriple {
    Partition alpha;
    Partition beta;
    Partition gamma;

    friend bool operator==(const BijectionTriple&, const BijectionTriple&) = default;
    friend auto operator<=>(const BijectionTriple&, const BijectionTriple&) = default;
};

[[nodiscard]] std::string check_triple(const BijectionTriple& t);

/// |alpha| + |beta| + |gamma|
[[nodiscard]] std::int64_t total_weight(const BijectionTriple& t);

/// n_o(conj(alpha)) - n_o(beta); preserved by every step.
[[nodiscard]] std::int64_t conserved_statistic(const BijectionTriple& t);

enum class StepCase { Case1, Case2 };

[[nodiscard]] std::string to_string(StepCase c);

/**
 * One application of the map, always in forward orientation: `before` is
 * (alpha, beta, gamma) and `after` is (mu, lambda, nu), even when produced
 * by the inverse step.
 *
 * Construction checks conservation of weight and statistic and throws
 * ConsistencyError on violation.
 */
class StepTrace {
  public:
    StepTrace(StepCase case_taken, BijectionTriple before, BijectionTriple after);

    [[nodiscard]] StepCase case_taken() const noexcept { return case_; }
    [[nodiscard]] const BijectionTriple& before() const noexcept { return before_; }
    [[nodiscard]] const BijectionTriple& after() const noexcept { return after_; }
    [[nodiscard]] std::int64_t conserved_weight() const noexcept { return weight_; }
    [[nodiscard]] std::int64_t conserved_stat() const noexcept { return stat_; }

    friend bool operator==(const StepTrace&, const StepTrace&) = default;

  private:
    StepCase case_;
    BijectionTriple before_;
    BijectionTriple after_;
    std::int64_t weight_;
    std::int64_t stat_;
};

/// Number of StepTrace objects constructed (and therefore conservation-checked) by this process.
[[nodiscard]] std::uint64_t step_traces_checked() noexcept;

/**
 * Applies the map once.
 *
 * Case 1 (smallest part of beta is 1): mu = alpha with every part lowered by
 * one; lambda = beta with its 1 replaced by len(alpha)+1, then every part
 * lowered by two. Case 2 (smallest part >= 2): mu = alpha; lambda = beta
 * with every part lowered by two. In both cases nu = gamma with 2 added to
 * its first len(beta) parts (an empty gamma counts as len(beta) zeros).
 *
 * Throws InvalidInput for an empty beta or an invalid triple.
 */
[[nodiscard]] std::pair<BijectionTriple, StepTrace> phi_step(const BijectionTriple& t);

/**
 * Inverts phi_step. Input is (mu, lambda, nu); the returned triple is
 * (alpha, beta, gamma). Throws InvalidInput when the input is not in the
 * image of phi_step.
 */
[[nodiscard]] std::pair<BijectionTriple, StepTrace> phi_inverse_step(const BijectionTriple& t);

/// Iterates phi_step from (alpha, beta, ∅) until beta is empty.
[[nodiscard]] std::pair<PairQ, std::vector<StepTrace>> lebesgue_forward(const PairP& p);

/// Iterates phi_inverse_step from (mu, ∅, nu) until gamma is empty; takes nu_1/2 steps.
/// Steps are returned in the order they were undone (last forward step first).
[[nodiscard]] std::pair<PairP, std::vector<StepTrace>> lebesgue_inverse(const PairQ& q);

}  // namespace lebesgue
