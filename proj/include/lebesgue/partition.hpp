#pragma once

// Integer partitions and the statistics used by the Lebesgue bijection.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lebesgue {

/// Input that violates a documented precondition (bad parts, broken pair constraints).
class InvalidInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A size or weight above the configured desk-scale bound.
class LimitExceeded : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Internal consistency violation; should be unreachable on valid input.
class ConsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Upper bound on the weight (and hence any part) of a partition.
inline constexpr std::int64_t kMaxWeight = 10'000;

/**
 * A non-increasing finite sequence of positive integers.
 *
 * Instances are always canonical: every constructor path routes through
 * make_partition, which drops zeros and sorts largest-first. The empty
 * partition is the default-constructed value.
 */
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);

    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] int weight() const noexcept { return weight_; }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

    /// Largest part; 0 for the empty partition.
    [[nodiscard]] int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    /// Smallest part; 0 for the empty partition.
    [[nodiscard]] int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

    /// i-th part (0-based); parts past the end read as 0.
    [[nodiscard]] int part(int i) const noexcept {
        return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& x, const Partition& y) { return x.parts_ <=> y.parts_; }

  private:
    friend Partition make_partition(std::span<const std::int64_t> raw);
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Canonicalizes raw entries: drops zeros, sorts non-increasing. Rejects negatives
/// and weights above kMaxWeight.
[[nodiscard]] Partition make_partition(std::span<const std::int64_t> raw);
[[nodiscard]] Partition make_partition(std::span<const int> raw);

[[nodiscard]] Partition conjugate(const Partition& p);

/// p1 - p2 + p3 - p4 + ...
[[nodiscard]] std::int64_t alt_sum(const Partition& p);

[[nodiscard]] int num_odd_parts(const Partition& p);
[[nodiscard]] bool has_distinct_parts(const Partition& p);
[[nodiscard]] bool all_parts_even(const Partition& p);

/// Comma-separated parts, "" for the empty partition.
[[nodiscard]] std::string to_string(const Partition& p);

/// Like to_string but renders the empty partition as "∅"; for human-facing output.
[[nodiscard]] std::string display(const Partition& p);

/**
 * Parses the comma-separated textual form. Whitespace around entries is
 * ignored and the empty string is the empty partition.
 *
 * With @p require_canonical the entries must already be positive and
 * non-increasing; otherwise they are canonicalized like make_partition.
 */
[[nodiscard]] Partition parse_partition(std::string_view text, bool require_canonical = true);

}  // namespace lebesgue
