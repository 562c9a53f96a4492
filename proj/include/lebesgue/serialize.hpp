#pragma once

// JSON and CSV forms of partitions, traces, reports, histograms and series.
// All JSON uses ordered objects so that dumps are byte-stable.

#include <string>
#include <vector>

#include <json.hpp>

#include "lebesgue/bijection.hpp"
#include "lebesgue/enumeration.hpp"
#include "lebesgue/identities.hpp"
#include "lebesgue/series.hpp"

namespace lebesgue {

using Json = nlohmann::ordered_json;

[[nodiscard]] Json partition_to_json(const Partition& p);
/// Accepts an array of positive, non-increasing integers.
[[nodiscard]] Partition partition_from_json(const Json& j);

/// {case, alpha, beta, gamma, mu, lambda, nu, weight, stat}
[[nodiscard]] Json step_to_json(const StepTrace& s);
/// Rebuilds the step, re-running its conservation checks.
[[nodiscard]] StepTrace step_from_json(const Json& j);

/// A full forward run: the P pair, every step, and the resulting Q pair.
struct ForwardTrace {
    PairP input;
    std::vector<StepTrace> steps;
    PairQ output;

    friend bool operator==(const ForwardTrace&, const ForwardTrace&) = default;
};

/// An inverse run: the Q pair, the undone steps, and the recovered P pair.
struct InverseTrace {
    PairQ input;
    std::vector<StepTrace> steps;
    PairP output;

    friend bool operator==(const InverseTrace&, const InverseTrace&) = default;
};

[[nodiscard]] ForwardTrace trace_forward(const PairP& p);
[[nodiscard]] InverseTrace trace_inverse(const PairQ& q);

/// {input: {alpha, beta}, steps: [...], output: {mu, nu}}
[[nodiscard]] Json forward_trace_to_json(const ForwardTrace& t);
[[nodiscard]] ForwardTrace forward_trace_from_json(const Json& j);

/// {input: {mu, nu}, steps: [...], output: {alpha, beta}}
[[nodiscard]] Json inverse_trace_to_json(const InverseTrace& t);
[[nodiscard]] InverseTrace inverse_trace_from_json(const Json& j);

/**
 * Replays a forward trace document against the map and lists every
 * discrepancy: a step whose image or case disagrees with phi_step, a step
 * that does not continue from the previous state, wrong recorded weight or
 * statistic, an unfinished run, or an output that is not the final state.
 * Schema problems (missing fields, malformed partitions) throw InvalidInput.
 */
[[nodiscard]] std::vector<std::string> audit_forward_trace(const Json& j);

/// {n, checked, passed, failures: [{pair, reason, trace}]}
[[nodiscard]] Json bijection_report_to_json(const BijectionReport& r);

/// "n,k,j,count" header followed by one row per (k, j) key.
[[nodiscard]] std::string histogram_to_csv(int n, const Histogram& h);
[[nodiscard]] Json histogram_to_json(int n, const Histogram& h);

/// {order, terms: [{q, monomial: {sym: exp}, coeff}]}; coefficients outside the
/// 64-bit range are written as decimal strings.
[[nodiscard]] Json series_to_json(const TruncatedSeries& s);

[[nodiscard]] Json identity_report_to_json(const IdentityReport& r);

}  // namespace lebesgue
