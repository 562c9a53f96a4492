#include "lebesgue/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lebesgue {

namespace {

void check_cap(int n, int cap) {
    if (n < 0) {
        throw InvalidInput("n must be non-negative");
    }
    if (n > cap) {
        throw LimitExceeded("n = " + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap));
    }
}

// Emits partitions of `remaining` with parts <= max_part, largest parts first,
// which yields lexicographically descending order.
void generate(int remaining, int max_part, PartConstraint c, std::vector<int>& prefix,
              std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(make_partition(std::span<const int>(prefix)));
        return;
    }
    const bool distinct = c == PartConstraint::Distinct || c == PartConstraint::DistinctEven;
    const bool even = c == PartConstraint::Even || c == PartConstraint::DistinctEven;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        if (even && part % 2 != 0) {
            continue;
        }
        prefix.push_back(part);
        generate(remaining - part, distinct ? part - 1 : part, c, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

PartConstraint parse_constraint(const std::string& name) {
    if (name == "all") return PartConstraint::All;
    if (name == "distinct") return PartConstraint::Distinct;
    if (name == "distinct-even") return PartConstraint::DistinctEven;
    if (name == "even") return PartConstraint::Even;
    throw InvalidInput("unknown partition constraint '" + name + "'");
}

std::vector<Partition> gen_partitions(int n, PartConstraint constraint, int cap) {
    check_cap(n, cap);
    std::vector<Partition> out;
    std::vector<int> prefix;
    generate(n, n, constraint, prefix, out);
    return out;
}

std::vector<PairP> enumerate_P(int n, int cap) {
    check_cap(n, cap);
    std::vector<PairP> out;
    for (int b = 0; b <= n; ++b) {
        const auto alphas = gen_partitions(n - b, PartConstraint::Distinct, n);
        const auto betas = gen_partitions(b, PartConstraint::Distinct, n);
        for (const auto& alpha : alphas) {
            for (const auto& beta : betas) {
                if (beta.largest() <= alpha.length()) {
                    out.push_back(PairP{alpha, beta});
                }
            }
        }
    }
    return out;
}

std::vector<PairQ> enumerate_Q(int n, int cap) {
    check_cap(n, cap);
    std::vector<PairQ> out;
    for (int b = 0; b <= n; b += 2) {
        const auto mus = gen_partitions(n - b, PartConstraint::Distinct, n);
        const auto nus = gen_partitions(b, PartConstraint::DistinctEven, n);
        for (const auto& mu : mus) {
            for (const auto& nu : nus) {
                out.push_back(PairQ{mu, nu});
            }
        }
    }
    return out;
}

void Histogram::add(std::int64_t k, int j, std::uint64_t count) {
    if (count == 0) {
        return;
    }
    entries_[{k, j}] += count;
    total_ += count;
}

std::uint64_t Histogram::at(std::int64_t k, int j) const {
    auto it = entries_.find({k, j});
    return it == entries_.end() ? 0 : it->second;
}

std::map<std::int64_t, std::uint64_t> Histogram::k_marginal() const {
    std::map<std::int64_t, std::uint64_t> out;
    for (const auto& [key, count] : entries_) {
        out[key.first] += count;
    }
    return out;
}

Histogram refinement_histogram(Side side, int n, int cap) {
    Histogram h;
    if (side == Side::P) {
        for (const auto& p : enumerate_P(n, cap)) {
            h.add(alt_sum(p.alpha) - num_odd_parts(p.beta), p.beta.length());
        }
    } else {
        for (const auto& q : enumerate_Q(n, cap)) {
            h.add(alt_sum(q.mu), q.nu.length());
        }
    }
    return h;
}

BijectionReport verify_bijection_up_to(int max_n, int cap) {
    check_cap(max_n, cap);
    BijectionReport report;
    report.max_n = max_n;

    for (int n = 0; n <= max_n; ++n) {
        const auto ps = enumerate_P(n, cap);
        const auto qs = enumerate_Q(n, cap);
        report.p_counts.push_back(ps.size());
        report.q_counts.push_back(qs.size());
        const std::set<PairQ> q_set(qs.begin(), qs.end());
        std::set<PairQ> image;

        auto fail = [&](const PairP& p, std::string reason, std::vector<StepTrace> trace = {}) {
            report.failures.push_back(BijectionFailure{p, std::move(reason), std::move(trace)});
        };

        for (const auto& p : ps) {
            ++report.checked;
            std::pair<PairQ, std::vector<StepTrace>> fwd;
            try {
                fwd = lebesgue_forward(p);
            } catch (const std::exception& e) {
                fail(p, std::string("forward map threw: ") + e.what());
                continue;
            }
            const auto& [q, steps] = fwd;
            report.steps += steps.size();

            if (!q_set.contains(q)) {
                fail(p, "image " + display(q.mu) + " " + display(q.nu) + " is not in Q_n", steps);
                continue;
            }
            if (!image.insert(q).second) {
                fail(p, "image " + display(q.mu) + " " + display(q.nu) + " already hit (not injective)", steps);
            }
            if (q.mu.weight() + q.nu.weight() != p.alpha.weight() + p.beta.weight()) {
                fail(p, "total weight not preserved", steps);
            }
            if (q.nu.length() != p.beta.length()) {
                fail(p, "a-degree not preserved: len(nu) != len(beta)", steps);
            }
            if (alt_sum(q.mu) != alt_sum(p.alpha) - num_odd_parts(p.beta)) {
                fail(p, "alt_sum(mu) != alt_sum(alpha) - n_o(beta)", steps);
            }
            try {
                auto [back, inv_steps] = lebesgue_inverse(q);
                if (!(back == p)) {
                    fail(p, "inverse returned " + display(back.alpha) + " " + display(back.beta), steps);
                }
            } catch (const std::exception& e) {
                fail(p, std::string("inverse map threw: ") + e.what(), steps);
            }
        }

        if (ps.size() != qs.size()) {
            fail(PairP{}, "|P_" + std::to_string(n) + "| = " + std::to_string(ps.size()) + " but |Q_" +
                              std::to_string(n) + "| = " + std::to_string(qs.size()));
        }
        if (image.size() != q_set.size()) {
            fail(PairP{}, "forward map misses " + std::to_string(q_set.size() - image.size()) +
                              " elements of Q_" + std::to_string(n));
        }
    }
    return report;
}

}  // namespace lebesgue
