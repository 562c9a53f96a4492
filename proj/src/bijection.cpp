#include "lebesgue/bijection.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>

namespace lebesgue {

namespace {

std::atomic<std::uint64_t> g_traces{0};

Partition from_vec(const std::vector<std::int64_t>& raw) {
    return make_partition(std::span<const std::int64_t>(raw));
}

/// gamma with 2 added to each of its first `count` parts, padding with zeros.
Partition add_column_pair(const Partition& gamma, int count) {
    std::vector<std::int64_t> raw(gamma.parts().begin(), gamma.parts().end());
    if (static_cast<int>(raw.size()) < count) {
        raw.resize(static_cast<std::size_t>(count), 0);
    }
    for (int i = 0; i < count; ++i) {
        raw[static_cast<std::size_t>(i)] += 2;
    }
    return from_vec(raw);
}

[[noreturn]] void not_in_image(const std::string& why) {
    throw InvalidInput("triple is not in the image of the map: " + why);
}

}  // namespace

std::string check_pair_p(const Partition& alpha, const Partition& beta) {
    if (!has_distinct_parts(alpha)) {
        return "alpha has repeated parts";
    }
    if (!has_distinct_parts(beta)) {
        return "beta has repeated parts";
    }
    if (beta.largest() > alpha.length()) {
        return "largest part of beta exceeds length of alpha";
    }
    return {};
}

std::string check_pair_q(const Partition& mu, const Partition& nu) {
    if (!has_distinct_parts(mu)) {
        return "mu has repeated parts";
    }
    if (!all_parts_even(nu)) {
        return "nu has an odd part";
    }
    if (!has_distinct_parts(nu)) {
        return "nu has repeated parts";
    }
    return {};
}

PairP PairP::make(Partition alpha, Partition beta) {
    if (auto why = check_pair_p(alpha, beta); !why.empty()) {
        throw InvalidInput(why);
    }
    return PairP{std::move(alpha), std::move(beta)};
}

PairQ PairQ::make(Partition mu, Partition nu) {
    if (auto why = check_pair_q(mu, nu); !why.empty()) {
        throw InvalidInput(why);
    }
    return PairQ{std::move(mu), std::move(nu)};
}

std::string check_triple(const BijectionTriple& t) {
    if (auto why = check_pair_p(t.alpha, t.beta); !why.empty()) {
        return why;
    }
    if (!all_parts_even(t.gamma)) {
        return "gamma has an odd part";
    }
    if (!t.gamma.empty()) {
        if (t.gamma.length() < t.beta.length()) {
            return "gamma is shorter than beta";
        }
        if (t.beta.length() > 0 && t.gamma.part(t.beta.length() - 1) != t.gamma.largest()) {
            return "first len(beta) parts of gamma are not all equal";
        }
    }
    return {};
}

std::int64_t total_weight(const BijectionTriple& t) {
    return static_cast<std::int64_t>(t.alpha.weight()) + t.beta.weight() + t.gamma.weight();
}

std::int64_t conserved_statistic(const BijectionTriple& t) {
    return static_cast<std::int64_t>(num_odd_parts(conjugate(t.alpha))) - num_odd_parts(t.beta);
}

std::string to_string(StepCase c) {
    return c == StepCase::Case1 ? "case1" : "case2";
}

StepTrace::StepTrace(StepCase case_taken, BijectionTriple before, BijectionTriple after)
    : case_(case_taken),
      before_(std::move(before)),
      after_(std::move(after)),
      weight_(total_weight(before_)),
      stat_(conserved_statistic(before_)) {
    if (total_weight(after_) != weight_) {
        throw ConsistencyError("step does not conserve total weight");
    }
    if (conserved_statistic(after_) != stat_) {
        throw ConsistencyError("step does not conserve n_o(alpha') - n_o(beta)");
    }
    g_traces.fetch_add(1, std::memory_order_relaxed);
}

std::uint64_t step_traces_checked() noexcept {
    return g_traces.load(std::memory_order_relaxed);
}

std::pair<BijectionTriple, StepTrace> phi_step(const BijectionTriple& t) {
    if (t.beta.empty()) {
        throw InvalidInput("beta is empty; the iteration has terminated");
    }
    if (auto why = check_triple(t); !why.empty()) {
        throw InvalidInput("invalid triple: " + why);
    }

    const int len_alpha = t.alpha.length();
    const int len_beta = t.beta.length();
    BijectionTriple out;
    StepCase which{};

    if (t.beta.smallest() == 1) {
        which = StepCase::Case1;
        std::vector<std::int64_t> mu(t.alpha.parts().begin(), t.alpha.parts().end());
        for (auto& x : mu) {
            x -= 1;
        }
        std::vector<std::int64_t> lambda(t.beta.parts().begin(), t.beta.parts().end());
        lambda.back() = len_alpha + 1;
        for (auto& x : lambda) {
            x -= 2;
        }
        out.alpha = from_vec(mu);
        out.beta = from_vec(lambda);
    } else {
        which = StepCase::Case2;
        std::vector<std::int64_t> lambda(t.beta.parts().begin(), t.beta.parts().end());
        for (auto& x : lambda) {
            x -= 2;
        }
        out.alpha = t.alpha;
        out.beta = from_vec(lambda);
    }
    out.gamma = add_column_pair(t.gamma, len_beta);

    if (out.alpha.weight() + out.beta.weight() >= t.alpha.weight() + t.beta.weight()) {
        throw ConsistencyError("active weight did not decrease");
    }
    assert(check_triple(out).empty());

    StepTrace trace(which, t, out);
    return {std::move(out), std::move(trace)};
}

std::pair<BijectionTriple, StepTrace> phi_inverse_step(const BijectionTriple& t) {
    const Partition& mu = t.alpha;
    const Partition& lambda = t.beta;
    const Partition& nu = t.gamma;

    if (nu.empty()) {
        not_in_image("nu is empty");
    }
    if (!all_parts_even(nu)) {
        not_in_image("nu has an odd part");
    }
    if (!has_distinct_parts(mu) || !has_distinct_parts(lambda)) {
        not_in_image("mu and lambda must have distinct parts");
    }

    // r: multiplicity of the largest part of nu, i.e. the smallest part of conj(nu).
    const int r = static_cast<int>(
        std::count(nu.parts().begin(), nu.parts().end(), nu.largest()));
    assert(r == conjugate(nu).smallest());
    if (r < lambda.length()) {
        not_in_image("lambda is longer than the last column pair of nu");
    }

    std::vector<std::int64_t> gamma_raw(nu.parts().begin(), nu.parts().end());
    for (int i = 0; i < r; ++i) {
        gamma_raw[static_cast<std::size_t>(i)] -= 2;
    }
    std::vector<std::int64_t> beta_bar(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i) {
        beta_bar[static_cast<std::size_t>(i)] = lambda.part(i) + 2;
    }

    BijectionTriple out;
    StepCase which{};
    out.gamma = from_vec(gamma_raw);

    const std::int64_t top = beta_bar.front();
    if (top <= mu.length()) {
        which = StepCase::Case2;
        out.alpha = mu;
        out.beta = from_vec(beta_bar);
    } else {
        which = StepCase::Case1;
        if (top > mu.length() + 2) {
            not_in_image("largest part of the lifted lambda exceeds len(mu)+2");
        }
        std::vector<std::int64_t> alpha(mu.parts().begin(), mu.parts().end());
        for (auto& x : alpha) {
            x += 1;
        }
        if (top == mu.length() + 2) {
            alpha.push_back(1);
        }
        beta_bar.front() = 1;
        out.alpha = from_vec(alpha);
        out.beta = from_vec(beta_bar);
    }

    if (auto why = check_triple(out); !why.empty()) {
        not_in_image("reconstruction is invalid: " + why);
    }

    StepTrace trace(which, out, t);
    return {std::move(out), std::move(trace)};
}

std::pair<PairQ, std::vector<StepTrace>> lebesgue_forward(const PairP& p) {
    if (auto why = check_pair_p(p.alpha, p.beta); !why.empty()) {
        throw InvalidInput(why);
    }
    BijectionTriple state{p.alpha, p.beta, {}};
    std::vector<StepTrace> steps;
    const int cap = p.alpha.weight() + p.beta.weight();
    while (!state.beta.empty()) {
        if (static_cast<int>(steps.size()) >= cap) {
            throw ConsistencyError("forward iteration exceeded its step bound");
        }
        auto [next, trace] = phi_step(state);
        steps.push_back(std::move(trace));
        state = std::move(next);
    }
    return {PairQ{std::move(state.alpha), std::move(state.gamma)}, std::move(steps)};
}

std::pair<PairP, std::vector<StepTrace>> lebesgue_inverse(const PairQ& q) {
    if (auto why = check_pair_q(q.mu, q.nu); !why.empty()) {
        throw InvalidInput(why);
    }
    BijectionTriple state{q.mu, {}, q.nu};
    std::vector<StepTrace> steps;
    const int expected_steps = q.nu.largest() / 2;
    while (!state.gamma.empty()) {
        try {
            auto [prev, trace] = phi_inverse_step(state);
            steps.push_back(std::move(trace));
            state = std::move(prev);
        } catch (const InvalidInput& e) {
            throw ConsistencyError(std::string("inverse iteration failed on a valid Q pair: ") + e.what());
        }
    }
    if (static_cast<int>(steps.size()) != expected_steps) {
        throw ConsistencyError("inverse iteration took an unexpected number of steps");
    }
    return {PairP{std::move(state.alpha), std::move(state.beta)}, std::move(steps)};
}

}  // namespace lebesgue
