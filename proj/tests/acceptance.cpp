// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Ground truth comes from brute-force enumeration and direct checks written here,
// not from the generating-function code under test.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "lebesgue/bijection.hpp"
#include "lebesgue/cli.hpp"
#include "lebesgue/enumeration.hpp"
#include "lebesgue/identities.hpp"
#include "lebesgue/serialize.hpp"

using namespace lebesgue;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool passed = true;
    std::string detail;
};

// Accumulates the first few failure reasons for a criterion.
class Findings {
  public:
    void fail(const std::string& why) {
        ++count_;
        if (count_ <= 3) {
            reasons_ += (reasons_.empty() ? "" : "; ") + why;
        }
    }
    [[nodiscard]] bool ok() const { return count_ == 0; }
    [[nodiscard]] std::string summary() const {
        return std::to_string(count_) + " failure(s): " + reasons_;
    }

  private:
    int count_ = 0;
    std::string reasons_;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed(double s) {
    std::ostringstream o;
    o.precision(3);
    o << std::fixed << s << "s";
    return o.str();
}

BijectionTriple T(Partition a, Partition b, Partition g) {
    return BijectionTriple{std::move(a), std::move(b), std::move(g)};
}

// Coefficient of q^n as a polynomial in a, counted straight from P_n.
Polynomial enumerated_coefficient(int n) {
    Polynomial p;
    std::map<int, int> by_degree;
    for (const auto& pair : enumerate_P(n, n)) {
        ++by_degree[pair.beta.length()];
    }
    for (auto [j, c] : by_degree) {
        p.add_term(j == 0 ? Monomial{} : Monomial::of(Symbol::A, static_cast<std::uint32_t>(j)), Integer(c));
    }
    return p;
}

std::vector<Partition> all_partitions_up_to(int max_weight, PartConstraint c) {
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w) {
        for (auto& p : gen_partitions(w, c)) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

// Conjugate straight from the Young diagram as a boolean grid.
Partition grid_conjugate(const Partition& p) {
    const int rows = p.length();
    const int cols = rows == 0 ? 0 : static_cast<int>(p.largest());
    std::vector<std::vector<bool>> cell(static_cast<std::size_t>(rows), std::vector<bool>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < p.part(i); ++j) {
            cell[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        }
    }
    std::vector<std::int64_t> parts;
    for (int j = 0; j < cols; ++j) {
        std::int64_t len = 0;
        for (int i = 0; i < rows; ++i) {
            len += cell[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ? 1 : 0;
        }
        parts.push_back(len);
    }
    return make_partition(parts);
}

// ---------------------------------------------------------------------------

Outcome figure_example() {
    Findings f;
    const auto in = T({6, 5, 3, 1}, {4, 3, 1}, {2, 2, 2, 2});
    const auto expected = T({5, 4, 2}, {3, 2, 1}, {4, 4, 4, 2});
    auto [out, trace] = phi_step(in);
    if (!(out == expected)) {
        f.fail("phi_step image differs");
    }
    if (trace.case_taken() != StepCase::Case1) {
        f.fail("expected case1");
    }
    auto [back, inv] = phi_inverse_step(expected);
    if (!(back == in)) {
        f.fail("phi_inverse_step did not recover the input");
    }
    return {f.ok(), f.ok() ? "(6,5,3,1),(4,3,1),(2,2,2,2) -> (5,4,2),(3,2,1),(4,4,4,2) and back" : f.summary()};
}

Outcome lebesgue_identity() {
    Findings f;
    const auto t0 = Clock::now();
    const auto lhs = lebesgue_lhs(40);
    const auto rhs = lebesgue_rhs(40);
    if (auto d = first_difference(lhs, rhs)) {
        f.fail("sides differ at q^" + std::to_string(d->q_exponent));
    }
    const double build = seconds_since(t0);
    if (build > 5.0) {
        f.fail("took " + fixed(build));
    }

    const Polynomial a = Polynomial(Integer(1), Monomial::of(Symbol::A));
    const Polynomial q2 = Polynomial(1) + a;
    const Polynomial q4 = Polynomial(2) + Polynomial(2) * a;
    if (!(enumerated_coefficient(2) == q2) || !(lhs.coefficient(2) == q2)) {
        f.fail("q^2 coefficient is not 1 + a");
    }
    if (!(enumerated_coefficient(4) == q4) || !(lhs.coefficient(4) == q4)) {
        f.fail("q^4 coefficient is not 2 + 2a");
    }
    // Beyond the two spot values, every coefficient up to q^25 against the enumeration.
    for (int n = 0; n <= 25; ++n) {
        if (!(enumerated_coefficient(n) == lhs.coefficient(n))) {
            f.fail("q^" + std::to_string(n) + " disagrees with enumeration");
        }
    }
    return {f.ok(), f.ok() ? "order 40 equal in " + fixed(build) + ", q^2 = 1 + a, q^4 = 2 + 2a, q^0..q^25 match P_n"
                           : f.summary()};
}

struct BijectionRun {
    std::uint64_t pairs = 0;
    std::uint64_t steps = 0;  // forward plus inverse steps built
};

Outcome bijection_exhaustive(BijectionRun& run) {
    Findings f;
    const auto t0 = Clock::now();
    for (int n = 0; n <= 25; ++n) {
        const auto ps = enumerate_P(n);
        const auto qs = enumerate_Q(n);
        std::set<PairQ> images;
        for (const auto& p : ps) {
            ++run.pairs;
            try {
                auto [q, fwd] = lebesgue_forward(p);
                run.steps += fwd.size();
                if (q.mu.weight() + q.nu.weight() != n) {
                    f.fail("weight changed for alpha=" + to_string(p.alpha) + " beta=" + to_string(p.beta));
                }
                if (q.nu.length() != p.beta.length()) {
                    f.fail("a-degree changed for alpha=" + to_string(p.alpha) + " beta=" + to_string(p.beta));
                }
                if (alt_sum(q.mu) != alt_sum(p.alpha) - num_odd_parts(p.beta)) {
                    f.fail("alt_sum relation fails for alpha=" + to_string(p.alpha) + " beta=" + to_string(p.beta));
                }
                if (!images.insert(q).second) {
                    f.fail("two pairs share the image mu=" + to_string(q.mu) + " nu=" + to_string(q.nu));
                }
                auto [back, inv] = lebesgue_inverse(q);
                run.steps += inv.size();
                if (!(back == p)) {
                    f.fail("inverse round-trip fails for alpha=" + to_string(p.alpha) + " beta=" + to_string(p.beta));
                }
            } catch (const std::exception& e) {
                f.fail(std::string("exception: ") + e.what());
            }
        }
        if (images != std::set<PairQ>(qs.begin(), qs.end())) {
            f.fail("image of P_" + std::to_string(n) + " is not Q_" + std::to_string(n));
        }
    }
    const double took = seconds_since(t0);
    if (took > 60.0) {
        f.fail("took " + fixed(took));
    }
    return {f.ok(), f.ok() ? std::to_string(run.pairs) + " pairs, n <= 25, onto Q_n, inverse round-trips, " + fixed(took)
                           : f.summary()};
}

Outcome refinement() {
    Findings k_only;
    Findings joint;
    for (int n = 0; n <= 25; ++n) {
        // Histograms tallied here from the pair lists, then compared with the library's.
        Histogram hp, hq;
        for (const auto& p : enumerate_P(n)) {
            hp.add(alt_sum(p.alpha) - num_odd_parts(p.beta), p.beta.length());
        }
        for (const auto& q : enumerate_Q(n)) {
            hq.add(alt_sum(q.mu), q.nu.length());
        }
        if (!(hp == refinement_histogram(Side::P, n)) || !(hq == refinement_histogram(Side::Q, n))) {
            k_only.fail("library histogram differs from direct tally at n=" + std::to_string(n));
        }
        if (hp.k_marginal() != hq.k_marginal()) {
            k_only.fail("k-marginals differ at n=" + std::to_string(n));
        }
        if (!(hp == hq)) {
            joint.fail("joint (k, j) histograms differ at n=" + std::to_string(n));
        }
    }
    const bool ok = k_only.ok() && joint.ok();
    std::string detail = std::string("k-marginal ") + (k_only.ok() ? "agrees" : k_only.summary()) + "; joint (k, j) " +
                         (joint.ok() ? "agrees" : joint.summary()) + " (n <= 25)";
    return {ok, detail};
}

Outcome related_identities() {
    Findings f;
    const auto t0 = Clock::now();
    for (auto [id, name] : {std::pair{Identity::RV, "rv"}, std::pair{Identity::Fu, "fu"}}) {
        const auto r = verify_identity(id, 25);
        if (!r.equal) {
            f.fail(std::string(name) + " differs at q^" + std::to_string(r.first_difference->q_exponent));
        }
    }
    for (int L = 0; L <= 8; ++L) {
        const auto r = verify_identity(Identity::Rowell, 25, L);
        if (!r.equal) {
            f.fail("rowell L=" + std::to_string(L) + " differs");
        }
    }
    // 1 + q + a q^2, written out term by term.
    TruncatedSeries expected(25);
    expected.add_to(0, Polynomial(1));
    expected.add_to(1, Polynomial(1));
    expected.add_to(2, Polynomial(Integer(1), Monomial::of(Symbol::A)));
    if (!(rowell_lhs(1, 25) == expected) || !(rowell_rhs(1, 25) == expected)) {
        f.fail("rowell L=1 is not 1 + q + a*q^2 on both sides");
    }
    const double took = seconds_since(t0);
    if (took > 30.0) {
        f.fail("took " + fixed(took));
    }
    return {f.ok(), f.ok() ? "rv, fu to q^25; rowell L=0..8 to q^25; rowell L=1 = 1 + q + a*q^2; " + fixed(took)
                           : f.summary()};
}

Outcome statistic_lemma() {
    Findings f;
    const auto distinct = all_partitions_up_to(30, PartConstraint::Distinct);
    for (const auto& p : distinct) {
        if (alt_sum(p) != num_odd_parts(conjugate(p))) {
            f.fail("alt_sum != n_o(conjugate) for " + to_string(p));
        }
    }
    const auto all = all_partitions_up_to(30, PartConstraint::All);
    for (const auto& p : all) {
        const Partition c = conjugate(p);
        if (!(c == grid_conjugate(p))) {
            f.fail("conjugate disagrees with the grid transpose for " + to_string(p));
        }
        if (!(conjugate(c) == p)) {
            f.fail("conjugate is not an involution on " + to_string(p));
        }
        if (c.weight() != p.weight() || c.length() != (p.empty() ? 0 : p.largest())) {
            f.fail("conjugate changed weight or shape for " + to_string(p));
        }
        const auto s = alt_sum(p);
        if (s < 0 || (s - p.weight()) % 2 != 0 || (num_odd_parts(p) - p.weight()) % 2 != 0) {
            f.fail("parity invariant fails for " + to_string(p));
        }
    }
    return {f.ok(), f.ok() ? std::to_string(distinct.size()) + " distinct-part and " + std::to_string(all.size()) +
                                 " unrestricted partitions, weight <= 30"
                           : f.summary()};
}

Outcome per_step_conservation(const BijectionRun& run, std::uint64_t traces_during_run) {
    Findings f;
    if (run.steps == 0) {
        f.fail("no steps were taken");
    }
    if (traces_during_run < run.steps) {
        f.fail(std::to_string(traces_during_run) + " checked traces for " + std::to_string(run.steps) + " steps");
    }
    // The check must actually bite: a step that loses weight has to be refused.
    bool refused = false;
    try {
        (void)StepTrace(StepCase::Case2, T({3}, {2}, {}), T({3}, {}, {4}));
    } catch (const ConsistencyError&) {
        refused = true;
    }
    if (!refused) {
        f.fail("StepTrace accepted a non-conserving step");
    }
    return {f.ok(), f.ok() ? std::to_string(traces_during_run) + " step traces checked for " +
                                 std::to_string(run.steps) + " steps in criterion 3"
                           : f.summary()};
}

struct Run {
    int code;
    std::string out;
};

Run run_binary(const std::string& args) {
    const std::string cmd = std::string(LEBESGUE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return {-1, ""};
    }
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), n);
    }
    const int status = ::pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli_contract() {
    Findings f;
    auto expect = [&](const std::string& args, int code) {
        const auto r = run_binary(args);
        if (r.code != code) {
            f.fail("'" + args + "' exited " + std::to_string(r.code) + ", expected " + std::to_string(code));
        }
        return r;
    };

    expect("trace --alpha 6,5,3,1 --beta 4,3,1", kExitOk);
    expect("invert --mu \"\" --nu 6,4", kExitOk);
    expect("enumerate --n 4 --side Q --histogram", kExitOk);
    expect("verify --identity rowell --order 20 --L 1", kExitOk);
    expect("check --max-n 12", kExitOk);

    expect("trace --alpha 3 --beta 4", kExitInvalid);
    expect("invert --mu 2 --nu 3", kExitInvalid);
    expect("verify --identity nope --order 5", kExitInvalid);
    expect("enumerate --n 100 --side P", kExitInvalid);

    // Failure class: a saved trace with one step tampered with.
    const auto dir = std::filesystem::temp_directory_path();
    const auto good = dir / "lebesgue_acceptance_good.json";
    const auto bad = dir / "lebesgue_acceptance_bad.json";
    const auto r = expect("trace --alpha 6,5,3,1 --beta 4,3,1 --format json", kExitOk);
    try {
        std::ofstream(good) << r.out;
        auto doc = Json::parse(r.out);
        doc["steps"][1]["lambda"] = Json::parse("[3,1]");
        std::ofstream(bad) << doc.dump();
        expect("check --trace-file " + good.string(), kExitOk);
        expect("check --trace-file " + bad.string(), kExitFailure);
    } catch (const std::exception& e) {
        f.fail(std::string("trace JSON unusable: ") + e.what());
    }
    std::filesystem::remove(good);
    std::filesystem::remove(bad);

    // JSON round-trip: parse, rebuild, dump, compare bytes.
    for (const char* args : {"trace --alpha 6,5,3,1 --beta 4,3,1 --format json",
                             "trace --alpha 9,7,6,4,3,1 --beta 6,4,2,1 --format json",
                             "trace --alpha 4 --beta \"\" --format json"}) {
        const auto t = expect(args, kExitOk);
        try {
            const std::string bytes = t.out.substr(0, t.out.size() - 1);
            if (forward_trace_to_json(forward_trace_from_json(Json::parse(bytes))).dump() != bytes) {
                f.fail(std::string("round-trip changed bytes for '") + args + "'");
            }
        } catch (const std::exception& e) {
            f.fail(std::string("round-trip threw for '") + args + "': " + e.what());
        }
    }
    const auto inv = expect("invert --mu 3,2 --nu 8,6,4 --format json", kExitOk);
    try {
        const std::string bytes = inv.out.substr(0, inv.out.size() - 1);
        if (inverse_trace_to_json(inverse_trace_from_json(Json::parse(bytes))).dump() != bytes) {
            f.fail("inverse trace round-trip changed bytes");
        }
    } catch (const std::exception& e) {
        f.fail(std::string("inverse round-trip threw: ") + e.what());
    }
    return {f.ok(), f.ok() ? "exit codes 0/1/2 and byte-identical JSON trace round-trips" : f.summary()};
}

}  // namespace

int main() {
    int failed = 0;
    auto report = [&](int number, const std::string& title, const std::function<Outcome()>& body) {
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o = {false, std::string("uncaught exception: ") + e.what()};
        }
        std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << number << " (" << title << "): " << o.detail
                  << std::endl;
        failed += o.passed ? 0 : 1;
    };

    BijectionRun run;
    std::uint64_t traces_during_run = 0;

    report(1, "figure example", figure_example);
    report(2, "lebesgue identity", lebesgue_identity);
    report(3, "bijection exhaustive", [&] {
        const auto before = step_traces_checked();
        Outcome o = bijection_exhaustive(run);
        traces_during_run = step_traces_checked() - before;
        return o;
    });
    report(4, "refinement histograms", refinement);
    report(5, "related identities", related_identities);
    report(6, "statistic lemma", statistic_lemma);
    report(7, "per-step conservation", [&] { return per_step_conservation(run, traces_during_run); });
    report(8, "cli contract", cli_contract);

    std::cout << (failed == 0 ? "all 8 criteria passed" : std::to_string(failed) + " of 8 criteria failed")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
