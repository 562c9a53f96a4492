#include "lebesgue/serialize.hpp"

#include <limits>
#include <sstream>

namespace lebesgue {

namespace {

Json integer_to_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return Json(static_cast<std::int64_t>(v));
    }
    return Json(v.str());
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidInput(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

StepCase parse_case(const Json& j) {
    if (j == "case1") return StepCase::Case1;
    if (j == "case2") return StepCase::Case2;
    throw InvalidInput("unknown step case " + j.dump());
}

std::vector<StepTrace> steps_from_json(const Json& j) {
    if (!j.is_array()) {
        throw InvalidInput("steps must be an array");
    }
    std::vector<StepTrace> out;
    for (const auto& s : j) {
        out.push_back(step_from_json(s));
    }
    return out;
}

Json steps_to_json(const std::vector<StepTrace>& steps) {
    Json out = Json::array();
    for (const auto& s : steps) {
        out.push_back(step_to_json(s));
    }
    return out;
}

}  // namespace

Json partition_to_json(const Partition& p) {
    Json out = Json::array();
    for (int x : p.parts()) {
        out.push_back(x);
    }
    return out;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) {
        throw InvalidInput("partition must be a JSON array");
    }
    std::vector<std::int64_t> raw;
    for (const auto& v : j) {
        if (!v.is_number_integer()) {
            throw InvalidInput("partition entries must be integers");
        }
        const auto x = v.get<std::int64_t>();
        if (x <= 0 || (!raw.empty() && x > raw.back())) {
            throw InvalidInput("partition must be positive and non-increasing");
        }
        raw.push_back(x);
    }
    return make_partition(std::span<const std::int64_t>(raw));
}

Json step_to_json(const StepTrace& s) {
    Json out;
    out["case"] = to_string(s.case_taken());
    out["alpha"] = partition_to_json(s.before().alpha);
    out["beta"] = partition_to_json(s.before().beta);
    out["gamma"] = partition_to_json(s.before().gamma);
    out["mu"] = partition_to_json(s.after().alpha);
    out["lambda"] = partition_to_json(s.after().beta);
    out["nu"] = partition_to_json(s.after().gamma);
    out["weight"] = s.conserved_weight();
    out["stat"] = s.conserved_stat();
    return out;
}

StepTrace step_from_json(const Json& j) {
    BijectionTriple before{partition_from_json(require(j, "alpha")), partition_from_json(require(j, "beta")),
                           partition_from_json(require(j, "gamma"))};
    BijectionTriple after{partition_from_json(require(j, "mu")), partition_from_json(require(j, "lambda")),
                          partition_from_json(require(j, "nu"))};
    const StepCase which = parse_case(require(j, "case"));
    auto [image, recomputed] = phi_step(before);
    if (image != after || recomputed.case_taken() != which) {
        throw InvalidInput("step does not match the map applied to its input triple");
    }
    StepTrace s(which, std::move(before), std::move(after));
    if (require(j, "weight") != s.conserved_weight() || require(j, "stat") != s.conserved_stat()) {
        throw InvalidInput("recorded weight/stat do not match the step");
    }
    return s;
}

ForwardTrace trace_forward(const PairP& p) {
    auto [q, steps] = lebesgue_forward(p);
    return ForwardTrace{p, std::move(steps), std::move(q)};
}

InverseTrace trace_inverse(const PairQ& q) {
    auto [p, steps] = lebesgue_inverse(q);
    return InverseTrace{q, std::move(steps), std::move(p)};
}

Json forward_trace_to_json(const ForwardTrace& t) {
    Json out;
    out["input"]["alpha"] = partition_to_json(t.input.alpha);
    out["input"]["beta"] = partition_to_json(t.input.beta);
    out["steps"] = steps_to_json(t.steps);
    out["output"]["mu"] = partition_to_json(t.output.mu);
    out["output"]["nu"] = partition_to_json(t.output.nu);
    return out;
}

ForwardTrace forward_trace_from_json(const Json& j) {
    const Json& in = require(j, "input");
    const Json& out = require(j, "output");
    return ForwardTrace{
        PairP::make(partition_from_json(require(in, "alpha")), partition_from_json(require(in, "beta"))),
        steps_from_json(require(j, "steps")),
        PairQ::make(partition_from_json(require(out, "mu")), partition_from_json(require(out, "nu")))};
}

Json inverse_trace_to_json(const InverseTrace& t) {
    Json out;
    out["input"]["mu"] = partition_to_json(t.input.mu);
    out["input"]["nu"] = partition_to_json(t.input.nu);
    out["steps"] = steps_to_json(t.steps);
    out["output"]["alpha"] = partition_to_json(t.output.alpha);
    out["output"]["beta"] = partition_to_json(t.output.beta);
    return out;
}

InverseTrace inverse_trace_from_json(const Json& j) {
    const Json& in = require(j, "input");
    const Json& out = require(j, "output");
    return InverseTrace{
        PairQ::make(partition_from_json(require(in, "mu")), partition_from_json(require(in, "nu"))),
        steps_from_json(require(j, "steps")),
        PairP::make(partition_from_json(require(out, "alpha")), partition_from_json(require(out, "beta")))};
}

std::vector<std::string> audit_forward_trace(const Json& j) {
    struct RawStep {
        StepCase which;
        BijectionTriple before;
        BijectionTriple after;
        Json weight;
        Json stat;
    };
    const Json& in = require(j, "input");
    const Json& out = require(j, "output");
    const Partition alpha = partition_from_json(require(in, "alpha"));
    const Partition beta = partition_from_json(require(in, "beta"));
    const Partition mu = partition_from_json(require(out, "mu"));
    const Partition nu = partition_from_json(require(out, "nu"));
    const Json& steps = require(j, "steps");
    if (!steps.is_array()) {
        throw InvalidInput("steps must be an array");
    }
    std::vector<RawStep> raw;
    for (const auto& s : steps) {
        raw.push_back(RawStep{parse_case(require(s, "case")),
                              {partition_from_json(require(s, "alpha")), partition_from_json(require(s, "beta")),
                               partition_from_json(require(s, "gamma"))},
                              {partition_from_json(require(s, "mu")), partition_from_json(require(s, "lambda")),
                               partition_from_json(require(s, "nu"))},
                              require(s, "weight"),
                              require(s, "stat")});
    }

    std::vector<std::string> problems;
    if (auto why = check_pair_p(alpha, beta); !why.empty()) {
        problems.push_back("input is not in P: " + why);
    }
    BijectionTriple state{alpha, beta, {}};
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto& s = raw[i];
        const std::string where = "step " + std::to_string(i + 1) + ": ";
        if (s.before != state) {
            problems.push_back(where + "does not continue from the previous state");
        }
        if (s.weight != total_weight(s.before) || s.stat != conserved_statistic(s.before)) {
            problems.push_back(where + "recorded weight/stat do not match its input triple");
        }
        try {
            auto [image, trace] = phi_step(s.before);
            if (image != s.after) {
                problems.push_back(where + "image should be " + display(image.alpha) + " " + display(image.beta) +
                                   " " + display(image.gamma));
            }
            if (trace.case_taken() != s.which) {
                problems.push_back(where + "case should be " + to_string(trace.case_taken()));
            }
        } catch (const InvalidInput& e) {
            problems.push_back(where + e.what());
        }
        state = s.after;
    }
    if (!state.beta.empty()) {
        problems.push_back("run stops before beta is empty");
    }
    if (state.alpha != mu || state.gamma != nu) {
        problems.push_back("output does not match the final state");
    }
    return problems;
}

Json bijection_report_to_json(const BijectionReport& r) {
    Json out;
    out["n"] = r.max_n;
    out["checked"] = r.checked;
    out["passed"] = r.passed();
    out["failures"] = Json::array();
    for (const auto& f : r.failures) {
        Json item;
        item["pair"]["alpha"] = partition_to_json(f.pair.alpha);
        item["pair"]["beta"] = partition_to_json(f.pair.beta);
        item["reason"] = f.reason;
        item["trace"] = steps_to_json(f.trace);
        out["failures"].push_back(std::move(item));
    }
    return out;
}

std::string histogram_to_csv(int n, const Histogram& h) {
    std::ostringstream os;
    os << "n,k,j,count\n";
    for (const auto& [key, count] : h.entries()) {
        os << n << ',' << key.first << ',' << key.second << ',' << count << '\n';
    }
    return os.str();
}

Json histogram_to_json(int n, const Histogram& h) {
    Json out;
    out["n"] = n;
    out["total"] = h.total();
    out["entries"] = Json::array();
    for (const auto& [key, count] : h.entries()) {
        out["entries"].push_back(Json{{"k", key.first}, {"j", key.second}, {"count", count}});
    }
    out["k_marginal"] = Json::array();
    for (const auto& [k, count] : h.k_marginal()) {
        out["k_marginal"].push_back(Json{{"k", k}, {"count", count}});
    }
    return out;
}

Json series_to_json(const TruncatedSeries& s) {
    Json out;
    out["order"] = s.order();
    out["terms"] = Json::array();
    for (int e = 0; e <= s.order(); ++e) {
        for (const auto& [m, c] : s.coefficient(e).terms()) {
            Json mono = Json::object();
            for (Symbol sym : {Symbol::A, Symbol::B, Symbol::Z, Symbol::Alpha}) {
                if (m.exponent(sym) > 0) {
                    mono[std::string(symbol_name(sym))] = m.exponent(sym);
                }
            }
            Json term;
            term["q"] = e;
            term["monomial"] = std::move(mono);
            term["coeff"] = integer_to_json(c);
            out["terms"].push_back(std::move(term));
        }
    }
    return out;
}

Json identity_report_to_json(const IdentityReport& r) {
    Json out;
    out["identity"] = to_string(r.identity);
    out["order"] = r.order;
    if (r.L) {
        out["L"] = *r.L;
    }
    if (r.z_cap) {
        out["z_cap"] = *r.z_cap;
    }
    out["equal"] = r.equal;
    if (r.first_difference) {
        const auto& d = *r.first_difference;
        out["first_difference"] = Json{{"q", d.q_exponent},
                                       {"monomial", d.monomial.to_string()},
                                       {"lhs", integer_to_json(d.lhs)},
                                       {"rhs", integer_to_json(d.rhs)}};
    }
    out["lhs"] = series_to_json(r.lhs);
    out["rhs"] = series_to_json(r.rhs);
    return out;
}

}  // namespace lebesgue
