#include "lebesgue/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "lebesgue/enumeration.hpp"
#include "lebesgue/identities.hpp"
#include "lebesgue/render.hpp"
#include "lebesgue/serialize.hpp"

namespace lebesgue {

namespace {

enum class Format { Text, Json, Ascii };

const std::map<std::string, Format> kFormats{{"text", Format::Text}, {"json", Format::Json}, {"ascii", Format::Ascii}};

int pair_cap() {
    const char* env = std::getenv(kMaxNEnv);
    if (env == nullptr || *env == '\0') {
        return kDefaultPairCap;
    }
    int value = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value < 0) {
        throw InvalidInput(std::string(kMaxNEnv) + " must be a non-negative integer");
    }
    return value;
}

Partition parse_named(const std::string& name, const std::string& text) {
    try {
        return parse_partition(text, true);
    } catch (const InvalidInput& e) {
        throw InvalidInput(name + ": " + e.what());
    }
}

void print_pairs_p(std::ostream& out, const std::vector<PairP>& pairs) {
    for (const auto& p : pairs) {
        out << "alpha=" << display(p.alpha) << " beta=" << display(p.beta) << '\n';
    }
    out << "count: " << pairs.size() << '\n';
}

void print_pairs_q(std::ostream& out, const std::vector<PairQ>& pairs) {
    for (const auto& q : pairs) {
        out << "mu=" << display(q.mu) << " nu=" << display(q.nu) << '\n';
    }
    out << "count: " << pairs.size() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Iterated bijection for the Lebesgue identity, with exhaustive and q-series checks"};
    app.require_subcommand(1);

    Format format = Format::Text;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text, json or ascii")
            ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    };

    std::string alpha_s, beta_s, mu_s, nu_s;
    auto* trace = app.add_subcommand("trace", "apply the forward map to (alpha, beta) step by step");
    trace->add_option("--alpha", alpha_s, "parts of alpha, e.g. 6,5,3,1")->required();
    trace->add_option("--beta", beta_s, "parts of beta; \"\" for the empty partition")->required();
    add_format(trace);

    auto* invert = app.add_subcommand("invert", "recover (alpha, beta) from (mu, nu)");
    invert->add_option("--mu", mu_s, "parts of mu")->required();
    invert->add_option("--nu", nu_s, "parts of nu (all even)")->required();
    add_format(invert);

    int n = 0;
    std::string side_s = "P";
    bool histogram = false;
    auto* enumerate = app.add_subcommand("enumerate", "list P_n or Q_n, or their refinement histogram");
    enumerate->add_option("--n", n, "total weight")->required();
    enumerate->add_option("--side", side_s, "P or Q")->check(CLI::IsMember({"P", "Q"}));
    enumerate->add_flag("--histogram", histogram, "emit the (k, j) histogram instead of the pairs");
    add_format(enumerate);

    std::string identity_s;
    int order = 0;
    std::optional<int> L;
    auto* verify = app.add_subcommand("verify", "compare both sides of a q-series identity");
    verify->add_option("--identity", identity_s, "lebesgue, rv, fu or rowell")->required();
    verify->add_option("--order", order, "truncation order in q")->required();
    verify->add_option("--L", L, "finite parameter for rowell");
    add_format(verify);

    std::optional<int> max_n;
    std::string trace_file;
    auto* check = app.add_subcommand("check", "exhaustively verify the bijection, or audit a saved JSON trace");
    auto* max_n_opt = check->add_option("--max-n", max_n, "largest total weight to check");
    auto* trace_opt = check->add_option("--trace-file", trace_file, "forward trace JSON to replay")
                          ->check(CLI::ExistingFile);
    max_n_opt->excludes(trace_opt);
    check->require_option(1);
    add_format(check);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    try {
        if (trace->parsed()) {
            Partition alpha = parse_named("alpha", alpha_s);
            Partition beta = parse_named("beta", beta_s);
            const auto t = trace_forward(PairP::make(std::move(alpha), std::move(beta)));
            if (format == Format::Json) {
                out << forward_trace_to_json(t).dump() << '\n';
            } else if (format == Format::Ascii) {
                out << render_forward_ascii(t);
            } else {
                out << render_forward_text(t);
            }
            return kExitOk;
        }

        if (invert->parsed()) {
            Partition mu = parse_named("mu", mu_s);
            Partition nu = parse_named("nu", nu_s);
            const PairQ q = PairQ::make(std::move(mu), std::move(nu));
            const auto t = trace_inverse(q);
            if (format == Format::Json) {
                out << inverse_trace_to_json(t).dump() << '\n';
            } else if (format == Format::Ascii) {
                out << render_inverse_ascii(t);
            } else {
                out << render_inverse_text(t);
            }
            return kExitOk;
        }

        if (enumerate->parsed()) {
            const int cap = pair_cap();
            const Side side = side_s == "P" ? Side::P : Side::Q;
            if (histogram) {
                const Histogram h = refinement_histogram(side, n, cap);
                if (format == Format::Json) {
                    out << histogram_to_json(n, h).dump() << '\n';
                } else {
                    out << histogram_to_csv(n, h);
                }
                return kExitOk;
            }
            if (side == Side::P) {
                const auto pairs = enumerate_P(n, cap);
                if (format == Format::Json) {
                    Json j = Json::array();
                    for (const auto& p : pairs) {
                        j.push_back(Json{{"alpha", partition_to_json(p.alpha)}, {"beta", partition_to_json(p.beta)}});
                    }
                    out << j.dump() << '\n';
                } else {
                    print_pairs_p(out, pairs);
                }
            } else {
                const auto pairs = enumerate_Q(n, cap);
                if (format == Format::Json) {
                    Json j = Json::array();
                    for (const auto& q : pairs) {
                        j.push_back(Json{{"mu", partition_to_json(q.mu)}, {"nu", partition_to_json(q.nu)}});
                    }
                    out << j.dump() << '\n';
                } else {
                    print_pairs_q(out, pairs);
                }
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            const IdentityReport r = verify_identity(parse_identity(identity_s), order, L);
            if (format == Format::Json) {
                out << identity_report_to_json(r).dump() << '\n';
            } else {
                out << to_string(r.identity) << " order=" << r.order;
                if (r.L) {
                    out << " L=" << *r.L;
                }
                if (r.z_cap) {
                    out << " (mod z^" << (*r.z_cap + 1) << ")";
                }
                out << ": " << (r.equal ? "equal" : "MISMATCH") << '\n';
                if (r.first_difference) {
                    const auto& d = *r.first_difference;
                    out << "first difference at q^" << d.q_exponent << " monomial '"
                        << (d.monomial.is_one() ? std::string("1") : d.monomial.to_string()) << "': lhs=" << d.lhs
                        << " rhs=" << d.rhs << '\n';
                }
                out << "lhs: " << r.lhs.to_string() << '\n';
                out << "rhs: " << r.rhs.to_string() << '\n';
            }
            return r.equal ? kExitOk : kExitFailure;
        }

        if (check->parsed() && !max_n) {
            std::ifstream in(trace_file);
            Json doc;
            try {
                doc = Json::parse(in);
            } catch (const Json::parse_error& e) {
                throw InvalidInput(std::string("trace file is not valid JSON: ") + e.what());
            }
            const auto problems = audit_forward_trace(doc);
            if (format == Format::Json) {
                out << Json{{"file", trace_file}, {"passed", problems.empty()}, {"problems", problems}}.dump() << '\n';
            } else {
                for (const auto& p : problems) {
                    out << "problem: " << p << '\n';
                }
                out << trace_file << ": " << (problems.empty() ? "consistent" : "INCONSISTENT") << '\n';
            }
            return problems.empty() ? kExitOk : kExitFailure;
        }

        if (check->parsed()) {
            const BijectionReport r = verify_bijection_up_to(*max_n, pair_cap());
            if (format == Format::Json) {
                out << bijection_report_to_json(r).dump() << '\n';
            } else {
                for (int k = 0; k <= r.max_n; ++k) {
                    out << "n=" << k << " |P_n|=" << r.p_counts[static_cast<std::size_t>(k)]
                        << " |Q_n|=" << r.q_counts[static_cast<std::size_t>(k)] << '\n';
                }
                out << "checked " << r.checked << " pairs (" << r.steps << " steps) for n <= " << r.max_n << ": "
                    << (r.passed() ? "passed" : "FAILED") << '\n';
                for (const auto& f : r.failures) {
                    out << "failure: alpha=" << display(f.pair.alpha) << " beta=" << display(f.pair.beta) << ": "
                        << f.reason << '\n';
                }
            }
            return r.passed() ? kExitOk : kExitFailure;
        }
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const LimitExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitInvalid;
}

}  // namespace lebesgue
