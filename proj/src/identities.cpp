#include "lebesgue/identities.hpp"

#include "lebesgue/partition.hpp"

namespace lebesgue {

namespace {

const Monomial kA = Monomial::of(Symbol::A);
const Monomial kB = Monomial::of(Symbol::B);
const Monomial kZ = Monomial::of(Symbol::Z);
const Monomial kAlpha = Monomial::of(Symbol::Alpha);

Monomial power(Monomial m, int e) {
    Monomial out;
    for (int i = 0; i < e; ++i) {
        out = out * m;
    }
    return out;
}

std::int64_t triangular(std::int64_t k) {
    return k * (k + 1) / 2;
}

/// Largest k with k(k+1)/2 <= order.
int last_triangular_index(int order) {
    int k = 0;
    while (triangular(k + 1) <= order) {
        ++k;
    }
    return k;
}

/// sum_k (-aq;q)_k / (q;q)_k * extra^k * q^{k(k+1)/2}; shared by the lebesgue and fu left sides.
TruncatedSeries lebesgue_type_lhs(int order, Monomial extra) {
    TruncatedSeries sum(order);
    TruncatedSeries ratio = TruncatedSeries::one(order);  // (-aq;q)_k / (q;q)_k
    for (int k = 0; triangular(k) <= order; ++k) {
        if (k > 0) {
            ratio.mul_binomial(QTerm{1, kA, k});
            ratio.div_binomial(QTerm{-1, {}, k});
        }
        sum += ratio.times(QTerm{1, power(extra, k), static_cast<int>(triangular(k))});
    }
    return sum;
}

void check_order(int order, int cap) {
    if (order < 0) {
        throw InvalidInput("order must be non-negative");
    }
    if (order > cap) {
        throw LimitExceeded("order " + std::to_string(order) + " exceeds series cap " + std::to_string(cap));
    }
}

}  // namespace

Identity parse_identity(const std::string& name) {
    if (name == "lebesgue") return Identity::Lebesgue;
    if (name == "rv") return Identity::RV;
    if (name == "fu") return Identity::Fu;
    if (name == "rowell") return Identity::Rowell;
    throw InvalidInput("unknown identity '" + name + "' (expected lebesgue, rv, fu or rowell)");
}

std::string to_string(Identity id) {
    switch (id) {
        case Identity::Lebesgue: return "lebesgue";
        case Identity::RV: return "rv";
        case Identity::Fu: return "fu";
        case Identity::Rowell: return "rowell";
    }
    return "?";
}

TruncatedSeries lebesgue_lhs(int order) {
    return lebesgue_type_lhs(order, Monomial{});
}

TruncatedSeries lebesgue_rhs(int order) {
    return pochhammer(QTerm{-1, kA, 2}, 2, std::nullopt, order) * pochhammer(QTerm{-1, {}, 1}, 1, std::nullopt, order);
}

int rv_default_z_cap(int order) {
    return last_triangular_index(order) + 2;
}

TruncatedSeries rv_lhs(int order, int z_cap) {
    DegreeCaps caps{};
    caps[static_cast<std::size_t>(Symbol::Z)] = static_cast<std::uint32_t>(z_cap);
    TruncatedSeries sum(order, caps);
    TruncatedSeries ratio = TruncatedSeries::one(order, caps);  // (z;q)_m / (q;q)_m
    for (int m = 0; triangular(m) <= order; ++m) {
        if (m > 0) {
            ratio.mul_binomial(QTerm{-1, kZ, m - 1});
            ratio.div_binomial(QTerm{-1, {}, m});
        }
        sum += ratio.times(QTerm{1, power(kAlpha, m), static_cast<int>(triangular(m))});
    }
    return sum;
}

TruncatedSeries rv_rhs(int order, int z_cap) {
    DegreeCaps caps{};
    caps[static_cast<std::size_t>(Symbol::Z)] = static_cast<std::uint32_t>(z_cap);

    // (z;q)_inf = (1 - z) (zq;q)_inf; the second factor converges as a q-series.
    TruncatedSeries prefactor = pochhammer(QTerm{1, kZ, 0}, 1, 1, order, caps);
    prefactor = prefactor * pochhammer(QTerm{1, kZ, 1}, 1, std::nullopt, order, caps);
    prefactor = prefactor * pochhammer(QTerm{-1, kAlpha, 1}, 1, std::nullopt, order, caps);

    // Terms with n > z_cap vanish modulo z^{z_cap+1}.
    TruncatedSeries sum(order, caps);
    TruncatedSeries ratio = TruncatedSeries::one(order, caps);  // 1 / ((q;q)_n (-alpha q;q)_n)
    for (int n = 0; n <= z_cap; ++n) {
        if (n > 0) {
            ratio.div_binomial(QTerm{-1, {}, n});
            ratio.div_binomial(QTerm{1, kAlpha, n});
        }
        sum += ratio.times(QTerm{1, power(kZ, n), 0});
    }
    return prefactor * sum;
}

TruncatedSeries fu_lhs(int order) {
    return lebesgue_type_lhs(order, kB);
}

TruncatedSeries fu_rhs(int order) {
    TruncatedSeries sum(order);
    TruncatedSeries ratio = TruncatedSeries::one(order);  // 1 / ((q;q)_k (-bq;q)_k)
    for (int k = 0; 2 * triangular(k) <= order; ++k) {
        if (k > 0) {
            ratio.div_binomial(QTerm{-1, {}, k});
            ratio.div_binomial(QTerm{1, kB, k});
        }
        sum += ratio.times(QTerm{1, power(kA * kB, k), static_cast<int>(2 * triangular(k))});
    }
    return pochhammer(QTerm{-1, kB, 1}, 1, std::nullopt, order) * sum;
}

TruncatedSeries rowell_lhs(int L, int order) {
    if (L < 0) {
        throw InvalidInput("rowell needs L >= 0");
    }
    TruncatedSeries sum(order);
    for (int n = 0; n <= L && triangular(n) <= order; ++n) {
        auto term = gaussian_binomial(L, n, 1, order) * pochhammer(QTerm{-1, kA, 1}, 1, n, order);
        sum += term.times(QTerm{1, {}, static_cast<int>(triangular(n))});
    }
    return sum;
}

TruncatedSeries rowell_rhs(int L, int order) {
    if (L < 0) {
        throw InvalidInput("rowell needs L >= 0");
    }
    TruncatedSeries sum(order);
    for (int k = 0; k <= L && 2 * triangular(k) <= order; ++k) {
        auto term = gaussian_binomial(L, k, 2, order) * pochhammer(QTerm{-1, {}, 1}, 1, L - k, order);
        sum += term.times(QTerm{1, power(kA, k), static_cast<int>(2 * triangular(k))});
    }
    return sum;
}

std::optional<Discrepancy> first_difference(const TruncatedSeries& x, const TruncatedSeries& y) {
    const int order = std::max(x.order(), y.order());
    for (int e = 0; e <= order; ++e) {
        const Polynomial diff = x.coefficient(e) - y.coefficient(e);
        if (!diff.is_zero()) {
            const Monomial m = diff.terms().begin()->first;
            return Discrepancy{e, m, x.coefficient(e).coefficient(m), y.coefficient(e).coefficient(m)};
        }
    }
    return std::nullopt;
}

IdentityReport verify_identity(Identity id, int order, std::optional<int> L, int cap) {
    check_order(order, cap);
    if (id == Identity::Rowell) {
        if (!L) {
            throw InvalidInput("rowell needs a value for L");
        }
        if (*L < 0) {
            throw InvalidInput("rowell needs L >= 0");
        }
    } else if (L) {
        throw InvalidInput("L only applies to the rowell identity");
    }

    IdentityReport report;
    report.identity = id;
    report.order = order;
    report.L = L;
    switch (id) {
        case Identity::Lebesgue:
            report.lhs = lebesgue_lhs(order);
            report.rhs = lebesgue_rhs(order);
            break;
        case Identity::RV: {
            const int z_cap = rv_default_z_cap(order);
            report.z_cap = z_cap;
            report.lhs = rv_lhs(order, z_cap);
            report.rhs = rv_rhs(order, z_cap);
            break;
        }
        case Identity::Fu:
            report.lhs = fu_lhs(order);
            report.rhs = fu_rhs(order);
            break;
        case Identity::Rowell:
            report.lhs = rowell_lhs(*L, order);
            report.rhs = rowell_rhs(*L, order);
            break;
    }
    report.first_difference = first_difference(report.lhs, report.rhs);
    report.equal = !report.first_difference.has_value();
    return report;
}

}  // namespace lebesgue
