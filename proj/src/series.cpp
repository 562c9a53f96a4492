#include "lebesgue/series.hpp"

#include <utility>

#include "lebesgue/partition.hpp"

namespace lebesgue {

namespace {

const Polynomial kZero{};

}  // namespace

TruncatedSeries::TruncatedSeries(int order, DegreeCaps caps)
    : order_(order), caps_(caps) {
    if (order < 0) {
        throw InvalidInput("truncation order must be non-negative");
    }
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::one(int order, DegreeCaps caps) {
    TruncatedSeries s(order, caps);
    s.coeffs_[0] = Polynomial(Integer(1));
    return s;
}

TruncatedSeries TruncatedSeries::term(const QTerm& t, int order, DegreeCaps caps) {
    if (t.q_power < 0) {
        throw InvalidInput("negative q-exponent in a power series term");
    }
    TruncatedSeries s(order, caps);
    if (within_caps(t.monomial, caps)) {
        s.add_to(t.q_power, Polynomial(t.coeff, t.monomial));
    }
    return s;
}

const Polynomial& TruncatedSeries::coefficient(int e) const {
    if (e < 0 || e > order_) {
        return kZero;
    }
    return coeffs_[static_cast<std::size_t>(e)];
}

void TruncatedSeries::add_to(int e, const Polynomial& p) {
    if (e < 0) {
        throw InvalidInput("negative q-exponent in a power series term");
    }
    if (e <= order_) {
        coeffs_[static_cast<std::size_t>(e)] += p;
    }
}

bool TruncatedSeries::is_one() const {
    if (!coeffs_[0].is_constant(1)) {
        return false;
    }
    for (int e = 1; e <= order_; ++e) {
        if (!coeffs_[static_cast<std::size_t>(e)].is_zero()) {
            return false;
        }
    }
    return true;
}

void TruncatedSeries::require_compatible(const TruncatedSeries& other) const {
    if (order_ != other.order_) {
        throw InvalidInput("mismatched truncation orders " + std::to_string(order_) + " and " +
                           std::to_string(other.order_));
    }
    if (caps_ != other.caps_) {
        throw InvalidInput("mismatched symbol degree caps");
    }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    require_compatible(other);
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        coeffs_[e] += other.coeffs_[e];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
    require_compatible(other);
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        coeffs_[e] -= other.coeffs_[e];
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
    x.require_compatible(y);
    TruncatedSeries out(x.order_, x.caps_);
    for (int i = 0; i <= x.order_; ++i) {
        const auto& xi = x.coeffs_[static_cast<std::size_t>(i)];
        if (xi.is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= x.order_; ++j) {
            const auto& yj = y.coeffs_[static_cast<std::size_t>(j)];
            if (!yj.is_zero()) {
                out.coeffs_[static_cast<std::size_t>(i + j)].add_product(xi, yj, x.caps_);
            }
        }
    }
    return out;
}

void TruncatedSeries::mul_binomial(const QTerm& t) {
    if (t.q_power < 0) {
        throw InvalidInput("negative q-exponent in a power series term");
    }
    if (t.q_power > order_ || !within_caps(t.monomial, caps_)) {
        return;
    }
    const Polynomial factor(t.coeff, t.monomial);
    if (t.q_power == 0) {
        for (auto& c : coeffs_) {
            c += Polynomial::multiply(c, factor, caps_);
        }
        return;
    }
    // Descending so each source coefficient is read before it is updated.
    for (int e = order_; e >= t.q_power; --e) {
        const auto& src = coeffs_[static_cast<std::size_t>(e - t.q_power)];
        if (!src.is_zero()) {
            coeffs_[static_cast<std::size_t>(e)].add_product(src, factor, caps_);
        }
    }
}

void TruncatedSeries::div_binomial(const QTerm& t) {
    if (t.q_power <= 0) {
        throw InvalidInput("div_binomial needs a positive q-power");
    }
    if (t.q_power > order_ || !within_caps(t.monomial, caps_)) {
        return;
    }
    // y (1 + t) = x  =>  y_e = x_e - t y_{e-s}, ascending.
    const Polynomial factor(-t.coeff, t.monomial);
    for (int e = t.q_power; e <= order_; ++e) {
        const auto& src = coeffs_[static_cast<std::size_t>(e - t.q_power)];
        if (!src.is_zero()) {
            coeffs_[static_cast<std::size_t>(e)].add_product(src, factor, caps_);
        }
    }
}

TruncatedSeries TruncatedSeries::times(const QTerm& t) const {
    TruncatedSeries out(order_, caps_);
    if (t.q_power < 0) {
        throw InvalidInput("negative q-exponent in a power series term");
    }
    const Polynomial factor(t.coeff, t.monomial);
    for (int e = 0; e + t.q_power <= order_; ++e) {
        out.coeffs_[static_cast<std::size_t>(e + t.q_power)].add_product(coeffs_[static_cast<std::size_t>(e)],
                                                                          factor, caps_);
    }
    return out;
}

std::string TruncatedSeries::to_string() const {
    std::string out;
    for (int e = 0; e <= order_; ++e) {
        for (const auto& [m, c] : coeffs_[static_cast<std::size_t>(e)].terms()) {
            const bool negative = c < 0;
            const Integer mag = negative ? Integer(-c) : c;
            if (out.empty()) {
                out += negative ? "-" : "";
            } else {
                out += negative ? " - " : " + ";
            }
            std::string body;
            if (mag != 1 || (m.is_one() && e == 0)) {
                body = mag.str();
            }
            auto append = [&body](const std::string& factor) {
                if (!body.empty()) {
                    body += '*';
                }
                body += factor;
            };
            if (!m.is_one()) {
                append(m.to_string());
            }
            if (e == 1) {
                append("q");
            } else if (e > 1) {
                append("q^" + std::to_string(e));
            }
            out += body;
        }
    }
    return out.empty() ? "0" : out;
}

TruncatedSeries series_add(const TruncatedSeries& x, const TruncatedSeries& y) {
    return x + y;
}

TruncatedSeries series_mul(const TruncatedSeries& x, const TruncatedSeries& y) {
    return x * y;
}

TruncatedSeries series_inverse(const TruncatedSeries& x) {
    const Polynomial& c0 = x.coefficient(0);
    int unit = 0;
    if (c0.is_constant(1)) {
        unit = 1;
    } else if (c0.is_constant(-1)) {
        unit = -1;
    } else {
        throw InvalidInput("series_inverse needs constant term 1 or -1, got " + c0.to_string());
    }
    // y_0 = unit, y_n = -unit * sum_{k=1}^{n} x_k y_{n-k}
    TruncatedSeries y(x.order(), x.caps());
    y.add_to(0, Polynomial(Integer(unit)));
    for (int n = 1; n <= x.order(); ++n) {
        Polynomial acc;
        for (int k = 1; k <= n; ++k) {
            const auto& xk = x.coefficient(k);
            if (!xk.is_zero()) {
                acc.add_product(xk, y.coefficient(n - k), x.caps());
            }
        }
        y.add_to(n, unit == 1 ? -acc : acc);
    }
    return y;
}

TruncatedSeries pochhammer(const QTerm& c, int step, std::optional<int> count, int order, DegreeCaps caps) {
    if (step <= 0) {
        throw InvalidInput("pochhammer step must be positive");
    }
    if (c.q_power < 0) {
        throw InvalidInput("pochhammer base must carry a non-negative q-power");
    }
    if (count && *count < 0) {
        throw InvalidInput("pochhammer count must be non-negative");
    }
    if (!count && c.q_power == 0) {
        throw InvalidInput("infinite pochhammer product with a q-free base does not converge");
    }
    TruncatedSeries s = TruncatedSeries::one(order, caps);
    for (int k = 0; !count || k < *count; ++k) {
        const std::int64_t e = static_cast<std::int64_t>(c.q_power) + static_cast<std::int64_t>(k) * step;
        if (e > order) {
            break;  // every later factor is 1 modulo q^{order+1}
        }
        s.mul_binomial(QTerm{-c.coeff, c.monomial, static_cast<int>(e)});
    }
    return s;
}

TruncatedSeries gaussian_binomial(int L, int n, int step, int order) {
    if (n < 0 || n > L) {
        throw InvalidInput("gaussian_binomial needs 0 <= n <= L");
    }
    if (step <= 0) {
        throw InvalidInput("gaussian_binomial step must be positive");
    }
    const QTerm base{1, {}, step};
    auto numer = pochhammer(base, step, L, order);
    auto denom = pochhammer(base, step, n, order) * pochhammer(base, step, L - n, order);
    auto result = numer * series_inverse(denom);

    const std::int64_t degree = static_cast<std::int64_t>(n) * (L - n) * step;
    if (degree <= order) {
        for (int e = static_cast<int>(degree) + 1; e <= order; ++e) {
            if (!result.coefficient(e).is_zero()) {
                throw ConsistencyError("gaussian binomial division left a remainder");
            }
        }
    }
    return result;
}

}  // namespace lebesgue
