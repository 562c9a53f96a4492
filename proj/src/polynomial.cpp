#include "lebesgue/polynomial.hpp"

#include <stdexcept>

namespace lebesgue {

namespace {

constexpr std::array<Symbol, kNumSymbols> kSymbols{Symbol::A, Symbol::B, Symbol::Z, Symbol::Alpha};

}  // namespace

std::string_view symbol_name(Symbol s) {
    switch (s) {
        case Symbol::A: return "a";
        case Symbol::B: return "b";
        case Symbol::Z: return "z";
        case Symbol::Alpha: return "alpha";
    }
    return "?";
}

std::optional<Symbol> parse_symbol(std::string_view name) {
    for (Symbol s : kSymbols) {
        if (symbol_name(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

Monomial Monomial::of(Symbol s, std::uint32_t exponent) {
    if (exponent > kMaxExponent) {
        throw std::overflow_error("monomial exponent overflow");
    }
    Monomial m;
    m.bits_ = static_cast<std::uint64_t>(exponent) << shift(s);
    return m;
}

std::uint32_t Monomial::total_degree() const noexcept {
    std::uint32_t d = 0;
    for (Symbol s : kSymbols) {
        d += exponent(s);
    }
    return d;
}

Monomial Monomial::operator*(Monomial other) const {
    Monomial out;
    for (Symbol s : kSymbols) {
        const std::uint32_t e = exponent(s) + other.exponent(s);
        if (e > kMaxExponent) {
            throw std::overflow_error("monomial exponent overflow");
        }
        out.bits_ |= static_cast<std::uint64_t>(e) << shift(s);
    }
    return out;
}

std::string Monomial::to_string() const {
    std::string out;
    for (Symbol s : kSymbols) {
        const auto e = exponent(s);
        if (e == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += symbol_name(s);
        if (e > 1) {
            out += '^' + std::to_string(e);
        }
    }
    return out;
}

std::strong_ordering operator<=>(Monomial x, Monomial y) {
    if (auto c = x.total_degree() <=> y.total_degree(); c != 0) {
        return c;
    }
    for (Symbol s : kSymbols) {
        // Higher power of an earlier symbol sorts first: a before b, a^2 before a*b.
        if (auto c = y.exponent(s) <=> x.exponent(s); c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

bool within_caps(Monomial m, const DegreeCaps& caps) {
    for (Symbol s : kSymbols) {
        const auto& cap = caps[static_cast<std::size_t>(s)];
        if (cap && m.exponent(s) > *cap) {
            return false;
        }
    }
    return true;
}

Polynomial::Polynomial(Integer constant) {
    add_term(Monomial{}, constant);
}

Polynomial::Polynomial(Integer coeff, Monomial m) {
    add_term(m, coeff);
}

Integer Polynomial::coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

bool Polynomial::is_constant(const Integer& c) const {
    if (c == 0) {
        return terms_.empty();
    }
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == c;
}

void Polynomial::add_term(Monomial m, const Integer& c) {
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) {
        add_term(m, -c);
    }
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) {
        c = -c;
    }
    return out;
}

Polynomial Polynomial::multiply(const Polynomial& x, const Polynomial& y, const DegreeCaps& caps) {
    Polynomial out;
    out.add_product(x, y, caps);
    return out;
}

void Polynomial::add_product(const Polynomial& x, const Polynomial& y, const DegreeCaps& caps) {
    for (const auto& [mx, cx] : x.terms_) {
        for (const auto& [my, cy] : y.terms_) {
            const Monomial m = mx * my;
            if (within_caps(m, caps)) {
                add_term(m, cx * cy);
            }
        }
    }
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            out += mag.str();
        } else if (mag == 1) {
            out += m.to_string();
        } else {
            out += mag.str() + "*" + m.to_string();
        }
    }
    return out;
}

}  // namespace lebesgue
