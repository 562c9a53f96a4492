#pragma once

// Sparse multivariate polynomials with exact integer coefficients over the
// fixed symbol set {a, b, z, alpha}. These are the coefficients of the
// truncated q-series.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lebesgue {

using Integer = boost::multiprecision::cpp_int;

enum class Symbol : std::uint8_t { A = 0, B = 1, Z = 2, Alpha = 3 };

inline constexpr std::size_t kNumSymbols = 4;

[[nodiscard]] std::string_view symbol_name(Symbol s);
[[nodiscard]] std::optional<Symbol> parse_symbol(std::string_view name);

/// Exponent vector over the symbol set, packed 16 bits per symbol.
class Monomial {
  public:
    static constexpr std::uint32_t kMaxExponent = 0xFFFF;

    constexpr Monomial() = default;
    static Monomial of(Symbol s, std::uint32_t exponent = 1);

    [[nodiscard]] std::uint32_t exponent(Symbol s) const noexcept {
        return static_cast<std::uint32_t>((bits_ >> shift(s)) & kMaxExponent);
    }
    [[nodiscard]] bool is_one() const noexcept { return bits_ == 0; }
    [[nodiscard]] std::uint32_t total_degree() const noexcept;

    /// Throws std::overflow_error when an exponent would exceed kMaxExponent.
    [[nodiscard]] Monomial operator*(Monomial other) const;

    /// Rendered as "a*b^2"; the empty monomial renders as "".
    [[nodiscard]] std::string to_string() const;

    friend constexpr bool operator==(Monomial, Monomial) = default;
    /// Graded by total degree, then by exponents in symbol order a, b, z, alpha.
    friend std::strong_ordering operator<=>(Monomial x, Monomial y);

  private:
    static constexpr unsigned shift(Symbol s) { return 16U * static_cast<unsigned>(s); }
    std::uint64_t bits_ = 0;
};

/// Per-symbol degree bound used to truncate products; nullopt means unbounded.
using DegreeCaps = std::array<std::optional<std::uint32_t>, kNumSymbols>;

[[nodiscard]] bool within_caps(Monomial m, const DegreeCaps& caps);

class Polynomial {
  public:
    using Terms = std::map<Monomial, Integer>;

    Polynomial() = default;
    Polynomial(Integer constant);  // NOLINT(google-explicit-constructor)
    Polynomial(Integer coeff, Monomial m);

    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] Integer coefficient(Monomial m) const;

    /// True when the polynomial is the constant c.
    [[nodiscard]] bool is_constant(const Integer& c) const;

    void add_term(Monomial m, const Integer& c);
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    [[nodiscard]] Polynomial operator-() const;

    friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
    friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
    friend Polynomial operator*(const Polynomial& x, const Polynomial& y) { return multiply(x, y, {}); }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Product with every monomial outside @p caps dropped.
    [[nodiscard]] static Polynomial multiply(const Polynomial& x, const Polynomial& y, const DegreeCaps& caps);

    /// Adds x*y (truncated by caps) into *this.
    void add_product(const Polynomial& x, const Polynomial& y, const DegreeCaps& caps);

    /// "2 + 2*a", "0" for the zero polynomial.
    [[nodiscard]] std::string to_string() const;

  private:
    Terms terms_;
};

}  // namespace lebesgue
