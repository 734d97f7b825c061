#pragma once

// Binary polynomials packed into a 64-bit mask (bit i = coefficient of x^i),
// with the irreducibility and primitivity tests used by the LFSR constructions.

#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dbc/core.hpp"

namespace dbc {

class Gf2Polynomial {
public:
    constexpr Gf2Polynomial() = default;
    constexpr explicit Gf2Polynomial(std::uint64_t mask) : mask_(mask) {}

    /// Builds c_0 + c_1 x + ... + c_n x^n from {c_0, ..., c_n}.
    static Gf2Polynomial from_coefficients(std::span<const int> coeffs) {
        detail::require(coeffs.size() <= 64, "polynomial degree exceeds 63");
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] & 1) mask |= std::uint64_t{1} << i;
        return Gf2Polynomial(mask);
    }

    /// Accepts "x9+x4+1" (also "x^9+x^4+1"), a hex mask "0x211", or a bit
    /// string "1000010001" written from x^n down to x^0.
    static Gf2Polynomial parse(std::string_view text) {
        detail::require(!text.empty(), "empty polynomial");
        if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
            std::uint64_t mask = 0;
            for (char c : text.substr(2)) {
                const int v = std::isdigit(static_cast<unsigned char>(c))
                                  ? c - '0'
                                  : (std::tolower(static_cast<unsigned char>(c)) >= 'a' &&
                                     std::tolower(static_cast<unsigned char>(c)) <= 'f')
                                        ? std::tolower(static_cast<unsigned char>(c)) - 'a' + 10
                                        : -1;
                detail::require(v >= 0, "invalid hex digit in polynomial '" + std::string(text) + "'");
                detail::require(mask >> 60 == 0, "polynomial degree exceeds 63");
                mask = (mask << 4) | static_cast<std::uint64_t>(v);
            }
            return Gf2Polynomial(mask);
        }
        if (text.find_first_not_of("01") == std::string_view::npos) {
            detail::require(text.size() <= 64, "polynomial degree exceeds 63");
            std::uint64_t mask = 0;
            for (char c : text) mask = (mask << 1) | static_cast<std::uint64_t>(c - '0');
            return Gf2Polynomial(mask);
        }
        std::uint64_t mask = 0;
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t end = text.find('+', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view term = text.substr(pos, end - pos);
            unsigned exponent = 0;
            if (term == "1") {
                exponent = 0;
            } else if (term == "x") {
                exponent = 1;
            } else {
                detail::require(term.size() >= 2 && term[0] == 'x',
                                "invalid polynomial term '" + std::string(term) + "'");
                term.remove_prefix(term[1] == '^' ? 2 : 1);
                detail::require(!term.empty() && term.find_first_not_of("0123456789") ==
                                                     std::string_view::npos,
                                "invalid polynomial exponent in '" + std::string(text) + "'");
                exponent = static_cast<unsigned>(std::stoul(std::string(term)));
            }
            detail::require(exponent < 64, "polynomial degree exceeds 63");
            mask ^= std::uint64_t{1} << exponent;
            pos = end + 1;
        }
        return Gf2Polynomial(mask);
    }

    constexpr std::uint64_t mask() const noexcept { return mask_; }
    constexpr int degree() const noexcept { return static_cast<int>(std::bit_width(mask_)) - 1; }
    constexpr bool coefficient(unsigned i) const noexcept { return i < 64 && ((mask_ >> i) & 1); }
    constexpr bool is_zero() const noexcept { return mask_ == 0; }

    std::string to_string() const {
        if (mask_ == 0) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            if (!coefficient(static_cast<unsigned>(i))) continue;
            if (!out.empty()) out += '+';
            if (i == 0)
                out += '1';
            else if (i == 1)
                out += 'x';
            else
                out += "x^" + std::to_string(i);
        }
        return out;
    }

    friend constexpr bool operator==(Gf2Polynomial, Gf2Polynomial) = default;

private:
    std::uint64_t mask_ = 0;
};

namespace gf2 {

/// Carry-less product; the caller guarantees deg(a)+deg(b) < 64.
inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
    }
    return r;
}

inline Gf2Polynomial multiply(Gf2Polynomial a, Gf2Polynomial b) {
    if (a.is_zero() || b.is_zero()) return Gf2Polynomial{};
    detail::require(a.degree() + b.degree() < 64, "polynomial product degree exceeds 63");
    return Gf2Polynomial(clmul(a.mask(), b.mask()));
}

/// Quotient and remainder of a / b.
inline std::pair<Gf2Polynomial, Gf2Polynomial> divmod(Gf2Polynomial a, Gf2Polynomial b) {
    detail::require(!b.is_zero(), "division by the zero polynomial");
    std::uint64_t r = a.mask();
    std::uint64_t q = 0;
    const int db = b.degree();
    for (int d = Gf2Polynomial(r).degree(); d >= db; d = Gf2Polynomial(r).degree()) {
        q |= std::uint64_t{1} << (d - db);
        r ^= b.mask() << (d - db);
    }
    return {Gf2Polynomial(q), Gf2Polynomial(r)};
}

inline Gf2Polynomial mod(Gf2Polynomial a, Gf2Polynomial b) { return divmod(a, b).second; }

inline Gf2Polynomial gcd(Gf2Polynomial a, Gf2Polynomial b) {
    while (!b.is_zero()) {
        a = mod(a, b);
        std::swap(a, b);
    }
    return a;
}

/// a*b mod p for deg(p) <= 32.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, Gf2Polynomial p) {
    return mod(Gf2Polynomial(clmul(a, b)), p).mask();
}

/// x^e mod p for deg(p) <= 32.
inline std::uint64_t pow_x(std::uint64_t e, Gf2Polynomial p) {
    std::uint64_t result = mod(Gf2Polynomial(1), p).mask();
    std::uint64_t base = mod(Gf2Polynomial(2), p).mask();
    while (e) {
        if (e & 1) result = mulmod(result, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return result;
}

/// Distinct prime factors by trial division.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t value) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= value; ++d) {
        if (value % d) continue;
        out.push_back(d);
        while (value % d == 0) value /= d;
    }
    if (value > 1) out.push_back(value);
    return out;
}

inline constexpr int kMaxTestDegree = 32;

}  // namespace gf2

/// Rabin's test: x^(2^n) = x mod p, and gcd(x^(2^(n/r)) - x, p) = 1 for every
/// prime r dividing n.
inline bool is_irreducible(Gf2Polynomial p) {
    const int n = p.degree();
    detail::require(n >= 1, "irreducibility is undefined for degree < 1");
    detail::require(n <= gf2::kMaxTestDegree, "irreducibility test supports degree <= 32");
    if (n == 1) return true;
    if (!p.coefficient(0)) return false;

    // x^(2^k) mod p by repeated squaring.
    auto frobenius = [&](int k) {
        std::uint64_t v = gf2::mod(Gf2Polynomial(2), p).mask();
        for (int i = 0; i < k; ++i) v = gf2::mulmod(v, v, p);
        return v;
    };
    const std::uint64_t x = gf2::mod(Gf2Polynomial(2), p).mask();
    if (frobenius(n) != x) return false;
    for (std::uint64_t r : gf2::prime_factors(static_cast<std::uint64_t>(n))) {
        const std::uint64_t h = frobenius(n / static_cast<int>(r)) ^ x;
        if (gf2::gcd(p, Gf2Polynomial(h)).degree() != 0) return false;
    }
    return true;
}

/// Multiplicative order of x modulo an irreducible p.
inline std::uint64_t order_of_x(Gf2Polynomial p) {
    detail::require(is_irreducible(p), "order_of_x requires an irreducible polynomial");
    const int n = p.degree();
    std::uint64_t order = (std::uint64_t{1} << n) - 1;
    // Strip each prime factor while x^(order/f) is still 1.
    for (std::uint64_t f : gf2::prime_factors(order)) {
        while (order % f == 0 && gf2::pow_x(order / f, p) == 1) order /= f;
    }
    return order;
}

/// Irreducible with x of order 2^n - 1.
inline bool is_primitive(Gf2Polynomial p) {
    const int n = p.degree();
    detail::require(n >= 1, "primitivity is undefined for degree 0");
    detail::require(n <= gf2::kMaxTestDegree, "primitivity test supports degree <= 32");
    if (!is_irreducible(p)) return false;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    if (gf2::pow_x(full, p) != 1) return false;
    for (std::uint64_t f : gf2::prime_factors(full))
        if (gf2::pow_x(full / f, p) == 1) return false;
    return true;
}

/// Bundled primitive polynomials: every one of degree <= 8, plus trinomials
/// (both reciprocal forms) and high-exponent pentanomials up to degree 32.
inline std::span<const Gf2Polynomial> primitive_table() {
    static const std::vector<Gf2Polynomial> table = [] {
        std::vector<Gf2Polynomial> out;
        for (std::uint64_t m = 2; m < (std::uint64_t{1} << 9); ++m) {
            const Gf2Polynomial p(m);
            if (is_primitive(p)) out.push_back(p);
        }
        auto tri = [&](int n, int k) {
            out.emplace_back((std::uint64_t{1} << n) | (std::uint64_t{1} << k) | 1);
        };
        auto pent = [&](int n, int a, int b, int c) {
            out.emplace_back((std::uint64_t{1} << n) | (std::uint64_t{1} << a) |
                             (std::uint64_t{1} << b) | (std::uint64_t{1} << c) | 1);
        };
        const std::array<std::array<int, 2>, 34> trinomials{{
            {9, 4},   {9, 5},   {10, 3},  {10, 7},  {11, 2},  {11, 9},  {15, 1},
            {15, 14}, {15, 4},  {15, 11}, {17, 3},  {17, 14}, {17, 5},  {17, 12},
            {18, 7},  {18, 11}, {20, 3},  {20, 17}, {21, 2},  {21, 19}, {22, 1},
            {22, 21}, {23, 5},  {23, 18}, {25, 3},  {25, 22}, {28, 3},  {28, 25},
            {29, 2},  {29, 27}, {31, 3},  {31, 28}, {31, 6},  {31, 25},
        }};
        for (auto [n, k] : trinomials) tri(n, k);
        pent(12, 11, 8, 6);
        pent(13, 12, 11, 8);
        pent(14, 13, 11, 9);
        pent(16, 15, 12, 10);
        pent(19, 18, 17, 14);
        pent(24, 23, 22, 17);
        pent(26, 25, 24, 20);
        pent(27, 26, 25, 22);
        pent(30, 29, 26, 24);
        pent(32, 31, 26, 18);
        return out;
    }();
    return table;
}

}  // namespace dbc
