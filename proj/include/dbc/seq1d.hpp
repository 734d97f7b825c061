#pragma once

// One-dimensional constructions: LFSR sequence pairs and their four-sequence
// covering codes, rotation classes of cyclic codes, self-dual merging,
// interleaving, padded de Bruijn sequences, and the catalog of short seeds.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dbc/core.hpp"
#include "dbc/gf2.hpp"

namespace dbc {

// ---------------------------------------------------------------------------
// LFSR constructions

struct LfsrPair {
    CyclicSequence a;  // a_k = sum c_i a_{k-i}
    CyclicSequence b;  // b_k = sum c_i b_{k-i} + 1
};

namespace detail {

inline std::vector<Symbol> run_recursion(Gf2Polynomial p, const std::vector<Symbol>& init,
                                         Symbol constant) {
    const auto n = static_cast<std::size_t>(p.degree());
    std::vector<Symbol> history(init);
    const std::size_t cap = (std::size_t{1} << n) + 1;
    std::vector<Symbol> out;
    for (;;) {
        const std::size_t k = history.size();
        Symbol next = constant;
        for (std::size_t i = 1; i <= n; ++i)
            if (p.coefficient(static_cast<unsigned>(i))) next ^= history[k - i];
        history.push_back(next);
        out.push_back(next);
        if (std::equal(init.begin(), init.end(), history.end() - static_cast<std::ptrdiff_t>(n)))
            break;
        if (out.size() > cap) throw std::logic_error("LFSR state did not return to its seed");
    }
    return out;
}

}  // namespace detail

/// Runs both recursions of p. A starts from `init` = (a_{-n}, ..., a_{-1});
/// B starts from the complement of `init`, so B is exactly the complement of A.
inline LfsrPair lfsr_pair(Gf2Polynomial p, const std::vector<Symbol>& init) {
    const int n = p.degree();
    detail::require(n >= 1, "LFSR polynomial must have degree >= 1");
    detail::require(p.coefficient(0), "LFSR polynomial needs c_0 = 1");
    detail::require(is_irreducible(p), "polynomial " + p.to_string() + " is reducible");
    detail::require(init.size() == static_cast<std::size_t>(n),
                    "initial state must have " + std::to_string(n) + " symbols");
    detail::require(std::any_of(init.begin(), init.end(), [](Symbol s) { return s != 0; }),
                    "initial state must be nonzero");
    for (Symbol s : init) detail::require(s <= 1, "initial state must be binary");

    // The tap weight sum_{i>=1} c_i is even for every irreducible polynomial.
    if ((std::popcount(p.mask()) - 1) % 2 != 0)
        throw std::logic_error("odd tap weight for irreducible " + p.to_string());

    std::vector<Symbol> init_b(init);
    for (Symbol& s : init_b) s ^= 1;
    return {CyclicSequence(2, detail::run_recursion(p, init, 0)),
            CyclicSequence(2, detail::run_recursion(p, init_b, 1))};
}

/// The four-sequence (n+2R+1, R) code {A, complement of A, 0, 1} of a primitive
/// polynomial whose taps c_1..c_{2R+1} are all zero.
inline SequenceCode lfsr_dbcsc(Gf2Polynomial p, unsigned R) {
    const int n = p.degree();
    detail::require(n >= 1, "LFSR polynomial must have degree >= 1");
    for (unsigned i = 1; i <= 2 * R + 1; ++i) {
        if (p.coefficient(i))
            throw std::invalid_argument("coefficient c_" + std::to_string(i) + " = 1 violates c_i = 0 for 1 <= i <= " +
                                        std::to_string(2 * R + 1) + " (R=" + std::to_string(R) + ")");
    }
    detail::require(is_primitive(p), "polynomial " + p.to_string() + " is not primitive");
    std::vector<Symbol> init(static_cast<std::size_t>(n) - 1, 0);
    init.push_back(1);
    auto pair = lfsr_pair(p, init);
    std::vector<CyclicSequence> members{std::move(pair.a), std::move(pair.b),
                                        CyclicSequence(2, {0}), CyclicSequence(2, {1})};
    return SequenceCode(std::move(members), static_cast<unsigned>(n) + 2 * R + 1, R);
}

// ---------------------------------------------------------------------------
// Rotation classes of a binary cyclic code

struct NecklaceClass {
    Tuple representative;  // lexicographically least rotation
    unsigned size;         // number of distinct rotations, divides the length
};

struct NecklaceClassProfile {
    unsigned length = 0;
    std::map<unsigned, std::size_t> class_counts;  // class size -> number of classes
    std::vector<NecklaceClass> classes;            // ordered by representative
    std::size_t codeword_count = 0;
};

namespace detail {

inline std::uint64_t rotate_left(std::uint64_t v, unsigned n) {
    const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return ((v << 1) | (v >> (n - 1))) & mask;
}

}  // namespace detail

/// Enumerates every codeword i(x) g(x) of the cyclic code of length n and
/// groups the codewords by rotation.
inline NecklaceClassProfile cyclic_code_classes(Gf2Polynomial g, unsigned n,
                                                Count budget = Count{1} << 24) {
    detail::require(n >= 1 && n <= 63, "cyclic code length must be in [1, 63]");
    detail::require(!g.is_zero(), "generator polynomial must be nonzero");
    const Gf2Polynomial xn1((std::uint64_t{1} << n) | 1);
    detail::require(gf2::mod(xn1, g).is_zero(),
                    "generator " + g.to_string() + " does not divide x^" + std::to_string(n) + "+1");
    const unsigned dim = n - static_cast<unsigned>(g.degree());
    const Count codewords = Count{1} << dim;
    if (codewords > budget) throw BudgetExceeded(codewords, budget);

    // Codeword symbol j is the coefficient of x^j; as a tuple code the first
    // symbol is the most significant bit.
    auto to_code = [n](std::uint64_t poly) {
        std::uint64_t code = 0;
        for (unsigned j = 0; j < n; ++j) code = (code << 1) | ((poly >> j) & 1);
        return code;
    };

    std::map<std::uint64_t, unsigned> classes;  // canonical -> size
    for (Count info = 0; info < codewords; ++info) {
        const std::uint64_t code = to_code(gf2::clmul(info, g.mask()));
        std::uint64_t best = code;
        std::uint64_t r = code;
        unsigned size = n;
        for (unsigned s = 1; s < n; ++s) {
            r = detail::rotate_left(r, n);
            if (r == code) {
                size = s;
                break;
            }
            best = std::min(best, r);
        }
        classes.emplace(best, size);
    }

    NecklaceClassProfile profile;
    profile.length = n;
    profile.codeword_count = static_cast<std::size_t>(codewords);
    const TupleIndex index(2, n);
    for (const auto& [canon, size] : classes) {
        ++profile.class_counts[size];
        profile.classes.push_back({index.decode(canon), size});
    }
    return profile;
}

/// For a class of size d: its representative extended cyclically by d-1
/// symbols, so the string's n-windows are exactly the class members.
inline std::vector<Tuple> class_strings(const NecklaceClassProfile& profile) {
    std::vector<Tuple> out;
    out.reserve(profile.classes.size());
    for (const auto& c : profile.classes) {
        Tuple s(c.representative);
        for (unsigned i = 0; i + 1 < c.size; ++i) s.push_back(c.representative[i]);
        out.push_back(std::move(s));
    }
    return out;
}

/// Each class as a cyclic sequence of period d. Its cyclic n-windows are the
/// class members.
inline SequenceCode class_sequences(const NecklaceClassProfile& profile, unsigned radius) {
    std::vector<CyclicSequence> members;
    for (const auto& c : profile.classes)
        members.emplace_back(
            2, std::vector<Symbol>(c.representative.begin(), c.representative.begin() + c.size));
    return SequenceCode(std::move(members), profile.length, radius);
}

// ---------------------------------------------------------------------------
// Self-dual merging

/// Every Z of even weight with a leading zero yields the cyclic sequence
/// [Z, Z+X, ~Z, ~Z+X, Z, Z+Y, ~Z, ~Z+Y] of length 8l. Members are ordered by Z.
inline SequenceCode self_dual_dbcsc(const Tuple& x, const Tuple& y) {
    const std::size_t l = x.size();
    detail::require(l >= 2, "self-dual seeds need length >= 2");
    detail::require(y.size() == l, "self-dual seeds X and Y must have equal length");
    for (std::size_t i = 0; i < l; ++i) {
        detail::require(x[i] <= 1 && y[i] <= 1, "self-dual seeds must be binary");
        if (i + 1 < l)
            detail::require(x[i] == y[i], "X and Y may differ only in the last bit (position " +
                                              std::to_string(i) + " differs)");
    }
    detail::require(x[l - 1] != y[l - 1], "X and Y must differ in the last bit");
    detail::require(l <= 24, "self-dual seed length must be <= 24");

    std::vector<CyclicSequence> members;
    const TupleIndex index(2, static_cast<unsigned>(l));
    for (Count zi = 0; zi < index.size(); ++zi) {
        const Tuple z = index.decode(zi);
        if (z[0] != 0) continue;
        if (std::count(z.begin(), z.end(), Symbol{1}) % 2 != 0) continue;
        std::vector<Symbol> s;
        s.reserve(8 * l);
        auto put = [&](bool flip, const Tuple* add) {
            for (std::size_t i = 0; i < l; ++i)
                s.push_back(static_cast<Symbol>(z[i] ^ (flip ? 1 : 0) ^ (add ? (*add)[i] : 0)));
        };
        put(false, nullptr);
        put(false, &x);
        put(true, nullptr);
        put(true, &x);
        put(false, nullptr);
        put(false, &y);
        put(true, nullptr);
        put(true, &y);
        members.emplace_back(2, std::move(s));
    }
    return SequenceCode(std::move(members), static_cast<unsigned>(2 * l), 1);
}

// ---------------------------------------------------------------------------
// Interleaving

struct InterleaveResult {
    CyclicSequence sequence;
    std::size_t pairings;  // |S|*|T|: distinct (S-window, T-window) alignments
    unsigned n;
    unsigned radius;
};

namespace detail {

/// Smallest p dividing |w| with w p-periodic.
inline std::size_t minimal_period(const std::vector<Symbol>& w) {
    std::vector<std::size_t> pi(w.size(), 0);
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::size_t k = pi[i - 1];
        while (k > 0 && w[i] != w[k]) k = pi[k - 1];
        if (w[i] == w[k]) ++k;
        pi[i] = k;
    }
    const std::size_t p = w.size() - pi.back();
    return w.size() % p == 0 ? p : w.size();
}

}  // namespace detail

/// Writes s_0 t_0 s_1 t_1 ... until both sequences are back at their start,
/// i.e. 2|S||T| symbols, then reduces to the minimal period. Windows of the
/// result pair every n_S-window of S with every n_T-window of T, so the
/// result is an (n_S+n_T, R_S+R_T) covering sequence.
inline InterleaveResult interleave(const CyclicSequence& s, const CyclicSequence& t, unsigned ns,
                                   unsigned nt, unsigned rs, unsigned rt) {
    detail::require(s.alphabet() == t.alphabet(), "interleaved sequences must share one alphabet");
    const std::size_t k1 = s.period();
    const std::size_t k2 = t.period();
    detail::require(std::gcd(k1, k2) == 1, "interleaving needs coprime lengths, gcd(" +
                                               std::to_string(k1) + ", " + std::to_string(k2) +
                                               ") = " + std::to_string(std::gcd(k1, k2)));
    detail::require(nt + 1 >= ns && nt <= ns + 1,
                    "window lengths must satisfy n_S-1 <= n_T <= n_S+1, got " + std::to_string(ns) +
                        " and " + std::to_string(nt));
    const std::size_t pairs = k1 * k2;
    std::vector<Symbol> out(2 * pairs);
    for (std::size_t i = 0; i < pairs; ++i) {
        out[2 * i] = s[i];
        out[2 * i + 1] = t[i];
    }
    out.resize(detail::minimal_period(out));
    return {CyclicSequence(s.alphabet(), std::move(out)), pairs, ns + nt, rs + rt};
}

// ---------------------------------------------------------------------------
// de Bruijn sequences

/// Lexicographically least de Bruijn sequence (concatenation of Lyndon words
/// whose length divides n, in lex order). Starts with n zeros.
inline CyclicSequence debruijn(unsigned q, unsigned n) {
    detail::require(n >= 1, "de Bruijn order must be >= 1");
    const Count length = TupleIndex(q, n).size();
    detail::require(length <= (Count{1} << 30), "de Bruijn sequence too long");
    std::vector<Symbol> seq;
    seq.reserve(static_cast<std::size_t>(length));
    std::vector<Symbol> a(n + 1, 0);
    // Iterative FKM: a[1..n] walks the prenecklaces in lex order.
    std::size_t i = 1;
    for (;;) {
        if (n % i == 0) seq.insert(seq.end(), a.begin() + 1, a.begin() + 1 + static_cast<std::ptrdiff_t>(i));
        std::size_t j = n;
        while (j > 0 && a[j] == q - 1) --j;
        if (j == 0) break;
        ++a[j];
        for (std::size_t m = j + 1; m <= n; ++m) a[m] = a[m - j];
        i = j;
    }
    return CyclicSequence(q, std::move(seq));
}

/// Binary de Bruijn sequence of order n with `pad` extra zeros in its run of
/// n zeros. Length 2^n + pad.
inline CyclicSequence debruijn_padded(unsigned n, unsigned pad) {
    const auto base = debruijn(2, n);
    std::vector<Symbol> out(pad, 0);
    out.insert(out.end(), base.symbols().begin(), base.symbols().end());
    return CyclicSequence(2, std::move(out));
}

// ---------------------------------------------------------------------------
// Seed catalog

struct SeedEntry {
    unsigned n;
    unsigned radius;
    unsigned variant;
    std::string_view digits;
};

inline std::span<const SeedEntry> seed_catalog() {
    static constexpr std::array<SeedEntry, 7> entries{{
        {5, 1, 0, "10100011"},
        {6, 1, 0, "000100111011"},
        {6, 1, 1, "00000010101111011"},
        {7, 1, 0, "1111001010110010000110"},
        {7, 1, 1, "1111110101100000101001100"},
        {8, 1, 0, "00011011111001000001101011100101"},
        // Alternating word: its two windows are complements, so every 5-tuple
        // is within distance 2 of one of them.
        {5, 2, 0, "01"},
    }};
    return entries;
}

inline CyclicSequence known_seed(unsigned n, unsigned radius, unsigned variant = 0) {
    for (const auto& e : seed_catalog())
        if (e.n == n && e.radius == radius && e.variant == variant)
            return CyclicSequence::from_string(e.digits);
    throw std::invalid_argument("no catalog seed for (n=" + std::to_string(n) + ", R=" +
                                std::to_string(radius) + ", variant " + std::to_string(variant) + ")");
}

}  // namespace dbc
