#pragma once

// Sequences, arrays, window extraction and counting primitives shared by every
// construction and by the verifier.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dbc {

using Symbol = std::uint8_t;
using Tuple = std::vector<Symbol>;
using Count = std::uint64_t;

/// Raised when a computation would need more tuple-table states than allowed.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(Count required, Count budget)
        : std::runtime_error("tuple space of " + std::to_string(required) +
                             " states exceeds budget of " + std::to_string(budget) +
                             " (raise it with DBC_BUDGET)"),
          required_(required), budget_(budget) {}

    Count required() const noexcept { return required_; }
    Count budget() const noexcept { return budget_; }

private:
    Count required_;
    Count budget_;
};

namespace detail {

inline Count checked_mul(Count a, Count b) {
    Count r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("dbc: 64-bit count overflow");
    return r;
}

inline Count checked_add(Count a, Count b) {
    Count r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("dbc: 64-bit count overflow");
    return r;
}

inline Count checked_pow(Count base, unsigned exp) {
    Count r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

inline void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

inline unsigned check_alphabet(unsigned q) {
    require(q >= 2 && q <= 256, "alphabet size q must be in [2, 256], got " + std::to_string(q));
    return q;
}

inline char digit_char(Symbol s) {
    return s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + (s - 10));
}

}  // namespace detail

/// A cyclic word over {0..q-1}. Index access wraps modulo the period.
class CyclicSequence {
public:
    CyclicSequence(unsigned q, std::vector<Symbol> symbols)
        : q_(detail::check_alphabet(q)), symbols_(std::move(symbols)) {
        detail::require(!symbols_.empty(), "cyclic sequence must have period >= 1");
        for (Symbol s : symbols_)
            detail::require(s < q_, "symbol " + std::to_string(s) + " out of range for q=" +
                                        std::to_string(q_));
    }

    /// Parses single decimal digits, e.g. "10100011".
    static CyclicSequence from_string(std::string_view digits, unsigned q = 2) {
        std::vector<Symbol> out;
        out.reserve(digits.size());
        for (char c : digits) {
            detail::require(c >= '0' && c <= '9', std::string("not a digit: '") + c + "'");
            out.push_back(static_cast<Symbol>(c - '0'));
        }
        return CyclicSequence(q, std::move(out));
    }

    unsigned alphabet() const noexcept { return q_; }
    std::size_t period() const noexcept { return symbols_.size(); }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

    Symbol operator[](std::size_t i) const noexcept { return symbols_[i % symbols_.size()]; }

    CyclicSequence rotated(std::size_t shift) const {
        std::vector<Symbol> out(symbols_.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)[i + shift];
        return CyclicSequence(q_, std::move(out));
    }

    /// Symbol-wise q-1-s; for binary sequences this is the complement.
    CyclicSequence complemented() const {
        std::vector<Symbol> out(symbols_);
        for (Symbol& s : out) s = static_cast<Symbol>(q_ - 1 - s);
        return CyclicSequence(q_, std::move(out));
    }

    std::string to_string() const {
        std::string out;
        out.reserve(symbols_.size());
        for (Symbol s : symbols_) out.push_back(detail::digit_char(s));
        return out;
    }

    friend bool operator==(const CyclicSequence&, const CyclicSequence&) = default;

private:
    unsigned q_;
    std::vector<Symbol> symbols_;
};

/// A doubly periodic rows x cols grid, stored row-major.
class PeriodicArray {
public:
    PeriodicArray(unsigned q, std::size_t rows, std::size_t cols, std::vector<Symbol> cells)
        : q_(detail::check_alphabet(q)), rows_(rows), cols_(cols), cells_(std::move(cells)) {
        detail::require(rows_ >= 1 && cols_ >= 1, "array dimensions must be >= 1");
        detail::require(cells_.size() == rows_ * cols_, "cell count does not match rows*cols");
        for (Symbol s : cells_)
            detail::require(s < q_, "cell value " + std::to_string(s) + " out of range for q=" +
                                        std::to_string(q_));
    }

    PeriodicArray(unsigned q, std::size_t rows, std::size_t cols)
        : PeriodicArray(q, rows, cols, std::vector<Symbol>(rows * cols, 0)) {}

    unsigned alphabet() const noexcept { return q_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t area() const noexcept { return rows_ * cols_; }
    const std::vector<Symbol>& cells() const noexcept { return cells_; }

    Symbol at(std::size_t i, std::size_t j) const noexcept {
        return cells_[(i % rows_) * cols_ + (j % cols_)];
    }

    void set(std::size_t i, std::size_t j, Symbol v) {
        detail::require(v < q_, "cell value out of range");
        cells_[(i % rows_) * cols_ + (j % cols_)] = v;
    }

    std::span<const Symbol> row(std::size_t i) const {
        return std::span<const Symbol>(cells_).subspan((i % rows_) * cols_, cols_);
    }

    PeriodicArray transposed() const {
        std::vector<Symbol> out(cells_.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[j * rows_ + i] = cells_[i * cols_ + j];
        return PeriodicArray(q_, cols_, rows_, std::move(out));
    }

    friend bool operator==(const PeriodicArray&, const PeriodicArray&) = default;

private:
    unsigned q_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Symbol> cells_;
};

/// Window shape and claimed radius. m = 1 for sequences.
struct WindowSpec {
    unsigned m = 1;
    unsigned n = 1;
    unsigned radius = 0;

    WindowSpec() = default;
    WindowSpec(unsigned m_, unsigned n_, unsigned r_) : m(m_), n(n_), radius(r_) {
        detail::require(m >= 1 && n >= 1, "window dimensions must be >= 1");
    }

    unsigned size() const noexcept { return m * n; }
};

/// A set of cyclic sequences whose combined n-windows are claimed to cover
/// with the declared radius.
struct SequenceCode {
    std::vector<CyclicSequence> members;
    unsigned n = 1;
    unsigned radius = 0;

    SequenceCode(std::vector<CyclicSequence> m, unsigned n_, unsigned r_)
        : members(std::move(m)), n(n_), radius(r_) {
        detail::require(!members.empty(), "sequence code must have at least one member");
        for (const auto& s : members)
            detail::require(s.alphabet() == members.front().alphabet(),
                            "sequence code members must share one alphabet");
    }

    unsigned alphabet() const noexcept { return members.front().alphabet(); }

    std::size_t total_length() const noexcept {
        std::size_t t = 0;
        for (const auto& s : members) t += s.period();
        return t;
    }
};

/// Bijection between q-ary tuples of a fixed length and 0..q^length-1.
/// Most significant symbol first, so numeric order is lexicographic order.
class TupleIndex {
public:
    TupleIndex(unsigned q, unsigned length)
        : q_(detail::check_alphabet(q)), length_(length), size_(detail::checked_pow(q, length)) {}

    unsigned alphabet() const noexcept { return q_; }
    unsigned length() const noexcept { return length_; }
    Count size() const noexcept { return size_; }

    Count encode(std::span<const Symbol> tuple) const {
        detail::require(tuple.size() == length_, "tuple length mismatch in TupleIndex::encode");
        Count code = 0;
        for (Symbol s : tuple) {
            detail::require(s < q_, "tuple symbol out of range");
            code = code * q_ + s;
        }
        return code;
    }

    Tuple decode(Count code) const {
        detail::require(code < size_, "tuple index out of range");
        Tuple out(length_);
        for (unsigned i = length_; i-- > 0;) {
            out[i] = static_cast<Symbol>(code % q_);
            code /= q_;
        }
        return out;
    }

private:
    unsigned q_;
    unsigned length_;
    Count size_;
};

inline std::string tuple_to_string(std::span<const Symbol> t) {
    std::string out;
    for (Symbol s : t) out.push_back(detail::digit_char(s));
    return out;
}

/// Number of q-ary words of length n within Hamming distance R of a fixed word.
inline Count ball_volume(unsigned q, unsigned n, unsigned R) {
    detail::check_alphabet(q);
    detail::require(n >= 1, "ball_volume: n must be >= 1");
    detail::require(R <= n, "ball_volume: radius " + std::to_string(R) + " exceeds length " +
                                std::to_string(n));
    Count total = 0;
    Count binom = 1;  // C(n, i)
    for (unsigned i = 0; i <= R; ++i) {
        if (i > 0) {
            // C(n,i) = C(n,i-1) * (n-i+1) / i, exact at every step.
            binom = detail::checked_mul(binom, n - i + 1) / i;
        }
        total = detail::checked_add(total, detail::checked_mul(binom, detail::checked_pow(q - 1, i)));
    }
    return total;
}

/// ceil(q^n / V_q(n,R)).
inline Count sphere_bound(unsigned q, unsigned n, unsigned R) {
    const Count vol = ball_volume(q, n, R);
    const Count space = detail::checked_pow(q, n);
    return space / vol + (space % vol != 0 ? 1 : 0);
}

/// The k cyclic n-windows of s, in start order. Duplicates are kept.
inline std::vector<Tuple> sequence_windows(const CyclicSequence& s, unsigned n) {
    detail::require(n >= 1, "window length must be >= 1");
    std::vector<Tuple> out(s.period(), Tuple(n));
    for (std::size_t i = 0; i < s.period(); ++i)
        for (unsigned j = 0; j < n; ++j) out[i][j] = s[i + j];
    return out;
}

/// Window codes (TupleIndex of each cyclic n-window), in start order.
inline std::vector<Count> sequence_window_codes(const CyclicSequence& s, unsigned n) {
    [[maybe_unused]] const TupleIndex index(s.alphabet(), n);  // overflow check
    const unsigned q = s.alphabet();
    std::vector<Count> out(s.period());
    for (std::size_t i = 0; i < s.period(); ++i) {
        Count code = 0;
        for (unsigned j = 0; j < n; ++j) code = code * q + s[i + j];
        out[i] = code;
    }
    return out;
}

/// The rows*cols doubly periodic m x n windows, flattened row-major.
inline std::vector<Tuple> array_windows(const PeriodicArray& a, unsigned m, unsigned n) {
    detail::require(m >= 1 && n >= 1, "window dimensions must be >= 1");
    std::vector<Tuple> out;
    out.reserve(a.area());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Tuple w;
            w.reserve(std::size_t{m} * n);
            for (unsigned r = 0; r < m; ++r)
                for (unsigned c = 0; c < n; ++c) w.push_back(a.at(i + r, j + c));
            out.push_back(std::move(w));
        }
    return out;
}

inline std::vector<Count> array_window_codes(const PeriodicArray& a, unsigned m, unsigned n) {
    detail::require(m >= 1 && n >= 1, "window dimensions must be >= 1");
    [[maybe_unused]] const TupleIndex index(a.alphabet(), m * n);  // overflow check
    const unsigned q = a.alphabet();
    std::vector<Count> out;
    out.reserve(a.area());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Count code = 0;
            for (unsigned r = 0; r < m; ++r)
                for (unsigned c = 0; c < n; ++c) code = code * q + a.at(i + r, j + c);
            out.push_back(code);
        }
    return out;
}

inline std::size_t distinct_count(std::vector<Count> codes) {
    std::sort(codes.begin(), codes.end());
    return static_cast<std::size_t>(std::unique(codes.begin(), codes.end()) - codes.begin());
}

}  // namespace dbc
