#pragma once

// Text formats:
//
//   dbcs q=<q> n=<n> R=<R> k=<k>
//   <k digits>
//
//   dbca q=<q> m=<m> n=<n> R=<R> M=<M> N=<N>
//   <M lines of N digits>
//
// Digits only, so q <= 10. Lines end in '\n' with no trailing whitespace.

#include <charconv>
#include <fstream>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dbc/core.hpp"

namespace dbc {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SequenceFile {
    CyclicSequence sequence;
    unsigned n;
    unsigned radius;
};

struct ArrayFile {
    PeriodicArray array;
    unsigned m;
    unsigned n;
    unsigned radius;
};

namespace detail {

inline std::vector<std::string_view> split_spaces(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        const std::size_t next = line.find(' ', pos);
        const std::size_t end = next == std::string_view::npos ? line.size() : next;
        out.push_back(line.substr(pos, end - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

inline std::size_t parse_field(std::string_view token, std::string_view name) {
    const std::string field(name);
    if (token.size() <= name.size() + 1 || token.substr(0, name.size()) != name ||
        token[name.size()] != '=')
        throw ParseError("malformed header: expected field '" + field + "=<int>', got '" +
                         std::string(token) + "'");
    const std::string_view digits = token.substr(name.size() + 1);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
        throw ParseError("malformed header: field '" + field + "' has non-integer value '" +
                         std::string(digits) + "'");
    return value;
}

inline std::vector<std::size_t> parse_header(std::string_view line, std::string_view magic,
                                             std::initializer_list<std::string_view> fields) {
    if (!line.empty() && (line.back() == ' ' || line.back() == '\r'))
        throw ParseError("malformed header: trailing whitespace");
    const auto tokens = split_spaces(line);
    if (tokens.empty() || tokens[0] != magic)
        throw ParseError("malformed header: expected '" + std::string(magic) + "' tag");
    if (tokens.size() != fields.size() + 1) {
        // Name the first missing or unexpected field.
        std::size_t i = 1;
        for (auto f : fields) {
            if (i >= tokens.size())
                throw ParseError("malformed header: missing field '" + std::string(f) + "'");
            parse_field(tokens[i++], f);
        }
        throw ParseError("malformed header: unexpected field '" + std::string(tokens[i]) + "'");
    }
    std::vector<std::size_t> values;
    std::size_t i = 1;
    for (auto f : fields) values.push_back(parse_field(tokens[i++], f));
    return values;
}

inline std::vector<Symbol> parse_digits(std::string_view line, std::size_t expected, unsigned q,
                                        const std::string& what) {
    if (line.size() != expected)
        throw ParseError(what + ": expected " + std::to_string(expected) + " symbols, got " +
                         std::to_string(line.size()));
    std::vector<Symbol> out;
    out.reserve(expected);
    for (char c : line) {
        if (c < '0' || c > '9')
            throw ParseError(what + ": invalid character '" + std::string(1, c) + "'");
        const auto s = static_cast<Symbol>(c - '0');
        if (s >= q)
            throw ParseError(what + ": symbol " + std::string(1, c) + " out of range for q=" +
                             std::to_string(q));
        out.push_back(s);
    }
    return out;
}

inline std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

inline unsigned checked_q(std::size_t q) {
    if (q < 2 || q > 10) throw ParseError("malformed header: field 'q' must be in [2, 10]");
    return static_cast<unsigned>(q);
}

}  // namespace detail

inline void write_sequence(std::ostream& out, const CyclicSequence& s, unsigned n, unsigned radius) {
    detail::require(s.alphabet() <= 10, "text format supports q <= 10 only");
    out << "dbcs q=" << s.alphabet() << " n=" << n << " R=" << radius << " k=" << s.period() << '\n'
        << s.to_string() << '\n';
}

inline void write_array(std::ostream& out, const PeriodicArray& a, unsigned m, unsigned n,
                        unsigned radius) {
    detail::require(a.alphabet() <= 10, "text format supports q <= 10 only");
    out << "dbca q=" << a.alphabet() << " m=" << m << " n=" << n << " R=" << radius
        << " M=" << a.rows() << " N=" << a.cols() << '\n';
    for (std::size_t i = 0; i < a.rows(); ++i) out << tuple_to_string(a.row(i)) << '\n';
}

inline SequenceFile read_sequence(std::istream& in) {
    const auto lines = detail::read_lines(in);
    if (lines.empty()) throw ParseError("empty sequence file");
    const auto h = detail::parse_header(lines[0], "dbcs", {"q", "n", "R", "k"});
    const unsigned q = detail::checked_q(h[0]);
    if (h[1] == 0) throw ParseError("malformed header: field 'n' must be >= 1");
    if (h[3] == 0) throw ParseError("malformed header: field 'k' must be >= 1");
    if (lines.size() != 2) throw ParseError("sequence file must have exactly 2 lines");
    auto symbols = detail::parse_digits(lines[1], h[3], q, "sequence line");
    return {CyclicSequence(q, std::move(symbols)), static_cast<unsigned>(h[1]),
            static_cast<unsigned>(h[2])};
}

inline ArrayFile read_array(std::istream& in) {
    const auto lines = detail::read_lines(in);
    if (lines.empty()) throw ParseError("empty array file");
    const auto h = detail::parse_header(lines[0], "dbca", {"q", "m", "n", "R", "M", "N"});
    const unsigned q = detail::checked_q(h[0]);
    if (h[1] == 0) throw ParseError("malformed header: field 'm' must be >= 1");
    if (h[2] == 0) throw ParseError("malformed header: field 'n' must be >= 1");
    if (h[4] == 0) throw ParseError("malformed header: field 'M' must be >= 1");
    if (h[5] == 0) throw ParseError("malformed header: field 'N' must be >= 1");
    const std::size_t rows = h[4];
    const std::size_t cols = h[5];
    if (lines.size() != rows + 1)
        throw ParseError("array file must have " + std::to_string(rows) + " rows after the header");
    std::vector<Symbol> cells;
    cells.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        auto row = detail::parse_digits(lines[i + 1], cols, q, "row " + std::to_string(i));
        cells.insert(cells.end(), row.begin(), row.end());
    }
    return {PeriodicArray(q, rows, cols, std::move(cells)), static_cast<unsigned>(h[1]),
            static_cast<unsigned>(h[2]), static_cast<unsigned>(h[3])};
}

inline SequenceFile load_sequence(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_sequence(in);
}

inline ArrayFile load_array(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_array(in);
}

inline void save_sequence(const std::string& path, const CyclicSequence& s, unsigned n,
                          unsigned radius) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_sequence(out, s, n, radius);
}

inline void save_array(const std::string& path, const PeriodicArray& a, unsigned m, unsigned n,
                       unsigned radius) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_array(out, a, m, n, radius);
}

}  // namespace dbc
