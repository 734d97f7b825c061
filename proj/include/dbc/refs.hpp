#pragma once

// Compact references to input sequences, as used on the command line and in
// the table recipes:
//
//   seed:<n>,<R>[,<variant>]   catalog sequence, declared (n, R)
//   debruijn:<n>[+<pad>]       binary de Bruijn sequence padded with zeros, declared (n, 0)
//   file:<path>                sequence file, declared by its header

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "dbc/core.hpp"
#include "dbc/io.hpp"
#include "dbc/seq1d.hpp"

namespace dbc {

namespace detail {

inline unsigned parse_ref_number(std::string_view text, std::string_view ref) {
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    require(!text.empty() && ec == std::errc{} && ptr == text.data() + text.size(),
            "invalid number '" + std::string(text) + "' in sequence reference '" +
                std::string(ref) + "'");
    return value;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t next = text.find(sep, pos);
        out.push_back(text.substr(pos, next == std::string_view::npos ? text.npos : next - pos));
        if (next == std::string_view::npos) return out;
        pos = next + 1;
    }
}

}  // namespace detail

inline SequenceFile resolve_sequence(std::string_view ref) {
    const std::size_t colon = ref.find(':');
    detail::require(colon != std::string_view::npos,
                    "sequence reference '" + std::string(ref) +
                        "' must be seed:n,R[,variant], debruijn:n[+pad] or file:path");
    const std::string_view kind = ref.substr(0, colon);
    const std::string_view body = ref.substr(colon + 1);
    if (kind == "file") return load_sequence(std::string(body));
    if (kind == "seed") {
        const auto parts = detail::split(body, ',');
        detail::require(parts.size() == 2 || parts.size() == 3,
                        "seed reference '" + std::string(ref) + "' must be seed:n,R[,variant]");
        const unsigned n = detail::parse_ref_number(parts[0], ref);
        const unsigned r = detail::parse_ref_number(parts[1], ref);
        const unsigned v = parts.size() == 3 ? detail::parse_ref_number(parts[2], ref) : 0;
        return {known_seed(n, r, v), n, r};
    }
    if (kind == "debruijn") {
        const auto parts = detail::split(body, '+');
        detail::require(parts.size() == 1 || parts.size() == 2,
                        "de Bruijn reference '" + std::string(ref) + "' must be debruijn:n[+pad]");
        const unsigned n = detail::parse_ref_number(parts[0], ref);
        const unsigned pad = parts.size() == 2 ? detail::parse_ref_number(parts[1], ref) : 0;
        return {debruijn_padded(n, pad), n, 0};
    }
    throw std::invalid_argument("unknown sequence reference kind '" + std::string(kind) + "'");
}

}  // namespace dbc
