#pragma once

// Turning a covering code made of several sequences (or linear strings) into a
// single cyclic covering sequence: acyclic extension followed by greedy
// maximum-overlap merging.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dbc/core.hpp"
#include "dbc/verify.hpp"

namespace dbc {

using Word = std::vector<Symbol>;

struct MergeStep {
    std::size_t left;   // id of the string contributing the prefix
    std::size_t right;  // id of the string contributing the suffix
    std::size_t overlap;
};

/// Ids 0..inputs-1 name the deduplicated inputs; every merge creates the next id.
struct MergeTrace {
    std::vector<MergeStep> steps;
    std::size_t input_count = 0;
    std::size_t input_total = 0;
    std::size_t final_length = 0;

    std::size_t total_overlap() const {
        std::size_t t = 0;
        for (const auto& s : steps) t += s.overlap;
        return t;
    }
};

struct MergeResult {
    Word merged;
    MergeTrace trace;
};

/// The k symbols of s followed by its first n-1 symbols (read cyclically), so
/// the linear n-windows are exactly the cyclic n-windows of s.
inline Word linearize(const CyclicSequence& s, unsigned n) {
    detail::require(n >= 1, "window length must be >= 1");
    Word out(s.period() + n - 1);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = s[i];
    return out;
}

namespace detail {

/// Longest suffix of a equal to a prefix of b, via the failure function of b.
inline std::size_t overlap(const Word& a, const Word& b) {
    if (a.empty() || b.empty()) return 0;
    std::vector<std::size_t> fail(b.size(), 0);
    for (std::size_t i = 1; i < b.size(); ++i) {
        std::size_t k = fail[i - 1];
        while (k > 0 && b[i] != b[k]) k = fail[k - 1];
        if (b[i] == b[k]) ++k;
        fail[i] = k;
    }
    std::size_t state = 0;
    for (Symbol c : a) {
        if (state == b.size()) state = fail[state - 1];
        while (state > 0 && c != b[state]) state = fail[state - 1];
        if (c == b[state]) ++state;
    }
    return state;
}

/// Lexicographic comparison of a + b[ob..] against c + d[od..] without
/// materializing either string.
inline int compare_merged(const Word& a, const Word& b, std::size_t ob, const Word& c,
                          const Word& d, std::size_t od) {
    const std::size_t la = a.size() + b.size() - ob;
    const std::size_t lc = c.size() + d.size() - od;
    auto at1 = [&](std::size_t i) { return i < a.size() ? a[i] : b[i - a.size() + ob]; };
    auto at2 = [&](std::size_t i) { return i < c.size() ? c[i] : d[i - c.size() + od]; };
    const std::size_t len = std::min(la, lc);
    for (std::size_t i = 0; i < len; ++i) {
        const Symbol x = at1(i);
        const Symbol y = at2(i);
        if (x != y) return x < y ? -1 : 1;
    }
    return la == lc ? 0 : (la < lc ? -1 : 1);
}

}  // namespace detail

/// Greedy shortest-superstring heuristic. Duplicates are dropped first; then
/// the ordered pair with the longest suffix/prefix overlap is merged until one
/// string remains. Ties go to the lexicographically smaller merged string,
/// then to the lower ids.
inline MergeResult greedy_merge(const std::vector<Word>& strings) {
    detail::require(!strings.empty(), "greedy_merge needs at least one string");
    struct Slot {
        Word text;
        std::size_t id;
    };
    std::vector<Slot> live;
    for (const auto& s : strings) {
        const bool dup = std::any_of(live.begin(), live.end(),
                                     [&](const Slot& x) { return x.text == s; });
        if (!dup) live.push_back({s, live.size()});
    }

    MergeResult result;
    result.trace.input_count = live.size();
    for (const auto& s : live) result.trace.input_total += s.text.size();
    std::size_t next_id = live.size();

    // ov[i][j] = overlap(live[i], live[j]).
    std::vector<std::vector<std::size_t>> ov(live.size(), std::vector<std::size_t>(live.size(), 0));
    for (std::size_t i = 0; i < live.size(); ++i)
        for (std::size_t j = 0; j < live.size(); ++j)
            if (i != j) ov[i][j] = detail::overlap(live[i].text, live[j].text);

    while (live.size() > 1) {
        std::size_t bi = 0, bj = 1;
        bool have = false;
        for (std::size_t i = 0; i < live.size(); ++i)
            for (std::size_t j = 0; j < live.size(); ++j) {
                if (i == j) continue;
                if (!have) {
                    bi = i, bj = j, have = true;
                    continue;
                }
                if (ov[i][j] != ov[bi][bj]) {
                    if (ov[i][j] > ov[bi][bj]) bi = i, bj = j;
                    continue;
                }
                const int c = detail::compare_merged(live[i].text, live[j].text, ov[i][j],
                                                     live[bi].text, live[bj].text, ov[bi][bj]);
                const auto key = std::make_pair(live[i].id, live[j].id);
                const auto best = std::make_pair(live[bi].id, live[bj].id);
                if (c < 0 || (c == 0 && key < best)) bi = i, bj = j;
            }

        const std::size_t o = ov[bi][bj];
        result.trace.steps.push_back({live[bi].id, live[bj].id, o});
        Word merged = live[bi].text;
        merged.insert(merged.end(), live[bj].text.begin() + static_cast<std::ptrdiff_t>(o),
                      live[bj].text.end());

        // The merged string replaces slot bi; slot bj is removed.
        live[bi] = {std::move(merged), next_id++};
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(bj));
        ov.erase(ov.begin() + static_cast<std::ptrdiff_t>(bj));
        for (auto& row : ov) row.erase(row.begin() + static_cast<std::ptrdiff_t>(bj));
        const std::size_t slot = bi < bj ? bi : bi - 1;
        for (std::size_t k = 0; k < live.size(); ++k) {
            if (k == slot) continue;
            ov[slot][k] = detail::overlap(live[slot].text, live[k].text);
            ov[k][slot] = detail::overlap(live[k].text, live[slot].text);
        }
    }
    result.merged = std::move(live.front().text);
    result.trace.final_length = result.merged.size();
    return result;
}

struct Assembly {
    CyclicSequence sequence;
    MergeTrace trace;
    CoverageReport report;
};

/// Merges linear strings and closes the result into a cyclic sequence. Closing
/// only adds windows, so the result must verify at (n, R); failure throws.
inline Assembly assemble_strings(const std::vector<Word>& strings, unsigned q, unsigned n,
                                 unsigned R, const VerifyOptions& opt = {}) {
    auto merged = greedy_merge(strings);
    CyclicSequence seq(q, std::move(merged.merged));
    auto report = check_dbcs(seq, n, R, opt);
    if (!report.verified) throw VerificationFailure("assembled sequence failed verification", std::move(report));
    return {std::move(seq), std::move(merged.trace), std::move(report)};
}

inline Assembly dbcsc_to_dbcs(const SequenceCode& code, unsigned n, unsigned R,
                              const VerifyOptions& opt = {}) {
    std::vector<Word> strings;
    strings.reserve(code.members.size());
    for (const auto& s : code.members) strings.push_back(linearize(s, n));
    return assemble_strings(strings, code.alphabet(), n, R, opt);
}

}  // namespace dbc
