#pragma once

// Exact covering-radius computation.
//
// The whole tuple space Sigma^L is held as a dense table of one byte per
// tuple (indexed by TupleIndex). A level-synchronized multi-source BFS starts
// from the codewords; level d+1 is every single-symbol substitution of a
// level-d tuple that has not been reached yet. After the sweep each byte holds
// the Hamming distance from that tuple to the nearest codeword.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "dbc/core.hpp"

namespace dbc {

struct VerifyOptions {
    Count budget = Count{1} << 28;
    std::size_t max_witnesses = 10;
    unsigned threads = 1;
};

struct CoverageReport {
    unsigned q = 2;
    unsigned length = 0;  // m*n
    unsigned claimed_radius = 0;
    unsigned achieved_radius = 0;
    Count distinct_codewords = 0;
    std::vector<Count> covered_per_level;  // tuples at exact distance d, d = 0..claimed
    Count uncovered_count = 0;
    std::vector<Tuple> witnesses;  // lowest-index uncovered tuples
    bool verified = false;

    Count total() const {
        Count t = uncovered_count;
        for (Count c : covered_per_level) t += c;
        return t;
    }

    std::string summary() const {
        std::ostringstream os;
        os << "verified=" << (verified ? "true" : "false") << " Rstar=" << achieved_radius
           << " uncovered=" << uncovered_count;
        return os.str();
    }

    std::string describe() const {
        std::ostringstream os;
        os << "coverage report\n"
           << "  alphabet q       : " << q << '\n'
           << "  window length    : " << length << '\n'
           << "  distinct windows : " << distinct_codewords << '\n'
           << "  claimed radius   : " << claimed_radius << '\n'
           << "  achieved radius  : " << achieved_radius << '\n';
        for (std::size_t d = 0; d < covered_per_level.size(); ++d)
            os << "  at distance " << d << "    : " << covered_per_level[d] << '\n';
        os << "  uncovered        : " << uncovered_count << '\n';
        for (const auto& w : witnesses) os << "  witness          : " << tuple_to_string(w) << '\n';
        os << "  " << summary() << '\n';
        return os.str();
    }
};

/// A construction produced an object that does not verify at its declared
/// parameters. Carries the report with witnesses.
class VerificationFailure : public std::runtime_error {
public:
    VerificationFailure(const std::string& what, CoverageReport report)
        : std::runtime_error(what + ": " + report.summary()), report_(std::move(report)) {}
    const CoverageReport& report() const noexcept { return report_; }

private:
    CoverageReport report_;
};

namespace detail {

inline constexpr std::uint8_t kUnreached = 0xFF;

inline void expand_from(std::span<const Count> frontier, std::vector<std::uint8_t>& dist,
                        std::uint8_t next_level, unsigned q, std::span<const Count> weight,
                        std::vector<Count>& next, bool shared) {
    const unsigned length = static_cast<unsigned>(weight.size());
    auto claim = [&](Count y) {
        if (!shared) {
            if (dist[y] != kUnreached) return;
            dist[y] = next_level;
            next.push_back(y);
            return;
        }
        std::atomic_ref<std::uint8_t> cell(dist[y]);
        std::uint8_t expected = kUnreached;
        if (cell.load(std::memory_order_relaxed) == kUnreached &&
            cell.compare_exchange_strong(expected, next_level, std::memory_order_relaxed))
            next.push_back(y);
    };
    if (q == 2) {
        for (Count x : frontier)
            for (unsigned p = 0; p < length; ++p) claim(x ^ (Count{1} << p));
        return;
    }
    for (Count x : frontier)
        for (unsigned p = 0; p < length; ++p) {
            const Count w = weight[p];
            const Count digit = (x / w) % q;
            const Count base = x - digit * w;
            for (Count e = 0; e < q; ++e)
                if (e != digit) claim(base + e * w);
        }
}

/// Distance from every tuple of Sigma^length to the nearest codeword.
inline std::vector<std::uint8_t> distance_table(std::span<const Count> codewords, unsigned q,
                                                unsigned length, const VerifyOptions& opt) {
    require(!codewords.empty(), "covering radius of an empty codeword set is undefined");
    require(length >= 1, "tuple length must be >= 1");
    const Count space = TupleIndex(q, length).size();
    if (space > opt.budget) throw BudgetExceeded(space, opt.budget);

    std::vector<Count> weight(length);
    weight[length - 1] = 1;
    for (unsigned p = length - 1; p-- > 0;) weight[p] = weight[p + 1] * q;

    std::vector<std::uint8_t> dist(space, kUnreached);
    std::vector<Count> frontier;
    for (Count c : codewords) {
        require(c < space, "codeword index out of range");
        if (dist[c] == kUnreached) {
            dist[c] = 0;
            frontier.push_back(c);
        }
    }

    const unsigned threads = std::max(1u, opt.threads);
    std::uint8_t level = 0;
    while (!frontier.empty()) {
        const auto next_level = static_cast<std::uint8_t>(level + 1);
        std::vector<Count> next;
        if (threads == 1 || frontier.size() < 4096) {
            expand_from(frontier, dist, next_level, q, weight, next, false);
        } else {
            std::vector<std::vector<Count>> parts(threads);
            std::vector<std::thread> pool;
            const std::size_t chunk = (frontier.size() + threads - 1) / threads;
            for (unsigned t = 0; t < threads; ++t) {
                const std::size_t lo = std::min(frontier.size(), t * chunk);
                const std::size_t hi = std::min(frontier.size(), lo + chunk);
                pool.emplace_back([&, t, lo, hi] {
                    expand_from(std::span<const Count>(frontier).subspan(lo, hi - lo), dist,
                                next_level, q, weight, parts[t], true);
                });
            }
            for (auto& th : pool) th.join();
            for (auto& p : parts) next.insert(next.end(), p.begin(), p.end());
        }
        frontier = std::move(next);
        if (!frontier.empty()) level = next_level;
    }
    return dist;
}

inline CoverageReport build_report(std::span<const Count> codewords, unsigned q, unsigned length,
                                   unsigned claimed, const VerifyOptions& opt) {
    const auto dist = distance_table(codewords, q, length, opt);
    const TupleIndex index(q, length);
    CoverageReport rep;
    rep.q = q;
    rep.length = length;
    rep.claimed_radius = claimed;
    rep.covered_per_level.assign(std::min(claimed, length) + 1, 0);
    for (Count x = 0; x < dist.size(); ++x) {
        const unsigned d = dist[x];
        rep.achieved_radius = std::max(rep.achieved_radius, d);
        if (d == 0) ++rep.distinct_codewords;
        if (d <= claimed) {
            ++rep.covered_per_level[d];
        } else {
            ++rep.uncovered_count;
            if (rep.witnesses.size() < opt.max_witnesses) rep.witnesses.push_back(index.decode(x));
        }
    }
    rep.verified = rep.uncovered_count == 0;
    return rep;
}

}  // namespace detail

/// Max over all tuples of the distance to the nearest codeword.
inline unsigned covering_radius(std::span<const Count> codewords, unsigned q, unsigned length,
                                const VerifyOptions& opt = {}) {
    const auto dist = detail::distance_table(codewords, q, length, opt);
    return *std::max_element(dist.begin(), dist.end());
}

inline CoverageReport coverage_report(std::span<const Count> codewords, unsigned q, unsigned length,
                                      unsigned claimed_radius, const VerifyOptions& opt = {}) {
    return detail::build_report(codewords, q, length, claimed_radius, opt);
}

inline CoverageReport check_dbcs(const CyclicSequence& s, unsigned n, unsigned R,
                                 const VerifyOptions& opt = {}) {
    const auto codes = sequence_window_codes(s, n);
    return detail::build_report(codes, s.alphabet(), n, R, opt);
}

inline CoverageReport check_dbca(const PeriodicArray& a, unsigned m, unsigned n, unsigned R,
                                 const VerifyOptions& opt = {}) {
    const auto codes = array_window_codes(a, m, n);
    return detail::build_report(codes, a.alphabet(), m * n, R, opt);
}

inline CoverageReport check_dbcsc(const SequenceCode& code, unsigned n, unsigned R,
                                  const VerifyOptions& opt = {}) {
    std::vector<Count> codes;
    for (const auto& s : code.members) {
        const auto part = sequence_window_codes(s, n);
        codes.insert(codes.end(), part.begin(), part.end());
    }
    return detail::build_report(codes, code.alphabet(), n, R, opt);
}

}  // namespace dbc
