#pragma once

// Two-dimensional constructions: folding a covering sequence into an array,
// tiling folded blocks, the triangular-shift construction, random arrays
// completed by patch strips, and small exhaustive / local searches.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "dbc/core.hpp"
#include "dbc/verify.hpp"

namespace dbc {

struct ArrayConstruction {
    PeriodicArray array;
    CoverageReport report;
};

// ---------------------------------------------------------------- folding

/// Dimensions of a fold. When n divides k the array has k/n rows; otherwise
/// the sequence is read cyclically for ceil(k/n) + m - 1 rows, which is the
/// same as extending it by `pad` prefix symbols and keeping m - 1 extra rows.
struct FoldPlan {
    std::size_t source_length = 0;
    unsigned m = 1;
    unsigned n = 1;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t pad = 0;

    static FoldPlan make(std::size_t k, unsigned m, unsigned n) {
        detail::require(k >= 1, "fold: empty sequence");
        detail::require(m >= 1 && n >= 1, "fold: window dimensions must be >= 1");
        FoldPlan p;
        p.source_length = k;
        p.m = m;
        p.n = n;
        p.cols = 2 * std::size_t{n} - 1;
        const std::size_t blocks = (k + n - 1) / n;
        p.pad = blocks * n - k;
        p.rows = p.pad == 0 ? k / n : blocks + m - 1;
        return p;
    }
};

namespace detail {

/// Row j, column c of a fold of s starting at `offset`: s_{offset + jn + 1 + c}
/// with 0-based storage of the 1-based row formula.
inline Symbol fold_cell(const CyclicSequence& s, std::size_t offset, std::size_t j, std::size_t c,
                        unsigned n) {
    return s[offset + j * n + 1 + c];
}

inline void check_declared_window(unsigned declared_n, unsigned m, unsigned n) {
    require(std::size_t{m} * n == declared_n,
            "window " + std::to_string(m) + "x" + std::to_string(n) +
                " does not match the sequence's declared window length " +
                std::to_string(declared_n));
}

inline CoverageReport verified_or_throw(const PeriodicArray& a, unsigned m, unsigned n, unsigned R,
                                        const VerifyOptions& opt, const std::string& what) {
    auto report = check_dbca(a, m, n, R, opt);
    if (!report.verified) throw VerificationFailure(what, std::move(report));
    return report;
}

}  // namespace detail

struct FoldResult {
    PeriodicArray array;
    FoldPlan plan;
    CoverageReport report;
};

/// Folds an (mn, R)-covering sequence into an M x (2n-1) array whose m x n
/// windows include every mn-window of s.
inline FoldResult fold(const CyclicSequence& s, unsigned declared_n, unsigned R, unsigned m,
                       unsigned n, const VerifyOptions& opt = {}) {
    detail::check_declared_window(declared_n, m, n);
    const FoldPlan plan = FoldPlan::make(s.period(), m, n);
    PeriodicArray a(s.alphabet(), plan.rows, plan.cols);
    for (std::size_t j = 0; j < plan.rows; ++j)
        for (std::size_t c = 0; c < plan.cols; ++c) a.set(j, c, detail::fold_cell(s, 0, j, c, n));
    auto report = detail::verified_or_throw(a, m, n, R, opt, "folded array failed verification");
    return {std::move(a), plan, std::move(report)};
}

struct TileResult {
    PeriodicArray array;
    std::size_t segment_length = 0;  // kappa
    std::size_t block_rows = 0;      // M'
    std::size_t block_cols = 0;      // 2n - 1
    std::size_t redundancy_bound = 0;
    CoverageReport report;
};

/// Splits s into t*r segments of length kappa = ceil(k/(t*r)), folds each into
/// a non-periodic M' x (2n-1) block with M' = ceil(kappa/n) + m - 1 (segments
/// read past their end continue into s, wrapping), and tiles the blocks r x t.
inline TileResult tile_fold(const CyclicSequence& s, unsigned declared_n, unsigned R, unsigned m,
                            unsigned n, unsigned t, unsigned r, const VerifyOptions& opt = {}) {
    detail::check_declared_window(declared_n, m, n);
    detail::require(t >= 1 && r >= 1, "tile_fold: t and r must be >= 1");
    const std::size_t k = s.period();
    const std::size_t segments = std::size_t{t} * r;
    const std::size_t kappa = (k + segments - 1) / segments;
    const std::size_t block_rows = (kappa + n - 1) / n + m - 1;
    const std::size_t block_cols = 2 * std::size_t{n} - 1;

    PeriodicArray a(s.alphabet(), r * block_rows, t * block_cols);
    for (std::size_t br = 0; br < r; ++br)
        for (std::size_t bc = 0; bc < t; ++bc) {
            const std::size_t offset = (br * t + bc) * kappa;
            for (std::size_t j = 0; j < block_rows; ++j)
                for (std::size_t c = 0; c < block_cols; ++c)
                    a.set(br * block_rows + j, bc * block_cols + c,
                          detail::fold_cell(s, offset, j, c, n));
        }

    // Per block, the area beyond kappa useful symbols: M'(n-1) for the
    // right-hand overlap columns plus (M' - kappa/n) n for the extra rows.
    const std::size_t area = block_rows * block_cols;
    const std::size_t redundancy = area - kappa;
    const double bound = static_cast<double>(block_rows) * (n - 1) +
                         (static_cast<double>(block_rows) - static_cast<double>(kappa) / n) * n;
    detail::require(static_cast<double>(redundancy) <= bound + 1e-9,
                    "tile_fold: block redundancy exceeds its accounting bound");

    auto report = detail::verified_or_throw(a, m, n, R, opt, "tiled array failed verification");
    return {std::move(a), kappa, block_rows, block_cols, redundancy, std::move(report)};
}

// ------------------------------------------------------ shift construction

/// Shift of row i: T_i = i(i+1)/2.
inline std::size_t triangular_shift(std::size_t i) { return i * (i + 1) / 2; }

/// Rows are cyclic shifts of s by triangular numbers, so vertically adjacent
/// windows come from positions i+1 apart. For even k a copy of the last row
/// is appended. Declared and verified as a (2, n, 2R) array.
inline ArrayConstruction shift_construct(const CyclicSequence& s, unsigned n, unsigned R,
                                         const VerifyOptions& opt = {}) {
    const std::size_t k = s.period();
    const std::size_t rows = k % 2 == 0 ? k + 1 : k;
    PeriodicArray a(s.alphabet(), rows, k);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::size_t shift = triangular_shift(std::min(i, k - 1));
        for (std::size_t j = 0; j < k; ++j) a.set(i, j, s[j + shift]);
    }
    auto report =
        detail::verified_or_throw(a, 2, n, 2 * R, opt, "shift-constructed array failed verification");
    return {std::move(a), std::move(report)};
}

// ------------------------------------------------------- random + patching

namespace detail {

/// Unbiased draw from [0, bound).
inline Symbol uniform_symbol(std::mt19937_64& rng, unsigned bound) {
    const std::uint64_t limit = rng.max() - rng.max() % bound;
    std::uint64_t v;
    do v = rng(); while (v >= limit);
    return static_cast<Symbol>(v % bound);
}

inline PeriodicArray random_array(unsigned q, std::size_t rows, std::size_t cols,
                                  std::mt19937_64& rng) {
    std::vector<Symbol> cells(rows * cols);
    for (auto& c : cells) c = uniform_symbol(rng, q);
    return PeriodicArray(q, rows, cols, std::move(cells));
}

/// Codes of every tuple at distance > R from all windows of a.
inline std::vector<Count> uncovered_codes(const PeriodicArray& a, unsigned m, unsigned n,
                                          unsigned R, const VerifyOptions& opt) {
    const auto codes = array_window_codes(a, m, n);
    const auto dist = distance_table(codes, a.alphabet(), m * n, opt);
    std::vector<Count> out;
    for (Count x = 0; x < dist.size(); ++x)
        if (dist[x] > R) out.push_back(x);
    return out;
}

/// Appends strips holding the given m x n tuples: each strip is a zero
/// separator column followed by n columns with floor(M/m) tuples stacked
/// vertically (unused cells zero).
inline PeriodicArray append_strips(const PeriodicArray& a, std::span<const Count> tuples,
                                   unsigned m, unsigned n) {
    const std::size_t rows = a.rows();
    const std::size_t per_strip = rows / m;
    const std::size_t strips = (tuples.size() + per_strip - 1) / per_strip;
    const std::size_t cols = a.cols() + strips * (n + 1);
    PeriodicArray out(a.alphabet(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
    const TupleIndex index(a.alphabet(), m * n);
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        const std::size_t strip = t / per_strip;
        const std::size_t slot = t % per_strip;
        const std::size_t col0 = a.cols() + strip * (n + 1) + 1;
        const Tuple w = index.decode(tuples[t]);
        for (unsigned r = 0; r < m; ++r)
            for (unsigned c = 0; c < n; ++c) out.set(slot * m + r, col0 + c, w[r * n + c]);
    }
    return out;
}

}  // namespace detail

struct PatchResult {
    PeriodicArray array;
    std::size_t initial_cols = 0;       // N0
    std::size_t initial_uncovered = 0;  // L
    std::size_t strips = 0;
    std::size_t rounds = 0;
    CoverageReport report;
};

/// ceil((q^{mn} / V) * ln(mn * V) / M) with V the radius-R ball volume.
inline std::size_t random_patch_columns(unsigned m, unsigned n, unsigned R, unsigned q,
                                        std::size_t M) {
    const unsigned L = m * n;
    const double V = static_cast<double>(ball_volume(q, L, R));
    const double space = std::pow(static_cast<double>(q), static_cast<double>(L));
    const double cols = std::ceil(space / V * std::log(L * V) / static_cast<double>(M));
    return std::max<std::size_t>(1, static_cast<std::size_t>(cols));
}

/// Draws a random M x N0 array and appends patch strips for the uncovered
/// tuples until the array verifies as an (m, n, R) array.
inline PatchResult random_patch(unsigned m, unsigned n, unsigned R, unsigned q, std::size_t M,
                                std::uint64_t seed, const VerifyOptions& opt = {}) {
    detail::check_alphabet(q);
    detail::require(m >= 1 && n >= 1, "random_patch: window dimensions must be >= 1");
    detail::require(M >= m, "random_patch: M must be at least m");
    detail::require(R <= m * n, "random_patch: radius exceeds window size");
    const Count space = TupleIndex(q, m * n).size();
    if (space > opt.budget) throw BudgetExceeded(space, opt.budget);

    std::mt19937_64 rng(seed);
    PatchResult res{detail::random_array(q, M, random_patch_columns(m, n, R, q, M), rng), 0, 0, 0, 0, {}};
    res.initial_cols = res.array.cols();

    // Each round strictly covers the previous round's uncovered tuples inside
    // their strips, and only seam windows can be lost, so this terminates
    // quickly; the cap guards against a logic error.
    constexpr std::size_t kMaxRounds = 64;
    for (;;) {
        const auto missing = detail::uncovered_codes(res.array, m, n, R, opt);
        if (res.rounds == 0) res.initial_uncovered = missing.size();
        if (missing.empty()) break;
        detail::require(res.rounds < kMaxRounds, "random_patch: patching did not converge");
        const std::size_t before = res.array.cols();
        res.array = detail::append_strips(res.array, missing, m, n);
        res.strips += (res.array.cols() - before) / (n + 1);
        ++res.rounds;
    }
    res.report = check_dbca(res.array, m, n, R, opt);
    return res;
}

// ------------------------------------------------------------------ search

enum class SearchStatus { found, none, unknown };

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::none: return "none";
        case SearchStatus::unknown: return "unknown";
    }
    return "?";
}

struct SearchOptions {
    std::uint64_t seed = 1;
    Count trials = 2'000'000;              // cell changes in local-search mode
    Count exhaustive_limit = Count{1} << 24;
    double temperature = 0.6;  // local search accepts a loss of d with probability exp(-d/T)
};

struct SearchResult {
    SearchStatus status = SearchStatus::unknown;
    bool exhaustive = false;
    Count examined = 0;  // candidates (exhaustive) or cell changes (local)
    std::optional<PeriodicArray> array;
};

namespace detail {

/// Every tuple within Hamming distance R of x, as a list of perturbations
/// (position weight, additive delta mod q) applied to codes.
class Ball {
public:
    Ball(unsigned q, unsigned length, unsigned radius) : q_(q) {
        std::vector<Count> weight(length);
        weight[length - 1] = 1;
        for (unsigned p = length - 1; p-- > 0;) weight[p] = weight[p + 1] * q;
        std::vector<std::pair<Count, unsigned>> current;
        build(weight, radius, 0, current);
        if (q == 2)
            for (const auto& pert : perts_) {
                Count mask = 0;
                for (const auto& [w, d] : pert) mask |= w;
                masks_.push_back(mask);
            }
    }

    template <class F>
    void for_each(Count x, F&& f) const {
        if (q_ == 2) {
            for (Count mask : masks_) f(x ^ mask);
            return;
        }
        for (const auto& pert : perts_) {
            Count y = x;
            for (const auto& [w, d] : pert) {
                const Count digit = (y / w) % q_;
                y = y - digit * w + ((digit + d) % q_) * w;
            }
            f(y);
        }
    }

    std::size_t size() const noexcept { return perts_.size(); }

private:
    void build(const std::vector<Count>& weight, unsigned left, std::size_t from,
               std::vector<std::pair<Count, unsigned>>& cur) {
        perts_.push_back(cur);
        if (left == 0) return;
        for (std::size_t p = from; p < weight.size(); ++p)
            for (unsigned d = 1; d < q_; ++d) {
                cur.emplace_back(weight[p], d);
                build(weight, left - 1, p + 1, cur);
                cur.pop_back();
            }
    }

    unsigned q_;
    std::vector<std::vector<std::pair<Count, unsigned>>> perts_;
    std::vector<Count> masks_;  // binary fast path: XOR masks of weight <= radius
};

inline unsigned hamming(Count a, Count b, unsigned q, unsigned length) {
    unsigned d = 0;
    for (unsigned p = 0; p < length; ++p, a /= q, b /= q) d += (a % q) != (b % q);
    return d;
}

inline Count window_code(const std::vector<Symbol>& cells, std::size_t rows, std::size_t cols,
                         std::size_t i, std::size_t j, unsigned m, unsigned n, unsigned q) {
    Count code = 0;
    for (unsigned r = 0; r < m; ++r)
        for (unsigned c = 0; c < n; ++c) code = code * q + cells[((i + r) % rows) * cols + (j + c) % cols];
    return code;
}

inline SearchResult exhaustive_sweep(unsigned m, unsigned n, unsigned R, unsigned q, std::size_t M,
                                     std::size_t N) {
    const unsigned L = m * n;
    const std::size_t area = M * N;
    const Count space = TupleIndex(q, L).size();
    const Count candidates = TupleIndex(q, static_cast<unsigned>(area)).size();
    const Ball ball(q, L, R);
    SearchResult res;
    res.exhaustive = true;

    std::vector<Symbol> cells(area, 0);  // TupleIndex order: last cell least significant
    std::vector<Count> codes(area);
    std::vector<Count> witnesses;  // most recent first
    std::vector<std::uint8_t> covered(space);
    constexpr std::size_t kMaxWitnesses = 32;

    for (Count idx = 0; idx < candidates; ++idx) {
        if (idx > 0) {
            std::size_t p = area;
            while (p-- > 0) {
                if (++cells[p] < q) break;
                cells[p] = 0;
            }
        }
        ++res.examined;
        for (std::size_t i = 0; i < M; ++i)
            for (std::size_t j = 0; j < N; ++j)
                codes[i * N + j] = window_code(cells, M, N, i, j, m, n, q);

        bool pruned = false;
        for (std::size_t w = 0; w < witnesses.size() && !pruned; ++w) {
            bool hit = false;
            for (Count c : codes)
                if (hamming(c, witnesses[w], q, L) <= R) {
                    hit = true;
                    break;
                }
            if (!hit) {
                std::rotate(witnesses.begin(), witnesses.begin() + static_cast<std::ptrdiff_t>(w),
                            witnesses.begin() + static_cast<std::ptrdiff_t>(w) + 1);
                pruned = true;
            }
        }
        if (pruned) continue;

        std::fill(covered.begin(), covered.end(), 0);
        for (Count c : codes) ball.for_each(c, [&](Count y) { covered[y] = 1; });
        const auto miss = std::find(covered.begin(), covered.end(), 0);
        if (miss == covered.end()) {
            res.status = SearchStatus::found;
            res.array = PeriodicArray(q, M, N, cells);
            return res;
        }
        witnesses.insert(witnesses.begin(), static_cast<Count>(miss - covered.begin()));
        if (witnesses.size() > kMaxWitnesses) witnesses.pop_back();
    }
    res.status = SearchStatus::none;
    return res;
}

/// Stochastic local search: single-cell changes accepted when the number of
/// uncovered tuples does not grow, with periodic restarts.
inline SearchResult local_search(unsigned m, unsigned n, unsigned R, unsigned q, std::size_t M,
                                 std::size_t N, const SearchOptions& sopt, const VerifyOptions& opt) {
    const unsigned L = m * n;
    const Count space = TupleIndex(q, L).size();
    if (space > opt.budget) throw BudgetExceeded(space, opt.budget);
    const Ball ball(q, L, R);
    const std::size_t area = M * N;
    std::mt19937_64 rng(sopt.seed);
    SearchResult res;

    // Window positions touched by a change of cell (i, j), deduplicated.
    auto touched = [&](std::size_t i, std::size_t j) {
        std::vector<std::size_t> out;
        for (unsigned r = 0; r < m; ++r)
            for (unsigned c = 0; c < n; ++c)
                out.push_back(((i + M * m - r) % M) * N + (j + N * n - c) % N);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };

    const std::size_t restart_after = std::max<std::size_t>(1000, 50 * area * q);
    while (res.examined < sopt.trials) {
        std::vector<Symbol> cells(area);
        for (auto& c : cells) c = uniform_symbol(rng, q);
        std::vector<Count> codes(area);
        std::vector<std::uint32_t> cover(space, 0);
        Count uncovered = space;
        auto add = [&](Count c) {
            ball.for_each(c, [&](Count y) {
                if (cover[y]++ == 0) --uncovered;
            });
        };
        auto remove = [&](Count c) {
            ball.for_each(c, [&](Count y) {
                if (--cover[y] == 0) ++uncovered;
            });
        };
        for (std::size_t i = 0; i < M; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                codes[i * N + j] = window_code(cells, M, N, i, j, m, n, q);
                add(codes[i * N + j]);
            }

        Count best = uncovered;
        std::size_t since_best = 0;
        while (uncovered > 0 && res.examined < sopt.trials && since_best < restart_after) {
            ++res.examined;
            const std::size_t cell = static_cast<std::size_t>(rng() % area);
            const Symbol old = cells[cell];
            const Symbol val =
                static_cast<Symbol>((old + 1 + uniform_symbol(rng, q - 1)) % q);
            const auto wins = touched(cell / N, cell % N);
            const Count before = uncovered;
            cells[cell] = val;
            for (std::size_t w : wins) {
                remove(codes[w]);
                codes[w] = window_code(cells, M, N, w / N, w % N, m, n, q);
                add(codes[w]);
            }
            const bool accept =
                uncovered <= before ||
                (sopt.temperature > 0 &&
                 std::generate_canonical<double, 53>(rng) <
                     std::exp(-static_cast<double>(uncovered - before) / sopt.temperature));
            if (!accept) {
                cells[cell] = old;
                for (std::size_t w : wins) {
                    remove(codes[w]);
                    codes[w] = window_code(cells, M, N, w / N, w % N, m, n, q);
                    add(codes[w]);
                }
            }
            if (uncovered < best) {
                best = uncovered;
                since_best = 0;
            } else {
                ++since_best;
            }
        }
        if (uncovered == 0) {
            res.status = SearchStatus::found;
            res.array = PeriodicArray(q, M, N, std::move(cells));
            return res;
        }
    }
    res.status = SearchStatus::unknown;
    return res;
}

}  // namespace detail

/// Looks for an M x N (m, n, R) array over q symbols. Exhaustive (in
/// TupleIndex order of the row-major cells) when q^{MN} is within the
/// exhaustive limit, which makes "none" definitive; otherwise a seeded local
/// search that reports "unknown" when its trial budget runs out.
inline SearchResult exhaustive_search(unsigned m, unsigned n, unsigned R, unsigned q, std::size_t M,
                                      std::size_t N, const SearchOptions& sopt = {},
                                      const VerifyOptions& opt = {}) {
    detail::check_alphabet(q);
    detail::require(m >= 1 && n >= 1 && M >= 1 && N >= 1, "search: dimensions must be >= 1");
    detail::require(R <= m * n, "search: radius exceeds window size");
    const Count space = TupleIndex(q, m * n).size();
    if (space > opt.budget) throw BudgetExceeded(space, opt.budget);

    bool small = M * N < 64;
    if (small) {
        Count c = 1;
        for (std::size_t i = 0; i < M * N && small; ++i) {
            c *= q;
            small = c <= sopt.exhaustive_limit;
        }
    }
    SearchResult res = small ? detail::exhaustive_sweep(m, n, R, q, M, N)
                             : detail::local_search(m, n, R, q, M, N, sopt, opt);
    if (res.array) {
        // Independent confirmation through the verifier.
        const auto report = check_dbca(*res.array, m, n, R, opt);
        detail::require(report.verified, "search produced an array that does not verify");
    }
    return res;
}

}  // namespace dbc
