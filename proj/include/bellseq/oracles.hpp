#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <stdexcept>
#include <vector>

#include "bellseq/rational.hpp"
#include "bellseq/sequence.hpp"

// Independent brute-force enumerators. Each is a direct implementation of the
// combinatorial definition, kept deliberately separate from the transform
// machinery it validates. Hard size bounds keep the default suite fast; a
// request beyond the bound is refused, never silently truncated.

namespace bellseq::oracles {

namespace detail {
inline void check_bound(std::size_t n, std::size_t bound, const char* what) {
    if (n > bound)
        throw std::domain_error(std::string(what) + ": size " + std::to_string(n) +
                                " beyond oracle bound " + std::to_string(bound));
    if (n < 1) throw std::domain_error(std::string(what) + ": n >= 1");
}

template <typename Fn>
inline void for_each_permutation(std::size_t n, Fn&& fn) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
        fn(p);
    } while (std::next_permutation(p.begin(), p.end()));
}
}  // namespace detail

// Lattice paths (0,0) -> (alpha n, beta n) with unit E/N steps that may touch
// but never rise above the line alpha*y = beta*x.
inline Int rational_dyck_weak(long alpha, long beta, std::size_t n) {
    detail::check_bound(n, 12, "rational_dyck_weak");
    if (alpha < 1 || beta < 1) throw std::domain_error("rational_dyck_weak: alpha,beta >= 1");
    const long X = alpha * static_cast<long>(n), Y = beta * static_cast<long>(n);
    std::vector<std::vector<Int>> dp(X + 1, std::vector<Int>(Y + 1, 0));
    dp[0][0] = 1;
    for (long x = 0; x <= X; ++x)
        for (long y = 0; y <= Y; ++y) {
            if (alpha * y > beta * x) continue;
            if (x == 0 && y == 0) continue;
            Int v = 0;
            if (x > 0) v += dp[x - 1][y];
            if (y > 0) v += dp[x][y - 1];
            dp[x][y] = v;
        }
    return dp[X][Y];
}

// The strong variant: interior vertices stay strictly below the line.
inline Int rational_dyck_strong(long alpha, long beta, std::size_t n) {
    detail::check_bound(n, 12, "rational_dyck_strong");
    if (alpha < 1 || beta < 1) throw std::domain_error("rational_dyck_strong: alpha,beta >= 1");
    const long X = alpha * static_cast<long>(n), Y = beta * static_cast<long>(n);
    std::vector<std::vector<Int>> dp(X + 1, std::vector<Int>(Y + 1, 0));
    dp[0][0] = 1;
    for (long x = 0; x <= X; ++x)
        for (long y = 0; y <= Y; ++y) {
            if (x == 0 && y == 0) continue;
            const bool endpoint = (x == X && y == Y);
            const bool ok = endpoint ? alpha * y <= beta * x : alpha * y < beta * x;
            if (!ok) continue;
            Int v = 0;
            if (x > 0) v += dp[x - 1][y];
            if (y > 0) v += dp[x][y - 1];
            dp[x][y] = v;
        }
    return dp[X][Y];
}

// Permutations of [n] stabilizing no proper subinterval ([i..j] with j-i+1 < n
// mapped onto itself as a set).
inline Int sif_permutations(std::size_t n) {
    detail::check_bound(n, 8, "sif_permutations");
    Int count = 0;
    detail::for_each_permutation(n, [&](const std::vector<int>& p) {
        for (std::size_t i = 0; i < n; ++i) {
            int lo = static_cast<int>(i) + 1, hi = lo - 1;
            for (std::size_t j = i; j < n; ++j) {
                lo = std::min(lo, p[j]);
                hi = std::max(hi, p[j]);
                const std::size_t len = j - i + 1;
                if (len == n) break;
                if (lo == static_cast<int>(i) + 1 && hi == static_cast<int>(j) + 1) return;
            }
        }
        ++count;
    });
    return count;
}

// Permutations with no proper prefix [1..j] mapped to itself as a set.
inline Int indecomposable_permutations(std::size_t n) {
    detail::check_bound(n, 9, "indecomposable_permutations");
    Int count = 0;
    detail::for_each_permutation(n, [&](const std::vector<int>& p) {
        int hi = 0;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            hi = std::max(hi, p[j]);
            if (hi == static_cast<int>(j) + 1) return;
        }
        ++count;
    });
    return count;
}

namespace detail {
inline bool contains_pattern(const std::vector<int>& p, const std::vector<int>& pat) {
    const std::size_t n = p.size(), m = pat.size();
    if (m > n) return false;
    std::vector<std::size_t> idx(m);
    // iterate over all m-subsets of positions
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        bool match = true;
        for (std::size_t i = 0; match && i < m; ++i)
            for (std::size_t j = i + 1; match && j < m; ++j)
                if ((p[idx[i]] < p[idx[j]]) != (pat[i] < pat[j])) match = false;
        if (match) return true;
        // next combination
        std::size_t k = m;
        while (k > 0 && idx[k - 1] == n - m + k - 1) --k;
        if (k == 0) return false;
        ++idx[k - 1];
        for (std::size_t i = k; i < m; ++i) idx[i] = idx[i - 1] + 1;
    }
}
}  // namespace detail

// Classical pattern avoidance by direct containment testing.
inline Int av_permutations(const std::vector<std::vector<int>>& patterns, std::size_t n) {
    detail::check_bound(n, 8, "av_permutations");
    Int count = 0;
    detail::for_each_permutation(n, [&](const std::vector<int>& p) {
        for (const auto& pat : patterns)
            if (detail::contains_pattern(p, pat)) return;
        ++count;
    });
    return count;
}

namespace detail {
// Enumerate set partitions of [n] as block-index vectors (restricted growth).
template <typename Fn>
inline void for_each_partition(std::size_t n, Fn&& fn) {
    std::vector<int> block(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int nblocks) {
        if (i == n) {
            fn(block, nblocks);
            return;
        }
        for (int b = 0; b <= nblocks; ++b) {
            block[i] = b;
            rec(i + 1, std::max(nblocks, b + 1));
        }
    };
    rec(0, 0);
}

inline bool is_noncrossing(const std::vector<int>& block) {
    const std::size_t n = block.size();
    // crossing: a < b < c < d with block[a]==block[c] != block[b]==block[d]
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (block[b] == block[a]) continue;
            for (std::size_t c = b + 1; c < n; ++c) {
                if (block[c] != block[a]) continue;
                for (std::size_t d = c + 1; d < n; ++d)
                    if (block[d] == block[b]) return false;
            }
        }
    return true;
}
}  // namespace detail

inline Int set_partitions(std::size_t n) {
    detail::check_bound(n, 10, "set_partitions");
    Int count = 0;
    detail::for_each_partition(n, [&](const std::vector<int>&, int) { ++count; });
    return count;
}

inline Int noncrossing_partitions(std::size_t n) {
    detail::check_bound(n, 10, "noncrossing_partitions");
    Int count = 0;
    detail::for_each_partition(n, [&](const std::vector<int>& block, int) {
        if (detail::is_noncrossing(block)) ++count;
    });
    return count;
}

// Counts noncrossing partitions of [n] by block count; result[k-1] holds the
// count with exactly k blocks (the Narayana numbers).
inline std::vector<Int> noncrossing_partitions_by_blocks(std::size_t n) {
    detail::check_bound(n, 10, "noncrossing_partitions_by_blocks");
    std::vector<Int> out(n, 0);
    detail::for_each_partition(n, [&](const std::vector<int>& block, int nblocks) {
        if (detail::is_noncrossing(block)) ++out[nblocks - 1];
    });
    return out;
}

// Factor-free words of the generalized Dyck language with letter heights
// +beta / -alpha: words of length (alpha+beta)n with all prefix sums >= 0 and
// total 0, such that no proper contiguous factor is itself in the language.
// Exhaustive over all 2^((alpha+beta)n) words; bounded accordingly.
inline Int factor_free_words(long alpha, long beta, std::size_t n) {
    if (alpha < 1 || beta < 1) throw std::domain_error("factor_free_words: alpha,beta >= 1");
    const long period = alpha + beta;
    const long L = period * static_cast<long>(n);
    if (n < 1 || L > 20)
        throw std::domain_error("factor_free_words: word length " + std::to_string(L) +
                                " beyond oracle bound 20");
    auto in_language = [&](unsigned long w, long from, long to) {
        long s = 0;
        for (long i = from; i < to; ++i) {
            s += (w >> i) & 1UL ? beta : -alpha;
            if (s < 0) return false;
        }
        return s == 0;
    };
    Int count = 0;
    for (unsigned long w = 0; w < (1UL << L); ++w) {
        if (!in_language(w, 0, L)) continue;
        bool factor_free = true;
        for (long i = 0; factor_free && i < L; ++i)
            for (long j = i + period; j <= L; j += period) {
                if (j - i == L) continue;
                if (in_language(w, i, j)) {
                    factor_free = false;
                    break;
                }
            }
        if (factor_free) ++count;
    }
    return count;
}

// Colored compositions of n where a part of size j comes in x_j colors,
// split by number of parts: result[k-1] counts compositions with k parts.
inline std::vector<Rational> compositions_colored_by_parts(const Sequence& x, std::size_t n) {
    detail::check_bound(n, 10, "compositions_colored_by_parts");
    if (x.size() < n) throw std::length_error("compositions_colored_by_parts: need x_1..x_n");
    // dp[m][k] = colored compositions of m with k parts
    std::vector<std::vector<Rational>> dp(n + 1, std::vector<Rational>(n + 1, Rational(0)));
    dp[0][0] = 1;
    for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t k = 1; k <= m; ++k)
            for (std::size_t j = 1; j <= m; ++j) dp[m][k] += x.at(j) * dp[m - j][k - 1];
    return std::vector<Rational>(dp[n].begin() + 1, dp[n].end());
}

inline Rational compositions_colored(const Sequence& x, std::size_t n) {
    auto by_k = compositions_colored_by_parts(x, n);
    Rational s = 0;
    for (const auto& v : by_k) s += v;
    return s;
}

}  // namespace bellseq::oracles
