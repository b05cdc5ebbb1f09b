#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bellseq/catalog.hpp"
#include "bellseq/sequence.hpp"
#include "bellseq/transform.hpp"

namespace bellseq {

// A candidate relation target = word(source), checked term-by-term on the
// available prefixes. Prefix agreement is evidence, not proof; the status
// string deliberately says so.
struct RelationHypothesis {
    std::string source;
    std::string target;
    OperatorWord word;
    std::size_t matched_len = 0;
    bool verified = false;
    long fail_index = 0;  // 1-based index of the first mismatch when !verified
    std::string status;   // "verified-on-prefix" or "mismatch at n=<i>"

    std::string str() const {
        return source + " -> " + target + " via " + word_str(word) + " [" + status +
               ", matched " + std::to_string(matched_len) + " terms]";
    }
};

struct SearchGrid {
    std::vector<Rational> a, b, c, d;

    static SearchGrid standard() {
        SearchGrid g;
        for (long v = -3; v <= 3; ++v) {
            g.a.push_back(v);
            g.b.push_back(v);
        }
        g.c = {-2, -1, 1, 2};
        g.d = {-1, 1};
        return g;
    }

    bool empty() const { return a.empty() || b.empty() || c.empty() || d.empty(); }
};

// Optional single operator applied before the transform (word "Y ∘ pre").
enum class PreOp { none, right_shift, left_shift, alternate_sign };

inline std::vector<PreOp> default_pre_ops() {
    return {PreOp::none, PreOp::right_shift, PreOp::left_shift, PreOp::alternate_sign};
}

namespace detail {
inline OperatorWord make_word(const BellParams& p, PreOp pre) {
    OperatorWord w{BellOp{p}};
    switch (pre) {
        case PreOp::none: break;
        case PreOp::right_shift: w.push_back(RightShiftOp{}); break;
        case PreOp::left_shift: w.push_back(LeftShiftOp{}); break;
        case PreOp::alternate_sign: w.push_back(AlternateSignOp{}); break;
    }
    return w;
}

// Compare word(source) against target on the overlapping prefix; early abort
// on the first mismatch. Returns (matched_len, fail_index or 0).
inline std::pair<std::size_t, long> match_prefix(const OperatorWord& word, const Sequence& source,
                                                 const Sequence& target) {
    Sequence got = apply_word(word, source);
    const std::size_t overlap = std::min(got.size(), target.size());
    for (std::size_t n = 1; n <= overlap; ++n)
        if (got.at(n) != target.at(n)) return {overlap, static_cast<long>(n)};
    return {overlap, 0};
}
}  // namespace detail

// Exhaustive grid search for one-transform words (with an optional pre-op)
// mapping source to target. Hypotheses equivalent under the parameter symmetry
// (a,b,c,d) ~ (a,b+c,-c,d) are reported once, in canonical form; output order
// is lexicographic on the word's string encoding.
inline std::vector<RelationHypothesis> search(const Sequence& source, const Sequence& target,
                                              const SearchGrid& grid = SearchGrid::standard(),
                                              const std::vector<PreOp>& pre_ops = default_pre_ops(),
                                              std::size_t min_match = 8,
                                              const std::string& source_name = "source",
                                              const std::string& target_name = "target") {
    if (grid.empty()) throw std::invalid_argument("discovery: empty parameter grid");
    if (source.size() < min_match || target.size() < min_match)
        throw std::invalid_argument(
            "discovery: prefixes of length " + std::to_string(source.size()) + " and " +
            std::to_string(target.size()) + " are shorter than min_match " +
            std::to_string(min_match));

    std::vector<RelationHypothesis> out;
    std::set<std::string> seen;
    for (const PreOp pre : pre_ops)
        for (const Rational& a : grid.a)
            for (const Rational& b : grid.b)
                for (const Rational& c : grid.c)
                    for (const Rational& d : grid.d) {
                        const BellParams p = BellParams{a, b, c, d}.canonical();
                        OperatorWord w = detail::make_word(p, pre);
                        const std::string enc = word_str(w);
                        if (!seen.insert(enc).second) continue;
                        if (pre == PreOp::left_shift && source.size() < 2) continue;
                        auto [overlap, fail] = detail::match_prefix(w, source, target);
                        if (overlap < min_match || fail != 0) continue;
                        RelationHypothesis h{source_name, target_name, std::move(w), overlap,
                                             true, 0, "verified-on-prefix"};
                        out.push_back(std::move(h));
                    }
    std::sort(out.begin(), out.end(), [](const RelationHypothesis& x, const RelationHypothesis& y) {
        return word_str(x.word) < word_str(y.word);
    });
    return out;
}

// The five labeled edges of the sequence-flow diagram relating the bicubic-map
// series f to its companion sequences, each re-verified on catalog prefixes.
// `cap` limits the prefix length drawn from the catalog (0 = full default);
// prefixes shorter than min_match are refused.
inline std::vector<RelationHypothesis> reproduce_paper_diagram(const Registry& reg,
                                                               std::size_t min_match = 8,
                                                               std::size_t cap = 0) {
    struct Edge {
        std::string source, target;
        OperatorWord word;
        std::size_t source_len;  // terms drawn from the catalog for the source
        std::size_t target_len;
    };
    const std::vector<Edge> edges = {
        {"A298358", "A000257", {BellOp{{3, 0, -1, 1}}}, 14, 14},
        {"A069728", "A000257", {BellOp{{2, 0, -1, 1}}}, 12, 12},
        {"av_ind_2413_3412", "av_2413_3412", {BellOp{{0, 1, -1, 1}}}, 13, 13},
        {"av_2413_3412", "A000257", {BellOp{{1, 1, -1, 1}}, RightShiftOp{}}, 13, 14},
        {"A000257", "A022558", {BellOp{{0, 1, -1, 1}}, RightShiftOp{}}, 9, 10},
    };

    std::vector<RelationHypothesis> out;
    for (const Edge& e : edges) {
        std::size_t slen = e.source_len, tlen = e.target_len;
        if (cap != 0) {
            slen = std::min(slen, cap);
            tlen = std::min(tlen, cap);
        }
        Sequence src = reg.get_prefix(e.source, slen);
        Sequence tgt = reg.get_prefix(e.target, tlen);
        auto [overlap, fail] = detail::match_prefix(e.word, src, tgt);
        if (overlap < min_match)
            throw std::invalid_argument("discovery: edge " + e.source + " -> " + e.target +
                                        " has only " + std::to_string(overlap) +
                                        " comparable terms, min_match is " +
                                        std::to_string(min_match));
        RelationHypothesis h;
        h.source = e.source;
        h.target = e.target;
        h.word = e.word;
        h.matched_len = overlap;
        h.verified = (fail == 0);
        h.fail_index = fail;
        h.status = h.verified ? "verified-on-prefix" : ("mismatch at n=" + std::to_string(fail));
        out.push_back(std::move(h));
    }
    return out;
}

}  // namespace bellseq
