#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bellseq/pinned_data.hpp"
#include "bellseq/rational.hpp"
#include "bellseq/records.hpp"
#include "bellseq/sequence.hpp"
#include "bellseq/transform.hpp"

namespace bellseq {

// Generators for catalog entries.
struct ClosedFormGen {
    std::function<Rational(std::size_t)> term;  // n -> x_n
};
struct RecurrenceGen {
    std::function<std::vector<Rational>(std::size_t)> prefix;  // N -> (x_1..x_N)
};
struct TransformOfGen {
    std::string source;
    OperatorWord word;
};
struct PinnedGen {};  // served from the pinned prefix only

using Generator = std::variant<ClosedFormGen, RecurrenceGen, TransformOfGen, PinnedGen>;

struct CatalogEntry {
    std::string key;
    std::string oeis_id;   // optional
    long offset = 1;       // index of the first stored term in OEIS numbering
    Generator generator;
    std::vector<Rational> pinned;  // prefix cross-check data (may be empty for non-pinned)
    std::string provenance;
};

// Immutable registry of named sequences. Parameterized families are addressed
// as "fuss_catalan(2)" or "bizley(2,3)".
class Registry {
public:
    static Registry standard() {
        Registry r;
        r.add({"ones", "", 1, ClosedFormGen{[](std::size_t) { return Rational(1); }}, {},
               "all-ones sequence"});
        r.add({"factorials", "A000142", 1,
               ClosedFormGen{[](std::size_t n) { return Rational(factorial(static_cast<long>(n))); }},
               {},
               "n!"});
        r.add({"catalan", "A000108", 1,
               ClosedFormGen{[](std::size_t n) {
                   return Rational(binomial(Int(2 * n), static_cast<long>(n)), Int(n + 1));
               }},
               {},
               "C(2n,n)/(n+1), listed from C_1"});
        r.add({"little_schroeder", "A001003", 1,
               TransformOfGen{"ones", {BellOp{{1, 0, 1, 1}}}},
               {},
               "polygon dissection transform of ones; A001003 listed from a(1)"});
        r.add({"A000257", "A000257", 1,
               ClosedFormGen{[](std::size_t n) { return bicubic_map_term(n); }},
               {},
               "rooted bicubic maps, 3(2n-1)!2^n/((n-1)!(n+2)!)"});
        r.add({"A069728", "A069728", 1,
               TransformOfGen{"A000257", {BellOp{{-2, 0, -1, 1}}}},
               {},
               "nonseparable rooted Eulerian maps, via the map-core relation"});
        r.add({"A298358", "A298358", 1,
               TransformOfGen{"A000257", {BellOp{{-3, 0, -1, 1}}}},
               {},
               "3-connected bicubic map cores, via the map-core relation"});
        r.add({"A003319", "A003319", 1,
               TransformOfGen{"factorials", {InverseBellOp{{0, 1, -1, 1}}}},
               {},
               "indecomposable permutations = inverse invert of n!"});
        r.add({"A075834", "A075834", 1,
               TransformOfGen{"factorials", {InverseBellOp{{1, 0, -1, 1}}}},
               {},
               "stabilized-interval-free permutations = inverse ncp of n!"});
        r.add({"A001519", "A001519", 0,
               RecurrenceGen{[](std::size_t N) {
                   std::vector<Rational> v;
                   for (std::size_t i = 0; i < N; ++i) {
                       if (i < 2)
                           v.push_back(1);
                       else
                           v.push_back(3 * v[i - 1] - v[i - 2]);
                   }
                   return v;
               }},
               {},
               "a(n) = 3a(n-1) - a(n-2), a(0)=a(1)=1; listed from a(0)"});
        r.add({"bell_numbers", "A000110", 1,
               RecurrenceGen{[](std::size_t N) {
                   // Bell triangle; listed from B_1 = 1
                   std::vector<Rational> out;
                   std::vector<Int> row{1};
                   for (std::size_t n = 0; n < N; ++n) {
                       std::vector<Int> next{row.back()};
                       for (const Int& v : row) next.push_back(next.back() + v);
                       row = std::move(next);
                       out.push_back(Rational(row.front()));
                   }
                   return out;
               }},
               {},
               "Bell numbers via the Bell triangle, listed from B_1"});
        r.add({"av_2413_3412", "", 1,
               TransformOfGen{"A000257", {LeftShiftOp{}, BellOp{{-1, 0, -1, -1}}}},
               {},
               "permutations avoiding {2413,3412}, via the bicubic-map route"});
        r.add({"A099947", "A099947", 1,
               TransformOfGen{"bell_numbers", {InverseBellOp{{1, 0, -1, 1}}}},
               {},
               "connected set partitions: Bell numbers are their ncp transform"});
        r.add({"A074664", "A074664", 1,
               TransformOfGen{"bell_numbers", {InverseBellOp{{0, 1, -1, 1}}}},
               {},
               "irreducible set partitions: Bell numbers are their invert transform"});
        r.add({"av_ind_2413_3412", "", 1,
               TransformOfGen{"av_2413_3412", {InverseBellOp{{0, 1, -1, 1}}}},
               {},
               "indecomposable permutations avoiding {2413,3412}"});

        for (const auto& rec : parse_records(std::string(kPinnedRecords))) {
            CatalogEntry e{rec.key, rec.oeis_id, rec.offset, PinnedGen{}, rec.terms,
                           rec.provenance};
            r.add(std::move(e));
        }

        // A298358 carries both the transform generator and the pinned prefix;
        // merge the pinned terms into the transform entry for cross-checking.
        auto pinned_it = r.entries_.find("A298358");
        // (the pinned record overwrote the transform entry; restore generator)
        pinned_it->second.generator = TransformOfGen{"A000257", {BellOp{{-3, 0, -1, 1}}}};
        return r;
    }

    void add(CatalogEntry e) { entries_[e.key] = std::move(e); }

    bool has(const std::string& key) const {
        return entries_.count(key) > 0 || is_family(key);
    }

    const CatalogEntry& entry(const std::string& key) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) throw std::invalid_argument("catalog: unknown key '" + key + "'");
        return it->second;
    }

    std::vector<std::string> keys() const {
        std::vector<std::string> out;
        for (const auto& [k, _] : entries_) out.push_back(k);
        out.push_back("fuss_catalan(m)");
        out.push_back("bizley(alpha,beta)");
        std::sort(out.begin(), out.end());
        return out;
    }

    Sequence get_prefix(const std::string& key, std::size_t N) const {
        if (auto fam = parse_family(key)) {
            const auto& [name, args] = *fam;
            if (name == "fuss_catalan") {
                if (args.size() != 1 || args[0] < 0)
                    throw std::invalid_argument("catalog: fuss_catalan(m) needs one m >= 0");
                const long m = args[0];
                std::vector<Rational> v;
                for (std::size_t n = 1; n <= N; ++n)
                    v.push_back(Rational(binomial(Int((m + 1) * static_cast<long>(n)),
                                                  static_cast<long>(n)),
                                         Int(m * static_cast<long>(n) + 1)));
                return Sequence(std::move(v));
            }
            if (name == "bizley") {
                // exp transform of f_j = (1/((alpha+beta)j)) C((alpha+beta)j, alpha j);
                // yields the weak rational-Dyck path counts phi_n.
                if (args.size() != 2 || args[0] < 1 || args[1] < 1)
                    throw std::invalid_argument("catalog: bizley(alpha,beta) needs alpha,beta >= 1");
                const long al = args[0], be = args[1];
                std::vector<Rational> v;
                for (std::size_t n = 1; n <= N; ++n) {
                    const long j = static_cast<long>(n);
                    v.push_back(Rational(binomial(Int((al + be) * j), al * j), Int((al + be) * j)));
                }
                return bell_transform({0, 0, 0, 1}, Sequence(std::move(v)));
            }
            throw std::invalid_argument("catalog: unknown family '" + name + "'");
        }

        const CatalogEntry& e = entry(key);
        return std::visit(
            [&](const auto& gen) -> Sequence {
                using T = std::decay_t<decltype(gen)>;
                if constexpr (std::is_same_v<T, ClosedFormGen>) {
                    std::vector<Rational> v;
                    for (std::size_t n = 1; n <= N; ++n) v.push_back(gen.term(n));
                    return Sequence(std::move(v));
                } else if constexpr (std::is_same_v<T, RecurrenceGen>) {
                    auto v = gen.prefix(N);
                    return Sequence(std::move(v));
                } else if constexpr (std::is_same_v<T, TransformOfGen>) {
                    long delta = 0;  // extra source terms needed: +1 per L, -1 per R
                    for (const auto& atom : gen.word) {
                        if (std::holds_alternative<LeftShiftOp>(atom)) ++delta;
                        if (std::holds_alternative<RightShiftOp>(atom)) --delta;
                    }
                    const long need = static_cast<long>(N) + delta;
                    if (need < 1)
                        throw std::length_error("catalog: transform entry '" + key +
                                                "' needs a positive source prefix");
                    Sequence src = get_prefix(gen.source, static_cast<std::size_t>(need));
                    Sequence out = apply_word(gen.word, src);
                    return out.prefix(N);
                } else {
                    static_assert(std::is_same_v<T, PinnedGen>);
                    if (N > e.pinned.size())
                        throw std::length_error("catalog: '" + key + "' pinned to " +
                                                std::to_string(e.pinned.size()) + " terms, asked " +
                                                std::to_string(N));
                    return Sequence(std::vector<Rational>(e.pinned.begin(), e.pinned.begin() + N));
                }
            },
            e.generator);
    }

private:
    static bool is_family(const std::string& key) { return parse_family(key).has_value(); }

    static std::optional<std::pair<std::string, std::vector<long>>> parse_family(
        const std::string& key) {
        auto open = key.find('(');
        if (open == std::string::npos || key.back() != ')') return std::nullopt;
        std::string name = key.substr(0, open);
        std::string argstr = key.substr(open + 1, key.size() - open - 2);
        std::vector<long> args;
        std::string cur;
        std::istringstream in(argstr);
        while (std::getline(in, cur, ',')) {
            try {
                args.push_back(std::stol(cur));
            } catch (const std::exception&) {
                throw std::invalid_argument("catalog: bad family argument '" + cur + "'");
            }
        }
        return std::make_pair(std::move(name), std::move(args));
    }

    std::map<std::string, CatalogEntry> entries_;
};

}  // namespace bellseq
