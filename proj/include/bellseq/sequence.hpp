#pragma once

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bellseq/rational.hpp"

namespace bellseq {

// Finite 1-indexed prefix (x_1..x_N) of an infinite sequence. Immutable.
class Sequence {
public:
    Sequence() = default;
    explicit Sequence(std::vector<Rational> terms) : terms_(std::move(terms)) {}
    Sequence(std::initializer_list<Rational> terms) : terms_(terms) {}

    static Sequence ones(std::size_t n) { return Sequence(std::vector<Rational>(n, Rational(1))); }

    static Sequence from_strings(const std::vector<std::string>& toks) {
        std::vector<Rational> t;
        t.reserve(toks.size());
        for (const auto& s : toks) t.push_back(parse_rational(s));
        return Sequence(std::move(t));
    }

    // Parses a comma-separated list of "p" / "p/q" tokens.
    static Sequence parse(const std::string& csv) {
        std::vector<std::string> toks;
        std::string cur;
        std::istringstream in(csv);
        while (std::getline(in, cur, ',')) {
            // trim spaces
            auto b = cur.find_first_not_of(" \t");
            auto e = cur.find_last_not_of(" \t");
            if (b == std::string::npos) throw std::invalid_argument("Sequence::parse: empty token");
            toks.push_back(cur.substr(b, e - b + 1));
        }
        if (toks.empty()) throw std::invalid_argument("Sequence::parse: empty list");
        return from_strings(toks);
    }

    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    // 1-indexed access.
    const Rational& at(std::size_t n) const {
        if (n < 1 || n > terms_.size())
            throw std::length_error("Sequence: index " + std::to_string(n) + " out of 1.." +
                                    std::to_string(terms_.size()));
        return terms_[n - 1];
    }

    const std::vector<Rational>& terms() const { return terms_; }

    Sequence prefix(std::size_t n) const {
        if (n > terms_.size()) throw std::length_error("Sequence::prefix: not enough terms");
        return Sequence(std::vector<Rational>(terms_.begin(), terms_.begin() + n));
    }

    bool operator==(const Sequence& o) const { return terms_ == o.terms_; }
    bool operator!=(const Sequence& o) const { return !(*this == o); }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (i) out += ",";
            out += to_string(terms_[i]);
        }
        return out;
    }

private:
    std::vector<Rational> terms_;
};

}  // namespace bellseq
