#pragma once

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bellseq/rational.hpp"
#include "bellseq/sequence.hpp"

namespace bellseq {

// One sequence record in the line-oriented pinned-prefix format:
//
//   key|oeis_id|offset|t1,t2,...|provenance[|fetched_at|source_url]
//
// Fields are '|'-separated; terms are exact "p" or "p/q" tokens; oeis_id may
// be empty; '#' lines and blank lines are ignored. The two trailing fields
// are the fetch metadata used by the OEIS cache and are absent in pinned data.
struct SequenceRecord {
    std::string key;
    std::string oeis_id;
    long offset = 1;
    std::vector<Rational> terms;
    std::string provenance;
    std::string fetched_at;   // cache metadata, optional
    std::string source_url;   // cache metadata, optional

    bool operator==(const SequenceRecord& o) const {
        return key == o.key && oeis_id == o.oeis_id && offset == o.offset && terms == o.terms &&
               provenance == o.provenance && fetched_at == o.fetched_at &&
               source_url == o.source_url;
    }
};

inline std::string render_record(const SequenceRecord& r) {
    std::string line = r.key + "|" + r.oeis_id + "|" + std::to_string(r.offset) + "|";
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
        if (i) line += ",";
        line += to_string(r.terms[i]);
    }
    line += "|" + r.provenance;
    if (!r.fetched_at.empty() || !r.source_url.empty())
        line += "|" + r.fetched_at + "|" + r.source_url;
    return line;
}

inline SequenceRecord parse_record_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    std::istringstream in(line);
    while (std::getline(in, cur, '|')) fields.push_back(cur);
    if (line.size() && line.back() == '|') fields.push_back("");
    if (fields.size() != 5 && fields.size() != 7)
        throw std::invalid_argument("sequence record: expected 5 or 7 fields, got " +
                                    std::to_string(fields.size()) + " in: " + line);
    SequenceRecord r;
    r.key = fields[0];
    r.oeis_id = fields[1];
    try {
        r.offset = std::stol(fields[2]);
    } catch (const std::exception&) {
        throw std::invalid_argument("sequence record: bad offset '" + fields[2] + "'");
    }
    if (r.key.empty()) throw std::invalid_argument("sequence record: empty key");
    if (fields[3].empty()) throw std::invalid_argument("sequence record: empty term list");
    r.terms = Sequence::parse(fields[3]).terms();
    r.provenance = fields[4];
    if (fields.size() == 7) {
        r.fetched_at = fields[5];
        r.source_url = fields[6];
    }
    return r;
}

inline std::vector<SequenceRecord> parse_records(std::istream& in) {
    std::vector<SequenceRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto b = line.find_first_not_of(" \t");
        if (b == std::string::npos || line[b] == '#') continue;
        out.push_back(parse_record_line(line.substr(b)));
    }
    return out;
}

inline std::vector<SequenceRecord> parse_records(const std::string& text) {
    std::istringstream in(text);
    return parse_records(in);
}

}  // namespace bellseq
