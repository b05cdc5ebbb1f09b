#pragma once

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "bellseq/rational.hpp"
#include "bellseq/records.hpp"

// The HTTP client is header-only; keep it out of the bellseq namespace.
#include "httplib.h"

namespace bellseq::oeis {

// ----- error taxonomy -----
// transport: the request could not complete; parse: the response or a cache
// file is malformed; unavailable: network use is disabled; not_found: no
// cache entry. Callers (catalog, CLI) map these to distinct exit codes.
struct TransportError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnavailableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotFoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string cache_dir;                     // empty -> BELLSEQ_CACHE or ~/.cache/bellseq
    bool offline = false;                      // when set, fetch() refuses without touching disk
    std::string base_url = "http://oeis.org";  // overridable for fixture servers in tests
    int timeout_seconds = 10;
};

inline std::string default_cache_dir() {
    if (const char* env = std::getenv("BELLSEQ_CACHE"); env && *env) return env;
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::string(home) + "/.cache/bellseq";
    return ".bellseq-cache";
}

inline bool valid_id(const std::string& id) {
    if (id.size() < 7 || id.size() > 8 || id[0] != 'A') return false;
    for (std::size_t i = 1; i < id.size(); ++i)
        if (id[i] < '0' || id[i] > '9') return false;
    return true;
}

namespace detail {
// Parse b-file text: one "index value" pair per line, '#' comments allowed.
// Returns the record's offset (first index) and terms.
inline std::pair<long, std::vector<Rational>> parse_bfile(const std::string& body,
                                                          const std::string& id) {
    std::istringstream in(body);
    std::string line;
    std::vector<Rational> terms;
    long offset = 0;
    bool first = true;
    long expect = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto b = line.find_first_not_of(" \t");
        if (b == std::string::npos || line[b] == '#') continue;
        std::istringstream fields(line.substr(b));
        std::string idx_tok, val_tok, extra;
        if (!(fields >> idx_tok >> val_tok))
            throw ParseError("oeis: malformed b-file line for " + id + ": '" + line + "'");
        long idx;
        try {
            idx = std::stol(idx_tok);
        } catch (const std::exception&) {
            throw ParseError("oeis: bad index '" + idx_tok + "' in b-file for " + id);
        }
        Rational val;
        try {
            val = parse_rational(val_tok);
        } catch (const std::exception&) {
            throw ParseError("oeis: bad value '" + val_tok + "' in b-file for " + id);
        }
        if (first) {
            offset = idx;
            expect = idx;
            first = false;
        }
        if (idx != expect)
            throw ParseError("oeis: non-contiguous b-file for " + id + " at index " + idx_tok);
        ++expect;
        terms.push_back(val);
    }
    if (terms.empty()) throw ParseError("oeis: empty b-file for " + id);
    return {offset, std::move(terms)};
}

inline std::string utc_now_iso() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Split "http://host:port" into (scheme://host:port, "") — httplib takes the
// whole origin; we only validate the scheme here.
inline void check_scheme(const std::string& base_url) {
    if (base_url.rfind("http://", 0) != 0)
        throw TransportError("oeis: only plain http base URLs are supported, got '" + base_url +
                             "'");
}
}  // namespace detail

class Client {
public:
    explicit Client(Config cfg = {}) : cfg_(std::move(cfg)) {
        if (cfg_.cache_dir.empty()) cfg_.cache_dir = default_cache_dir();
    }

    const Config& config() const { return cfg_; }

    std::filesystem::path cache_path(const std::string& id) const {
        return std::filesystem::path(cfg_.cache_dir) / (id + ".seq");
    }

    // Fetch the b-file for `id`, normalize it, write the cache entry, and
    // return the record. Offline mode refuses before any I/O.
    SequenceRecord fetch(const std::string& id) {
        if (!valid_id(id)) throw ParseError("oeis: malformed id '" + id + "'");
        if (cfg_.offline) throw UnavailableError("oeis: offline mode, refusing to fetch " + id);
        detail::check_scheme(cfg_.base_url);

        std::lock_guard<std::mutex> flight(inflight_mutex(id));  // single-flight per id
        rate_limit();

        const std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
        httplib::Client http(cfg_.base_url);
        http.set_connection_timeout(cfg_.timeout_seconds, 0);
        http.set_read_timeout(cfg_.timeout_seconds, 0);
        http.set_follow_location(true);
        httplib::Headers headers{{"User-Agent", "bellseq/1.0 (exact sequence toolkit)"}};
        auto res = http.Get(path, headers);
        if (!res)
            throw TransportError("oeis: request for " + id + " failed: " +
                                 httplib::to_string(res.error()));
        if (res->status != 200)
            throw TransportError("oeis: request for " + id + " returned HTTP " +
                                 std::to_string(res->status));

        auto [offset, terms] = detail::parse_bfile(res->body, id);
        SequenceRecord rec;
        rec.key = id;
        rec.oeis_id = id;
        rec.offset = offset;
        rec.terms = std::move(terms);
        rec.provenance = "fetched from OEIS b-file";
        rec.fetched_at = detail::utc_now_iso();
        rec.source_url = cfg_.base_url + path;
        write_cache(rec);
        return rec;
    }

    SequenceRecord get_cached(const std::string& id) const {
        if (!valid_id(id)) throw ParseError("oeis: malformed id '" + id + "'");
        const auto p = cache_path(id);
        std::ifstream in(p);
        if (!in) throw NotFoundError("oeis: no cache entry for " + id + " at " + p.string());
        std::vector<SequenceRecord> recs;
        try {
            recs = parse_records(in);
        } catch (const std::exception& e) {
            throw ParseError("oeis: corrupt cache file " + p.string() + ": " + e.what());
        }
        if (recs.size() != 1)
            throw ParseError("oeis: corrupt cache file " + p.string() + ": expected one record");
        return recs.front();
    }

    void invalidate(const std::string& id) const {
        if (!valid_id(id)) throw ParseError("oeis: malformed id '" + id + "'");
        std::filesystem::remove(cache_path(id));
    }

private:
    void write_cache(const SequenceRecord& rec) const {
        std::filesystem::create_directories(cfg_.cache_dir);
        const auto p = cache_path(rec.oeis_id);
        std::ofstream out(p, std::ios::trunc);
        if (!out) throw TransportError("oeis: cannot write cache file " + p.string());
        out << render_record(rec) << "\n";
    }

    std::mutex& inflight_mutex(const std::string& id) {
        std::lock_guard<std::mutex> g(map_mutex_);
        auto& slot = inflight_[id];
        if (!slot) slot = std::make_unique<std::mutex>();
        return *slot;
    }

    void rate_limit() {
        static std::mutex m;
        static std::chrono::steady_clock::time_point last{};
        std::lock_guard<std::mutex> g(m);
        const auto now = std::chrono::steady_clock::now();
        const auto since = now - last;
        if (last.time_since_epoch().count() != 0 && since < std::chrono::seconds(1))
            std::this_thread::sleep_for(std::chrono::seconds(1) - since);
        last = std::chrono::steady_clock::now();
    }

    Config cfg_;
    std::mutex map_mutex_;
    std::map<std::string, std::unique_ptr<std::mutex>> inflight_;
};

}  // namespace bellseq::oeis
