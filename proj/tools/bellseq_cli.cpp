// bellseq command-line interface: exact sequence transforms, inverses,
// identity checks, Bell-polynomial tables, the sequence catalog, the OEIS
// cache, and relation discovery.
//
// Exit codes: 0 success / check passed; 1 mathematical assertion failed;
// 2 usage error; 3 domain error; 4 data or parse error; 5 service unavailable.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bellseq/bell.hpp"
#include "bellseq/catalog.hpp"
#include "bellseq/discovery.hpp"
#include "bellseq/identities.hpp"
#include "bellseq/oeis.hpp"
#include "bellseq/records.hpp"
#include "bellseq/sequence.hpp"
#include "bellseq/transform.hpp"

namespace {

using bellseq::BellParams;
using bellseq::Rational;
using bellseq::Sequence;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitAssertFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitData = 4;
constexpr int kExitUnavailable = 5;

struct Global {
    std::string format = "plain";
    bool offline = false;
    std::string cache_dir;

    bool json_out() const { return format == "json"; }
};

std::vector<std::string> seq_strings(const Sequence& s) {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (std::size_t n = 1; n <= s.size(); ++n) out.push_back(bellseq::to_string(s.at(n)));
    return out;
}

void emit_sequence(const Global& g, const std::string& command, const json& params,
                   const Sequence& result) {
    if (g.json_out()) {
        json out{{"command", command}, {"parameters", params}, {"result", seq_strings(result)}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << result.str() << "\n";
    }
}

int emit_report(const Global& g, const std::string& command, const json& params,
                const bellseq::CheckReport& rep) {
    if (g.json_out()) {
        json out{{"command", command},
                 {"parameters", params},
                 {"check", rep.name},
                 {"pass", rep.pass}};
        if (!rep.pass) {
            out["fail_index"] = *rep.fail_index;
            out["lhs"] = bellseq::to_string(rep.lhs);
            out["rhs"] = bellseq::to_string(rep.rhs);
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << rep.str() << "\n";
    }
    return rep.pass ? kExitOk : kExitAssertFailed;
}

BellParams parse_params(const std::string& csv) {
    Sequence s = Sequence::parse(csv);
    if (s.size() != 4)
        throw std::invalid_argument("--params expects exactly four comma-separated values");
    return {s.at(1), s.at(2), s.at(3), s.at(4)};
}

bool looks_inline(const std::string& src) {
    const char c = src.empty() ? '\0' : src[0];
    return (c >= '0' && c <= '9') || c == '-' || c == '+';
}

// Resolve --input: "@file" in the record format, an inline comma list, or a
// catalog key. `n` requests a prefix length; inline/file inputs must already
// hold at least n terms.
Sequence resolve_input(const bellseq::Registry& reg, const std::string& src, std::size_t n) {
    if (!src.empty() && src[0] == '@') {
        const std::string path = src.substr(1);
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
        auto recs = bellseq::parse_records(in);
        if (recs.empty()) throw std::invalid_argument("no records in input file '" + path + "'");
        return Sequence(recs.front().terms).prefix(n);
    }
    if (looks_inline(src)) return Sequence::parse(src).prefix(n);
    return reg.get_prefix(src, n);
}

int dispatch(const std::function<int()>& fn) {
    try {
        return fn();
    } catch (const bellseq::oeis::UnavailableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnavailable;
    } catch (const bellseq::oeis::TransportError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnavailable;
    } catch (const bellseq::oeis::NotFoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const bellseq::oeis::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bellseq: exact four-parameter sequence transforms"};
    app.require_subcommand(1);

    Global g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"plain", "json"}))
        ->capture_default_str();
    app.add_flag("--offline", g.offline, "Disable all network access");
    app.add_option("--cache-dir", g.cache_dir, "OEIS cache directory");

    const bellseq::Registry reg = bellseq::Registry::standard();

    // ----- transform / inverse -----
    std::string t_params, t_name, t_input;
    std::size_t t_n = 8;
    std::string t_m;  // rational parameter for invert/conv/ncp/binomial/S
    auto* t_cmd = app.add_subcommand("transform", "Apply a transform of the family");
    t_cmd->add_option("--params", t_params, "Parameters a,b,c,d");
    t_cmd->add_option("--name", t_name, "Named transform (identity, invert, exp, exp_bs95, conv, "
                                        "revert, ncp, dissection, binomial, L, R, I, S)");
    t_cmd->add_option("--m,--nu", t_m, "Rational parameter for the named transform");
    t_cmd->add_option("--input", t_input, "Catalog key, inline list, or @file")->required();
    t_cmd->add_option("--n", t_n, "Number of terms")->capture_default_str();

    std::string i_params, i_input;
    std::size_t i_n = 8;
    auto* i_cmd = app.add_subcommand("inverse", "Apply the inverse transform");
    i_cmd->add_option("--params", i_params, "Parameters a,b,c,d")->required();
    i_cmd->add_option("--input", i_input, "Catalog key, inline list, or @file")->required();
    i_cmd->add_option("--n", i_n, "Number of terms")->capture_default_str();

    // ----- check -----
    auto* c_cmd = app.add_subcommand("check", "Machine-check an identity");
    c_cmd->require_subcommand(1);

    std::string cg_params, cg_input;
    std::size_t cg_n = 12;
    auto* cg = c_cmd->add_subcommand("gf", "Generating-function functional equation");
    cg->add_option("--params", cg_params)->required();
    cg->add_option("--input", cg_input)->required();
    cg->add_option("--n", cg_n)->capture_default_str();

    std::string ci_params, ci_input, ci_lambda = "1";
    std::size_t ci_n = 6;
    auto* ci = c_cmd->add_subcommand("interpolation", "Two-sided interpolation identity");
    ci->add_option("--params", ci_params)->required();
    ci->add_option("--input", ci_input)->required();
    ci->add_option("--lambda", ci_lambda)->capture_default_str();
    ci->add_option("--n", ci_n)->capture_default_str();

    std::string cc_params, cc_input;
    std::size_t cc_r = 2, cc_n = 8;
    auto* cc = c_cmd->add_subcommand("convolution", "r-fold convolution formula vs brute force");
    cc->add_option("--params", cc_params)->required();
    cc->add_option("--input", cc_input)->required();
    cc->add_option("--r", cc_r)->capture_default_str();
    cc->add_option("--n", cc_n)->capture_default_str();

    std::string ca_which;
    std::size_t ca_n = 12;
    auto* ca = c_cmd->add_subcommand("algebraic", "Polynomial relations of the map series");
    ca->add_option("--which", ca_which)
        ->required()
        ->check(CLI::IsMember({"a257_closed_form", "a257_quadratic", "av_cubic"}));
    ca->add_option("--n", ca_n)->capture_default_str();

    // ----- bell -----
    std::string b_input;
    std::size_t b_n = 6;
    auto* b_cmd = app.add_subcommand("bell", "Print the partial Bell polynomial triangle");
    b_cmd->add_option("--input", b_input, "Catalog key, inline list, or @file")->required();
    b_cmd->add_option("--n", b_n)->capture_default_str();

    // ----- catalog -----
    auto* cat_cmd = app.add_subcommand("catalog", "Sequence catalog access");
    cat_cmd->require_subcommand(1);
    auto* cat_list = cat_cmd->add_subcommand("list", "List catalog keys");
    std::string cs_key;
    std::size_t cs_n = 8;
    auto* cat_show = cat_cmd->add_subcommand("show", "Show a catalog entry");
    cat_show->add_option("key", cs_key)->required();
    cat_show->add_option("--n", cs_n)->capture_default_str();

    // ----- oeis -----
    auto* o_cmd = app.add_subcommand("oeis", "OEIS fetch and cache");
    o_cmd->require_subcommand(1);
    std::string of_id, of_base;
    auto* o_fetch = o_cmd->add_subcommand("fetch", "Fetch a b-file and cache it");
    o_fetch->add_option("id", of_id)->required();
    o_fetch->add_option("--base-url", of_base, "Override the service base URL");
    std::string oc_id;
    bool oc_invalidate = false;
    auto* o_cache = o_cmd->add_subcommand("cache", "Inspect or drop a cache entry");
    o_cache->add_option("id", oc_id)->required();
    o_cache->add_flag("--invalidate", oc_invalidate, "Remove the entry instead of printing it");

    // ----- discover -----
    std::string d_source, d_target;
    std::size_t d_min_match = 8, d_n = 10;
    bool d_diagram = false;
    auto* d_cmd = app.add_subcommand("discover", "Search for transform relations");
    d_cmd->add_option("--source", d_source, "Catalog key, inline list, or @file");
    d_cmd->add_option("--target", d_target, "Catalog key, inline list, or @file");
    d_cmd->add_option("--min-match", d_min_match)->capture_default_str();
    d_cmd->add_option("--n", d_n, "Prefix length drawn from each side")->capture_default_str();
    d_cmd->add_flag("--diagram", d_diagram, "Re-verify the five documented map-series edges");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (t_cmd->parsed()) {
        if (t_params.empty() == t_name.empty()) {
            std::cerr << "error: exactly one of --params/--name is required\n";
            return kExitUsage;
        }
        return dispatch([&] {
            Sequence x = resolve_input(reg, t_input, t_n);
            Sequence y = t_params.empty()
                             ? bellseq::named_transform(
                                   t_name,
                                   t_m.empty() ? std::nullopt
                                               : std::optional<Rational>(bellseq::parse_rational(t_m)),
                                   x)
                             : bellseq::bell_transform(parse_params(t_params), x);
            json params{{"input", t_input}, {"n", t_n}};
            if (!t_params.empty()) params["params"] = t_params;
            if (!t_name.empty()) params["name"] = t_name;
            if (!t_m.empty()) params["m"] = t_m;
            emit_sequence(g, "transform", params, y);
            return kExitOk;
        });
    }

    if (i_cmd->parsed()) {
        return dispatch([&] {
            Sequence y = resolve_input(reg, i_input, i_n);
            Sequence x = bellseq::bell_inverse(parse_params(i_params), y);
            emit_sequence(g, "inverse", json{{"params", i_params}, {"input", i_input}, {"n", i_n}},
                          x);
            return kExitOk;
        });
    }

    if (cg->parsed()) {
        return dispatch([&] {
            Sequence x = resolve_input(reg, cg_input, cg_n);
            auto rep = bellseq::check_gf(parse_params(cg_params), x, cg_n);
            return emit_report(g, "check gf",
                               json{{"params", cg_params}, {"input", cg_input}, {"n", cg_n}}, rep);
        });
    }

    if (ci->parsed()) {
        return dispatch([&] {
            Sequence x = resolve_input(reg, ci_input, ci_n);
            auto rep = bellseq::check_interpolation(parse_params(ci_params), x,
                                                    bellseq::parse_rational(ci_lambda), ci_n);
            return emit_report(g, "check interpolation",
                               json{{"params", ci_params},
                                    {"input", ci_input},
                                    {"lambda", ci_lambda},
                                    {"n", ci_n}},
                               rep);
        });
    }

    if (cc->parsed()) {
        return dispatch([&] {
            BellParams p = parse_params(cc_params);
            Sequence x = resolve_input(reg, cc_input, cc_n);
            Sequence formula = bellseq::convolve_bell(p, x, cc_r);
            Sequence y = bellseq::bell_transform(p, x);
            std::vector<Rational> yhat;
            for (std::size_t n = 1; n <= y.size(); ++n) yhat.push_back(p.d * y.at(n));
            Sequence brute = bellseq::convolution_power(Sequence(std::move(yhat)), cc_r);
            bellseq::CheckReport rep;
            rep.name = "convolution";
            rep.params = p.str() + " r=" + std::to_string(cc_r);
            rep.order = cc_n;
            for (std::size_t n = 1; n <= cc_n && rep.pass; ++n)
                rep.record(n, formula.at(n), brute.at(n));
            return emit_report(g, "check convolution",
                               json{{"params", cc_params},
                                    {"input", cc_input},
                                    {"r", cc_r},
                                    {"n", cc_n}},
                               rep);
        });
    }

    if (ca->parsed()) {
        return dispatch([&] {
            bellseq::AlgebraicCheck which =
                ca_which == "a257_closed_form" ? bellseq::AlgebraicCheck::a257_closed_form
                : ca_which == "a257_quadratic" ? bellseq::AlgebraicCheck::a257_quadratic
                                               : bellseq::AlgebraicCheck::av_cubic;
            auto rep = bellseq::check_algebraic_gf(which, ca_n);
            return emit_report(g, "check algebraic", json{{"which", ca_which}, {"n", ca_n}}, rep);
        });
    }

    if (b_cmd->parsed()) {
        return dispatch([&] {
            Sequence x = resolve_input(reg, b_input, b_n);
            bellseq::BellTable B(x, b_n);
            if (g.json_out()) {
                json rows = json::array();
                for (std::size_t n = 1; n <= b_n; ++n) {
                    json row = json::array();
                    for (std::size_t k = 1; k <= n; ++k)
                        row.push_back(bellseq::to_string(B.at(n, k)));
                    rows.push_back(row);
                }
                std::cout << json{{"command", "bell"},
                                  {"parameters", {{"input", b_input}, {"n", b_n}}},
                                  {"result", rows}}
                                 .dump()
                          << "\n";
            } else {
                for (std::size_t n = 1; n <= b_n; ++n) {
                    for (std::size_t k = 1; k <= n; ++k)
                        std::cout << (k > 1 ? "," : "") << bellseq::to_string(B.at(n, k));
                    std::cout << "\n";
                }
            }
            return kExitOk;
        });
    }

    if (cat_list->parsed()) {
        return dispatch([&] {
            auto keys = reg.keys();
            if (g.json_out()) {
                std::cout << json{{"command", "catalog list"}, {"result", keys}}.dump() << "\n";
            } else {
                for (const auto& k : keys) std::cout << k << "\n";
            }
            return kExitOk;
        });
    }

    if (cat_show->parsed()) {
        return dispatch([&] {
            Sequence s = reg.get_prefix(cs_key, cs_n);
            if (g.json_out()) {
                json out{{"command", "catalog show"},
                         {"parameters", {{"key", cs_key}, {"n", cs_n}}},
                         {"result", seq_strings(s)}};
                if (cs_key.find('(') == std::string::npos) {
                    const auto& e = reg.entry(cs_key);
                    out["oeis_id"] = e.oeis_id;
                    out["offset"] = e.offset;
                    out["provenance"] = e.provenance;
                }
                std::cout << out.dump() << "\n";
            } else {
                if (cs_key.find('(') == std::string::npos) {
                    const auto& e = reg.entry(cs_key);
                    std::cout << "# " << cs_key
                              << (e.oeis_id.empty() ? "" : " (" + e.oeis_id + ")") << ": "
                              << e.provenance << "\n";
                }
                std::cout << s.str() << "\n";
            }
            return kExitOk;
        });
    }

    if (o_fetch->parsed()) {
        return dispatch([&] {
            bellseq::oeis::Config cfg;
            cfg.offline = g.offline;
            cfg.cache_dir = g.cache_dir;
            if (!of_base.empty()) cfg.base_url = of_base;
            bellseq::oeis::Client client(cfg);
            auto rec = client.fetch(of_id);
            if (g.json_out()) {
                std::cout << json{{"command", "oeis fetch"},
                                  {"id", rec.oeis_id},
                                  {"offset", rec.offset},
                                  {"result", seq_strings(Sequence(rec.terms))},
                                  {"fetched_at", rec.fetched_at},
                                  {"source_url", rec.source_url}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << bellseq::render_record(rec) << "\n";
            }
            return kExitOk;
        });
    }

    if (o_cache->parsed()) {
        return dispatch([&] {
            bellseq::oeis::Config cfg;
            cfg.offline = g.offline;
            cfg.cache_dir = g.cache_dir;
            bellseq::oeis::Client client(cfg);
            if (oc_invalidate) {
                client.invalidate(oc_id);
                if (g.json_out())
                    std::cout << json{{"command", "oeis cache"}, {"invalidated", oc_id}}.dump()
                              << "\n";
                else
                    std::cout << "invalidated " << oc_id << "\n";
                return kExitOk;
            }
            auto rec = client.get_cached(oc_id);
            if (g.json_out()) {
                std::cout << json{{"command", "oeis cache"},
                                  {"id", rec.oeis_id},
                                  {"offset", rec.offset},
                                  {"result", seq_strings(Sequence(rec.terms))},
                                  {"fetched_at", rec.fetched_at},
                                  {"source_url", rec.source_url}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << bellseq::render_record(rec) << "\n";
            }
            return kExitOk;
        });
    }

    if (d_cmd->parsed()) {
        return dispatch([&] {
            std::vector<bellseq::RelationHypothesis> hyps;
            if (d_diagram) {
                hyps = bellseq::reproduce_paper_diagram(reg, d_min_match);
            } else {
                if (d_source.empty() || d_target.empty()) {
                    std::cerr << "error: --source and --target are required without --diagram\n";
                    return kExitUsage;
                }
                Sequence src = resolve_input(reg, d_source, d_n);
                Sequence tgt = resolve_input(reg, d_target, d_n);
                hyps = bellseq::search(src, tgt, bellseq::SearchGrid::standard(),
                                       bellseq::default_pre_ops(), d_min_match, d_source, d_target);
            }
            bool all_ok = true;
            for (const auto& h : hyps) all_ok = all_ok && h.verified;
            if (g.json_out()) {
                json arr = json::array();
                for (const auto& h : hyps)
                    arr.push_back(json{{"source", h.source},
                                       {"target", h.target},
                                       {"word", bellseq::word_str(h.word)},
                                       {"matched_len", h.matched_len},
                                       {"status", h.status}});
                std::cout << json{{"command", "discover"}, {"result", arr}}.dump() << "\n";
            } else {
                if (hyps.empty()) std::cout << "no relation found\n";
                for (const auto& h : hyps) std::cout << h.str() << "\n";
            }
            return all_ok ? kExitOk : kExitAssertFailed;
        });
    }

    std::cerr << "error: no subcommand\n";
    return kExitUsage;
}
