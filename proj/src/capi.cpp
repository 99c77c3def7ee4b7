#include "palper.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"

#include "palper/constructions.hpp"
#include "palper/corpus.hpp"
#include "palper/gword.hpp"
#include "palper/oracle.hpp"
#include "palper/palperiod.hpp"
#include "palper/verify.hpp"
#include "palper/word.hpp"

using nlohmann::json;

struct palper_word {
    palper::Word w;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
palper_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return PALPER_ERR_INVALID;
    } catch (const json::exception& e) {
        g_last_error = e.what();  // missing or mistyped argument fields
        return PALPER_ERR_INVALID;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PALPER_ERR_INTERNAL;
    }
}

palper::HalfPos halfpos_arg(const json& j, const char* key) {
    const json& v = j.at(key);
    if (v.is_number_integer()) return palper::HalfPos::from_int(v.get<int>());
    if (v.is_string()) return palper::parse_halfpos(v.get<std::string>());
    throw std::invalid_argument(std::string(key) + ": expected integer or fraction string");
}

json halfpos_json(palper::HalfPos p) {
    return json{{"doubled", p.d}, {"value", palper::to_fraction(p)}};
}

json pp_json(const palper::PalPeriodicity& pp) {
    json centres = json::array();
    for (auto c : pp.essential_centres) centres.push_back(halfpos_json(c));
    return json{{"start", pp.span.start},
                {"end", pp.span.end},
                {"offset", halfpos_json(pp.offset)},
                {"half_period", halfpos_json(pp.half_period)},
                {"period", pp.period()},
                {"essential_centres", centres},
                {"p", pp.ps.p.render()},
                {"s", pp.ps.s.render()}};
}

palper::PalOcc occ_arg(const json& j, const char* ckey, const char* rkey) {
    return {halfpos_arg(j, ckey), halfpos_arg(j, rkey)};
}

}  // namespace

extern "C" {

const char* palper_last_error(void) { return g_last_error.c_str(); }

void palper_string_free(char* s) { std::free(s); }

palper_status palper_word_parse(const char* text, palper_word** out) {
    if (!text || !out) {
        g_last_error = "null argument";
        return PALPER_ERR_INVALID;
    }
    try {
        g_last_error.clear();
        *out = new palper_word{palper::Word::parse(text)};
        return PALPER_OK;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PALPER_ERR_PARSE;
    }
}

void palper_word_free(palper_word* w) { delete w; }

palper_status palper_word_render(const palper_word* w, char** out) {
    return guarded([&] {
        if (!w || !out) throw std::invalid_argument("null argument");
        *out = dup_string(w->w.render());
        return PALPER_OK;
    });
}

palper_status palper_famous_word(const char* name, int n, palper_word** out) {
    return guarded([&] {
        if (!name || !out) throw std::invalid_argument("null argument");
        *out = new palper_word{palper::famous_word(name, n)};
        return PALPER_OK;
    });
}

palper_status palper_detect(const palper_word* w, char** out_ndjson) {
    return guarded([&] {
        if (!w || !out_ndjson) throw std::invalid_argument("null argument");
        std::string lines;
        for (const auto& occ : palper::find_maximal_pps(w->w)) {
            auto pp = palper::make_pal_periodicity(w->w, occ.span, occ.offset, occ.half_period);
            lines += pp_json(pp).dump();
            lines += '\n';
        }
        *out_ndjson = dup_string(lines);
        return PALPER_OK;
    });
}

palper_status palper_params(const palper_word* w, char** out_ndjson) {
    return guarded([&] {
        if (!w || !out_ndjson) throw std::invalid_argument("null argument");
        std::string lines;
        for (auto [r, h] : palper::enumerate_parameterizations(w->w)) {
            json rec{{"offset", halfpos_json(r)}, {"half_period", halfpos_json(h)},
                     {"period", h.d}};
            lines += rec.dump();
            lines += '\n';
        }
        *out_ndjson = dup_string(lines);
        return PALPER_OK;
    });
}

palper_status palper_construct(const char* theorem, const char* args_json, char** out_json) {
    return guarded([&] {
        if (!theorem || !args_json || !out_json) throw std::invalid_argument("null argument");
        json args = json::parse(args_json, nullptr, false);
        if (args.is_discarded()) {
            g_last_error = "malformed args JSON";
            return PALPER_ERR_PARSE;
        }
        std::string name = theorem;
        json out;
        if (name == "reverse-prefixes") {
            palper::Word u = palper::Word::parse(args.at("u").get<std::string>());
            auto res = palper::from_reverse_prefixes(u, args.at("u_suffix_len").get<int>(),
                                                     args.at("v_suffix_len").get<int>(),
                                                     args.at("target_len").get<int>());
            out = pp_json(res.pp);
            out["word"] = res.w.render();
            json proofs = json::array();
            for (const auto& occ : res.proof_palindromes)
                proofs.push_back(json{{"centre", halfpos_json(occ.centre)},
                                      {"radius", halfpos_json(occ.radius)}});
            out["proof_palindromes"] = proofs;
        } else {
            if (name != "periodic-palindrome" && name != "crossing" && name != "nested-crossing" &&
                name != "chained" && name != "palindromic-border")
                throw std::invalid_argument("unknown theorem: " + name);
            palper::Word w = palper::Word::parse(args.at("word").get<std::string>());
            palper::PalPeriodicity pp;
            if (name == "periodic-palindrome") {
                pp = palper::from_periodic_palindrome(w, args.at("p").get<int>());
            } else if (name == "crossing") {
                pp = palper::from_crossing_palindromes(
                    w, {occ_arg(args, "c1", "r1"), occ_arg(args, "c2", "r2")});
            } else if (name == "nested-crossing") {
                int start = args.at("inner_start").get<int>();
                int len = args.at("inner_len").get<int>();
                palper::PalOcc inner{palper::HalfPos{2 * start + len - 1},
                                     palper::HalfPos{len - 1}};
                pp = palper::from_nested_crossing(w, inner);
            } else if (name == "chained") {
                int a = args.at("a").get<int>(), b = args.at("b").get<int>();
                int c = args.at("c").get<int>(), d = args.at("d").get<int>();
                palper::PalOcc p1{palper::HalfPos{a + b}, palper::HalfPos{b - a}};
                palper::PalOcc p2{palper::HalfPos{c + d}, palper::HalfPos{d - c}};
                pp = palper::from_chained_palindromes(w, {p1, p2});
            } else if (name == "palindromic-border") {
                pp = palper::from_palindromic_border(w, args.at("m").get<int>());
            } else {
                throw std::invalid_argument("unknown theorem: " + name);
            }
            out = pp_json(pp);
        }
        *out_json = dup_string(out.dump());
        return PALPER_OK;
    });
}

palper_status palper_gword(int doubled_r, int doubled_c, int doubled_h, char** out_json) {
    return guarded([&] {
        if (!out_json) throw std::invalid_argument("null argument");
        auto p = palper::gword_params(palper::HalfPos{doubled_r}, palper::HalfPos{doubled_c},
                                      palper::HalfPos{doubled_h});
        json out{{"r", halfpos_json(p.offset_r)},
                 {"c", halfpos_json(p.centre_c)},
                 {"h", halfpos_json(p.half_period_h)},
                 {"g", p.g},
                 {"n", p.n},
                 {"consistent", p.consistent()}};
        if (p.consistent()) {
            auto [c1, c2] = palper::essential_centres_in_gword(p, 0);
            out["essential_centres"] = json::array({halfpos_json(c1), halfpos_json(c2)});
            json chain = json::array();
            for (palper::GWordParams cur = p;;) {
                auto st = palper::gword_step(cur);
                if (st.terminal) break;
                cur = st.next;
                chain.push_back(json{{"r", halfpos_json(cur.offset_r)},
                                     {"c", halfpos_json(cur.centre_c)},
                                     {"h", halfpos_json(cur.half_period_h)},
                                     {"n", cur.n}});
            }
            out["chain"] = chain;
            out["base_length"] = p.g;
        }
        *out_json = dup_string(out.dump());
        return PALPER_OK;
    });
}

palper_status palper_table(int h1, int h2, int same_parity, int len_max, int len_min,
                           int threads, int as_tsv, char** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null argument");
        auto t = palper::build_table(
            palper::HalfPos::from_int(h1), palper::HalfPos::from_int(h2),
            same_parity ? palper::OffsetParity::Same : palper::OffsetParity::Opposite, len_max,
            len_min, threads);
        if (as_tsv) {
            *out = dup_string(palper::table_to_tsv(t));
        } else {
            json rows = json::array();
            for (const auto& row : t.rows)
                rows.push_back(json{{"r1", row.r1}, {"r2", row.r2}, {"periods", row.periods}});
            json j{{"h1", h1}, {"h2", h2}, {"lengths", t.lengths}, {"rows", rows}};
            *out = dup_string(j.dump());
        }
        return PALPER_OK;
    });
}

palper_status palper_table_diff(int h1, int h2, int same_parity, int len_max, int len_min,
                                int threads, const char* expected_tsv, char** report) {
    return guarded([&] {
        if (!expected_tsv || !report) throw std::invalid_argument("null argument");
        auto t = palper::build_table(
            palper::HalfPos::from_int(h1), palper::HalfPos::from_int(h2),
            same_parity ? palper::OffsetParity::Same : palper::OffsetParity::Opposite, len_max,
            len_min, threads);
        auto diff = palper::table_diff(t, expected_tsv);
        if (!diff) {
            *report = dup_string("");
            return PALPER_OK;
        }
        *report = dup_string(*diff);
        g_last_error = "tables differ";
        return PALPER_ERR_INVALID;
    });
}

palper_status palper_census(const char* famous, int n, int stride, int threads,
                            char** out_ndjson) {
    return guarded([&] {
        if (!famous || !out_ndjson) throw std::invalid_argument("null argument");
        std::string lines;
        for (const auto& rec : palper::census(famous, n, stride, threads)) {
            json hist = json::object();
            for (auto [dh, cnt] : rec.histogram)
                hist[palper::to_fraction(palper::HalfPos{dh})] = cnt;
            json j{{"name", rec.name},
                   {"prefix_len", rec.prefix_len},
                   {"count", rec.count},
                   {"histogram", hist},
                   {"max_density_pos", rec.max_density_pos}};
            lines += j.dump();
            lines += '\n';
        }
        *out_ndjson = dup_string(lines);
        return PALPER_OK;
    });
}

palper_status palper_verify(const char* suite, int budget, int threads, char** out_json) {
    return guarded([&] {
        if (!suite || !out_json) throw std::invalid_argument("null argument");
        std::vector<std::string> names;
        if (std::string(suite) == "all")
            names = palper::verify_suites();
        else
            names.push_back(suite);
        json results = json::array();
        bool all_ok = true;
        for (const auto& name : names) {
            auto res = palper::run_verify_suite(name, budget, threads);
            all_ok = all_ok && res.ok;
            results.push_back(json{{"suite", res.suite},
                                   {"ok", res.ok},
                                   {"cases", res.cases},
                                   {"detail", res.detail}});
        }
        json out{{"ok", all_ok}, {"results", results}};
        *out_json = dup_string(out.dump());
        return PALPER_OK;
    });
}

}  // extern "C"
