#include "qsdd/cli.hpp"

#include <json.hpp>

namespace qsdd::cli {

namespace {

CommandResult usage_error(const std::string& msg) {
    return {"error: " + msg + "\n", 2};
}

std::string fundamental_key(const std::vector<int>& a) {
    bool compact = true;
    for (int x : a)
        if (x > 9) compact = false;
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) {
        if (i && !compact) s += ',';
        s += std::to_string(a[i]);
    }
    return s.empty() ? "()" : s;
}

} // namespace

CommandResult cmd_table(const CommandConfig& cfg) {
    if (cfg.n < 0) return usage_error("table needs --n >= 0");
    try {
        MParam m(cfg.m);
        long cap = cfg.max_size >= 0 ? cfg.max_size : cfg.n;
        auto supp = enumerate_class(ForestClass::FullySupported, cfg.n, m, cap);
        std::string out;
        nlohmann::json rows = nlohmann::json::array();
        for (auto& F : supp) {
            XPoly p = forest_polynomial(F);
            if (cfg.format == "json") {
                rows.push_back({{"code", F.code()}, {"poly", format_poly(p)}});
            } else {
                out += code_to_string_padded(F.code(), cfg.n) + "\t" + format_poly(p) + "\n";
            }
        }
        if (cfg.format == "json")
            out = nlohmann::json{{"m", cfg.m}, {"n", cfg.n}, {"rows", rows}}.dump() + "\n";
        return {out, 0};
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
}

CommandResult cmd_expand(const CommandConfig& cfg) {
    try {
        MParam m(cfg.m);
        if (cfg.basis == "forest") {
            XPoly f = parse_poly(cfg.input);
            Expansion e = forest_expand(f, m);
            if (e.reconstruct() != f)
                return {"error: internal reconstruction mismatch\n", 1};
            if (cfg.format == "json") return {e.to_json() + "\n", 0};
            if (cfg.format == "tsv") {
                std::string out;
                for (auto& [c, a] : e.terms())
                    out += code_to_string(c) + "\t" + a.str() + "\n";
                return {out, 0};
            }
            return {e.to_text(), 0};
        }
        if (cfg.basis == "fundamental") {
            if (cfg.n < 1) return usage_error("fundamental expansion needs --n");
            XPoly f = parse_poly(cfg.input);
            auto e = fundamental_expand(f, cfg.n, m);
            XPoly back;
            for (auto& [a, coeff] : e) back += slide_polynomial(a, m) * coeff;
            if (back != f) return {"error: internal reconstruction mismatch\n", 1};
            if (cfg.format == "json") {
                nlohmann::json terms = nlohmann::json::array();
                for (auto& [a, coeff] : e)
                    terms.push_back({{"sequence", a}, {"coeff", coeff.str()}});
                return {nlohmann::json{{"m", cfg.m}, {"n", cfg.n}, {"terms", terms}}.dump() +
                            "\n",
                        0};
            }
            std::string sep = cfg.format == "tsv" ? "\t" : ": ";
            std::string out;
            for (auto& [a, coeff] : e)
                out += fundamental_key(a) + sep + coeff.str() + "\n";
            return {out, 0};
        }
        if (cfg.basis == "lambda-diff") {
            LPoly g = parse_lpoly(cfg.input);
            auto coeffs = lambda_difference_coeffs(g, m);
            LPoly back;
            for (auto& [c, b] : coeffs) back += lambda_difference_product(c, m) * b;
            if (back != g) return {"error: internal reconstruction mismatch\n", 1};
            if (cfg.format == "json") {
                nlohmann::json terms = nlohmann::json::array();
                for (auto& [c, b] : coeffs)
                    terms.push_back({{"code", c}, {"coeff", detail::coeff_to_string(b)}});
                return {nlohmann::json{{"m", cfg.m}, {"terms", terms}}.dump() + "\n", 0};
            }
            std::string out;
            for (auto& [c, b] : coeffs) {
                std::string cs = code_to_string(c);
                cs.front() = '(';
                cs.back() = ')';
                std::string sep = cfg.format == "tsv" ? "\t" : ": ";
                out += cs + sep + detail::coeff_to_string(b) + "\n";
            }
            return {out, 0};
        }
        return usage_error("unknown basis: " + cfg.basis);
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
}

CommandResult cmd_reduce(const CommandConfig& cfg) {
    if (cfg.n < 1) return usage_error("reduce needs --n");
    try {
        MParam m(cfg.m);
        XPoly f = parse_poly(cfg.input);
        Expansion e = coinv_reduce(f, cfg.n, m);
        std::string out;
        if (cfg.format == "json") {
            out = e.to_json() + "\n";
        } else if (cfg.format == "tsv") {
            for (auto& [c, a] : e.terms()) out += code_to_string(c) + "\t" + a.str() + "\n";
        } else {
            out = e.to_text();
        }
        if (cfg.k >= 0) {
            bool member = ideal_membership(f, {cfg.n, m, cfg.k});
            out += "in_ideal(k=" + std::to_string(cfg.k) + "): " +
                   (member ? "true" : "false") + "\n";
        }
        return {out, 0};
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
}

CommandResult cmd_volume(const CommandConfig& cfg) {
    try {
        MParam m(cfg.m);
        IndexedForest F = forest_of_code(code_from_string(cfg.input), m);
        LPoly v = volume_polynomial(F, VolumeMethod::Recursive);
        if (F.size() <= 16 && v != volume_polynomial(F, VolumeMethod::Paths))
            return {"error: internal volume method mismatch\n", 1};
        if (cfg.format == "json")
            return {nlohmann::json{{"m", cfg.m},
                                   {"code", F.code()},
                                   {"volume", format_lpoly(v)}}
                            .dump() +
                        "\n",
                    0};
        return {format_lpoly(v) + "\n", 0};
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
}

CommandResult cmd_verify(const CommandConfig& cfg) {
    std::vector<std::string> names;
    if (cfg.suite == "all") {
        names = checks::suite_names();
    } else {
        bool known = false;
        for (auto& s : checks::suite_names())
            if (s == cfg.suite) known = true;
        if (!known) return usage_error("unknown suite: " + cfg.suite);
        names = {cfg.suite};
    }
    std::string out;
    nlohmann::json arr = nlohmann::json::array();
    bool all_pass = true;
    for (auto& name : names) {
        checks::SuiteResult r;
        try {
            r = checks::run_suite(name, cfg.n, cfg.max_size, cfg.seed);
        } catch (const std::exception& e) {
            return usage_error(e.what());
        }
        all_pass = all_pass && r.pass;
        if (cfg.format == "json") {
            arr.push_back(
                {{"suite", r.name}, {"pass", r.pass}, {"checks", r.checks}, {"detail", r.detail}});
        } else {
            out += r.log;
            out += r.line() + "\n";
        }
    }
    if (cfg.format == "json")
        out = nlohmann::json{{"suites", arr}, {"all_pass", all_pass}}.dump() + "\n";
    return {out, all_pass ? 0 : 1};
}

} // namespace qsdd::cli
