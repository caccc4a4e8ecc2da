#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "vanish/bounds.hpp"

namespace vanish {

/// Line-oriented key=value run configuration for the verification grid.
/// Lists are comma-separated; n accepts ranges ("2..12"). Rationals cross
/// this boundary as num/den strings only. Unknown keys are errors.
struct RunConfig {
    bool float_mode = false;
    long precision_bits = 192;
    std::vector<long> ns;
    std::vector<Rational> Ls;
    std::vector<std::pair<NormExponent, NormExponent>> pairs;
    Reading reading = Reading::LemmaConsistent;
    std::string csv_path;
    std::string summary_path;
    long threads = 1;
    bool reproducible = false;

    GridConfig grid() const {
        GridConfig g;
        g.ns = ns;
        g.Ls = Ls;
        g.pairs = pairs;
        g.reading = reading;
        g.threads = threads;
        g.prec = precision_bits;
        return g;
    }
};

namespace detail {

inline std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::stringstream ss(s);
    while (std::getline(ss, cur, ',')) {
        // trim
        auto b = cur.find_first_not_of(" \t");
        auto e = cur.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        out.push_back(cur.substr(b, e - b + 1));
    }
    return out;
}

inline long parse_long(const std::string& s) {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

}  // namespace detail

inline RunConfig parse_run_config(std::istream& in) {
    RunConfig cfg;
    std::string line;
    long lineno = 0;
    bool exact_mode = true;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        auto trim = [](std::string& s) {
            auto b2 = s.find_first_not_of(" \t");
            auto e2 = s.find_last_not_of(" \t");
            s = b2 == std::string::npos ? std::string() : s.substr(b2, e2 - b2 + 1);
        };
        trim(key);
        trim(val);
        if (key == "mode") {
            if (val == "exact") cfg.float_mode = false;
            else if (val == "float") cfg.float_mode = true;
            else throw std::invalid_argument("config: mode must be exact or float");
            exact_mode = !cfg.float_mode;
        } else if (key == "precision_bits") {
            cfg.precision_bits = detail::parse_long(val);
            if (cfg.precision_bits < 16 || cfg.precision_bits > (1 << 22))
                throw std::invalid_argument("config: precision_bits out of range");
        } else if (key == "n") {
            for (const auto& tok : detail::split_csv(val)) {
                auto dots = tok.find("..");
                if (dots == std::string::npos) {
                    cfg.ns.push_back(detail::parse_long(tok));
                } else {
                    long lo = detail::parse_long(tok.substr(0, dots));
                    long hi = detail::parse_long(tok.substr(dots + 2));
                    if (lo > hi) throw std::invalid_argument("config: empty n range '" + tok + "'");
                    for (long v = lo; v <= hi; ++v) cfg.ns.push_back(v);
                }
            }
            for (long v : cfg.ns)
                if (v < 1) throw std::invalid_argument("config: n values must be >= 1");
        } else if (key == "L") {
            for (const auto& tok : detail::split_csv(val)) {
                Rational L = parse_rational(tok);
                if (L <= 0) throw std::invalid_argument("config: L values must be > 0");
                cfg.Ls.push_back(L);
            }
        } else if (key == "pairs") {
            for (const auto& tok : detail::split_csv(val)) {
                auto colon = tok.find(':');
                if (colon == std::string::npos)
                    throw std::invalid_argument("config: pair must be p:q, got '" + tok + "'");
                NormExponent p = NormExponent::parse(tok.substr(0, colon));
                NormExponent q = NormExponent::parse(tok.substr(colon + 1));
                if (!(p.conjugate() == q))
                    throw std::invalid_argument("config: exponents not conjugate in '" + tok + "'");
                cfg.pairs.emplace_back(p, q);
            }
        } else if (key == "reading") {
            if (val == "asprinted") cfg.reading = Reading::AsPrinted;
            else if (val == "lemma") cfg.reading = Reading::LemmaConsistent;
            else throw std::invalid_argument("config: reading must be asprinted or lemma");
        } else if (key == "csv") {
            cfg.csv_path = val;
        } else if (key == "summary") {
            cfg.summary_path = val;
        } else if (key == "threads") {
            cfg.threads = detail::parse_long(val);
            if (cfg.threads < 1) throw std::invalid_argument("config: threads must be >= 1");
        } else if (key == "reproducible") {
            if (val == "true") cfg.reproducible = true;
            else if (val == "false") cfg.reproducible = false;
            else throw std::invalid_argument("config: reproducible must be true or false");
        } else {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }
    if (exact_mode)
        for (const auto& [p, q] : cfg.pairs)
            if (p.is_general() || q.is_general())
                throw std::invalid_argument(
                    "config: exact mode accepts only exponents 1, 2, inf (use mode=float)");
    return cfg;
}

}  // namespace vanish
