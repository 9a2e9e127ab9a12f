#pragma once

/**
 * @file config.hpp
 * @brief Sectioned `key = value` workbench configuration and the plain-text
 * vector / error-pattern formats.
 *
 *     [field]
 *     p = 2
 *     m = 4
 *     modulus = 1 1 0 0 1        # c_0 .. c_m, monic
 *     [presentation]
 *     variables = X Y
 *     weights = 4 5              # one line per row of M
 *     order = integer            # lex | grlex | grevlex | integer
 *     tiebreak = X Y             # most significant first
 *     generator = X^5 + Y^4 + Y  # repeatable
 *     [code]
 *     ell = 20                   # or: top = Y^5
 *     seed = 1
 */

#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "code.hpp"

namespace ordercodes {

struct WorkbenchConfig {
    Presentation presentation;
    std::size_t ell = 0;
    std::optional<std::uint64_t> seed;
};

namespace detail {

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

inline long parse_long(const std::string& t, std::size_t line) {
    try {
        std::size_t used = 0;
        long v = std::stol(t, &used);
        if (used != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": expected integer, got '" + t + "'");
    }
}

}  // namespace detail

inline WorkbenchConfig parse_config(const std::string& text) {
    struct Entry {
        std::string value;
        std::size_t line;
    };
    std::map<std::string, std::vector<Entry>> kv;  // "section.key"
    std::string section;
    std::istringstream is(text);
    std::size_t lineno = 0;
    for (std::string raw; std::getline(is, raw);) {
        ++lineno;
        auto hash = raw.find('#');
        std::string line = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": unterminated section header");
            section = detail::trim(line.substr(1, line.size() - 2));
            if (section != "field" && section != "presentation" && section != "code")
                throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": unknown section [" + section + "]");
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected key = value");
        std::string key = detail::trim(line.substr(0, eq));
        std::string value = detail::trim(line.substr(eq + 1));
        if (key == "seed" && (section.empty() || section == "code")) {
            kv["code.seed"].push_back({value, lineno});
            continue;
        }
        if (section.empty()) throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": key outside any section");
        kv[section + "." + key].push_back({value, lineno});
    }
    auto one = [&](const std::string& k) -> const Entry& {
        auto it = kv.find(k);
        if (it == kv.end()) throw Error(ErrorCode::Parse, "missing key " + k);
        if (it->second.size() != 1)
            throw Error(ErrorCode::Parse, "line " + std::to_string(it->second[1].line) + ": duplicate key " + k);
        return it->second.front();
    };
    for (auto& [k, v] : kv) {
        static const std::set<std::string> known = {"field.p", "field.m", "field.modulus", "presentation.variables",
                                                    "presentation.weights", "presentation.order",
                                                    "presentation.tiebreak", "presentation.generator", "code.ell",
                                                    "code.top", "code.seed"};
        if (!known.count(k)) throw Error(ErrorCode::Parse, "line " + std::to_string(v.front().line) + ": unknown key " + k);
    }

    auto& ep = one("field.p");
    auto& em = one("field.m");
    auto& emod = one("field.modulus");
    long p = detail::parse_long(ep.value, ep.line);
    long m = detail::parse_long(em.value, em.line);
    if (p < 2 || m < 1) throw Error(ErrorCode::Parse, "line " + std::to_string(ep.line) + ": p >= 2 and m >= 1 required");
    std::vector<std::uint32_t> modulus;
    for (auto& t : detail::split_ws(emod.value)) {
        long c = detail::parse_long(t, emod.line);
        if (c < 0) throw Error(ErrorCode::Parse, "line " + std::to_string(emod.line) + ": negative modulus coefficient");
        modulus.push_back(static_cast<std::uint32_t>(c));
    }
    Field field = GaloisField::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m), modulus);

    WorkbenchConfig cfg;
    auto& ev = one("presentation.variables");
    cfg.presentation.field = field;
    cfg.presentation.names = detail::split_ws(ev.value);
    const auto& names = cfg.presentation.names;
    if (names.empty()) throw Error(ErrorCode::Parse, "line " + std::to_string(ev.line) + ": no variables");
    std::vector<std::vector<long>> rows;
    if (!kv.count("presentation.weights")) throw Error(ErrorCode::Parse, "missing key presentation.weights");
    for (auto& e : kv["presentation.weights"]) {
        std::vector<long> row;
        for (auto& t : detail::split_ws(e.value)) row.push_back(detail::parse_long(t, e.line));
        if (row.size() != names.size())
            throw Error(ErrorCode::Parse, "line " + std::to_string(e.line) + ": weight row length differs from variable count");
        rows.push_back(row);
    }
    auto& eo = one("presentation.order");
    SemigroupOrder so;
    try {
        so = parse_semigroup_order(eo.value);
    } catch (const Error& e) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(eo.line) + ": " + e.what());
    }
    std::vector<std::size_t> priority;
    if (kv.count("presentation.tiebreak")) {
        auto& et = one("presentation.tiebreak");
        for (auto& t : detail::split_ws(et.value)) {
            auto it = std::find(names.begin(), names.end(), t);
            if (it == names.end()) throw Error(ErrorCode::Parse, "line " + std::to_string(et.line) + ": unknown variable " + t);
            priority.push_back(static_cast<std::size_t>(it - names.begin()));
        }
    }
    try {
        cfg.presentation.order = WeightOrder(rows, so, priority);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::DependentWeights) throw;
        throw Error(ErrorCode::Parse, std::string("presentation: ") + e.what());
    }
    if (kv.count("presentation.generator"))
        for (auto& e : kv["presentation.generator"]) {
            try {
                cfg.presentation.generators.push_back(parse_polynomial(e.value, field, names));
            } catch (const Error& err) {
                throw Error(ErrorCode::Parse, "line " + std::to_string(e.line) + ": " + err.what());
            }
        }

    bool has_ell = kv.count("code.ell"), has_top = kv.count("code.top");
    if (has_ell == has_top) throw Error(ErrorCode::Parse, "[code] needs exactly one of ell or top");
    if (has_ell) {
        auto& e = one("code.ell");
        long l = detail::parse_long(e.value, e.line);
        if (l < 1) throw Error(ErrorCode::Parse, "line " + std::to_string(e.line) + ": ell must be >= 1");
        cfg.ell = static_cast<std::size_t>(l);
    } else {
        auto& e = one("code.top");
        Polynomial top;
        try {
            top = parse_polynomial(e.value, field, names);
        } catch (const Error& err) {
            throw Error(ErrorCode::Parse, "line " + std::to_string(e.line) + ": " + err.what());
        }
        if (top.size() != 1) throw Error(ErrorCode::Parse, "line " + std::to_string(e.line) + ": top must be a monomial");
        cfg.ell = 0;
        // Resolved against Delta once the presentation is validated.
        OrderDomain dom(cfg.presentation);
        auto idx = dom.index_of_monomial(top.terms().begin()->first);
        if (!idx) throw Error(ErrorCode::Parse, "line " + std::to_string(e.line) + ": top is not a standard monomial");
        cfg.ell = *idx;
    }
    if (kv.count("code.seed")) {
        auto& e = one("code.seed");
        long s = detail::parse_long(e.value, e.line);
        if (s < 0) throw Error(ErrorCode::Parse, "line " + std::to_string(e.line) + ": seed must be nonnegative");
        cfg.seed = static_cast<std::uint64_t>(s);
    }
    return cfg;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
    out << text;
}

/// Whitespace-separated element codes; `#` starts a comment.
inline std::vector<Word> parse_words(const std::string& text, const Field& field, std::size_t n) {
    std::vector<Word> out;
    std::istringstream is(text);
    std::size_t lineno = 0;
    for (std::string raw; std::getline(is, raw);) {
        ++lineno;
        auto hash = raw.find('#');
        auto toks = detail::split_ws(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (toks.empty()) continue;
        Word w;
        for (auto& t : toks) {
            long c = detail::parse_long(t, lineno);
            if (c < 0 || c >= static_cast<long>(field->q()))
                throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": element code out of range");
            w.push_back(field->element(static_cast<std::uint32_t>(c)));
        }
        if (w.size() != n)
            throw Error(ErrorCode::LengthMismatch, "line " + std::to_string(lineno) + ": expected " + std::to_string(n) +
                                                       " codes, got " + std::to_string(w.size()));
        out.push_back(std::move(w));
    }
    return out;
}

inline Word parse_word(const std::string& text, const Field& field, std::size_t n) {
    auto ws = parse_words(text, field, n);
    if (ws.size() != 1) throw Error(ErrorCode::Parse, "expected exactly one vector, got " + std::to_string(ws.size()));
    return ws.front();
}

inline std::string format_word(const Word& w) {
    std::ostringstream os;
    for (std::size_t j = 0; j < w.size(); ++j) os << (j ? " " : "") << w[j].code();
    os << '\n';
    return os.str();
}

/// Lines `point_index:element_code`, 0-based indices.
inline ErrorVector parse_error_pattern(const std::string& text, const Field& field, std::size_t n) {
    ErrorVector e;
    std::istringstream is(text);
    std::size_t lineno = 0;
    for (std::string raw; std::getline(is, raw);) {
        ++lineno;
        auto hash = raw.find('#');
        std::string line = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected index:code");
        long j = detail::parse_long(detail::trim(line.substr(0, colon)), lineno);
        long c = detail::parse_long(detail::trim(line.substr(colon + 1)), lineno);
        if (j < 0 || static_cast<std::size_t>(j) >= n)
            throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": point index out of range");
        if (c <= 0 || c >= static_cast<long>(field->q()))
            throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": error value must be a nonzero code");
        if (!e.emplace(static_cast<std::size_t>(j), field->element(static_cast<std::uint32_t>(c))).second)
            throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": duplicate point index");
    }
    return e;
}

inline std::string format_error_pattern(const ErrorVector& e) {
    std::ostringstream os;
    for (auto& [j, v] : e) os << j << ':' << v.code() << '\n';
    return os.str();
}

}  // namespace ordercodes
