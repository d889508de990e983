#pragma once

// Group catalog files and the torsion classification tables.
//
// Catalog format, one entry per line:
//   label level [[a,b,c,d],[a,b,c,d],...]
// Each tuple is a matrix written row by row; [[a,b],[c,d]] is accepted too.
// Blank lines and lines starting with '#' are ignored.

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "curve.hpp"
#include "group.hpp"
#include "named_groups.hpp"

namespace galtors {

class CatalogError : public std::invalid_argument {
public:
    CatalogError(std::size_t line, const std::string& msg)
        : std::invalid_argument("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct CatalogEntry {
    std::string label;
    int level = 0;
    std::vector<std::array<int, 4>> generators;  // as written, reduced mod level
    std::size_t line = 0;
};

/// Largest level a catalog entry may use.
inline constexpr int max_catalog_level = 64;

namespace detail {

inline std::vector<std::array<int, 4>> parse_generator_list(const std::string& text, std::size_t line) {
    // Tokenize into brackets, commas and integers.
    std::vector<std::array<int, 4>> out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c)
            throw CatalogError(line, std::string("expected '") + c + "' in generator list");
        ++i;
    };
    auto integer = [&] {
        skip();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        const std::string tok = text.substr(start, i - start);
        if (tok.empty() || tok == "-" || tok == "+" || tok.size() > 12)
            throw CatalogError(line, "bad matrix entry '" + tok + "'");
        return std::stoll(tok);
    };
    expect('[');
    skip();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        for (;;) {
            expect('[');
            std::array<long long, 4> m{};
            skip();
            if (i < text.size() && text[i] == '[') {
                // [[a,b],[c,d]]
                for (int r = 0; r < 2; ++r) {
                    if (r) expect(',');
                    expect('[');
                    m[static_cast<std::size_t>(2 * r)] = integer();
                    expect(',');
                    m[static_cast<std::size_t>(2 * r + 1)] = integer();
                    expect(']');
                }
            } else {
                for (int k = 0; k < 4; ++k) {
                    if (k) expect(',');
                    m[static_cast<std::size_t>(k)] = integer();
                }
            }
            expect(']');
            std::array<int, 4> small{};
            for (int k = 0; k < 4; ++k) {
                if (m[static_cast<std::size_t>(k)] > 1000000000LL || m[static_cast<std::size_t>(k)] < -1000000000LL)
                    throw CatalogError(line, "matrix entry out of range");
                small[static_cast<std::size_t>(k)] = static_cast<int>(m[static_cast<std::size_t>(k)]);
            }
            out.push_back(small);
            skip();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            expect(']');
            break;
        }
    }
    skip();
    if (i != text.size()) throw CatalogError(line, "trailing text after generator list");
    return out;
}

}  // namespace detail

/// Validated entries in file order. Rejects malformed lines, levels outside
/// [2, max_catalog_level], duplicate labels and non-invertible generators.
inline std::vector<CatalogEntry> parse_catalog(const std::string& text) {
    std::vector<CatalogEntry> out;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::size_t lineno = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const auto first = raw.find_first_not_of(" \t");
        if (first == std::string::npos || raw[first] == '#') continue;

        std::istringstream ls(raw);
        CatalogEntry e;
        e.line = lineno;
        std::string level_tok;
        if (!(ls >> e.label >> level_tok)) throw CatalogError(lineno, "expected: label level [[a,b,c,d],...]");
        for (char c : level_tok)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw CatalogError(lineno, "bad level '" + level_tok + "'");
        if (level_tok.size() > 4) throw CatalogError(lineno, "bad level '" + level_tok + "'");
        e.level = std::stoi(level_tok);
        if (e.level < 2 || e.level > max_catalog_level)
            throw CatalogError(lineno, "level must be in [2, " + std::to_string(max_catalog_level) + "]");
        std::string rest;
        std::getline(ls, rest);
        e.generators = detail::parse_generator_list(rest, lineno);
        if (e.generators.empty()) throw CatalogError(lineno, "entry has no generators");
        for (auto& g : e.generators) {
            const GMat m(g[0], g[1], g[2], g[3], e.level);
            if (!m.det().is_unit())
                throw CatalogError(lineno, "generator [" + std::to_string(g[0]) + "," + std::to_string(g[1]) + "," +
                                               std::to_string(g[2]) + "," + std::to_string(g[3]) +
                                               "] is not invertible mod " + std::to_string(e.level));
            g = {m.a(), m.b(), m.c(), m.d()};
        }
        if (!seen.insert(e.label).second) throw CatalogError(lineno, "duplicate label '" + e.label + "'");
        out.push_back(std::move(e));
    }
    return out;
}

inline std::string serialize_catalog(const std::vector<CatalogEntry>& entries) {
    std::string out;
    for (const auto& e : entries) {
        out += e.label + " " + std::to_string(e.level) + " [";
        for (std::size_t i = 0; i < e.generators.size(); ++i) {
            const auto& g = e.generators[i];
            out += (i ? ",[" : "[") + std::to_string(g[0]) + "," + std::to_string(g[1]) + "," + std::to_string(g[2]) +
                   "," + std::to_string(g[3]) + "]";
        }
        out += "]\n";
    }
    return out;
}

/// The group an entry generates. Row convention (the default) reads each
/// matrix as acting on row vectors and transposes it.
inline GenGroup catalog_group(const CatalogEntry& e, MatrixConvention convention = MatrixConvention::Row) {
    return group_from_spec({e.label, e.level, e.generators, convention});
}

/// Admissible torsion structures of E(K) for E over Q and [K : Q] = d.
inline const std::set<TorsionStructure>& torsion_table(int degree) {
    auto build = [](std::vector<long> cyclic, std::vector<std::pair<long, std::vector<long>>> products) {
        std::set<TorsionStructure> s;
        for (long m : cyclic) s.insert({1, m});
        for (const auto& [a, ms] : products)
            for (long m : ms) s.insert({a, a * m});
        return s;
    };
    static const std::map<int, std::set<TorsionStructure>> tables{
        {1, build({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12}, {{2, {1, 2, 3, 4}}})},
        {2, build({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16}, {{2, {1, 2, 3, 4, 5, 6}}, {3, {1, 2}}, {4, {1}}})},
        {3, build({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14, 18, 21}, {{2, {1, 2, 3, 4, 7}}})},
        {6, build({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14, 15, 16, 18, 21, 30},
                  {{2, {1, 2, 3, 4, 5, 6, 7, 9}}, {3, {1, 2, 3, 4}}, {4, {1, 3}}, {6, {1}}})},
    };
    auto it = tables.find(degree);
    if (it == tables.end()) throw std::invalid_argument("no torsion table for degree " + std::to_string(degree));
    return it->second;
}

inline std::vector<int> torsion_table_degrees() { return {1, 2, 3, 6}; }

inline bool is_admissible_torsion(const TorsionStructure& s, int degree) { return torsion_table(degree).count(s) > 0; }

}  // namespace galtors
