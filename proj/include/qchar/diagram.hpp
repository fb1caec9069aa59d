/**
 * @file diagram.hpp
 * @brief Weight diagrams of integral dominant weights.
 *
 * Vertex 0 holds ⌊z/2⌋ crosses and, when z is odd, a ⊥ on top. Every vertex
 * v > 0 holds one of ∅, <, >, × according to whether v occurs among the
 * positive entries, the negated negative entries, or both. Crosses are
 * numbered 1..r bottom to top at vertex 0 and then left to right.
 */

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "qchar/weight.hpp"

namespace qchar {

enum class Symbol : char { Empty = '.', Less = '<', Greater = '>', Cross = 'x' };

class WeightDiagram {
  public:
    int zero_crosses = 0;
    bool bot = false;
    std::map<int, Symbol> symbols;  // vertices >= 1, never Empty

    Symbol at(int v) const {
        auto it = symbols.find(v);
        return it == symbols.end() ? Symbol::Empty : it->second;
    }

    /// x_1 <= ... <= x_r.
    std::vector<int> cross_positions() const {
        std::vector<int> x(static_cast<std::size_t>(zero_crosses), 0);
        for (const auto& [v, s] : symbols)
            if (s == Symbol::Cross) x.push_back(v);
        return x;
    }

    int degree() const {
        int r = zero_crosses;
        for (const auto& [v, s] : symbols) r += (s == Symbol::Cross);
        return r;
    }

    /// Every vertex beyond this one is empty.
    int watermark() const { return symbols.empty() ? 0 : symbols.rbegin()->first; }

    bool operator==(const WeightDiagram&) const = default;
};

inline WeightDiagram to_diagram(const Weight& lambda) {
    if (!is_dominant(lambda)) throw std::invalid_argument("to_diagram: weight is not dominant");
    WeightDiagram d;
    const int z = zero_count(lambda);
    d.zero_crosses = z / 2;
    d.bot = (z % 2) == 1;
    for (int v : lambda.entries()) {
        if (v > 0) d.symbols[v] = Symbol::Greater;
    }
    for (int v : lambda.entries()) {
        if (v >= 0) continue;
        auto it = d.symbols.find(-v);
        if (it == d.symbols.end())
            d.symbols[-v] = Symbol::Less;
        else
            it->second = Symbol::Cross;
    }
    return d;
}

/// Decodes a diagram, padding with zeros up to length n.
inline Weight from_diagram(const WeightDiagram& d, int n) {
    std::vector<int> pos, neg;
    for (const auto& [v, s] : d.symbols) {
        if (v <= 0) throw std::invalid_argument("from_diagram: symbol at non-positive vertex");
        if (s == Symbol::Cross || s == Symbol::Greater) pos.push_back(v);
        if (s == Symbol::Cross || s == Symbol::Less) neg.push_back(-v);
    }
    const int needed = static_cast<int>(pos.size() + neg.size()) + 2 * d.zero_crosses + (d.bot ? 1 : 0);
    if (needed > n) throw std::invalid_argument("from_diagram: rank too small for diagram");
    std::vector<int> e(pos.rbegin(), pos.rend());
    e.resize(e.size() + static_cast<std::size_t>(n - static_cast<int>(pos.size() + neg.size())), 0);
    std::sort(neg.begin(), neg.end(), std::greater<>());
    e.insert(e.end(), neg.begin(), neg.end());
    return Weight(std::move(e));
}

/// d(s, t): number of ∅ minus number of × strictly between s and t.
inline int distance(const WeightDiagram& d, int s, int t) {
    if (s > t) throw std::invalid_argument("distance: s > t");
    if (t - s <= 1) return 0;
    int occupied = 0, crosses = 0;
    for (auto it = d.symbols.upper_bound(s); it != d.symbols.end() && it->first < t; ++it) {
        ++occupied;
        crosses += (it->second == Symbol::Cross);
    }
    const int empties = (t - s - 1) - occupied;
    return empties - crosses;
}

/// ℓ(i, t) from the i-th cross (i = 0 is the imaginary cross below vertex 0)
/// to a vertex t > 0.
inline int length(const WeightDiagram& d, int i, int t) {
    const auto x = d.cross_positions();
    if (i < 0 || i > static_cast<int>(x.size())) throw std::out_of_range("length: cross index");
    if (t < 1) throw std::out_of_range("length: target vertex must be positive");
    const int xi = (i == 0) ? 0 : x[static_cast<std::size_t>(i - 1)];
    if (xi > 0) return distance(d, xi, t);
    return distance(d, 0, t) - 2 * (d.zero_crosses - i) - (d.bot ? 1 : 0);
}

/// Deletes every < and > vertex and relabels; the result has length 2r + z̄.
inline Weight reduce(const Weight& lambda) {
    const auto d = to_diagram(lambda);
    WeightDiagram red;
    red.zero_crosses = d.zero_crosses;
    red.bot = d.bot;
    int removed = 0;
    for (const auto& [v, s] : d.symbols) {
        if (s == Symbol::Cross)
            red.symbols[v - removed] = Symbol::Cross;
        else
            ++removed;
    }
    return from_diagram(red, 2 * red.degree() + (red.bot ? 1 : 0));
}

namespace detail {

inline std::string pad_cell(const std::string& text, std::size_t display_width, std::size_t width) {
    std::string out(width > display_width ? width - display_width : 0, ' ');
    return out + text;
}

}  // namespace detail

/// Plain-text rendering: a row of vertex numbers with the symbols stacked
/// above them. Crosses carry their label, vertex 0 stacks its crosses bottom
/// to top under the ⊥.
inline std::string render(const WeightDiagram& d, int min_vertices = 0) {
    const int last = std::max({d.watermark(), min_vertices, 1});
    const std::size_t width = std::max<std::size_t>(4, std::to_string(last).size() + 2);
    std::map<int, int> label;
    {
        int k = d.zero_crosses;
        for (const auto& [v, s] : d.symbols)
            if (s == Symbol::Cross) label[v] = ++k;
    }
    const int stack = d.zero_crosses + (d.bot ? 1 : 0);
    const int rows = std::max(stack, 1);
    std::string out;
    for (int row = rows - 1; row >= 0; --row) {
        std::string line;
        // Column 0: row 0 is the bottom cross.
        if (row < d.zero_crosses) {
            std::string cell = std::to_string(row + 1) + "×";
            line += detail::pad_cell(cell, cell.size() - 1, width);
        } else if (d.bot && row == d.zero_crosses) {
            line += detail::pad_cell("⊥", 1, width);
        } else {
            line += std::string(width, ' ');
        }
        if (row == 0) {
            for (int v = 1; v <= last; ++v) {
                switch (d.at(v)) {
                    case Symbol::Cross: {
                        std::string cell = std::to_string(label[v]) + "×";
                        line += detail::pad_cell(cell, cell.size() - 1, width);
                        break;
                    }
                    case Symbol::Less: line += detail::pad_cell("<", 1, width); break;
                    case Symbol::Greater: line += detail::pad_cell(">", 1, width); break;
                    case Symbol::Empty: line += std::string(width, ' '); break;
                }
            }
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    std::string numbers;
    for (int v = 0; v <= last; ++v) numbers += detail::pad_cell(std::to_string(v), std::to_string(v).size(), width);
    out += numbers + "\n";
    return out;
}

inline nlohmann::json to_json(const WeightDiagram& d) {
    nlohmann::json symbols = nlohmann::json::array();
    for (const auto& [v, s] : d.symbols) symbols.push_back({v, std::string(1, static_cast<char>(s))});
    return {{"zeroCross", d.zero_crosses}, {"bot", d.bot ? 1 : 0}, {"symbols", symbols}};
}

inline WeightDiagram diagram_from_json(const nlohmann::json& j) {
    WeightDiagram d;
    d.zero_crosses = j.at("zeroCross").get<int>();
    d.bot = j.at("bot").get<int>() != 0;
    for (const auto& entry : j.at("symbols")) {
        const int v = entry.at(0).get<int>();
        const auto s = entry.at(1).get<std::string>();
        if (s == "x")
            d.symbols[v] = Symbol::Cross;
        else if (s == "<")
            d.symbols[v] = Symbol::Less;
        else if (s == ">")
            d.symbols[v] = Symbol::Greater;
        else
            throw std::invalid_argument("diagram_from_json: unknown symbol '" + s + "'");
    }
    return d;
}

}  // namespace qchar
