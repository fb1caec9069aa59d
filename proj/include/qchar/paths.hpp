/**
 * @file paths.hpp
 * @brief Right moves, right paths, generalized raising operators, left moves
 *        and left paths on weight diagrams.
 *
 * Every move of a path is computed on the diagram of the starting weight, never
 * on the result of an earlier move.
 */

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qchar/diagram.hpp"
#include "qchar/weight.hpp"

namespace qchar {

struct RightMove {
    int cross = 0;   // 1-based label
    int from = 0;    // x_i
    int target = 0;  // t
    int k() const { return target - from; }
};

/// Target of the right move of the i-th cross: the first empty vertex t > x_i
/// with ℓ(i, t) = 0.
inline RightMove right_move(const WeightDiagram& d, int i) {
    const auto x = d.cross_positions();
    if (i < 1 || i > static_cast<int>(x.size())) throw std::out_of_range("right_move: cross index");
    const int xi = x[static_cast<std::size_t>(i - 1)];
    // ℓ(i, t) only changes by ±1 per vertex, so the walk ends well before this.
    const int limit = d.watermark() + 2 * static_cast<int>(x.size()) + 4;
    int ell = (xi > 0) ? 0 : -2 * (d.zero_crosses - i) - (d.bot ? 1 : 0);
    // ell tracks ℓ(i, t) for the vertex t currently examined.
    for (int t = xi + 1; t <= limit; ++t) {
        const Symbol s = d.at(t);
        if (s == Symbol::Empty && ell == 0) return {i, xi, t};
        if (s == Symbol::Empty) ++ell;
        if (s == Symbol::Cross) --ell;
    }
    throw std::logic_error("right_move: no target found");
}

inline std::vector<RightMove> right_moves(const WeightDiagram& d) {
    std::vector<RightMove> out;
    for (int i = 1; i <= d.degree(); ++i) out.push_back(right_move(d, i));
    return out;
}

/// Moves the crosses with the given labels; destination 0 means vertex 0.
inline WeightDiagram relocate(const WeightDiagram& d, const std::vector<std::pair<int, int>>& moves) {
    const auto x = d.cross_positions();
    WeightDiagram out = d;
    for (const auto& [label, dest] : moves) {
        const int from = x[static_cast<std::size_t>(label - 1)];
        if (from == 0) {
            --out.zero_crosses;
        } else {
            out.symbols.erase(from);
        }
    }
    for (const auto& [label, dest] : moves) {
        if (dest == 0) {
            ++out.zero_crosses;
            continue;
        }
        if (out.at(dest) != Symbol::Empty) throw std::logic_error("relocate: destination collision");
        out.symbols[dest] = Symbol::Cross;
    }
    return out;
}

/// (k_1, ..., k_r) of a dominant weight.
inline std::vector<int> k_tuple_dominant(const Weight& lambda) {
    std::vector<int> k;
    for (const auto& m : right_moves(to_diagram(lambda))) k.push_back(m.k());
    return k;
}

/// (k_1, ..., k_r) of a regular weight, labelled by the roots of that weight.
inline std::vector<int> k_tuple(const Weight& mu) {
    const auto data = atypical_data(mu);
    const auto plus = dominant_conjugate(mu)->weight;
    const auto kp = k_tuple_dominant(plus);
    std::vector<int> k;
    for (int q : data.dominant_label) k.push_back(kp[static_cast<std::size_t>(q - 1)]);
    return k;
}

/// R_θ(λ) for θ ∈ {0,1}^r.
inline Weight right_path(const Weight& lambda, const std::vector<int>& theta) {
    const auto d = to_diagram(lambda);
    if (static_cast<int>(theta.size()) != d.degree()) throw std::invalid_argument("right_path: theta has wrong length");
    std::vector<std::pair<int, int>> moves;
    for (int i = 1; i <= d.degree(); ++i) {
        const int t = theta[static_cast<std::size_t>(i - 1)];
        if (t != 0 && t != 1) throw std::invalid_argument("right_path: theta must be 0/1");
        if (t) moves.emplace_back(i, right_move(d, i).target);
    }
    return from_diagram(relocate(d, moves), lambda.rank());
}

/// R̄_i(ν) = ν + k_i γ_i on a regular weight.
inline Weight raising_bar(const Weight& nu, int i) {
    const auto data = atypical_data(nu);
    if (i < 1 || i > data.degree()) throw std::out_of_range("raising_bar: root index");
    const int k = k_tuple(nu)[static_cast<std::size_t>(i - 1)];
    std::vector<int> e = nu.entries();
    const auto& g = data.roots[static_cast<std::size_t>(i - 1)];
    e[g.m] += k;
    e[g.n] -= k;
    return Weight(std::move(e));
}

/// R'_θ(μ) = (R̄_1^{θ_1} ⋯ R̄_r^{θ_r}(μ))⁺; R̄_r acts first.
inline Weight raising_prime(const Weight& mu, const std::vector<int>& theta) {
    if (static_cast<int>(theta.size()) != atypicality(mu)) throw std::invalid_argument("raising_prime: theta has wrong length");
    Weight nu = mu;
    for (int i = static_cast<int>(theta.size()); i >= 1; --i) {
        const int times = theta[static_cast<std::size_t>(i - 1)];
        if (times < 0) throw std::invalid_argument("raising_prime: negative exponent");
        for (int c = 0; c < times; ++c) nu = raising_bar(nu, i);
    }
    return dominant_conjugate(nu)->weight;
}

inline int level(const Weight& w) {
    int s = 0;
    for (int v : atypical_data(w).entries) s += v;
    return s;
}

/// Θ^λ_μ: every θ ∈ N^r with R'_θ(μ) = λ. R̄ raises the level by k ≥ 1, so
/// the search is bounded by level(λ) − level(μ).
inline std::vector<std::vector<int>> left_paths_to(const Weight& lambda, const Weight& mu) {
    std::vector<std::vector<int>> out;
    const int r = atypicality(mu);
    if (atypicality(lambda) != r || lambda.rank() != mu.rank()) return out;
    const int top = level(lambda);
    std::vector<int> theta(static_cast<std::size_t>(r), 0);
    std::function<void(const Weight&, int, int)> walk = [&](const Weight& nu, int i, int lev) {
        if (lev > top) return;
        if (i == 0) {
            if (dominant_conjugate(nu)->weight == lambda) out.push_back(theta);
            return;
        }
        walk(nu, i - 1, lev);
        Weight cur = nu;
        int cur_level = lev;
        int& t = theta[static_cast<std::size_t>(i - 1)];
        const int saved = t;
        while (true) {
            const int k = k_tuple(cur)[static_cast<std::size_t>(i - 1)];
            cur_level += k;
            if (cur_level > top) break;
            cur = raising_bar(cur, i);
            ++t;
            walk(cur, i - 1, cur_level);
        }
        t = saved;
    };
    walk(mu, r, level(mu));
    std::sort(out.begin(), out.end());
    return out;
}

struct LeftMove {
    int i = 0;  // 0 when the destination is vertex 0
    int j = 0;
    int from = 0;
    int target = 0;
    bool operator==(const LeftMove&) const = default;
};

/// All single left moves of the diagram.
inline std::vector<LeftMove> left_moves(const WeightDiagram& d) {
    const auto x = d.cross_positions();
    std::vector<LeftMove> out;
    for (int j = 1; j <= static_cast<int>(x.size()); ++j) {
        const int xj = x[static_cast<std::size_t>(j - 1)];
        if (xj == 0) continue;
        if (length(d, 0, xj) <= 0 && length(d, 0, xj) % 2 == 0) out.push_back({0, j, xj, 0});
        int between = 0;
        for (int s = xj - 1; s >= 1; --s) {
            const Symbol sym = d.at(s);
            if (sym == Symbol::Cross) ++between;
            if (sym == Symbol::Empty && distance(d, s, xj) == 0) out.push_back({j - between, j, xj, s});
        }
    }
    std::sort(out.begin(), out.end(), [](const LeftMove& a, const LeftMove& b) {
        return std::tie(a.j, a.i, a.target) < std::tie(b.j, b.i, b.target);
    });
    return out;
}

struct LeftPath {
    std::vector<LeftMove> moves;  // ordered by j
    Weight result;
};

inline std::string path_token(const LeftPath& p) {
    if (p.moves.empty()) return "Lempty";
    std::string s = "L";
    for (const auto& m : p.moves) s += "(" + std::to_string(m.i) + "," + std::to_string(m.j) + ")";
    return s;
}

inline std::string theta_token(const std::vector<int>& theta) {
    std::string s = "R[";
    for (std::size_t i = 0; i < theta.size(); ++i) s += (i ? "," : "") + std::to_string(theta[i]);
    return s + "]";
}

/// Θ^λ: every collection of left moves satisfying the non-crossing and
/// companion conditions, each with its result weight.
inline std::vector<LeftPath> left_paths(const Weight& lambda) {
    const auto d = to_diagram(lambda);
    const auto x = d.cross_positions();
    const int r = static_cast<int>(x.size());
    const auto moves = left_moves(d);
    std::vector<std::vector<LeftMove>> by_j(static_cast<std::size_t>(r + 1));
    for (const auto& m : moves) by_j[static_cast<std::size_t>(m.j)].push_back(m);

    std::vector<LeftPath> out;
    std::vector<LeftMove> chosen;
    std::set<int> moved;

    auto admissible = [&](const LeftMove& b) {
        for (const auto& a : chosen)
            if (b.i <= a.j && b.i > a.i) return false;
        const int xb = x[static_cast<std::size_t>(b.j - 1)];
        std::vector<std::pair<int, int>> earlier;
        for (const auto& a : chosen) earlier.emplace_back(a.j, a.target);
        const auto cur = relocate(d, earlier);
        for (int p = std::max(b.i, 1); p < b.j; ++p) {
            const int xp = x[static_cast<std::size_t>(p - 1)];
            if (xp > 0 && distance(cur, xp, xb) <= 0 && !moved.count(p)) return false;
        }
        if (b.target > 0)
            for (const auto& a : chosen)
                if (a.target == b.target) return false;
        return true;
    };

    std::function<void(int)> walk = [&](int j) {
        if (j > r) {
            std::vector<std::pair<int, int>> reloc;
            for (const auto& m : chosen) reloc.emplace_back(m.j, m.target);
            out.push_back({chosen, from_diagram(relocate(d, reloc), lambda.rank())});
            return;
        }
        walk(j + 1);
        for (const auto& m : by_j[static_cast<std::size_t>(j)]) {
            if (!admissible(m)) continue;
            chosen.push_back(m);
            moved.insert(j);
            walk(j + 1);
            moved.erase(j);
            chosen.pop_back();
        }
    };
    walk(1);
    return out;
}

/// Dominant weights whose diagram keeps the < and > symbols and ⊥ of λ and
/// places the same number of crosses no further right than the crosses of λ.
/// This set contains every μ with λ = R_θ(μ).
inline std::vector<Weight> right_path_candidates(const Weight& lambda) {
    const auto d = to_diagram(lambda);
    const auto x = d.cross_positions();
    const int r = static_cast<int>(x.size());
    const int top = x.empty() ? 0 : x.back();
    std::vector<int> free;
    for (int v = 1; v <= top; ++v)
        if (d.at(v) == Symbol::Empty || d.at(v) == Symbol::Cross) free.push_back(v);
    WeightDiagram base = d;
    base.zero_crosses = 0;
    for (auto it = base.symbols.begin(); it != base.symbols.end();)
        it = (it->second == Symbol::Cross) ? base.symbols.erase(it) : std::next(it);
    std::vector<Weight> out;
    std::vector<int> pick;
    std::function<void(std::size_t)> walk = [&](std::size_t from) {
        const int zero = r - static_cast<int>(pick.size());
        WeightDiagram cand = base;
        cand.zero_crosses = zero;
        for (int v : pick) cand.symbols[v] = Symbol::Cross;
        out.push_back(from_diagram(cand, lambda.rank()));
        if (static_cast<int>(pick.size()) == r) return;
        for (std::size_t k = from; k < free.size(); ++k) {
            pick.push_back(free[k]);
            walk(k + 1);
            pick.pop_back();
        }
    };
    walk(0);
    return out;
}

/// Every μ with λ = R_θ(μ) for some θ ∈ {0,1}^r, found by searching right paths.
inline std::set<Weight> right_path_sources(const Weight& lambda) {
    std::set<Weight> out;
    for (const auto& mu : right_path_candidates(lambda)) {
        const int r = atypicality(mu);
        std::vector<int> theta(static_cast<std::size_t>(r));
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            for (int i = 0; i < r; ++i) theta[static_cast<std::size_t>(i)] = (mask >> i) & 1;
            bool ok = true;
            Weight res;
            try {
                res = right_path(mu, theta);
            } catch (const std::logic_error&) {
                ok = false;
            }
            if (ok && res == lambda) {
                out.insert(mu);
                break;
            }
        }
    }
    return out;
}

}  // namespace qchar
