/**
 * @file multiplicity.hpp
 * @brief Composition multiplicities a_λμ, the inverse coefficients b_λμ, the
 *        c-relation between atypical roots, the permutation sets S^λ, cones
 *        and the coefficients b^λ_μ.
 */

#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qchar/diagram.hpp"
#include "qchar/integer.hpp"
#include "qchar/paths.hpp"
#include "qchar/weight.hpp"

namespace qchar {

// ---------------------------------------------------------------------------
// c-relation

/// d_st(λ) read off the weight diagram.
inline int c_distance_diagram(const Weight& lambda, int s, int t) {
    const auto d = to_diagram(lambda);
    const auto x = d.cross_positions();
    const int r = static_cast<int>(x.size());
    if (s < 1 || t > r || s > t) throw std::out_of_range("c_distance: need 1 <= s <= t <= r");
    const int xs = x[static_cast<std::size_t>(s - 1)];
    const int xt = x[static_cast<std::size_t>(t - 1)];
    if (xs == 0 && xt == 0) return 0;
    return length(d, s, xt);
}

/// d_st(λ) from root positions and entries.
inline int c_distance_closed(const Weight& lambda, int s, int p) {
    const auto data = atypical_data(lambda, true);
    const int r = data.degree();
    if (s < 1 || p > r || s > p) throw std::out_of_range("c_distance: need 1 <= s <= p <= r");
    const auto st = stats(lambda);
    const auto& gs = data.roots[static_cast<std::size_t>(s - 1)];
    const auto& gp = data.roots[static_cast<std::size_t>(p - 1)];
    const int ds = (s <= st.z / 2) ? st.zbar : 0;
    return lambda[gp.m] - lambda[gs.m] + gp.m - gs.m + gs.n - gp.n + 1 - ds;
}

enum class CRoute { Diagram, Closed };

using CTable = std::vector<std::vector<int>>;  // [s-1][t-1], entries below the diagonal are 0

inline CTable c_hat_table(const Weight& lambda, CRoute route = CRoute::Diagram) {
    const int r = atypical_data(lambda, true).degree();
    CTable c(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
    for (int s = 1; s <= r; ++s) {
        c[s - 1][s - 1] = 1;
        for (int t = s + 1; t <= r; ++t) {
            const int dst = route == CRoute::Diagram ? c_distance_diagram(lambda, s, t) : c_distance_closed(lambda, s, t);
            if (dst > 0) break;
            c[s - 1][t - 1] = 1;
        }
    }
    return c;
}

inline int c_hat(const Weight& lambda, int s, int t, CRoute route = CRoute::Diagram) {
    const auto c = c_hat_table(lambda, route);
    const int r = static_cast<int>(c.size());
    if (s < 1 || t > r || s > t) throw std::out_of_range("c_hat: need 1 <= s <= t <= r");
    return c[s - 1][t - 1];
}

// ---------------------------------------------------------------------------
// Multiplicities

inline Integer power_of_two_zero_gap(const Weight& lambda, const Weight& mu) {
    const int gap = zero_count(mu) - zero_count(lambda);
    if (gap < 0 || gap % 2 != 0) throw std::logic_error("zero count gap must be even and nonnegative");
    return pow2(gap / 2);
}

/// a_λμ by searching right paths from μ.
inline Integer a_mult_right(const Weight& lambda, const Weight& mu) {
    if (lambda.rank() != mu.rank()) throw std::invalid_argument("a_mult: rank mismatch");
    const int r = atypicality(mu);
    std::vector<int> theta(static_cast<std::size_t>(r));
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        for (int i = 0; i < r; ++i) theta[static_cast<std::size_t>(i)] = (mask >> i) & 1;
        Weight res;
        try {
            res = right_path(mu, theta);
        } catch (const std::logic_error&) {
            continue;
        }
        if (res == lambda) return power_of_two_zero_gap(lambda, mu);
    }
    return 0;
}

/// a_λμ by membership among the left paths of λ.
inline Integer a_mult_left(const Weight& lambda, const Weight& mu) {
    if (lambda.rank() != mu.rank()) throw std::invalid_argument("a_mult: rank mismatch");
    for (const auto& p : left_paths(lambda))
        if (p.result == mu) return power_of_two_zero_gap(lambda, mu);
    return 0;
}

inline Integer b_mult(const Weight& lambda, const Weight& mu) {
    if (lambda.rank() != mu.rank()) throw std::invalid_argument("b_mult: rank mismatch");
    const auto thetas = left_paths_to(lambda, mu);
    if (thetas.empty()) return 0;
    Integer sum = 0;
    for (const auto& th : thetas) sum += (std::accumulate(th.begin(), th.end(), 0) % 2 == 0) ? 1 : -1;
    return sum * power_of_two_zero_gap(lambda, mu);
}

/// Composition factors of E(λ) with their multiplicities.
inline std::vector<std::pair<Weight, Integer>> composition_factors(const Weight& lambda) {
    std::vector<std::pair<Weight, Integer>> out;
    for (const auto& p : left_paths(lambda)) out.emplace_back(p.result, power_of_two_zero_gap(lambda, p.result));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return compare_lex(a.first, b.first) < 0; });
    return out;
}

// ---------------------------------------------------------------------------
// Inversion blocks

using IntMatrix = std::vector<std::vector<Integer>>;

struct MultiplicityBlock {
    std::vector<Weight> index;  // sorted by compare_lex
    IntMatrix A;
    IntMatrix B;
    bool ok = true;
    std::string failure;
};

/// Closure of {seed} under taking left-path results, sorted by compare_lex.
/// Weights whose level drops more than level_cap below the seed are dropped.
inline std::vector<Weight> left_path_closure(const Weight& seed, int level_cap = -1) {
    std::set<Weight> seen{seed};
    std::queue<Weight> todo;
    todo.push(seed);
    const int top = level(seed);
    while (!todo.empty()) {
        const Weight w = todo.front();
        todo.pop();
        for (const auto& p : left_paths(w)) {
            if (level_cap >= 0 && top - level(p.result) > level_cap) continue;
            if (seen.insert(p.result).second) todo.push(p.result);
        }
    }
    std::vector<Weight> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

inline MultiplicityBlock verify_inversion(const Weight& seed, int level_cap = -1) {
    MultiplicityBlock blk;
    blk.index = left_path_closure(seed, level_cap);
    const std::size_t N = blk.index.size();
    blk.A.assign(N, std::vector<Integer>(N, 0));
    blk.B.assign(N, std::vector<Integer>(N, 0));
    auto fail = [&](const std::string& why, std::size_t i, std::size_t j) {
        if (!blk.ok) return;
        blk.ok = false;
        blk.failure = why + " at (" + to_string(blk.index[i]) + " ; " + to_string(blk.index[j]) + ")";
    };
    for (std::size_t i = 0; i < N; ++i) {
        std::map<Weight, Integer> row;
        for (const auto& p : left_paths(blk.index[i])) row[p.result] = power_of_two_zero_gap(blk.index[i], p.result);
        for (std::size_t j = 0; j < N; ++j) {
            auto it = row.find(blk.index[j]);
            if (it != row.end()) blk.A[i][j] = it->second;
            blk.B[i][j] = b_mult(blk.index[i], blk.index[j]);
        }
    }
    for (std::size_t i = 0; i < N; ++i) {
        if (blk.A[i][i] != 1) fail("A diagonal entry is not 1", i, i);
        if (blk.B[i][i] != 1) fail("B diagonal entry is not 1", i, i);
        for (std::size_t j = 0; j < i; ++j) {
            if (blk.A[i][j] != 0) fail("A is not upper triangular", i, j);
            if (blk.B[i][j] != 0) fail("B is not upper triangular", i, j);
        }
    }
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            Integer ab = 0, ba = 0;
            for (std::size_t k = 0; k < N; ++k) {
                ab += blk.A[i][k] * blk.B[k][j];
                ba += blk.B[i][k] * blk.A[k][j];
            }
            const Integer want = (i == j) ? 1 : 0;
            if (ab != want) fail("A*B differs from the identity", i, j);
            if (ba != want) fail("B*A differs from the identity", i, j);
        }
    return blk;
}

inline nlohmann::json to_json(const MultiplicityBlock& blk) {
    auto mat = [](const IntMatrix& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : m) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& v : row) r.push_back(v.str());
            rows.push_back(r);
        }
        return rows;
    };
    nlohmann::json idx = nlohmann::json::array();
    for (const auto& w : blk.index) idx.push_back(w.entries());
    nlohmann::json j = {{"weights", idx}, {"A", mat(blk.A)}, {"B", mat(blk.B)}, {"ok", blk.ok}};
    if (!blk.ok) j["failure"] = blk.failure;
    return j;
}

// ---------------------------------------------------------------------------
// Permutations

/// σ as a vector: sigma[p-1] = σ(p).
using Permutation = std::vector<int>;

inline std::vector<Permutation> all_permutations(int r) {
    Permutation s(static_cast<std::size_t>(r));
    std::iota(s.begin(), s.end(), 1);
    std::vector<Permutation> out;
    do out.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    return out;
}

inline Permutation inverse(const Permutation& sigma) {
    Permutation inv(sigma.size());
    for (std::size_t p = 0; p < sigma.size(); ++p) inv[static_cast<std::size_t>(sigma[p] - 1)] = static_cast<int>(p) + 1;
    return inv;
}

inline int a_sigma(const CTable& c, const Permutation& sigma) {
    const auto inv = inverse(sigma);
    const int r = static_cast<int>(sigma.size());
    for (int s = 1; s <= r; ++s)
        for (int t = s + 1; t <= r; ++t)
            if (c[s - 1][t - 1] && inv[s - 1] > inv[t - 1]) return 0;
    return 1;
}

inline int a_sigma(const Weight& lambda, const Permutation& sigma) { return a_sigma(c_hat_table(lambda), sigma); }

/// S^λ: permutations keeping every strongly c-related pair in order.
inline std::vector<Permutation> s_lambda(const Weight& lambda) {
    const auto c = c_hat_table(lambda);
    std::vector<Permutation> out;
    for (const auto& s : all_permutations(static_cast<int>(c.size())))
        if (a_sigma(c, s)) out.push_back(s);
    return out;
}

/// σ(μ): the p-th atypical entry of σ(μ) is the σ⁻¹(p)-th atypical entry of μ.
inline Weight apply_sigma(const Weight& mu, const Permutation& sigma) {
    const auto data = atypical_data(mu);
    const auto inv = inverse(sigma);
    std::vector<int> j(static_cast<std::size_t>(data.degree()));
    for (std::size_t p = 0; p < j.size(); ++p) j[p] = data.entries[static_cast<std::size_t>(inv[p] - 1)];
    return frame_weight(data.frame, data.roots, j);
}

// ---------------------------------------------------------------------------
// Cones

inline std::vector<Weight> normal_cone(const Weight& lambda) {
    const auto data = atypical_data(lambda, true);
    const int r = data.degree();
    std::vector<Weight> out;
    std::vector<int> j(static_cast<std::size_t>(r), 0);
    std::function<void(int)> walk = [&](int p) {
        if (p == r) {
            out.push_back(frame_weight(data.frame, data.roots, j));
            return;
        }
        for (int v = 0; v <= data.entries[static_cast<std::size_t>(p)]; ++v) {
            j[static_cast<std::size_t>(p)] = v;
            walk(p + 1);
        }
    };
    walk(0);
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

inline std::vector<Weight> truncated_cone(const Weight& lambda) {
    const auto data = atypical_data(lambda, true);
    const auto c = c_hat_table(lambda);
    const int r = data.degree();
    std::vector<Weight> out;
    for (const auto& mu : normal_cone(lambda)) {
        bool keep = true;
        for (int s = 0; s < r && keep; ++s)
            for (int t = s + 1; t < r && keep; ++t)
                if (c[s][t] && mu[data.roots[s].m] > mu[data.roots[t].m]) keep = false;
        if (keep) out.push_back(mu);
    }
    return out;
}

/// P^{⪯μ}: lexical weights in the frame of μ with 0 ≤ j_1 ≤ ... ≤ j_r and
/// j_p ≤ min(μ's atypical entries p..r).
inline std::vector<Weight> p_leq(const Weight& mu) {
    const auto data = atypical_data(mu);
    const int r = data.degree();
    std::vector<int> cap(static_cast<std::size_t>(r));
    int run = std::numeric_limits<int>::max();
    for (int p = r - 1; p >= 0; --p) cap[static_cast<std::size_t>(p)] = run = std::min(run, data.entries[static_cast<std::size_t>(p)]);
    std::vector<Weight> out;
    std::vector<int> j(static_cast<std::size_t>(r), 0);
    std::function<void(int, int)> walk = [&](int p, int lo) {
        if (p == r) {
            out.push_back(frame_weight(data.frame, data.roots, j));
            return;
        }
        for (int v = lo; v <= cap[static_cast<std::size_t>(p)]; ++v) {
            j[static_cast<std::size_t>(p)] = v;
            walk(p + 1, v);
        }
    };
    walk(0, 0);
    return out;
}

// ---------------------------------------------------------------------------
// The coefficients b^λ_μ

/// b^Λ_0 by the closed counting formula, for Λ in reduced form.
inline Rational b_zero_closed_form(const Weight& Lambda) {
    const auto data = atypical_data(Lambda, true);
    const int r = data.degree();
    const int zbar = stats(Lambda).zbar;
    const auto c = c_hat_table(Lambda);
    const auto S = s_lambda(Lambda);
    Rational value(static_cast<long long>(S.size()));
    value /= Rational(factorial(r + zbar));
    for (int p = 1; p <= r; ++p) {
        const int root = r - p + 1;
        int s = 0;
        for (int q = 1; q < p; ++q) {
            const int other = r - q + 1;
            s += c[std::min(root, other) - 1][std::max(root, other) - 1];
        }
        const int i = data.entries[static_cast<std::size_t>(root - 1)] + s;
        const int k = r - p + 1;
        const int d = std::min((i + 1 - zbar) >= 0 ? (i + 1 - zbar) / 2 : -((zbar - i) / 2), k);
        value *= d;
    }
    return value;
}

/// b^λ_μ for μ ∈ TC(λ) by the reduction recursion and the closed formula.
inline Rational b_coeff(const Weight& lambda, const Weight& mu) {
    const auto tc = truncated_cone(lambda);
    if (std::find(tc.begin(), tc.end(), mu) == tc.end()) throw std::invalid_argument("b_coeff: weight not in the truncated cone");
    if (!is_regular(mu)) return 0;
    std::vector<int> L = reduce(lambda).entries();
    std::vector<int> m;
    {
        // Atypical entries are vertex numbers; deleting the < and > vertices
        // shifts them down. Root labels of λ and λ_red agree.
        const auto ld = atypical_data(lambda, true);
        const auto diag = to_diagram(lambda);
        const auto rd = atypical_data(reduce(lambda), true);
        std::vector<int> j(static_cast<std::size_t>(ld.degree()));
        for (std::size_t p = 0; p < j.size(); ++p) {
            const int v = mu[ld.roots[p].m];
            int shift = 0;
            for (const auto& [u, sym] : diag.symbols)
                if (u < v && sym != Symbol::Cross) ++shift;
            j[p] = v - shift;
        }
        m = frame_weight(rd.frame, rd.roots, j).entries();
    }
    while (true) {
        const int n = static_cast<int>(m.size());
        int i = -1;
        for (int q = 0; q < n; ++q)
            if (m[static_cast<std::size_t>(q)] > 0) i = q;
        if (i < 0) break;
        const int partner = n - 1 - i;
        std::vector<int> L2, m2;
        for (int q = 0; q < n; ++q) {
            if (q == i || q == partner) continue;
            int v = L[static_cast<std::size_t>(q)];
            if (q < i) v -= 2;
            if (q > n - 1 - i) v += 2;
            L2.push_back(v);
            m2.push_back(m[static_cast<std::size_t>(q)]);
        }
        L = std::move(L2);
        m = std::move(m2);
    }
    const Weight Lw(L);
    if (!is_dominant(Lw) || !is_regular(Lw)) return 0;
    return b_zero_closed_form(Lw);
}

}  // namespace qchar
