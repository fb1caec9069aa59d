/**
 * @file weight.hpp
 * @brief Integral weights of q(n): statistics, dominance, regularity and
 *        atypical roots.
 *
 * A weight is an integer vector (λ_1, ..., λ_n). It is dominant when the
 * entries weakly decrease and only zeros repeat, and regular when no nonzero
 * value occurs twice (equivalently, some coordinate permutation makes it
 * dominant). Regular weights carry a set of atypical roots ε_m - ε_n pairing
 * an entry with its negative; zero entries are paired in nested fashion
 * around the middle of the zero block.
 *
 * Positions are 0-based throughout the C++ API. Root labels p = 1..r follow
 * the numbering of crosses in the weight diagram: zero roots first (innermost
 * pair first), then nonzero roots by increasing |entry|.
 */

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qchar {

class Weight {
  public:
    Weight() = default;
    explicit Weight(std::vector<int> entries) : entries_(std::move(entries)) {}
    Weight(std::initializer_list<int> entries) : entries_(entries) {}

    int rank() const { return static_cast<int>(entries_.size()); }
    int operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const Weight&) const = default;
    // Storage order for containers only; see compare_lex() for the ordering
    // used by the multiplicity matrices.
    auto operator<=>(const Weight&) const = default;

  private:
    std::vector<int> entries_;
};

enum class ModuleType { M, Q };

struct WeightStats {
    int z = 0;     // number of zero entries
    int zbar = 0;  // z mod 2
    int h = 0;     // number of nonzero entries
    bool dominant = false;
    bool regular = false;
    ModuleType type = ModuleType::M;
};

inline bool is_dominant(const Weight& w) {
    for (int i = 0; i + 1 < w.rank(); ++i) {
        if (w[i] < w[i + 1]) return false;
        if (w[i] == w[i + 1] && w[i] != 0) return false;
    }
    return true;
}

inline bool is_regular(const Weight& w) {
    std::vector<int> nz;
    for (int v : w.entries())
        if (v != 0) nz.push_back(v);
    std::sort(nz.begin(), nz.end());
    return std::adjacent_find(nz.begin(), nz.end()) == nz.end();
}

inline int zero_count(const Weight& w) {
    return static_cast<int>(std::count(w.entries().begin(), w.entries().end(), 0));
}

inline WeightStats stats(const Weight& w) {
    WeightStats s;
    s.z = zero_count(w);
    s.zbar = s.z % 2;
    s.h = w.rank() - s.z;
    s.dominant = is_dominant(w);
    s.regular = is_regular(w);
    s.type = (s.h % 2 == 0) ? ModuleType::M : ModuleType::Q;
    return s;
}

/// Dominant conjugate w⁺ together with the sorting permutation:
/// weight[k] == original[source[k]].
struct DominantConjugate {
    Weight weight;
    std::vector<int> source;
};

/// Sorts a regular weight into dominant form. Returns std::nullopt for a
/// vanishing weight. Zeros keep their original relative order.
inline std::optional<DominantConjugate> dominant_conjugate(const Weight& w) {
    if (!is_regular(w)) return std::nullopt;
    std::vector<int> idx(static_cast<std::size_t>(w.rank()));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return w[a] > w[b]; });
    std::vector<int> sorted;
    sorted.reserve(idx.size());
    for (int i : idx) sorted.push_back(w[i]);
    return DominantConjugate{Weight(std::move(sorted)), std::move(idx)};
}

/// γ = ε_m - ε_n with entry[m] = -entry[n] >= 0 (0-based positions).
struct AtypicalRoot {
    int m = 0;
    int n = 0;
    bool operator==(const AtypicalRoot&) const = default;
};

struct AtypicalData {
    std::vector<AtypicalRoot> roots;  // roots[p-1] is γ_p
    std::vector<int> entries;         // entries[p-1] = λ_{m_p}, the p-th atypical entry
    std::vector<int> typical_tuple;   // λ with every root position deleted
    Weight frame;                     // λ with every root position set to 0
    std::vector<int> dominant_label;  // label of the same root in the dominant conjugate

    int degree() const { return static_cast<int>(roots.size()); }

    /// tt_λ = (λ_{m_r}, ..., λ_{m_1}).
    std::vector<int> atypical_tuple() const {
        return std::vector<int>(entries.rbegin(), entries.rend());
    }
};

namespace detail {

inline std::vector<AtypicalRoot> dominant_roots(const Weight& lambda) {
    const int n = lambda.rank();
    std::vector<AtypicalRoot> roots;
    // Zero block, innermost pair first.
    int first_zero = -1;
    int z = 0;
    for (int i = 0; i < n; ++i) {
        if (lambda[i] == 0) {
            if (first_zero < 0) first_zero = i;
            ++z;
        }
    }
    const int half = z / 2;
    for (int p = 1; p <= half; ++p)
        roots.push_back({first_zero + half - p, first_zero + z - 1 - (half - p)});
    // Positive entries from the right (smallest value first).
    for (int i = n - 1; i >= 0; --i) {
        if (lambda[i] <= 0) continue;
        for (int j = n - 1; j > i; --j) {
            if (lambda[j] == -lambda[i]) {
                roots.push_back({i, j});
                break;
            }
        }
    }
    return roots;
}

inline AtypicalData assemble(const Weight& w, std::vector<AtypicalRoot> roots) {
    AtypicalData data;
    std::vector<bool> used(static_cast<std::size_t>(w.rank()), false);
    std::vector<int> frame = w.entries();
    for (const auto& g : roots) {
        used[g.m] = used[g.n] = true;
        frame[g.m] = frame[g.n] = 0;
        data.entries.push_back(w[g.m]);
    }
    for (int i = 0; i < w.rank(); ++i)
        if (!used[i]) data.typical_tuple.push_back(w[i]);
    data.roots = std::move(roots);
    data.frame = Weight(std::move(frame));
    return data;
}

}  // namespace detail

/// Atypical roots of a regular weight. For non-dominant input the roots of
/// the dominant conjugate are pulled back along the sorting permutation and
/// relabelled by decreasing m, which reproduces the dominant labelling.
inline AtypicalData atypical_data(const Weight& w, bool require_dominant = false) {
    if (require_dominant && !is_dominant(w))
        throw std::invalid_argument("atypical_data: weight is not dominant");
    auto conj = dominant_conjugate(w);
    if (!conj) throw std::invalid_argument("atypical_data: vanishing weight");
    const auto plus_roots = detail::dominant_roots(conj->weight);
    std::vector<int> order(plus_roots.size());
    std::iota(order.begin(), order.end(), 0);
    auto pulled = [&](int q) { return AtypicalRoot{conj->source[plus_roots[q].m], conj->source[plus_roots[q].n]}; };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return pulled(a).m > pulled(b).m; });
    std::vector<AtypicalRoot> roots;
    for (int q : order) roots.push_back(pulled(q));
    auto data = detail::assemble(w, std::move(roots));
    for (int q : order) data.dominant_label.push_back(q + 1);
    return data;
}

inline int atypicality(const Weight& w) { return atypical_data(w).degree(); }

/// Total order on weights: a < b iff at the first differing coordinate p we
/// have b_p < a_p. Larger leading entries therefore come first.
inline std::strong_ordering compare_lex(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("compare_lex: rank mismatch");
    for (int p = 0; p < a.rank(); ++p)
        if (a[p] != b[p]) return b[p] <=> a[p];
    return std::strong_ordering::equal;
}

struct LexLess {
    bool operator()(const Weight& a, const Weight& b) const { return compare_lex(a, b) < 0; }
};

inline bool same_frame(const AtypicalData& a, const AtypicalData& b) {
    return a.frame == b.frame && a.roots == b.roots;
}

/// ν ⪯ μ: entrywise comparison of atypical tuples in a common frame.
inline bool partial_order_atypical(const Weight& nu, const Weight& mu) {
    auto a = atypical_data(nu);
    auto b = atypical_data(mu);
    if (!same_frame(a, b)) throw std::invalid_argument("partial_order_atypical: frames differ");
    for (std::size_t p = 0; p < a.entries.size(); ++p)
        if (a.entries[p] > b.entries[p]) return false;
    return true;
}

/// |μ - ν| = Σ_p (j_p - ℓ_p) for μ, ν in a common frame.
inline int relative_level(const Weight& mu, const Weight& nu) {
    auto a = atypical_data(mu);
    auto b = atypical_data(nu);
    if (!same_frame(a, b)) throw std::invalid_argument("relative_level: frames differ");
    int level = 0;
    for (std::size_t p = 0; p < a.entries.size(); ++p) level += a.entries[p] - b.entries[p];
    return level;
}

/// Builds λ̄ + Σ_p j_p γ_p.
inline Weight frame_weight(const Weight& frame, const std::vector<AtypicalRoot>& roots,
                           const std::vector<int>& j) {
    std::vector<int> e = frame.entries();
    for (std::size_t p = 0; p < roots.size(); ++p) {
        e[roots[p].m] = j[p];
        e[roots[p].n] = -j[p];
    }
    return Weight(std::move(e));
}

/// Every dominant weight of rank n with entries in [-bound, bound].
inline std::vector<Weight> dominant_weights(int n, int bound) {
    std::vector<Weight> out;
    std::vector<int> e;
    std::function<void(int)> walk = [&](int prev) {
        if (static_cast<int>(e.size()) == n) {
            out.emplace_back(e);
            return;
        }
        for (int v = std::min(prev, bound); v >= -bound; --v) {
            if (v == prev && v != 0) continue;
            e.push_back(v);
            walk(v);
            e.pop_back();
        }
    };
    walk(bound + 1);
    return out;
}

inline Weight parse_weight(std::string_view text) {
    std::vector<int> entries;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
        auto b = token.find_first_not_of(" \t");
        auto e = token.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("parse_weight: empty entry");
        token = token.substr(b, e - b + 1);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_weight: bad integer '" + token + "'");
        }
        if (used != token.size()) throw std::invalid_argument("parse_weight: bad integer '" + token + "'");
        entries.push_back(v);
    }
    if (entries.empty()) throw std::invalid_argument("parse_weight: no entries");
    return Weight(std::move(entries));
}

inline std::string to_string(const Weight& w) {
    std::string s;
    for (int i = 0; i < w.rank(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

}  // namespace qchar
