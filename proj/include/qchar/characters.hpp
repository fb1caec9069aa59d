/**
 * @file characters.hpp
 * @brief Schur P-functions, characters of Euler and simple modules, and
 *        dimensions.
 *
 * Three routes to ch L(λ) are provided:
 *  - Expansion: Σ_μ b_λμ ch E(μ) from the inverse multiplicity matrix.
 *  - Closed: the sum over σ ∈ S_r and lexical μ ∈ P^{⪯σ(λ)}.
 *  - Cone: the sum over the truncated cone with the coefficients b^λ_μ.
 */

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qchar/integer.hpp"
#include "qchar/laurent.hpp"
#include "qchar/multiplicity.hpp"
#include "qchar/paths.hpp"
#include "qchar/weight.hpp"

namespace qchar {

namespace detail {

inline int permutation_sign(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    return inv % 2 == 0 ? 1 : -1;
}

inline Laurent linear_pair(int n, int i, int j, int sign) {
    Exponent ei(static_cast<std::size_t>(n), 0), ej(static_cast<std::size_t>(n), 0);
    ei[static_cast<std::size_t>(i)] = 1;
    ej[static_cast<std::size_t>(j)] = 1;
    Laurent p = Laurent::monomial(ei);
    p.add_term(ej, sign);
    return p;
}

}  // namespace detail

/// #S_μ: the order of the stabilizer of μ in S_n.
inline Integer stabilizer_order(const Weight& mu) {
    std::map<int, int> mult;
    for (int v : mu.entries()) ++mult[v];
    Integer s = 1;
    for (const auto& [v, m] : mult) s *= factorial(m);
    return s;
}

/// P_μ straight from the symmetrization, with no shortcut for vanishing μ.
inline Laurent schur_p_symmetrize(const Weight& mu) {
    const int n = mu.rank();
    Laurent num = Laurent::monomial(mu.entries());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const bool both_zero = mu[i] == 0 && mu[j] == 0;
            num = num * detail::linear_pair(n, i, j, both_zero ? -1 : 1);
        }
    Laurent anti(n);
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    do {
        Laurent term = num.permuted(w);
        if (detail::permutation_sign(w) < 0) term *= Integer(-1);
        anti += term;
    } while (std::next_permutation(w.begin(), w.end()));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) anti = anti.divided_by_difference(i, j);
    return anti.divided_exactly(stabilizer_order(mu));
}

inline Laurent schur_p(const Weight& mu) {
    if (!is_regular(mu)) return Laurent(mu.rank());
    return schur_p_symmetrize(mu);
}

/// Sign ε with P_μ = ε P_{μ⁺}: parity of the inversions of μ among pairs that
/// are not both zero.
inline int schur_sign(const Weight& mu) {
    int inv = 0;
    for (int i = 0; i < mu.rank(); ++i)
        for (int j = i + 1; j < mu.rank(); ++j)
            if (!(mu[i] == 0 && mu[j] == 0) && mu[i] < mu[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

/// Memoizes P_μ through its dominant conjugate.
class SchurCache {
  public:
    const Laurent& dominant(const Weight& lambda) {
        auto it = cache_.find(lambda);
        if (it == cache_.end()) it = cache_.emplace(lambda, schur_p(lambda)).first;
        return it->second;
    }

    Laurent get(const Weight& mu) {
        auto conj = dominant_conjugate(mu);
        if (!conj) return Laurent(mu.rank());
        Laurent p = dominant(conj->weight);
        if (schur_sign(mu) < 0) p *= Integer(-1);
        return p;
    }

  private:
    std::map<Weight, Laurent> cache_;
};

inline int clifford_exponent(const Weight& mu) { return (stats(mu).h + 1) / 2; }

inline Laurent euler_character(const Weight& lambda, SchurCache* cache = nullptr) {
    if (!is_dominant(lambda)) throw std::invalid_argument("euler_character: weight is not dominant");
    SchurCache local;
    SchurCache& c = cache ? *cache : local;
    Laurent p = c.dominant(lambda);
    p *= pow2(clifford_exponent(lambda));
    return p;
}

/// ch L(λ) = Σ_μ b_λμ ch E(μ).
inline Laurent simple_character_expansion(const Weight& lambda, SchurCache* cache = nullptr) {
    if (!is_dominant(lambda)) throw std::invalid_argument("simple_character: weight is not dominant");
    SchurCache local;
    SchurCache& c = cache ? *cache : local;
    Laurent out(lambda.rank());
    for (const auto& mu : right_path_candidates(lambda)) {
        const Integer b = b_mult(lambda, mu);
        if (b == 0) continue;
        Laurent e = euler_character(mu, &c);
        e *= b;
        out += e;
    }
    return out;
}

namespace detail {

/// 2^{(z(μ)−z(λ))/2 + ⌊(h(μ)+1)/2⌋} with the sign (−1)^{|λ−μ|}.
inline Integer closed_weight_factor(const Weight& lambda, const Weight& mu) {
    const int gap = zero_count(mu) - zero_count(lambda);
    if (gap < 0 || gap % 2 != 0) throw std::logic_error("closed formula: zero count gap must be even and nonnegative");
    Integer f = pow2(gap / 2 + clifford_exponent(mu));
    int rel = 0;
    const auto ld = atypical_data(lambda, true);
    for (const auto& g : ld.roots) rel += lambda[g.m] - mu[g.m];
    if (rel % 2 != 0) f = -f;
    return f;
}

}  // namespace detail

/// Terms (coefficient, μ) of the closed formula; μ need not be dominant.
inline std::map<Weight, Integer> closed_formula_terms(const Weight& lambda) {
    std::map<Weight, Integer> terms;
    const auto c = c_hat_table(lambda);
    for (const auto& sigma : all_permutations(static_cast<int>(c.size()))) {
        if (!a_sigma(c, sigma)) continue;
        for (const auto& mu : p_leq(apply_sigma(lambda, sigma))) terms[mu] += detail::closed_weight_factor(lambda, mu);
    }
    return terms;
}

inline Laurent simple_character_closed(const Weight& lambda, SchurCache* cache = nullptr) {
    if (!is_dominant(lambda)) throw std::invalid_argument("simple_character: weight is not dominant");
    SchurCache local;
    SchurCache& c = cache ? *cache : local;
    Laurent out(lambda.rank());
    for (const auto& [mu, coef] : closed_formula_terms(lambda)) {
        if (coef == 0) continue;
        Laurent p = c.get(mu);
        p *= coef;
        out += p;
    }
    return out;
}

/// Terms (coefficient, μ) over the truncated cone.
inline std::map<Weight, Rational> cone_formula_terms(const Weight& lambda) {
    std::map<Weight, Rational> terms;
    for (const auto& mu : truncated_cone(lambda)) {
        const Rational b = b_coeff(lambda, mu);
        if (b == 0) continue;
        terms[mu] += Rational(detail::closed_weight_factor(lambda, mu)) * b;
    }
    return terms;
}

inline RationalLaurent simple_character_cone(const Weight& lambda, SchurCache* cache = nullptr) {
    if (!is_dominant(lambda)) throw std::invalid_argument("simple_character: weight is not dominant");
    SchurCache local;
    SchurCache& c = cache ? *cache : local;
    RationalLaurent out(lambda.rank());
    for (const auto& [mu, coef] : cone_formula_terms(lambda)) {
        RationalLaurent p = c.get(mu).cast<Rational>();
        p *= coef;
        out += p;
    }
    return out;
}

enum class CharRoute { Expansion, Closed, Cone };

/// Integer-valued ch L(λ) along the chosen route; the cone route throws if a
/// coefficient is not an integer.
inline Laurent simple_character(const Weight& lambda, CharRoute route = CharRoute::Expansion, SchurCache* cache = nullptr) {
    switch (route) {
        case CharRoute::Expansion: return simple_character_expansion(lambda, cache);
        case CharRoute::Closed: return simple_character_closed(lambda, cache);
        case CharRoute::Cone: {
            const auto q = simple_character_cone(lambda, cache);
            Laurent out(lambda.rank());
            for (const auto& [e, c] : q.terms()) {
                if (denominator(c) != 1) throw std::logic_error("simple_character: cone route gave a non-integer coefficient");
                out.add_term(e, numerator(c));
            }
            return out;
        }
    }
    throw std::invalid_argument("simple_character: unknown route");
}

// ---------------------------------------------------------------------------
// Dimensions

inline constexpr int kDimensionRankCap = 6;

/// Σ_{B ⊆ Φ⁺} (−1)^{|B ∩ Φ⁺(μ)|} Π_α (α, μ − Σ_B β + ρ) / (α, ρ), the value at
/// 1 of #S_μ · P_μ. Pairs of zero entries form Φ⁺(μ).
inline Rational weyl_subset_sum(const Weight& mu) {
    const int n = mu.rank();
    std::vector<std::pair<int, int>> roots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) roots.emplace_back(i, j);
    Integer denom = 1;
    for (const auto& [i, j] : roots) denom *= (j - i);
    Integer total = 0;
    const std::size_t R = roots.size();
    std::vector<int> nu(static_cast<std::size_t>(n));
    for (unsigned long long mask = 0; mask < (1ull << R); ++mask) {
        nu = mu.entries();
        int sign = 1;
        for (std::size_t k = 0; k < R; ++k) {
            if (!((mask >> k) & 1)) continue;
            const auto [i, j] = roots[k];
            --nu[static_cast<std::size_t>(i)];
            ++nu[static_cast<std::size_t>(j)];
            if (mu[i] == 0 && mu[j] == 0) sign = -sign;
        }
        Integer prod = 1;
        for (const auto& [i, j] : roots) {
            const int v = nu[static_cast<std::size_t>(i)] - nu[static_cast<std::size_t>(j)] + (j - i);
            if (v == 0) {
                prod = 0;
                break;
            }
            prod *= v;
        }
        total += sign * prod;
    }
    return Rational(total) / Rational(denom);
}

namespace detail {

inline Integer checked_dimension(const Rational& value) {
    if (denominator(value) != 1) throw std::logic_error("dimension: formula gave a non-integer value");
    if (value < 0) throw std::logic_error("dimension: formula gave a negative value");
    return numerator(value);
}

inline void check_rank_cap(const Weight& lambda) {
    if (lambda.rank() > kDimensionRankCap)
        throw std::out_of_range("dimension: rank exceeds the cap of " + std::to_string(kDimensionRankCap));
}

}  // namespace detail

/// dim L(λ) from the closed formula, as a rational before the integrality check.
inline Rational dimension_closed_value(const Weight& lambda) {
    detail::check_rank_cap(lambda);
    Rational total = 0;
    for (const auto& [mu, coef] : closed_formula_terms(lambda)) {
        if (coef == 0) continue;
        total += Rational(coef) * weyl_subset_sum(mu) / Rational(stabilizer_order(mu));
    }
    return total;
}

inline Integer dimension_closed(const Weight& lambda) { return detail::checked_dimension(dimension_closed_value(lambda)); }

/// dim L(λ) from the truncated cone formula.
inline Rational dimension_cone_value(const Weight& lambda) {
    detail::check_rank_cap(lambda);
    Rational total = 0;
    for (const auto& [mu, coef] : cone_formula_terms(lambda))
        total += coef * weyl_subset_sum(mu) / Rational(stabilizer_order(mu));
    return total;
}

/// dim L(λ) as the value at x = 1 of ch L(λ) from the expansion route.
inline Integer dimension_by_specialization(const Weight& lambda, SchurCache* cache = nullptr) {
    return simple_character_expansion(lambda, cache).coefficient_sum();
}

// ---------------------------------------------------------------------------
// Grothendieck identity

struct GrothendieckReport {
    bool ok = true;
    std::string mismatch;
};

/// ch E(λ) = Σ_{μ ∈ Θ^λ} a_λμ ch L(μ).
inline GrothendieckReport verify_grothendieck(const Weight& lambda, SchurCache* cache = nullptr) {
    SchurCache local;
    SchurCache& c = cache ? *cache : local;
    const Laurent lhs = euler_character(lambda, &c);
    Laurent rhs(lambda.rank());
    for (const auto& [mu, a] : composition_factors(lambda)) {
        Laurent l = simple_character_expansion(mu, &c);
        l *= a;
        rhs += l;
    }
    GrothendieckReport rep;
    if (lhs == rhs) return rep;
    rep.ok = false;
    const Laurent diff = lhs - rhs;
    const auto& [e, coef] = *diff.terms().begin();
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) mono += (i ? "," : "") + std::to_string(e[i]);
    rep.mismatch = "monomial (" + mono + "): ch E has " + lhs.coefficient(e).str() + ", sum has " + rhs.coefficient(e).str();
    return rep;
}

}  // namespace qchar
