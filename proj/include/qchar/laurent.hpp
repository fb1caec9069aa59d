/**
 * @file laurent.hpp
 * @brief Exact multivariate Laurent polynomials in x_1, ..., x_n.
 *
 * Terms are kept in decreasing lexicographic order of exponent vectors, which
 * lists e^λ before e^μ whenever λ precedes μ in the weight order.
 */

#pragma once

#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qchar/integer.hpp"

namespace qchar {

using Exponent = std::vector<int>;

template <class Coef>
class BasicLaurent {
  public:
    using TermMap = std::map<Exponent, Coef, std::greater<Exponent>>;

    BasicLaurent() = default;
    explicit BasicLaurent(int n) : n_(n) {}

    static BasicLaurent monomial(const Exponent& e, Coef c = 1) {
        BasicLaurent p(static_cast<int>(e.size()));
        p.add_term(e, std::move(c));
        return p;
    }

    static BasicLaurent constant(int n, Coef c) { return monomial(Exponent(static_cast<std::size_t>(n), 0), std::move(c)); }

    int nvars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Coef coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coef(0) : it->second;
    }

    void add_term(const Exponent& e, const Coef& c) {
        if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("Laurent: exponent length mismatch");
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BasicLaurent& operator+=(const BasicLaurent& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    BasicLaurent& operator-=(const BasicLaurent& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    BasicLaurent& operator*=(const Coef& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend BasicLaurent operator+(BasicLaurent a, const BasicLaurent& b) { return a += b; }
    friend BasicLaurent operator-(BasicLaurent a, const BasicLaurent& b) { return a -= b; }
    friend BasicLaurent operator*(BasicLaurent a, const Coef& s) { return a *= s; }

    friend BasicLaurent operator*(const BasicLaurent& a, const BasicLaurent& b) {
        a.check(b);
        BasicLaurent out(a.n_);
        Exponent e(static_cast<std::size_t>(a.n_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    bool operator==(const BasicLaurent& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    /// Substitutes x_i -> x_{perm[i]}.
    BasicLaurent permuted(const std::vector<int>& perm) const {
        BasicLaurent out(n_);
        Exponent f(static_cast<std::size_t>(n_));
        for (const auto& [e, c] : terms_) {
            for (int i = 0; i < n_; ++i) f[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = e[i];
            out.add_term(f, c);
        }
        return out;
    }

    /// Exact quotient by (x_a - x_b); throws when the remainder is nonzero.
    BasicLaurent divided_by_difference(int a, int b) const {
        if (terms_.empty()) return *this;
        std::map<int, TermMap, std::greater<int>> buckets;
        for (const auto& [e, c] : terms_) buckets[e[a]].emplace(e, c);
        const int low = buckets.rbegin()->first;
        BasicLaurent q(n_);
        while (!buckets.empty()) {
            auto top = buckets.begin();
            const int ea = top->first;
            TermMap bucket = std::move(top->second);
            buckets.erase(top);
            if (bucket.empty()) continue;
            if (ea == low) throw std::logic_error("Laurent: division by (x_a - x_b) leaves a remainder");
            for (auto& [e, c] : bucket) {
                Exponent qe = e;
                --qe[a];
                q.add_term(qe, c);
                Exponent carry = qe;
                ++carry[b];
                auto& next = buckets[ea - 1];
                auto [it, fresh] = next.try_emplace(carry, c);
                if (!fresh) {
                    it->second += c;
                    if (it->second == 0) next.erase(it);
                }
            }
        }
        return q;
    }

    BasicLaurent divided_exactly(const Coef& d) const {
        BasicLaurent out(n_);
        for (const auto& [e, c] : terms_) {
            Coef v = c / d;
            if (v * d != c) throw std::logic_error("Laurent: inexact scalar division");
            out.terms_.emplace(e, v);
        }
        return out;
    }

    /// Value at x_1 = ... = x_n = 1.
    Coef coefficient_sum() const {
        Coef s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    template <class Other>
    BasicLaurent<Other> cast() const {
        BasicLaurent<Other> out(n_);
        for (const auto& [e, c] : terms_) out.add_term(e, Other(c));
        return out;
    }

  private:
    void check(const BasicLaurent& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Laurent: variable count mismatch");
    }

    int n_ = 0;
    TermMap terms_;
};

using Laurent = BasicLaurent<Integer>;
using RationalLaurent = BasicLaurent<Rational>;

namespace detail {

template <class Coef>
std::string coef_string(const Coef& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

}  // namespace detail

template <class Coef>
std::string to_text(const BasicLaurent<Coef>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Coef mag = c < 0 ? Coef(-c) : c;
        if (first)
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += detail::coef_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += detail::coef_string(mag) + "*" + mono;
    }
    return out;
}

template <class Coef>
std::ostream& operator<<(std::ostream& os, const BasicLaurent<Coef>& p) {
    return os << to_text(p);
}

/// [[exponents, coefficient], ...] in term order. Coefficients that do not
/// fit in 64 bits are written as decimal strings.
inline nlohmann::json to_json(const Laurent& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json coef;
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            coef = static_cast<long long>(c);
        else
            coef = c.str();
        arr.push_back({e, coef});
    }
    return arr;
}

inline Laurent laurent_from_json(const nlohmann::json& j, int n) {
    Laurent p(n);
    for (const auto& t : j) {
        const auto e = t.at(0).get<Exponent>();
        const auto& c = t.at(1);
        p.add_term(e, c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<long long>()));
    }
    return p;
}

}  // namespace qchar
