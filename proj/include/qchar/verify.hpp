/**
 * @file verify.hpp
 * @brief Property sweeps over all dominant weights inside a box, shared by the
 *        CLI and the acceptance runner.
 */

#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qchar/characters.hpp"
#include "qchar/diagram.hpp"
#include "qchar/multiplicity.hpp"
#include "qchar/paths.hpp"
#include "qchar/weight.hpp"

namespace qchar {

/// Dominant weights of rank min_rank..max_rank with |entries| <= bound.
struct SweepBounds {
    int min_rank = 1;
    int max_rank = 3;
    int bound = 2;
};

/// Accepts comma-separated keys: "n<=N", "n=N", "n>=N", "max=M".
inline SweepBounds parse_sweep(const std::string& text) {
    SweepBounds b;
    std::stringstream ss(text);
    std::string item;
    bool exact = false;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) continue;
        auto number = [&](std::size_t at) {
            std::size_t used = 0;
            const int v = std::stoi(item.substr(at), &used);
            if (at + used != item.size() || v < 0) throw std::invalid_argument("bad sweep item: " + item);
            return v;
        };
        if (item.rfind("n<=", 0) == 0)
            b.max_rank = number(3);
        else if (item.rfind("n>=", 0) == 0)
            b.min_rank = number(3);
        else if (item.rfind("n=", 0) == 0) {
            b.max_rank = number(2);
            exact = true;
        } else if (item.rfind("max=", 0) == 0)
            b.bound = number(4);
        else
            throw std::invalid_argument("bad sweep item: " + item);
    }
    if (exact) b.min_rank = b.max_rank;
    if (b.min_rank < 1 || b.max_rank < b.min_rank) throw std::invalid_argument("bad sweep rank range");
    return b;
}

inline std::vector<Weight> sweep_weights(const SweepBounds& b) {
    std::vector<Weight> out;
    for (int n = b.min_rank; n <= b.max_rank; ++n) {
        auto ws = dominant_weights(n, b.bound);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

struct CheckResult {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }

    void record(bool pass, const std::function<std::string()>& why) {
        ++cases;
        if (pass) return;
        if (failures++ == 0) first_failure = why();
    }
};

inline nlohmann::json to_json(const CheckResult& c) {
    nlohmann::json j = {{"check", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"ok", c.ok()}};
    if (!c.ok()) j["first"] = c.first_failure;
    return j;
}

namespace checks {

inline std::string show(const Weight& w) { return "(" + to_string(w) + ")"; }

inline void diagram_round_trip(CheckResult& c, const Weight& l) {
    const auto d = to_diagram(l);
    c.record(from_diagram(d, l.rank()) == l && d.degree() == atypicality(l), [&] { return show(l); });
}

inline void paths_vs_right_sources(CheckResult& c, const Weight& l) {
    std::set<Weight> left;
    for (const auto& p : left_paths(l)) left.insert(p.result);
    c.record(left == right_path_sources(l), [&] { return show(l); });
}

inline void reduction_equivariance(CheckResult& c, const Weight& l) {
    std::vector<Weight> a, b;
    for (const auto& p : left_paths(l)) a.push_back(reduce(p.result));
    for (const auto& p : left_paths(reduce(l))) b.push_back(p.result);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    c.record(a == b, [&] { return show(l); });
}

inline void c_hat_routes(CheckResult& c, const Weight& l) {
    c.record(c_hat_table(l, CRoute::Diagram) == c_hat_table(l, CRoute::Closed), [&] { return show(l); });
}

inline void inversion(CheckResult& c, const Weight& l, int level_cap) {
    const auto blk = verify_inversion(l, level_cap);
    c.record(blk.ok, [&] { return show(l) + " " + blk.failure; });
}

inline void grothendieck(CheckResult& c, const Weight& l, SchurCache& cache) {
    const auto rep = verify_grothendieck(l, &cache);
    c.record(rep.ok, [&] { return show(l) + " " + rep.mismatch; });
}

inline void sign_identity(CheckResult& c, const Weight& l) {
    for (const auto& mu : left_path_closure(l)) {
        const int diff = level(l) - level(mu);
        for (const auto& th : left_paths_to(l, mu)) {
            const int size = std::accumulate(th.begin(), th.end(), 0);
            c.record((size - diff) % 2 == 0, [&] { return show(l) + " " + show(mu) + " " + theta_token(th); });
        }
    }
}

inline void character_route(CheckResult& c, const Weight& l, CharRoute route, SchurCache& cache) {
    const Laurent ref = simple_character_expansion(l, &cache);
    bool same = false;
    std::string err;
    try {
        same = simple_character(l, route, &cache) == ref;
    } catch (const std::exception& e) {
        err = std::string(" ") + e.what();
    }
    c.record(same, [&] { return show(l) + err; });
}

inline void character_shape(CheckResult& c, const Weight& l, SchurCache& cache) {
    const Laurent ch = simple_character_expansion(l, &cache);
    bool ok = !ch.is_zero() && ch.terms().begin()->first == l.entries() &&
              ch.terms().begin()->second == pow2(clifford_exponent(l));
    for (const auto& [e, coef] : ch.terms()) ok = ok && coef > 0;
    c.record(ok, [&] { return show(l); });
}

inline void character_symmetry(CheckResult& c, const Weight& l, SchurCache& cache) {
    const Laurent ch = simple_character_expansion(l, &cache);
    bool ok = true;
    for (int a = 0; a + 1 < l.rank() && ok; ++a) {
        std::vector<int> p(static_cast<std::size_t>(l.rank()));
        std::iota(p.begin(), p.end(), 0);
        std::swap(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(a + 1)]);
        ok = ch.permuted(p) == ch;
    }
    c.record(ok, [&] { return show(l); });
}

inline void dimension_routes(CheckResult& c, const Weight& l, SchurCache& cache) {
    if (l.rank() > kDimensionRankCap) return;
    const Integer spec = dimension_by_specialization(l, &cache);
    std::string got;
    bool same = false;
    try {
        const Rational v = dimension_closed_value(l);
        got = v.str();
        same = v == Rational(spec);
    } catch (const std::exception& e) {
        got = e.what();
    }
    c.record(same, [&] { return show(l) + " closed " + got + ", specialization " + spec.str(); });
}

}  // namespace checks

/// Runs every property check on every weight of the sweep.
inline std::vector<CheckResult> run_verification(const SweepBounds& bounds, int level_cap = -1) {
    std::vector<CheckResult> out = {
        {"diagram round trip"},
        {"left paths match right-path sources"},
        {"left paths commute with reduction"},
        {"c-relation routes agree"},
        {"A*B = I on left-path blocks"},
        {"Grothendieck identity"},
        {"sign identity on raising paths"},
        {"closed character route matches expansion"},
        {"cone character route matches expansion"},
        {"character top term and positivity"},
        {"character symmetry"},
        {"closed dimension matches specialization"},
    };
    SchurCache cache;
    for (const auto& l : sweep_weights(bounds)) {
        checks::diagram_round_trip(out[0], l);
        checks::paths_vs_right_sources(out[1], l);
        checks::reduction_equivariance(out[2], l);
        checks::c_hat_routes(out[3], l);
        checks::inversion(out[4], l, level_cap);
        checks::grothendieck(out[5], l, cache);
        checks::sign_identity(out[6], l);
        checks::character_route(out[7], l, CharRoute::Closed, cache);
        checks::character_route(out[8], l, CharRoute::Cone, cache);
        checks::character_shape(out[9], l, cache);
        checks::character_symmetry(out[10], l, cache);
        checks::dimension_routes(out[11], l, cache);
    }
    return out;
}

}  // namespace qchar
