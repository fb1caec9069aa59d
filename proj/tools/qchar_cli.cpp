// Command-line front end for the qchar library.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qchar/characters.hpp"
#include "qchar/diagram.hpp"
#include "qchar/multiplicity.hpp"
#include "qchar/paths.hpp"
#include "qchar/verify.hpp"
#include "qchar/weight.hpp"

using namespace qchar;
using nlohmann::json;

namespace {

struct Options {
    std::string weight;
    std::string format = "text";
    int level_cap = -1;
    std::string route = "expansion";
    std::string sweep = "n<=3,max=2";
    std::string target;
    bool euler = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Weight weight_arg(const Options& o) {
    if (o.weight.empty()) throw UsageError("--weight is required");
    return parse_weight(o.weight);
}

Weight dominant_arg(const Options& o) {
    const Weight w = weight_arg(o);
    if (!is_dominant(w)) throw UsageError("weight (" + to_string(w) + ") is not dominant");
    return w;
}

bool as_json(const Options& o) { return o.format == "json"; }

std::string paren(const Weight& w) { return "(" + to_string(w) + ")"; }

int cmd_diagram(const Options& o) {
    const Weight l = dominant_arg(o);
    const auto d = to_diagram(l);
    if (as_json(o))
        std::cout << json{{"weight", l.entries()}, {"diagram", to_json(d)}}.dump() << "\n";
    else
        std::cout << render(d);
    return 0;
}

int cmd_stats(const Options& o) {
    const Weight w = weight_arg(o);
    const auto s = stats(w);
    json j = {{"weight", w.entries()}, {"n", w.rank()},         {"z", s.z},
              {"zbar", s.zbar},        {"h", s.h},              {"dominant", s.dominant},
              {"regular", s.regular},  {"type", s.type == ModuleType::M ? "M" : "Q"}};
    if (s.regular) {
        const auto a = atypical_data(w);
        json roots = json::array();
        for (const auto& g : a.roots) roots.push_back({g.m + 1, g.n + 1});
        j["r"] = a.degree();
        j["roots"] = roots;
        j["atypicalEntries"] = a.entries;
        j["typicalTuple"] = a.typical_tuple;
        if (const auto c = dominant_conjugate(w)) j["dominantConjugate"] = c->weight.entries();
    }
    if (as_json(o)) {
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "weight   " << paren(w) << "\n"
              << "n        " << w.rank() << "\n"
              << "z        " << s.z << "\n"
              << "zbar     " << s.zbar << "\n"
              << "h        " << s.h << "\n"
              << "dominant " << (s.dominant ? "yes" : "no") << "\n"
              << "regular  " << (s.regular ? "yes" : "no") << "\n"
              << "type     " << (s.type == ModuleType::M ? "M" : "Q") << "\n";
    if (!s.regular) return 0;
    const auto a = atypical_data(w);
    std::cout << "r        " << a.degree() << "\n";
    for (int p = 0; p < a.degree(); ++p)
        std::cout << "gamma_" << p + 1 << "  e" << a.roots[static_cast<std::size_t>(p)].m + 1 << " - e"
                  << a.roots[static_cast<std::size_t>(p)].n + 1 << "\n";
    if (!s.dominant) std::cout << "dominant conjugate " << paren(dominant_conjugate(w)->weight) << "\n";
    return 0;
}

int cmd_moves(const Options& o) {
    const Weight l = dominant_arg(o);
    const auto d = to_diagram(l);
    const auto right = right_moves(d);
    const auto left = left_moves(d);
    if (as_json(o)) {
        json r = json::array(), lm = json::array();
        for (const auto& m : right) r.push_back({{"cross", m.cross}, {"from", m.from}, {"target", m.target}, {"k", m.k()}});
        for (const auto& m : left)
            lm.push_back({{"name", "L(" + std::to_string(m.i) + "," + std::to_string(m.j) + ")"},
                          {"i", m.i},
                          {"j", m.j},
                          {"from", m.from},
                          {"target", m.target}});
        std::cout << json{{"weight", l.entries()}, {"right", r}, {"left", lm}}.dump() << "\n";
        return 0;
    }
    std::cout << "right moves\n";
    for (const auto& m : right)
        std::cout << "  R" << m.cross << "  " << m.from << " -> " << m.target << "  k=" << m.k() << "\n";
    std::cout << "left moves\n";
    for (const auto& m : left) std::cout << "  L(" << m.i << "," << m.j << ")  " << m.from << " -> " << m.target << "\n";
    return 0;
}

int cmd_paths(const Options& o) {
    const Weight l = dominant_arg(o);
    if (!o.target.empty()) {
        const Weight mu = parse_weight(o.target);
        if (mu.rank() != l.rank()) throw UsageError("--to has the wrong rank");
        const auto thetas = left_paths_to(l, mu);
        if (as_json(o)) {
            std::cout << json{{"weight", l.entries()}, {"to", mu.entries()}, {"thetas", thetas}}.dump() << "\n";
            return 0;
        }
        for (const auto& th : thetas) std::cout << theta_token(th) << "\n";
        return 0;
    }
    const auto paths = left_paths(l);
    if (as_json(o)) {
        json arr = json::array();
        for (const auto& p : paths) arr.push_back({{"path", path_token(p)}, {"result", p.result.entries()}});
        std::cout << json{{"weight", l.entries()}, {"paths", arr}}.dump() << "\n";
        return 0;
    }
    for (const auto& p : paths) std::cout << path_token(p) << "  " << paren(p.result) << "\n";
    return 0;
}

int cmd_factors(const Options& o) {
    const Weight l = dominant_arg(o);
    const auto f = composition_factors(l);
    if (as_json(o)) {
        json arr = json::array();
        for (const auto& [mu, a] : f) arr.push_back({{"weight", mu.entries()}, {"multiplicity", a.str()}});
        std::cout << json{{"weight", l.entries()}, {"factors", arr}}.dump() << "\n";
        return 0;
    }
    for (const auto& [mu, a] : f) std::cout << paren(mu) << "  " << a << "\n";
    return 0;
}

void print_character(const Options& o, const Weight& l, const Laurent& ch) {
    if (as_json(o))
        std::cout << json{{"weight", l.entries()}, {"character", to_json(ch)}}.dump() << "\n";
    else
        std::cout << to_text(ch) << "\n";
}

int cmd_character(const Options& o) {
    const Weight l = dominant_arg(o);
    SchurCache cache;
    if (o.euler) {
        print_character(o, l, euler_character(l, &cache));
        return 0;
    }
    if (o.route == "expansion") {
        print_character(o, l, simple_character(l, CharRoute::Expansion, &cache));
        return 0;
    }
    if (o.route == "closed") {
        print_character(o, l, simple_character(l, CharRoute::Closed, &cache));
        return 0;
    }
    if (o.route == "cone") {
        print_character(o, l, simple_character(l, CharRoute::Cone, &cache));
        return 0;
    }
    const Laurent closed = simple_character(l, CharRoute::Closed, &cache);
    const Laurent cone = simple_character(l, CharRoute::Cone, &cache);
    print_character(o, l, closed);
    if (closed == cone) return 0;
    std::cerr << "closed and cone routes disagree; cone route gives\n" << to_text(cone) << "\n";
    return 1;
}

int cmd_dimension(const Options& o) {
    const Weight l = dominant_arg(o);
    std::vector<std::pair<std::string, Rational>> routes;
    if (o.route != "cone") routes.emplace_back("closed", dimension_closed_value(l));
    if (o.route == "cone" || o.route == "both") routes.emplace_back("cone", dimension_cone_value(l));
    SchurCache cache;
    const Integer spec = dimension_by_specialization(l, &cache);
    bool agree = true;
    for (const auto& [name, v] : routes) agree = agree && v == Rational(spec);
    if (as_json(o)) {
        json j = {{"weight", l.entries()}, {"specialization", spec.str()}, {"agree", agree}};
        for (const auto& [name, v] : routes) j[name] = v.str();
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& [name, v] : routes) std::cout << name << "  " << v << "\n";
        std::cout << "specialization  " << spec << "\n";
    }
    if (!agree) std::cerr << "dimension routes disagree\n";
    return agree ? 0 : 1;
}

int cmd_verify(const Options& o) {
    const auto bounds = parse_sweep(o.sweep);
    const auto results = run_verification(bounds, o.level_cap);
    bool ok = true;
    json arr = json::array();
    for (const auto& c : results) {
        ok = ok && c.ok();
        arr.push_back(to_json(c));
        if (as_json(o)) continue;
        std::cout << (c.ok() ? "PASS " : "FAIL ") << c.name << "  " << c.cases - c.failures << "/" << c.cases;
        if (!c.ok()) std::cout << "  first: " << c.first_failure;
        std::cout << "\n";
    }
    if (as_json(o)) std::cout << json{{"sweep", o.sweep}, {"checks", arr}, {"ok", ok}}.dump() << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characters, composition factors and dimensions of simple q(n)-modules"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool needs_weight) {
        auto* w = sub->add_option("-w,--weight", o.weight, "comma-separated integer entries");
        if (needs_weight) w->required();
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };

    auto* diagram = app.add_subcommand("diagram", "render the weight diagram");
    add_common(diagram, true);
    auto* stats_cmd = app.add_subcommand("stats", "zero counts, regularity, type and atypical roots");
    add_common(stats_cmd, true);
    auto* moves = app.add_subcommand("moves", "right moves with targets and all left moves");
    add_common(moves, true);
    auto* paths = app.add_subcommand("paths", "left paths with result weights");
    add_common(paths, true);
    paths->add_option("--to", o.target, "list raising paths from this weight instead");
    auto* factors = app.add_subcommand("factors", "composition factors of the Euler module");
    add_common(factors, true);
    auto* character = app.add_subcommand("character", "formal character of L(weight) or E(weight)");
    add_common(character, true);
    character->add_flag("--euler", o.euler, "character of the Euler module");
    character->add_option("--route", o.route, "expansion, closed, cone or both")
        ->check(CLI::IsMember({"expansion", "closed", "cone", "both"}));
    auto* dimension = app.add_subcommand("dimension", "dimension of L(weight) by formula and by specialization");
    add_common(dimension, true);
    dimension->add_option("--route", o.route, "closed, cone or both")
        ->check(CLI::IsMember({"expansion", "closed", "cone", "both"}));
    auto* verify = app.add_subcommand("verify", "run the property sweep");
    add_common(verify, false);
    verify->add_option("--sweep", o.sweep, "bounds such as \"n<=3,max=2\"");
    verify->add_option("--level-cap", o.level_cap, "drop block weights more than this many levels down");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*diagram) return cmd_diagram(o);
        if (*stats_cmd) return cmd_stats(o);
        if (*moves) return cmd_moves(o);
        if (*paths) return cmd_paths(o);
        if (*factors) return cmd_factors(o);
        if (*character) return cmd_character(o);
        if (*dimension) return cmd_dimension(o);
        if (*verify) return cmd_verify(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
