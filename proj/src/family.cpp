#include "sgt/family.hpp"

#include <cmath>
#include <memory>
#include <string>

#include <json.hpp>

#include "sgt/errors.hpp"
#include "sgt/expr.hpp"

namespace sgt {

namespace {

double checked_rule(const std::function<double(long long)>& rule, long long n,
                    const char* what) {
    const double v = rule(n);
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw Error::input("NonpositiveWeight",
                           std::string(what) + " rule evaluates to " + std::to_string(v) +
                               " at n = " + std::to_string(n) +
                               "; rules must be positive and finite");
    }
    return v;
}

} // namespace

double LineFamily::line_c(long long n) const { return checked_rule(line_conductance, n, "edge"); }

double LineFamily::mass(long long n) const { return checked_rule(vertex_mass, n, "mass"); }

double LineFamily::chord_c(long long k) const {
    return checked_rule(chord_conductance, k, "chord");
}

LineFamily builtin_family(const std::string& name, double alpha) {
    const auto unit = [](long long) { return 1.0; };
    const auto g1_line = [](long long n) {
        const double t = static_cast<double>(n + 1);
        return t * t + 1.0;
    };

    if (name == "simple-Z") {
        return {"simple-Z", unit, unit, false, {}};
    }
    if (name == "G1") {
        return {"G1", g1_line, unit, false, {}};
    }
    if (name == "exponential") {
        if (!(alpha > 1.0)) {
            throw Error::input("BadParameter", "exponential family needs alpha > 1, got " +
                                                   std::to_string(alpha));
        }
        return {"exponential",
                [alpha](long long n) { return std::pow(alpha, static_cast<double>(std::llabs(n))); },
                unit, false, {}};
    }
    if (name == "G2") {
        return {"G2", g1_line, unit, true, unit};
    }
    throw Error::input("UnknownFamily",
                       "'" + name + "' (expected simple-Z, G1, exponential or G2)");
}

LineFamily family_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error::input("ParseError", std::string("family file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("c")) {
        throw Error::input("ParseError", "family file must be an object with a \"c\" expression");
    }

    auto rule_from = [](const nlohmann::json& field, const char* what) {
        if (!field.is_string()) {
            throw Error::input("ParseError",
                               std::string(what) + " must be an expression string");
        }
        auto expr = std::make_shared<Expression>(Expression::parse(field.get<std::string>()));
        return std::function<double(long long)>(
            [expr](long long n) { return expr->eval(static_cast<double>(n)); });
    };

    LineFamily fam;
    fam.name = j.value("name", std::string("custom"));
    fam.line_conductance = rule_from(j.at("c"), "\"c\"");
    fam.vertex_mass = j.contains("m") ? rule_from(j.at("m"), "\"m\"")
                                      : std::function<double(long long)>([](long long) { return 1.0; });
    if (j.contains("chords")) {
        const auto& ch = j.at("chords");
        if (!ch.is_object()) {
            throw Error::input("ParseError", "\"chords\" must be an object");
        }
        fam.has_chords = ch.value("enabled", false);
        if (fam.has_chords) {
            if (!ch.contains("c")) {
                throw Error::input("ParseError", "enabled chords need a \"c\" expression");
            }
            fam.chord_conductance = rule_from(ch.at("c"), "chords \"c\"");
        }
    }
    return fam;
}

Truncation truncate(const LineFamily& fam, long long radius) {
    if (radius < 1) {
        throw Error::input("BadParameter",
                           "window radius must be >= 1, got " + std::to_string(radius));
    }
    RawGraph raw;
    raw.vertices.reserve(static_cast<std::size_t>(2 * radius + 1));
    for (long long n = -radius; n <= radius; ++n) {
        raw.vertices.push_back({std::to_string(n), fam.mass(n)});
    }
    for (long long n = -radius; n < radius; ++n) {
        raw.edges.push_back({std::to_string(n), std::to_string(n + 1), fam.line_c(n)});
    }
    if (fam.has_chords) {
        for (long long k = 1; k <= radius; ++k) {
            raw.edges.push_back({std::to_string(k), std::to_string(-k), fam.chord_c(k)});
        }
    }
    return {radius, WeightedGraph::validate(raw)};
}

} // namespace sgt
