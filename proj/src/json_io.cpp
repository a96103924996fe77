#include "frieze/json_io.hpp"

#include <algorithm>

#include "json.hpp"

namespace frieze {

using nlohmann::json;

std::string rational_to_string(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rat rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw JsonSchemaError("bad rational '" + s + "'");
    }
}

namespace {

// adic winds negatively, Prufer positively; with the outer boundary read
// left-to-right and the inner boundary carrying the opposite orientation,
// the spiral drawn leftward is adic at the outer boundary and Prufer at the
// inner one.
std::string asymptotic_kind(const Arc& arc) {
    bool outer = arc.base.boundary == Boundary::outer;
    bool left = arc.spiral == Spiral::left;
    return (outer == left) ? "adic" : "prufer";
}

Spiral spiral_from_kind(const std::string& kind, Boundary boundary) {
    bool adic = kind == "adic";
    bool outer = boundary == Boundary::outer;
    return (outer == adic) ? Spiral::left : Spiral::right;
}

json arc_to_json(const Arc& arc, const AnnulusTriangulation& T) {
    json a;
    switch (arc.kind) {
    case Arc::Kind::peripheral:
        a["kind"] = "peripheral";
        a["boundary"] = arc.boundary == Boundary::outer ? "outer" : "inner";
        a["from"] = arc.from;
        a["to"] = arc.to;
        break;
    case Arc::Kind::bridging:
        a["kind"] = "bridging";
        a["from"] = arc.outer_point;
        a["to"] = arc.inner_point;
        a["winding"] = arc.winding;
        break;
    case Arc::Kind::asymptotic:
        a["kind"] = asymptotic_kind(arc);
        a["at"] = arc.base.index;
        break;
    }
    (void)T;
    return a;
}

json dump_base(const std::string& surface) {
    json j;
    j["surface"] = surface;
    return j;
}

std::string finish(const json& j) { return j.dump(2) + "\n"; }

long long need_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw JsonSchemaError(std::string("missing integer field '") + key + "'");
    return j[key].get<long long>();
}

std::string need_str(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw JsonSchemaError(std::string("missing string field '") + key + "'");
    return j[key].get<std::string>();
}

} // namespace

std::string to_json(const AnnulusTriangulation& T) {
    json j = dump_base("annulus");
    j["n"] = T.n;
    j["m"] = T.m;
    j["winding_bound"] = T.winding_bound;
    json arcs = json::array();
    std::vector<Arc> sorted = T.arcs;
    std::sort(sorted.begin(), sorted.end());
    for (const Arc& arc : sorted) arcs.push_back(arc_to_json(arc, T));
    j["arcs"] = arcs;
    return finish(j);
}

std::string to_json(const PuncturedDisc& D) {
    json j = dump_base("disc");
    j["n"] = D.n;
    json arcs = json::array();
    std::vector<DiscArc> sorted = D.arcs;
    std::sort(sorted.begin(), sorted.end());
    for (const DiscArc& arc : sorted) {
        json a;
        if (arc.kind == DiscArc::Kind::peripheral) {
            a["kind"] = "peripheral";
            a["from"] = arc.from;
            a["to"] = arc.to;
        } else {
            a["kind"] = "central";
            a["at"] = arc.at;
        }
        arcs.push_back(a);
    }
    j["arcs"] = arcs;
    return finish(j);
}

std::string to_json(const StripTriangulation& T) {
    json j = dump_base("strip");
    j["lower_window"] = {T.stored_lo, T.stored_hi};
    j["core"] = {T.core_lo, T.core_hi};
    j["spill"] = T.spill;
    json upper = json::array();
    for (const Rat& x : T.upper) upper.push_back(rational_to_string(x));
    j["upper"] = upper;
    json arcs = json::array();
    for (const auto& arch : T.lower_arches) {
        json a;
        a["kind"] = "peripheral";
        a["boundary"] = "lower";
        a["from"] = arch.from;
        a["to"] = arch.to;
        arcs.push_back(a);
    }
    for (const auto& arch : T.upper_arches) {
        json a;
        a["kind"] = "peripheral";
        a["boundary"] = "upper";
        a["from"] = rational_to_string(T.upper[static_cast<std::size_t>(arch.from)]);
        a["to"] = rational_to_string(T.upper[static_cast<std::size_t>(arch.to)]);
        arcs.push_back(a);
    }
    for (const auto& br : T.bridges) {
        json a;
        a["kind"] = "bridging";
        a["from"] = br.lower;
        a["to"] = rational_to_string(T.upper[static_cast<std::size_t>(br.upper)]);
        arcs.push_back(a);
    }
    j["arcs"] = arcs;
    return finish(j);
}

std::string to_json(const TriangulatedPolygon& P) {
    json j = dump_base("polygon");
    j["n"] = P.n;
    json diags = json::array();
    for (const auto& [u, v] : P.diagonals) diags.push_back({u, v});
    j["diagonals"] = diags;
    return finish(j);
}

std::string to_json(const Triangulation& T) {
    return std::visit([](const auto& t) { return to_json(t); }, T);
}

namespace {

AnnulusTriangulation annulus_from_json(const json& j) {
    AnnulusTriangulation T;
    T.n = need_int(j, "n");
    T.m = need_int(j, "m");
    if (j.contains("winding_bound")) T.winding_bound = need_int(j, "winding_bound");
    if (!j.contains("arcs") || !j["arcs"].is_array()) throw JsonSchemaError("missing arcs array");
    for (const json& a : j["arcs"]) {
        std::string kind = need_str(a, "kind");
        if (kind == "peripheral") {
            std::string b = need_str(a, "boundary");
            if (b != "outer" && b != "inner") throw JsonSchemaError("bad boundary '" + b + "'");
            T.arcs.push_back(Arc::peripheral(b == "outer" ? Boundary::outer : Boundary::inner,
                                             need_int(a, "from"), need_int(a, "to")));
        } else if (kind == "bridging") {
            long long w = a.contains("winding") ? need_int(a, "winding") : 0;
            T.arcs.push_back(Arc::bridging(need_int(a, "from"), need_int(a, "to"), w));
        } else if (kind == "adic" || kind == "prufer") {
            Index at = need_int(a, "at");
            Boundary b = at <= T.n ? Boundary::outer : Boundary::inner;
            T.arcs.push_back(Arc::asymptotic({b, at}, spiral_from_kind(kind, b)));
        } else {
            throw JsonSchemaError("unknown arc kind '" + kind + "'");
        }
    }
    std::sort(T.arcs.begin(), T.arcs.end());
    return T;
}

PuncturedDisc disc_from_json(const json& j) {
    PuncturedDisc D;
    D.n = need_int(j, "n");
    if (!j.contains("arcs") || !j["arcs"].is_array()) throw JsonSchemaError("missing arcs array");
    for (const json& a : j["arcs"]) {
        std::string kind = need_str(a, "kind");
        DiscArc arc;
        if (kind == "peripheral") {
            arc.kind = DiscArc::Kind::peripheral;
            arc.from = need_int(a, "from");
            arc.to = need_int(a, "to");
        } else if (kind == "central") {
            arc.kind = DiscArc::Kind::central;
            arc.at = need_int(a, "at");
        } else {
            throw JsonSchemaError("unknown disc arc kind '" + kind + "'");
        }
        D.arcs.push_back(arc);
    }
    std::sort(D.arcs.begin(), D.arcs.end());
    return D;
}

StripTriangulation strip_from_json(const json& j) {
    StripTriangulation T;
    if (!j.contains("lower_window") || !j["lower_window"].is_array() || j["lower_window"].size() != 2)
        throw JsonSchemaError("missing lower_window [lo, hi]");
    T.stored_lo = j["lower_window"][0].get<long long>();
    T.stored_hi = j["lower_window"][1].get<long long>();
    if (j.contains("core")) {
        T.core_lo = j["core"][0].get<long long>();
        T.core_hi = j["core"][1].get<long long>();
    } else {
        T.core_lo = T.stored_lo + 1;
        T.core_hi = T.stored_hi - 1;
    }
    if (j.contains("spill")) T.spill = need_int(j, "spill");
    if (!j.contains("upper") || !j["upper"].is_array()) throw JsonSchemaError("missing upper array");
    for (const json& u : j["upper"]) {
        if (!u.is_string()) throw JsonSchemaError("upper positions must be rational strings");
        T.upper.push_back(rational_from_string(u.get<std::string>()));
    }
    auto upper_index = [&](const std::string& s) -> Index {
        Rat x = rational_from_string(s);
        for (std::size_t i = 0; i < T.upper.size(); ++i)
            if (T.upper[i] == x) return static_cast<Index>(i);
        throw JsonSchemaError("arc endpoint '" + s + "' is not an upper vertex");
    };
    if (!j.contains("arcs") || !j["arcs"].is_array()) throw JsonSchemaError("missing arcs array");
    for (const json& a : j["arcs"]) {
        std::string kind = need_str(a, "kind");
        if (kind == "peripheral") {
            std::string b = need_str(a, "boundary");
            if (b == "lower") {
                T.lower_arches.push_back({need_int(a, "from"), need_int(a, "to")});
            } else if (b == "upper") {
                T.upper_arches.push_back({upper_index(need_str(a, "from")), upper_index(need_str(a, "to"))});
            } else {
                throw JsonSchemaError("bad strip boundary '" + b + "'");
            }
        } else if (kind == "bridging") {
            T.bridges.push_back({need_int(a, "from"), upper_index(need_str(a, "to"))});
        } else {
            throw JsonSchemaError("unknown strip arc kind '" + kind + "'");
        }
    }
    std::sort(T.lower_arches.begin(), T.lower_arches.end());
    std::sort(T.upper_arches.begin(), T.upper_arches.end());
    std::sort(T.bridges.begin(), T.bridges.end());
    return T;
}

TriangulatedPolygon polygon_from_json(const json& j) {
    TriangulatedPolygon P;
    P.n = need_int(j, "n");
    if (!j.contains("diagonals") || !j["diagonals"].is_array())
        throw JsonSchemaError("missing diagonals array");
    for (const json& d : j["diagonals"]) {
        if (!d.is_array() || d.size() != 2) throw JsonSchemaError("diagonal must be [u, v]");
        P.diagonals.emplace_back(d[0].get<long long>(), d[1].get<long long>());
    }
    std::sort(P.diagonals.begin(), P.diagonals.end());
    return P;
}

} // namespace

Triangulation from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw JsonSchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw JsonSchemaError("top level must be an object");
    std::string surface = need_str(j, "surface");
    try {
        if (surface == "annulus") return annulus_from_json(j);
        if (surface == "disc") return disc_from_json(j);
        if (surface == "strip") return strip_from_json(j);
        if (surface == "polygon") return polygon_from_json(j);
    } catch (const json::exception& e) {
        throw JsonSchemaError(std::string("schema violation: ") + e.what());
    }
    throw JsonSchemaError("unknown surface '" + surface + "'");
}

} // namespace frieze
