#include "solv3/config.hpp"

#include <set>

#include "solv3/errors.hpp"

namespace solv3 {

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::string& where, const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
    if (!j.is_object()) throw ParseError(where + " must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!required.count(key) && !optional.count(key)) {
            throw ParseError("unknown key \"" + key + "\" in " + where);
        }
    }
    for (const auto& key : required) {
        if (!j.contains(key)) throw ParseError("missing key \"" + key + "\" in " + where);
    }
}

double number_at(const json& j, const std::string& where) {
    if (!j.is_number()) throw ParseError(where + " must be a number");
    return j.get<double>();
}

GroupClass parse_group(const json& j) {
    require_keys(j, "group", {"class"}, {"lambda", "n"});
    const auto& cj = j.at("class");
    if (!cj.is_string()) throw ParseError("group.class must be a string");
    const std::string cls = cj.get<std::string>();
    const bool has_lambda = j.contains("lambda");
    const bool has_n = j.contains("n");
    const bool wants_lambda = cls == "r3_lambda" || cls == "r3_prime";
    const bool wants_n = cls == "e_n";
    if (has_lambda != wants_lambda) {
        throw ParseError(wants_lambda ? "group.lambda is required for class " + cls
                                      : "group.lambda is not accepted for class " + cls);
    }
    if (has_n != wants_n) {
        throw ParseError(wants_n ? "group.n is required for class e_n"
                                 : "group.n is not accepted for class " + cls);
    }
    if (cls == "r2_tilde") return GroupClass::r2_tilde();
    if (cls == "r2") return GroupClass::r2();
    if (cls == "r3") return GroupClass::r3();
    if (cls == "r3_lambda") return GroupClass::r3_lambda(number_at(j.at("lambda"), "group.lambda"));
    if (cls == "r3_prime") return GroupClass::r3_prime(number_at(j.at("lambda"), "group.lambda"));
    if (cls == "e_tilde") return GroupClass::e_tilde();
    if (cls == "e_n") {
        const auto& nj = j.at("n");
        if (!nj.is_number_integer()) throw ParseError("group.n must be an integer");
        return GroupClass::e_n(nj.get<int>());
    }
    throw ParseError("unknown group class \"" + cls + "\"");
}

Mat2 parse_mat2(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw ParseError(where + " must be a 2x2 array");
    Mat2 m;
    for (int r = 0; r < 2; ++r) {
        const auto& row = j.at(static_cast<std::size_t>(r));
        if (!row.is_array() || row.size() != 2) throw ParseError(where + " must be a 2x2 array");
        for (int c = 0; c < 2; ++c) {
            m(r, c) = number_at(row.at(static_cast<std::size_t>(c)), where);
        }
    }
    return m;
}

Vec2 parse_vec2(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw ParseError(where + " must have 2 entries");
    return Vec2(number_at(j.at(0), where), number_at(j.at(1), where));
}

}  // namespace

LinearSystem parse_system(const json& j) {
    require_keys(j, "configuration", {"group", "derivation", "controls"});
    const GroupClass cls = parse_group(j.at("group"));
    const auto& dj = j.at("derivation");
    require_keys(dj, "derivation", {"dstar", "xi"});
    const Mat2 dstar = parse_mat2(dj.at("dstar"), "derivation.dstar");
    const Vec2 xi = parse_vec2(dj.at("xi"), "derivation.xi");
    const auto& cj = j.at("controls");
    if (!cj.is_array() || cj.empty()) throw ParseError("controls must be a nonempty array");
    std::vector<AlgebraElement> controls;
    for (const auto& entry : cj) {
        if (!entry.is_array() || entry.size() != 3) {
            throw ParseError("each control must have 3 entries [a, w1, w2]");
        }
        controls.emplace_back(number_at(entry.at(0), "control"),
                              Vec2(number_at(entry.at(1), "control"),
                                   number_at(entry.at(2), "control")));
    }
    return make_system(make_derivation(cls, dstar, xi), std::move(controls));
}

LinearSystem parse_system_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return parse_system(j);
}

json serialize_system(const LinearSystem& sys) {
    const GroupClass& cls = sys.cls();
    json group{{"class", cls.name()}};
    if (cls.kind == GroupKind::R3Lambda || cls.kind == GroupKind::R3PrimeLambda) {
        group["lambda"] = cls.lambda;
    }
    if (cls.kind == GroupKind::En) group["n"] = cls.n;
    const Mat2& d = sys.drift.dstar;
    json controls = json::array();
    for (const auto& c : sys.controls) {
        controls.push_back({c.a, c.w.x(), c.w.y()});
    }
    return json{{"group", group},
                {"derivation",
                 {{"dstar", {{d(0, 0), d(0, 1)}, {d(1, 0), d(1, 1)}}},
                  {"xi", {sys.drift.xi.x(), sys.drift.xi.y()}}}},
                {"controls", controls}};
}

json verdict_record(const Verdict& v) {
    json spectrum = json::array();
    for (const auto& mu : v.decomposition.spectrum) {
        spectrum.push_back({mu.real(), mu.imag()});
    }
    json rec{{"controllable", v.controllable},
             {"clause", v.clause},
             {"explanation", v.explanation},
             {"larc", v.distribution.larc},
             {"delta_dim", v.distribution.delta_dim},
             {"ad_rank", v.distribution.ad_rank},
             {"gzero_dim", v.decomposition.gzero_dim},
             {"spectrum", spectrum},
             {"certificate", nullptr}};
    if (v.certificate) {
        const auto& c = *v.certificate;
        json cj{{"sigma", c.sigma}, {"shift", {c.shift.x(), c.shift.y()}}};
        switch (c.kind) {
            case BarrierKind::HalfPlaneF:
                cj["kind"] = "half_plane";
                cj["n"] = {c.n.x(), c.n.y()};
                cj["kappa"] = c.kappa;
                break;
            case BarrierKind::ExpandingDisk:
                cj["kind"] = "expanding_disk";
                cj["center"] = {c.center.x(), c.center.y()};
                cj["radius"] = c.radius;
                break;
            case BarrierKind::MonotoneCoordinate:
                cj["kind"] = "monotone_coordinate";
                cj["v0"] = {c.v0.x(), c.v0.y()};
                break;
        }
        rec["certificate"] = cj;
    }
    return rec;
}

}  // namespace solv3
