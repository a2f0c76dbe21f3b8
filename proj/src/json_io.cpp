#include "wgauss/json_io.hpp"

#include <fstream>
#include <sstream>

namespace wgauss {

namespace {

Scalar parse_coeff(FieldPtr F, const Json& v) {
    if (v.is_number_integer()) return Scalar::from_int(F, v.get<long long>());
    if (v.is_string()) {
        mpq_class q;
        if (q.set_str(v.get<std::string>(), 10) != 0) throw ParseError("bad coefficient \"" + v.get<std::string>() + "\"");
        q.canonicalize();
        return Scalar::from_mpq(F, q);
    }
    throw ParseError("coefficient must be an integer or an \"a/b\" string");
}

Exponent parse_key(const std::string& key, int nvars) {
    Exponent e;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(part, &used);
        } catch (const std::exception&) {
            throw ParseError("bad monomial key \"" + key + "\"");
        }
        if (used != part.size() || v < 0) throw ParseError("bad monomial key \"" + key + "\"");
        e.push_back(v);
    }
    if (static_cast<int>(e.size()) != nvars) throw ParseError("monomial key \"" + key + "\" has the wrong arity");
    return e;
}

MPoly parse_form(FieldPtr F, const Json& j, int nvars) {
    if (!j.is_object()) throw ParseError("form must be an object keyed by exponent tuples");
    MPoly m(F, nvars);
    for (const auto& [k, v] : j.items()) m.add_term(parse_key(k, nvars), parse_coeff(F, v));
    return m;
}

Json form_to_json(const MPoly& m) {
    Json o = Json::object();
    for (const auto& [e, c] : m.terms()) {
        std::string key;
        for (std::size_t i = 0; i < e.size(); ++i) key += (i ? "," : "") + std::to_string(e[i]);
        o[key] = scalar_to_json(c);
    }
    return o;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
    FieldPtr F = s.field();
    if (!F->is_finite()) {
        const mpq_class& q = s.q();
        if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
        return Json(q.get_str());
    }
    if (F->degree() == 1) return Json(static_cast<long long>(s.coeff(0)));
    Json a = Json::array();
    for (auto c : s.coeffs()) a.push_back(c);
    return a;
}

CurvePtr curve_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("curve description must be an object");
    if (!j.contains("model") || !j["model"].is_string()) throw ParseError("missing \"model\"");
    if (!j.contains("field") || !j["field"].is_object()) throw ParseError("missing \"field\"");
    const Json& fj = j["field"];
    FieldPtr F;
    const std::string type = fj.value("type", "");
    if (type == "prime") {
        if (!fj.contains("p") || !fj["p"].is_number_unsigned()) throw ParseError("field.p must be a positive integer");
        const auto p = fj["p"].get<uint64_t>();
        if (p > 0xffffffffULL || !is_prime_u32(static_cast<uint32_t>(p))) throw ParseError("field.p is not a 32-bit prime");
        F = Field::prime(static_cast<uint32_t>(p));
    } else if (type == "rational") {
        F = Field::rationals();
    } else {
        throw ParseError("field.type must be \"prime\" or \"rational\"");
    }
    const std::string model = j["model"].get<std::string>();
    if (model == "hyperelliptic") {
        if (!j.contains("f") || !j["f"].is_array()) throw ParseError("hyperelliptic curve needs \"f\"");
        std::vector<Scalar> c;
        for (const auto& v : j["f"]) c.push_back(parse_coeff(F, v));
        return make_hyperelliptic(Poly(F, c));
    }
    if (model == "plane_quartic") {
        if (j.contains("form")) return make_plane_quartic(parse_form(F, j["form"], 3));
        if (j.contains("forms") && j["forms"].is_array() && j["forms"].size() == 1)
            return make_plane_quartic(parse_form(F, j["forms"][0], 3));
        throw ParseError("plane quartic needs \"form\"");
    }
    if (model == "canonical_g4") {
        if (!j.contains("forms") || !j["forms"].is_array() || j["forms"].size() != 2)
            throw ParseError("canonical_g4 needs \"forms\": [quadric, cubic]");
        return make_canonical_g4(parse_form(F, j["forms"][0], 4), parse_form(F, j["forms"][1], 4));
    }
    throw ParseError("unknown model \"" + model + "\"");
}

Json curve_to_json(const Curve& C) {
    Json j;
    switch (C.model) {
        case Model::Hyperelliptic: j["model"] = "hyperelliptic"; break;
        case Model::PlaneQuartic: j["model"] = "plane_quartic"; break;
        case Model::CanonicalG4: j["model"] = "canonical_g4"; break;
    }
    Json f;
    if (C.field->is_finite()) {
        f["type"] = "prime";
        f["p"] = C.field->p();
    } else {
        f["type"] = "rational";
    }
    j["field"] = f;
    if (C.hyperelliptic()) {
        Json a = Json::array();
        for (int i = 0; i <= C.f.degree(); ++i) a.push_back(scalar_to_json(C.f.coeff(i)));
        j["f"] = a;
    } else if (C.model == Model::PlaneQuartic) {
        j["form"] = form_to_json(C.forms[0]);
    } else {
        j["forms"] = Json::array({form_to_json(C.forms[0]), form_to_json(C.forms[1])});
    }
    return j;
}

CurvePtr load_curve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return curve_from_json(j);
}

uint64_t curve_hash(const Curve& C) {
    const std::string s = curve_to_json(C).dump();
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Json point_to_json(const Point& P) {
    Json a = Json::array();
    if (P.at_infinity()) a.push_back("inf");
    for (const auto& c : P.c) a.push_back(scalar_to_json(c));
    return a;
}

Json divisor_to_json(const Divisor& D) {
    Json a = Json::array();
    for (const auto& [P, m] : D.terms) {
        Json t;
        t["point"] = point_to_json(P);
        FieldPtr f = P.field();
        t["ext_degree"] = f ? f->degree() : 1;
        t["mult"] = m;
        a.push_back(t);
    }
    return a;
}

Json span_to_json(const GrassPoint& W) {
    Json j;
    Json rows = Json::array();
    for (int i = 0; i < W.dual.rows(); ++i) {
        Json r = Json::array();
        for (const auto& s : W.dual.row(i)) r.push_back(scalar_to_json(s));
        rows.push_back(r);
    }
    j["condition_matrix"] = rows;
    Json pl = Json::array();
    for (const auto& s : W.plucker) pl.push_back(scalar_to_json(s));
    j["plucker"] = pl;
    return j;
}

Json fiber_report_to_json(const FiberReport& r) {
    Json j;
    Json pl = Json::array();
    for (const auto& s : r.W.plucker) pl.push_back(scalar_to_json(s));
    j["W"] = pl;
    j["deg_WC"] = r.WC.degree();
    Json fb = Json::array();
    for (const auto& E : r.fiber) fb.push_back(divisor_to_json(E));
    j["fiber"] = fb;
    j["cardinality"] = r.cardinality;
    j["flags"] = Json{{"nonreduced", r.nonreduced}, {"weierstrass", r.weierstrass}};
    j["field"] = Json{{"p", r.p}, {"ext", r.ext}};
    return j;
}

Json complete_system_to_json(const CompleteSystem& L) {
    Json j;
    j["degree"] = L.d;
    j["dimension"] = L.r;
    j["residual"] = divisor_to_json(L.F);
    Json rows = Json::array();
    for (int i = 0; i < L.basis.rows(); ++i) {
        Json r = Json::array();
        for (const auto& s : L.basis.row(i)) r.push_back(scalar_to_json(s));
        rows.push_back(r);
    }
    j["hyperplane_basis"] = rows;
    j["base_locus"] = divisor_to_json(L.B);
    return j;
}

Json dual_report_to_json(const DualReport& r) {
    Json j;
    Json arr = Json::array();
    for (const auto& s : r.samples) {
        Json o;
        Json p = Json::array(), h = Json::array();
        for (const auto& x : s.param) p.push_back(scalar_to_json(x));
        for (const auto& x : s.hyperplane) h.push_back(scalar_to_json(x));
        o["param"] = p;
        o["hyperplane"] = h;
        o["weight"] = s.weight;
        Json cs = Json::array();
        for (const auto& c : s.contacts)
            cs.push_back(Json{{"point", point_to_json(c.P)}, {"order", c.order}, {"base", c.base}});
        o["contacts"] = cs;
        arr.push_back(o);
    }
    j["samples"] = arr;
    j["total_multiplicity"] = r.total();
    j["swept"] = r.swept;
    j["skipped"] = r.skipped;
    return j;
}

}  // namespace wgauss
