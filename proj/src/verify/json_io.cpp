#include "lemniscate/json_io.hpp"

#include "lemniscate/error.hpp"

#include <cmath>

namespace lemniscate {

Json to_json(const Poly& p) { return Json(p.to_strings()); }

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw DomainError("polynomial JSON must be an array");
    return Poly::from_strings(j.get<std::vector<std::string>>());
}

Json to_json(const RationalFunction& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

RationalFunction rational_function_from_json(const Json& j) {
    return RationalFunction(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

Json to_json(const SeriesTable& t) {
    Json polys = Json::array();
    for (const Poly& p : t.polys()) polys.push_back(to_json(p));
    return Json{{"kind", std::string(to_string(t.kind()))}, {"first_index", t.first_index()}, {"polys", polys}};
}

SeriesTable series_table_from_json(const Json& j) {
    const SeriesKind kind = series_kind_from_string(j.at("kind").get<std::string>());
    std::vector<Poly> polys;
    for (const Json& p : j.at("polys")) polys.push_back(poly_from_json(p));
    SeriesTable t(kind, std::move(polys));
    if (j.at("first_index").get<int>() != t.first_index()) throw DomainError("series table: wrong first_index");
    return t;
}

Json to_json(const DiffExpr& e) {
    Json terms = Json::array();
    for (const auto& [m, c] : e.terms()) {
        std::vector<int> deriv(m.d.begin(), m.d.begin() + e.max_order());
        terms.push_back(Json{{"coeff", to_json(c)}, {"z", m.z}, {"deriv", deriv}});
    }
    return Json{{"half_power", e.half_power()}, {"max_order", e.max_order()}, {"terms", terms}};
}

DiffExpr diff_expr_from_json(const Json& j) {
    const int s = j.at("half_power").get<int>();
    const int max_order = j.value("max_order", kDefaultMaxOrder);
    DiffExpr out(s, max_order);
    for (const Json& t : j.at("terms")) {
        ZMonomial m;
        m.z = t.at("z").get<int>();
        const auto deriv = t.at("deriv").get<std::vector<int>>();
        if (static_cast<int>(deriv.size()) > max_order) throw DomainError("DiffExpr JSON: derivative list too long");
        for (std::size_t i = 0; i < deriv.size(); ++i) m.d[i] = deriv[i];
        out += DiffExpr::term(rational_function_from_json(t.at("coeff")), m, s).with_max_order(max_order);
    }
    return out;
}

Json to_json(const GammaPiExpr& e) {
    Json out = Json::array();
    for (const auto& [key, c] : e.ordered_terms()) {
        out.push_back(Json{{"num", c.numerator().get_str()},
                           {"den", c.denominator().get_str()},
                           {"gamma_exp", key.first},
                           {"pi_exp_x2", key.second}});
    }
    return out;
}

GammaPiExpr gamma_pi_from_json(const Json& j) {
    if (!j.is_array()) throw DomainError("GammaPiExpr JSON must be an array");
    GammaPiExpr out;
    for (const Json& t : j) {
        const BigRational c(mpz_class(t.at("num").get<std::string>()), mpz_class(t.at("den").get<std::string>()));
        out += GammaPiExpr::term(c, t.at("gamma_exp").get<int>(), t.at("pi_exp_x2").get<int>());
    }
    return out;
}

Json to_json(const VerificationReport& r, bool include_runtime) {
    Json j{{"id", r.id},
           {"kind", r.kind},
           {"identity", r.identity},
           {"pass", r.pass},
           {"conjectural", r.conjectural},
           {"tolerance_digits", r.tolerance_digits}};
    if (r.symbolic) {
        j["symbolic_latex"] = r.symbolic->latex();
        j["symbolic_json"] = to_json(*r.symbolic);
    } else {
        j["symbolic_latex"] = nullptr;
        j["symbolic_json"] = nullptr;
    }
    const bool numeric = !r.numeric_value.empty();
    j["numeric_value"] = numeric ? Json(r.numeric_value) : Json(nullptr);
    j["reference_value"] = numeric ? Json(r.reference_value) : Json(nullptr);
    j["deviation"] = numeric ? Json(r.deviation) : Json(nullptr);
    j["rel_deviation"] = numeric ? Json(r.rel_deviation) : Json(nullptr);
    // Two decimals keep the report byte-stable across platforms.
    j["digits_agreed"] = numeric ? Json(std::round(r.digits_agreed * 100) / 100) : Json(nullptr);
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (include_runtime) j["runtime_ms"] = std::round(r.runtime_ms * 1000) / 1000;
    return j;
}

}  // namespace lemniscate
