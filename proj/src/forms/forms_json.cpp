#include "zc/forms_json.hpp"

#include "zc/errors.hpp"

namespace zc::forms {

Json rational_json(const BigRational& q) {
    Json j;
    j["num"] = q.get_num().get_str();
    j["den"] = q.get_den().get_str();
    return j;
}

BigRational rational_from_json(const Json& j) {
    try {
        return exact::make_rational(BigInt(j.at("num").get<std::string>(), 10), BigInt(j.at("den").get<std::string>(), 10));
    } catch (const Json::exception& e) {
        throw InputError(std::string("bad rational: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw InputError("bad rational digits");
    }
}

Json to_json(const FormSpec& spec) { return Json{{"a", spec.a}, {"r", spec.r}, {"n", spec.n}}; }

Json to_json(const PartialFractionTable& table) {
    Json j;
    j["spec"] = to_json(table.spec);
    Json rows = Json::array();
    for (int i = 1; i <= table.spec.a; ++i)
        for (long p = -table.spec.n; p <= table.spec.n; ++p)
            rows.push_back(Json{{"i", i}, {"j", p}, {"c", rational_json(table.at(i, p))}});
    j["coeffs"] = rows;
    return j;
}

Json to_json(const ZetaLinearForm& form) {
    Json j;
    j["spec"] = to_json(form.spec);
    j["kind"] = form.kind == FormKind::Plain ? "plain" : "double-derived";
    j["constant"] = rational_json(form.constant);
    Json zc = Json::array();
    for (int i = 3; i <= form.spec.a; i += 2)
        zc.push_back(Json{{"i", i},
                          {"zeta_argument", form.zeta_argument(i)},
                          {"multiplier", form.multiplier(i).get_str()},
                          {"ell", rational_json(form.ell[static_cast<size_t>(i)])}});
    j["zeta_coeffs"] = zc;
    return j;
}

Json to_json(const DenominatorReport& rep) {
    Json j;
    j["common_denominator"] = rep.common.get_str();
    Json s = Json::array();
    for (const auto& v : rep.scaled) s.push_back(v.get_str());
    j["scaled_coefficients"] = s;
    j["smallest_exponent"] = rep.smallest_exponent;
    j["pass"] = rep.pass;
    return j;
}

Json to_json(const GrowthReport& rep) {
    Json j;
    j["a"] = rep.a;
    j["r"] = rep.r;
    j["bound"] = rep.bound;
    j["slack"] = rep.slack;
    Json s = Json::array();
    for (const auto& p : rep.series)
        s.push_back(Json{{"n", p.n},
                         {"max_log_over_n", p.max_log_over_n},
                         {"log_constant_over_n", p.log_constant_over_n},
                         {"log_constant_pp_over_n", p.log_constant_pp_over_n},
                         {"exceeds", p.exceeds}});
    j["series"] = s;
    j["pass"] = rep.pass();
    return j;
}

ZetaLinearForm form_from_json(const Json& j) {
    try {
        ZetaLinearForm f;
        f.spec = FormSpec{j.at("spec").at("a").get<int>(), j.at("spec").at("r").get<int>(),
                          j.at("spec").at("n").get<int>()};
        f.spec.validate();
        auto kind = j.at("kind").get<std::string>();
        if (kind == "plain")
            f.kind = FormKind::Plain;
        else if (kind == "double-derived")
            f.kind = FormKind::DoubleDerived;
        else
            throw InputError("unknown form kind '" + kind + "'");
        f.constant = rational_from_json(j.at("constant"));
        f.ell.assign(static_cast<size_t>(f.spec.a + 1), BigRational(0));
        for (const auto& e : j.at("zeta_coeffs")) {
            int i = e.at("i").get<int>();
            if (i < 3 || i > f.spec.a || i % 2 == 0) throw InputError("zeta index out of range");
            f.ell[static_cast<size_t>(i)] = rational_from_json(e.at("ell"));
        }
        return f;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed form: ") + e.what());
    }
}

}  // namespace zc::forms
