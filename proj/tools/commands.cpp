#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "zc/criterion.hpp"
#include "zc/errors.hpp"
#include "zc/forms.hpp"
#include "zc/forms_json.hpp"
#include "zc/highprec.hpp"
#include "zc/saddle.hpp"

namespace zc::cli {

namespace {

hp::PrecisionContext precision(const RunConfig& cfg, unsigned fallback) {
    hp::PrecisionContext ctx = hp::PrecisionContext::from_env(fallback);
    if (cfg.digits) ctx.digits = cfg.digits;
    ctx.validate();
    return ctx;
}

Json check(const std::string& name, bool pass, Json detail = nullptr) {
    Json j{{"name", name}, {"pass", pass}};
    if (!detail.is_null()) j["detail"] = std::move(detail);
    return j;
}

bool all_pass(const Json& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Json& c) { return c.at("pass").get<bool>(); });
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

std::vector<int> parse_n_range(const std::string& text) {
    std::vector<int> out;
    auto to_int = [&](const std::string& s) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw InputError("bad n range \"" + text + "\"");
        return v;
    };
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        int lo = to_int(text.substr(0, dots)), hi = to_int(text.substr(dots + 2));
        if (lo > hi) throw InputError("empty n range \"" + text + "\"");
        for (int n = lo; n <= hi; ++n) out.push_back(n);
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(to_int(item));
    }
    if (out.empty()) throw InputError("empty n range");
    for (int n : out)
        if (n < 1) throw InputError("n must be >= 1");
    return out;
}

nlohmann::json parse_document(const std::string& text, const std::string& source) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        size_t pos = std::min(e.byte > 0 ? e.byte - 1 : 0, text.size());
        size_t line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n');
        size_t start = text.rfind('\n', pos == 0 ? 0 : pos - 1);
        start = (start == std::string::npos || pos == 0) ? 0 : start + 1;
        size_t end = text.find('\n', start);
        std::string context = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        std::ostringstream os;
        os << source << ":" << line << ":" << (pos - start + 1) << ": malformed JSON near \"" << context << "\"";
        throw InputError(os.str());
    }
}

Outcome cmd_forms(const RunConfig& cfg) {
    if (!cfg.r) throw InputError("forms needs --r");
    forms::FormSpec spec{cfg.a, *cfg.r, cfg.n};
    spec.validate();
    hp::PrecisionContext ctx = precision(cfg, 100);

    auto table = forms::partial_fractions(forms::build_summand(spec));
    auto plain = forms::zeta_form_plain(table);
    auto derived = forms::zeta_form_derived(table);
    auto den_plain = forms::denominator_check(plain);
    auto den_derived = forms::denominator_check(derived);

    Json checks = Json::array();
    bool even_zero = true;
    for (size_t i = 2; i < plain.ell.size(); i += 2) even_zero = even_zero && plain.ell[i] == 0;
    checks.push_back(check("even_zeta_coefficients_zero", even_zero));
    exact::BigRational c1;
    for (long j = -spec.n; j <= spec.n; ++j) c1 += table.at(1, j);
    checks.push_back(check("sum_c1_zero", c1 == 0));
    checks.push_back(check("shared_coefficients", plain.ell == derived.ell));
    checks.push_back(check("denominator_plain", den_plain.pass));
    checks.push_back(check("denominator_derived", den_derived.pass));

    const long tol_exp = static_cast<long>(ctx.digits) * 3 / 5;
    for (auto* form : {&plain, &derived}) {
        auto direct = hp::eval_S_direct(spec, form->kind, ctx);
        Real value = hp::eval_form(*form, ctx);
        WorkingDigits wd(ctx.total());
        Real diff = boost::multiprecision::abs(direct.value - value);
        bool ok = diff < boost::multiprecision::pow(Real(10), -tol_exp);
        checks.push_back(check(form->kind == forms::FormKind::Plain ? "identity_plain" : "identity_derived", ok,
                               Json{{"direct", to_decimal(direct.value, 40)},
                                    {"difference", to_decimal(diff, 6)},
                                    {"tolerance", "1e-" + std::to_string(tol_exp)}}));
    }

    Outcome out;
    out.pass = all_pass(checks);
    out.artifact["spec"] = forms::to_json(spec);
    out.artifact["digits"] = ctx.digits;
    out.artifact["plain"] = forms::to_json(plain);
    out.artifact["derived"] = forms::to_json(derived);
    out.artifact["denominator_plain"] = forms::to_json(den_plain);
    out.artifact["denominator_derived"] = forms::to_json(den_derived);
    out.artifact["checks"] = checks;
    out.artifact["pass"] = out.pass;

    std::ostringstream csv;
    csv << "kind,i,zeta_argument,multiplier,num,den\n";
    for (auto* form : {&plain, &derived}) {
        const char* kind = form->kind == forms::FormKind::Plain ? "plain" : "derived";
        csv << kind << ",0,," << "1," << form->constant.get_num() << ',' << form->constant.get_den() << '\n';
        for (const auto& [i, l] : form->zeta_coeffs())
            csv << kind << ',' << i << ',' << form->zeta_argument(i) << ',' << form->multiplier(i) << ','
                << l.get_num() << ',' << l.get_den() << '\n';
    }
    out.csv = csv.str();
    return out;
}

Outcome cmd_asymptotics(const RunConfig& cfg) {
    saddle::SaddlePlane p{cfg.a, cfg.r ? *cfg.r : 0};
    if (cfg.a < 3 || cfg.a % 2 == 0) throw InputError("a must be odd and >= 3");
    const std::string regime = "a = " + std::to_string(cfg.a) + " < 7 lies outside the large-a regime of the asymptotic estimates";
    if (!cfg.r) p.r = saddle::r_of_a(cfg.a);
    if (cfg.a < 7 && 6L * p.r > cfg.a) throw InputError(regime + "; no r >= 1 satisfies 6r <= a");
    p.validate();
    Outcome out;
    if (cfg.a < 7) out.warnings.push_back(regime);
    saddle::SaddleData d = saddle::compute_constants(p, cfg.digits ? cfg.digits : precision(cfg, 50).digits);
    saddle::AssumptionReport rep = saddle::check_assumptions(d);

    WorkingDigits wd(d.digits + 10);
    const Real tol_root("1e-30"), tol_angle("1e-20");
    Json checks = Json::array();
    checks.push_back(check("mu1_residual", d.mu1_cert.residual < tol_root,
                           Json{{"residual", to_decimal(d.mu1_cert.residual, 6)}}));
    checks.push_back(check("tau0_residual", d.tau0_cert.residual < tol_root,
                           Json{{"residual", to_decimal(d.tau0_cert.residual, 6)}}));
    checks.push_back(check("angle_identity", boost::multiprecision::abs(d.angles.identity_residual) < tol_angle,
                           Json{{"residual", to_decimal(d.angles.identity_residual, 6)}}));
    for (const auto& c : rep.lemma_conditions)
        if (!c.pass) out.warnings.push_back("assumption check failed: " + c.name);
    for (const auto& c : rep.extras)
        if (!c.pass) out.warnings.push_back("diagnostic check failed: " + c.name);

    out.pass = all_pass(checks);
    out.artifact["a"] = p.a;
    out.artifact["r"] = p.r;
    out.artifact["saddle"] = saddle::to_json(d);
    out.artifact["assumptions"] = saddle::to_json(rep);
    out.artifact["checks"] = checks;
    out.artifact["warnings"] = out.warnings;
    out.artifact["pass"] = out.pass;
    return out;
}

Outcome cmd_rank_bound(const RunConfig& cfg) {
    crit::RankBoundCertificate c = crit::zeta_rank_bound(cfg.a, cfg.digits);
    Outcome out;
    out.artifact = Json{{"a", c.a},
                        {"r", c.r},
                        {"digits", c.digits},
                        {"log_beta", c.log_beta},
                        {"log_eps_a", c.log_eps_a},
                        {"log_eps_pp_a", c.log_eps_pp_a},
                        {"tau1", c.tau1},
                        {"tau2", c.tau2},
                        {"bound", c.bound},
                        {"reference", c.reference},
                        {"reference_r", c.reference_r},
                        {"ratio_reference", c.ratio_reference()},
                        {"ratio_reference_r", c.ratio_reference_r()},
                        {"pass", true}};
    std::ostringstream csv;
    csv.precision(15);
    csv << "a,r,tau1,tau2,bound,reference,reference_r\n"
        << c.a << ',' << c.r << ',' << c.tau1 << ',' << c.tau2 << ',' << c.bound << ',' << c.reference << ','
        << c.reference_r << '\n';
    out.csv = csv.str();
    return out;
}

Outcome cmd_rates(const RunConfig& cfg) {
    if (!cfg.r) throw InputError("rates needs --r");
    saddle::SaddlePlane p{cfg.a, *cfg.r};
    p.validate();
    hp::PrecisionContext ctx = precision(cfg, 50);
    saddle::SaddleData d = saddle::compute_constants(p, ctx.digits);
    hp::RateReport rep = hp::measure_rates(cfg.a, *cfg.r, cfg.ns, d, ctx);
    Outcome out;
    out.artifact = hp::to_json(rep);
    out.artifact["pass"] = true;
    out.csv = hp::to_csv(rep);
    return out;
}

Outcome cmd_criterion(const RunConfig& cfg) {
    nlohmann::json doc = parse_document(read_file(cfg.in_path), cfg.in_path);
    std::vector<nlohmann::json> instances;
    if (doc.is_array())
        instances.assign(doc.begin(), doc.end());
    else if (doc.is_object() && doc.contains("instances"))
        instances.assign(doc.at("instances").begin(), doc.at("instances").end());
    else
        instances.push_back(doc);
    Outcome out;
    Json reports = Json::array();
    for (auto& inst : instances) {
        if (cfg.digits && inst.is_object() && !inst.contains("digits")) inst["digits"] = cfg.digits;
        Json r;
        try {
            r = crit::run_instance(inst);
        } catch (const nlohmann::json::exception& e) {
            throw InputError(cfg.in_path + ": " + e.what());
        }
        out.pass = out.pass && r.at("pass").get<bool>();
        reports.push_back(std::move(r));
    }
    out.artifact["source"] = cfg.in_path;
    out.artifact["reports"] = reports;
    out.artifact["pass"] = out.pass;
    return out;
}

}  // namespace zc::cli
