#include <cmath>

#include "zc/criterion.hpp"
#include "zc/errors.hpp"

namespace zc::crit {

using Json = nlohmann::ordered_json;
using In = nlohmann::json;

namespace {

const In& need(const In& j, const char* key) {
    if (!j.contains(key)) throw InputError(std::string("instance: missing field \"") + key + "\"");
    return j.at(key);
}

std::vector<Real> real_vector(const In& j) {
    std::vector<Real> v;
    for (const auto& x : j) v.push_back(parse_real_spec(x));
    return v;
}

std::vector<std::vector<Real>> real_matrix(const In& j) {
    std::vector<std::vector<Real>> m;
    for (const auto& row : j) m.push_back(real_vector(row));
    return m;
}

BigInt big(const In& j) {
    if (j.is_string()) return BigInt(j.get<std::string>(), 10);
    if (j.is_number_integer()) return BigInt(j.get<long>());
    throw InputError("expected an integer or a decimal integer string");
}

std::string dec(const Real& x, unsigned d = 20) { return to_decimal(x, d); }

Json run_rational_rank(const In& j) {
    std::vector<std::string> names;
    if (j.contains("symbols")) names = j.at("symbols").get<std::vector<std::string>>();
    SymbolField field(names);
    if (j.contains("values"))
        for (auto& [k, v] : j.at("values").items()) field.values[k] = v.get<std::string>();
    std::vector<SymColumn> cols;
    for (const auto& c : need(j, "columns")) {
        SymColumn col;
        for (const auto& e : c) col.push_back(parse_sym(field, e.get<std::string>()));
        cols.push_back(col);
    }
    RankResult r = rational_rank(field, cols);
    Json out;
    out["symbols"] = field.symbols;
    out["p"] = r.p;
    out["k"] = r.k;
    out["rank"] = r.rank;
    out["kernel_dim"] = r.kernel_dim;
    out["dual_rank"] = r.dual_rank;
    out["routes_agree"] = r.agree();
    Json ker = Json::array();
    for (const auto& v : r.kernel) {
        Json row = Json::array();
        for (const auto& q : v) row.push_back(exact::to_string(q));
        ker.push_back(row);
    }
    out["kernel"] = ker;
    bool pass = r.agree();
    if (j.contains("expected_rank")) {
        out["expected_rank"] = j.at("expected_rank");
        pass = pass && r.rank == j.at("expected_rank").get<int>();
    }
    out["pass"] = pass;
    return out;
}

Json run_lemimprove(const In& j) {
    int a = need(j, "a").get<int>();
    std::vector<std::pair<int, int>> pairs;
    if (j.contains("n")) {
        pairs.emplace_back(j.at("n").get<int>(), need(j, "N").get<int>());
    } else {
        for (int n = 1; 2 * (n + 1) <= a + 3; ++n)
            for (int N = n + 1; N <= 2 * n + 1 && 2 * N <= a + 3; ++N) pairs.emplace_back(n, N);
    }
    Json rows = Json::array();
    bool pass = true;
    for (auto [n, N] : pairs) {
        LemimproveResult r = lemimprove_generate(a, n, N);
        Json xi;
        for (const auto& [s, v] : r.xi) xi["xi" + std::to_string(s)] = format_sym(r.field, v);
        rows.push_back({{"n", n},
                        {"N", N},
                        {"i", r.i},
                        {"j", r.j},
                        {"construction", r.construction},
                        {"recipe_N", r.recipe_N},
                        {"n_measured", r.n_measured},
                        {"N_measured", r.N_measured},
                        {"verified", r.verified()},
                        {"xi", xi}});
        pass = pass && r.verified();
    }
    return Json{{"a", a}, {"cases", rows}, {"pass", pass}};
}

Json run_projective(const In& j) {
    ProjectiveInstance inst{real_matrix(need(j, "basis")), real_vector(need(j, "point"))};
    Projection pr = project(inst.basis, inst.point);
    Json lam = Json::array(), u = Json::array();
    for (const auto& x : pr.lambda) lam.push_back(dec(x));
    for (const auto& x : pr.u) u.push_back(dec(x));
    return Json{{"distance", dec(pr.distance)},
                {"lambda", lam},
                {"u", u},
                {"kappa", dec(kappa_constant(inst.basis))},
                {"pass", true}};
}

Json run_thdist(const In& j) {
    auto basis = real_matrix(need(j, "basis"));
    std::vector<std::vector<long>> pts;
    if (j.contains("sweep")) {
        const auto& s = j.at("sweep");
        pts = approximation_sweep(parse_real_spec(need(s, "x")), need(s, "qmax").get<long>());
        if (s.value("swap", false))
            for (auto& p : pts) std::swap(p[0], p[1]);
    } else {
        pts = need(j, "points").get<std::vector<std::vector<long>>>();
    }
    ThdistReport r = thdist_check(basis, need(j, "tau").get<double>(), need(j, "eps").get<double>(),
                                  need(j, "threshold").get<double>(), pts);
    return Json{{"tau", r.tau},
                {"eps", r.eps},
                {"threshold", r.threshold},
                {"bound_exponent", r.bound_exponent},
                {"checked", r.checked},
                {"violations_above_threshold", r.violations_above},
                {"violations_below_threshold", r.violations_below},
                {"largest_violation_norm", r.largest_violation_norm},
                {"worst_exponent", r.worst_exponent},
                {"pass", r.pass()}};
}

Type2Instance type2_instance(const In& j) {
    Type2Instance inst;
    inst.xi = real_vector(need(j, "xi"));
    inst.tau = need(j, "tau").get<std::vector<double>>();
    const auto& f = need(j, "forms");
    if (f.is_object()) {
        if (inst.xi.size() != 1) throw InputError("convergent forms need k = 1");
        int count = need(f, "count").get<int>();
        int skip = f.value("skip", 1);
        long shift = f.value("corrupt_shift", 0L);
        auto cv = convergents(inst.xi[0], count + skip);
        for (int m = skip; m < count + skip; ++m) {
            inst.Q.push_back(cv[m].second);
            inst.forms.push_back({cv[m].first + shift, cv[m].second});
        }
    } else {
        for (const auto& q : need(j, "Q")) inst.Q.push_back(big(q));
        for (const auto& row : f) {
            std::vector<BigInt> r;
            for (const auto& x : row) r.push_back(big(x));
            inst.forms.push_back(r);
        }
    }
    return inst;
}

Json run_cortype2(const In& j) {
    Type2Instance inst = type2_instance(j);
    Type2Report r = cortype2_verify(inst, need(j, "Q_box").get<double>(), need(j, "eps").get<double>(),
                                    j.value("tol", 0.1), j.value("drift_bound", 0.1));
    return Json{{"hypothesis_ok", r.hypothesis_ok},
                {"fitted_exponents", r.fitted_exponents},
                {"drift", r.drift},
                {"coeff_exponent", r.coeff_exponent},
                {"conclusion_checked", r.conclusion_checked},
                {"Q", r.Q},
                {"eps", r.eps},
                {"tuples", r.tuples},
                {"violations", r.violations},
                {"min_scaled", r.conclusion_checked ? r.min_scaled : 0.0},
                {"identity_residual", r.identity_residual},
                {"pass", r.pass()}};
}

SiegelInstance siegel_instance(const In& j) {
    SiegelInstance inst;
    inst.tau = need(j, "tau").get<std::vector<double>>();
    const auto& f = need(j, "forms");
    if (f.is_object()) {
        Real x = parse_real_spec(need(f, "x"));
        int from = need(f, "from").get<int>(), to = need(f, "to").get<int>();
        std::string second = f.value("second", "next");
        auto cv = convergents(x, to + 2);
        inst.p = 2;
        inst.k = 1;
        inst.points = {{x, Real(1)}};
        for (int n = from; n <= to; ++n) {
            inst.ns.push_back(n);
            inst.Q.push_back(cv[n].second);
            std::vector<BigInt> l1{cv[n].second, -cv[n].first};
            std::vector<BigInt> l2 = second == "x1" ? std::vector<BigInt>{1, 0}
                                                    : std::vector<BigInt>{cv[n + 1].second, -cv[n + 1].first};
            inst.forms.push_back({l1, l2});
        }
    } else {
        inst.points = real_matrix(need(j, "points"));
        inst.k = static_cast<int>(inst.points.size());
        inst.p = inst.points.empty() ? 0 : static_cast<int>(inst.points[0].size());
        inst.ns = need(j, "ns").get<std::vector<int>>();
        for (const auto& q : need(j, "Q")) inst.Q.push_back(big(q));
        for (const auto& per_n : f) {
            std::vector<std::vector<BigInt>> fs;
            for (const auto& row : per_n) {
                std::vector<BigInt> r;
                for (const auto& x : row) r.push_back(big(x));
                fs.push_back(r);
            }
            inst.forms.push_back(fs);
        }
    }
    return inst;
}

Json run_siegel(const In& j) {
    SiegelInstance inst = siegel_instance(j);
    std::vector<std::vector<BigInt>> sub;
    for (const auto& row : need(j, "subspace")) {
        std::vector<BigInt> r;
        for (const auto& x : row) r.push_back(big(x));
        sub.push_back(r);
    }
    std::vector<std::pair<int, double>> boxes;
    if (j.contains("boxes"))
        for (const auto& b : j.at("boxes")) boxes.emplace_back(b.at(0).get<int>(), b.at(1).get<double>());
    SiegelReport r = siegel_verify(inst, sub, boxes);
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"n", row.n},
                        {"det_forms", row.det_forms.get_str()},
                        {"independent", row.independent},
                        {"smallness", row.smallness},
                        {"det_restricted", row.det_restricted.get_str()},
                        {"det_exponent", row.det_exponent}});
    Json bx = Json::array();
    for (const auto& b : r.boxes)
        bx.push_back({{"n", b.n},
                      {"eps", b.eps},
                      {"volume", static_cast<double>(b.volume)},
                      {"points", b.points},
                      {"survivors", b.survivors},
                      {"skipped", b.skipped},
                      {"pass", b.pass()}});
    return Json{{"d", r.d},
                {"target_exponent", r.target_exponent},
                {"fitted_slope", r.fitted_slope},
                {"forms_independent", r.forms_independent},
                {"subspace_ok", r.subspace_ok},
                {"rows", rows},
                {"boxes", bx},
                {"pass", r.pass()}};
}

Json run_oscillation(const In& j) {
    OscillationResult r =
        oscillation_subsequence(need(j, "omega").get<std::vector<double>>(), need(j, "phi").get<std::vector<double>>(),
                                need(j, "eps").get<double>(), need(j, "horizon").get<long>(), j.value("count", -1L));
    return Json{{"count", r.psi.size()}, {"density", r.density}, {"lambda", r.lambda}, {"pass", true}};
}

}  // namespace

Json run_instance(const In& instance) {
    if (!instance.is_object()) throw InputError("instance must be a JSON object");
    const std::string kind = need(instance, "kind").get<std::string>();
    WorkingDigits wd(instance.value("digits", 100u));
    Json out;
    out["kind"] = kind;
    if (instance.contains("name")) out["name"] = instance.at("name");
    Json body;
    if (kind == "rational_rank")
        body = run_rational_rank(instance);
    else if (kind == "lemimprove")
        body = run_lemimprove(instance);
    else if (kind == "projective_distance")
        body = run_projective(instance);
    else if (kind == "thdist")
        body = run_thdist(instance);
    else if (kind == "cortype2")
        body = run_cortype2(instance);
    else if (kind == "siegel")
        body = run_siegel(instance);
    else if (kind == "oscillation")
        body = run_oscillation(instance);
    else
        throw InputError("unknown instance kind \"" + kind + "\"");
    for (auto& [k, v] : body.items()) out[k] = v;
    return out;
}

}  // namespace zc::crit
