#include "pdcoh/commands.hpp"

#include "pdcoh/errors.hpp"
#include "pdcoh/isocrystal.hpp"

namespace pdcoh {

namespace {

Json report_shell(const std::string& command) {
    Json r;
    Json engine;
    engine["name"] = kEngineName;
    engine["version"] = kEngineVersion;
    r["engine"] = engine;
    r["command"] = command;
    return r;
}

}  // namespace

Json report_cohomology(const LocalShtukaDatum& datum, CoeffTag coeff, long p, int n) {
    GradedRepSum sum = compactly_supported_cohomology(datum, coeff);
    SplittingReport splitting = splitting_hypothesis_check(datum, p);
    Json params;
    params["coefficients"] = coeff == CoeffTag::Zp ? "zp" : "modp";
    params["p"] = p;
    params["n"] = n;
    Json results;
    results["summands"] = graded_sum_json(sum, datum);
    results["splitting"] = splitting_json(splitting, datum);
    return make_report("cohomology", datum, std::move(params), std::move(results));
}

Json report_boundary(const LocalShtukaDatum& datum) {
    GradedRepSum sum = boundary_cohomology(datum);
    Json results;
    results["summands"] = graded_sum_json(sum, datum);
    results["boundary_empty"] = sum.boundary_empty;
    return make_report("boundary", datum, Json::object(), std::move(results));
}

Json report_schubert(const LocalShtukaDatum& datum, std::uint32_t subset) {
    GradedRepSum sum = schubert_cohomology(datum, subset);
    Json params;
    Json labels = Json::array();
    for (std::size_t i = 0; i < datum.j.size(); ++i)
        if (subset & (1u << i)) labels.push_back(datum.j.labels[i]);
    params["I"] = labels;
    Json results;
    results["summands"] = graded_sum_json(sum, datum);
    Json omega = Json::array();
    for (int oid : omega_set(datum, subset)) omega.push_back(oid);
    results["omega"] = omega;
    return make_report("schubert", datum, std::move(params), std::move(results));
}

Json report_strata(const LocalShtukaDatum& datum, int i) {
    Json params;
    params["i"] = i;
    Json list = Json::array();
    for (const auto& stratum : strata(datum, i)) {
        Json item;
        Json labels = Json::array();
        for (std::size_t a = 0; a < datum.j.size(); ++a)
            if (stratum.subset & (1u << a)) labels.push_back(datum.j.labels[a]);
        item["I"] = labels;
        item["nonempty"] = stratum.nonempty;
        list.push_back(item);
    }
    Json results;
    results["strata"] = list;
    return make_report("strata", datum, std::move(params), std::move(results));
}

Json report_kottwitz(int n, const std::vector<Int>& mu) {
    auto points = acceptable_set_gln(n, mu);
    Json r = report_shell("kottwitz");
    Json params;
    params["n"] = n;
    Json muj = Json::array();
    for (const auto& x : mu) muj.push_back(x.get_str());
    params["mu"] = muj;
    r["parameters"] = params;

    Json list = Json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
        Json item;
        Json slopes = Json::array();
        for (const auto& x : points[i].newton.values) slopes.push_back(rat_string(x));
        item["nu"] = slopes;
        item["kappa"] = points[i].kappa.get_str();
        item["basic"] = is_basic_gln(points[i].newton);
        list.push_back(item);
    }
    // Hasse diagram of the dominance order: cover relations only.
    std::size_t m = points.size();
    std::vector<std::vector<bool>> less(m, std::vector<bool>(m, false));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (a != b) less[a][b] = dominance_leq(points[a].newton, points[b].newton);
    Json edges = Json::array();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (!less[a][b]) continue;
            bool cover = true;
            for (std::size_t c = 0; c < m && cover; ++c)
                if (c != a && c != b && less[a][c] && less[c][b]) cover = false;
            if (cover) {
                Json e;
                e["lower"] = a;
                e["upper"] = b;
                edges.push_back(e);
            }
        }
    Json results;
    results["points"] = list;
    results["hasse"] = edges;
    r["results"] = results;
    return r;
}

Json report_ext(int delta_size, std::uint32_t I, std::uint32_t J, long p, GroupPreset preset,
                int n) {
    ExtAnswer answer = ext1(I, J, delta_size, p, preset);
    Json r = report_shell("ext");
    Json params;
    params["delta_size"] = delta_size;
    auto labels = [&](std::uint32_t mask) {
        Json arr = Json::array();
        for (int a = 0; a < delta_size; ++a)
            if (mask & (1u << a)) arr.push_back("a" + std::to_string(a + 1));
        return arr;
    };
    params["I"] = labels(I);
    params["J"] = labels(J);
    params["p"] = p;
    params["n"] = n;
    params["group"] = preset == GroupPreset::GLnD ? "gln" : "general";
    r["parameters"] = params;
    Json results;
    results["hom"] = (hom(I, J) == HomValue::RankOne) ? "RankOne" : "Zero";
    results["ext1"] = ext_answer_json(answer);
    if (answer.value == ExtValue::HomUnitsOfF && p % 2 == 1)
        results["hom_units_mod_pn"] = hom_units_count(p, n).get_str();
    r["results"] = results;
    return r;
}

Json report_check(const LocalShtukaDatum& datum, const std::vector<long>& primes,
                  const std::vector<int>& exponents) {
    Json euler = Json::array();
    bool euler_pass = true;
    for (long p : primes)
        for (int n : exponents) {
            EulerReport rep = euler_consistency_check(datum, p, n);
            euler_pass = euler_pass && rep.pass;
            euler.push_back(euler_json(rep, datum));
        }
    Json splitting = Json::array();
    for (long p : primes) splitting.push_back(splitting_json(splitting_hypothesis_check(datum, p), datum));
    auto checks = run_invariant_suite(datum);
    Json inv = Json::array();
    for (const auto& c : checks) {
        Json item;
        item["name"] = c.name;
        item["pass"] = c.pass;
        item["detail"] = c.detail;
        inv.push_back(item);
    }
    Json params;
    Json pj = Json::array();
    for (long p : primes) pj.push_back(p);
    Json nj = Json::array();
    for (int n : exponents) nj.push_back(n);
    params["p"] = pj;
    params["n"] = nj;
    Json results;
    results["euler"] = euler;
    results["splitting"] = splitting;
    results["invariants"] = inv;
    results["all_pass"] = euler_pass && all_pass(checks);
    return make_report("check", datum, std::move(params), std::move(results));
}

}  // namespace pdcoh
