#include "hulldim/jsonio.hpp"

namespace hulldim {

json to_json(const FieldSpec& spec) {
    return json{{"p", spec.p()}, {"e", spec.e()}, {"modulus", spec.modulus()}};
}

json to_json(const Rational& value) {
    return json{{"num", value.num}, {"den", value.den}};
}

json to_json(const FactorizationReport& report) {
    const FieldSpec& spec = *report.spec;
    json scr = json::array();
    for (const Poly& g : report.scr) scr.push_back(to_string(g));
    json pairs = json::array();
    for (const auto& [f, fd] : report.pairs) pairs.push_back(json{to_string(f), to_string(fd)});
    return json{{"field", to_json(spec)},
                {"n", report.n},
                {"lambda", spec.to_string(report.lambda)},
                {"r", report.r},
                {"nbar", report.nbar},
                {"nu", report.nu},
                {"p_nu", report.p_nu},
                {"Lambda", spec.to_string(report.lambda_lifted)},
                {"s", report.s()},
                {"t", report.t()},
                {"scr", scr},
                {"pairs", pairs}};
}

json to_json(const ConstacyclicCode& code, const Poly& dual, const Poly& hull) {
    const FactorizationReport& rep = *code.report;
    return json{{"n", rep.n},
                {"lambda", rep.spec->to_string(rep.lambda)},
                {"exponents", code.exps},
                {"g", to_string(code.g)},
                {"dim", code.dim()},
                {"dual", to_string(dual)},
                {"dual_dim", rep.n - dual.deg()},
                {"hull", to_string(hull)},
                {"hull_dim", rep.n - hull.deg()}};
}

json to_json(const AvgDimReport& report) {
    json j{{"n", report.n},
           {"q", report.q},
           {"r", report.r},
           {"p", report.p},
           {"nu", report.nu},
           {"nbar", report.nbar},
           {"B", report.scr_degree},
           {"EH", to_json(report.avg)},
           {"EH_decimal", report.avg.approx()},
           {"class", to_string(report.bound_class)},
           {"witness", report.witness},
           {"lower", to_json(report.lower)},
           {"upper", to_json(report.upper)}};
    if (report.oracle_avg.has_value()) j["oracle_EH"] = to_json(*report.oracle_avg);
    if (report.oracle_agrees.has_value()) j["oracle_agrees"] = *report.oracle_agrees;
    return j;
}

json to_json(const SweepRow& row) {
    return json{{"n", row.n},
                {"q", row.q},
                {"p", row.p},
                {"nu", row.nu},
                {"nbar", row.nbar},
                {"r", row.r},
                {"gamma", row.gamma},
                {"v2_nbar", row.v2_nbar},
                {"v2_r", row.v2_r},
                {"B", row.B},
                {"EH_num", row.EH.num},
                {"EH_den", row.EH.den},
                {"class", to_string(row.cls)},
                {"lower_num", row.lower.num},
                {"lower_den", row.lower.den},
                {"r_in_Mq", row.r_in_mq},
                {"n_in_Mq", row.n_in_mq}};
}

json to_json(const std::vector<SweepRow>& rows) {
    json arr = json::array();
    for (const SweepRow& row : rows) arr.push_back(to_json(row));
    return arr;
}

} // namespace hulldim
