#include "alba/trace_json.hpp"

namespace alba {
namespace {

nlohmann::json system_json(const System& s, Notation n) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& m : s) out.push_back(to_string(m, n));
    return out;
}

}  // namespace

nlohmann::json to_json(const Step& s, Notation n) {
    return {{"rule", s.rule},
            {"stage", stage_name(s.stage)},
            {"item", s.position.item},
            {"path", s.position.path},
            {"quantifier_depth", s.position.quantifier_depth},
            {"before", system_json(s.before, n)},
            {"after", system_json(s.after, n)}};
}

nlohmann::json to_json(const AlbaResult& r, Notation n) {
    nlohmann::json j;
    j["input"] = to_string(r.input, n);
    j["variables"] = r.epsilon.variables();
    j["epsilon"] = r.epsilon.labels();
    j["strategy"] = {{"decomposition", "every non-pure item"},
                     {"residuation_order", "not, box, dia, at, down"},
                     {"scheduling", "rule class, then rule, then leftmost item, then pre-order position"}};
    j["preprocess_steps"] = nlohmann::json::array();
    for (const auto& s : r.preprocess_steps) j["preprocess_steps"].push_back(to_json(s, n));
    j["branches"] = nlohmann::json::array();
    for (const auto& b : r.branches) {
        nlohmann::json bj;
        bj["preprocessed"] = to_string(b.preprocessed, n);
        bj["i0"] = b.i0;
        bj["i1"] = b.i1;
        bj["steps"] = nlohmann::json::array();
        for (const auto& s : b.steps) bj["steps"].push_back(to_json(s, n));
        bj["reduce"] = system_json(b.reduce, n);
        bj["quasi"] = b.quasi ? nlohmann::json(to_string(*b.quasi, n)) : nlohmann::json(nullptr);
        bj["fo_text"] = b.fo ? nlohmann::json(fol::to_string(*b.fo)) : nlohmann::json(nullptr);
        bj["success"] = b.ok;
        bj["stuck"] = nlohmann::json::array();
        for (const auto& d : b.stuck)
            bj["stuck"].push_back({{"variable", d.variable}, {"item", d.item}, {"reason", d.reason}});
        j["branches"].push_back(std::move(bj));
    }
    j["fo_text"] = r.fo ? nlohmann::json(fol::to_string(*r.fo)) : nlohmann::json(nullptr);
    j["success"] = r.success();
    return j;
}

nlohmann::json classification_json(const Inequality& ineq) {
    nlohmann::json j;
    const auto types = find_order_types(ineq);
    j["sahlqvist"] = !types.empty();
    j["variables"] = order_variables(ineq);
    j["order_types"] = nlohmann::json::array();
    for (const auto& e : types) j["order_types"].push_back(e.labels());
    return j;
}

}  // namespace alba
