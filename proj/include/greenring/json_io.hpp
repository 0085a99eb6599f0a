#pragma once

#include <json.hpp>

#include "cyclotomic.hpp"
#include "group.hpp"
#include "verify.hpp"

namespace greenring {

using Json = nlohmann::ordered_json;

// Exact wire form: conductor plus coefficient strings.
inline Json cyclo_json(const Cyclo& v) {
    Json coeffs = Json::array();
    for (auto& c : v.coeffs()) coeffs.push_back(rat_to_string(c));
    return Json{{"conductor", v.conductor()}, {"coeffs", coeffs}};
}

inline Json group_json(const GroupPtr& G) {
    Json class_sizes = Json::array();
    Json rep_orders = Json::array();
    for (int c = 0; c < G->num_classes(); ++c) {
        class_sizes.push_back(G->classes[c].size());
        rep_orders.push_back(G->elem_order[G->class_rep[c]]);
    }
    return Json{{"name", G->name},
                {"order", G->n},
                {"exponent", G->exponent},
                {"class_count", G->num_classes()},
                {"class_sizes", class_sizes},
                {"class_representative_orders", rep_orders}};
}

inline Json suite_json(const verify::Suite& s) {
    Json cases = Json::array();
    for (auto& c : s.cases) {
        Json e{{"label", c.label}, {"pass", c.pass}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        cases.push_back(std::move(e));
    }
    return Json{{"name", s.name},
                {"passed", s.passed()},
                {"total", s.cases.size()},
                {"ok", s.ok()},
                {"cases", cases}};
}

} // namespace greenring
