#pragma once

#include <json.hpp>

#include <string>

#include "ncdiag/colored.hpp"
#include "ncdiag/measures.hpp"
#include "ncdiag/tensor_map.hpp"
#include "ncdiag/verify.hpp"

namespace ncdiag {

using nlohmann::json;

inline json to_json(const Partition& p) {
    json blocks = json::array();
    for (const auto& blk : p.blocks()) blocks.push_back(blk);
    return json{{"upper", p.upper_count()}, {"lower", p.lower_count()}, {"blocks", blocks}};
}

inline json to_json(const ColoredPartition& cp) {
    json j = to_json(cp.base());
    j["colors"] = cp.color_string();
    return j;
}

inline Partition partition_from_json(const json& j) {
    std::vector<std::vector<int>> blocks;
    for (const auto& blk : j.at("blocks")) blocks.push_back(blk.get<std::vector<int>>());
    return Partition(j.at("upper").get<int>(), j.at("lower").get<int>(), std::move(blocks));
}

inline ColoredPartition colored_from_json(const json& j) {
    return ColoredPartition(partition_from_json(j), j.at("colors").get<std::string>());
}

inline json to_json(const Category& cat) {
    if (cat.is_bar_infinity()) return json{{"kind", "DbarInf"}};
    json j{{"kind", "Ds"}};
    if (cat.s())
        j["s"] = *cat.s();
    else
        j["s"] = "inf";
    return j;
}

inline Category category_from_json(const json& j) {
    const std::string kind = j.value("kind", "Ds");
    if (kind == "DbarInf") return Category::d_bar_infinity();
    if (!j.contains("s") || (j.at("s").is_string() && j.at("s").get<std::string>() == "inf"))
        return Category::d_infinity();
    return Category::d(j.at("s").get<int>());
}

inline json to_json(const DiscreteMeasure& m) {
    json atoms = json::array();
    for (const auto& a : m.atoms())
        atoms.push_back(json{{"re", a.position.real()}, {"im", a.position.imag()},
                             {"w", a.weight}});
    return json{{"atoms", atoms}};
}

inline DiscreteMeasure measure_from_json(const json& j) {
    DiscreteMeasure m;
    for (const auto& a : j.at("atoms"))
        m.add_atom({a.at("re").get<double>(), a.value("im", 0.0)}, a.at("w").get<double>());
    return m;
}

inline json to_json(const VerifyReport& rep) {
    return json{{"claim", rep.claim}, {"s", rep.s_label},       {"R", rep.R},
                {"max_abs_err", rep.max_abs_err}, {"pass", rep.pass}};
}

// Gram output pins big integers as decimal strings.
inline json gram_to_json(const std::vector<ColoredPartition>& diagrams, const IntMatrix& matrix,
                         int rank, const Int& det) {
    json order = json::array();
    for (const auto& d : diagrams) order.push_back(d.encode());
    json rows = json::array();
    for (const auto& row : matrix) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        rows.push_back(r);
    }
    return json{{"order", order}, {"matrix", rows}, {"rank", rank}, {"det", det.get_str()}};
}

}  // namespace ncdiag
