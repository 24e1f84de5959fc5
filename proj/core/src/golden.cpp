#include "uqaw/golden.hpp"

#include <map>
#include <mutex>

#include "json.hpp"
#include "uqaw/errors.hpp"

namespace uqaw {
namespace golden {

namespace {

// Component tables of Delta(Lambda) over the Z^2 grading.
const char* kDeltaLambda = R"JSON({
  "schema": 1,
  "table": "delta_lambda",
  "arity": 2,
  "components": [
    {"degree": [-1, 1], "terms": [["q^2*(q - q^-1)^2", ["K*F", "Kinv*E"]]]},
    {"degree": [0, 0], "terms": [
      ["1", ["Lambda", "Kinv"]],
      ["1", ["K", "Lambda"]],
      ["-(q + q^-1)", ["K", "Kinv"]]]},
    {"degree": [1, -1], "terms": [["(q - q^-1)^2", ["E", "F"]]]}
  ]
})JSON";

// Component tables of Delta_2(Lambda) over the Z^3 grading.
const char* kDelta2Lambda = R"JSON({
  "schema": 1,
  "table": "delta2_lambda",
  "arity": 3,
  "components": [
    {"degree": [-1, 0, 1], "terms": [["q^2*(q - q^-1)^2", ["K*F", "1", "Kinv*E"]]]},
    {"degree": [-1, 1, 0], "terms": [["q^2*(q - q^-1)^2", ["K*F", "Kinv*E", "Kinv"]]]},
    {"degree": [0, -1, 1], "terms": [["q^2*(q - q^-1)^2", ["K", "K*F", "Kinv*E"]]]},
    {"degree": [0, 0, 0], "terms": [
      ["1", ["K", "K", "Lambda"]],
      ["1", ["K", "Lambda", "Kinv"]],
      ["1", ["Lambda", "Kinv", "Kinv"]],
      ["-(q + q^-1)", ["K", "K", "Kinv"]],
      ["-(q + q^-1)", ["K", "Kinv", "Kinv"]]]},
    {"degree": [0, 1, -1], "terms": [["(q - q^-1)^2", ["K", "E", "F"]]]},
    {"degree": [1, -1, 0], "terms": [["(q - q^-1)^2", ["E", "F", "Kinv"]]]},
    {"degree": [1, 0, -1], "terms": [["(q - q^-1)^2", ["E", "1", "F"]]]}
  ]
})JSON";

// Component tables of the six generator images in the triple tensor product.
const char* kFlatImages = R"JSON({
  "schema": 1,
  "table": "flat_images",
  "arity": 3,
  "images": {
    "A": [
      {"degree": [-1, 1, 0], "terms": [["q^2*(q - q^-1)^2", ["K*F", "Kinv*E", "1"]]]},
      {"degree": [0, 0, 0], "terms": [
        ["1", ["Lambda", "Kinv", "1"]],
        ["1", ["K", "Lambda", "1"]],
        ["-(q + q^-1)", ["K", "Kinv", "1"]]]},
      {"degree": [1, -1, 0], "terms": [["(q - q^-1)^2", ["E", "F", "1"]]]}
    ],
    "B": [
      {"degree": [0, -1, 1], "terms": [["q^2*(q - q^-1)^2", ["1", "K*F", "Kinv*E"]]]},
      {"degree": [0, 0, 0], "terms": [
        ["1", ["1", "Lambda", "Kinv"]],
        ["1", ["1", "K", "Lambda"]],
        ["-(q + q^-1)", ["1", "K", "Kinv"]]]},
      {"degree": [0, 1, -1], "terms": [["(q - q^-1)^2", ["1", "E", "F"]]]}
    ],
    "C": [
      {"degree": [-1, 0, 1], "terms": [["q^2*(q - q^-1)^2", ["K*F", "Kinv", "Kinv*E"]]]},
      {"degree": [0, -1, 1], "terms": [
        ["q*(q - q^-1)*(q^2 - q^-2)", ["K", "F", "Kinv*E"]],
        ["-q*(q - q^-1)^2", ["Lambda", "F", "Kinv*E"]]]},
      {"degree": [0, 0, 0], "terms": [
        ["1", ["Lambda", "1", "Kinv"]],
        ["1", ["K", "1", "Lambda"]],
        ["-(q + q^-1)", ["K", "1", "Kinv"]]]},
      {"degree": [1, -2, 1], "terms": [["-q^3*(q - q^-1)^4", ["E", "K*F^2", "Kinv*E"]]]},
      {"degree": [1, -1, 0], "terms": [
        ["q*(q - q^-1)*(q^2 - q^-2)", ["E", "K*F", "Kinv"]],
        ["-q*(q - q^-1)^2", ["E", "K*F", "Lambda"]]]},
      {"degree": [1, 0, -1], "terms": [["(q - q^-1)^2", ["E", "K", "F"]]]}
    ],
    "alpha": [
      {"degree": [-1, 0, 1], "terms": [["q^2*(q - q^-1)^2", ["K*F", "1", "Lambda*Kinv*E"]]]},
      {"degree": [-1, 1, 0], "terms": [["q^2*(q - q^-1)^2", ["K*F", "Kinv*E", "Kinv*Lambda"]]]},
      {"degree": [0, -1, 1], "terms": [["q^2*(q - q^-1)^2", ["K", "K*F", "Lambda*Kinv*E"]]]},
      {"degree": [0, 0, 0], "terms": [
        ["1", ["Lambda", "Kinv", "Kinv*Lambda"]],
        ["1", ["Lambda", "Lambda", "1"]],
        ["1", ["K", "K", "Lambda^2"]],
        ["1", ["K", "Lambda", "Kinv*Lambda"]],
        ["-(q + q^-1)", ["K", "Kinv", "Kinv*Lambda"]],
        ["-(q + q^-1)", ["K", "K", "Kinv*Lambda"]]]},
      {"degree": [0, 1, -1], "terms": [["(q - q^-1)^2", ["K", "E", "Lambda*F"]]]},
      {"degree": [1, -1, 0], "terms": [["(q - q^-1)^2", ["E", "F", "Lambda*Kinv"]]]},
      {"degree": [1, 0, -1], "terms": [["(q - q^-1)^2", ["E", "1", "Lambda*F"]]]}
    ],
    "beta": [
      {"degree": [-1, 0, 1], "terms": [["q^2*(q - q^-1)^2", ["Lambda*K*F", "1", "Kinv*E"]]]},
      {"degree": [-1, 1, 0], "terms": [["q^2*(q - q^-1)^2", ["Lambda*K*F", "Kinv*E", "Kinv"]]]},
      {"degree": [0, -1, 1], "terms": [["q^2*(q - q^-1)^2", ["Lambda*K", "K*F", "Kinv*E"]]]},
      {"degree": [0, 0, 0], "terms": [
        ["1", ["Lambda^2", "Kinv", "Kinv"]],
        ["1", ["1", "Lambda", "Lambda"]],
        ["1", ["K*Lambda", "K", "Lambda"]],
        ["1", ["K*Lambda", "Lambda", "Kinv"]],
        ["-(q + q^-1)", ["K*Lambda", "Kinv", "Kinv"]],
        ["-(q + q^-1)", ["K*Lambda", "K", "Kinv"]]]},
      {"degree": [0, 1, -1], "terms": [["(q - q^-1)^2", ["Lambda*K", "E", "F"]]]},
      {"degree": [1, -1, 0], "terms": [["(q - q^-1)^2", ["Lambda*E", "F", "Kinv"]]]},
      {"degree": [1, 0, -1], "terms": [["(q - q^-1)^2", ["Lambda*E", "1", "F"]]]}
    ],
    "gamma": [
      {"degree": [-1, 0, 1], "terms": [["q^2*(q - q^-1)^2", ["K*F", "Lambda", "Kinv*E"]]]},
      {"degree": [-1, 1, 0], "terms": [["q^2*(q - q^-1)^2", ["K*F", "Lambda*Kinv*E", "Kinv"]]]},
      {"degree": [0, -1, 1], "terms": [["q^2*(q - q^-1)^2", ["K", "Lambda*K*F", "Kinv*E"]]]},
      {"degree": [0, 0, 0], "terms": [
        ["1", ["Lambda", "Kinv*Lambda", "Kinv"]],
        ["1", ["Lambda", "1", "Lambda"]],
        ["1", ["K", "K*Lambda", "Lambda"]],
        ["1", ["K", "Lambda^2", "Kinv"]],
        ["-(q + q^-1)", ["K", "Kinv*Lambda", "Kinv"]],
        ["-(q + q^-1)", ["K", "K*Lambda", "Kinv"]]]},
      {"degree": [0, 1, -1], "terms": [["(q - q^-1)^2", ["K", "Lambda*E", "F"]]]},
      {"degree": [1, -1, 0], "terms": [["(q - q^-1)^2", ["E", "Lambda*F", "Kinv"]]]},
      {"degree": [1, 0, -1], "terms": [["(q - q^-1)^2", ["E", "Lambda", "F"]]]}
    ]
  }
})JSON";

std::string expand_lambda(std::string s) {
    const std::string key = "Lambda";
    const std::string repl = "((q - q^-1)^2*F*E + q*K + q^-1*Kinv)";
    size_t pos = 0;
    while ((pos = s.find(key, pos)) != std::string::npos) {
        s.replace(pos, key.size(), repl);
        pos += repl.size();
    }
    return s;
}

TElement build_component(const nlohmann::json& comp, int arity) {
    TElement out(arity);
    for (const auto& term : comp.at("terms")) {
        Scalar coeff = Scalar::parse(term.at(0).get<std::string>());
        std::vector<UElement> slots;
        for (const auto& slot : term.at(1))
            slots.push_back(u_normal_form(expand_lambda(slot.get<std::string>()), 1024));
        out = out + t_tensor(slots).scaled(coeff);
    }
    return out;
}

std::map<MultiDegree, TElement> build_table(const nlohmann::json& components, int arity) {
    std::map<MultiDegree, TElement> out;
    for (const auto& comp : components) {
        auto dv = comp.at("degree").get<std::vector<int32_t>>();
        MultiDegree d(dv.begin(), dv.end());
        out.emplace(d, build_component(comp, arity));
    }
    return out;
}

struct Tables {
    std::map<MultiDegree, TElement> delta_lambda;
    std::map<MultiDegree, TElement> delta2_lambda;
    std::map<std::string, std::map<MultiDegree, TElement>> flat;
};

const Tables& tables() {
    static const Tables t = [] {
        Tables out;
        auto dl = nlohmann::json::parse(kDeltaLambda);
        out.delta_lambda = build_table(dl.at("components"), 2);
        auto d2 = nlohmann::json::parse(kDelta2Lambda);
        out.delta2_lambda = build_table(d2.at("components"), 3);
        auto fi = nlohmann::json::parse(kFlatImages);
        for (const auto& [name, comps] : fi.at("images").items())
            out.flat.emplace(name, build_table(comps, 3));
        return out;
    }();
    return t;
}

TElement sum_components(const std::map<MultiDegree, TElement>& comps, int arity) {
    TElement out(arity);
    for (const auto& [d, c] : comps) out = out + c;
    return out;
}

}  // namespace

std::string delta_lambda_json() { return kDeltaLambda; }
std::string delta2_lambda_json() { return kDelta2Lambda; }
std::string flat_images_json() { return kFlatImages; }

TElement delta_lambda() { return sum_components(tables().delta_lambda, 2); }
TElement delta2_lambda() { return sum_components(tables().delta2_lambda, 3); }

TElement flat_image(const std::string& name) {
    auto it = tables().flat.find(name);
    if (it == tables().flat.end())
        throw invalid_argument_error("unknown flat image table: " + name);
    return sum_components(it->second, 3);
}

std::map<MultiDegree, TElement> table_components(const std::string& table) {
    if (table == "delta_lambda") return tables().delta_lambda;
    if (table == "delta2_lambda") return tables().delta2_lambda;
    auto it = tables().flat.find(table);
    if (it == tables().flat.end())
        throw invalid_argument_error("unknown golden table: " + table);
    return it->second;
}

}  // namespace golden
}  // namespace uqaw
