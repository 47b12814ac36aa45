#include "json.hpp"

#include "germcalc/atlas.hpp"

namespace germcalc {

std::string export_catalog_json() {
    using nlohmann::ordered_json;

    ordered_json doc;
    doc["format"] = "germcalc-atlas";
    doc["version"] = 1;
    doc["conventions"] = {
        {"syntax", "germ expressions; [expr] is an integer expression in the integer parameters"},
        {"function_parameters",
         "a function parameter appears as a placeholder variable replaced by the normal form of a simple "
         "function of x and y"},
        {"codim_formula", "integer expression; mu(h) is the Milnor number of function parameter h"},
        {"signs", "every real sign choice +/- is taken as +"},
    };

    ordered_json fns = ordered_json::object();
    fns["A_mu"] = {{"normal_form", "y^2+x^[mu+1]"}, {"mu_min", 0}};
    fns["D_mu"] = {{"normal_form", "x^2*y+y^[mu-1]"}, {"mu_min", 4}};
    fns["E6"] = {{"normal_form", SimpleFunction{'E', 6}.text()}, {"mu", 6}};
    fns["E7"] = {{"normal_form", SimpleFunction{'E', 7}.text()}, {"mu", 7}};
    fns["E8"] = {{"normal_form", SimpleFunction{'E', 8}.text()}, {"mu", 8}};
    doc["simple_functions"] = fns;

    ordered_json list = ordered_json::array();
    for (const auto& e : entries()) {
        ordered_json params = ordered_json::array();
        for (const auto& p : e.params)
            params.push_back({{"name", p.name},
                              {"kind", p.kind == AtlasParam::Kind::Integer ? "integer" : "simple_function"},
                              {"min", p.min}});
        ordered_json item = {{"name", e.name},
                             {"table", e.table},
                             {"k_orbit", e.k_orbit},
                             {"template", e.template_text},
                             {"parameters", params},
                             {"codim_formula", e.codim_formula},
                             {"provenance", e.provenance}};
        if (!e.sign_note.empty()) item["sign_note"] = e.sign_note;
        list.push_back(std::move(item));
    }
    doc["entries"] = std::move(list);
    return doc.dump(2);
}

}  // namespace germcalc
