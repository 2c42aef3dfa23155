#include "fibrous/json_io.hpp"

#include <fstream>
#include <sstream>

#include "fibrous/dsl.hpp"
#include "fibrous/errors.hpp"

namespace fibrous {

nlohmann::json derivation_to_json(const ChiDerivation& d) {
    nlohmann::json node{
        {"rule", chi_rule_name(d.rule)},
        {"term", render(d.term)},
        {"chi", d.chi},
    };
    nlohmann::json children = nlohmann::json::array();
    for (const auto& c : d.children) {
        nlohmann::json child{{"sign", c.sign}, {"node", derivation_to_json(*c.node)}};
        switch (c.level.kind) {
        case FiberLevel::Kind::transitional:
            child["level"] = {{"type", "transitional"}, {"at", c.level.index}};
            break;
        case FiberLevel::Kind::running:
            child["level"] = {{"type", "running"},
                              {"interval", {c.level.index - 1, c.level.index}}};
            break;
        case FiberLevel::Kind::none:
            break;
        }
        children.push_back(std::move(child));
    }
    node["children"] = std::move(children);
    return node;
}

nlohmann::json eval_report_json(const std::string& expr, const ChiDerivation& d) {
    return nlohmann::json{{"expr", expr}, {"chi", d.chi}, {"derivation", derivation_to_json(d)}};
}

namespace {

std::int64_t integer_field(const nlohmann::json& j, const char* where) {
    if (!j.is_number_integer())
        throw SchemaError(std::string("expected an integer in ") + where);
    return j.get<std::int64_t>();
}

} // namespace

SimplicialComplex complex_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("maximal_simplices"))
        throw SchemaError("expected an object with a \"maximal_simplices\" field");
    const nlohmann::json& ms = j["maximal_simplices"];
    if (!ms.is_array())
        throw SchemaError("\"maximal_simplices\" must be an array of integer arrays");
    std::vector<Simplex> maximal;
    for (const auto& row : ms) {
        if (!row.is_array())
            throw SchemaError("\"maximal_simplices\" must be an array of integer arrays");
        Simplex s;
        for (const auto& v : row)
            s.push_back(integer_field(v, "\"maximal_simplices\""));
        maximal.push_back(std::move(s));
    }
    return close_and_validate(maximal);
}

CwSkeleton cw_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("cell_counts"))
        throw SchemaError("expected an object with a \"cell_counts\" field");
    const nlohmann::json& counts = j["cell_counts"];
    if (!counts.is_array())
        throw SchemaError("\"cell_counts\" must be an array of integers");
    std::vector<std::int64_t> cells;
    for (const auto& v : counts)
        cells.push_back(integer_field(v, "\"cell_counts\""));
    return make_cw_skeleton(std::move(cells));
}

std::variant<SimplicialComplex, CwSkeleton> load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw IoError("read failure on '" + path + "'");

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError("not valid JSON: " + std::string(e.what()));
    }

    if (j.is_object() && j.contains("maximal_simplices"))
        return complex_from_json(j);
    if (j.is_object() && j.contains("cell_counts"))
        return cw_from_json(j);
    throw SchemaError("expected an object with \"maximal_simplices\" or \"cell_counts\"");
}

} // namespace fibrous
