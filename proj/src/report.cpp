#include "snp/report.hpp"

namespace snp {

nlohmann::ordered_json report_to_json(const Report& report) {
    nlohmann::ordered_json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["system"] = nlohmann::ordered_json{
        {"name", report.system_name}, {"neurons", report.neurons}, {"rules", report.rules}};
    j["matrix"] = report.matrix;
    j["struct_matrix"] = report.struct_matrix;
    if (report.graph_status) {
        nlohmann::ordered_json g;
        g["vertices"] = *report.graph_vertices;
        g["edges"] = *report.graph_edges;
        g["status"] = *report.graph_status;
        j["exploration"] = std::move(g);
    }
    auto verdicts = nlohmann::ordered_json::array();
    for (const Verdict& v : report.verdicts) {
        nlohmann::ordered_json jv;
        jv["property"] = v.property;
        jv["answer"] = answer_to_string(v.answer);
        if (!v.witness.empty()) jv["witness"] = v.witness;
        if (!v.detail.is_null()) jv["detail"] = v.detail;
        verdicts.push_back(std::move(jv));
    }
    j["verdicts"] = std::move(verdicts);
    return j;
}

}  // namespace snp
