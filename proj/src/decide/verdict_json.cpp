#include "cqm/verdict_json.hpp"

namespace cqm {

nlohmann::json to_json(const Verdict& v) {
    nlohmann::json j;
    j["verdict"] = to_string(v.kind);
    switch (v.kind) {
    case VerdictKind::Yes: j["witness"] = v.witness; break;
    case VerdictKind::No: j["exhaustive"] = v.exhaustive; break;
    case VerdictKind::Unknown:
        j["budget_spent"] = v.budget_spent;
        if (!v.certificate.empty()) j["certificate"] = v.certificate;
        break;
    case VerdictKind::Infinite: j["certificate"] = v.certificate; break;
    case VerdictKind::Finite: {
        auto& elems = j["elements"] = nlohmann::json::array();
        for (const NormalForm& f : v.elements) elems.push_back(to_string(f));
        break;
    }
    }
    return j;
}

}  // namespace cqm
