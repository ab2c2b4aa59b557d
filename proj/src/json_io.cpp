#include "ribbontab/json_io.hpp"

#include <stdexcept>

namespace ribbontab {

using nlohmann::json;

json laurent_to_json(const LaurentPoly& p) {
    json j = json::object();
    for (const auto& [e, c] : p.terms) j[std::to_string(e)] = c.get_str();
    return j;
}

LaurentPoly laurent_from_json(const json& j) {
    LaurentPoly p;
    for (const auto& [key, val] : j.items())
        p.add_term(std::stoi(key), mpq_class(val.get<std::string>()));
    return p;
}

json symfunc_to_json(const SymFunc& f) {
    json terms = json::array();
    for (const auto& [lam, c] : f.coeffs)
        terms.push_back({{"partition", lam}, {"poly", laurent_to_json(c)}});
    return {{"basis", basis_name(f.basis)}, {"terms", terms}};
}

SymFunc symfunc_from_json(const json& j) {
    SymFunc f(basis_from_string(j.at("basis").get<std::string>()));
    for (const auto& t : j.at("terms"))
        f.add_term(t.at("partition").get<Partition>(), laurent_from_json(t.at("poly")));
    return f;
}

json fock_to_json(const FockVector& v) {
    json terms = json::array();
    for (const auto& [lam, c] : v.coeffs)
        terms.push_back({{"partition", lam}, {"poly", laurent_to_json(c)}});
    return {{"n", v.n}, {"terms", terms}};
}

FockVector fock_from_json(const json& j) {
    FockVector v(j.at("n").get<int>());
    for (const auto& t : j.at("terms"))
        v.add_term(t.at("partition").get<Partition>(), laurent_from_json(t.at("poly")));
    return v;
}

json ribbon_to_json(const RibbonTableau& T) { return {{"k", T.k}, {"chain", T.chain}}; }

json tabloid_to_json(const Tabloid& t) { return {{"shape", t.shape()}, {"rows", t.rows}}; }

json report_to_json(const IdentityReport& r) {
    return {{"id", r.id},
            {"bounds", r.bounds},
            {"status", r.pass ? "pass" : "fail"},
            {"counterexamples", r.counterexamples}};
}

}  // namespace ribbontab
