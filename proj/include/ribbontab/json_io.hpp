#pragma once

#include <json.hpp>

#include "ribbontab/fock.hpp"
#include "ribbontab/hfun.hpp"
#include "ribbontab/laurent.hpp"
#include "ribbontab/ribbon.hpp"
#include "ribbontab/symfunc.hpp"
#include "ribbontab/unipotent.hpp"

namespace ribbontab {

// {"-1":"1","2":"3/2"}: exponent strings to rational strings
nlohmann::json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

// {"basis":tag, "terms":[{"partition":[...],"poly":{...}}]}, sorted terms
nlohmann::json symfunc_to_json(const SymFunc& f);
SymFunc symfunc_from_json(const nlohmann::json& j);

// {"n":n, "terms":[{"partition":[...],"poly":{...}}]}
nlohmann::json fock_to_json(const FockVector& v);
FockVector fock_from_json(const nlohmann::json& j);

// {"k":k, "chain":[[...],...]}
nlohmann::json ribbon_to_json(const RibbonTableau& T);

// {"shape":[...], "rows":[[...],...]} bottom-up
nlohmann::json tabloid_to_json(const Tabloid& t);

// {"id":..., "bounds":..., "status":"pass"|"fail", "counterexamples":[...]}
nlohmann::json report_to_json(const IdentityReport& r);

}  // namespace ribbontab
