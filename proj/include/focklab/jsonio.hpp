#pragma once

// JSON encodings.
//   ChargedPartition  {"lambda": [4,3,3,1,1], "charge": -1}
//   Maya              {"window_lo": -11, "blacks": [5,1,-1,-7,-9]}   (doubled positions)
//   vector            [{"state": <ChargedPartition>, "coeff": "num/den"}, ...]
//   q vector          coeff is {"q^k": "num/den", ...}

#include "json.hpp"

#include "focklab/fockvec.hpp"
#include "focklab/symfunc.hpp"

namespace focklab {

using json = nlohmann::ordered_json;

json to_json(const ChargedPartition& cp);
ChargedPartition charged_from_json(const json& j);

json to_json(const MayaSpec& m);
MayaSpec maya_from_json(const json& j);

json to_json(const RVec& v);
json to_json(const QVec& v);
RVec rvec_from_json(const json& j);

json to_json(const MultiPoly& p);  // [{"exponents": [...], "coeff": "num/den"}, ...]

}  // namespace focklab
