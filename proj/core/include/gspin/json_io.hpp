#pragma once

#include <nlohmann/json.hpp>

#include "gspin/clifford.hpp"
#include "gspin/lfactors.hpp"
#include "gspin/lgroup.hpp"
#include "gspin/localperiod.hpp"
#include "gspin/structure.hpp"

namespace gspin {

using Json = nlohmann::json;

// Exact scalars travel as fraction strings; integers are also accepted on input.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, std::uint32_t p);

Json to_json(const Matrix& m);
// Integer when it fits a machine word, decimal string otherwise.
Json to_json(const SquareClass& c);

// {"field": "Q" | "Fp:<p>", "gram": [[...], ...]}
Json to_json(const QuadraticSpace& space);
QuadraticSpace space_from_json(const Json& j);

// {"basis": "<id>", "terms": [{"indices": [1, 2], "coeff": "-3/2"}, ...]}
Json to_json(const CliffordElement& x);
CliffordElement element_from_json(const Json& j, const BasisPtr& basis);

Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const SatakeClass& c);
SatakeClass satake_from_json(const Json& j);

Json to_json(const LocalInvariants& inv);
Json to_json(const EvenCliffordClassification& c);
Json to_json(const LowRankReport& r);

ParameterDecomposition decomposition_from_json(const Json& summands, DualTarget target);
Json to_json(const ComponentGroupReport& r);
Json to_json(const DualGroupDescriptor& d);

Json to_json(const VerificationReport& r);
// {"case": ..., "q": ..., "satake": [...], "chars": [...], "omega": [re, im]?}
PeriodParams period_params_from_json(const Json& j);
Json to_json(const PeriodParams& p);

}  // namespace gspin
