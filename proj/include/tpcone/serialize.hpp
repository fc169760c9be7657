#pragma once

#include <json.hpp>

#include "tpcone/classify.hpp"
#include "tpcone/cones.hpp"
#include "tpcone/spectral.hpp"

namespace tpcone {

using Json = nlohmann::ordered_json;

// ConeSpec wire format:
//   {"type":"basic","signs":[1,1,-1]}
//   {"type":"icecream","n":3,"axis":3}
//   {"type":"spanned","generators":[[...],...]}
//   {"type":"exterior_basic","n":3,"j":2,"signs":[...]}
Json cone_to_json(const ConeSpec& k);
ConeSpec cone_from_json(const Json& j);

Json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const Json& j);

Json positivity_to_json(const PositivityClass& pc);
Json spectral_report_to_json(const SpectralReport& r);  // eigenvalues as [re, im]
Json vdp_report_to_json(const VdpReport& r);
Json t_result_to_json(const TMembershipResult& r);
Json eigen_to_json(const EigenDecomposition& d);

// GeneratorSpec interpreter. Kinds:
//   {"kind":"vandermonde","nodes":[1,2,3]}
//   {"kind":"random_stp","n":5,"seed":7}
//   {"kind":"rotation3","theta":0.785}
//   {"kind":"signature_conjugate","base":<spec>,"signs":[1,-1,...]}
//   {"kind":"permutation_similar","base":<spec>,"permutation":[2,1,3]}
//   {"kind":"matrix","entries":[[...],...]}   (inline literal base)
Matrix generate_from_json(const Json& spec);

}  // namespace tpcone
