#include "tpcone/serialize.hpp"

#include "tpcone/errors.hpp"
#include "tpcone/generators.hpp"

namespace tpcone {

namespace {

std::vector<int> signs_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("cone spec: signs must be an array");
  return j.get<std::vector<int>>();
}

}  // namespace

Json cone_to_json(const ConeSpec& k) {
  Json j;
  switch (k.kind()) {
    case ConeKind::basic:
      j["type"] = "basic";
      j["signs"] = k.signs();
      break;
    case ConeKind::exterior_basic:
      j["type"] = "exterior_basic";
      j["n"] = k.source_dim();
      j["j"] = k.grade();
      j["signs"] = k.signs();
      break;
    case ConeKind::spanned:
      j["type"] = "spanned";
      j["generators"] = k.generators();
      break;
    default:
      j["type"] = "icecream";
      j["n"] = k.ambient_dim();
      j["axis"] = k.axis();
      break;
  }
  return j;
}

ConeSpec cone_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type")) throw InputError("cone spec: missing type");
  const std::string type = j.at("type").get<std::string>();
  if (type == "basic") return ConeSpec::basic(signs_from_json(j.at("signs")));
  if (type == "exterior_basic")
    return ConeSpec::exterior_basic(j.at("n").get<int>(), j.at("j").get<int>(),
                                    signs_from_json(j.at("signs")));
  if (type == "spanned") return ConeSpec::spanned(j.at("generators").get<std::vector<Vec>>());
  if (type == "icecream") return ConeSpec::ice_cream(j.at("n").get<int>(), j.at("axis").get<int>());
  throw InputError("cone spec: unknown type '" + type + "'");
}

Json matrix_to_json(const Matrix& a) {
  Json rows = Json::array();
  for (int i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < a.cols(); ++k) row.push_back(a(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("matrix json: expected a nonempty 2D array");
  const auto rows = j.get<std::vector<Vec>>();
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows.front().size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InputError("matrix json: ragged rows");
    for (int k = 0; k < c; ++k) m(i, k) = rows[i][k];
  }
  return m;
}

Json positivity_to_json(const PositivityClass& pc) {
  Json j;
  j["nonnegative"] = pc.nonnegative;
  j["positive"] = pc.positive;
  if (pc.sr_signature) {
    Json sig = Json::array();
    for (const OrderSignature& os : *pc.sr_signature)
      sig.push_back(Json{{"sign", os.sign}, {"strict", os.strict}});
    j["sr_signature"] = std::move(sig);
  } else {
    j["sr_signature"] = nullptr;
  }
  if (pc.js_partition)
    j["js_partition"] = pc.js_partition->members;
  else
    j["js_partition"] = nullptr;
  j["tp"] = pc.tp;
  j["stp"] = pc.stp;
  j["tjs"] = pc.tjs;
  j["stjs"] = pc.stjs;
  j["k_checked"] = pc.k_checked;
  return j;
}

namespace {

Json complex_list(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (const Complex& c : v) out.push_back(Json::array({c.real(), c.imag()}));
  return out;
}

Json complex_vectors(const std::vector<std::vector<Complex>>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(complex_list(v));
  return out;
}

}  // namespace

Json spectral_report_to_json(const SpectralReport& r) {
  Json j;
  j["eigenvalues"] = complex_list(r.eigenvalues);
  j["all_real_positive"] = r.all_real_positive;
  j["all_simple"] = r.all_simple;
  j["ratio_residuals"] = r.ratio_residuals;
  Json vars = Json::array();
  for (const SignVariation& sv : r.eigvec_variations)
    vars.push_back(Json::array({sv.s_minus, sv.s_plus}));
  j["eigvec_variations"] = std::move(vars);
  j["combo_checks"] = Json{{"passed", r.combo_passed}, {"total", r.combo_total}};
  j["conjugated"] = r.conjugated;
  j["verdict"] = r.pass ? "pass" : "fail";
  if (!r.pass) j["first_failing_clause"] = r.first_failing_clause;
  return j;
}

Json vdp_report_to_json(const VdpReport& r) {
  Json j;
  j["violations"] = r.violations;
  j["total"] = r.total;
  j["worst_case"] = Json{{"margin", r.worst_margin}, {"x", r.worst_x}};
  j["conjugated"] = r.conjugated;
  j["verdict"] = r.violations == 0 ? "pass" : "fail";
  return j;
}

Json t_result_to_json(const TMembershipResult& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["exact"] = r.exact;
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

Json eigen_to_json(const EigenDecomposition& d) {
  Json j;
  j["eigenvalues"] = complex_list(d.values);
  j["right_eigenvectors"] = complex_vectors(d.right);
  j["left_eigenvectors"] = complex_vectors(d.left);
  return j;
}

Matrix generate_from_json(const Json& spec) {
  if (!spec.is_object() || !spec.contains("kind"))
    throw InputError("generator spec: missing kind");
  const std::string kind = spec.at("kind").get<std::string>();
  if (kind == "vandermonde") return vandermonde(spec.at("nodes").get<std::vector<double>>());
  if (kind == "random_stp")
    return random_stp(spec.at("n").get<int>(), spec.value("seed", std::uint64_t{0}));
  if (kind == "rotation3") return rotation3(spec.at("theta").get<double>());
  if (kind == "signature_conjugate")
    return signature_conjugate(generate_from_json(spec.at("base")),
                               spec.at("signs").get<std::vector<int>>());
  if (kind == "permutation_similar")
    return permutation_similar(generate_from_json(spec.at("base")),
                               spec.at("permutation").get<std::vector<int>>());
  if (kind == "matrix") return matrix_from_json(spec.at("entries"));
  throw InputError("generator spec: unknown kind '" + kind + "'");
}

}  // namespace tpcone
