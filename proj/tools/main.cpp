#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tpcone/errors.hpp"
#include "tpcone/matrix_io.hpp"
#include "tpcone/serialize.hpp"

namespace {

using tpcone::Json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tpcone::InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

tpcone::Vec parse_vector(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',' || c == ';') c = ' ';
  std::istringstream in(cleaned);
  tpcone::Vec v;
  double x;
  while (in >> x) v.push_back(x);
  if (!in.eof() || v.empty()) throw tpcone::InputError("cannot parse vector: '" + text + "'");
  return v;
}

void print_table(std::ostream& out, const Json& j, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      print_table(out, value, prefix.empty() ? key : prefix + "." + key);
  } else if (j.is_array() && !j.empty() && j.front().is_array()) {
    out << prefix << ":\n";
    for (const auto& row : j) {
      out << " ";
      for (const auto& v : row) out << " " << v.dump();
      out << "\n";
    }
  } else {
    out << prefix << " = " << j.dump() << "\n";
  }
}

struct Emitter {
  std::string format = "json";

  void operator()(const Json& report) const {
    if (format == "table")
      print_table(std::cout, report);
    else
      std::cout << report.dump(2) << "\n";
  }
};

Json envelope(const std::string& command, const std::string& digest, double tol,
              std::uint64_t seed, const std::string& verdict) {
  Json j;
  j["command"] = command;
  j["input_digest"] = digest;
  j["tol"] = tol;
  j["seed"] = seed;
  j["verdict"] = verdict;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exterior powers, total-positivity classification and spectral verification"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --format after the subcommand name

  Emitter emit;
  app.add_option("--format", emit.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  int exit_code = 0;

  // ---- classify ----------------------------------------------------------
  auto* c_classify = app.add_subcommand("classify", "Positivity-hierarchy flags of a matrix");
  std::string classify_path;
  int classify_k = 0;
  double classify_tol = tpcone::kDefaultTol;
  c_classify->add_option("matrix", classify_path, "Matrix file")->required();
  c_classify->add_option("--k", classify_k, "Highest compound order to examine (default n)");
  c_classify->add_option("--tol", classify_tol, "Comparison tolerance")->capture_default_str();
  c_classify->callback([&] {
    const std::string bytes = slurp(classify_path);
    const tpcone::Matrix a = tpcone::parse_matrix(bytes);
    const int k = classify_k > 0 ? classify_k : a.rows();
    const tpcone::PositivityClass pc = tpcone::classify(a, k, classify_tol);
    Json rep = envelope("classify", fnv1a_hex(bytes), classify_tol, 0, "ok");
    rep.update(tpcone::positivity_to_json(pc));
    emit(rep);
  });

  // ---- compound ----------------------------------------------------------
  auto* c_compound = app.add_subcommand("compound", "j-th compound matrix");
  std::string compound_path;
  int compound_j = 1;
  std::uint64_t compound_cap = tpcone::kDefaultCompoundEntryCap;
  c_compound->add_option("matrix", compound_path, "Matrix file")->required();
  c_compound->add_option("--j", compound_j, "Compound order")->required();
  c_compound->add_option("--max-entries", compound_cap, "Compound body entry cap")
      ->capture_default_str();
  c_compound->callback([&] {
    const std::string bytes = slurp(compound_path);
    const tpcone::Matrix a = tpcone::parse_matrix(bytes);
    const tpcone::CompoundMatrix c = tpcone::compound(a, compound_j, compound_cap);
    Json rep = envelope("compound", fnv1a_hex(bytes), tpcone::kDefaultTol, 0, "ok");
    rep["n"] = c.n;
    rep["j"] = c.j;
    rep["body"] = tpcone::matrix_to_json(c.body);
    emit(rep);
  });

  // ---- spectrum ----------------------------------------------------------
  auto* c_spectrum = app.add_subcommand("spectrum", "Dense eigen-decomposition");
  std::string spectrum_path;
  c_spectrum->add_option("matrix", spectrum_path, "Matrix file")->required();
  c_spectrum->callback([&] {
    const std::string bytes = slurp(spectrum_path);
    const tpcone::Matrix a = tpcone::parse_matrix(bytes);
    Json rep = envelope("spectrum", fnv1a_hex(bytes), tpcone::kDefaultTol, 0, "ok");
    rep.update(tpcone::eigen_to_json(tpcone::eigen(a)));
    emit(rep);
  });

  // ---- verify-gk ---------------------------------------------------------
  auto* c_gk = app.add_subcommand("verify-gk", "Spectral verification for STP/STJS matrices");
  std::string gk_path;
  double gk_tol = tpcone::kEigenTol;
  int gk_samples = 200;
  std::uint64_t gk_seed = 0;
  c_gk->add_option("matrix", gk_path, "Matrix file")->required();
  c_gk->add_option("--tol", gk_tol, "Residual/simplicity tolerance")->capture_default_str();
  c_gk->add_option("--combo-samples", gk_samples, "Eigenvector combination samples")
      ->capture_default_str();
  c_gk->add_option("--seed", gk_seed, "Sampling seed")->capture_default_str();
  c_gk->callback([&] {
    const std::string bytes = slurp(gk_path);
    const tpcone::Matrix a = tpcone::parse_matrix(bytes);
    const tpcone::SpectralReport r = tpcone::gk_verify(a, gk_tol, gk_samples, gk_seed);
    Json rep = envelope("verify-gk", fnv1a_hex(bytes), gk_tol, gk_seed, r.pass ? "pass" : "fail");
    rep.update(tpcone::spectral_report_to_json(r));
    emit(rep);
    if (!r.pass) exit_code = 1;
  });

  // ---- verify-vdp --------------------------------------------------------
  auto* c_vdp = app.add_subcommand("verify-vdp", "Variation-diminishing trials");
  std::string vdp_path;
  int vdp_trials = 1000;
  std::uint64_t vdp_seed = 0;
  double vdp_tol = tpcone::kDefaultTol;
  c_vdp->add_option("matrix", vdp_path, "Matrix file")->required();
  c_vdp->add_option("--trials", vdp_trials, "Random trial count")->capture_default_str();
  c_vdp->add_option("--seed", vdp_seed, "Sampling seed")->capture_default_str();
  c_vdp->add_option("--tol", vdp_tol, "Comparison tolerance")->capture_default_str();
  c_vdp->callback([&] {
    const std::string bytes = slurp(vdp_path);
    const tpcone::Matrix a = tpcone::parse_matrix(bytes);
    const tpcone::VdpReport r = tpcone::vdp_check(a, vdp_trials, vdp_seed, vdp_tol);
    Json rep = envelope("verify-vdp", fnv1a_hex(bytes), vdp_tol, vdp_seed,
                        r.violations == 0 ? "pass" : "fail");
    rep.update(tpcone::vdp_report_to_json(r));
    emit(rep);
    if (r.violations != 0) exit_code = 1;
  });

  // ---- cone --------------------------------------------------------------
  auto* c_cone = app.add_subcommand("cone", "Cone membership, duality and T-set queries");
  std::string cone_path, chain_path, contains_vec, t_vec;
  bool want_adjoint = false, want_angle = false;
  int cone_grade = 0, cone_budget = 10000;
  std::uint64_t cone_seed = 0;
  double cone_tol = tpcone::kDefaultTol;
  std::string cone_policy = "auto";
  auto* spec_opt = c_cone->add_option("spec", cone_path, "Cone spec JSON file");
  c_cone->add_option("--chain", chain_path, "JSON file with an array of cone specs (grades 1..j)");
  c_cone->add_option("--contains", contains_vec, "Point to test against the cone");
  c_cone->add_flag("--adjoint", want_adjoint, "Emit the adjoint cone");
  c_cone->add_flag("--max-angle", want_angle, "Emit the maximal angle");
  c_cone->add_option("--t", t_vec, "Vector for the T-set membership search");
  c_cone->add_option("--grade", cone_grade, "Grade for --t on non-exterior-basic cones");
  c_cone->add_option("--budget", cone_budget, "Search budget")->capture_default_str();
  c_cone->add_option("--seed", cone_seed, "Search seed")->capture_default_str();
  c_cone->add_option("--tol", cone_tol, "Comparison tolerance")->capture_default_str();
  c_cone->add_option("--policy", cone_policy, "T-set decision route")
      ->check(CLI::IsMember({"auto", "exact", "mc"}))
      ->capture_default_str();
  c_cone->callback([&] {
    const bool chained = !chain_path.empty();
    if (chained == static_cast<bool>(*spec_opt))
      throw tpcone::InputError("cone: pass exactly one of <spec> or --chain");
    const std::string bytes = slurp(chained ? chain_path : cone_path);
    const Json parsed = Json::parse(bytes);
    const tpcone::TSearchPolicy policy = cone_policy == "exact"
                                             ? tpcone::TSearchPolicy::exact_only
                                             : (cone_policy == "mc" ? tpcone::TSearchPolicy::monte_carlo
                                                                    : tpcone::TSearchPolicy::automatic);
    Json rep = envelope("cone", fnv1a_hex(bytes), cone_tol, cone_seed, "ok");
    if (chained) {
      if (!parsed.is_array()) throw tpcone::InputError("cone chain file must hold a JSON array");
      std::vector<tpcone::ConeSpec> ks;
      for (const Json& cj : parsed) ks.push_back(tpcone::cone_from_json(cj));
      if (t_vec.empty()) throw tpcone::InputError("cone --chain requires --t");
      rep["t_chain_membership"] = tpcone::t_result_to_json(tpcone::t_chain_membership(
          parse_vector(t_vec), ks, cone_budget, cone_seed, policy, cone_tol));
    } else {
      const tpcone::ConeSpec k = tpcone::cone_from_json(parsed);
      if (!contains_vec.empty())
        rep["contains"] = tpcone::to_string(tpcone::contains(k, parse_vector(contains_vec), cone_tol));
      if (want_adjoint) rep["adjoint"] = tpcone::cone_to_json(tpcone::adjoint(k));
      if (want_angle) {
        const tpcone::MaxAngle ma = tpcone::max_angle(k, 2048, cone_seed);
        rep["max_angle"] = Json{{"radians", ma.radians}, {"exact", ma.exact}};
      }
      if (!t_vec.empty())
        rep["t_membership"] = tpcone::t_result_to_json(tpcone::t_membership(
            parse_vector(t_vec), k, cone_grade, cone_budget, cone_seed, policy, cone_tol));
    }
    emit(rep);
  });

  // ---- generate ----------------------------------------------------------
  auto* c_gen = app.add_subcommand("generate", "Construct corpus matrices from a generator spec");
  std::string gen_spec_path, gen_out;
  c_gen->add_option("spec", gen_spec_path, "Generator spec JSON file")->required();
  c_gen->add_option("-o,--output", gen_out, "Write the matrix to this file (text format)");
  c_gen->callback([&] {
    const std::string bytes = slurp(gen_spec_path);
    const Json spec = Json::parse(bytes);
    const tpcone::Matrix m = tpcone::generate_from_json(spec);
    const std::uint64_t seed = spec.is_object() ? spec.value("seed", std::uint64_t{0}) : 0;
    Json rep = envelope("generate", fnv1a_hex(bytes), tpcone::kDefaultTol, seed, "ok");
    rep["matrix"] = tpcone::matrix_to_json(m);
    if (!gen_out.empty()) {
      tpcone::write_matrix_file(gen_out, m);
      rep["output"] = gen_out;
    }
    emit(rep);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
