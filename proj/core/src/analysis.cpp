#include "polyfan/analysis.hpp"

#include <iomanip>
#include <sstream>

namespace polyfan {

AnalysisReport analyze(const FanoPolytope& P, double tol) {
  AnalysisReport rep;
  rep.name = P.name();
  rep.dim = P.dim();
  rep.volume = volume(P);

  const StabilityReport stab = greatest_ricci_lower_bound(P);
  rep.barycenter = stab.barycenter;
  rep.R = stab.R;
  rep.critical_facet = stab.critical_facet;
  rep.tied_critical_facets = stab.tied_critical_facets;
  rep.destabilizer = stab.destabilizer;
  rep.exit_point = stab.exit_point;
  rep.is_ke = is_kahler_einstein(P).is_ke;

  const SolitonResult sol = solve_soliton(P, tol);
  rep.soliton_vector = sol.a_star;
  rep.soliton_grad_norm = sol.grad_norm;
  rep.soliton_iterations = sol.iterations;
  rep.soliton_hessian_condition = sol.hessian_condition;
  rep.soliton_converged = sol.converged;

  for (Eigen::Index i = 0; i < rep.barycenter.size(); ++i)
    rep.futaki_basis_values.push_back(rep.barycenter[i]);
  return rep;
}

namespace {

nlohmann::ordered_json rat_vector_json(const RatVector& v) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(rational_to_string(v[i]));
  return arr;
}

RatVector rat_vector_from_json(const nlohmann::ordered_json& arr) {
  RatVector v(static_cast<Eigen::Index>(arr.size()));
  Eigen::Index i = 0;
  for (const auto& e : arr) v[i++] = parse_rational(e.get<std::string>());
  return v;
}

}  // namespace

nlohmann::ordered_json report_to_json(const AnalysisReport& rep) {
  nlohmann::ordered_json doc;
  if (!rep.name.empty()) doc["name"] = rep.name;
  doc["dim"] = rep.dim;
  doc["volume"] = {{"exact", rational_to_string(rep.volume)},
                   {"value", rational_to_double(rep.volume)}};
  doc["barycenter"] = rat_vector_json(rep.barycenter);
  doc["is_KE"] = rep.is_ke;
  doc["R"] = rational_to_string(rep.R);
  doc["critical_facet"] =
      rep.critical_facet ? nlohmann::ordered_json(*rep.critical_facet) : nullptr;
  doc["tied_critical_facets"] = rep.tied_critical_facets;
  if (rep.destabilizer) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < rep.destabilizer->size(); ++i)
      arr.push_back(numerator((*rep.destabilizer)[i]).convert_to<std::int64_t>());
    doc["destabilizer"] = arr;
  } else {
    doc["destabilizer"] = nullptr;
  }
  doc["exit_point"] = rep.exit_point ? rat_vector_json(*rep.exit_point)
                                     : nlohmann::ordered_json(nullptr);

  nlohmann::ordered_json sol;
  sol["vector"] = std::vector<double>(rep.soliton_vector.data(),
                                      rep.soliton_vector.data() + rep.soliton_vector.size());
  sol["grad_norm"] = rep.soliton_grad_norm;
  sol["iterations"] = rep.soliton_iterations;
  sol["hessian_condition"] = rep.soliton_hessian_condition;
  sol["converged"] = rep.soliton_converged;
  doc["soliton"] = sol;

  nlohmann::ordered_json fut = nlohmann::ordered_json::array();
  for (const Rat& r : rep.futaki_basis_values) fut.push_back(rational_to_string(r));
  doc["futaki_basis_values"] = fut;
  return doc;
}

AnalysisReport report_from_json(const nlohmann::ordered_json& doc) {
  AnalysisReport rep;
  if (doc.contains("name")) rep.name = doc["name"].get<std::string>();
  rep.dim = doc["dim"].get<int>();
  rep.volume = parse_rational(doc["volume"]["exact"].get<std::string>());
  rep.barycenter = rat_vector_from_json(doc["barycenter"]);
  rep.is_ke = doc["is_KE"].get<bool>();
  rep.R = parse_rational(doc["R"].get<std::string>());
  if (!doc["critical_facet"].is_null()) rep.critical_facet = doc["critical_facet"].get<int>();
  rep.tied_critical_facets = doc["tied_critical_facets"].get<std::vector<int>>();
  if (!doc["destabilizer"].is_null()) {
    RatVector d(static_cast<Eigen::Index>(doc["destabilizer"].size()));
    Eigen::Index i = 0;
    for (const auto& e : doc["destabilizer"]) d[i++] = Rat(e.get<std::int64_t>());
    rep.destabilizer = d;
  }
  if (!doc["exit_point"].is_null()) rep.exit_point = rat_vector_from_json(doc["exit_point"]);

  const auto& sol = doc["soliton"];
  const auto vec = sol["vector"].get<std::vector<double>>();
  rep.soliton_vector = Eigen::Map<const Eigen::VectorXd>(vec.data(),
                                                         static_cast<Eigen::Index>(vec.size()));
  rep.soliton_grad_norm = sol["grad_norm"].get<double>();
  rep.soliton_iterations = sol["iterations"].get<int>();
  rep.soliton_hessian_condition = sol["hessian_condition"].get<double>();
  rep.soliton_converged = sol["converged"].get<bool>();

  for (const auto& e : doc["futaki_basis_values"])
    rep.futaki_basis_values.push_back(parse_rational(e.get<std::string>()));
  return rep;
}

namespace {

std::string rat_vector_text(const RatVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rational_to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

std::string report_to_text(const AnalysisReport& rep) {
  std::ostringstream out;
  out << std::setprecision(12);
  out << "polytope " << (rep.name.empty() ? "(unnamed)" : rep.name) << "  dim " << rep.dim << "\n";
  out << "  volume          = " << rational_to_string(rep.volume) << "  ("
      << rational_to_double(rep.volume) << ")\n";
  out << "  barycenter      = " << rat_vector_text(rep.barycenter) << "\n";
  out << "  Kahler-Einstein : " << (rep.is_ke ? "yes" : "no") << "\n";
  out << "  R               = " << rational_to_string(rep.R) << "  ("
      << rational_to_double(rep.R) << ")\n";
  if (rep.critical_facet) {
    out << "  critical facet  : index " << *rep.critical_facet;
    if (rep.tied_critical_facets.size() > 1) {
      out << "  (tied:";
      for (int j : rep.tied_critical_facets) out << " " << j;
      out << ")";
    }
    out << "\n";
    out << "  destabilizer    = " << rat_vector_text(*rep.destabilizer) << "\n";
    out << "  exit point Q    = " << rat_vector_text(*rep.exit_point) << "\n";
  } else {
    out << "  critical facet  : none (R = 1)\n";
  }
  out << "  soliton a*      = (";
  for (Eigen::Index i = 0; i < rep.soliton_vector.size(); ++i) {
    if (i) out << ", ";
    out << rep.soliton_vector[i];
  }
  out << ")\n";
  out << "  soliton stats   : iterations " << rep.soliton_iterations << ", |grad|/F "
      << rep.soliton_grad_norm << ", hessian condition " << rep.soliton_hessian_condition
      << (rep.soliton_converged ? "" : "  [NOT CONVERGED]") << "\n";
  out << "  futaki basis    = (";
  for (std::size_t i = 0; i < rep.futaki_basis_values.size(); ++i) {
    if (i) out << ", ";
    out << rational_to_string(rep.futaki_basis_values[i]);
  }
  out << ")\n";
  return out.str();
}

}  // namespace polyfan
