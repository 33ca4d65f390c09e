#include "liegerbe/serialize.hpp"

namespace liegerbe {

namespace {

Json integer(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

}  // namespace

Json to_json(const Rational& q) { return q.get_str(); }

Json to_json(const QVec& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

Json to_json(const FiniteAbelianGroup& g) {
  Json out = Json::array();
  for (const auto& d : g.invariant_factors) out.push_back(integer(d));
  return out;
}

Json levels_record(const RootSystem& rs, const Center& c, const CenterSubgroup& z, const FundamentalLevelTable* ell_f) {
  Json j;
  j["group"] = classical_name(rs.type(), c, z);
  j["type"] = rs.type().name();
  j["center_invariants"] = to_json(c.group());
  j["subgroup"] = subgroup_id(c, z);
  Json gens = Json::array();
  for (auto a : z.members)
    if (a != 0) gens.push_back(to_json(c.element(a).rep));
  j["subgroup_elements"] = gens;
  j["subgroup_order"] = z.order();
  j["ell_b"] = integer(z.ell_b);
  Json prov;
  prov["ell_b"] = "computed";
  if (ell_f) {
    if (auto rec = ell_f->find(rs.type(), subgroup_id(c, z))) {
      j["ell_f"] = rec->ell_f;
      prov["ell_f"] = rec->source;
    }
  }
  j["provenance"] = prov;
  return j;
}

Json obstruction_record(const RootSystem& rs, const Center& c, const CenterSubgroup& z, const Integer& level,
                        const FundamentalLevelTable* ell_f) {
  const auto rep = obstruction_report(rs, c, z, level, ell_f);
  Json j = levels_record(rs, c, z, ell_f);
  j["level"] = integer(level);
  j["admits"] = rep.admits;
  j["obstruction_order"] = integer(rep.order);
  return j;
}

Json to_json(const CorollaryTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json j;
    j["group"] = r.name;
    j["type"] = r.type.name();
    j["subgroup"] = r.subgroup;
    j["order"] = r.order;
    j["ell_b"] = integer(r.ell_b);
    j["listed"] = r.listed ? Json(*r.listed) : Json(nullptr);
    if (r.su) j["su_condition"] = *r.su;
    if (r.ell_f) {
      j["ell_f"] = *r.ell_f;
      j["ell_f_source"] = r.ell_f_source;
      j["basic_gerbe_admits"] = r.basic_gerbe_admits;
    } else if (r.ell_b == 1 || r.ell_b > 2) {
      j["basic_gerbe_admits"] = r.ell_b == 1;
    }
    rows.push_back(j);
  }
  Json out;
  out["rows"] = rows;
  out["ell_f_loaded"] = t.ell_f_loaded;
  out["su_violations"] = t.su_violations;
  out["list_mismatches"] = t.list_mismatches;
  return out;
}

Json to_json(const CocycleReport& r, std::optional<double> integral_eta) {
  Json j;
  j["group"] = r.group;
  j["samples"] = r.samples;
  j["h"] = r.h;
  j["seed"] = r.config.seed;
  j["wedge"] = r.config.wedge == WedgeConvention::Determinant ? "determinant" : "averaged";
  j["tolerances"] = {{"cocycle_tol", r.config.cocycle_tol},
                     {"algebra_tol", r.config.algebra_tol},
                     {"integral_tol", r.config.integral_tol}};
  j["sign"] = r.sign;
  j["max_residuals"] = {{"d_eta", r.max_d_eta},
                        {"d_omega_vs_partial_eta", r.max_d_omega_vs_partial_eta},
                        {"partial_omega", r.max_partial_omega}};
  if (integral_eta) j["integral_eta"] = *integral_eta;
  j["passed"] = r.passed;
  if (r.witness) j["witness"] = {{"criterion", r.witness->first}, {"sample", r.witness->second}};
  return j;
}

}  // namespace liegerbe
