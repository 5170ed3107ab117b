#include "kbar/report.hpp"

namespace kbar {

nlohmann::json json_int(const Int& x) {
  if (x.fits_slong_p()) return nlohmann::json(x.get_si());
  return nlohmann::json(x.get_str());
}

nlohmann::json json_group(const AbelianGroup& g) {
  nlohmann::json torsion = nlohmann::json::array();
  for (const Int& m : g.torsion) torsion.push_back(json_int(m));
  return {{"rank", g.free_rank}, {"torsion", torsion}};
}

nlohmann::json json_matrix(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(json_int(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json j = r.details;
  j["schema_version"] = 1;
  j["command"] = r.command;
  if (r.group) j["group"] = json_group(*r.group);
  if (r.certificate)
    j["certificate"] = {{"u", json_matrix(r.certificate->u)},
                        {"s", json_matrix(r.certificate->s)},
                        {"v", json_matrix(r.certificate->v)}};
  return j;
}

}  // namespace kbar
