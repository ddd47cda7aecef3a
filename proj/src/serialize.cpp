#include "tsharp/serialize.hpp"

#include <cmath>
#include <fstream>

#include "tsharp/error.hpp"

namespace tsharp {

namespace {

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json complex_to_json(cplx c) { return Json::array({c.real(), c.imag()}); }

Json point_to_json(const ScanPoint& p) {
  return Json{{"p1", complex_to_json(p.p1)}, {"zeta", complex_to_json(p.zeta)}};
}

}  // namespace

Json series_to_json(const Series& s) {
  Json arr = Json::array();
  for (const auto& c : s.coeffs()) arr.push_back(complex_to_json(c));
  return arr;
}

Series series_from_json(const Json& j, std::optional<std::size_t> order) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::Parse, "series must be a non-empty array of [re, im] pairs");
  std::vector<cplx> coeffs;
  coeffs.reserve(j.size());
  for (const auto& e : j) {
    if (e.is_number()) {
      coeffs.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      coeffs.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      throw Error(ErrorKind::Parse, "series entries must be [re, im] pairs");
    }
  }
  return Series(order.value_or(coeffs.size() - 1), coeffs);
}

Series read_series_file(const std::filesystem::path& path, std::optional<std::size_t> order) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
  return series_from_json(j, order);
}

Json bound_to_json(const BoundReport& r) {
  Json pre = Json::array();
  for (const auto& p : r.preconditions) pre.push_back(Json{{"name", p.name}, {"ok", p.ok}});
  return Json{{"quantity", to_string(r.quantity)},
              {"side", to_string(r.side)},
              {"value", number_or_null(r.value)},
              {"case", r.case_label},
              {"mu_or_sigma", r.mu_or_sigma ? number_or_null(*r.mu_or_sigma) : Json(nullptr)},
              {"preconditions", std::move(pre)},
              {"sharp", r.sharp},
              {"extremal", r.extremal ? Json(to_string(*r.extremal)) : Json(nullptr)},
              {"notes", r.notes}};
}

BoundReport bound_from_json(const Json& j) {
  try {
    BoundReport r;
    r.quantity = parse_quantity(j.at("quantity").get<std::string>());
    r.side = parse_side(j.at("side").get<std::string>());
    r.value = j.at("value").is_null() ? std::nan("") : j.at("value").get<double>();
    r.case_label = j.at("case").get<std::string>();
    if (!j.at("mu_or_sigma").is_null()) r.mu_or_sigma = j.at("mu_or_sigma").get<double>();
    for (const auto& p : j.at("preconditions")) r.preconditions.push_back({p.at("name"), p.at("ok")});
    r.sharp = j.at("sharp").get<bool>();
    if (!j.at("extremal").is_null()) r.extremal = parse_extremal(j.at("extremal").get<std::string>());
    r.notes = j.value("notes", "");
    return r;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed bound report: ") + e.what());
  }
}

Json config_to_json(const ScanConfig& cfg) {
  return Json{{"grid_p1", cfg.grid_p1},
              {"grid_zeta_radius", cfg.grid_zeta_radius},
              {"grid_zeta_phase", cfg.grid_zeta_phase},
              {"grid_p1_phase", cfg.grid_p1_phase},
              {"random_samples", cfg.random_samples},
              {"complex_spot_checks", cfg.complex_spot_checks},
              {"seed", cfg.seed},
              {"tolerance", cfg.tolerance}};
}

Json report_to_json(const OracleReport& rep, const ScanConfig& cfg) {
  Json stats = Json::array();
  for (const auto& s : rep.stats)
    stats.push_back(Json{{"quantity", to_string(s.quantity)},
                         {"emp_min", s.emp_min},
                         {"emp_max", s.emp_max},
                         {"argmin", point_to_json(s.argmin)},
                         {"argmax", point_to_json(s.argmax)}});
  Json violations = Json::array();
  for (const auto& v : rep.violations)
    violations.push_back(Json{{"index", v.index},
                              {"sample", point_to_json(v.point)},
                              {"quantity", to_string(v.quantity)},
                              {"side", to_string(v.side)},
                              {"value", v.value},
                              {"bound", v.bound}});
  Json bounds = Json::array();
  for (const auto& b : rep.bounds) bounds.push_back(bound_to_json(b));
  Json sharp = Json::object();
  for (const auto& [k, v] : rep.sharp_gaps) sharp[k] = v;
  Json empirical = Json::object();
  for (const auto& [k, v] : rep.empirical_gaps) empirical[k] = v;
  return Json{{"family", rep.family},
              {"applicable", rep.applicable},
              {"pass", rep.pass()},
              {"samples", rep.samples},
              {"config", config_to_json(cfg)},
              {"stats", std::move(stats)},
              {"violation_count", rep.violation_count},
              {"violations", std::move(violations)},
              {"bounds", std::move(bounds)},
              {"sharp_gaps", std::move(sharp)},
              {"empirical_gaps", std::move(empirical)}};
}

}  // namespace tsharp
