#include "tropdyn/json_io.hpp"

#include <string>

#include "tropdyn/errors.hpp"

namespace tropdyn {

using nlohmann::json;

namespace {

template <typename T>
T get_as(const json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("field \"") + key + "\": " + e.what());
  }
}

std::size_t as_state(const json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw InvalidInput("state indices must be non-negative integers");
  return j.get<std::size_t>();
}

json vectors_to_json(const std::vector<TropVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(v);
  return out;
}

}  // namespace

void to_json(json& j, const TropValue& v) {
  if (v.is_neg_inf()) {
    j = "-inf";
  } else if (v.is_pos_inf()) {
    j = "+inf";
  } else {
    j = v.value();
  }
}

void from_json(const json& j, TropValue& v) {
  if (j.is_number()) {
    v = TropValue{j.get<double>()};
  } else if (j.is_string() && j.get<std::string>() == "-inf") {
    v = kNegInf;
  } else if (j.is_string() && j.get<std::string>() == "+inf") {
    v = kPosInf;
  } else {
    throw InvalidInput("tropical value must be a number, \"-inf\" or \"+inf\"");
  }
}

json density_to_json(const Density& b) {
  if (b.is_top()) return json{{"top", true}, {"n", b.size()}};
  return json(TropVector(b.values().begin(), b.values().end()));
}

Density density_from_json(const json& j) {
  if (j.is_object() && j.value("top", false))
    return Density::top(get_as<std::size_t>(j, "n"));
  if (!j.is_array()) throw InvalidInput("density must be an array");
  return Density(j.get<TropVector>());
}

json matrix_to_json(const TropMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto r = m.row(i);
    rows.push_back(TropVector(r.begin(), r.end()));
  }
  return rows;
}

TropMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("matrix must be an array of rows");
  return TropMatrix::from_rows(j.get<std::vector<TropVector>>());
}

TransitionSystem system_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("system must be a JSON object");
  try {
    if (j.contains("transition_matrix")) {
      return TransitionSystem::from_sft(
          get_as<std::vector<std::vector<int>>>(j, "transition_matrix"),
          get_as<std::vector<std::vector<double>>>(j, "edge_potential"));
    }
    if (j.contains("image")) {
      std::vector<std::size_t> image;
      for (const json& s : j.at("image")) image.push_back(as_state(s));
      const auto potential = get_as<std::vector<double>>(j, "potential");
      return TransitionSystem::from_map(image, potential);
    }
    const auto n = get_as<long long>(j, "n");
    if (n <= 0) throw InvalidInput("\"n\" must be positive");
    if (!j.contains("arcs") || !j.at("arcs").is_array())
      throw InvalidInput("missing array field \"arcs\"");
    std::vector<Arc> arcs;
    for (const json& a : j.at("arcs")) {
      if (!a.is_array() || a.size() != 3 || !a[2].is_number())
        throw InvalidInput("each arc must be [source, target, weight]");
      arcs.push_back({as_state(a[0]), as_state(a[1]), a[2].get<double>()});
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = get_as<std::vector<std::string>>(j, "labels");
    return TransitionSystem::from_arcs(static_cast<std::size_t>(n), std::move(arcs),
                                       std::move(labels));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("system JSON: ") + e.what());
  }
}

json system_to_json(const TransitionSystem& sys) {
  json arcs = json::array();
  for (const Arc& a : sys.arcs()) arcs.push_back(json::array({a.source, a.target, a.weight}));
  json out{{"n", sys.size()}, {"arcs", std::move(arcs)}};
  if (!sys.labels().empty()) out["labels"] = sys.labels();
  return out;
}

json report_to_json(const ErgodicReport& report) {
  json densities = json::array();
  for (const Density& b : report.eigen_density_basis) densities.push_back(density_to_json(b));
  return json{
      {"n", report.normalized_system.size()},
      {"Q", report.q},
      {"maximizing_cycle", report.maximizing_cycle.states},
      {"aubry", report.mane.aubry},
      {"critical_classes", report.mane.critical_classes},
      {"uniquely_calibrated", report.uniquely_calibrated},
      {"phi", matrix_to_json(report.mane.phi)},
      {"eigenfunction_basis", vectors_to_json(report.eigenfunction_basis)},
      {"eigen_density_basis", std::move(densities)},
      {"normalized_system", system_to_json(report.normalized_system)},
      {"tol", report.tol},
  };
}

ErgodicReport report_from_json(const json& j) {
  ErgodicReport r;
  try {
    r.q = get_as<double>(j, "Q");
    r.maximizing_cycle.states = get_as<std::vector<std::size_t>>(j, "maximizing_cycle");
    r.normalized_system = system_from_json(j.at("normalized_system"));
    r.mane.phi = matrix_from_json(j.at("phi"));
    r.mane.aubry = get_as<std::vector<std::size_t>>(j, "aubry");
    r.mane.critical_classes =
        get_as<std::vector<std::vector<std::size_t>>>(j, "critical_classes");
    r.eigenfunction_basis = get_as<std::vector<TropVector>>(j, "eigenfunction_basis");
    for (const json& b : j.at("eigen_density_basis"))
      r.eigen_density_basis.push_back(density_from_json(b));
    r.uniquely_calibrated = get_as<bool>(j, "uniquely_calibrated");
    r.tol = get_as<double>(j, "tol");
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("report JSON: ") + e.what());
  }
  return r;
}

json spectral_to_json(const SpectralData& data) {
  return json{{"beta", data.beta},         {"pressure", data.pressure},
              {"log_u", data.log_u},       {"log_m", data.log_m},
              {"log_mu", data.log_mu},     {"iterations", data.iterations}};
}

json rate_to_json(const RateFunction& rate) {
  return json{{"rate", rate.rate},
              {"v", rate.v_used},
              {"b", density_to_json(rate.b_used)}};
}

}  // namespace tropdyn
