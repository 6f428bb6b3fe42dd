#include "hssnt/json_report.hpp"

#include <cmath>
#include <cstdio>

namespace hssnt {

namespace {

void emit(const nlohmann::json& j, int indent, int depth, std::string& out) {
  const std::string pad(size_t(indent * (depth + 1)), ' '), close(size_t(indent * depth), ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += std::isnan(v) ? "\"nan\"" : (v > 0 ? "\"inf\"" : "\"-inf\"");
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + nlohmann::json(it.key()).dump() + ": ";
        emit(it.value(), indent, depth + 1, out);
      }
      out += "\n" + close + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        emit(j[i], indent, depth + 1, out);
      }
      out += "\n" + close + "]";
      return;
    }
    default:
      out += j.dump();
  }
}

const char* kind_name(RootKind k) {
  switch (k) {
    case RootKind::gamma: return "gamma";
    case RootKind::lambda: return "lambda";
    case RootKind::lambda_bar: return "lambda_bar";
    case RootKind::eps: return "eps";
  }
  return "";
}

}  // namespace

std::string dump17(const nlohmann::json& j, int indent) {
  std::string out;
  emit(j, indent, 0, out);
  out += "\n";
  return out;
}

nlohmann::json describe_json(const Space& s) {
  const RootDatum& d = s.roots;
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["command"] = "describe";
  j["space"] = s.model.spec.str();
  j["rank"] = d.rank;
  j["type"] = d.type_name();
  j["C"] = d.C;
  j["dims"] = {{"g", s.model.dim_g}, {"k", s.model.dim_k}, {"p", s.model.dim_p}};
  nlohmann::json roots = nlohmann::json::array();
  for (const Root& a : d.positive)
    roots.push_back({{"root", a.label}, {"kind", kind_name(a.kind)}, {"multiplicity", a.multiplicity}});
  j["positive_roots"] = roots;
  nlohmann::json gamma = nlohmann::json::array();
  for (int i : d.gamma) gamma.push_back(d.positive[size_t(i)].label);
  j["gamma"] = gamma;
  j["tripotent_scale"] = s.tripotent_scale;
  return j;
}

nlohmann::json report_json(const VerifyReport& r, const std::string& space) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["suite"] = r.name;
  j["space"] = space;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["pass"] = r.pass();
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : r.checks)
    checks.push_back({{"name", c.name}, {"max_residual", c.max_residual}, {"tol", c.tol}, {"pass", c.pass}});
  j["checks"] = checks;
  return j;
}

}  // namespace hssnt
