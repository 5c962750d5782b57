#include <sstream>

#include "gctc/sweep.hpp"
#include "json.hpp"

namespace gctc {

namespace {

using json = nlohmann::ordered_json;

json optional_int(const std::optional<std::int64_t>& v) {
  return v ? json(*v) : json(nullptr);
}

json config_json(const SweepConfig& cfg) {
  // threads and output are left out.
  json params = json::array();
  for (const auto& [b, c] : expand_params(cfg)) params.push_back({b, c});
  return json{
      {"checks", cfg.checks},
      {"prime_min", cfg.prime_min},
      {"prime_max", cfg.prime_max},
      {"params", params},
      {"m_mode", std::string(to_string(cfg.m_mode))},
      {"m_values", cfg.m_values},
      {"t_min", cfg.t_min},
      {"t_max", cfg.t_max},
  };
}

json verdict_json(const CheckVerdict& v) {
  json extra = json::object();
  for (const auto& [name, value] : v.extra) extra[name] = value;
  return json{
      {"check", v.check},
      {"p", v.p},
      {"params", {{"b", optional_int(v.b)},
                  {"c", optional_int(v.c)},
                  {"m", optional_int(v.m)},
                  {"t", optional_int(v.t)}}},
      {"e", v.e},
      {"lhs", v.lhs},
      {"rhs", v.rhs},
      {"holds", v.holds ? json(*v.holds) : json(nullptr)},
      {"skip_reason", v.skip_reason ? json(*v.skip_reason) : json(nullptr)},
      {"extra", extra},
  };
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_int(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

std::string emit_report(const SweepReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    json verdicts = json::array();
    for (const auto& v : report.verdicts) verdicts.push_back(verdict_json(v));
    const json doc{
        {"config", config_json(report.config)},
        {"verdicts", verdicts},
        {"summary",
         {{"pass", report.summary.pass},
          {"fail", report.summary.fail},
          {"skip", report.summary.skip},
          {"total", report.verdicts.size()}}},
    };
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "check,p,b,c,m,t,e,lhs,rhs,holds,skip_reason\n";
  for (const auto& v : report.verdicts) {
    out << csv_field(v.check) << ',' << v.p << ',' << csv_int(v.b) << ',' << csv_int(v.c) << ','
        << csv_int(v.m) << ',' << csv_int(v.t) << ',' << v.e << ',';
    if (v.skipped()) {
      out << ",,," << csv_field(v.skip_reason.value_or(""));
    } else {
      out << v.lhs << ',' << v.rhs << ',' << (*v.holds ? "true" : "false") << ',';
    }
    out << '\n';
  }
  return out.str();
}

std::string emit_identity_report(const IdentitySweepResult& result, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    json reports = json::array();
    for (const auto& r : result.reports) {
      reports.push_back(json{{"id", r.id},
                             {"params", r.params},
                             {"holds", r.holds},
                             {"lhs", r.lhs},
                             {"rhs", r.rhs}});
    }
    const json doc{
        {"reports", reports},
        {"summary", {{"pass", result.pass}, {"fail", result.fail}, {"total", result.reports.size()}}},
    };
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "id,params,holds,lhs,rhs\n";
  for (const auto& r : result.reports) {
    out << csv_field(r.id) << ',' << csv_field(r.params) << ',' << (r.holds ? "true" : "false")
        << ',' << csv_field(r.lhs) << ',' << csv_field(r.rhs) << '\n';
  }
  return out.str();
}

}  // namespace gctc
