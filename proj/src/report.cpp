#include "btx/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "btx/config.hpp"
#include "btx/error.hpp"

namespace btx {

namespace {

using Json = nlohmann::ordered_json;

Json point_json(const Point& p) {
  Json out = Json::object();
  for (const auto& [name, value] : p.values()) out[name] = value.str();
  return out;
}

Json config_json(const RunConfig& c) {
  Json out;
  out["bounds"] = {{"n_max", c.bounds.n_max}, {"m_max", c.bounds.m_max}, {"r_max", c.bounds.r_max}};
  out["seed"] = c.seed;
  out["meixner"] = to_string(c.meixner);
  Json grid = Json::object();
  for (const auto& [name, values] : c.grid_values) {
    Json list = Json::array();
    for (const auto& v : values) list.push_back(v.str());
    grid[name] = list;
  }
  out["grid"] = grid;
  Json seqs = Json::array();
  for (const auto& s : c.sequences) seqs.push_back(s.str());
  out["sequences"] = seqs;
  if (c.corruption) {
    out["corruption"] = {{"n", c.corruption->n}, {"j", c.corruption->j}, {"delta", c.corruption->delta.str()}};
  }
  return out;
}

Json entry_json(const EntryReport& e, bool timing) {
  Json out;
  out["id"] = e.id;
  out["paper_eq"] = e.paper_eq;
  out["status"] = to_string(e.status);
  if (!e.skip_reason.empty()) out["skip_reason"] = e.skip_reason;
  if (e.witness) {
    out["witness"] = {{"case", e.witness->case_label},
                      {"point", point_json(e.witness->point)},
                      {"lhs", e.witness->lhs.str()},
                      {"rhs", e.witness->rhs.str()}};
  }
  if (!e.note.empty()) out["note"] = e.note;
  out["cases_run"] = e.cases_run;
  out["points"] = e.points;
  if (timing) out["millis"] = e.millis;
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string render_json(const VerificationReport& r, bool timing) {
  Json out;
  out["config"] = config_json(r.config);
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(entry_json(e, timing));
  out["entries"] = entries;
  out["summary"] = {{"total", r.entries.size()},
                    {"passed", r.count(Status::pass)},
                    {"failed", r.count(Status::fail)},
                    {"skipped", r.count(Status::skipped)}};
  if (timing) out["summary"]["millis"] = r.millis;
  return out.dump(2) + "\n";
}

std::string render_csv(const VerificationReport& r, bool timing) {
  std::ostringstream os;
  os << "id,paper_eq,status,skip_reason,cases_run,points," << (timing ? "millis," : "")
     << "witness_case,witness_point,witness_lhs,witness_rhs\n";
  for (const auto& e : r.entries) {
    os << csv_field(e.id) << ',' << csv_field(e.paper_eq) << ',' << to_string(e.status) << ','
       << csv_field(e.skip_reason) << ',' << e.cases_run << ',' << e.points << ',';
    if (timing) os << fixed(e.millis, 3) << ',';
    if (e.witness) {
      os << csv_field(e.witness->case_label) << ',' << csv_field(e.witness->point.str()) << ','
         << csv_field(e.witness->lhs.str()) << ',' << csv_field(e.witness->rhs.str());
    } else {
      os << ",,,";
    }
    os << '\n';
  }
  return os.str();
}

std::string render_pretty(const VerificationReport& r, bool timing) {
  std::ostringstream os;
  for (const auto& e : r.entries) {
    std::string status = to_string(e.status);
    if (!e.skip_reason.empty()) status += " (" + e.skip_reason + ")";
    char line[160];
    std::snprintf(line, sizeof line, "%-9s %-6s %-20s %6ld cases %7ld points", e.id.c_str(), e.paper_eq.c_str(),
                  status.c_str(), e.cases_run, e.points);
    os << line;
    if (timing) os << "  " << fixed(e.millis, 1) << " ms";
    os << '\n';
    if (e.witness) {
      os << "    witness [" << e.witness->case_label << "] " << e.witness->point.str() << ": lhs = " << e.witness->lhs
         << ", rhs = " << e.witness->rhs << '\n';
    }
    if (!e.note.empty()) os << "    note: " << e.note << '\n';
  }
  os << r.entries.size() << " entries: " << r.count(Status::pass) << " passed, " << r.count(Status::fail)
     << " failed, " << r.count(Status::skipped) << " skipped";
  if (timing) os << " in " << fixed(r.millis / 1000.0, 2) << " s";
  os << '\n';
  return os.str();
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "pretty") return Format::pretty;
  throw ConfigError("unknown format '" + std::string(text) + "' (json|csv|pretty)");
}

std::string render(const VerificationReport& report, Format format, bool timing) {
  switch (format) {
    case Format::json: return render_json(report, timing);
    case Format::csv: return render_csv(report, timing);
    case Format::pretty: return render_pretty(report, timing);
  }
  return {};
}

}  // namespace btx
