#include "btx/registry.hpp"

#include <algorithm>
#include <chrono>

#include "btx/error.hpp"
#include "entries.hpp"

namespace btx {

void validate(const RunConfig& config) {
  const auto& b = config.bounds;
  if (b.n_max < 8) throw ConfigError("n_max must be at least 8, got " + std::to_string(b.n_max));
  if (b.m_max < 4) throw ConfigError("m_max must be at least 4, got " + std::to_string(b.m_max));
  if (b.r_max < 0) throw ConfigError("r_max must be nonnegative");
  for (const auto& [name, values] : config.grid_values) {
    if (values.empty()) throw ConfigError("grid override for '" + name + "' is empty");
    grid_points(0, values);  // rejects repeated values
  }
}

GridVariable Context::var(const std::string& name, int degree, std::vector<Rational> excluded,
                          std::size_t min_points) const {
  auto it = config_.grid_values.find(name);
  const auto& base = it != config_.grid_values.end() ? it->second : default_grid_values();
  const std::size_t count = std::max<std::size_t>(static_cast<std::size_t>(degree) + 1, min_points);
  return GridVariable{name, grid_points(count, base, excluded), degree, std::move(excluded)};
}

GridVariable Context::unit_var(const std::string& name, int degree) const {
  auto it = config_.grid_values.find(name);
  const auto& base = it != config_.grid_values.end() ? it->second : default_grid_values();
  return GridVariable{name, grid_points(static_cast<std::size_t>(degree) + 1, base, {}, PointDomain::unit_interval),
                      degree, {}};
}

std::vector<SequenceSpec> Context::sequences(const std::vector<std::string>& defaults) const {
  if (!config_.sequences.empty()) return config_.sequences;
  std::vector<SequenceSpec> out;
  for (const auto& s : defaults) out.push_back(SequenceSpec::parse(s));
  return out;
}

Rational Context::diff(const Terms& a, long n, long j) const {
  Rational v = backward_difference(a, n, j);
  if (config_.corruption && config_.corruption->n == n && config_.corruption->j == j) v += config_.corruption->delta;
  return v;
}

const std::vector<IdentityEntry>& registry() {
  static const std::vector<IdentityEntry> entries = [] {
    std::vector<IdentityEntry> out;
    entries::add_intro(out);
    entries::add_basis(out);
    entries::add_families(out);
    entries::add_composition(out);
    entries::add_probability(out);
    entries::add_appell(out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return out;
  }();
  return entries;
}

std::vector<const IdentityEntry*> list_identities(const std::string& filter) {
  std::vector<const IdentityEntry*> out;
  for (const auto& e : registry()) {
    if (filter.empty() || e.module == filter || e.id.rfind(filter, 0) == 0) out.push_back(&e);
  }
  return out;
}

const IdentityEntry& find_identity(const std::string& id) {
  for (const auto& e : registry()) {
    if (e.id == id) return e;
  }
  throw ConfigError("unknown identity id '" + id + "'");
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

long VerificationReport::count(Status s) const {
  return static_cast<long>(std::count_if(entries.begin(), entries.end(), [s](const auto& e) { return e.status == s; }));
}

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

EntryReport verify_entry(const IdentityEntry& entry, const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  EntryReport report;
  report.id = entry.id;
  report.paper_eq = entry.paper_eq;
  const Context ctx(config);

  if (entry.gate) {
    if (auto failure = entry.gate(ctx)) {
      report.status = Status::skipped;
      report.skip_reason = "gate-failed";
      report.note = failure->detail;
      if (failure->witness) {
        report.witness = Witness{"gate", failure->witness->point, failure->witness->lhs, failure->witness->rhs};
      }
      report.millis = elapsed_ms(start);
      return report;
    }
  }

  for (const auto& c : entry.cases(ctx)) {
    const GridOutcome outcome = check_identity_on_grid(c.lhs, c.rhs, c.grid);
    ++report.cases_run;
    report.points += static_cast<long>(outcome.points_evaluated);
    if (outcome.kind == GridOutcome::Kind::config_error) {
      throw ConfigError(entry.id + " [" + c.label + "]: " + outcome.message);
    }
    if (outcome.kind == GridOutcome::Kind::fail) {
      report.status = Status::fail;
      report.witness = Witness{c.label, outcome.witness->point, outcome.witness->lhs, outcome.witness->rhs};
      break;
    }
  }
  if (entry.note) report.note = entry.note(ctx);
  report.millis = elapsed_ms(start);
  return report;
}

VerificationReport verify(const std::vector<std::string>& ids, const RunConfig& config) {
  validate(config);
  std::vector<const IdentityEntry*> selected;
  if (ids.empty()) {
    for (const auto& e : registry()) selected.push_back(&e);
  } else {
    for (const auto& id : ids) selected.push_back(&find_identity(id));
  }
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.config = config;
  for (const auto* e : selected) report.entries.push_back(verify_entry(*e, config));
  report.millis = elapsed_ms(start);
  return report;
}

Sides reproduce(const std::string& id, const RunConfig& config, const std::string& case_label, const Point& point) {
  const auto& entry = find_identity(id);
  const Context ctx(config);
  for (const auto& c : entry.cases(ctx)) {
    if (c.label == case_label) return {c.lhs(point), c.rhs(point)};
  }
  throw ConfigError(id + " has no case '" + case_label + "'");
}

}  // namespace btx
