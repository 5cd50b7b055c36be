#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "btx/grid.hpp"
#include "btx/rational.hpp"
#include "btx/sequence.hpp"
#include "btx/special.hpp"
#include "btx/transform.hpp"

namespace btx {

struct Bounds {
  long n_max = 8;
  long m_max = 4;
  long r_max = 3;
};

/// Test fixture: adds `delta` to every M(n, j) read through the registry context.
struct Corruption {
  long n = 0;
  long j = 0;
  Rational delta = 1;
};

struct RunConfig {
  Bounds bounds;
  /// Base sample values per variable name, replacing the defaults.
  std::map<std::string, std::vector<Rational>> grid_values;
  MeixnerDefinition meixner = MeixnerDefinition::pochhammer;
  std::uint64_t seed = 42;
  /// Replaces the default sequence list of generic-sequence entries.
  std::vector<SequenceSpec> sequences;
  std::optional<Corruption> corruption;
};

/// Throws ConfigError when bounds are below the minimums (n_max >= 8, m_max >= 4, r_max >= 0).
void validate(const RunConfig& config);

/// What an identity entry builder sees: grids, sequences, and difference
/// access that honours a configured corruption.
class Context {
 public:
  explicit Context(const RunConfig& config) : config_(config) {}

  const RunConfig& config() const { return config_; }
  const Bounds& bounds() const { return config_.bounds; }

  /// Exactly degree + 1 points (at least `min_points`), avoiding `excluded`.
  GridVariable var(const std::string& name, int degree, std::vector<Rational> excluded = {},
                   std::size_t min_points = 0) const;
  /// Same, restricted to [0, 1].
  GridVariable unit_var(const std::string& name, int degree) const;

  /// The configured sequence override, or `defaults` parsed.
  std::vector<SequenceSpec> sequences(const std::vector<std::string>& defaults) const;

  /// M(n, j) of the terms, plus the corruption delta when (n, j) matches.
  Rational diff(const Terms& a, long n, long j) const;

 private:
  const RunConfig& config_;
};

struct IdentityCase {
  std::string label;
  GridSpec grid;
  Evaluator lhs;
  Evaluator rhs;
};

struct GateFailure {
  std::string detail;
  std::optional<GridWitness> witness;
};

struct IdentityEntry {
  std::string id;
  std::string paper_eq;
  std::string module;
  std::string summary;
  std::vector<std::string> variables;
  std::function<std::vector<IdentityCase>(const Context&)> cases;
  /// Returns a failure when the entry's precondition does not hold.
  std::function<std::optional<GateFailure>(const Context&)> gate;
  /// Optional remark attached to the report, e.g. cases left out of the run.
  std::function<std::string(const Context&)> note;
};

/// All entries, ordered by id.
const std::vector<IdentityEntry>& registry();
/// Entries whose module tag equals `filter` or whose id starts with it; all when empty.
std::vector<const IdentityEntry*> list_identities(const std::string& filter = "");
/// Throws ConfigError for an unknown id.
const IdentityEntry& find_identity(const std::string& id);

enum class Status { pass, fail, skipped };
std::string to_string(Status s);

struct Witness {
  std::string case_label;
  Point point;
  Rational lhs;
  Rational rhs;
};

struct EntryReport {
  std::string id;
  std::string paper_eq;
  Status status = Status::pass;
  std::string skip_reason;
  std::optional<Witness> witness;
  std::string note;
  long cases_run = 0;
  long points = 0;
  double millis = 0;
};

struct VerificationReport {
  RunConfig config;
  std::vector<EntryReport> entries;
  double millis = 0;

  long count(Status s) const;
  bool all_passed() const { return count(Status::fail) == 0; }
};

/// Runs the selected entries (all when `ids` is empty) in registry order.
/// Configuration problems throw ConfigError; identity failures are reported.
VerificationReport verify(const std::vector<std::string>& ids, const RunConfig& config);
EntryReport verify_entry(const IdentityEntry& entry, const RunConfig& config);

/// Re-evaluates one case of an entry at a witness point.
Sides reproduce(const std::string& id, const RunConfig& config, const std::string& case_label, const Point& point);

}  // namespace btx
