#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "famalg/algebra.hpp"
#include "famalg/core.hpp"

// A registry of identities, inclusions and expected counterexamples over the
// family algebra, with an exhaustive/randomized checking engine. Witnesses
// are reported as the canonically least violating operand binding, so runs
// are reproducible byte for byte.

namespace famalg::laws {

enum class Role { family, semigroup, ideal };
enum class LawKind { identity, inclusion, non_law };

using Operand = std::variant<SetFamily, PrincipalIdeal>;

struct Binding {
  std::vector<Operand> operands;
};

/// Lexicographic over the operand tuple; families compare by member list,
/// ideals by apex.
bool binding_less(const Binding& a, const Binding& b);

struct Law {
  std::string id;
  std::string statement;
  LawKind kind;
  std::vector<Role> roles;
  int default_universe;
  int default_max_members;
  /// True iff the claimed statement holds for the bound operands. For
  /// non-laws this evaluates the refuted claim, so a witness is a binding
  /// where it returns false.
  std::function<bool(const std::vector<Operand>&)> holds;
};

/// Default ceiling on predicate evaluations per search.
inline constexpr std::uint64_t kSearchCeiling = 10'000'000;

struct SearchReport {
  std::string law_id;
  LawKind law_kind = LawKind::identity;
  std::string mode;  // "single" | "exhaustive" | "random"
  int universe_size = 0;
  int max_members = 0;
  std::uint64_t trials = 0;  // random mode only
  std::uint64_t seed = 0;    // random mode only
  bool seeded = false;
  std::uint64_t cases_checked = 0;
  bool witness_found = false;
  std::optional<Binding> witness;

  /// Identities expect no witness; non-laws expect one.
  bool expectation_met() const {
    return law_kind == LawKind::non_law ? witness_found : !witness_found;
  }
};

/// The built-in registry (stable order, stable ids).
const std::vector<Law>& builtin_laws();

/// Lookup by id; nullptr when unknown.
const Law* find_law(const std::string& id);

/// Evaluate one explicit binding. Semigroup-role operands that are not
/// union-closed are replaced by their closure when auto_close is set,
/// rejected otherwise.
SearchReport check_law(const Law& law, std::vector<Operand> operands,
                       bool auto_close = true);

/// Enumerate every binding within the bounds, in canonical order: families
/// are all non-empty families of at most max_members subsets; semigroup
/// roles take the closures of those; ideal roles take every apex. Returns
/// the least witness under binding_less, or a pass with the full case count.
/// The scan may be partitioned across threads; the report is identical
/// regardless of thread count.
SearchReport exhaustive_search(const Law& law, int universe_size,
                               int max_members, int threads = 1,
                               std::uint64_t ceiling = kSearchCeiling);

/// Seeded, reproducible sampling of bindings; same report contract.
SearchReport random_search(const Law& law, int universe_size, int max_members,
                           std::uint64_t trials, std::uint64_t seed);

enum class relation_class : int {
  equal = 0,
  left_subset = 1,
  right_subset = 2,
  incomparable = 3
};

/// Observed relation tallies between  S(A v B) * P(Y)  (left) and
/// S((A v B) * P(Y))  (right), over every binding in the bounds. Reports
/// observations only; asserts nothing.
struct Q213Report {
  int universe_size = 0;
  int max_members = 0;
  std::uint64_t cases = 0;
  struct class_stat {
    std::uint64_t count = 0;
    std::optional<Binding> least;
  };
  class_stat stats[4];  // indexed by relation_class
  std::uint64_t union_closed_cases = 0;  // bindings with both operands closed
  std::uint64_t union_closed_equal = 0;  // ... of those, classified equal
};

Q213Report explore_q213(int universe_size, int max_members,
                        std::uint64_t ceiling = kSearchCeiling);

struct FixtureResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Built-in worked examples evaluated end to end against stored values.
std::vector<FixtureResult> regression_fixtures();

/// All non-empty families of at most max_members subsets, in canonical
/// order: lexicographic over the member list, prefixes first.
std::vector<SetFamily> enumerate_families(const Universe& u, int max_members);

/// Count of the above without materializing (saturates at UINT64_MAX).
std::uint64_t family_domain_size(int universe_size, int max_members);

const char* to_string(LawKind k);
const char* to_string(Role r);
const char* to_string(relation_class c);

}  // namespace famalg::laws
