#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "famalg/laws.hpp"
#include "famalg/models.hpp"

// The script DSL: one statement per line, names declared before use, one
// universe or group per script. Parsing resolves every name and element; a
// parsed script evaluates without further name errors.
//
//   universe a b c d          # or: universe 4
//   set A = {a,b}
//   family F = [A, {b,c}]
//   group Z6                  # or products: Z2xZ3
//   subgroup Q = <3>
//   weights 1 1/2 0 1 1 1
//   eval S(F v G) * I(G)
//   check L2 exhaustive universe=3 maxfam=3
//   model vitali-partition Q
//   explore q213 universe=3 maxfam=2

namespace famalg::script {

struct SetLiteral {
  std::vector<int> elems;  // resolved element indices, ascending
  int line = 0, col = 0;
};

struct Expr {
  enum class Kind {
    name,        // declared set or family
    set_lit,     // {a,b} — lifts to a singleton family as an atom
    family_lit,  // [A, {b,c}] or {A,B}
    closure,     // S(e)
    ideal,       // I(e)
    complement,  // ~e
    adjoin,      // e + {a,b}
    join,        // e v e
    star         // e * e
  };
  Kind kind{};
  int line = 0, col = 0;
  std::string name;
  std::vector<Expr> args;
  SetLiteral set;  // set_lit and adjoin
};

struct Statement {
  enum class Kind {
    universe_decl,
    set_decl,
    family_decl,
    group_decl,
    subgroup_decl,
    weights_decl,
    eval,
    check,
    model,
    explore
  };
  Kind kind{};
  int line = 0, col = 0;

  std::vector<std::string> labels;  // universe_decl (label form)
  int universe_size = 0;            // universe_decl (size form)
  std::string name;                 // set/family/subgroup decl
  SetLiteral set;                   // set_decl
  std::vector<Expr> family_members; // family_decl (name or set_lit exprs)
  std::vector<int> moduli;          // group_decl
  std::vector<int> elems;           // subgroup_decl generators
  std::vector<models::Rational> weights;  // weights_decl
  Expr expr;                        // eval
  std::string target;               // check: law id; model: check name
  std::string subgroup_name;        // model (optional)
  std::string mode;                 // check: "exhaustive" | "random" | ""
  std::map<std::string, std::uint64_t> options;  // universe=, maxfam=, ...
};

struct Script {
  std::vector<Statement> statements;
};

/// Parses UTF-8 text (LF or CRLF, '#' comments). Throws parse_error with a
/// 1-based line:column position.
Script parse_script(const std::string& text);

/// Canonical text; parse(print(s)) reproduces s.
std::string print_script(const Script& s);
std::string print_statement(const Statement& st);
std::string print_expr(const Expr& e);

using Value = std::variant<SetFamily, PrincipalIdeal>;

/// Result of one named model check.
struct ModelOutcome {
  std::string check;
  std::string group;
  std::string subgroup;  // empty when not applicable
  bool pass = false;
  std::uint64_t cases = 0;
  std::string detail;
  std::vector<std::pair<std::string, std::string>> fields;
};

struct StatementResult {
  Statement::Kind kind{};
  int line = 0;
  std::string text;  // canonical statement
  bool ok = true;    // ran and met its expectation
  std::string error;
  std::vector<std::string> notes;
  std::optional<Value> value;
  std::optional<laws::SearchReport> report;
  std::optional<laws::Q213Report> q213;
  std::optional<ModelOutcome> model;
};

struct RunOptions {
  std::uint64_t default_seed = 0;
  int threads = 1;
};

struct RunResult {
  std::vector<StatementResult> statements;
  bool ok = true;          // every statement ran and met expectations
  bool usage_error = false;  // a statement failed to run at all
};

RunResult run_script(const Script& s, const RunOptions& opts = {});

/// Context for standalone model checks (the `model` subcommand).
struct ModelContext {
  std::optional<models::GroupModel> group;
  std::optional<models::Subgroup> subgroup;
  std::optional<models::WeightedMeasure> weights;
};

/// Runs one named check: vitali-partition, transversal-count, coset-union,
/// trivial-pair, invariance, measure-lemma.
ModelOutcome run_model_check(const std::string& check, const ModelContext& ctx,
                             const std::map<std::string, std::uint64_t>& options = {});

/// "Z6" or "Z2xZ3" to moduli; throws std::invalid_argument on bad specs.
std::vector<int> parse_group_spec(const std::string& spec);

/// "3" or "1/2" (non-negative).
models::Rational parse_rational(const std::string& text);

}  // namespace famalg::script
