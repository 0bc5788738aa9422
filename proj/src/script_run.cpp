#include <algorithm>
#include <map>

#include "famalg/script.hpp"

// Canonical printing and execution of parsed scripts, plus the named model
// checks shared with the `model` subcommand.

namespace famalg::script {

namespace {

// precedence levels for printing: star < join < complement < adjoin < atom
enum : int { kStar = 1, kJoin = 2, kComplement = 3, kAdjoin = 4, kAtom = 5 };

int expr_level(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::star: return kStar;
    case Expr::Kind::join: return kJoin;
    case Expr::Kind::complement: return kComplement;
    case Expr::Kind::adjoin: return kAdjoin;
    default: return kAtom;
  }
}

std::string print_set_literal(const SetLiteral& lit,
                              const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < lit.elems.size(); ++i) {
    if (i) out += ",";
    const std::size_t e = static_cast<std::size_t>(lit.elems[i]);
    out += e < labels.size() ? labels[e] : std::to_string(lit.elems[i]);
  }
  return out + "}";
}

struct PrintCtx {
  std::vector<std::string> labels;
};

std::string print_expr_ctx(const Expr& e, const PrintCtx& ctx, int min_level) {
  std::string out;
  switch (e.kind) {
    case Expr::Kind::name: out = e.name; break;
    case Expr::Kind::set_lit: out = print_set_literal(e.set, ctx.labels); break;
    case Expr::Kind::family_lit: {
      out = "[";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        out += print_expr_ctx(e.args[i], ctx, kAtom);
      }
      out += "]";
      break;
    }
    case Expr::Kind::closure:
      out = "S(" + print_expr_ctx(e.args[0], ctx, kStar) + ")";
      break;
    case Expr::Kind::ideal:
      out = "I(" + print_expr_ctx(e.args[0], ctx, kStar) + ")";
      break;
    case Expr::Kind::complement:
      out = "~" + print_expr_ctx(e.args[0], ctx, kComplement);
      break;
    case Expr::Kind::adjoin:
      out = print_expr_ctx(e.args[0], ctx, kAdjoin) + " + " +
            print_set_literal(e.set, ctx.labels);
      break;
    case Expr::Kind::join:
      out = print_expr_ctx(e.args[0], ctx, kJoin) + " v " +
            print_expr_ctx(e.args[1], ctx, kJoin + 1);
      break;
    case Expr::Kind::star:
      out = print_expr_ctx(e.args[0], ctx, kStar) + " * " +
            print_expr_ctx(e.args[1], ctx, kStar + 1);
      break;
  }
  if (expr_level(e) < min_level) return "(" + out + ")";
  return out;
}

std::vector<std::string> labels_for(const Statement& st,
                                    const std::vector<std::string>& current) {
  if (st.kind == Statement::Kind::universe_decl) {
    if (!st.labels.empty()) return st.labels;
    std::vector<std::string> out;
    for (int i = 0; i < st.universe_size; ++i) out.push_back(std::to_string(i));
    return out;
  }
  if (st.kind == Statement::Kind::group_decl)
    return models::GroupModel::make(st.moduli).universe().labels();
  return current;
}

std::string print_options(const std::map<std::string, std::uint64_t>& opts) {
  std::string out;
  for (const auto& [k, v] : opts) out += " " + k + "=" + std::to_string(v);
  return out;
}

std::string print_statement_ctx(const Statement& st, const PrintCtx& ctx) {
  switch (st.kind) {
    case Statement::Kind::universe_decl: {
      if (st.labels.empty())
        return "universe " + std::to_string(st.universe_size);
      std::string out = "universe";
      for (const auto& l : st.labels) out += " " + l;
      return out;
    }
    case Statement::Kind::group_decl: {
      std::string out = "group ";
      for (std::size_t i = 0; i < st.moduli.size(); ++i) {
        if (i) out += "x";
        out += "Z" + std::to_string(st.moduli[i]);
      }
      return out;
    }
    case Statement::Kind::set_decl:
      return "set " + st.name + " = " + print_set_literal(st.set, ctx.labels);
    case Statement::Kind::family_decl: {
      std::string out = "family " + st.name + " = [";
      for (std::size_t i = 0; i < st.family_members.size(); ++i) {
        if (i) out += ", ";
        out += print_expr_ctx(st.family_members[i], ctx, kAtom);
      }
      return out + "]";
    }
    case Statement::Kind::subgroup_decl: {
      std::string out = "subgroup " + st.name + " = <";
      for (std::size_t i = 0; i < st.elems.size(); ++i) {
        if (i) out += ",";
        out += ctx.labels[st.elems[i]];
      }
      return out + ">";
    }
    case Statement::Kind::weights_decl: {
      std::string out = "weights";
      for (const auto& w : st.weights) out += " " + models::rational_string(w);
      return out;
    }
    case Statement::Kind::eval:
      return "eval " + print_expr_ctx(st.expr, ctx, kStar);
    case Statement::Kind::check: {
      std::string out = "check " + st.target;
      if (!st.mode.empty()) out += " " + st.mode;
      return out + print_options(st.options);
    }
    case Statement::Kind::explore:
      return "explore q213" + print_options(st.options);
    case Statement::Kind::model: {
      std::string out = "model " + st.target;
      if (!st.subgroup_name.empty()) out += " " + st.subgroup_name;
      return out + print_options(st.options);
    }
  }
  return "";
}

}  // namespace

std::string print_expr(const Expr& e) {
  return print_expr_ctx(e, PrintCtx{}, kStar);
}

std::string print_statement(const Statement& st) {
  return print_statement_ctx(st, PrintCtx{});
}

std::string print_script(const Script& s) {
  PrintCtx ctx;
  std::string out;
  for (const Statement& st : s.statements) {
    ctx.labels = labels_for(st, ctx.labels);
    out += print_statement_ctx(st, ctx) + "\n";
  }
  return out;
}

// ------------------------------------------------------------- execution

namespace {

struct EvalCtx {
  std::optional<Universe> u;
  std::optional<models::GroupModel> group;
  std::map<std::string, Subset> sets;
  std::map<std::string, SetFamily> families;
  std::map<std::string, models::Subgroup> subgroups;
  std::optional<models::WeightedMeasure> weights;
};

Subset subset_from_literal(const EvalCtx& ctx, const SetLiteral& lit) {
  return Subset::of(*ctx.u, lit.elems);
}

Value eval_expr(const EvalCtx& ctx, const Expr& e,
                std::vector<std::string>& notes) {
  switch (e.kind) {
    case Expr::Kind::name: {
      const auto f = ctx.families.find(e.name);
      if (f != ctx.families.end()) return f->second;
      // a set name lifts to the singleton family
      return make_family(*ctx.u, {ctx.sets.at(e.name)});
    }
    case Expr::Kind::set_lit:
      return make_family(*ctx.u, {subset_from_literal(ctx, e.set)});
    case Expr::Kind::family_lit: {
      std::vector<Subset> members;
      for (const Expr& m : e.args) {
        if (m.kind == Expr::Kind::name)
          members.push_back(ctx.sets.at(m.name));
        else
          members.push_back(subset_from_literal(ctx, m.set));
      }
      return make_family(*ctx.u, members);
    }
    case Expr::Kind::closure: {
      Value v = eval_expr(ctx, e.args[0], notes);
      if (std::holds_alternative<SetFamily>(v))
        return semigroup_closure(std::get<SetFamily>(v));
      return std::get<PrincipalIdeal>(v).materialize();
    }
    case Expr::Kind::ideal: {
      Value v = eval_expr(ctx, e.args[0], notes);
      if (std::holds_alternative<SetFamily>(v))
        return ideal_from_family(std::get<SetFamily>(v));
      notes.push_back("I(.) applied to an ideal is redundant");
      return v;
    }
    case Expr::Kind::complement: {
      Value v = eval_expr(ctx, e.args[0], notes);
      if (!std::holds_alternative<SetFamily>(v))
        throw std::invalid_argument("~ needs a family operand");
      return complement_family(std::get<SetFamily>(v));
    }
    case Expr::Kind::adjoin: {
      Value v = eval_expr(ctx, e.args[0], notes);
      if (!std::holds_alternative<SetFamily>(v))
        throw std::invalid_argument("+ needs a family operand");
      return adjoin(std::get<SetFamily>(v), subset_from_literal(ctx, e.set));
    }
    case Expr::Kind::join: {
      Value a = eval_expr(ctx, e.args[0], notes);
      Value b = eval_expr(ctx, e.args[1], notes);
      const bool fa = std::holds_alternative<SetFamily>(a);
      const bool fb = std::holds_alternative<SetFamily>(b);
      if (!fa && !fb)
        return join_ideals(std::get<PrincipalIdeal>(a),
                           std::get<PrincipalIdeal>(b));
      const SetFamily& left =
          fa ? std::get<SetFamily>(a)
             : std::get<PrincipalIdeal>(a).materialize();
      const SetFamily& right =
          fb ? std::get<SetFamily>(b)
             : std::get<PrincipalIdeal>(b).materialize();
      return join(left, right);
    }
    case Expr::Kind::star: {
      Value a = eval_expr(ctx, e.args[0], notes);
      Value b = eval_expr(ctx, e.args[1], notes);
      const bool fa = std::holds_alternative<SetFamily>(a);
      const bool fb = std::holds_alternative<SetFamily>(b);
      if (!fa && !fb)
        return star_ideals(std::get<PrincipalIdeal>(a),
                           std::get<PrincipalIdeal>(b));
      if (fa && !fb)
        return star_ideal(std::get<SetFamily>(a), std::get<PrincipalIdeal>(b))
            .materialize();
      if (!fa && fb)
        return ideal_star(std::get<PrincipalIdeal>(a), std::get<SetFamily>(b))
            .materialize();
      return star(std::get<SetFamily>(a), std::get<SetFamily>(b));
    }
  }
  throw std::logic_error("unreachable expression kind");
}

std::uint64_t option_or(const std::map<std::string, std::uint64_t>& opts,
                        const std::string& key, std::uint64_t fallback) {
  const auto it = opts.find(key);
  return it == opts.end() ? fallback : it->second;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

}  // namespace

ModelOutcome run_model_check(const std::string& check, const ModelContext& ctx,
                             const std::map<std::string, std::uint64_t>& options) {
  ModelOutcome out;
  out.check = check;
  if (ctx.group) out.group = ctx.group->spec_string();
  if (ctx.subgroup) out.subgroup = ctx.subgroup->elements().to_string();

  auto need_group = [&]() -> const models::GroupModel& {
    if (!ctx.group) throw std::invalid_argument(check + " needs a group");
    return *ctx.group;
  };
  auto need_subgroup = [&]() -> const models::Subgroup& {
    if (!ctx.subgroup) throw std::invalid_argument(check + " needs a subgroup");
    return *ctx.subgroup;
  };

  if (check == "vitali-partition") {
    const models::GroupModel& g = need_group();
    const models::Subgroup& q = need_subgroup();
    const auto partition = models::cosets_of(q);
    models::TransversalEnumerator en(partition,
                                     option_or(options, "ceiling", 1ull << 20));
    models::Transversal t{partition, Subset(g.universe(), 0)};
    bool all_ok = true;
    std::uint64_t n = 0;
    while (en.next(t)) {
      ++n;
      if (!models::vitali_partition_check(t)) all_ok = false;
      for (int tt = 0; all_ok && tt < g.order(); ++tt)
        if (!models::translate_transversal_check(t, tt)) all_ok = false;
      if (!all_ok) break;
    }
    out.pass = all_ok;
    out.cases = n;
    out.detail = all_ok ? "partition and translation properties hold over " +
                              std::to_string(n) + " transversals"
                        : "violated at transversal " + t.picks.to_string();
    out.fields.emplace_back("transversals", std::to_string(n));
    return out;
  }

  if (check == "transversal-count") {
    const models::Subgroup& q = need_subgroup();
    need_group();
    const auto partition = models::cosets_of(q);
    const std::uint64_t expected = sat_pow(
        static_cast<std::uint64_t>(q.order()), partition.coset_count());
    models::TransversalEnumerator en(partition,
                                     option_or(options, "ceiling", 1ull << 20));
    models::Transversal t{partition, Subset(q.parent().universe(), 0)};
    std::uint64_t actual = 0;
    while (en.next(t)) ++actual;
    out.pass = actual == expected;
    out.cases = actual;
    out.detail = std::to_string(actual) + " transversals, expected " +
                 std::to_string(expected);
    out.fields.emplace_back("expected", std::to_string(expected));
    out.fields.emplace_back("actual", std::to_string(actual));
    return out;
  }

  if (check == "coset-union") {
    const models::Subgroup& q = need_subgroup();
    need_group();
    out.pass = models::proper_coset_union_check(q);
    const auto partition = models::cosets_of(q);
    out.cases = (1ull << partition.coset_count()) - 2;
    out.detail = out.pass ? "every proper coset union is proper and avoids "
                            "the omitted cosets"
                          : "violation found";
    return out;
  }

  if (check == "trivial-pair") {
    const models::GroupModel& g = need_group();
    const auto pair = models::trivial_intersection_pair(g);
    out.pass = true;
    if (pair) {
      out.detail = "(" + pair->first.elements().to_string() + "," +
                   pair->second.elements().to_string() + ")";
      out.fields.emplace_back("found", "yes");
      out.fields.emplace_back("first", pair->first.elements().to_string());
      out.fields.emplace_back("second", pair->second.elements().to_string());
    } else {
      out.detail = "none";
      out.fields.emplace_back("found", "no");
    }
    return out;
  }

  if (check == "invariance") {
    const models::GroupModel& g = need_group();
    const models::Subgroup& q = need_subgroup();
    const SetFamily cosets = models::coset_family(q);
    const SetFamily closed = semigroup_closure(cosets);
    const bool a = models::translation_invariance_check(cosets, g);
    const bool b = models::translation_invariance_check(closed, g);
    out.pass = a && b;
    out.cases = closed.size();
    out.detail = out.pass ? "coset family and its closure are translation "
                            "invariant"
                          : "translation invariance fails";
    out.fields.emplace_back("cosets", std::to_string(cosets.size()));
    out.fields.emplace_back("closure-size", std::to_string(closed.size()));
    return out;
  }

  if (check == "measure-lemma") {
    if (!ctx.weights)
      throw std::invalid_argument("measure-lemma needs weights");
    const models::WeightedMeasure& m = *ctx.weights;
    const int n = m.universe().size();
    if (n > 12)
      throw bound_error("measure-lemma scans all subset pairs; universe "
                        "size must be at most 12");
    const std::uint64_t count = 1ull << n;
    std::vector<models::Rational> mu(count, models::Rational(0));
    for (std::uint64_t s = 1; s < count; ++s)
      mu[s] = mu[s & (s - 1)] + m.weights()[__builtin_ctzll(s)];
    const std::uint64_t apex = m.null_ideal().apex().bits();
    bool ok = true;
    std::string why;
    for (std::uint64_t a = 0; ok && a < count; ++a) {
      if ((mu[a] == models::Rational(0)) != ((a & ~apex) == 0)) {
        ok = false;
        why = "null ideal mismatch";
      }
    }
    std::uint64_t pair_cases = 0;
    for (std::uint64_t a = 0; ok && a < count; ++a) {
      for (std::uint64_t b = 0; b < count; ++b) {
        ++pair_cases;
        if (mu[a | b] + mu[a & b] != mu[a] + mu[b]) {
          ok = false;
          why = "additivity fails";
          break;
        }
        if (mu[a ^ b] == models::Rational(0) && mu[a] != mu[b]) {
          ok = false;
          why = "zero symmetric difference with different measures";
          break;
        }
      }
    }
    out.pass = ok;
    out.cases = pair_cases;
    out.detail = ok ? "additivity, null ideal and the symmetric-difference "
                      "lemma hold"
                    : why;
    return out;
  }

  throw std::invalid_argument("unknown model check '" + check + "'");
}

RunResult run_script(const Script& s, const RunOptions& opts) {
  RunResult result;
  EvalCtx ctx;
  PrintCtx pctx;

  for (const Statement& st : s.statements) {
    pctx.labels = labels_for(st, pctx.labels);
    StatementResult r;
    r.kind = st.kind;
    r.line = st.line;
    r.text = print_statement_ctx(st, pctx);
    try {
      switch (st.kind) {
        case Statement::Kind::universe_decl: {
          if (st.labels.empty())
            ctx.u = make_universe(st.universe_size);
          else
            ctx.u = make_universe(static_cast<int>(st.labels.size()),
                                  st.labels);
          break;
        }
        case Statement::Kind::group_decl: {
          ctx.group = models::GroupModel::make(st.moduli);
          ctx.u = ctx.group->universe();
          break;
        }
        case Statement::Kind::set_decl: {
          ctx.sets.emplace(st.name, subset_from_literal(ctx, st.set));
          break;
        }
        case Statement::Kind::family_decl: {
          std::vector<Subset> members;
          for (const Expr& m : st.family_members) {
            if (m.kind == Expr::Kind::name)
              members.push_back(ctx.sets.at(m.name));
            else
              members.push_back(subset_from_literal(ctx, m.set));
          }
          ctx.families.emplace(st.name, make_family(*ctx.u, members));
          break;
        }
        case Statement::Kind::subgroup_decl: {
          ctx.subgroups.emplace(
              st.name, models::subgroup_generated(*ctx.group, st.elems));
          break;
        }
        case Statement::Kind::weights_decl: {
          ctx.weights = models::WeightedMeasure::make(*ctx.u, st.weights);
          break;
        }
        case Statement::Kind::eval: {
          r.value = eval_expr(ctx, st.expr, r.notes);
          break;
        }
        case Statement::Kind::check: {
          const laws::Law* law = laws::find_law(st.target);
          const int universe = static_cast<int>(option_or(
              st.options, "universe",
              static_cast<std::uint64_t>(law->default_universe)));
          const int maxfam = static_cast<int>(option_or(
              st.options, "maxfam",
              static_cast<std::uint64_t>(law->default_max_members)));
          const std::uint64_t ceiling =
              option_or(st.options, "ceiling", laws::kSearchCeiling);
          if (st.mode == "random") {
            const std::uint64_t trials = option_or(st.options, "trials", 1000);
            const std::uint64_t seed =
                option_or(st.options, "seed", opts.default_seed);
            r.report = laws::random_search(*law, universe, maxfam, trials, seed);
          } else {
            const int threads = static_cast<int>(option_or(
                st.options, "threads",
                static_cast<std::uint64_t>(opts.threads)));
            r.report = laws::exhaustive_search(*law, universe, maxfam, threads,
                                               ceiling);
          }
          r.ok = r.report->expectation_met();
          break;
        }
        case Statement::Kind::explore: {
          const int universe =
              static_cast<int>(option_or(st.options, "universe", 3));
          const int maxfam =
              static_cast<int>(option_or(st.options, "maxfam", 2));
          const std::uint64_t ceiling =
              option_or(st.options, "ceiling", laws::kSearchCeiling);
          r.q213 = laws::explore_q213(universe, maxfam, ceiling);
          break;
        }
        case Statement::Kind::model: {
          ModelContext mc;
          mc.group = ctx.group;
          if (!st.subgroup_name.empty())
            mc.subgroup = ctx.subgroups.at(st.subgroup_name);
          mc.weights = ctx.weights;
          r.model = run_model_check(st.target, mc, st.options);
          r.ok = r.model->pass;
          break;
        }
      }
    } catch (const std::exception& e) {
      r.ok = false;
      r.error = e.what();
      result.statements.push_back(std::move(r));
      result.ok = false;
      result.usage_error = true;
      return result;
    }
    if (!r.ok) result.ok = false;
    result.statements.push_back(std::move(r));
  }
  return result;
}

}  // namespace famalg::script
