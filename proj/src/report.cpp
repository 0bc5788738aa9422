#include "famalg/report.hpp"

namespace famalg::report {

using nlohmann::json;

namespace {

json subset_labels(const Subset& s) {
  json arr = json::array();
  for (int i : s.elements()) arr.push_back(s.universe().label(i));
  return arr;
}

json family_members(const SetFamily& f) {
  json arr = json::array();
  for (std::size_t i = 0; i < f.size(); ++i)
    arr.push_back(subset_labels(f.member(i)));
  return arr;
}

json operand_json(const laws::Operand& op) {
  json o;
  if (std::holds_alternative<SetFamily>(op)) {
    o["kind"] = "family";
    o["members"] = family_members(std::get<SetFamily>(op));
  } else {
    o["kind"] = "ideal";
    o["apex"] = subset_labels(std::get<PrincipalIdeal>(op).apex());
  }
  return o;
}

std::string operand_string(const laws::Operand& op) {
  if (std::holds_alternative<SetFamily>(op))
    return std::get<SetFamily>(op).to_string();
  return "P(" + std::get<PrincipalIdeal>(op).apex().to_string() + ")";
}

const char* statement_kind_name(script::Statement::Kind k) {
  using K = script::Statement::Kind;
  switch (k) {
    case K::universe_decl: return "universe";
    case K::set_decl: return "set";
    case K::family_decl: return "family";
    case K::group_decl: return "group";
    case K::subgroup_decl: return "subgroup";
    case K::weights_decl: return "weights";
    case K::eval: return "eval";
    case K::check: return "check";
    case K::explore: return "explore";
    case K::model: return "model";
  }
  return "?";
}

}  // namespace

json to_json(const laws::Binding& b) {
  json arr = json::array();
  for (const auto& op : b.operands) arr.push_back(operand_json(op));
  return arr;
}

json to_json(const laws::SearchReport& r) {
  json o;
  o["law"] = r.law_id;
  o["kind"] = laws::to_string(r.law_kind);
  o["mode"] = r.mode;
  o["universe"] = r.universe_size;
  if (r.mode != "single") o["maxfam"] = r.max_members;
  if (r.mode == "random") {
    o["trials"] = r.trials;
    o["seed"] = r.seed;
  }
  o["cases"] = r.cases_checked;
  o["outcome"] = r.witness_found ? "witness" : "pass";
  o["expected"] = r.expectation_met();
  if (r.witness) o["witness"] = to_json(*r.witness);
  return o;
}

json to_json(const laws::Q213Report& r) {
  json o;
  o["universe"] = r.universe_size;
  o["maxfam"] = r.max_members;
  o["cases"] = r.cases;
  json classes;
  for (int c = 0; c < 4; ++c) {
    const auto& stat = r.stats[c];
    json cs;
    cs["count"] = stat.count;
    if (stat.least) cs["example"] = to_json(*stat.least);
    classes[laws::to_string(static_cast<laws::relation_class>(c))] = cs;
  }
  o["classes"] = classes;
  o["union-closed-cases"] = r.union_closed_cases;
  o["union-closed-equal"] = r.union_closed_equal;
  return o;
}

json to_json(const script::ModelOutcome& m) {
  json o;
  o["check"] = m.check;
  if (!m.group.empty()) o["group"] = m.group;
  if (!m.subgroup.empty()) o["subgroup"] = m.subgroup;
  o["pass"] = m.pass;
  o["cases"] = m.cases;
  o["detail"] = m.detail;
  if (!m.fields.empty()) {
    json data;
    for (const auto& [k, v] : m.fields) data[k] = v;
    o["data"] = data;
  }
  return o;
}

json to_json(const script::RunResult& run) {
  json stmts = json::array();
  for (const auto& st : run.statements) {
    json s;
    s["line"] = st.line;
    s["kind"] = statement_kind_name(st.kind);
    s["text"] = st.text;
    s["ok"] = st.ok;
    if (!st.error.empty()) s["error"] = st.error;
    if (!st.notes.empty()) s["notes"] = st.notes;
    if (st.value) {
      if (std::holds_alternative<SetFamily>(*st.value))
        s["value"] = json{{"family", family_members(
                                         std::get<SetFamily>(*st.value))}};
      else
        s["value"] = json{{"ideal-apex",
                           subset_labels(
                               std::get<PrincipalIdeal>(*st.value).apex())}};
    }
    if (st.report) s["report"] = to_json(*st.report);
    if (st.q213) s["explore"] = to_json(*st.q213);
    if (st.model) s["model"] = to_json(*st.model);
    stmts.push_back(s);
  }
  json o;
  o["ok"] = run.ok;
  o["statements"] = stmts;
  return o;
}

namespace {

std::string wrap(const json& payload) {
  json o;
  o["schema"] = kSchema;
  o["report"] = payload;
  return o.dump(2) + "\n";
}

}  // namespace

std::string check_report_json(const laws::SearchReport& r) {
  return wrap(to_json(r));
}
std::string q213_report_json(const laws::Q213Report& r) {
  return wrap(to_json(r));
}
std::string model_report_json(const script::ModelOutcome& m) {
  return wrap(to_json(m));
}
std::string run_report_json(const script::RunResult& run) {
  return wrap(to_json(run));
}

std::string value_string(const script::Value& v) {
  if (std::holds_alternative<SetFamily>(v))
    return std::get<SetFamily>(v).to_string();
  return "P(" + std::get<PrincipalIdeal>(v).apex().to_string() + ")";
}

std::string render_text(const laws::SearchReport& r) {
  std::string out = "law " + r.law_id + " (" +
                    laws::to_string(r.law_kind) + ")";
  if (const laws::Law* law = laws::find_law(r.law_id))
    out += ": " + law->statement;
  out += "\n  mode " + r.mode;
  if (r.mode != "single") {
    out += "  universe " + std::to_string(r.universe_size) + "  maxfam " +
           std::to_string(r.max_members);
  }
  if (r.mode == "random")
    out += "  trials " + std::to_string(r.trials) + "  seed " +
           std::to_string(r.seed);
  out += "\n  cases " + std::to_string(r.cases_checked);
  out += std::string("\n  outcome ") + (r.witness_found ? "witness" : "pass") +
         (r.expectation_met() ? " (expected)" : " (UNEXPECTED)");
  if (r.witness) {
    out += "\n  witness:";
    for (std::size_t i = 0; i < r.witness->operands.size(); ++i)
      out += "\n    operand " + std::to_string(i + 1) + " = " +
             operand_string(r.witness->operands[i]);
  }
  return out + "\n";
}

std::string render_text(const laws::Q213Report& r) {
  std::string out = "relation tally: S(A v B) * P(Y)  vs  S((A v B) * P(Y))";
  out += "\n  universe " + std::to_string(r.universe_size) + "  maxfam " +
         std::to_string(r.max_members) + "  cases " + std::to_string(r.cases);
  for (int c = 0; c < 4; ++c) {
    const auto& stat = r.stats[c];
    out += "\n  " + std::string(laws::to_string(
                        static_cast<laws::relation_class>(c))) +
           ": " + std::to_string(stat.count);
    if (stat.least) {
      out += "  least example:";
      for (const auto& op : stat.least->operands)
        out += " " + operand_string(op);
    }
  }
  out += "\n  union-closed operands: " + std::to_string(r.union_closed_cases) +
         " cases, " + std::to_string(r.union_closed_equal) + " equal";
  return out + "\n";
}

std::string render_text(const script::ModelOutcome& m) {
  std::string out = "model " + m.check;
  if (!m.group.empty()) out += " on " + m.group;
  if (!m.subgroup.empty()) out += ", subgroup " + m.subgroup;
  out += m.pass ? ": pass" : ": FAIL";
  if (!m.detail.empty()) out += " - " + m.detail;
  return out + "\n";
}

std::string render_text(const script::RunResult& run) {
  std::string out;
  for (const auto& st : run.statements) {
    out += "> " + st.text + "\n";
    if (!st.error.empty()) {
      out += "  error: " + st.error + "\n";
      continue;
    }
    for (const auto& n : st.notes) out += "  note: " + n + "\n";
    if (st.value) out += "  = " + value_string(*st.value) + "\n";
    if (st.report) {
      std::string r = render_text(*st.report);
      out += "  " + r;
    }
    if (st.q213) out += render_text(*st.q213);
    if (st.model) out += render_text(*st.model);
  }
  out += run.ok ? "all expectations met\n" : "EXPECTATIONS NOT MET\n";
  return out;
}

}  // namespace famalg::report
