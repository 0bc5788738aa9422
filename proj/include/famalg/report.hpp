#pragma once

#include <json.hpp>
#include <string>

#include "famalg/laws.hpp"
#include "famalg/script.hpp"

// Rendering of engine results. Structured output is standard JSON with
// lexicographic key order (the schema field names the version); identical
// inputs render byte-identically.

namespace famalg::report {

inline constexpr const char* kSchema = "famalg-report/1";

nlohmann::json to_json(const laws::Binding& b);
nlohmann::json to_json(const laws::SearchReport& r);
nlohmann::json to_json(const laws::Q213Report& r);
nlohmann::json to_json(const script::ModelOutcome& m);
nlohmann::json to_json(const script::RunResult& run);

/// Top-level documents (schema header + payload), serialized with dump(2).
std::string check_report_json(const laws::SearchReport& r);
std::string q213_report_json(const laws::Q213Report& r);
std::string model_report_json(const script::ModelOutcome& m);
std::string run_report_json(const script::RunResult& run);

std::string value_string(const script::Value& v);

std::string render_text(const laws::SearchReport& r);
std::string render_text(const laws::Q213Report& r);
std::string render_text(const script::ModelOutcome& m);
std::string render_text(const script::RunResult& run);

}  // namespace famalg::report
