#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "fqdigraph/monomial.hpp"
#include "fqdigraph/oracle.hpp"
#include "fqdigraph/theorem.hpp"
#include "fqdigraph/verify.hpp"

namespace fqdigraph {

enum class ReportFormat { Json, Csv, Text };

/// "json" | "csv" | "text", anything else is a SchemaError.
ReportFormat parse_format(const std::string& name);

/// Order multisets are emitted expanded and ascending up to this many
/// components; past it each entry becomes an [order, multiplicity] pair.
constexpr std::uint64_t kOrdersExpandCap = 10000;

nlohmann::json report_json(const ComponentStructure& s);
nlohmann::json report_json(const MonomialStructure& s);
nlohmann::json report_json(const SubgroupReport& r);
nlohmann::json report_json(const Partition& part);
nlohmann::json report_json(const std::vector<VerifyCase>& cases);

/// All emitters end the output with a newline and are byte-stable for a
/// fixed report. JSON keys come out sorted; csv rows carry no header.
void emit_report(const ComponentStructure& s, ReportFormat fmt,
                 std::ostream& sink);
void emit_report(const MonomialStructure& s, ReportFormat fmt,
                 std::ostream& sink);
void emit_report(const SubgroupReport& r, ReportFormat fmt,
                 std::ostream& sink);
void emit_report(const Partition& part, ReportFormat fmt, std::ostream& sink);
void emit_report(const std::vector<VerifyCase>& cases, ReportFormat fmt,
                 std::ostream& sink);
void emit_diameter_report(std::uint64_t diameter, ReportFormat fmt,
                          std::ostream& sink);

}  // namespace fqdigraph
