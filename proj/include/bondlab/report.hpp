#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bondlab/bounds.hpp"
#include "bondlab/harness.hpp"

namespace bondlab {

enum class ReportFormat { Csv, Json, Text };

/// Parses "csv", "json" or "text"; nullopt otherwise.
std::optional<ReportFormat> parse_report_format(const std::string& name);

/// Column order of the per-graph CSV.
const std::vector<std::string>& record_csv_columns();

/// One row per record (RFC 4180 quoting).
std::string records_csv(const std::vector<VerificationRecord>& records);
/// One row per (record, check).
std::string checks_csv(const std::vector<VerificationRecord>& records);
/// {"records": [...], "summary": {...}} with a fixed key order.
std::string corpus_json(const CorpusReport& report, int indent = 2);
std::string corpus_text(const CorpusReport& report);
std::string emit_corpus(const CorpusReport& report, ReportFormat format);

std::string table_text(const std::vector<bounds::TableRow>& rows);
std::string table_csv(const std::vector<bounds::TableRow>& rows);
std::string table_json(const std::vector<bounds::TableRow>& rows, int indent = 2);

std::string bound_report_text(const bounds::BoundReport& report);
std::string bound_report_csv(const bounds::BoundReport& report);
std::string bound_report_json(const bounds::BoundReport& report, int indent = 2);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& value);
/// Integral values without a decimal point, others with up to 12 significant digits.
std::string format_number(double value);

}  // namespace bondlab
