#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace nfbeam::app {

// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);

double parse_double(const std::string& text);

// FNV-1a 64-bit hash of a string, as "0x" + 16 hex digits.
std::string fnv1a_hex(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);

// One CSV document: a '#'-prefixed comment line embedding the resolved
// configuration, a header row, then the data rows. LF line endings.
struct csv_document {
    nlohmann::ordered_json config;
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

std::string render_csv(const csv_document& doc);

// Parses a document produced by render_csv (used by tests and any consumer
// that wants the embedded config back).
csv_document parse_csv(const std::string& text);

std::string render_json(const nlohmann::ordered_json& j);

}  // namespace nfbeam::app
