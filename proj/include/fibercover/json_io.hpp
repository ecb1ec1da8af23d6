#pragma once

#include "fibercover/certify.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace fibercover {

// Serialization of certificates, scan tables, and the engine configuration.
// Big integers travel as decimal strings. Readers throw std::invalid_argument
// on malformed or out-of-schema input.

nlohmann::json certificate_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

std::string certificate_csv_header();
std::string certificate_csv_row(const Certificate& c);

nlohmann::json scan_json(const std::string& word,
                         const std::vector<ScanRow>& rows);
std::string scan_csv(const std::string& word, const std::vector<ScanRow>& rows);

nlohmann::json config_json(const EngineConfig& cfg);
EngineConfig config_from_json(const nlohmann::json& j);

}  // namespace fibercover
