#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "twistcert/enclosure.hpp"

namespace twistcert {

// ["lo", "hi"] as decimal strings with enough digits for `bits`-bit values;
// the owning document records `bits` as its "precision" tag. Reading back at
// the same precision reproduces the endpoints exactly. Requires
// e.precision() <= bits.
nlohmann::json enclosure_to_json(const Enclosure& e, Precision bits);
Enclosure enclosure_from_json(const nlohmann::json& j, Precision bits);
Precision document_precision(const nlohmann::json& doc);

// Every file format carries {"schema": "<name>/<version>"}.
void require_schema(const nlohmann::json& doc, std::string_view name, int version);
std::string schema_tag(std::string_view name, int version);

std::string sha256_hex(std::string_view data);
// Digest of the canonical (sorted-key, compact) serialization.
std::string json_digest(const nlohmann::json& doc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace twistcert
