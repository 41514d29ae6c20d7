#include "twistcert/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include "twistcert/error.hpp"

namespace twistcert {

nlohmann::json enclosure_to_json(const Enclosure& e, Precision bits) {
  if (e.precision() > bits) {
    throw PrecisionError("enclosure precision " + std::to_string(e.precision()) + " exceeds document precision " +
                         std::to_string(bits));
  }
  PrecisionGuard guard(bits);
  Enclosure widened = Enclosure::hull(e, e);
  return nlohmann::json::array({widened.lo_string(), widened.hi_string()});
}

Enclosure enclosure_from_json(const nlohmann::json& j, Precision bits) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    throw InputError("enclosure must be a pair of decimal strings: " + j.dump());
  }
  return Enclosure::parse_exact(j[0].get<std::string>(), j[1].get<std::string>(), bits);
}

Precision document_precision(const nlohmann::json& doc) {
  if (!doc.contains("precision") || !doc.at("precision").is_number_integer()) {
    throw InputError("document has no integer precision tag");
  }
  long bits = doc.at("precision").get<long>();
  if (bits < 32 || bits > (1 << 16)) throw InputError("document precision out of range");
  return bits;
}

std::string schema_tag(std::string_view name, int version) {
  return std::string(name) + "/" + std::to_string(version);
}

void require_schema(const nlohmann::json& doc, std::string_view name, int version) {
  if (!doc.is_object() || !doc.contains("schema") || !doc.at("schema").is_string()) {
    throw InputError("document has no schema tag; expected " + schema_tag(name, version));
  }
  std::string tag = doc.at("schema").get<std::string>();
  if (tag != schema_tag(name, version)) {
    throw InputError("unsupported schema '" + tag + "'; expected " + schema_tag(name, version));
  }
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw AlgorithmFailure("SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string json_digest(const nlohmann::json& doc) { return sha256_hex(doc.dump()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << contents;
  if (!out) throw InputError("write failed for " + path);
}

}  // namespace twistcert
