/*
   Copyright 2026 The socdist authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "socdist/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace socdist {

RawPointFile parse_point_file(const std::string& json_text, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(origin + ": " + e.what());
  }
  if (!j.is_object()) throw input_error(origin + ": top level must be a JSON object");
  RawPointFile raw;
  if (!j.contains("version") || !j["version"].is_number_integer())
    throw input_error(origin + ": missing integer \"version\"");
  raw.version = j["version"].get<int>();
  if (raw.version != 1)
    throw input_error(origin + ": unsupported point-file version " + std::to_string(raw.version));
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() < 1)
    throw input_error(origin + ": missing or invalid projective dimension \"n\"");
  raw.n = j["n"].get<int>();
  if (!j.contains("points") || !j["points"].is_array())
    throw input_error(origin + ": missing \"points\" array");
  for (std::size_t i = 0; i < j["points"].size(); ++i) {
    const auto& row = j["points"][i];
    if (!row.is_array())
      throw input_error(origin + ": points[" + std::to_string(i) + "] is not an array");
    std::vector<std::string> coords;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (!row[k].is_string())
        throw input_error(origin + ": points[" + std::to_string(i) + "][" + std::to_string(k) +
                          "] must be a string (coordinates are exact strings, not numbers)");
      coords.push_back(row[k].get<std::string>());
    }
    raw.coords.push_back(std::move(coords));
  }
  return raw;
}

RawPointFile read_point_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open point file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_point_file(ss.str(), path);
}

std::string serialize_point_file(const RawPointFile& raw) {
  nlohmann::ordered_json j;
  j["version"] = raw.version;
  j["n"] = raw.n;
  j["points"] = nlohmann::json::array();
  for (const auto& row : raw.coords) j["points"].push_back(row);
  return j.dump(2) + "\n";
}

void write_point_file(const std::string& path, const RawPointFile& raw) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write point file: " + path);
  out << serialize_point_file(raw);
}

std::string digest64(const std::string& bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = hex[h & 0xF];
    h >>= 4;
  }
  return s;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file for digest: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return digest64(ss.str());
}

}  // namespace socdist
