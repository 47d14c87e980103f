#include "bfa/json_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bfa/error.hpp"

namespace bfa {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& message) {
  throw Error(ErrorCode::parse_error, message);
}

}  // namespace

MassFunction parse_mass_function(const std::string& text, double eps) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(e.what());
  }
  if (!doc.is_object()) parse_fail("document must be a JSON object");
  if (!doc.contains("frame") || !doc["frame"].is_array()) {
    parse_fail("\"frame\" must be an array of labels");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < doc["frame"].size(); ++i) {
    const auto& item = doc["frame"][i];
    if (!item.is_string()) {
      parse_fail("frame[" + std::to_string(i) + "]: labels must be strings");
    }
    labels.push_back(item.get<std::string>());
  }
  Frame frame = [&] {
    try {
      return Frame::from_labels(std::move(labels));
    } catch (const Error& e) {
      parse_fail(std::string("frame: ") + e.what());
    }
  }();

  if (!doc.contains("masses") || !doc["masses"].is_array()) {
    parse_fail("\"masses\" must be an array of {set, mass} entries");
  }
  std::vector<MassFunction::Entry> entries;
  for (std::size_t i = 0; i < doc["masses"].size(); ++i) {
    const std::string where = "masses[" + std::to_string(i) + "]";
    const auto& item = doc["masses"][i];
    if (!item.is_object() || !item.contains("set") || !item.contains("mass")) {
      parse_fail(where + ": expected an object with \"set\" and \"mass\"");
    }
    if (!item["set"].is_array()) parse_fail(where + ".set: must be an array of labels");
    std::vector<std::string> members;
    for (std::size_t j = 0; j < item["set"].size(); ++j) {
      const auto& member = item["set"][j];
      if (!member.is_string()) {
        parse_fail(where + ".set[" + std::to_string(j) + "]: labels must be strings");
      }
      members.push_back(member.get<std::string>());
    }
    Subset set;
    try {
      set = frame.subset_from_labels(members);
    } catch (const Error& e) {
      parse_fail(where + ".set: " + e.what());
    }
    if (!item["mass"].is_number()) parse_fail(where + ".mass: must be a number");
    const double mass = item["mass"].get<double>();
    if (set.empty() && mass > eps) {
      parse_fail(where + ": the empty set cannot carry mass");
    }
    if (!set.empty() && mass <= 0.0) {
      parse_fail(where + ".mass: must be positive");
    }
    entries.push_back({set, mass});
  }
  return MassFunction::from_entries(std::move(frame), entries, eps);
}

MassFunction load_mass_function(const std::filesystem::path& path, double eps) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::parse_error, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_mass_function(buffer.str(), eps);
}

std::string mass_function_to_json(const MassFunction& m, int indent) {
  json doc;
  doc["frame"] = m.frame().labels();
  json masses = json::array();
  for (const auto& entry : m.entries()) {
    json item;
    item["set"] = m.frame().labels_of(entry.set);
    item["mass"] = entry.mass;
    masses.push_back(std::move(item));
  }
  doc["masses"] = std::move(masses);
  return doc.dump(indent);
}

void save_mass_function(const MassFunction& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::parse_error, "cannot open " + path.string() + " for writing");
  }
  out << mass_function_to_json(m, 2) << '\n';
}

}  // namespace bfa
