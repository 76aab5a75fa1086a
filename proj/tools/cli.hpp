#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace brauerlab::cli {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// Everything a subcommand reports. Rows are JSON objects whose keys, in
/// insertion order, are the table columns.
struct OutputEnvelope {
  std::string schema_version;
  std::string command;
  Json parameters = Json::object();
  std::vector<std::string> columns;
  std::vector<Json> rows;
  std::vector<Check> checks;

  void add_row(Json row);
  void add_check(std::string name, bool pass, std::string detail = {});
  bool all_pass() const;
};

enum class Format { md, csv, json };

Json to_json(const OutputEnvelope& env);
std::string render(const OutputEnvelope& env, Format format);

/// Runs one subcommand. args excludes the program name. Returns 0 on
/// success, 1 when a reported check fails (or a budget runs out), 2 on
/// usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brauerlab::cli
