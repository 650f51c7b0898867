#pragma once

#include "derivation.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chartab {

struct Fixture {
  int degree = 0;
  std::vector<Perm> generators;
};

/// Generator file: a `degree: n` line, then one permutation per line in
/// cycle notation; `#` starts a comment. Throws IoError or ParseError.
Fixture parse_fixture(std::string_view text);
Fixture load_fixture(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

enum class Format { text, json, csv };
/// Throws std::invalid_argument on anything but text, json or csv.
Format parse_format(std::string_view name);

nlohmann::json classes_to_json(const GroupData& g, const std::string& name);
std::string render_classes(const GroupData& g, const std::string& name, Format f);

/// {group, classes: [labels], names: [...], characters: [[literals]]}
nlohmann::json table_to_json(const CharacterTable& t, const std::string& name);
std::string render_table(const CharacterTable& t, const std::string& name, Format f);

nlohmann::json log_to_json(const DerivationLog& log);
/// Text or JSON; CSV is rejected.
std::string render_log(const DerivationLog& log, Format f);

struct GoldenClass {
  std::string label;
  std::uint64_t size = 0;
  bool real = true;
};

struct Golden {
  std::string group;
  std::vector<GoldenClass> classes;
  /// Column labels and named rows of literals, when the file has a table.
  std::vector<std::string> table_classes;
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;
};

Golden parse_golden(const std::string& json_text);
Golden load_golden(const std::string& path);

/// steps.json: {"values": {key: literal or [literals]}, "documented": [keys]}.
References parse_references(const std::string& json_text);
References load_references(const std::string& path);

struct Comparison {
  bool ok = true;
  std::vector<std::string> diffs;
};

/// Count, labels, sizes and realness, in order.
Comparison compare_classes(const GroupData& g, const Golden& golden);

struct TableComparison : Comparison {
  /// perm[c]: golden column compared against computed column c.
  std::vector<int> column_perm;
  std::size_t rows_matched = 0;
};

/// Rows are matched by name; same-cycle-type columns may be exchanged
/// globally. The permutation matching most rows wins, identity first.
TableComparison compare_table(const CharacterTable& t, const Golden& golden);

nlohmann::json structure_to_json(const StructureReport& r, const GroupData& g);

} // namespace chartab
