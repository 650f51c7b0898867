#include "io.hpp"

#include "errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chartab {

using nlohmann::json;

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content)
{
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content))
    throw IoError("cannot write " + path);
}

Fixture parse_fixture(std::string_view text)
{
  Fixture f;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty())
      continue;
    if (line.rfind("degree:", 0) == 0) {
      if (f.degree != 0)
        throw ParseError("line " + std::to_string(lineno) + ": degree given twice");
      try {
        std::size_t used = 0;
        const std::string v = line.substr(7);
        f.degree = std::stoi(v, &used);
        if (v.find_first_not_of(" \t", used) != std::string::npos)
          throw std::invalid_argument("trailing text");
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": malformed degree");
      }
      if (f.degree < 1 || f.degree > kMaxDegree)
        throw ParseError("line " + std::to_string(lineno) + ": degree must be between 1 and " +
                         std::to_string(kMaxDegree));
      continue;
    }
    if (f.degree == 0)
      throw ParseError("line " + std::to_string(lineno) + ": generator before the degree line");
    try {
      f.generators.push_back(parse_perm(line, f.degree));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (f.degree == 0)
    throw ParseError("fixture has no degree line");
  if (f.generators.empty())
    throw ParseError("fixture has no generators");
  return f;
}

Fixture load_fixture(const std::string& path)
{
  const std::string text = read_file(path);
  try {
    return parse_fixture(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Format parse_format(std::string_view name)
{
  if (name == "text")
    return Format::text;
  if (name == "json")
    return Format::json;
  if (name == "csv")
    return Format::csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected text, json or csv)");
}

namespace {

std::string pad(const std::string& s, std::size_t width, bool right = false)
{
  if (s.size() >= width)
    return s;
  return right ? std::string(width - s.size(), ' ') + s : s + std::string(width - s.size(), ' ');
}

std::string csv_field(const std::string& s)
{
  if (s.find_first_of(",\"\n ") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s)
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string aligned(const std::vector<std::vector<std::string>>& cells, std::size_t right_from = 1)
{
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i)
      line += (i ? "  " : "") + pad(row[i], width[i], i >= right_from);
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + '\n';
  }
  return out;
}

} // namespace

json classes_to_json(const GroupData& g, const std::string& name)
{
  json classes = json::array();
  for (const auto& cd : g.classes()) {
    json pm = json::object();
    for (const auto& [p, c] : cd.power_map)
      pm[std::to_string(p)] = c;
    classes.push_back({{"id", cd.id},
                       {"label", cd.label},
                       {"size", cd.size},
                       {"element_order", cd.element_order},
                       {"centralizer_order", cd.centralizer_order},
                       {"fixed_points", cd.fixed_points},
                       {"real", cd.real},
                       {"inverse_class", cd.inverse_class},
                       {"power_map", pm},
                       {"representative", cd.representative.to_string()}});
  }
  return {{"group", name}, {"degree", g.degree()}, {"order", g.order()}, {"classes", classes}};
}

std::string render_classes(const GroupData& g, const std::string& name, Format f)
{
  if (f == Format::json)
    return classes_to_json(g, name).dump(2) + '\n';
  if (f == Format::csv) {
    std::string out = "id,label,size,element_order,centralizer_order,fixed_points,real\n";
    for (const auto& cd : g.classes()) {
      out += std::to_string(cd.id) + ',' + csv_field(cd.label) + ',' + std::to_string(cd.size) + ',' +
             std::to_string(cd.element_order) + ',' + std::to_string(cd.centralizer_order) + ',' +
             std::to_string(cd.fixed_points) + ',' + (cd.real ? "true" : "false") + '\n';
    }
    return out;
  }
  std::vector<std::vector<std::string>> cells{{"class", "size", "order", "centralizer", "fixed", "real"}};
  for (const auto& cd : g.classes()) {
    cells.push_back({cd.label, std::to_string(cd.size), std::to_string(cd.element_order),
                     std::to_string(cd.centralizer_order), std::to_string(cd.fixed_points),
                     cd.real ? "yes" : "no"});
  }
  return name + ": degree " + std::to_string(g.degree()) + ", order " + std::to_string(g.order()) + ", " +
         std::to_string(g.class_count()) + " classes\n" + aligned(cells);
}

json table_to_json(const CharacterTable& t, const std::string& name)
{
  json labels = json::array(), names = json::array(), rows = json::array();
  for (const auto& cd : t.group->classes())
    labels.push_back(cd.label);
  for (const auto& r : t.rows) {
    names.push_back(r.name);
    json row = json::array();
    for (const auto& v : r.chi.values)
      row.push_back(v.to_string());
    rows.push_back(row);
  }
  return {{"group", name}, {"classes", labels}, {"names", names}, {"characters", rows}};
}

std::string render_table(const CharacterTable& t, const std::string& name, Format f)
{
  if (f == Format::json)
    return table_to_json(t, name).dump(2) + '\n';
  const auto& classes = t.group->classes();
  if (f == Format::csv) {
    std::string out = "name";
    for (const auto& cd : classes)
      out += ',' + csv_field(cd.label);
    out += '\n';
    for (const auto& r : t.rows) {
      out += r.name;
      for (const auto& v : r.chi.values)
        out += ',' + csv_field(v.to_string());
      out += '\n';
    }
    return out;
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{name};
  for (const auto& cd : classes)
    head.push_back(cd.label);
  cells.push_back(head);
  for (const auto& r : t.rows) {
    std::vector<std::string> line{r.name};
    for (const auto& v : r.chi.values)
      line.push_back(v.to_string());
    cells.push_back(line);
  }
  return aligned(cells);
}

json log_to_json(const DerivationLog& log)
{
  json steps = json::array();
  for (const auto& s : log.steps) {
    json checks = json::array();
    for (const auto& c : s.checks) {
      json jc = {{"key", c.key}, {"kind", to_string(c.kind)}, {"computed", c.computed}, {"matches", c.matches}};
      jc["printed"] = c.printed ? json(*c.printed) : json(nullptr);
      if (!c.note.empty())
        jc["note"] = c.note;
      checks.push_back(jc);
    }
    json js = {{"index", s.index},     {"section", s.section}, {"action", s.action},
               {"cite", s.cite},       {"output", s.output},   {"checks", checks},
               {"notes", s.notes}};
    js["degree"] = s.degree ? json(*s.degree) : json(nullptr);
    js["norm"] = s.norm ? json(*s.norm) : json(nullptr);
    steps.push_back(js);
  }
  json div = json::array();
  for (const auto& d : log.divergences) {
    div.push_back({{"key", d.key},
                   {"kind", to_string(d.kind)},
                   {"printed", d.printed},
                   {"computed", d.computed},
                   {"documented", d.documented}});
  }
  return {{"steps", steps}, {"divergences", div}};
}

std::string render_log(const DerivationLog& log, Format f)
{
  if (f == Format::json)
    return log_to_json(log).dump(2) + '\n';
  if (f == Format::csv)
    throw std::invalid_argument("derivation logs are written as text or json");
  return log.to_text();
}

Golden parse_golden(const std::string& json_text)
{
  Golden g;
  try {
    const json j = json::parse(json_text, nullptr, true, true);
    g.group = j.value("group", "");
    for (const auto& c : j.at("classes")) {
      if (c.is_string()) {
        g.table_classes.push_back(c.get<std::string>());
        continue;
      }
      g.classes.push_back({c.at("label").get<std::string>(), c.at("size").get<std::uint64_t>(),
                           c.at("real").get<bool>()});
      g.table_classes.push_back(g.classes.back().label);
    }
    if (j.contains("characters")) {
      const auto& names = j.at("names");
      const auto& rows = j.at("characters");
      if (names.size() != rows.size())
        throw ParseError("golden: names and characters differ in length");
      for (std::size_t i = 0; i < rows.size(); ++i)
        g.rows.emplace_back(names[i].get<std::string>(), rows[i].get<std::vector<std::string>>());
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("golden: ") + e.what());
  }
  return g;
}

Golden load_golden(const std::string& path)
{
  try {
    return parse_golden(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

References parse_references(const std::string& json_text)
{
  References r;
  try {
    const json j = json::parse(json_text, nullptr, true, true);
    for (const auto& [key, v] : j.at("values").items()) {
      if (v.is_array())
        r.values[key] = v.get<std::vector<std::string>>();
      else
        r.values[key] = {v.get<std::string>()};
    }
    if (j.contains("documented")) {
      for (const auto& k : j.at("documented"))
        r.documented.insert(k.get<std::string>());
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("references: ") + e.what());
  }
  return r;
}

References load_references(const std::string& path)
{
  try {
    return parse_references(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Comparison compare_classes(const GroupData& g, const Golden& golden)
{
  Comparison c;
  const auto& classes = g.classes();
  if (classes.size() != golden.classes.size()) {
    c.ok = false;
    c.diffs.push_back("class count " + std::to_string(classes.size()) + ", golden " +
                      std::to_string(golden.classes.size()));
  }
  for (std::size_t i = 0; i < std::min(classes.size(), golden.classes.size()); ++i) {
    const auto& cd = classes[i];
    const auto& gd = golden.classes[i];
    if (cd.label != gd.label || cd.size != gd.size || cd.real != gd.real) {
      c.ok = false;
      c.diffs.push_back("class " + std::to_string(i) + ": computed " + cd.label + " size " +
                        std::to_string(cd.size) + (cd.real ? " real" : " non-real") + ", golden " + gd.label +
                        " size " + std::to_string(gd.size) + (gd.real ? " real" : " non-real"));
    }
  }
  return c;
}

TableComparison compare_table(const CharacterTable& t, const Golden& golden)
{
  TableComparison out;
  const auto& classes = t.group->classes();
  if (golden.rows.empty()) {
    out.ok = false;
    out.diffs.push_back("golden file has no character table");
    return out;
  }
  if (golden.table_classes.size() != classes.size()) {
    out.ok = false;
    out.diffs.push_back("golden table has " + std::to_string(golden.table_classes.size()) + " columns, computed " +
                        std::to_string(classes.size()));
    return out;
  }
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (golden.table_classes[c] != classes[c].label) {
      out.ok = false;
      out.diffs.push_back("column " + std::to_string(c) + ": computed " + classes[c].label + ", golden " +
                          golden.table_classes[c]);
    }
  }
  if (!out.ok)
    return out;

  std::vector<std::pair<std::string, std::vector<CycNum>>> gold;
  for (const auto& [name, lits] : golden.rows) {
    std::vector<CycNum> v;
    for (const auto& l : lits)
      v.push_back(CycNum::parse(l));
    if (v.size() != classes.size())
      throw ParseError("golden row " + name + " has " + std::to_string(v.size()) + " entries");
    gold.emplace_back(name, std::move(v));
  }

  auto matches = [&](const std::vector<int>& perm, const ClassFunction& chi, const std::vector<CycNum>& g) {
    for (std::size_t c = 0; c < chi.size(); ++c) {
      if (chi[c] != g[static_cast<std::size_t>(perm[c])])
        return false;
    }
    return true;
  };
  std::size_t best = 0;
  std::vector<int> best_perm;
  for (const auto& perm : column_permutations(*t.group)) {
    std::size_t n = 0;
    for (const auto& [name, g] : gold) {
      if (const auto* row = t.find(name); row && matches(perm, row->chi, g))
        ++n;
    }
    if (best_perm.empty() || n > best) {
      best = n;
      best_perm = perm;
    }
  }
  out.column_perm = best_perm;
  out.rows_matched = best;
  if (t.rows.size() != gold.size()) {
    out.ok = false;
    out.diffs.push_back("computed " + std::to_string(t.rows.size()) + " characters, golden " +
                        std::to_string(gold.size()));
  }
  for (const auto& [name, g] : gold) {
    const auto* row = t.find(name);
    if (!row) {
      out.ok = false;
      out.diffs.push_back(name + ": not derived");
      continue;
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const CycNum& want = g[static_cast<std::size_t>(best_perm[c])];
      if (row->chi[c] != want) {
        out.ok = false;
        out.diffs.push_back(name + " at " + classes[c].label + ": computed " + row->chi[c].to_string() +
                            ", golden " + want.to_string());
      }
    }
  }
  return out;
}

json structure_to_json(const StructureReport& r, const GroupData& g)
{
  json kernels = json::array();
  for (const auto& k : r.kernels) {
    json labels = json::array();
    for (int c : k.classes)
      labels.push_back(g.classes()[static_cast<std::size_t>(c)].label);
    kernels.push_back({{"character", k.character}, {"classes", labels}, {"order", k.order}});
  }
  json out = {{"simple", r.simple},
              {"kernels", kernels},
              {"proper_kernel_orders", r.proper_kernel_orders},
              {"unique_proper_kernel", r.unique_proper_kernel},
              {"no_involution_outside", r.no_involution_outside},
              {"summary", r.summary}};
  out["index2_kernel"] = r.index2_kernel ? json(*r.index2_kernel) : json(nullptr);
  return out;
}

} // namespace chartab
