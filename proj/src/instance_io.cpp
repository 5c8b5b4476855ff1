#include "fairhouse/instance_io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace fairhouse {
namespace {

ParseError error_at(const YAML::Node& node, const std::string& message,
                    const std::string& field) {
  const YAML::Mark mark = node.Mark();
  int line = mark.line >= 0 ? mark.line + 1 : 0;
  int column = mark.column >= 0 ? mark.column + 1 : 0;
  return ParseError(message, line, column, field);
}

int read_count(const YAML::Node& root, const std::string& field) {
  YAML::Node node = root[field];
  if (!node) throw ParseError("missing required field", 0, 0, field);
  if (!node.IsScalar()) throw error_at(node, "expected an integer", field);
  auto value = parse_rational(node.Scalar());
  if (!value || boost::multiprecision::denominator(*value) != 1)
    throw error_at(node, "expected an integer, got '" + node.Scalar() + "'", field);
  auto narrowed = to_int64(*value);
  if (!narrowed || *narrowed < 0 || *narrowed > 1'000'000)
    throw ValidationError("field '" + field + "' must be a non-negative count, got " +
                          node.Scalar());
  return static_cast<int>(*narrowed);
}

std::vector<std::string> read_labels(const YAML::Node& root, const std::string& field) {
  YAML::Node node = root[field];
  std::vector<std::string> out;
  if (!node || node.IsNull()) return out;
  if (!node.IsSequence()) throw error_at(node, "expected a list of strings", field);
  for (const auto& item : node) {
    if (!item.IsScalar()) throw error_at(item, "expected a string", field);
    out.push_back(item.Scalar());
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file " + path.string(), 0, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

Instance parse_instance(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
  }
  if (!root.IsMap()) throw ParseError("expected a mapping at top level", 1, 1);

  static const std::set<std::string> known = {"agents", "houses", "values",
                                              "agent_labels", "house_labels"};
  for (const auto& kv : root) {
    const std::string key = kv.first.Scalar();
    if (!known.count(key)) throw error_at(kv.first, "unknown field", key);
  }

  const int n = read_count(root, "agents");
  const int m = read_count(root, "houses");
  if (n < 1) throw ValidationError("instance needs at least one agent");
  if (m < 1) throw ValidationError("instance needs at least one house");

  YAML::Node rows = root["values"];
  if (!rows) throw ParseError("missing required field", 0, 0, "values");
  if (!rows.IsSequence()) throw error_at(rows, "expected a list of rows", "values");
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw error_at(rows, "expected " + std::to_string(n) + " rows, got " +
                             std::to_string(rows.size()),
                   "values");
  }

  ValueMatrix<Rational> values(n, m);
  for (int i = 0; i < n; ++i) {
    const YAML::Node row = rows[static_cast<std::size_t>(i)];
    const std::string field = "values[" + std::to_string(i) + "]";
    if (!row.IsSequence()) throw error_at(row, "expected a list of values", field);
    if (row.size() != static_cast<std::size_t>(m)) {
      throw error_at(row, "ragged row: expected " + std::to_string(m) +
                              " values, got " + std::to_string(row.size()),
                     field);
    }
    for (int h = 0; h < m; ++h) {
      const YAML::Node cell = row[static_cast<std::size_t>(h)];
      const std::string cell_field = field + "[" + std::to_string(h) + "]";
      if (!cell.IsScalar()) throw error_at(cell, "expected a number", cell_field);
      auto value = parse_rational(cell.Scalar());
      if (!value)
        throw error_at(cell, "not a number: '" + cell.Scalar() + "'", cell_field);
      if (*value < 0) {
        throw ValidationError("value " + cell_field + " = " + cell.Scalar() +
                              " is negative; values must be >= 0");
      }
      values(i, h) = *value;
    }
  }

  return Instance(std::move(values), read_labels(root, "agent_labels"),
                  read_labels(root, "house_labels"));
}

std::string write_instance(const Instance& inst) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "agents" << YAML::Value << inst.agent_count();
  out << YAML::Key << "houses" << YAML::Value << inst.house_count();
  out << YAML::Key << "values" << YAML::Value << YAML::BeginSeq;
  for (int i = 0; i < inst.agent_count(); ++i) {
    out << YAML::Flow << YAML::BeginSeq;
    for (int h = 0; h < inst.house_count(); ++h) out << format_rational(inst.value(i, h));
    out << YAML::EndSeq;
  }
  out << YAML::EndSeq;
  if (!inst.agent_labels.empty())
    out << YAML::Key << "agent_labels" << YAML::Value << YAML::Flow << inst.agent_labels;
  if (!inst.house_labels.empty())
    out << YAML::Key << "house_labels" << YAML::Value << YAML::Flow << inst.house_labels;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

Instance load_instance(const std::filesystem::path& path) {
  return parse_instance(read_file(path));
}

Allocation parse_allocation(std::string_view text, int agent_count) {
  Allocation alloc(agent_count);
  std::vector<bool> seen(static_cast<std::size_t>(agent_count), false);
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw ParseError("expected 'agent -> house' or 'agent -> -'", line_no, 1);
    std::string lhs = trim(std::string_view(line).substr(0, arrow));
    std::string rhs = trim(std::string_view(line).substr(arrow + 2));

    auto parse_index = [&](const std::string& s, int column) {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos ||
          s.size() > 9)
        throw ParseError("expected a non-negative index, got '" + s + "'", line_no, column);
      return std::stoi(s);
    };
    int agent = parse_index(lhs, 1);
    if (agent >= agent_count) {
      throw InvalidAllocation("line " + std::to_string(line_no) + ": agent " +
                              std::to_string(agent) + " out of range [0, " +
                              std::to_string(agent_count) + ")");
    }
    if (seen[static_cast<std::size_t>(agent)])
      throw ParseError("agent " + std::to_string(agent) + " listed twice", line_no, 1);
    seen[static_cast<std::size_t>(agent)] = true;
    if (rhs == "-") continue;
    alloc.assign(agent, parse_index(rhs, static_cast<int>(arrow) + 3));
  }
  return alloc;
}

std::string write_allocation(const Allocation& alloc) {
  std::string out;
  for (int i = 0; i < alloc.agent_count(); ++i) {
    out += std::to_string(i) + " -> ";
    out += alloc.is_assigned(i) ? std::to_string(alloc.house(i)) : std::string("-");
    out += "\n";
  }
  return out;
}

Allocation load_allocation(const std::filesystem::path& path, int agent_count) {
  return parse_allocation(read_file(path), agent_count);
}

std::string format_report(const Instance& inst, const EnvyReport& report) {
  std::ostringstream out;
  out << "size: " << report.size << "\n";
  out << "usw: " << format_rational(report.usw) << "\n";
  out << "esw_k: " << report.esw_k << "\n";
  out << "esw_beta: " << format_rational(report.esw_beta) << "\n";
  out << "num_envious: " << report.num_envious << "\n";
  out << "total_envy: " << format_rational(report.total_envy) << "\n";
  out << "max_agent_envy: " << format_rational(report.max_agent_envy) << "\n";
  out << "envious_agents:";
  for (int i = 0; i < inst.agent_count(); ++i)
    if (report.envious_flags[static_cast<std::size_t>(i)]) out << " " << inst.agent_name(i);
  out << "\n";
  out << "per_agent_envy:";
  for (const auto& e : report.per_agent_envy) out << " " << format_rational(e);
  out << "\n";
  return out.str();
}

}  // namespace fairhouse
