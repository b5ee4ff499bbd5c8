#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vrsplit/metric.hpp"

namespace vrsplit {

using nlohmann::json;

namespace detail {
inline bool numeric_field(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.' && c != '-' && c != '+' &&
        c != '/' && c != 'e' && c != 'E' && !std::isspace(static_cast<unsigned char>(c)))
      return false;
  return true;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',' || c == ';' || c == '\t') {
      out.push_back(cur);
      cur.clear();
    } else
      cur += c;
  }
  out.push_back(cur);
  while (!out.empty() && out.back().find_first_not_of(" \r\n") == std::string::npos)
    out.pop_back();
  return out;
}
}  // namespace detail

// Square matrix from CSV; a leading header row (any non-numeric field) is
// skipped. Throws std::invalid_argument on ragged or non-square input.
template <typename S>
distance_matrix<S> read_matrix_csv(std::istream& in) {
  std::vector<std::vector<S>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    auto fields = detail::split_csv_line(line);
    if (first) {
      first = false;
      bool header = false;
      for (auto& f : fields)
        if (!detail::numeric_field(f)) header = true;
      if (header) continue;
    }
    std::vector<S> row;
    row.reserve(fields.size());
    for (auto& f : fields) row.push_back(numeric_traits<S>::parse(f));
    rows.push_back(std::move(row));
  }
  size_t n = rows.size();
  if (n == 0) throw std::invalid_argument("csv matrix: no rows");
  std::vector<S> flat;
  flat.reserve(n * n);
  for (auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("csv matrix: not square");
    for (auto& v : r) flat.push_back(std::move(v));
  }
  return distance_matrix<S>(static_cast<int>(n), std::move(flat));
}

template <typename S>
S parse_json_number(const json& v) {
  if (v.is_string()) return numeric_traits<S>::parse(v.get<std::string>());
  if (v.is_number_integer()) return numeric_traits<S>::from_int(v.get<long>());
  if (v.is_number_float()) return numeric_traits<S>::parse(std::to_string(v.get<double>()));
  throw std::invalid_argument("expected a number or 'p/q' string");
}

// Emits exact integers as JSON numbers and everything else as strings, so
// rationals survive a round trip.
template <typename S>
json format_json_number(const S& v) {
  std::string s = numeric_traits<S>::format(v);
  if (s.find('/') == std::string::npos && s.size() < 18 &&
      s.find('.') == std::string::npos && s.find('e') == std::string::npos)
    return json(std::stoll(s));
  return json(s);
}

// {"n": int, "d": [[...]]}
template <typename S>
distance_matrix<S> read_matrix_json(const json& j) {
  if (!j.contains("n") || !j.contains("d"))
    throw std::invalid_argument("matrix json: expected fields 'n' and 'd'");
  int n = j.at("n").get<int>();
  const json& d = j.at("d");
  if (!d.is_array() || static_cast<int>(d.size()) != n)
    throw std::invalid_argument("matrix json: 'd' is not an n-row array");
  std::vector<S> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (auto& row : d) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix json: not square");
    for (auto& v : row) flat.push_back(parse_json_number<S>(v));
  }
  return distance_matrix<S>(n, std::move(flat));
}

template <typename S>
json write_matrix_json(const distance_matrix<S>& m) {
  json rows = json::array();
  for (int i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(format_json_number(m(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"n", m.size()}, {"d", std::move(rows)}};
}

}  // namespace vrsplit
