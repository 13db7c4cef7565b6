#include "unigraph/io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "unigraph/error.hpp"

namespace unigraph {

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

// Line on which the r-th row of the "adjacency" array starts, best effort.
std::size_t json_row_line(std::string_view text, int r) {
  const std::size_t key = text.find("\"adjacency\"");
  if (key == std::string_view::npos) return 1;
  std::size_t pos = text.find('[', key);
  int depth = 0, row = -1;
  for (; pos < text.size(); ++pos) {
    if (text[pos] == '[' && ++depth == 2 && ++row == r) return line_of(text, pos);
    if (text[pos] == ']' && --depth == 0) break;
  }
  return line_of(text, key);
}

IntMatrix parse_json_matrix(std::string_view text, int max_entry) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_of(text, e.byte == 0 ? 0 : e.byte - 1), "invalid JSON");
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("adjacency"))
    throw ParseError(1, "expected an object with \"n\" and \"adjacency\"");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
    throw ParseError(1, "\"n\" must be a positive integer");
  const int n = j["n"].get<int>();
  const Json& rows = j["adjacency"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw ParseError(json_row_line(text, 0), "adjacency must have n rows");
  IntMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    const Json& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError(json_row_line(text, r), "row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
    for (int c = 0; c < n; ++c) {
      if (!row[c].is_number_integer()) throw ParseError(json_row_line(text, r), "entries must be integers");
      const long long v = row[c].get<long long>();
      if (v < 0 || v > max_entry)
        throw ParseError(json_row_line(text, r), "entry " + std::to_string(v) + " out of range");
      m(r, c) = static_cast<int>(v);
    }
  }
  return m;
}

IntMatrix parse_text_matrix(std::string_view text, int max_entry) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto tokens = [&]() {
    std::vector<long long> out;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw ParseError(lineno, "not an integer: '" + tok + "'");
      }
      if (used != tok.size()) throw ParseError(lineno, "not an integer: '" + tok + "'");
      out.push_back(v);
    }
    return out;
  };

  if (!next_line()) throw ParseError(1, "empty input");
  const auto head = tokens();
  if (head.size() != 1 || head[0] < 1 || head[0] > 1 << 16) throw ParseError(lineno, "first line must be the order n >= 1");
  const int n = static_cast<int>(head[0]);
  IntMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    if (!next_line()) throw ParseError(lineno + 1, "expected " + std::to_string(n) + " rows, got " + std::to_string(r));
    const auto row = tokens();
    if (static_cast<int>(row.size()) != n)
      throw ParseError(lineno, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    for (int c = 0; c < n; ++c) {
      if (row[c] < 0 || row[c] > max_entry) throw ParseError(lineno, "entry " + std::to_string(row[c]) + " out of range");
      m(r, c) = static_cast<int>(row[c]);
    }
  }
  if (next_line()) throw ParseError(lineno, "trailing content after " + std::to_string(n) + " rows");
  return m;
}

IntMatrix parse_matrix(std::string_view text, int max_entry) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError(1, "empty input");
  return text[first] == '{' ? parse_json_matrix(text, max_entry) : parse_text_matrix(text, max_entry);
}

}  // namespace

Digraph parse_digraph(std::string_view text) { return Digraph(parse_matrix(text, 1)); }

Multidigraph parse_multidigraph(std::string_view text) {
  return Multidigraph(parse_matrix(text, std::numeric_limits<int>::max()));
}

Digraph read_digraph(const std::string& path) { return parse_digraph(read_file(path)); }

std::string to_text(const Digraph& d) {
  std::string s = std::to_string(d.order()) + "\n";
  for (int i = 0; i < d.order(); ++i) {
    for (int j = 0; j < d.order(); ++j) {
      if (j) s += ' ';
      s += d.has_arc(i, j) ? '1' : '0';
    }
    s += '\n';
  }
  return s;
}

std::string to_json_text(const Digraph& d) {
  std::string s = "{\n  \"n\": " + std::to_string(d.order()) + ",\n  \"adjacency\": [\n";
  for (int i = 0; i < d.order(); ++i) {
    s += "    [";
    for (int j = 0; j < d.order(); ++j) {
      if (j) s += ',';
      s += d.has_arc(i, j) ? '1' : '0';
    }
    s += i + 1 < d.order() ? "],\n" : "]\n";
  }
  return s + "  ]\n}\n";
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << content)) throw InputError("cannot write '" + path + "'");
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return {{"n", m.rows()}, {"entries", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    const Json& rows = j.at("entries");
    if (n < 1 || static_cast<int>(rows.size()) != n) throw InputError("matrix must have n rows");
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n) throw InputError("matrix rows must have n entries");
      for (int k = 0; k < n; ++k) m(i, k) = Complex(rows[i][k].at(0).get<double>(), rows[i][k].at(1).get<double>());
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed matrix JSON: ") + e.what());
  }
}

Json int_matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Condition& c) {
  return {{"name", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}, {"detail", c.detail}};
}

Json to_json(const ConditionReport& r) {
  Json list = Json::array();
  for (const auto& c : r.conditions) list.push_back(to_json(c));
  return {{"overall", to_string(r.overall)}, {"conditions", std::move(list)}};
}

Json to_json(const Certificate& c) {
  return {{"kind", to_string(c.kind)},
          {"construction", c.construction},
          {"residual", c.residual},
          {"support_match", c.support_match},
          {"matrix", matrix_to_json(c.matrix)}};
}

Json to_json(const CertifyResult& r) {
  Json j = {{"outcome", to_string(r.outcome)}, {"reason", r.reason}, {"report", to_json(r.report)}};
  j["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  return j;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace unigraph
