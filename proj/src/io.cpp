#include "blockmagic/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "blockmagic/error.hpp"

namespace blockmagic {

using nlohmann::json;

namespace {

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

bool comment(const std::string& line) {
  const auto p = line.find_first_not_of(" \t");
  return p != std::string::npos && line[p] == '#';
}

}  // namespace

Matrix parse_matrix_text(std::istream& in) {
  std::vector<QuadScalar> entries;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (comment(line)) continue;
    if (blank(line)) {
      if (rows > 0) break;
      continue;
    }
    std::istringstream fields(line);
    std::string token;
    std::size_t count = 0;
    while (fields >> token) {
      entries.push_back(QuadScalar::parse(token));
      ++count;
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      throw Error(ErrorCode::Parse, "row " + std::to_string(rows + 1) + " has " + std::to_string(count) +
                                        " entries, expected " + std::to_string(cols));
    }
    ++rows;
  }
  if (rows == 0) throw Error(ErrorCode::Parse, "no matrix rows found");
  return Matrix(rows, cols, std::move(entries));
}

Matrix parse_matrix_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix_text(in);
}

std::string format_matrix_text(const Matrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (const auto& x : m.entries()) {
    cells.push_back(x.to_string());
    width = std::max(width, cells.back().size());
  }
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& c = cells[i * m.cols() + j];
      if (j > 0) out += ' ';
      out += std::string(width - c.size(), ' ') + c;
    }
    out += '\n';
  }
  return out;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

QuadScalar scalar_from_json(const json& j) {
  if (j.is_string()) return QuadScalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return QuadScalar(j.get<long>());
  throw Error(ErrorCode::Parse, "scalar must be a string or an integer, got " + j.dump());
}

Matrix matrix_from_json(const json& j) {
  try {
    const auto& rows = j.at("entries");
    const std::size_t r = j.at("rows").get<std::size_t>();
    const std::size_t c = j.at("cols").get<std::size_t>();
    if (!rows.is_array() || rows.size() != r) throw Error(ErrorCode::Parse, "entries must have `rows` rows");
    std::vector<QuadScalar> entries;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != c) throw Error(ErrorCode::Parse, "each row must have `cols` entries");
      for (const auto& x : row) entries.push_back(scalar_from_json(x));
    }
    return Matrix(r, c, std::move(entries));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

Matrix parse_matrix_any(std::string_view text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  if (p != std::string_view::npos && text[p] == '{') {
    try {
      return matrix_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::Parse, e.what());
    }
  }
  return parse_matrix_text(text);
}

Matrix vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::Parse, "vector must be a nonempty array");
  std::vector<QuadScalar> entries;
  for (const auto& x : j) entries.push_back(scalar_from_json(x));
  return Matrix::column(std::move(entries));
}

json vector_to_json(const Matrix& v) {
  json out = json::array();
  for (const auto& x : v.entries()) out.push_back(x.to_string());
  return out;
}

std::pair<Rank1Spec, QuadScalar> spec_from_json(const json& j) {
  try {
    Rank1Spec s{vector_from_json(j.at("u")), vector_from_json(j.at("v")), vector_from_json(j.at("x")),
                vector_from_json(j.at("y"))};
    const QuadScalar w = j.contains("w") ? scalar_from_json(j.at("w")) : QuadScalar();
    return {std::move(s), w};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

json spec_to_json(const Rank1Spec& spec, const QuadScalar& w) {
  return {{"u", vector_to_json(spec.u)},
          {"v", vector_to_json(spec.v)},
          {"x", vector_to_json(spec.x)},
          {"y", vector_to_json(spec.y)},
          {"w", w.to_string()}};
}

json components_to_json(const BlockComponents& c) {
  return {{"parity", c.parity == Parity::Even ? "even" : "odd"},
          {"half", c.half},
          {"w", c.w.to_string()},
          {"Y", matrix_to_json(c.Y)},
          {"Z", matrix_to_json(c.Z)},
          {"V", matrix_to_json(c.V)},
          {"W", matrix_to_json(c.W)}};
}

BlockComponents components_from_json(const json& j) {
  try {
    BlockComponents c;
    const std::string parity = j.at("parity").get<std::string>();
    if (parity != "even" && parity != "odd") throw Error(ErrorCode::Parse, "parity must be even or odd");
    c.parity = parity == "even" ? Parity::Even : Parity::Odd;
    c.half = j.at("half").get<std::size_t>();
    c.w = j.contains("w") ? scalar_from_json(j.at("w")) : QuadScalar();
    c.Y = j.contains("Y") ? matrix_from_json(j.at("Y")) : Matrix::zero(c.half);
    c.Z = j.contains("Z") ? matrix_from_json(j.at("Z")) : Matrix::zero(c.half);
    c.V = j.contains("V") ? matrix_from_json(j.at("V")) : Matrix::zero(c.half);
    c.W = j.contains("W") ? matrix_from_json(j.at("W")) : Matrix::zero(c.half);
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

}  // namespace blockmagic
