#include "fano/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "fano/errors.hpp"
#include "json.hpp"

namespace fano {

namespace {

std::string strip_comment(const std::string& line, std::string* comment) {
  auto pos = line.find('#');
  if (pos == std::string::npos) return line;
  if (comment) {
    auto text = line.substr(pos + 1);
    auto start = text.find_first_not_of(" \t");
    *comment = start == std::string::npos ? "" : text.substr(start);
  }
  return line.substr(0, pos);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<Int> parse_ints(const std::string& line, std::size_t lineno,
                            std::size_t expected) {
  std::istringstream in(line);
  std::vector<Int> out;
  std::string tok;
  while (in >> tok) {
    std::size_t pos = tok[0] == '-' ? 1 : 0;
    if (pos == tok.size() ||
        tok.find_first_not_of("0123456789", pos) != std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": '" + tok +
                       "' is not an integer");
    out.emplace_back(tok);
  }
  if (out.size() != expected)
    throw ParseError("line " + std::to_string(lineno) + ": expected " +
                     std::to_string(expected) + " integers, found " +
                     std::to_string(out.size()));
  return out;
}

}  // namespace

std::vector<VertexBlock> read_vertex_blocks(const std::string& path,
                                            bool transpose) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::vector<VertexBlock> blocks;
  std::string line, pending_comment;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string comment;
    std::string body = strip_comment(line, &comment);
    if (!comment.empty()) pending_comment = comment;
    if (blank(body)) continue;

    // header line
    auto header = parse_ints(body, lineno, 2);
    if (header[0] <= 0 || header[1] <= 0 || header[0] > 64 ||
        header[1] > 1000000)
      throw ParseError("line " + std::to_string(lineno) +
                       ": header needs positive dimension and count");
    VertexBlock block;
    block.dim = header[0].convert_to<std::size_t>();
    block.line = lineno;
    block.comment = pending_comment;
    pending_comment.clear();
    std::size_t n = header[1].convert_to<std::size_t>();

    std::size_t data_rows = transpose ? block.dim : n;
    std::size_t row_width = transpose ? n : block.dim;
    std::vector<std::vector<Int>> rows;
    while (rows.size() < data_rows) {
      if (!std::getline(in, line))
        throw ParseError("line " + std::to_string(lineno) +
                         ": block ends before its " + std::to_string(data_rows) +
                         " rows");
      ++lineno;
      std::string row_body = strip_comment(line, nullptr);
      if (blank(row_body))
        throw ParseError("line " + std::to_string(lineno) +
                         ": blank line inside a block");
      rows.push_back(parse_ints(row_body, lineno, row_width));
    }
    block.points.assign(n, IntVector(block.dim));
    for (std::size_t r = 0; r < data_rows; ++r)
      for (std::size_t c = 0; c < row_width; ++c) {
        if (transpose)
          block.points[c][r] = rows[r][c];
        else
          block.points[r][c] = rows[r][c];
      }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

void write_vertex_blocks(const std::string& path,
                         const std::vector<VertexBlock>& blocks) {
  std::ofstream out(path);
  if (!out) throw UserError("cannot write '" + path + "'");
  bool first = true;
  for (const auto& b : blocks) {
    if (!first) out << "\n";
    first = false;
    if (!b.comment.empty()) out << "# " << b.comment << "\n";
    out << b.dim << " " << b.points.size() << "\n";
    for (const auto& p : b.points) {
      for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
      out << "\n";
    }
  }
}

void write_manifest(const RunManifest& m, const std::string& path) {
  nlohmann::json j;
  j["command"] = m.command;
  j["inputs"] = nlohmann::json::array();
  for (const auto& [file, hash] : m.input_hashes)
    j["inputs"].push_back({{"path", file}, {"fnv1a", hash}});
  j["outputs"] = nlohmann::json::object();
  for (const auto& [label, count] : m.output_counts) j["outputs"][label] = count;
  j["wall_ms"] = m.wall_ms;
  j["workers"] = m.workers;
  j["version"] = m.version;
  std::ofstream out(path);
  if (!out) throw UserError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

std::string hash_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UserError("cannot open '" + path + "'");
  std::ostringstream data;
  data << in.rdbuf();
  return fnv1a_hex(data.str());
}

}  // namespace fano
