#include "nonneg/tensor_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace nonneg {
namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

template <typename T>
bool parse_number(std::string_view token, T& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

Tensor parse_tensor(std::string_view text) {
  int order = 0;
  std::size_t dim = 0;
  bool have_header = false;
  std::vector<Entry> entries;
  std::map<std::vector<Index>, std::size_t> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tokens = split(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!have_header) {
      long long m = 0;
      long long n = 0;
      if (tokens.size() != 3 || tokens[0] != "tensor" || !parse_number(tokens[1], m) ||
          !parse_number(tokens[2], n)) {
        throw ParseError(line_no, "expected header 'tensor <order> <dim>'");
      }
      if (m < 2) throw ParseError(line_no, "tensor order must be at least 2");
      if (n < 1) throw ParseError(line_no, "tensor dimension must be at least 1");
      order = static_cast<int>(m);
      dim = static_cast<std::size_t>(n);
      have_header = true;
      continue;
    }

    const auto m = static_cast<std::size_t>(order);
    if (tokens.size() != m + 1) {
      throw ParseError(line_no, "expected " + std::to_string(m) + " indices and a value, got " +
                                    std::to_string(tokens.size()) + " fields");
    }
    Entry e;
    e.indices.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
      long long idx = 0;
      if (!parse_number(tokens[k], idx)) {
        throw ParseError(line_no, "malformed index '" + std::string(tokens[k]) + "'");
      }
      if (idx < 1 || static_cast<unsigned long long>(idx) > dim) {
        throw ParseError(line_no, "index " + std::string(tokens[k]) + " out of range 1.." +
                                      std::to_string(dim));
      }
      e.indices.push_back(static_cast<Index>(idx - 1));
    }
    if (!parse_number(tokens[m], e.value) || !std::isfinite(e.value)) {
      throw ParseError(line_no, "malformed value '" + std::string(tokens[m]) + "'");
    }
    if (e.value < 0.0) throw ParseError(line_no, "negative value " + std::string(tokens[m]));
    const auto [it, inserted] = seen.emplace(e.indices, line_no);
    if (!inserted) {
      throw ParseError(line_no, "duplicate index tuple (first given on line " +
                                    std::to_string(it->second) + ")");
    }
    if (e.value > 0.0) entries.push_back(std::move(e));
  }
  if (!have_header) throw ParseError(0, "missing 'tensor <order> <dim>' header");
  return Tensor(order, dim, std::move(entries));
}

Tensor read_tensor_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_tensor(buffer.str());
}

std::string render_tensor(const Tensor& t) {
  std::string out = "tensor " + std::to_string(t.order()) + " " + std::to_string(t.dim()) + "\n";
  char buf[64];
  for (std::size_t k = 0; k < t.nnz(); ++k) {
    for (Index i : t.indices(k)) {
      out += std::to_string(i + 1);
      out += ' ';
    }
    const auto res = std::to_chars(buf, buf + sizeof buf, t.value(k));
    out.append(buf, res.ptr);
    out += '\n';
  }
  return out;
}

}  // namespace nonneg
