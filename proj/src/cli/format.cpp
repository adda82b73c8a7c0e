#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "roughalg/io.hpp"

namespace roughalg::io {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& msg)
    : Error("line " + std::to_string(line) +
            (column > 0 ? ", column " + std::to_string(column) : std::string()) + ": " + msg),
      line_(line), column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_ws(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::optional<std::uint64_t> to_uint(std::string_view s) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return v;
}

std::uint64_t parse_uint(const Token& t, std::size_t line) {
  const auto v = to_uint(t.text);
  if (!v) throw ParseError(line, t.column, "bad integer '" + std::string(t.text) + "'");
  return *v;
}

}  // namespace

AlgebraFile parse_algebra_file(std::string_view text) {
  std::optional<std::string> name;
  std::optional<std::size_t> order;
  std::optional<Element> zero;
  std::vector<Element> table;
  std::size_t rows = 0;
  std::size_t line_no = 0;
  std::size_t meaningful = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::vector<Token> toks = split_ws(line);
    if (toks.empty()) continue;
    ++meaningful;

    const std::string_view head = toks[0].text;
    if (head == "algebra") {
      if (meaningful != 1) throw ParseError(line_no, 1, "'algebra' header must come first");
      const auto rest = trim(line.substr(toks[0].column - 1 + head.size()));
      if (rest.empty()) throw ParseError(line_no, 0, "'algebra' header needs a name");
      name = std::string(rest);
    } else if (head == "order") {
      if (order) throw ParseError(line_no, 1, "duplicate 'order' header");
      if (toks.size() != 2) throw ParseError(line_no, 0, "expected 'order <n>'");
      const auto n = parse_uint(toks[1], line_no);
      if (n == 0 || n > Subset::kMaxCarrier) {
        throw ParseError(line_no, toks[1].column,
                         "order must be between 1 and " + std::to_string(Subset::kMaxCarrier));
      }
      order = static_cast<std::size_t>(n);
    } else if (head == "zero") {
      if (!order) throw ParseError(line_no, 1, "'zero' before 'order'");
      if (zero) throw ParseError(line_no, 1, "duplicate 'zero' header");
      if (toks.size() != 2) throw ParseError(line_no, 0, "expected 'zero <z>'");
      const auto z = parse_uint(toks[1], line_no);
      if (z >= *order) throw ParseError(line_no, toks[1].column, "zero element out of range");
      zero = static_cast<Element>(z);
    } else {
      if (!order) throw ParseError(line_no, 1, "missing 'order' header");
      if (!zero) throw ParseError(line_no, 1, "missing 'zero' header");
      if (rows == *order) {
        throw ParseError(line_no, 0, "more than " + std::to_string(*order) + " rows");
      }
      if (toks.size() != *order) {
        throw ParseError(line_no, 0,
                         "row has " + std::to_string(toks.size()) + " entries, expected " +
                             std::to_string(*order));
      }
      for (const Token& t : toks) {
        const auto v = parse_uint(t, line_no);
        if (v >= *order) {
          throw ParseError(line_no, t.column,
                           "entry " + std::to_string(v) + " out of range for order " +
                               std::to_string(*order));
        }
        table.push_back(static_cast<Element>(v));
      }
      ++rows;
    }
  }

  if (!order) throw ParseError(line_no, 0, "missing 'order' header");
  if (!zero) throw ParseError(line_no, 0, "missing 'zero' header");
  if (rows != *order) {
    throw ParseError(line_no, 0,
                     "found " + std::to_string(rows) + " rows, expected " + std::to_string(*order));
  }
  return {std::move(name), FiniteAlgebra(*order, std::move(table), *zero)};
}

FiniteAlgebra parse_algebra(std::string_view text) { return parse_algebra_file(text).algebra; }

AlgebraFile load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  AlgebraFile file = parse_algebra_file(buf.str());
  if (!file.name) file.name = path.stem().string();
  return file;
}

std::string render_algebra(const FiniteAlgebra& alg, const std::optional<std::string>& name) {
  std::ostringstream out;
  if (name) out << "algebra " << *name << '\n';
  out << "order " << alg.order() << '\n';
  out << "zero " << alg.zero() << '\n';
  for (Element x = 0; x < alg.order(); ++x) {
    const auto row = alg.row(x);
    for (std::size_t y = 0; y < row.size(); ++y) {
      if (y > 0) out << ' ';
      out << row[y];
    }
    out << '\n';
  }
  return out.str();
}

Subset parse_subset(std::string_view text, std::size_t n) {
  std::string_view body = trim(text);
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}') {
    body = trim(body.substr(1, body.size() - 2));
  }
  Subset out(n);
  if (body.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    const std::string_view tok =
        trim(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start));
    const std::size_t col = start + 1;
    if (tok.empty()) throw ParseError(1, col, "malformed subset: empty element");
    const auto v = to_uint(tok);
    if (!v) throw ParseError(1, col, "bad element '" + std::string(tok) + "'");
    if (*v >= n) {
      throw ParseError(1, col,
                       "element " + std::to_string(*v) + " out of range for carrier of size " +
                           std::to_string(n));
    }
    const auto x = static_cast<Element>(*v);
    if (out.contains(x)) throw ParseError(1, col, "duplicate element " + std::to_string(x));
    out.insert(x);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Partition parse_partition(std::string_view text, std::size_t n) {
  std::vector<Subset> classes;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = text.find('|', start);
    const std::string_view part =
        text.substr(start, bar == std::string_view::npos ? text.npos : bar - start);
    if (trim(part).empty()) throw ParseError(1, start + 1, "malformed partition: empty class");
    classes.push_back(parse_subset(part, n));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return Partition(n, std::move(classes));
}

SetValuedMap parse_svmap(std::string_view text, std::size_t source_size,
                         std::size_t target_size) {
  std::vector<std::optional<Subset>> images(source_size);
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t semi = text.find(';', start);
    const std::string_view entry =
        text.substr(start, semi == std::string_view::npos ? text.npos : semi - start);
    const std::size_t col = start + 1;
    start = semi == std::string_view::npos ? text.size() + 1 : semi + 1;
    if (trim(entry).empty()) {
      if (semi == std::string_view::npos) break;
      throw ParseError(1, col, "malformed map: empty entry");
    }
    const std::size_t colon = entry.find(':');
    if (colon == std::string_view::npos) throw ParseError(1, col, "malformed map entry, expected 'x:image'");
    const auto x = to_uint(trim(entry.substr(0, colon)));
    if (!x) throw ParseError(1, col, "bad source element");
    if (*x >= source_size) throw ParseError(1, col, "source element " + std::to_string(*x) + " out of range");
    if (images[*x]) throw ParseError(1, col, "duplicate source element " + std::to_string(*x));
    images[*x] = parse_subset(entry.substr(colon + 1), target_size);
  }
  std::vector<Subset> out;
  for (std::size_t x = 0; x < source_size; ++x) {
    if (!images[x]) throw ParseError(1, 0, "no image given for " + std::to_string(x));
    out.push_back(*images[x]);
  }
  return SetValuedMap(source_size, target_size, std::move(out));
}

}  // namespace roughalg::io
