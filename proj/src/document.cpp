#include "ordsgp/document.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace ordsgp {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::size_t to_index(std::string_view word, std::size_t line) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || end != word.data() + word.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(word) + "'");
  return value;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) out.push_back({number, raw});
  }
  return out;
}

/// Splits "key: rest" when the line starts with a known key.
std::optional<std::pair<std::string_view, std::string_view>> header(std::string_view line) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  return std::pair{trim(line.substr(0, colon)), trim(line.substr(colon + 1))};
}

void read_pairs(std::string_view text, std::size_t line, std::size_t n,
                std::vector<OrderPair>& out) {
  const auto w = words(text);
  if (w.size() % 2 != 0) throw ParseError(line, "order pairs need two indices each");
  for (std::size_t i = 0; i < w.size(); i += 2) {
    const auto a = to_index(w[i], line), b = to_index(w[i + 1], line);
    if (a >= n || b >= n) throw ParseError(line, "order index out of range");
    out.emplace_back(static_cast<Element>(a), static_cast<Element>(b));
  }
}

}  // namespace

StructureDocument read_document(std::string_view text) {
  StructureDocument doc;
  const auto lines = content_lines(text);
  std::optional<DocumentKind> kind;
  std::optional<std::size_t> size;
  bool have_names = false;
  std::size_t i = 0;

  for (; i < lines.size(); ++i) {
    const auto& [number, line] = lines[i];
    const auto kv = header(line);
    if (!kv) throw ParseError(number, "expected 'key: value', got '" + std::string(line) + "'");
    const auto [key, value] = *kv;
    if (key == "kind") {
      if (kind) throw ParseError(number, "duplicate 'kind'");
      if (value == "osg") kind = DocumentKind::Osg;
      else if (value == "sgp") kind = DocumentKind::Sgp;
      else throw ParseError(number, "unknown kind '" + std::string(value) + "'");
    } else if (key == "elements") {
      if (size) throw ParseError(number, "duplicate 'elements'");
      size = to_index(value, number);
      if (*size == 0) throw ParseError(number, "a structure needs at least one element");
    } else if (key == "names") {
      if (have_names) throw ParseError(number, "duplicate 'names'");
      have_names = true;
      for (auto w : words(value)) doc.names.emplace_back(w);
    } else if (key == "table") {
      if (!value.empty()) throw ParseError(number, "table rows start on the next line");
      break;
    } else {
      throw ParseError(number, "unknown key '" + std::string(key) + "'");
    }
  }
  const std::size_t last_line = lines.empty() ? 1 : lines.back().number;
  if (!kind) throw ParseError(last_line, "missing 'kind'");
  if (!size) throw ParseError(last_line, "missing 'elements'");
  if (i == lines.size()) throw ParseError(last_line, "missing 'table:'");
  doc.kind = *kind;
  doc.size = *size;
  const std::size_t n = *size;
  if (have_names && doc.names.size() != n)
    throw ParseError(lines[i].number - 1, "expected " + std::to_string(n) + " names");

  ++i;
  for (std::size_t row = 0; row < n; ++row, ++i) {
    if (i == lines.size() || header(lines[i].text))
      throw ParseError(i == lines.size() ? last_line : lines[i].number,
                       "expected " + std::to_string(n) + " table rows");
    const auto& [number, line] = lines[i];
    const auto w = words(line);
    if (w.size() != n)
      throw ParseError(number, "expected " + std::to_string(n) + " entries in table row");
    std::vector<Element> cells;
    for (auto word : w) {
      const auto v = to_index(word, number);
      if (v >= n) throw ParseError(number, "table entry " + std::to_string(v) + " out of range");
      cells.push_back(static_cast<Element>(v));
    }
    doc.table.push_back(std::move(cells));
    doc.table_lines.push_back(number);
  }

  if (i < lines.size()) {
    const auto& [number, line] = lines[i];
    const auto kv = header(line);
    if (!kv || kv->first != "order")
      throw ParseError(number, "unexpected '" + std::string(line) + "' after the table");
    if (doc.kind == DocumentKind::Sgp) throw ParseError(number, "sgp documents have no order");
    read_pairs(kv->second, number, n, doc.order);
    for (++i; i < lines.size(); ++i) {
      if (header(lines[i].text))
        throw ParseError(lines[i].number, "unexpected '" + std::string(lines[i].text) + "'");
      read_pairs(lines[i].text, lines[i].number, n, doc.order);
    }
  }
  return doc;
}

Structure parse_document(std::string_view text, ParseOptions options) {
  StructureDocument doc = read_document(text);
  auto semigroup = FiniteSemigroup::from_rows(doc.table, doc.names);
  if (doc.kind == DocumentKind::Sgp) return semigroup;
  return OrderedSemigroup::validate(semigroup, doc.order,
                                    options.close_order ? OrderCompletion::ReflexiveTransitive
                                                        : OrderCompletion::Reflexive);
}

OrderedSemigroup parse_osg(std::string_view text, ParseOptions options) {
  auto s = parse_document(text, options);
  if (auto* o = std::get_if<OrderedSemigroup>(&s)) return std::move(*o);
  throw ParseError(1, "expected kind: osg");
}

FiniteSemigroup parse_sgp(std::string_view text) {
  auto s = parse_document(text);
  if (auto* f = std::get_if<FiniteSemigroup>(&s)) return std::move(*f);
  throw ParseError(1, "expected kind: sgp");
}

namespace {

void write_body(std::ostringstream& out, const FiniteSemigroup& f) {
  const std::size_t n = f.size();
  out << "elements: " << n << '\n';
  if (!f.names().empty()) {
    out << "names:";
    for (const auto& name : f.names()) out << ' ' << name;
    out << '\n';
  }
  out << "table:\n";
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) out << (b ? " " : "") << f.mul(a, b);
    out << '\n';
  }
}

}  // namespace

std::string serialize_document(const OrderedSemigroup& s) {
  std::ostringstream out;
  out << "kind: osg\n";
  write_body(out, s.semigroup());
  const auto pairs = s.order_pairs();
  if (!pairs.empty()) {
    out << "order:\n";
    for (const auto& [a, b] : pairs) out << a << ' ' << b << '\n';
  }
  return out.str();
}

std::string serialize_document(const FiniteSemigroup& f) {
  std::ostringstream out;
  out << "kind: sgp\n";
  write_body(out, f);
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace ordsgp
