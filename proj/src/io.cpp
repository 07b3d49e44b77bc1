#include "affschur/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace affschur {

std::string to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::Malformed:
      return "malformed";
    case ParseErrorKind::NegativeEntry:
      return "negative-entry";
    case ParseErrorKind::WeightMismatch:
      return "weight-mismatch";
    case ParseErrorKind::RowOutOfRange:
      return "row-out-of-range";
    case ParseErrorKind::DuplicateEntry:
      return "duplicate-entry";
  }
  return "?";
}

ParseError::ParseError(ParseErrorKind kind, std::string source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + to_string(kind) + ": " + message),
      kind_(kind),
      source_(std::move(source)),
      line_(line) {}

namespace {

struct Line {
  int number;
  std::string text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string s;
  int no = 0;
  while (std::getline(in, s)) {
    ++no;
    if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = s.find_last_not_of(" \t\r");
    out.push_back({no, s.substr(b, e - b + 1)});
  }
  return out;
}

bool starts_json(std::string_view text) {
  const auto b = text.find_first_not_of(" \t\r\n");
  return b != std::string_view::npos && text[b] == '{';
}

std::pair<int, int> parse_header(const Line& l, const std::string& source) {
  std::istringstream in(l.text);
  std::string a, b, extra;
  in >> a >> b;
  int n = 0, r = 0;
  if (a.rfind("n=", 0) != 0 || b.rfind("r=", 0) != 0 || (in >> extra))
    throw ParseError(ParseErrorKind::Malformed, source, l.number, "expected header 'n=<int> r=<int>'");
  try {
    std::size_t pn = 0, pr = 0;
    n = std::stoi(a.substr(2), &pn);
    r = std::stoi(b.substr(2), &pr);
    if (pn != a.size() - 2 || pr != b.size() - 2) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ParseError(ParseErrorKind::Malformed, source, l.number, "expected header 'n=<int> r=<int>'");
  }
  if (n < 1 || r < 0) throw ParseError(ParseErrorKind::Malformed, source, l.number, "need n >= 1 and r >= 0");
  return {n, r};
}

MatrixEntry parse_entry(const Line& l, int n, const std::string& source) {
  std::istringstream in(l.text);
  long long i = 0, j = 0, v = 0;
  std::string extra;
  if (!(in >> i >> j >> v) || (in >> extra))
    throw ParseError(ParseErrorKind::Malformed, source, l.number, "expected '<i> <j> <v>'");
  if (v < 0) throw ParseError(ParseErrorKind::NegativeEntry, source, l.number, "entry value must be positive");
  if (v == 0) throw ParseError(ParseErrorKind::Malformed, source, l.number, "zero entries are not stored");
  if (i < 1 || i > n)
    throw ParseError(ParseErrorKind::RowOutOfRange, source, l.number, "row must lie in [1, " + std::to_string(n) + "]");
  if (j < -1000000 || j > 1000000 || v > 1000000)
    throw ParseError(ParseErrorKind::Malformed, source, l.number, "entry out of supported range");
  return {static_cast<int>(i), static_cast<int>(j), static_cast<int>(v)};
}

PeriodicMatrix build_matrix(int n, int r, const std::vector<std::pair<MatrixEntry, int>>& entries,
                            const std::string& source, int header_line) {
  std::map<std::pair<int, int>, int> seen;
  std::vector<MatrixEntry> es;
  long long total = 0;
  for (const auto& [e, line] : entries) {
    if (!seen.emplace(std::make_pair(e.row, e.col), line).second)
      throw ParseError(ParseErrorKind::DuplicateEntry, source, line,
                       "entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) + ") given twice");
    es.push_back(e);
    total += e.value;
  }
  if (total != r)
    throw ParseError(ParseErrorKind::WeightMismatch, source, header_line,
                     "entries sum to " + std::to_string(total) + ", expected r=" + std::to_string(r));
  return PeriodicMatrix(n, std::move(es));
}

void json_fail(const std::string& source, const std::string& what) {
  throw ParseError(ParseErrorKind::Malformed, source, 1, what);
}

PeriodicMatrix entries_from_json(int n, int r, const nlohmann::json& arr, const std::string& source) {
  if (!arr.is_array()) json_fail(source, "\"entries\" must be an array");
  std::vector<std::pair<MatrixEntry, int>> entries;
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
        !t[2].is_number_integer())
      json_fail(source, "each entry must be [i, j, v]");
    const auto i = t[0].get<long long>(), j = t[1].get<long long>(), v = t[2].get<long long>();
    if (v < 0) throw ParseError(ParseErrorKind::NegativeEntry, source, 1, "entry value must be positive");
    if (v == 0) json_fail(source, "zero entries are not stored");
    if (i < 1 || i > n)
      throw ParseError(ParseErrorKind::RowOutOfRange, source, 1, "row must lie in [1, " + std::to_string(n) + "]");
    if (j < -1000000 || j > 1000000 || v > 1000000) json_fail(source, "entry out of supported range");
    entries.push_back({{static_cast<int>(i), static_cast<int>(j), static_cast<int>(v)}, 1});
  }
  return build_matrix(n, r, entries, source, 1);
}

std::pair<int, int> json_header(const nlohmann::json& j, const std::string& source) {
  if (!j.is_object() || !j.contains("n") || !j.contains("r") || !j["n"].is_number_integer() ||
      !j["r"].is_number_integer())
    json_fail(source, "expected integer fields \"n\" and \"r\"");
  const int n = j["n"].get<int>(), r = j["r"].get<int>();
  if (n < 1 || r < 0) json_fail(source, "need n >= 1 and r >= 0");
  return {n, r};
}

nlohmann::json parse_json(std::string_view text, const std::string& source) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(ParseErrorKind::Malformed, source, 1, e.what());
  }
}

nlohmann::json entries_json(const PeriodicMatrix& a) {
  auto arr = nlohmann::json::array();
  for (const auto& e : a.entries()) arr.push_back({e.row, e.col, e.value});
  return arr;
}

}  // namespace

PeriodicMatrix parse_matrix(std::string_view text, const std::string& source) {
  if (starts_json(text)) return matrix_from_json(parse_json(text, source), source);
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(ParseErrorKind::Malformed, source, 1, "empty input");
  const auto [n, r] = parse_header(lines.front(), source);
  std::vector<std::pair<MatrixEntry, int>> entries;
  for (std::size_t k = 1; k < lines.size(); ++k) entries.push_back({parse_entry(lines[k], n, source), lines[k].number});
  return build_matrix(n, r, entries, source, lines.front().number);
}

std::string format_matrix(const PeriodicMatrix& a) {
  std::ostringstream os;
  os << "n=" << a.n() << " r=" << a.r() << '\n';
  for (const auto& e : a.entries()) os << e.row << ' ' << e.col << ' ' << e.value << '\n';
  return os.str();
}

nlohmann::json matrix_to_json(const PeriodicMatrix& a) {
  return {{"n", a.n()}, {"r", a.r()}, {"entries", entries_json(a)}};
}

PeriodicMatrix matrix_from_json(const nlohmann::json& j, const std::string& source) {
  const auto [n, r] = json_header(j, source);
  if (!j.contains("entries")) json_fail(source, "missing \"entries\"");
  return entries_from_json(n, r, j["entries"], source);
}

AlgebraElement parse_element(std::string_view text, const std::string& source) {
  if (starts_json(text)) return element_from_json(parse_json(text, source), source);
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(ParseErrorKind::Malformed, source, 1, "empty input");
  const auto [n, r] = parse_header(lines.front(), source);
  AlgebraElement x(n, r);
  bool has_terms = false;
  for (const auto& l : lines)
    if (l.text.rfind("term", 0) == 0) has_terms = true;
  if (!has_terms) {
    x.add_term(parse_matrix(text, source), 1);
    return x;
  }
  std::size_t k = 1;
  while (k < lines.size()) {
    const auto& head = lines[k];
    std::istringstream in(head.text);
    std::string word, coef, extra;
    in >> word >> coef;
    if (word != "term" || coef.empty() || (in >> extra))
      throw ParseError(ParseErrorKind::Malformed, source, head.number, "expected 'term <integer>'");
    Integer c;
    if (c.set_str(coef, 10) != 0)
      throw ParseError(ParseErrorKind::Malformed, source, head.number, "coefficient must be an integer");
    std::vector<std::pair<MatrixEntry, int>> entries;
    for (++k; k < lines.size() && lines[k].text.rfind("term", 0) != 0; ++k)
      entries.push_back({parse_entry(lines[k], n, source), lines[k].number});
    x.add_term(build_matrix(n, r, entries, source, head.number), c);
  }
  return x;
}

std::string format_element(const AlgebraElement& x) {
  std::ostringstream os;
  os << "n=" << x.n() << " r=" << x.r() << '\n';
  for (const auto& [k, c] : x.terms()) {
    os << "term " << c.get_str() << '\n';
    for (const auto& e : k.entries()) os << e.row << ' ' << e.col << ' ' << e.value << '\n';
  }
  return os.str();
}

nlohmann::json element_to_json(const AlgebraElement& x) {
  auto terms = nlohmann::json::array();
  for (const auto& [k, c] : x.terms()) terms.push_back({{"coefficient", c.get_str()}, {"entries", entries_json(k)}});
  return {{"n", x.n()}, {"r", x.r()}, {"terms", terms}};
}

AlgebraElement element_from_json(const nlohmann::json& j, const std::string& source) {
  const auto [n, r] = json_header(j, source);
  if (j.contains("entries") && !j.contains("terms")) return AlgebraElement::basis(matrix_from_json(j, source));
  if (!j.contains("terms") || !j["terms"].is_array()) json_fail(source, "missing \"terms\" array");
  AlgebraElement x(n, r);
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("entries") || !t.contains("coefficient"))
      json_fail(source, "each term needs \"coefficient\" and \"entries\"");
    Integer c;
    const auto& cj = t["coefficient"];
    if (cj.is_number_integer())
      c = Integer(cj.get<long>());
    else if (!cj.is_string() || c.set_str(cj.get<std::string>(), 10) != 0)
      json_fail(source, "coefficient must be an integer or integer string");
    x.add_term(entries_from_json(n, r, t["entries"], source), c);
  }
  return x;
}

SegmentMultiset parse_segments(std::string_view text, const std::string& source) {
  std::vector<Segment> segs;
  for (const auto& l : content_lines(text)) {
    std::istringstream in(l.text);
    std::string value, extra;
    long long length = 0;
    if (!(in >> value >> length) || (in >> extra))
      throw ParseError(ParseErrorKind::Malformed, source, l.number, "expected '<value> <length>'");
    if (length < 1 || length > 1000000)
      throw ParseError(ParseErrorKind::Malformed, source, l.number, "segment length must be positive");
    ComplexRational v;
    try {
      v = parse_scalar(value);
    } catch (const std::exception& e) {
      throw ParseError(ParseErrorKind::Malformed, source, l.number, e.what());
    }
    if (v.is_zero()) throw ParseError(ParseErrorKind::Malformed, source, l.number, "segment values must be nonzero");
    segs.push_back({v, static_cast<int>(length)});
  }
  if (segs.empty()) throw ParseError(ParseErrorKind::Malformed, source, 1, "no segments");
  return SegmentMultiset(std::move(segs));
}

std::string format_segments(const SegmentMultiset& s) {
  std::ostringstream os;
  for (const auto& seg : s.segments()) os << to_string(seg.value) << ' ' << seg.length << '\n';
  return os.str();
}

nlohmann::json segments_to_json(const SegmentMultiset& s) {
  auto arr = nlohmann::json::array();
  for (const auto& seg : s.segments()) arr.push_back({{"value", to_string(seg.value)}, {"length", seg.length}});
  return arr;
}

OmegaPoint parse_omega(std::string_view text, const std::string& source) {
  const auto lines = content_lines(text);
  if (lines.size() != 2)
    throw ParseError(ParseErrorKind::Malformed, source, lines.empty() ? 1 : lines.front().number,
                     "expected a 'lambda=<parts>' line and a coordinate line");
  if (lines[0].text.rfind("lambda=", 0) != 0)
    throw ParseError(ParseErrorKind::Malformed, source, lines[0].number, "expected 'lambda=<parts>'");
  OmegaPoint b;
  try {
    b.lambda = parse_partition(lines[0].text.substr(7));
  } catch (const std::exception& e) {
    throw ParseError(ParseErrorKind::Malformed, source, lines[0].number, e.what());
  }
  std::istringstream in(lines[1].text);
  std::string tok;
  while (in >> tok) {
    try {
      b.coords.push_back(parse_scalar(tok));
    } catch (const std::exception& e) {
      throw ParseError(ParseErrorKind::Malformed, source, lines[1].number, e.what());
    }
  }
  return b;
}

std::string format_omega(const OmegaPoint& b) {
  std::ostringstream os;
  os << "lambda=" << to_string(b.lambda) << '\n';
  for (std::size_t k = 0; k < b.coords.size(); ++k) os << (k ? " " : "") << to_string(b.coords[k]);
  os << '\n';
  return os.str();
}

nlohmann::json omega_to_json(const OmegaPoint& b) {
  auto coords = nlohmann::json::array();
  for (const auto& c : b.coords) coords.push_back(to_string(c));
  return {{"lambda", b.lambda.parts()}, {"coords", coords}};
}

nlohmann::json certificate_to_json(const MembershipCertificate& c) {
  auto terms = nlohmann::json::array();
  for (const auto& w : c.witness)
    terms.push_back({{"coefficient", to_string(w.coefficient)},
                     {"left", entries_json(w.left)},
                     {"mu", w.middle.parts()},
                     {"right", entries_json(w.right)}});
  return {{"verdict", to_string(c.verdict)},
          {"window", c.window},
          {"witness", terms},
          {"product_hash", c.verdict == Verdict::Confirmed ? nlohmann::json(c.product_hash) : nlohmann::json()}};
}

std::string format_certificate(const MembershipCertificate& c) {
  std::ostringstream os;
  if (c.verdict != Verdict::Confirmed) {
    os << "UnknownAtBound(W=" << c.window << ")\n";
    return os.str();
  }
  os << "Confirmed at W=" << c.window << " with " << c.witness.size() << " witness terms\n";
  for (const auto& w : c.witness) {
    os << "  " << to_string(w.coefficient) << " * e" << matrix_to_json(w.left)["entries"].dump() << " l_("
       << to_string(w.middle) << ") e" << matrix_to_json(w.right)["entries"].dump() << '\n';
  }
  os << "verified product hash " << std::hex << c.product_hash << std::dec << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace affschur
