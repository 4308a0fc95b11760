#include "nrt/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nrt {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  // Next non-blank, non-comment line split into tokens.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(is_, line)) {
      ++lineno_;
      const std::string t = trim(line);
      if (t.empty()) continue;
      if (t[0] == '#') {
        record_comment(trim(t.substr(1)));
        continue;
      }
      tokens = split_ws(t);
      return true;
    }
    return false;
  }

  std::size_t line() const { return lineno_; }
  FileMeta& meta() { return meta_; }

 private:
  void record_comment(const std::string& c) {
    meta_.comments.push_back(c);
    const auto tok = split_ws(c);
    if (tok.size() >= 2 && tok[0] == "kind") {
      if (tok[1] == "points") meta_.kind = FileKind::points;
      if (tok[1] == "code") meta_.kind = FileKind::code;
    }
    if (tok.size() >= 2 && tok[0] == "nodes") meta_.nodes = tok[1];
  }

  std::istream& is_;
  std::size_t lineno_ = 0;
  FileMeta meta_;
};

unsigned long parse_uint(const std::string& tok, std::size_t line, const char* what) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError(line, std::string("expected a nonnegative integer for ") + what + ", got '" + tok + "'");
  try {
    return std::stoul(tok);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("integer out of range for ") + what);
  }
}

struct Header {
  const Field* field = nullptr;
  std::size_t n = 0, s = 0, count = 0;
};

Header read_header(LineReader& rd) {
  std::vector<std::string> tok;
  if (!rd.next(tok)) throw ParseError(rd.line(), "empty file: missing header");
  std::optional<FieldSpec> spec;
  if (tok.size() != 4) {
    std::string joined;
    for (const auto& t : tok) joined += t + " ";
    try {
      spec = FieldSpec::parse(joined);
    } catch (const std::exception& e) {
      throw ParseError(rd.line(), std::string("bad field line: ") + e.what());
    }
    if (!rd.next(tok)) throw ParseError(rd.line(), "missing header after field line");
    if (tok.size() != 4) throw ParseError(rd.line(), "header must be 'q n s N'");
  }
  const std::size_t line = rd.line();
  const unsigned q = static_cast<unsigned>(parse_uint(tok[0], line, "q"));
  Header h;
  h.n = parse_uint(tok[1], line, "n");
  h.s = parse_uint(tok[2], line, "s");
  h.count = parse_uint(tok[3], line, "count");
  if (h.n == 0 || h.s == 0) throw ParseError(line, "n and s must be positive");
  try {
    if (spec) {
      if (spec->q() != q) throw ParseError(line, "field line order differs from q");
      h.field = &Field::get(*spec);
    } else {
      if (!prime_power(q)) throw ParseError(line, "q is not a prime power");
      h.field = &Field::of_order(q);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(line, e.what());
  }
  return h;
}

std::vector<Label> parse_digit_string(const std::string& tok, const Field& f, std::size_t s, std::size_t line) {
  std::vector<std::string> parts;
  if (tok.find('.') != std::string::npos) {
    std::stringstream ss(tok);
    std::string p;
    while (std::getline(ss, p, '.')) parts.push_back(p);
  } else if (f.q() <= 10) {
    for (char c : tok) parts.emplace_back(1, c);
  } else {
    parts.push_back(tok);
  }
  if (parts.size() != s)
    throw ParseError(line, "digit string '" + tok + "' must have " + std::to_string(s) + " digits");
  std::vector<Label> eta;
  for (const auto& p : parts) {
    const unsigned long v = parse_uint(p, line, "digit");
    if (v >= f.q()) throw ParseError(line, "digit " + p + " out of range for q=" + std::to_string(f.q()));
    eta.push_back(static_cast<Label>(v));
  }
  return eta;
}

void write_field_line(std::ostream& os, const Field& f) {
  if (f.e() > 1) os << f.spec().to_string() << '\n';
}

}  // namespace

std::string format_digits(const Point& x, std::size_t j) {
  const auto eta = x.eta_digits(j);
  const bool wide = x.word().field().q() > 10;
  std::string out;
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (wide && i) out += '.';
    out += std::to_string(eta[i]);
  }
  return out;
}

void write_points(std::ostream& os, const Distribution& d, const std::vector<std::string>& comments) {
  os << "# kind points\n";
  for (const auto& c : comments) os << "# " << c << '\n';
  write_field_line(os, d.field());
  os << d.field().q() << ' ' << d.n() << ' ' << d.s() << ' ' << d.size() << '\n';
  for (const auto& x : d.points()) {
    for (std::size_t j = 0; j < d.n(); ++j) os << (j ? " " : "") << format_digits(x, j);
    os << '\n';
  }
}

void write_code(std::ostream& os, const LinearCode& c, const std::vector<std::string>& comments) {
  os << "# kind code\n";
  for (const auto& cm : comments) os << "# " << cm << '\n';
  write_field_line(os, c.field());
  os << c.field().q() << ' ' << c.n() << ' ' << c.s() << ' ' << c.k() << '\n';
  for (std::size_t r = 0; r < c.k(); ++r) {
    const auto row = c.basis().row(r);
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << '\n';
  }
}

PointFile read_points(std::istream& is) {
  LineReader rd(is);
  const Header h = read_header(rd);
  Distribution d(*h.field, h.n, h.s);
  std::vector<std::string> tok;
  for (std::size_t idx = 0; idx < h.count; ++idx) {
    if (!rd.next(tok)) throw ParseError(rd.line(), "expected " + std::to_string(h.count) + " points, found " + std::to_string(idx));
    if (tok.size() != h.n) throw ParseError(rd.line(), "expected " + std::to_string(h.n) + " coordinates");
    CodeWord w(*h.field, h.n, h.s);
    for (std::size_t j = 0; j < h.n; ++j) {
      const auto eta = parse_digit_string(tok[j], *h.field, h.s, rd.line());
      for (std::size_t i = 0; i < h.s; ++i) w.at(j, h.s - 1 - i) = eta[i];
    }
    d.add(Point(std::move(w)));
  }
  if (rd.next(tok)) throw ParseError(rd.line(), "unexpected data after the last point");
  return {std::move(d), rd.meta()};
}

CodeFile read_code(std::istream& is) {
  LineReader rd(is);
  const Header h = read_header(rd);
  const std::size_t len = h.n * h.s;
  Matrix m(*h.field, 0, len);
  std::vector<std::string> tok;
  for (std::size_t r = 0; r < h.count; ++r) {
    if (!rd.next(tok)) throw ParseError(rd.line(), "expected " + std::to_string(h.count) + " rows, found " + std::to_string(r));
    if (tok.size() != len) throw ParseError(rd.line(), "expected " + std::to_string(len) + " labels per row");
    std::vector<Label> row;
    for (const auto& t : tok) {
      const unsigned long v = parse_uint(t, rd.line(), "label");
      if (v >= h.field->q()) throw ParseError(rd.line(), "label " + t + " out of range");
      row.push_back(static_cast<Label>(v));
    }
    m.append_row(row);
  }
  if (rd.next(tok)) throw ParseError(rd.line(), "unexpected data after the last row");
  LinearCode c(*h.field, h.n, h.s, std::move(m));
  if (c.k() != h.count)
    throw ParseError(rd.line(), "code rows are linearly dependent (rank " + std::to_string(c.k()) + " < " +
                                    std::to_string(h.count) + ")");
  return {std::move(c), rd.meta()};
}

std::optional<FileKind> detect_kind(const std::string& text) {
  std::istringstream is(text);
  LineReader rd(is);
  std::vector<std::string> tok;
  std::vector<std::vector<std::string>> lines;
  while (lines.size() < 3 && rd.next(tok)) lines.push_back(tok);
  if (rd.meta().kind) return rd.meta().kind;
  // header is the first 4-token line
  std::size_t hi = 0;
  while (hi < lines.size() && lines[hi].size() != 4) ++hi;
  if (hi + 1 >= lines.size()) return std::nullopt;
  std::size_t n = 0, s = 0;
  try {
    n = std::stoul(lines[hi][1]);
    s = std::stoul(lines[hi][2]);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (s == 1) return std::nullopt;
  if (lines[hi + 1].size() == n) return FileKind::points;
  if (lines[hi + 1].size() == n * s) return FileKind::code;
  return std::nullopt;
}

}  // namespace nrt
