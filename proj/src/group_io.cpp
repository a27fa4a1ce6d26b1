#include "r3/group_io.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>

namespace r3 {

namespace {

// cursor over one line with 1-based line and 0-based column bookkeeping
struct Scan {
  const std::string& s;
  unsigned line;
  size_t pos = 0;
  ParseError err;
  bool bad = false;

  Scan(const std::string& text, unsigned lineno) : s(text), line(lineno) {}

  bool fail(size_t at, std::string msg)
  {
    if (!bad)
      err = ParseError{line, static_cast<unsigned>(at), std::move(msg)};
    bad = true;
    return false;
  }

  void skip_space()
  {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool done()
  {
    skip_space();
    return pos >= s.size();
  }

  bool number(uint64_t& out)
  {
    skip_space();
    size_t start = pos;
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      return fail(pos, "expected a number");
    uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > UINT32_MAX)
        return fail(start, "number out of range");
      ++pos;
    }
    out = v;
    return true;
  }

  bool point(unsigned degree, uint32_t& out)
  {
    size_t start;
    skip_space();
    start = pos;
    uint64_t v;
    if (!number(v))
      return false;
    if (v >= degree)
      return fail(start, "point exceeds the degree");
    out = static_cast<uint32_t>(v);
    return true;
  }
};

std::optional<Perm> parse_cycles(Scan& sc, unsigned degree)
{
  std::vector<uint32_t> img(degree);
  for (uint32_t i = 0; i < degree; ++i)
    img[i] = i;
  std::vector<bool> seen(degree, false);

  while (!sc.done()) {
    if (sc.s[sc.pos] != '(') {
      sc.fail(sc.pos, "expected '('");
      return std::nullopt;
    }
    ++sc.pos;
    std::vector<uint32_t> cyc;
    while (true) {
      sc.skip_space();
      if (sc.pos >= sc.s.size()) {
        sc.fail(sc.pos, "unterminated cycle");
        return std::nullopt;
      }
      if (sc.s[sc.pos] == ')') {
        ++sc.pos;
        break;
      }
      size_t at = sc.pos;
      uint32_t x;
      if (!sc.point(degree, x))
        return std::nullopt;
      if (seen[x]) {
        sc.fail(at, "point repeats across cycles");
        return std::nullopt;
      }
      seen[x] = true;
      cyc.push_back(x);
    }
    if (cyc.empty()) {
      sc.fail(sc.pos - 1, "empty cycle");
      return std::nullopt;
    }
    for (size_t i = 0; i < cyc.size(); ++i)
      img[cyc[i]] = cyc[(i + 1) % cyc.size()];
  }
  return Perm(img);
}

std::optional<Perm> parse_images(Scan& sc, unsigned degree)
{
  ++sc.pos; // past '['
  std::vector<uint32_t> img;
  std::vector<bool> seen(degree, false);
  while (true) {
    sc.skip_space();
    if (sc.pos >= sc.s.size()) {
      sc.fail(sc.pos, "unterminated image list");
      return std::nullopt;
    }
    if (sc.s[sc.pos] == ']') {
      ++sc.pos;
      break;
    }
    if (!img.empty()) {
      if (sc.s[sc.pos] != ',') {
        sc.fail(sc.pos, "expected ','");
        return std::nullopt;
      }
      ++sc.pos;
    }
    size_t at = sc.pos;
    uint32_t x;
    if (!sc.point(degree, x))
      return std::nullopt;
    if (seen[x]) {
      sc.fail(at, "image repeats");
      return std::nullopt;
    }
    seen[x] = true;
    img.push_back(x);
  }
  if (img.size() != degree) {
    sc.fail(sc.pos - 1, "image list of length " + std::to_string(img.size()) +
                            " on a group of degree " + std::to_string(degree));
    return std::nullopt;
  }
  if (!sc.done()) {
    sc.fail(sc.pos, "trailing text after a generator");
    return std::nullopt;
  }
  return Perm(img);
}

} // namespace

std::string ParseError::str() const
{
  return "line " + std::to_string(line) + ", column " + std::to_string(col) +
         ": " + msg;
}

ParseResult parse_group(const std::string& text)
{
  ParseResult res;
  GroupFile gf;
  bool have_degree = false;

  unsigned lineno = 0;
  size_t at = 0;
  while (at <= text.size()) {
    size_t end = text.find('\n', at);
    if (end == std::string::npos)
      end = text.size();
    std::string line = text.substr(at, end - at);
    at = end + 1;
    ++lineno;
    if (at > text.size() && line.empty())
      break;

    size_t hash = line.find('#');
    if (hash != std::string::npos)
      line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r')
      line.pop_back();

    Scan sc{line, lineno};
    if (sc.done())
      continue;

    if (!have_degree) {
      uint64_t d;
      if (!sc.number(d) || !sc.done()) {
        if (!sc.bad)
          sc.fail(sc.pos, "trailing text after the degree");
        res.error = sc.err;
        return res;
      }
      if (d == 0) {
        res.error = ParseError{lineno, 0, "degree must be positive"};
        return res;
      }
      gf.degree = static_cast<unsigned>(d);
      have_degree = true;
      continue;
    }

    std::optional<Perm> p;
    sc.skip_space();
    if (line[sc.pos] == '(')
      p = parse_cycles(sc, gf.degree);
    else if (line[sc.pos] == '[')
      p = parse_images(sc, gf.degree);
    else
      sc.fail(sc.pos, "expected '(' or '['");
    if (!p) {
      res.error = sc.err;
      return res;
    }
    gf.gens.push_back(std::move(*p));
  }

  if (!have_degree) {
    res.error = ParseError{lineno ? lineno : 1, 0, "missing degree line"};
    return res;
  }
  res.group = std::move(gf);
  return res;
}

std::string format_group(unsigned degree, const std::vector<Perm>& gens)
{
  std::ostringstream out;
  out << degree << '\n';
  for (const Perm& g : gens) {
    out << '[';
    for (uint32_t x = 0; x < degree; ++x) {
      if (x)
        out << ',';
      out << g[x];
    }
    out << "]\n";
  }
  return out.str();
}

} // namespace r3
