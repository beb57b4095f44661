#include "filaff/algebra_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace filaff {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string strip_comment(const std::string& s) {
  const std::size_t pos = s.find('#');
  return pos == std::string::npos ? s : s.substr(0, pos);
}

// "key: value" -> {key, value}; nullopt when there is no colon.
std::optional<std::pair<std::string, std::string>> split_kv(
    const std::string& s) {
  const std::size_t pos = s.find(':');
  if (pos == std::string::npos) return std::nullopt;
  return std::pair{trim(s.substr(0, pos)), trim(s.substr(pos + 1))};
}

long parse_integer(const std::string& text, int line, const char* what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, std::string(what) + " is not an integer: '" +
                               text + "'");
  }
}

bool looks_like_rational(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
  if (i == s.size()) return false;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (seen_slash) return false;
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      return false;
    }
  }
  return digit_before && (!seen_slash || digit_after);
}

Rational parse_rational(const std::string& text, int line) {
  if (!looks_like_rational(text))
    throw ParseError(line, "not a rational number: '" + text + "'");
  Rational q;
  if (q.set_str(text, 10) != 0 || is_zero(Rational(q.get_den())))
    throw ParseError(line, "not a rational number: '" + text + "'");
  q.canonicalize();
  return q;
}

IndexPair parse_pair(const std::string& key, int line) {
  const std::size_t comma = key.find(',');
  if (comma == std::string::npos)
    throw ParseError(line, "alpha key must look like 'k,s': '" + key + "'");
  IndexPair p;
  p.k = static_cast<int>(
      parse_integer(trim(key.substr(0, comma)), line, "alpha key part"));
  p.s = static_cast<int>(
      parse_integer(trim(key.substr(comma + 1)), line, "alpha key part"));
  return p;
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                        message
                                  : message),
      line_(line) {}

AlgebraFile parse_algebra_file(std::istream& in) {
  AlgebraFile out;
  bool have_n = false;
  bool in_alpha = false;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string body = trim(strip_comment(raw));
    if (body.empty()) continue;
    const auto kv = split_kv(body);
    if (!kv) throw ParseError(line, "expected 'key: value', got '" + body + "'");
    const auto& [key, value] = *kv;
    if (key == "n") {
      out.n = static_cast<int>(parse_integer(value, line, "n"));
      have_n = true;
      in_alpha = false;
    } else if (key == "label") {
      out.label = value;
      in_alpha = false;
    } else if (key == "seed") {
      const long v = parse_integer(value, line, "seed");
      if (v < 0) throw ParseError(line, "seed must be nonnegative");
      out.seed = static_cast<std::uint64_t>(v);
      in_alpha = false;
    } else if (key == "alpha") {
      if (!value.empty())
        throw ParseError(line, "alpha introduces a block; value must be empty");
      in_alpha = true;
    } else if (in_alpha) {
      // inside the alpha block every "k,s: value" line is an entry
      const IndexPair p = parse_pair(key, line);
      parse_rational(value, line);  // syntax check now, conversion later
      const std::string norm =
          std::to_string(p.k) + "," + std::to_string(p.s);
      if (out.alpha.count(norm))
        throw ParseError(line, "duplicate alpha key '" + norm + "'");
      out.alpha[norm] = value;
    } else {
      throw ParseError(line, "unknown key '" + key + "'");
    }
  }
  if (!have_n) throw ParseError(line, "missing required key 'n'");
  if (out.n < 3) throw ParseError(line, "n must be at least 3");
  return out;
}

AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_algebra_file(in);
}

FiliformParams to_params(const AlgebraFile& f) {
  FiliformParams params;
  params.n = f.n;
  for (const auto& [key, value] : f.alpha) {
    const IndexPair p = parse_pair(key, 0);
    if (!in_index_set(f.n, p))
      throw ParseError(0, "alpha key (" + key +
                              ") is not admissible for n = " +
                              std::to_string(f.n));
    const Rational q = parse_rational(value, 0);
    if (!is_zero(q)) params.alpha[p] = q;
  }
  return params;
}

std::string format_algebra_file(const FiliformParams& params,
                                const std::optional<std::string>& label,
                                const std::optional<std::uint64_t>& seed) {
  std::ostringstream out;
  out << "n: " << params.n << "\n";
  if (label) out << "label: " << *label << "\n";
  if (seed) out << "seed: " << *seed << "\n";
  out << "alpha:\n";
  for (const auto& [p, v] : params.alpha)
    out << "  " << p.k << "," << p.s << ": " << v << "\n";
  return out.str();
}

}  // namespace filaff
