#include "diffset/setio.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "diffset/errors.hpp"

namespace diffset {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::size_t line) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InputError("line " + std::to_string(line) + ": not an integer: '" + std::string(s) + "'");
  return v;
}

IntSet parse_bits_body(std::string_view header, std::istream& in) {
  header = strip(header);
  if (header.substr(0, 3) != "lo=") throw InputError("bits format: expected header 'lo=<integer>'");
  std::int64_t lo = parse_int(strip(header.substr(3)), 1);
  std::string body, line;
  while (std::getline(in, line)) {
    auto s = strip(line);
    if (s.empty()) continue;
    if (!body.empty()) throw InputError("bits format: expected a single line of bits");
    body = std::string(s);
  }
  if (body.empty()) throw InputError("bits format: no bit line");
  BitVector bits(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '1') bits.set(i);
    else if (body[i] != '0') throw InputError("bits format: unexpected character '" + std::string(1, body[i]) + "'");
  }
  return IntSet(Window(lo, lo + static_cast<std::int64_t>(body.size()) - 1), std::move(bits));
}

IntSet parse_list_lines(const std::vector<std::pair<std::size_t, std::string>>& lines,
                        std::optional<Window> window) {
  std::vector<std::int64_t> members;
  members.reserve(lines.size());
  for (const auto& [no, text] : lines) members.push_back(parse_int(text, no));
  if (!window) {
    if (members.empty()) throw InputError("list format: empty list needs an explicit window");
    auto [mn, mx] = std::minmax_element(members.begin(), members.end());
    window = Window(*mn, *mx);
  }
  return IntSet::from_members(members, *window);
}

}  // namespace

IntSet parse_list(std::istream& in, std::optional<Window> window) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto s = strip(line);
    if (s.empty() || s.front() == '#') continue;
    lines.emplace_back(no, std::string(s));
  }
  return parse_list_lines(lines, window);
}

IntSet parse_bits(std::istream& in) {
  std::string header;
  while (std::getline(in, header))
    if (!strip(header).empty()) return parse_bits_body(header, in);
  throw InputError("bits format: missing header");
}

IntSet read_set_file(const std::string& path, std::optional<Window> window) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open set file '" + path + "'");
  std::string first;
  std::size_t no = 0;
  std::vector<std::pair<std::size_t, std::string>> lines;
  while (std::getline(in, first)) {
    ++no;
    auto s = strip(first);
    if (s.empty() || s.front() == '#') continue;
    if (s.substr(0, 3) == "lo=") {
      IntSet parsed = parse_bits_body(s, in);
      if (!window) return parsed;
      auto m = parsed.members();
      return IntSet::from_members(m, *window);
    }
    lines.emplace_back(no, std::string(s));
    break;
  }
  std::string line;
  while (std::getline(in, line)) {
    ++no;
    auto s = strip(line);
    if (s.empty() || s.front() == '#') continue;
    lines.emplace_back(no, std::string(s));
  }
  return parse_list_lines(lines, window);
}

void write_list(std::ostream& out, const IntSet& s) {
  s.for_each([&](std::int64_t x) { out << x << '\n'; });
}

void write_bits(std::ostream& out, const IntSet& s) {
  out << "lo=" << s.lo() << '\n';
  std::string line(static_cast<std::size_t>(s.window().length()), '0');
  s.bits().for_each_set([&](std::size_t i) { line[i] = '1'; });
  out << line << '\n';
}

void write_set_file(const std::string& path, const IntSet& s, SetFormat format) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  if (format == SetFormat::bits) write_bits(out, s);
  else write_list(out, s);
}

}  // namespace diffset
