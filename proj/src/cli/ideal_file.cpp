#include "idealpow/cli/ideal_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace idealpow::cli {
namespace {

bool is_blank(char c) { return c == ' ' || c == '\t'; }

struct Cursor {
  const std::string& source;
  const std::string& text;
  std::size_t line;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(source, line, pos + 1, message);
  }

  void skip_blanks() {
    while (pos < text.size() && is_blank(text[pos])) ++pos;
  }

  bool at_end() {
    skip_blanks();
    return pos == text.size();
  }

  Exponent read_integer() {
    skip_blanks();
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    if (first == last || *first < '0' || *first > '9') fail("expected a nonnegative integer");
    Exponent value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) fail("integer out of range");
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos < text.size() && !is_blank(text[pos])) fail("unexpected character '" + std::string(1, text[pos]) + "'");
    return value;
  }
};

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& message)
    : ParameterError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

IdealFile parse_ideal(std::istream& in, const std::string& source) {
  IdealFile file{source, 0, {}};
  bool have_header = false;
  std::string line;
  std::size_t lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Cursor cur{source, line, lineno};
    if (cur.at_end()) continue;
    if (line[cur.pos] == '#') continue;

    if (!have_header) {
      static constexpr std::string_view kHeader = "nvars:";
      if (line.compare(cur.pos, kHeader.size(), kHeader) != 0) cur.fail("expected header 'nvars: <n>'");
      cur.pos += kHeader.size();
      cur.skip_blanks();
      const std::size_t start = cur.pos;
      const Exponent n = cur.read_integer();
      if (n < 1) {
        cur.pos = start;
        cur.fail("nvars must be at least 1");
      }
      if (!cur.at_end()) cur.fail("trailing characters after header");
      file.arity = static_cast<std::size_t>(n);
      have_header = true;
      continue;
    }

    std::vector<Exponent> exps;
    while (!cur.at_end()) {
      if (exps.size() == file.arity) cur.fail("too many exponents (nvars is " + std::to_string(file.arity) + ")");
      exps.push_back(cur.read_integer());
    }
    if (exps.size() != file.arity) {
      cur.fail("expected " + std::to_string(file.arity) + " exponents, found " + std::to_string(exps.size()));
    }
    file.generators.emplace_back(std::move(exps));
  }

  if (!have_header) throw ParseError(source, lineno + 1, 1, "missing header 'nvars: <n>'");
  if (file.generators.empty()) throw ParseError(source, lineno + 1, 1, "empty generating set");
  return file;
}

IdealFile parse_ideal(std::string_view text, const std::string& source) {
  std::istringstream in{std::string(text)};
  return parse_ideal(in, source);
}

IdealFile read_ideal_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open " + path.string());
  return parse_ideal(in, path.string());
}

std::string emit_ideal(const MonomialIdeal& ideal, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) {
    std::istringstream lines{std::string(comment)};
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << '\n';
  }
  out << "nvars: " << ideal.arity() << '\n';
  for (const auto& g : ideal.generators()) {
    const auto exps = g.exponents();
    for (std::size_t i = 0; i < exps.size(); ++i) out << (i ? " " : "") << exps[i];
    out << '\n';
  }
  return out.str();
}

void write_ideal_file(const std::filesystem::path& path, const MonomialIdeal& ideal, std::string_view comment) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot write " + path.string());
  out << emit_ideal(ideal, comment);
}

}  // namespace idealpow::cli
