#include "debate/apx.hpp"

#include <cctype>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

namespace debate {
namespace {

class ApxLexer {
 public:
  explicit ApxLexer(std::string_view text) : text_(text) {}

  // Skips whitespace and comments; returns false at end of input.
  bool skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (c == '\n') ++line_;
        ++pos_;
      } else {
        return true;
      }
    }
    return false;
  }

  std::string word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++pos_;
      } else {
        break;
      }
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      std::string got = pos_ < text_.size() ? std::string(1, text_[pos_]) : "end of input";
      throw ApxError(line_, std::string("expected '") + c + "', got '" + got + "'");
    }
    ++pos_;
  }

  std::size_t line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

}  // namespace

ArgumentationFramework parse_apx(std::string_view text) {
  ArgumentationFramework af;
  std::vector<std::pair<std::string, std::string>> pending;
  std::vector<std::size_t> pending_lines;
  ApxLexer lex(text);
  while (lex.skip()) {
    const std::size_t line = lex.line();
    const std::string kw = lex.word();
    if (kw == "arg") {
      lex.expect('(');
      std::string name = lex.word();
      if (name.empty()) throw ApxError(line, "missing argument name");
      lex.expect(')');
      lex.expect('.');
      if (af.contains(name)) throw ApxError(line, "duplicate argument '" + name + "'");
      af.add_argument(std::move(name));
    } else if (kw == "att") {
      lex.expect('(');
      std::string a = lex.word();
      lex.expect(',');
      std::string b = lex.word();
      lex.expect(')');
      lex.expect('.');
      if (a.empty() || b.empty()) throw ApxError(line, "missing argument name in attack");
      pending.emplace_back(std::move(a), std::move(b));
      pending_lines.push_back(line);
    } else {
      throw ApxError(line, kw.empty() ? "unexpected character" : "unknown statement '" + kw + "'");
    }
  }
  // Attacks may precede the declarations they reference.
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const auto& [a, b] = pending[i];
    for (const auto* n : {&a, &b}) {
      if (!af.contains(*n)) {
        throw ApxError(pending_lines[i], "undeclared argument '" + *n + "' in attack");
      }
    }
    af.add_attack(a, b);
  }
  return af;
}

ArgumentationFramework load_apx(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_apx(buf.str());
}

std::string emit_apx(const ArgumentationFramework& af) {
  std::string out;
  for (const auto& n : af.names()) out += "arg(" + n + ").\n";
  for (const auto& at : af.attacks()) {
    out += "att(" + af.name(at.attacker) + "," + af.name(at.target) + ").\n";
  }
  return out;
}

ArgumentationFramework generate_random(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("attack probability outside [0,1]");
  if (n == 0) throw std::invalid_argument("at least one argument required");
  ArgumentationFramework af;
  for (std::size_t i = 0; i < n; ++i) af.add_argument("a" + std::to_string(i));
  // mt19937_64 output is fixed by the standard; the double conversion is done
  // by hand because distribution classes are implementation-defined.
  std::mt19937_64 rng(seed);
  for (ArgId x = 0; x < n; ++x) {
    for (ArgId y = 0; y < n; ++y) {
      if (x == y) continue;
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) af.add_attack(x, y);
    }
  }
  return af;
}

}  // namespace debate
