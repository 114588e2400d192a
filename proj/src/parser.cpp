#include "sdres/parser.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "sdres/error.hpp"

namespace sdres {

namespace {

class LineParser {
 public:
  LineParser(std::string_view line, int line_no) : s_(line), line_(line_no) {}

  DiffPolynomial parse(int expected_index) {
    expect('P');
    const long idx = integer(false);
    if (idx != expected_index)
      fail("expected P" + std::to_string(expected_index) + ", got P" + std::to_string(idx));
    expect('=');
    std::vector<DiffTerm> terms;
    std::set<LaurentMonomial> seen;
    do {
      const std::size_t at = pos_;
      DiffTerm t = term(expected_index, static_cast<int>(terms.size()));
      if (!seen.insert(t.mono).second)
        throw Error(ErrorKind::NonGenericTerm, where(at) + ": monomial repeats an earlier term of P" +
                                                   std::to_string(expected_index));
      terms.push_back(std::move(t));
    } while (accept('+'));
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return DiffPolynomial(expected_index, std::move(terms));
  }

 private:
  DiffTerm term(int poly, int index) {
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-'))
      throw Error(ErrorKind::NonGenericTerm, where(at) + ": numeric coefficients are not generic");
    if (!accept('u')) {
      if (peek() == 'y')
        throw Error(ErrorKind::NonGenericTerm, where(at) + ": term has no coefficient symbol u");
      fail("expected a term");
    }
    std::map<VarRef, int> exps;
    std::set<VarRef> seen;
    while (accept('*')) {
      skip_ws();
      const std::size_t fat = pos_;
      expect('y');
      expect('[');
      const long var = integer(false);
      expect(',');
      const long sh = integer(false);
      expect(']');
      long e = 1;
      if (accept('^')) e = integer(true);
      if (var < 1) fail_at(fat, "variable index must be at least 1");
      const VarRef v{static_cast<int>(var), static_cast<int>(sh)};
      if (!seen.insert(v).second)
        throw Error(ErrorKind::DuplicateVariable, where(fat) + ": " + to_string(v) + " appears twice in one term");
      if (e != 0) exps.emplace(v, static_cast<int>(e));
    }
    return DiffTerm{CoeffRef{poly, index, 0}, LaurentMonomial(std::move(exps))};
  }

  long integer(bool allow_sign) {
    skip_ws();
    const std::size_t start = pos_;
    bool neg = false;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail_at(start, "expected an integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000) fail_at(start, "integer too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string where(std::size_t at) const {
    return std::to_string(line_) + ":" + std::to_string(at + 1);
  }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError, where(at) + ": " + msg);
  }
  [[noreturn]] void fail(const std::string& msg) { fail_at(pos_, msg); }

  std::string_view s_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

SystemSource parse_system(std::string_view text) {
  SystemSource src;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos)
      src.polys.push_back(LineParser(line, line_no).parse(static_cast<int>(src.polys.size())));
    start = end + 1;
  }
  if (src.polys.empty()) throw Error(ErrorKind::SyntaxError, "1:1: no polynomials");
  src.n = static_cast<int>(src.polys.size()) - 1;
  for (const auto& p : src.polys)
    for (int v : p.variables())
      if (v > src.n)
        throw Error(ErrorKind::DimensionMismatch,
                    "P" + std::to_string(p.index()) + " uses y" + std::to_string(v) + " but " +
                        std::to_string(src.polys.size()) + " polynomials only admit " +
                        std::to_string(src.n) + " variables");
  return src;
}

std::string print_system(const SystemSource& src) {
  std::ostringstream os;
  for (const auto& p : src.polys) {
    os << "P" << p.index() << " =";
    bool first = true;
    for (const auto& t : p.terms()) {
      os << (first ? " u" : " + u");
      first = false;
      for (const auto& [v, e] : t.mono.exponents()) {
        os << "*y[" << v.var << "," << v.shift << "]";
        if (e != 1) os << "^" << e;
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace sdres
