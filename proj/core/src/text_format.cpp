#include "bigrade/text_format.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "bigrade/error.hpp"

namespace bigrade {

namespace {

struct Line {
  int number;
  std::string text;  // comment stripped
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string line(text.substr(pos, end - pos));
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back({number, std::move(line)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

/// Character cursor over one line, tracking the 1-based column.
class Cursor {
public:
  Cursor(const Line& line, std::size_t start = 0) : line_(line), pos_(start) {}

  void skip_space() {
    while (pos_ < line_.text.size() && std::isspace(static_cast<unsigned char>(line_.text[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= line_.text.size();
  }
  char peek() const { return pos_ < line_.text.size() ? line_.text[pos_] : '\0'; }
  char get() { return pos_ < line_.text.size() ? line_.text[pos_++] : '\0'; }
  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_space();
    const std::size_t begin = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (begin == pos_) fail("expected a nonnegative integer");
    if (pos_ - begin > 6) fail("integer too large");
    return std::stoi(line_.text.substr(begin, pos_ - begin));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_.number, static_cast<int>(pos_) + 1, what);
  }
  std::size_t position() const { return pos_; }

private:
  const Line& line_;
  std::size_t pos_;
};

bool starts_with_keyword(const std::string& text, std::string_view keyword, std::size_t& after) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (text.compare(i, keyword.size(), keyword) != 0) return false;
  after = i + keyword.size();
  return true;
}

/// x<i>[^e] or y<j>[^e]; returns (variable index, exponent).
std::pair<int, int> variable_power(Cursor& cur, const RingSpec* ring) {
  cur.skip_space();
  const char block = cur.get();
  if (block != 'x' && block != 'y') cur.fail("expected a variable x<i> or y<j>");
  const int idx = cur.integer();
  int exp = 1;
  if (cur.accept('^')) exp = cur.integer();
  if (ring != nullptr) {
    const int limit = block == 'x' ? ring->m : ring->n;
    if (idx < 1 || idx > limit) cur.fail(std::string("variable ") + block + std::to_string(idx) + " is not in the ring");
    return {block == 'x' ? idx - 1 : ring->m + idx - 1, exp};
  }
  return {block == 'x' ? 0 : 1, exp};
}

Monomial term(Cursor& cur, const RingSpec& ring) {
  std::vector<int> exps(ring.num_vars(), 0);
  cur.skip_space();
  if (cur.peek() == '1') {
    cur.integer();
    return Monomial(std::move(exps));
  }
  do {
    const auto [var, exp] = variable_power(cur, &ring);
    exps[var] += exp;
  } while (cur.accept('*'));
  return Monomial(std::move(exps));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

MonomialIdeal parse_ideal_text(std::string_view text, int characteristic) {
  std::optional<RingSpec> ring;
  std::vector<Monomial> gens;
  bool saw_gens = false;
  int last_line = 1;
  for (const auto& line : split_lines(text)) {
    last_line = line.number;
    std::size_t after = 0;
    Cursor probe(line);
    if (probe.at_end()) continue;
    if (starts_with_keyword(line.text, "ring", after)) {
      if (ring) Cursor(line, after).fail("duplicate ring line");
      Cursor cur(line, after);
      const int m = cur.integer();
      const int n = cur.integer();
      if (!cur.at_end()) cur.fail("unexpected text after ring sizes");
      try {
        ring = RingSpec::make(m, n, characteristic);
      } catch (const Error& e) {
        cur.fail(e.what());
      }
    } else if (starts_with_keyword(line.text, "gens", after)) {
      Cursor cur(line, after);
      if (!ring) cur.fail("gens line before ring line");
      cur.expect(':');
      saw_gens = true;
      if (cur.at_end()) continue;
      do {
        gens.push_back(term(cur, *ring));
      } while (cur.accept(','));
      if (!cur.at_end()) cur.fail("expected ',' or end of line");
    } else {
      probe.fail("expected 'ring' or 'gens:'");
    }
  }
  if (!ring) throw ParseError(last_line, 1, "missing ring line");
  if (!saw_gens) throw ParseError(last_line, 1, "missing gens line");
  return MonomialIdeal(*ring, gens);
}

MonomialIdeal read_ideal_file(const std::string& path, int characteristic) {
  return parse_ideal_text(slurp(path), characteristic);
}

std::string render_ideal_text(const MonomialIdeal& ideal) {
  std::string out = "ring " + std::to_string(ideal.ring().m) + " " + std::to_string(ideal.ring().n) + "\ngens:";
  for (std::size_t i = 0; i < ideal.gens().size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += render_monomial(ideal.ring(), ideal.gens()[i]);
  }
  return out + "\n";
}

Monomial parse_monomial(std::string_view text, const RingSpec& ring) {
  const Line line{1, std::string(text)};
  Cursor cur(line);
  Monomial u = term(cur, ring);
  if (!cur.at_end()) cur.fail("unexpected text after monomial");
  return u;
}

ProfileSpec parse_profile_text(std::string_view text) {
  std::optional<RingSpec> ring;
  std::vector<Bidegree> factors;
  bool saw_factors = false;
  int last_line = 1;
  for (const auto& line : split_lines(text)) {
    last_line = line.number;
    std::size_t after = 0;
    Cursor probe(line);
    if (probe.at_end()) continue;
    if (starts_with_keyword(line.text, "ring", after)) {
      Cursor cur(line, after);
      const int m = cur.integer();
      const int n = cur.integer();
      if (!cur.at_end()) cur.fail("unexpected text after ring sizes");
      try {
        ring = RingSpec::make(m, n);
      } catch (const Error& e) {
        cur.fail(e.what());
      }
      continue;
    }
    std::size_t start = 0;
    if (starts_with_keyword(line.text, "factors", after)) {
      Cursor cur(line, after);
      cur.expect(':');
      start = cur.position();
    }
    saw_factors = true;
    Cursor cur(line, start);
    while (!cur.at_end()) {
      if (cur.accept('(')) {
        const int a = cur.integer();
        cur.expect(',');
        const int b = cur.integer();
        cur.expect(')');
        factors.push_back({a, b});
      } else {
        const auto [block, exp] = variable_power(cur, nullptr);
        factors.push_back(block == 0 ? Bidegree{exp, 0} : Bidegree{0, exp});
      }
      cur.accept(',');
    }
  }
  if (!saw_factors || factors.empty()) throw ParseError(last_line, 1, "no factors given");
  try {
    return ProfileSpec{FactorProfile(std::move(factors)), ring};
  } catch (const Error& e) {
    throw ParseError(last_line, 1, e.what());
  }
}

ProfileSpec read_profile_file(const std::string& path) { return parse_profile_text(slurp(path)); }

}  // namespace bigrade
