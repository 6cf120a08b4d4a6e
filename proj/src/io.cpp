#include "mpg/io.hpp"

#include <cctype>
#include <cstdio>
#include <cstring>
#include <map>

namespace mpg {

namespace {

constexpr int64_t kMaxId = 100000000;  // sanity cap on declared ids

// Blanks out comment lines so the lexer never sees them. Newlines are kept
// so line numbers stay correct.
std::string strip_comments(const std::string& raw) {
  std::string out = raw;
  size_t i = 0;
  while (i < out.size()) {
    size_t j = i;
    while (j < out.size() && (out[j] == ' ' || out[j] == '\t')) ++j;
    bool comment = j < out.size() && out[j] == '#';
    size_t eol = out.find('\n', i);
    if (eol == std::string::npos) eol = out.size();
    if (comment)
      for (size_t k = i; k < eol; ++k) out[k] = ' ';
    i = eol + 1;
  }
  return out;
}

struct Lexer {
  std::string text;
  size_t i = 0;
  int line = 1;
  int last_line = 1;  // line of the most recently consumed token

  explicit Lexer(const std::string& raw) : text(strip_comments(raw)) {}

  // Errors found at end of input blame the last token's line, not the
  // line count accumulated by trailing whitespace.
  [[noreturn]] void err(const std::string& reason) {
    throw ParseError(i >= text.size() ? last_line : line, reason);
  }

  void ws() {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
      if (text[i] == '\n') ++line;
      ++i;
    }
  }
  bool eof() {
    ws();
    return i >= text.size();
  }
  char peek() {
    ws();
    return i < text.size() ? text[i] : '\0';
  }

  std::string ident() {
    ws();
    size_t b = i;
    while (i < text.size() &&
           (std::isalpha(static_cast<unsigned char>(text[i])) ||
            text[i] == '_'))
      ++i;
    if (i == b) err("expected a keyword");
    last_line = line;
    return text.substr(b, i - b);
  }

  std::string digits(bool allow_sign) {
    ws();
    size_t b = i;
    if (allow_sign && i < text.size() && text[i] == '-') ++i;
    size_t d = i;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == d) err("expected a number");
    last_line = line;
    return text.substr(b, i - b);
  }

  Int integer() { return Int(digits(true)); }

  int64_t nat64(const char* what) {
    std::string s = digits(false);
    if (s.size() > 18) err(std::string(what) + " too large");
    return std::strtoll(s.c_str(), nullptr, 10);
  }

  void expect(char c) {
    ws();
    if (i >= text.size() || text[i] != c)
      err(std::string("expected '") + c + "'");
    ++i;
    last_line = line;
  }
  bool try_expect(char c) {
    ws();
    if (i < text.size() && text[i] == c) {
      ++i;
      last_line = line;
      return true;
    }
    return false;
  }

  bool at_quote() { return peek() == '"'; }

  std::string quoted() {
    expect('"');
    std::string out;
    while (i < text.size() && text[i] != '"') {
      char c = text[i];
      if (c == '\n') err("unterminated label");
      if (c == '\\') {
        ++i;
        if (i >= text.size()) err("unterminated label");
        c = text[i];
        if (c != '"' && c != '\\') err("unknown escape in label");
      }
      out.push_back(c);
      ++i;
    }
    if (i >= text.size()) err("unterminated label");
    ++i;
    last_line = line;
    return out;
  }

  std::vector<int64_t> succ_list(int64_t n) {
    std::vector<int64_t> out;
    do {
      int64_t u = nat64("successor id");
      if (u >= n) err("successor id " + std::to_string(u) + " out of range");
      out.push_back(u);
    } while (try_expect(','));
    return out;
  }
};

std::string escape_label(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

Game parse_mpg(const std::string& text) {
  Lexer lx(text);
  if (lx.ident() != "mpg") lx.err("expected header keyword 'mpg'");
  int64_t max_id = lx.nat64("max id");
  if (max_id > kMaxId) lx.err("declared max id too large");
  lx.expect(';');
  const int64_t n = max_id + 1;

  std::vector<RawPosition> raw;
  std::vector<int> rec_line(n, 0);
  std::vector<char> seen(n, 0);
  while (!lx.eof()) {
    int at = lx.line;
    RawPosition r;
    r.id = lx.nat64("position id");
    if (r.id >= n) lx.err("position id " + std::to_string(r.id) +
                          " exceeds declared max id");
    if (seen[r.id]) lx.err("duplicate position id " + std::to_string(r.id));
    seen[r.id] = 1;
    rec_line[r.id] = at;
    r.weight = lx.integer();
    int64_t own = lx.nat64("owner");
    if (own != 0 && own != 1) lx.err("owner must be 0 or 1");
    r.owner = own == 0 ? Owner::Max : Owner::Min;
    r.succ = lx.succ_list(n);
    if (lx.at_quote()) r.label = lx.quoted();
    lx.expect(';');
    raw.push_back(std::move(r));
  }
  if (static_cast<int64_t>(raw.size()) != n)
    lx.err("expected " + std::to_string(n) + " positions, found " +
           std::to_string(raw.size()));
  try {
    return build_game(raw);
  } catch (const BuildError& e) {
    int at = e.id >= 0 && e.id < n ? rec_line[e.id] : 0;
    throw ParseError(at, e.what());
  }
}

std::string write_mpg(const Game& g, const std::string& header_comment) {
  std::string out;
  if (!header_comment.empty()) {
    size_t i = 0;
    while (i <= header_comment.size()) {
      size_t eol = header_comment.find('\n', i);
      if (eol == std::string::npos) eol = header_comment.size();
      out += "# " + header_comment.substr(i, eol - i) + "\n";
      i = eol + 1;
      if (i > header_comment.size()) break;
      if (i == header_comment.size()) break;
    }
  }
  out += "mpg " + std::to_string(g.size() - 1) + ";\n";
  for (int32_t v = 0; v < g.size(); ++v) {
    out += std::to_string(v) + " " + g.weight(v).str() + " " +
           (g.owner(v) == Owner::Max ? "0" : "1") + " ";
    bool first = true;
    for (int32_t u : g.succ(v)) {
      if (!first) out += ",";
      out += std::to_string(u);
      first = false;
    }
    if (!g.label(v).empty()) out += " \"" + escape_label(g.label(v)) + "\"";
    out += ";\n";
  }
  return out;
}

ParityGame parse_parity(const std::string& text) {
  Lexer lx(text);
  if (lx.ident() != "parity") lx.err("expected header keyword 'parity'");
  int64_t max_id = lx.nat64("max id");
  if (max_id > kMaxId) lx.err("declared max id too large");
  lx.expect(';');
  const int64_t n = max_id + 1;

  ParityGame pg;
  pg.priority.assign(n, -1);
  pg.owner.assign(n, 0);
  pg.succ.resize(n);
  pg.label.resize(n);
  std::vector<char> seen(n, 0);
  while (!lx.eof()) {
    int64_t id = lx.nat64("position id");
    if (id >= n) lx.err("position id " + std::to_string(id) +
                        " exceeds declared max id");
    if (seen[id]) lx.err("duplicate position id " + std::to_string(id));
    seen[id] = 1;
    int64_t pr = lx.nat64("priority");
    if (pr > 1000000000) lx.err("priority too large");
    int64_t own = lx.nat64("owner");
    if (own != 0 && own != 1) lx.err("owner must be 0 or 1");
    std::vector<int64_t> succ = lx.succ_list(n);
    if (lx.at_quote()) pg.label[id] = lx.quoted();
    lx.expect(';');
    pg.priority[id] = static_cast<int32_t>(pr);
    pg.owner[id] = static_cast<uint8_t>(own);
    pg.succ[id].assign(succ.begin(), succ.end());
  }
  for (int64_t v = 0; v < n; ++v) {
    if (pg.priority[v] < 0)
      lx.err("position " + std::to_string(v) + " missing");
    if (pg.succ[v].empty())
      lx.err("position " + std::to_string(v) + " has no successors");
  }
  return pg;
}

Game parity_to_mpg(const ParityGame& pg) {
  const int32_t n = pg.size();
  std::vector<RawPosition> raw(n);
  const Int base = -Int(n);
  for (int32_t v = 0; v < n; ++v) {
    raw[v].id = v;
    raw[v].weight = boost::multiprecision::pow(
        base, static_cast<unsigned>(pg.priority[v]));
    raw[v].owner = pg.owner[v] == 0 ? Owner::Max : Owner::Min;
    raw[v].succ.assign(pg.succ[v].begin(), pg.succ[v].end());
    raw[v].label = pg.label[v];
  }
  return build_game(raw);
}

Game edges_to_positions(const WeightedEdgeGame& eg) {
  const int32_t n = eg.size();
  std::vector<RawPosition> raw(n);
  int64_t next_id = n;
  for (int32_t v = 0; v < n; ++v) {
    raw[v].id = v;
    raw[v].weight = 0;
    raw[v].owner = eg.owner[v];
    for (const auto& [target, w] : eg.succ[v]) {
      RawPosition mid;
      mid.id = next_id++;
      mid.weight = w;
      mid.owner = eg.owner[v];
      mid.succ.push_back(target);
      raw[v].succ.push_back(mid.id);
      raw.push_back(std::move(mid));
    }
  }
  return build_game(raw);
}

namespace {

struct SplitMix64 {
  uint64_t s;
  explicit SplitMix64(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s += 0x9E3779B97F4A7C15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace

Game generate_random(const RandomGameParams& p) {
  if (p.n <= 0) throw InvalidRange("n must be positive");
  if (p.n > kMaxId) throw InvalidRange("n too large");
  if (p.max_outdeg <= 0) throw InvalidRange("max_outdeg must be positive");
  if (p.weight_lo > p.weight_hi)
    throw InvalidRange("weight_lo exceeds weight_hi");
  if (!(p.owner_ratio >= 0.0 && p.owner_ratio <= 1.0))
    throw InvalidRange("owner_ratio must be within [0,1]");

  SplitMix64 rng(p.seed);
  const uint64_t span = static_cast<uint64_t>(p.weight_hi) -
                        static_cast<uint64_t>(p.weight_lo) + 1;
  std::vector<RawPosition> raw(p.n);
  std::vector<int32_t> stamp(p.n, -1);
  for (int32_t v = 0; v < p.n; ++v) {
    RawPosition& r = raw[v];
    r.id = v;
    r.owner = rng.unit() < p.owner_ratio ? Owner::Max : Owner::Min;
    int32_t deg = 1 + static_cast<int32_t>(rng.next() %
                                           static_cast<uint64_t>(p.max_outdeg));
    if (deg > p.n) deg = p.n;
    while (static_cast<int32_t>(r.succ.size()) < deg) {
      int32_t u =
          static_cast<int32_t>(rng.next() % static_cast<uint64_t>(p.n));
      if (stamp[u] == v) continue;
      stamp[u] = v;
      r.succ.push_back(u);
    }
    if (span == 0) {
      // Full 64-bit range; the draw itself is the value.
      r.weight = static_cast<int64_t>(rng.next());
    } else {
      r.weight = p.weight_lo + static_cast<int64_t>(rng.next() % span);
    }
  }
  return build_game(raw);
}

std::string random_game_header(const RandomGameParams& p) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "mpg-generate n=%d max_outdeg=%d weight_lo=%lld "
                "weight_hi=%lld owner_ratio=%.17g seed=%llu",
                p.n, p.max_outdeg, static_cast<long long>(p.weight_lo),
                static_cast<long long>(p.weight_hi), p.owner_ratio,
                static_cast<unsigned long long>(p.seed));
  return buf;
}

}  // namespace mpg
