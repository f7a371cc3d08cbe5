#include "qlab/text_formats.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "qlab/error.hpp"

namespace qlab {

namespace {

class Tokens {
 public:
  explicit Tokens(std::string_view text) {
    std::size_t i = 0;
    int line = 1;
    while (i < text.size()) {
      const char c = text[i];
      if (c == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
      } else if (c == '\n') {
        ++line;
        ++i;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else {
        const std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') ++i;
        toks_.emplace_back(std::string(text.substr(start, i - start)), line);
      }
    }
  }

  bool done() const { return pos_ >= toks_.size(); }
  const std::string& peek() const {
    if (done()) fail("unexpected end of input");
    return toks_[pos_].first;
  }
  std::string next() {
    const std::string& t = peek();
    ++pos_;
    return t;
  }
  void expect(std::string_view word) {
    const std::string t = next();
    if (t != word) fail("expected '" + std::string(word) + "', found '" + t + "'", pos_ - 1);
  }
  bool accept(std::string_view word) {
    if (!done() && peek() == word) {
      ++pos_;
      return true;
    }
    return false;
  }
  long integer(long lo, long hi) {
    const std::string t = next();
    long v = 0;
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size()) fail("expected an integer, found '" + t + "'", pos_ - 1);
    if (v < lo || v > hi) {
      fail(std::to_string(v) + " outside " + std::to_string(lo) + ".." + std::to_string(hi), pos_ - 1);
    }
    return v;
  }
  UnitValue unit_value() {
    const std::string t = next();
    try {
      return UnitValue::parse(t);
    } catch (const Error& e) {
      fail(e.what(), pos_ - 1);
    }
  }
  void finish() {
    if (!done()) fail("trailing token '" + peek() + "'");
  }
  [[noreturn]] void fail(const std::string& msg, std::size_t at = static_cast<std::size_t>(-1)) const {
    if (at == static_cast<std::size_t>(-1)) at = pos_;
    const int line = toks_.empty() ? 0 : toks_[std::min(at, toks_.size() - 1)].second;
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
  }

 private:
  std::vector<std::pair<std::string, int>> toks_;
  std::size_t pos_ = 0;
};

Table read_table(Tokens& t, int rows, int cols, int max_value) {
  Table out(rows, std::vector<Elem>(cols));
  for (auto& row : out)
    for (auto& v : row) v = static_cast<Elem>(t.integer(0, max_value - 1));
  return out;
}

// Element b with b v x = x for every x, the bottom of a join table.
Elem bottom_of(const Table& join, Tokens& t) {
  const int n = static_cast<int>(join.size());
  for (int b = 0; b < n; ++b) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = join[b][x] == x;
    if (ok) return b;
  }
  t.fail("join table has no bottom element");
}

FiniteQuantale load_quantale_file(const std::string& path) {
  return FiniteQuantale::build(parse_quantale(read_text_file(path)));
}

std::string resolve(const std::string& base_dir, const std::string& ref) {
  const std::filesystem::path p(ref);
  return p.is_absolute() || base_dir.empty() ? ref : (std::filesystem::path(base_dir) / p).string();
}

}  // namespace

QuantaleTables parse_quantale(std::string_view text) {
  Tokens t(text);
  t.expect("quantale");
  const int n = static_cast<int>(t.integer(1, 4096));
  QuantaleTables q;
  if (t.accept("labels")) {
    for (int i = 0; i < n; ++i) q.labels.push_back(t.next());
  }
  t.expect("join");
  q.join = read_table(t, n, n, n);
  t.expect("product");
  q.product = read_table(t, n, n, n);
  t.expect("unit");
  q.unit = static_cast<Elem>(t.integer(0, n - 1));
  q.bottom = t.accept("bottom") ? static_cast<Elem>(t.integer(0, n - 1)) : bottom_of(q.join, t);
  t.finish();
  return q;
}

FiniteMonoid parse_monoid(std::string_view text) {
  Tokens t(text);
  t.expect("monoid");
  FiniteMonoid m;
  m.size = static_cast<int>(t.integer(1, 64));
  t.expect("unit");
  m.unit = static_cast<Elem>(t.integer(0, m.size - 1));
  t.expect("product");
  m.product = read_table(t, m.size, m.size, m.size);
  t.finish();
  m.validate();
  return m;
}

ParsedModule parse_module_tables(std::string_view text, const std::string& base_dir) {
  Tokens t(text);
  t.expect("module");
  const int m = static_cast<int>(t.integer(1, 4096));
  t.expect("over");
  const FiniteQuantale q = load_quantale_file(resolve(base_dir, t.next()));
  ModuleTables tables;
  t.expect("join");
  tables.join = read_table(t, m, m, m);
  t.expect("action");
  tables.action = read_table(t, q.size(), m, m);
  tables.bottom = t.accept("bottom") ? static_cast<Elem>(t.integer(0, m - 1)) : bottom_of(tables.join, t);
  t.finish();
  return ParsedModule{q, std::move(tables)};
}

FiniteModule parse_module(std::string_view text, const std::string& base_dir) {
  const ParsedModule p = parse_module_tables(text, base_dir);
  return FiniteModule::build(p.quantale, p.tables);
}

AnyKernel parse_kernel(std::string_view text, const std::string& base_dir) {
  Tokens t(text);
  t.expect("kernel");
  const int x = static_cast<int>(t.integer(1, 4096));
  const int y = static_cast<int>(t.integer(1, 4096));
  const std::string qname = t.next();
  auto read_embed = [&]() -> std::optional<std::vector<int>> {
    if (!t.accept("embed")) return std::nullopt;
    std::vector<int> e(y);
    for (auto& v : e) v = static_cast<int>(t.integer(0, x - 1));
    return e;
  };
  std::optional<TNormKind> kind;
  try {
    kind = TNormKind::parse(qname);
  } catch (const Error&) {
  }
  if (kind) {
    std::vector<UnitValue> vals(static_cast<std::size_t>(x) * y);
    bool any_float = false;
    for (auto& v : vals) {
      v = t.unit_value();
      any_float = any_float || !v.is_exact();
    }
    auto embed = read_embed();
    t.finish();
    const Backend b = any_float || kind->requires_float() ? Backend::Float : Backend::Exact;
    if (b == Backend::Float)
      for (auto& v : vals) v = v.to_float();
    return Kernel<TNormQuantale>(TNormQuantale(*kind, b), x, y, std::move(vals), std::move(embed));
  }
  const FiniteQuantale q = load_quantale_file(resolve(base_dir, qname));
  std::vector<Elem> vals(static_cast<std::size_t>(x) * y);
  for (auto& v : vals) v = static_cast<Elem>(t.integer(0, q.size() - 1));
  auto embed = read_embed();
  t.finish();
  return Kernel<FiniteQuantale>(q, x, y, std::move(vals), std::move(embed));
}

StructuringElement parse_structuring_element(std::string_view text) {
  Tokens t(text);
  t.expect("se");
  const int k = static_cast<int>(t.integer(1, 1 << 16));
  std::vector<Offset> offs(k);
  std::vector<UnitValue> w(k);
  for (int i = 0; i < k; ++i) {
    offs[i].dx = static_cast<int>(t.integer(-1 << 16, 1 << 16));
    offs[i].dy = static_cast<int>(t.integer(-1 << 16, 1 << 16));
    w[i] = t.unit_value();
  }
  t.finish();
  return StructuringElement(std::move(offs), std::move(w));
}

FuzzyPartition parse_partition(std::string_view text) {
  Tokens t(text);
  t.expect("partition");
  const int l = static_cast<int>(t.integer(1, 1 << 16));
  const int n = static_cast<int>(t.integer(1, 1 << 16));
  const TNormKind kind = TNormKind::parse(t.next());
  std::vector<UnitValue> vals(static_cast<std::size_t>(l) * n);
  bool any_float = kind.requires_float();
  for (auto& v : vals) {
    v = t.unit_value();
    any_float = any_float || !v.is_exact();
  }
  t.finish();
  if (any_float)
    for (auto& v : vals) v = v.to_float();
  return FuzzyPartition(l, n, std::move(vals), kind);
}

std::string leading_keyword(std::string_view text) {
  Tokens t(text);
  return t.done() ? std::string() : t.peek();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string parent_dir(const std::string& path) { return std::filesystem::path(path).parent_path().string(); }

}  // namespace qlab
