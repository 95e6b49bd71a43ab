#include "expansive/problem.hpp"

#include <algorithm>
#include <cctype>

#include "expansive/multipoly.hpp"

namespace expansive {

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1, col = 1;
    for (size_t k = 0; k < i && k < s.size(); ++k) {
      if (s[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw error("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Int integer() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected an integer");
    return Int(s.substr(start, i - start));
  }

  long bounded_integer(const char* what) {
    Int v = integer();
    if (v > Int(2147483647)) fail(std::string(what) + " overflows 2^31");
    return v.convert_to<long>();
  }

  long signed_exponent() {
    skip_ws();
    bool neg = accept('-');
    if (!neg) accept('+');
    long v = bounded_integer("exponent");
    return neg ? -v : v;
  }
};

// Integer polynomial in the parameter n: ['-'] term (('+'|'-') term)*,
// term = integer ['*' npart] | npart, npart = 'n' ['^' posint].
UniPoly parse_n_expr(Cursor& c) {
  UniPoly out;
  int sign = 1;
  if (c.accept('-'))
    sign = -1;
  else
    c.accept('+');
  while (true) {
    Rat coeff(sign);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff *= Rat(c.integer());
      have_coeff = true;
      c.accept('*');
    }
    int deg = 0;
    if (c.peek() == 'n') {
      ++c.i;
      deg = 1;
      if (c.accept('^')) deg = static_cast<int>(c.bounded_integer("exponent"));
    } else if (!have_coeff) {
      c.fail("expected an integer or 'n'");
    }
    out = out + UniPoly::monomial(deg, coeff);
    char nxt = c.peek();
    if (nxt == '+') {
      ++c.i;
      sign = 1;
    } else if (nxt == '-') {
      ++c.i;
      sign = -1;
    } else {
      return out;
    }
  }
}

GeneratorFamily::Index parse_index(Cursor& c) {
  GeneratorFamily::Index idx;
  if (c.peek() == 'n') {
    ++c.i;
    idx.symbolic = true;
    if (c.accept('+'))
      idx.offset = static_cast<int>(c.bounded_integer("index"));
    else if (c.accept('-'))
      idx.offset = -static_cast<int>(c.bounded_integer("index"));
  } else {
    idx.offset = static_cast<int>(c.bounded_integer("index"));
    if (idx.offset < 1) c.fail("variable index must be positive");
  }
  return idx;
}

GeneratorFamily::Term parse_term(Cursor& c, int sign) {
  GeneratorFamily::Term term;
  term.coeff = UniPoly::constant(Rat(sign));
  bool any = false;
  while (true) {
    char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      term.coeff = term.coeff * UniPoly::constant(Rat(c.integer()));
    } else if (ch == 'n') {
      size_t save = c.i;
      ++c.i;
      // bare parameter factor; 'n' never starts a variable name
      c.i = save;
      term.coeff = term.coeff * UniPoly{Rat(0), Rat(1)};
      ++c.i;
    } else if (ch == '(') {
      ++c.i;
      term.coeff = term.coeff * parse_n_expr(c);
      c.expect(')');
    } else if (ch == 'x' || ch == 'e') {
      ++c.i;
      GeneratorFamily::Index idx;
      if (ch == 'x') {
        idx.offset = static_cast<int>(c.bounded_integer("index"));
        if (idx.offset < 1) c.fail("variable index must be positive");
      } else {
        c.expect('(');
        idx = parse_index(c);
        c.expect(')');
      }
      int exp = 1;
      if (c.accept('^')) exp = static_cast<int>(c.signed_exponent());
      auto same = std::find_if(term.exponents.begin(), term.exponents.end(), [&](const auto& p) {
        return p.first.symbolic == idx.symbolic && p.first.offset == idx.offset;
      });
      if (same != term.exponents.end())
        same->second += exp;
      else
        term.exponents.push_back({idx, exp});
    } else {
      if (!any) c.fail("expected a term");
      return term;
    }
    any = true;
    c.accept('*');
  }
}

}  // namespace

GeneratorFamily parse_family(const std::string& text) {
  Cursor c{text};
  GeneratorFamily fam;
  int sign = 1;
  if (c.accept('-'))
    sign = -1;
  else
    c.accept('+');
  while (true) {
    fam.terms.push_back(parse_term(c, sign));
    if (c.eof()) return fam;
    char ch = c.peek();
    if (ch == '+') {
      ++c.i;
      sign = 1;
    } else if (ch == '-') {
      ++c.i;
      sign = -1;
    } else {
      c.fail("expected '+', '-' or end of input");
    }
  }
}

LaurentPoly parse_polynomial(const std::string& text) {
  GeneratorFamily fam = parse_family(text);
  LaurentPoly out;
  for (const auto& t : fam.terms) {
    if (!t.coeff.is_constant())
      throw error("the parameter n is not allowed in a plain polynomial: " + text);
    Rat cr = t.coeff.coeff(0);
    if (den(cr) != 1) throw error("non-integer coefficient in: " + text);
    ExponentVector m;
    for (const auto& [idx, e] : t.exponents) {
      if (idx.symbolic)
        throw error("the parameter n is not allowed in a plain polynomial: " + text);
      m.set(idx.offset, m.exponent(idx.offset) + e);
    }
    out.add_term(m, num(cr));
  }
  return out;
}

Rat parse_rational(const std::string& text) {
  Cursor c{text};
  bool neg = c.accept('-');
  Int whole = c.integer();
  Rat out(whole);
  if (c.accept('/')) {
    Int q = c.integer();
    if (q == 0) c.fail("zero denominator");
    out = Rat(whole) / Rat(q);
  } else if (c.accept('.')) {
    c.skip_ws();
    size_t start = c.i;
    Int frac = c.integer();
    Int scale = 1;
    for (size_t k = start; k < c.i; ++k) scale *= 10;
    out += Rat(frac) / Rat(scale);
  }
  if (!c.eof()) c.fail("trailing characters in number");
  return neg ? Rat(-out) : out;
}

WitnessValue parse_witness_value(const std::string& text) {
  Cursor c{text};
  if (c.peek() == 'z') {
    for (const char* p = "zeta"; *p; ++p)
      if (c.i < text.size() && text[c.i] == *p)
        ++c.i;
      else
        c.fail("unrecognized witness value");
    c.expect('(');
    long q = c.bounded_integer("order");
    if (q < 1) c.fail("order must be positive");
    c.expect(')');
    long k = 1;
    if (c.accept('^')) k = c.signed_exponent();
    if (!c.eof()) c.fail("trailing characters");
    k %= q;
    if (k < 0) k += q;
    return WitnessValue(CycValue::root_power(static_cast<unsigned>(q), k));
  }
  if (c.peek() == 't' || c.peek() == 'a') {
    bool is_turn = c.peek() == 't';
    const char* word = is_turn ? "turn" : "angle";
    for (const char* p = word; *p; ++p)
      if (c.i < text.size() && text[c.i] == *p)
        ++c.i;
      else
        c.fail("unrecognized witness value");
    c.expect('(');
    size_t close = text.rfind(')');
    if (close == std::string::npos || close < c.i) c.fail("expected ')'");
    Rat r = parse_rational(text.substr(c.i, close - c.i));
    if (is_turn) {
      r -= Rat(rat_floor(r));  // reduce into [0, 1)
      long q = den(r).convert_to<long>();
      long p = num(r).convert_to<long>();
      return WitnessValue(CycValue::root_power(static_cast<unsigned>(q), p));
    }
    return WitnessValue(NumericCandidate{r - Rat(rat_floor(r)), Rat(0)});
  }
  Rat r = parse_rational(text);
  if (r == 1) return WitnessValue(CycValue::one());
  if (r == -1) return WitnessValue(CycValue::rational(Rat(-1)));
  Cursor c2{text};
  c2.fail("witness value must be 1, -1, zeta(q)^k, turn(p/q) or angle(x)");
}

// ---------------------------------------------------------------------------
// Section/key file format.

namespace {

struct Entry {
  std::string key, value;
  int line;
};
struct Section {
  std::string name;
  int line;
  std::vector<Entry> entries;
};

[[noreturn]] void fail_at(int line, const std::string& msg) {
  throw error("line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<Section> parse_sections(const std::string& text) {
  std::vector<Section> out;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    // strip comments, respecting double quotes
    bool quoted = false;
    for (size_t k = 0; k < line.size(); ++k) {
      if (line[k] == '"') quoted = !quoted;
      if (line[k] == '#' && !quoted) {
        line.resize(k);
        break;
      }
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail_at(line_no, "unterminated section header");
      out.push_back({trim(line.substr(1, line.size() - 2)), line_no, {}});
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) fail_at(line_no, "expected 'key = value'");
    if (out.empty()) fail_at(line_no, "key outside any section");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail_at(line_no, "empty key");
    for (const auto& e : out.back().entries)
      if (e.key == key) fail_at(line_no, "duplicate key '" + key + "'");
    out.back().entries.push_back({key, value, line_no});
  }
  return out;
}

std::string unquote(const Entry& e) {
  const std::string& v = e.value;
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') return v.substr(1, v.size() - 2);
  return v;
}

std::vector<std::string> as_list(const Entry& e) {
  const std::string& v = e.value;
  if (v.empty() || v.front() != '[' || v.back() != ']')
    fail_at(e.line, "expected a bracketed list for '" + e.key + "'");
  std::vector<std::string> items;
  std::string cur;
  bool quoted = false;
  for (size_t k = 1; k + 1 < v.size(); ++k) {
    char ch = v[k];
    if (ch == '"') {
      quoted = !quoted;
      continue;
    }
    if (ch == ',' && !quoted) {
      items.push_back(trim(cur));
      cur.clear();
      continue;
    }
    cur += ch;
  }
  if (quoted) fail_at(e.line, "unterminated string");
  cur = trim(cur);
  if (!cur.empty()) items.push_back(cur);
  return items;
}

bool as_bool(const Entry& e) {
  std::string v = unquote(e);
  if (v == "true") return true;
  if (v == "false") return false;
  fail_at(e.line, "expected true or false for '" + e.key + "'");
}

long as_long(const Entry& e) {
  try {
    return std::stol(unquote(e));
  } catch (const std::exception&) {
    fail_at(e.line, "expected an integer for '" + e.key + "'");
  }
}

int parse_var_name(const std::string& name, int line) {
  try {
    if (name.size() >= 2 && name[0] == 'x') return std::stoi(name.substr(1));
    if (name.size() >= 4 && name.rfind("e(", 0) == 0 && name.back() == ')')
      return std::stoi(name.substr(2, name.size() - 3));
  } catch (const std::exception&) {
  }
  fail_at(line, "expected a variable name like x1 or e(1), got '" + name + "'");
}

IdealSpec ideal_from_strings(const std::vector<std::string>& items, int line) {
  std::vector<LaurentPoly> gens;
  for (const auto& s : items) {
    try {
      gens.push_back(parse_polynomial(s));
    } catch (const error& ex) {
      fail_at(line, std::string(ex.what()) + " (in \"" + s + "\")");
    }
  }
  return IdealSpec::of(std::move(gens));
}

// "a*t + b" with t an alias for a single variable; returns (a, b).
std::pair<Int, Int> parse_linear_pair(const std::string& s, int line) {
  std::string replaced;
  for (size_t k = 0; k < s.size(); ++k) {
    if (s[k] == 't') {
      replaced += "x1";
    } else {
      replaced += s[k];
    }
  }
  LaurentPoly p;
  try {
    p = parse_polynomial(replaced);
  } catch (const error& ex) {
    fail_at(line, std::string(ex.what()) + " (in \"" + s + "\")");
  }
  Int a = 0, b = 0;
  for (const auto& [m, c] : p.terms()) {
    if (m.empty())
      b = c;
    else if (m.entries().size() == 1 && m.exponent(1) == 1)
      a = c;
    else
      fail_at(line, "expected a degree-1 polynomial in t: \"" + s + "\"");
  }
  return {a, b};
}

}  // namespace

const char* problem_kind_name(ProblemKind k) {
  switch (k) {
    case ProblemKind::Module: return "module";
    case ProblemKind::Cyclic: return "cyclic";
    case ProblemKind::LinearUnits: return "linear-units";
    case ProblemKind::AlgebraicUnit: return "algebraic-unit";
    case ProblemKind::WitnessCheck: return "witness-check";
    case ProblemKind::Simulate: return "simulate";
  }
  return "?";
}

ModuleSpec ProblemFile::module() const {
  ModuleSpec m = ModuleSpec::of(annihilators);
  for (int v : declared_vars) m.ambient_vars.insert(v);
  for (auto& a : m.annihilators)
    for (int v : declared_vars) a.ambient_vars.insert(v);
  return m;
}

ProblemFile parse_problem(const std::string& text) {
  auto sections = parse_sections(text);
  if (sections.empty() || sections.front().name != "problem")
    throw error("the file must start with a [problem] section");

  ProblemFile pf;
  bool kind_seen = false;
  std::vector<std::pair<Int, Int>> H, G;
  bool include_t = true;

  for (const auto& e : sections.front().entries) {
    if (e.key == "kind") {
      std::string v = unquote(e);
      if (v == "module")
        pf.kind = ProblemKind::Module;
      else if (v == "cyclic")
        pf.kind = ProblemKind::Cyclic;
      else if (v == "linear-units")
        pf.kind = ProblemKind::LinearUnits;
      else if (v == "algebraic-unit")
        pf.kind = ProblemKind::AlgebraicUnit;
      else if (v == "witness-check")
        pf.kind = ProblemKind::WitnessCheck;
      else if (v == "simulate")
        pf.kind = ProblemKind::Simulate;
      else
        fail_at(e.line, "unknown kind '" + v + "'");
      kind_seen = true;
    } else if (e.key == "annihilator") {
      pf.annihilators.push_back(ideal_from_strings(as_list(e), e.line));
    } else if (e.key == "variables") {
      for (const auto& name : as_list(e)) pf.declared_vars.insert(parse_var_name(name, e.line));
    } else if (e.key == "H") {
      for (const auto& s : as_list(e)) H.push_back(parse_linear_pair(s, e.line));
    } else if (e.key == "G") {
      for (const auto& s : as_list(e)) G.push_back(parse_linear_pair(s, e.line));
    } else if (e.key == "include_t") {
      include_t = as_bool(e);
    } else if (e.key == "minpoly") {
      LaurentPoly p = parse_polynomial(unquote(e));
      auto vars = p.variables();
      if (vars.size() != 1) fail_at(e.line, "minpoly must use exactly one variable");
      pf.algebraic_unit = AlgebraicUnitSpec{
          MultiPoly::from_laurent(p.nonnegative_shift()).to_unipoly(*vars.begin())};
    } else {
      fail_at(e.line, "unknown key '" + e.key + "' in [problem]");
    }
  }
  if (!kind_seen) throw error("missing 'kind' in [problem]");

  for (size_t si = 1; si < sections.size(); ++si) {
    const Section& sec = sections[si];
    if (sec.name == "annihilator") {
      for (const auto& e : sec.entries) {
        if (e.key == "generators")
          pf.annihilators.push_back(ideal_from_strings(as_list(e), e.line));
        else
          fail_at(e.line, "unknown key '" + e.key + "' in [annihilator]");
      }
    } else if (sec.name == "family") {
      for (const auto& e : sec.entries) {
        if (e.key == "generator") {
          try {
            pf.family = parse_family(unquote(e));
          } catch (const error& ex) {
            fail_at(e.line, ex.what());
          }
        } else if (e.key == "expand") {
          pf.family_expand = static_cast<int>(as_long(e));
          if (pf.family_expand < 1) fail_at(e.line, "expand must be at least 1");
        } else {
          fail_at(e.line, "unknown key '" + e.key + "' in [family]");
        }
      }
      if (pf.family && pf.family_expand == 0) pf.family_expand = 10;
    } else if (sec.name == "witness") {
      pf.witness = TorusWitness{};
      for (const auto& e : sec.entries) {
        try {
          WitnessValue v = parse_witness_value(unquote(e));
          if (e.key == "all") {
            pf.all_ones = true;
            if (!(std::holds_alternative<CycValue>(v) && std::get<CycValue>(v).is_one()))
              fail_at(e.line, "'all' supports only the value 1");
          } else {
            pf.witness->assignments[parse_var_name(e.key, e.line)] = std::move(v);
          }
        } catch (const error& ex) {
          fail_at(e.line, ex.what());
        }
      }
    } else if (sec.name == "simulate") {
      for (const auto& e : sec.entries) {
        if (e.key == "window") {
          pf.window = static_cast<int>(as_long(e));
          if (pf.window < 1) fail_at(e.line, "window must be at least 1");
        } else if (e.key == "delta") {
          try {
            pf.delta = parse_rational(unquote(e));
          } catch (const error& ex) {
            fail_at(e.line, ex.what());
          }
        } else {
          fail_at(e.line, "unknown key '" + e.key + "' in [simulate]");
        }
      }
    } else {
      fail_at(sec.line, "unknown section [" + sec.name + "]");
    }
  }

  switch (pf.kind) {
    case ProblemKind::Cyclic:
      if (pf.annihilators.size() != 1) throw error("cyclic problems need exactly one annihilator");
      break;
    case ProblemKind::Module:
      if (pf.annihilators.empty()) throw error("module problems need at least one annihilator");
      break;
    case ProblemKind::LinearUnits:
      pf.linear_units = LinearUnitsSpec{std::move(H), std::move(G), include_t};
      break;
    case ProblemKind::AlgebraicUnit:
      if (!pf.algebraic_unit) throw error("algebraic-unit problems need 'minpoly'");
      break;
    case ProblemKind::WitnessCheck:
    case ProblemKind::Simulate:
      if (!pf.witness) throw error("a [witness] section is required");
      if (pf.annihilators.empty() && !pf.family)
        throw error("an annihilator or a [family] section is required");
      break;
  }
  if (pf.kind != ProblemKind::LinearUnits && (!H.empty() || !G.empty()))
    throw error("H and G are only valid for kind = linear-units");
  return pf;
}

}  // namespace expansive
