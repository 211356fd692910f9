#include "polaris/formulas.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "polaris/errors.hpp"

namespace polaris {

namespace {

struct Factor {
  Basis basis;
  Partition index;
};

// c * q * w; a missing side means 1.
struct Mono {
  Rational c = 1;
  std::optional<Factor> q;
  std::optional<Factor> w;
};

using Value = std::vector<Mono>;

bool multiplicative(Basis b) {
  return b == Basis::Homogeneous || b == Basis::Elementary || b == Basis::Power;
}

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) text_ += ch;
    }
  }

  Value parse() {
    if (text_.empty()) fail("empty formula");
    Value v = expr();
    if (pos_ != text_.size()) fail("unexpected trailing text");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
  }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool accept(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }

  Value expr() {
    Value out;
    bool negate = accept('-');
    for (;;) {
      Value t = term();
      if (negate) {
        for (auto& m : t) m.c = -m.c;
      }
      out.insert(out.end(), t.begin(), t.end());
      if (accept('+')) {
        negate = false;
      } else if (accept('-')) {
        negate = true;
      } else {
        return out;
      }
    }
  }

  Value term() {
    Value v = factor();
    while (accept('*')) v = multiply(v, factor());
    return v;
  }

  static std::optional<Factor> combine(const std::optional<Factor>& a,
                                       const std::optional<Factor>& b, bool& ok) {
    if (!a) return b;
    if (!b) return a;
    if (a->basis != b->basis || !multiplicative(a->basis)) {
      ok = false;
      return a;
    }
    std::vector<int> parts = a->index.parts();
    parts.insert(parts.end(), b->index.parts().begin(), b->index.parts().end());
    return Factor{a->basis, sorted_partition(parts)};
  }

  Value multiply(const Value& a, const Value& b) const {
    Value out;
    for (const auto& x : a) {
      for (const auto& y : b) {
        bool ok = true;
        Mono m{x.c * y.c, combine(x.q, y.q, ok), std::nullopt};
        if (x.w && y.w) ok = false;
        m.w = x.w ? x.w : y.w;
        if (!ok) fail("unsupported product of two functions on one side");
        out.push_back(std::move(m));
      }
    }
    return out;
  }

  std::vector<int> index() {
    if (!accept('[')) fail("expected '['");
    std::vector<int> parts;
    if (accept(']')) return parts;
    do {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_ || pos_ - start > 4) fail("expected a part");
      parts.push_back(std::stoi(text_.substr(start, pos_ - start)));
    } while (accept(','));
    if (!accept(']')) fail("expected ']'");
    return parts;
  }

  Value factor() {
    if (accept('(')) {
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
      try {
        return {Mono{parse_rational(std::string_view(text_).substr(start, pos_ - start)),
                     std::nullopt, std::nullopt}};
      } catch (const ParseError&) {
        pos_ = start;
        fail("malformed rational");
      }
    }
    static const std::string_view letters = "shepm";
    static const Basis bases[] = {Basis::Schur, Basis::Homogeneous, Basis::Elementary,
                                  Basis::Power, Basis::Monomial};
    auto k = letters.find(peek());
    if (peek() == '\0' || k == std::string_view::npos) fail("expected a factor");
    ++pos_;
    if (accept('w')) {
      if (bases[k] != Basis::Schur && bases[k] != Basis::Homogeneous) {
        fail("w-side factors are sw or hw");
      }
      std::vector<int> tail = index();
      for (int t : tail) {
        if (t < 1) fail("parts must be positive");
      }
      if (bases[k] == Basis::Schur) {
        for (std::size_t i = 1; i < tail.size(); ++i) {
          if (tail[i] > tail[i - 1]) fail("parts must be weakly decreasing");
        }
      }
      return {Mono{1, std::nullopt, Factor{bases[k], sorted_partition(tail)}}};
    }
    std::vector<int> parts = index();
    for (int t : parts) {
      if (t < 1) fail("parts must be positive");
    }
    Partition lambda = sorted_partition(parts);
    if (!multiplicative(bases[k]) && lambda.parts() != parts) fail("parts must be weakly decreasing");
    if (lambda.empty()) return {Mono{1, std::nullopt, std::nullopt}};
    return {Mono{1, Factor{bases[k], lambda}, std::nullopt}};
  }

  std::string text_;
  std::size_t pos_ = 0;
};

SymFunc to_schur(Basis basis, const Partition& lambda) {
  return change_basis(SymFunc::single(basis, lambda), Basis::Schur);
}

// lambda = (n - |tail|, tail) for the w-side.
SymFunc w_to_schur(const Factor& w, int n) {
  const int first = n - w.index.size();
  if (first < 0 || (w.basis == Basis::Schur && first < w.index[0])) {
    throw DomainError(std::string(1, basis_letter(w.basis)) + "w" + to_string(w.index) +
                      " is not defined at n = " + std::to_string(n));
  }
  std::vector<int> parts = w.index.parts();
  parts.insert(parts.begin(), first);
  return to_schur(w.basis, sorted_partition(parts));
}

}  // namespace

BiSymFunc evaluate_formula(std::string_view formula, int n) {
  if (n < 1) throw DomainError("formula evaluation needs n >= 1");
  Value v = FormulaParser(formula).parse();
  BiSymFunc out;
  for (const auto& m : v) {
    if (!m.w) throw ParseError("term without a w-side factor in '" + std::string(formula) + "'");
    SymFunc q = m.q ? to_schur(m.q->basis, m.q->index) : SymFunc::single(Basis::Schur, {});
    SymFunc w = w_to_schur(*m.w, n);
    for (const auto& [mu, a] : q.terms()) {
      for (const auto& [lambda, b] : w.terms()) {
        auto& slot = out.terms[{lambda, mu}];
        slot += m.c * a * b;
      }
    }
  }
  std::erase_if(out.terms, [](const auto& t) { return t.second == 0; });
  return out;
}

BiSymFunc truncate(const BiSymFunc& f, int ell) {
  BiSymFunc out = f;
  std::erase_if(out.terms, [&](const auto& t) { return t.first.second.length() > ell; });
  return out;
}

std::string difference(const FrobeniusSeries& computed, const BiSymFunc& expected) {
  std::map<std::pair<Partition, Partition>, Rational> diff;
  for (const auto& [key, b] : computed.entries) diff[key] += b;
  for (const auto& [key, c] : truncate(expected, computed.ell).terms) diff[key] -= c;
  std::string out;
  for (const auto& [key, c] : diff) {
    if (c == 0) continue;
    if (!out.empty()) out += "; ";
    out += (c > 0 ? "+" : "") + to_string(c) + " s" + to_string(key.second) + "(q) s" +
           to_string(key.first) + "(w)";
  }
  return out;
}

bool matches(const FrobeniusSeries& computed, const BiSymFunc& expected) {
  return difference(computed, expected).empty();
}

std::string to_string(Status s) { return s == Status::Theorem ? "THEOREM" : "CONJECTURE"; }

namespace {

std::string basis_sum(char letter, int from, int to) {
  std::string out;
  for (int j = from; j <= to; ++j) {
    if (!out.empty()) out += "+";
    out += j == 0 ? std::string("1") : std::string(1, letter) + "[" + std::to_string(j) + "]";
  }
  return out.empty() ? "0" : "(" + out + ")";
}

std::string tail(int i) { return i == 0 ? "[]" : "[" + std::to_string(i) + "]"; }

std::string ones(int count) {
  std::string out;
  for (int k = 0; k < count; ++k) out += ",1";
  return out;
}

}  // namespace

std::vector<Fixture> closed_form_fixtures(int max_degree) {
  std::vector<Fixture> out;
  for (int d = 1; d <= max_degree; ++d) {
    const std::string ds = std::to_string(d);
    out.push_back({"closed-forms", "p1^" + ds, "closed form for a power of p_1", Status::Theorem,
                   "p[1]^" + ds, d, 1, 0, basis_sum('s', 0, d) + "*sw[]",
                   basis_sum('h', 0, d) + "*hw[]"});
    // The s-form is printed with an upper limit m; the h-form pins it to d.
    out.push_back({"closed-forms", "p" + ds, "closed form for p_d", Status::Theorem,
                   "p[" + ds + "]", d, 2, 0,
                   basis_sum('s', 0, d) + "*sw[] + " + basis_sum('s', 1, d - 1) + "*sw[1]",
                   "(1+h[" + ds + "])*hw[] + " + basis_sum('h', 1, d - 1) + "*hw[1]"});
    std::string s, h;
    for (int i = 0; i <= d / 2; ++i) {
      s += (i ? " + " : "") + basis_sum('s', i, d - i) + "*sw" + tail(i);
      h += (i ? " + " : "") + std::string("hw") + tail(i) + "*" + basis_sum('h', i, i);
    }
    for (int i = d / 2 + 1; i <= d; ++i) h += " + hw" + tail(d - i) + "*" + basis_sum('h', i, i);
    out.push_back({"closed-forms", "e" + ds, "closed form for e_d", Status::Theorem,
                   "e[" + ds + "]", d, std::max(d, 2), 0, s, h});
  }
  return out;
}

std::vector<Fixture> degree2_fixtures() {
  return {
      {"degree-2", "p1-power", "degree-2 classification, point [1:2]", Status::Theorem, "[1:2]",
       2, 2, 0, "(1+s[1]+s[2])*sw[]", "(1+h[1]+h[2])*hw[]"},
      {"degree-2", "power-sum", "degree-2 classification, every other point", Status::Theorem,
       "[1:0]", 2, 2, 0, "(1+s[1]+s[2])*sw[] + s[1]*sw[1]", "(1+h[2])*hw[] + h[1]*hw[1]"},
  };
}

std::vector<Fixture> degree3_fixtures() {
  return {
      {"degree-3", "p1-power", "degree-3 classification, point [1:3:6]", Status::Theorem,
       "[1:3:6]", 3, 2, 0, "(1+s[1]+s[2]+s[3])*sw[]", "(1+h[1]+h[2]+h[3])*hw[]"},
      {"degree-3", "exception", "degree-3 classification, n-exceptions", Status::Theorem,
       "[1:0:0]", 3, 2, 0, "(1+s[1]+s[2]+s[3])*sw[] + (s[1]+s[2])*sw[1]",
       "(1+h[3])*hw[] + (h[1]+h[2])*hw[1]"},
      {"degree-3", "otherwise", "degree-3 classification, remaining points", Status::Theorem,
       "[1:1:1]", 3, 2, 0, "(1+s[1]+2*s[2]+s[3])*sw[] + (s[1]+s[2])*sw[1]",
       "(1+h[2]+h[3])*hw[] + (h[1]+h[2])*hw[1]"},
  };
}

std::vector<Fixture> monomial3_fixtures() {
  const std::string label = "degree-3 monomial family table";
  auto row = [&](const std::string& id, int lo, int hi, const std::string& s) {
    return Fixture{"monomials-3", id, label, Status::Conjecture, "T:3", 3, lo, hi, s, "", false};
  };
  const std::string base = "(1+s[1]+2*s[2]+3*s[3])*sw[]";
  return {
      row("n1", 1, 1, "(1+s[1]+s[2]+s[3])*sw[]"),
      row("n2", 2, 2, "(1+s[1]+2*s[2]+2*s[3])*sw[] + (s[1]+s[2]+s[1,1]+2*s[3])*sw[1]"),
      row("n3", 3, 3, base + " + (s[1]+2*s[2]+s[1,1]+3*s[3])*sw[1] + (s[1,1]+s[3])*sw[1,1]"),
      row("n4", 4, 4,
          base + " + (s[1]+2*s[2]+s[1,1]+4*s[3])*sw[1] + (s[2]+s[3])*sw[2] + (s[1,1]+s[3])*sw[1,1]"),
      row("n5", 5, 5,
          base + " + (s[1]+2*s[2]+s[1,1]+4*s[3])*sw[1] + (s[2]+2*s[3])*sw[2] + (s[1,1]+s[3])*sw[1,1]"),
      row("n6+", 6, 0,
          base + " + (s[1]+2*s[2]+s[1,1]+4*s[3])*sw[1] + (s[2]+2*s[3])*sw[2] + (s[1,1]+s[3])*sw[1,1]"
                 " + s[3]*sw[3]"),
  };
}

std::vector<Fixture> table_fixtures(int degree) {
  struct Row {
    std::vector<std::string> generators;
    std::string formula;
  };
  std::vector<Row> rows;
  if (degree == 4) {
    const std::string top = "(1+s[1]+s[2]+s[3]+s[4])*sw[]";
    const std::string two = "(1+s[1]+2*s[2]+2*s[3]+s[4])*sw[]";
    const std::string mixed = "(1+s[1]+2*s[2]+2*s[3]+s[2,1]+s[4])*sw[]";
    rows = {
        {{"p[1]^4"}, top},
        {{"p[4]"}, top + " + (s[1]+s[2]+s[3])*sw[1]"},
        {{"e[4]"}, top + " + (s[1]+s[2]+s[3])*sw[1] + s[2]*sw[2]"},
        {{"e[3,1]"}, two + " + (s[1]+2*s[2]+s[3])*sw[1]"},
        {{"s[2,1,1]", "h[2,2]", "m[2,1,1]"}, two + " + (s[1]+2*s[2]+s[3])*sw[1] + s[2]*sw[2]"},
        {{"p[2,1,1]", "e[2,1,1]", "h[2,1,1]"}, mixed + " + (s[1]+s[2]+s[1,1]+s[3])*sw[1]"},
        {{"h[3,1]", "m[3,1]", "p[3,1]"}, mixed + " + (s[1]+2*s[2]+s[1,1]+s[3])*sw[1]"},
        {{"m[2,2]"},
         "(1+s[1]+2*s[2]+s[3]+s[2,1]+s[4])*sw[] + (s[1]+2*s[2]+s[1,1]+s[3])*sw[1] + s[2]*sw[2]"},
        {{"s[4]", "s[3,1]", "s[2,2]", "e[2,2]", "p[2,2]"},
         mixed + " + (s[1]+2*s[2]+s[1,1]+s[3])*sw[1] + s[2]*sw[2]"},
    };
  } else if (degree == 5) {
    const std::string top = "(1+s[1]+s[2]+s[3]+s[4]+s[5])*sw[]";
    const std::string two = "(1+s[1]+2*s[2]+2*s[3]+s[2,1]+2*s[4]+s[3,1]+s[5])*sw[]";
    const std::string three = "(1+s[1]+2*s[2]+3*s[3]+s[2,1]+2*s[4]+s[3,1]+s[5])*sw[]";
    rows = {
        {{"p[1]^5"}, top},
        {{"p[5]"}, top + " + (s[1]+s[2]+s[3]+s[4])*sw[1]"},
        {{"e[5]"}, top + " + (s[1]+s[2]+s[3]+s[4])*sw[1] + (s[2]+s[3])*sw[2]"},
        {{"m[2,1,1,1]", "s[2,1,1,1]", "e[4,1]"},
         "(1+s[1]+2*s[2]+2*s[3]+2*s[4]+s[5])*sw[] + (s[1]+2*s[2]+2*s[3]+s[4])*sw[1]"
         " + (s[2]+s[3])*sw[2]"},
        {{"s[2,2,1]"}, two + " + (s[1]+2*s[2]+s[1,1]+2*s[3]+s[2,1]+s[4])*sw[1] + (s[2]+s[3])*sw[2]"},
        {{"m[4,1]", "p[4,1]"}, two + " + (s[1]+2*s[2]+s[1,1]+2*s[3]+s[2,1]+s[4])*sw[1]"},
        {{"h[5]", "h[4,1]", "h[3,2]", "h[2,2,1]", "p[2,2,1]", "s[4,1]", "s[3,2]", "s[3,1,1]",
          "e[2,2,1]", "m[3,1,1]"},
         three + " + (s[1]+2*s[2]+s[1,1]+3*s[3]+s[2,1]+s[4])*sw[1] + (s[2]+s[3])*sw[2]"},
        {{"p[3,2]", "e[3,2]", "m[3,2]", "m[2,2,1]"},
         two + " + (s[1]+2*s[2]+s[1,1]+3*s[3]+s[2,1]+s[4])*sw[1] + (s[2]+s[3])*sw[2]"},
        {{"p[2,1,1,1]", "h[2,1,1,1]", "e[2,1,1,1]"},
         two + " + (s[1]+s[2]+s[1,1]+s[3]+s[2,1]+s[4])*sw[1]"},
        {{"e[3,1,1]", "h[3,1,1]", "p[3,1,1]"},
         three + " + (s[1]+2*s[2]+s[1,1]+2*s[3]+s[2,1]+s[4])*sw[1]"},
    };
  } else {
    throw DomainError("tables exist for degrees 4 and 5");
  }
  const std::string suite = "degree-" + std::to_string(degree);
  const std::string proved[] = {"p[1]^" + std::to_string(degree), "p[" + std::to_string(degree) + "]",
                                "e[" + std::to_string(degree) + "]"};
  std::vector<Fixture> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& g : rows[r].generators) {
      bool gating = std::find(std::begin(proved), std::end(proved), g) != std::end(proved);
      out.push_back({suite, g, "degree-" + std::to_string(degree) + " table, row " + std::to_string(r + 1),
                     Status::Conjecture, g, degree, degree, 0, rows[r].formula, "", gating});
    }
  }
  return out;
}

std::vector<Fixture> conjecture_fixtures(int max_degree) {
  std::vector<Fixture> out;
  for (int d = 1; d <= max_degree; ++d) {
    const std::string ds = std::to_string(d);
    out.push_back({"families", "A:" + ds, "family A formula", Status::Conjecture, "A:" + ds, d, 2, 0,
                   basis_sum('s', 0, d) + "*sw[] + " + basis_sum('s', 1, d) + "*sw[1]", "", false});
    out.push_back({"families", "B:" + ds, "family B formula", Status::Conjecture, "B:" + ds, d, 2, 0,
                   basis_sum('s', 0, d - 1) + "*sw[] + " + basis_sum('s', 1, d) + "*sw[1]", "", false});
    std::string c = basis_sum('s', 0, d) + "*sw[]";
    for (int i = 1; i <= d / 2; ++i) c += " + " + basis_sum('s', i, d - i + 1) + "*sw" + tail(i);
    out.push_back({"families", "C:" + ds, "family C formula", Status::Conjecture, "C:" + ds, d,
                   std::max(d, 2), 0, c, "", false});
  }
  const std::string t2 = "degree-2 monomial family formula";
  out.push_back({"families", "T:2/n1", t2, Status::Conjecture, "T:2", 2, 1, 1, "(1+s[1]+s[2])*sw[]", "", false});
  out.push_back({"families", "T:2/n2", t2, Status::Conjecture, "T:2", 2, 2, 2,
                 "(1+s[1]+2*s[2])*sw[] + (s[1]+s[2])*sw[1]", "", false});
  out.push_back({"families", "T:2/n3", t2, Status::Conjecture, "T:2", 2, 3, 3,
                 "(1+s[1]+2*s[2])*sw[] + (s[1]+2*s[2])*sw[1]", "", false});
  out.push_back({"families", "T:2/n4+", t2, Status::Conjecture, "T:2", 2, 4, 0,
                 "(1+s[1]+2*s[2])*sw[] + (s[1]+2*s[2])*sw[1] + s[2]*sw[2]", "", false});
  for (int d = 3; d <= max_degree; ++d) {
    const int half = d / 2;
    std::string f = "(1+s[1]";
    if (d > 2) f += "+2*" + basis_sum('s', 2, d - 1);
    f += "+s[" + std::to_string(d) + "])*sw[]";
    for (int i = 1; i <= half - 1; ++i) {
      f += " + (s[" + std::to_string(i) + "]";
      if (i + 1 <= d - i - 1) f += "+2*" + basis_sum('s', i + 1, d - i - 1);
      f += "+s[" + std::to_string(d - i) + "])*sw" + tail(i);
    }
    f += " + " + basis_sum('s', half, d - half) + "*sw" + tail(half);
    const std::string g = "m[2" + ones(d - 2) + "]";
    out.push_back({"conjectures", g, "formula for m_{2,1^{d-2}}", Status::Conjecture, g, d, d, 0, f, "", false});
  }
  return out;
}

std::vector<Fixture> all_fixtures() {
  std::vector<Fixture> out = closed_form_fixtures(5);
  for (auto part : {degree2_fixtures(), degree3_fixtures(), monomial3_fixtures(), table_fixtures(4),
                    table_fixtures(5), conjecture_fixtures(5)}) {
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace polaris
