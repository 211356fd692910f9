#include "polaris/families.hpp"

#include <cctype>
#include <functional>
#include <set>

#include "polaris/errors.hpp"
#include "polaris/operators.hpp"
#include "polaris/subspace.hpp"

namespace polaris {

MatrixPolynomial sym_poly(Basis basis, const Partition& lambda, int n) {
  if (n < 1) throw DomainError("sym_poly: n must be positive");
  const bool needs_length = basis == Basis::Monomial || basis == Basis::Schur;
  if (needs_length && lambda.length() > n) {
    throw DomainError(std::string(1, basis_letter(basis)) + to_string(lambda) +
                      " vanishes in " + std::to_string(n) + " variables");
  }
  if (basis == Basis::Elementary && lambda[0] > n) {
    throw DomainError("e" + to_string(lambda) + " vanishes in " + std::to_string(n) +
                      " variables");
  }
  return basis_polynomial(basis, lambda, n);
}

MatrixPolynomial vandermonde(int n) {
  if (n < 1) throw DomainError("vandermonde: n must be positive");
  Shape s(1, n);
  MatrixPolynomial v = MatrixPolynomial::constant(s, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      v = v * (MatrixPolynomial::variable(s, 0, i) - MatrixPolynomial::variable(s, 0, j));
    }
  }
  return v;
}

std::vector<MatrixPolynomial> family(FamilyKind kind, int d, int n) {
  if (d < 1) throw DomainError("family degree must be positive");
  if (n < 1) throw DomainError("family: n must be positive");
  Shape s(1, n);
  auto x = [&](int j) { return MatrixPolynomial::variable(s, 0, j); };
  std::vector<MatrixPolynomial> out;
  switch (kind) {
    case FamilyKind::A:
      for (int j = 0; j < n; ++j) out.push_back(power(x(j), d));
      break;
    case FamilyKind::B:
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) out.push_back(power(x(i), d) - power(x(j), d));
      }
      break;
    case FamilyKind::C: {
      if (d > n) throw DomainError("family C needs d <= n");
      std::vector<int> chosen;
      std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(chosen.size()) == d) {
          MatrixPolynomial m = MatrixPolynomial::constant(s, 1);
          for (int j : chosen) m = m * x(j);
          out.push_back(m);
          return;
        }
        for (int j = next; j < n; ++j) {
          chosen.push_back(j);
          rec(j + 1);
          chosen.pop_back();
        }
      };
      rec(0);
      break;
    }
    case FamilyKind::T: {
      std::set<MatrixPolynomial> all;
      for (const auto& lambda : partitions_of(d)) {
        if (lambda.length() > n) continue;
        std::vector<int> e = lambda.parts();
        e.resize(n, 0);
        auto monomial = MatrixPolynomial::monomial(ExponentMatrix(s, e), 1);
        for (auto& m : orbit(monomial)) all.insert(std::move(m));
      }
      out.assign(all.begin(), all.end());
      break;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : n_(n) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) text_ += ch;
    }
  }

  Generator parse() {
    if (text_.empty()) fail("empty generator");
    Generator g;
    g.text = text_;
    if (text_.size() >= 2 && text_[1] == ':' && std::string_view("ABCT").find(text_[0]) != std::string_view::npos) {
      pos_ = 2;
      int d = integer();
      expect_end();
      static const FamilyKind kinds[] = {FamilyKind::A, FamilyKind::B, FamilyKind::C, FamilyKind::T};
      g.members = family(kinds[std::string_view("ABCT").find(text_[0])], d, n_);
      g.degree = d;
      return g;
    }
    MatrixPolynomial f = text_[0] == '[' ? point() : sum();
    expect_end();
    if (f.is_zero()) throw DomainError("generator '" + text_ + "' is zero in " + std::to_string(n_) + " variables");
    if (!f.is_homogeneous()) throw DomainError("generator '" + text_ + "' is not homogeneous");
    g.degree = f.total_degree();
    g.members = orbit(f);
    g.symmetric = g.members.size() == 1;
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool accept(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }
  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }
  void expect_end() const {
    if (!at_end()) fail("unexpected trailing text");
  }

  int integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoi(text_.substr(start, pos_ - start));
  }

  Rational rational() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
    try {
      return parse_rational(std::string_view(text_).substr(start, pos_ - start));
    } catch (const ParseError&) {
      pos_ = start;
      fail("malformed rational");
    }
  }

  MatrixPolynomial point() {
    expect('[');
    std::vector<Rational> coords{rational()};
    while (accept(':')) coords.push_back(rational());
    expect(']');
    int d = 1;
    while (static_cast<int>(partitions_of(d).size()) < static_cast<int>(coords.size())) ++d;
    const auto parts = partitions_of(d);
    if (parts.size() != coords.size()) fail("coordinate count is not a partition number");
    MatrixPolynomial f(Shape(1, n_));
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (coords[k] != 0 && parts[k].length() <= n_) {
        f = f + scale(basis_polynomial(Basis::Monomial, parts[k], n_), coords[k]);
      }
    }
    return f;
  }

  MatrixPolynomial sum() {
    MatrixPolynomial f(Shape(1, n_));
    bool negate = accept('-');
    f = f + (negate ? -term() : term());
    while (!at_end()) {
      if (accept('+')) {
        f = f + term();
      } else if (accept('-')) {
        f = f - term();
      } else {
        fail("expected '+' or '-'");
      }
    }
    return f;
  }

  MatrixPolynomial term() {
    Rational coef = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = rational();
      accept('*');
    }
    MatrixPolynomial a = atom();
    if (accept('^')) a = power(a, integer());
    return scale(a, coef);
  }

  MatrixPolynomial atom() {
    if (text_.compare(pos_, 3, "vdm") == 0) {
      pos_ += 3;
      return vandermonde(n_);
    }
    const char letter = peek();
    static const std::string_view letters = "mehps";
    static const Basis bases[] = {Basis::Monomial, Basis::Elementary, Basis::Homogeneous,
                                  Basis::Power, Basis::Schur};
    auto k = letters.find(letter);
    if (letter == '\0' || k == std::string_view::npos) fail("expected a basis element or 'vdm'");
    ++pos_;
    expect('[');
    std::vector<int> parts{integer()};
    while (accept(',')) parts.push_back(integer());
    expect(']');
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 1) fail("partition parts must be positive");
    }
    // e[3,1] and h[2,2] name products, so any order is accepted; m and s
    // need a genuine partition.
    Partition lambda = sorted_partition(parts);
    if ((bases[k] == Basis::Monomial || bases[k] == Basis::Schur) && lambda.parts() != parts) {
      fail("parts must be weakly decreasing");
    }
    return sym_poly(bases[k], lambda, n_);
  }

  std::string text_;
  std::size_t pos_ = 0;
  int n_;
};

}  // namespace

Generator parse_generator(std::string_view text, int n) {
  if (n < 1) throw DomainError("n must be positive");
  return Parser(text, n).parse();
}

}  // namespace polaris
