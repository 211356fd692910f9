#include "polaris/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "polaris/errors.hpp"

namespace polaris {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty()) throw ParseError("empty rational");
  auto slash = s.find('/');
  auto valid_int = [](std::string_view part) {
    if (part.empty()) return false;
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) return false;
    return std::all_of(part.begin() + start, part.end(), ::isdigit);
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Shape::Shape(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) {
    throw ShapeError("shape must have rows >= 1 and cols >= 1");
  }
}

MultiDegree::MultiDegree(std::vector<int> degrees)
    : degrees_(std::move(degrees)) {
  for (int d : degrees_) {
    if (d < 0) throw DomainError("negative degree in MultiDegree");
  }
}

int MultiDegree::total() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), 0);
}

std::string to_string(const MultiDegree& degree) {
  std::string out = "(";
  for (int i = 0; i < degree.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(degree[i]);
  }
  return out + ")";
}

ExponentMatrix::ExponentMatrix(Shape shape)
    : shape_(shape), data_(static_cast<std::size_t>(shape.size()), 0) {}

ExponentMatrix::ExponentMatrix(Shape shape, const std::vector<int>& row_major)
    : ExponentMatrix(shape) {
  if (static_cast<int>(row_major.size()) != shape.size()) {
    throw ShapeError("exponent count does not match shape");
  }
  for (int i = 0; i < shape.rows(); ++i) {
    for (int j = 0; j < shape.cols(); ++j) set(i, j, row_major[index(i, j)]);
  }
}

ExponentMatrix ExponentMatrix::from_rows(
    const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) throw ShapeError("exponent matrix needs at least one row");
  Shape shape(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  std::vector<int> flat;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != shape.cols()) {
      throw ShapeError("ragged exponent matrix");
    }
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return ExponentMatrix(shape, flat);
}

void ExponentMatrix::set(int row, int col, int value) {
  if (row < 0 || row >= shape_.rows() || col < 0 || col >= shape_.cols()) {
    throw ShapeError("exponent index out of range");
  }
  if (value < 0 || value > kMaxExponent) {
    throw DomainError("exponent out of range [0, 255]");
  }
  auto& slot = data_[index(row, col)];
  total_ += value - slot;
  slot = static_cast<std::uint8_t>(value);
}

int ExponentMatrix::row_degree(int row) const {
  int sum = 0;
  for (int j = 0; j < shape_.cols(); ++j) sum += (*this)(row, j);
  return sum;
}

MultiDegree monomial_degree(const ExponentMatrix& m) {
  std::vector<int> degrees(m.shape().rows());
  for (int i = 0; i < m.shape().rows(); ++i) degrees[i] = m.row_degree(i);
  return MultiDegree(std::move(degrees));
}

namespace {

void require_same_shape(const MatrixPolynomial& f, const MatrixPolynomial& g) {
  if (!(f.shape() == g.shape())) {
    throw ShapeError("polynomial shapes differ");
  }
}

bool descending(const Term& a, const Term& b) {
  return a.exponent > b.exponent;
}

}  // namespace

MatrixPolynomial::MatrixPolynomial(Shape shape) : shape_(shape) {}

MatrixPolynomial::MatrixPolynomial(Shape shape, std::vector<Term> terms)
    : shape_(shape) {
  for (const auto& t : terms) {
    if (!(t.exponent.shape() == shape)) {
      throw ShapeError("term shape does not match polynomial shape");
    }
  }
  std::sort(terms.begin(), terms.end(), descending);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exponent == t.exponent) {
      terms_.back().coef += t.coef;
    } else {
      if (!terms_.empty() && terms_.back().coef == 0) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && terms_.back().coef == 0) terms_.pop_back();
}

MatrixPolynomial MatrixPolynomial::from_canonical(Shape shape,
                                                  std::vector<Term> terms) {
  MatrixPolynomial p(shape);
  p.terms_ = std::move(terms);
  return p;
}

MatrixPolynomial MatrixPolynomial::constant(Shape shape, const Rational& value) {
  if (value == 0) return MatrixPolynomial(shape);
  std::vector<Term> terms;
  terms.push_back({ExponentMatrix(shape), value});
  return from_canonical(shape, std::move(terms));
}

MatrixPolynomial MatrixPolynomial::variable(Shape shape, int row, int col) {
  ExponentMatrix e(shape);
  e.set(row, col, 1);
  return monomial(std::move(e));
}

MatrixPolynomial MatrixPolynomial::monomial(ExponentMatrix exponent,
                                            const Rational& coef) {
  Shape shape = exponent.shape();
  if (coef == 0) return MatrixPolynomial(shape);
  std::vector<Term> terms;
  terms.push_back({std::move(exponent), coef});
  return from_canonical(shape, std::move(terms));
}

Rational MatrixPolynomial::coefficient(const ExponentMatrix& exponent) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exponent,
      [](const Term& t, const ExponentMatrix& e) { return t.exponent > e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coef;
  return 0;
}

int MatrixPolynomial::total_degree() const {
  return terms_.empty() ? -1 : terms_.front().exponent.total_degree();
}

bool MatrixPolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  MultiDegree d = monomial_degree(terms_.front().exponent);
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return monomial_degree(t.exponent) == d;
  });
}

MultiDegree MatrixPolynomial::multidegree() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no multidegree");
  if (!is_homogeneous()) throw DomainError("polynomial is not homogeneous");
  return monomial_degree(terms_.front().exponent);
}

bool operator==(const MatrixPolynomial& a, const MatrixPolynomial& b) {
  if (!(a.shape_ == b.shape_) || a.terms_.size() != b.terms_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].exponent == b.terms_[i].exponent) ||
        a.terms_[i].coef != b.terms_[i].coef) {
      return false;
    }
  }
  return true;
}

bool operator<(const MatrixPolynomial& a, const MatrixPolynomial& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (auto c = x.exponent <=> y.exponent; c != 0) return c < 0;
    if (x.coef != y.coef) return x.coef < y.coef;
  }
  return a.terms_.size() < b.terms_.size();
}

MatrixPolynomial subtract_scaled(const MatrixPolynomial& f, const Rational& c,
                                 const MatrixPolynomial& g) {
  require_same_shape(f, g);
  if (c == 0 || g.is_zero()) return f;
  auto ft = f.terms();
  auto gt = g.terms();
  std::vector<Term> out;
  out.reserve(ft.size() + gt.size());
  std::size_t i = 0, j = 0;
  while (i < ft.size() || j < gt.size()) {
    if (j == gt.size() ||
        (i < ft.size() && ft[i].exponent > gt[j].exponent)) {
      out.push_back(ft[i++]);
    } else if (i == ft.size() || gt[j].exponent > ft[i].exponent) {
      out.push_back({gt[j].exponent, -c * gt[j].coef});
      ++j;
    } else {
      Rational v = ft[i].coef - c * gt[j].coef;
      if (v != 0) out.push_back({ft[i].exponent, std::move(v)});
      ++i;
      ++j;
    }
  }
  return MatrixPolynomial::from_canonical(f.shape(), std::move(out));
}

MatrixPolynomial add(const MatrixPolynomial& f, const MatrixPolynomial& g) {
  return subtract_scaled(f, -1, g);
}

MatrixPolynomial scale(const MatrixPolynomial& f, const Rational& c) {
  if (c == 0) return MatrixPolynomial(f.shape());
  std::vector<Term> out(f.terms().begin(), f.terms().end());
  for (auto& t : out) t.coef *= c;
  return MatrixPolynomial::from_canonical(f.shape(), std::move(out));
}

MatrixPolynomial multiply(const MatrixPolynomial& f, const MatrixPolynomial& g) {
  require_same_shape(f, g);
  std::vector<Term> out;
  out.reserve(f.size() * g.size());
  const Shape& shape = f.shape();
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      ExponentMatrix e = a.exponent;
      for (int i = 0; i < shape.rows(); ++i) {
        for (int j = 0; j < shape.cols(); ++j) {
          if (int x = b.exponent(i, j)) e.set(i, j, e(i, j) + x);
        }
      }
      out.push_back({std::move(e), a.coef * b.coef});
    }
  }
  return MatrixPolynomial(shape, std::move(out));
}

MatrixPolynomial power(const MatrixPolynomial& f, int exponent) {
  if (exponent < 0) throw DomainError("negative polynomial power");
  MatrixPolynomial result = MatrixPolynomial::constant(f.shape(), 1);
  MatrixPolynomial base = f;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

std::map<MultiDegree, MatrixPolynomial> homogeneous_components(
    const MatrixPolynomial& f) {
  std::map<MultiDegree, std::vector<Term>> buckets;
  for (const auto& t : f.terms()) {
    buckets[monomial_degree(t.exponent)].push_back(t);
  }
  std::map<MultiDegree, MatrixPolynomial> out;
  for (auto& [d, terms] : buckets) {
    // Sub-sequences of a sorted list stay sorted.
    out.emplace(d, MatrixPolynomial::from_canonical(f.shape(), std::move(terms)));
  }
  return out;
}

MatrixPolynomial embed(const MatrixPolynomial& f, Shape new_shape) {
  const Shape& old = f.shape();
  if (new_shape.rows() < old.rows() || new_shape.cols() != old.cols()) {
    throw ShapeError("embed may only add rows");
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    ExponentMatrix e(new_shape);
    for (int i = 0; i < old.rows(); ++i) {
      for (int j = 0; j < old.cols(); ++j) e.set(i, j, t.exponent(i, j));
    }
    out.push_back({std::move(e), t.coef});
  }
  // Row-major flattening with trailing zero rows preserves the order.
  return MatrixPolynomial::from_canonical(new_shape, std::move(out));
}

namespace {

std::string monomial_text(const ExponentMatrix& e) {
  std::string out;
  for (int i = 0; i < e.shape().rows(); ++i) {
    for (int j = 0; j < e.shape().cols(); ++j) {
      int a = e(i, j);
      if (!a) continue;
      if (!out.empty()) out += "*";
      out += "x[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
      if (a > 1) out += "^" + std::to_string(a);
    }
  }
  return out;
}

}  // namespace

std::string to_string(const MatrixPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational mag = abs(t.coef);
    std::string mono = monomial_text(t.exponent);
    if (first) {
      if (t.coef < 0) out += "-";
    } else {
      out += t.coef < 0 ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

std::string to_q_string(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<const Term*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    return a->exponent.total_degree() < b->exponent.total_degree();
  });
  const int vars = p.shape().size();
  std::string out;
  bool first = true;
  for (const Term* t : order) {
    std::string mono;
    for (int j = 0; j < vars; ++j) {
      int a = t->exponent.data()[j];
      if (!a) continue;
      mono += vars == 1 ? "q" : "q" + std::to_string(j + 1);
      if (a > 1) mono += "^" + std::to_string(a);
    }
    Rational mag = abs(t->coef);
    if (first) {
      if (t->coef < 0) out += "-";
    } else {
      out += t->coef < 0 ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + mono;
    }
  }
  return out;
}

}  // namespace polaris
