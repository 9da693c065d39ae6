#pragma once

// Exact integers, reduced rationals and rational linear algebra.
//
// BigInt and Rational are GMP's C++ classes. mpq_class keeps every value in
// canonical form (gcd(num, den) = 1, den > 0) after each arithmetic operation,
// so equality is structural.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symrees {

using BigInt = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

inline Rational make_rational(const BigInt &num, const BigInt &den) {
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(BigInt(static_cast<long>(num)),
                       BigInt(static_cast<long>(den)));
}

inline BigInt to_big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

inline BigInt floor_of(const Rational &q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline BigInt ceil_of(const Rational &q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline bool is_integer(const Rational &q) { return q.get_den() == 1; }

/// n (n-1) ... (n-k+1); the empty product for k = 0.
inline BigInt falling_factorial(const BigInt &n, unsigned k) {
  BigInt r = 1;
  BigInt f = n;
  for (unsigned i = 0; i < k; ++i) {
    r *= f;
    if (r == 0)
      break;
    --f;
  }
  return r;
}

inline BigInt falling_factorial(std::int64_t n, unsigned k) {
  return falling_factorial(to_big(n), k);
}

/// Polynomial binomial coefficient n(n-1)...(n-k+1)/k!, valid for negative n.
inline BigInt binomial(const BigInt &n, unsigned k) {
  BigInt num = falling_factorial(n, k);
  BigInt fact;
  mpz_fac_ui(fact.get_mpz_t(), k);
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), fact.get_mpz_t());
  return q;
}

inline std::string to_string(const BigInt &v) { return v.get_str(); }

inline std::string to_string(const Rational &q) {
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "p", "-p" or "p/q" with decimal integers.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty())
      throw std::invalid_argument("malformed rational: '" + std::string(text) +
                                  "'");
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size() ||
        !std::all_of(s.begin() + start, s.end(),
                     [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw std::invalid_argument("malformed rational: '" + std::string(text) +
                                  "'");
    std::string digits(s.front() == '+' ? s.substr(1) : s);
    return BigInt(digits, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  return make_rational(parse_int(text.substr(0, slash)), den);
}

inline BigInt lcm_of_denominators(const RationalVector &v) {
  BigInt l = 1;
  for (const auto &q : v)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

/// Dense rational matrix, row-major, with one opaque label per column.
template <typename Label = std::size_t> class QMatrix {
public:
  QMatrix() = default;

  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {
    labels_.reserve(cols);
    if constexpr (std::is_integral_v<Label>)
      for (std::size_t j = 0; j < cols; ++j)
        labels_.push_back(static_cast<Label>(j));
    else
      labels_.resize(cols);
  }

  QMatrix(std::size_t rows, std::vector<Label> labels)
      : rows_(rows), cols_(labels.size()), entries_(rows * labels.size()),
        labels_(std::move(labels)) {
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("QMatrix column labels must be distinct");
  }

  static QMatrix from_rows(const std::vector<RationalVector> &rows,
                           std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Label> &labels() const { return labels_; }

  Rational &operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Rational &operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  RationalVector row(std::size_t i) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  RationalVector apply(const RationalVector &x) const {
    if (x.size() != cols_)
      throw std::invalid_argument("dimension mismatch in matrix-vector product");
    RationalVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn((*this)(i, j)) != 0)
          y[i] += (*this)(i, j) * x[j];
    return y;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
  std::vector<Label> labels_;
};

/// Row echelon form kept over the integers.
///
/// Each inserted rational row is scaled to a primitive integer row, reduced
/// against the stored pivots, and stored again as a primitive row if it is
/// independent. Pivot columns are distinct, and every stored row is zero in
/// the pivot columns of the rows stored before it.
class IntegerEchelon {
public:
  explicit IntegerEchelon(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true if the row increased the rank.
  bool insert(const RationalVector &row) {
    auto r = reduce(to_integer_row(row));
    auto lead = leading_column(r);
    if (!lead)
      return false;
    make_primitive(r);
    rows_.push_back(std::move(r));
    pivots_.push_back(*lead);
    return true;
  }

  /// True iff v is a rational combination of the inserted rows.
  bool contains(const RationalVector &v) const {
    return !leading_column(reduce(to_integer_row(v)));
  }

  /// Reduced row echelon form over the rationals: pivot entries are 1 and
  /// every pivot column is zero outside its row. Rows are sorted by pivot.
  std::pair<std::vector<RationalVector>, std::vector<std::size_t>>
  reduced() const {
    auto rows = rows_;
    for (std::size_t j = rows.size(); j-- > 0;) {
      const std::size_t pc = pivots_[j];
      for (std::size_t i = 0; i < j; ++i) {
        if (rows[i][pc] == 0)
          continue;
        eliminate(rows[i], rows[j], pc);
      }
    }
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return pivots_[x] < pivots_[y];
    });
    std::vector<RationalVector> out;
    std::vector<std::size_t> piv;
    for (auto i : order) {
      const BigInt &p = rows[i][pivots_[i]];
      RationalVector q(cols_);
      for (std::size_t c = 0; c < cols_; ++c)
        if (rows[i][c] != 0)
          q[c] = make_rational(rows[i][c], p);
      out.push_back(std::move(q));
      piv.push_back(pivots_[i]);
    }
    return {std::move(out), std::move(piv)};
  }

private:
  using IntRow = std::vector<BigInt>;

  IntRow to_integer_row(const RationalVector &v) const {
    if (v.size() != cols_)
      throw std::invalid_argument("row length does not match column count");
    BigInt l = lcm_of_denominators(v);
    IntRow r(cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn(v[c]) == 0)
        continue;
      BigInt t = l / v[c].get_den();
      r[c] = v[c].get_num() * t;
    }
    return r;
  }

  static std::optional<std::size_t> leading_column(const IntRow &r) {
    for (std::size_t c = 0; c < r.size(); ++c)
      if (r[c] != 0)
        return c;
    return std::nullopt;
  }

  static void make_primitive(IntRow &r) {
    BigInt g = 0;
    for (const auto &x : r) {
      if (x != 0)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1)
        return;
    }
    if (g > 1)
      for (auto &x : r)
        if (x != 0)
          mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }

  // target <- target * (p / g) - source * (target[pc] / g), g = gcd.
  static void eliminate(IntRow &target, const IntRow &source, std::size_t pc) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), target[pc].get_mpz_t(), source[pc].get_mpz_t());
    BigInt ms = source[pc] / g;
    BigInt mt = target[pc] / g;
    for (std::size_t c = 0; c < target.size(); ++c) {
      if (source[c] == 0) {
        if (target[c] != 0)
          target[c] *= ms;
        continue;
      }
      target[c] *= ms;
      target[c] -= mt * source[c];
    }
    make_primitive(target);
  }

  IntRow reduce(IntRow r) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (r[pivots_[k]] == 0)
        continue;
      eliminate(r, rows_[k], pivots_[k]);
    }
    return r;
  }

  std::size_t cols_;
  std::vector<IntRow> rows_;
  std::vector<std::size_t> pivots_;
};

template <typename Label>
IntegerEchelon echelon_of(const QMatrix<Label> &m) {
  IntegerEchelon e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    e.insert(m.row(i));
  return e;
}

template <typename Label> std::size_t rank(const QMatrix<Label> &m) {
  return echelon_of(m).rank();
}

/// Basis of {x : M x = 0}. One vector per non-pivot column f, with x_f = 1
/// and zeros at the other non-pivot columns.
inline std::vector<RationalVector> null_space_of(const IntegerEchelon &e) {
  auto [rref, pivots] = e.reduced();
  std::vector<bool> is_pivot(e.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < e.cols(); ++f) {
    if (is_pivot[f])
      continue;
    RationalVector x(e.cols());
    x[f] = 1;
    for (std::size_t i = 0; i < rref.size(); ++i)
      x[pivots[i]] = -rref[i][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

template <typename Label>
std::vector<RationalVector> null_space(const QMatrix<Label> &m) {
  return null_space_of(echelon_of(m));
}

template <typename Label>
bool row_space_contains(const QMatrix<Label> &m, const RationalVector &v) {
  if (v.size() != m.cols())
    throw std::invalid_argument("vector length does not match column count");
  return echelon_of(m).contains(v);
}

inline RationalVector unit_vector(std::size_t size, std::size_t index) {
  RationalVector v(size);
  v.at(index) = 1;
  return v;
}

} // namespace symrees
