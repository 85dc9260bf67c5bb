#pragma once

// The monoid Hom(C*, C*) of smooth endomorphisms  g -> |g|^(re + i*im) (g/|g|)^w,
// pairings between characters and one-parameter subgroups, and monomial maps
// built entrywise from such exponents.

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "toricfan/exact.hpp"

namespace toricfan {

using Complex = std::complex<double>;

struct EndoParam {
  Rational re;
  Rational im;
  Integer w;

  /// g -> g, i.e. (1, 0, 1).
  static EndoParam identity();
  /// g -> 1, i.e. (0, 0, 0).
  static EndoParam zero();

  friend bool operator==(const EndoParam& a, const EndoParam& b) {
    return a.re == b.re && a.im == b.im && a.w == b.w;
  }
};

/// Pointwise product of the two endomorphisms (exponents add componentwise).
EndoParam operator+(const EndoParam& a, const EndoParam& b);

/// im == 0, re integral and re == w (mod 2).
bool is_nice(const EndoParam& p);

/// |z|^re * exp(i*im*ln|z|) * (z/|z|)^w in double precision. Throws ZeroInput for z == 0.
Complex eval_endo(const EndoParam& p, Complex z);

/// Exponent of  z -> eval(outer, eval(inner, z)).
EndoParam compose(const EndoParam& outer, const EndoParam& inner);

/// Row data (x + i*y, u) of a character (C*)^n -> C*.
struct Character {
  RatVector x;
  RatVector y;
  IntVector u;

  friend bool operator==(const Character&, const Character&) = default;
};

/// Column data (b + i*c, v) of a one-parameter subgroup C* -> (C*)^n.
struct Cocharacter {
  RatVector b;
  RatVector c;
  IntVector v;

  friend bool operator==(const Cocharacter&, const Cocharacter&) = default;
};

/// Exponent of the composite C* -> (C*)^n -> C*: (<x,b>, <y,b> + <u,c>, <u,v>).
EndoParam pair(const Character& alpha, const Cocharacter& beta);

/// z -> z^p conj(z)^q.
struct LaurentExponent {
  Integer p;
  Integer q;

  friend bool operator==(const LaurentExponent& a, const LaurentExponent& b) {
    return a.p == b.p && a.q == b.q;
  }
};

/// Throws NotNice naming the offending component.
LaurentExponent to_laurent(const EndoParam& p);
EndoParam from_laurent(const LaurentExponent& e);

/// Map (C*)^cols -> (C*)^rows whose output r is  prod_c eval(entry(r, c), z_c).
/// Row and column labels are ray indices (0-based); they only matter for
/// composition and rendering.
class MonomialMatrix {
 public:
  MonomialMatrix() = default;
  MonomialMatrix(std::vector<int> row_labels, std::vector<int> col_labels);

  static MonomialMatrix identity(const std::vector<int>& labels);

  const std::vector<int>& row_labels() const noexcept { return rows_; }
  const std::vector<int>& col_labels() const noexcept { return cols_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_.size(); }

  EndoParam& at(std::size_t r, std::size_t c) { return entries_[r * cols_.size() + c]; }
  const EndoParam& at(std::size_t r, std::size_t c) const { return entries_[r * cols_.size() + c]; }

  bool all_nice() const;

  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

 private:
  std::vector<int> rows_;
  std::vector<int> cols_;
  std::vector<EndoParam> entries_;
};

/// Throws ZeroInput naming the first zero coordinate, DimensionMismatch on length.
std::vector<Complex> matrix_eval(const MonomialMatrix& m, std::span<const Complex> point);

/// outer after inner; inner's row labels must equal outer's column labels.
MonomialMatrix matrix_compose(const MonomialMatrix& outer, const MonomialMatrix& inner);

// Text format (variables are printed 1-based):
//   nice entry     z_i^p conj(z_i)^q    zero exponents elided, (0,0) prints nothing
//   general entry  |z_i|^(re+im·i)·(z_i/|z_i|)^w
// A row joins its non-trivial factors with single spaces; an empty row prints "1".
std::string render_entry(const EndoParam& p, int variable);
std::string render_row(const MonomialMatrix& m, std::size_t row);

}  // namespace toricfan
