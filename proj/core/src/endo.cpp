#include "toricfan/endo.hpp"

#include <cmath>

#include "toricfan/error.hpp"

namespace toricfan {

EndoParam EndoParam::identity() { return {Rational(1), Rational(0), Integer(1)}; }

EndoParam EndoParam::zero() { return {Rational(0), Rational(0), Integer(0)}; }

EndoParam operator+(const EndoParam& a, const EndoParam& b) {
  return {Rational(a.re + b.re), Rational(a.im + b.im), Integer(a.w + b.w)};
}

bool is_nice(const EndoParam& p) {
  if (p.im != 0 || !is_integral(p.re)) return false;
  return is_even(Integer(p.re.get_num() - p.w));
}

Complex eval_endo(const EndoParam& p, Complex z) {
  const double modulus = std::abs(z);
  if (modulus == 0.0) throw Error(ErrorCode::ZeroInput, "eval_endo at z = 0");
  const double log_modulus = std::log(modulus);
  const double magnitude = std::exp(p.re.get_d() * log_modulus);
  const double phase = p.im.get_d() * log_modulus + p.w.get_d() * std::arg(z);
  return std::polar(magnitude, phase);
}

EndoParam compose(const EndoParam& outer, const EndoParam& inner) {
  return {Rational(outer.re * inner.re),
          Rational(outer.im * inner.re + Rational(outer.w) * inner.im),
          Integer(outer.w * inner.w)};
}

EndoParam pair(const Character& alpha, const Cocharacter& beta) {
  const std::size_t n = beta.b.size();
  if (alpha.x.size() != n || alpha.y.size() != n || alpha.u.size() != n || beta.c.size() != n ||
      beta.v.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "pair: character and cocharacter lengths differ");
  }
  return {dot(alpha.x, beta.b), Rational(dot(alpha.y, beta.b) + dot(beta.c, alpha.u)),
          dot(alpha.u, beta.v)};
}

LaurentExponent to_laurent(const EndoParam& p) {
  if (p.im != 0) throw Error(ErrorCode::NotNice, "imaginary part " + to_string(p.im) + " is nonzero");
  if (!is_integral(p.re)) throw Error(ErrorCode::NotNice, "real part " + to_string(p.re) + " is not integral");
  const Integer re = p.re.get_num();
  const Integer diff = re - p.w;
  if (!is_even(diff)) {
    throw Error(ErrorCode::NotNice,
                "parity: real part " + to_string(re) + " differs from w = " + to_string(p.w) + " mod 2");
  }
  const Integer sum = re + p.w;
  return {Integer(sum / 2), Integer(diff / 2)};
}

EndoParam from_laurent(const LaurentExponent& e) {
  return {Rational(e.p + e.q), Rational(0), Integer(e.p - e.q)};
}

MonomialMatrix::MonomialMatrix(std::vector<int> row_labels, std::vector<int> col_labels)
    : rows_(std::move(row_labels)),
      cols_(std::move(col_labels)),
      entries_(rows_.size() * cols_.size(), EndoParam::zero()) {}

MonomialMatrix MonomialMatrix::identity(const std::vector<int>& labels) {
  MonomialMatrix m(labels, labels);
  for (std::size_t i = 0; i < labels.size(); ++i) m.at(i, i) = EndoParam::identity();
  return m;
}

bool MonomialMatrix::all_nice() const {
  for (const EndoParam& p : entries_) {
    if (!is_nice(p)) return false;
  }
  return true;
}

std::vector<Complex> matrix_eval(const MonomialMatrix& m, std::span<const Complex> point) {
  if (point.size() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix_eval: point length");
  for (std::size_t c = 0; c < point.size(); ++c) {
    if (point[c] == Complex(0.0, 0.0)) {
      throw Error(ErrorCode::ZeroInput, "matrix_eval: coordinate z_" +
                                            std::to_string(m.col_labels()[c] + 1) + " is zero");
    }
  }
  std::vector<Complex> out(m.rows(), Complex(1.0, 0.0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const EndoParam& p = m.at(r, c);
      if (p == EndoParam::zero()) continue;
      out[r] *= eval_endo(p, point[c]);
    }
  }
  return out;
}

MonomialMatrix matrix_compose(const MonomialMatrix& outer, const MonomialMatrix& inner) {
  if (inner.row_labels() != outer.col_labels()) {
    throw Error(ErrorCode::ShapeMismatch, "matrix_compose: inner rows do not match outer columns");
  }
  MonomialMatrix out(outer.row_labels(), inner.col_labels());
  for (std::size_t k = 0; k < outer.rows(); ++k) {
    for (std::size_t i = 0; i < inner.cols(); ++i) {
      EndoParam acc = EndoParam::zero();
      for (std::size_t j = 0; j < outer.cols(); ++j) acc = acc + compose(outer.at(k, j), inner.at(j, i));
      out.at(k, i) = acc;
    }
  }
  return out;
}

std::string render_entry(const EndoParam& p, int variable) {
  const std::string z = "z_" + std::to_string(variable);
  if (is_nice(p)) {
    const LaurentExponent e = to_laurent(p);
    std::string text;
    if (e.p != 0) text += z + "^" + to_string(e.p);
    if (e.q != 0) {
      if (!text.empty()) text += " ";
      text += "conj(" + z + ")^" + to_string(e.q);
    }
    return text;
  }
  std::string exponent = to_string(p.re);
  if (p.im < 0) {
    exponent += to_string(p.im) + "·i";
  } else {
    exponent += "+" + to_string(p.im) + "·i";
  }
  return "|" + z + "|^(" + exponent + ")·(" + z + "/|" + z + "|)^" + to_string(p.w);
}

std::string render_row(const MonomialMatrix& m, std::size_t row) {
  std::string text;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const std::string factor = render_entry(m.at(row, c), m.col_labels()[c] + 1);
    if (factor.empty()) continue;
    if (!text.empty()) text += " ";
    text += factor;
  }
  return text.empty() ? "1" : text;
}

}  // namespace toricfan
