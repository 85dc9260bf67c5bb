#include "toricfan/charts.hpp"

#include <algorithm>
#include <cmath>

#include "toricfan/error.hpp"
#include "toricfan/sampling.hpp"

namespace toricfan {

DualSet dual_set(const TopologicalFan& fan, const Simplex& simplex) {
  const RatMatrix b = b_matrix(fan, simplex);
  const IntMatrix v = v_matrix(fan, simplex);
  if (b.rows() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "simplex " + format_simplex(simplex) + " is not maximal");
  }
  const auto x = inverse(b);
  if (!x) throw Error(ErrorCode::SingularB, "B is singular on " + format_simplex(simplex));
  const Integer det_v = determinant(v);
  if (abs(det_v) != 1) {
    throw Error(ErrorCode::NonUnimodularV,
                "det V = " + to_string(det_v) + " on " + format_simplex(simplex));
  }
  const RatMatrix u_rat = *inverse(to_rational(v));
  const IntMatrix u = *to_integer(u_rat);
  RatMatrix y = multiply(multiply(u_rat, c_matrix(fan, simplex)), *x);

  DualSet dual;
  dual.simplex = simplex;
  for (std::size_t r = 0; r < simplex.size(); ++r) {
    RatVector y_row = y.row(r);
    for (Rational& q : y_row) q = -q;
    dual.rows.push_back(Character{x->row(r), std::move(y_row), u.row(r)});
  }
  return dual;
}

namespace {

TransitionMap transition_from(const TopologicalFan& fan, const Simplex& source, const DualSet& target) {
  TransitionMap map;
  map.source = source;
  map.target = target.simplex;
  map.matrix = MonomialMatrix(target.simplex, source);
  for (std::size_t r = 0; r < target.simplex.size(); ++r) {
    for (std::size_t c = 0; c < source.size(); ++c) {
      map.matrix.at(r, c) = pair(target.rows[r], fan.beta[static_cast<std::size_t>(source[c])]);
    }
  }
  if (map.matrix.all_nice()) {
    std::vector<std::vector<LaurentExponent>> laurent(map.matrix.rows());
    for (std::size_t r = 0; r < map.matrix.rows(); ++r) {
      for (std::size_t c = 0; c < map.matrix.cols(); ++c) laurent[r].push_back(to_laurent(map.matrix.at(r, c)));
    }
    map.laurent = std::move(laurent);
  }
  return map;
}

// transitions[p][q] = T(simplex p, simplex q)
std::vector<std::vector<TransitionMap>> all_transitions(const TopologicalFan& fan) {
  std::vector<DualSet> duals;
  for (const Simplex& s : fan.maximal_simplices) duals.push_back(dual_set(fan, s));
  std::vector<std::vector<TransitionMap>> out(duals.size());
  for (std::size_t p = 0; p < duals.size(); ++p) {
    for (std::size_t q = 0; q < duals.size(); ++q) {
      out[p].push_back(transition_from(fan, fan.maximal_simplices[p], duals[q]));
    }
  }
  return out;
}

std::vector<Complex> sample_point(SeededRng& rng, std::size_t length) { return rng.unit_scale_point(length); }

}  // namespace

TransitionMap transition(const TopologicalFan& fan, const Simplex& source, const Simplex& target) {
  if (source.size() != static_cast<std::size_t>(fan.dimension)) {
    throw Error(ErrorCode::ShapeMismatch, "simplex " + format_simplex(source) + " is not maximal");
  }
  return transition_from(fan, source, dual_set(fan, target));
}

std::string render_transition(const TransitionMap& map) {
  const MonomialMatrix& m = map.matrix;
  if (m.rows() == 1) return "w = " + render_row(m, 0) + "\n";
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += "w_" + std::to_string(m.row_labels()[r] + 1) + " = " + render_row(m, r) + "\n";
  }
  return out;
}

std::vector<Complex> chart_image(const DualSet& dual, const TopologicalFan& fan, std::span<const Complex> z) {
  if (z.size() != fan.ray_count()) throw Error(ErrorCode::DimensionMismatch, "chart_image: point length");
  const Simplex& simplex = dual.simplex;
  auto in_simplex = [&](std::size_t k) { return std::binary_search(simplex.begin(), simplex.end(), static_cast<int>(k)); };
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (!in_simplex(k) && z[k] == Complex(0.0, 0.0)) {
      throw Error(ErrorCode::ZeroForbidden,
                  "z_" + std::to_string(k + 1) + " = 0 outside chart " + format_simplex(simplex));
    }
  }
  std::vector<Complex> out;
  out.reserve(simplex.size());
  for (std::size_t r = 0; r < simplex.size(); ++r) {
    Complex value = z[static_cast<std::size_t>(simplex[r])];
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (in_simplex(k)) continue;
      const EndoParam p = pair(dual.rows[r], fan.beta[k]);
      if (p == EndoParam::zero()) continue;
      value *= eval_endo(p, z[k]);
    }
    out.push_back(value);
  }
  return out;
}

std::vector<Complex> chart_image(const TopologicalFan& fan, const Simplex& simplex, std::span<const Complex> z) {
  return chart_image(dual_set(fan, simplex), fan, z);
}

std::vector<ChartRecord> atlas(const TopologicalFan& fan) {
  std::vector<ChartRecord> records;
  for (const Simplex& s : fan.maximal_simplices) {
    const DualSet dual = dual_set(fan, s);
    ChartRecord rec;
    rec.simplex = s;
    rec.representation = dual.rows;
    for (std::size_t k = 0; k < fan.ray_count(); ++k) {
      if (!std::binary_search(s.begin(), s.end(), static_cast<int>(k))) rec.removed.push_back(static_cast<int>(k));
    }
    rec.real_algebraic = true;
    rec.algebraic = true;
    for (const Character& row : dual.rows) {
      const bool y_zero = is_zero(row.y);
      bool integral_parity = true;
      for (std::size_t k = 0; k < row.x.size(); ++k) {
        if (!is_integral(row.x[k]) || !is_even(Integer(row.x[k].get_num() - row.u[k]))) integral_parity = false;
      }
      rec.real_algebraic = rec.real_algebraic && y_zero && integral_parity;
      rec.algebraic = rec.algebraic && y_zero && row.x == to_rational(row.u);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

AtlasClassification classify_atlas(const TopologicalFan& fan) {
  AtlasClassification out;
  for (const ChartRecord& rec : atlas(fan)) {
    out.some_chart_algebraic = out.some_chart_algebraic || rec.algebraic;
    out.some_chart_real_algebraic = out.some_chart_real_algebraic || rec.real_algebraic;
  }
  out.transitions_laurent = true;
  out.transitions_holomorphic = true;
  for (const auto& row : all_transitions(fan)) {
    for (const TransitionMap& t : row) {
      if (!t.laurent) {
        out.transitions_laurent = false;
        out.transitions_holomorphic = false;
        continue;
      }
      for (const auto& exps : *t.laurent) {
        for (const LaurentExponent& e : exps) {
          if (e.q != 0) out.transitions_holomorphic = false;
        }
      }
    }
  }
  out.toric_criterion = out.transitions_holomorphic && out.some_chart_algebraic;
  out.nice_criterion = out.transitions_laurent && out.some_chart_real_algebraic;
  return out;
}

double max_relative_error(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "max_relative_error: lengths differ");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double scale = std::abs(b[k]);
    const double diff = std::abs(a[k] - b[k]);
    worst = std::max(worst, scale > 0.0 ? diff / scale : diff);
  }
  return worst;
}

CocycleReport cocycle_check(const TopologicalFan& fan, const CocycleOptions& options) {
  ValidityReport validity = validate(fan, options.validation);
  if (!validity.valid()) throw InvalidFanError(std::move(validity));

  CocycleReport report;
  report.mode = options.mode;
  if (options.mode == CocycleMode::Numeric) {
    report.points = options.points;
    report.tol = options.tol;
    report.seed = options.seed;
  }
  const auto transitions = all_transitions(fan);
  const std::size_t count = transitions.size();
  SeededRng rng(options.seed);
  for (std::size_t p = 0; p < count; ++p) {
    for (std::size_t q = 0; q < count; ++q) {
      for (std::size_t r = 0; r < count; ++r) {
        ++report.triples;
        const TransitionMap& first = transitions[p][q];
        const TransitionMap& second = transitions[q][r];
        const TransitionMap& direct = transitions[p][r];
        CocycleFailure failure{p, q, r, 0, 0, 0.0, {}};
        if (options.mode == CocycleMode::Exact) {
          const MonomialMatrix composed = matrix_compose(second.matrix, first.matrix);
          bool ok = true;
          for (std::size_t row = 0; row < composed.rows() && ok; ++row) {
            for (std::size_t col = 0; col < composed.cols() && ok; ++col) {
              if (!(composed.at(row, col) == direct.matrix.at(row, col))) {
                ok = false;
                failure.row = row;
                failure.col = col;
                failure.detail = "entry (" + std::to_string(direct.matrix.row_labels()[row] + 1) + "," +
                                 std::to_string(direct.matrix.col_labels()[col] + 1) + ") differs";
              }
            }
          }
          if (!ok) report.failures.push_back(std::move(failure));
        } else {
          double worst = 0.0;
          for (std::size_t s = 0; s < options.points; ++s) {
            const std::vector<Complex> z = sample_point(rng, first.matrix.cols());
            const auto via = matrix_eval(second.matrix, matrix_eval(first.matrix, z));
            const auto straight = matrix_eval(direct.matrix, z);
            worst = std::max(worst, max_relative_error(via, straight));
          }
          if (!(worst <= options.tol)) {
            failure.error = worst;
            failure.detail = "relative error exceeds tolerance";
            report.failures.push_back(std::move(failure));
          }
        }
      }
    }
  }
  return report;
}

OracleReport chart_oracle(const TopologicalFan& fan, std::size_t points, double tol, std::uint64_t seed) {
  OracleReport report;
  report.points = points;
  report.tol = tol;
  report.seed = seed;
  std::vector<DualSet> duals;
  for (const Simplex& s : fan.maximal_simplices) duals.push_back(dual_set(fan, s));
  SeededRng rng(seed);
  for (std::size_t p = 0; p < duals.size(); ++p) {
    for (std::size_t q = 0; q < duals.size(); ++q) {
      const TransitionMap t = transition_from(fan, duals[p].simplex, duals[q]);
      OraclePairResult result{p, q, 0.0};
      for (std::size_t s = 0; s < points; ++s) {
        const std::vector<Complex> z = sample_point(rng, fan.ray_count());
        const auto direct = chart_image(duals[q], fan, z);
        const auto via = matrix_eval(t.matrix, chart_image(duals[p], fan, z));
        result.max_relative_error = std::max(result.max_relative_error, max_relative_error(via, direct));
      }
      report.max_relative_error = std::max(report.max_relative_error, result.max_relative_error);
      report.pairs.push_back(result);
    }
  }
  return report;
}

}  // namespace toricfan
