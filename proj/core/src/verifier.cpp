#include "qetude/verifier.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "qetude/closedform.hpp"

namespace qetude {

namespace {

MultiPoly mono(std::uint32_t q, std::uint32_t x, std::uint32_t n, std::uint32_t a, const Rational& c = 1) {
  return MultiPoly::monomial({q, x, n, a}, c);
}

const MultiPoly kOne(1L);
const MultiPoly kA = mono(0, 0, 0, 1);

// (1 - q^k N / A^e) * A^e
MultiPoly cleared_factor(std::uint32_t k, std::uint32_t e) { return mono(0, 0, 0, e) - mono(k, 0, 1, 0); }

XQPoly evaluate_at_n(const MultiPoly& p, int n) {
  XQPoly::CoeffMap coeffs;
  for (const auto& t : p.terms()) {
    if (t.exp[kMA] != 0) throw std::invalid_argument("operator coefficient mentions A");
    const std::uint64_t q_exp = t.exp[kMq] + std::uint64_t{t.exp[kMN]} * static_cast<std::uint64_t>(n);
    coeffs[t.exp[kMX]] += q_pow(static_cast<std::uint32_t>(q_exp), t.coeff);
  }
  return XQPoly::from_coeffs(std::move(coeffs));
}

MultiRational shift_a(const MultiRational& r, int direction) {
  return substitute<4>(r, [direction](const Exponents<4>& e) {
    std::array<std::int64_t, 4> out{e[0], e[1], e[2], e[3]};
    out[kMq] += direction * static_cast<std::int64_t>(e[kMA]);
    return std::pair{out, Rational(1)};
  });
}

// c2 r2 + c1 r1 + c0 over the common denominator (A^2 - qN)(A^2 - q^2 N).
MultiRational operator_on_summand(const Recurrence& rec) {
  const MultiPoly f1 = cleared_factor(1, 2);
  const MultiPoly f2 = cleared_factor(2, 2);
  const MultiPoly g1 = cleared_factor(1, 1);
  const MultiPoly g2 = cleared_factor(2, 1);
  const MultiPoly a = kA;
  const MultiPoly num = rec.c2 * a * a * g1 * g2 + rec.c1 * a * g1 * f2 + rec.c0 * f1 * f2;
  return {num, f1 * f2};
}

CertificateCheck residual_of(const MultiRational& lhs, const MultiRational& rhs) {
  const MultiRational diff = lhs - rhs;
  return {diff.num().is_zero(), diff.num()};
}

// Fraction-free solve of M x = b over Q[q, X, N]; free unknowns set to 0.
std::optional<std::vector<MultiRational>> solve_linear(std::vector<std::vector<MultiPoly>> m, std::size_t unknowns) {
  const std::size_t rows = m.size();
  const std::size_t rhs = unknowns;
  MultiPoly previous(1L);
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < unknowns && pivot_row < rows; ++col) {
    std::size_t best = rows;
    for (std::size_t r = pivot_row; r < rows; ++r) {
      if (!m[r][col].is_zero() && (best == rows || m[r][col].size() < m[best][col].size())) best = r;
    }
    if (best == rows) continue;
    std::swap(m[pivot_row], m[best]);
    const MultiPoly& pivot = m[pivot_row][col];
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j <= rhs; ++j) {
        MultiPoly cross = pivot * m[i][j] - m[i][col] * m[pivot_row][j];
        auto quotient = cross.divide_exact(previous);
        if (!quotient) throw std::logic_error("inexact fraction-free elimination step");
        m[i][j] = std::move(*quotient);
      }
      m[i][col] = MultiPoly{};
    }
    previous = pivot;
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < rows; ++r) {
    if (!m[r][rhs].is_zero()) return std::nullopt;
  }
  std::vector<MultiRational> x(unknowns, MultiRational(MultiPoly{}));
  for (std::size_t k = pivot_cols.size(); k-- > 0;) {
    const std::size_t col = pivot_cols[k];
    MultiRational acc(m[k][rhs]);
    for (std::size_t j = col + 1; j < unknowns; ++j) {
      if (!m[k][j].is_zero() && !x[j].is_zero()) acc = acc - MultiRational(m[k][j]) * x[j];
    }
    x[col] = (acc / MultiRational(m[k][col])).tidied();
  }
  return x;
}

// Coefficients of A^k, k = 0..deg_A, as polynomials in (q, X, N).
std::vector<MultiPoly> split_by_a(const MultiPoly& p, std::size_t size) {
  std::vector<std::vector<MultiPoly::TermT>> buckets(size);
  for (const auto& t : p.terms()) {
    auto e = t.exp;
    const auto k = e[kMA];
    e[kMA] = 0;
    buckets.at(k).push_back({e, t.coeff});
  }
  std::vector<MultiPoly> out;
  out.reserve(size);
  for (auto& b : buckets) out.push_back(MultiPoly::from_terms(std::move(b)));
  return out;
}

}  // namespace

Recurrence::Recurrence(MultiPoly c0_, MultiPoly c1_, MultiPoly c2_)
    : c0(std::move(c0_)), c1(std::move(c1_)), c2(std::move(c2_)) {
  if (c2.is_zero()) throw std::invalid_argument("leading operator coefficient must be nonzero");
  for (const MultiPoly* c : {&c0, &c1, &c2}) {
    if (c->degree(kMA) != 0) throw std::invalid_argument("operator coefficients may not depend on A");
  }
}

Recurrence Recurrence::lehmer() { return {mono(0, 1, 1, 0), MultiPoly(-1L), kOne}; }

Recurrence Recurrence::scaled(const Rational& factor) const {
  return {c0.scaled(factor), c1.scaled(factor), c2.scaled(factor)};
}

NumericCheck check_recurrence_numeric(int n_max, const SequenceFn& values) {
  if (n_max < 3) throw std::invalid_argument("check_recurrence_numeric needs n_max >= 3");
  if (values(1) != XQPoly(QPoly(1L))) return {false, 1};
  if (values(2) != XQPoly(QPoly(1L)) - XQPoly::monomial(1, QPoly(1L))) return {false, 2};
  XQPoly older = values(1);
  XQPoly old = values(2);
  for (int n = 3; n <= n_max; ++n) {
    XQPoly current = values(n);
    if (!(current - old + older.times(1, static_cast<std::uint32_t>(n - 2))).is_zero()) return {false, n};
    older = std::move(old);
    old = std::move(current);
  }
  return {true, std::nullopt};
}

NumericCheck check_operator_numeric(const Recurrence& rec, int n_max, const SequenceFn& values) {
  if (n_max < 3) throw std::invalid_argument("check_operator_numeric needs n_max >= 3");
  std::vector<XQPoly> v;
  for (int n = 1; n <= n_max; ++n) v.push_back(values(n));
  for (int n = 1; n + 2 <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    const XQPoly total = evaluate_at_n(rec.c2, n) * v[i + 2] + evaluate_at_n(rec.c1, n) * v[i + 1] +
                         evaluate_at_n(rec.c0, n) * v[i];
    if (!total.is_zero()) return {false, n + 2};
  }
  return {true, std::nullopt};
}

bool check_coefficient_identity(int a) { return check_coefficient_identity(a, coefficient_in_N); }

bool check_coefficient_identity(int a, const std::function<NRational(int)>& coefficient) {
  if (a < 1) throw std::invalid_argument("check_coefficient_identity needs a >= 1");
  const auto scale_n = [](const NRational& r, std::int64_t q_per_n) {
    return substitute<2>(r, [q_per_n](const Exponents<2>& e) {
      std::array<std::int64_t, 2> out{e[kN], e[kNq]};
      out[kNq] += q_per_n * static_cast<std::int64_t>(e[kN]);
      return std::pair{out, Rational(1)};
    });
  };
  const NRational current = coefficient(a);
  const NRational previous = coefficient(a - 1);
  const NRational n_over_q2(NPoly2::variable(kN), NPoly2::monomial({0, 2}));
  return rational_equal(current, scale_n(current, -1) - n_over_q2 * scale_n(previous, -2));
}

MultiRational shift_ratio_n1() {
  // (1 - qN/A) / (1 - qN/A^2) = A (A - qN) / (A^2 - qN)
  return {kA * cleared_factor(1, 1), cleared_factor(1, 2)};
}

MultiRational shift_ratio_n2() {
  return {kA * kA * cleared_factor(1, 1) * cleared_factor(2, 1), cleared_factor(1, 2) * cleared_factor(2, 2)};
}

MultiRational shift_ratio_a() {
  // -X A^2 (1 - N/A^2)(1 - N/(qA^2)) / ((1 - N/A)(1 - qA))
  //   = -X (A^2 - N)(qA^2 - N) / (qA (A - N)(1 - qA))
  const MultiPoly n = mono(0, 0, 1, 0);
  const MultiPoly num = -(mono(0, 1, 0, 0) * (mono(0, 0, 0, 2) - n) * (mono(1, 0, 0, 2) - n));
  const MultiPoly den = mono(1, 0, 0, 1) * (kA - n) * (kOne - mono(1, 0, 0, 1));
  return {num, den};
}

CertificateCheck check_certificate(const Recurrence& rec, const Certificate& cert, Orientation orientation) {
  const MultiRational lhs = operator_on_summand(rec);
  if (orientation == Orientation::forward) {
    return residual_of(lhs, shift_a(cert.value, 1) * shift_ratio_a() - cert.value);
  }
  const MultiRational ra_prev = shift_a(shift_ratio_a(), -1);
  return residual_of(lhs, cert.value - shift_a(cert.value, -1) / ra_prev);
}

Certificate solve_certificate(const Recurrence& rec, int degree_cap) {
  if (degree_cap < 1) throw std::invalid_argument("degree cap must be at least 1");
  const std::vector<MultiPoly> basis{cleared_factor(1, 2), cleared_factor(2, 2), kA - mono(0, 0, 1, 0),
                                     kOne - mono(1, 0, 0, 1)};
  const MultiRational lhs = operator_on_summand(rec);
  const MultiRational ra = shift_ratio_a();
  const auto shift_poly = [](const MultiPoly& p) { return shift_a(MultiRational(p), 1).num(); };

  std::vector<unsigned> subsets;
  for (unsigned mask = 0; mask < (1U << basis.size()); ++mask) subsets.push_back(mask);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](unsigned x, unsigned y) { return __builtin_popcount(x) < __builtin_popcount(y); });

  for (unsigned mask : subsets) {
    MultiPoly d(1L);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (mask & (1U << i)) d *= basis[i];
    }
    const MultiPoly d_shifted = shift_poly(d);
    // sum_i p_i [ (qA)^i rA.num D(A) - A^i D(qA) rA.den ] / E  =  lhs.num / lhs.den,
    // with E = D(qA) D(A) rA.den.
    const MultiPoly target = lhs.num() * d_shifted * d * ra.den();
    for (int degree = 0; degree <= degree_cap; ++degree) {
      std::vector<MultiPoly> columns;
      std::size_t height = target.degree(kMA) + 1;
      for (int i = 0; i <= degree; ++i) {
        const auto ui = static_cast<std::uint32_t>(i);
        MultiPoly col = (mono(ui, 0, 0, ui) * ra.num() * d - mono(0, 0, 0, ui) * d_shifted * ra.den()) * lhs.den();
        height = std::max<std::size_t>(height, col.degree(kMA) + 1);
        columns.push_back(std::move(col));
      }
      const std::size_t unknowns = columns.size();
      std::vector<std::vector<MultiPoly>> system(height, std::vector<MultiPoly>(unknowns + 1));
      for (std::size_t c = 0; c < unknowns; ++c) {
        auto parts = split_by_a(columns[c], height);
        for (std::size_t r = 0; r < height; ++r) system[r][c] = std::move(parts[r]);
      }
      auto rhs_parts = split_by_a(target, height);
      for (std::size_t r = 0; r < height; ++r) system[r][unknowns] = std::move(rhs_parts[r]);
      std::erase_if(system, [](const std::vector<MultiPoly>& row) {
        return std::all_of(row.begin(), row.end(), [](const MultiPoly& p) { return p.is_zero(); });
      });

      auto solution = solve_linear(std::move(system), unknowns);
      if (!solution) continue;
      MultiRational numerator(MultiPoly{});
      for (std::size_t i = 0; i < unknowns; ++i) {
        if (!(*solution)[i].is_zero()) {
          numerator = numerator + (*solution)[i] * MultiRational(mono(0, 0, 0, static_cast<std::uint32_t>(i)));
        }
      }
      Certificate cert{(numerator / MultiRational(d)).tidied()};
      if (check_certificate(rec, cert).ok) return cert;
    }
  }
  throw CertificateNotFound("certificate not found at degree cap " + std::to_string(degree_cap));
}

Json to_json(const std::vector<CheckOutcome>& outcomes) {
  Json out = Json::array();
  for (const auto& o : outcomes) {
    out.push_back(Json{{"name", o.name}, {"pass", o.pass}, {"counterexample", o.counterexample}});
  }
  return out;
}

}  // namespace qetude
