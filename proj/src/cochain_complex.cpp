#include "kvlab/cochain_complex.hpp"

#include "kvlab/errors.hpp"

#include <cstdlib>
#include <string>

namespace kvlab {

namespace {

void require_dims(const KvAlgebra& alg, const Cochain& f) {
  if (f.dim() != alg.dim()) throw DimensionError("cochain and algebra dimensions differ");
}

void require_dims(const KvAlgebra& alg, const Vector& a) {
  if (a.size() != alg.dim()) throw DimensionError("vector length does not match algebra dimension");
}

void require_bound(std::size_t q) {
  const std::size_t bound = coboundary_degree_bound();
  if (q + 1 > bound) {
    throw UnsupportedError("coboundary of degree " + std::to_string(q) + " exceeds the degree bound " +
                           std::to_string(bound) + " (set KVLAB_MAX_DEGREE to raise it)");
  }
}

void add_into(Vector& acc, const Vector& v, const Rational& s) {
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (v[k] != 0) acc[k] += s * v[k];
}

void require_in_j(const KvAlgebra& alg, const Cochain& xi) {
  if (!jspace(alg).contains(xi.coeffs())) throw DomainError("degree-0 cochain does not lie in J(A)");
}

Cochain delta0(const KvAlgebra& alg, const Cochain& xi) {
  const std::size_t n = alg.dim();
  const Vector x = xi.coeffs();
  Cochain out(1, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector u = basis_vector(n, i);
    Vector value = multiply(alg, x, u);
    add_into(value, multiply(alg, u, x), -1);
    for (std::size_t k = 0; k < n; ++k) out.at({i}, k) = value[k];
  }
  return out;
}

std::vector<std::size_t> without(const std::vector<std::size_t>& t, std::size_t a, std::size_t b) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < t.size(); ++p)
    if (p != a && p != b) out.push_back(t[p]);
  return out;
}

}  // namespace

std::size_t coboundary_degree_bound() {
  const char* raw = std::getenv("KVLAB_MAX_DEGREE");
  if (raw == nullptr || *raw == '\0') return kDefaultDegreeBound;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v <= 0 || v > 12) throw ValueError("KVLAB_MAX_DEGREE must be an integer in 1..12");
  return static_cast<std::size_t>(v);
}

Cochain left_action(const KvAlgebra& alg, const Vector& a, const Cochain& f) {
  require_dims(alg, f);
  require_dims(alg, a);
  const std::size_t n = alg.dim();
  const std::size_t q = f.degree();
  Cochain out(q, n);
  for (const auto& t : index_tuples(n, q)) {
    Vector value = multiply(alg, a, f.value_on_basis(t));
    for (std::size_t j = 0; j < q; ++j) {
      // f(.., a e_{t_j}, ..) expands linearly over the product's coordinates.
      const Vector prod = multiply(alg, a, basis_vector(n, t[j]));
      for (std::size_t m = 0; m < n; ++m) {
        if (prod[m] == 0) continue;
        auto s = t;
        s[j] = m;
        add_into(value, f.value_on_basis(s), -prod[m]);
      }
    }
    for (std::size_t k = 0; k < n; ++k) out.at(t, k) = value[k];
  }
  return out;
}

Cochain right_action(const KvAlgebra& alg, const Cochain& f, const Vector& a) {
  require_dims(alg, f);
  require_dims(alg, a);
  const std::size_t n = alg.dim();
  Cochain out(f.degree(), n);
  for (const auto& t : index_tuples(n, f.degree())) {
    const Vector value = multiply(alg, f.value_on_basis(t), a);
    for (std::size_t k = 0; k < n; ++k) out.at(t, k) = value[k];
  }
  return out;
}

Cochain insert(const Cochain& f, std::size_t rho, const Vector& a) {
  const std::size_t q = f.degree();
  if (rho < 1 || rho > q) {
    throw DimensionError("insertion position " + std::to_string(rho) + " outside 1.." + std::to_string(q));
  }
  if (a.size() != f.dim()) throw DimensionError("vector length does not match cochain dimension");
  const std::size_t n = f.dim();
  Cochain out(q - 1, n);
  for (const auto& t : index_tuples(n, q - 1)) {
    Vector value(n);
    for (std::size_t m = 0; m < n; ++m) {
      if (a[m] == 0) continue;
      std::vector<std::size_t> s(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(rho - 1));
      s.push_back(m);
      s.insert(s.end(), t.begin() + static_cast<std::ptrdiff_t>(rho - 1), t.end());
      add_into(value, f.value_on_basis(s), a[m]);
    }
    for (std::size_t k = 0; k < n; ++k) out.at(t, k) = value[k];
  }
  return out;
}

Cochain coboundary(const KvAlgebra& alg, const Cochain& f) {
  require_dims(alg, f);
  const std::size_t q = f.degree();
  require_bound(q);
  if (q == 0) {
    require_in_j(alg, f);
    return delta0(alg, f);
  }
  const std::size_t n = alg.dim();
  // Precompute the cochains each summand needs, one per basis vector:
  // left[b] = e_b f and inserted[b][c] = e_q(e_b)(f e_c).
  std::vector<Cochain> left;
  std::vector<std::vector<Cochain>> inserted(n);
  for (std::size_t b = 0; b < n; ++b) left.push_back(left_action(alg, basis_vector(n, b), f));
  for (std::size_t c = 0; c < n; ++c) {
    const Cochain fc = right_action(alg, f, basis_vector(n, c));
    for (std::size_t b = 0; b < n; ++b) inserted[b].push_back(insert(fc, q, basis_vector(n, b)));
  }
  Cochain out(q + 1, n);
  for (const auto& t : index_tuples(n, q + 1)) {
    Vector value(n);
    for (std::size_t j = 0; j < q; ++j) {
      const Rational sign = (j % 2 == 0) ? -1 : 1;  // (-1)^{j+1} for 0-based j
      add_into(value, left[t[j]].value_on_basis(without(t, j, q + 1)), sign);
      add_into(value, inserted[t[j]][t[q]].value_on_basis(without(t, j, q)), sign);
    }
    for (std::size_t k = 0; k < n; ++k) out.at(t, k) = value[k];
  }
  return out;
}

Cochain coboundary_explicit(const KvAlgebra& alg, const Cochain& f) {
  require_dims(alg, f);
  const std::size_t n = alg.dim();
  const auto mul = [&](const Vector& x, const Vector& y) { return multiply(alg, x, y); };
  switch (f.degree()) {
    case 0: {
      require_in_j(alg, f);
      const Vector xi = f.coeffs();
      Cochain out(1, n);
      for (std::size_t i = 0; i < n; ++i) {
        const Vector u = basis_vector(n, i);
        Vector value(n);
        add_into(value, mul(u, xi), -1);
        add_into(value, mul(xi, u), 1);
        for (std::size_t k = 0; k < n; ++k) out.at({i}, k) = value[k];
      }
      return out;
    }
    case 1: {
      const auto f1 = [&](const Vector& x) { return f.evaluate({x}); };
      Cochain out(2, n);
      for (const auto& t : index_tuples(n, 2)) {
        const Vector u = basis_vector(n, t[0]);
        const Vector v = basis_vector(n, t[1]);
        Vector value(n);
        add_into(value, mul(u, f1(v)), -1);
        add_into(value, f1(mul(u, v)), 1);
        add_into(value, mul(f1(u), v), -1);
        for (std::size_t k = 0; k < n; ++k) out.at(t, k) = value[k];
      }
      return out;
    }
    case 2: {
      const auto f2 = [&](const Vector& x, const Vector& y) { return f.evaluate({x, y}); };
      Cochain out(3, n);
      for (const auto& t : index_tuples(n, 3)) {
        const Vector u = basis_vector(n, t[0]);
        const Vector v = basis_vector(n, t[1]);
        const Vector w = basis_vector(n, t[2]);
        Vector value(n);
        add_into(value, mul(v, f2(u, w)), 1);
        add_into(value, mul(u, f2(v, w)), -1);
        add_into(value, f2(v, mul(u, w)), 1);
        add_into(value, f2(u, mul(v, w)), -1);
        add_into(value, f2(mul(u, v), w), 1);
        add_into(value, f2(mul(v, u), w), -1);
        add_into(value, mul(f2(u, v), w), 1);
        add_into(value, mul(f2(v, u), w), -1);
        for (std::size_t k = 0; k < n; ++k) out.at(t, k) = value[k];
      }
      return out;
    }
    default:
      throw UnsupportedError("explicit coboundary formulas exist for degrees 0, 1, 2 only");
  }
}

RatMatrix coboundary_matrix(const KvAlgebra& alg, std::size_t q) {
  require_bound(q);
  const std::size_t n = alg.dim();
  std::vector<RatVector> columns;
  if (q == 0) {
    for (const auto& xi : jspace(alg).basis_vectors()) columns.push_back(delta0(alg, Cochain::constant(xi)).coeffs());
  } else {
    const std::size_t domain = int_pow(n, q + 1);
    for (std::size_t c = 0; c < domain; ++c) columns.push_back(coboundary(alg, Cochain::basis(q, n, c)).coeffs());
  }
  return RatMatrix::from_columns(columns, int_pow(n, q + 2));
}

RatMatrix unrestricted_delta0_matrix(const KvAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<RatVector> columns;
  for (std::size_t l = 0; l < n; ++l) columns.push_back(delta0(alg, Cochain::constant(basis_vector(n, l))).coeffs());
  return RatMatrix::from_columns(columns, n * n);
}

}  // namespace kvlab
