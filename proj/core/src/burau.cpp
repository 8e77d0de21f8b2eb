#include "hitchin/burau.hpp"

#include <string>

#include "hitchin/error.hpp"

namespace hitchin {

LaurentMatrix burau_generator(int n, int j) {
  if (n < 2 || j < 1 || j >= n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "Burau generator sigma_" + std::to_string(j) + " needs 1 <= j < n = " + std::to_string(n));
  }
  auto m = LaurentMatrix::identity(static_cast<std::size_t>(n));
  const auto a = static_cast<std::size_t>(j - 1);
  const auto b = a + 1;
  m(a, a) = LaurentPoly(1) - LaurentPoly::t();
  m(b, a) = LaurentPoly::t();
  m(a, b) = LaurentPoly(1);
  m(b, b) = LaurentPoly();
  return m;
}

CheckReport check_braid_relations(int n, const QuotientSpec& spec) {
  CheckReport report;
  std::vector<LaurentMatrix> s;
  for (int j = 1; j < n; ++j) s.push_back(burau_generator(n, j).specialize(spec));
  const auto mul = [&](const LaurentMatrix& a, const LaurentMatrix& b) { return multiply(a, b, spec); };
  for (int j = 1; j < n; ++j) {
    const auto& a = s[j - 1];
    if (j + 1 < n) {
      const auto& b = s[j];
      report.add("braid s" + std::to_string(j) + ",s" + std::to_string(j + 1),
                 mul(mul(a, b), a) == mul(mul(b, a), b));
    }
    for (int k = j + 2; k < n; ++k) {
      const auto& b = s[k - 1];
      report.add("commute s" + std::to_string(j) + ",s" + std::to_string(k), mul(a, b) == mul(b, a));
    }
  }
  return report;
}

CheckReport check_permutation_specialization(int n) {
  CheckReport report;
  for (int j = 1; j < n; ++j) {
    IntegerMatrix perm = IntegerMatrix::identity(static_cast<std::size_t>(n));
    const auto a = static_cast<std::size_t>(j - 1);
    perm(a, a) = 0;
    perm(a + 1, a + 1) = 0;
    perm(a, a + 1) = 1;
    perm(a + 1, a) = 1;
    report.add("permutation s" + std::to_string(j), burau_generator(n, j).evaluate_at_sign(1) == perm);
  }
  return report;
}

IntegerMatrix zeta_basis(int n) {
  IntegerMatrix z(static_cast<std::size_t>(n), static_cast<std::size_t>(n - 1));
  for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(n); ++j) {
    z(j, j) = 1;
    z(j + 1, j) = -1;
  }
  return z;
}

IntegerMatrix zeta_pairing(int n) {
  const auto m = static_cast<std::size_t>(n - 1);
  IntegerMatrix p(m, m);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    p(j, j + 1) = 1;
    p(j + 1, j) = -1;
  }
  return p;
}

CheckReport zeta_basis_action(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "zeta basis action needs n >= 3");
  CheckReport report;
  const IntegerMatrix z = zeta_basis(n);
  const IntegerMatrix p = zeta_pairing(n);
  for (int j = 1; j < n; ++j) {
    const IntegerMatrix s = burau_generator(n, j).evaluate_at_sign(-1);
    const IntegerVector zj = z.column(static_cast<std::size_t>(j - 1));
    for (int k = 1; k < n; ++k) {
      const IntegerVector zk = z.column(static_cast<std::size_t>(k - 1));
      const Integer c = p(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(j - 1));
      IntegerVector expected = zk;
      for (std::size_t r = 0; r < expected.size(); ++r) expected[r] -= c * zj[r];
      report.add("zeta s" + std::to_string(j) + " z" + std::to_string(k), s * zk == expected);
    }
  }
  return report;
}

Integer covering_genus(long genus, long n, long k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "covering degree must be >= 1");
  if (n % k != 0) {
    throw Error(ErrorCode::DivisibilityViolation, std::to_string(k) + " does not divide " + std::to_string(n));
  }
  if (((k - 1) * n) % 2 != 0) throw Error(ErrorCode::DivisibilityViolation, "(k-1)n must be even");
  return Integer(k) * (genus - 1) + 1 + Integer((k - 1) * n / 2);
}

}  // namespace hitchin
