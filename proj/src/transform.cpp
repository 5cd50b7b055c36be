#include "btx/transform.hpp"

#include "btx/error.hpp"
#include "btx/series.hpp"
#include "btx/special.hpp"

namespace btx {

namespace {

void require_terms(const Terms& a, long count) {
  if (count < 0) throw DomainError("transform index must be nonnegative");
  if (static_cast<long>(a.size()) < count) {
    throw DomainError("need " + std::to_string(count) + " sequence terms, have " + std::to_string(a.size()));
  }
}

std::vector<Rational> powers(const Rational& base, long n) {
  std::vector<Rational> p(static_cast<std::size_t>(n) + 1);
  p[0] = Rational(1);
  for (long i = 1; i <= n; ++i) p[i] = p[i - 1] * base;
  return p;
}

// sum_k w_k C(n,k) u^k v^{n-k}
Rational binomial_weighted(const std::vector<Rational>& w, long n, const Rational& u, const Rational& v) {
  const auto up = powers(u, n);
  const auto vp = powers(v, n);
  Rational sum;
  for (long k = 0; k <= n; ++k) sum += w[k] * binomial(n, k) * up[k] * vp[n - k];
  return sum;
}

Rational product(const std::vector<Rational>& xs, std::size_t from) {
  Rational p(1);
  for (std::size_t i = from; i < xs.size(); ++i) p *= xs[i];
  return p;
}

}  // namespace

Rational bernoulli_sum(const Terms& a, long n, const Rational& q) {
  require_terms(a, n + 1);
  return binomial_weighted(a, n, Rational(1) - q, q);
}

std::vector<Rational> transform_row(const Terms& a, long count, const Rational& q) {
  require_terms(a, count);
  std::vector<Rational> row;
  row.reserve(static_cast<std::size_t>(count));
  for (long n = 0; n < count; ++n) row.push_back(bernoulli_sum(a, n, q));
  return row;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::direct_sum: return "direct-sum";
    case Provenance::basis_rep: return "basis-rep";
    case Provenance::gf_product: return "gf-product";
    case Provenance::gf_composed: return "gf-composed";
  }
  return "unknown";
}

Rational direct_transform(const Terms& a, long n, const Rational& q, bool conjugate) {
  require_terms(a, n + 1);
  return conjugate ? binomial_weighted(a, n, q, Rational(1) - q) : binomial_weighted(a, n, Rational(1) - q, q);
}

Rational direct_transform(const SequenceSpec& spec, long n, const Rational& q, bool conjugate) {
  if (n < 0) throw DomainError("transform index must be nonnegative");
  return direct_transform(spec.terms(n + 1), n, q, conjugate);
}

QPoly basis_from_differences(const std::vector<Rational>& differences) {
  const long n = static_cast<long>(differences.size()) - 1;
  std::vector<Rational> coeffs(differences.size());
  for (long j = 0; j <= n; ++j) coeffs[j] = sign_power(j) * binomial(n, j) * differences[j];
  return QPoly(std::move(coeffs));
}

QPoly basis_representation(const Terms& a, long n, bool conjugate) {
  require_terms(a, n + 1);
  std::vector<Rational> diffs;
  diffs.reserve(static_cast<std::size_t>(n) + 1);
  for (long j = 0; j <= n; ++j) diffs.push_back(conjugate ? dual_diff(a, j) : backward_difference(a, n, j));
  return basis_from_differences(diffs);
}

QPoly basis_representation(const SequenceSpec& spec, long n, bool conjugate) {
  if (n < 0) throw DomainError("transform index must be nonnegative");
  return basis_representation(spec.terms(n + 1), n, conjugate);
}

QPoly operator_form(const Terms& a, long n) {
  require_terms(a, n + 1);
  // b_k <- b_k - q (b_k - b_{k-1}); after i passes b_k is valid for k >= i.
  std::vector<QPoly> b;
  b.reserve(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) b.push_back(QPoly::constant(a[k]));
  const QPoly q = QPoly::monomial(1);
  for (long pass = 1; pass <= n; ++pass) {
    for (long k = n; k >= pass; --k) b[k] = b[k] - q * (b[k] - b[k - 1]);
  }
  return b[n];
}

Rational gf_transform(const Terms& a, long n, const Rational& q, GfMode mode, long order) {
  if (n < 0) throw DomainError("transform index must be nonnegative");
  if (order < 0) order = n;
  if (order < n) {
    throw ConfigError("series order " + std::to_string(order) + " is below the index " + std::to_string(n));
  }
  const auto N = static_cast<std::size_t>(order);
  require_terms(a, n + 1);
  Series A(N, std::vector<Rational>(a.begin(), a.begin() + std::min<long>(static_cast<long>(a.size()), order + 1)));
  if (mode == GfMode::product) {
    Series base(N, {Rational(1) - q, q});
    Series power(N, {Rational(1)});
    for (long i = 0; i < n; ++i) power = power * base;
    return (power * A)[static_cast<std::size_t>(n)];
  }
  // (1-q) z / (1 - q z)
  Series inner = Series::geometric(N, q);
  Series shifted(N);
  for (std::size_t k = 1; k <= N; ++k) shifted[k] = (Rational(1) - q) * inner[k - 1];
  return (Series::geometric(N, q) * compose(A, shifted))[static_cast<std::size_t>(n)];
}

Rational gf_transform(const SequenceSpec& spec, long n, const Rational& q, GfMode mode, long order) {
  if (n < 0) throw DomainError("transform index must be nonnegative");
  const long count = std::max(n, order) + 1;
  return gf_transform(spec.terms(count), n, q, mode, order);
}

std::vector<TransformResult> all_routes(const SequenceSpec& spec, long n, const Rational& q) {
  const Terms a = spec.terms(n + 1);
  std::vector<TransformResult> out;
  out.push_back({n, Provenance::direct_sum, direct_transform(a, n, q), std::nullopt});
  QPoly poly = basis_representation(a, n);
  out.push_back({n, Provenance::basis_rep, poly(q), poly});
  out.push_back({n, Provenance::gf_product, gf_transform(a, n, q, GfMode::product), std::nullopt});
  out.push_back({n, Provenance::gf_composed, gf_transform(a, n, q, GfMode::composed), std::nullopt});
  return out;
}

Sides compose_transform(const Terms& a, long n, const Rational& x, const Rational& q) {
  const auto inner = transform_row(a, n + 1, x);
  return {binomial_weighted(inner, n, Rational(1) - q, q), bernoulli_sum(a, n, x + q - x * q)};
}

Sides compose_transform(const SequenceSpec& spec, long n, const Rational& x, const Rational& q) {
  if (n < 0) throw DomainError("transform index must be nonnegative");
  // The left side goes through the transformed sequence itself.
  const SequenceSpec wrapped(seq::TransformOf{std::make_shared<const SequenceSpec>(spec), x});
  const Terms inner = wrapped.terms(n + 1);
  return {binomial_weighted(inner, n, Rational(1) - q, q), direct_transform(spec, n, x + q - x * q)};
}

Sides compose_transform_bis(const Terms& a, long n, const Rational& x, const Rational& q) {
  const auto inner = transform_row(a, n + 1, Rational(1) - x);
  return {binomial_weighted(inner, n, q, Rational(1) - q), bernoulli_sum(a, n, Rational(1) - x * q)};
}

Sides shifted_transform(const Terms& a, long n, long m, const Rational& x, const Rational& q) {
  if (m < 0) throw DomainError("shift m must be nonnegative");
  const auto inner = transform_row(a, n + m + 1, x);
  const std::vector<Rational> shifted(inner.begin() + m, inner.end());
  const Rational lhs = (Rational(1) - q).pow(m) * binomial_weighted(shifted, n, Rational(1) - q, q);
  const Rational z = x + q - x * q;
  Rational rhs;
  for (long j = 0; j <= m; ++j) rhs += binomial(m, j) * (-q).pow(m - j) * bernoulli_sum(a, j + n, z);
  return {lhs, rhs};
}

Sides shifted_transform(const SequenceSpec& spec, long n, long m, const Rational& x, const Rational& q) {
  if (n < 0 || m < 0) throw DomainError("transform indices must be nonnegative");
  return shifted_transform(spec.terms(n + m + 1), n, m, x, q);
}

Rational q_bracket(const Rational& q, long m) {
  if (q == Rational(1)) throw DomainError("[q]_m needs q != 1");
  return (Rational(1) - q.pow(m)) / (Rational(1) - q);
}

Sides power_composition(const Terms& a, long n, long m, const Rational& q, PowerForm form) {
  if (m < 1) throw DomainError("power composition needs m >= 1");
  const Rational br = q_bracket(q, m);
  const Rational lhs = bernoulli_sum(a, n, q.pow(m));
  if (form == PowerForm::shifted_argument) {
    return {lhs, binomial_weighted(transform_row(a, n + 1, Rational(1) - br), n, Rational(1) - q, q)};
  }
  return {lhs, binomial_weighted(transform_row(a, n + 1, q), n, br, Rational(1) - br)};
}

Sides inverse_composition(const Terms& a, long n, const Rational& q, InverseForm form) {
  require_terms(a, n + 1);
  if (q == Rational(1)) throw DomainError("inverse relation needs q != 1");
  if (form == InverseForm::shifted_argument) {
    return {a[n], binomial_weighted(transform_row(a, n + 1, -q / (Rational(1) - q)), n, Rational(1) - q, q)};
  }
  const Rational sum = binomial_weighted(transform_row(a, n + 1, q), n, Rational(1), -q);
  return {a[n], sum / (Rational(1) - q).pow(n)};
}

Sides scaled_composition(const Terms& a, long n, const Rational& alpha, const Rational& q, ScaledForm form) {
  if (q == Rational(1)) throw DomainError("scaled composition needs q != 1");
  const Rational lhs = bernoulli_sum(a, n, (alpha + Rational(1)) * q);
  if (form == ScaledForm::shifted_argument) {
    return {lhs, binomial_weighted(transform_row(a, n + 1, alpha * q / (Rational(1) - q)), n, Rational(1) - q, q)};
  }
  const Rational sum =
      binomial_weighted(transform_row(a, n + 1, q), n, Rational(1) - (alpha + Rational(1)) * q, alpha * q);
  return {lhs, sum / (Rational(1) - q).pow(n)};
}

Sides chain_composition(const Terms& a, long n, const std::vector<Rational>& xs) {
  if (xs.empty()) throw DomainError("chain needs x_0");
  const Rational p = product(xs, 1);
  const Rational& x0 = xs[0];
  return {bernoulli_sum(a, n, Rational(1) - x0 * p),
          binomial_weighted(transform_row(a, n + 1, Rational(1) - p), n, x0, Rational(1) - x0)};
}

Sides chain_shifted(const Terms& a, long n, long m, const std::vector<Rational>& xs) {
  if (xs.empty()) throw DomainError("chain needs x_0");
  if (m < 0) throw DomainError("shift m must be nonnegative");
  const Rational p = product(xs, 1);
  const Rational& x0 = xs[0];
  const auto row = transform_row(a, n + m + 1, Rational(1) - p);
  const std::vector<Rational> shifted(row.begin() + m, row.end());
  const Rational lhs = x0.pow(m) * binomial_weighted(shifted, n, x0, Rational(1) - x0);
  Rational rhs;
  const Rational z = Rational(1) - x0 * p;
  for (long j = 0; j <= m; ++j) {
    rhs += sign_power(m - j) * binomial(m, j) * (Rational(1) - x0).pow(m - j) * bernoulli_sum(a, j + n, z);
  }
  return {lhs, rhs};
}

Sides alternating_transform(const Terms& a, long n, const Rational& q) {
  if (q.is_zero()) throw DomainError("alternating transform needs q != 0");
  require_terms(a, n + 1);
  Rational lhs;
  for (long k = 0; k <= n; ++k) lhs += sign_power(k) * a[k] * binomial(n, k) * (Rational(1) - q).pow(k);
  return {lhs, q.pow(n) * bernoulli_sum(a, n, Rational(1) / q)};
}

Sides alternating_transform_bis(const Terms& a, long n, const Rational& x, const Rational& q) {
  if (q.is_zero()) throw DomainError("alternating transform needs q != 0");
  const auto row = transform_row(a, n + 1, Rational(1) - x);
  Rational lhs;
  for (long k = 0; k <= n; ++k) lhs += sign_power(n - k) * row[k] * binomial(n, k) * (Rational(1) - q).pow(n - k);
  return {lhs, q.pow(n) * bernoulli_sum(a, n, Rational(1) - x / q)};
}

}  // namespace btx
