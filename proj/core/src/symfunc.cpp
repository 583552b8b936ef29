#include "splab/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "splab/errors.hpp"

namespace splab {

SymPoly::SymPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw std::invalid_argument("a polynomial needs at least one variable");
}

SymPoly SymPoly::constant(int nvars, BigInt c) {
  SymPoly p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

SymPoly SymPoly::monomial(Exponent e, BigInt c) {
  SymPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

BigInt SymPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SymPoly::add_term(const Exponent& e, const BigInt& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("exponent vector has the wrong number of variables");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("variable counts differ");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("variable counts differ");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable counts differ");
  SymPoly out(a.nvars_);
  SymPoly::Exponent e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool SymPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  auto degree = [](const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); };
  const int d = degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return degree(t.first) == d; });
}

bool SymPoly::is_symmetric() const {
  for (const auto& [e, c] : terms_) {
    if (nvars_ <= 3) {
      Exponent p = e;
      std::sort(p.begin(), p.end());
      do {
        if (coeff(p) != c) return false;
      } while (std::next_permutation(p.begin(), p.end()));
    } else {
      for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        Exponent p = e;
        std::swap(p[i], p[i + 1]);
        if (coeff(p) != c) return false;
      }
    }
  }
  return true;
}

std::string to_string(const SymPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  // Lex-greatest monomial first.
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += mono;
    }
  }
  return out;
}

namespace {

SymPoly generating_function(const SkewShape& shape, int n, FillMode mode) {
  SymPoly out(n);
  SymPoly::Exponent e(static_cast<std::size_t>(n));
  for_each_tableau(shape, n, mode, [&](const ShiftedTableau& t) {
    std::fill(e.begin(), e.end(), 0);
    for (const auto& row : t.rows())
      for (Letter l : row) ++e[static_cast<std::size_t>(l.value - 1)];
    out.add_term(e, 1);
  });
  return out;
}

// P_lambda in n variables, shared across calls.
const SymPoly& cached_P(const StrictPartition& shape, int n) {
  static std::mutex mu;
  static std::map<std::pair<StrictPartition, int>, SymPoly> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({shape, n});
    if (it != cache.end()) return it->second;
  }
  SymPoly p = generating_function(SkewShape(shape), n, FillMode::semistandard);
  std::lock_guard lock(mu);
  return cache.try_emplace({shape, n}, std::move(p)).first->second;
}

}  // namespace

SymPoly schur_P_poly(const SkewShape& shape, int n) {
  return generating_function(shape, n, FillMode::semistandard);
}

SymPoly schur_P_poly(const StrictPartition& shape, int n) { return cached_P(shape, n); }

SymPoly q_tableau_generating_function(const SkewShape& shape, int n) {
  return generating_function(shape, n, FillMode::qtableau);
}

SymPoly schur_Q_poly(const SkewShape& shape, int n) {
  SymPoly doubled = schur_P_poly(shape, n) * (BigInt(1) << diagonal_count(shape));
  SymPoly direct = q_tableau_generating_function(shape, n);
  if (!(doubled == direct))
    throw MismatchError("Q(" + to_string(shape) + ") differs between the two computations");
  return direct;
}

CoeffMap expand_in_P(const SymPoly& f) {
  if (!f.is_homogeneous()) throw NotHomogeneous("polynomial is not homogeneous");
  if (!f.is_symmetric()) throw NotSymmetric("polynomial is not symmetric");
  CoeffMap out;
  SymPoly rest = f;
  while (!rest.is_zero()) {
    const auto& [alpha, c] = *rest.terms().rbegin();
    std::vector<int> parts;
    for (int a : alpha)
      if (a > 0) parts.push_back(a);
    if (!is_strict_partition(parts) || !std::is_sorted(alpha.rbegin(), alpha.rend()))
      throw NotInSpan("leading monomial is not indexed by a strict partition");
    StrictPartition lambda(parts);
    const BigInt coef = c;
    rest -= cached_P(lambda, f.nvars()) * coef;
    out.emplace(std::move(lambda), coef);
  }
  return out;
}

CoeffMap skew_P_expansion(const StrictPartition& nu, const StrictPartition& mu) {
  const int n = std::max(1, nu.length());
  return expand_in_P(schur_P_poly(make_skew(nu, mu), n));
}

CoeffMap b_coeffs(const StrictPartition& nu, const StrictPartition& mu) {
  const int diag = nu.length() - mu.length();
  CoeffMap out;
  for (auto& [lambda, c] : skew_P_expansion(nu, mu)) {
    // P_{nu/mu} = sum b 2^{l(lambda) - diag} P_lambda.
    const int shift = lambda.length() - diag;
    if (shift < 0) throw NotInSpan("skew expansion has a term of too short length");
    const BigInt den = BigInt(1) << shift;
    if (c % den != 0) throw NotInSpan("skew expansion coefficient is not divisible as expected");
    out.emplace(lambda, c / den);
  }
  return out;
}

}  // namespace splab
