#ifndef BIFIX_MEASURE_HPP
#define BIFIX_MEASURE_HPP

#include <cmath>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "bifix/factor_set.hpp"
#include "bifix/scalar.hpp"

namespace bifix {

namespace detail {

// Characteristic polynomial coefficients of an integer matrix
// (monic, p(x) = x^n + c[n-1] x^{n-1} + ... + c[0]) by Faddeev-LeVerrier.
inline std::vector<Rat> char_poly(const std::vector<std::vector<long>>& m) {
  size_t n = m.size();
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, 0)), N = M;
  std::vector<Rat> c(n + 1, 0);
  c[n] = 1;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) M[i][j] = m[i][j];
  std::vector<std::vector<Rat>> Ak(n, std::vector<Rat>(n, 0));
  for (size_t i = 0; i < n; ++i) Ak[i][i] = 1; // identity
  for (size_t k = 1; k <= n; ++k) {
    // Ak <- M * Ak
    std::vector<std::vector<Rat>> P(n, std::vector<Rat>(n, 0));
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < n; ++l)
        for (size_t j = 0; j < n; ++j) P[i][j] += M[i][l] * Ak[l][j];
    Ak = P;
    Rat tr = 0;
    for (size_t i = 0; i < n; ++i) tr += Ak[i][i];
    Rat ck = -tr / int(k);
    c[n - k] = ck;
    for (size_t i = 0; i < n; ++i) Ak[i][i] += ck;
  }
  return c;
}

inline double power_iteration_radius(const std::vector<std::vector<long>>& m, double tol = 1e-12) {
  size_t n = m.size();
  std::vector<double> x(n, 1.0 / n);
  double lam = 0;
  for (int it = 0; it < 200000; ++it) {
    std::vector<double> y(n, 0.0);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) y[j] += x[i] * m[i][j];
    double s = 0;
    for (double v : y) s += v;
    for (double& v : y) v /= s;
    if (std::fabs(s - lam) < tol) return s;
    lam = s;
    x = y;
  }
  return lam;
}

// Exact Perron eigenvalue of a primitive integer matrix when it is rational
// or lives in a real quadratic field; nullopt otherwise.
inline std::optional<Quad> exact_perron(const std::vector<std::vector<long>>& m) {
  double approx = power_iteration_radius(m);
  auto c = char_poly(m);
  // Deflate zero roots (the Perron root of a primitive matrix is >= 1).
  while (c.size() > 1 && c[0] == 0) c.erase(c.begin());
  size_t deg = c.size() - 1;
  // Rational candidates: integer divisors of the constant term.
  boost::multiprecision::cpp_int c0 = boost::multiprecision::numerator(c[0] < 0 ? -c[0] : c[0]);
  if (c0 > 1000000) c0 = 0; // letter matrices are tiny; skip absurd scans
  for (boost::multiprecision::cpp_int d = 1; d <= c0; ++d) {
    if (c0 % d != 0) continue;
    Rat x(d);
    Rat v = 0;
    for (size_t i = deg + 1; i-- > 0;) v = v * x + c[i];
    if (v == 0 && std::fabs(to_double(x) - approx) < 1e-6) return Quad(x);
  }
  if (deg == 2) {
    // x^2 + c1 x + c0: larger root (-c1 + sqrt(c1^2 - 4 c0)) / 2.
    Rat disc = c[1] * c[1] - 4 * c[0];
    if (disc > 0) {
      auto num = boost::multiprecision::numerator(disc);
      auto den = boost::multiprecision::denominator(disc);
      if (den == 1 && num.convert_to<double>() < 1e15) {
        long D = num.convert_to<long>();
        long sq = 1;
        for (long f = 2; f * f <= D; ++f)
          while (D % (f * f) == 0) {
            D /= f * f;
            sq *= f;
          }
        if (D > 1) {
          Quad lambda(-c[1] / 2, Rat(sq) / 2, D);
          if (std::fabs(lambda.value() - approx) < 1e-6) return lambda;
        } else {
          // perfect square discriminant: rational root
          Quad lambda((-c[1] + sq) / 2);
          if (std::fabs(lambda.value() - approx) < 1e-6) return lambda;
        }
      }
    }
  }
  return std::nullopt;
}

// Solve A x = 0 for a matrix with one-dimensional kernel.
inline std::vector<Quad> kernel_vector(std::vector<std::vector<Quad>> a) {
  size_t n = a.size();
  std::vector<long> pivot_of_col(n, -1);
  size_t row = 0;
  for (size_t col = 0; col < n && row < n; ++col) {
    size_t p = row;
    while (p < n && a[p][col] == Quad(Rat(0))) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    Quad inv = Quad(Rat(1)) / a[row][col];
    for (size_t j = col; j < n; ++j) a[row][j] = a[row][j] * inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == row) continue;
      Quad f = a[i][col];
      if (f == Quad(Rat(0))) continue;
      for (size_t j = col; j < n; ++j) a[i][j] = a[i][j] - f * a[row][j];
    }
    pivot_of_col[col] = long(row);
    ++row;
  }
  long free_col = -1;
  for (size_t col = 0; col < n; ++col)
    if (pivot_of_col[col] < 0) {
      free_col = long(col);
      break;
    }
  if (free_col < 0) throw Error("eigen solve: kernel is trivial");
  std::vector<Quad> x(n, Quad(Rat(0)));
  x[free_col] = Quad(Rat(1));
  for (size_t col = 0; col < n; ++col) {
    long r = pivot_of_col[col];
    if (r < 0) continue;
    x[col] = -a[r][free_col];
  }
  return x;
}

} // namespace detail

class Distribution {
public:
  enum class Flavor { right, left, invariant };

  Distribution(Flavor flavor, size_t depth, bool exact)
      : flavor_(flavor), depth_(depth), exact_(exact) {}

  Flavor flavor() const { return flavor_; }
  size_t depth() const { return depth_; }
  bool exact() const { return exact_; }

  void set(const Word& w, Scalar v) { values_[w] = std::move(v); }

  bool has(const Word& w) const { return values_.count(w) > 0; }

  const Scalar& at(const Word& w) const {
    if (w.size() > depth_) throw WindowError("word beyond distribution depth");
    auto it = values_.find(w);
    if (it == values_.end()) throw PreconditionError("word is not in the distribution's factor set");
    return it->second;
  }

  const std::unordered_map<Word, Scalar>& values() const { return values_; }

private:
  Flavor flavor_;
  size_t depth_;
  bool exact_;
  std::unordered_map<Word, Scalar> values_;
};

// The positive right distribution pi(w) = 1 / (d_0 d_1 ... d_{n-1}) given
// by the right branching degrees along w.
inline Distribution uniform_right_distribution(const FactorSet& f) {
  Distribution d(Distribution::Flavor::right, f.depth(), true);
  d.set(Word(), Scalar(Rat(1)));
  for (size_t l = 0; l + 1 <= f.depth(); ++l)
    for (const Word& w : f.words_of_length(l)) {
      size_t ord = f.right_order(w);
      if (ord == 0) throw PreconditionError("factor set is not right essential within the window");
      Scalar v = d.at(w) / Scalar(Rat(ord));
      for (char c : f.alphabet().symbols()) {
        Word wa = w + c;
        if (f.contains(wa)) d.set(wa, v);
      }
    }
  return d;
}

namespace detail {

struct BlockMatrix {
  std::vector<Word> states;
  std::vector<std::vector<long>> counts; // counts[src][dst]
  size_t power = 1;                      // the substitution power used
};

// l-block presentation of the substitution: the image of a block w is the
// sequence of length-l windows of f^m(w) starting inside f^m(w[0]).
inline BlockMatrix block_matrix(const FactorSet& f, const Substitution& sub, size_t l) {
  BlockMatrix bm;
  bm.states = f.words_of_length(l);
  std::map<Word, size_t> index;
  for (size_t i = 0; i < bm.states.size(); ++i) index[bm.states[i]] = i;
  size_t n = bm.states.size();

  Substitution power = sub;
  bm.power = 1;
  auto long_enough = [&](const Substitution& g) {
    for (const Word& w : bm.states)
      if (g.apply(w).size() + 1 < g.of(w[0]).size() + l) return false;
    return true;
  };
  while (!long_enough(power)) {
    Substitution next;
    for (const auto& [c, img] : power.image) next.image[c] = sub.apply(img);
    power = next;
    ++bm.power;
    if (bm.power > 64) throw Error("block substitution power runaway");
  }

  bm.counts.assign(n, std::vector<long>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    const Word& w = bm.states[i];
    Word img = power.apply(w);
    size_t head = power.of(w[0]).size();
    for (size_t pos = 0; pos < head; ++pos) {
      Word window = img.substr(pos, l);
      auto it = index.find(window);
      if (it == index.end()) throw Error("block image leaves the factor set");
      bm.counts[i][it->second]++;
    }
  }
  return bm;
}

inline std::vector<double> float_left_perron(const std::vector<std::vector<long>>& m, double tol) {
  size_t n = m.size();
  std::vector<double> x(n, 1.0 / n);
  for (int it = 0; it < 500000; ++it) {
    std::vector<double> y(n, 0.0);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) y[j] += x[i] * m[i][j];
    double s = 0;
    for (double v : y) s += v;
    for (double& v : y) v /= s;
    double delta = 0;
    for (size_t i = 0; i < n; ++i) delta = std::max(delta, std::fabs(y[i] - x[i]));
    x = y;
    if (delta < tol) return x;
  }
  throw Error("power iteration did not converge");
}

} // namespace detail

// The unique invariant probability distribution of a primitive substitution
// fix-point: per length, the normalized left Perron eigenvector of the
// block substitution matrix. Values are exact (rationals, or a real
// quadratic field) whenever the Perron eigenvalue has degree <= 2, floats
// with the given tolerance otherwise.
inline Distribution invariant_distribution(const FactorSet& f, double tol = 1e-9) {
  const WordGenerator& gen = f.generator();
  if (gen.kind() != WordGenerator::Kind::fixpoint)
    throw PreconditionError("invariant distribution needs a substitution fix-point generator");
  const Substitution& sub = gen.substitution();
  if (!sub.is_primitive()) throw PreconditionError("substitution is not primitive");

  auto letters = sub.incidence_matrix(f.alphabet());
  std::optional<Quad> lambda = detail::exact_perron(letters);

  Distribution d(Distribution::Flavor::invariant, f.depth(), lambda.has_value());
  d.set(Word(), lambda ? Scalar(Rat(1)) : Scalar::approx(1.0));

  for (size_t l = 1; l <= f.depth(); ++l) {
    auto bm = detail::block_matrix(f, sub, l);
    size_t n = bm.states.size();
    if (lambda) {
      Quad lam = *lambda;
      for (size_t p = 1; p < bm.power; ++p) lam = lam * *lambda;
      std::vector<std::vector<Quad>> a(n, std::vector<Quad>(n, Quad(Rat(0))));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          a[i][j] = Quad(Rat(bm.counts[j][i])); // transpose: left eigenvector
          if (i == j) a[i][j] = a[i][j] - lam;
        }
      auto x = detail::kernel_vector(a);
      Quad sum(Rat(0));
      for (const Quad& v : x) sum = sum + v;
      for (size_t i = 0; i < n; ++i) {
        Quad v = x[i] / sum;
        if (v.value() < -1e-12) throw Error("Perron eigenvector has a negative entry");
        d.set(bm.states[i], Scalar(v));
      }
    } else {
      auto x = detail::float_left_perron(bm.counts, tol);
      for (size_t i = 0; i < n; ++i) d.set(bm.states[i], Scalar::approx(x[i]));
    }
  }
  return d;
}

template <typename Words>
Scalar set_probability(const Distribution& d, const Words& xs) {
  Scalar s = d.exact() ? Scalar(Rat(0)) : Scalar::approx(0.0);
  for (const Word& x : xs) s = s + d.at(x);
  return s;
}

template <typename Words>
Scalar average_length(const Distribution& d, const Words& xs, double tol = 1e-9) {
  Scalar total = set_probability(d, xs);
  if (!total.equals(Scalar(Rat(1)), tol))
    throw PreconditionError("average length needs pi(X) = 1");
  Scalar s = d.exact() ? Scalar(Rat(0)) : Scalar::approx(0.0);
  for (const Word& x : xs) s = s + Scalar(Rat(x.size())) * d.at(x);
  return s;
}

// Occurrence frequencies of length-l factors in a prefix of length n; the
// empirical cross-check for invariant distributions.
inline std::map<Word, double> empirical_frequencies(const WordGenerator& gen, size_t l, size_t n) {
  Word p = gen.prefix(n);
  std::map<Word, double> freq;
  if (p.size() < l) return freq;
  size_t windows = p.size() - l + 1;
  for (size_t i = 0; i < windows; ++i) freq[p.substr(i, l)] += 1.0;
  for (auto& [w, v] : freq) v /= double(windows);
  return freq;
}

} // namespace bifix

#endif
