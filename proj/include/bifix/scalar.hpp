#ifndef BIFIX_SCALAR_HPP
#define BIFIX_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>

#include "bifix/errors.hpp"

namespace bifix {

using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// Element a + b*sqrt(d) of the real quadratic field Q(sqrt d), d square-free.
// d == 0 encodes a plain rational. Mixed-field arithmetic is only allowed
// when one side is rational.
struct Quad {
  Rat a;
  Rat b;
  long d = 0;

  Quad() = default;
  Quad(Rat a_) : a(std::move(a_)) {}
  Quad(long v) : a(v) {}
  Quad(Rat a_, Rat b_, long d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {
    if (b == 0) d = 0;
  }

  bool rational() const { return d == 0; }

  static long join(const Quad& x, const Quad& y) {
    if (x.d == y.d) return x.d;
    if (x.d == 0) return y.d;
    if (y.d == 0) return x.d;
    throw Error("mixed quadratic fields");
  }

  friend Quad operator+(const Quad& x, const Quad& y) {
    return Quad(x.a + y.a, x.b + y.b, join(x, y));
  }
  friend Quad operator-(const Quad& x, const Quad& y) {
    return Quad(x.a - y.a, x.b - y.b, join(x, y));
  }
  friend Quad operator-(const Quad& x) { return Quad(-x.a, -x.b, x.d); }
  friend Quad operator*(const Quad& x, const Quad& y) {
    long d = join(x, y);
    return Quad(x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d);
  }
  friend Quad operator/(const Quad& x, const Quad& y) {
    long d = join(x, y);
    Rat n = y.a * y.a - y.b * y.b * d; // field norm of the divisor
    if (n == 0) throw Error("division by zero scalar");
    Quad conj(y.a, -y.b, d);
    Quad p = x * conj;
    return Quad(p.a / n, p.b / n, d);
  }
  friend bool operator==(const Quad& x, const Quad& y) {
    return x.a == y.a && x.b == y.b && join(x, y) >= 0;
  }
  friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }

  double value() const { return to_double(a) + to_double(b) * std::sqrt(double(d)); }

  std::string str() const {
    std::ostringstream os;
    if (b == 0) {
      os << a;
      return os.str();
    }
    os << a;
    if (b > 0) os << "+";
    os << b << "*sqrt" << d;
    return os.str();
  }
};

// Scalar of a probability distribution: exact field element or a float with
// a declared comparison tolerance.
class Scalar {
public:
  Scalar() : exact_(true), q_(Rat(0)) {}
  Scalar(Quad q) : exact_(true), q_(std::move(q)) {}
  Scalar(Rat r) : exact_(true), q_(std::move(r)) {}
  static Scalar approx(double x) {
    Scalar s;
    s.exact_ = false;
    s.x_ = x;
    return s;
  }
  static Scalar integer(long v) { return Scalar(Rat(v)); }

  bool exact() const { return exact_; }
  const Quad& quad() const {
    if (!exact_) throw Error("scalar is not exact");
    return q_;
  }
  double value() const { return exact_ ? q_.value() : x_; }

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    if (x.exact_ && y.exact_) return Scalar(x.q_ + y.q_);
    return approx(x.value() + y.value());
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) {
    if (x.exact_ && y.exact_) return Scalar(x.q_ - y.q_);
    return approx(x.value() - y.value());
  }
  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    if (x.exact_ && y.exact_) return Scalar(x.q_ * y.q_);
    return approx(x.value() * y.value());
  }
  friend Scalar operator/(const Scalar& x, const Scalar& y) {
    if (x.exact_ && y.exact_) return Scalar(x.q_ / y.q_);
    return approx(x.value() / y.value());
  }

  // Exact scalars compare exactly; anything involving a float compares
  // within tol.
  bool equals(const Scalar& o, double tol = 1e-9) const {
    if (exact_ && o.exact_) return q_ == o.q_;
    return std::fabs(value() - o.value()) <= tol;
  }

  std::string str() const {
    if (exact_) return q_.str();
    std::ostringstream os;
    os.precision(12);
    os << x_;
    return os.str();
  }

private:
  bool exact_;
  Quad q_;
  double x_ = 0.0;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace bifix

#endif
