#ifndef WMOD_SCALAR_HPP
#define WMOD_SCALAR_HPP

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wmod {

struct ModeError : std::logic_error {
  using std::logic_error::logic_error;
};

/// q = re + im*i with rational parts. Exact field Q(i).
struct GaussianRational {
  mpq_class re{0}, im{0};

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  /// |q|^2 = re^2 + im^2, exact.
  mpq_class norm2() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational operator/(const GaussianRational& o) const;
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  std::string str() const;
};

/// Sum of terms q*sqrt(rad) with q in Q(i) and rad a positive rational.
/// Terms are merged whenever their radicands differ by a rational square, so
/// distinct surviving radicands are linearly independent over Q(i) and the zero
/// test is exact. Closed under +,-,*; division only by single-term values.
class ExactScalar {
 public:
  struct Term {
    GaussianRational q;
    mpq_class rad;  // > 0; 1 when the term is plain Gaussian-rational
  };

  ExactScalar() = default;
  static ExactScalar integer(long v);
  static ExactScalar rational(const mpq_class& v);
  static ExactScalar gaussian(const GaussianRational& q);
  /// sqrt(rad), rad > 0.
  static ExactScalar radical(const mpq_class& rad);

  bool is_zero() const { return terms_.empty(); }
  /// True when the value lies in Q(i) (no surviving radical).
  bool is_gaussian() const;
  /// Only valid when is_gaussian().
  GaussianRational as_gaussian() const;

  ExactScalar operator-() const;
  ExactScalar operator+(const ExactScalar& o) const;
  ExactScalar operator-(const ExactScalar& o) const { return *this + (-o); }
  ExactScalar operator*(const ExactScalar& o) const;
  /// Reciprocal; requires a single-term value.
  ExactScalar inverse() const;
  ExactScalar conj() const;
  bool operator==(const ExactScalar& o) const;

  std::complex<double> to_complex() const;
  std::string str() const;
  const std::vector<Term>& terms() const { return terms_; }

 private:
  void push_term(Term t);
  std::vector<Term> terms_;
};

/// Dual-path coefficient: exact (Gaussian rationals with quadratic radicals) or
/// complex double. The mode is chosen when a module is built; mixing modes in
/// arithmetic throws ModeError rather than converting silently.
class Scalar {
 public:
  Scalar() : exact_(ExactScalar{}) {}
  explicit Scalar(ExactScalar e) : exact_(std::move(e)) {}
  explicit Scalar(std::complex<double> f) : flt_(f) {}

  static Scalar exact_int(long v) { return Scalar(ExactScalar::integer(v)); }
  static Scalar flt(std::complex<double> z) { return Scalar(z); }

  bool is_exact() const { return exact_.has_value(); }
  bool is_zero() const;

  const ExactScalar& exact() const;
  std::complex<double> to_complex() const;
  double abs() const { return std::abs(to_complex()); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar conj() const;

  /// Exact value reinterpreted in float mode (explicit, never automatic).
  Scalar demote() const { return Scalar(to_complex()); }

  std::string str() const;

 private:
  void require_same_mode(const Scalar& o) const;
  std::optional<ExactScalar> exact_;
  std::complex<double> flt_{0.0, 0.0};
};

/// Parse "a" literals: decimal ("-1.5"), rational ("17/10"), i-suffixed complex
/// ("-1+0.5i", "i", "0.25i", "-1/2+1/3i"). Always exact.
GaussianRational parse_gaussian(const std::string& s);

/// True when q equals an integer >= 0.
bool is_nonneg_integer(const GaussianRational& q);
/// True when q is real and integral.
bool is_integer(const GaussianRational& q);

}  // namespace wmod

#endif
