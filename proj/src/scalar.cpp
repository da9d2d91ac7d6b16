#include "wmod/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wmod {

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
  mpq_class n2 = o.norm2();
  if (n2 == 0) throw std::domain_error("division by zero Gaussian rational");
  GaussianRational num = *this * o.conj();
  return {num.re / n2, num.im / n2};
}

std::string GaussianRational::str() const {
  std::ostringstream os;
  if (im == 0) {
    os << re.get_str();
  } else {
    os << re.get_str() << (im > 0 ? "+" : "") << im.get_str() << "i";
  }
  return os.str();
}

namespace {

bool rational_is_square(const mpq_class& r, mpq_class* root) {
  if (r < 0) return false;
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    if (root) {
      mpz_class rn, rd;
      mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
      *root = mpq_class(rn, rd);
      root->canonicalize();
    }
    return true;
  }
  return false;
}

}  // namespace

ExactScalar ExactScalar::integer(long v) { return rational(mpq_class(v)); }

ExactScalar ExactScalar::rational(const mpq_class& v) {
  return gaussian(GaussianRational{v, 0});
}

ExactScalar ExactScalar::gaussian(const GaussianRational& q) {
  ExactScalar s;
  s.push_term({q, mpq_class(1)});
  return s;
}

ExactScalar ExactScalar::radical(const mpq_class& rad) {
  if (rad <= 0) throw std::domain_error("radicand must be positive");
  ExactScalar s;
  s.push_term({GaussianRational{1, 0}, rad});
  return s;
}

void ExactScalar::push_term(Term t) {
  if (t.q.is_zero()) return;
  if (t.rad <= 0) throw std::domain_error("radicand must be positive");
  mpq_class root;
  if (rational_is_square(t.rad, &root)) {
    t.q = t.q * GaussianRational{root, 0};
    t.rad = 1;
  }
  for (auto& u : terms_) {
    // merge when rad/u.rad is a rational square s^2: q*sqrt(rad) = q*s*sqrt(u.rad)
    mpq_class ratio = t.rad / u.rad;
    mpq_class s;
    if (rational_is_square(ratio, &s)) {
      u.q = u.q + t.q * GaussianRational{s, 0};
      if (u.q.is_zero()) {
        u = terms_.back();
        terms_.pop_back();
      }
      return;
    }
  }
  terms_.push_back(std::move(t));
}

bool ExactScalar::is_gaussian() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].rad == 1);
}

GaussianRational ExactScalar::as_gaussian() const {
  if (terms_.empty()) return {};
  if (!is_gaussian()) throw std::domain_error("value carries a radical: " + str());
  return terms_[0].q;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r = *this;
  for (auto& t : r.terms_) t.q = -t.q;
  return r;
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
  ExactScalar r = *this;
  for (const auto& t : o.terms_) r.push_term(t);
  return r;
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  ExactScalar r;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) r.push_term({a.q * b.q, a.rad * b.rad});
  return r;
}

ExactScalar ExactScalar::inverse() const {
  if (terms_.empty()) throw std::domain_error("division by exact zero");
  if (terms_.size() != 1)
    throw std::domain_error("reciprocal of multi-radical value unsupported: " + str());
  // 1/(q*sqrt(r)) = (1/(q*r))*sqrt(r)
  const Term& t = terms_[0];
  ExactScalar r;
  r.push_term({GaussianRational{1, 0} / (t.q * GaussianRational{t.rad, 0}), t.rad});
  return r;
}

ExactScalar ExactScalar::conj() const {
  ExactScalar r = *this;
  for (auto& t : r.terms_) t.q = t.q.conj();
  return r;
}

bool ExactScalar::operator==(const ExactScalar& o) const { return (*this - o).is_zero(); }

std::complex<double> ExactScalar::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  for (const auto& t : terms_) z += t.q.to_complex() * std::sqrt(t.rad.get_d());
  return z;
}

std::string ExactScalar::str() const {
  if (terms_.empty()) return "0";
  // canonical order for printing/keys
  std::vector<const Term*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](const Term* a, const Term* b) {
    if (a->rad != b->rad) return a->rad < b->rad;
    return false;
  });
  std::ostringstream os;
  bool first = true;
  for (const Term* t : ts) {
    if (!first) os << " + ";
    first = false;
    os << '(' << t->q.str() << ')';
    if (t->rad != 1) os << "*sqrt(" << t->rad.get_str() << ')';
  }
  return os.str();
}

bool Scalar::is_zero() const {
  return exact_ ? exact_->is_zero() : (flt_ == std::complex<double>{0.0, 0.0});
}

const ExactScalar& Scalar::exact() const {
  if (!exact_) throw ModeError("float-mode scalar has no exact value");
  return *exact_;
}

std::complex<double> Scalar::to_complex() const {
  return exact_ ? exact_->to_complex() : flt_;
}

void Scalar::require_same_mode(const Scalar& o) const {
  if (is_exact() != o.is_exact())
    throw ModeError("mixed exact/float scalar arithmetic");
}

Scalar Scalar::operator-() const {
  return exact_ ? Scalar(-*exact_) : Scalar(-flt_);
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_mode(o);
  return exact_ ? Scalar(*exact_ + *o.exact_) : Scalar(flt_ + o.flt_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_mode(o);
  return exact_ ? Scalar(*exact_ - *o.exact_) : Scalar(flt_ - o.flt_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_mode(o);
  return exact_ ? Scalar(*exact_ * *o.exact_) : Scalar(flt_ * o.flt_);
}

Scalar Scalar::conj() const {
  return exact_ ? Scalar(exact_->conj()) : Scalar(std::conj(flt_));
}

std::string Scalar::str() const {
  if (exact_) return exact_->str();
  std::ostringstream os;
  os << flt_.real() << (flt_.imag() < 0 ? "" : "+") << flt_.imag() << "i";
  return os.str();
}

namespace {

mpq_class parse_rational_literal(std::string tok) {
  if (!tok.empty() && tok.front() == '+') tok = tok.substr(1);
  if (tok.empty()) throw std::invalid_argument("empty numeric literal");
  try {
    auto slash = tok.find('/');
    if (slash != std::string::npos) {
      mpq_class q(tok);
      q.canonicalize();
      return q;
    }
    auto dot = tok.find('.');
    if (dot == std::string::npos) return mpq_class(tok);
    std::string digits = tok.substr(0, dot) + tok.substr(dot + 1);
    std::size_t places = tok.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("bad decimal literal: " + tok);
    mpz_class num(digits);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, places);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument& e) {
    // GMP reports bad strings as bare "mpq_set_str"/"mpz_set_str"
    std::string what = e.what();
    if (what.find("set_str") != std::string::npos)
      throw std::invalid_argument("bad numeric literal: " + tok);
    throw;
  }
}

}  // namespace

GaussianRational parse_gaussian(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty scalar literal");

  // split at the last +/- that is not the leading sign
  auto split_at = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-') split_at = i;

  auto parse_part = [](std::string part, bool imag) -> mpq_class {
    if (imag) {
      if (part.empty() || part.back() != 'i')
        throw std::invalid_argument("imaginary part must end in i");
      part.pop_back();
      if (part.empty() || part == "+") part = "1";
      else if (part == "-") part = "-1";
    }
    return parse_rational_literal(part);
  };

  bool has_i = s.back() == 'i';
  if (!has_i) return {parse_rational_literal(s), 0};
  if (split_at == std::string::npos) return {0, parse_part(s, true)};
  return {parse_rational_literal(s.substr(0, split_at)), parse_part(s.substr(split_at), true)};
}

bool is_integer(const GaussianRational& q) {
  return q.im == 0 && q.re.get_den() == 1;
}

bool is_nonneg_integer(const GaussianRational& q) {
  return is_integer(q) && q.re >= 0;
}

}  // namespace wmod
