#include "wmod/multi_index.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wmod {

int degree(const MultiIndex& k) {
  int d = 0;
  for (int v : k) d += v;
  return d;
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
  int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

std::string to_string(const MultiIndex& k) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) os << ',';
    os << k[i];
  }
  os << ')';
  return os.str();
}

MultiIndex parse_multi_index(const std::string& s, int n) {
  MultiIndex k;
  std::string body = s;
  if (!body.empty() && body.front() == '(') body = body.substr(1, body.size() - 2);
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (v < 0) throw std::invalid_argument("multi-index entries must be nonnegative: " + s);
    k.push_back(v);
  }
  if (static_cast<int>(k.size()) != n)
    throw std::invalid_argument("multi-index arity mismatch: expected " + std::to_string(n) +
                                " entries in " + s);
  return k;
}

namespace {
void fill_level(int n, int d, MultiIndex& cur, int pos, std::vector<MultiIndex>& out) {
  if (pos == n - 1) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (int v = d; v >= 0; --v) {
    cur[pos] = v;
    fill_level(n, d - v, cur, pos + 1, out);
  }
}
}  // namespace

BasisWindow::BasisWindow(int n, int N) : n_(n), N_(N) {
  if (n < 1) throw std::invalid_argument("rank parameter n must be >= 1");
  if (N < 0) throw std::invalid_argument("window bound N must be >= 0");
  MultiIndex cur(n, 0);
  for (int d = 0; d <= N; ++d) fill_level(n, d, cur, 0, labels_);
  position_.reserve(labels_.size() * 2);
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) position_[labels_[i]] = i;
}

int BasisWindow::position(const MultiIndex& k) const {
  auto it = position_.find(k);
  return it == position_.end() ? -1 : it->second;
}

int BasisWindow::level_dimension(int d) const {
  if (d < 0 || d > N_) return 0;
  return static_cast<int>(binomial(d + n_ - 1, n_ - 1));
}

int BasisWindow::cumulative_dimension(int d) const {
  if (d < 0) return 0;
  d = std::min(d, N_);
  return static_cast<int>(binomial(d + n_, n_));
}

double binomial(int a, int b) {
  if (b < 0 || b > a) return 0.0;
  b = std::min(b, a - b);
  double r = 1.0;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace wmod
