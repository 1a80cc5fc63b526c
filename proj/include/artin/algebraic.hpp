#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace artin {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// thrown when an operation is outside the supported fragment (documented per call site)
struct Unsupported : Error {
  using Error::Error;
};

long long chk_add(long long a, long long b);
long long chk_sub(long long a, long long b);
long long chk_mul(long long a, long long b);

// Z[x] helpers used to build cyclotomic polynomials
std::vector<long long> cyclotomic(int n);

/* The ring Z[theta], theta = 2cos(pi/L).  Every entry of a Coxeter cosine
   matrix with labels dividing L lives here, so linear algebra stays exact. */
class CycloField {
 public:
  explicit CycloField(int L);

  int L() const { return L_; }
  int degree() const { return degree_; }
  const std::vector<long long>& minpoly() const { return minpoly_; }
  long double theta() const { return theta_; }

 private:
  int L_ = 2;
  int degree_ = 1;
  std::vector<long long> minpoly_;  // monic, length degree_+1
  long double theta_ = 0.0L;
};

// element of Z[theta] in the power basis 1, theta, ..., theta^(d-1)
class AlgInt {
 public:
  AlgInt() = default;
  AlgInt(const CycloField* f, long long n);
  AlgInt(const CycloField* f, std::vector<long long> coords);

  const CycloField* field() const { return f_; }
  const std::vector<long long>& coords() const { return c_; }
  bool is_zero() const;

  AlgInt operator+(const AlgInt& o) const;
  AlgInt operator-(const AlgInt& o) const;
  AlgInt operator-() const;
  AlgInt operator*(const AlgInt& o) const;
  bool operator==(const AlgInt& o) const;
  bool operator!=(const AlgInt& o) const { return !(*this == o); }

  // -1, 0, +1; zero is detected exactly, nonzero sign numerically with a margin guard
  int sign() const;
  long double eval() const;
  std::string str() const;

 private:
  const CycloField* f_ = nullptr;
  std::vector<long long> c_;
};

// theta itself
AlgInt theta_elem(const CycloField* f);
// 2cos(pi/m) for a finite label m >= 2 dividing L
AlgInt two_cos_pi_over(const CycloField* f, int m);

// dets of the leading k x k blocks, k = 1..n, by exact subset-sum expansion
std::vector<AlgInt> leading_principal_minors(const std::vector<std::vector<AlgInt>>& a);

}  // namespace artin
