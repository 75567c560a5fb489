// Finite groups as dense element tables built from pluggable backends.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace grouplab {

// ERRORS

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};
struct InvalidBackend : Error {
  explicit InvalidBackend(const std::string& msg) : Error(msg) {}
};
struct InvalidAction : Error {
  explicit InvalidAction(const std::string& msg) : Error(msg) {}
};
struct NotNormal : Error {
  explicit NotNormal(const std::string& msg) : Error(msg) {}
};
struct PrimeDoesNotDivide : Error {
  explicit PrimeDoesNotDivide(const std::string& msg) : Error(msg) {}
};
struct TooLarge : Error {
  explicit TooLarge(const std::string& msg) : Error(msg) {}
};
struct TrivialGroup : Error {
  explicit TrivialGroup(const std::string& msg) : Error(msg) {}
};
// Violated internal invariant (Lagrange check, normality of P[G], ...).
struct InternalError : Error {
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

[[noreturn]] inline void internal_fail(const std::string& msg) { throw InternalError(msg); }

// SMALL NUMBER THEORY

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ascending (prime, multiplicity) pairs
inline std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_square_free(long n) {
  for (auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

// divisible by p^2 for at most one prime p
inline bool is_almost_square_free(long n) {
  int squared = 0;
  for (auto& [p, e] : factorize(n))
    if (e > 1) ++squared;
  return squared <= 1;
}

inline bool is_prime_power(long n) {
  auto f = factorize(n);
  return f.size() == 1;
}

inline long int_pow(long base, int exp) {
  long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// CANONICAL KEYS
//
// Every backend encodes an element as a flat int vector; keys are injective
// over the group, so equality of elements is equality of keys.

using Key = std::vector<int32_t>;

struct KeyHash {
  size_t operator()(const Key& k) const {
    size_t h = 1469598103934665603ull;
    for (int32_t v : k) {
      h ^= static_cast<size_t>(static_cast<uint32_t>(v));
      h *= 1099511628211ull;
    }
    return h;
  }
};

// BACKENDS

constexpr uint64_t kDefaultElementBudget = 2'000'000;
// Products are memoized into a full Cayley table up to this order.
constexpr int kMulMemoCap = 4096;
// Cayley-table axioms are validated exhaustively up to this order.
constexpr int kCayleyValidationCap = 256;

class Backend {
 public:
  virtual ~Backend() = default;
  virtual std::string describe() const = 0;
  virtual Key identity() const = 0;
  virtual std::vector<Key> generator_keys() const = 0;
  virtual Key mul(const Key& a, const Key& b) const = 0;
  virtual Key inv(const Key& a) const = 0;
  // exact order when cheaply known in advance, 0 otherwise
  virtual uint64_t known_order() const { return 0; }
};

using BackendPtr = std::shared_ptr<const Backend>;

// Bijections of {0..degree-1}; key = image array, composition left-to-right.
class PermutationBackend : public Backend {
 public:
  PermutationBackend(int degree, std::vector<std::vector<int>> generators)
      : degree_(degree), gens_(std::move(generators)) {
    if (degree_ < 1) throw InvalidBackend("permutation degree must be >= 1");
    for (const auto& g : gens_) {
      if (static_cast<int>(g.size()) != degree_)
        throw InvalidBackend("generator length does not match degree");
      std::vector<char> seen(degree_, 0);
      for (int v : g) {
        if (v < 0 || v >= degree_ || seen[v])
          throw InvalidBackend("generator is not a bijection on {0..degree-1}");
        seen[v] = 1;
      }
    }
  }

  std::string describe() const override { return "permutation(deg " + std::to_string(degree_) + ")"; }

  Key identity() const override {
    Key k(degree_);
    std::iota(k.begin(), k.end(), 0);
    return k;
  }

  std::vector<Key> generator_keys() const override {
    std::vector<Key> out;
    for (const auto& g : gens_) out.emplace_back(g.begin(), g.end());
    return out;
  }

  Key mul(const Key& a, const Key& b) const override {
    Key c(degree_);
    for (int i = 0; i < degree_; ++i) c[i] = b[a[i]];
    return c;
  }

  Key inv(const Key& a) const override {
    Key c(degree_);
    for (int i = 0; i < degree_; ++i) c[a[i]] = i;
    return c;
  }

 private:
  int degree_;
  std::vector<std::vector<int>> gens_;
};

// dim x dim matrices over Z_p; key = row-major entries.
class MatrixBackend : public Backend {
 public:
  MatrixBackend(int p, int dim, std::vector<std::vector<int>> generators, bool unit_det)
      : p_(p), dim_(dim), gens_(std::move(generators)), unit_det_(unit_det) {
    if (!is_prime(p_)) throw InvalidBackend("matrix modulus must be prime");
    if (dim_ < 1) throw InvalidBackend("matrix dimension must be >= 1");
    for (auto& g : gens_) {
      if (static_cast<int>(g.size()) != dim_ * dim_)
        throw InvalidBackend("generator has wrong number of entries");
      for (int& v : g) v = ((v % p_) + p_) % p_;
      int d = det(g);
      if (d == 0) throw InvalidBackend("generator matrix is singular mod p");
      if (unit_det_ && d != 1) throw InvalidBackend("generator determinant is not 1 mod p");
    }
  }

  std::string describe() const override {
    return (unit_det_ ? "SL(" : "GL(") + std::to_string(dim_) + "," + std::to_string(p_) + ") subgroup";
  }

  Key identity() const override {
    Key k(dim_ * dim_, 0);
    for (int i = 0; i < dim_; ++i) k[i * dim_ + i] = 1;
    return k;
  }

  std::vector<Key> generator_keys() const override {
    std::vector<Key> out;
    for (const auto& g : gens_) out.emplace_back(g.begin(), g.end());
    return out;
  }

  Key mul(const Key& a, const Key& b) const override {
    Key c(dim_ * dim_, 0);
    for (int i = 0; i < dim_; ++i)
      for (int k = 0; k < dim_; ++k) {
        int aik = a[i * dim_ + k];
        if (aik == 0) continue;
        for (int j = 0; j < dim_; ++j)
          c[i * dim_ + j] = (c[i * dim_ + j] + aik * b[k * dim_ + j]) % p_;
      }
    return c;
  }

  Key inv(const Key& a) const override {
    // Gauss-Jordan over Z_p
    int n = dim_;
    std::vector<int> m(a.begin(), a.end());
    Key r(n * n, 0);
    for (int i = 0; i < n; ++i) r[i * n + i] = 1;
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      for (int row = col; row < n; ++row)
        if (m[row * n + col] != 0) { pivot = row; break; }
      if (pivot < 0) internal_fail("singular matrix in group");
      if (pivot != col)
        for (int j = 0; j < n; ++j) {
          std::swap(m[pivot * n + j], m[col * n + j]);
          std::swap(r[pivot * n + j], r[col * n + j]);
        }
      int s = mod_inverse(m[col * n + col]);
      for (int j = 0; j < n; ++j) {
        m[col * n + j] = m[col * n + j] * s % p_;
        r[col * n + j] = r[col * n + j] * s % p_;
      }
      for (int row = 0; row < n; ++row) {
        if (row == col) continue;
        int f = m[row * n + col];
        if (f == 0) continue;
        for (int j = 0; j < n; ++j) {
          m[row * n + j] = (m[row * n + j] + (p_ - f) * m[col * n + j]) % p_;
          r[row * n + j] = (r[row * n + j] + (p_ - f) * r[col * n + j]) % p_;
        }
      }
    }
    return r;
  }

 private:
  int det(const std::vector<int>& a) const {
    int n = dim_;
    std::vector<int> m(a);
    long d = 1;
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      for (int row = col; row < n; ++row)
        if (m[row * n + col] != 0) { pivot = row; break; }
      if (pivot < 0) return 0;
      if (pivot != col) {
        for (int j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[col * n + j]);
        d = d * (p_ - 1) % p_;  // row swap flips sign
      }
      d = d * m[col * n + col] % p_;
      int s = mod_inverse(m[col * n + col]);
      for (int row = col + 1; row < n; ++row) {
        int f = m[row * n + col] * s % p_;
        if (f == 0) continue;
        for (int j = 0; j < n; ++j)
          m[row * n + j] = (m[row * n + j] + (p_ - f) * m[col * n + j]) % p_;
      }
    }
    return static_cast<int>(d);
  }

  int mod_inverse(int a) const {
    // Fermat; p_ is prime
    int r = 1, b = a % p_, e = p_ - 2;
    while (e > 0) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return r;
  }

  int p_, dim_;
  std::vector<std::vector<int>> gens_;
  bool unit_det_;
};

// Tuples over Z_{n1} x ... x Z_{nr} with componentwise addition.
class AbelianBackend : public Backend {
 public:
  explicit AbelianBackend(std::vector<int> moduli) : moduli_(std::move(moduli)) {
    for (int n : moduli_)
      if (n < 1) throw InvalidBackend("cyclic modulus must be >= 1");
  }

  std::string describe() const override { return "abelian tuple group"; }
  Key identity() const override { return Key(moduli_.size(), 0); }

  std::vector<Key> generator_keys() const override {
    std::vector<Key> out;
    for (size_t i = 0; i < moduli_.size(); ++i) {
      if (moduli_[i] == 1) continue;
      Key k(moduli_.size(), 0);
      k[i] = 1;
      out.push_back(k);
    }
    return out;
  }

  Key mul(const Key& a, const Key& b) const override {
    Key c(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) c[i] = (a[i] + b[i]) % moduli_[i];
    return c;
  }

  Key inv(const Key& a) const override {
    Key c(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) c[i] = (moduli_[i] - a[i]) % moduli_[i];
    return c;
  }

  uint64_t known_order() const override {
    uint64_t n = 1;
    for (int m : moduli_) n *= static_cast<uint64_t>(m);
    return n;
  }

  const std::vector<int>& moduli() const { return moduli_; }

 private:
  std::vector<int> moduli_;
};

// (Z_{n1} x ... x Z_{nr}) : Z_k.  The action matrix gives generator images
// by columns: the image of the j-th normal generator is prod_i gen_i^{M[i][j]}.
// Multiplication: (h1,t1)(h2,t2) = (h1 + phi^t1(h2), t1+t2 mod k).
class SemidirectBackend : public Backend {
 public:
  SemidirectBackend(std::vector<int> moduli, int k, std::vector<std::vector<int>> action)
      : moduli_(std::move(moduli)), k_(k), action_(std::move(action)) {
    size_t r = moduli_.size();
    if (k_ < 1) throw InvalidBackend("acting cyclic order must be >= 1");
    for (int n : moduli_)
      if (n < 1) throw InvalidBackend("cyclic modulus must be >= 1");
    if (action_.size() != r) throw InvalidAction("action matrix must be r x r for r cyclic factors");
    for (size_t i = 0; i < r; ++i) {
      if (action_[i].size() != r) throw InvalidAction("action matrix must be square");
      for (size_t j = 0; j < r; ++j)
        action_[i][j] = ((action_[i][j] % moduli_[i]) + moduli_[i]) % moduli_[i];
    }
    validate_action();
    // phi^t tables for t in [0, k)
    powers_.resize(k_);
    powers_[0].resize(r);
    for (size_t i = 0; i < r; ++i) {
      powers_[0][i].assign(r, 0);
      powers_[0][i][i] = 1 % moduli_[i];
    }
    for (int t = 1; t < k_; ++t) powers_[t] = compose(action_, powers_[t - 1]);
  }

  std::string describe() const override { return "semidirect product"; }

  Key identity() const override { return Key(moduli_.size() + 1, 0); }

  std::vector<Key> generator_keys() const override {
    size_t r = moduli_.size();
    std::vector<Key> out;
    for (size_t i = 0; i < r; ++i) {
      if (moduli_[i] == 1) continue;
      Key k(r + 1, 0);
      k[i] = 1;
      out.push_back(k);
    }
    if (k_ > 1) {
      Key k(r + 1, 0);
      k[r] = 1;
      out.push_back(k);
    }
    return out;
  }

  Key mul(const Key& a, const Key& b) const override {
    size_t r = moduli_.size();
    Key c(r + 1);
    int t1 = a[r];
    for (size_t i = 0; i < r; ++i) {
      long acc = a[i];
      for (size_t j = 0; j < r; ++j) acc += static_cast<long>(powers_[t1][i][j]) * b[j];
      c[i] = static_cast<int32_t>(acc % moduli_[i]);
    }
    c[r] = (a[r] + b[r]) % k_;
    return c;
  }

  Key inv(const Key& a) const override {
    size_t r = moduli_.size();
    int t = a[r];
    int s = (k_ - t) % k_;
    Key c(r + 1);
    for (size_t i = 0; i < r; ++i) {
      long acc = 0;
      for (size_t j = 0; j < r; ++j) acc += static_cast<long>(powers_[s][i][j]) * a[j];
      c[i] = static_cast<int32_t>((moduli_[i] - acc % moduli_[i]) % moduli_[i]);
    }
    c[r] = s;
    return c;
  }

  uint64_t known_order() const override {
    uint64_t n = k_;
    for (int m : moduli_) n *= static_cast<uint64_t>(m);
    return n;
  }

 private:
  using Mat = std::vector<std::vector<int>>;

  Mat compose(const Mat& a, const Mat& b) const {
    size_t r = moduli_.size();
    Mat c(r, std::vector<int>(r, 0));
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j) {
        long acc = 0;
        for (size_t l = 0; l < r; ++l) acc += static_cast<long>(a[i][l]) * b[l][j];
        c[i][j] = static_cast<int>(acc % moduli_[i]);
      }
    return c;
  }

  std::vector<int> apply(const Mat& m, const std::vector<int>& h) const {
    size_t r = moduli_.size();
    std::vector<int> out(r);
    for (size_t i = 0; i < r; ++i) {
      long acc = 0;
      for (size_t j = 0; j < r; ++j) acc += static_cast<long>(m[i][j]) * h[j];
      out[i] = static_cast<int>(acc % moduli_[i]);
    }
    return out;
  }

  // Exhaustive: bijectivity, homomorphism over all pairs, phi^k = id.
  void validate_action() {
    size_t r = moduli_.size();
    uint64_t n = 1;
    for (int m : moduli_) n *= static_cast<uint64_t>(m);
    if (n > 1'000'000) throw InvalidAction("normal part too large for exhaustive action validation");

    std::vector<std::vector<int>> tuples;
    tuples.reserve(n);
    std::vector<int> cur(r, 0);
    for (uint64_t c = 0; c < n; ++c) {
      tuples.push_back(cur);
      for (size_t i = 0; i < r; ++i) {
        if (++cur[i] < moduli_[i]) break;
        cur[i] = 0;
      }
    }

    std::vector<size_t> image_index(n);
    auto rank = [&](const std::vector<int>& h) {
      size_t idx = 0, mult = 1;
      for (size_t i = 0; i < r; ++i) {
        idx += static_cast<size_t>(h[i]) * mult;
        mult *= static_cast<size_t>(moduli_[i]);
      }
      return idx;
    };
    std::vector<char> hit(n, 0);
    for (uint64_t c = 0; c < n; ++c) {
      size_t im = rank(apply(action_, tuples[c]));
      image_index[c] = im;
      if (hit[im]) throw InvalidAction("action matrix is not injective on the normal part");
      hit[im] = 1;
    }
    for (uint64_t a = 0; a < n; ++a)
      for (uint64_t b = 0; b < n; ++b) {
        std::vector<int> sum(r);
        for (size_t i = 0; i < r; ++i) sum[i] = (tuples[a][i] + tuples[b][i]) % moduli_[i];
        std::vector<int> lhs = apply(action_, sum);
        for (size_t i = 0; i < r; ++i)
          if (lhs[i] != (tuples[image_index[a]][i] + tuples[image_index[b]][i]) % moduli_[i])
            throw InvalidAction("action matrix is not a homomorphism of the normal part");
      }
    // order divides k
    for (size_t g = 0; g < r; ++g) {
      std::vector<int> h(r, 0);
      if (moduli_[g] > 1) h[g] = 1;
      for (int t = 0; t < k_; ++t) h = apply(action_, h);
      for (size_t i = 0; i < r; ++i)
        if (h[i] != (i == g && moduli_[g] > 1 ? 1 : 0))
          throw InvalidAction("automorphism order does not divide the acting cyclic order");
    }
  }

  std::vector<int> moduli_;
  int k_;
  Mat action_;
  std::vector<Mat> powers_;
};

// Dicyclic group of order 4m in normal form a^i b^e:
// (i,0)(j,e) = (i+j,e); (i,1)(j,0) = (i-j,1); (i,1)(j,1) = (i-j+m,0).
class DicyclicBackend : public Backend {
 public:
  explicit DicyclicBackend(int m) : m_(m) {
    if (m_ < 1) throw InvalidBackend("dicyclic parameter must be >= 1");
  }

  std::string describe() const override { return "dicyclic(" + std::to_string(m_) + ")"; }
  Key identity() const override { return {0, 0}; }
  std::vector<Key> generator_keys() const override { return {{1, 0}, {0, 1}}; }

  Key mul(const Key& a, const Key& b) const override {
    int n = 2 * m_;
    if (a[1] == 0) return {(a[0] + b[0]) % n, b[1]};
    if (b[1] == 0) return {((a[0] - b[0]) % n + n) % n, 1};
    return {((a[0] - b[0] + m_) % n + n) % n, 0};
  }

  Key inv(const Key& a) const override {
    int n = 2 * m_;
    if (a[1] == 0) return {(n - a[0]) % n, 0};
    return {(a[0] + m_) % n, 1};
  }

  uint64_t known_order() const override { return 4ull * m_; }

 private:
  int m_;
};

// Triples over Z_p with (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y').
class HeisenbergBackend : public Backend {
 public:
  explicit HeisenbergBackend(int p) : p_(p) {
    if (!is_prime(p) || p == 2) throw InvalidBackend("Heisenberg modulus must be an odd prime");
  }

  std::string describe() const override { return "Heisenberg(" + std::to_string(p_) + ")"; }
  Key identity() const override { return {0, 0, 0}; }
  std::vector<Key> generator_keys() const override { return {{1, 0, 0}, {0, 1, 0}}; }

  Key mul(const Key& a, const Key& b) const override {
    return {(a[0] + b[0]) % p_, (a[1] + b[1]) % p_, (a[2] + b[2] + a[0] * b[1]) % p_};
  }

  Key inv(const Key& a) const override {
    return {(p_ - a[0]) % p_, (p_ - a[1]) % p_, ((a[0] * a[1] - a[2]) % p_ + p_) % p_};
  }

  uint64_t known_order() const override { return static_cast<uint64_t>(p_) * p_ * p_; }

 private:
  int p_;
};

// Explicit multiplication table; id 0 must be the identity.  Group axioms
// are validated exhaustively up to order kCayleyValidationCap.
class CayleyBackend : public Backend {
 public:
  CayleyBackend(int order, std::vector<int> table, std::vector<int> generators = {})
      : n_(order), table_(std::move(table)), gens_(std::move(generators)) {
    if (n_ < 1) throw InvalidBackend("table order must be >= 1");
    if (table_.size() != static_cast<size_t>(n_) * n_) throw InvalidBackend("table size mismatch");
    for (int v : table_)
      if (v < 0 || v >= n_) throw InvalidBackend("table entry out of range");
    for (int x = 0; x < n_; ++x)
      if (table_[x] != x || table_[static_cast<size_t>(x) * n_] != x)
        throw InvalidBackend("id 0 is not a two-sided identity");
    if (n_ <= kCayleyValidationCap) {
      for (int x = 0; x < n_; ++x) {
        bool has_inv = false;
        for (int y = 0; y < n_ && !has_inv; ++y)
          has_inv = at(x, y) == 0 && at(y, x) == 0;
        if (!has_inv) throw InvalidBackend("element without inverse");
      }
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
          for (int z = 0; z < n_; ++z)
            if (at(at(x, y), z) != at(x, at(y, z)))
              throw InvalidBackend("table is not associative");
    }
    for (int g : gens_)
      if (g < 0 || g >= n_) throw InvalidBackend("generator id out of range");
    if (gens_.empty())
      for (int x = 1; x < n_; ++x) gens_.push_back(x);
  }

  std::string describe() const override { return "cayley table(" + std::to_string(n_) + ")"; }
  Key identity() const override { return {0}; }

  std::vector<Key> generator_keys() const override {
    std::vector<Key> out;
    for (int g : gens_) out.push_back({g});
    return out;
  }

  Key mul(const Key& a, const Key& b) const override { return {at(a[0], b[0])}; }

  Key inv(const Key& a) const override {
    for (int y = 0; y < n_; ++y)
      if (at(a[0], y) == 0) return {y};
    internal_fail("no inverse in cayley table");
  }

  uint64_t known_order() const override { return static_cast<uint64_t>(n_); }

 private:
  int at(int x, int y) const { return table_[static_cast<size_t>(x) * n_ + y]; }

  int n_;
  std::vector<int> table_;
  std::vector<int> gens_;
};

// FINITE GROUP
//
// Immutable once built; cheap value handle.  Element ids are assigned by
// breadth-first closure from the identity, generators applied in declaration
// order, so two runs over the same backend agree element for element.

class FiniteGroup {
 public:
  FiniteGroup() = default;

  static FiniteGroup enumerate(BackendPtr backend, uint64_t element_budget = kDefaultElementBudget,
                               std::vector<int> generator_override = {}) {
    if (!backend) throw InvalidBackend("null backend");
    uint64_t known = backend->known_order();
    if (known > element_budget)
      throw BudgetExceeded("group order " + std::to_string(known) + " exceeds element budget " +
                           std::to_string(element_budget));

    auto impl = std::make_shared<Impl>();
    impl->backend = backend;
    impl->index.reserve(known ? known : 64);
    impl->keys.push_back(backend->identity());
    impl->index.emplace(impl->keys[0], 0);

    std::vector<Key> gen_keys = backend->generator_keys();
    for (size_t at = 0; at < impl->keys.size(); ++at) {
      Key cur = impl->keys[at];  // copy: keys vector may reallocate
      for (const Key& g : gen_keys) {
        Key next = backend->mul(cur, g);
        auto [it, inserted] = impl->index.emplace(std::move(next), static_cast<int>(impl->keys.size()));
        if (inserted) {
          impl->keys.push_back(it->first);
          if (impl->keys.size() > element_budget)
            throw BudgetExceeded("closure exceeds element budget " + std::to_string(element_budget));
        }
      }
    }
    int n = static_cast<int>(impl->keys.size());

    if (generator_override.empty()) {
      for (const Key& g : gen_keys) {
        int id = impl->index.at(g);
        if (id != 0 && std::find(impl->gen_ids.begin(), impl->gen_ids.end(), id) == impl->gen_ids.end())
          impl->gen_ids.push_back(id);
      }
    } else {
      impl->gen_ids = std::move(generator_override);
    }

    impl->inv_table.resize(n);
    for (int x = 0; x < n; ++x) impl->inv_table[x] = impl->index.at(backend->inv(impl->keys[x]));

    if (n <= kMulMemoCap) {
      impl->memo.resize(static_cast<size_t>(n) * n);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          impl->memo[static_cast<size_t>(x) * n + y] =
              impl->index.at(backend->mul(impl->keys[x], impl->keys[y]));
    }
    return FiniteGroup(std::move(impl));
  }

  bool valid() const { return static_cast<bool>(impl_); }
  int order() const { return static_cast<int>(impl_->keys.size()); }
  int identity() const { return 0; }

  int mul(int x, int y) const {
    if (!impl_->memo.empty()) return impl_->memo[static_cast<size_t>(x) * order() + y];
    return impl_->index.at(impl_->backend->mul(impl_->keys[x], impl_->keys[y]));
  }

  int inv(int x) const { return impl_->inv_table[x]; }

  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int commutator(int x, int y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }

  int power(int x, long e) const {
    if (e < 0) return power(inv(x), -e);
    int r = 0, b = x;
    while (e > 0) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  const Key& key(int x) const { return impl_->keys[x]; }

  // -1 when the key does not belong to the group
  int index_of(const Key& k) const {
    auto it = impl_->index.find(k);
    return it == impl_->index.end() ? -1 : it->second;
  }

  const std::vector<int>& generators() const { return impl_->gen_ids; }
  const Backend& backend() const { return *impl_->backend; }

  // least n >= 1 with x^n = e, via divisor stripping of |G|
  int element_order(int x) const {
    return element_order_with(x, factorize(order()));
  }

  // id -> element order, built once on first use
  const std::vector<int>& order_table() const {
    std::call_once(impl_->orders_once, [this] {
      auto factors = factorize(order());
      impl_->orders.resize(order());
      for (int x = 0; x < order(); ++x) impl_->orders[x] = element_order_with(x, factors);
    });
    return impl_->orders;
  }

  std::map<int, int> order_profile() const {
    std::map<int, int> profile;
    for (int o : order_table()) ++profile[o];
    return profile;
  }

  int exponent() const {
    long e = 1;
    for (auto& [o, cnt] : order_profile()) e = std::lcm(e, static_cast<long>(o));
    return static_cast<int>(e);
  }

  bool same_instance(const FiniteGroup& other) const { return impl_ == other.impl_; }

 private:
  int element_order_with(int x, const std::vector<std::pair<long, int>>& group_factors) const {
    long n = order();
    for (auto& [p, e] : group_factors) {
      for (int i = 0; i < e; ++i) {
        if (power(x, n / p) == 0) n /= p;
        else break;
      }
    }
    return static_cast<int>(n);
  }

  struct Impl {
    BackendPtr backend;
    std::vector<Key> keys;
    std::unordered_map<Key, int, KeyHash> index;
    std::vector<int> inv_table;
    std::vector<int> gen_ids;
    std::vector<int> memo;  // full table when order <= kMulMemoCap
    mutable std::once_flag orders_once;
    mutable std::vector<int> orders;
  };

  explicit FiniteGroup(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<Impl> impl_;
};

inline FiniteGroup enumerate_elements(BackendPtr backend,
                                      uint64_t element_budget = kDefaultElementBudget) {
  return FiniteGroup::enumerate(std::move(backend), element_budget);
}

// Pairs (a, b) of element ids with componentwise multiplication.
class DirectProductBackend : public Backend {
 public:
  DirectProductBackend(FiniteGroup left, FiniteGroup right)
      : left_(std::move(left)), right_(std::move(right)) {
    if (!left_.valid() || !right_.valid()) throw InvalidBackend("direct product of empty group");
  }

  std::string describe() const override { return "direct product"; }
  Key identity() const override { return {0, 0}; }

  std::vector<Key> generator_keys() const override {
    std::vector<Key> out;
    for (int g : left_.generators()) out.push_back({g, 0});
    for (int g : right_.generators()) out.push_back({0, g});
    return out;
  }

  Key mul(const Key& a, const Key& b) const override {
    return {left_.mul(a[0], b[0]), right_.mul(a[1], b[1])};
  }

  Key inv(const Key& a) const override { return {left_.inv(a[0]), right_.inv(a[1])}; }

  uint64_t known_order() const override {
    return static_cast<uint64_t>(left_.order()) * static_cast<uint64_t>(right_.order());
  }

 private:
  FiniteGroup left_, right_;
};

inline FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H,
                                  uint64_t element_budget = kDefaultElementBudget) {
  return FiniteGroup::enumerate(std::make_shared<DirectProductBackend>(G, H), element_budget);
}

// Built directly from a multiplication table: ids coincide with table indices.
inline FiniteGroup group_from_table(int order, std::vector<int> table, std::vector<int> generators = {},
                                    uint64_t element_budget = kDefaultElementBudget) {
  auto backend = std::make_shared<CayleyBackend>(order, std::move(table));
  return FiniteGroup::enumerate(backend, element_budget, std::move(generators));
}

}  // namespace grouplab
