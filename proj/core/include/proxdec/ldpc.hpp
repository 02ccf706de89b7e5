#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "proxdec/rng.hpp"

namespace proxdec {

using Bits = std::vector<std::uint8_t>;

// Global tie-break rule: sign(0) = +1.
inline double sign_pm(double v) { return v < 0.0 ? -1.0 : 1.0; }

// Word over {+1, -1}, stored as doubles.
struct BipolarWord {
  std::vector<double> values;
  int size() const { return static_cast<int>(values.size()); }
};

// b(0) = +1, b(1) = -1.
BipolarWord bipolar_from_bits(const Bits& bits);
// Inverse of bipolar_from_bits; throws std::domain_error if any |x_j| != 1.
Bits bits_from_bipolar(const BipolarWord& x);

// Sparse binary parity-check matrix with both row adjacency A(i) and column
// adjacency B(j). Immutable after construction.
class ParityCheckMatrix {
 public:
  ParityCheckMatrix(int m, int n, std::vector<std::vector<int>> rows);

  int check_count() const { return m_; }  // m
  int length() const { return n_; }       // n
  int entry_count() const;

  const std::vector<int>& row(int i) const { return rows_[i]; }  // A(i), sorted
  const std::vector<int>& col(int j) const { return cols_[j]; }  // B(j), sorted
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  const std::vector<std::vector<int>>& cols() const { return cols_; }

  std::uint64_t content_hash() const;

  bool operator==(const ParityCheckMatrix& other) const {
    return m_ == other.m_ && n_ == other.n_ && rows_ == other.rows_;
  }

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<std::vector<int>> rows_;
  std::vector<std::vector<int>> cols_;
};

// alist interchange format. Zero padding is accepted on read and never
// written. Parse failures throw AlistParseError naming the offending line.
struct AlistParseError : std::runtime_error {
  AlistParseError(int line, const std::string& what);
  int line;
};

ParityCheckMatrix parse_alist(const std::string& text);
std::string emit_alist(const ParityCheckMatrix& H);
ParityCheckMatrix load_alist_file(const std::string& path);
void save_alist_file(const ParityCheckMatrix& H, const std::string& path);

// Component i is the XOR of bits indexed by A(i).
Bits syndrome(const ParityCheckMatrix& H, const Bits& bits);
bool is_codeword(const ParityCheckMatrix& H, const BipolarWord& x);

// Systematic GF(2) encoder. Rows live in encoder coordinates; perm maps
// encoder coordinate p to the coordinate of the originating H, and encode()
// returns codewords already in H coordinates.
class GeneratorMatrix {
 public:
  GeneratorMatrix(int k, int n, std::vector<Bits> rows, std::vector<int> perm);

  int message_length() const { return k_; }
  int length() const { return n_; }
  const std::vector<Bits>& rows() const { return rows_; }
  const std::vector<int>& perm() const { return perm_; }

  Bits encode(const Bits& message) const;

 private:
  int k_ = 0;
  int n_ = 0;
  std::vector<Bits> rows_;
  std::vector<int> perm_;
};

// GF(2) Gaussian elimination with column swaps; k = n - rank(H), so a
// rank-deficient H simply yields a larger message space.
GeneratorMatrix generator_from_parity(const ParityCheckMatrix& H);

// Uniform draw from C(H) via a uniform message word.
BipolarWord random_codeword(const GeneratorMatrix& G, Rng& rng);

// Gallager-style socket construction of a (wc, wr)-regular matrix with
// best-effort 4-cycle reduction. Requires n*wc divisible by wr.
ParityCheckMatrix make_regular_ldpc(int n, int wc, int wr, Rng& rng);

// Standard (7,4,3) Hamming parity-check matrix; column j holds the binary
// expansion of j+1.
ParityCheckMatrix hamming_7_4();

}  // namespace proxdec
