#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidrep {

/// Raised for malformed input: bad indices, unparsable words, rank mismatches.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GenKind : std::uint8_t { Sigma, Tau, Xi, FreeX };

/// One signed generator letter.  Indices are 1-based.
///   Sigma(i), Tau(i)  : sigma_i, tau_i
///   Xi(i, j)          : xi_{i,j}
///   FreeX(k)          : xi_{n+1,k}, the k-th free generator
struct Gen {
  GenKind kind = GenKind::Sigma;
  int i = 1;
  int j = 0;
  int sign = 1;

  static Gen sigma(int i, int sign = 1) { return {GenKind::Sigma, i, 0, sign}; }
  static Gen tau(int i, int sign = 1) { return {GenKind::Tau, i, 0, sign}; }
  static Gen xi(int i, int j, int sign = 1) { return {GenKind::Xi, i, j, sign}; }
  static Gen x(int k, int sign = 1) { return {GenKind::FreeX, k, 0, sign}; }

  Gen inverse() const { return {kind, i, j, -sign}; }

  friend bool operator==(const Gen&, const Gen&) = default;
  friend auto operator<=>(const Gen&, const Gen&) = default;
};

using Word = std::vector<Gen>;

/// Parses the whitespace-separated token grammar:
/// `s3`/`S3`, `t2`/`T2`, `q1.2`/`Q1.2`, `x4`/`X4`.  Empty input is the identity.
Word parse_word(std::string_view text);
std::string format_gen(const Gen& g);
std::string format_word(const Word& w);

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

// ---------------------------------------------------------------------------
// Free group words.  A letter is +k for x_k and -k for x_k^{-1}.

using FreeWord = std::vector<int>;

FreeWord reduce(FreeWord w);
FreeWord free_inverse(const FreeWord& w);
FreeWord free_concat(const FreeWord& a, const FreeWord& b);
std::string format_free(const FreeWord& w);

/// Reduces a word whose letters are all FreeX symbols.
Word reduce(const Word& w);
FreeWord to_free(const Word& w);
Word from_free(const FreeWord& w);

/// An automorphism of F_n given by the reduced images of x_1..x_n.
class FreeAutomorphism {
 public:
  FreeAutomorphism() = default;
  FreeAutomorphism(int rank, std::vector<FreeWord> images);

  static FreeAutomorphism identity(int rank);

  int rank() const { return rank_; }
  const std::vector<FreeWord>& images() const { return images_; }
  const FreeWord& image(int k) const { return images_.at(k - 1); }

  /// Substitutes the generator images into `w` and reduces.
  FreeWord apply(const FreeWord& w) const;

  bool is_identity() const;

  friend bool operator==(const FreeAutomorphism&, const FreeAutomorphism&) = default;
  friend auto operator<=>(const FreeAutomorphism&, const FreeAutomorphism&) = default;

 private:
  int rank_ = 0;
  std::vector<FreeWord> images_;
};

/// `a` then `b`: apply(compose(a, b), w) == b.apply(a.apply(w)).
FreeAutomorphism compose(const FreeAutomorphism& a, const FreeAutomorphism& b);
Word apply(const FreeAutomorphism& a, const Word& w);
bool auto_equal(const FreeAutomorphism& a, const FreeAutomorphism& b);

/// rho_i for sigma_i^{+1}, its inverse for sigma_i^{-1}, theta_i for tau_i^{+-1}.
FreeAutomorphism artin_auto(const Gen& g, int n);

/// Artin image of a sigma/tau word, letters acting successively from the left:
/// word_to_auto(u v) == compose(word_to_auto(u), word_to_auto(v)).
FreeAutomorphism word_to_auto(const Word& w, int n);

std::string format_auto(const FreeAutomorphism& a);

class Permutation {
 public:
  explicit Permutation(int size);
  explicit Permutation(std::vector<int> images);

  static Permutation transposition(int size, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_.at(k - 1); }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  /// Function composition: (p * q)(k) == p(q(k)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace braidrep
