#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "braidrep/laurent.hpp"
#include "braidrep/words.hpp"

namespace braidrep {

/// The group whose algebra we compute in.
///   Welded(m)     : WB_m, elements keyed by their Artin automorphism of F_m.
///   Semidirect(n) : F_n x| PW_n, elements g*w keyed by (Artin automorphism of g, reduced w).
struct Ambient {
  enum class Kind : std::uint8_t { Welded, Semidirect };
  Kind kind = Kind::Welded;
  int rank = 2;

  static Ambient welded(int strands) { return {Kind::Welded, strands}; }
  static Ambient semidirect(int n) { return {Kind::Semidirect, n}; }

  std::string to_string() const;
  friend bool operator==(const Ambient&, const Ambient&) = default;
  friend auto operator<=>(const Ambient&, const Ambient&) = default;
};

/// A group element in canonical form.  The witness word records how the
/// element was built; it is used for printing and inversion only and never
/// takes part in comparisons.
///
/// Letters accepted by `from_word`:
///   Welded(m)     : s, t, q (xi_{i,j} with i,j <= m), x (x_k = xi_{m,k}).
///   Semidirect(n) : q (xi_{i,j} with i,j <= n), x (free generator), q(n+1).k as x_k.
///
/// In the semidirect case the element g*w acts on F_n by conjugation,
/// x -> (g w)^{-1} x (g w) = w^{-1} a_g(x) w with a_g the Artin automorphism of g,
/// and (g1 w1)(g2 w2) = (g1 g2) * (a_{g2}(w1) w2).
class GroupElement {
 public:
  GroupElement() = default;

  static GroupElement identity(const Ambient& amb);
  static GroupElement from_word(const Ambient& amb, const Word& w);
  /// Semidirect element with trivial PW part.
  static GroupElement free(int n, const FreeWord& w);

  const Ambient& ambient() const { return ambient_; }
  /// Welded: the Artin automorphism of the element.  Semidirect: a_g of the PW part.
  const FreeAutomorphism& automorphism() const { return autom_; }
  /// Semidirect only: the reduced free part w.
  const FreeWord& free_part() const { return free_; }
  const Word& witness() const { return witness_; }

  bool is_identity() const;
  GroupElement inverse() const;
  /// Semidirect only: (g w)^{-1} x (g w) as a reduced word in F_n.
  FreeWord conjugation_action(const FreeWord& x) const;

  std::string to_string() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);

  /// Canonical comparison; witnesses are ignored.
  friend bool operator==(const GroupElement& a, const GroupElement& b);
  friend bool operator<(const GroupElement& a, const GroupElement& b);

 private:
  Ambient ambient_;
  FreeAutomorphism autom_;
  FreeWord free_;
  Word witness_;     // full witness (Welded) or PW-part witness (Semidirect)
};

enum class AugmentMode { Htilde, AMap };

/// Finite formal sum of group elements with Laurent coefficients.  Coefficients
/// are central; products follow the group law.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(const Ambient& amb) : ambient_(amb) {}
  AlgebraElement(const GroupElement& g, LaurentPoly coeff = 1);

  static AlgebraElement zero(const Ambient& amb) { return AlgebraElement(amb); }
  static AlgebraElement one(const Ambient& amb) { return AlgebraElement(GroupElement::identity(amb)); }
  static AlgebraElement scalar(const Ambient& amb, LaurentPoly c);

  const Ambient& ambient() const { return ambient_; }
  const std::map<GroupElement, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// A single group element times a unit coefficient.
  bool is_unit() const;
  AlgebraElement unit_inverse() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const LaurentPoly& c, const AlgebraElement& a);
  AlgebraElement operator-() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  std::string to_string() const;

 private:
  void check_same(const AlgebraElement& o) const;
  void add_term(const GroupElement& g, const LaurentPoly& c);

  Ambient ambient_;
  std::map<GroupElement, LaurentPoly> terms_;
};

AlgebraElement substitute(const AlgebraElement& x, const Bindings& bindings);

/// Htilde: every group element -> 1 (Welded ambient).
/// AMap: g*w -> product of t_k^{+-1} over the letters of w (Semidirect ambient).
LaurentPoly augment(const AlgebraElement& x, AugmentMode mode);

nlohmann::json to_json(const AlgebraElement& x);
AlgebraElement algebra_from_json(const Ambient& amb, const nlohmann::json& j);

// Ring hooks used by the matrix template.
inline LaurentPoly zero_like(const LaurentPoly&) { return {}; }
inline LaurentPoly one_like(const LaurentPoly&) { return 1; }
inline AlgebraElement zero_like(const AlgebraElement& x) { return AlgebraElement::zero(x.ambient()); }
inline AlgebraElement one_like(const AlgebraElement& x) { return AlgebraElement::one(x.ambient()); }
inline std::string render(const LaurentPoly& p) { return p.to_string(); }
inline std::string render(const AlgebraElement& x) { return x.to_string(); }

}  // namespace braidrep
