#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "braidrep/laurent.hpp"
#include "braidrep/presentations.hpp"

namespace braidrep {

struct RepSpec {
  enum class Tag { Artin, BurauSymbolic, BurauEvaluated, GassnerSymbolic, GassnerEvaluated, Iterated };
  Tag tag = Tag::Artin;
  int level = 1;  // iteration depth, Iterated only

  /// artin, burau-symbolic, burau-evaluated, gassner-symbolic, gassner-evaluated, iterated-<r>
  static RepSpec parse(std::string_view text);
  std::string to_string() const;
};

/// A named set of parameter bindings, e.g. "b=1".
struct Substitution {
  std::string label;
  Bindings bindings;

  static Substitution parse(const std::vector<std::string>& items);
};

struct RelatorRecord {
  std::string label;
  bool pass = false;
  /// When failing: 1-based (row, col) of the first differing entry and both values.
  /// For the Artin representation the row is the generator index and col is 0.
  std::optional<std::pair<int, int>> position;
  std::string lhs_value;
  std::string rhs_value;
};

struct VerificationReport {
  GroupFamily family;
  RepSpec rep;
  std::string substitution;
  std::vector<RelatorRecord> records;

  bool all_pass() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Checks every defining relator of the family exactly under the chosen
/// representation after applying the substitution.  For iterated-r the family
/// rank is the rank of the represented group; the base is rank + r - 1.
VerificationReport verify_rep(const GroupFamily& family, const RepSpec& rep, const Substitution& subst = {});

/// Checks a single relator (any sigma/tau/xi words) under the representation at rank n.
RelatorRecord check_relator(const Relator& rel, const RepSpec& rep, int n, const Substitution& subst = {});

struct FactorOutcome {
  std::string substitution;
  bool pass = false;
};

/// Generic outcome followed by the candidate specializations b=1, b=a, a=1.
std::vector<FactorOutcome> factor_analysis(const Relator& rel, const RepSpec& rep, int n);

}  // namespace braidrep
