#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hybarrier {

/// Index of an observation within an Alphabet.
using ObsId = int;

/// Ordered finite set of observation names. Observation indices used
/// throughout the library refer to positions in this ordering.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(ObsId o) const { return names_.at(o); }
  const std::vector<std::string>& names() const { return names_; }

  /// Returns the index of `name`, or -1 if it is not declared.
  ObsId index_of(const std::string& name) const;
  bool contains(const std::string& name) const { return index_of(name) >= 0; }

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

/// A finite word of observations (indices into an Alphabet).
using Word = std::vector<ObsId>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos);
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Immutable formula tree in negation normal form: negation can only occur
/// directly on atoms, and the temporal operators are next (X), until (U) and
/// eventually (F). And/Or are n-ary. Copies share nodes.
class Formula {
 public:
  enum class Kind : std::uint8_t {
    True,
    False,
    Atom,
    NegAtom,
    And,
    Or,
    Next,
    Until,
    Eventually,
  };

  Formula();  // defaults to True

  static Formula tt();
  static Formula ff();
  static Formula atom(ObsId o);
  static Formula neg_atom(ObsId o);
  static Formula conj(std::vector<Formula> children);
  static Formula disj(std::vector<Formula> children);
  static Formula next(Formula operand);
  static Formula until(Formula lhs, Formula rhs);
  static Formula eventually(Formula operand);

  Kind kind() const;
  /// Observation index; valid for Atom and NegAtom nodes only.
  ObsId atom_id() const;
  const std::vector<Formula>& children() const;
  std::size_t hash() const;

  bool is_true() const { return kind() == Kind::True; }
  bool is_false() const { return kind() == Kind::False; }

  /// Deep structural equality (hash-accelerated).
  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  /// Total structural order: by kind, then atom index, then children
  /// lexicographically. Used for canonical child ordering.
  static int compare(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

/// Parses `text` against the declared alphabet and returns the formula in
/// negation normal form. Grammar, loosest to tightest binding:
///
///   expr   := conj ('|' conj)*
///   conj   := until ('&' until)*
///   until  := unary ('U' until)?          (right associative)
///   unary  := ('!' | 'X' | 'F') unary | primary
///   primary:= '(' expr ')' | 'true' | 'false' | identifier
///
/// '!' is pushed onto atoms during parsing (De Morgan / constant duality);
/// a negation that would require an operator outside the co-safe fragment
/// (the dual of X, U or F) is rejected with its position.
Formula parse_formula(const std::string& text, const Alphabet& alphabet);

/// Prints `f` in the concrete syntax accepted by parse_formula, inserting
/// parentheses so that parsing the output reproduces `f` structurally.
std::string print_formula(const Formula& f, const Alphabet& alphabet);

struct CoSafetyViolation {
  Formula subtree;
  std::string reason;
};

struct CoSafetyVerdict {
  bool ok = true;
  std::vector<CoSafetyViolation> violations;
};

/// Checks that every node of `f` lies in the syntactically co-safe fragment
/// and that every atom refers to a declared observation. Total: never throws.
CoSafetyVerdict check_co_safe(const Formula& f, const Alphabet& alphabet);

/// Finite-word satisfaction. Exactly one observation holds per position, so
/// an atom (or negated atom) requires a letter at the current position.
/// The empty word satisfies only formulas that are Boolean combinations
/// evaluating to true with every atomic/temporal leaf false.
bool eval_word(const Formula& f, const Word& w);

}  // namespace hybarrier
