#include "obr/formula.hpp"

#include <functional>
#include <sstream>
#include <utility>

#include "obr/error.hpp"

namespace obr {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

int precedence(Connective c) {
  switch (c) {
    case Connective::kIff: return 1;
    case Connective::kImplies: return 2;
    case Connective::kOr: return 3;
    case Connective::kAnd: return 4;
    case Connective::kNot: return 5;
    default: return 6;
  }
}

const char* symbol(Connective c) {
  switch (c) {
    case Connective::kAnd: return " & ";
    case Connective::kOr: return " | ";
    case Connective::kImplies: return " -> ";
    case Connective::kIff: return " <-> ";
    default: return "";
  }
}

void print(std::ostream& os, const Formula& f) {
  switch (f.kind()) {
    case Connective::kAtom: os << f.name(); return;
    case Connective::kTop: os << "true"; return;
    case Connective::kBottom: os << "false"; return;
    case Connective::kNot: {
      os << '!';
      bool paren = precedence(f.child().kind()) < precedence(Connective::kNot);
      if (paren) os << '(';
      print(os, f.child());
      if (paren) os << ')';
      return;
    }
    default: break;
  }
  const int own = precedence(f.kind());
  // -> is right-associative, the others associate to the left.
  const bool right_assoc = f.kind() == Connective::kImplies;
  const int lp = precedence(f.left().kind());
  const int rp = precedence(f.right().kind());
  const bool lparen = right_assoc ? lp <= own : lp < own;
  const bool rparen = right_assoc ? rp < own : rp <= own;
  if (lparen) os << '(';
  print(os, f.left());
  if (lparen) os << ')';
  os << symbol(f.kind());
  if (rparen) os << '(';
  print(os, f.right());
  if (rparen) os << ')';
}

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kLimitExceeded: return "LimitExceeded";
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kInconsistentInput: return "InconsistentInput";
    case ErrorCode::kInconsistentEvidence: return "InconsistentEvidence";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kUndeterminedSentence: return "UndeterminedSentence";
    case ErrorCode::kAlreadyBelieved: return "AlreadyBelieved";
    case ErrorCode::kNoGoalDerivation: return "NoGoalDerivation";
    case ErrorCode::kEmptyCandidates: return "EmptyCandidates";
    case ErrorCode::kUnknownProperty: return "UnknownProperty";
  }
  return "Error";
}

Formula Formula::make(Connective kind, std::string name, const Formula* left,
                      const Formula* right) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  std::size_t h = mix(0, static_cast<std::size_t>(kind));
  std::size_t size = 1;
  if (kind == Connective::kAtom) h = mix(h, std::hash<std::string>{}(name));
  node->name = std::move(name);
  if (left != nullptr) {
    node->left = *left;
    h = mix(h, left->hash());
    size += left->size();
  }
  if (right != nullptr) {
    node->right = *right;
    h = mix(h, right->hash());
    size += right->size();
  }
  node->hash = h;
  node->size = size;
  return Formula(std::move(node));
}

Formula Formula::atom(std::string name) {
  if (!is_valid_atom_name(name)) {
    throw Error(ErrorCode::kInvalidInput, "invalid atom name '" + name + "'");
  }
  return make(Connective::kAtom, std::move(name), nullptr, nullptr);
}

Formula Formula::top() {
  static const Formula t = make(Connective::kTop, {}, nullptr, nullptr);
  return t;
}

Formula Formula::bottom() {
  static const Formula b = make(Connective::kBottom, {}, nullptr, nullptr);
  return b;
}

Formula Formula::negation(Formula child) {
  return make(Connective::kNot, {}, &child, nullptr);
}

Formula Formula::conjunction(Formula left, Formula right) {
  return make(Connective::kAnd, {}, &left, &right);
}

Formula Formula::disjunction(Formula left, Formula right) {
  return make(Connective::kOr, {}, &left, &right);
}

Formula Formula::implication(Formula left, Formula right) {
  return make(Connective::kImplies, {}, &left, &right);
}

Formula Formula::equivalence(Formula left, Formula right) {
  return make(Connective::kIff, {}, &left, &right);
}

bool Formula::is_binary() const {
  switch (kind()) {
    case Connective::kAnd:
    case Connective::kOr:
    case Connective::kImplies:
    case Connective::kIff:
      return true;
    default:
      return false;
  }
}

std::string Formula::to_string() const {
  std::ostringstream os;
  print(os, *this);
  return os.str();
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind()) {
    return false;
  }
  switch (a.kind()) {
    case Connective::kAtom: return a.name() == b.name();
    case Connective::kTop:
    case Connective::kBottom: return true;
    case Connective::kNot: return a.child() == b.child();
    default: return a.left() == b.left() && a.right() == b.right();
  }
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Connective::kAtom: return a.name() <=> b.name();
    case Connective::kTop:
    case Connective::kBottom: return std::strong_ordering::equal;
    case Connective::kNot: return a.child() <=> b.child();
    default:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
  }
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  print(os, f);
  return os;
}

bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return name != "true" && name != "false";
}

Formula canonicalize(const Formula& f) {
  switch (f.kind()) {
    case Connective::kAtom:
    case Connective::kTop:
    case Connective::kBottom:
      return f;
    case Connective::kNot: {
      Formula inner = canonicalize(f.child());
      if (inner.kind() == Connective::kNot) {
        auto k = inner.child().kind();
        if (k == Connective::kTop || k == Connective::kBottom) return inner.child();
      }
      if (inner == f.child()) return f;
      return Formula::negation(inner);
    }
    default: {
      Formula l = canonicalize(f.left());
      Formula r = canonicalize(f.right());
      if (l == f.left() && r == f.right()) return f;
      switch (f.kind()) {
        case Connective::kAnd: return Formula::conjunction(l, r);
        case Connective::kOr: return Formula::disjunction(l, r);
        case Connective::kImplies: return Formula::implication(l, r);
        default: return Formula::equivalence(l, r);
      }
    }
  }
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Connective::kAtom: out.insert(f.name()); return;
    case Connective::kTop:
    case Connective::kBottom: return;
    case Connective::kNot: collect_atoms(f.child(), out); return;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
  }
}

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

}  // namespace obr
