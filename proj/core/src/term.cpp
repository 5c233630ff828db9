#include "nlh/term.hpp"

#include <vector>

#include "nlh/errors.hpp"

namespace nlh {

struct NTerm::Node {
  Kind kind = Kind::leaf;
  Symbol symbol = 0;
  std::vector<NTerm> children;
  std::size_t breadth = 1;
  std::size_t degree = 1;
};

NTerm NTerm::leaf(Symbol s) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::leaf;
  n->symbol = s;
  return NTerm(std::move(n));
}

NTerm NTerm::op(NTerm body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::op;
  n->degree = body.degree() + 1;
  n->children.push_back(std::move(body));
  return NTerm(std::move(n));
}

NTerm NTerm::pair(NTerm left, NTerm right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::pair;
  n->breadth = left.breadth() + right.breadth();
  n->degree = left.degree() + right.degree();
  n->children.push_back(std::move(left));
  n->children.push_back(std::move(right));
  return NTerm(std::move(n));
}

NTerm::Kind NTerm::kind() const noexcept { return node_->kind; }

Symbol NTerm::symbol() const {
  if (!is_leaf()) throw PreconditionError("term is not a leaf");
  return node_->symbol;
}

const NTerm& NTerm::body() const {
  if (!is_op()) throw PreconditionError("term is not an operator node");
  return node_->children[0];
}

const NTerm& NTerm::left() const {
  if (!is_pair()) throw PreconditionError("term is not a bracket");
  return node_->children[0];
}

const NTerm& NTerm::right() const {
  if (!is_pair()) throw PreconditionError("term is not a bracket");
  return node_->children[1];
}

std::size_t NTerm::breadth() const noexcept { return node_->breadth; }
std::size_t NTerm::degree() const noexcept { return node_->degree; }

bool operator==(const NTerm& a, const NTerm& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.degree() != b.degree()) return false;
  switch (a.kind()) {
    case NTerm::Kind::leaf:
      return a.node_->symbol == b.node_->symbol;
    case NTerm::Kind::op:
      return a.body() == b.body();
    case NTerm::Kind::pair:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

namespace {

void flatten_into(const NTerm& t, std::vector<Prime>& out) {
  switch (t.kind()) {
    case NTerm::Kind::leaf:
      out.push_back(Prime::letter(t.symbol()));
      break;
    case NTerm::Kind::op:
      out.push_back(Prime::op(flatten(t.body())));
      break;
    case NTerm::Kind::pair:
      flatten_into(t.left(), out);
      flatten_into(t.right(), out);
      break;
  }
}

}  // namespace

NWord flatten(const NTerm& t) {
  std::vector<Prime> ps;
  flatten_into(t, ps);
  return NWord(std::move(ps));
}

std::string to_string(const NTerm& t, const Alphabet& alphabet) {
  switch (t.kind()) {
    case NTerm::Kind::leaf:
      return alphabet.name(t.symbol());
    case NTerm::Kind::op:
      return "N(" + to_string(t.body(), alphabet) + ")";
    case NTerm::Kind::pair:
      return "[" + to_string(t.left(), alphabet) + "," + to_string(t.right(), alphabet) + "]";
  }
  return {};
}

}  // namespace nlh
