#include "gomplab/term.hpp"

namespace gomplab {

Term Term::var(char name) { return Term(Kind::Variable, name, {}); }
Term Term::zero() { return Term(Kind::Zero, 0, {}); }
Term Term::one() { return Term(Kind::One, 0, {}); }

Term join(Term a, Term b) {
  return Term(Term::Kind::Join, 0, {std::move(a), std::move(b)});
}
Term meet(Term a, Term b) {
  return Term(Term::Kind::Meet, 0, {std::move(a), std::move(b)});
}
Term comp(Term a) { return Term(Term::Kind::Comp, 0, {std::move(a)}); }

std::string Term::to_string() const {
  switch (kind_) {
    case Kind::Variable: return std::string(1, variable_);
    case Kind::Zero: return "0";
    case Kind::One: return "1";
    case Kind::Join: return "(" + args_[0].to_string() + " v " + args_[1].to_string() + ")";
    case Kind::Meet: return "(" + args_[0].to_string() + " ^ " + args_[1].to_string() + ")";
    case Kind::Comp: return args_[0].to_string() + "'";
  }
  return {};
}

Element eval_term(const Directoid& d, const Term& t, const Assignment& assignment) {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      auto it = assignment.find(t.variable());
      if (it == assignment.end()) {
        throw UnassignedVariable(std::string("variable '") + t.variable() + "' is unassigned");
      }
      return it->second;
    }
    case Term::Kind::Zero: return d.bottom();
    case Term::Kind::One: return d.top();
    case Term::Kind::Join:
      return d.join(eval_term(d, t.args()[0], assignment), eval_term(d, t.args()[1], assignment));
    case Term::Kind::Meet:
      return d.meet(eval_term(d, t.args()[0], assignment), eval_term(d, t.args()[1], assignment));
    case Term::Kind::Comp: return d.comp(eval_term(d, t.args()[0], assignment));
  }
  throw std::logic_error("unhandled term kind");
}

namespace {
const Term x = Term::var('x');
const Term y = Term::var('y');
const Term z = Term::var('z');
}  // namespace

Term majority_term() { return meet(meet(join(x, y), join(y, z)), join(z, x)); }

Term maltsev_term() {
  return meet(join(x, meet(comp(y), join(y, z))), join(z, meet(comp(y), join(y, x))));
}

Term regularity_base_term() {
  return join(meet(comp(x), join(x, y)), meet(comp(y), join(x, y)));
}

Term regularity_term_1() { return join(regularity_base_term(), z); }

Term regularity_term_2() { return meet(comp(regularity_base_term()), z); }

}  // namespace gomplab
