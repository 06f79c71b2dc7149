#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gomplab/directoid.hpp"

namespace gomplab {

/// A term over {join/2, meet/2, '/1, 0, 1} and single-letter variables.
/// Meet is evaluated through its definition (x' join y')'.
class Term {
 public:
  enum class Kind { Variable, Zero, One, Join, Meet, Comp };

  static Term var(char name);
  static Term zero();
  static Term one();

  friend Term join(Term a, Term b);
  friend Term meet(Term a, Term b);
  friend Term comp(Term a);

  Kind kind() const { return kind_; }
  char variable() const { return variable_; }
  const std::vector<Term>& args() const { return args_; }

  std::string to_string() const;

 private:
  Term(Kind kind, char variable, std::vector<Term> args)
      : kind_(kind), variable_(variable), args_(std::move(args)) {}

  Kind kind_;
  char variable_ = 0;
  std::vector<Term> args_;
};

Term join(Term a, Term b);
Term meet(Term a, Term b);
Term comp(Term a);

using Assignment = std::map<char, Element>;

class UnassignedVariable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bottom-up evaluation in `d`. Throws UnassignedVariable when a variable of
/// `t` has no value in `assignment`.
Element eval_term(const Directoid& d, const Term& t, const Assignment& assignment);

/// m(x,y,z) = ((x join y) meet (y join z)) meet (z join x)
Term majority_term();
/// p(x,y,z) = (x join (y' meet (y join z))) meet (z join (y' meet (y join x)))
Term maltsev_term();
/// t(x,y) = (x' meet (x join y)) join (y' meet (x join y))
Term regularity_base_term();
/// t1(x,y,z) = t(x,y) join z
Term regularity_term_1();
/// t2(x,y,z) = t(x,y)' meet z
Term regularity_term_2();

}  // namespace gomplab
