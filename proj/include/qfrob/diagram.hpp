#ifndef QFROB_DIAGRAM_HPP
#define QFROB_DIAGRAM_HPP

// A textual morphism-expression language. Grammar (data-flow order:
// "f ; g" means g after f; "*" binds tighter than ";"):
//
//   expr   := term (';' term)*
//   term   := factor ('*' factor)*
//   factor := ('dag'|'conj'|'dual') '(' expr ')' | '(' expr ')'
//           | 'id' '[' word ']' | 'cup' '[' int ']' | 'cap' '[' int ']'
//           | 'swap' '[' wire ',' wire ']' | number ['i'] | name
//   word   := [wire (',' wire)*]      wire := int ['*']
//
// Expressions are evaluated, never rewritten: equality is numeric.

#include <map>
#include <memory>
#include <string>

#include "qfrob/linalg.hpp"

namespace qfrob {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Gen, Id, Cup, Cap, Swap, Scalar, Compose, Tensor, Dag, Conj, Dual };
    Kind kind;
    std::string name;   // Gen
    WireWord word;      // Id
    int n = 0;          // Cup / Cap
    Wire a, b;          // Swap
    Complex value;      // Scalar
    ExprPtr lhs, rhs;   // Compose / Tensor; lhs only for Dag / Conj / Dual
};

struct Env {
    std::map<std::string, Morphism> generators;
};

// Throws SyntaxError with the byte offset of the offending token.
ExprPtr parse(const std::string& text);

// parse(print(e)) reproduces e.
std::string print(const Expr& e);
std::string print(const ExprPtr& e);

struct Signature {
    WireWord dom;
    WireWord cod;
};

// Throws UnknownGenerator / TypeMismatch.
Signature typecheck(const Expr& e, const Env& env);

Morphism evaluate(const Expr& e, const Env& env);
Morphism evaluate(const ExprPtr& e, const Env& env);

struct EqualityReport {
    bool pass = false;
    double deviation = 0.0;
};

// Entrywise comparison of the two evaluated sides; throws SignatureMismatch
// when the inferred signatures differ.
EqualityReport check_equal(const Expr& e1, const Expr& e2, const Env& env,
                           const Tolerance& tol = {});
EqualityReport check_equal(const std::string& e1, const std::string& e2,
                           const Env& env, const Tolerance& tol = {});

}  // namespace qfrob

#endif
