#pragma once

// Concrete syntax for models and formulas.
//
//   model    := { def NEWLINE }
//   def      := Name [ '(' x {',' x} ')' ] '=' proc
//   proc     := choice [ '|' proc ]
//   choice   := restr [ '+' choice ]
//   restr    := seq { '\' '{' a {',' a} '}' }
//   seq      := prefix '.' seq | atom
//   prefix   := a [ '(' x {',' x} ')' ] | ''' a [ '(' e {',' e} ')' ]
//   atom     := '0' | Name [ '(' e {',' e} ')' ] | '(' proc ')'
//             | 'if' e ('=' | '!=') e 'then' proc 'else' proc
//
//   formula  := conj [ '||' formula ]
//   conj     := unary [ '&&' conj ]
//   unary    := '<' l '>' unary | '[' l ']' unary | '<<' l '>>' unary
//             | '[[' l ']]' unary | ('min' | 'max') X '.' formula
//             | 'tt' | 'ff' | X | '(' formula ')'
//   l        := 'tau' | '-' | [''' ] a [ '(' v {',' v} ')' ]
//
// Newlines separate definitions except inside unclosed () or {}.
// '#' starts a comment that runs to the end of the line.

#include <string>
#include <string_view>

#include "ccswb/ast.hpp"
#include "ccswb/formula.hpp"

namespace ccswb {

// Throws SourceError on any lexical, syntactic or static-semantic problem
// (duplicate definition, unknown call target, arity mismatch, duplicate or
// unbound variable, reserved name).
Model parse_model(std::string_view text);

// Throws SourceError on syntax errors and unbound fixpoint variables.
Formula parse_formula(std::string_view text);

std::string print_process(const Process& p);
std::string print_model(const Model& m);
std::string print_formula(const Formula& f);
std::string print_label_pattern(const LabelPattern& p);

}  // namespace ccswb
