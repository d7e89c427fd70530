#ifndef FMETHOD_SERIALIZE_HPP
#define FMETHOD_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "fmethod/solver.hpp"
#include "fmethod/verify.hpp"

namespace fmethod {

// All JSON emission uses ordered_json with insertion-ordered keys and exact
// coefficient strings, so a given input produces byte-identical output
// regardless of thread count or platform word size.
using Json = nlohmann::ordered_json;

Json json_ratfunc(const RatFunc& r);          // canonical text form
Json json_fiber_matrix(const FiberMatrix& m); // string for 1x1, row arrays otherwise
Json json_fiber_poly(const FiberPoly& p);
Json json_weyl(const WeylElement& t);
Json json_weight(const RepWeight& w);
Json json_singular_vector(const SingularVector& sv);
Json json_operator(const DiffOperator& d);
Json json_outcome(const FSetting& s, const SolveOptions& opt, const SolveOutcome& out);
Json json_equivariance(const EquivarianceReport& rep);

// dump(2) with a trailing newline; the single exit point for artifact bytes.
std::string dump_json(const Json& j);

// Plain-text report mirrors of the JSON artifacts.
std::string text_outcome(const FSetting& s, const SolveOutcome& out);
std::string text_operator(const DiffOperator& d);

// LaTeX fragments (no preamble). Variable names render with trailing digits
// as subscripts and recognized Greek letters with a backslash, so "zeta1"
// becomes \zeta_{1} and "lambda" becomes \lambda.
std::string latex_name(const std::string& name);
std::string latex_rational(const BigRat& c);
std::string latex_mpoly(const MPoly& p);
std::string latex_ratfunc(const RatFunc& r);
std::string latex_fiber_poly(const FiberPoly& p);
std::string latex_weyl(const WeylElement& t);
std::string latex_outcome(const FSetting& s, const SolveOutcome& out);
std::string latex_operator(const DiffOperator& d);

} // namespace fmethod

#endif
