#pragma once
// JSON forms of scalars, contexts, matrices and structure reports.

#include "json.hpp"
#include "structure.hpp"

namespace atl {

using json = nlohmann::json;

// {"den": int, "num": [int, ...]} over the field of the scalar; generic values carry the
// numerator and denominator polynomials in q^(1/2)
json scalar_json(const Scalar& a);
json ctx_json(const FieldCtx& ctx);
json matrix_json(const Matrix& m);
json sparse_json(const SparseMat& m);
json rep_json(const Representation& r);
json pair_json(const PairDZ& p);
json loewy_json(const LoewyDiagram& D);
json filtration_json(const Filtration& f);
json verify_json(const VerifyReport& r);

}  // namespace atl
