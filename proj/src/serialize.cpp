#include "serialize.hpp"

namespace atl {

namespace {

json int_json(const mpz_class& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

json cyclo_json(const Cyclo& c) {
    json num = json::array();
    for (auto& v : c.numerators()) num.push_back(int_json(v));
    return {{"den", int_json(c.denominator())}, {"num", num}};
}

json poly_json(const Poly& p) {
    json coeffs = json::array();
    for (auto& c : p.coeffs()) coeffs.push_back(cyclo_json(c));
    return {{"low", p.low()}, {"coeffs", coeffs}};
}

}  // namespace

json scalar_json(const Scalar& a) {
    if (a.is_cyclo()) return cyclo_json(a.cyclo());
    RatFn r = a.ratfn();
    // coefficients live in Q(i)
    return {{"var", "q^(1/2)"}, {"field_M", 4}, {"num", poly_json(r.num())}, {"den", poly_json(r.den())}};
}

json ctx_json(const FieldCtx& ctx) {
    if (ctx.generic)
        return {{"M", nullptr},   {"q", nullptr},         {"z", nullptr}, {"u", nullptr},
                {"ell", nullptr}, {"generic", true},      {"z_half", ctx.z_half},
                {"z_coeff", scalar_json(Scalar(ctx.zc))}, {"describe", ctx.describe()}};
    json u = ctx.u_exp >= 0 ? json(ctx.u_exp) : json(nullptr);
    return {{"M", ctx.M},     {"q", ctx.q_exp},   {"z", ctx.z_exp},
            {"u", u},         {"ell", ctx.ell},   {"generic", false},
            {"describe", ctx.describe()}};
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m.at(i, j)));
        rows.push_back(row);
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json sparse_json(const SparseMat& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (auto& [j, v] : m.row(i)) entries.push_back({{"row", i}, {"col", j}, {"value", scalar_json(v)}});
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"nonzeros", entries}};
}

json rep_json(const Representation& r) {
    json gens = json::object();
    for (auto& [name, M] : r.generators()) gens[name] = sparse_json(*M);
    return {{"label", r.label}, {"N", r.N}, {"dim", r.dim}, {"generators", gens}};
}

json pair_json(const PairDZ& p) { return {{"d", p.d}, {"z", scalar_json(p.z)}, {"label", pair_label(p)}}; }

json loewy_json(const LoewyDiagram& D) {
    json nodes = json::array(), arrows = json::array();
    for (auto& n : D.nodes)
        nodes.push_back({{"d", n.pair.d}, {"z", scalar_json(n.pair.z)}, {"label", n.label}, {"dim", n.dim}});
    for (auto [a, b] : D.arrows) arrows.push_back({a, b});
    return {{"title", D.title}, {"subcase", D.subcase}, {"nodes", nodes},
            {"arrows", arrows}, {"layers", D.layers}, {"total_dim", D.total_dim()}};
}

json filtration_json(const Filtration& f) {
    json layers = json::array();
    for (auto& l : f.layers) layers.push_back({{"dim", l.dim}, {"factors", l.factors}, {"factor_dims", l.factor_dims}});
    return {{"layers", layers}, {"complete", f.complete}, {"note", f.note}};
}

json verify_json(const VerifyReport& r) {
    return {{"N", r.N},
            {"d", r.d},
            {"sign", r.sign},
            {"z", r.z},
            {"status", r.status},
            {"predicted", loewy_json(r.predicted)},
            {"computed", filtration_json(r.computed)},
            {"checks", r.checks},
            {"discrepancy", r.discrepancy ? json(*r.discrepancy) : json(nullptr)}};
}

}  // namespace atl
