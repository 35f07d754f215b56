#include <cstring>

#include "acceptance.hpp"
#include "atl/atl.h"
#include "qarith.hpp"

struct atl_ctx {
    atl::FieldCtx ctx;
};

struct atl_rep {
    atl::Representation rep;
};

namespace {

using atl::json;

thread_local std::string g_error;

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

atl_status fail(atl_status s, const std::string& msg) {
    g_error = msg;
    return s;
}

template <class F>
atl_status guard(F&& f) {
    g_error.clear();
    try {
        f();
        return ATL_OK;
    } catch (const json::exception& e) {
        return fail(ATL_ERR_PARSE, e.what());
    } catch (const atl::DimensionBudgetExceeded& e) {
        return fail(ATL_ERR_BUDGET, e.what());
    } catch (const atl::Inconclusive& e) {
        return fail(ATL_ERR_BUDGET, e.what());
    } catch (const atl::ConditionNotMet& e) {
        return fail(ATL_ERR_CONDITION, e.what());
    } catch (const atl::NotSuccessor& e) {
        return fail(ATL_ERR_CONDITION, e.what());
    } catch (const atl::HypothesisNotMet& e) {
        return fail(ATL_ERR_HYPOTHESIS, e.what());
    } catch (const atl::PoleError& e) {
        return fail(ATL_ERR_POLE, e.what());
    } catch (const atl::UnsupportedScalar& e) {
        return fail(ATL_ERR_UNSUPPORTED, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(ATL_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(ATL_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(ATL_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(ATL_ERR_INTERNAL, "unknown error");
    }
}

void need(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void put(char** out, const json& j) {
    need(out != nullptr, "null output pointer");
    *out = dup(j.dump());
}

void check_sector(int N, int d) {
    need(N >= 1 && N <= 24, "N must be in 1..24");
    need(std::abs(d) <= N && (N - d) % 2 == 0, "d must satisfy |d| <= N and d = N mod 2");
}

json luq_json(const atl::LUqModule& m) {
    json E = json::array(), F = json::array();
    for (auto& e : m.E) E.push_back(atl::sparse_json(e));
    for (auto& f : m.F) F.push_back(atl::sparse_json(f));
    return {{"label", m.label}, {"dim", m.dim}, {"weights", m.weight}, {"names", m.names}, {"E", E}, {"F", F}};
}

}  // namespace

extern "C" {

const char* atl_last_error(void) { return g_error.c_str(); }

const char* atl_status_name(atl_status s) {
    switch (s) {
        case ATL_OK: return "ok";
        case ATL_ERR_INVALID_ARGUMENT: return "invalid argument";
        case ATL_ERR_PARSE: return "parse error";
        case ATL_ERR_UNSUPPORTED: return "unsupported";
        case ATL_ERR_CONDITION: return "condition not met";
        case ATL_ERR_HYPOTHESIS: return "hypothesis not met";
        case ATL_ERR_BUDGET: return "budget exceeded";
        case ATL_ERR_POLE: return "pole";
        case ATL_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

void atl_free_string(char* s) { std::free(s); }

const char* atl_version(void) { return "1.0.0"; }

atl_status atl_ctx_create(const char* q, const char* z, atl_ctx** out) {
    return guard([&] {
        need(q && z && out, "null argument");
        *out = new atl_ctx{atl::build_ctx(q, z)};
    });
}

void atl_ctx_destroy(atl_ctx* ctx) { delete ctx; }

atl_status atl_ctx_json(const atl_ctx* ctx, char** out) {
    return guard([&] {
        need(ctx, "null context");
        put(out, atl::ctx_json(ctx->ctx));
    });
}

atl_status atl_qarith(const atl_ctx* c, const char* op, long m, long n, char** out) {
    return guard([&] {
        need(c && op, "null argument");
        const atl::FieldCtx& ctx = c->ctx;
        std::string o = op;
        atl::Scalar v;
        if (o == "qnum") v = atl::qnum(m, ctx);
        else if (o == "qfact") {
            need(m >= 0, "qfact needs m >= 0");
            v = atl::qfact(m, ctx);
        } else if (o == "qbin") v = atl::qbin(m, n, ctx);
        else if (o == "lucas") {
            need(!ctx.generic, "lucas needs a root of unity");
            v = atl::qbin_lucas(m, n, ctx);
        } else if (o == "limit") v = atl::limit_at_root(atl::qnum_sym(m), atl::qnum_sym(n), ctx);
        else throw std::invalid_argument("unknown qarith operation '" + o + "'");
        put(out, {{"op", o}, {"m", m}, {"n", n}, {"value", atl::scalar_json(v)}, {"text", v.str()}});
    });
}

atl_status atl_diagram_generator(int N, const char* name, char** out) {
    return guard([&] {
        need(name && N >= 1, "bad generator request");
        std::string s = name;
        atl::Diagram d = atl::Diagram::identity(N);
        if (s == "id") d = atl::Diagram::identity(N);
        else if (s == "omega") d = atl::Diagram::omega(N, 1);
        else if (s == "omega^-1") d = atl::Diagram::omega(N, -1);
        else if (s.size() > 1 && s[0] == 'e') {
            int i = std::stoi(s.substr(1));
            need(i >= 1 && i <= N, "generator index out of range");
            d = atl::Diagram::e(i, N);
        } else
            throw std::invalid_argument("unknown generator '" + s + "'");
        put(out, d.to_json());
    });
}

atl_status atl_diagram_compose(const char* a_json, const char* b_json, char** out) {
    return guard([&] {
        need(a_json && b_json, "null argument");
        auto a = atl::Diagram::from_json(json::parse(a_json)), b = atl::Diagram::from_json(json::parse(b_json));
        auto w = atl::compose(a, b);
        put(out, {{"diagram", w.diagram.to_json()}, {"beta_power", w.beta_power}, {"text", w.diagram.str()}});
    });
}

atl_status atl_diagram_check_relations(int N, char** out) {
    return guard([&] {
        need(N >= 1 && N <= 12, "N must be in 1..12");
        atl::DiagramAlgebra alg{N};
        auto fails = atl::check_genrel(N, alg);
        put(out, {{"N", N}, {"ok", fails.empty()}, {"failures", fails}});
    });
}

atl_status atl_rep_cell(const atl_ctx* c, int N, int d, atl_rep** out) {
    return guard([&] {
        need(c && out, "null argument");
        check_sector(N, d);
        need(d >= 0, "cellular modules need d >= 0");
        *out = new atl_rep{atl::CellModule(N, d, c->ctx.z, c->ctx).rep()};
    });
}

atl_status atl_rep_chain(const atl_ctx* c, int N, int sign, int has_sector, int d, atl_rep** out) {
    return guard([&] {
        need(c && out, "null argument");
        need(sign == 1 || sign == -1, "sign must be +1 or -1");
        std::optional<int> sec;
        if (has_sector) {
            check_sector(N, d);
            sec = d;
        } else {
            need(N >= 1 && N <= 16, "N must be in 1..16 for the whole chain");
        }
        *out = new atl_rep{atl::build_chain(N, c->ctx.z, sign, sec, c->ctx)};
    });
}

void atl_rep_destroy(atl_rep* rep) { delete rep; }

int atl_rep_dim(const atl_rep* rep) { return rep ? rep->rep.dim : -1; }

atl_status atl_rep_json(const atl_rep* rep, char** out) {
    return guard([&] {
        need(rep, "null representation");
        put(out, atl::rep_json(rep->rep));
    });
}

atl_status atl_rep_check_relations(const atl_rep* rep, char** out) {
    return guard([&] {
        need(rep, "null representation");
        auto fails = atl::check_relations(rep->rep);
        put(out, {{"label", rep->rep.label}, {"dim", rep->rep.dim}, {"ok", fails.empty()}, {"failures", fails}});
    });
}

atl_status atl_hom_dim(const atl_rep* a, const atl_rep* b, int* out) {
    return guard([&] {
        need(a && b && out, "null argument");
        *out = atl::hom_dim(a->rep, b->rep);
    });
}

atl_status atl_identity_intertwines(const atl_rep* a, const atl_rep* b, char** out) {
    return guard([&] {
        need(a && b, "null argument");
        need(a->rep.dim == b->rep.dim, "dimensions differ");
        auto r = atl::verify_intertwiner(atl::SparseMat::identity(a->rep.dim), a->rep, b->rep);
        put(out, {{"ok", r.ok}, {"failing_generator", r.failing_generator ? json(*r.failing_generator) : json(nullptr)}});
    });
}

atl_status atl_cell_basis(int N, int d, char** out) {
    return guard([&] {
        check_sector(N, d);
        need(d >= 0, "cellular modules need d >= 0");
        json basis = json::array();
        for (auto& g : atl::link_basis(N, d).elements()) basis.push_back(g.to_json());
        put(out, {{"N", N}, {"d", d}, {"dim", basis.size()}, {"basis", basis}});
    });
}

atl_status atl_cell_gram(const atl_ctx* c, int N, int d, char** out) {
    return guard([&] {
        need(c, "null context");
        check_sector(N, d);
        need(d >= 0, "cellular modules need d >= 0");
        atl::Matrix G = atl::gram(N, d, c->ctx);
        json rows = json::array();
        for (int i = 0; i < G.rows(); ++i) {
            json row = json::array();
            for (int j = 0; j < G.cols(); ++j) row.push_back(atl::scalar_json(G.at(i, j)));
            rows.push_back(row);
        }
        put(out, {{"N", N}, {"d", d}, {"ctx", atl::ctx_json(c->ctx)}, {"gram", rows}, {"rank", atl::rank(G)}});
    });
}

atl_status atl_chain_mdsa(const atl_ctx* c, int N, int d, char** out) {
    return guard([&] {
        need(c, "null context");
        check_sector(N, d);
        need(d >= 0, "the map needs d >= 0");
        const atl::FieldCtx& ctx = c->ctx;
        atl::SparseMat i = atl::mdsa_map(N, d, ctx.z, ctx);
        auto W = atl::CellModule(N, d, ctx.z, ctx).rep();
        auto X = atl::build_chain(N, ctx.z, 1, d, ctx);
        auto rep = atl::verify_intertwiner(i, W, X);
        auto succ = atl::direct_A_successor(N, d, ctx.z, ctx);
        json s = succ ? json(atl::pair_json({succ->first, succ->second})) : json(nullptr);
        put(out, {{"N", N},
                  {"d", d},
                  {"matrix", atl::sparse_json(i)},
                  {"linear", rep.ok},
                  {"failing_generator", rep.failing_generator ? json(*rep.failing_generator) : json(nullptr)},
                  {"rank", atl::rank(i.dense())},
                  {"dim", W.dim},
                  {"A_successor", s}});
    });
}

atl_status atl_luq_fusion(const atl_ctx* c, int i, char** out) {
    return guard([&] {
        need(c && i >= 0, "bad fusion request");
        json reps = json::array();
        bool ok = true;
        for (auto& r : atl::fusion_check(i, c->ctx)) {
            ok = ok && r.ok();
            reps.push_back({{"product", r.product},
                            {"prediction", r.prediction},
                            {"dim", r.dim},
                            {"weights_match", r.weights_match},
                            {"highest_weights_match", r.highest_weights_match},
                            {"isomorphic", r.isomorphic},
                            {"vectors_ok", r.vectors_ok},
                            {"notes", r.notes}});
        }
        put(out, {{"i", i}, {"ok", ok}, {"reports", reps}});
    });
}

atl_status atl_luq_projective(const atl_ctx* c, int i, int dump, char** out) {
    return guard([&] {
        need(c && i >= 0, "bad projective request");
        need(!c->ctx.generic, "projective modules need a root of unity");
        auto rep = atl::check_projective(i, c->ctx);
        json j = {{"i", i},
                  {"ok", rep.ok()},
                  {"dim", rep.dim},
                  {"axioms", rep.axioms},
                  {"sub_is_weyl_j", rep.sub_is_weyl_j},
                  {"quotient_is_weyl_i", rep.quotient_is_weyl_i},
                  {"non_split", rep.non_split},
                  {"failures", rep.failures}};
        if (dump) j["module"] = luq_json(atl::projective(i, c->ctx));
        put(out, j);
    });
}

atl_status atl_luq_sequence(const atl_ctx* c, int N, int d, char** out) {
    return guard([&] {
        need(c, "null context");
        check_sector(N, d);
        const atl::FieldCtx& ctx = c->ctx;
        json seqs = json::array();
        bool ok = true;
        for (int t = std::max(1, std::abs(d)); t <= N; ++t) {
            if ((t - d) % 2 || t < d) continue;
            atl::Scalar x = ctx.z * ctx.qpow((t - d) / 2);
            if (!atl::satisfies_B(d, ctx.z, t, x, ctx)) continue;
            for (int which : {1, 2}) {
                try {
                    auto r = atl::exact_sequence_check(which, d, ctx.z, t, x, N, ctx);
                    ok = ok && r.ok();
                    seqs.push_back({{"which", which},
                                    {"t", t},
                                    {"label", r.label},
                                    {"ok", r.ok()},
                                    {"rank_first", r.rank_first},
                                    {"nullity_second", r.nullity_second},
                                    {"composite_zero", r.composite_zero},
                                    {"first_linear", r.first_linear},
                                    {"second_linear", r.second_linear}});
                } catch (const atl::HypothesisNotMet& e) {
                    seqs.push_back({{"which", which}, {"t", t}, {"skipped", e.what()}});
                }
            }
        }
        put(out, {{"N", N}, {"d", d}, {"ok", ok}, {"sequences", seqs}});
    });
}

atl_status atl_structure_predict(const atl_ctx* c, int N, int d, const char* side, int sign, char** json_out,
                                 char** dot_out) {
    return guard([&] {
        need(c && side, "null argument");
        check_sector(N, d);
        std::string s = side;
        atl::LoewyDiagram D;
        if (s == "cell") {
            need(d >= 0, "cellular modules need d >= 0");
            D = atl::predict_cellular(N, d, c->ctx.z, c->ctx);
        } else if (s == "chain") {
            need(sign == 1 || sign == -1, "sign must be +1 or -1");
            D = atl::predict_chain(N, d, c->ctx.z, sign, c->ctx);
        } else {
            throw std::invalid_argument("side must be cell or chain");
        }
        put(json_out, atl::loewy_json(D));
        if (dot_out) *dot_out = dup(D.dot());
    });
}

atl_status atl_structure_verify(const atl_ctx* c, int N, int d, int sign, char** out, int* passed) {
    return guard([&] {
        need(c, "null context");
        check_sector(N, d);
        need(d >= 0, "verification runs over d >= 0");
        need(sign == 1 || sign == -1, "sign must be +1 or -1");
        auto r = atl::verify_main(N, d, c->ctx.z, sign, c->ctx);
        if (passed) *passed = r.pass();
        put(out, atl::verify_json(r));
    });
}

atl_status atl_structure_sweep(const char* config_json, void (*progress)(const char*, void*), void* user, char** out,
                               int* passed) {
    return guard([&] {
        need(config_json, "null config");
        auto cfg = atl::sweep_config(json::parse(config_json));
        for (auto& p : atl::expand(cfg)) check_sector(p.N, p.d);
        auto report = atl::run_sweep(cfg, [&](const atl::VerifyReport& r) {
            if (!progress) return;
            std::string line = r.status + " N=" + std::to_string(r.N) + " d=" + std::to_string(r.d) + " z=" + r.z +
                               " sign=" + std::to_string(r.sign);
            if (r.discrepancy) line += ": " + *r.discrepancy;
            progress(line.c_str(), user);
        });
        if (passed) *passed = report.at("fail").get<long>() == 0;
        put(out, report);
    });
}

atl_status atl_acceptance_run(const char* config_json, void (*progress)(const char*, void*), void* user, char** out,
                              int* passed) {
    return guard([&] {
        atl::AcceptanceConfig cfg;
        if (config_json && *config_json) cfg = atl::acceptance_config(json::parse(config_json));
        auto results = atl::run_acceptance(cfg, [&](const atl::CriterionResult& r) {
            if (progress) progress(atl::result_line(r).c_str(), user);
        });
        json crit = json::array();
        bool ok = true;
        for (auto& r : results) {
            ok = ok && r.pass();
            crit.push_back(atl::result_json(r));
        }
        if (passed) *passed = ok;
        put(out, {{"seed", cfg.seed}, {"status", ok ? "pass" : "fail"}, {"criteria", crit}});
    });
}

}  // extern "C"
