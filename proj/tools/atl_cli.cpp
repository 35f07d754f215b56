// Command-line front end over the C API. JSON goes to stdout, a short summary to stderr.
// Exit codes: 0 success, 1 verification failure, 2 usage error.
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "atl/atl.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ApiError : std::runtime_error {
    atl_status status;
    ApiError(atl_status s, const std::string& m) : std::runtime_error(m), status(s) {}
};

void ok(atl_status s) {
    if (s != ATL_OK) throw ApiError(s, std::string(atl_status_name(s)) + ": " + atl_last_error());
}

// owns a string returned by the library
struct Owned {
    char* p = nullptr;
    ~Owned() { atl_free_string(p); }
    json parse() const { return json::parse(p); }
};

struct Ctx {
    atl_ctx* c = nullptr;
    Ctx(const std::string& q, const std::string& z) { ok(atl_ctx_create(q.c_str(), z.c_str(), &c)); }
    ~Ctx() { atl_ctx_destroy(c); }
};

struct Rep {
    atl_rep* r = nullptr;
    ~Rep() { atl_rep_destroy(r); }
};

int parse_sign(const std::string& s, const std::string& flag) {
    if (s == "+" || s == "1" || s == "+1") return 1;
    if (s == "-" || s == "-1") return -1;
    throw UsageError(flag + ": expected + or -, got '" + s + "'");
}

std::string q_for_ell(int ell, const std::string& q, const std::string& flag) {
    if (!q.empty()) return q;
    if (ell < 1) throw UsageError(flag + ": give --ell >= 1 or --q");
    return ell == 1 ? "-1" : "zeta" + std::to_string(2 * ell);
}

std::string read_file(const std::string& path, const std::string& flag) {
    std::ifstream in(path);
    if (!in) throw UsageError(flag + ": cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void progress_line(const char* s, void*) {
    std::cerr << s << "\n";
    std::cerr.flush();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact representation theory of the affine Temperley-Lieb algebra"};
    app.require_subcommand(1);
    int rc = 0;
    std::function<void()> action;

    // qarith
    auto* qa = app.add_subcommand("qarith", "q-numbers, q-factorials and q-binomials");
    std::string qa_op, qa_q = "generic";
    long qa_m = 0, qa_n = 0;
    qa->add_option("op", qa_op, "qnum, qfact, qbin, lucas or limit")->required()->check(
        CLI::IsMember({"qnum", "qfact", "qbin", "lucas", "limit"}));
    qa->add_option("--m", qa_m, "first argument")->required();
    qa->add_option("--n", qa_n, "second argument");
    qa->add_option("--q", qa_q, "q: zetaM^k, +-1 or generic");
    qa->callback([&] {
        action = [&] {
            Ctx c(qa_q, "1");
            Owned o;
            ok(atl_qarith(c.c, qa_op.c_str(), qa_m, qa_n, &o.p));
            json j = o.parse();
            emit(j);
            std::cerr << qa_op << "(" << qa_m << (qa_op == "qbin" || qa_op == "lucas" || qa_op == "limit" ? "," + std::to_string(qa_n) : "")
                      << ") at q=" << qa_q << " = " << j["text"].get<std::string>() << "\n";
        };
    });

    // diagram
    auto* dg = app.add_subcommand("diagram", "annular diagrams");
    dg->require_subcommand(1);
    int dg_N = 2;
    std::string dg_name, dg_a, dg_b;
    auto* dg_gen = dg->add_subcommand("generator", "a generator as diagram JSON");
    dg_gen->add_option("--N", dg_N)->required();
    dg_gen->add_option("--name", dg_name, "id, omega, omega^-1 or e<i>")->required();
    dg_gen->callback([&] {
        action = [&] {
            Owned o;
            ok(atl_diagram_generator(dg_N, dg_name.c_str(), &o.p));
            emit(o.parse());
        };
    });
    auto* dg_comp = dg->add_subcommand("compose", "the product a*b of two diagrams given as JSON");
    dg_comp->add_option("--a", dg_a)->required();
    dg_comp->add_option("--b", dg_b)->required();
    dg_comp->callback([&] {
        action = [&] {
            Owned o;
            ok(atl_diagram_compose(dg_a.c_str(), dg_b.c_str(), &o.p));
            json j = o.parse();
            emit(j);
            std::cerr << j["text"].get<std::string>() << " times beta^" << j["beta_power"] << "\n";
        };
    });
    auto* dg_rel = dg->add_subcommand("relations", "check the defining relations on diagrams");
    dg_rel->add_option("--N", dg_N)->required();
    dg_rel->callback([&] {
        action = [&] {
            Owned o;
            ok(atl_diagram_check_relations(dg_N, &o.p));
            json j = o.parse();
            emit(j);
            std::cerr << "relations at N=" << dg_N << (j["ok"].get<bool>() ? ": all hold\n" : ": FAIL\n");
            if (!j["ok"].get<bool>()) rc = 1;
        };
    });

    // cell
    auto* cl = app.add_subcommand("cell", "cellular modules");
    cl->require_subcommand(1);
    int cl_N = 2, cl_d = 0;
    std::string cl_q = "generic", cl_z = "1";
    auto add_cell_opts = [&](CLI::App* s, bool with_ctx) {
        s->add_option("--N", cl_N)->required();
        s->add_option("--d", cl_d)->required();
        if (with_ctx) {
            s->add_option("--q", cl_q);
            s->add_option("--z", cl_z);
        }
    };
    auto* cl_basis = cl->add_subcommand("basis", "the link-pattern basis");
    add_cell_opts(cl_basis, false);
    cl_basis->callback([&] {
        action = [&] {
            Owned o;
            ok(atl_cell_basis(cl_N, cl_d, &o.p));
            json j = o.parse();
            emit(j);
            std::cerr << "dim W(" << cl_N << ";" << cl_d << ") = " << j["dim"] << "\n";
        };
    });
    auto* cl_gram = cl->add_subcommand("gram", "the Gram matrix of the invariant form");
    add_cell_opts(cl_gram, true);
    cl_gram->callback([&] {
        action = [&] {
            Ctx c(cl_q, cl_z);
            Owned o;
            ok(atl_cell_gram(c.c, cl_N, cl_d, &o.p));
            json j = o.parse();
            emit(j);
            std::cerr << "Gram of W(" << cl_N << ";" << cl_d << ") has rank " << j["rank"] << "\n";
        };
    });
    auto* cl_rel = cl->add_subcommand("relations", "check the defining relations on the module");
    add_cell_opts(cl_rel, true);
    cl_rel->callback([&] {
        action = [&] {
            Ctx c(cl_q, cl_z);
            Rep r;
            ok(atl_rep_cell(c.c, cl_N, cl_d, &r.r));
            Owned o;
            ok(atl_rep_check_relations(r.r, &o.p));
            json j = o.parse();
            emit(j);
            if (!j["ok"].get<bool>()) rc = 1;
            std::cerr << (rc ? "FAIL" : "relations hold") << "\n";
        };
    });

    // chain
    auto* ch = app.add_subcommand("chain", "the periodic XXZ chain");
    ch->require_subcommand(1);
    int ch_N = 2, ch_d = 0;
    std::string ch_q = "generic", ch_z = "1", ch_sign = "+";
    std::optional<int> ch_sector;
    auto add_chain_opts = [&](CLI::App* s) {
        s->add_option("--N", ch_N)->required();
        s->add_option("--q", ch_q);
        s->add_option("--z", ch_z);
        s->add_option("--sign", ch_sign, "+ or -");
        s->add_option("--sector", ch_sector, "S^z sector d; the whole chain when absent");
    };
    auto build = [&](Rep& r, const Ctx& c) {
        int sign = parse_sign(ch_sign, "--sign");
        ok(atl_rep_chain(c.c, ch_N, sign, ch_sector.has_value(), ch_sector.value_or(0), &r.r));
    };
    auto* ch_build = ch->add_subcommand("build", "generator matrices");
    add_chain_opts(ch_build);
    ch_build->callback([&] {
        action = [&] {
            Ctx c(ch_q, ch_z);
            Rep r;
            build(r, c);
            Owned o;
            ok(atl_rep_json(r.r, &o.p));
            emit(o.parse());
            std::cerr << "chain of dimension " << atl_rep_dim(r.r) << "\n";
        };
    });
    auto* ch_rel = ch->add_subcommand("verify-relations", "check the defining relations on the chain");
    add_chain_opts(ch_rel);
    ch_rel->callback([&] {
        action = [&] {
            Ctx c(ch_q, ch_z);
            Rep r;
            build(r, c);
            Owned o;
            ok(atl_rep_check_relations(r.r, &o.p));
            json j = o.parse();
            emit(j);
            if (!j["ok"].get<bool>()) rc = 1;
            std::cerr << (rc ? "FAIL" : "relations hold") << " on dimension " << atl_rep_dim(r.r) << "\n";
        };
    });
    auto* ch_mdsa = ch->add_subcommand("mdsa", "the map from W(N;d,z) into the chain sector");
    ch_mdsa->add_option("--N", ch_N)->required();
    ch_mdsa->add_option("--d", ch_d)->required();
    ch_mdsa->add_option("--q", ch_q);
    ch_mdsa->add_option("--z", ch_z);
    ch_mdsa->callback([&] {
        action = [&] {
            Ctx c(ch_q, ch_z);
            Owned o;
            ok(atl_chain_mdsa(c.c, ch_N, ch_d, &o.p));
            json j = o.parse();
            emit(j);
            if (!j["linear"].get<bool>()) rc = 1;
            std::cerr << "rank " << j["rank"] << " of " << j["dim"] << (rc ? ", NOT linear" : ", linear") << "\n";
        };
    });

    // luq
    auto* lq = app.add_subcommand("luq", "the quantum group at a root of unity");
    lq->require_subcommand(1);
    int lq_ell = 0, lq_i = 0, lq_N = 2, lq_d = 0;
    std::string lq_q, lq_z = "1";
    bool lq_dump = false;
    auto* lq_fus = lq->add_subcommand("fusion", "fusion of L(i) and P(i) with L(1)");
    lq_fus->add_option("--ell", lq_ell);
    lq_fus->add_option("--q", lq_q);
    lq_fus->add_option("--i", lq_i)->required();
    lq_fus->callback([&] {
        action = [&] {
            Ctx c(q_for_ell(lq_ell, lq_q, "--ell"), "1");
            Owned o;
            ok(atl_luq_fusion(c.c, lq_i, &o.p));
            json j = o.parse();
            emit(j);
            for (auto& r : j["reports"])
                std::cerr << r["product"].get<std::string>() << " = " << r["prediction"].get<std::string>() << "\n";
            if (!j["ok"].get<bool>()) rc = 1;
        };
    });
    auto* lq_proj = lq->add_subcommand("projective", "the projective cover T(i)");
    lq_proj->add_option("--ell", lq_ell);
    lq_proj->add_option("--q", lq_q);
    lq_proj->add_option("--i", lq_i)->required();
    lq_proj->add_flag("--dump", lq_dump, "include the matrices of E^(n), F^(n)");
    lq_proj->callback([&] {
        action = [&] {
            Ctx c(q_for_ell(lq_ell, lq_q, "--ell"), "1");
            Owned o;
            ok(atl_luq_projective(c.c, lq_i, lq_dump, &o.p));
            json j = o.parse();
            emit(j);
            if (!j["ok"].get<bool>()) rc = 1;
            std::cerr << "T(" << lq_i << ") of dimension " << j["dim"] << (rc ? ": FAIL" : ": non-split extension of Weyl modules")
                      << "\n";
        };
    });
    auto* lq_seq = lq->add_subcommand("sequence", "exact sequences of chain sectors at (N, d, z)");
    lq_seq->add_option("--N", lq_N)->required();
    lq_seq->add_option("--d", lq_d)->required();
    lq_seq->add_option("--z", lq_z);
    lq_seq->add_option("--ell", lq_ell);
    lq_seq->add_option("--q", lq_q);
    lq_seq->callback([&] {
        action = [&] {
            Ctx c(q_for_ell(lq_ell, lq_q, "--ell"), lq_z);
            Owned o;
            ok(atl_luq_sequence(c.c, lq_N, lq_d, &o.p));
            json j = o.parse();
            emit(j);
            if (!j["ok"].get<bool>()) rc = 1;
            std::cerr << j["sequences"].size() << " sequences, " << (rc ? "FAIL" : "all exact") << "\n";
        };
    });

    // structure
    auto* st = app.add_subcommand("structure", "Loewy diagrams of cellular modules and chain sectors");
    st->require_subcommand(1);
    int st_N = 2, st_d = 0;
    std::string st_q = "generic", st_z = "1", st_side = "chain", st_sign = "+", st_sweep, st_out;
    bool st_dot = false;
    auto* st_pred = st->add_subcommand("predict", "the predicted Loewy diagram");
    st_pred->add_option("--N", st_N)->required();
    st_pred->add_option("--d", st_d)->required();
    st_pred->add_option("--q", st_q);
    st_pred->add_option("--z", st_z);
    st_pred->add_option("--side", st_side, "cell or chain")->check(CLI::IsMember({"cell", "chain"}));
    st_pred->add_option("--sign", st_sign, "+ or -");
    st_pred->add_flag("--dot", st_dot, "print DOT instead of JSON on stdout");
    st_pred->callback([&] {
        action = [&] {
            Ctx c(st_q, st_z);
            Owned j, d;
            ok(atl_structure_predict(c.c, st_N, st_d, st_side.c_str(), parse_sign(st_sign, "--sign"), &j.p, &d.p));
            if (st_dot) std::cout << d.p;
            else emit(j.parse());
            std::cerr << d.p;
        };
    });
    auto* st_ver = st->add_subcommand("verify", "compute the structure of a chain sector and compare");
    st_ver->add_option("--N", st_N);
    st_ver->add_option("--d", st_d);
    st_ver->add_option("--q", st_q);
    st_ver->add_option("--z", st_z);
    st_ver->add_option("--sign", st_sign, "+ or -");
    st_ver->add_option("--sweep", st_sweep, "sweep config JSON file");
    st_ver->add_option("--out-dir", st_out, "directory for the sweep report and DOT files");
    st_ver->callback([&] {
        action = [&] {
            if (!st_sweep.empty()) {
                json cfg = json::parse(read_file(st_sweep, "--sweep"), nullptr, false);
                if (cfg.is_discarded()) throw UsageError("--sweep: not valid JSON");
                if (!st_out.empty()) cfg["output_dir"] = st_out;
                Owned o;
                int passed = 0;
                ok(atl_structure_sweep(cfg.dump().c_str(), progress_line, nullptr, &o.p, &passed));
                json j = o.parse();
                emit(j);
                std::cerr << j["pass"] << " pass, " << j["fail"] << " fail, " << j["inconclusive"] << " inconclusive, "
                          << j["skipped"] << " skipped\n";
                rc = passed ? 0 : 1;
                return;
            }
            if (st_ver->count("--N") == 0) throw UsageError("--N: required without --sweep");
            Ctx c(st_q, st_z);
            Owned o;
            int passed = 0;
            ok(atl_structure_verify(c.c, st_N, st_d, parse_sign(st_sign, "--sign"), &o.p, &passed));
            json j = o.parse();
            emit(j);
            std::cerr << j["status"].get<std::string>();
            if (!j["discrepancy"].is_null()) std::cerr << ": " << j["discrepancy"].get<std::string>();
            std::cerr << "\n";
            rc = passed ? 0 : 1;
        };
    });

    // acceptance
    auto* ac = app.add_subcommand("acceptance", "run the acceptance suite");
    std::string ac_config, ac_report;
    std::vector<std::string> ac_only;
    std::optional<uint64_t> ac_seed;
    bool ac_negative = false;
    ac->add_option("--config", ac_config, "config JSON file");
    ac->add_option("--only", ac_only, "criterion keys or numbers to run");
    ac->add_option("--seed", ac_seed, "seed for randomized checks");
    ac->add_flag("--negative-control", ac_negative, "add a check that must fail");
    ac->add_option("--report", ac_report, "also write the JSON report to this file");
    ac->callback([&] {
        action = [&] {
            json cfg = json::object();
            if (!ac_config.empty()) {
                cfg = json::parse(read_file(ac_config, "--config"), nullptr, false);
                if (cfg.is_discarded() || !cfg.is_object()) throw UsageError("--config: not a JSON object");
            }
            if (!ac_only.empty()) cfg["only"] = ac_only;
            if (ac_seed) cfg["seed"] = *ac_seed;
            if (ac_negative) cfg["negative_control"] = true;
            Owned o;
            int passed = 0;
            ok(atl_acceptance_run(cfg.dump().c_str(), progress_line, nullptr, &o.p, &passed));
            json j = o.parse();
            emit(j);
            if (!ac_report.empty()) std::ofstream(ac_report) << j.dump(2) << "\n";
            for (auto& c : j["criteria"])
                if (c["status"] == "fail")
                    for (auto& n : c["notes"]) std::cerr << "  " << c["key"].get<std::string>() << ": " << n.get<std::string>() << "\n";
            rc = passed ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        if (action) action();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ApiError& e) {
        std::cerr << "error: " << e.what() << "\n";
        bool usage = e.status == ATL_ERR_INVALID_ARGUMENT || e.status == ATL_ERR_PARSE || e.status == ATL_ERR_UNSUPPORTED;
        return usage ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
