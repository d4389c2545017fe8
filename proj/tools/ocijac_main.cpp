// ocijac — exact-arithmetic workbench for generalized Jacobian rings of open
// complete intersections. Subcommands compute graded-piece dimensions,
// logarithmic Hodge numbers, trace/duality pairings, Koszul exactness
// reports, Gauss-Manin kernels and Noether-Lefschetz codimension bounds.
//
// Exit codes: 0 success / claims verified, 1 a claimed identity failed
// numerically, 2 usage or input error, 3 smoothness diagnostic failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "ocijac/ocijac.hpp"

using json = nlohmann::ordered_json;
using namespace ocijac;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSmoothness = 3;

json envelope(const std::string& command, const ConfigFile* cf, json result) {
    json j;
    j["command"] = command;
    j["config_digest"] = cf ? json(cf->digest) : json(nullptr);
    j["field"] = cf ? json(cf->field.name()) : json(nullptr);
    j["result"] = std::move(result);
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<long> parse_degree_list(const std::string& text) {
    std::vector<long> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("empty entry in degree list");
        item = item.substr(a, b - a + 1);
        if (item.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("degree list entries must be positive integers");
        out.push_back(std::stol(item));
    }
    return out;
}

struct CommonOpts {
    std::string config_path;
    bool json_out = false;
};

template <class F>
SubspaceSpec<F> resolve_subspace(const JacobianRing<F>& ring, const std::string& subspace_path,
                                 bool have_codim, long codim, std::uint64_t seed) {
    if (!subspace_path.empty()) return read_subspace_file(ring, subspace_path);
    if (have_codim) return random_subspace(ring, codim, seed);
    return full_subspace(ring);
}

int cmd_dim(const ConfigFile& cf, int q, long ell, bool json_out) {
    return with_ring(cf, [&](const auto& ring) {
        auto pc = ring.piece(GradedIndex{q, ell});
        if (json_out) {
            json r;
            r["q"] = q;
            r["ell"] = ell;
            r["dim_A"] = pc->ambient.dim();
            r["ideal_rank"] = pc->ideal_rank;
            r["dim"] = pc->dim;
            emit(envelope("dim", &cf, r));
        } else {
            std::cout << "B_" << q << "(" << ell << "): dim " << pc->dim << "  (ambient "
                      << pc->ambient.dim() << ", ideal rank " << pc->ideal_rank << ")\n";
        }
        return kExitOk;
    });
}

int cmd_hodge(const ConfigFile& cf, long ell, bool full, bool json_out) {
    return with_ring(cf, [&](const auto& ring) {
        HodgeTable t = hodge_table(ring, ell);
        if (json_out) {
            json rows = json::array();
            for (const auto& e : t.entries) {
                json row;
                row["p"] = e.p;
                row["q"] = e.q;
                row["ell"] = e.ell;
                row["prim"] = e.prim;
                row["full"] = e.full;
                rows.push_back(row);
            }
            json r;
            r["m"] = t.m;
            r["ell"] = t.ell;
            r["rows"] = rows;
            emit(envelope("hodge", &cf, r));
        } else {
            std::cout << "log Hodge numbers (l=" << ell << "), fiber dimension m=" << t.m << "\n";
            std::cout << std::setw(4) << "p" << std::setw(4) << "q" << std::setw(10) << "prim";
            if (full) std::cout << std::setw(10) << "full";
            std::cout << "\n";
            for (const auto& e : t.entries) {
                std::cout << std::setw(4) << e.p << std::setw(4) << e.q << std::setw(10) << e.prim;
                if (full) std::cout << std::setw(10) << e.full;
                std::cout << "\n";
            }
        }
        return kExitOk;
    });
}

int cmd_trace(const ConfigFile& cf, bool json_out) {
    return with_ring(cf, [&](const auto& ring) {
        auto tp = trace_piece(ring);
        if (json_out) {
            json r;
            r["q"] = tp.idx.q;
            r["ell"] = tp.idx.ell;
            r["dim"] = tp.dim;
            r["ok"] = tp.ok;
            r["zero_map_convention"] = tp.zero_map_convention;
            r["socle_monomial"] = tp.ok ? json(tp.socle_monomial) : json(nullptr);
            emit(envelope("trace", &cf, r));
        } else {
            if (tp.zero_map_convention) {
                std::cout << "r > n: pairing is the zero map by convention; no trace piece\n";
            } else {
                std::cout << "trace piece B_" << tp.idx.q << "(" << tp.idx.ell
                          << "): dim " << tp.dim;
                if (tp.ok)
                    std::cout << ", socle monomial " << tp.socle_monomial << "\n";
                else
                    std::cout << "  [diagnostic: expected dim 1 for a smooth transversal "
                                 "configuration]\n";
            }
        }
        if (tp.zero_map_convention) return kExitOk;
        return tp.ok ? kExitOk : kExitSmoothness;
    });
}

int cmd_pairing(const ConfigFile& cf, int p, long ell, bool check, bool json_out) {
    return with_ring(cf, [&](const auto& ring) {
        auto rep = check ? check_duality(ring, p, ell) : pairing_matrix(ring, p, ell);
        if (json_out) {
            json r;
            r["p"] = rep.p;
            r["ell"] = rep.ell;
            r["left_dim"] = rep.left_dim;
            r["right_dim"] = rep.right_dim;
            r["rank"] = rep.rank;
            r["case"] = to_string(rep.applicable_case);
            r["injectivity_claim"] = rep.injectivity_claim;
            r["verdict"] = to_string(rep.verdict);
            r["zero_map"] = rep.zero_map;
            r["boundary_ell_eq_emax"] = rep.boundary_ell_eq_emax;
            emit(envelope("pairing", &cf, r));
        } else {
            std::cout << "pairing h_" << p << "(" << ell << "): " << rep.left_dim << " x "
                      << rep.right_dim << ", rank " << rep.rank << ", case "
                      << to_string(rep.applicable_case);
            if (check) std::cout << ", verdict " << to_string(rep.verdict);
            if (rep.zero_map) std::cout << " (zero map: r > n)";
            if (rep.boundary_ell_eq_emax) std::cout << " [boundary: l = e_max]";
            std::cout << "\n";
            if (rep.left_dim > 0 && rep.left_dim <= 8 && rep.right_dim > 0 && rep.right_dim <= 8) {
                for (long i = 0; i < rep.left_dim; ++i) {
                    std::cout << "  [";
                    for (long j = 0; j < rep.right_dim; ++j)
                        std::cout << (j ? " " : "")
                                  << ring.field().to_string(rep.matrix.at(i, j));
                    std::cout << "]\n";
                }
            }
        }
        return rep.verdict == DualityVerdict::failed ? kExitClaimFailed : kExitOk;
    });
}

int cmd_eta(const ConfigFile& cf, bool json_out) {
    return with_ring(cf, [&](const auto& ring) {
        EtaReport rep = eta_kernel(ring);
        bool ok = rep.kernel_dim == rep.expected && rep.surjective;
        if (json_out) {
            json r;
            r["source_dim"] = rep.source_dim;
            r["target_dim"] = rep.target_dim;
            r["rank"] = rep.rank;
            r["kernel_dim"] = rep.kernel_dim;
            r["expected"] = rep.expected;
            r["surjective"] = rep.surjective;
            r["ok"] = ok;
            emit(envelope("eta", &cf, r));
        } else {
            std::cout << "eta: source dim " << rep.source_dim << ", target dim " << rep.target_dim
                      << ", rank " << rep.rank << "; kernel " << rep.kernel_dim << " (expected "
                      << rep.expected << "), surjective " << (rep.surjective ? "yes" : "no")
                      << "\n";
        }
        return ok ? kExitOk : kExitClaimFailed;
    });
}

int cmd_koszul(const ConfigFile& cf, int p, long ell, int q, const std::string& subspace_path,
               bool have_codim, long codim, std::uint64_t seed, bool json_out) {
    return with_ring(cf, [&](const auto& ring) {
        auto v = resolve_subspace(ring, subspace_path, have_codim, codim, seed);
        KoszulReport rep = check_exactness(ring, v, p, ell, q);
        if (json_out) {
            json r;
            r["p"] = rep.p;
            r["ell"] = rep.ell;
            r["q"] = rep.q;
            r["codim"] = rep.codim;
            r["dim_source"] = rep.dim_source;
            r["dim_middle"] = rep.dim_middle;
            r["dim_target"] = rep.dim_target;
            r["rank_in"] = rep.rank_in;
            r["rank_out"] = rep.rank_out;
            r["middle_homology"] = rep.middle_homology;
            r["case"] = to_string(rep.condition_case);
            r["exact_claimed"] = rep.exact_claimed;
            r["holds"] = rep.holds;
            r["boundary_ell_low"] = rep.boundary_ell_low;
            emit(envelope("koszul", &cf, r));
        } else {
            std::cout << "koszul p=" << p << " l=" << ell << " q=" << q << " codim=" << rep.codim
                      << ": dims " << rep.dim_source << " -> " << rep.dim_middle << " -> "
                      << rep.dim_target << ", ranks " << rep.rank_in << "/" << rep.rank_out
                      << ", middle homology " << rep.middle_homology << ", case "
                      << to_string(rep.condition_case);
            if (rep.exact_claimed)
                std::cout << (rep.holds ? " => exact" : " => FAILED (expected exactness)");
            else
                std::cout << " (no claim)";
            if (rep.boundary_ell_low) std::cout << " [boundary: l = d_sum-n-1]";
            std::cout << "\n";
        }
        return rep.holds ? kExitOk : kExitClaimFailed;
    });
}

int cmd_nabla(const ConfigFile& cf, int p, int q, const std::string& subspace_path, long c_s,
              bool json_out) {
    return with_ring(cf, [&](const auto& ring) {
        using FT = std::decay_t<decltype(ring.field())>;
        FamilyInput<FT> input{resolve_subspace(ring, subspace_path, false, 0, 0), c_s};
        NablaKernelReport rep = nabla_kernel(ring, input, p, q);
        if (json_out) {
            json r;
            r["p"] = rep.p;
            r["q"] = rep.q;
            r["source_dim"] = rep.source_dim;
            r["rank"] = rep.rank;
            r["kernel_dim"] = rep.kernel_dim;
            r["trivial_expected"] = rep.trivial_expected;
            r["w_codim"] = input.w.codim;
            r["c_S"] = c_s;
            r["condition_case"] = rep.condition_case;
            r["condition_holds"] = rep.condition_holds;
            r["claimed"] = rep.claimed;
            r["holds"] = rep.holds;
            r["ring_level_only"] = rep.ring_level_only;
            emit(envelope("nabla", &cf, r));
        } else {
            std::cout << "nabla kernel at (p,q)=(" << p << "," << q << "), W codim "
                      << input.w.codim << ", c_S " << c_s << ": dim " << rep.kernel_dim
                      << " of " << rep.source_dim;
            if (rep.condition_case == 1)
                std::cout << " (degree condition " << (rep.condition_holds ? "holds" : "fails")
                          << "; expected 0 when it holds)";
            else if (rep.condition_case == 2)
                std::cout << " (degree condition " << (rep.condition_holds ? "holds" : "fails")
                          << "; expected " << rep.trivial_expected << " when it holds)";
            else
                std::cout << " (edge case (0,m): no claim)";
            if (!rep.holds) std::cout << " => FAILED";
            if (rep.ring_level_only)
                std::cout << " [m=1: W is interpreted at ring level only]";
            std::cout << "\n";
        }
        return rep.holds ? kExitOk : kExitClaimFailed;
    });
}

int cmd_nlbound(int n, int r, int s, const std::string& d_list, const std::string& e_list,
                long c_s, bool json_out) {
    std::vector<long> d = parse_degree_list(d_list);
    std::vector<long> e = parse_degree_list(e_list);
    NlBound b = nl_bound(n, r, s, d, e, c_s);
    if (json_out) {
        json r_;
        r_["n"] = n;
        r_["r"] = r;
        r_["s"] = s;
        r_["d"] = d;
        r_["e"] = e;
        r_["c_S"] = c_s;
        r_["bound"] = b.value;
        r_["vacuous"] = b.vacuous;
        emit(envelope("nlbound", nullptr, r_));
    } else {
        std::cout << "codim lower bound: " << b.value << (b.vacuous ? " (vacuous)" : "") << "\n";
    }
    return kExitOk;
}

int cmd_sigma(long d, bool json_out) {
    SigmaReport rep = sigma_component_codim(d);
    if (json_out) {
        json r;
        r["d"] = rep.d;
        r["codim_with_pair"] = rep.codim_with_pair;
        r["codim"] = rep.codim;
        emit(envelope("sigma", nullptr, r));
    } else {
        std::cout << "sharp component: codim " << rep.codim << " in moduli (" << rep.codim_with_pair
                  << " over a fixed point/tangent pair)\n";
    }
    return kExitOk;
}

int cmd_smoothcheck(const ConfigFile& cf, bool json_out) {
    return with_ring(cf, [&](const auto& ring) {
        auto tp = trace_piece(ring);
        bool trace_ok = tp.ok;
        bool symmetric = true;
        bool symmetry_checked = false;
        if (!tp.zero_map_convention && ring.shape().s() == 0 &&
            ring.shape().n >= ring.shape().r() + 1) {
            symmetry_checked = true;
            int m = ring.shape().m();
            for (int q = 0; 2 * q <= m; ++q) {
                long a = hodge_number(ring, m - q, q, 0, HodgeMode::prim);
                long b = hodge_number(ring, q, m - q, 0, HodgeMode::prim);
                if (a != b) {
                    symmetric = false;
                    break;
                }
            }
        }
        bool ok = trace_ok && symmetric && !tp.zero_map_convention;
        if (json_out) {
            json r;
            r["trace_dim"] = tp.dim;
            r["trace_ok"] = trace_ok;
            r["zero_map_convention"] = tp.zero_map_convention;
            r["hodge_symmetry_checked"] = symmetry_checked;
            r["hodge_symmetric"] = symmetric;
            r["ok"] = ok;
            emit(envelope("smoothcheck", &cf, r));
        } else {
            std::cout << "smoothness diagnostics: trace dim " << tp.dim << " ("
                      << (trace_ok ? "ok" : "FAIL") << ")";
            if (symmetry_checked)
                std::cout << ", Hodge symmetry " << (symmetric ? "ok" : "FAIL");
            if (tp.zero_map_convention) std::cout << " (r > n: nothing to check)";
            std::cout << " => " << (ok ? "plausibly smooth" : "NOT smooth/transversal") << "\n";
        }
        if (tp.zero_map_convention) return kExitOk;
        return ok ? kExitOk : kExitSmoothness;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobian-ring workbench for open complete intersections"};
    app.require_subcommand(1);

    // dim
    auto* dim = app.add_subcommand("dim", "dimension of a graded piece B_q(l)");
    CommonOpts dim_o;
    int dim_q = 0;
    long dim_ell = 0;
    dim->add_option("--config", dim_o.config_path)->required();
    dim->add_option("--q", dim_q)->required();
    dim->add_option("--ell", dim_ell)->required();
    dim->add_flag("--json", dim_o.json_out);

    // hodge
    auto* hodge = app.add_subcommand("hodge", "logarithmic Hodge numbers of the open fiber");
    CommonOpts hodge_o;
    long hodge_ell = 0;
    bool hodge_full = false;
    hodge->add_option("--config", hodge_o.config_path)->required();
    hodge->add_option("--ell", hodge_ell);
    hodge->add_flag("--full", hodge_full);
    hodge->add_flag("--json", hodge_o.json_out);

    // trace
    auto* trace = app.add_subcommand("trace", "socle piece and trace functional");
    CommonOpts trace_o;
    trace->add_option("--config", trace_o.config_path)->required();
    trace->add_flag("--json", trace_o.json_out);

    // pairing
    auto* pairing = app.add_subcommand("pairing", "duality pairing h_p(l)");
    CommonOpts pairing_o;
    int pairing_p = 0;
    long pairing_ell = 0;
    bool pairing_check = false;
    pairing->add_option("--config", pairing_o.config_path)->required();
    pairing->add_option("--p", pairing_p)->required();
    pairing->add_option("--ell", pairing_ell)->required();
    pairing->add_flag("--check", pairing_check);
    pairing->add_flag("--json", pairing_o.json_out);

    // eta
    auto* eta = app.add_subcommand("eta", "kernel and surjectivity of the eta map");
    CommonOpts eta_o;
    eta->add_option("--config", eta_o.config_path)->required();
    eta->add_flag("--json", eta_o.json_out);

    // koszul
    auto* koszul = app.add_subcommand("koszul", "Koszul complex exactness report");
    CommonOpts koszul_o;
    int koszul_p = 0, koszul_q = 0;
    long koszul_ell = 0, koszul_codim = 0;
    std::uint64_t koszul_seed = 0;
    std::string koszul_subspace;
    koszul->add_option("--config", koszul_o.config_path)->required();
    koszul->add_option("--p", koszul_p)->required();
    koszul->add_option("--ell", koszul_ell)->required();
    koszul->add_option("--q", koszul_q)->required();
    auto* kc = koszul->add_option("--codim", koszul_codim);
    auto* ks = koszul->add_option("--seed", koszul_seed);
    auto* kf = koszul->add_option("--subspace", koszul_subspace);
    kc->needs(ks);
    ks->needs(kc);
    kf->excludes(kc);
    kf->excludes(ks);
    koszul->add_flag("--json", koszul_o.json_out);

    // nabla
    auto* nabla = app.add_subcommand("nabla", "Gauss-Manin kernel via multiplication by W");
    CommonOpts nabla_o;
    int nabla_p = 0, nabla_q = 0;
    long nabla_cs = 0;
    std::string nabla_subspace;
    nabla->add_option("--config", nabla_o.config_path)->required();
    nabla->add_option("--p", nabla_p)->required();
    nabla->add_option("--q", nabla_q)->required();
    nabla->add_option("--subspace", nabla_subspace);
    nabla->add_option("--cS", nabla_cs);
    nabla->add_flag("--json", nabla_o.json_out);

    // nlbound
    auto* nlb = app.add_subcommand("nlbound", "Noether-Lefschetz codimension lower bound");
    int nlb_n = 0, nlb_r = 0, nlb_s = 0;
    long nlb_cs = 0;
    std::string nlb_d, nlb_e;
    bool nlb_json = false;
    nlb->add_option("--n", nlb_n)->required();
    nlb->add_option("--r", nlb_r)->required();
    nlb->add_option("--s", nlb_s)->required();
    nlb->add_option("--d", nlb_d);
    nlb->add_option("--e", nlb_e);
    nlb->add_option("--cS", nlb_cs);
    nlb->add_flag("--json", nlb_json);

    // sigma
    auto* sigma = app.add_subcommand("sigma", "codimension of the sharp plane-curve component");
    long sigma_d = 0;
    bool sigma_json = false;
    sigma->add_option("--d", sigma_d)->required();
    sigma->add_flag("--json", sigma_json);

    // smoothcheck
    auto* smooth = app.add_subcommand("smoothcheck", "probabilistic smoothness diagnostics");
    CommonOpts smooth_o;
    smooth->add_option("--config", smooth_o.config_path)->required();
    smooth->add_flag("--json", smooth_o.json_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*dim) return cmd_dim(parse_config(dim_o.config_path), dim_q, dim_ell, dim_o.json_out);
        if (*hodge)
            return cmd_hodge(parse_config(hodge_o.config_path), hodge_ell, hodge_full,
                             hodge_o.json_out);
        if (*trace) return cmd_trace(parse_config(trace_o.config_path), trace_o.json_out);
        if (*pairing)
            return cmd_pairing(parse_config(pairing_o.config_path), pairing_p, pairing_ell,
                               pairing_check, pairing_o.json_out);
        if (*eta) return cmd_eta(parse_config(eta_o.config_path), eta_o.json_out);
        if (*koszul) {
            bool have_codim = kc->count() > 0;
            if (!have_codim && koszul_subspace.empty())
                throw std::invalid_argument(
                    "koszul needs either --codim with --seed, or --subspace");
            return cmd_koszul(parse_config(koszul_o.config_path), koszul_p, koszul_ell, koszul_q,
                              koszul_subspace, have_codim, koszul_codim, koszul_seed,
                              koszul_o.json_out);
        }
        if (*nabla)
            return cmd_nabla(parse_config(nabla_o.config_path), nabla_p, nabla_q, nabla_subspace,
                             nabla_cs, nabla_o.json_out);
        if (*nlb) return cmd_nlbound(nlb_n, nlb_r, nlb_s, nlb_d, nlb_e, nlb_cs, nlb_json);
        if (*sigma) return cmd_sigma(sigma_d, sigma_json);
        if (*smooth) return cmd_smoothcheck(parse_config(smooth_o.config_path), smooth_o.json_out);
    } catch (const SmoothnessDiagnosticError& e) {
        std::cerr << "smoothness diagnostic: " << e.what() << "\n";
        return kExitSmoothness;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
