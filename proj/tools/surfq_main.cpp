// Command-line surface for the triangulation/quiver machinery.
//
// Exit codes: 0 ok (including ambiguous reconstructions, reported in the
// payload), 1 invariant or check violation, 2 usage error, 3 budget
// exceeded, 4 exception surface.

#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "surfq/blocks.hpp"
#include "surfq/builder.hpp"
#include "surfq/explore.hpp"
#include "surfq/io.hpp"
#include "surfq/reconstruct.hpp"

using namespace surfq;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;
constexpr int kExceptionSurface = 4;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

Quiver read_quiver(const std::string& path) {
    if (path.size() > 4 && path.substr(path.size() - 4) == ".txt") {
        std::ifstream in(path);
        if (!in) throw validation_error("cannot open " + path);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return quiver_from_text(text);
    }
    return quiver_from_json(read_json_file(path));
}

void emit(const json& payload) { std::cout << payload.dump(2) << std::endl; }

json sweep_to_json(const SweepReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e{{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}};
        if (c.failed) e["counterexample"] = c.first_counterexample;
        checks.push_back(e);
    }
    return json{{"format", 1},
                {"status", rep.ok() ? "ok" : "violation"},
                {"sig", rep.sig.str()},
                {"triangulations", rep.triangulations},
                {"truncated", rep.truncated},
                {"checks", checks}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"surface cluster combinatorics: triangulations, exchange quivers, block decompositions"};
    app.require_subcommand(1);

    std::string sig_text, quiver_path, tri_path, out_kind = "json", arc_name, kinds_text;
    std::size_t cap = 20000;
    std::size_t budget = 20'000'000;
    std::uint64_t rng_seed = 20240521;
    std::vector<int> mutate_at;
    bool seed_only = false, all_decompositions = false;

    auto* cmd_build = app.add_subcommand("build", "construct a connected maximal triangulation with two faces");
    cmd_build->add_option("--sig", sig_text, "surface signature g=G,p=P,h=(h1,...)")->required();
    cmd_build->add_flag("--seed-only", seed_only, "emit a seed triangulation instead");

    auto* cmd_quiver = app.add_subcommand("quiver", "exchange quiver of a triangulation");
    cmd_quiver->add_option("--triangulation", tri_path)->required();
    cmd_quiver->add_option("--format", out_kind, "json, text, or dot");

    auto* cmd_mutate = app.add_subcommand("mutate", "mutate a quiver at one or more vertices");
    cmd_mutate->add_option("--quiver", quiver_path)->required();
    cmd_mutate->add_option("-k,--at", mutate_at, "vertex indices, applied in order")->required();

    auto* cmd_flip = app.add_subcommand("flip", "flip an arc of a triangulation");
    cmd_flip->add_option("--triangulation", tri_path)->required();
    cmd_flip->add_option("--arc", arc_name, "arc name")->required();

    auto* cmd_enum = app.add_subcommand("enumerate", "flip closure of a surface's seed triangulation");
    cmd_enum->add_option("--sig", sig_text)->required();
    cmd_enum->add_option("--cap", cap, "maximum number of triangulations")->required();

    auto* cmd_mc = app.add_subcommand("mutation-class", "mutation closure of a quiver up to isomorphism");
    cmd_mc->add_option("--quiver", quiver_path)->required();
    cmd_mc->add_option("--cap", cap, "maximum number of classes")->required();

    auto* cmd_dec = app.add_subcommand("decompose", "block decompositions of a quiver");
    cmd_dec->add_option("--quiver", quiver_path)->required();
    cmd_dec->add_option("--kinds", kinds_text, "comma-separated subset of I,II,IIIa,IIIb,IV,V");
    cmd_dec->add_flag("--all", all_decompositions, "list every decomposition");
    cmd_dec->add_option("--budget", budget, "search node budget");

    auto* cmd_rec = app.add_subcommand("reconstruct", "recover the surface from an exchange quiver");
    cmd_rec->add_option("--quiver", quiver_path)->required();
    cmd_rec->add_option("--budget", budget, "search node budget");

    auto* cmd_verify = app.add_subcommand("verify", "run the identity sweep over a surface's flip closure");
    cmd_verify->add_option("--sig", sig_text)->required();
    cmd_verify->add_option("--cap", cap, "enumeration cap")->required();
    cmd_verify->add_option("--rng-seed", rng_seed, "seed for the randomized mutation check");

    auto* cmd_render = app.add_subcommand("render", "DOT output");
    cmd_render->add_option("--quiver", quiver_path);
    cmd_render->add_option("--triangulation", tri_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (cmd_build->parsed()) {
            SurfaceSig sig = parse_signature(sig_text);
            if (seed_only) {
                Triangulation t = seed_triangulation(sig);
                json j = triangulation_to_json(t);
                j["status"] = "ok";
                emit(j);
                return kOk;
            }
            BuildResult r = build_max_connected_with_plan(sig);
            json j = triangulation_to_json(r.triangulation);
            j["status"] = "ok";
            j["plan"] = r.plan;
            emit(j);
            return kOk;
        }
        if (cmd_quiver->parsed()) {
            Triangulation t = triangulation_from_json(read_json_file(tri_path));
            Quiver q = exchange_quiver(t);
            if (out_kind == "text")
                std::cout << quiver_to_text(q);
            else if (out_kind == "dot")
                std::cout << quiver_to_dot(q);
            else {
                json j = quiver_to_json(q);
                j["status"] = "ok";
                emit(j);
            }
            return kOk;
        }
        if (cmd_mutate->parsed()) {
            Quiver q = read_quiver(quiver_path);
            for (int k : mutate_at) q = q.mutate(k);
            json j = quiver_to_json(q);
            j["status"] = "ok";
            emit(j);
            return kOk;
        }
        if (cmd_flip->parsed()) {
            Triangulation t = triangulation_from_json(read_json_file(tri_path));
            int arc = t.arc_id(arc_name);
            if (arc < 0) throw validation_error("no arc named " + arc_name);
            Triangulation f = flip(t, arc);
            f.declared_sig.reset();
            json j = triangulation_to_json(f);
            j["status"] = "ok";
            emit(j);
            return kOk;
        }
        if (cmd_enum->parsed()) {
            SurfaceSig sig = parse_signature(sig_text);
            EnumerationResult r = enumerate_triangulations(sig, cap);
            json list = json::array();
            for (const auto& t : r.triangulations) list.push_back(triangulation_to_json(t));
            emit(json{{"format", 1},
                      {"status", r.truncated ? "budget" : "ok"},
                      {"sig", sig.str()},
                      {"count", r.triangulations.size()},
                      {"truncated", r.truncated},
                      {"triangulations", list}});
            return r.truncated ? kBudget : kOk;
        }
        if (cmd_mc->parsed()) {
            Quiver q = read_quiver(quiver_path);
            MutationClassResult r = mutation_class(q, cap);
            json list = json::array();
            for (const auto& m : r.representatives) list.push_back(quiver_to_json(m));
            emit(json{{"format", 1},
                      {"status", r.truncated ? "budget" : "ok"},
                      {"count", r.representatives.size()},
                      {"truncated", r.truncated},
                      {"quivers", list}});
            return r.truncated ? kBudget : kOk;
        }
        if (cmd_dec->parsed()) {
            Quiver q = read_quiver(quiver_path);
            EnumerateOptions opt;
            opt.node_budget = budget;
            if (!kinds_text.empty()) {
                opt.kinds.clear();
                std::istringstream is(kinds_text);
                std::string item;
                while (std::getline(is, item, ',')) {
                    auto k = block_kind_from_name(item);
                    if (!k) throw validation_error("unknown block kind " + item);
                    opt.kinds.push_back(*k);
                }
            }
            EnumerateOutcome out = enumerate_decompositions(q, opt);
            json list = json::array();
            for (const auto& d : out.decompositions) {
                json e = decomposition_to_json(d, q);
                Triangulation t = decomposition_to_triangulation(d, q);
                e["sig"] = surface_signature(t).str();
                if (all_decompositions) e["triangulation"] = triangulation_to_json(t);
                list.push_back(e);
            }
            std::string verdict = out.decompositions.empty()
                                      ? "none"
                                      : (out.decompositions.size() == 1 ? "unique" : "multiple");
            emit(json{{"format", 1},
                      {"status", "ok"},
                      {"count", out.decompositions.size()},
                      {"verdict", verdict},
                      {"decompositions", list}});
            return kOk;
        }
        if (cmd_rec->parsed()) {
            Quiver q = read_quiver(quiver_path);
            RecoverResult r = recover(q, budget);
            if (auto* rec = std::get_if<Recovered>(&r)) {
                json j{{"format", 1},
                       {"status", "ok"},
                       {"sig", rec->sig.str()},
                       {"triangulation", triangulation_to_json(rec->triangulation)}};
                emit(j);
                return kOk;
            }
            if (auto* amb = std::get_if<Ambiguous>(&r)) {
                json cands = json::array();
                for (const auto& c : amb->candidates)
                    cands.push_back(json{{"sig", c.sig.str()}, {"triangulation", triangulation_to_json(c.triangulation)}});
                emit(json{{"format", 1}, {"status", "ambiguous"}, {"candidates", cands}});
                return kOk;
            }
            emit(json{{"format", 1}, {"status", "violation"}, {"reason", "not an exchange quiver in the reconstructible class"}});
            return kViolation;
        }
        if (cmd_verify->parsed()) {
            SurfaceSig sig = parse_signature(sig_text);
            SweepReport rep = verify_sweep(sig, cap);
            // the randomized involution probe keeps counterexamples replayable
            std::mt19937_64 rng(rng_seed);
            CheckCounter inv;
            inv.name = "mutation-involution";
            for (int trial = 0; trial < 100; ++trial) {
                int n = 2 + static_cast<int>(rng() % 7);
                Quiver q(n);
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        int m = static_cast<int>(rng() % 4);
                        bool fwd = rng() % 2;
                        if (m) q.add_arrow(fwd ? i : j, fwd ? j : i, m);
                    }
                int k = static_cast<int>(rng() % n);
                if (q.mutate(k).mutate(k) == q)
                    inv.pass();
                else
                    inv.fail(quiver_to_text(q) + " k=" + std::to_string(k));
            }
            rep.checks.push_back(inv);
            json j = sweep_to_json(rep);
            emit(j);
            return rep.ok() && inv.failed == 0 ? kOk : kViolation;
        }
        if (cmd_render->parsed()) {
            if (!quiver_path.empty())
                std::cout << quiver_to_dot(read_quiver(quiver_path));
            else if (!tri_path.empty())
                std::cout << triangulation_to_dot(triangulation_from_json(read_json_file(tri_path)));
            else
                throw validation_error("render needs --quiver or --triangulation");
            return kOk;
        }
    } catch (const exception_surface& e) {
        emit(json{{"format", 1}, {"status", "exception-surface"}, {"item", e.item}, {"reason", e.what()}});
        return kExceptionSurface;
    } catch (const budget_exceeded& e) {
        emit(json{{"format", 1}, {"status", "budget"}, {"reason", e.what()}});
        return kBudget;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const validation_error& e) {
        emit(json{{"format", 1}, {"status", "violation"}, {"reason", e.what()}});
        return kViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
