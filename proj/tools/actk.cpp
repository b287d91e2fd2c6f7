// Command-line front end: file-based access to every library operation.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "actk/bounds.hpp"
#include "actk/extract.hpp"
#include "actk/families.hpp"
#include "actk/problems.hpp"
#include "actk/topology.hpp"
#include "actk/transforms.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace actk;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Tree load_tree(const std::string& path) { return parse_tree_json(slurp(path)); }
Dnf load_dnf(const std::string& path) { return parse_dnf_json(slurp(path)); }

std::vector<Rational> parse_point(const std::string& text) {
    std::vector<Rational> pt;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) pt.push_back(parse_rational(item));
    return pt;
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

void require_valid_or_die(const Tree& t) {
    auto diags = validate_tree(t);
    if (!diags.empty()) throw std::runtime_error("invalid tree: " + diags.front());
}

json betti_report(const Dnf& f, const Box& box, unsigned mmax, const OccupancyOptions& opt) {
    OccupancyGrid g = occupancy_grid(f, box, opt);
    CubicalComplex c = CubicalComplex::from_grid(g);
    json rep;
    rep["betti"] = c.betti_numbers(mmax);
    json cells = json::array();
    for (unsigned q = 0; q <= g.box.dims(); ++q) cells.push_back(c.cell_count(q));
    rep["cells"] = cells;
    rep["occupied"] = g.occupied_count();
    rep["resolution"] = box.resolution;
    return rep;
}

json dnf_manifest(const ProblemBundle& bundle) {
    json m;
    std::string sched;
    for (const auto& lv : bundle.suggested_schedule.levels) {
        if (!sched.empty()) sched += ",";
        sched += format_rational(lv.eps) + "," + format_rational(lv.delta);
    }
    m["schedule"] = sched;
    std::string box;
    for (const auto& [lo, hi] : bundle.suggested_box.intervals) {
        if (!box.empty()) box += ",";
        box += format_rational(lo) + ":" + format_rational(hi);
    }
    m["box"] = box;
    m["grid"] = bundle.suggested_box.resolution;
    m["height_bound"] = bundle.declared_height_bound;
    m["notes"] = bundle.notes;
    return m;
}

void write_or_embed(json& report, const std::string& out_prefix, const std::string& tag,
                    const std::string& text) {
    if (out_prefix.empty()) {
        report[tag] = json::parse(text);
        return;
    }
    std::string path = out_prefix + "." + tag + ".json";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
    report[tag + "_file"] = path;
}

int run(int argc, char** argv) {
    CLI::App app{"algebraic computation tree toolkit"};
    app.require_subcommand(1);

    std::string tree_path, tree2_path, dnf_path, point_str, sched_str, box_str, out_prefix;
    std::string eps_str = "0", delta_str = "0", ratio_str = "4", c1_str = "1", c2_str = "1",
                c_str = "1", b_str = "1", s_str = "1", d_str = "1", target_str = "0", w_str;
    unsigned grid = 1, max_dim = 1, m_idx = 0, n_dim = 2, fiber_r = 1, fiber_p = 0, lattice = 3;
    std::uint64_t seed = 1;
    std::size_t term_limit = 1'000'000, cell_limit = 100'000'000;
    bool corner = false, bounded = false;
    std::string ball_str = "1";

    auto* validate = app.add_subcommand("validate", "structural tree check");
    validate->add_option("tree", tree_path)->required();

    auto* ev = app.add_subcommand("eval", "run a tree on a rational point");
    ev->add_option("tree", tree_path)->required();
    ev->add_option("--point", point_str)->required();

    auto* extract = app.add_subcommand("extract", "leaf DNF of a tree");
    extract->add_option("tree", tree_path)->required();
    extract->add_option("--term-limit", term_limit);

    auto* stats = app.add_subcommand("stats", "DNF counting statistics");
    stats->add_option("dnf", dnf_path)->required();

    auto* transform = app.add_subcommand("transform", "tree-to-tree constructions");
    transform->require_subcommand(1);
    auto* tr_union = transform->add_subcommand("union");
    tr_union->add_option("tree1", tree_path)->required();
    tr_union->add_option("tree2", tree2_path)->required();
    auto* tr_inter = transform->add_subcommand("intersect");
    tr_inter->add_option("tree1", tree_path)->required();
    tr_inter->add_option("tree2", tree2_path)->required();
    auto* tr_ed = transform->add_subcommand("eps-delta");
    tr_ed->add_option("tree", tree_path)->required();
    tr_ed->add_option("--eps", eps_str)->required();
    tr_ed->add_option("--delta", delta_str)->required();
    auto* tr_tell = transform->add_subcommand("t-ell");
    tr_tell->add_option("tree", tree_path)->required();
    tr_tell->add_option("--schedule", sched_str)->required();
    auto* tr_fiber = transform->add_subcommand("fiber");
    tr_fiber->add_option("tree", tree_path)->required();
    tr_fiber->add_option("--r", fiber_r)->required();
    tr_fiber->add_option("--p", fiber_p)->required();

    auto* families = app.add_subcommand("families", "formula-level closures");
    families->require_subcommand(1);
    auto add_mode = [&](CLI::App* cmd) {
        cmd->add_flag("--bounded", bounded);
        cmd->add_option("--ball-radius-sq", ball_str);
    };
    auto* fa_delta = families->add_subcommand("delta");
    fa_delta->add_option("dnf", dnf_path)->required();
    fa_delta->add_option("--delta", delta_str)->required();
    add_mode(fa_delta);
    auto* fa_de = families->add_subcommand("delta-eps");
    fa_de->add_option("dnf", dnf_path)->required();
    fa_de->add_option("--delta", delta_str)->required();
    fa_de->add_option("--eps", eps_str)->required();
    add_mode(fa_de);
    auto* fa_tm = families->add_subcommand("t-m");
    fa_tm->add_option("dnf", dnf_path)->required();
    fa_tm->add_option("--schedule", sched_str)->required();
    add_mode(fa_tm);
    auto* fa_sched = families->add_subcommand("schedule-check");
    fa_sched->add_option("--schedule", sched_str)->required();
    fa_sched->add_option("--ratio", ratio_str);

    auto* betti = app.add_subcommand("betti", "grid homology of a closed DNF");
    betti->add_option("dnf", dnf_path)->required();
    betti->add_option("--box", box_str)->required();
    betti->add_option("--grid", grid)->required();
    betti->add_option("--max-dim", max_dim);
    betti->add_flag("--corner", corner);
    betti->add_option("--cell-limit", cell_limit);

    auto* components = app.add_subcommand("components", "connected components of a closed DNF");
    components->add_option("dnf", dnf_path)->required();
    components->add_option("--box", box_str)->required();
    components->add_option("--grid", grid)->required();
    components->add_flag("--corner", corner);
    components->add_option("--cell-limit", cell_limit);

    auto* bound = app.add_subcommand("bound", "lower/upper bound calculators");
    bound->require_subcommand(1);
    auto* b_yao = bound->add_subcommand("yao");
    b_yao->add_option("--b", b_str)->required();
    b_yao->add_option("--n", n_dim)->required();
    b_yao->add_option("--c1", c1_str);
    b_yao->add_option("--c2", c2_str);
    auto* b_main = bound->add_subcommand("main");
    b_main->add_option("--b", b_str)->required();
    b_main->add_option("--m", m_idx)->required();
    b_main->add_option("--n", n_dim)->required();
    b_main->add_option("--c1", c1_str);
    b_main->add_option("--c2", c2_str);
    auto* b_proj = bound->add_subcommand("proj");
    b_proj->add_option("--b", b_str)->required();
    b_proj->add_option("--m", m_idx)->required();
    b_proj->add_option("--n", n_dim)->required();
    b_proj->add_option("--c1", c1_str);
    b_proj->add_option("--c2", c2_str);
    auto* b_upper = bound->add_subcommand("upper");
    b_upper->add_option("--s", s_str)->required();
    b_upper->add_option("--d", d_str)->required();
    b_upper->add_option("--n", n_dim)->required();
    b_upper->add_option("--m", m_idx);
    b_upper->add_option("--C", c_str);
    auto* b_invert = bound->add_subcommand("invert");
    b_invert->add_option("--b", b_str)->required();
    b_invert->add_option("--n", n_dim)->required();
    b_invert->add_option("--C", c_str);
    auto* b_check = bound->add_subcommand("projcheck");
    b_check->add_option("--w", w_str, "comma list of b_q(W_p) for p=0..m")->required();
    b_check->add_option("--m", m_idx)->required();
    b_check->add_option("--target", target_str)->required();

    auto* example = app.add_subcommand("example", "generated problem instances");
    example->require_subcommand(1);
    auto* ex_parity = example->add_subcommand("parity");
    ex_parity->add_option("--n", n_dim);
    ex_parity->add_option("--m", lattice);
    ex_parity->add_option("--out-prefix", out_prefix);
    ex_parity->add_option("--seed", seed);
    auto* ex_dist = example->add_subcommand("distinctness");
    ex_dist->add_option("--n", n_dim);
    ex_dist->add_option("--out-prefix", out_prefix);
    ex_dist->add_option("--seed", seed);
    auto* ex_circle = example->add_subcommand("circle-fiber");
    ex_circle->add_option("--out-prefix", out_prefix);
    auto* ex_cross = example->add_subcommand("crossing");

    CLI11_PARSE(app, argc, argv);

    auto mode = [&] {
        return bounded ? AmbientMode::bounded(parse_rational(ball_str)) : AmbientMode::unbounded();
    };

    if (*validate) {
        Tree t = load_tree(tree_path);
        auto diags = validate_tree(t);
        json rep;
        rep["valid"] = diags.empty();
        rep["diagnostics"] = diags;
        emit(rep);
        return 0;
    }
    if (*ev) {
        Tree t = load_tree(tree_path);
        require_valid_or_die(t);
        auto pt = parse_point(point_str);
        EvalResult r = evaluate(t, pt);
        json rep;
        rep["accepted"] = r.accepted;
        rep["leaf"] = r.leaf;
        rep["path_length"] = r.path_length;
        emit(rep);
        return 0;
    }
    if (*extract) {
        Tree t = load_tree(tree_path);
        require_valid_or_die(t);
        std::cout << emit_dnf_json(leaf_dnf(t, {term_limit}));
        return 0;
    }
    if (*stats) {
        DnfStats s = dnf_stats(load_dnf(dnf_path));
        json rep;
        rep["distinct_polynomials"] = s.distinct_polynomials;
        rep["max_degree"] = s.max_degree;
        rep["disjuncts"] = s.disjunct_count;
        rep["max_conds_per_disjunct"] = s.max_conds_per_disjunct;
        emit(rep);
        return 0;
    }
    if (*transform) {
        Tree out(0);
        if (*tr_union) out = union_tree(load_tree(tree_path), load_tree(tree2_path));
        else if (*tr_inter) out = intersect_tree(load_tree(tree_path), load_tree(tree2_path));
        else if (*tr_ed)
            out = eps_delta_tree(load_tree(tree_path),
                                 {parse_rational(eps_str), parse_rational(delta_str)});
        else if (*tr_tell) out = t_ell_tree(load_tree(tree_path), parse_schedule(sched_str));
        else {
            Tree t = load_tree(tree_path);
            out = fiber_product_tree(t, FiberSpec{t.arity, fiber_r, fiber_p});
        }
        std::cout << emit_tree_json(out);
        return 0;
    }
    if (*families) {
        if (*fa_sched) {
            auto diags = validate_schedule(parse_schedule(sched_str), parse_rational(ratio_str));
            json rep;
            rep["valid"] = diags.empty();
            rep["diagnostics"] = diags;
            emit(rep);
            return 0;
        }
        Dnf f = load_dnf(dnf_path);
        Dnf out;
        if (*fa_delta) out = closure_delta(f, parse_rational(delta_str), mode());
        else if (*fa_de)
            out = closure_delta_eps(f, parse_rational(delta_str), parse_rational(eps_str), mode());
        else out = t_m_formula(f, parse_schedule(sched_str), mode());
        std::cout << emit_dnf_json(out);
        return 0;
    }
    if (*betti) {
        Dnf f = load_dnf(dnf_path);
        Box box = parse_box(box_str, grid);
        emit(betti_report(f, box, max_dim, {corner, cell_limit}));
        return 0;
    }
    if (*components) {
        Dnf f = load_dnf(dnf_path);
        Box box = parse_box(box_str, grid);
        OccupancyGrid g = occupancy_grid(f, box, {corner, cell_limit});
        json rep;
        rep["components"] = component_count(g);
        rep["occupied"] = g.occupied_count();
        emit(rep);
        return 0;
    }
    if (*bound) {
        BoundParams p{parse_rational(c1_str), parse_rational(c2_str)};
        json rep;
        if (*b_yao) rep["value"] = format_rational(yao_lower(Integer(b_str), n_dim, p));
        else if (*b_main) rep["value"] = format_rational(main_lower(Integer(b_str), m_idx, n_dim, p));
        else if (*b_proj) rep["value"] = format_rational(proj_lower(Integer(b_str), m_idx, n_dim, p));
        else if (*b_upper) {
            auto [u1, u2] =
                total_betti_upper(Integer(s_str), Integer(d_str), n_dim, m_idx, parse_rational(c_str));
            rep["upper_s2d"] = format_rational(u1);
            rep["upper_msd"] = format_rational(u2);
        } else if (*b_invert) {
            rep["k"] = invert_height_bound(Integer(b_str), n_dim, parse_rational(c_str));
        } else {
            std::map<unsigned, Integer> table;
            std::stringstream ss(w_str);
            std::string item;
            unsigned idx = 0;
            while (std::getline(ss, item, ',')) table[idx++] = Integer(item);
            ProjectionCheck chk = projection_inequality_check(table, m_idx, Integer(target_str));
            rep["holds"] = chk.holds;
            rep["sum"] = chk.sum.str();
            rep["slack"] = chk.slack.str();
            rep["m_zero_factor_flagged"] = chk.m_zero_factor_flagged;
        }
        if (*b_yao || *b_main || *b_proj) rep["parametric"] = true;
        emit(rep);
        return 0;
    }
    if (*example) {
        json rep;
        if (*ex_parity || *ex_dist) {
            ProblemBundle bundle =
                *ex_parity ? parity_problem(n_dim, lattice) : distinctness_tree(n_dim);
            rep["manifest"] = dnf_manifest(bundle);
            rep["sampled_mismatches"] =
                sampled_mismatch_count(bundle.tree, bundle.strict_dnf, 1000, seed);
            write_or_embed(rep, out_prefix, "tree", emit_tree_json(bundle.tree));
            write_or_embed(rep, out_prefix, "dnf", emit_dnf_json(bundle.strict_dnf));
        } else if (*ex_circle) {
            CircleFiberExample ex = circle_fiber_example();
            Tree w0 = fiber_product_tree(ex.sigma_tree, ex.w0);
            Tree w1 = fiber_product_tree(ex.sigma_tree, ex.w1);
            write_or_embed(rep, out_prefix, "tree", emit_tree_json(ex.sigma_tree));
            write_or_embed(rep, out_prefix, "dnf", emit_dnf_json(ex.sigma_strict_dnf));
            write_or_embed(rep, out_prefix, "w0_tree", emit_tree_json(w0));
            write_or_embed(rep, out_prefix, "w1_tree", emit_tree_json(w1));
            write_or_embed(rep, out_prefix, "projection_dnf",
                           emit_dnf_json(ex.projection_strict_dnf));
        } else {
            CrossingExample ex = crossing_number_example();
            CrossingReport main_report = crossing_complement_report(ex);
            CrossingReport seg_report = crossing_complement_report(crossing_segment_example());
            rep["complement_components"] = main_report.complement_components;
            rep["crossing_number"] = main_report.crossing_number;
            rep["segment_complement_components"] = seg_report.complement_components;
            rep["segment_crossing_number"] = seg_report.crossing_number;
            rep["notes"] = ex.notes;
        }
        emit(rep);
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const actk::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
