#include "bideal/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bideal/core.hpp"
#include "bideal/errors.hpp"
#include "bideal/fibers.hpp"
#include "bideal/graver.hpp"
#include "bideal/groebner.hpp"
#include "bideal/indispensable.hpp"
#include "bideal/io.hpp"
#include "bideal/toric.hpp"

namespace bideal {

namespace {

using ordered_json = nlohmann::ordered_json;

struct CommonOpts {
    std::string input;
    std::string expr;
    std::string order_name = "degrevlex";
    std::string perm_csv;
    std::optional<unsigned long> char_override;
    std::optional<unsigned long> cap_degree;
    std::optional<std::size_t> cap_nodes;
    std::size_t window = 4;
    std::string format = "text";
    bool strict = false;
    std::string dot_path;
    std::string matrix_path;
    bool a333 = false;
};

// What a command hands back to the shared emitter.
struct CommandResult {
    ordered_json result = ordered_json::object();
    ordered_json caps = ordered_json::object();
    std::string status = "ok";
    bool soft_inconclusive = false;  // exit 2 only under --strict
    std::string text;
};

std::string field_str(unsigned long characteristic) {
    if (characteristic == 0) return "Q";
    return "GF " + std::to_string(characteristic);
}

ordered_json json_number(const Natural& n) {
    if (n.fits_ulong_p()) return n.get_ui();
    return n.get_str();
}

TermOrder make_order(std::size_t arity, const std::string& name, const std::string& perm_csv) {
    std::vector<std::size_t> perm;
    if (perm_csv.empty()) {
        perm.resize(arity);
        for (std::size_t i = 0; i < arity; ++i) perm[i] = i;
    } else {
        std::stringstream ss(perm_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            std::size_t pos = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(tok, &pos);
            } catch (const std::exception&) {
                throw usage_error("--perm entries must be 1-based variable positions");
            }
            if (pos != tok.size() || v == 0 || v > arity)
                throw usage_error("--perm entries must be 1-based variable positions");
            perm.push_back(v - 1);
        }
    }
    TermOrder::Kind kind;
    if (name == "lex")
        kind = TermOrder::Kind::Lex;
    else if (name == "deglex")
        kind = TermOrder::Kind::DegLex;
    else if (name == "degrevlex")
        kind = TermOrder::Kind::DegRevLex;
    else
        throw usage_error("--order must be lex, deglex or degrevlex");
    return TermOrder(kind, std::move(perm));
}

ExplorationCaps make_caps(const IdealPresentation& p, const ExponentVector& u,
                          const CommonOpts& o) {
    ExplorationCaps caps = default_caps(p, u);
    if (o.cap_degree) caps.degree_cap = *o.cap_degree;
    if (o.cap_nodes) caps.node_cap = *o.cap_nodes;
    return caps;
}

ordered_json caps_json(const ExplorationCaps& caps) {
    ordered_json j = ordered_json::object();
    j["degree"] = json_number(caps.degree_cap);
    j["nodes"] = caps.node_cap;
    return j;
}

std::string tri_str(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        default: return "unknown";
    }
}

std::string verdict_str(GeneratorVerdict v) {
    switch (v) {
        case GeneratorVerdict::Indispensable: return "indispensable";
        case GeneratorVerdict::SupportNotMinimal: return "support-not-minimal";
        case GeneratorVerdict::MultiEdge: return "multi-edge";
        default: return "not-a-component";
    }
}

// Ideal-file shaped text with a few leading comment lines; output of gb,
// minimize, graver, lawrence and toric parses right back in.
std::string ideal_text(const IdealPresentation& p, const std::vector<std::string>& comments) {
    std::string s;
    for (const auto& c : comments) s += "# " + c + "\n";
    s += serialize_ideal(p);
    return s;
}

ordered_json element_list_json(const std::vector<BinomialElement>& es,
                               const std::vector<std::string>& vars) {
    ordered_json a = ordered_json::array();
    for (const auto& e : es) a.push_back(element_str(e, vars));
    return a;
}

ordered_json monomial_list_json(const std::vector<ExponentVector>& ms,
                                const std::vector<std::string>& vars) {
    ordered_json a = ordered_json::array();
    for (const auto& m : ms) a.push_back(monomial_str(m, vars));
    return a;
}

struct DotEdge {
    std::size_t a, b;
    std::string label;  // empty for unlabeled
};

void write_dot(const std::string& path, const std::string& name,
               const std::vector<std::string>& vertices, const std::vector<DotEdge>& edges,
               std::ostream& fallback) {
    std::ostringstream dot;
    dot << "graph " << name << " {\n";
    for (const auto& v : vertices) dot << "  \"" << v << "\";\n";
    for (const auto& e : edges) {
        dot << "  \"" << vertices[e.a] << "\" -- \"" << vertices[e.b] << "\"";
        if (!e.label.empty()) dot << " [label=\"" << e.label << "\"]";
        dot << ";\n";
    }
    dot << "}\n";
    if (path == "-") {
        fallback << dot.str();
        return;
    }
    std::ofstream f(path);
    if (!f) throw usage_error("cannot write DOT file: " + path);
    f << dot.str();
}

// ---------------------------------------------------------------------------
// Command bodies. Each returns a CommandResult; the caller wraps it in the
// fixed {command, field, vars, result, caps, status} document.

CommandResult run_gb(const IdealPresentation& p, const CommonOpts& o) {
    TermOrder order = make_order(p.arity(), o.order_name, o.perm_csv);
    ReducedGroebnerBasis gb = buchberger(p, order);
    CommandResult r;
    r.result["order"] = order.describe();
    r.result["size"] = gb.elements.size();
    r.result["elements"] = element_list_json(gb.elements, p.vars);
    IdealPresentation out{p.characteristic, p.vars, gb.elements};
    r.text = ideal_text(out, {"reduced Groebner basis, " + order.describe(),
                              std::to_string(gb.elements.size()) + " elements"});
    return r;
}

CommandResult run_nf(const IdealPresentation& p, const CommonOpts& o) {
    TermOrder order = make_order(p.arity(), o.order_name, o.perm_csv);
    ReducedGroebnerBasis gb = buchberger(p, order);
    BinomialElement e = parse_element(o.expr, p);
    CommandResult r;
    r.result["element"] = element_str(e, p.vars);
    std::string nf_text;
    if (e.is_monomial()) {
        auto nf = normal_form(e.lead(), gb);
        nf_text = nf ? term_str(*nf, p.vars) : "0";
    } else {
        nf_text = element_str(reduce_element(e, gb), p.vars);
    }
    r.result["normal_form"] = nf_text;
    r.result["order"] = order.describe();
    r.text = nf_text + "\n";
    return r;
}

CommandResult run_member(const IdealPresentation& p, const CommonOpts& o) {
    TermOrder order = make_order(p.arity(), o.order_name, o.perm_csv);
    ReducedGroebnerBasis gb = buchberger(p, order);
    BinomialElement e = parse_element(o.expr, p);
    bool in = member(e, gb);
    CommandResult r;
    r.result["element"] = element_str(e, p.vars);
    r.result["member"] = in;
    r.text = std::string(in ? "true" : "false") + "\n";
    return r;
}

CommandResult run_fiber(const IdealPresentation& p, const CommonOpts& o) {
    TermOrder order = make_order(p.arity(), o.order_name, o.perm_csv);
    ReducedGroebnerBasis gb = buchberger(p, order);
    ExponentVector u = parse_monomial(o.expr, p);
    ExplorationCaps caps = make_caps(p, u, o);
    FiberView view = explore_fiber(u, p, gb, caps);

    CommandResult r;
    r.caps = caps_json(caps);
    if (view.is_monomial_fiber)
        r.status = "monomial-fiber";
    else if (view.complete)
        r.status = "complete";
    else {
        r.status = "truncated";
        r.soft_inconclusive = true;
    }
    r.result["representative"] = monomial_str(u, p.vars);
    ordered_json members = ordered_json::array();
    for (const auto& [m, w] : view.members) {
        ordered_json row = ordered_json::object();
        row["monomial"] = monomial_str(m, p.vars);
        row["witness"] = w.str();
        members.push_back(std::move(row));
    }
    r.result["count"] = view.members.size();
    r.result["members"] = members;
    r.result["monomial_fiber"] = view.is_monomial_fiber;
    r.result["complete"] = view.complete;

    std::string t = "# fiber of " + monomial_str(u, p.vars) + "\n";
    t += "# status " + r.status + ", " + std::to_string(view.members.size()) + " members\n";
    for (const auto& [m, w] : view.members)
        t += monomial_str(m, p.vars) + "\t" + w.str() + "\n";
    r.text = t;
    return r;
}

CommandResult run_monomial_fiber(const IdealPresentation& p, const CommonOpts& o) {
    TermOrder order = make_order(p.arity(), o.order_name, o.perm_csv);
    ReducedGroebnerBasis gb = buchberger(p, order);
    auto f = monomial_fiber(gb);
    CommandResult r;
    r.result["empty"] = !f.has_value();
    r.result["witness_monomials"] =
        f ? monomial_list_json(f->witness_monomials, p.vars) : ordered_json::array();
    if (!f) {
        r.text = "# monomial fiber empty\n";
    } else {
        r.text = "# monomial fiber nonempty, witness monomials:\n";
        for (const auto& m : f->witness_monomials) r.text += monomial_str(m, p.vars) + "\n";
    }
    return r;
}

CommandResult run_markov(const IdealPresentation& p, const CommonOpts& o) {
    TermOrder order = make_order(p.arity(), o.order_name, o.perm_csv);
    ReducedGroebnerBasis gb = buchberger(p, order);
    ExponentVector seed(p.arity());
    ExplorationCaps caps = make_caps(p, seed, o);
    FiberClassPoset poset = markov_fiber_classes(p, gb, caps);

    CommandResult r;
    r.caps = caps_json(caps);
    if (!poset.unknown_pairs.empty()) {
        r.status = "unknown-at-cap";
        r.soft_inconclusive = true;
    }

    ordered_json classes = ordered_json::array();
    for (const auto& cls : poset.classes) {
        ordered_json c = ordered_json::object();
        ordered_json fibers = ordered_json::array();
        ordered_json gens = ordered_json::array();
        for (std::size_t rep : cls) {
            fibers.push_back(monomial_str(poset.reps[rep], p.vars));
            for (std::size_t g : poset.rep_generators[rep]) gens.push_back(g + 1);
        }
        c["fibers"] = fibers;
        c["generators"] = gens;
        classes.push_back(std::move(c));
    }
    r.result["class_count"] = poset.classes.size();
    r.result["classes"] = classes;
    r.result["totally_ordered"] = poset.totally_ordered();
    ordered_json rel = ordered_json::array();
    for (std::size_t i = 0; i < poset.classes.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < poset.classes.size(); ++j)
            row.push_back(tri_str(poset.class_leq(i, j)));
        rel.push_back(std::move(row));
    }
    r.result["class_leq"] = rel;
    ordered_json unknown = ordered_json::array();
    for (const auto& [i, j] : poset.unknown_pairs)
        unknown.push_back({monomial_str(poset.reps[i], p.vars),
                           monomial_str(poset.reps[j], p.vars)});
    r.result["unknown_pairs"] = unknown;

    std::string t = "# " + std::to_string(poset.classes.size()) + " fiber classes\n";
    t += std::string("# totally ordered: ") + (poset.totally_ordered() ? "yes" : "no") + "\n";
    for (std::size_t k = 0; k < poset.classes.size(); ++k) {
        t += "class " + std::to_string(k + 1) + ":";
        for (std::size_t rep : poset.classes[k]) t += " " + monomial_str(poset.reps[rep], p.vars);
        t += "\n";
    }
    for (std::size_t i = 0; i < poset.classes.size(); ++i)
        for (std::size_t j = 0; j < poset.classes.size(); ++j) {
            if (i == j) continue;
            t += monomial_str(poset.reps[poset.classes[i][0]], p.vars) + " <= " +
                 monomial_str(poset.reps[poset.classes[j][0]], p.vars) + ": " +
                 tri_str(poset.class_leq(i, j)) + "\n";
        }
    r.text = t;
    return r;
}

CommandResult run_gamma(const IdealPresentation& p, const CommonOpts& o, std::ostream& out) {
    TermOrder order = make_order(p.arity(), o.order_name, o.perm_csv);
    ReducedGroebnerBasis gb = buchberger(p, order);
    ExponentVector u = parse_monomial(o.expr, p);
    ExplorationCaps caps = make_caps(p, u, o);
    FiberView view = explore_fiber(u, p, gb, caps);
    if (view.is_monomial_fiber)
        throw usage_error("the monomial fiber is infinite; its gamma graph cannot be listed");
    if (!view.complete)
        throw inconclusive_error("fiber exploration truncated at the caps; raise "
                                 "--cap-degree or --cap-nodes");
    GammaGraph g = gamma_graph(view, p, gb, caps);

    CommandResult r;
    r.caps = caps_json(caps);
    r.result["representative"] = monomial_str(u, p.vars);
    std::vector<std::string> labels;
    for (const auto& v : g.vertices) labels.push_back(monomial_str(v, p.vars));
    r.result["vertices"] = labels;
    ordered_json edges = ordered_json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({labels[a], labels[b]});
    r.result["edges"] = edges;
    r.result["below_generators"] = element_list_json(g.below.generators, p.vars);
    ordered_json isolated = ordered_json::array();
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        bool touched = false;
        for (const auto& [a, b] : g.edges) touched |= (a == i || b == i);
        if (!touched) isolated.push_back(labels[i]);
    }
    r.result["isolated"] = isolated;

    std::string t = "# gamma graph of the fiber of " + monomial_str(u, p.vars) + "\n";
    t += "# " + std::to_string(g.vertices.size()) + " vertices, " +
         std::to_string(g.edges.size()) + " edges\n";
    for (const auto& l : labels) t += l + "\n";
    for (const auto& [a, b] : g.edges) t += labels[a] + " -- " + labels[b] + "\n";
    r.text = t;

    if (!o.dot_path.empty()) {
        std::vector<DotEdge> de;
        for (const auto& [a, b] : g.edges) de.push_back({a, b, ""});
        write_dot(o.dot_path, "gamma", labels, de, out);
    }
    return r;
}

CommandResult run_indisp_monomials(const IdealPresentation& p, const CommonOpts&) {
    std::vector<ExponentVector> ms = indispensable_monomials(p);
    CommandResult r;
    r.result["count"] = ms.size();
    r.result["monomials"] = monomial_list_json(ms, p.vars);
    std::string t = "# " + std::to_string(ms.size()) + " indispensable monomials\n";
    for (const auto& m : ms) t += monomial_str(m, p.vars) + "\n";
    r.text = t;
    return r;
}

CommandResult run_indisp_binomials(const IdealPresentation& p, const CommonOpts& o,
                                   std::ostream& out) {
    IndispensabilityReport rep = indispensability_report(p);
    CommandResult r;
    r.result["count"] = rep.indispensable_binomials.size();
    r.result["binomials"] = element_list_json(rep.indispensable_binomials, p.vars);
    ordered_json verdicts = ordered_json::array();
    for (std::size_t i = 0; i < rep.verdicts.size(); ++i) {
        ordered_json v = ordered_json::object();
        v["generator"] = element_str(p.generators[i], p.vars);
        v["verdict"] = verdict_str(rep.verdicts[i]);
        verdicts.push_back(std::move(v));
    }
    r.result["verdicts"] = verdicts;
    r.result["indispensable_monomials"] =
        monomial_list_json(rep.indispensable_monomials, p.vars);

    std::string t = "# " + std::to_string(rep.indispensable_binomials.size()) +
                    " indispensable binomials\n";
    for (const auto& e : rep.indispensable_binomials) t += element_str(e, p.vars) + "\n";
    for (std::size_t i = 0; i < rep.verdicts.size(); ++i)
        t += "# generator " + std::to_string(i + 1) + " (" +
             element_str(p.generators[i], p.vars) + "): " + verdict_str(rep.verdicts[i]) + "\n";
    r.text = t;

    if (!o.dot_path.empty()) {
        std::vector<std::string> labels;
        for (const auto& v : rep.graph.vertices) labels.push_back(monomial_str(v, p.vars));
        std::vector<DotEdge> de;
        for (const auto& e : rep.graph.edges)
            de.push_back({e.a, e.b, "g" + std::to_string(e.generator + 1)});
        write_dot(o.dot_path, "supports", labels, de, out);
    }
    return r;
}

CommandResult run_minimize(const IdealPresentation& p, const CommonOpts& o) {
    TermOrder order = make_order(p.arity(), o.order_name, o.perm_csv);
    std::vector<BinomialElement> gens = minimize_generating_set(p, order);
    IdealPresentation out = make_presentation(p.characteristic, p.vars, gens);
    CommandResult r;
    r.result["size"] = out.generators.size();
    r.result["generators"] = element_list_json(out.generators, p.vars);
    r.text = ideal_text(out, {"irredundant generating set, " +
                              std::to_string(out.generators.size()) + " generators"});
    return r;
}

CommandResult run_check_indisp_gen(const IdealPresentation& p, const CommonOpts& o) {
    TermOrder order = make_order(p.arity(), o.order_name, o.perm_csv);
    IndispensableGenerationReport rep = is_generated_by_indispensables(p, order);
    CommandResult r;
    r.result["verdict"] = rep.verdict;
    r.result["s"] = rep.s;
    r.result["gmi"] = rep.gmi;
    r.result["minimized"] = element_list_json(rep.minimized, p.vars);
    r.result["indispensable"] = element_list_json(rep.indispensable, p.vars);
    std::string t = std::string("generated-by-indispensables: ") +
                    (rep.verdict ? "true" : "false") + "\n";
    t += "s: " + std::to_string(rep.s) + "\n";
    t += "indispensable-monomials: " + std::to_string(rep.gmi) + "\n";
    r.text = t;
    return r;
}

ordered_json graver_caps_json(const GraverResult& g) {
    ordered_json j = ordered_json::object();
    j["degree"] = json_number(g.degree_cap);
    j["window"] = g.window;
    return j;
}

void set_graver_status(CommandResult& r, const GraverResult& g) {
    if (g.exact) {
        r.status = "exact";
    } else if (g.observed_window >= g.window) {
        r.status = "stable-window";
    } else {
        r.status = "window-short";
        r.soft_inconclusive = true;
    }
}

CommandResult run_graver(const IdealPresentation& p, const CommonOpts& o) {
    std::optional<Natural> cap;
    if (o.cap_degree) cap = Natural(*o.cap_degree);
    GraverResult g = graver_basis(p, cap, o.window);
    CommandResult r;
    r.caps = graver_caps_json(g);
    set_graver_status(r, g);
    r.result["count"] = g.elements.size();
    r.result["elements"] = element_list_json(g.elements, p.vars);
    r.result["degree_cap"] = json_number(g.degree_cap);
    r.result["observed_window"] = g.observed_window;
    r.result["exact"] = g.exact;
    IdealPresentation out{p.characteristic, p.vars, g.elements};
    r.text = ideal_text(out, {"Graver basis sweep to degree " + g.degree_cap.get_str() +
                                  ", " + std::to_string(g.elements.size()) + " elements",
                              "status " + r.status});
    return r;
}

CommandResult run_lawrence(const IdealPresentation& p, const CommonOpts& o) {
    std::optional<Natural> cap;
    if (o.cap_degree) cap = Natural(*o.cap_degree);
    GraverResult g = graver_basis(p, cap, o.window);
    IdealPresentation lifted = lawrence_lift(g.elements, p);
    CommandResult r;
    r.caps = graver_caps_json(g);
    set_graver_status(r, g);
    r.result["vars"] = lifted.vars;
    r.result["size"] = lifted.generators.size();
    r.result["generators"] = element_list_json(lifted.generators, lifted.vars);
    r.result["graver_count"] = g.elements.size();
    r.result["exact"] = g.exact;
    r.text = ideal_text(lifted, {"Lawrence lifting of the Graver basis (" +
                                     std::to_string(g.elements.size()) + " elements)",
                                 "status " + r.status});
    return r;
}

CommandResult run_ugb(const IdealPresentation& p, const CommonOpts&) {
    UgbSample s = universal_gb_sample(p);
    CommandResult r;
    ordered_json orders = ordered_json::array();
    for (const auto& b : s.bases) {
        ordered_json row = ordered_json::object();
        row["order"] = b.order.describe();
        row["size"] = b.elements.size();
        row["elements"] = element_list_json(b.elements, p.vars);
        orders.push_back(std::move(row));
    }
    r.result["orders"] = orders;
    r.result["union_size"] = s.union_elements.size();
    r.result["union"] = element_list_json(s.union_elements, p.vars);
    r.result["all_equal"] = s.all_equal;

    std::string t = "# sampled " + std::to_string(s.bases.size()) + " reduced bases\n";
    for (const auto& b : s.bases)
        t += "# " + b.order.describe() + ": " + std::to_string(b.elements.size()) +
             " elements\n";
    t += std::string("# all equal: ") + (s.all_equal ? "yes" : "no") + "\n";
    t += "# union, " + std::to_string(s.union_elements.size()) + " elements:\n";
    for (const auto& e : s.union_elements) t += element_str(e, p.vars) + "\n";
    r.text = t;
    return r;
}

CommandResult run_toric(const CommonOpts& o) {
    IntegerMatrix m = o.a333 ? a333_matrix() : parse_matrix_file(o.matrix_path);
    IdealPresentation p = toric_ideal(m);
    CommandResult r;
    r.result["rows"] = m.rows;
    r.result["cols"] = m.cols;
    r.result["size"] = p.generators.size();
    r.result["vars"] = p.vars;
    r.result["generators"] = element_list_json(p.generators, p.vars);
    r.text = ideal_text(p, {"toric ideal of a " + std::to_string(m.rows) + "x" +
                            std::to_string(m.cols) + " matrix, " +
                            std::to_string(p.generators.size()) + " generators"});
    return r;
}

int finish(const std::string& command, const IdealPresentation* p, const CommonOpts& o,
           CommandResult r, std::ostream& out) {
    ordered_json doc;
    doc["command"] = command;
    doc["field"] = p ? field_str(p->characteristic) : "Q";
    doc["vars"] = p ? p->vars : std::vector<std::string>{};
    doc["result"] = std::move(r.result);
    doc["caps"] = std::move(r.caps);
    doc["status"] = r.status;
    if (o.format == "json")
        out << doc.dump(2) << "\n";
    else
        out << r.text;
    return (o.strict && r.soft_inconclusive) ? 2 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computational algebra for binomial ideals"};
    app.require_subcommand(1);
    CommonOpts o;

    auto add_common = [&](const char* name, const char* desc, bool needs_input) {
        CLI::App* c = app.add_subcommand(name, desc);
        if (needs_input) {
            c->add_option("-i,--input", o.input, "ideal file")->required();
            c->add_option("--char", o.char_override,
                          "characteristic override: 0 for Q, else a prime");
        }
        c->add_option("--format", o.format, "text or json (default text)")
            ->check(CLI::IsMember({"text", "json"}));
        c->add_flag("--strict", o.strict, "exit 2 on any inconclusive-at-cap result");
        return c;
    };
    auto add_order = [&](CLI::App* c) {
        c->add_option("--order", o.order_name, "term order: lex, deglex or degrevlex")
            ->check(CLI::IsMember({"lex", "deglex", "degrevlex"}));
        c->add_option("--perm", o.perm_csv,
                      "variable significance, 1-based comma-separated positions");
    };
    auto add_caps = [&](CLI::App* c) {
        c->add_option("--cap-degree", o.cap_degree, "fiber exploration degree cap");
        c->add_option("--cap-nodes", o.cap_nodes, "fiber exploration node cap");
    };
    auto add_expr = [&](CLI::App* c, const char* what) {
        c->add_option("--expr", o.expr, what)->required();
    };

    CLI::App* gb = add_common("gb", "reduced Groebner basis", true);
    add_order(gb);
    CLI::App* nf = add_common("nf", "normal form of an element", true);
    add_order(nf);
    add_expr(nf, "element, e.g. \"x^3*y - 2*x\"");
    CLI::App* mem = add_common("member", "ideal membership of an element", true);
    add_order(mem);
    add_expr(mem, "element to test");
    CLI::App* fib = add_common("fiber", "fiber of a monomial", true);
    add_order(fib);
    add_caps(fib);
    add_expr(fib, "monomial, e.g. \"x^3*y^4\"");
    CLI::App* mfib = add_common("monomial-fiber", "monomials contained in the ideal", true);
    add_order(mfib);
    CLI::App* markov = add_common("markov-fibers", "generator fibers and their order", true);
    add_order(markov);
    add_caps(markov);
    CLI::App* gamma = add_common("gamma", "gamma graph of a complete fiber", true);
    add_order(gamma);
    add_caps(gamma);
    add_expr(gamma, "monomial whose fiber to analyze");
    gamma->add_option("--dot", o.dot_path, "write the graph in DOT format (- for stdout)");
    CLI::App* im = add_common("indisp-monomials", "indispensable monomials", true);
    CLI::App* ib = add_common("indisp-binomials",
                              "indispensable binomials of an irredundant set", true);
    ib->add_option("--dot", o.dot_path, "write the support graph in DOT format (- for stdout)");
    CLI::App* mini = add_common("minimize", "irredundant generating subset", true);
    add_order(mini);
    CLI::App* cig = add_common("check-indisp-gen",
                               "is the ideal generated by its indispensable binomials?", true);
    add_order(cig);
    CLI::App* grav = add_common("graver", "Graver basis by capped level sweep", true);
    grav->add_option("--cap-degree", o.cap_degree, "sweep degree cap");
    grav->add_option("--window", o.window, "required trailing quiet levels (default 4)");
    CLI::App* law = add_common("lawrence", "Lawrence lifting of the Graver basis", true);
    law->add_option("--cap-degree", o.cap_degree, "sweep degree cap");
    law->add_option("--window", o.window, "required trailing quiet levels (default 4)");
    CLI::App* ugb = add_common("ugb", "reduced bases under sampled term orders", true);
    CLI::App* toric = add_common("toric", "toric ideal of an integer matrix", false);
    toric->add_option("--matrix", o.matrix_path, "matrix file: rows cols, then entries");
    toric->add_flag("--a333", o.a333, "use the 3x3x3 contingency-table margin matrix");

    std::vector<const char*> argv;
    argv.push_back("bideal");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (toric->parsed()) {
            bool have_matrix = !o.matrix_path.empty();
            if (o.a333 == have_matrix)
                throw usage_error("toric needs exactly one of --matrix and --a333");
            return finish("toric", nullptr, o, run_toric(o), out);
        }
        IdealPresentation p = parse_ideal_file(o.input, o.char_override);
        if (gb->parsed()) return finish("gb", &p, o, run_gb(p, o), out);
        if (nf->parsed()) return finish("nf", &p, o, run_nf(p, o), out);
        if (mem->parsed()) return finish("member", &p, o, run_member(p, o), out);
        if (fib->parsed()) return finish("fiber", &p, o, run_fiber(p, o), out);
        if (mfib->parsed())
            return finish("monomial-fiber", &p, o, run_monomial_fiber(p, o), out);
        if (markov->parsed()) return finish("markov-fibers", &p, o, run_markov(p, o), out);
        if (gamma->parsed()) return finish("gamma", &p, o, run_gamma(p, o, out), out);
        if (im->parsed())
            return finish("indisp-monomials", &p, o, run_indisp_monomials(p, o), out);
        if (ib->parsed())
            return finish("indisp-binomials", &p, o, run_indisp_binomials(p, o, out), out);
        if (mini->parsed()) return finish("minimize", &p, o, run_minimize(p, o), out);
        if (cig->parsed())
            return finish("check-indisp-gen", &p, o, run_check_indisp_gen(p, o), out);
        if (grav->parsed()) return finish("graver", &p, o, run_graver(p, o), out);
        if (law->parsed()) return finish("lawrence", &p, o, run_lawrence(p, o), out);
        if (ugb->parsed()) return finish("ugb", &p, o, run_ugb(p, o), out);
        throw internal_error("no subcommand dispatched");
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const inconclusive_error& e) {
        err << "inconclusive: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace bideal
