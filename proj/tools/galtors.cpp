// galtors: command-line front end for the verification suite and the
// individual computations.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "galtors/galtors.hpp"

using namespace galtors;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitEnvironment = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EnvironmentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* kEvidenceNote = "height-bounded evidence, not a complete list of rational points";

struct Globals {
    long height = 0;  // 0: per-command default
    long prime_bound = 10000;
    std::string catalog_path;
    bool json = false;
    bool column_convention = false;
    unsigned workers = 0;
    std::vector<std::string> faults;
};

/// Collects human-readable lines, CHECK records and a JSON body, then
/// prints one or the other.
class Output {
public:
    explicit Output(const Globals& g) : g_(g) {}

    void line(const std::string& s) { lines_.push_back(s); }
    void check(const std::string& id, CheckStatus status, const std::string& details) {
        CheckResult r;
        r.id = id;
        r.status = status;
        r.details = details;
        checks_.push_back(r);
    }
    void add_check(const CheckResult& r) { checks_.push_back(r); }
    json& body() { return body_; }

    bool any_fail() const {
        for (const auto& c : checks_)
            if (c.failed()) return true;
        return false;
    }

    void flush(const std::string& command) const {
        if (g_.json) {
            json doc;
            doc["command"] = command;
            doc["result"] = body_;
            doc["checks"] = json::array();
            for (const auto& c : checks_)
                doc["checks"].push_back({{"id", c.id},
                                         {"status", to_string(c.status)},
                                         {"details", c.details},
                                         {"seconds", c.seconds},
                                         {"limit_seconds", c.limit_seconds}});
            std::cout << doc.dump(2) << "\n";
            return;
        }
        for (const auto& l : lines_) std::cout << l << "\n";
        for (const auto& c : checks_) std::cout << check_line(c) << "\n";
    }

private:
    const Globals& g_;
    std::vector<std::string> lines_;
    std::vector<CheckResult> checks_;
    json body_ = json::object();
};

bool has_fault(const Globals& g, const std::string& f) {
    return std::find(g.faults.begin(), g.faults.end(), f) != g.faults.end();
}

void maybe_inject(const Globals& g) {
    if (has_fault(g, "compute-error")) throw std::runtime_error("injected computational fault");
    if (has_fault(g, "environment-error")) throw EnvironmentError("injected environment fault");
}

MatrixConvention convention(const Globals& g) {
    return g.column_convention ? MatrixConvention::Column : MatrixConvention::Row;
}

std::vector<CatalogEntry> load_catalog(const Globals& g) {
    if (g.catalog_path.empty()) return {};
    std::ifstream in(g.catalog_path);
    if (!in) throw EnvironmentError("cannot read catalog file '" + g.catalog_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_catalog(ss.str());
    } catch (const CatalogError& e) {
        throw UsageError(g.catalog_path + ": " + e.what());
    }
}

/// Named group, catalog label, or a generator list "[[a,b,c,d],...]" at
/// level n.
GenGroup resolve_group(const Globals& g, const std::string& spec, int level) {
    if (spec.find('[') != std::string::npos) {
        if (level < 2) throw UsageError("a generator list needs a level");
        try {
            const auto entries = parse_catalog("input " + std::to_string(level) + " " + spec);
            return catalog_group(entries.front(), convention(g)).with_label(spec);
        } catch (const CatalogError& e) {
            throw UsageError(e.what());
        }
    }
    if (spec == "GL2" || spec == "full") {
        if (level < 2) throw UsageError("the full group needs a level");
        return full_group_of(level).with_label(full_group_label(level));
    }
    for (const auto& e : load_catalog(g))
        if (e.label == spec) return catalog_group(e, convention(g));
    try {
        return named_group(spec);
    } catch (const std::out_of_range&) {
        throw UsageError("unknown group '" + spec + "'");
    }
}

CurveQ resolve_curve(const std::string& text) {
    try {
        return parse_curve(text);
    } catch (const SingularCurve& e) {
        throw UsageError(e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

BigRat resolve_rat(const std::string& text) {
    try {
        return parse_rat(text);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

JMap resolve_jmap(const std::string& label) {
    try {
        return named_jmap(label);
    } catch (const std::out_of_range&) {
        throw UsageError("unknown j-map '" + label + "'; known: " + detail::join(jmap_labels()));
    }
}

std::string yes_no(bool b) { return b ? "Yes" : "No"; }

std::string join_ints(const std::vector<int>& v) {
    std::vector<std::string> s;
    for (int x : v) s.push_back(std::to_string(x));
    return detail::join(s);
}

// Subcommands

int cmd_verify_all(const Globals& g) {
    VerifyOptions o;
    if (g.height > 0) o.fiber_height = g.height;
    o.prime_bound = g.prime_bound;
    o.workers = g.workers;
    o.catalog = load_catalog(g);
    o.catalog_convention = convention(g);
    for (const auto& f : g.faults)
        if (std::find(known_faults().begin(), known_faults().end(), f) != known_faults().end()) o.faults.insert(f);
    maybe_inject(g);

    Output out(g);
    const auto rep = verify_all(o, [&](const CheckResult& r) {
        if (!g.json) std::cout << check_line(r) << std::endl;
        out.add_check(r);
    });
    std::size_t failed = 0;
    for (const auto& c : rep.checks) failed += c.failed();
    out.body()["ok"] = rep.ok();
    out.body()["failed"] = failed;
    if (g.json) out.flush("verify-all");
    else
        std::cout << (rep.ok() ? "all checks passed" : std::to_string(failed) + " check(s) failed") << " ("
                  << rep.checks.size() << " run; search results are " << kEvidenceNote << ")\n";
    return rep.ok() ? kExitOk : kExitFail;
}

int cmd_group(const Globals& g, const std::string& spec, int level) {
    GenGroup grp = resolve_group(g, spec, level);
    if (level >= 2 && grp.modulus() != level) {
        if (level > grp.modulus() || grp.modulus() % level != 0)
            throw UsageError("cannot view a level-" + std::to_string(grp.modulus()) + " group at level " +
                             std::to_string(level));
        grp = reduce_level(grp, level).with_label(grp.label() + " mod " + std::to_string(level));
    }
    maybe_inject(g);
    const int n = grp.modulus();
    const auto full = static_cast<std::size_t>(gl2_order(n));
    const auto app = is_applicable(grp);
    Output out(g);
    out.line("group: " + grp.label());
    out.line("level: " + std::to_string(n));
    out.line("order: " + std::to_string(grp.order()));
    out.line("index: " + std::to_string(full / grp.order()));
    out.line("-I: " + yes_no(contains_minus_identity(grp)));
    out.line("det image: {" + join_ints(det_image(grp)) + "}");
    out.line("stable lines: " + std::to_string(stable_lines(grp)));
    out.line("applicable: " + yes_no(app.applicable) + (app.applicable ? "" : " (" + app.reason + ")"));
    std::string klass;
    if (is_prime(n)) {
        klass = to_string(dickson_classify(grp));
        out.line("class: " + klass);
    }
    out.body() = {{"label", grp.label()},
                  {"level", n},
                  {"order", grp.order()},
                  {"index", full / grp.order()},
                  {"minus_identity", contains_minus_identity(grp)},
                  {"det_image", det_image(grp)},
                  {"stable_lines", stable_lines(grp)},
                  {"applicable", app.applicable}};
    if (!klass.empty()) out.body()["class"] = klass;
    out.check("group." + grp.label(), CheckStatus::Pass,
              detail::Tokens()
                  .add("order", grp.order())
                  .add("index", full / grp.order())
                  .add("minus-identity", contains_minus_identity(grp) ? "yes" : "no")
                  .str());
    out.flush("group");
    return kExitOk;
}

int cmd_search_index(const Globals& g, const std::string& spec, int mode) {
    if (mode != 3 && mode != 6) throw UsageError("mode must be 3 or 6");
    const GenGroup h = resolve_group(g, spec, 9);
    if (h.modulus() != 9) throw UsageError("index searches need a level-9 group");
    maybe_inject(g);
    Output out(g);
    if (mode == 3) {
        std::vector<GenGroup> groups{h};
        if (contains_minus_identity(h))
            for (const auto& c : minus_one_complements(h)) groups.push_back(c);
        json rows = json::array();
        bool ok = true;
        std::vector<int> classes, distinct;
        for (std::size_t i = 0; i < groups.size(); ++i) {
            const int k = index3_fixing_count(groups[i]);
            const int d = static_cast<int>(index3_fixing_subgroups(groups[i]).size());
            classes.push_back(k);
            distinct.push_back(d);
            ok = ok && k <= 2;
            const std::string name = i == 0 ? "H" : "complement " + std::to_string(i);
            out.line(name + " (order " + std::to_string(groups[i].order()) + "): " + std::to_string(k) +
                     " class(es), " + std::to_string(d) + " subgroup(s) of index 3 fixing an order-9 vector");
            rows.push_back({{"order", groups[i].order()}, {"classes", k}, {"distinct", d}});
        }
        out.body() = {{"group", h.label()}, {"mode", 3}, {"rows", rows}};
        out.check("index3." + h.label(), ok ? CheckStatus::Pass : CheckStatus::Fail,
                  detail::Tokens().add("classes", join_ints(classes)).add("distinct", join_ints(distinct)).str());
    } else {
        if (!contains_minus_identity(h)) throw UsageError("index-6 search needs -I in the group");
        const auto ws = index6_complement_search(h);
        json rows = json::array();
        bool ok = true;
        for (const auto& w : ws) {
            ok = ok && verify_witness(h, w);
            std::ostringstream v;
            v << "(" << w.vector.x() << "," << w.vector.y() << ")";
            out.line(std::string(w.is_whole_group ? "H" : "complement") + " of order " +
                     std::to_string(w.subgroup.order()) + ": v = " + v.str() + ", stabilizer index " +
                     std::to_string(w.stabilizer_index));
            rows.push_back({{"whole_group", w.is_whole_group},
                            {"subgroup_order", w.subgroup.order()},
                            {"vector", {w.vector.x(), w.vector.y()}},
                            {"stabilizer_index", w.stabilizer_index}});
        }
        out.line(std::to_string(ws.size()) + " witness(es)");
        out.body() = {{"group", h.label()}, {"mode", 6}, {"witnesses", rows}};
        out.check("index6." + h.label(), ok ? CheckStatus::Pass : CheckStatus::Fail,
                  detail::Tokens().add("witnesses", ws.size()).str());
    }
    out.flush("search-index");
    return out.any_fail() ? kExitFail : kExitOk;
}

std::vector<GenGroup> candidates_for(int ell) {
    if (ell == 3) return default_level3_candidates();
    if (ell == 2)
        return {full_group_of(2).with_label(full_group_label(2)), named_group("2B"),
                closure({GMat(0, 1, 1, 1, 2)}, 2, "2Cn"), closure({GMat(1, 0, 0, 1, 2)}, 2, "trivial")};
    std::vector<GenGroup> out{full_group_of(9).with_label(full_group_label(9))};
    for (const auto& l : level9_labels()) out.push_back(named_group(l));
    return out;
}

int cmd_identify(const Globals& g, const std::string& curve_text, int ell, long bound) {
    const CurveQ e = resolve_curve(curve_text);
    if (ell != 2 && ell != 3 && ell != 9) throw UsageError("level must be 2, 3 or 9");
    if (bound < 20) throw UsageError("prime bound must be at least 20");
    maybe_inject(g);
    const auto rep = identify_image(e, ell, candidates_for(ell), bound, g.workers);
    Output out(g);
    out.line("curve: " + e.to_string());
    out.line("level " + std::to_string(ell) + ", " + std::to_string(rep.signature.samples.size()) +
             " good primes up to " + std::to_string(bound) + ", " +
             std::to_string(rep.signature.classes().size()) + " (trace, det) classes");
    json verdicts = json::array();
    for (const auto& v : rep.verdicts) {
        if (v.survives)
            out.line("consistent-with: " + v.label);
        else
            out.line("eliminated: " + v.label + " (p = " + std::to_string(*v.eliminated_by) + ")");
        json j = {{"label", v.label}, {"survives", v.survives}};
        if (v.eliminated_by) j["eliminated_by"] = *v.eliminated_by;
        verdicts.push_back(j);
    }
    out.body() = {{"curve", e.to_string()}, {"level", ell}, {"bound", bound}, {"verdicts", verdicts}};
    out.check("identify." + e.to_string(), CheckStatus::EvidenceOnly,
              detail::Tokens().add("level", ell).add("bound", bound).add("consistent-with", detail::join(rep.survivors())).str());
    out.flush("identify");
    return kExitOk;
}

int cmd_jmap(const Globals& g, const std::string& label, const std::string& x_text) {
    const JMap m = resolve_jmap(label);
    const BigRat x = resolve_rat(x_text);
    maybe_inject(g);
    const auto j = jmap_eval(m, x);
    Output out(g);
    const std::string value = j ? j->get_str() : "pole";
    out.line(value);
    out.body() = {{"label", m.label}, {"x", x.get_str()}, {"j", value}};
    if (j) out.body()["cm"] = is_cm_j(*j);
    out.check("jmap." + m.label, CheckStatus::Pass, detail::Tokens().add("x", x.get_str()).add("j", value).str());
    out.flush("jmap");
    return kExitOk;
}

int cmd_fiber_search(const Globals& g, const std::string& a, const std::string& b, const std::string& equation) {
    PlaneCurve curve;
    if (!equation.empty()) {
        try {
            curve = plane_curve(parse_polynomial(equation, "s", "t"));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    } else {
        if (a.empty() || b.empty()) throw UsageError("give two j-map labels or --equation");
        curve = fiber_curve(resolve_jmap(a), resolve_jmap(b));
    }
    const long h = g.height > 0 ? g.height : 30;
    maybe_inject(g);
    const auto hits = classify_hits(curve, search_plane(curve, h, g.workers));
    Output out(g);
    out.line("curve: " + curve.describe());
    out.line("height: " + std::to_string(h) + " (" + kEvidenceNote + ")");
    json rows = json::array();
    std::size_t poles = 0, cm = 0;
    for (const auto& hit : hits) {
        std::string s = "s=" + hit.point.s.get_str() + " t=" + hit.point.t.get_str();
        json row = {{"s", hit.point.s.get_str()}, {"t", hit.point.t.get_str()}};
        if (hit.on_pole_locus) {
            s += " pole";
            row["pole"] = true;
            ++poles;
        } else if (hit.j) {
            s += " j=" + hit.j->get_str() + (hit.cm ? " (CM)" : "");
            row["j"] = hit.j->get_str();
            row["cm"] = hit.cm;
            cm += hit.cm;
        }
        out.line(s);
        rows.push_back(row);
    }
    out.line(std::to_string(hits.size()) + " point(s)");
    out.body() = {{"curve", curve.describe()}, {"height", h}, {"points", rows}, {"note", kEvidenceNote}};
    out.check("fiber-search", CheckStatus::EvidenceOnly,
              detail::Tokens().add("height", h).add("points", hits.size()).add("pole", poles).add("cm", cm).str());
    out.flush("fiber-search");
    return kExitOk;
}

int cmd_curve_search(const Globals& g, const std::string& model) {
    BiPoly f;
    try {
        f = parse_polynomial(model, "x", "y");
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    maybe_inject(g);
    Output out(g);
    json rows = json::array();
    const auto ycoeffs = f.coeffs_in(Var::Second);
    const bool hyper = ycoeffs.size() == 3 && ycoeffs[2].degree() == 0;
    const long h = g.height > 0 ? g.height : (hyper ? 200 : 30);
    std::vector<PlanePoint> pts;
    if (hyper) {
        // c y^2 + A(x) y + B(x) = 0  ->  y^2 + (A/c) y = -B/c
        const BigRat c = ycoeffs[2].coeff(0);
        const UniPoly hx = ycoeffs[1] * UniPoly(1 / c), fx = ycoeffs[0] * UniPoly(-1 / c);
        pts = search_hyperelliptic(hx, fx, h);
    } else {
        pts = search_plane(plane_curve(f), h, g.workers);
    }
    const bool genus2 = hyper && ycoeffs[1] == genus2_h() * UniPoly(ycoeffs[2].coeff(0)) &&
                        ycoeffs[0] == genus2_f() * UniPoly(-ycoeffs[2].coeff(0));
    out.line("model: " + f.to_string("x", "y") + " = 0" + (hyper ? " (quadratic in y)" : ""));
    out.line("height: " + std::to_string(h) + " (" + kEvidenceNote + ")");
    for (const auto& p : pts) {
        std::string s = "x=" + p.s.get_str() + " y=" + p.t.get_str();
        json row = {{"x", p.s.get_str()}, {"y", p.t.get_str()}};
        if (genus2) {
            const auto img = genus2_point_image(p.s, p.t);
            if (img.cusp) {
                s += " cusp";
                row["cusp"] = true;
            } else {
                s += " j=" + img.j->get_str() + (img.cm ? " (CM)" : "");
                row["j"] = img.j->get_str();
                row["cm"] = img.cm;
            }
        }
        out.line(s);
        rows.push_back(row);
    }
    out.line(std::to_string(pts.size()) + " point(s)");
    out.body() = {{"model", f.to_string("x", "y")}, {"height", h}, {"points", rows}, {"note", kEvidenceNote}};
    out.check("curve-search", CheckStatus::EvidenceOnly, detail::Tokens().add("height", h).add("points", pts.size()).str());
    out.flush("curve-search");
    return kExitOk;
}

int cmd_descent(const Globals& g) {
    const long h = g.height > 0 ? g.height : 200;
    maybe_inject(g);
    const auto hits = zeta3_descent_search(h);
    Output out(g);
    out.line("y = a + b*sqrt(-3) on y^2 = t^3 - 27 with ab = 0, height " + std::to_string(h) + " (" +
             kEvidenceNote + ")");
    json rows = json::array();
    for (const auto& hit : hits) {
        std::string flags;
        if (hit.singular) flags += " singular";
        if (hit.excluded) flags += " excluded";
        if (hit.cm) flags += " CM";
        out.line("t=" + hit.t.get_str() + " " + to_string(hit.which) + " " +
                 (hit.which == DescentCase::BZero ? "a=" : "b=") + hit.value.get_str() + flags);
        rows.push_back({{"t", hit.t.get_str()},
                        {"case", to_string(hit.which)},
                        {"value", hit.value.get_str()},
                        {"singular", hit.singular},
                        {"excluded", hit.excluded},
                        {"cm", hit.cm}});
    }
    std::vector<std::string> ts;
    for (const auto& t : descent_t_values(hits)) ts.push_back(t.get_str());
    out.line("t values (singular fiber dropped): {" + detail::join(ts) + "}");
    out.body() = {{"height", h}, {"hits", rows}, {"t", ts}, {"note", kEvidenceNote}};
    out.check("descent", CheckStatus::EvidenceOnly,
              detail::Tokens().add("height", h).add("t", "{" + detail::join(ts) + "}").str());
    out.flush("descent");
    return kExitOk;
}

int cmd_torsion(const Globals& g, const std::string& curve_text) {
    const CurveQ e = resolve_curve(curve_text);
    maybe_inject(g);
    const auto inv = curve_invariants(e);
    const auto tor = torsion_over_Q(e);
    const auto two = two_torsion_image(e);
    const auto k3 = rational_3isogeny_kernel(e);
    std::vector<std::string> k3s;
    for (const auto& x : k3) k3s.push_back(x.get_str());
    Output out(g);
    out.line("curve: " + e.to_string());
    out.line("discriminant: " + inv.disc.get_str());
    out.line("j: " + inv.j.get_str() + (is_cm_j(inv.j) ? " (CM)" : ""));
    out.line("torsion over Q: " + tor.structure.to_string());
    out.line("mod-2 image: " + to_string(two));
    out.line("3-division x-roots: {" + detail::join(k3s) + "}");
    const bool mazur = is_admissible_torsion(tor.structure, 1);
    out.body() = {{"curve", e.to_string()},
                  {"discriminant", inv.disc.get_str()},
                  {"j", inv.j.get_str()},
                  {"cm", is_cm_j(inv.j)},
                  {"torsion", tor.structure.to_string()},
                  {"two_torsion_image", to_string(two)},
                  {"three_division_roots", k3s}};
    out.check("torsion." + e.to_string(), mazur ? CheckStatus::Pass : CheckStatus::Fail,
              detail::Tokens().add("structure", tor.structure.to_string()).add("mazur", mazur ? "yes" : "no").str());
    out.flush("torsion");
    return mazur ? kExitOk : kExitFail;
}

int cmd_tables(const Globals& g) {
    maybe_inject(g);
    Output out(g);
    json tables = json::object();
    for (int d : torsion_table_degrees()) {
        std::vector<std::string> names;
        for (const auto& s : torsion_table(d)) names.push_back(s.to_string());
        out.line("degree " + std::to_string(d) + ": " + detail::join(names, ", "));
        tables[std::to_string(d)] = names;
    }
    std::vector<std::string> cm;
    for (const auto& j : cm_j_invariants()) cm.push_back(j.get_str());
    out.line("CM j-invariants: " + detail::join(cm, ", "));
    json groups = json::array();
    for (const auto& l : named_group_labels()) {
        const auto grp = named_group(l);
        out.line("group " + l + ": level " + std::to_string(grp.modulus()) + ", order " + std::to_string(grp.order()));
        groups.push_back({{"label", l}, {"level", grp.modulus()}, {"order", grp.order()}});
    }
    out.line("j-maps: " + detail::join(jmap_labels(), ", "));
    out.body() = {{"torsion", tables}, {"cm_j", cm}, {"groups", groups}, {"jmaps", jmap_labels()}};
    out.flush("tables");
    return kExitOk;
}

void add_common(CLI::App* sub, Globals& g) {
    sub->add_option("--height", g.height, "Height bound for searches")->check(CLI::PositiveNumber);
    sub->add_option("--prime-bound", g.prime_bound, "Prime bound for Frobenius sampling")->check(CLI::Range(20L, 10000000L));
    sub->add_option("--catalog", g.catalog_path, "Group catalog file");
    sub->add_flag("--json", g.json, "Print one JSON document instead of text");
    sub->add_flag("--column-convention", g.column_convention,
                  "Read catalog and generator-list matrices as acting on column vectors");
    sub->add_option("--workers", g.workers, "Worker threads (0: all cores)");
    sub->add_option("--inject-fault", g.faults)->group("");  // hidden
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subgroups of GL2(Z/n), j-map fiber searches and elliptic-curve checks"};
    app.require_subcommand(1);
    Globals g;

    auto* verify = app.add_subcommand("verify-all", "Run the full verification suite");
    add_common(verify, g);

    std::string group_spec;
    int level = 0;
    auto* group = app.add_subcommand("group", "Order, index and invariants of a group");
    group->add_option("group", group_spec, "Label, catalog label, GL2, or [[a,b,c,d],...]")->required();
    group->add_option("level", level, "Level (required for generator lists)");
    add_common(group, g);

    int mode = 0;
    auto* sindex = app.add_subcommand("search-index", "Index-3 fixing counts or index-6 witnesses at level 9");
    sindex->add_option("group", group_spec, "Level-9 group")->required();
    sindex->add_option("mode", mode, "3 or 6")->required();
    add_common(sindex, g);

    std::string curve_text;
    int ell = 3;
    long bound = 0;
    auto* identify = app.add_subcommand("identify", "Filter candidate mod-l images by Frobenius sampling");
    identify->add_option("curve", curve_text, "[a1,a2,a3,a4,a6]")->required();
    identify->add_option("level", ell, "2, 3 or 9");
    identify->add_option("bound", bound, "Prime bound (default --prime-bound)");
    add_common(identify, g);

    std::string label, x_text;
    auto* jmap = app.add_subcommand("jmap", "Evaluate a j-map");
    jmap->add_option("label", label, detail::join(jmap_labels(), ", "))->required();
    jmap->add_option("x", x_text, "Rational argument")->required();
    add_common(jmap, g);

    std::string label_b, equation;
    auto* fiber = app.add_subcommand("fiber-search", "Rational points on j_A(s) = j_B(t)");
    fiber->add_option("a", label, "j-map in s");
    fiber->add_option("b", label_b, "j-map in t");
    fiber->add_option("--equation", equation, "Search F(s, t) = 0 instead");
    add_common(fiber, g);

    std::string model;
    auto* csearch = app.add_subcommand("curve-search", "Rational points on a model in x, y");
    csearch->add_option("model", model, "Equation, e.g. \"y^2 + (x^3+1)*y = -9*x^3\"")->required();
    add_common(csearch, g);

    auto* descent = app.add_subcommand("descent", "The a + b*sqrt(-3) split on y^2 = t^3 - 27");
    add_common(descent, g);

    auto* torsion = app.add_subcommand("torsion", "Rational torsion, mod-2 image and 3-division roots");
    torsion->add_option("curve", curve_text, "[a1,a2,a3,a4,a6]")->required();
    add_common(torsion, g);

    auto* tables = app.add_subcommand("tables", "Torsion tables, CM j-invariants and embedded groups");
    add_common(tables, g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const std::vector<std::string> extra{"compute-error", "environment-error"};
        for (const auto& f : g.faults)
            if (std::find(known_faults().begin(), known_faults().end(), f) == known_faults().end() &&
                std::find(extra.begin(), extra.end(), f) == extra.end())
                throw UsageError("unknown fault '" + f + "'");

        if (verify->parsed()) return cmd_verify_all(g);
        if (group->parsed()) return cmd_group(g, group_spec, level);
        if (sindex->parsed()) return cmd_search_index(g, group_spec, mode);
        if (identify->parsed()) return cmd_identify(g, curve_text, ell, bound > 0 ? bound : g.prime_bound);
        if (jmap->parsed()) return cmd_jmap(g, label, x_text);
        if (fiber->parsed()) return cmd_fiber_search(g, label, label_b, equation);
        if (csearch->parsed()) return cmd_curve_search(g, model);
        if (descent->parsed()) return cmd_descent(g);
        if (torsion->parsed()) return cmd_torsion(g, curve_text);
        if (tables->parsed()) return cmd_tables(g);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const EnvironmentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEnvironment;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
