// invrel: command-line front end for the invrel library.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "invrel/bijections.hpp"
#include "invrel/enumerate.hpp"
#include "invrel/permutations.hpp"
#include "invrel/reference.hpp"
#include "invrel/series.hpp"
#include "invrel/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace invrel;

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kGuard = 3 };

struct Output {
    std::string format = "table";
    bool reproducible = false;

    bool json() const { return format == "json"; }
    bool csv() const { return format == "csv"; }

    ordered_json header(std::string_view command) const {
        ordered_json j;
        j["command"] = command;
        if (!reproducible) {
            const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
            std::ostringstream ts;
            ts << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
            j["timestamp"] = ts.str();
        }
        return j;
    }

    void emit(const ordered_json& j) const { std::cout << j.dump(2) << '\n'; }
};

std::string str(std::uint64_t v) { return std::to_string(v); }

/// "7", "1..9".
std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const int n = std::stoi(text, &used);
            if (used != text.size()) throw ParseError("bad range");
            return {n, n};
        }
        const std::string a = text.substr(0, dots);
        const std::string b = text.substr(dots + 2);
        const int lo = std::stoi(a, &used);
        if (used != a.size()) throw ParseError("bad range");
        const int hi = std::stoi(b, &used);
        if (used != b.size()) throw ParseError("bad range");
        if (lo < 0 || hi < lo) throw ParseError("bad range");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw ParseError("invalid range '" + text + "', expected N or LO..HI");
    }
}

bool is_triple(const std::string& text) { return std::count(text.begin(), text.end(), ',') == 2; }

void print_table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows,
                 const Output& out) {
    auto line = [&](const std::vector<std::string>& cells) {
        if (out.csv()) {
            for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << cells[i];
        } else {
            std::cout << '|';
            for (const auto& c : cells) std::cout << ' ' << c << " |";
        }
        std::cout << '\n';
    };
    line(head);
    if (!out.csv()) line(std::vector<std::string>(head.size(), "---"));
    for (const auto& r : rows) line(r);
}

std::string map_string(const std::map<int, std::uint64_t>& m) {
    std::string s;
    for (auto [k, v] : m) s += (s.empty() ? "" : " ") + std::to_string(k) + ":" + str(v);
    return s;
}

ordered_json map_json(const std::map<int, std::uint64_t>& m) {
    ordered_json j = ordered_json::object();
    for (auto [k, v] : m) j[std::to_string(k)] = str(v);
    return j;
}

// ---------------------------------------------------------------------------

struct CountArgs {
    std::string pattern;
    std::string range = "1..9";
    bool by_last = false;
    bool by_dist = false;
    bool exhaustive = false;
};

int cmd_count(const CountArgs& a, const Output& out) {
    const auto [lo, hi] = parse_range(a.range);
    std::vector<AvoiderCount> counts;
    std::string canonical;
    if (is_triple(a.pattern)) {
        const auto t = parse_triple(a.pattern);
        canonical = t.to_string();
        for (int n = lo; n <= hi; ++n)
            counts.push_back(a.exhaustive ? count_avoiders_triple_exhaustive(t, n) : count_avoiders_triple(t, n));
    } else {
        const auto p = parse_pattern(a.pattern);
        canonical = p.to_string();
        for (int n = lo; n <= hi; ++n)
            counts.push_back(a.exhaustive ? count_avoiders_exhaustive(p, n) : count_avoiders(p, n));
    }

    if (out.json()) {
        auto j = out.header("count");
        j["pattern"] = canonical;
        j["method"] = a.exhaustive ? "exhaustive" : "pruned";
        ordered_json rows = ordered_json::array();
        for (const auto& c : counts) {
            ordered_json r;
            r["n"] = c.n;
            r["count"] = str(c.total);
            if (a.by_last) r["by_last_entry"] = map_json(c.by_last_entry);
            if (a.by_dist) r["by_dist"] = map_json(c.by_dist);
            rows.push_back(std::move(r));
        }
        j["counts"] = std::move(rows);
        out.emit(j);
        return kOk;
    }
    std::vector<std::string> head = {"n", "count"};
    if (a.by_last) head.push_back("by_last_entry");
    if (a.by_dist) head.push_back("by_dist");
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : counts) {
        std::vector<std::string> r = {std::to_string(c.n), str(c.total)};
        if (a.by_last) r.push_back(map_string(c.by_last_entry));
        if (a.by_dist) r.push_back(map_string(c.by_dist));
        rows.push_back(std::move(r));
    }
    print_table(head, rows, out);
    return kOk;
}

// ---------------------------------------------------------------------------

std::string class_string(const PatternClass& cls) {
    std::string s;
    for (const auto& p : cls) s += (s.empty() ? "" : " ") + std::string("(") + p.to_string() + ")";
    return s;
}

int cmd_classify(const std::string& level_text, int n_max, const Output& out) {
    const auto level = parse_level(level_text);
    const auto report = classify(level, n_max);
    const auto reference = reference_partition(level);
    const bool matches = same_partition(report.classes, reference);
    // Less data may merge classes of the reference partition but never split them.
    const bool consistent = refines(reference, report.classes);
    const bool ok = n_max >= 10 ? matches : consistent;

    if (out.json()) {
        auto j = out.header("classify");
        j["level"] = to_string(level);
        j["nmax"] = n_max;
        j["class_count"] = report.classes.size();
        j["stable_from"] = report.stable_from;
        j["matches_reference"] = matches;
        ordered_json classes = ordered_json::array();
        for (const auto& cls : report.classes) {
            ordered_json c;
            c["patterns"] = ordered_json::array();
            for (const auto& p : cls) c["patterns"].push_back(p.to_string());
            c["avoiders"] = str(count_avoiders(cls.front(), n_max).total);
            classes.push_back(std::move(c));
        }
        j["classes"] = std::move(classes);
        out.emit(j);
    } else {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < report.classes.size(); ++i) {
            const auto& cls = report.classes[i];
            rows.push_back({std::to_string(i + 1), class_string(cls), str(count_avoiders(cls.front(), n_max).total)});
        }
        print_table({"class", "patterns", "avoiders at n=" + std::to_string(n_max)}, rows, out);
        if (!out.csv()) {
            std::cout << '\n'
                      << report.classes.size() << " " << to_string(level) << " classes at nmax=" << n_max
                      << ", stable from n=" << report.stable_from << "; "
                      << (matches ? "matches" : "differs from") << " the reference partition\n";
        }
    }
    return ok ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string& suite, const VerifyOptions& options, const Output& out) {
    const auto report = run_suite(suite, options);
    if (out.json()) {
        auto j = out.header("verify");
        j["suite"] = suite;
        j["passed"] = report.passed();
        j["failures"] = report.failures();
        ordered_json checks = ordered_json::array();
        for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        j["checks"] = std::move(checks);
        out.emit(j);
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& c : report.checks) rows.push_back({c.passed ? "PASS" : "FAIL", c.name, c.detail});
        print_table({"status", "check", "detail"}, rows, out);
        if (!out.csv()) {
            std::cout << '\n'
                      << (report.passed() ? "PASS" : "FAIL") << ": " << suite << ", " << report.checks.size()
                      << " checks, " << report.failures() << " failed\n";
        }
    }
    return report.passed() ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------

int cmd_series(const std::string& name, int order, const std::string& t_text, const Output& out) {
    const auto& entry = catalog_entry(name);
    const auto s = gf_catalog(name, order);
    const bool univariate = entry.kind != SeriesKind::bivariate || !t_text.empty();
    TruncatedSeries u(order);
    if (univariate) {
        mpq_class t = 1;
        if (!t_text.empty()) {
            try {
                t = mpq_class(t_text);
                t.canonicalize();
            } catch (const std::invalid_argument&) {
                throw ParseError("invalid rational '" + t_text + "'");
            }
        }
        u = evaluate_t(s, t);
    }

    if (out.json()) {
        auto j = out.header("series");
        j["name"] = entry.name;
        j["kind"] = to_string(entry.kind);
        j["formula"] = entry.formula;
        j["order"] = order;
        if (!t_text.empty()) j["t"] = t_text;
        if (univariate) {
            j["coefficients"] = coefficient_strings(u);
        } else {
            j["coefficients"] = coefficient_strings(s);
        }
        out.emit(j);
    } else if (out.csv()) {
        std::cout << "k,coefficient\n";
        for (int k = 0; k <= order; ++k)
            std::cout << k << ',' << (univariate ? detail::coeff_string(u[k]) : s[k].to_string()) << '\n';
    } else {
        std::cout << (univariate ? u.to_string() : s.to_string()) << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------------------

std::vector<std::uint64_t> computed_terms(const ReferenceSequence& ref, const std::string& pattern) {
    std::vector<std::uint64_t> got;
    for (std::size_t i = 0; i < ref.terms.size(); ++i) {
        const int n = ref.offset + static_cast<int>(i);
        got.push_back(is_triple(pattern) ? count_avoiders_triple(parse_triple(pattern), n).total
                                         : count_avoiders(parse_pattern(pattern), n).total);
    }
    return got;
}

std::string join(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + str(x);
    return s;
}

int cmd_oeis_check(const std::string& id, bool all, const Output& out) {
    std::vector<const ReferenceSequence*> refs;
    if (all) {
        for (const auto& r : reference_sequences()) refs.push_back(&r);
    } else {
        const auto* r = find_reference(id);
        if (r == nullptr) throw DomainError("no embedded reference for '" + id + "'");
        refs.push_back(r);
    }

    bool ok = true;
    ordered_json results = ordered_json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto* ref : refs) {
        for (const auto& pattern : ref->patterns) {
            const auto got = computed_terms(*ref, pattern);
            const bool match = got == ref->terms;
            ok = ok && match;
            ordered_json r;
            r["id"] = ref->oeis_id;
            r["pattern"] = pattern;
            r["offset"] = ref->offset;
            r["terms"] = ref->terms.size();
            r["match"] = match;
            r["expected"] = ordered_json::array();
            r["computed"] = ordered_json::array();
            for (auto x : ref->terms) r["expected"].push_back(str(x));
            for (auto x : got) r["computed"].push_back(str(x));
            results.push_back(std::move(r));
            rows.push_back({ref->oeis_id, "(" + pattern + ")", match ? "match" : "MISMATCH",
                            std::to_string(ref->terms.size()), join(got)});
        }
    }
    if (out.json()) {
        auto j = out.header("oeis-check");
        j["passed"] = ok;
        j["results"] = std::move(results);
        out.emit(j);
    } else {
        print_table({"id", "pattern", "status", "terms", "computed"}, rows, out);
    }
    return ok ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------

std::string subset_string(const std::set<int>& s) {
    std::string out = "{";
    for (int x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
    return out + "}";
}

std::string word_string(const std::vector<int>& w) {
    std::string out;
    for (int x : w) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

std::set<int> parse_subset(const std::string& text) {
    std::string body = text;
    body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == '{' || c == '}'; }), body.end());
    std::set<int> s;
    if (body.empty()) return s;
    for (int x : parse_integer_word(body)) s.insert(x);
    return s;
}

const std::vector<std::string>& bijection_names() {
    static const std::vector<std::string> names = {"theta",        "phi",          "upsilon",      "gamma",
                                                   "composition",  "dyck",         "varphi",       "varphi-prime",
                                                   "varphi-multi", "varphi-multi-prime", "vincular"};
    return names;
}

int cmd_bijection(const std::string& map, const std::string& input, bool inverse, int size, const Output& out) {
    std::string result;
    auto seq = [&] { return parse_inversion_sequence(input); };
    const auto explicit_arity = MarkNotation::explicit_arity;
    if (map == "theta") {
        result = inverse ? to_string(theta_inverse(seq())) : to_string(theta(parse_permutation(input)));
    } else if (map == "phi") {
        result = to_string(inverse ? phi_last_preserving_inverse(seq()) : phi_last_preserving(seq()));
    } else if (map == "upsilon") {
        result = inverse ? to_string(upsilon_inverse(parse_permutation(input))) : to_string(upsilon(seq()));
    } else if (map == "gamma") {
        if (inverse && size < 0) throw ParseError("gamma --inverse needs --size");
        result = inverse ? to_string(gamma_inverse(parse_subset(input), size)) : subset_string(gamma(seq()));
    } else if (map == "composition") {
        result = inverse ? to_string(from_composition(parse_integer_word(input))) : word_string(to_composition(seq()));
    } else if (map == "dyck") {
        result = inverse ? to_string(from_dyck_path(parse_marked_path(input))) : to_dyck_path(seq()).to_string();
    } else if (map == "varphi") {
        result = inverse ? to_string(varphi_inverse(parse_marked_path(input))) : varphi(seq()).to_string();
    } else if (map == "varphi-prime") {
        result = inverse ? to_string(varphi_prime_inverse(parse_slanted_path(input))) : varphi_prime(seq()).to_string();
    } else if (map == "varphi-multi") {
        result = inverse ? to_string(varphi_multi_inverse(parse_marked_path(input)))
                         : varphi_multi(seq()).to_string(explicit_arity);
    } else if (map == "varphi-multi-prime") {
        result = inverse ? to_string(varphi_multi_prime_inverse(parse_slanted_path(input)))
                         : varphi_multi_prime(seq()).to_string(explicit_arity);
    } else if (map == "vincular") {
        const auto pi = parse_permutation(input);
        result = to_string(inverse ? vincular_bijection_inverse(pi) : vincular_bijection(pi));
    } else {
        throw ParseError("unknown map '" + map + "'");
    }

    if (out.json()) {
        auto j = out.header("bijection");
        j["map"] = map;
        j["inverse"] = inverse;
        j["input"] = input;
        j["output"] = result;
        out.emit(j);
    } else {
        std::cout << result << '\n';
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Consecutive patterns of relations in inversion sequences: counts, classification, "
                 "generating functions, bijections and verification suites.\n\n"
                 "Resource guards cap exhaustive scans (I_n: n <= 12, occurrence profiles: n <= 10, "
                 "S_n: n <= 10, refined recurrences: n <= 14).\n"
                 "UNSAFE: setting " +
                 std::string(kUnsafeGuardOverrideEnv) +
                 "=1 disables the guards; runs may then take hours or exhaust memory.\n\n"
                 "Exit codes: 0 ok, 1 verification mismatch, 2 usage error, 3 resource guard."};
    app.name("invrel");
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    app.add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    app.add_flag("--reproducible", out.reproducible, "Omit the timestamp from JSON output");

    int code = kOk;

    CountArgs count;
    auto* c = app.add_subcommand("count", "Count avoiders of a pattern '<R1>,<R2>' or triple '<R1>,<R2>,<R3>'");
    c->add_option("pattern", count.pattern, "Relations from {<=, >=, <, >, =, !=, -}, comma separated")->required();
    c->add_option("--n", count.range, "Length N or range LO..HI")->capture_default_str();
    c->add_flag("--by-last", count.by_last, "Refine counts by the last entry");
    c->add_flag("--by-dist", count.by_dist, "Refine counts by the number of distinct entries");
    c->add_flag("--exhaustive", count.exhaustive, "Scan all of I_n instead of the pruned search");
    c->callback([&] { code = cmd_count(count, out); });

    std::string level = "wilf";
    int nmax = 10;
    auto* cl = app.add_subcommand("classify", "Partition the 36 patterns by equivalence up to nmax");
    cl->add_option("--level", level, "wilf, strong or superstrong")
        ->check(CLI::IsMember({"wilf", "strong", "superstrong"}))
        ->capture_default_str();
    cl->add_option("--nmax", nmax, "Largest length compared")->check(CLI::Range(0, 64))->capture_default_str();
    cl->callback([&] { code = cmd_classify(level, nmax, out); });

    std::string suite;
    VerifyOptions options;
    auto* v = app.add_subcommand("verify", "Run a verification suite");
    v->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(invrel::suite_names()));
    v->add_option("--bijection-nmax", options.bijection_n_max, "Largest n for bijection checks")
        ->capture_default_str();
    v->add_option("--count-nmax", options.count_n_max, "Largest n for brute-force count comparisons")
        ->capture_default_str();
    v->callback([&] { code = cmd_verify(suite, options, out); });

    std::string series_name;
    int order = 10;
    std::string t_value;
    std::vector<std::string> series_names;
    for (const auto& e : series_catalog()) series_names.push_back(e.name);
    auto* s = app.add_subcommand("series", "Print a catalog generating function");
    s->add_option("name", series_name, "Catalog name")->required()->check(CLI::IsMember(series_names));
    s->add_option("--order", order, "Truncation order in z")->check(CLI::Range(0, 200))->capture_default_str();
    s->add_option("--t", t_value, "Specialize t to a rational such as 1 or 1/2");
    s->callback([&] { code = cmd_series(series_name, order, t_value, out); });

    std::string oeis_id;
    bool oeis_all = false;
    auto* o = app.add_subcommand("oeis-check", "Compare computed terms with the embedded reference terms");
    auto* id_opt = o->add_option("--id", oeis_id, "OEIS identifier, e.g. A071356");
    auto* all_opt = o->add_flag("--all", oeis_all, "Check every embedded sequence");
    id_opt->excludes(all_opt);
    o->callback([&] {
        if (oeis_id.empty() && !oeis_all) throw CLI::RequiredError("--id or --all");
        code = cmd_oeis_check(oeis_id, oeis_all, out);
    });

    std::string map;
    std::string input;
    bool inverse = false;
    int size = -1;
    auto* b = app.add_subcommand("bijection", "Apply one of the bijections to a single object");
    b->add_option("map", map, "Map name")->required()->check(CLI::IsMember(bijection_names()));
    b->add_option("input", input, "Inversion sequence, permutation, path, subset or composition")->required();
    b->add_flag("--inverse", inverse, "Apply the inverse map");
    b->add_option("--size", size, "Length n, needed by the inverse of gamma");
    b->callback([&] { code = cmd_bijection(map, input, inverse, size, out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    } catch (const ResourceLimitError& e) {
        std::cerr << "invrel: " << e.what() << '\n';
        return kGuard;
    } catch (const ParseError& e) {
        std::cerr << "invrel: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "invrel: " << e.what() << '\n';
        return kUsage;
    }
    return code;
}
