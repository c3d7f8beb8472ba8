#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sumgrowth/dense.hpp"
#include "sumgrowth/error.hpp"
#include "sumgrowth/extremal.hpp"
#include "sumgrowth/gap.hpp"
#include "sumgrowth/heights.hpp"
#include "sumgrowth/io.hpp"
#include "sumgrowth/sumset.hpp"

namespace sumgrowth::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Plain, Csv, Json };

/// Usage problems detected after parsing (missing operator source and the like).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string tol_text = "1e-9";
    std::string format_text = "plain";
    std::string out_path;
    std::size_t threads = 1;
    int digits = 10;

    std::string poly;
    std::string matrix_path, companion_poly;
    std::string set_path, gap_path, vectors_path, vector_text, entry_bound;
    std::int64_t k = 1;
    std::uint64_t budget = kDefaultEnumerationBudget;
    std::size_t n = 0;
    std::size_t interval = 0;
    std::int64_t side = 0;
    std::string eps_text, delta_text;
    std::int64_t m = 1;
    std::string ms_text;
    double cell = 0.05;
    std::uint64_t seed = 1;
    std::size_t dim = 1;
    std::int64_t lo = 0, hi = 9;

    Format format() const {
        if (format_text == "csv") return Format::Csv;
        if (format_text == "json") return Format::Json;
        return Format::Plain;
    }
    SumsetOptions sumset_options() const {
        SumsetOptions o;
        o.threads = threads;
        return o;
    }
};

/// Positive rational from "1e-9", "0.001" or "1/1000".
Rational parse_tolerance(const std::string& text) {
    const auto e = text.find_first_of("eE");
    Rational q;
    try {
        q = parse_rational(text.substr(0, e));
    } catch (const Error&) {
        throw UsageError("malformed tolerance: " + text);
    }
    if (e != std::string::npos) {
        int exponent = 0;
        try {
            std::size_t used = 0;
            exponent = std::stoi(text.substr(e + 1), &used);
            if (used != text.size() - e - 1) throw std::invalid_argument(text);
        } catch (const std::exception&) {
            throw UsageError("malformed tolerance: " + text);
        }
        if (exponent < -1000 || exponent > 1000) throw UsageError("tolerance exponent out of range: " + text);
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
        q = exponent >= 0 ? Rational(q * p) : Rational(q / p);
    }
    if (q <= 0) throw UsageError("tolerance must be positive");
    return q;
}

std::string fmt_double(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

Json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Json point_json(const IntVector& p) {
    Json a = Json::array();
    for (const auto& z : p) a.push_back(integer_json(z));
    return a;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

std::string row_text(const IntVector& p, const std::string& sep) {
    std::vector<std::string> parts;
    for (const auto& z : p) parts.push_back(z.get_str());
    return join(parts, sep);
}

IntVector parse_vector(const std::string& text) {
    std::istringstream in(text);
    IntVector v;
    std::string tok;
    while (in >> tok) {
        Integer z;
        if (z.set_str(tok, 10) != 0) throw Error(ErrorKind::InvalidInput, "malformed integer: " + tok);
        v.push_back(z);
    }
    if (v.empty()) throw Error(ErrorKind::InvalidInput, "empty vector");
    return v;
}

/// Rows of integers, one vector per line; '#' starts a comment. Repeats allowed.
std::vector<IntVector> read_vectors_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    std::vector<IntVector> rows;
    std::string line;
    while (std::getline(in, line)) {
        line = line.substr(0, line.find('#'));
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        rows.push_back(parse_vector(line));
        if (rows.back().size() != rows.front().size()) throw Error(ErrorKind::InvalidInput, "ragged vector file " + path);
    }
    return rows;
}

std::vector<std::int64_t> parse_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("malformed integer list: " + text);
        }
    }
    return out;
}

LatticeOperator load_operator(const Config& c) {
    if (!c.companion_poly.empty()) return LatticeOperator::companion(IntPolynomial::parse(c.companion_poly));
    if (!c.matrix_path.empty()) return read_matrix_file(c.matrix_path);
    throw UsageError("an operator is required: pass --matrix FILE or --companion POLY");
}

PointSet load_set(const Config& c) {
    if (c.set_path.empty()) throw UsageError("--set FILE is required");
    return read_point_set_file(c.set_path);
}

void add_operator_options(CLI::App* sub, Config& c) {
    auto* m = sub->add_option("--matrix", c.matrix_path, "square integer matrix file");
    auto* p = sub->add_option("--companion", c.companion_poly, "monic polynomial; uses its companion matrix");
    m->excludes(p);
}

std::string interval_plain(const std::string& name, const RealInterval& r, int digits) {
    return name + ": " + r.render_bounds(digits) + "\nmidpoint: " + r.render(digits) + "\n";
}

std::string interval_report(const std::string& name, const RealInterval& r, const Config& c) {
    switch (c.format()) {
        case Format::Csv:
            return "lo,hi\n" + r.lo_string(c.digits) + "," + r.hi_string(c.digits) + "\n";
        case Format::Json: {
            Json j;
            j["quantity"] = name;
            j["lo"] = r.lo_string(c.digits);
            j["hi"] = r.hi_string(c.digits);
            j["midpoint"] = decimal_string(r.midpoint(), c.digits);
            return j.dump() + "\n";
        }
        case Format::Plain: break;
    }
    return interval_plain(name, r, c.digits);
}

std::string set_report(const PointSet& a, const Config& c) {
    std::ostringstream os;
    switch (c.format()) {
        case Format::Plain:
            write_point_set(os, a);
            break;
        case Format::Csv:
            for (std::size_t i = 0; i < a.size(); ++i) os << row_text(a.point(i), ",") << '\n';
            break;
        case Format::Json: {
            Json j;
            j["dimension"] = a.dimension();
            j["size"] = a.size();
            Json pts = Json::array();
            for (std::size_t i = 0; i < a.size(); ++i) pts.push_back(point_json(a.point(i)));
            j["points"] = std::move(pts);
            os << j.dump() << '\n';
            break;
        }
    }
    return os.str();
}

/// Key/value rendering shared by the summary-style reports.
std::string kv_report(const std::vector<std::pair<std::string, std::string>>& kv, const Json& j, const Config& c) {
    std::string s;
    switch (c.format()) {
        case Format::Json:
            return j.dump() + "\n";
        case Format::Csv: {
            std::vector<std::string> keys, vals;
            for (const auto& [k, v] : kv) keys.push_back(k), vals.push_back(v);
            return join(keys, ",") + "\n" + join(vals, ",") + "\n";
        }
        case Format::Plain:
            for (const auto& [k, v] : kv) s += k + ": " + v + "\n";
            return s;
    }
    return s;
}

std::string cmd_height(const Config& c, const Rational& tol) {
    const auto res = minimize_height(IntPolynomial::parse(c.poly), tol);
    Json j;
    j["divisor"] = res.divisor.to_string();
    j["lo"] = res.height.lo_string(c.digits);
    j["hi"] = res.height.hi_string(c.digits);
    j["midpoint"] = decimal_string(res.height.midpoint(), c.digits);
    j["tie"] = res.tie;
    if (c.format() == Format::Plain)
        return interval_plain("height", res.height, c.digits) + "divisor: " + res.divisor.to_string() +
               "\ntie: " + (res.tie ? "true" : "false") + "\n";
    return kv_report({{"divisor", res.divisor.to_string()},
                      {"lo", res.height.lo_string(c.digits)},
                      {"hi", res.height.hi_string(c.digits)},
                      {"tie", res.tie ? "true" : "false"}},
                     j, c);
}

std::string cmd_invmin(const Config& c, const Rational& tol) {
    const auto t = load_operator(c);
    const auto res = minimizing_invariant_subspace(t, tol);
    auto qrow = [](const RationalVector& v) {
        std::vector<std::string> parts;
        for (const auto& q : v) parts.push_back(q.get_str());
        return parts;
    };
    Json j;
    j["divisor"] = res.divisor.to_string();
    j["lo"] = res.height.lo_string(c.digits);
    j["hi"] = res.height.hi_string(c.digits);
    j["basis"] = Json::array();
    for (const auto& v : res.basis) j["basis"].push_back(qrow(v));
    j["restriction"] = Json::array();
    for (std::size_t i = 0; i < res.restriction.rows(); ++i) j["restriction"].push_back(qrow(res.restriction.row(i)));
    if (c.format() == Format::Json) return j.dump() + "\n";
    std::string s;
    if (c.format() == Format::Csv) {
        s = "divisor,lo,hi\n" + res.divisor.to_string() + "," + res.height.lo_string(c.digits) + "," +
            res.height.hi_string(c.digits) + "\n";
        return s;
    }
    s = interval_plain("height", res.height, c.digits) + "divisor: " + res.divisor.to_string() + "\nbasis:\n";
    for (const auto& v : res.basis) s += "  " + join(qrow(v), " ") + "\n";
    s += "restriction:\n";
    for (std::size_t i = 0; i < res.restriction.rows(); ++i) s += "  " + join(qrow(res.restriction.row(i)), " ") + "\n";
    return s;
}

std::string cmd_ratio(const Config& c, const Rational& tol) {
    const auto r = ratio_report(load_set(c), load_operator(c), tol, c.sumset_options());
    switch (c.format()) {
        case Format::Csv: return r.csv_header() + "\n" + r.csv_row(c.digits) + "\n";
        case Format::Json: return r.json(c.digits) + "\n";
        case Format::Plain: break;
    }
    return "set_size: " + std::to_string(r.set_size) + "\nsumset_size: " + std::to_string(r.sumset_size) +
           "\nratio: " + decimal_string(r.ratio, c.digits) + " (" + r.ratio.get_str() + ")\nh_circ: " +
           r.reference.render_bounds(c.digits) + "\ngap: " + decimal_string(r.gap, c.digits) + "\n";
}

std::string cmd_brutemin(const Config& c) {
    if (c.n == 0) throw UsageError("--n must be positive");
    PointSet box;
    if (c.interval > 0) {
        if (!c.set_path.empty()) throw UsageError("pass either --interval or --set, not both");
        box = PointSet::interval(static_cast<std::int64_t>(c.interval));
    } else {
        box = load_set(c);
    }
    const auto r = brute_force_min(c.n, box, load_operator(c), c.budget);
    std::vector<std::string> witness;
    for (std::size_t i = 0; i < r.witness.size(); ++i) witness.push_back(row_text(r.witness.point(i), " "));
    Json j;
    j["min_size"] = r.min_size;
    j["subsets_checked"] = r.subsets_checked;
    Json w = Json::array();
    for (std::size_t i = 0; i < r.witness.size(); ++i) w.push_back(point_json(r.witness.point(i)));
    j["witness"] = std::move(w);
    return kv_report({{"min_size", std::to_string(r.min_size)},
                      {"subsets_checked", std::to_string(r.subsets_checked)},
                      {"witness", join(witness, ";")}},
                     j, c);
}

Gap load_gap(const Config& c) {
    if (c.gap_path.empty()) throw UsageError("--gap FILE is required");
    return read_gap_file(c.gap_path);
}

std::string cmd_gap_proper(const Config& c) {
    const auto cert = is_k_proper(load_gap(c), c.k, c.budget);
    auto tuple = [](const std::vector<std::int64_t>& v) {
        std::vector<std::string> parts;
        for (auto x : v) parts.push_back(std::to_string(x));
        return join(parts, " ");
    };
    Json j;
    j["k"] = cert.k;
    j["proper"] = cert.proper;
    j["tuple_count"] = cert.tuple_count.get_str();
    if (cert.collision) j["collision"] = {cert.collision->first, cert.collision->second};
    else j["collision"] = nullptr;
    return kv_report({{"k", std::to_string(cert.k)},
                      {"proper", cert.proper ? "true" : "false"},
                      {"tuple_count", cert.tuple_count.get_str()},
                      {"collision", cert.collision ? tuple(cert.collision->first) + ";" + tuple(cert.collision->second) : ""}},
                     j, c);
}

std::string cmd_combine(const Config& c) {
    if (c.vector_text.empty() || c.vectors_path.empty()) throw UsageError("--vector and --vectors are required");
    std::optional<Integer> bound;
    if (!c.entry_bound.empty()) {
        Integer b;
        if (b.set_str(c.entry_bound, 10) != 0) throw UsageError("malformed --entry-bound");
        bound = b;
    }
    const auto r = bounded_combination(parse_vector(c.vector_text), read_vectors_file(c.vectors_path), bound);
    std::vector<std::string> coeffs, subset;
    for (const auto& z : r.coeffs) coeffs.push_back(z.get_str());
    for (auto i : r.subset) subset.push_back(std::to_string(i));
    Json j;
    j["s"] = integer_json(r.s);
    j["coeffs"] = point_json(r.coeffs);
    j["subset"] = r.subset;
    j["C"] = integer_json(r.C);
    j["D"] = integer_json(r.D);
    return kv_report({{"s", r.s.get_str()},
                      {"coeffs", join(coeffs, " ")},
                      {"subset", join(subset, " ")},
                      {"C", r.C.get_str()},
                      {"D", r.D.get_str()}},
                     j, c);
}

std::string cmd_decompose(const Config& c) {
    if (c.side <= 0) throw UsageError("--n (side length N) must be positive");
    if (c.eps_text.empty() || c.delta_text.empty()) throw UsageError("--eps and --delta are required");
    const auto r = structural_decompose(load_set(c), c.side, parse_rational(c.eps_text), parse_rational(c.delta_text));
    const std::string side = std::to_string(r.cells.empty() ? 0 : r.cells.front().side);
    if (c.format() == Format::Json) return r.json() + "\n";
    if (c.format() == Format::Csv)
        return "level,B,cell_side,cells,retained_points\n" + std::to_string(r.level) + "," + std::to_string(r.B) + "," +
               side + "," + std::to_string(r.cells.size()) + "," + std::to_string(r.a_prime.size()) + "\n";
    std::string s = "level: " + std::to_string(r.level) + "\nB: " + std::to_string(r.B) + "\ncell_side: " + side +
                    "\nretained_points: " + std::to_string(r.a_prime.size()) + "\ncells:\n";
    for (const auto& cell : r.cells) {
        std::vector<std::string> parts;
        for (auto x : cell.corner) parts.push_back(std::to_string(x));
        s += "  " + join(parts, " ") + "\n";
    }
    return s;
}

std::string cmd_extremal_body(const Config& c) {
    const auto body = build_extremal_body(load_operator(c));
    if (c.format() == Format::Json) return body.json() + "\n";
    std::string s;
    if (c.format() == Format::Csv) {
        s = "kind,offset,radius,eigenvalue_re,eigenvalue_im\n";
        for (const auto& comp : body.components())
            s += std::string(comp.kind == SpectralProductBody::Kind::Interval ? "interval" : "disk") + "," +
                 std::to_string(comp.offset) + "," + fmt_double(comp.radius, c.digits) + "," +
                 decimal_string(comp.eigenvalue.re, c.digits) + "," + decimal_string(comp.eigenvalue.im, c.digits) + "\n";
        return s;
    }
    const std::size_t d = body.dimension();
    s = "dimension: " + std::to_string(d) + "\nbasis:\n";
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<std::string> parts;
        for (std::size_t j = 0; j < d; ++j) parts.push_back(fmt_double(body.basis()[i * d + j], c.digits));
        s += "  " + join(parts, " ") + "\n";
    }
    s += "components:\n";
    for (const auto& comp : body.components())
        s += std::string("  ") + (comp.kind == SpectralProductBody::Kind::Interval ? "interval" : "disk") + " offset " +
             std::to_string(comp.offset) + " eigenvalue " + decimal_string(comp.eigenvalue.re, c.digits) +
             (comp.kind == SpectralProductBody::Kind::Disk ? " + " + decimal_string(comp.eigenvalue.im, c.digits) + "i" : "") +
             "\n";
    s += "measure: " + fmt_double(body.measure(), c.digits) + "\nmeasure_ratio: " +
         exact_measure_ratio(body, body.op()).render_bounds(c.digits) + "\nresidual: " + fmt_double(body.residual(), 3) +
         "\ncondition_number: " + fmt_double(body.condition_number(), 6) + "\n";
    return s;
}

std::string cmd_extremal_converge(const Config& c, const Rational& tol) {
    const auto ms = parse_list(c.ms_text);
    for (auto m : ms)
        if (m < 1) throw UsageError("every M must be at least 1");
    const auto rows = convergence_experiment(load_operator(c), ms, c.sumset_options(), tol);
    if (c.format() == Format::Json) {
        Json a = Json::array();
        for (const auto& r : rows) {
            Json j;
            j["M"] = r.m;
            j["set_size"] = r.set_size;
            j["sumset_size"] = r.sumset_size;
            j["ratio"] = decimal_string(r.ratio, c.digits);
            j["h_circ_lo"] = r.h_circ.lo_string(c.digits);
            j["h_circ_hi"] = r.h_circ.hi_string(c.digits);
            a.push_back(std::move(j));
        }
        return a.dump() + "\n";
    }
    std::string s = std::string(kConvergenceHeader) + "\n";
    for (const auto& r : rows) s += r.csv(c.digits) + "\n";
    return s;
}

std::string cmd_verify(const Config& c, const Rational& tol) {
    if (!(c.cell > 0)) throw UsageError("--cell must be positive");
    const auto t = load_operator(c);
    const auto body = build_extremal_body(t);
    const auto f = rasterize(body, c.cell, Rasterization::Center);
    const auto h = rasterize(body.sum_body(), c.cell, Rasterization::Outer);
    const auto rep = domination_check(f, h, t, tol);
    Json j;
    j["hypothesis_ok"] = rep.hypothesis_ok;
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    j["integral_f"] = f.integral();
    j["pairs_checked"] = rep.pairs_checked;
    j["violations"] = rep.violations;
    j["note"] = rep.note;
    return kv_report({{"hypothesis_ok", rep.hypothesis_ok ? "true" : "false"},
                      {"lhs", fmt_double(rep.lhs, c.digits)},
                      {"rhs", fmt_double(rep.rhs, c.digits)},
                      {"integral_f", fmt_double(f.integral(), c.digits)},
                      {"pairs_checked", std::to_string(rep.pairs_checked)},
                      {"violations", std::to_string(rep.violations)},
                      {"note", rep.note}},
                     j, c);
}

/// n distinct points drawn uniformly from the box [lo, hi]^dim by a seeded
/// 64-bit Mersenne Twister; the reduction is by modulo so output is portable.
std::string cmd_gen_set(const Config& c) {
    if (c.hi < c.lo) throw UsageError("--hi must be at least --lo");
    const auto width = static_cast<unsigned __int128>(c.hi - c.lo) + 1;
    unsigned __int128 volume = 1;
    for (std::size_t i = 0; i < c.dim && volume <= c.n; ++i) volume *= width;
    if (volume < c.n) throw Error(ErrorKind::InvalidInput, "box holds fewer points than requested");
    std::mt19937_64 rng(c.seed);
    std::set<std::vector<std::int64_t>> pts;
    while (pts.size() < c.n) {
        std::vector<std::int64_t> p(c.dim);
        for (auto& x : p) x = c.lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(width));
        pts.insert(std::move(p));
    }
    std::vector<std::int64_t> flat;
    for (const auto& p : pts) flat.insert(flat.end(), p.begin(), p.end());
    return set_report(PointSet::from_flat(c.dim, std::move(flat), true), c);
}

std::string error_line(std::string_view code, const std::string& message) {
    Json j;
    j["error"] = code;
    j["message"] = message;
    return j.dump() + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Exact sumset growth, heights of algebraic numbers and extremal sets", "sumgrowth"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--tol", c.tol_text, "width target for height intervals")->capture_default_str();
    app.add_option("--format", c.format_text, "report format")
        ->check(CLI::IsMember({"csv", "json", "plain"}))
        ->capture_default_str();
    app.add_option("--out", c.out_path, "write the report to this file instead of stdout");
    app.add_option("--threads", c.threads, "worker threads for sumset kernels")->check(CLI::PositiveNumber);
    app.add_option("--digits", c.digits, "significant digits in decimal output")->check(CLI::Range(1, 60));

    auto* height = app.add_subcommand("height", "H(f) of an integer polynomial, minimized over irreducible factors");
    height->add_option("poly", c.poly, "polynomial such as x^2-2")->required();

    auto* hcirc = app.add_subcommand("hcirc", "H°(T): height of the characteristic polynomial");
    add_operator_options(hcirc, c);
    auto* hop = app.add_subcommand("hop", "H(T): product of (1 + |λ|) over all eigenvalues");
    add_operator_options(hop, c);
    auto* invmin = app.add_subcommand("invmin", "invariant subspace realizing H°(T)");
    add_operator_options(invmin, c);

    auto* sumset = app.add_subcommand("sumset", "the set A + T A");
    add_operator_options(sumset, c);
    sumset->add_option("--set", c.set_path, "point-set file")->required();
    auto* ratio = app.add_subcommand("ratio", "|A + T A| / |A| against H°(T)");
    add_operator_options(ratio, c);
    ratio->add_option("--set", c.set_path, "point-set file")->required();
    auto* brute = app.add_subcommand("brutemin", "exhaustive minimum of |A + T A| over n-subsets of a box");
    add_operator_options(brute, c);
    brute->add_option("--n", c.n, "subset size")->required();
    brute->add_option("--interval", c.interval, "use the box {0, ..., L-1}");
    brute->add_option("--set", c.set_path, "candidate point-set file");
    brute->add_option("--budget", c.budget, "maximum number of subsets")->capture_default_str();

    auto* gap = app.add_subcommand("gap", "generalized arithmetic progressions");
    gap->require_subcommand(1);
    gap->fallthrough();
    auto* gap_expand = gap->add_subcommand("expand", "the k-fold progression as a point set");
    auto* gap_proper = gap->add_subcommand("proper", "k-properness with a collision witness");
    for (auto* s : {gap_expand, gap_proper}) {
        s->add_option("--gap", c.gap_path, "GAP description file")->required();
        s->add_option("--k", c.k, "dilation factor")->capture_default_str();
        s->add_option("--budget", c.budget, "maximum number of coefficient tuples")->capture_default_str();
    }

    auto* combine = app.add_subcommand("combine", "bounded integer combination s v = sum s_j v_j");
    combine->add_option("--vector", c.vector_text, "target vector, space separated")->required();
    combine->add_option("--vectors", c.vectors_path, "file with one spanning vector per line")->required();
    combine->add_option("--entry-bound", c.entry_bound, "asserted bound C on the entries of the vectors");

    auto* decompose = app.add_subcommand("decompose", "coarse-to-fine dense decomposition of A in [0, N)^d");
    decompose->add_option("--set", c.set_path, "point-set file")->required();
    decompose->add_option("--n", c.side, "side length N")->required();
    decompose->add_option("--eps", c.eps_text, "density ε, e.g. 0.1")->required();
    decompose->add_option("--delta", c.delta_text, "δ = 1/m, e.g. 1/4")->required();

    auto* extremal = app.add_subcommand("extremal", "spectral product bodies and their lattice realizations");
    extremal->require_subcommand(1);
    extremal->fallthrough();
    auto* ext_body = extremal->add_subcommand("body", "describe the spectral product body of T");
    auto* ext_realize = extremal->add_subcommand("realize", "integer points of M times the body");
    auto* ext_converge = extremal->add_subcommand("converge", "ratio table over a list of M");
    for (auto* s : {ext_body, ext_realize, ext_converge}) add_operator_options(s, c);
    ext_realize->add_option("--m", c.m, "dilation M")->required();
    ext_converge->add_option("--ms", c.ms_text, "comma separated list of M")->required();

    auto* verify = app.add_subcommand("verify-continuous", "domination check on rasterized body indicators");
    add_operator_options(verify, c);
    verify->add_option("--cell", c.cell, "cell size")->capture_default_str();

    auto* gen = app.add_subcommand("gen-set", "seeded random point set in a box");
    gen->add_option("--seed", c.seed, "generator seed")->capture_default_str();
    gen->add_option("--n", c.n, "number of points")->required();
    gen->add_option("--dim", c.dim, "dimension")->check(CLI::PositiveNumber)->capture_default_str();
    gen->add_option("--lo", c.lo, "lower coordinate bound")->capture_default_str();
    gen->add_option("--hi", c.hi, "upper coordinate bound")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << error_line("usage", e.what());
        return kExitUsage;
    }

    std::string report;
    try {
        const Rational tol = parse_tolerance(c.tol_text);
        if (*height) report = cmd_height(c, tol);
        else if (*hcirc) report = interval_report("h_circ", h_circ_of_operator(load_operator(c), tol), c);
        else if (*hop) report = interval_report("h_op", h_of_operator(load_operator(c), tol), c);
        else if (*invmin) report = cmd_invmin(c, tol);
        else if (*sumset) report = set_report(t_sumset(load_set(c), load_operator(c), c.sumset_options()), c);
        else if (*ratio) report = cmd_ratio(c, tol);
        else if (*brute) report = cmd_brutemin(c);
        else if (*gap_expand) report = set_report(expand(load_gap(c), c.k, c.budget), c);
        else if (*gap_proper) report = cmd_gap_proper(c);
        else if (*combine) report = cmd_combine(c);
        else if (*decompose) report = cmd_decompose(c);
        else if (*ext_body) report = cmd_extremal_body(c);
        else if (*ext_realize) report = set_report(lattice_realization(build_extremal_body(load_operator(c)), c.m), c);
        else if (*ext_converge) report = cmd_extremal_converge(c, tol);
        else if (*verify) report = cmd_verify(c, tol);
        else if (*gen) report = cmd_gen_set(c);
    } catch (const UsageError& e) {
        err << error_line("usage", e.what());
        return kExitUsage;
    } catch (const Error& e) {
        err << error_line(error_code(e.kind()), e.what());
        return kExitDomainError;
    } catch (const std::exception& e) {
        err << error_line("internal", e.what());
        return kExitDomainError;
    }

    if (c.out_path.empty()) {
        out << report;
        return kExitOk;
    }
    std::ofstream file(c.out_path, std::ios::binary);
    if (!(file << report)) {
        err << error_line("io", "cannot write " + c.out_path);
        return kExitDomainError;
    }
    return kExitOk;
}

}  // namespace sumgrowth::cli
