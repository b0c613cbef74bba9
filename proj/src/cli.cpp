#include "kummer/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <optional>
#include <ostream>
#include <sstream>

#include "kummer/codes.hpp"
#include "kummer/gaps.hpp"
#include "kummer/puregaps.hpp"
#include "kummer/verify.hpp"

namespace kummer::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { csv, json, text };

struct Common {
    std::string format = "csv";
    bool header = false;
    unsigned threads = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    if (s == "text") return Format::text;
    throw UsageError("unknown format '" + s + "' (expected csv, json or text)");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<Int> parse_ints(const std::string& s, const std::string& flag) {
    std::vector<Int> out;
    for (const std::string& tok : split(s, ',')) {
        Int v = 0;
        const char* end = tok.data() + tok.size();
        auto [ptr, ec] = std::from_chars(tok.data(), end, v);
        if (tok.empty() || ec != std::errc() || ptr != end)
            throw UsageError(flag + ": '" + tok + "' is not an integer");
        out.push_back(v);
    }
    return out;
}

PlaceSelection parse_places(const std::string& s) {
    std::vector<PlaceRef> places;
    for (const std::string& tok : split(s, ',')) places.push_back(PlaceRef::parse(tok));
    return PlaceSelection(std::move(places));
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << "\n";
}

// Space-aligned table, numbers right-aligned, no trailing blanks.
void write_text_table(std::ostream& out, const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size(), 0);
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    std::vector<bool> numeric(header.size(), true);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size() && i < numeric.size(); ++i)
            if (row[i].find_first_not_of("-0123456789") != std::string::npos) numeric[i] = false;
    auto line = [&](const std::vector<std::string>& row) {
        std::string s;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) s += "  ";
            const std::string pad(width[i] - row[i].size(), ' ');
            s += numeric[i] ? pad + row[i] : row[i] + pad;
        }
        s.erase(s.find_last_not_of(' ') + 1);
        out << s << "\n";
    };
    line(header);
    for (const auto& row : rows) line(row);
}

std::string join(std::span<const Int> v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

Json curve_json(const KummerCurve& c) {
    Json lambdas = Json::array();
    for (Int l : c.lambdas()) lambdas.push_back(l);
    return Json{{"m", c.m()}, {"lambdas", lambdas}};
}

Json places_json(const PlaceSelection& sel) {
    Json out = Json::array();
    for (PlaceRef p : sel) out.push_back(p.token());
    return out;
}

std::string curve_text(const KummerCurve& c) {
    return "m=" + std::to_string(c.m()) + " lambdas=" + join(c.lambdas(), ",") +
           " genus=" + std::to_string(c.genus());
}

// ---- gaps -----------------------------------------------------------------

struct CurveArgs {
    Int m = 0;
    std::string lambdas;

    KummerCurve curve() const { return KummerCurve(m, parse_ints(lambdas, "--lambdas")); }
};

struct GapsArgs {
    CurveArgs curve;
    std::string place;
};

void cmd_gaps(const GapsArgs& a, const Common& common, std::ostream& out) {
    const Format fmt = parse_format(common.format);
    const KummerCurve c = a.curve.curve();
    const PlaceRef p = PlaceRef::parse(a.place);
    const GapSet gs = gap_set(c, p);
    const bool count_ok = static_cast<Int>(gs.size()) == c.genus();

    switch (fmt) {
    case Format::csv: {
        if (common.header) {
            std::vector<std::string> h;
            for (std::size_t i = 1; i <= gs.size(); ++i) h.push_back("gap_" + std::to_string(i));
            write_csv_row(out, h);
        }
        out << join(gs.members, ",") << "\n";
        break;
    }
    case Format::json: {
        Json j;
        j["curve"] = curve_json(c);
        j["place"] = p.token();
        j["genus"] = c.genus();
        j["count"] = gs.size();
        j["count_matches_genus"] = count_ok;
        j["gaps"] = gs.members;
        out << j.dump() << "\n";
        break;
    }
    case Format::text:
        out << "curve " << curve_text(c) << "\n";
        out << "place " << p.token() << ": " << gs.size() << " gaps, "
            << (count_ok ? "count equals genus" : "count differs from genus") << "\n";
        out << join(gs.members, " ") << "\n";
        break;
    }
    if (!count_ok)
        throw MismatchError("gap count " + std::to_string(gs.size()) + " differs from genus " +
                            std::to_string(c.genus()));
}

// ---- puregaps -------------------------------------------------------------

struct PureArgs {
    CurveArgs curve;
    std::string places;
    bool bottom_only = false;
    std::string verify = "none";
};

void oracle_recheck(const KummerCurve& c, const PlaceSelection& sel, const std::vector<GapTuple>& tuples,
                    bool bottom_only) {
    const FloorSumKernel k(c, sel);
    for (const GapTuple& t : tuples) {
        k.check_tuple(t);
        if (!is_pure_gap_oracle(k, t)) throw MismatchError("oracle rejects tuple (" + join(t, ",") + ")");
    }
    // Completeness: nothing outside the list passes the oracle in the scan box.
    const Int hi = bottom_only ? c.m() - 1 : 2 * c.genus() - 1;
    if (hi < 1) return;
    GapTuple t(sel.size(), 1);
    std::size_t found = 0;
    while (true) {
        if (is_pure_gap_oracle(k, t)) {
            if (!std::binary_search(tuples.begin(), tuples.end(), t))
                throw MismatchError("oracle accepts unlisted tuple (" + join(t, ",") + ")");
            ++found;
        }
        std::size_t i = t.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (t[i] < hi) {
                ++t[i];
                done = false;
                break;
            }
            t[i] = 1;
        }
        if (done) break;
    }
    if (found != tuples.size())
        throw MismatchError("listed tuples outside the scan box [1, " + std::to_string(hi) + "]");
}

void cmd_puregaps(const PureArgs& a, const Common& common, std::ostream& out) {
    const Format fmt = parse_format(common.format);
    if (a.verify != "none" && a.verify != "oracle")
        throw UsageError("--verify must be none or oracle");
    const KummerCurve c = a.curve.curve();
    const PlaceSelection sel = parse_places(a.places);
    sel.validate_for(c);

    EnumerationOptions opts = default_enumeration_options();
    if (common.threads > 0) opts.threads = common.threads;

    std::vector<GapTuple> tuples;
    std::vector<Int> caps;
    if (a.bottom_only) {
        BottomSet b = bottom_pure_gaps(c, sel, opts);
        tuples = std::move(b.tuples);
        caps = std::move(b.caps);
    } else {
        tuples = full_pure_gap_set(c, sel, opts);
    }
    if (a.verify == "oracle") oracle_recheck(c, sel, tuples, a.bottom_only);

    switch (fmt) {
    case Format::csv: {
        if (common.header) {
            std::vector<std::string> h;
            for (PlaceRef p : sel) h.push_back(p.token());
            if (a.bottom_only) h.push_back("cap");
            write_csv_row(out, h);
        }
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            out << join(tuples[i], ",");
            if (a.bottom_only) out << "," << caps[i];
            out << "\n";
        }
        break;
    }
    case Format::json: {
        Json j;
        j["curve"] = curve_json(c);
        j["places"] = places_json(sel);
        j["tuples"] = tuples;
        if (a.bottom_only) j["caps"] = caps;
        out << j.dump() << "\n";
        break;
    }
    case Format::text: {
        std::vector<std::string> h;
        for (PlaceRef p : sel) h.push_back("Q_" + p.token());
        if (a.bottom_only) h.push_back("cap");
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            std::vector<std::string> row;
            for (Int v : tuples[i]) row.push_back(std::to_string(v));
            if (a.bottom_only) row.push_back(std::to_string(caps[i]));
            rows.push_back(std::move(row));
        }
        out << "curve " << curve_text(c) << ", places " << sel.to_string() << ", " << tuples.size()
            << (a.bottom_only ? " bottom pure gaps" : " pure gaps") << "\n";
        write_text_table(out, h, rows);
        break;
    }
    }
}

// ---- codes ----------------------------------------------------------------

struct CodesArgs {
    int table = 0;
    std::string family;
    Int q = 0, t = 0, m = 0;
    int construction = 0;
    std::optional<Int> s, k, c, n;
    std::string lambdas;
    Int n_rational = 0;
    std::string places, lower, upper;
};

struct CodeRecord {
    std::optional<Int> q, t;
    Int m = 0;
    std::optional<Int> s, k_or_c;
    int construction = 0;
    CodeDesign design;
    std::optional<int> improvement;
    int table = 0;
};

std::string opt_str(const std::optional<Int>& v) { return v ? std::to_string(*v) : std::string(); }

template <typename T>
Json opt_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

void write_codes(std::ostream& out, const Common& common, const std::vector<CodeRecord>& recs, bool with_improvement,
                 const std::vector<std::string>& notes) {
    std::vector<std::string> header{"q", "t", "m", "s", "k_or_c", "n", "k_dim", "d_lower"};
    if (with_improvement) header.push_back("reported_improvement");
    std::vector<std::vector<std::string>> rows;
    for (const CodeRecord& r : recs) {
        std::vector<std::string> row{opt_str(r.q),  opt_str(r.t), std::to_string(r.m), opt_str(r.s), opt_str(r.k_or_c),
                                     std::to_string(r.design.n), std::to_string(r.design.k_dim),
                                     std::to_string(r.design.d_lower)};
        if (with_improvement) row.push_back(r.improvement ? std::to_string(*r.improvement) : "");
        rows.push_back(std::move(row));
    }

    switch (parse_format(common.format)) {
    case Format::csv:
        if (common.header) write_csv_row(out, header);
        for (const auto& row : rows) write_csv_row(out, row);
        break;
    case Format::text: {
        for (auto& h : header) h = h == "reported_improvement" ? "improvement" : h;
        std::vector<std::vector<std::string>> text_rows;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto row = rows[i];
            for (auto& f : row)
                if (f.empty()) f = "-";
            text_rows.push_back(std::move(row));
        }
        write_text_table(out, header, text_rows);
        break;
    }
    case Format::json: {
        Json arr = Json::array();
        for (const CodeRecord& r : recs) {
            const CodeDesign& d = r.design;
            Json j;
            if (r.table) j["table"] = r.table;
            j["family"] = family_name(d.family.family);
            j["label"] = d.family.label;
            j["q"] = opt_json(r.q);
            j["t"] = opt_json(r.t);
            j["m"] = r.m;
            j["s"] = opt_json(r.s);
            j["k_or_c"] = opt_json(r.k_or_c);
            if (r.construction) j["construction"] = r.construction;
            j["curve"] = curve_json(d.family.curve);
            j["genus"] = d.family.genus;
            j["n_rational"] = d.family.n_rational;
            j["places"] = places_json(d.selection);
            j["g_coeffs"] = d.g_coeffs;
            j["deg_g"] = d.deg_g;
            j["n"] = d.n;
            j["k_dim"] = d.k_dim;
            j["d_lower"] = d.d_lower;
            if (with_improvement) j["reported_improvement"] = opt_json(r.improvement);
            arr.push_back(std::move(j));
        }
        Json root;
        root["codes"] = std::move(arr);
        root["notes"] = notes;
        out << root.dump() << "\n";
        break;
    }
    }
}

void cmd_codes(const CodesArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
    parse_format(common.format);
    std::vector<CodeRecord> recs;
    std::vector<std::string> notes;

    if (a.table != 0) {
        if (!a.family.empty()) throw UsageError("--table and --family are mutually exclusive");
        for (TableRow& row : reproduce_table(a.table)) {
            const TableSpec& sp = row.spec;
            if (!row.design) {
                err << "warning: table " << sp.table << " row q=" << sp.q << " m=" << sp.m << " s=" << sp.s
                    << " k=" << sp.k_or_c << " skipped: " << row.error << "\n";
                continue;
            }
            recs.push_back({sp.q, sp.t, sp.m, sp.s, sp.k_or_c, sp.construction, std::move(*row.design),
                            sp.reported_improvement, sp.table});
        }
        write_codes(out, common, recs, true, notes);
        return;
    }

    if (a.family.empty()) throw UsageError("codes needs --table N or --family NAME");
    const FamilyId id = parse_family(a.family);
    FamilyParams params{a.q, a.t, a.m, {}, a.n_rational};
    if (id == FamilyId::custom) params.lambdas = parse_ints(a.lambdas, "--lambdas");
    const CurveFamilyInstance fam = catalog(id, params);
    notes = fam.notes;

    const bool box_mode = !a.lower.empty() || !a.upper.empty() || !a.places.empty();
    CodeRecord rec{fam.q, fam.t, fam.curve.m(), a.s, std::nullopt, a.construction,
                   CodeDesign{fam, PlaceSelection{PlaceRef::infinity()}, {}, 0, 0, 0, 0}, std::nullopt, 0};
    if (box_mode) {
        if (a.construction != 0) throw UsageError("--construction cannot be combined with --places/--lower/--upper");
        if (a.places.empty() || a.lower.empty() || a.upper.empty())
            throw UsageError("a box needs --places, --lower and --upper");
        if (!a.n) throw UsageError("a box needs --n");
        PureGapBox box{parse_places(a.places), parse_ints(a.lower, "--lower"), parse_ints(a.upper, "--upper")};
        rec.s = static_cast<Int>(box.width());
        rec.design = code_from_box(fam, box, *a.n);
    } else {
        if (!a.s) throw UsageError("--s is required");
        switch (a.construction) {
        case 1:
        case 2:
            if (!a.k) throw UsageError("construction " + std::to_string(a.construction) + " needs --k");
            if (a.c) throw UsageError("--c belongs to construction 3");
            rec.k_or_c = a.k;
            rec.design = a.construction == 1 ? construction1(fam, *a.s, *a.k, a.n) : construction2(fam, *a.s, *a.k, a.n);
            break;
        case 3:
            if (!a.c) throw UsageError("construction 3 needs --c");
            if (a.k) throw UsageError("--k belongs to constructions 1 and 2");
            rec.k_or_c = a.c;
            rec.design = construction3(fam, *a.s, *a.c, a.n);
            break;
        default:
            throw UsageError("--construction must be 1, 2 or 3 (or give a box)");
        }
    }
    for (const std::string& note : notes) err << "note: " << note << "\n";
    recs.push_back(std::move(rec));
    write_codes(out, common, recs, false, notes);
}

// ---- verify ---------------------------------------------------------------

void cmd_verify(const VerifyConfig& cfg_in, const Common& common, std::ostream& out, std::ostream& err) {
    const Format fmt = parse_format(common.format);
    VerifyConfig cfg = cfg_in;
    if (common.threads > 0) cfg.threads = common.threads;
    else cfg.threads = default_enumeration_options().threads;
    const VerifyReport rep = run_verification(cfg);

    switch (fmt) {
    case Format::csv:
        if (common.header) write_csv_row(out, {"check", "cases", "mismatches"});
        for (const CheckCount& c : rep.counts)
            write_csv_row(out, {c.name, std::to_string(c.checks), std::to_string(c.mismatches)});
        break;
    case Format::json: {
        Json j;
        j["curves"] = cfg.curves;
        j["seed"] = cfg.seed;
        Json checks = Json::array();
        for (const CheckCount& c : rep.counts)
            checks.push_back(Json{{"check", c.name}, {"cases", c.checks}, {"mismatches", c.mismatches}});
        j["checks"] = checks;
        j["ok"] = rep.ok();
        j["first_counterexample"] = opt_json(rep.first_counterexample);
        out << j.dump() << "\n";
        break;
    }
    case Format::text: {
        std::vector<std::vector<std::string>> rows;
        for (const CheckCount& c : rep.counts)
            rows.push_back({c.name, std::to_string(c.checks), std::to_string(c.mismatches)});
        write_text_table(out, {"check", "cases", "mismatches"}, rows);
        break;
    }
    }
    if (!rep.ok()) {
        err << "first counterexample: " << *rep.first_counterexample << "\n";
        throw MismatchError("verification failed");
    }
}

int exit_for(Errc code) {
    switch (code) {
    case Errc::invalid_curve: return Exit::invalid_curve;
    case Errc::invalid_place:
    case Errc::invalid_selection:
    case Errc::length_mismatch: return Exit::invalid_place;
    case Errc::not_coprime:
    case Errc::precondition:
    case Errc::window_violation:
    case Errc::invalid_box: return Exit::precondition;
    case Errc::overflow: return Exit::overflow;
    }
    return Exit::internal;
}

void add_common(CLI::App* sub, Common& common) {
    sub->add_option("--format", common.format, "Output format: csv, json or text")->capture_default_str();
    sub->add_flag("--header", common.header, "Add a header row to CSV output");
    sub->add_option("--threads", common.threads, "Worker threads (default: KUMMER_THREADS or 1)");
}

void add_curve(CLI::App* sub, CurveArgs& c) {
    sub->add_option("--m", c.m, "Exponent m of y^m")->required();
    sub->add_option("--lambdas", c.lambdas, "Comma-separated multiplicities lambda_1..lambda_r")->required();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weierstrass gaps, pure gaps and AG code parameters on Kummer extensions", "kummergaps"};
    app.require_subcommand(1);
    Common common;

    GapsArgs gaps;
    CLI::App* gaps_cmd = app.add_subcommand("gaps", "Gap set at one totally ramified place");
    add_curve(gaps_cmd, gaps.curve);
    gaps_cmd->add_option("--place", gaps.place, "Place token: inf or a 1-based index")->required();
    add_common(gaps_cmd, common);

    PureArgs pure;
    CLI::App* pure_cmd = app.add_subcommand("puregaps", "Pure gap set at a selection of places");
    add_curve(pure_cmd, pure.curve);
    pure_cmd->add_option("--places", pure.places, "Comma-separated place tokens, e.g. inf,1,2")->required();
    pure_cmd->add_flag("--bottom-only", pure.bottom_only, "Only tuples in [1, m-1]^(s+1), with caps");
    pure_cmd->add_option("--verify", pure.verify, "none or oracle")->capture_default_str();
    add_common(pure_cmd, common);

    CodesArgs codes;
    CLI::App* codes_cmd = app.add_subcommand("codes", "Code parameters from pure-gap boxes");
    codes_cmd->add_option("--table", codes.table, "Reproduce stored table 1, 2, 3 or 4");
    codes_cmd->add_option("--family", codes.family, "f1, hq, f3 or custom");
    codes_cmd->add_option("--q", codes.q, "Field parameter q");
    codes_cmd->add_option("--t", codes.t, "Field extension degree t (f1)");
    codes_cmd->add_option("--m", codes.m, "Exponent m");
    codes_cmd->add_option("--construction", codes.construction, "1, 2 or 3");
    codes_cmd->add_option("--s", codes.s, "Number of finite places");
    codes_cmd->add_option("--k", codes.k, "Shift parameter k (constructions 1, 2)");
    codes_cmd->add_option("--c", codes.c, "Parameter c (construction 3)");
    codes_cmd->add_option("--n", codes.n, "Code length (default: largest allowed)");
    codes_cmd->add_option("--lambdas", codes.lambdas, "Multiplicities (custom family)");
    codes_cmd->add_option("--n-rational", codes.n_rational, "Number N of rational places (custom family)");
    codes_cmd->add_option("--places", codes.places, "Box places (box mode)");
    codes_cmd->add_option("--lower", codes.lower, "Box lower corner (box mode)");
    codes_cmd->add_option("--upper", codes.upper, "Box upper corner (box mode)");
    add_common(codes_cmd, common);

    VerifyConfig vcfg;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Cross-check the criterion, closed forms and gap counts");
    verify_cmd->add_option("--max-m", vcfg.max_m)->capture_default_str();
    verify_cmd->add_option("--max-r", vcfg.max_r)->capture_default_str();
    verify_cmd->add_option("--max-s", vcfg.max_s, "Selections have at most max-s + 1 places")->capture_default_str();
    verify_cmd->add_option("--max-lambda", vcfg.max_lambda)->capture_default_str();
    verify_cmd->add_option("--curves", vcfg.curves, "Number of random curves")->capture_default_str();
    verify_cmd->add_option("--seed", vcfg.seed)->capture_default_str();
    verify_cmd->add_option("--max-scan-genus", vcfg.max_scan_genus)->capture_default_str();
    verify_cmd->add_flag("--inject-fault", vcfg.inject_fault, "Corrupt the criterion (harness self-test)");
    add_common(verify_cmd, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.back()->help());
        return Exit::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return Exit::usage;
    }

    try {
        if (gaps_cmd->parsed()) cmd_gaps(gaps, common, out);
        else if (pure_cmd->parsed()) cmd_puregaps(pure, common, out);
        else if (codes_cmd->parsed()) cmd_codes(codes, common, out, err);
        else cmd_verify(vcfg, common, out, err);
        out.flush();
        return Exit::ok;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return Exit::usage;
    } catch (const MismatchError& e) {
        err << "error: " << e.what() << "\n";
        return Exit::verify_mismatch;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_for(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return Exit::internal;
    }
}

} // namespace kummer::cli
