#include "planarlim/cli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "planarlim/asymptotics.hpp"
#include "planarlim/closed_forms.hpp"
#include "planarlim/equilibrium.hpp"
#include "planarlim/planar.hpp"
#include "planarlim/verify.hpp"
#include "planarlim/wick_oracle.hpp"

namespace planarlim {

namespace {

std::string decimal(const BigFloat& x, long bits) { return x.str(decimal_digits(bits)); }
std::string decimal(const Rat& q, long bits) { return decimal(BigFloat(q, bits), bits); }

Json exact_value(const Rat& q, long bits) { return Json{{"exact", q.str()}, {"decimal", decimal(q, bits)}}; }

Json field_value(const NumberFieldElem& x, long bits) {
    Rat q;
    std::string exact = x.is_rational(q) ? q.str() : x.str("t0");
    return Json{{"exact", exact}, {"decimal", decimal(x.to_bigfloat(bits), bits)}};
}

Json coefficient_rows(const MultiSeries& s, long bits) {
    Json rows = Json::array();
    for (auto& [p, c] : s.terms())
        rows.push_back(Json{{"monomial", p.str()}, {"weight", p.weight()}, {"coefficient", c.str()},
                            {"decimal", decimal(c, bits)}});
    return rows;
}

void require_range(long value, long lo, long hi, const std::string& what) {
    if (value < lo || value > hi)
        throw CapError(what + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                       std::to_string(value));
}

std::string grading_name(Grading g) { return g == Grading::Edge ? "edge" : "face"; }

PotentialSpec potential_from(const RunConfig& cfg) {
    int modes = (cfg.gaussian ? 1 : 0) + (cfg.a2 || cfg.a4 ? 1 : 0) + (cfg.couplings.empty() ? 0 : 1) +
                (cfg.poly.empty() ? 0 : 1);
    if (modes > 1) throw std::invalid_argument("choose one of --gaussian, --a2/--a4, --coupling and --poly");
    if (cfg.a2 || cfg.a4) return PotentialSpec::quartic(cfg.a2.value_or(Rat(0)), cfg.a4.value_or(Rat(0)));
    if (!cfg.couplings.empty()) return PotentialSpec::from_couplings(cfg.couplings);
    if (!cfg.poly.empty()) return PotentialSpec::polynomial(Poly(cfg.poly));
    return PotentialSpec::from_couplings({});
}

// Tables rendered as CSV: the first array-valued field that holds objects.
const Json* find_table(const Json& doc) {
    for (const char* key : {"table", "density", "comparison", "counts", "F0"})
        if (doc.contains(key) && doc.at(key).is_array()) return &doc.at(key);
    return nullptr;
}

std::string cell(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

std::string render_csv(const Json& doc) {
    const Json* table = find_table(doc);
    if (!table) throw std::invalid_argument("this command has no table to write as CSV");
    std::ostringstream os;
    if (table->empty()) return "";
    std::vector<std::string> cols;
    for (auto& [k, v] : table->front().items()) cols.push_back(k);
    for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << '\n';
    for (const Json& row : *table) {
        for (size_t i = 0; i < cols.size(); ++i) {
            std::string s = row.contains(cols[i]) ? cell(row.at(cols[i])) : "";
            if (s.find(',') != std::string::npos) s = "\"" + s + "\"";
            os << (i ? "," : "") << s;
        }
        os << '\n';
    }
    return os.str();
}

void render_text_value(std::ostringstream& os, const std::string& key, const Json& v, int indent) {
    std::string pad(indent, ' ');
    if (v.is_object()) {
        if (v.contains("exact") && v.size() <= 2) {
            os << pad << key << ": " << cell(v.at("exact"));
            if (v.contains("decimal")) os << "  (" << cell(v.at("decimal")) << ")";
            os << '\n';
            return;
        }
        os << pad << key << ":\n";
        for (auto& [k, x] : v.items()) render_text_value(os, k, x, indent + 2);
        return;
    }
    if (v.is_array()) {
        os << pad << key << ":\n";
        for (const Json& x : v) {
            if (x.is_object()) {
                std::string line;
                for (auto& [k, y] : x.items()) line += (line.empty() ? "" : "  ") + k + "=" + cell(y);
                os << pad << "  " << line << '\n';
            } else {
                os << pad << "  " << cell(x) << '\n';
            }
        }
        return;
    }
    os << pad << key << ": " << cell(v) << '\n';
}

std::string render_series_text(const Json& doc) {
    std::ostringstream os;
    os << "weight cap " << doc.at("weight_cap").get<int>() << '\n';
    for (const char* name : {"R", "S", "F0"}) {
        os << name << " =";
        const Json& rows = doc.at(name);
        if (rows.empty()) os << " 0";
        os << '\n';
        for (const Json& row : rows) {
            std::string mono = cell(row.at("monomial"));
            os << "  " << cell(row.at("coefficient")) << (mono == "1" ? "" : " · " + mono);
            if (row.contains("oracle_match")) os << "  oracle " << (row.at("oracle_match").get<bool>() ? "ok" : "MISMATCH");
            os << '\n';
        }
    }
    return os.str();
}

}  // namespace

Rat parse_number(const std::string& text) {
    if (text.find_first_of(".eE") == std::string::npos) return Rat::parse(text);
    size_t epos = text.find_first_of("eE");
    std::string mantissa = text.substr(0, epos);
    long exponent = epos == std::string::npos ? 0 : std::stol(text.substr(epos + 1));
    size_t dot = mantissa.find('.');
    if (dot != std::string::npos) {
        exponent -= static_cast<long>(mantissa.size() - dot - 1);
        mantissa.erase(dot, 1);
    }
    if (mantissa.empty() || mantissa == "-" || mantissa == "+") throw std::invalid_argument("not a number: " + text);
    if (mantissa[0] == '+') mantissa.erase(0, 1);
    Rat m = Rat::parse(mantissa);
    return exponent >= 0 ? m * pow(Rat(10), exponent) : m / pow(Rat(10), -exponent);
}

int decimal_digits(long bits) { return std::clamp(static_cast<int>(bits * 0.30103) - 6, 15, 200); }

Json cmd_series(const RunConfig& cfg) {
    require_range(cfg.weight_cap, 0, kSeriesCapLimit, "weight cap");
    if (cfg.oracle) {
        int limit = cfg.extended ? kOracleExtendedCap : kOracleDefaultCap;
        if (cfg.weight_cap > limit) throw CapError("oracle cap exceeded");
    }
    const long bits = cfg.precision_bits;
    PlanarResult r = f0_multivariate(cfg.weight_cap);
    Json doc;
    doc["weight_cap"] = cfg.weight_cap;
    doc["R"] = coefficient_rows(r.RS.R, bits);
    doc["S"] = coefficient_rows(r.RS.S, bits);
    doc["F0"] = coefficient_rows(r.F0, bits);
    if (cfg.oracle) {
        MapCounts counts = connected_coefficients(cfg.weight_cap, cfg.extended);
        bool all = true;
        auto terms = r.F0.terms();
        for (size_t i = 0; i < terms.size(); ++i) {
            const auto& [p, c] = terms[i];
            Rat planar(0);
            if (counts.count(p) && counts.at(p).count(0)) planar = counts.at(p).at(0);
            bool match = planar == c;
            all = all && match;
            doc["F0"][i]["oracle_match"] = match;
        }
        for (auto& [p, genera] : counts)
            if (genera.count(0) && r.F0.coefficient(p) != genera.at(0)) all = false;
        doc["oracle_all_match"] = all;
        if (!all) throw ConsistencyError("oracle and fixed-point coefficients disagree");
    }
    return doc;
}

Json cmd_extreme(const RunConfig& cfg) {
    ExtremeKind k = parse_kind(cfg.kind);
    const long bits = cfg.precision_bits;
    if (cfg.fn != 0) {
        require_range(cfg.fn, 1, kTableLimit, "--fn");
        Rat f = coefficient_sequence(k, static_cast<int>(cfg.fn)).back();
        Json doc;
        doc["kind"] = kind_name(k);
        doc["n"] = cfg.fn;
        doc["f_n"] = exact_value(f, bits);
        return doc;
    }
    require_range(cfg.t_cap, 1, kExtremeTCapLimit, "t cap");
    require_range(cfg.n_max, 1, kTableLimit, "--n-max");
    const ClosedFormRecord& rec = catalog(k);
    Json doc;
    doc["kind"] = kind_name(k);
    doc["grading"] = grading_name(kind_grading(k));
    Json closed;
    closed["R"] = rec.R_closed ? Json(rec.R_closed->str()) : Json();
    closed["S"] = rec.S_closed ? Json(rec.S_closed->str()) : Json();
    closed["F0"] = rec.F0_closed ? Json(rec.F0_closed->str()) : Json();
    doc["closed_forms"] = closed;
    if (rec.recurrence) {
        Json r;
        r["order"] = rec.recurrence->order();
        Json gamma = Json::array();
        for (const Poly& g : rec.recurrence->gamma) gamma.push_back(poly_to_text(g, "n"));
        r["gamma"] = gamma;
        Json init = Json::array();
        for (const Rat& x : rec.recurrence->initial) init.push_back(x.str());
        r["initial"] = init;
        doc["recurrence"] = r;
    } else {
        doc["recurrence"] = Json();
    }
    for (const std::string& note : rec.notes) doc["notes"].push_back(note);

    ExtremeSeries es = extreme_series(k, cfg.t_cap);
    std::vector<Rat> seq = coefficient_sequence(k, std::max(cfg.n_max, cfg.t_cap));
    Json series = Json::array();
    for (int n = 1; n <= cfg.t_cap; ++n) {
        Rat c = es.F0.coeff_t(Rat(n));
        if (c != seq[n - 1])
            throw ConsistencyError("multivariate series and coefficient sequence disagree at t^" + std::to_string(n));
        series.push_back(c.str());
    }
    doc["t_cap"] = cfg.t_cap;
    doc["series"] = series;
    Json table = Json::array();
    for (int n = 1; n <= cfg.n_max; ++n)
        table.push_back(Json{{"n", n}, {"f_n", seq[n - 1].str()}, {"decimal", decimal(seq[n - 1], bits)}});
    doc["table"] = table;
    return doc;
}

Json cmd_asymptotics(const RunConfig& cfg) {
    ExtremeKind k = parse_kind(cfg.kind);
    require_range(cfg.corrections, 0, kCorrectionLimit, "number of corrections");
    for (long n : cfg.n_list) require_range(n, 1, kTableLimit, "comparison index");
    const long bits = cfg.precision_bits;
    AsymResult r = analyze_kind(k, std::max(cfg.corrections, 1), bits);
    const AsymExpansion& e = r.expansion;
    Json doc;
    doc["kind"] = kind_name(k);
    Json field;
    field["modulus"] = poly_to_text(e.field->modulus(), "x");
    field["interval"] = Json::array({e.field->lo().str(), e.field->hi().str()});
    doc["field"] = field;
    doc["t0"] = field_value(e.t0, bits);
    doc["rate"] = field_value(e.rate, bits);
    doc["exponent"] = e.exponent.str();
    doc["K"] = field_value(e.K, bits);
    doc["stokes"] = decimal(e.stokes(bits), bits);
    Json d = Json::array();
    for (int l = 1; l <= cfg.corrections; ++l) d.push_back(field_value(e.d.at(l - 1), bits));
    doc["corrections"] = d;
    Json cmp = Json::array();
    CheckReport rep = asymptotic_check(r, cfg.n_list, cfg.corrections, bits);
    for (const CheckRow& row : rep.rows)
        cmp.push_back(Json{{"n", row.n},
                           {"f_n", decimal(row.exact, bits)},
                           {"asymptotic", decimal(row.asym, bits)},
                           {"rel_error", row.rel_error.str(6)}});
    doc["comparison"] = cmp;
    return doc;
}

Json cmd_equilibrium(const RunConfig& cfg) {
    require_range(cfg.samples, 0, 10000, "--samples");
    const long bits = cfg.precision_bits;
    PotentialSpec V = potential_from(cfg);
    EquilibriumResult r = solve_equilibrium(V, cfg.samples, bits);
    const Endpoints& ep = r.endpoints;
    Json doc;
    doc["potential"] = V.describe();
    doc["admissible"] = r.admissible;
    doc["c"] = decimal(ep.c, bits);
    doc["c_squared"] = decimal(ep.c * ep.c, bits);
    doc["b"] = decimal(ep.b, bits);
    doc["support"] = Json::array({decimal(ep.b - BigFloat(2L, bits) * ep.c, bits),
                                   decimal(ep.b + BigFloat(2L, bits) * ep.c, bits)});
    doc["H"] = decimal(ep.H, bits);
    doc["newton_iterations"] = ep.iterations;
    doc["residual"] = ep.residual.str(6);
    doc["support_ok"] = r.support.ok;
    doc["support_boundary"] = r.support.boundary;
    doc["min_psi"] = r.support.min_psi.str(12);
    if (!r.support.note.empty()) doc["support_note"] = r.support.note;
    doc["I_V"] = decimal(r.I_V, bits);
    Json density = Json::array();
    for (auto& [x, rho] : r.density_samples)
        density.push_back(Json{{"x", x.str(20)}, {"density", rho.str(20)}});
    doc["density"] = density;
    return doc;
}

Json cmd_oracle(const RunConfig& cfg) {
    int limit = cfg.extended ? kOracleExtendedCap : kOracleDefaultCap;
    require_range(cfg.weight_cap, 0, limit, cfg.extended ? "extended oracle cap" : "oracle cap");
    MapCounts counts = connected_coefficients(cfg.weight_cap, cfg.extended);
    Json doc;
    doc["weight_cap"] = cfg.weight_cap;
    Json rows = Json::array();
    for (auto& [p, genera] : counts)
        for (auto& [g, c] : genera)
            rows.push_back(Json{{"monomial", p.str()}, {"weight", p.weight()}, {"genus", g}, {"count", c.str()}});
    doc["counts"] = rows;
    return doc;
}

Json cmd_verify(const RunConfig& cfg) {
    std::vector<int> ids = cfg.criteria;
    if (ids.empty())
        for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);
    for (int id : ids) require_range(id, 1, kCriterionCount, "criterion id");
    Json doc;
    Json rows = Json::array();
    int passed = 0;
    for (const CriterionResult& r : run_acceptance(ids)) {
        passed += r.pass ? 1 : 0;
        Json row{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"summary", r.summary}};
        row["notes"] = r.notes;
        row["seconds"] = std::round(r.seconds * 10) / 10;
        rows.push_back(row);
    }
    doc["criteria"] = rows;
    doc["passed"] = passed;
    doc["total"] = static_cast<int>(ids.size());
    return doc;
}

std::string render(const RunConfig& cfg, const Json& doc) {
    switch (cfg.format) {
        case Format::Json: return doc.dump(2) + "\n";
        case Format::Csv: return render_csv(doc);
        case Format::Text: break;
    }
    if (cfg.command == "series") return render_series_text(doc);
    if (cfg.command == "extreme" && doc.contains("f_n")) return cell(doc.at("f_n").at("exact")) + "\n";
    if (cfg.command == "verify") {
        std::ostringstream os;
        for (const Json& row : doc.at("criteria")) {
            CriterionResult r;
            r.id = row.at("id").get<int>();
            r.title = row.at("title").get<std::string>();
            r.pass = row.at("pass").get<bool>();
            r.summary = row.at("summary").get<std::string>();
            r.notes = row.at("notes").get<std::vector<std::string>>();
            r.seconds = row.at("seconds").get<double>();
            os << format_result(r) << '\n';
        }
        os << doc.at("passed").get<int>() << " of " << doc.at("total").get<int>() << " criteria pass\n";
        return os.str();
    }
    std::ostringstream os;
    for (auto& [k, v] : doc.items()) render_text_value(os, k, v, 0);
    return os.str();
}

RunOutcome run_command(const RunConfig& cfg) {
    RunOutcome out;
    try {
        Json doc;
        if (cfg.command == "series") doc = cmd_series(cfg);
        else if (cfg.command == "extreme") doc = cmd_extreme(cfg);
        else if (cfg.command == "asymptotics") doc = cmd_asymptotics(cfg);
        else if (cfg.command == "equilibrium") doc = cmd_equilibrium(cfg);
        else if (cfg.command == "oracle") doc = cmd_oracle(cfg);
        else if (cfg.command == "verify") doc = cmd_verify(cfg);
        else throw std::invalid_argument("unknown command '" + cfg.command + "'");
        out.output = render(cfg, doc);
        if (cfg.command == "verify" && doc.at("passed") != doc.at("total")) out.exit_code = 1;
    } catch (const CapError& e) {
        out.error = e.what();
        out.exit_code = 2;
    } catch (const std::exception& e) {
        out.error = e.what();
        out.exit_code = 1;
    }
    return out;
}

}  // namespace planarlim
