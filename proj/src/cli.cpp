/*
   Copyright 2026 The pencils authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "pencils/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "pencils/group.hpp"
#include "pencils/parallel.hpp"
#include "pencils/verify.hpp"

namespace pencils {

namespace {

using json = nlohmann::ordered_json;

enum class Format { JsonLines, Latex, Csv };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    unsigned q = 0;
    std::string level;
    std::string format = "json-lines";
    std::string out_path;
    unsigned threads = 0;
    unsigned rep = 0;
    std::string solid;
    std::string conics;
    bool campbell = false;
};

Format parse_format(const std::string& name) {
    if (name == "json-lines") return Format::JsonLines;
    if (name == "latex") return Format::Latex;
    if (name == "csv") return Format::Csv;
    throw UsageError("unknown format '" + name + "'");
}

template <class A>
json od_json(const A& a) {
    json j = json::array();
    for (auto v : a) j.push_back(v);
    return j;
}

template <class A>
std::string od_text(const A& a, char sep) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(a[i]);
    }
    return s;
}

template <class A>
std::string od_latex(const A& a) {
    return "$[" + od_text(a, ',') + "]$";
}

std::string label_latex(OrbitLabel label) { return "$\\Omega_{" + std::to_string(label) + "}$"; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) {
        if (c == '"') r += '"';
        r += c;
    }
    return r + '"';
}

void write_line(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

void require_q(const Options& o) {
    if (o.q == 0) throw UsageError("--q is required");
}

// classify ------------------------------------------------------------------

struct ClassifyInput {
    unsigned q = 0;
    Solid solid;
};

Conic parse_conic(const Field& field, std::string_view text) {
    if (text.size() != 6) throw UsageError("a conic needs 6 hex digits, got '" + std::string(text) + "'");
    const Vec6 v = parse_hex_vec<6>(text, field);
    if (is_zero(v)) throw UsageError("the zero conic is not a conic");
    return Conic(field, v);
}

ClassifyInput parse_solid_arg(const std::string& text, unsigned q) {
    std::string full = text;
    if (text.rfind("q=", 0) != 0) {
        if (q == 0) throw UsageError("a bare solid needs --q");
        full = "q=" + std::to_string(q) + ":" + text;
    }
    ParsedSolid p = parse_solid(full);
    if (q != 0 && p.q != q)
        throw UsageError("--q " + std::to_string(q) + " does not match the solid's field q=" + std::to_string(p.q));
    if (p.q != 2 && p.q != 4 && p.q != 8) throw UsageError("q must be 2, 4 or 8");
    return {p.q, p.solid};
}

int cmd_classify(const Options& o, std::istream& in, std::ostream& out) {
    const Format fmt = parse_format(o.format);
    std::map<unsigned, std::unique_ptr<Classifier>> classifiers;
    const auto classifier = [&](unsigned q) -> const Classifier& {
        auto& c = classifiers[q];
        if (!c) c = std::make_unique<Classifier>(Field(q));
        return *c;
    };

    if (fmt == Format::Csv) out << "solid,label,point_od,hyperplane_od\n";
    const auto emit = [&](const Classifier& c, const PencilSolid& s) {
        const Classification r = c.classify(s);
        const std::string solid = serialize_solid(c.field(), s.solid);
        const auto& d = r.distributions;
        switch (fmt) {
            case Format::JsonLines: {
                json j;
                j["solid"] = solid;
                j["label"] = r.label;
                j["point_od"] = od_json(d.point_od);
                j["hyperplane_od"] = od_json(d.hyperplane_od);
                write_line(out, j);
                break;
            }
            case Format::Csv:
                out << solid << ',' << r.label << ',' << od_text(d.point_od, ';') << ','
                    << od_text(d.hyperplane_od, ';') << '\n';
                break;
            case Format::Latex:
                out << "\\texttt{" << solid << "} & " << label_latex(r.label) << " & " << od_latex(d.point_od)
                    << " & " << od_latex(d.hyperplane_od) << " \\\\\n";
                break;
        }
    };

    if (o.rep != 0) {
        require_q(o);
        const Classifier& c = classifier(o.q);
        emit(c, representative(c.field(), o.rep));
    } else if (!o.conics.empty()) {
        require_q(o);
        const Classifier& c = classifier(o.q);
        const auto comma = o.conics.find(',');
        if (comma == std::string::npos) throw UsageError("--conics takes two conics separated by a comma");
        const Conic c1 = parse_conic(c.field(), std::string_view(o.conics).substr(0, comma));
        const Conic c2 = parse_conic(c.field(), std::string_view(o.conics).substr(comma + 1));
        if (c1 == c2) throw UsageError("the two conics are proportional");
        emit(c, from_conics(c.field(), c1, c2));
    } else if (!o.solid.empty()) {
        const ClassifyInput s = parse_solid_arg(o.solid, o.q);
        const Classifier& c = classifier(s.q);
        emit(c, PencilSolid::from_solid(c.field(), s.solid));
    } else {
        std::string line;
        std::size_t n = 0;
        while (std::getline(in, line)) {
            ++n;
            line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char ch) { return std::isspace(ch); }),
                       line.end());
            if (line.empty() || line.front() == '#') continue;
            ClassifyInput s;
            try {
                s = parse_solid_arg(line, o.q);
            } catch (const std::exception& e) {
                throw UsageError("line " + std::to_string(n) + ": " + e.what());
            }
            const Classifier& c = classifier(s.q);
            emit(c, PencilSolid::from_solid(c.field(), s.solid));
        }
    }
    return kExitOk;
}

// table ---------------------------------------------------------------------

/// Parameters a row's representative depends on.
std::vector<std::pair<std::string, Elem>> row_parameters(const RepresentativeParams& p, OrbitLabel label) {
    switch (label) {
        case 7:
        case 10:
        case 12:
            return {{"gamma", p.gamma_inv_trace}};
        case 13:
        case 14:
            return {{"gamma", p.gamma_trace}};
        case 15:
            return {{"b", p.cubic.b}, {"c", p.cubic.c}};
        default:
            return {};
    }
}

std::string row_condition(OrbitLabel label) {
    switch (label) {
        case 7:
        case 10:
        case 12:
            return "$\\mathrm{Tr}(\\gamma^{-1})=1$";
        case 13:
        case 14:
            return "$\\mathrm{Tr}(\\gamma)=1$";
        case 15:
            return "$b\\lambda^3+c\\lambda+1$ rootless";
        default:
            return "";
    }
}

std::string latex_structure(const std::string& s) {
    // structure names already use TeX subscripts
    std::string r;
    for (std::size_t i = 0; i < s.size();) {
        if (s.compare(i, 3, " x ") == 0) {
            r += "\\times ";
            i += 3;
        } else if (s.compare(i, 3, "Sym") == 0) {
            r += "\\mathrm{Sym}";
            i += 3;
        } else if (s.compare(i, 2, "GL") == 0) {
            r += "\\mathrm{GL}";
            i += 2;
        } else {
            r += s[i++];
        }
    }
    return "$" + r + "$";
}

int cmd_table(const Options& o, std::ostream& out) {
    require_q(o);
    const Format fmt = parse_format(o.format);
    const Field field(o.q);
    const auto table = expected_table(o.q);
    const RepresentativeParams params = representative_params(field);

    if (fmt == Format::Csv) {
        out << "q,label,conic1,conic2,point_od,hyperplane_od,structure,stabilizer_order,orbit_size,parameters";
        if (o.campbell) out << ",campbell";
        out << '\n';
    }
    if (fmt == Format::Latex) {
        out << "\\documentclass{article}\n\\usepackage{amsmath,amssymb,booktabs}\n\\begin{document}\n"
            << "\\begin{table}\n\\centering\\footnotesize\n"
            << "\\caption{Orbits of solids of $\\mathrm{PG}(5," << o.q << ")$";
        if (o.q > 2)
            out << "; $\\omega=" << static_cast<unsigned>(field.primitive_element())
                << "$ is the primitive element in bit notation";
        out << "}\n\\begin{tabular}{llllllr" << (o.campbell ? "l" : "") << "}\n\\toprule\n"
            << "Orbit & Generating conics & Conditions & Point-OD & Hyperplane-OD & Stabiliser & Orbit size";
        if (o.campbell) out << " & Campbell";
        out << " \\\\\n\\midrule\n";
    }

    std::uint64_t total = 0;
    for (const auto& row : table) {
        total += row.orbit_size;
        const auto [c1, c2] = representative_conics(field, row.label);
        const auto rp = row_parameters(params, row.label);
        switch (fmt) {
            case Format::JsonLines: {
                json j;
                j["q"] = o.q;
                j["label"] = row.label;
                j["conics"] = {to_hex(c1.coeffs()), to_hex(c2.coeffs())};
                j["point_od"] = od_json(row.point_od);
                j["hyperplane_od"] = od_json(row.hyperplane_od);
                j["structure"] = row.structure;
                j["stabilizer_order"] = row.stabilizer_order;
                j["orbit_size"] = row.orbit_size;
                json pj = json::object();
                for (const auto& [name, value] : rp) pj[name] = std::string(1, to_hex(value));
                j["parameters"] = pj;
                if (o.campbell) j["campbell"] = std::string(campbell_correspondence(row.label));
                write_line(out, j);
                break;
            }
            case Format::Csv: {
                std::string ps;
                for (const auto& [name, value] : rp) ps += (ps.empty() ? "" : ";") + name + "=" + to_hex(value);
                out << o.q << ',' << row.label << ',' << to_hex(c1.coeffs()) << ',' << to_hex(c2.coeffs()) << ','
                    << od_text(row.point_od, ';') << ',' << od_text(row.hyperplane_od, ';') << ','
                    << csv_field(row.structure) << ',' << row.stabilizer_order << ',' << row.orbit_size << ','
                    << ps;
                if (o.campbell) out << ',' << csv_field(std::string(campbell_correspondence(row.label)));
                out << '\n';
                break;
            }
            case Format::Latex: {
                std::string cond = row_condition(row.label);
                for (const auto& [name, value] : rp)
                    cond += ", $" + std::string(name == "gamma" ? "\\gamma" : name) +
                            "=" + std::to_string(static_cast<unsigned>(value)) + "$";
                out << label_latex(row.label) << " & $" << conic_latex(field, c1) << "$, $" << conic_latex(field, c2)
                    << "$ & " << cond << " & " << od_latex(row.point_od) << " & " << od_latex(row.hyperplane_od)
                    << " & " << latex_structure(row.structure) << " & " << row.orbit_size;
                if (o.campbell) out << " & " << campbell_correspondence(row.label);
                out << " \\\\\n";
                break;
            }
        }
    }
    if (fmt == Format::Latex)
        out << "\\midrule\n & & & & & & " << total << (o.campbell ? " &" : "")
            << " \\\\\n\\bottomrule\n\\end{tabular}\n\\end{table}\n\\end{document}\n";
    return kExitOk;
}

// rep -------------------------------------------------------------------------

int cmd_rep(const Options& o, std::ostream& out) {
    require_q(o);
    const Format fmt = parse_format(o.format);
    const Classifier classifier{Field(o.q)};
    const Field& field = classifier.field();
    std::vector<OrbitLabel> labels;
    if (o.rep != 0)
        labels.push_back(o.rep);
    else
        for (OrbitLabel l = 1; l <= kOrbitCount; ++l) labels.push_back(l);

    if (fmt == Format::Csv) out << "q,solid,point_od,hyperplane_od,base_count,label\n";
    for (OrbitLabel label : labels) {
        const PencilSolid s = representative(field, label);
        const Classification r = classifier.classify(s);
        const auto& d = r.distributions;
        const std::string solid = serialize_solid(field, s.solid);
        switch (fmt) {
            case Format::JsonLines: {
                json j;
                j["q"] = o.q;
                j["solid"] = solid;
                j["point_od"] = od_json(d.point_od);
                j["hyperplane_od"] = od_json(d.hyperplane_od);
                j["base_count"] = d.base_count;
                j["label"] = r.label;
                write_line(out, j);
                break;
            }
            case Format::Csv:
                out << o.q << ',' << solid << ',' << od_text(d.point_od, ';') << ',' << od_text(d.hyperplane_od, ';')
                    << ',' << d.base_count << ',' << r.label << '\n';
                break;
            case Format::Latex:
                out << label_latex(r.label) << " & \\texttt{" << solid << "} & " << od_latex(d.point_od) << " & "
                    << od_latex(d.hyperplane_od) << " & " << d.base_count << " \\\\\n";
                break;
        }
    }
    return kExitOk;
}

// census ------------------------------------------------------------------------

int cmd_census(const Options& o, std::ostream& out) {
    require_q(o);
    const Format fmt = parse_format(o.format);
    const Field field(o.q);
    const auto points = point_census(field);
    const auto hyperplanes = hyperplane_census(field);
    switch (fmt) {
        case Format::JsonLines: {
            json j;
            j["q"] = o.q;
            j["points"] = od_json(points);
            j["hyperplanes"] = od_json(hyperplanes);
            write_line(out, j);
            break;
        }
        case Format::Csv:
            out << "q,census,c0,c1,c2,c3\n"
                << o.q << ",points," << od_text(points, ',') << '\n'
                << o.q << ",hyperplanes," << od_text(hyperplanes, ',') << '\n';
            break;
        case Format::Latex:
            out << "\\begin{tabular}{lrrrr}\n\\toprule\n"
                << "Points & rank 1 & rank 2, nucleus plane & rank 2, other & rank 3 \\\\\n"
                << " & " << od_text(points, '&') << " \\\\\n"
                << "Hyperplanes & double line & real pair & imaginary pair & nonsingular \\\\\n"
                << " & " << od_text(hyperplanes, '&') << " \\\\\n\\bottomrule\n\\end{tabular}\n";
            break;
    }
    return kExitOk;
}

// verify ------------------------------------------------------------------------

json stabilizer_json(const StabilizerReport& r) {
    json j;
    j["label"] = r.label;
    j["q"] = r.q;
    j["order"] = r.order;
    j["expected_order"] = r.expected_order;
    j["abelian"] = r.abelian;
    json m = json::object();
    for (const auto& [order, count] : r.order_multiset) m[std::to_string(order)] = count;
    j["order_multiset"] = m;
    j["center_order"] = r.center_order;
    j["pass"] = r.pass;
    return j;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.level.empty()) throw UsageError("--level is required");
    const VerifyLevel level = parse_verify_level(o.level);
    const Format fmt = parse_format(o.format);
    if (fmt == Format::Latex) throw UsageError("verify writes json-lines or csv");
    const unsigned level_q = level == VerifyLevel::Q2Full ? 2 : level == VerifyLevel::Q4Full ? 4 : 8;
    if (o.q != 0 && o.q != level_q)
        throw UsageError("--q " + std::to_string(o.q) + " does not match level " + o.level);

    ProgressFn progress;
    unsigned last_percent = 0;
    if (level == VerifyLevel::Q8Full) {
        progress = [&](std::uint64_t done, std::uint64_t total) {
            const auto percent = static_cast<unsigned>(100 * done / total);
            if (percent >= last_percent + 5 || done == total) {
                last_percent = percent;
                err << "progress " << done << "/" << total << " (" << percent << "%)\n" << std::flush;
            }
        };
    }
    const VerifyReport report = run_verify(level, resolve_thread_count(o.threads), progress);

    if (fmt == Format::Csv) out << "check,pass,detail,witness,seconds\n";
    std::size_t failed = 0;
    for (const auto& c : report.checks) {
        failed += c.pass ? 0 : 1;
        err << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail;
        if (!c.witness.empty()) err << " witness " << c.witness;
        err << '\n';
        if (fmt == Format::JsonLines) {
            json j;
            j["check"] = c.name;
            j["pass"] = c.pass;
            j["detail"] = c.detail;
            j["witness"] = c.witness;
            j["seconds"] = c.seconds;
            write_line(out, j);
        } else {
            std::ostringstream sec;
            sec << std::fixed << std::setprecision(3) << c.seconds;
            out << csv_field(c.name) << ',' << (c.pass ? "true" : "false") << ',' << csv_field(c.detail) << ','
                << csv_field(c.witness) << ',' << sec.str() << '\n';
        }
    }
    if (fmt == Format::JsonLines) {
        for (const auto& s : report.stabilizers) write_line(out, stabilizer_json(s));
        if (report.tally) {
            const SweepTally& t = *report.tally;
            std::array<std::uint64_t, kOrbitCount> expected{};
            for (const auto& row : expected_table(report.q)) expected[row.label - 1] = row.orbit_size;
            json j;
            j["q"] = report.q;
            j["counts"] = od_json(t.counts);
            j["total"] = t.total;
            j["pass"] = t.counts == expected && t.inconsistencies == 0 && t.total == gaussian_count(6, 4, report.q);
            write_line(out, j);
        }
        json s;
        s["level"] = std::string(to_string(level));
        s["q"] = report.q;
        s["checks"] = report.checks.size();
        s["failed"] = failed;
        s["pass"] = report.pass();
        write_line(out, s);
    }
    err << (report.pass() ? "verify " : "verify FAILED ") << to_string(level) << ": "
        << report.checks.size() - failed << "/" << report.checks.size() << " checks passed\n";
    return report.pass() ? kExitOk : kExitCheckFailed;
}

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success\n"
    "  1  a verification check failed\n"
    "  2  usage or parse error\n"
    "  3  classification inconsistency (a solid matched no orbit)\n"
    "  4  output could not be written\n";

}  // namespace

std::string_view campbell_correspondence(OrbitLabel label) {
    static constexpr std::string_view kTable[kOrbitCount] = {
        "Class 3",         "Class 4",         "Class 1",          "Class 12", "Class 2",
        "Class 6",         "Class 5",         "Class 9",          "Class 7, Set 10",
        "Class 13",        "Class 11",        "Class 8, Set 10",  "Set 10, Set 15",
        "Set 14",          "Set 16, Set 17",
    };
    if (label < 1 || label > kOrbitCount) return "-";
    return kTable[label - 1];
}

std::string conic_latex(const Field& field, const Conic& c) {
    static constexpr const char* kMonomials[6] = {"X_0^2", "X_0X_1", "X_0X_2", "X_1^2", "X_1X_2", "X_2^2"};
    const Elem w = field.primitive_element();
    std::string s;
    for (std::size_t i = 0; i < 6; ++i) {
        const Elem a = c.coeffs()[i];
        if (a == 0) continue;
        if (!s.empty()) s += "+";
        if (a != 1) {
            unsigned k = 1;
            for (Elem p = w; p != a; p = field.mul(p, w)) ++k;
            s += k == 1 ? "\\omega " : "\\omega^{" + std::to_string(k) + "}";
        }
        s += kMonomials[i];
    }
    return s;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Classify pencils of conics of PG(2,q), q even, by the orbits of solids of PG(5,q)", "pencils"};
    app.footer(kExitCodes);
    app.require_subcommand(1);

    const auto add_q = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--q", o.q, "field order")->check(CLI::IsMember({2u, 4u, 8u}));
        if (required) opt->required();
    };
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json-lines, latex or csv")
            ->check(CLI::IsMember({"json-lines", "latex", "csv"}));
        sub->add_option("--out", o.out_path, "write records to this file instead of stdout");
    };

    auto* classify = app.add_subcommand("classify", "label solids (from --solid, --conics, --rep or stdin lines)");
    add_q(classify, false);
    add_common(classify);
    auto* solid_opt = classify->add_option("--solid", o.solid, "q=<q>:<24 hex digits>");
    auto* conics_opt = classify->add_option("--conics", o.conics, "two conics, 6 hex digits each, comma separated");
    auto* rep_opt = classify->add_option("--rep", o.rep, "the representative of this orbit")->check(CLI::Range(1, 15));
    solid_opt->excludes(conics_opt)->excludes(rep_opt);
    conics_opt->excludes(rep_opt);

    auto* table = app.add_subcommand("table", "the 15 orbits with their invariants at q");
    add_q(table, true);
    add_common(table);
    table->add_flag("--campbell", o.campbell, "add the matching classes of Campbell's classification");

    auto* verify = app.add_subcommand("verify", "run a verification level");
    add_q(verify, false);
    add_common(verify);
    verify->add_option("--level", o.level, "q2-full, q4-full, q8-reps or q8-full (long)")
        ->required()
        ->check(CLI::IsMember({"q2-full", "q4-full", "q8-reps", "q8-full"}));
    verify->add_option("--threads", o.threads, "worker threads, 0 = all cores");

    auto* rep = app.add_subcommand("rep", "distributions of the representatives");
    add_q(rep, true);
    add_common(rep);
    rep->add_option("--rep", o.rep, "only this orbit")->check(CLI::Range(1, 15));

    auto* census = app.add_subcommand("census", "point types and conic kinds of PG(5,q)");
    add_q(census, true);
    add_common(census);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    std::ofstream file;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file) {
            err << "error: cannot open " << o.out_path << " for writing\n";
            return kExitOutput;
        }
    }
    std::ostream& sink = o.out_path.empty() ? out : file;

    int code = kExitOk;
    try {
        if (*classify)
            code = cmd_classify(o, in, sink);
        else if (*table)
            code = cmd_table(o, sink);
        else if (*verify)
            code = cmd_verify(o, sink, err);
        else if (*rep)
            code = cmd_rep(o, sink);
        else
            code = cmd_census(o, sink);
    } catch (const ClassificationInconsistency& e) {
        err << "classification inconsistency: " << e.what() << '\n';
        return kExitInconsistency;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    sink.flush();
    if (!sink) {
        err << "error: writing output failed\n";
        return kExitOutput;
    }
    return code;
}

}  // namespace pencils
