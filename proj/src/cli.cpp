#include "tclass/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tclass/blocks.hpp"
#include "tclass/certify.hpp"
#include "tclass/corpus.hpp"
#include "tclass/endo.hpp"
#include "tclass/symplectic.hpp"

namespace tclass {

namespace {

using ojson = nlohmann::ordered_json;

constexpr std::size_t kInlineElementLimit = 10000;

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string mat2_str(Mat2 m) {
    std::string s;
    s += m.at(0, 0) ? '1' : '0';
    s += m.at(0, 1) ? '1' : '0';
    s += '/';
    s += m.at(1, 0) ? '1' : '0';
    s += m.at(1, 1) ? '1' : '0';
    return s;
}

ojson tableau_rows(const F2Matrix& t) {
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < t.rows(); ++r) {
        std::string line;
        line.reserve(t.cols());
        for (std::size_t c = 0; c < t.cols(); ++c) line += t.get(r, c) ? '1' : '0';
        rows.push_back(line);
    }
    return rows;
}

ojson algebra_json(const EndoAlgebra& a) {
    ojson j;
    j["tag"] = std::string(algebra_name(algebra_id(a)));
    j["dim"] = a.dim();
    j["size"] = a.size();
    ojson elems = ojson::array();
    for (Mat2 m : a.elements()) elems.push_back(mat2_str(m));
    j["elements"] = elems;
    return j;
}

ojson make_report(const std::string& command, ojson inputs, ojson result, double parse_ms,
                  double compute_ms) {
    ojson rep;
    rep["schema_version"] = "1";
    rep["command"] = command;
    rep["inputs"] = std::move(inputs);
    rep["result"] = std::move(result);
    rep["timings"] = ojson{{"parse_ms", parse_ms}, {"compute_ms", compute_ms}};
    return rep;
}

void print_string_list(std::ostream& out, const ojson& list, const char* indent = "  ") {
    for (const auto& item : list) out << indent << item.get<std::string>() << "\n";
}

struct GroupOptions {
    std::string file;
    std::size_t blocks = 1;
    bool count_only = false;
    std::string out_file;
    std::uint64_t cap = kDefaultElementCap;
};

int cmd_classify(const std::string& file, bool json, std::ostream& out) {
    Stopwatch pt;
    const StabilizerCode code = parse_code(read_file(file));
    const double parse_ms = pt.ms();
    Stopwatch ct;
    const CodeFamily fam = classify(code);
    const double compute_ms = ct.ms();

    ojson result;
    result["n"] = code.n();
    result["k"] = code.k();
    result["stabilizer_dim"] = code.space().dim();
    result["family_case"] = fam.family_case;
    result["family"] = std::string(family_name(fam.family_case));
    result["group"] = std::string(group_name(fam.family_case));
    result["algebra"] = algebra_json(fam.endo);
    result["witness"] =
        ojson{{"name", std::string(sp2_name(fam.witness))}, {"tableau", tableau_rows(to_f2(fam.witness))}};
    result["canonical_code"] = stabilizer_lines(fam.canonical);

    if (json) {
        out << make_report("classify", ojson{{"file", file}}, result, parse_ms, compute_ms).dump(2)
            << "\n";
        return 0;
    }
    out << "code: n=" << result["n"] << " k=" << result["k"]
        << " (stabilizer dim " << result["stabilizer_dim"] << ")\n";
    out << "family: case " << result["family_case"] << " ("
        << result["family"].get<std::string>() << ")\n";
    out << "transversal group: " << result["group"].get<std::string>() << "\n";
    out << "algebra: " << result["algebra"]["tag"].get<std::string>() << " (dim "
        << result["algebra"]["dim"] << ", " << result["algebra"]["size"] << " elements)\n";
    out << "  ";
    for (const auto& e : result["algebra"]["elements"]) out << e.get<std::string>() << " ";
    out << "\n";
    out << "witness: " << result["witness"]["name"].get<std::string>() << "\n";
    print_string_list(out, result["witness"]["tableau"]);
    out << "canonical code:\n";
    print_string_list(out, result["canonical_code"]);
    return 0;
}

int cmd_endo(const std::string& file, bool json, std::ostream& out) {
    Stopwatch pt;
    const StabilizerCode code = parse_code(read_file(file));
    const double parse_ms = pt.ms();
    Stopwatch ct;
    const EndoAlgebra a = endo_algebra(code);
    const double compute_ms = ct.ms();

    ojson result;
    result["n"] = code.n();
    result["k"] = code.k();
    result["algebra"] = algebra_json(a);

    if (json) {
        out << make_report("endo", ojson{{"file", file}}, result, parse_ms, compute_ms).dump(2)
            << "\n";
        return 0;
    }
    out << "code: n=" << result["n"] << " k=" << result["k"] << "\n";
    out << "algebra: " << result["algebra"]["tag"].get<std::string>() << " (dim "
        << result["algebra"]["dim"] << ", " << result["algebra"]["size"] << " elements)\n";
    out << "  ";
    for (const auto& e : result["algebra"]["elements"]) out << e.get<std::string>() << " ";
    out << "\n";
    return 0;
}

int cmd_group(const GroupOptions& opt, bool json, std::ostream& out) {
    Stopwatch pt;
    const StabilizerCode code = parse_code(read_file(opt.file));
    const double parse_ms = pt.ms();
    Stopwatch ct;

    const EndoAlgebra a = endo_algebra(code);
    const int fam = family_case_of(algebra_id(a));

    ojson result;
    result["n"] = code.n();
    result["k"] = code.k();
    result["blocks"] = opt.blocks;
    result["family_case"] = fam;
    result["family"] = std::string(family_name(fam));
    result["group"] = std::string(group_name(fam));

    std::string order_str;
    std::size_t element_count = 0;
    std::string dump;
    if (opt.count_only) {
        order_str = count_group_for_algebra(a, opt.blocks).str();
    } else {
        const TransversalGroup g = enumerate_group_for_algebra(a, opt.blocks, opt.cap);
        order_str = g.order().str();
        element_count = g.size();
        if (!opt.out_file.empty() || element_count <= kInlineElementLimit) {
            for (std::size_t i = 0; i < element_count; ++i) {
                dump += format_tableau(g.element(i).matrix());
                dump += '\n';
            }
        }
    }
    const double compute_ms = ct.ms();

    result["order"] = order_str;
    if (const auto table = family_table_order(fam, opt.blocks)) {
        result["family_table_order"] = std::to_string(*table);
        result["crosscheck"] = std::to_string(*table) == order_str ? "ok" : "mismatch";
    } else {
        result["crosscheck"] = "n/a";
    }

    if (!opt.count_only) {
        result["element_count"] = element_count;
        if (!opt.out_file.empty()) {
            std::ofstream f(opt.out_file, std::ios::binary);
            if (!f) throw ParseError("cannot open output file: " + opt.out_file);
            f << dump;
            result["dump_file"] = opt.out_file;
        } else if (element_count <= kInlineElementLimit) {
            ojson elems = ojson::array();
            std::istringstream ss(dump);
            // one tableau per element, blank-line separated
            std::string line;
            ojson current = ojson::array();
            while (std::getline(ss, line)) {
                if (line.empty()) {
                    elems.push_back(current);
                    current = ojson::array();
                } else {
                    current.push_back(line);
                }
            }
            result["elements"] = elems;
        } else {
            result["elements_omitted"] = true;
        }
    }

    ojson inputs{{"file", opt.file},
                 {"blocks", opt.blocks},
                 {"count_only", opt.count_only},
                 {"cap", opt.cap}};
    if (!opt.out_file.empty()) inputs["out"] = opt.out_file;

    if (json) {
        out << make_report("group", inputs, result, parse_ms, compute_ms).dump(2) << "\n";
        return 0;
    }
    out << "code: n=" << result["n"] << " k=" << result["k"] << "\n";
    out << "family: case " << result["family_case"] << " ("
        << result["family"].get<std::string>() << ")\n";
    out << "group on " << result["blocks"] << " blocks: " << result["group"].get<std::string>()
        << "\n";
    out << "order: " << result["order"].get<std::string>() << "\n";
    if (result.contains("family_table_order"))
        out << "table order: " << result["family_table_order"].get<std::string>() << " ("
            << result["crosscheck"].get<std::string>() << ")\n";
    if (result.contains("dump_file"))
        out << "elements written to " << result["dump_file"].get<std::string>() << "\n";
    else if (result.contains("elements"))
        out << "\n" << dump;
    else if (result.contains("elements_omitted"))
        out << "(elements omitted; use --out FILE)\n";
    return 0;
}

int cmd_certify(const std::string& file, const std::string& tableau_file, bool json,
                std::ostream& out) {
    Stopwatch pt;
    const StabilizerCode code = parse_code(read_file(file));
    const BlockMatrix t{parse_tableau(read_file(tableau_file))};
    const double parse_ms = pt.ms();
    Stopwatch ct;
    const GateVerdict v = certify_gate(code, t);
    const double compute_ms = ct.ms();

    ojson result;
    result["n"] = code.n();
    result["blocks"] = t.ell();
    result["transversal"] = v.transversal;
    ojson reason;
    switch (v.reason) {
        case GateVerdict::Reason::accepted:
            reason["kind"] = "accepted";
            reason["family_case"] = v.family_case;
            reason["family"] = std::string(family_name(v.family_case));
            break;
        case GateVerdict::Reason::block_outside_algebra:
            reason["kind"] = "block-outside-algebra";
            reason["block_row"] = v.block_row + 1;  // 1-based, as in the math convention
            reason["block_col"] = v.block_col + 1;
            reason["block"] = mat2_str(v.offending_block);
            reason["algebra"] = algebra_json(v.algebra);
            break;
        case GateVerdict::Reason::not_symplectic:
            reason["kind"] = "not-symplectic";
            break;
    }
    result["reason"] = reason;

    if (json) {
        out << make_report("certify", ojson{{"file", file}, {"tableau", tableau_file}}, result,
                           parse_ms, compute_ms)
                   .dump(2)
            << "\n";
    } else {
        out << (v.transversal ? "transversal: yes\n" : "transversal: no\n");
        if (v.reason == GateVerdict::Reason::block_outside_algebra) {
            out << "block (" << result["reason"]["block_row"] << ","
                << result["reason"]["block_col"] << ") = "
                << result["reason"]["block"].get<std::string>() << " is outside algebra "
                << result["reason"]["algebra"]["tag"].get<std::string>() << "\n";
        } else if (v.reason == GateVerdict::Reason::not_symplectic) {
            out << "tableau is not symplectic\n";
        } else {
            out << "family: case " << result["reason"]["family_case"] << " ("
                << result["reason"]["family"].get<std::string>() << ")\n";
        }
    }
    return v.transversal ? 0 : 1;
}

int cmd_distance(const std::string& file, std::size_t max_n, bool json, std::ostream& out) {
    Stopwatch pt;
    const StabilizerCode code = parse_code(read_file(file));
    const double parse_ms = pt.ms();
    Stopwatch ct;
    const std::size_t d = distance(code, max_n);
    const double compute_ms = ct.ms();

    ojson result{{"n", code.n()}, {"k", code.k()}, {"distance", d}};
    if (json) {
        out << make_report("distance", ojson{{"file", file}, {"max_n", max_n}}, result, parse_ms,
                           compute_ms)
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "[[" << code.n() << "," << code.k() << "," << d << "]]\n";
    return 0;
}

int cmd_entangling(const std::string& file, bool json, std::ostream& out) {
    Stopwatch pt;
    const StabilizerCode code = parse_code(read_file(file));
    const double parse_ms = pt.ms();
    Stopwatch ct;
    const CodeFamily fam = classify(code);
    const EntanglingWitness w = has_entangling_two_qubit_gate(code);
    const double compute_ms = ct.ms();

    ojson result;
    result["n"] = code.n();
    result["k"] = code.k();
    result["family_case"] = fam.family_case;
    result["family"] = std::string(family_name(fam.family_case));
    result["has_entangling_two_qubit_gate"] = w.has_gate;
    if (w.has_gate) result["witness"] = tableau_rows(w.witness.matrix());

    if (json) {
        out << make_report("entangling", ojson{{"file", file}}, result, parse_ms, compute_ms)
                   .dump(2)
            << "\n";
    } else {
        out << "family: case " << result["family_case"] << " ("
            << result["family"].get<std::string>() << ")\n";
        out << "entangling two-qubit gate: " << (w.has_gate ? "yes" : "no") << "\n";
        if (w.has_gate) {
            out << "witness tableau:\n";
            print_string_list(out, result["witness"]);
        }
    }
    return w.has_gate ? 0 : 1;
}

int cmd_orders(int family_case, std::size_t blocks, bool json, std::ostream& out) {
    Stopwatch ct;
    const BigUint order = count_group(family_case, blocks);
    const double compute_ms = ct.ms();

    ojson result{{"family_case", family_case},
                 {"group", std::string(group_name(family_case))},
                 {"blocks", blocks},
                 {"order", order.str()}};
    if (json) {
        out << make_report("orders", ojson{{"case", family_case}, {"blocks", blocks}}, result,
                           0.0, compute_ms)
                   .dump(2)
            << "\n";
        return 0;
    }
    out << result["group"].get<std::string>() << " at l=" << blocks << ": "
        << result["order"].get<std::string>() << "\n";
    return 0;
}

int cmd_corpus(bool json, std::ostream& out) {
    Stopwatch ct;
    ojson entries = ojson::array();
    for (const auto& e : corpus()) {
        const StabilizerCode code = parse_code(e.stab_text);
        ojson j;
        j["name"] = e.name;
        j["n"] = code.n();
        j["k"] = code.k();
        j["expected_case"] = e.expected_case;
        j["family"] = std::string(family_name(e.expected_case));
        j["note"] = e.note;
        j["stabilizers"] = stabilizer_lines(code);
        entries.push_back(j);
    }
    const double compute_ms = ct.ms();

    if (json) {
        out << make_report("corpus", ojson::object(), ojson{{"entries", entries}}, 0.0,
                           compute_ms)
                   .dump(2)
            << "\n";
        return 0;
    }
    for (const auto& j : entries) {
        out << j["name"].get<std::string>() << ": n=" << j["n"] << " k=" << j["k"] << " case "
            << j["expected_case"] << " (" << j["family"].get<std::string>() << ") — "
            << j["note"].get<std::string>() << "\n";
        print_string_list(out, j["stabilizers"]);
    }
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classify stabilizer codes by their diagonal endomorphism algebra and "
                 "enumerate/certify transversal Clifford gates.",
                 "transversal-class"};
    app.require_subcommand(1);

    bool json = false;
    std::string file, tableau_file;
    GroupOptions gopt;
    std::size_t max_n = 14;
    int family_case = 0;
    std::size_t orders_blocks = 1;

    auto add_json = [&json](CLI::App* sub) {
        sub->add_flag("--json", json, "emit a JSON report");
    };

    auto* c_classify = app.add_subcommand("classify", "code family, algebra and LDC witness");
    c_classify->add_option("file", file, "input .stab file")->required();
    add_json(c_classify);

    auto* c_endo = app.add_subcommand("endo", "endomorphism algebra of a code");
    c_endo->add_option("file", file, "input .stab file")->required();
    add_json(c_endo);

    auto* c_group = app.add_subcommand("group", "transversal Clifford group on l blocks");
    c_group->add_option("file", gopt.file, "input .stab file")->required();
    c_group->add_option("--blocks", gopt.blocks, "number of code blocks l")
        ->default_val(std::size_t{1})
        ->check(CLI::PositiveNumber);
    c_group->add_flag("--count-only", gopt.count_only, "report the order without elements");
    c_group->add_option("--out", gopt.out_file, "write the element dump to this file");
    c_group->add_option("--cap", gopt.cap, "element cap for enumeration")
        ->default_val(kDefaultElementCap);
    add_json(c_group);

    auto* c_certify = app.add_subcommand("certify", "test a tableau against a code");
    c_certify->add_option("file", file, "input .stab file")->required();
    c_certify->add_option("--tableau", tableau_file, "tableau file (2l lines of 0/1)")
        ->required();
    add_json(c_certify);

    auto* c_distance = app.add_subcommand("distance", "brute-force code distance");
    c_distance->add_option("file", file, "input .stab file")->required();
    c_distance->add_option("--max-n", max_n, "enumeration guard on the qubit count")
        ->default_val(std::size_t{14});
    add_json(c_distance);

    auto* c_entangling =
        app.add_subcommand("entangling", "existence of a transversal entangling 2-qubit gate");
    c_entangling->add_option("file", file, "input .stab file")->required();
    add_json(c_entangling);

    auto* c_orders = app.add_subcommand("orders", "order of one of the six matrix-group families");
    c_orders->add_option("--case", family_case, "family case 0..5")
        ->required()
        ->check(CLI::Range(0, 5));
    c_orders->add_option("--blocks", orders_blocks, "number of code blocks l")
        ->required()
        ->check(CLI::PositiveNumber);
    add_json(c_orders);

    auto* c_corpus = app.add_subcommand("corpus", "list the built-in reference codes");
    add_json(c_corpus);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
        if (app.got_subcommand(c_classify)) return cmd_classify(file, json, out);
        if (app.got_subcommand(c_endo)) return cmd_endo(file, json, out);
        if (app.got_subcommand(c_group)) return cmd_group(gopt, json, out);
        if (app.got_subcommand(c_certify)) return cmd_certify(file, tableau_file, json, out);
        if (app.got_subcommand(c_distance)) return cmd_distance(file, max_n, json, out);
        if (app.got_subcommand(c_entangling)) return cmd_entangling(file, json, out);
        if (app.got_subcommand(c_orders)) return cmd_orders(family_case, orders_blocks, json, out);
        if (app.got_subcommand(c_corpus)) return cmd_corpus(json, out);
        err << "error: no command given\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    } catch (const CapExceededError& e) {
        err << "error: " << e.what() << "\n";
        if (e.predicted_order) err << "predicted order: " << *e.predicted_order << "\n";
        return 3;
    } catch (const ParseError& e) {
        err << "error: " << e.what();
        if (e.line) err << " (line " << e.line << (e.column ? ", column " + std::to_string(e.column) : "") << ")";
        err << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace tclass
