#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apexg/dot.hpp"
#include "apexg/enumerate.hpp"
#include "apexg/graph6.hpp"
#include "apexg/hereditary.hpp"
#include "apexg/search.hpp"

namespace {

using namespace apexg;

// Exit codes: 0 success or positive verdict, 1 negative verdict, 2
// operational error. run_* functions return 0/1; thrown exceptions become 2.

ClassSpec load_class(const std::string& source) {
    if (source == "cograph") return ClassSpec::cograph();
    return ClassSpec::excluding(ForbiddenSet::from_g6_file(source));
}

struct OrderRange {
    int lo = 0;
    int hi = 0;
};

int parse_int_strict(const std::string& text) {
    std::size_t pos = 0;
    const int v = std::stoi(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters in '" + text + "'");
    return v;
}

OrderRange parse_range(const std::string& text) {
    try {
        const std::size_t dots = text.find("..");
        if (dots == std::string::npos) {
            const int v = parse_int_strict(text);
            return {v, v};
        }
        return {parse_int_strict(text.substr(0, dots)), parse_int_strict(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad order range '" + text + "', expected <n> or <a>..<b>");
    }
}

template <typename Fn>
int with_output(const std::string& path, Fn&& fn) {
    if (path == "-") {
        fn(std::cout);
        return 0;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    fn(out);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
    return 0;
}

std::string read_all(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_enumerate(int n, const std::string& out_path, int workers) {
    if (n > 9)
        std::cerr << "warning: enumeration beyond order 9 is expensive (order 10 already has "
                     "12 million classes)\n";
    const EnumerationLevel lvl = enumerate_order(n, workers);
    std::cerr << "order " << n << ": " << lvl.reps.size() << " isomorphism classes\n";
    return with_output(out_path, [&](std::ostream& out) { g6::write_g6_stream(lvl.reps, out); });
}

int run_check(std::string text, const std::string& class_source) {
    if (text == "-") {
        if (!std::getline(std::cin, text)) throw std::runtime_error("no graph on stdin");
        while (!text.empty() && (text.back() == '\r' || text.back() == '\n')) text.pop_back();
    }
    const SmallGraph g = g6::decode_graph6(text);
    const ClassSpec cls = load_class(class_source);
    const ApexResult r = in_edge_apex(g, cls);
    switch (r.status) {
        case ApexStatus::Member:
            std::cout << "member\n";
            return 0;
        case ApexStatus::ApexEdge:
            std::cout << "apex " << r.u << " " << r.v << "\n";
            return 0;
        case ApexStatus::NotInApex:
            std::cout << "non-member\n";
            return 1;
    }
    return 2;
}

int run_find(const std::string& class_source, const std::string& orders,
             const std::string& format, const std::string& out_path, int workers, bool force,
             const std::vector<std::string>& preload) {
    const OrderRange r = parse_range(orders);
    if (r.lo < 1 || r.hi < r.lo || r.hi > kMaxVertices)
        throw std::invalid_argument("order range must satisfy 1 <= a <= b <= 31");
    if (r.hi > 9) {
        if (!force) throw std::invalid_argument("orders above 9 require --force");
        std::cerr << "warning: searching beyond order 9; this may take a very long time\n";
    }

    const ClassSpec cls = load_class(class_source);
    SearchOptions opts;
    opts.workers = workers;
    opts.preload = preload;
    const ObstructionReport rep = find_obstructions(cls, r.lo, r.hi, opts);

    for (const OrderResult& o : rep.orders)
        std::cerr << "order " << o.n << ": " << o.obstructions.size() << " obstruction(s) among "
                  << o.candidates << " classes, " << o.seconds << "s [" << o.source << "]\n";
    std::cerr << "total: " << rep.total() << " obstruction(s) for class " << rep.class_description
              << "\n";

    return with_output(out_path, [&](std::ostream& out) {
        if (format == "summary") {
            write_report(rep, out);
        } else if (format == "json") {
            write_report_json(rep, out);
        } else if (format == "graph6") {
            for (const OrderResult& o : rep.orders)
                for (const std::string& s : o.graph6) out << s << "\n";
        } else {  // dot
            std::vector<SmallGraph> flat;
            for (const OrderResult& o : rep.orders)
                flat.insert(flat.end(), o.obstructions.begin(), o.obstructions.end());
            write_dot(flat, out);
        }
    });
}

ExpectedCatalog parse_report_file(const std::string& path) {
    if (path == "-") return parse_report_text(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return parse_report_text(in);
    } catch (const g6::DecodeError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

int run_verify(const std::string& report_path, const std::string& expected_path) {
    const ExpectedCatalog found = parse_report_file(report_path);
    const ExpectedCatalog expected = parse_report_file(expected_path);
    const VerifyResult res = verify_catalogs(found, expected);
    for (const OrderComparison& o : res.orders) {
        if (o.matches()) {
            std::cout << "order " << o.n << ": ok (" << o.found_count << ")\n";
            continue;
        }
        for (const std::string& s : o.missing_from_expected)
            std::cout << "order " << o.n << ": missing " << s << "\n";
        for (const std::string& s : o.extra_in_expected)
            std::cout << "order " << o.n << ": extra-expected " << s << "\n";
    }
    return res.ok() ? 0 : 1;
}

int run_convert(const std::string& input, std::string format, const std::string& out_path) {
    std::string content;
    if (input == "-") {
        content = read_all(std::cin);
    } else if (std::ifstream in(input); in) {
        content = read_all(in);
    } else {
        content = input;  // literal graph6
    }

    // A DOT document begins with a graph block; anything else is graph6.
    const std::size_t first = content.find_first_not_of(" \t\r\n");
    const bool input_is_dot = first != std::string::npos && content.compare(first, 5, "graph") == 0;

    std::istringstream in(content);
    const std::vector<SmallGraph> graphs = input_is_dot ? read_dot(in) : g6::read_g6_stream(in);
    if (graphs.empty()) throw std::runtime_error("no graphs in input");

    if (format.empty()) format = input_is_dot ? "graph6" : "dot";
    return with_output(out_path, [&](std::ostream& out) {
        if (format == "graph6")
            g6::write_g6_stream(graphs, out);
        else
            write_dot(graphs, out);
    });
}

int run_count(int n) {
    std::cout << count_graphs_burnside(n) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hereditary graph classes: enumeration, membership, edge-apex obstruction search"};
    app.require_subcommand(1);

    int workers = 0;
    app.add_option("-j,--workers", workers, "worker threads (0 = all cores, 1 = serial)")
        ->envname("APEXG_WORKERS")
        ->check(CLI::Range(0, 256));

    auto* cmd_enum = app.add_subcommand("enumerate", "write all graphs of one order, graph6 per line");
    int enum_n = 0;
    std::string enum_out = "-";
    cmd_enum->add_option("-n,--order", enum_n, "graph order")->required()->check(CLI::Range(1, 31));
    cmd_enum->add_option("-o,--output", enum_out, "output path (- for stdout)");
    cmd_enum->fallthrough();

    auto* cmd_check = app.add_subcommand("check", "classify one graph: member / apex edge / non-member");
    std::string check_g6;
    std::string check_class = "cograph";
    cmd_check->add_option("graph", check_g6, "graph6 string (- to read a line from stdin)")->required();
    cmd_check->add_option("--class", check_class, "cograph or path to a forbidden-set graph6 file");
    cmd_check->fallthrough();

    auto* cmd_find = app.add_subcommand("find-obstructions",
                                        "search orders for minimal forbidden induced subgraphs "
                                        "of the edge-apex class");
    std::string find_class = "cograph";
    std::string find_orders;
    std::string find_format = "summary";
    std::string find_out = "-";
    bool find_force = false;
    std::vector<std::string> find_preload;
    cmd_find->add_option("--class", find_class, "cograph or path to a forbidden-set graph6 file");
    cmd_find->add_option("--orders", find_orders, "order or inclusive range a..b")->required();
    cmd_find->add_option("--format", find_format, "summary | graph6 | dot | json")
        ->check(CLI::IsMember({"summary", "graph6", "dot", "json"}));
    cmd_find->add_option("-o,--output", find_out, "output path (- for stdout)");
    cmd_find->add_flag("--force", find_force, "allow orders above 9");
    cmd_find->add_option("--preload", find_preload, "graph6 level cache file (repeatable)");
    cmd_find->fallthrough();

    auto* cmd_verify = app.add_subcommand("verify", "compare two obstruction reports up to isomorphism");
    std::string verify_report_path;
    std::string verify_expected_path;
    cmd_verify->add_option("report", verify_report_path, "report file (- for stdin)")->required();
    cmd_verify->add_option("expected", verify_expected_path, "expected report file")->required();
    cmd_verify->fallthrough();

    auto* cmd_convert = app.add_subcommand("convert", "translate between graph6 and DOT");
    std::string convert_in;
    std::string convert_format;
    std::string convert_out = "-";
    cmd_convert->add_option("input", convert_in,
                            "path, - for stdin, or a literal graph6 string")->required();
    cmd_convert->add_option("--format", convert_format, "output format: graph6 | dot")
        ->check(CLI::IsMember({"graph6", "dot"}));
    cmd_convert->add_option("-o,--output", convert_out, "output path (- for stdout)");
    cmd_convert->fallthrough();

    auto* cmd_count = app.add_subcommand("count", "print the number of isomorphism classes of an order");
    int count_n = 0;
    cmd_count->add_option("-n,--order", count_n, "graph order")->required()->check(CLI::Range(1, 12));
    cmd_count->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_enum) return run_enumerate(enum_n, enum_out, workers);
        if (*cmd_check) return run_check(check_g6, check_class);
        if (*cmd_find)
            return run_find(find_class, find_orders, find_format, find_out, workers, find_force,
                            find_preload);
        if (*cmd_verify) return run_verify(verify_report_path, verify_expected_path);
        if (*cmd_convert) return run_convert(convert_in, convert_format, convert_out);
        if (*cmd_count) return run_count(count_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
