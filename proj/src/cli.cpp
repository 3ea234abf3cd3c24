#include "rookmaze/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "rookmaze/bijections.hpp"
#include "rookmaze/codec.hpp"
#include "rookmaze/counting.hpp"
#include "rookmaze/linear_side.hpp"
#include "rookmaze/render.hpp"
#include "rookmaze/slice.hpp"
#include "rookmaze/weyl_f4.hpp"

namespace rookmaze {
namespace {

// Inline JSON when the argument starts with '{' or '[', otherwise a file path.
std::string load_text(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
    std::ifstream in(arg);
    if (!in) throw DomainError("cannot read " + arg);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write " + path);
    out << text;
}

std::string json_line(const Json& j) { return j.dump() + "\n"; }

struct Globals {
    std::string format;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    std::uint64_t limit = 10'000'000;

    EnumerationLimits limits() const { return {limit, jobs}; }
    std::string format_or(const std::string& fallback) const { return format.empty() ? fallback : format; }
};

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (f == a) return;
    std::string list;
    for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw DomainError("format " + f + " is not supported here (use " + list + ")");
}

std::string render_mazes(const std::vector<Maze>& mazes, const Globals& g) {
    const std::string f = g.format_or("json");
    require_format(f, {"json", "ascii", "svg"});
    if (f == "json") {
        Json arr = Json::array();
        for (const auto& m : mazes) arr.push_back(to_json(m));
        return json_line(arr);
    }
    std::string out;
    for (const auto& m : mazes) out += render(m, render_format_from_string(f)) + "\n";
    return out;
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
    CLI::App app{"Mazes, rook placements and their linear-algebra models", "rookmaze"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "json, csv, md, ascii or svg (per subcommand)")
        ->check(CLI::IsMember({"json", "csv", "md", "ascii", "svg"}));
    app.add_option("--seed", g.seed, "seed for sampling");
    app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--limit", g.limit, "enumeration ceiling");

    std::ostringstream out;
    std::function<void()> action;

    // count
    auto* count = app.add_subcommand("count", "count placements or mazes");
    count->require_subcommand(1);
    int cm = 0, cn = 0;
    bool symmetric = false;
    auto emit_count = [&](std::uint64_t c) {
        const std::string f = g.format_or("ascii");
        require_format(f, {"ascii", "json"});
        out << (f == "json" ? json_line(Json{{"count", c}}) : std::to_string(c) + "\n");
    };
    auto* count_rooks = count->add_subcommand("rooks", "non-attacking rook placements on M x N");
    count_rooks->add_option("M", cm)->required()->check(CLI::NonNegativeNumber);
    count_rooks->add_option("N", cn)->required()->check(CLI::NonNegativeNumber);
    count_rooks->callback([&] { action = [&] { emit_count(enumerate_rooks(cm, cn, g.limits()).size()); }; });
    auto* count_mazes = count->add_subcommand("mazes", "mazes on M x N");
    count_mazes->add_option("M", cm)->required()->check(CLI::PositiveNumber);
    count_mazes->add_option("N", cn)->required()->check(CLI::PositiveNumber);
    count_mazes->add_flag("--symmetric", symmetric, "centrally symmetric mazes only");
    count_mazes->callback([&] {
        action = [&] {
            emit_count(symmetric ? enumerate_symmetric_mazes(cm, cn, g.limits()).size()
                                 : enumerate_mazes(cm, cn, g.limits()).size());
        };
    });

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list objects");
    std::string kind;
    int em = 0, en = 0;
    enumerate->add_option("KIND", kind)->required()->check(CLI::IsMember({"rooks", "mazes", "symmetric-mazes", "rb"}));
    enumerate->add_option("M", em, "rows (or the size for rb)")->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("N", en, "columns")->check(CLI::NonNegativeNumber);
    enumerate->callback([&] {
        action = [&] {
            if (kind == "rooks") {
                require_format(g.format_or("json"), {"json"});
                Json arr = Json::array();
                for (const auto& r : enumerate_rooks(em, en, g.limits())) arr.push_back(to_json(r));
                out << json_line(arr);
            } else if (kind == "rb") {
                require_format(g.format_or("json"), {"json"});
                Json arr = Json::array();
                for (const auto& c : rb_elements(em)) arr.push_back(to_json(c));
                out << json_line(arr);
            } else {
                out << render_mazes(kind == "mazes" ? enumerate_mazes(em, en, g.limits())
                                                    : enumerate_symmetric_mazes(em, en, g.limits()),
                                    g);
            }
        };
    });

    // map
    auto* map = app.add_subcommand("map", "apply a bijection");
    std::string map_name, maze_in, rooks_in, cperm_in;
    int split_a = -1, rho_m = -1;
    map->add_option("NAME", map_name)
        ->required()
        ->check(CLI::IsMember({"pi", "varpi", "pi-v", "varpi-v", "pi-h", "varpi-h", "iota", "phi", "varphi", "rho",
                               "varrho", "fourier", "insert-col", "insert-row"}));
    map->add_option("--maze", maze_in, "maze JSON or file");
    map->add_option("--rooks", rooks_in, "rook placement JSON or file");
    map->add_option("--cperm", cperm_in, "colored permutation JSON or file");
    map->add_option("--split", split_a, "columns left of the cut (pi-v) or rows above it (pi-h)");
    map->add_option("--m", rho_m, "M for rho");
    map->callback([&] {
        action = [&] {
            require_format(g.format_or("json"), {"json"});
            auto need = [&](const std::string& v, const char* flag) -> const std::string& {
                if (v.empty()) throw CLI::ValidationError(std::string("map ") + map_name + " needs " + flag);
                return v;
            };
            auto maze = [&] { return decode_maze(load_text(need(maze_in, "--maze"))); };
            auto rooks = [&] { return decode_rooks(load_text(need(rooks_in, "--rooks"))); };
            auto cperm = [&] { return decode_cperm(load_text(need(cperm_in, "--cperm"))); };
            auto split = [&] {
                if (split_a < 0) throw CLI::ValidationError("map " + map_name + " needs --split");
                return split_a;
            };
            Json result;
            if (map_name == "pi") result = to_json(pi(maze()));
            else if (map_name == "varpi") result = to_json(varpi(rooks()));
            else if (map_name == "pi-v") {
                Maze mz = maze();
                result = to_json(pi_v(mz, split(), mz.n() - split()));
            } else if (map_name == "varpi-v") {
                RookPlacement r = rooks();
                result = to_json(varpi_v(r, split(), r.n() - split()));
            } else if (map_name == "pi-h") {
                Maze mz = maze();
                result = to_json(pi_h(mz, split(), mz.m() - split()));
            } else if (map_name == "varpi-h") {
                RookPlacement r = rooks();
                result = to_json(varpi_h(r, split(), r.m() - split()));
            } else if (map_name == "iota") result = to_json(iota(maze()));
            else if (map_name == "phi") result = to_json(phi(maze()));
            else if (map_name == "varphi") {
                std::string reason;
                auto m = varphi(cperm(), &reason);
                if (!m) throw DomainError("varphi: " + reason);
                result = to_json(*m);
            } else if (map_name == "rho") {
                if (rho_m < 0) throw CLI::ValidationError("map rho needs --m");
                result = to_json(rho(cperm(), rho_m));
            } else if (map_name == "varrho") result = to_json(varrho(rooks()));
            else if (map_name == "fourier") result = to_json(fourier(rooks()));
            else if (map_name == "insert-col") result = to_json(insert_middle_column(maze()));
            else result = to_json(insert_middle_row(maze()));
            out << json_line(result);
        };
    });

    // render
    auto* render_cmd = app.add_subcommand("render", "draw a maze");
    std::string render_in;
    render_cmd->add_option("--maze", render_in, "maze JSON or file")->required();
    render_cmd->callback([&] {
        action = [&] {
            const std::string f = g.format_or("ascii");
            require_format(f, {"ascii", "svg"});
            Maze m = decode_maze(load_text(render_in));
            require_valid(m);
            out << render(m, render_format_from_string(f)) << "\n";
        };
    });

    // linear
    auto* linear = app.add_subcommand("linear", "matrix models");
    linear->require_subcommand(1);
    std::string la, lb, lfile, lorient = "col", lgroup = "slice";
    int lm = 0, ln = 0, lr = 0, ls = 0, lk = 0, lq = 2;
    auto* lambda = linear->add_subcommand("lambda-member", "are AB and BA strictly upper triangular");
    lambda->add_option("--a", la, "M x N matrix JSON or file")->required();
    lambda->add_option("--b", lb, "N x M matrix JSON or file")->required();
    lambda->callback([&] {
        action = [&] {
            require_format(g.format_or("json"), {"json"});
            out << json_line(Json{{"lambda_member", lambda_member(decode_matrix(load_text(la)), decode_matrix(load_text(lb)))}});
        };
    });
    auto* normal = linear->add_subcommand("normal-form", "rook normal form of a matrix");
    normal->add_option("FILE", lfile, "matrix JSON or file")->required();
    normal->callback([&] {
        action = [&] {
            require_format(g.format_or("json"), {"json"});
            out << json_line(to_json(rook_normal_form(decode_matrix(load_text(lfile)))));
        };
    });
    auto* relevance_cmd = linear->add_subcommand("relevance", "relevance of a maze's representative point");
    relevance_cmd->add_option("--maze", lfile, "maze JSON or file")->required();
    relevance_cmd->add_option("--orientation", lorient)->check(CLI::IsMember({"col", "row"}));
    relevance_cmd->callback([&] {
        action = [&] {
            require_format(g.format_or("json"), {"json"});
            Maze m = decode_maze(load_text(lfile));
            require_valid(m);
            QuotientPoint p = representative_point(m, lorient == "col" ? Split::Column : Split::Row);
            Json j;
            j["relevant"] = relevance(p);
            j["c"] = parse_json(encode_matrix(p.c));
            j["dt"] = parse_json(encode_matrix(p.dt));
            out << json_line(j);
        };
    });
    auto* coset = linear->add_subcommand("coset-check", "is B in H A B_N over F_q");
    coset->add_option("--a", la, "matrix JSON or file")->required();
    coset->add_option("--b", lb, "matrix JSON or file")->required();
    coset->add_option("--group", lgroup, "left group")->check(CLI::IsMember({"borel", "slice", "projection", "middle"}));
    coset->add_option("--m", lm, "M");
    coset->add_option("--n", ln, "N (matrix size)");
    coset->add_option("--r", lr);
    coset->add_option("--s", ls);
    coset->add_option("--k", lk);
    coset->add_option("--q", lq, "prime field size")->check(CLI::IsMember({2, 3, 5, 7, 11, 13}));
    coset->callback([&] {
        action = [&] {
            require_format(g.format_or("json"), {"json"});
            QMatrix a = decode_matrix(load_text(la)), b = decode_matrix(load_text(lb));
            if (a.rows() != a.cols() || b.rows() != a.rows() || b.cols() != a.cols())
                throw DomainError("coset-check needs two square matrices of the same size");
            const int size = a.rows();
            if (lgroup != "borel" && ln != size) throw DomainError("--n must equal the matrix size");
            PatternGroup left = lgroup == "borel"        ? upper_borel(size)
                                : lgroup == "slice"      ? slice_subgroup(lm, ln, lr, ls, lk)
                                : lgroup == "projection" ? projection_subgroup(lm, ln, lr, ls)
                                                         : middle_subgroup(lm, ln);
            out << json_line(Json{{"same_double_coset", double_coset_equal_Fq(a, b, left, upper_borel(size), lq)}});
        };
    });

    // f4
    auto* f4 = app.add_subcommand("f4", "type C3 Weyl group computation");
    f4->require_subcommand(1);
    int trials = 20;
    std::string audit_path;
    auto* f4_count = f4->add_subcommand("count", "number of components");
    f4_count->add_option("--trials", trials)->check(CLI::PositiveNumber);
    f4_count->add_option("--audit", audit_path, "write the full audit as JSON");
    f4_count->callback([&] {
        action = [&] {
            const std::string f = g.format_or("ascii");
            require_format(f, {"ascii", "json"});
            F4Audit audit = f4_component_count(trials, g.seed);
            if (!audit_path.empty()) write_file(audit_path, to_json(audit).dump(2) + "\n");
            out << (f == "json" ? json_line(to_json(audit)) : std::to_string(audit.count) + "\n");
        };
    });

    // table1
    auto* t1 = app.add_subcommand("table1", "maze counts by family");
    int max_m = 3, max_n = 3;
    t1->add_option("--max-m", max_m)->check(CLI::PositiveNumber);
    t1->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
    t1->callback([&] {
        action = [&] {
            const std::string f = g.format_or("md");
            require_format(f, {"md", "csv"});
            out << format_table1(table1(max_m, max_n, g.limits()), f);
        };
    });

    std::vector<const char*> argv{"rookmaze"};
    for (const auto& a : args) argv.push_back(a.c_str());
    CommandResult result;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        action();
        result.out = out.str();
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
    } catch (const CLI::CallForAllHelp&) {
        result.out = app.help("", CLI::AppFormatMode::All);
    } catch (const CLI::ParseError& e) {
        result.exit_code = 2;
        result.err = std::string("error: ") + e.what() + "\n" + app.help();
    } catch (const DomainError& e) {
        result.exit_code = 1;
        result.err = std::string("error: ") + e.what() + "\n";
    } catch (const ResourceLimit& e) {
        result.exit_code = 1;
        result.err = std::string("error: ") + e.what() + "\n";
    }
    return result;
}

}  // namespace rookmaze
