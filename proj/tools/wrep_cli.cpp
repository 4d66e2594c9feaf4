// Command line surface: pyramids, tableau calculus, Kazhdan-Lusztig tables,
// Gelfand-Tsetlin characters, decomposition matrices, classification
// predicates, and the explicit two-row module engine.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wrep/wrep.hpp"

namespace {

using namespace wrep;

std::size_t orbit_cap() {
    if (const char* env = std::getenv("WCHAR_MAX_ORBIT")) {
        long v = std::atol(env);
        if (v > 0) return (std::size_t)v;
    }
    return 5040;
}

std::vector<int> parse_heights(const std::string& s) {
    std::vector<int> q;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) q.push_back(std::stoi(tok));
    return q;
}

json parse_json_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw Error("parse", "cannot open " + arg.substr(1));
        return json::parse(in);
    }
    return json::parse(arg);
}

struct TableauInput {
    std::string tableau_json;  // inline JSON or @file
    std::string rows;          // "r1,..;r2,..;..." with --pyramid/--k/--n
    std::string pyramid;
    int k = -1;
    int n = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--tableau", tableau_json, "tableau as JSON (or @file)");
        cmd->add_option("--rows", rows, "rows, ';'-separated, entries ','-separated");
        cmd->add_option("--pyramid", pyramid, "column heights q1,...,ql");
        cmd->add_option("--k", k, "split index");
        cmd->add_option("--n", n, "number of rows");
    }

    Tableau get() const {
        if (!tableau_json.empty()) return tableau_from_json(parse_json_arg(tableau_json));
        if (rows.empty()) throw Error("parse", "need --tableau or --rows");
        if (pyramid.empty()) throw Error("parse", "--rows needs --pyramid");
        std::vector<int> q = parse_heights(pyramid);
        json j;
        j["q"] = q;
        j["k"] = k >= 0 ? k : default_split(q);
        int nn = n;
        if (nn == 0)
            for (int h : q) nn = std::max(nn, h);
        j["n"] = nn;
        json jr = json::array();
        std::stringstream ss(rows);
        std::string row;
        while (std::getline(ss, row, ';')) {
            json r = json::array();
            std::stringstream rs(row);
            std::string tok;
            while (std::getline(rs, tok, ',')) r.push_back(tok);
            jr.push_back(r);
        }
        j["rows"] = jr;
        return tableau_from_json(j);
    }
};

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path + ".tmp");
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
    out.close();
    std::rename((out_path + ".tmp").c_str(), out_path.c_str());
}

std::string key_label(const Pyramid& p, const std::vector<long long>& key) {
    std::string s;
    std::size_t pos = 0;
    for (int i = 1; i <= p.rows(); ++i) {
        if (i > 1) s += ";";
        for (int j = 0; j < p.row_length(i); ++j) {
            if (j) s += " ";
            s += std::to_string(key[pos++]);
        }
    }
    return s;
}

std::string gamma_label(const Tableau& t) {
    std::string s;
    for (int c = 1; c <= t.pyramid().levels(); ++c) {
        if (c > 1) s += "|";
        auto col = t.column(c);
        for (std::size_t i = 0; i < col.size(); ++i) s += (i ? " " : "") + col[i].to_string();
    }
    return s;
}

void content_window(const Content& cont, long long& lo, long long& hi) {
    bool first = true;
    for (const auto& [e, m] : cont) {
        if (!e.is_integer()) throw Error("integral_only", "this table needs integral entries");
        long long v = e.to_ll();
        lo = first ? v : std::min(lo, v);
        hi = first ? v : std::max(hi, v);
        first = false;
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact tableau, character and module computations for pyramids of type A"};
    app.require_subcommand(1);
    std::string out_path, format = "json";
    int depth = 4;
    app.add_option("--out", out_path, "write output to a file (atomically)");
    app.add_option("--format", format, "json|csv|dot");
    app.add_option("--depth", depth, "truncation depth for Verma characters");
    unsigned long long seed = 0;
    app.add_option("--seed", seed, "seed for randomized workflows (reserved)");

    auto* cmd_pyr = app.add_subcommand("pyramid", "derived data of a pyramid");
    std::string pyr_q;
    int pyr_k = -1, pyr_n = 0;
    cmd_pyr->add_option("--pyramid", pyr_q, "column heights q1,...,ql")->required();
    cmd_pyr->add_option("--k", pyr_k, "split index");
    cmd_pyr->add_option("--n", pyr_n, "number of rows");

    auto* cmd_rect = app.add_subcommand("rectify", "rectification of a standard tableau");
    TableauInput rect_in;
    rect_in.attach(cmd_rect);

    auto* cmd_bru = app.add_subcommand("bruhat", "compare two row tabloids in the row ordering");
    std::string bru_a, bru_b;
    cmd_bru->add_option("--a", bru_a, "tabloid A as tableau JSON")->required();
    cmd_bru->add_option("--b", bru_b, "tabloid B as tableau JSON")->required();

    auto* cmd_cry = app.add_subcommand("crystal", "crystal graph generated by a tableau");
    TableauInput cry_in;
    cry_in.attach(cmd_cry);
    long long cry_imin = 0, cry_imax = 0;
    std::size_t cry_budget = 5040;
    std::string cry_kind = "col";
    cmd_cry->add_option("--imin", cry_imin, "lowest arrow label");
    cmd_cry->add_option("--imax", cry_imax, "highest arrow label");
    cmd_cry->add_option("--budget", cry_budget, "node budget");
    cmd_cry->add_option("--kind", cry_kind, "col|row reading identification");

    auto* cmd_kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomials of a symmetric group");
    int kl_n = 0;
    std::vector<int> kl_x, kl_y;
    bool kl_all = false;
    cmd_kl->add_option("--n", kl_n, "rank of the symmetric group")->required();
    cmd_kl->add_option("--x", kl_x, "one-line notation of x");
    cmd_kl->add_option("--y", kl_y, "one-line notation of y");
    cmd_kl->add_flag("--all", kl_all, "emit the whole table");

    auto* cmd_vch = app.add_subcommand("verma-char", "Gelfand-Tsetlin character of a generalized Verma module");
    TableauInput vch_in;
    vch_in.attach(cmd_vch);

    auto* cmd_sch = app.add_subcommand("standard-char", "exact character of a standard module");
    TableauInput sch_in;
    sch_in.attach(cmd_sch);

    auto* cmd_dec = app.add_subcommand("decompose", "decomposition matrix of the content class of a tableau");
    TableauInput dec_in;
    dec_in.attach(cmd_dec);
    std::string dec_kind = "standard";
    cmd_dec->add_option("--kind", dec_kind, "standard|verma");

    auto* cmd_cls = app.add_subcommand("classify", "classification predicates of a tabloid");
    TableauInput cls_in;
    cls_in.attach(cmd_cls);

    auto* cmd_dr = app.add_subcommand("drinfeld", "Drinfeld polynomial data of a dominant tabloid");
    TableauInput dr_in;
    dr_in.attach(cmd_dr);

    auto* cmd_n2 = app.add_subcommand("n2", "explicit two-row module engine");
    auto* cmd_n2v = cmd_n2->add_subcommand("verify", "verify relations and compute the character");
    cmd_n2v->fallthrough();
    TableauInput n2_in;
    n2_in.attach(cmd_n2v);
    int n2_degree = 12;
    int n2_check_degree = 6;
    cmd_n2v->add_option("--degree", n2_degree, "series degree bound");
    cmd_n2v->add_option("--check-degree", n2_check_degree, "relation superscript bound");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (cmd_pyr->parsed()) {
        std::vector<int> q = parse_heights(pyr_q);
        int k = pyr_k >= 0 ? pyr_k : default_split(q);
        int n = pyr_n;
        if (n == 0)
            for (int h : q) n = std::max(n, h);
        Pyramid p(q, k, n);
        json j = pyramid_to_json(p);
        j["p"] = p.row_lengths();
        json sig = json::array(), big = json::array();
        for (int i = 1; i <= n; ++i) {
            json r1 = json::array(), r2 = json::array();
            for (int jj = 1; jj <= n; ++jj) {
                r1.push_back(p.shift(i, jj));
                r2.push_back(p.big_shift(i, jj));
            }
            sig.push_back(r1);
            big.push_back(r2);
        }
        j["sigma"] = sig;
        j["S"] = big;
        json boxes = json::array();
        for (int b = 1; b <= p.boxes(); ++b)
            boxes.push_back({{"box", b}, {"row", p.box_row(b)}, {"col", p.box_col(b)}});
        j["boxes"] = boxes;
        emit(out_path, j.dump(2));
        return 0;
    }

    if (cmd_rect->parsed()) {
        emit(out_path, tabloid_to_json(rectify(rect_in.get())).dump(2));
        return 0;
    }

    if (cmd_bru->parsed()) {
        RowTabloid a = tabloid_from_json(parse_json_arg(bru_a));
        RowTabloid b = tabloid_from_json(parse_json_arg(bru_b));
        json j;
        j["b_leq_a"] = bruhat_leq(b, a);
        j["a_leq_b"] = bruhat_leq(a, b);
        emit(out_path, j.dump(2));
        return 0;
    }

    if (cmd_cry->parsed()) {
        Tableau t = cry_in.get();
        CrystalWeight seed = cry_kind == "row" ? to_weight(row_reading(row_class(t))) : to_weight(column_reading(t));
        CrystalGraph g = crystal_graph({seed}, cry_imin, cry_imax, cry_budget);
        const Pyramid& p = t.pyramid();
        auto node_json = [&](const CrystalWeight& w) {
            if (cry_kind == "row") {
                std::vector<std::vector<Entry>> rows;
                std::size_t pos = 0;
                for (int i = 1; i <= p.rows(); ++i) {
                    std::vector<Entry> r;
                    for (int j2 = 0; j2 < p.row_length(i); ++j2) r.push_back(Rational(w[pos++]));
                    rows.push_back(r);
                }
                return tabloid_to_json(RowTabloid(p, rows));
            }
            return tableau_to_json(Tableau(p, from_weight(w)));
        };
        if (format == "dot") {
            std::string dot = "digraph crystal {\n";
            std::vector<std::string> ids;
            for (const auto& w : g.nodes) {
                json nj = node_json(w);
                std::string id = "n" + content_hash(nj.dump());
                ids.push_back(id);
                std::string label = nj["rows"].dump();
                for (auto& ch : label)
                    if (ch == '"') ch = '\'';
                dot += "  " + id + " [label=\"" + label + "\"];\n";
            }
            for (const auto& e : g.edges)
                dot += "  " + ids[e[0]] + " -> " + ids[e[1]] + " [label=\"" + std::to_string(e[2]) + "\"];\n";
            dot += "}\n";
            emit(out_path, dot);
        } else {
            json nodes = json::array(), edges = json::array();
            for (const auto& w : g.nodes) nodes.push_back(node_json(w));
            for (const auto& e : g.edges) edges.push_back({e[0], e[1], e[2]});
            emit(out_path, json{{"nodes", nodes}, {"edges", edges}}.dump(2));
        }
        return 0;
    }

    if (cmd_kl->parsed()) {
        KLTable kl(kl_n);
        if (kl_all) {
            json rows = json::array();
            for (const Perm& x : all_perms(kl_n))
                for (const Perm& y : all_perms(kl_n)) {
                    if (!bruhat_leq_perm(x, y)) continue;
                    rows.push_back({{"x", x}, {"y", y}, {"P", kl.poly(x, y)}});
                }
            if (format == "csv") {
                std::string csv = "x,y,P\n";
                for (const auto& r : rows) {
                    auto join = [](const json& v) {
                        std::string s;
                        for (const auto& t : v) s += std::to_string((int)t);
                        return s;
                    };
                    IntPoly p = r["P"].get<IntPoly>();
                    csv += join(r["x"]) + "," + join(r["y"]) + "," + ipoly_to_string(p) + "\n";
                }
                emit(out_path, csv);
            } else {
                emit(out_path, json{{"table", rows}}.dump(2));
            }
        } else {
            if ((int)kl_x.size() != kl_n || (int)kl_y.size() != kl_n)
                throw Error("parse", "--x and --y must be one-line notations of length n");
            json j;
            j["P"] = kl.poly(kl_x, kl_y);
            j["pretty"] = ipoly_to_string(kl.poly(kl_x, kl_y));
            emit(out_path, j.dump(2));
        }
        return 0;
    }

    if (cmd_vch->parsed()) {
        Tableau t = vch_in.get();
        emit(out_path, character_to_json(verma_character(row_class(t), depth)).dump(2));
        return 0;
    }

    if (cmd_sch->parsed()) {
        GTCharacter ch = standard_character(sch_in.get());
        json j = character_to_json(ch);
        j["dimension"] = ch.dimension();
        emit(out_path, j.dump(2));
        return 0;
    }

    if (cmd_dec->parsed()) {
        Tableau t = dec_in.get();
        const Pyramid& p = t.pyramid();
        if (p.boxes() > 8) throw Error("size_limit", "decomposition tables are limited to N <= 8");
        KLTable kl(p.boxes());
        Content cont = content(t);
        long long lo = 0, hi = 0;
        content_window(cont, lo, hi);
        if (dec_kind == "verma") {
            // multiplicities [M(A):L(B)] from the Kazhdan-Lusztig prediction;
            // proved for a single column, conjectural otherwise
            bool conjectural = p.levels() > 1;
            auto rows = enumerate_row0(p, lo, hi, cont);
            std::string csv =
                conjectural ? "# conjectural multiplicities [M(A):L(B)]\n" : "# multiplicities [M(A):L(B)]\n";
            csv += "A\\B";
            for (const auto& b : rows) csv += "," + key_label(p, integral_rho(b));
            csv += "\n";
            for (const auto& a : rows) {
                csv += key_label(p, integral_rho(a));
                SymVector exp = expand_MA_in_LB(integral_rho(a), p, kl, orbit_cap());
                for (const auto& b : rows) {
                    auto it = exp.find(integral_rho(b));
                    csv += "," + std::to_string(it == exp.end() ? 0 : it->second);
                }
                csv += "\n";
            }
            emit(out_path, csv);
        } else {
            auto stds = enumerate_std0(p, lo, hi, cont);
            auto doms = enumerate_dom0(p, lo, hi, cont);
            std::string csv = "A\\B";
            for (const auto& b : doms) csv += "," + key_label(p, integral_rho(b));
            csv += "\n";
            for (const auto& a : stds) {
                csv += gamma_label(a);
                SymVector dec = decompose_standard(a, kl, orbit_cap());
                for (const auto& b : doms) {
                    auto it = dec.find(integral_rho(b));
                    csv += "," + std::to_string(it == dec.end() ? 0 : it->second);
                }
                csv += "\n";
            }
            emit(out_path, csv);
        }
        return 0;
    }

    if (cmd_cls->parsed()) {
        Tableau t = cls_in.get();
        RowTabloid a = row_class(t);
        json j;
        bool dom = is_dominant(a);
        j["dominant"] = dom;
        j["verma_irreducible"] = verma_is_irreducible(a);
        if (dom) {
            DrinfeldData d = drinfeld_data(a);
            json dr;
            dr["P"] = json::array();
            dr["Q"] = json::array();
            dr["d"] = d.d;
            for (const auto& pp : d.P) dr["P"].push_back(pp.to_string());
            for (const auto& qq : d.Q) dr["Q"].push_back(qq.to_string());
            j["drinfeld"] = dr;
        } else {
            j["drinfeld"] = nullptr;
        }
        if (is_column_strict(t)) {
            j["separated"] = is_separated(t);
            bool integral = true;
            for (const Entry& e : t.boxes()) integral &= e.is_integer();
            if (integral && t.pyramid().boxes() <= 8) {
                KLTable kl(t.pyramid().boxes());
                j["standard_irreducible"] = standard_is_irreducible(t, kl, orbit_cap());
            }
        }
        emit(out_path, j.dump(2));
        return 0;
    }

    if (cmd_dr->parsed()) {
        DrinfeldData d = drinfeld_data(row_class(dr_in.get()));
        json j;
        j["P"] = json::array();
        j["Q"] = json::array();
        j["d"] = d.d;
        for (const auto& pp : d.P) j["P"].push_back(pp.to_string());
        for (const auto& qq : d.Q) j["Q"].push_back(qq.to_string());
        emit(out_path, j.dump(2));
        return 0;
    }

    if (cmd_n2->parsed() && cmd_n2v->parsed()) {
        Tableau t = n2_in.get();
        SeriesAction s = standard_module_action(t, n2_degree);
        RelationReport rep = verify_relations(s, n2_check_degree);
        json j;
        j["dimension"] = s.dim;
        j["relations_ok"] = rep.ok();
        j["violations"] = rep.violations;
        j["character"] = character_to_json(gt_character(s));
        j["irreducible"] = is_irreducible(s, t.pyramid());
        json hw = json::array();
        for (const auto& [v, type] : highest_weight_vectors(s, t.pyramid())) hw.push_back(tabloid_to_json(type));
        j["highest_weight_types"] = hw;
        emit(out_path, j.dump(2));
        return 0;
    }

    throw Error("parse", "no subcommand executed");
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const wrep::Error& e) {
        wrep::json err;
        err["error"] = e.code();
        err["detail"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        wrep::json err;
        err["error"] = "internal";
        err["detail"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
