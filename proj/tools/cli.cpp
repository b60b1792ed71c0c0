#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "indep/dag.hpp"
#include "indep/error.hpp"
#include "indep/il.hpp"
#include "indep/model.hpp"
#include "indep/repro.hpp"
#include "indep/representability.hpp"
#include "indep/ugraph.hpp"

namespace indep::cli {

namespace {

using nlohmann::json;

/// Input problem to report with exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <class T, class Parse>
T load(const std::string& path, Parse&& parse) {
    const std::string text = read_file(path);
    try {
        return parse(text);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError(path + ": cannot write file");
    file << text;
}

json set_json(const Universe& u, VarSet s) {
    json arr = json::array();
    s.for_each([&](std::size_t i) { arr.push_back(u.name(i)); });
    return arr;
}

json triple_json(const Universe& u, const Triple& t) {
    return json{{"A", set_json(u, t.a)}, {"C", set_json(u, t.c)}, {"B", set_json(u, t.b)}};
}

json model_json(const IndependencyModel& m) {
    json triples = json::array();
    for (const auto& t : m) triples.push_back(triple_json(m.universe(), t));
    return json{{"vars", m.universe().names()}, {"triples", triples}};
}

/// Parses "<set> | <set> | <set>" where a set may be blank, "-" or labels.
Triple parse_query_triple(const Universe& u, const std::string& text) {
    std::vector<std::string> fields;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, '|')) fields.push_back(field);
    if (!text.empty() && text.back() == '|') fields.emplace_back();
    if (fields.size() != 3) throw InputError("query must have the form '<set> | <set> | <set>'");
    auto strip = [](std::string s) {
        s.erase(0, s.find_first_not_of(" \t"));
        s.erase(s.find_last_not_of(" \t") + 1);
        return s;
    };
    const Triple t{u.parse_set(strip(fields[0])), u.parse_set(strip(fields[1])), u.parse_set(strip(fields[2]))};
    if (!t.pairwise_disjoint()) throw InputError("query sets are not pairwise disjoint");
    return t;
}

struct SeparationQuery {
    std::string file;
    std::string a;
    std::string c;
    std::string b;
};

Triple query_triple(const Universe& u, const SeparationQuery& q) {
    const Triple t{u.parse_set(q.a), u.parse_set(q.c), u.parse_set(q.b)};
    if (!t.pairwise_disjoint()) throw InputError("A, C and B must be pairwise disjoint");
    return t;
}

void add_query_options(CLI::App* cmd, SeparationQuery& q, const std::string& file_flag, const std::string& what) {
    cmd->add_option(file_flag, q.file, what)->required();
    cmd->add_option("--A", q.a, "first set (comma-separated labels; empty or '-' for none)");
    cmd->add_option("--C", q.c, "conditioning set");
    cmd->add_option("--B", q.b, "second set");
}

int report_decision(std::ostream& out, bool json_out, bool yes, const std::string& yes_word,
                    const std::string& no_word, json payload) {
    if (json_out) {
        payload["result"] = yes ? yes_word : no_word;
        out << payload.dump(2) << "\n";
    } else {
        out << (yes ? yes_word : no_word) << "\n";
    }
    return yes ? kYes : kNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Independency models: graph separation, d-separation, representability and IL model checking",
                 "indep"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "emit a machine-readable JSON report");

    std::function<int()> action;

    // graph
    auto* graph = app.add_subcommand("graph", "undirected graph queries")->require_subcommand(1);
    SeparationQuery graph_q;
    auto* graph_sep = graph->add_subcommand("sep", "is A separated from B by C?");
    add_query_options(graph_sep, graph_q, "--graph", "graph file");
    graph_sep->callback([&] {
        action = [&] {
            const auto g = load<UndirectedGraph>(graph_q.file, parse_graph);
            const Triple t = query_triple(g.universe(), graph_q);
            return report_decision(out, json_out, separates(g, t), "SEPARATED", "CONNECTED",
                                   json{{"query", triple_json(g.universe(), t)}, {"separated", separates(g, t)}});
        };
    });
    std::string graph_file;
    std::string model_out;
    auto* graph_model = graph->add_subcommand("model", "dump the separation model of a graph");
    graph_model->add_option("--graph", graph_file, "graph file")->required();
    graph_model->add_option("--out", model_out, "write the model here instead of stdout");
    graph_model->callback([&] {
        action = [&] {
            const auto m = separation_model(load<UndirectedGraph>(graph_file, parse_graph));
            write_output(json_out ? model_json(m).dump(2) + "\n" : print_model(m), model_out, out);
            return int{kYes};
        };
    });

    // dag
    auto* dag = app.add_subcommand("dag", "DAG queries")->require_subcommand(1);
    SeparationQuery dag_q;
    auto* dag_dsep = dag->add_subcommand("dsep", "is A d-separated from B by C?");
    add_query_options(dag_dsep, dag_q, "--dag", "DAG file");
    dag_dsep->callback([&] {
        action = [&] {
            const auto d = load<Dag>(dag_q.file, parse_dag);
            const Triple t = query_triple(d.universe(), dag_q);
            const bool sep = d_separates(d, t);
            return report_decision(out, json_out, sep, "SEPARATED", "CONNECTED",
                                   json{{"query", triple_json(d.universe(), t)}, {"separated", sep}});
        };
    });
    std::string dag_file;
    auto* dag_model = dag->add_subcommand("model", "dump the d-separation model of a DAG");
    dag_model->add_option("--dag", dag_file, "DAG file")->required();
    dag_model->add_option("--out", model_out, "write the model here instead of stdout");
    dag_model->callback([&] {
        action = [&] {
            const auto m = dsep_model(load<Dag>(dag_file, parse_dag));
            write_output(json_out ? model_json(m).dump(2) + "\n" : print_model(m), model_out, out);
            return int{kYes};
        };
    });

    // model
    auto* model = app.add_subcommand("model", "independency model operations")->require_subcommand(1);
    std::string model_file;
    std::string restrict_vars;
    auto* model_restrict = model->add_subcommand("restrict", "sub-model on a subset of the variables");
    model_restrict->add_option("--model", model_file, "model file")->required();
    model_restrict->add_option("--vars", restrict_vars, "comma-separated labels to keep")->required();
    model_restrict->add_option("--out", model_out, "write the model here instead of stdout");
    model_restrict->callback([&] {
        action = [&] {
            const auto m = load<IndependencyModel>(model_file, parse_model);
            const VarSet v = m.universe().parse_set(restrict_vars);
            if (v.empty()) throw InputError("--vars must name at least one variable");
            const auto sub = restrict(m, v);
            write_output(json_out ? model_json(sub).dump(2) + "\n" : print_model(sub), model_out, out);
            return int{kYes};
        };
    });
    std::string model_class;
    auto* model_check = model->add_subcommand("check", "decide membership in a model class");
    model_check->add_option("--model", model_file, "model file")->required();
    model_check->add_option("--class", model_class, "model class")
        ->required()
        ->check(CLI::IsMember({"causal", "graph-isomorph", "semigraphoid"}));
    model_check->callback([&] {
        action = [&]() -> int {
            const auto m = load<IndependencyModel>(model_file, parse_model);
            const Universe& u = m.universe();
            if (model_class == "semigraphoid") {
                const auto violations = check_semigraphoid(m);
                const bool ok = violations.empty();
                json list = json::array();
                for (const auto& v : violations) {
                    json ante = json::array();
                    for (const auto& t : v.antecedents) ante.push_back(format_triple(u, t));
                    list.push_back({{"axiom", axiom_name(v.axiom)},
                                    {"antecedents", ante},
                                    {"missing", format_triple(u, v.missing)}});
                }
                if (json_out) {
                    out << json{{"class", model_class}, {"semigraphoid", ok}, {"violations", list}}.dump(2) << "\n";
                } else {
                    out << (ok ? "SEMIGRAPHOID" : "NOT SEMIGRAPHOID") << "\n";
                    for (const auto& v : violations) {
                        out << "violation: " << axiom_name(v.axiom) << ": missing " << format_triple(u, v.missing)
                            << "\n";
                    }
                }
                return ok ? kYes : kNo;
            }
            std::string witness;
            std::optional<Triple> discrepancy;
            std::size_t scanned = 0;
            bool representable = false;
            if (model_class == "causal") {
                const auto r = is_causal(m);
                representable = r.representable();
                if (representable) witness = print_dag(*r.witness);
                scanned = r.candidates_scanned;
            } else {
                const auto r = is_graph_isomorph(m);
                representable = r.representable();
                if (representable) witness = print_graph(*r.witness);
                discrepancy = r.first_discrepancy;
                scanned = r.candidates_scanned;
            }
            if (json_out) {
                json j{{"class", model_class},
                       {"representable", representable},
                       {"candidates_scanned", scanned},
                       {"witness", representable ? json(witness) : json(nullptr)},
                       {"first_discrepancy", discrepancy ? json(format_triple(u, *discrepancy)) : json(nullptr)}};
                out << j.dump(2) << "\n";
            } else {
                out << (representable ? "REPRESENTABLE" : "NOT REPRESENTABLE") << "\n";
                if (representable) out << witness;
                if (discrepancy) out << "first discrepancy: " << format_triple(u, *discrepancy) << "\n";
            }
            return representable ? kYes : kNo;
        };
    });

    // formula
    auto* formula = app.add_subcommand("formula", "independency-logic formulas")->require_subcommand(1);
    std::string formula_text;
    auto* formula_eval = formula->add_subcommand("eval", "does the model satisfy the formula?");
    formula_eval->add_option("--model", model_file, "model file")->required();
    formula_eval->add_option("--formula", formula_text, "formula text, or a file containing it")->required();
    formula_eval->callback([&] {
        action = [&] {
            const auto m = load<IndependencyModel>(model_file, parse_model);
            std::string text = formula_text;
            std::error_code ec;
            if (std::filesystem::is_regular_file(formula_text, ec)) text = read_file(formula_text);
            il::Formula f;
            try {
                f = il::parse_formula(text);
            } catch (const ParseError& e) {
                throw InputError(std::string("formula: ") + e.what());
            }
            const bool sat = il::model_satisfies(m, f);
            return report_decision(out, json_out, sat, "SATISFIED", "NOT SATISFIED",
                                   json{{"formula", il::print(f)}, {"satisfied", sat}});
        };
    });
    std::string family;
    std::string given_file;
    std::string query;
    auto* formula_entails = formula->add_subcommand("entails", "semantic entailment over a model family");
    formula_entails->add_option("--family", family, "causal, graph-isomorph or all-models")
        ->required()
        ->check(CLI::IsMember({"causal", "graph-isomorph", "all-models"}));
    formula_entails->add_option("--given", given_file, "model file listing the premises")->required();
    formula_entails->add_option("--query", query, "conclusion as '<set> | <set> | <set>'")->required();
    formula_entails->callback([&] {
        action = [&] {
            const auto given = load<IndependencyModel>(given_file, parse_model);
            const Triple q = parse_query_triple(given.universe(), query);
            const std::vector<Triple> premises(given.begin(), given.end());
            const bool yes = il::entails(il::parse_family(family), premises, q, given.universe());
            return report_decision(out, json_out, yes, "ENTAILED", "NOT ENTAILED",
                                   json{{"family", family},
                                        {"query", format_triple(given.universe(), q)},
                                        {"entailed", yes}});
        };
    });

    // enum
    auto* enumerate = app.add_subcommand("enum", "enumerate labelled structures")->require_subcommand(1);
    std::size_t enum_n = 0;
    bool count_only = false;
    auto add_enum = [&](const std::string& name, const std::string& help, bool dags) {
        auto* cmd = enumerate->add_subcommand(name, help);
        cmd->add_option("--n", enum_n, "number of variables (labelled 0..n-1)")->required()->check(CLI::Range(1, 16));
        cmd->add_flag("--count", count_only, "print only the number of structures");
        cmd->callback([&, dags] {
            action = [&, dags] {
                const Universe u = Universe::numbered(enum_n);
                std::vector<std::string> items;
                std::size_t count = 0;
                auto record = [&](std::string text) {
                    ++count;
                    if (!count_only) items.push_back(std::move(text));
                };
                auto arcs_text = [&](const auto& pairs, const char* sep) {
                    std::string s;
                    for (auto [x, y] : pairs) s += (s.empty() ? "" : " ") + u.name(x) + sep + u.name(y);
                    return s.empty() ? std::string("(none)") : s;
                };
                if (dags) {
                    for_each_dag(u, [&](const Dag& d) {
                        record(arcs_text(d.arcs(), "->"));
                        return true;
                    });
                } else {
                    for (const auto& g : enumerate_undirected_graphs(u)) record(arcs_text(g.edges(), "--"));
                }
                if (json_out) {
                    json j{{"n", enum_n}, {"count", count}};
                    if (!count_only) j["items"] = items;
                    out << j.dump(2) << "\n";
                } else {
                    if (!count_only) {
                        for (const auto& s : items) out << s << "\n";
                    }
                    out << count << "\n";
                }
                return int{kYes};
            };
        });
    };
    add_enum("dags", "enumerate labelled DAGs", true);
    add_enum("graphs", "enumerate labelled undirected graphs", false);

    // repro
    auto* repro = app.add_subcommand("repro", "reproduction runs")->require_subcommand(1);
    auto* repro_cx = repro->add_subcommand("counterexample",
                                           "show a causal model with a non-causal sub-model");
    repro_cx->callback([&] {
        action = [&] {
            const ReproReport r = verify_counterexample();
            if (json_out) {
                json statements = json::array();
                for (const auto& s : r.statements) statements.push_back({{"statement", s.statement}, {"holds", s.holds}});
                json j{{"statements", statements},
                       {"dags_scanned", r.dag_count_scanned},
                       {"causal_witness", r.causal_witness_found},
                       {"semigraphoid_ok", r.semigraphoid_ok},
                       {"full_model_causal", r.full_model_causal},
                       {"reproduced", r.reproduced()}};
                out << j.dump(2) << "\n";
            } else {
                out << "DAG D on {0,1,2,3,4}:\n" << print_dag(build_counterexample_dag());
                out << "statements in M|{1,2,3,4}:\n";
                for (const auto& s : r.statements) out << "  " << s.statement << ": " << (s.holds ? "holds" : "FAILS") << "\n";
                out << "full model M causal: " << (r.full_model_causal ? "yes" : "no") << "\n";
                out << "DAGs on 4 nodes scanned: " << r.dag_count_scanned << "\n";
                out << "causal witness for M|{1,2,3,4}: " << (r.causal_witness_found ? "found" : "none") << "\n";
                out << "semi-graphoid axioms hold in M|{1,2,3,4}: " << (r.semigraphoid_ok ? "yes" : "no") << "\n";
                out << (r.reproduced() ? "REPRODUCED" : "NOT REPRODUCED") << "\n";
            }
            return r.reproduced() ? kYes : kNo;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kYes : kUsage;
    }

    try {
        return action();
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
    }
    return kUsage;
}

}  // namespace indep::cli
