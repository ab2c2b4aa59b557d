#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "ribbontab/json_io.hpp"

using namespace ribbontab;
using nlohmann::json;

namespace {

struct Options {
    bool text = false;  // render polynomials/expansions as text instead of JSON

    std::string shape, inner, weight, mu, lambda, word, of, index, compose, basis = "schur";
    std::string op, state, identity, stat;
    int k = 1, r = 0, n = 2, i = 0, max_size = 0;
    bool tilde = false, spins = false, json_out = false;
};

void emit_symfunc(const SymFunc& f, bool text) {
    if (text)
        std::cout << symfunc_to_string(f) << "\n";
    else
        std::cout << symfunc_to_json(f).dump() << "\n";
}

void emit_poly(const LaurentPoly& p, bool text) {
    if (text)
        std::cout << p.to_string() << "\n";
    else
        std::cout << laurent_to_json(p).dump() << "\n";
}

std::string chain_str(const RibbonTableau& T) {
    std::string s;
    for (size_t i = 0; i < T.chain.size(); ++i) {
        if (i) s += " < ";
        s += "(" + partition_to_string(T.chain[i]) + ")";
    }
    return s;
}

int run_core(const Options& o) {
    auto cq = core_quotient(partition_from_string(o.shape), o.k);
    if (o.text)
        std::cout << partition_to_string(cq.core) << "\n";
    else
        std::cout << json(cq.core).dump() << "\n";
    return 0;
}

int run_quotient(const Options& o) {
    auto cq = core_quotient(partition_from_string(o.shape), o.k);
    if (o.text) {
        for (const auto& comp : cq.quotient) std::cout << partition_to_string(comp) << "\n";
    } else {
        std::cout << json(cq.quotient).dump() << "\n";
    }
    return 0;
}

int run_ribbon_tableaux(const Options& o) {
    Partition outer = partition_from_string(o.shape);
    Partition inner = partition_from_string(o.inner);
    int cells = size_of(outer) - size_of(inner);
    if (cells < 0 || cells % o.k != 0)
        throw CLI::ValidationError("ribbon-tableaux", "shape/inner is not tileable by k-ribbons");
    Composition weight = o.weight.empty() ? Composition(cells / o.k, 1)
                                          : composition_from_string(o.weight);
    auto tabs = enumerate_ribbon_tableaux(outer, inner, o.k, weight);
    if (o.text) {
        for (const auto& T : tabs) {
            std::cout << chain_str(T);
            if (o.spins) std::cout << "  spin2=" << T.spin2();
            std::cout << "\n";
        }
    } else {
        json arr = json::array();
        for (const auto& T : tabs) {
            json j = ribbon_to_json(T);
            if (o.spins) j["spin2"] = T.spin2();
            arr.push_back(j);
        }
        std::cout << arr.dump() << "\n";
    }
    return 0;
}

int run_hfun(const Options& o) {
    emit_symfunc(hfun(partition_from_string(o.mu), o.k, basis_from_string(o.basis)), o.text);
    return 0;
}

int run_gfun(const Options& o) {
    emit_symfunc(gfun_tilde(partition_from_string(o.shape), o.k), o.text);
    return 0;
}

int run_qprime(const Options& o) {
    Partition mu = partition_from_string(o.mu);
    emit_symfunc(convert(o.tilde ? qprime_tilde(mu) : hall_littlewood_qprime(mu), Basis::schur),
                 o.text);
    return 0;
}

int run_kostka_foulkes(const Options& o) {
    Partition lam = partition_from_string(o.lambda);
    Partition mu = partition_from_string(o.mu);
    LaurentPoly p = o.inner.empty() ? kostka_foulkes(lam, mu)
                                    : skew_kostka_foulkes(lam, partition_from_string(o.inner), mu);
    emit_poly(p, o.text);
    return 0;
}

int run_charge(const Options& o) {
    std::cout << charge(word_from_string(o.word)) << "\n";
    return 0;
}

int run_plethysm(const Options& o) {
    Basis b = o.of == "h" ? Basis::complete : Basis::schur;
    SymFunc inner = convert(SymFunc::single(b, partition_from_string(o.index)), Basis::powersum);
    emit_symfunc(convert(plethysm_power(inner, o.k), Basis::schur), o.text);
    return 0;
}

int run_cyclic(const Options& o) {
    SymFunc l = cyclic_character(o.k, o.r);
    if (!o.compose.empty()) {
        auto colon = o.compose.find(':');
        if (colon == std::string::npos || (o.compose[0] != 's' && o.compose[0] != 'h'))
            throw CLI::ValidationError("cyclic", "--compose-with expects s:P or h:P");
        Basis b = o.compose[0] == 's' ? Basis::schur : Basis::complete;
        SymFunc f = SymFunc::single(b, partition_from_string(o.compose.substr(colon + 1)));
        l = plethysm_compose(l, f);
    }
    emit_symfunc(convert(l, Basis::schur), o.text);
    return 0;
}

int run_fock_hwv(const Options& o) {
    FockVector v = psi_q(o.n, partition_from_string(o.mu));
    std::cout << fock_to_json(v).dump() << "\n";
    return 0;
}

int run_fock_act(const Options& o) {
    std::ifstream in(o.state);
    if (!in) throw CLI::ValidationError("fock act", "cannot read state file " + o.state);
    FockVector v = fock_from_json(json::parse(in));
    if (v.n != o.n) throw CLI::ValidationError("fock act", "state modulus differs from --n");
    FockVector out(o.n);
    if (o.op == "e")
        out = e_action(o.i, v);
    else if (o.op == "f")
        out = f_action(o.i, v);
    else if (o.op == "qh")
        out = qh_action(o.i, v);
    else if (o.op == "qd")
        out = qd_action(v);
    else if (o.op == "U")
        out = u_op(o.i, v);
    else if (o.op == "V")
        out = v_op(o.i, v);
    std::cout << fock_to_json(out).dump() << "\n";
    return 0;
}

int run_tabloids(const Options& o) {
    Composition shape = composition_from_string(o.shape);
    Composition weight = composition_from_string(o.weight);
    auto all = enumerate_tabloids(shape, weight);
    LaurentPoly gen;
    json arr = json::array();
    for (const auto& t : all) {
        long v;
        if (o.stat == "d")
            v = dim_d(t);
        else if (o.stat == "e")
            v = dim_e(t);
        else if (o.stat == "inv")
            v = e_inversions(t);
        else
            v = cocharge(t.reading_word());
        gen += LaurentPoly::monomial(static_cast<int>(v));
        if (o.text) {
            for (const auto& row : t.rows) {
                std::cout << "(";
                for (size_t i = 0; i < row.size(); ++i)
                    std::cout << (i ? "," : "") << row[i];
                std::cout << ")";
            }
            std::cout << "  " << o.stat << "=" << v << "\n";
        } else {
            json j = tabloid_to_json(t);
            j["value"] = v;
            arr.push_back(j);
        }
    }
    if (o.text)
        std::cout << "poly: " << gen.to_string() << "\n";
    else
        std::cout << json{{"stat", o.stat}, {"tabloids", arr}, {"poly", laurent_to_json(gen)}}
                         .dump()
                  << "\n";
    return 0;
}

int run_check(const Options& o) {
    IdentityReport rep = verify(o.identity, o.max_size, o.k);
    if (!rep.pass) {
        std::cout << report_to_json(rep).dump() << "\n";
        return 1;
    }
    if (o.json_out)
        std::cout << report_to_json(rep).dump() << "\n";
    else
        std::cout << rep.id << ": pass (" << rep.bounds << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact ribbon-tableau computer algebra"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--text", o.text, "render output as text instead of JSON");

    auto* core = app.add_subcommand("core", "k-core of a partition");
    core->add_option("--k", o.k)->required();
    core->add_option("--shape", o.shape)->required();

    auto* quot = app.add_subcommand("quotient", "k-quotient of a partition");
    quot->add_option("--k", o.k)->required();
    quot->add_option("--shape", o.shape)->required();

    auto* rt = app.add_subcommand("ribbon-tableaux", "enumerate k-ribbon tableaux");
    rt->add_option("--k", o.k)->required();
    rt->add_option("--shape", o.shape)->required();
    rt->add_option("--inner", o.inner);
    rt->add_option("--weight", o.weight);
    rt->add_flag("--spins", o.spins);

    auto* hf = app.add_subcommand("hfun", "spin generating function H of level k");
    hf->add_option("--k", o.k)->required();
    hf->add_option("--mu", o.mu)->required();
    hf->add_option("--basis", o.basis)->check(CLI::IsMember({"schur", "monomial"}));

    auto* gf = app.add_subcommand("gfun", "cospin generating function of a shape");
    gf->add_option("--k", o.k)->required();
    gf->add_option("--shape", o.shape)->required();

    auto* qp = app.add_subcommand("qprime", "modified Hall-Littlewood function");
    qp->add_option("--mu", o.mu)->required();
    qp->add_flag("--tilde", o.tilde);

    auto* kf = app.add_subcommand("kostka-foulkes", "Kostka-Foulkes polynomial");
    kf->add_option("--lambda", o.lambda)->required();
    kf->add_option("--mu", o.mu)->required();
    kf->add_option("--inner", o.inner);

    auto* ch = app.add_subcommand("charge", "charge of a word");
    ch->add_option("--word", o.word)->required();

    auto* pl = app.add_subcommand("plethysm", "p_k plethysm of h or s");
    pl->add_option("--k", o.k)->required();
    pl->add_option("--of", o.of)->required()->check(CLI::IsMember({"h", "s"}));
    pl->add_option("--index", o.index)->required();

    auto* cy = app.add_subcommand("cyclic", "cyclic character, optionally composed");
    cy->add_option("--k", o.k)->required();
    cy->add_option("--r", o.r)->required();
    cy->add_option("--compose-with", o.compose);

    auto* fock = app.add_subcommand("fock", "q-Fock space operations");
    fock->require_subcommand(1);
    auto* hwv = fock->add_subcommand("hwv", "highest weight vector for h_mu");
    hwv->add_option("--n", o.n)->required();
    hwv->add_option("--mu", o.mu)->required();
    auto* act = fock->add_subcommand("act", "apply an operator to a state");
    act->add_option("--n", o.n)->required();
    act->add_option("--op", o.op)->required()
        ->check(CLI::IsMember({"e", "f", "qh", "qd", "U", "V"}));
    act->add_option("--i", o.i);
    act->add_option("--state", o.state)->required();

    auto* tab = app.add_subcommand("tabloids", "tabloid statistics");
    tab->add_option("--shape", o.shape)->required();
    tab->add_option("--weight", o.weight)->required();
    tab->add_option("--stat", o.stat)->required()
        ->check(CLI::IsMember({"d", "e", "inv", "cocharge"}));

    auto* chk = app.add_subcommand("check", "verify a named identity");
    chk->add_option("identity", o.identity)->required();
    chk->add_option("--max-size", o.max_size)->required();
    chk->add_option("--k", o.k);
    chk->add_flag("--json", o.json_out);
    o.k = 0;  // check: level range defaults unless --k given

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*core) return run_core(o);
        if (*quot) return run_quotient(o);
        if (*rt) return run_ribbon_tableaux(o);
        if (*hf) return run_hfun(o);
        if (*gf) return run_gfun(o);
        if (*qp) return run_qprime(o);
        if (*kf) return run_kostka_foulkes(o);
        if (*ch) return run_charge(o);
        if (*pl) return run_plethysm(o);
        if (*cy) return run_cyclic(o);
        if (*hwv) return run_fock_hwv(o);
        if (*act) return run_fock_act(o);
        if (*tab) return run_tabloids(o);
        if (*chk) return run_check(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
