#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "skeinlab/fdr.hpp"
#include "skeinlab/fermions.hpp"
#include "skeinlab/numbers.hpp"
#include "skeinlab/quadring.hpp"
#include "skeinlab/repsym.hpp"
#include "skeinlab/setpart.hpp"
#include "skeinlab/skein.hpp"
#include "skeinlab/verify.hpp"

namespace {

using namespace skeinlab;
using nlohmann::json;

enum class Format { Human, Tsv, JsonLines };

Format parse_format(const std::string& s) {
    if (s == "human") return Format::Human;
    if (s == "tsv") return Format::Tsv;
    if (s == "json-lines") return Format::JsonLines;
    throw CLI::ValidationError("--format must be one of human, tsv, json-lines");
}

void print_terms(Format fmt, const std::vector<std::pair<std::string, std::string>>& rows,
                 const char* value_key) {
    if (fmt == Format::Tsv) {
        for (const auto& [coeff, value] : rows) std::cout << coeff << "\t" << value << "\n";
        return;
    }
    if (fmt == Format::JsonLines) {
        for (const auto& [coeff, value] : rows) {
            json line;
            line["coeff"] = coeff;
            line[value_key] = value;
            std::cout << line.dump() << "\n";
        }
        return;
    }
    size_t width = 0;
    for (const auto& [coeff, value] : rows) width = std::max(width, coeff.size());
    for (const auto& [coeff, value] : rows)
        std::cout << std::string(width - coeff.size(), ' ') << coeff << " * " << value << "\n";
}

std::vector<std::pair<std::string, std::string>> ncvector_rows(const skein::NCVector& v) {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [pi, c] : v.terms())
        rows.push_back({c.get_str(), format_set_partition(pi)});
    return rows;
}

int thread_count(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("SKEINLAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skeinlab: exact skein calculus on noncrossing set partitions"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "tsv";
    int threads_flag = 0;
    app.add_option("--format", format_name, "output mode: human, tsv, json-lines")
        ->capture_default_str();
    app.add_option("--threads", threads_flag,
                   "worker threads for verify (or SKEINLAB_THREADS)");

    std::string resolve_input, resolve_route = "greedy";
    auto* cmd_resolve = app.add_subcommand("resolve", "resolve crossings of a set partition");
    cmd_resolve->add_option("partition", resolve_input, "e.g. \"1 3 / 2 4\"")->required();
    cmd_resolve->add_option("--route", resolve_route, "greedy or algebraic")
        ->capture_default_str();

    std::string act_perm, act_partition;
    auto* cmd_act = app.add_subcommand("act", "apply a permutation through the skein action");
    cmd_act->add_option("permutation", act_perm, "one-line \"2 3 1\" or \"1 2 3 -> 2 3 1\"")
        ->required();
    cmd_act->add_option("partition", act_partition, "noncrossing set partition")->required();

    std::string sigma_input;
    int sigma_index = 0;
    auto* cmd_sigma = app.add_subcommand("sigma", "resolve an almost noncrossing partition");
    cmd_sigma->add_option("partition", sigma_input)->required();
    cmd_sigma->add_option("--i", sigma_index, "resolution index (default: smallest valid)");

    std::string fermion_input, fermion_kind = "F";
    auto* cmd_fermion = app.add_subcommand("fermion", "print a set-partition fermion");
    cmd_fermion->add_option("input", fermion_input,
                            "partition for F/f, segmented permutation for G/g/tildeF/tildef")
        ->required();
    cmd_fermion->add_option("--kind", fermion_kind, "F, f, G, g, tildeF, or tildef")
        ->capture_default_str();

    int enum_n = 0;
    int enum_k = -1, enum_m = -1;
    bool enum_nc = false, enum_count = false;
    auto* cmd_enum = app.add_subcommand("enumerate", "list set partitions");
    cmd_enum->add_option("n", enum_n)->required();
    cmd_enum->add_option("--k", enum_k, "block count");
    cmd_enum->add_option("--m", enum_m, "singleton count");
    cmd_enum->add_flag("--noncrossing", enum_nc, "restrict to noncrossing partitions");
    cmd_enum->add_flag("--count", enum_count, "print only the number of partitions");

    int frob_n = 0, frob_k = 0, frob_m = -1;
    auto* cmd_frob = app.add_subcommand("frobenius", "Schur expansion of a skein module");
    cmd_frob->add_option("n", frob_n)->required();
    cmd_frob->add_option("k", frob_k)->required();
    cmd_frob->add_option("--m", frob_m, "singleton count (default: sum over all)");

    int fdr_n = 0;
    auto* cmd_fdr = app.add_subcommand("fdr-dims", "bigraded dimension table of the quotient");
    cmd_fdr->add_option("n", fdr_n)->required();

    int hilb_n = 0;
    std::string hilb_quotient = "IJ";
    auto* cmd_hilb = app.add_subcommand("hilbert", "bigraded Hilbert table of the quadratic ring");
    cmd_hilb->add_option("n", hilb_n)->required();
    cmd_hilb->add_option("--quotient", hilb_quotient, "J (disjoint) or IJ (disjoint noncrossing)")
        ->capture_default_str();

    int verify_nmax = 6;
    auto* cmd_verify = app.add_subcommand("verify", "run the full invariant suite");
    cmd_verify->add_option("--nmax", verify_nmax, "size cap (<= 7)")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        Format fmt = parse_format(format_name);

        if (cmd_resolve->parsed()) {
            SetPartition pi = parse_set_partition(resolve_input);
            skein::NCVector out(pi.n());
            if (resolve_route == "greedy")
                out = skein::resolve_greedy(pi);
            else if (resolve_route == "algebraic")
                out = skein::resolve_algebraic(pi);
            else
                throw std::invalid_argument("--route must be greedy or algebraic");
            print_terms(fmt, ncvector_rows(out), "partition");
        } else if (cmd_act->parsed()) {
            SetPartition pi = parse_set_partition(act_partition);
            Perm w = parse_permutation(act_perm);
            if (!is_noncrossing(pi))
                throw std::invalid_argument("act expects a noncrossing partition");
            skein::NCVector out = skein::skein_act(w, skein::NCVector::basis_element(pi));
            print_terms(fmt, ncvector_rows(out), "partition");
        } else if (cmd_sigma->parsed()) {
            SetPartition pi = parse_set_partition(sigma_input);
            auto valid = skein::resolution_indices(pi);
            if (valid.empty())
                throw std::invalid_argument("partition is not almost noncrossing");
            int i = sigma_index > 0 ? sigma_index : valid.front();
            print_terms(fmt, ncvector_rows(skein::sigma(pi, i)), "partition");
        } else if (cmd_fermion->parsed()) {
            Fermion out(1);
            if (fermion_kind == "F" || fermion_kind == "f") {
                SetPartition pi = parse_set_partition(fermion_input);
                out = fermion_kind == "F" ? fermions::F(pi) : fermions::f(pi);
            } else {
                SegmentedPermutation sp = parse_segmented_permutation(fermion_input);
                if (fermion_kind == "G")
                    out = fermions::G(sp);
                else if (fermion_kind == "g")
                    out = fermions::g(sp);
                else if (fermion_kind == "tildeF")
                    out = fermions::tilde_F(sp);
                else if (fermion_kind == "tildef")
                    out = fermions::tilde_f(sp);
                else
                    throw std::invalid_argument("--kind must be F, f, G, g, tildeF, or tildef");
            }
            std::cout << format_fermion(out) << "\n";
        } else if (cmd_enum->parsed()) {
            auto list = enumerate_partitions(
                enum_n, enum_k >= 0 ? std::optional<int>(enum_k) : std::nullopt,
                enum_m >= 0 ? std::optional<int>(enum_m) : std::nullopt, enum_nc);
            if (enum_count) {
                std::cout << list.size() << "\n";
            } else {
                for (const auto& pi : list) {
                    if (fmt == Format::JsonLines) {
                        json line;
                        line["partition"] = format_set_partition(pi);
                        std::cout << line.dump() << "\n";
                    } else {
                        std::cout << format_set_partition(pi) << "\n";
                    }
                }
            }
        } else if (cmd_frob->parsed()) {
            if (frob_n > 9) throw std::invalid_argument("frobenius limited to n <= 9");
            repsym::SymFunc total = repsym::SymFunc::zero(frob_n);
            auto add_stratum = [&](int m) {
                auto basis = enumerate_partitions(frob_n, frob_k, m, true);
                if (basis.empty()) return;
                std::vector<std::vector<std::vector<long long>>> gens;
                for (int i = 1; i < frob_n; ++i)
                    gens.push_back(
                        skein::rep_matrix(Perm::adjacent_transposition(frob_n, i), basis));
                total = total + repsym::frobenius_from_rep(gens, frob_n);
            };
            if (frob_m >= 0)
                add_stratum(frob_m);
            else
                for (int m = 0; m <= frob_k; ++m) add_stratum(m);
            std::vector<std::pair<std::string, std::string>> rows;
            for (const auto& [lambda, c] : total.coeffs())
                rows.push_back({c.get_str(), repsym::format_int_partition(lambda)});
            print_terms(fmt, rows, "partition");
        } else if (cmd_fdr->parsed()) {
            for (int i = 0; i <= fdr_n; ++i) {
                for (int j = 0; j <= fdr_n; ++j) {
                    if (j) std::cout << "\t";
                    std::cout << fdr::fdr_dimension(fdr_n, i, j);
                }
                std::cout << "\n";
            }
        } else if (cmd_hilb->parsed()) {
            quadring::Quotient which;
            if (hilb_quotient == "J")
                which = quadring::Quotient::DisjointOnly;
            else if (hilb_quotient == "IJ")
                which = quadring::Quotient::DisjointNoncrossing;
            else
                throw std::invalid_argument("--quotient must be J or IJ");
            auto table = quadring::hilbert_series(hilb_n, which);
            for (const auto& row : table) {
                for (size_t k = 0; k < row.size(); ++k) {
                    if (k) std::cout << "\t";
                    std::cout << row[k].get_str();
                }
                std::cout << "\n";
            }
        } else if (cmd_verify->parsed()) {
            if (verify_nmax > 7) throw std::invalid_argument("verify limited to nmax <= 7");
            auto results = verify::run_all(verify_nmax, thread_count(threads_flag));
            bool all_pass = true;
            for (const auto& r : results) {
                std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
                if (!r.pass && !r.detail.empty()) std::cout << "  (" << r.detail << ")";
                std::cout << "\n";
                all_pass = all_pass && r.pass;
            }
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
