#include "report.hpp"

#include <sstream>

#include "linkhom/io.hpp"

namespace linkhom::cli {

namespace {

Report parsed(const std::string& text) { return Report::parse(text); }

Report matrix_json(const MatrixP& m) { return parsed(matrix_to_text(m)); }
Report matrix_json(const MatrixQ& m) { return parsed(matrix_to_text(m)); }
Report matrix_json(const MatrixRF& m) { return parsed(matrix_to_text(m)); }

template <class M>
Report matrix_list(const std::vector<M>& ms) {
    Report a = Report::array();
    for (const auto& m : ms) a.push_back(matrix_json(m));
    return a;
}

bool is_scalar_tree(const Report& j) {
    if (j.is_array()) {
        for (const auto& e : j)
            if (!is_scalar_tree(e)) return false;
        return true;
    }
    return !j.is_object();
}

std::string scalar_text(const Report& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
    return j.dump();
}

void render_text(std::ostringstream& os, const Report& j, int indent);

void render_value(std::ostringstream& os, const std::string& key, const Report& v, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        os << pad << key << ":\n";
        render_text(os, v, indent + 2);
    } else if (v.is_array() && !is_scalar_tree(v)) {
        os << pad << key << ":";
        if (v.empty()) os << " []";
        os << "\n";
        for (const auto& e : v) {
            if (e.is_object()) {
                os << pad << "  -\n";
                render_text(os, e, indent + 4);
            } else {
                render_value(os, "-", e, indent + 2);
            }
        }
    } else if (v.is_array()) {
        os << pad << key << ": " << v.dump() << "\n";
    } else {
        os << pad << key << ": " << scalar_text(v) << "\n";
    }
}

void render_text(std::ostringstream& os, const Report& j, int indent) {
    for (const auto& [key, value] : j.items()) {
        if (indent == 0 && (key == "summary" || key == "format_version")) continue;
        render_value(os, key, value, indent);
    }
}

}  // namespace

Report chain_summary(const LinkedChain& chain) {
    Report j;
    j["r"] = chain.r();
    j["m"] = chain.m();
    j["n"] = chain.n();
    j["s"] = chain.s().to_string();
    return j;
}

Report witness_json(const Witness& w) {
    return std::visit([](const auto& m) { return matrix_json(m); }, w);
}

Report condition_json(const ConditionReport& rep) {
    Report j;
    j["condition"] = condition_name(rep.condition);
    j["point"] = rep.point ? rep.point->to_string() : "global";
    j["passed"] = rep.passed;
    Report fails = Report::array();
    for (const auto& f : rep.failures) {
        Report e;
        e["index"] = f.index;
        e["description"] = f.description;
        e["witness"] = witness_json(f.witness);
        fails.push_back(std::move(e));
    }
    j["failures"] = std::move(fails);
    return j;
}

Report solve_json(const SolveReport& rep) {
    Report j;
    j["rm"] = rep.rm;
    j["generic_dim"] = rep.generic_dim;
    Report dims = Report::array();
    for (const auto& [x, d] : rep.fiber_dims) {
        Report e;
        e["point"] = x.to_string();
        e["dim"] = d;
        dims.push_back(std::move(e));
    }
    j["fiber_dims"] = std::move(dims);
    j["is_vector_bundle"] = rep.is_vector_bundle;
    j["flatness_failure"] = rep.flatness_failure;
    Report jumps = Report::array();
    for (const auto& x : rep.jump_points) jumps.push_back(x.to_string());
    j["jump_points"] = std::move(jumps);
    j["warnings"] = rep.warnings;
    if (rep.kernel_basis) {
        Report basis = Report::array();
        for (const auto& tuple : *rep.kernel_basis) basis.push_back(matrix_list(tuple.phis));
        j["kernel_basis"] = std::move(basis);
    }
    return j;
}

Report structure_json(const LinkedChain& chain, const StructureDecomposition& d) {
    Report j;
    j["point"] = d.point.to_string();
    j["trivial"] = d.trivial;
    j["rank_prime"] = d.ell;
    j["rank_dblprime"] = chain.m() - d.ell;
    Report pos = Report::array();
    for (std::size_t i = 1; i <= chain.n(); ++i) {
        Report e;
        e["position"] = i;
        e["basis_prime"] = matrix_json(d.basis_prime[i - 1]);
        e["basis_dblprime"] = matrix_json(d.basis_dblprime[i - 1]);
        pos.push_back(std::move(e));
    }
    j["positions"] = std::move(pos);
    Report maps = Report::array();
    for (std::size_t i = 1; i < chain.n(); ++i) {
        Report e;
        e["index"] = i;
        e["g_prime"] = matrix_json(d.gp_fwd[i - 1]);
        e["g_up_dblprime"] = matrix_json(d.gdp_bwd[i - 1]);
        maps.push_back(std::move(e));
    }
    j["block_maps"] = std::move(maps);
    return j;
}

std::string render(const Report& report, Format format) {
    if (format == Format::Json) return report.dump(2) + "\n";
    std::ostringstream os;
    if (report.contains("summary")) os << report["summary"].get<std::string>() << "\n";
    render_text(os, report, 0);
    return os.str();
}

}  // namespace linkhom::cli
