#include "loclab/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace loclab {
namespace {

const char* kHeader =
    "case,m,d_v,eps,eps_ratio,theory_kind,theory_n_loc,theory_lower,"
    "theory_upper,mc_p_hat,mc_ci_low,mc_ci_high,trials,seed";

void append_opt(std::string& out, const std::optional<double>& v)
{
    out += ',';
    if (v)
        out += format_double(*v);
}

void append_opt(std::string& out, const std::optional<std::uint64_t>& v)
{
    out += ',';
    if (v)
        out += std::to_string(*v);
}

void fill_theory(OutputRecord& rec, const TheoryResult& theory, double d_v,
                 double eps)
{
    rec.measurement_case = to_string(theory.measurement_case);
    rec.m = theory.m;
    rec.d_v = d_v;
    rec.eps = eps;
    rec.eps_ratio = theory.eps_ratio;
    if (theory.kind == TheoryResult::Kind::Exact) {
        rec.theory_kind = "exact";
        rec.theory_n_loc = theory.n_loc;
    } else {
        rec.theory_kind = "bounds";
        rec.theory_lower = theory.n_loc_lower;
        rec.theory_upper = theory.n_loc_upper;
    }
}

} // namespace

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

OutputRecord make_record(const TheoryResult& theory, double d_v, double eps)
{
    OutputRecord rec;
    fill_theory(rec, theory, d_v, eps);
    return rec;
}

OutputRecord make_record(const TheoryResult& theory, const McEstimate& estimate,
                         double d_v, double eps)
{
    OutputRecord rec;
    fill_theory(rec, theory, d_v, eps);
    rec.mc_p_hat = estimate.p_hat;
    rec.mc_ci_low = estimate.ci_low;
    rec.mc_ci_high = estimate.ci_high;
    rec.trials = estimate.trials;
    rec.seed = estimate.master_seed;
    return rec;
}

std::string to_csv(const std::vector<OutputRecord>& records)
{
    std::string out = kHeader;
    out += '\n';
    for (const OutputRecord& r : records) {
        out += r.measurement_case;
        out += ',';
        out += format_double(r.m);
        out += ',';
        out += format_double(r.d_v);
        out += ',';
        out += format_double(r.eps);
        out += ',';
        out += format_double(r.eps_ratio);
        out += ',';
        out += r.theory_kind;
        append_opt(out, r.theory_n_loc);
        append_opt(out, r.theory_lower);
        append_opt(out, r.theory_upper);
        append_opt(out, r.mc_p_hat);
        append_opt(out, r.mc_ci_low);
        append_opt(out, r.mc_ci_high);
        append_opt(out, r.trials);
        append_opt(out, r.seed);
        out += '\n';
    }
    return out;
}

std::string to_json(const std::vector<OutputRecord>& records)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const OutputRecord& r : records) {
        nlohmann::json obj;
        obj["case"] = r.measurement_case;
        obj["m"] = r.m;
        obj["d_v"] = r.d_v;
        obj["eps"] = r.eps;
        obj["eps_ratio"] = r.eps_ratio;
        obj["theory_kind"] = r.theory_kind;
        obj["theory_n_loc"] =
            r.theory_n_loc ? nlohmann::json(*r.theory_n_loc) : nullptr;
        obj["theory_lower"] =
            r.theory_lower ? nlohmann::json(*r.theory_lower) : nullptr;
        obj["theory_upper"] =
            r.theory_upper ? nlohmann::json(*r.theory_upper) : nullptr;
        obj["mc_p_hat"] = r.mc_p_hat ? nlohmann::json(*r.mc_p_hat) : nullptr;
        obj["mc_ci_low"] = r.mc_ci_low ? nlohmann::json(*r.mc_ci_low) : nullptr;
        obj["mc_ci_high"] =
            r.mc_ci_high ? nlohmann::json(*r.mc_ci_high) : nullptr;
        obj["trials"] = r.trials ? nlohmann::json(*r.trials) : nullptr;
        obj["seed"] = r.seed ? nlohmann::json(*r.seed) : nullptr;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

} // namespace loclab
