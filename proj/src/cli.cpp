#include "unirat/cli.hpp"

#include <chrono>
#include <ostream>

#include <json.hpp>

#include "unirat/parse.hpp"
#include "unirat/pipeline.hpp"

namespace unirat {

namespace {

using nlohmann::json;

}  // namespace

std::string format_minpoly(const MinPoly& mp, const std::string& var) {
    std::string s;
    for (std::size_t i = mp.coeffs.size(); i-- > 0;) {
        RatFn c = mp.coeffs[i];
        if (c.is_zero()) continue;
        bool neg = c.num().leading_coeff().sign() < 0;
        if (neg) c = -c;
        std::string term;
        if (i == 0) {
            term = format_ratfn(c);
            if (c.num().term_count() > 1 && c.is_polynomial()) term = "(" + term + ")";
        } else {
            std::string zi = var + (i > 1 ? "^" + std::to_string(i) : "");
            if (c.is_constant() && c.constant_value().is_one()) {
                term = zi;
            } else {
                std::string cs = format_ratfn(c);
                bool simple = c.is_polynomial() && c.num().term_count() == 1;
                if (!simple) cs = "(" + cs + ")";
                term = cs + "*" + zi;
            }
        }
        if (s.empty())
            s = (neg ? "-" : "") + term;
        else
            s += (neg ? " - " : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long ms() const {
        return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - start)
                                     .count());
    }
};

json input_json(const Query& q) {
    json in;
    in["vars"] = q.vars;
    in["gens"] = q.gens;
    if (q.elem) in["elem"] = *q.elem;
    return in;
}

void emit(const Query& q, const json& result, const std::vector<std::string>& warnings,
          const Timer& timer, const std::string& text, std::ostream& out, std::ostream& err) {
    if (q.format == "json") {
        json doc;
        doc["command"] = q.command;
        doc["input"] = input_json(q);
        doc["result"] = result;
        doc["warnings"] = warnings;
        doc["timing_ms"] = timer.ms();
        out << doc.dump(2) << "\n";
    } else {
        out << text;
        for (const auto& w : warnings) err << "warning: " << w << "\n";
    }
}

}  // namespace

int run_query(const Query& q, std::ostream& out, std::ostream& err) {
    Timer timer;
    try {
        if (q.vars.empty()) throw ParseError("no variables declared", 0);
        Ring ring = make_ring(q.vars);
        std::vector<RatFn> gens;
        for (const auto& s : q.gens) gens.push_back(parse_ratfn(s, ring));
        if (gens.empty()) throw ParseError("no generators given", 0);

        if (q.command == "trdeg") {
            FieldPresentation F{ring, gens};
            unsigned d = transcendence_degree(F);
            emit(q, json{{"transcendence_degree", d}}, {}, timer, std::to_string(d) + "\n", out, err);
            return 0;
        }
        if (q.command == "basis") {
            FieldPresentation F{ring, gens};
            auto idx = select_transcendence_basis(F);
            json r;
            std::string text = "{";
            r["basis_indices"] = json::array();
            for (std::size_t i = 0; i < idx.size(); ++i) {
                r["basis_indices"].push_back(idx[i] + 1);
                text += (i ? ", " : "") + std::to_string(idx[i] + 1);
            }
            text += "}\n";
            emit(q, r, {}, timer, text, out, err);
            return 0;
        }
        if (q.command == "member") {
            if (!q.elem) throw ParseError("member requires --elem", 0);
            FieldPresentation F{ring, gens};
            RatFn g = parse_ratfn(*q.elem, ring);
            auto res = is_member(g, F);
            json r;
            r["member"] = res.member;
            std::string text = res.member ? "true" : "false";
            if (res.member && res.witness) {
                std::string w = format_ratfn(res.witness->expr);
                r["witness"] = w;
                text += "\nwitness: " + w;
            }
            emit(q, r, {}, timer, text + "\n", out, err);
            return 0;
        }
        if (q.command == "minpoly") {
            if (!q.elem) throw ParseError("minpoly requires --elem", 0);
            FieldPresentation F{ring, gens};
            RatFn g = parse_ratfn(*q.elem, ring);
            MinPoly mp = minimal_polynomial(g, F);
            json r;
            r["degree"] = mp.degree();
            r["polynomial"] = format_minpoly(mp, "z");
            r["coefficients"] = json::array();
            for (const auto& c : mp.coeffs) r["coefficients"].push_back(format_ratfn(c));
            emit(q, r, {}, timer, format_minpoly(mp, "z") + "\n", out, err);
            return 0;
        }
        if (q.command == "subfields") {
            FieldPresentation F{ring, gens};
            PipelineResult res = algebraic_intermediate_fields(F, q.max_block_subsets);
            json r;
            r["count"] = res.fields.size();
            r["fields"] = json::array();
            std::string text;
            if (res.fields.empty()) {
                text = "no intermediate fields\n";
            } else {
                text = std::to_string(res.fields.size()) + " intermediate field" +
                       (res.fields.size() == 1 ? "" : "s") + "\n";
            }
            for (std::size_t i = 0; i < res.fields.size(); ++i) {
                const auto& f = res.fields[i];
                json jf;
                jf["generators"] = json::array();
                std::string line = std::to_string(i + 1) + ": ";
                for (std::size_t j = 0; j < f.generators_x.size(); ++j) {
                    std::string g = format_ratfn(f.generators_x[j]);
                    jf["generators"].push_back(g);
                    line += (j ? ", " : "") + g;
                }
                jf["degree_over_input"] = f.extension_degree_over_bottom;
                line += "  (degree " + std::to_string(f.extension_degree_over_bottom) +
                        " over the input field)\n";
                text += line;
                r["fields"].push_back(jf);
            }
            emit(q, r, res.warnings, timer, text, out, err);
            return 0;
        }
        if (q.command == "closure") {
            FieldPresentation F{ring, gens};
            RatFn h = luroth_closure(F);
            std::string s = format_ratfn(h);
            emit(q, json{{"generator", s}}, {}, timer, s + "\n", out, err);
            return 0;
        }
        if (q.command == "decompose") {
            FieldPresentation F{ring, gens};
            if (gens.size() != 1) throw ParseError("decompose takes exactly one generator", 0);
            auto res = decompose_univariate(gens[0]);
            json r;
            r["decompositions"] = json::array();
            std::string text;
            if (res.empty()) {
                text = "no proper decompositions\n";
            } else {
                for (const auto& d : res) {
                    std::string o = format_ratfn(d.outer), h = format_ratfn(d.inner);
                    r["decompositions"].push_back(json{{"outer", o}, {"inner", h}});
                    text += "outer: " + o + ", inner: " + h + "\n";
                }
            }
            emit(q, r, {}, timer, text, out, err);
            return 0;
        }
        throw ParseError("unknown command '" + q.command + "'", 0);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace unirat
