#include "pmra/jsonio.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

namespace pmra {

namespace {

void emit(const Json& j, std::string& out, int depth) {
    const std::string pad(static_cast<size_t>(depth) * 2, ' ');
    const std::string pad_in(static_cast<size_t>(depth + 1) * 2, ' ');
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [key, val] : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad_in + Json(key).dump() + ": ";
            emit(val, out, depth + 1);
        }
        out += "\n" + pad + "}";
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        bool first = true;
        for (const auto& val : j) {
            if (!first) out += ",\n";
            first = false;
            out += pad_in;
            emit(val, out, depth + 1);
        }
        out += "\n" + pad + "]";
        return;
    }
    case Json::value_t::number_float: {
        const double v = j.get<double>();
        if (!std::isfinite(v)) {
            out += "null";
            return;
        }
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out += buf;
        return;
    }
    default:
        out += j.dump();
        return;
    }
}

Json cplx_to_json(const cplx& z) {
    Json j;
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

Json trig_to_json(const TrigPoly& p) {
    Json j;
    j["n"] = p.n;
    j["period"] = p.period;
    Json terms = Json::array();
    for (const auto& [v, c] : p.coeffs) {
        Json t;
        t["freq"] = ivec_to_json(v);
        t["re"] = c.real();
        t["im"] = c.imag();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

TrigPoly trig_from_json(const Json& j) {
    TrigPoly p(j.at("n").get<int>(), j.at("period").get<i64>());
    for (const auto& t : j.at("terms"))
        p.add_term(ivec_from_json(t.at("freq")), {t.at("re").get<double>(), t.at("im").get<double>()});
    return p;
}

} // namespace

std::string canonical_json(const Json& j) {
    std::string out;
    emit(j, out, 0);
    out += "\n";
    return out;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output path: " + path);
    f << text;
}

Json matrix_to_json(const IMat& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

IMat matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nested array");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j.at(0).size());
    IMat m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const auto& row = j.at(static_cast<size_t>(r));
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("matrix rows must have equal length");
        for (int c = 0; c < cols; ++c) m(r, c) = row.at(static_cast<size_t>(c)).get<i64>();
    }
    return m;
}

Json ivec_to_json(const IVec& v) {
    Json a = Json::array();
    for (i64 x : v) a.push_back(x);
    return a;
}

IVec ivec_from_json(const Json& j) {
    IVec v;
    for (const auto& x : j) v.push_back(x.get<i64>());
    return v;
}

Json spec_to_json(const DilationSpec& spec) {
    Json j;
    j["matrix"] = matrix_to_json(spec.entries);
    if (spec.conjugated)
        j["conjugator"] = matrix_to_json(spec.conjugator);
    else
        j["conjugator"] = nullptr;
    return j;
}

DilationSpec spec_from_json(const Json& j) {
    std::optional<IMat> conj;
    if (j.contains("conjugator") && !j.at("conjugator").is_null())
        conj = matrix_from_json(j.at("conjugator"));
    return validate_dilation(matrix_from_json(j.at("matrix")), conj);
}

Json coset_table_to_json(const CosetTable& table) {
    Json j;
    j["schema"] = 1;
    j["spec"] = spec_to_json(table.spec);
    j["level"] = table.level;
    j["count"] = table.reps.size();
    Json reps = Json::array();
    for (const auto& r : table.reps) reps.push_back(ivec_to_json(r));
    j["representatives"] = std::move(reps);
    return j;
}

std::string coset_table_to_csv(const CosetTable& table) {
    std::string out = "index";
    for (int c = 1; c <= table.spec.n; ++c) out += ",v" + std::to_string(c);
    out += "\n";
    for (size_t i = 0; i < table.reps.size(); ++i) {
        out += std::to_string(i);
        for (i64 x : table.reps[i]) out += "," + std::to_string(x);
        out += "\n";
    }
    return out;
}

Json kclass_to_json(const KClass& k) {
    Json j;
    j["n"] = k.n;
    j["rank"] = k.rank();
    Json terms = Json::array();
    for (const auto& [mask, coeff] : k.elem.coeffs) {
        if (mask == 0) continue;
        Json t;
        Json idx = Json::array();
        for (int i : mask_indices(mask)) idx.push_back(i);
        t["generators"] = std::move(idx);
        t["coeff"] = coeff;
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json completion_to_json(const UnimodularCompletion& u) {
    Json j;
    j["triple"] = Json::array({u.x, u.y, u.z});
    j["matrix"] = matrix_to_json(u.b);
    Json w;
    w["nu"] = u.nu;
    w["alpha"] = u.alpha;
    w["beta"] = u.beta;
    w["sigma"] = u.sigma;
    w["tau"] = u.tau;
    j["witnesses"] = std::move(w);
    return j;
}

Json filter_bank_to_json(const FilterBank& fb) {
    Json j;
    j["schema"] = 1;
    j["d"] = fb.d;
    Json rows = Json::array();
    for (const auto& row : fb.rows) {
        Json r = Json::array();
        for (const auto& z : row) r.push_back(cplx_to_json(z));
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    Json filters = Json::array();
    for (const auto& m : fb.m) filters.push_back(trig_to_json(m));
    j["filters"] = std::move(filters);
    return j;
}

Json filter_report_to_json(const FilterVerifyReport& rep) {
    Json j;
    j["schema"] = 1;
    j["m0_zero_dev"] = rep.m0_zero_dev;
    j["gram_max_dev"] = rep.gram_max_dev;
    j["cohen_min"] = rep.cohen_min;
    j["m0_ok"] = rep.m0_ok;
    j["gram_ok"] = rep.gram_ok;
    j["cohen_ok"] = rep.cohen_ok;
    j["pass"] = rep.pass;
    return j;
}

Json section_to_json(const Section& s) {
    Json j;
    switch (s.kind) {
    case SectionKind::ClosedFormHaar:
        j["kind"] = "haar";
        j["d"] = s.d;
        break;
    case SectionKind::TrigPolynomial:
        j["kind"] = "trig";
        j["poly"] = trig_to_json(*s.poly);
        break;
    case SectionKind::TensorProduct: {
        j["kind"] = "tensor";
        Json parts = Json::array();
        for (const auto& ch : s.children) parts.push_back(section_to_json(ch));
        j["parts"] = std::move(parts);
        break;
    }
    case SectionKind::TruncatedProduct:
        j["kind"] = "truncated_product";
        j["spec"] = spec_to_json(*s.dspec);
        j["mask"] = trig_to_json(*s.poly);
        j["depth"] = s.power;
        break;
    case SectionKind::Dilated:
        j["kind"] = "dilated";
        j["spec"] = spec_to_json(*s.dspec);
        j["power"] = s.power;
        j["inner"] = section_to_json(s.children[0]);
        break;
    case SectionKind::Modulated:
        j["kind"] = "modulated";
        j["v"] = ivec_to_json(s.freq);
        j["inner"] = section_to_json(s.children[0]);
        break;
    case SectionKind::Sum: {
        j["kind"] = "sum";
        Json parts = Json::array();
        for (const auto& ch : s.children) parts.push_back(section_to_json(ch));
        j["parts"] = std::move(parts);
        break;
    }
    case SectionKind::Scaled:
        j["kind"] = "scaled";
        j["factor"] = cplx_to_json(s.factor);
        j["inner"] = section_to_json(s.children[0]);
        break;
    case SectionKind::Product:
        j["kind"] = "product";
        j["a"] = section_to_json(s.children[0]);
        j["b"] = section_to_json(s.children[1]);
        break;
    case SectionKind::Shifted: {
        j["kind"] = "shifted";
        Json h = Json::array();
        for (double v : s.shift) h.push_back(v);
        j["h"] = std::move(h);
        j["inner"] = section_to_json(s.children[0]);
        break;
    }
    case SectionKind::MeyerScaling:
        j["kind"] = "meyer_scaling";
        j["d"] = s.d;
        break;
    case SectionKind::MeyerWavelet:
        j["kind"] = "meyer_wavelet";
        break;
    case SectionKind::MeyerMask:
        j["kind"] = "meyer_mask";
        j["d"] = s.d;
        break;
    case SectionKind::QuasiComb:
        j["kind"] = "quasi_comb";
        j["q"] = s.comb_q;
        j["twists"] = ivec_to_json(s.comb_twists);
        j["window"] = section_to_json(s.children[0]);
        break;
    }
    return j;
}

Section section_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "haar") return section_haar(j.at("d").get<i64>());
    if (kind == "trig") return section_trig(trig_from_json(j.at("poly")));
    if (kind == "tensor" || kind == "sum") {
        std::vector<Section> parts;
        for (const auto& p : j.at("parts")) parts.push_back(section_from_json(p));
        if (kind == "tensor") return section_tensor(parts);
        if (parts.size() < 2) throw std::invalid_argument("sum needs at least two parts");
        Section acc = parts[0];
        for (size_t i = 1; i < parts.size(); ++i) acc = section_sum(acc, parts[i]);
        return acc;
    }
    if (kind == "truncated_product")
        return section_truncated_product(spec_from_json(j.at("spec")), trig_from_json(j.at("mask")),
                                         j.at("depth").get<int>());
    if (kind == "dilated")
        return dilate(spec_from_json(j.at("spec")), section_from_json(j.at("inner")),
                      j.at("power").get<int>());
    if (kind == "modulated")
        return modulate(ivec_from_json(j.at("v")), section_from_json(j.at("inner")));
    if (kind == "scaled") {
        const auto& f = j.at("factor");
        return section_scaled({f.at("re").get<double>(), f.at("im").get<double>()},
                              section_from_json(j.at("inner")));
    }
    if (kind == "product")
        return section_product(section_from_json(j.at("a")), section_from_json(j.at("b")));
    if (kind == "shifted") {
        std::vector<double> h;
        for (const auto& v : j.at("h")) h.push_back(v.get<double>());
        return section_shifted(h, section_from_json(j.at("inner")));
    }
    if (kind == "meyer_scaling") return section_meyer_scaling(j.at("d").get<i64>());
    if (kind == "meyer_wavelet") return section_meyer_wavelet();
    if (kind == "meyer_mask") return section_meyer_mask(j.at("d").get<i64>());
    if (kind == "quasi_comb")
        return section_quasi_comb(j.at("q").get<i64>(), ivec_from_json(j.at("twists")),
                                  section_from_json(j.at("window")));
    throw std::invalid_argument("unknown section kind: " + kind);
}

Json lattice_result_to_json(const LatticeSumResult& res) {
    Json j;
    j["schema"] = 1;
    j["n"] = res.grid.n;
    j["grid"] = res.grid.resolution;
    j["radius"] = res.radius;
    j["tail_bound"] = res.tail_bound;
    Json vals = Json::array();
    for (const auto& v : res.values) vals.push_back(cplx_to_json(v));
    j["values"] = std::move(vals);
    return j;
}

std::string grid_values_to_csv(const TorusGrid& grid, const std::vector<cplx>& values) {
    std::string out;
    for (int c = 1; c <= grid.n; ++c) out += "x" + std::to_string(c) + ",";
    out += "re,im\n";
    char buf[64];
    for (size_t i = 0; i < values.size(); ++i) {
        const auto pt = grid.point(i);
        for (double x : pt) {
            std::snprintf(buf, sizeof(buf), "%.17g", x);
            out += buf;
            out += ",";
        }
        std::snprintf(buf, sizeof(buf), "%.17g", values[i].real());
        out += buf;
        out += ",";
        std::snprintf(buf, sizeof(buf), "%.17g", values[i].imag());
        out += buf;
        out += "\n";
    }
    return out;
}

Json xi_report_to_json(const XiReport& rep) {
    Json j;
    j["schema"] = 1;
    j["sup"] = rep.sup;
    j["tail_bound"] = rep.tail_bound;
    j["tol"] = rep.tol;
    j["radius"] = rep.radius;
    j["pass"] = rep.pass;
    return j;
}

Json refine_report_to_json(const RefineReport& rep) {
    Json j;
    j["schema"] = 1;
    j["max_dev"] = rep.max_dev;
    j["tol"] = rep.tol;
    j["box"] = rep.box;
    j["pass"] = rep.pass;
    return j;
}

Json unit_norm_report_to_json(const UnitNormReport& rep) {
    Json j;
    j["schema"] = 1;
    j["max_dev"] = rep.max_dev;
    j["tail_bound"] = rep.tail_bound;
    j["tol"] = rep.tol;
    j["radius"] = rep.radius;
    j["pass"] = rep.pass;
    return j;
}

Json reconstruction_report_to_json(const ReconstructionReport& rep) {
    Json j;
    j["schema"] = 1;
    j["level"] = rep.level;
    j["max_residual"] = rep.max_residual;
    j["tail_accum"] = rep.tail_accum;
    j["tol"] = rep.tol;
    j["box"] = rep.box;
    j["pass"] = rep.pass;
    return j;
}

Json gram_report_to_json(const GramLevelReport& rep) {
    Json j;
    j["schema"] = 1;
    j["level"] = rep.level;
    j["count"] = rep.count;
    j["max_diag_dev"] = rep.max_diag_dev;
    j["max_offdiag_dev"] = rep.max_offdiag_dev;
    j["max_tail"] = rep.max_tail;
    Json dev = Json::array();
    for (double v : rep.deviations) dev.push_back(v);
    j["deviations"] = std::move(dev);
    return j;
}

Json frame_manifest_to_json(const FrameSet& fs) {
    Json j;
    j["schema"] = 1;
    j["spec"] = spec_to_json(fs.spec);
    j["depth"] = fs.depth;
    j["scaling_count"] = fs.scaling.size();
    j["wavelet_count"] = fs.wavelets.size();
    j["element_count"] = fs.elements.size();
    Json elems = Json::array();
    for (const auto& e : fs.elements) {
        Json el;
        el["level"] = e.level;
        el["coset_index"] = e.coset_index;
        el["generator"] = e.generator;
        el["tag"] = e.is_scaling ? "scaling" : "wavelet";
        el["v"] = ivec_to_json(e.v);
        elems.push_back(std::move(el));
    }
    j["elements"] = std::move(elems);
    return j;
}

} // namespace pmra
